//! Exact scalar fields.
//!
//! All geometry in this crate is generic over [`Scalar`]. Three families of
//! scalars are provided:
//!
//! - [`Rational`]: arbitrary-precision fractions, always reduced.
//! - [`Fp`]: residues modulo an odd prime chosen at runtime ([`PrimeField`]).
//! - `f32` / `f64`: inexact, used only to evaluate law residuals on floating
//!   point data.
//!
//! [`FieldElement`] wraps the two exact families behind one runtime-selected
//! type ([`FieldSpec`]) and owns the textual grammar `num/den` and `r mod p`.

mod element;
mod prime;
mod rational;
mod scalar;

pub use element::{FieldElement, FieldSpec};
pub use prime::{is_prime, Fp, PrimeField};
pub use rational::{parse_rational, Rational};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("invalid modulus {modulus}: {reason}")]
    InvalidModulus { modulus: u64, reason: &'static str },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl FieldError {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        FieldError::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
