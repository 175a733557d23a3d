use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Float, FromPrimitive, One, ToPrimitive, Zero};

use super::FieldError;

/// A scalar that the geometry and the laws can be evaluated over.
///
/// Constants are produced relative to an existing value (`zero_like`,
/// `from_i64_like`) because a prime field's modulus is only known at
/// runtime. The binary operators panic when their operands come from
/// different fields; public geometry entry points check [`Scalar::compatible`]
/// first and report a typed error instead.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic never rounds.
    const EXACT: bool;

    fn zero_like(&self) -> Self;

    fn one_like(&self) -> Self;

    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, n: i64) -> Self;

    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Every `x` in the field with `x * x == self`, ascending by
    /// [`Scalar::canonical_cmp`]. Holds zero, one (only for zero) or two
    /// values; two roots are negatives of each other.
    fn square_roots(&self) -> Vec<Self>;

    /// Total order on canonical representatives: numeric for rationals and
    /// floats, residue order for prime fields.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    /// Nearest `f64`, when one exists.
    fn to_f64(&self) -> Option<f64>;

    /// Whether `self` and `other` live in the same field.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    /// Short description of the field this value lives in.
    fn field_name(&self) -> String;

    fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        if !self.compatible(rhs) {
            return Err(FieldError::FieldMismatch {
                left: self.field_name(),
                right: rhs.field_name(),
            });
        }
        rhs.inverse()
            .map(|inv| self.clone() * inv)
            .ok_or(FieldError::DivisionByZero)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    /// Divides by a small power of two (2, 4, 16).
    ///
    /// Characteristic two is excluded at field construction, so these are
    /// always invertible.
    fn halve_by(&self, n: i64) -> Self {
        debug_assert!(n > 0 && (n & (n - 1)) == 0);
        self.checked_div(&self.from_i64_like(n))
            .expect("powers of two are invertible outside characteristic two")
    }
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            const EXACT: bool = false;

            fn zero_like(&self) -> Self {
                <$t as Zero>::zero()
            }

            fn one_like(&self) -> Self {
                <$t as One>::one()
            }

            fn from_i64_like(&self, n: i64) -> Self {
                <$t as FromPrimitive>::from_i64(n).unwrap_or(<$t as Float>::nan())
            }

            fn is_zero(&self) -> bool {
                Zero::is_zero(self)
            }

            fn inverse(&self) -> Option<Self> {
                if Zero::is_zero(self) {
                    None
                } else {
                    Some(Float::recip(*self))
                }
            }

            fn square_roots(&self) -> Vec<Self> {
                if Zero::is_zero(self) {
                    vec![<$t as Zero>::zero()]
                } else if *self > 0.0 {
                    let r = Float::sqrt(*self);
                    vec![-r, r]
                } else {
                    Vec::new()
                }
            }

            fn canonical_cmp(&self, other: &Self) -> Ordering {
                self.total_cmp(other)
            }

            fn to_f64(&self) -> Option<f64> {
                ToPrimitive::to_f64(self)
            }

            fn field_name(&self) -> String {
                stringify!($t).to_string()
            }
        }
    )*};
}

impl_float_scalar!(f32, f64);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_roots_are_ordered() {
        assert_eq!(4.0f64.square_roots(), vec![-2.0, 2.0]);
        assert_eq!(0.0f32.square_roots(), vec![0.0]);
        assert!((-1.0f64).square_roots().is_empty());
    }

    #[test]
    fn float_division_by_zero() {
        assert_eq!(1.0f64.checked_div(&0.0), Err(FieldError::DivisionByZero));
        assert_eq!(3.0f64.halve_by(4), 0.75);
    }
}
