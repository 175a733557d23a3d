//! Exact rational trigonometry.
//!
//! Quadrance replaces distance and spread replaces angle, so every quantity
//! of a triangle with rational vertices is itself rational and every law is a
//! polynomial identity. The same code runs over odd prime fields, and over
//! `f64` when a floating-point comparison is wanted.
//!
//! ```
//! use rattrig::{analyze_triangle, Rational, RationalPoint};
//!
//! let q = |n: i64| Rational::from_integer(n.into());
//! let p = |x: i64, y: i64| RationalPoint::new(q(x), q(y));
//! let report = analyze_triangle([p(0, 0), p(7, 5), p(2, 8)]).unwrap();
//! assert_eq!(report.quadrea.to_string(), "8464");
//! assert_eq!(report.area_sq.to_string(), "529");
//! ```

pub mod field;
pub mod laws;
pub mod oracle;
pub mod planar;
pub mod solver;

pub use field::{FieldElement, FieldError, FieldSpec, Fp, PrimeField, Rational, Scalar};
pub use laws::{LawResidual, QuadranceTriple, SpreadTriple};
pub use planar::{analyze_triangle, GeometryError, Line, Point, TriangleReport};
pub use solver::{complete_triangle, KnownValues, SolutionSet, SolverError};

pub type RationalPoint = Point<Rational>;
pub type RationalLine = Line<Rational>;
pub type RationalReport = TriangleReport<Rational>;

pub type FpPoint = Point<Fp>;
pub type FpLine = Line<Fp>;
pub type FpReport = TriangleReport<Fp>;

/// Points over a field chosen at runtime.
pub type DynPoint = Point<FieldElement>;
pub type DynReport = TriangleReport<FieldElement>;

pub type Point64 = Point<f64>;
pub type Line64 = Line<f64>;
pub type Point32 = Point<f32>;
