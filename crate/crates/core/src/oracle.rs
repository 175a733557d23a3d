//! Classical trigonometry in `f64`: side lengths, angles, Heron's formula.
//!
//! This is the reference the exact core is checked against, through
//! `Q = d^2` and `s = sin^2(theta)`. It is deliberately naive.

use std::f64::consts::PI;

use thiserror::Error;

use crate::field::{Rational, Scalar};
use crate::planar::{analyze_triangle, GeometryError, Point};

/// Absolute tolerance for closed-form values such as the spread table.
pub const TABLE_TOLERANCE: f64 = 1e-12;
/// Mixed absolute/relative tolerance for randomly sampled triangles.
pub const RANDOM_TOLERANCE: f64 = 1e-7;
/// Triangles thinner than this (longest side over its altitude) are
/// excluded from random comparisons.
pub const MAX_ASPECT_RATIO: f64 = 1e6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    #[error("{quantity} deviates by {deviation:e} (tolerance {tolerance:e})")]
    ToleranceExceeded {
        quantity: String,
        deviation: f64,
        tolerance: f64,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("coordinate {0} is not representable as f64")]
    NotRepresentable(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FloatTriangle {
    pub vertices: [[f64; 2]; 3],
    /// `d_i` is the side opposite `A_i`.
    pub lengths: [f64; 3],
    /// Interior angle at each vertex, radians.
    pub angles: [f64; 3],
    pub area: f64,
}

impl FloatTriangle {
    pub fn new(vertices: [[f64; 2]; 3]) -> Self {
        let dist = |a: [f64; 2], b: [f64; 2]| (b[0] - a[0]).hypot(b[1] - a[1]);
        let [a1, a2, a3] = vertices;
        let lengths = [dist(a2, a3), dist(a1, a3), dist(a1, a2)];
        let angle_at = |p: [f64; 2], u: [f64; 2], v: [f64; 2]| {
            let (ux, uy) = (u[0] - p[0], u[1] - p[1]);
            let (vx, vy) = (v[0] - p[0], v[1] - p[1]);
            (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy)
        };
        let angles = [angle_at(a1, a2, a3), angle_at(a2, a1, a3), angle_at(a3, a1, a2)];
        let cross = (a2[0] - a1[0]) * (a3[1] - a1[1]) - (a3[0] - a1[0]) * (a2[1] - a1[1]);
        FloatTriangle {
            vertices,
            lengths,
            angles,
            area: cross.abs() / 2.0,
        }
    }

    pub fn angle_sum(&self) -> f64 {
        self.angles.iter().sum()
    }

    pub fn spreads(&self) -> [f64; 3] {
        self.angles.map(spread_of_angle)
    }

    /// Longest side divided by the altitude onto it.
    pub fn aspect_ratio(&self) -> f64 {
        let longest = self.lengths.iter().copied().fold(0.0, f64::max);
        longest * longest / (2.0 * self.area)
    }
}

/// `sqrt(s (s - d1) (s - d2) (s - d3))` with `s` the semi-perimeter.
pub fn heron_area(d1: f64, d2: f64, d3: f64) -> Result<f64, OracleError> {
    let sides = [d1, d2, d3];
    if sides.iter().any(|d| !d.is_finite() || *d <= 0.0) {
        return Err(OracleError::InvalidTriangle(format!("non-positive side in {sides:?}")));
    }
    let s = (d1 + d2 + d3) / 2.0;
    let slack = 1e-9 * s;
    if sides.iter().any(|&d| s - d < -slack) {
        return Err(OracleError::InvalidTriangle(format!(
            "{sides:?} violates the triangle inequality"
        )));
    }
    let product = s * (s - d1) * (s - d2) * (s - d3);
    Ok(product.max(0.0).sqrt())
}

/// One half the base times the height.
pub fn base_height_area(base: f64, height: f64) -> f64 {
    base * height / 2.0
}

/// `sin^2(theta)`.
pub fn spread_of_angle(theta: f64) -> f64 {
    let s = theta.sin();
    s * s
}

pub fn degrees(deg: f64) -> f64 {
    deg * PI / 180.0
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation {
    /// `(quantity, deviation)` for every comparison made.
    pub deviations: Vec<(String, f64)>,
    pub max_deviation: f64,
}

/// `|exact - approx| / max(1, |exact|)`.
pub fn deviation(exact: f64, approx: f64) -> f64 {
    (exact - approx).abs() / exact.abs().max(1.0)
}

/// Compares the exact quadrances, spreads and squared area of a rational
/// triangle with distances, `sin^2` of angles and Heron's area computed in
/// floating point.
pub fn cross_validate(points: &[Point<Rational>; 3], tolerance: f64) -> Result<CrossValidation, OracleError> {
    let exact = analyze_triangle(points.clone())?;
    let to_f64 = |x: &Rational| {
        Scalar::to_f64(x)
            .filter(|v| v.is_finite())
            .ok_or_else(|| OracleError::NotRepresentable(x.to_string()))
    };
    let mut vertices = [[0.0; 2]; 3];
    for (v, p) in vertices.iter_mut().zip(points) {
        *v = [to_f64(&p.x)?, to_f64(&p.y)?];
    }
    let float = FloatTriangle::new(vertices);

    let mut deviations = Vec::new();
    for i in 0..3 {
        let d = float.lengths[i];
        deviations.push((
            format!("Q{}", i + 1),
            deviation(to_f64(exact.quadrances.as_array()[i])?, d * d),
        ));
    }
    if let Some(s) = &exact.spreads {
        for (i, (exact, approx)) in s.as_array().into_iter().zip(float.spreads()).enumerate() {
            deviations.push((format!("s{}", i + 1), deviation(to_f64(exact)?, approx)));
        }
    }
    let [d1, d2, d3] = float.lengths;
    let heron = heron_area(d1, d2, d3)?;
    deviations.push(("area_sq".into(), deviation(to_f64(&exact.area_sq)?, heron * heron)));

    let (worst, max_deviation) = deviations
        .iter()
        .fold(("", 0.0f64), |acc, (name, d)| if *d > acc.1 { (name.as_str(), *d) } else { acc });
    if max_deviation > tolerance {
        return Err(OracleError::ToleranceExceeded {
            quantity: worst.to_string(),
            deviation: max_deviation,
            tolerance,
        });
    }
    Ok(CrossValidation {
        deviations,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::new(Rational::from_integer(x.into()), Rational::from_integer(y.into()))
    }

    #[test]
    fn heron_examples() {
        let area = heron_area(34f64.sqrt(), 68f64.sqrt(), 74f64.sqrt()).unwrap();
        assert!((area - 23.0).abs() < 1e-6);
        assert!((heron_area(3.0, 4.0, 5.0).unwrap() - 6.0).abs() < 1e-12);
        assert!(heron_area(1.0, 1.0, 2.0).unwrap().abs() < 1e-9);
        assert!(heron_area(1.0, 1.0, 3.0).is_err());
        assert!(heron_area(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn base_height_examples() {
        let d = 74f64.sqrt();
        assert!((base_height_area(d, 46.0 / d) - 23.0).abs() < 1e-9);
        assert_eq!(base_height_area(2.0, 1.0), 1.0);
        assert!((base_height_area(8.602_325_267_04, 5.347_391_382_22) - 23.0).abs() < 1e-9);
    }

    #[test]
    fn spread_table() {
        for (angles, s) in [
            (&[30.0, 150.0, 210.0, 330.0][..], 0.25),
            (&[45.0, 135.0][..], 0.5),
            (&[60.0, 120.0][..], 0.75),
        ] {
            for &a in angles {
                assert!((spread_of_angle(degrees(a)) - s).abs() < TABLE_TOLERANCE, "{a} degrees");
            }
        }
    }

    #[test]
    fn spreads_ignore_orientation() {
        for k in 0..50 {
            let theta = 0.063 * k as f64;
            assert!((spread_of_angle(theta) - spread_of_angle(PI - theta)).abs() < 1e-12);
        }
    }

    #[test]
    fn ninety_sixty_thirty() {
        let t = FloatTriangle::new([[0.0, 0.0], [1.0, 0.0], [0.0, 3f64.sqrt()]]);
        let s = t.spreads();
        for (got, want) in s.iter().zip([1.0, 0.75, 0.25]) {
            assert!((got - want).abs() < TABLE_TOLERANCE);
        }
        assert!((t.angle_sum() - PI).abs() < 1e-9);
    }

    #[test]
    fn worked_triangle_cross_validates() {
        let report = cross_validate(&[pt(0, 0), pt(7, 5), pt(2, 8)], 1e-9).unwrap();
        assert!(report.max_deviation < 1e-9);
        assert_eq!(report.deviations.len(), 7);
    }

    #[test]
    fn tolerance_violations_are_reported() {
        let err = cross_validate(&[pt(0, 0), pt(7, 5), pt(2, 8)], -1.0).unwrap_err();
        assert!(matches!(err, OracleError::ToleranceExceeded { .. }));
    }
}
