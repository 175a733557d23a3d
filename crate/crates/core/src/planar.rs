//! Points, lines, quadrance and spread.
//!
//! Sides and vertices follow one labelling everywhere: side `i` is opposite
//! vertex `A_i`, so `Q1 = Q(A2, A3)`, `Q2 = Q(A1, A3)`, `Q3 = Q(A1, A2)`, and
//! `s_i` is the spread at `A_i` between the two sides that meet there.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::field::{FieldError, Scalar};
use crate::laws::{self, QuadranceTriple, SpreadTriple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("points are coincident")]
    CoincidentPoints,
    #[error("triangle has two coincident vertices")]
    DuplicatePoints,
    #[error("line coefficients a and b are both zero")]
    DegenerateLine,
    #[error("null line: a^2 + b^2 = 0")]
    NullLine,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("point does not lie on the line")]
    PointNotOnLine,
    #[error("isotropic configuration: reference quadrance is zero")]
    IsotropicConfiguration,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.x.compatible(&self.y) && self.x.compatible(&other.x) && other.x.compatible(&other.y)
    }

    fn check(&self, other: &Self) -> Result<(), GeometryError> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch {
                left: self.x.field_name(),
                right: other.x.field_name(),
            }
            .into())
        }
    }
}

impl<S: fmt::Display> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.x, self.y)
    }
}

/// The line `a x + b y + c = 0`, stored with the first nonzero of `(a, b)`
/// scaled to one so that equal lines have equal coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line<S> {
    a: S,
    b: S,
    c: S,
}

impl<S: Scalar> Line<S> {
    pub fn new(a: S, b: S, c: S) -> Result<Self, GeometryError> {
        if !(a.compatible(&b) && a.compatible(&c)) {
            return Err(FieldError::FieldMismatch {
                left: a.field_name(),
                right: if a.compatible(&b) { c.field_name() } else { b.field_name() },
            }
            .into());
        }
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(GeometryError::DegenerateLine);
        };
        let inv = lead.inverse().expect("leading coefficient is nonzero");
        Ok(Line {
            a: a * inv.clone(),
            b: b * inv.clone(),
            c: c * inv,
        })
    }

    pub fn a(&self) -> &S {
        &self.a
    }

    pub fn b(&self) -> &S {
        &self.b
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    /// `a x + b y + c` at `p`.
    pub fn evaluate(&self, p: &Point<S>) -> S {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()
    }

    pub fn contains(&self, p: &Point<S>) -> bool {
        self.evaluate(p).is_zero()
    }

    /// `a^2 + b^2`, zero exactly for null lines.
    pub fn direction_norm(&self) -> S {
        self.a.square() + self.b.square()
    }

    pub fn is_null(&self) -> bool {
        self.direction_norm().is_zero()
    }
}

impl<S: fmt::Display> fmt::Display for Line<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} : {} : {}>", self.a, self.b, self.c)
    }
}

pub fn quadrance<S: Scalar>(a: &Point<S>, b: &Point<S>) -> Result<S, GeometryError> {
    a.check(b)?;
    Ok((b.x.clone() - a.x.clone()).square() + (b.y.clone() - a.y.clone()).square())
}

pub fn line_through<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<Line<S>, GeometryError> {
    p.check(q)?;
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    let a = p.y.clone() - q.y.clone();
    let b = q.x.clone() - p.x.clone();
    let c = p.x.clone() * q.y.clone() - q.x.clone() * p.y.clone();
    Line::new(a, b, c)
}

pub fn is_perpendicular<S: Scalar>(l1: &Line<S>, l2: &Line<S>) -> bool {
    (l1.a.clone() * l2.a.clone() + l1.b.clone() * l2.b.clone()).is_zero()
}

pub fn is_parallel<S: Scalar>(l1: &Line<S>, l2: &Line<S>) -> bool {
    cross(l1, l2).is_zero()
}

fn cross<S: Scalar>(l1: &Line<S>, l2: &Line<S>) -> S {
    l1.a.clone() * l2.b.clone() - l2.a.clone() * l1.b.clone()
}

/// The unique common point of two non-parallel lines.
pub fn intersection<S: Scalar>(l1: &Line<S>, l2: &Line<S>) -> Result<Point<S>, GeometryError> {
    let det = cross(l1, l2);
    if det.is_zero() {
        return Err(GeometryError::ParallelLines);
    }
    let x = (l1.b.clone() * l2.c.clone() - l2.b.clone() * l1.c.clone()).checked_div(&det)?;
    let y = (l1.c.clone() * l2.a.clone() - l2.c.clone() * l1.a.clone()).checked_div(&det)?;
    Ok(Point::new(x, y))
}

pub fn foot_of_perpendicular<S: Scalar>(p: &Point<S>, l: &Line<S>) -> Result<Point<S>, GeometryError> {
    let norm = l.direction_norm();
    if norm.is_zero() {
        return Err(GeometryError::NullLine);
    }
    let t = l.evaluate(p).checked_div(&norm)?;
    Ok(Point::new(
        p.x.clone() - t.clone() * l.a.clone(),
        p.y.clone() - t * l.b.clone(),
    ))
}

/// `(a1 b2 - a2 b1)^2 / ((a1^2 + b1^2)(a2^2 + b2^2))`.
pub fn spread_from_lines<S: Scalar>(l1: &Line<S>, l2: &Line<S>) -> Result<S, GeometryError> {
    let n1 = l1.direction_norm();
    let n2 = l2.direction_norm();
    if n1.is_zero() || n2.is_zero() {
        return Err(GeometryError::NullLine);
    }
    Ok(cross(l1, l2).square().checked_div(&(n1 * n2))?)
}

/// Spread as a ratio of quadrances: with `A` the meet of the lines, `B` on
/// `l1` and `C` the foot of the perpendicular from `B` to `l2`, the spread is
/// `Q(B, C) / Q(A, B)`.
pub fn spread_by_definition<S: Scalar>(
    l1: &Line<S>,
    l2: &Line<S>,
    b: &Point<S>,
) -> Result<S, GeometryError> {
    let a = intersection(l1, l2)?;
    if !l1.contains(b) {
        return Err(GeometryError::PointNotOnLine);
    }
    if a == *b {
        return Err(GeometryError::CoincidentPoints);
    }
    let c = foot_of_perpendicular(b, l2)?;
    let reference = quadrance(&a, b)?;
    if reference.is_zero() {
        return Err(GeometryError::IsotropicConfiguration);
    }
    Ok(quadrance(b, &c)?.checked_div(&reference)?)
}

/// Degeneracies that only occur over fields where `-1` is a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degeneracy {
    /// Distinct endpoints with zero quadrance, on side `i`.
    IsotropicSegment(u8),
    /// The line carrying side `i` has `a^2 + b^2 = 0`.
    NullLine(u8),
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::IsotropicSegment(i) => write!(f, "isotropic_segment:{i}"),
            Degeneracy::NullLine(i) => write!(f, "null_line:{i}"),
        }
    }
}

impl FromStr for Degeneracy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, side) = s.split_once(':').ok_or_else(|| format!("bad degeneracy tag {s:?}"))?;
        let side: u8 = side
            .parse()
            .ok()
            .filter(|i| (1..=3).contains(i))
            .ok_or_else(|| format!("bad side in {s:?}"))?;
        match kind {
            "isotropic_segment" => Ok(Degeneracy::IsotropicSegment(side)),
            "null_line" => Ok(Degeneracy::NullLine(side)),
            _ => Err(format!("unknown degeneracy {kind:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleReport<S> {
    pub points: [Point<S>; 3],
    pub quadrances: QuadranceTriple<S>,
    /// `None` when any side lies on a null line.
    pub spreads: Option<SpreadTriple<S>>,
    pub quadrea: S,
    pub area_sq: S,
    pub collinear: bool,
    pub degeneracies: Vec<Degeneracy>,
}

impl<S: Scalar> TriangleReport<S> {
    /// Line carrying side `i` (1-based, opposite `A_i`).
    pub fn side_line(&self, side: usize) -> Line<S> {
        let [j, k] = others(side);
        line_through(&self.points[j - 1], &self.points[k - 1]).expect("vertices are distinct")
    }

    pub fn is_degenerate(&self) -> bool {
        self.collinear || !self.degeneracies.is_empty()
    }
}

/// The two indices other than `i`, ascending, all 1-based.
pub(crate) fn others(i: usize) -> [usize; 2] {
    match i {
        1 => [2, 3],
        2 => [1, 3],
        3 => [1, 2],
        _ => panic!("vertex index must be 1, 2 or 3, got {i}"),
    }
}

pub fn analyze_triangle<S: Scalar>(points: [Point<S>; 3]) -> Result<TriangleReport<S>, GeometryError> {
    let [p1, p2, p3] = &points;
    p1.check(p2)?;
    p1.check(p3)?;
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(GeometryError::DuplicatePoints);
    }
    let quadrances = QuadranceTriple::new(quadrance(p2, p3)?, quadrance(p1, p3)?, quadrance(p1, p2)?);
    let quadrea = laws::quadrea(&quadrances);
    let area_sq = quadrea.halve_by(16);
    let collinear = quadrea.is_zero();

    let lines = [line_through(p2, p3)?, line_through(p1, p3)?, line_through(p1, p2)?];
    let mut degeneracies = Vec::new();
    for (i, q) in quadrances.as_array().iter().enumerate() {
        if q.is_zero() {
            degeneracies.push(Degeneracy::IsotropicSegment(i as u8 + 1));
        }
    }
    for (i, l) in lines.iter().enumerate() {
        if l.is_null() {
            degeneracies.push(Degeneracy::NullLine(i as u8 + 1));
        }
    }

    let spreads = if lines.iter().any(Line::is_null) {
        None
    } else {
        let at = |i: usize| {
            let [j, k] = others(i);
            spread_from_lines(&lines[j - 1], &lines[k - 1])
        };
        Some(SpreadTriple::new(at(1)?, at(2)?, at(3)?))
    };

    if cfg!(debug_assertions) && S::EXACT {
        if let Some(s) = &spreads {
            if let Ok(r) = laws::check_spread_law(&quadrances, s) {
                debug_assert!(r.holds, "spread law violated: {r:?}");
            }
        }
    }

    Ok(TriangleReport {
        points,
        quadrances,
        spreads,
        quadrea,
        area_sq,
        collinear,
        degeneracies,
    })
}
