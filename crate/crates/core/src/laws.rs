//! The laws of rational trigonometry as residual evaluators.
//!
//! Every check returns a [`LawResidual`] whose value is zero exactly when the
//! law holds. Over exact fields callers assert `holds`; over `f64` they bound
//! the magnitude of `value`.

use std::fmt;

use thiserror::Error;

use crate::field::Scalar;
use crate::planar::{foot_of_perpendicular, others, quadrance, GeometryError, TriangleReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("quadrance Q{0} is zero")]
    ZeroQuadrance(u8),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadranceTriple<S> {
    pub q1: S,
    pub q2: S,
    pub q3: S,
}

impl<S: Scalar> QuadranceTriple<S> {
    pub fn new(q1: S, q2: S, q3: S) -> Self {
        QuadranceTriple { q1, q2, q3 }
    }

    pub fn from_array([q1, q2, q3]: [S; 3]) -> Self {
        Self::new(q1, q2, q3)
    }

    pub fn as_array(&self) -> [&S; 3] {
        [&self.q1, &self.q2, &self.q3]
    }

    /// `Q_i` with a 1-based index.
    pub fn get(&self, i: usize) -> &S {
        self.as_array()[i - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpreadTriple<S> {
    pub s1: S,
    pub s2: S,
    pub s3: S,
}

impl<S: Scalar> SpreadTriple<S> {
    pub fn new(s1: S, s2: S, s3: S) -> Self {
        SpreadTriple { s1, s2, s3 }
    }

    pub fn from_array([s1, s2, s3]: [S; 3]) -> Self {
        Self::new(s1, s2, s3)
    }

    pub fn as_array(&self) -> [&S; 3] {
        [&self.s1, &self.s2, &self.s3]
    }

    pub fn get(&self, i: usize) -> &S {
        self.as_array()[i - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// Right angle at the given vertex.
    Pythagoras(u8),
    TripleQuad,
    SpreadLaw,
    /// Cross law at the given vertex.
    CrossLaw(u8),
    TripleSpread,
    /// Symmetric, asymmetric and determinant quadrea forms agree.
    QuadreaForms,
    /// `area^2 = Q H / 4` with side `i` as the base.
    AltitudeArea(u8),
    /// `s_i D = Q_i` with `D = Q1 Q2 Q3 / (4 area^2)`.
    Substitution,
    /// `Q_j + Q_k - Q_i = 2 (A_j - A_i).(A_k - A_i)`: Pythagoras holds at
    /// `A_i` exactly when the sides meeting there are perpendicular.
    PerpendicularityCriterion(u8),
    /// `quadrea = 4 det^2` with `det` the orientation determinant: the
    /// Triple quad formula holds exactly for collinear points.
    CollinearityCriterion,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Pythagoras(i) => write!(f, "pythagoras@{i}"),
            Law::TripleQuad => f.write_str("triple_quad"),
            Law::SpreadLaw => f.write_str("spread_law"),
            Law::CrossLaw(i) => write!(f, "cross_law@{i}"),
            Law::TripleSpread => f.write_str("triple_spread"),
            Law::QuadreaForms => f.write_str("quadrea_forms"),
            Law::AltitudeArea(i) => write!(f, "altitude_area@{i}"),
            Law::Substitution => f.write_str("substitution"),
            Law::PerpendicularityCriterion(i) => write!(f, "perpendicularity@{i}"),
            Law::CollinearityCriterion => f.write_str("collinearity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawResidual<S> {
    pub law: Law,
    pub value: S,
    pub holds: bool,
}

impl<S: Scalar> LawResidual<S> {
    pub fn new(law: Law, value: S) -> Self {
        let holds = value.is_zero();
        LawResidual { law, value, holds }
    }

    /// Conjunction of several conditions: the first nonzero component, or
    /// zero when every component vanishes.
    fn conjunction(law: Law, components: Vec<S>) -> Self {
        let zero = components[0].zero_like();
        let value = components.into_iter().find(|c| !c.is_zero()).unwrap_or(zero);
        Self::new(law, value)
    }
}

/// `(Q1 + Q2 + Q3)^2 - 2 (Q1^2 + Q2^2 + Q3^2)`.
pub fn quadrea<S: Scalar>(q: &QuadranceTriple<S>) -> S {
    let QuadranceTriple { q1, q2, q3 } = q.clone();
    let two = q1.from_i64_like(2);
    let sum = q1.clone() + q2.clone() + q3.clone();
    sum.square() - two * (q1.square() + q2.square() + q3.square())
}

/// `4 Q1 Q2 - (Q1 + Q2 - Q3)^2`.
pub fn quadrea_asymmetric<S: Scalar>(q: &QuadranceTriple<S>) -> S {
    let QuadranceTriple { q1, q2, q3 } = q.clone();
    let four = q1.from_i64_like(4);
    four * q1.clone() * q2.clone() - (q1 + q2 - q3).square()
}

/// Negated determinant of the bordered matrix
///
/// ```text
/// | 0  Q1 Q2 1 |
/// | Q1 0  Q3 1 |
/// | Q2 Q3 0  1 |
/// | 1  1  1  0 |
/// ```
pub fn quadrea_determinant<S: Scalar>(q: &QuadranceTriple<S>) -> S {
    let QuadranceTriple { q1, q2, q3 } = q.clone();
    let zero = q1.zero_like();
    let one = q1.one_like();
    let m = [
        [zero.clone(), q1.clone(), q2.clone(), one.clone()],
        [q1, zero.clone(), q3.clone(), one.clone()],
        [q2, q3, zero.clone(), one.clone()],
        [one.clone(), one.clone(), one, zero],
    ];
    -det4(&m)
}

fn det3<S: Scalar>(m: [[&S; 3]; 3]) -> S {
    let t = |i: usize, j: usize, k: usize| m[0][i].clone() * m[1][j].clone() * m[2][k].clone();
    t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(2, 1, 0) - t(0, 2, 1) - t(1, 0, 2)
}

/// Laplace expansion along the first row.
fn det4<S: Scalar>(m: &[[S; 4]; 4]) -> S {
    let mut acc = m[0][0].zero_like();
    for col in 0..4 {
        if m[0][col].is_zero() {
            continue;
        }
        let keep: Vec<usize> = (0..4).filter(|&c| c != col).collect();
        let minor = [1, 2, 3].map(|r| [keep[0], keep[1], keep[2]].map(|c| &m[r][c]));
        let term = m[0][col].clone() * det3(minor);
        acc = if col % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// `area^2 = quadrea / 16`.
pub fn area_sq_from_quadrea<S: Scalar>(q: &QuadranceTriple<S>) -> S {
    quadrea(q).halve_by(16)
}

/// `area^2 = Q H / 4` for base quadrance `Q` and altitude quadrance `H`.
pub fn area_sq_from_altitude<S: Scalar>(q_base: &S, h: &S) -> S {
    (q_base.clone() * h.clone()).halve_by(4)
}

/// Residual `Q1 + Q2 - Q3` (right angle at `A3`).
pub fn check_pythagoras<S: Scalar>(q: &QuadranceTriple<S>) -> LawResidual<S> {
    check_pythagoras_at(q, 3)
}

/// Residual `Q_j + Q_k - Q_i` for a right angle at vertex `i`.
pub fn check_pythagoras_at<S: Scalar>(q: &QuadranceTriple<S>, vertex: usize) -> LawResidual<S> {
    let [j, k] = others(vertex);
    LawResidual::new(
        Law::Pythagoras(vertex as u8),
        q.get(j).clone() + q.get(k).clone() - q.get(vertex).clone(),
    )
}

/// Residual `(Q1 + Q2 + Q3)^2 - 2 (Q1^2 + Q2^2 + Q3^2)`, i.e. the quadrea.
pub fn check_triple_quad<S: Scalar>(q: &QuadranceTriple<S>) -> LawResidual<S> {
    LawResidual::new(Law::TripleQuad, quadrea(q))
}

/// `s1/Q1 = s2/Q2 = s3/Q3 = 4 area^2 / (Q1 Q2 Q3)`, cleared of
/// denominators: `s1 Q2 - s2 Q1`, `s2 Q3 - s3 Q2` and `4 s1 Q2 Q3 - quadrea`
/// must all vanish.
pub fn check_spread_law<S: Scalar>(
    q: &QuadranceTriple<S>,
    s: &SpreadTriple<S>,
) -> Result<LawResidual<S>, LawError> {
    for (i, qi) in q.as_array().into_iter().enumerate() {
        if qi.is_zero() {
            return Err(LawError::ZeroQuadrance(i as u8 + 1));
        }
    }
    let QuadranceTriple { q1, q2, q3 } = q.clone();
    let SpreadTriple { s1, s2, s3 } = s.clone();
    let four = q1.from_i64_like(4);
    let components = vec![
        s1.clone() * q2.clone() - s2.clone() * q1,
        s2 * q3.clone() - s3 * q2.clone(),
        four * s1 * q2 * q3 - quadrea(q),
    ];
    Ok(LawResidual::conjunction(Law::SpreadLaw, components))
}

/// Residual `(Q1 - Q2 - Q3)^2 - 4 Q2 Q3 (1 - s1)`.
pub fn check_cross_law<S: Scalar>(q: &QuadranceTriple<S>, s1: &S) -> LawResidual<S> {
    check_cross_law_at(q, s1, 1)
}

/// Cross law at vertex `i`, with `s` the spread there.
pub fn check_cross_law_at<S: Scalar>(q: &QuadranceTriple<S>, s: &S, vertex: usize) -> LawResidual<S> {
    let [j, k] = others(vertex);
    let (qi, qj, qk) = (q.get(vertex).clone(), q.get(j).clone(), q.get(k).clone());
    let four = qi.from_i64_like(4);
    let one = qi.one_like();
    let value = (qi - qj.clone() - qk.clone()).square() - four * qj * qk * (one - s.clone());
    LawResidual::new(Law::CrossLaw(vertex as u8), value)
}

/// Residual `(s1 + s2 + s3)^2 - 2 (s1^2 + s2^2 + s3^2) - 4 s1 s2 s3`.
pub fn check_triple_spread<S: Scalar>(s: &SpreadTriple<S>) -> LawResidual<S> {
    let SpreadTriple { s1, s2, s3 } = s.clone();
    let two = s1.from_i64_like(2);
    let four = s1.from_i64_like(4);
    let sum = s1.clone() + s2.clone() + s3.clone();
    let value = sum.square()
        - two * (s1.square() + s2.square() + s3.square())
        - four * s1 * s2 * s3;
    LawResidual::new(Law::TripleSpread, value)
}

pub fn check_quadrea_forms<S: Scalar>(q: &QuadranceTriple<S>) -> LawResidual<S> {
    let a = quadrea(q);
    LawResidual::conjunction(
        Law::QuadreaForms,
        vec![a.clone() - quadrea_asymmetric(q), a - quadrea_determinant(q)],
    )
}

/// Quadrance of the altitude from `A_i` onto the line of side `i`.
pub fn altitude_quadrance<S: Scalar>(report: &TriangleReport<S>, side: usize) -> Result<S, GeometryError> {
    let apex = &report.points[side - 1];
    let foot = foot_of_perpendicular(apex, &report.side_line(side))?;
    quadrance(apex, &foot)
}

/// Every law that applies to `report`.
///
/// Spread-dependent laws and the altitude checks are skipped when a side lies
/// on a null line; the substitution check additionally needs a nonzero area.
pub fn audit_triangle<S: Scalar>(report: &TriangleReport<S>) -> Vec<LawResidual<S>> {
    let q = &report.quadrances;
    let p = &report.points;
    // The Triple quad formula itself only holds for collinear points; its
    // biconditional is the collinearity criterion below.
    let mut out = vec![check_quadrea_forms(q)];

    let d = |a: usize, b: usize| {
        (
            p[b].x.clone() - p[a].x.clone(),
            p[b].y.clone() - p[a].y.clone(),
        )
    };
    let ((ux, uy), (vx, vy)) = (d(0, 1), d(0, 2));
    let orientation = ux * vy - uy * vx;
    let four = report.quadrea.from_i64_like(4);
    out.push(LawResidual::new(
        Law::CollinearityCriterion,
        report.quadrea.clone() - four * orientation.square(),
    ));

    for i in 1..=3 {
        let [j, k] = others(i);
        let (ax, ay) = d(i - 1, j - 1);
        let (bx, by) = d(i - 1, k - 1);
        let dot = ax * bx + ay * by;
        let two = dot.from_i64_like(2);
        let pythagoras = check_pythagoras_at(q, i);
        out.push(LawResidual::new(
            Law::PerpendicularityCriterion(i as u8),
            pythagoras.value - two * dot,
        ));
    }

    let Some(s) = &report.spreads else {
        return out;
    };
    if let Ok(r) = check_spread_law(q, s) {
        out.push(r);
    }
    for i in 1..=3 {
        out.push(check_cross_law_at(q, s.get(i), i));
    }
    out.push(check_triple_spread(s));
    for i in 1..=3 {
        if let Ok(h) = altitude_quadrance(report, i) {
            out.push(LawResidual::new(
                Law::AltitudeArea(i as u8),
                area_sq_from_altitude(q.get(i), &h) - report.area_sq.clone(),
            ));
        }
    }
    if !report.collinear {
        let four = report.area_sq.from_i64_like(4);
        let denom = four * report.area_sq.clone();
        let d = (q.q1.clone() * q.q2.clone() * q.q3.clone())
            .checked_div(&denom)
            .expect("area is nonzero for non-collinear triangles");
        let components = (1..=3)
            .map(|i| s.get(i).clone() * d.clone() - q.get(i).clone())
            .collect();
        out.push(LawResidual::conjunction(Law::Substitution, components));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qt(a: i64, b: i64, c: i64) -> QuadranceTriple<Rational> {
        QuadranceTriple::new(q(a, 1), q(b, 1), q(c, 1))
    }

    #[test]
    fn quadrea_examples() {
        for (t, expected) in [(qt(34, 68, 74), 8464), (qt(1, 1, 2), 4), (qt(1, 4, 9), 0)] {
            assert_eq!(quadrea(&t), q(expected, 1));
            assert_eq!(quadrea_asymmetric(&t), q(expected, 1));
            assert_eq!(quadrea_determinant(&t), q(expected, 1));
        }
    }

    #[test]
    fn area_examples() {
        assert_eq!(area_sq_from_quadrea(&qt(34, 68, 74)), q(529, 1));
        assert_eq!(area_sq_from_quadrea(&qt(1, 1, 2)), q(1, 4));
        assert_eq!(area_sq_from_quadrea(&qt(1, 4, 9)), q(0, 1));
        assert_eq!(area_sq_from_altitude(&q(74, 1), &q(1058, 37)), q(529, 1));
        assert_eq!(area_sq_from_altitude(&q(2, 1), &q(2, 1)), q(1, 1));
        assert_eq!(area_sq_from_altitude(&q(9, 1), &q(0, 1)), q(0, 1));
    }

    #[test]
    fn pythagoras_examples() {
        assert!(check_pythagoras(&qt(20, 5, 25)).holds);
        assert_eq!(check_pythagoras(&qt(34, 68, 74)).value, q(28, 1));
        assert!(check_pythagoras(&qt(1, 1, 2)).holds);
    }

    #[test]
    fn triple_quad_examples() {
        assert!(check_triple_quad(&qt(1, 4, 9)).holds);
        assert_eq!(check_triple_quad(&qt(34, 68, 74)).value, q(8464, 1));
        assert!(check_triple_quad(&qt(0, 7, 7)).holds);
    }

    #[test]
    fn spread_law_examples() {
        let worked = SpreadTriple::new(q(529, 1258), q(529, 629), q(529, 578));
        assert!(check_spread_law(&qt(34, 68, 74), &worked).unwrap().holds);
        let iso = SpreadTriple::new(q(1, 2), q(1, 2), q(1, 1));
        assert!(check_spread_law(&qt(1, 1, 2), &iso).unwrap().holds);
        let wrong = SpreadTriple::new(q(1, 4), q(1, 2), q(3, 4));
        assert!(!check_spread_law(&qt(34, 68, 74), &wrong).unwrap().holds);
        assert_eq!(
            check_spread_law(&qt(0, 1, 1), &iso),
            Err(LawError::ZeroQuadrance(1))
        );
    }

    #[test]
    fn spread_law_anchor_is_checked() {
        // proportional to Q but with the wrong common ratio
        let scaled = SpreadTriple::new(q(34, 100), q(68, 100), q(74, 100));
        assert!(!check_spread_law(&qt(34, 68, 74), &scaled).unwrap().holds);
    }

    #[test]
    fn cross_law_examples() {
        assert!(check_cross_law(&qt(34, 68, 74), &q(529, 1258)).holds);
        assert!(check_cross_law(&qt(2, 1, 1), &q(1, 1)).holds);
        assert!(check_cross_law(&qt(1, 1, 1), &q(3, 4)).holds);
        assert!(!check_cross_law(&qt(1, 1, 1), &q(1, 2)).holds);
    }

    #[test]
    fn triple_spread_examples() {
        assert!(check_triple_spread(&SpreadTriple::new(q(3, 4), q(3, 4), q(3, 4))).holds);
        assert!(check_triple_spread(&SpreadTriple::new(q(1, 1), q(1, 2), q(1, 2))).holds);
        let r = check_triple_spread(&SpreadTriple::new(q(1, 4), q(1, 4), q(1, 4)));
        assert_eq!(r.value, q(1, 8));
    }

    #[test]
    fn float_residuals() {
        let t = QuadranceTriple::new(34.0f64, 68.0, 74.0);
        assert_eq!(quadrea(&t), 8464.0);
        let r = check_cross_law(&t, &(529.0 / 1258.0));
        assert!(r.value.abs() < 1e-9);
    }
}
