//! Triangle completion by solving the Cross law and the Triple spread
//! formula as quadratics.
//!
//! Both laws are quadratic in any single unknown, so a missing value has up
//! to two in-field solutions. They are always returned together; choosing a
//! branch is left to the caller.

use std::fmt;

use thiserror::Error;

use crate::field::Scalar;
use crate::laws::{
    check_cross_law_at, check_spread_law, check_triple_spread, quadrea, QuadranceTriple, SpreadTriple,
};
use crate::planar::others;

/// The in-field roots of a quadratic, ascending by canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet<S> {
    pub roots: Vec<S>,
    /// The value whose square root the roots depend on. Two roots when it is
    /// a nonzero square, one (double) when zero, none when a non-square.
    pub discriminant: S,
}

impl<S: Scalar> SolutionSet<S> {
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_double_root(&self) -> bool {
        self.discriminant.is_zero()
    }

    /// Roots `centre ± r` over all `r` with `r^2 = discriminant`.
    fn around(centre: S, discriminant: S) -> Self {
        let mut roots: Vec<S> = discriminant
            .square_roots()
            .into_iter()
            .map(|r| centre.clone() + r)
            .collect();
        roots.sort_by(|a, b| a.canonical_cmp(b));
        roots.dedup();
        SolutionSet { roots, discriminant }
    }
}

/// All roots of `x^2 + b x + c = 0`. The discriminant is `b^2 - 4c`.
pub fn solve_monic_quadratic<S: Scalar>(b: &S, c: &S) -> SolutionSet<S> {
    let four = b.from_i64_like(4);
    let disc = b.square() - four.clone() * c.clone();
    // x = -b/2 ± sqrt(disc)/2 = -b/2 ± sqrt(disc/4)
    let centre = (-b.clone()).halve_by(2);
    let mut set = SolutionSet::around(centre, disc.halve_by(4));
    set.discriminant = disc;
    set
}

/// `Q1` from `(Q1 - Q2 - Q3)^2 = 4 Q2 Q3 (1 - s1)`: `Q1 = Q2 + Q3 ± r` with
/// `r^2 = 4 Q2 Q3 (1 - s1)`, which is the reported discriminant.
pub fn solve_q1_from_cross<S: Scalar>(q2: &S, q3: &S, s1: &S) -> SolutionSet<S> {
    let four = q2.from_i64_like(4);
    let disc = four * q2.clone() * q3.clone() * (s1.one_like() - s1.clone());
    SolutionSet::around(q2.clone() + q3.clone(), disc)
}

/// `s3` from the Triple spread formula, as
/// `s3^2 - (2 s1 + 2 s2 - 4 s1 s2) s3 + (s1 - s2)^2 = 0`.
pub fn solve_s3_from_triple_spread<S: Scalar>(s1: &S, s2: &S) -> SolutionSet<S> {
    let two = s1.from_i64_like(2);
    let four = s1.from_i64_like(4);
    let b = -(two.clone() * s1.clone() + two * s2.clone() - four * s1.clone() * s2.clone());
    let c = (s1.clone() - s2.clone()).square();
    solve_monic_quadratic(&b, &c)
}

/// `Q_k` from the Cross law at vertex `i`, as
/// `Q_k^2 - (2 (Q_i - Q_j) + 4 Q_j (1 - s_i)) Q_k + (Q_i - Q_j)^2 = 0`.
fn solve_adjacent_from_cross<S: Scalar>(qi: &S, qj: &S, si: &S) -> SolutionSet<S> {
    let two = qi.from_i64_like(2);
    let four = qi.from_i64_like(4);
    let diff = qi.clone() - qj.clone();
    let b = -(two * diff.clone() + four * qj.clone() * (si.one_like() - si.clone()));
    solve_monic_quadratic(&b, &diff.square())
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError<S: fmt::Debug + fmt::Display> {
    #[error("unsupported pattern of known values: {0}")]
    UnsupportedPattern(String),
    #[error("inconsistent data: {0}")]
    InconsistentData(String),
    #[error("no in-field solution of {equation}: discriminant {discriminant} is not a square")]
    NotInField { equation: String, discriminant: S },
}

/// Partially known quadrances and spreads, indexed 1..=3 through the
/// accessors. `None` means unknown.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownValues<S> {
    pub quadrances: [Option<S>; 3],
    pub spreads: [Option<S>; 3],
}

impl<S> Default for KnownValues<S> {
    fn default() -> Self {
        KnownValues {
            quadrances: [None, None, None],
            spreads: [None, None, None],
        }
    }
}

impl<S: Scalar> KnownValues<S> {
    pub fn with_quadrance(mut self, i: usize, value: S) -> Self {
        self.quadrances[i - 1] = Some(value);
        self
    }

    pub fn with_spread(mut self, i: usize, value: S) -> Self {
        self.spreads[i - 1] = Some(value);
        self
    }

    fn q(&self, i: usize) -> Option<&S> {
        self.quadrances[i - 1].as_ref()
    }

    fn s(&self, i: usize) -> Option<&S> {
        self.spreads[i - 1].as_ref()
    }

    fn known_q(&self) -> Vec<usize> {
        (1..=3).filter(|&i| self.q(i).is_some()).collect()
    }

    fn known_s(&self) -> Vec<usize> {
        (1..=3).filter(|&i| self.s(i).is_some()).collect()
    }

    fn any(&self) -> Option<&S> {
        self.quadrances.iter().chain(&self.spreads).flatten().next()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// All three quadrances.
    ThreeQuadrances,
    /// Two quadrances and the spread at the vertex where they meet.
    IncludedSpread { vertex: u8 },
    /// Two quadrances and the spread opposite one of them.
    OppositeSpread { vertex: u8 },
    /// Three spreads: similarity class only.
    ThreeSpreads,
    /// Two spreads: the third from the Triple spread formula.
    TwoSpreads { missing: u8 },
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::ThreeQuadrances => f.write_str("three_quadrances"),
            Pattern::IncludedSpread { vertex } => write!(f, "included_spread@{vertex}"),
            Pattern::OppositeSpread { vertex } => write!(f, "opposite_spread@{vertex}"),
            Pattern::ThreeSpreads => f.write_str("three_spreads"),
            Pattern::TwoSpreads { missing } => write!(f, "two_spreads@{missing}"),
        }
    }
}

/// A quadratic that was solved along the way, kept as evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate<S> {
    pub equation: String,
    pub solutions: SolutionSet<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate<S> {
    pub branch: String,
    /// Absolute quadrances, when the input fixes a scale.
    pub quadrances: Option<QuadranceTriple<S>>,
    /// Quadrances up to a common factor, normalised so the first nonzero
    /// entry is one. Only for spread-only inputs.
    pub ratios: Option<QuadranceTriple<S>>,
    /// `None` entries are not determined by the data (a zero quadrance
    /// leaves the spread at its far vertex free).
    pub spreads: [Option<S>; 3],
    pub quadrea: Option<S>,
    pub area_sq: Option<S>,
}

impl<S: Scalar> Candidate<S> {
    pub fn spread_triple(&self) -> Option<SpreadTriple<S>> {
        match &self.spreads {
            [Some(a), Some(b), Some(c)] => Some(SpreadTriple::new(a.clone(), b.clone(), c.clone())),
            _ => None,
        }
    }

    /// First law that fails on this candidate, if any.
    fn first_violation(&self) -> Option<String> {
        let s = self.spread_triple();
        if let Some(s) = &s {
            let r = check_triple_spread(s);
            if !r.holds {
                return Some(format!("{} residual {}", r.law, r.value));
            }
        }
        let q = self.quadrances.as_ref()?;
        for i in 1..=3 {
            if let Some(si) = &self.spreads[i - 1] {
                let r = check_cross_law_at(q, si, i);
                if !r.holds {
                    return Some(format!("{} residual {}", r.law, r.value));
                }
            }
        }
        if let Some(s) = &s {
            if let Ok(r) = check_spread_law(q, s) {
                if !r.holds {
                    return Some(format!("{} residual {}", r.law, r.value));
                }
            }
        }
        None
    }

    /// Whether every known value is reproduced.
    fn agrees_with(&self, known: &KnownValues<S>) -> bool {
        let q_ok = (1..=3).all(|i| match (known.q(i), &self.quadrances) {
            (Some(k), Some(q)) => q.get(i) == k,
            _ => true,
        });
        let s_ok = (1..=3).all(|i| match (known.s(i), &self.spreads[i - 1]) {
            (Some(k), Some(s)) => s == k,
            _ => true,
        });
        q_ok && s_ok
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Completion<S> {
    pub pattern: Pattern,
    pub candidates: Vec<Candidate<S>>,
    pub certificates: Vec<Certificate<S>>,
}

/// Spread at each vertex from the Cross law, where `Q_j Q_k != 0`.
fn spreads_from_quadrances<S: Scalar>(q: &QuadranceTriple<S>) -> [Option<S>; 3] {
    [1, 2, 3].map(|i| {
        let [j, k] = others(i);
        let (qi, qj, qk) = (q.get(i).clone(), q.get(j).clone(), q.get(k).clone());
        let four = qi.from_i64_like(4);
        let denom = four * qj.clone() * qk.clone();
        let ratio = (qi - qj - qk).square().checked_div(&denom).ok()?;
        Some(ratio.one_like() - ratio)
    })
}

fn full_candidate<S: Scalar>(branch: String, q: QuadranceTriple<S>, known: &KnownValues<S>) -> Candidate<S> {
    let derived = spreads_from_quadrances(&q);
    let spreads = [0, 1, 2].map(|i| derived[i].clone().or_else(|| known.spreads[i].clone()));
    let area = quadrea(&q);
    Candidate {
        branch,
        area_sq: Some(area.halve_by(16)),
        quadrea: Some(area),
        quadrances: Some(q),
        ratios: None,
        spreads,
    }
}

fn similarity_candidate<S: Scalar>(branch: String, s: [S; 3]) -> Candidate<S> {
    let ratios = s.iter().find(|x| !x.is_zero()).map(|lead| {
        let inv = lead.inverse().expect("nonzero");
        QuadranceTriple::from_array(s.clone().map(|x| x * inv.clone()))
    });
    Candidate {
        branch,
        quadrances: None,
        ratios,
        spreads: s.map(Some),
        quadrea: None,
        area_sq: None,
    }
}

fn fmt_i(i: usize) -> u8 {
    i as u8
}

/// Completes a triangle from a supported pattern of known values.
///
/// Supported inputs: all three quadrances; two quadrances with the spread at
/// their common vertex; two quadrances with the spread opposite one of them;
/// two or three spreads. Additional known values are checked against every
/// candidate.
pub fn complete_triangle<S: Scalar>(known: &KnownValues<S>) -> Result<Completion<S>, SolverError<S>> {
    if let Some(first) = known.any() {
        if !known.quadrances.iter().chain(&known.spreads).flatten().all(|x| x.compatible(first)) {
            return Err(SolverError::InconsistentData("values come from different fields".into()));
        }
    }
    let qs = known.known_q();
    let ss = known.known_s();
    let mut certificates = Vec::new();

    let (pattern, candidates) = match (qs.len(), ss.len()) {
        (3, _) => {
            let q = QuadranceTriple::new(
                known.q(1).unwrap().clone(),
                known.q(2).unwrap().clone(),
                known.q(3).unwrap().clone(),
            );
            (Pattern::ThreeQuadrances, vec![full_candidate("unique".into(), q, known)])
        }
        (2, n) if n >= 1 => {
            let m = (1..=3).find(|i| !qs.contains(i)).unwrap();
            if let Some(sm) = known.s(m) {
                let [j, k] = others(m);
                let (qj, qk) = (known.q(j).unwrap(), known.q(k).unwrap());
                let set = solve_q1_from_cross(qj, qk, sm);
                let eq = format!("cross_law@{m}");
                let cands = set
                    .roots
                    .iter()
                    .map(|root| {
                        let mut arr = [qj.clone(), qj.clone(), qj.clone()];
                        arr[m - 1] = root.clone();
                        arr[j - 1] = qj.clone();
                        arr[k - 1] = qk.clone();
                        full_candidate(format!("Q{m} = {root}"), QuadranceTriple::from_array(arr), known)
                    })
                    .collect();
                certificates.push(Certificate { equation: eq, solutions: set });
                (Pattern::IncludedSpread { vertex: fmt_i(m) }, cands)
            } else {
                // A spread opposite one of the known quadrances.
                let i = *ss.iter().find(|&&i| i != m).unwrap();
                let j = (1..=3).find(|&x| x != i && x != m).unwrap();
                let (qi, qj, si) = (known.q(i).unwrap(), known.q(j).unwrap(), known.s(i).unwrap());
                let (eq, set) = if !qi.is_zero() && !si.is_zero() {
                    // Spread law for s_j, Triple spread for s_m, Spread law back to Q_m.
                    let scale = qi.checked_div(si).expect("nonzero spread");
                    let sj = si.clone() * qj.checked_div(qi).expect("nonzero quadrance");
                    let tsf = solve_s3_from_triple_spread(si, &sj);
                    let roots = tsf.roots.iter().map(|sm| sm.clone() * scale.clone()).collect();
                    let mapped = SolutionSet { roots, discriminant: tsf.discriminant.clone() };
                    certificates.push(Certificate { equation: format!("triple_spread@{m}"), solutions: tsf });
                    (None, mapped)
                } else {
                    let set = solve_adjacent_from_cross(qi, qj, si);
                    (Some(format!("cross_law@{i}")), set)
                };
                let cands = set
                    .roots
                    .iter()
                    .map(|root| {
                        let mut arr = [qi.clone(), qi.clone(), qi.clone()];
                        arr[i - 1] = qi.clone();
                        arr[j - 1] = qj.clone();
                        arr[m - 1] = root.clone();
                        full_candidate(format!("Q{m} = {root}"), QuadranceTriple::from_array(arr), known)
                    })
                    .collect();
                if let Some(eq) = eq {
                    certificates.push(Certificate { equation: eq, solutions: set });
                }
                (Pattern::OppositeSpread { vertex: fmt_i(i) }, cands)
            }
        }
        (0, 3) => {
            let s = [1, 2, 3].map(|i| known.s(i).unwrap().clone());
            let r = check_triple_spread(&SpreadTriple::from_array(s.clone()));
            if !r.holds {
                return Err(SolverError::InconsistentData(format!(
                    "{} residual {} is nonzero",
                    r.law, r.value
                )));
            }
            (Pattern::ThreeSpreads, vec![similarity_candidate("similarity class".into(), s)])
        }
        (0, 2) => {
            let m = (1..=3).find(|i| !ss.contains(i)).unwrap();
            let [j, k] = others(m);
            let set = solve_s3_from_triple_spread(known.s(j).unwrap(), known.s(k).unwrap());
            let cands = set
                .roots
                .iter()
                .map(|root| {
                    let mut arr = [root.clone(), root.clone(), root.clone()];
                    arr[j - 1] = known.s(j).unwrap().clone();
                    arr[k - 1] = known.s(k).unwrap().clone();
                    similarity_candidate(format!("s{m} = {root}"), arr)
                })
                .collect();
            certificates.push(Certificate { equation: format!("triple_spread@{m}"), solutions: set });
            (Pattern::TwoSpreads { missing: fmt_i(m) }, cands)
        }
        (nq, ns) => {
            return Err(SolverError::UnsupportedPattern(format!(
                "{nq} quadrance(s) and {ns} spread(s)"
            )))
        }
    };

    if candidates.is_empty() {
        let cert = certificates.last().expect("empty candidate lists come from a quadratic");
        return Err(SolverError::NotInField {
            equation: cert.equation.clone(),
            discriminant: cert.solutions.discriminant.clone(),
        });
    }
    let mut rejection = None;
    let candidates: Vec<Candidate<S>> = candidates
        .into_iter()
        .filter(|c| {
            let violation = c.first_violation().or_else(|| {
                (!c.agrees_with(known)).then(|| "candidate does not reproduce the given values".to_string())
            });
            if let Some(v) = &violation {
                rejection.get_or_insert_with(|| format!("{}: {v}", c.branch));
            }
            violation.is_none()
        })
        .collect();
    if candidates.is_empty() {
        return Err(SolverError::InconsistentData(rejection.unwrap_or_default()));
    }
    Ok(Completion {
        pattern,
        candidates,
        certificates,
    })
}
