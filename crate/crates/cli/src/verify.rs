//! Law verification over sampled or enumerated triangles.
//!
//! Every configuration goes through [`analyze_triangle`] and then every
//! applicable residual from [`audit_triangle`] plus a spread-by-definition
//! comparison at each vertex. Over exact fields every residual must be zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use rattrig::laws::audit_triangle;
use rattrig::planar::{line_through, spread_by_definition, Degeneracy, GeometryError};
use rattrig::{analyze_triangle, FieldSpec, Point, PrimeField, Rational, RationalPoint, Scalar};

use crate::error::CliError;

/// Largest prime accepted for exhaustive enumeration unless overridden.
pub const DEFAULT_MAX_PRIME: u64 = 31;

/// Coordinates of sampled rational triangles lie in `[-BOUND, BOUND]`.
pub const COORDINATE_BOUND: i64 = 100;
pub const MAX_DENOMINATOR: i64 = 10;

const MAX_RECORDED_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Random(u64),
    Exhaustive,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationCensus {
    pub field: String,
    pub mode: String,
    pub seed: Option<u64>,
    /// Ordered vertex triples examined, degenerate ones included.
    pub configurations: u64,
    pub duplicate_vertices: u64,
    pub collinear: u64,
    pub null_lines: u64,
    pub isotropic_segments: u64,
    /// Configurations with no null side, where the spread laws apply.
    pub spread_checked: u64,
    pub law_evaluations: u64,
    pub failures: u64,
    pub failure_examples: Vec<String>,
}

impl VerificationCensus {
    /// Adds the counts of `other`. Associative; failure examples keep the
    /// order of the operands.
    pub fn merge(&mut self, other: VerificationCensus) {
        self.configurations += other.configurations;
        self.duplicate_vertices += other.duplicate_vertices;
        self.collinear += other.collinear;
        self.null_lines += other.null_lines;
        self.isotropic_segments += other.isotropic_segments;
        self.spread_checked += other.spread_checked;
        self.law_evaluations += other.law_evaluations;
        self.failures += other.failures;
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failure_examples.len());
        self.failure_examples.extend(other.failure_examples.into_iter().take(room));
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.failure_examples.len() < MAX_RECORDED_FAILURES {
            self.failure_examples.push(what);
        }
    }

    /// Runs every check on one configuration.
    pub fn examine<S: Scalar>(&mut self, points: [Point<S>; 3]) {
        self.configurations += 1;
        let label = || format!("{} {} {}", points[0], points[1], points[2]);
        let report = match analyze_triangle(points.clone()) {
            Ok(r) => r,
            Err(GeometryError::DuplicatePoints) => {
                self.duplicate_vertices += 1;
                return;
            }
            Err(e) => return self.fail(format!("{}: {e}", label())),
        };
        self.collinear += u64::from(report.collinear);
        for d in &report.degeneracies {
            match d {
                Degeneracy::NullLine(_) => self.null_lines += 1,
                Degeneracy::IsotropicSegment(_) => self.isotropic_segments += 1,
            }
        }
        for r in audit_triangle(&report) {
            self.law_evaluations += 1;
            if !r.holds {
                self.fail(format!("{}: {} residual {}", label(), r.law, r.value));
            }
        }
        let Some(spreads) = &report.spreads else {
            return;
        };
        self.spread_checked += 1;
        if report.collinear {
            return;
        }
        let p = &report.points;
        for (i, j, k) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
            self.law_evaluations += 1;
            let l1 = line_through(&p[i], &p[j]).expect("distinct");
            let l2 = line_through(&p[i], &p[k]).expect("distinct");
            match spread_by_definition(&l1, &l2, &p[j]) {
                Ok(s) if s == *spreads.get(i + 1) => {}
                Ok(s) => self.fail(format!("{}: spread by definition at A{} is {s}", label(), i + 1)),
                Err(e) => self.fail(format!("{}: spread by definition at A{}: {e}", label(), i + 1)),
            }
        }
    }
}

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn sample_point(rng: &mut ChaCha8Rng) -> RationalPoint {
    let mut coord = || {
        let d = rng.gen_range(1..=MAX_DENOMINATOR);
        let n = rng.gen_range(-COORDINATE_BOUND * d..=COORDINATE_BOUND * d);
        rational(n, d)
    };
    let x = coord();
    Point::new(x, coord())
}

/// `count` non-collinear rational triangles determined by `seed`, plus the
/// number of degenerate draws that were rejected along the way.
pub fn sample_rational_triangles(seed: u64, count: usize) -> (Vec<[RationalPoint; 3]>, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let t = [sample_point(&mut rng), sample_point(&mut rng), sample_point(&mut rng)];
        match analyze_triangle(t.clone()) {
            Ok(r) if !r.collinear => out.push(t),
            _ => rejected += 1,
        }
    }
    (out, rejected)
}

/// All `p^4` triangles with `A1` at the origin (every triangle up to
/// translation), checked in parallel.
pub fn exhaustive(field: PrimeField) -> VerificationCensus {
    let p = field.modulus();
    let point = |index: u64| {
        Point::new(field.element((index / p) as i64), field.element((index % p) as i64))
    };
    let origin = point(0);
    let parts: Vec<VerificationCensus> = (0..p * p)
        .into_par_iter()
        .map(|a2| {
            let mut census = VerificationCensus::default();
            let a2 = point(a2);
            for a3 in 0..p * p {
                census.examine([origin.clone(), a2.clone(), point(a3)]);
            }
            census
        })
        .collect();
    let mut total = VerificationCensus {
        field: FieldSpec::Prime(field).to_string(),
        mode: "exhaustive".into(),
        ..Default::default()
    };
    for part in parts {
        total.merge(part);
    }
    total
}

fn run_parallel<S: Scalar + Send + Sync>(triangles: Vec<[Point<S>; 3]>) -> VerificationCensus {
    let parts: Vec<VerificationCensus> = triangles
        .par_chunks(64)
        .map(|chunk| {
            let mut census = VerificationCensus::default();
            for t in chunk {
                census.examine(t.clone());
            }
            census
        })
        .collect();
    let mut total = VerificationCensus::default();
    for part in parts {
        total.merge(part);
    }
    total
}

pub fn random_rational(count: u64, seed: u64) -> VerificationCensus {
    let (triangles, rejected) = sample_rational_triangles(seed, count as usize);
    let mut census = run_parallel(triangles);
    census.field = FieldSpec::Rational.to_string();
    census.mode = format!("random:{count}");
    census.seed = Some(seed);
    // rejected draws were collinear or had repeated vertices
    census.configurations += rejected;
    census.collinear += rejected;
    census
}

/// Uniform random vertex triples over `F_p`, degenerate ones included.
pub fn random_prime(field: PrimeField, count: u64, seed: u64) -> VerificationCensus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let mut point = || {
        let x = rng.gen_range(0..p) as i64;
        let y = rng.gen_range(0..p) as i64;
        Point::new(field.element(x), field.element(y))
    };
    let triangles: Vec<_> = (0..count).map(|_| [point(), point(), point()]).collect();
    let mut census = run_parallel(triangles);
    census.field = FieldSpec::Prime(field).to_string();
    census.mode = format!("random:{count}");
    census.seed = Some(seed);
    census
}

pub fn verify(field: &FieldSpec, mode: Mode, seed: u64, max_prime: u64) -> Result<VerificationCensus, CliError> {
    match (mode, field) {
        (Mode::Exhaustive, FieldSpec::Rational) => Err(CliError::Config(
            "exhaustive enumeration needs a prime field".into(),
        )),
        (Mode::Exhaustive, FieldSpec::Prime(f)) if f.modulus() > max_prime => {
            Err(CliError::ExhaustiveBoundExceeded {
                modulus: f.modulus(),
                bound: max_prime,
            })
        }
        (Mode::Exhaustive, FieldSpec::Prime(f)) => Ok(exhaustive(*f)),
        (Mode::Random(n), FieldSpec::Rational) => Ok(random_rational(n, seed)),
        (Mode::Random(n), FieldSpec::Prime(f)) => Ok(random_prime(*f, n, seed)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_small_fields() {
        for p in [3, 5, 7] {
            let census = exhaustive(PrimeField::new(p).unwrap());
            assert_eq!(census.configurations, p.pow(4));
            assert_eq!(census.failures, 0, "{:?}", census.failure_examples);
            // A1 fixed: A2 = A1, A3 = A1 or A2 = A3
            assert_eq!(census.duplicate_vertices, 3 * p * p - 2);
            if p % 4 == 1 {
                assert!(census.null_lines > 0);
            } else {
                assert_eq!(census.null_lines, 0);
            }
            assert_eq!(census.null_lines, census.isotropic_segments);
        }
    }

    #[test]
    fn random_modes_are_reproducible() {
        assert_eq!(random_rational(40, 7), random_rational(40, 7));
        let f = PrimeField::new(13).unwrap();
        let a = random_prime(f, 200, 3);
        assert_eq!(a, random_prime(f, 200, 3));
        assert_eq!(a.failures, 0);
        assert_eq!(a.configurations, 200);
    }

    #[test]
    fn sampled_coordinates_stay_in_bounds() {
        let (triangles, _) = sample_rational_triangles(1, 50);
        let bound = rational(COORDINATE_BOUND, 1);
        for p in triangles.iter().flatten() {
            assert!(p.x <= bound && -p.x.clone() <= bound);
            assert!(p.y <= bound && -p.y.clone() <= bound);
        }
    }

    #[test]
    fn merge_is_order_independent_for_counts() {
        let f = PrimeField::new(5).unwrap();
        let a = random_prime(f, 30, 1);
        let b = random_prime(f, 30, 2);
        let mut ab = a.clone();
        ab.merge(b.clone());
        let mut ba = b;
        ba.merge(a);
        assert_eq!(ab.configurations, ba.configurations);
        assert_eq!(ab.null_lines, ba.null_lines);
        assert_eq!(ab.law_evaluations, ba.law_evaluations);
    }

    #[test]
    fn configuration_errors() {
        let f13 = FieldSpec::prime(13).unwrap();
        let f37 = FieldSpec::prime(37).unwrap();
        assert!(matches!(
            verify(&f37, Mode::Exhaustive, 0, DEFAULT_MAX_PRIME),
            Err(CliError::ExhaustiveBoundExceeded { modulus: 37, bound: 31 })
        ));
        assert!(verify(&FieldSpec::Rational, Mode::Exhaustive, 0, 31).is_err());
        assert!(verify(&f13, Mode::Random(10), 0, 31).is_ok());
    }
}
