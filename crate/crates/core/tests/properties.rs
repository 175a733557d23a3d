use proptest::prelude::*;

use rattrig::field::{parse_rational, FieldElement, Fp, PrimeField, Rational, Scalar};
use rattrig::laws::{
    audit_triangle, check_triple_quad, check_triple_spread, quadrea, quadrea_asymmetric,
    quadrea_determinant, QuadranceTriple, SpreadTriple,
};
use rattrig::oracle::{heron_area, FloatTriangle};
use rattrig::planar::{
    analyze_triangle, is_parallel, is_perpendicular, line_through, quadrance, spread_by_definition,
    spread_from_lines, Line, Point,
};
use rattrig::solver::{complete_triangle, solve_q1_from_cross, solve_s3_from_triple_spread, KnownValues};

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| !Scalar::is_zero(x))
}

fn point() -> impl Strategy<Value = Point<Rational>> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn triangle() -> impl Strategy<Value = [Point<Rational>; 3]> {
    [point(), point(), point()].prop_filter("distinct vertices", |[a, b, c]| a != b && a != c && b != c)
}

fn proper_triangle() -> impl Strategy<Value = [Point<Rational>; 3]> {
    triangle().prop_filter("non-collinear", |t| !analyze_triangle(t.clone()).unwrap().collinear)
}

const PRIMES: [u64; 6] = [3, 5, 7, 13, 17, 31];

fn fp_triple() -> impl Strategy<Value = (Fp, Fp, Fp)> {
    (0..PRIMES.len(), any::<i64>(), any::<i64>(), any::<i64>()).prop_map(|(i, a, b, c)| {
        let f = PrimeField::new(PRIMES[i]).unwrap();
        (f.element(a), f.element(b), f.element(c))
    })
}

fn fp_triangle() -> impl Strategy<Value = [Point<Fp>; 3]> {
    (0..PRIMES.len(), prop::array::uniform6(any::<i64>()))
        .prop_map(|(i, c)| {
            let f = PrimeField::new(PRIMES[i]).unwrap();
            let p = |x: i64, y: i64| Point::new(f.element(x), f.element(y));
            [p(c[0], c[1]), p(c[2], c[3]), p(c[4], c[5])]
        })
        .prop_filter("distinct vertices", |[a, b, c]| a != b && a != c && b != c)
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a.clone() * inv, a.one_like());
        }
        prop_assert!(Scalar::is_zero(&(a.clone() + (-a))));
    }

    #[test]
    fn prime_field_axioms((a, b, c) in fp_triple()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a * inv, a.one_like());
        }
        prop_assert!((a - a).is_zero());
    }

    #[test]
    fn square_roots_square_back(a in rational(), (x, _, _) in fp_triple()) {
        let sq = a.clone() * a.clone();
        let roots = sq.square_roots();
        prop_assert!(roots.contains(&a));
        for r in &roots {
            prop_assert_eq!(r.clone() * r.clone(), sq.clone());
        }
        for r in x.square_roots() {
            prop_assert_eq!(r * r, x);
        }
        if roots.len() == 2 {
            prop_assert_eq!(roots[0].clone(), -roots[1].clone());
        }
    }

    #[test]
    fn element_text_round_trips(a in rational(), (x, _, _) in fp_triple()) {
        for e in [FieldElement::Rational(a), FieldElement::Prime(x)] {
            let text = e.to_string();
            let back: FieldElement = text.parse().unwrap();
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back, e);
        }
    }

    #[test]
    fn parsing_canonicalizes(n in -500i64..500, d in 1i64..50, k in 1i64..20) {
        // n/d and (kn)/(kd) parse to the same canonical string
        let a = parse_rational(&format!("{n}/{d}")).unwrap();
        let b = parse_rational(&format!("{}/{}", k * n, k * d)).unwrap();
        prop_assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn quadrance_is_symmetric_and_positive(a in point(), b in point()) {
        let q = quadrance(&a, &b).unwrap();
        prop_assert_eq!(&q, &quadrance(&b, &a).unwrap());
        prop_assert_eq!(Scalar::is_zero(&q), a == b);
        prop_assert!(q >= Rational::from_integer(0.into()));
    }

    #[test]
    fn spread_is_symmetric_and_scale_free(
        a1 in nonzero_rational(), b1 in rational(), c1 in rational(),
        a2 in rational(), b2 in nonzero_rational(), c2 in rational(),
        k1 in nonzero_rational(), k2 in nonzero_rational(),
    ) {
        let l1 = Line::new(a1.clone(), b1.clone(), c1.clone()).unwrap();
        let l2 = Line::new(a2.clone(), b2.clone(), c2.clone()).unwrap();
        let scaled1 = Line::new(k1.clone() * a1, k1.clone() * b1, k1 * c1).unwrap();
        let scaled2 = Line::new(k2.clone() * a2, k2.clone() * b2, k2 * c2).unwrap();
        let s = spread_from_lines(&l1, &l2).unwrap();
        prop_assert_eq!(&s, &spread_from_lines(&l2, &l1).unwrap());
        prop_assert_eq!(&s, &spread_from_lines(&scaled1, &scaled2).unwrap());
        prop_assert_eq!(is_perpendicular(&l1, &l2), s == s.one_like());
        prop_assert_eq!(is_parallel(&l1, &l2), Scalar::is_zero(&s));
    }

    #[test]
    fn spread_does_not_depend_on_the_chosen_point([a, b, c] in proper_triangle(), t in nonzero_rational()) {
        let l1 = line_through(&a, &b).unwrap();
        let l2 = line_through(&a, &c).unwrap();
        let expected = spread_from_lines(&l1, &l2).unwrap();
        // b' = a + t (b - a) is another point on l1
        let moved = Point::new(
            a.x.clone() + t.clone() * (b.x.clone() - a.x.clone()),
            a.y.clone() + t * (b.y.clone() - a.y.clone()),
        );
        prop_assert_eq!(&spread_by_definition(&l1, &l2, &b).unwrap(), &expected);
        prop_assert_eq!(&spread_by_definition(&l1, &l2, &moved).unwrap(), &expected);
    }

    #[test]
    fn pythagoras_both_directions(x in nonzero_rational(), y in rational(), k in nonzero_rational(), [p, q, r] in proper_triangle()) {
        // legs (x, y) and k (-y, x) are perpendicular at the origin
        let o = Point::new(x.zero_like(), x.zero_like());
        let leg1 = Point::new(x.clone(), y.clone());
        let leg2 = Point::new(-(k.clone() * y), k * x);
        let report = analyze_triangle([leg1, leg2, o]).unwrap();
        prop_assert!(rattrig::laws::check_pythagoras(&report.quadrances).holds);
        prop_assert_eq!(&report.spreads.unwrap().s3, &Rational::from_integer(1.into()));

        let report = analyze_triangle([p.clone(), q.clone(), r.clone()]).unwrap();
        let perpendicular = is_perpendicular(&line_through(&r, &p).unwrap(), &line_through(&r, &q).unwrap());
        prop_assert_eq!(rattrig::laws::check_pythagoras(&report.quadrances).holds, perpendicular);
    }

    #[test]
    fn quadrea_forms_agree(q1 in rational(), q2 in rational(), q3 in rational()) {
        let t = QuadranceTriple::new(q1, q2, q3);
        prop_assert_eq!(quadrea(&t), quadrea_asymmetric(&t));
        prop_assert_eq!(quadrea(&t), quadrea_determinant(&t));
    }

    #[test]
    fn quadrea_forms_agree_mod_p((a, b, c) in fp_triple()) {
        let t = QuadranceTriple::new(a, b, c);
        prop_assert_eq!(quadrea(&t), quadrea_asymmetric(&t));
        prop_assert_eq!(quadrea(&t), quadrea_determinant(&t));
    }

    #[test]
    fn triple_spread_deforms_triple_quad(s1 in rational(), s2 in rational(), s3 in rational()) {
        let four = Rational::from_integer(4.into());
        let tq = check_triple_quad(&QuadranceTriple::new(s1.clone(), s2.clone(), s3.clone())).value;
        let tsf = check_triple_spread(&SpreadTriple::new(s1.clone(), s2.clone(), s3.clone())).value;
        prop_assert_eq!(tq - tsf, four * s1 * s2 * s3);
    }

    #[test]
    fn every_law_holds_over_the_rationals(t in triangle()) {
        let report = analyze_triangle(t).unwrap();
        for r in audit_triangle(&report) {
            prop_assert!(r.holds, "{} residual {}", r.law, r.value);
        }
    }

    #[test]
    fn every_law_holds_over_prime_fields(t in fp_triangle()) {
        let report = analyze_triangle(t).unwrap();
        for r in audit_triangle(&report) {
            prop_assert!(r.holds, "{} residual {}", r.law, r.value);
        }
        let isotropic = report.quadrances.as_array().iter().filter(|q| q.is_zero()).count();
        let null = (1..=3).filter(|&i| report.side_line(i).is_null()).count();
        prop_assert_eq!(isotropic, null);
    }

    #[test]
    fn altitude_areas_agree([a, b, c] in proper_triangle()) {
        let report = analyze_triangle([a, b, c]).unwrap();
        for side in 1..=3 {
            let h = rattrig::laws::altitude_quadrance(&report, side).unwrap();
            let area = rattrig::laws::area_sq_from_altitude(report.quadrances.get(side), &h);
            prop_assert_eq!(&area, &report.area_sq);
        }
    }

    #[test]
    fn completion_reproduces_spreads(t in proper_triangle()) {
        let report = analyze_triangle(t).unwrap();
        let q = &report.quadrances;
        let known = KnownValues::default()
            .with_quadrance(1, q.q1.clone())
            .with_quadrance(2, q.q2.clone())
            .with_quadrance(3, q.q3.clone());
        let done = complete_triangle(&known).unwrap();
        prop_assert_eq!(done.candidates.len(), 1);
        prop_assert_eq!(done.candidates[0].spread_triple(), report.spreads.clone());

        // dropping Q1 and keeping s1 recovers Q1 among the cross-law roots
        let known = KnownValues::default()
            .with_quadrance(2, q.q2.clone())
            .with_quadrance(3, q.q3.clone())
            .with_spread(1, report.spreads.clone().unwrap().s1);
        let done = complete_triangle(&known).unwrap();
        prop_assert!(done.candidates.iter().any(|c| c.quadrances.as_ref() == Some(q)));
        for c in &done.candidates {
            let s = c.spread_triple().unwrap();
            prop_assert!(check_triple_spread(&s).holds);
            for i in 1..=3 {
                prop_assert!(rattrig::laws::check_cross_law_at(c.quadrances.as_ref().unwrap(), s.get(i), i).holds);
            }
        }
    }

    #[test]
    fn solution_sets_match_brute_force((a, b, c) in fp_triple()) {
        let f = a.field();
        let cross = solve_q1_from_cross(&a, &b, &c);
        let four = f.element(4);
        let expected: Vec<Fp> = f
            .elements()
            .filter(|x| ((*x - a - b) * (*x - a - b) - four * a * b * (f.one() - c)).is_zero())
            .collect();
        prop_assert_eq!(cross.roots, expected);

        let tsf = solve_s3_from_triple_spread(&a, &b);
        let expected: Vec<Fp> = f
            .elements()
            .filter(|x| check_triple_spread(&SpreadTriple::new(a, b, *x)).holds)
            .collect();
        prop_assert_eq!(tsf.roots, expected);
    }

    #[test]
    fn heron_agrees_with_quadrea(t in proper_triangle()) {
        let report = analyze_triangle(t.clone()).unwrap();
        let v = t.map(|p| [Scalar::to_f64(&p.x).unwrap(), Scalar::to_f64(&p.y).unwrap()]);
        let float = FloatTriangle::new(v);
        prop_assume!(float.aspect_ratio() < rattrig::oracle::MAX_ASPECT_RATIO);
        let [d1, d2, d3] = float.lengths;
        let heron = heron_area(d1, d2, d3).unwrap();
        let exact = Scalar::to_f64(&report.area_sq).unwrap();
        prop_assert!(rattrig::oracle::deviation(exact, heron * heron) < rattrig::oracle::RANDOM_TOLERANCE);
        prop_assert!((float.angle_sum() - std::f64::consts::PI).abs() < 1e-9);
    }
}
