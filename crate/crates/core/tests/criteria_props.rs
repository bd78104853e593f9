use frobsing::algebra::{in_bracket_max, parse_polynomial, Rational};
use frobsing::budget::Budget;
use frobsing::criteria::{
    criterion_product, divisorial_freg_test, fpure_test_ci, fpure_test_general, r_level,
    strong_freg_test_ci, validate_implications, Level, Mode, PairSpec, VerdictKind,
};
use proptest::prelude::*;

/// Pairs with a boundary, at coefficient 1.
fn boundary_pairs() -> Vec<PairSpec> {
    let mut out = Vec::new();
    for p in [5, 7, 13] {
        out.push(PairSpec::parse(p, &["x", "y"], &[], Some(("x^2 - y^3", "1")), Mode::Weak).unwrap());
    }
    for p in [3, 5, 7] {
        out.push(
            PairSpec::parse(p, &["x", "y", "z"], &["x*y - z^2"], Some(("z", "1")), Mode::Weak).unwrap(),
        );
    }
    out.push(PairSpec::parse(5, &["x", "y"], &[], Some(("x*y", "1")), Mode::Weak).unwrap());
    out.push(PairSpec::parse(3, &["x", "y", "z"], &[], Some(("x*y*z", "1")), Mode::Weak).unwrap());
    out
}

fn grid() -> Vec<Rational> {
    (0..=18).map(|k| Rational::new(k, 12)).collect()
}

#[test]
fn passing_persists_for_smaller_boundary_exponent() {
    let b = Budget::default();
    for pair in boundary_pairs() {
        for e in 1..=2 {
            let top = r_level(&pair.t(), pair.p(), e, Mode::Weak).unwrap();
            let mut failed_at: Option<u64> = None;
            for r in 0..=top.r {
                let lv = Level { r, ..top };
                let prod = criterion_product(&pair, &lv, None, &b).unwrap();
                let pass = !in_bracket_max(&prod, lv.q);
                if let Some(r0) = failed_at {
                    assert!(!pass, "{pair} e={e}: fails at r={r0} but passes at r={r}");
                }
                if !pass && failed_at.is_none() {
                    failed_at = Some(r);
                }
            }
        }
    }
}

#[test]
fn refutation_is_stable_in_e_max() {
    let b = Budget::default();
    for base in boundary_pairs() {
        for t in grid() {
            let pair = base.with_t(t).unwrap();
            let mut first: Option<u32> = None;
            for e_max in 1..=3 {
                let v = fpure_test_ci(&pair, e_max, &b).unwrap();
                if let VerdictKind::Refuted { level, .. } = v.verdict {
                    match first {
                        None => first = Some(level),
                        Some(l) => assert_eq!(l, level, "{pair}: refutation level moved"),
                    }
                } else {
                    assert!(first.is_none(), "{pair}: refutation vanished at e_max={e_max}");
                }
            }
        }
    }
}

#[test]
fn general_engine_matches_ci_engine() {
    let b = Budget::default();
    let mut cases: Vec<PairSpec> = Vec::new();
    for p in [3, 5, 7] {
        cases.push(PairSpec::parse(p, &["x", "y", "z", "w"], &["x^4 + y^4 + z^4 + w^4"], None, Mode::Weak).unwrap());
        for t in ["1/2", "1", "3/2"] {
            for mode in [Mode::Weak, Mode::Strong] {
                cases.push(
                    PairSpec::parse(p, &["x", "y", "z"], &["x*y - z^2"], Some(("z", t)), mode).unwrap(),
                );
            }
        }
        cases.push(PairSpec::parse(p, &["x", "y", "z"], &["x^3 + y^3 + z^3"], None, Mode::Weak).unwrap());
        cases.push(PairSpec::parse(p, &["x", "y"], &["x^2 - y^3"], None, Mode::Weak).unwrap());
    }
    for pair in cases {
        let ci = fpure_test_ci(&pair, 2, &b).unwrap();
        let general =
            fpure_test_general(&pair.defining_ideal(), pair.boundary(), pair.mode(), 2, &b).unwrap();
        for e in 1..=2 {
            assert_eq!(ci.passed_at(e), general.passed_at(e), "{pair} level {e}");
        }
        assert_eq!(ci.verdict.name(), general.verdict.name(), "{pair}");
    }
}

#[test]
fn certified_witness_implies_fpure_at_that_level() {
    let b = Budget::default();
    let mut certified = 0;
    for p in [3, 5, 7] {
        for t in ["0", "1/2", "2/3"] {
            let pair =
                PairSpec::parse(p, &["x", "y", "z"], &["x*y - z^2"], Some(("z", t)), Mode::Weak).unwrap();
            for w in ["1", "x", "y", "z", "y*z", "x + y", "x*y*z"] {
                let c = parse_polynomial(w, pair.ring()).unwrap();
                let v = match strong_freg_test_ci(&pair, 2, Some(&c), &b) {
                    Ok(v) => v,
                    Err(_) => continue, // witness rejected, e.g. in the ideal
                };
                if let VerdictKind::CertifiedPositive { level, .. } = v.verdict {
                    certified += 1;
                    let weak = fpure_test_ci(&pair, level, &b).unwrap();
                    assert_eq!(weak.passed_at(level), Some(true), "{pair} c={w}");
                }
            }
        }
    }
    assert!(certified > 0);
}

#[test]
fn divisorial_test_is_strong_regularity_of_quotient() {
    let b = Budget::default();
    let cases: Vec<(u64, Vec<&str>, Vec<&str>, &str)> = vec![
        (5, vec!["x", "y", "z"], vec!["x*y - z^2"], "z"),
        (3, vec!["x", "y", "z"], vec!["x*y - z^2"], "x"),
        (5, vec!["x", "y"], vec![], "x"),
        (5, vec!["x", "y"], vec![], "x*y"),
        (7, vec!["x", "y"], vec![], "x^2 - y^3"),
        (5, vec!["x", "y", "z"], vec![], "x*y - z^2"),
    ];
    for (p, vars, ci, g) in cases {
        let pair = PairSpec::parse(p, &vars, &ci, Some((g, "1")), Mode::Weak).unwrap();
        let mut qci = ci.clone();
        qci.push(g);
        let quotient = PairSpec::parse(p, &vars, &qci, None, Mode::Weak).unwrap();
        let d = divisorial_freg_test(&pair, 2, None, &b);
        let s = strong_freg_test_ci(&quotient, 2, None, &b);
        match (d, s) {
            (Ok(d), Ok(s)) => assert_eq!(d.verdict, s.verdict, "{pair}"),
            (Err(d), Err(s)) => assert_eq!(d.to_string(), s.to_string(), "{pair}"),
            (d, s) => panic!("{pair}: {d:?} vs {s:?}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn implication_rules_hold(pi in 0..8usize, k in 0i64..=24) {
        let b = Budget::default();
        let base = &boundary_pairs()[pi];
        let t = Rational::new(k, 12);
        let pair = base.with_t(t.clone()).unwrap();
        let weak = fpure_test_ci(&pair, 2, &b).unwrap();
        let strong = fpure_test_ci(&pair.with_mode(Mode::Strong), 2, &b).unwrap();
        let lower: Vec<(Rational, _)> = (0..k)
            .map(|j| {
                let tj = Rational::new(j, 12);
                (tj.clone(), fpure_test_ci(&base.with_t(tj).unwrap(), 2, &b).unwrap())
            })
            .collect();
        let report = validate_implications(&pair, &weak, &strong, &lower);
        prop_assert!(report.ok(), "{:?}", report.violations);
    }
}
