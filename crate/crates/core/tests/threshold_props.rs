mod common;

use frobsing::algebra::{in_bracket_max, poly_parse, Polynomial, Rational};
use frobsing::budget::Budget;
use frobsing::criteria::{fpure_test_ci, Boundary, Mode, PairSpec};
use frobsing::thresholds::{fpt_report, multiplicity_bounds, nu_sequence, nu_value};
use proptest::prelude::*;

/// `f^k` with every term outside the box `[0, q)^d` discarded after each
/// multiplication; independent of the library's digit-wise powering.
fn naive_truncated_power(f: &Polynomial, k: u64, q: u64) -> Polynomial {
    let mut acc = Polynomial::one(f.ring());
    for _ in 0..k {
        acc = acc.mul(f).truncate(q);
    }
    acc
}

/// Oracle for `x^a − y^b`: the largest `j` with some `k` such that
/// `ak ≤ q−1`, `b(j−k) ≤ q−1` and `C(j, k) ≢ 0 mod p`.
fn binomial_nu(a: u64, b: u64, p: u64, q: u64) -> u64 {
    (0..=2 * q)
        .rev()
        .find(|&j| (0..=j).any(|k| a * k < q && b * (j - k) < q && common::binomial_mod_p(j, k, p) != 0))
        .unwrap()
}

fn binomial(a: u32, b: u32, p: u64) -> Polynomial {
    poly_parse(&format!("x^{a} - y^{b}"), &["x", "y"], p).unwrap()
}

#[test]
fn lucas_oracle_agrees_on_binomials() {
    let budget = Budget::default();
    for p in [2u64, 3, 5, 7, 11, 13] {
        for (a, b) in [(2u32, 3u32), (1, 1), (2, 5)] {
            let f = binomial(a, b, p);
            for e in 1..=2 {
                let q = p.pow(e);
                assert_eq!(
                    nu_value(&f, e, &budget).unwrap(),
                    binomial_nu(a as u64, b as u64, p, q),
                    "x^{a} - y^{b}, p={p}, e={e}"
                );
            }
        }
    }
}

#[test]
fn reported_nu_values_are_exact() {
    let budget = Budget::default();
    let fs = [
        ("x^2 - y^3", vec!["x", "y"]),
        ("x^2 + y^2 + z^2", vec!["x", "y", "z"]),
        ("x*y*z", vec!["x", "y", "z"]),
        ("x^3 + y^3 + x*y", vec!["x", "y"]),
        ("x^2*y + y^4", vec!["x", "y"]),
    ];
    for p in [2u64, 3, 5, 7] {
        for (text, vars) in &fs {
            let f = poly_parse(text, vars, p).unwrap();
            let seq = nu_sequence(&f, 2, &budget).unwrap();
            for entry in &seq.entries {
                let d = vars.len() as u64;
                assert!(entry.j <= d * (entry.q - 1));
                assert!(!in_bracket_max(&naive_truncated_power(&f, entry.j, entry.q), entry.q));
                assert!(in_bracket_max(&naive_truncated_power(&f, entry.j + 1, entry.q), entry.q));
            }
        }
    }
}

#[test]
fn reciprocal_multiplicity_is_always_fpure() {
    let budget = Budget::default();
    let fs = [
        ("x^2 - y^3", vec!["x", "y"]),
        ("x^2 + y^2 + z^2", vec!["x", "y", "z"]),
        ("x^3 + y^3 + z^3", vec!["x", "y", "z"]),
        ("x^2 - y^5", vec!["x", "y"]),
    ];
    for p in [3u64, 5, 7, 13] {
        for (text, vars) in &fs {
            let f = poly_parse(text, vars, p).unwrap();
            let (lower, _) = multiplicity_bounds(&f).unwrap();
            let rep = fpt_report(&f, 2, &budget).unwrap();
            assert!(lower <= rep.upper_capped, "{text} p={p}");
            let pair = PairSpec::new(
                f.ring(),
                vec![],
                Some(Boundary { g: f.clone(), t: lower.clone() }),
                Mode::Weak,
            )
            .unwrap();
            let v = fpure_test_ci(&pair, 2, &budget).unwrap();
            for e in 1..=2 {
                assert_eq!(v.passed_at(e), Some(true), "{text} p={p} e={e}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_criterion_is_a_nu_comparison(
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
        ab in prop::sample::select(vec![(2u32, 3u32), (1, 1), (2, 5), (3, 4)]),
        k in 0i64..=12,
    ) {
        let budget = Budget::default();
        let f = binomial(ab.0, ab.1, p);
        let t = Rational::new(k, 12);
        let pair = PairSpec::new(f.ring(), vec![], Some(Boundary { g: f.clone(), t: t.clone() }), Mode::Weak).unwrap();
        let v = fpure_test_ci(&pair, 2, &budget).unwrap();
        for e in 1..=2u32 {
            let Some(passed) = v.passed_at(e) else { continue };
            let q = p.pow(e);
            let r = t.floor_times(q - 1).unwrap();
            let j = binomial_nu(ab.0 as u64, ab.1 as u64, p, q);
            prop_assert_eq!(passed, r <= j, "t={} e={}", t, e);
        }
    }
}
