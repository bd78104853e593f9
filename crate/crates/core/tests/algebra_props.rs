use std::sync::Arc;

use frobsing::algebra::{
    frobenius_power, parse_polynomial, pow_mod_bracket, square_and_multiply_truncated, Exponents, FrobeniusPower, Polynomial,
    Rational, Ring,
};
use proptest::prelude::*;

const PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

fn ring(p: u64, d: usize) -> Arc<Ring> {
    Ring::new(p, &["x", "y", "z"][..d]).unwrap()
}

type RawPoly = Vec<(Vec<u32>, u32)>;

fn raw_poly(d: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, d), any::<u32>()),
        0..=max_terms,
    )
}

fn build(ring: &Arc<Ring>, raw: &RawPoly) -> Polynomial {
    Polynomial::from_terms(
        ring,
        raw.iter()
            .map(|(e, c)| (Exponents::from_slice(e).unwrap(), c % ring.p())),
    )
}

/// Deletes every term with some exponent `>= q`.
fn drop_bracket(f: &Polynomial, q: u64) -> Polynomial {
    Polynomial::from_terms(
        f.ring(),
        f.terms()
            .iter()
            .filter(|(e, _)| e.as_slice().iter().all(|&a| (a as u64) < q))
            .cloned(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_is_a_ring_map(
        pi in 0..PRIMES.len(),
        e in 1u32..=2,
        f in raw_poly(2, 4, 4),
        g in raw_poly(2, 4, 4),
    ) {
        let p = PRIMES[pi];
        let r = ring(p, 2);
        let (f, g) = (build(&r, &f), build(&r, &g));
        let q = FrobeniusPower::new(p as u32, e).unwrap();
        let fr = |h: &Polynomial| frobenius_power(h, q).unwrap();
        prop_assert_eq!(fr(&f.mul(&g)), fr(&f).mul(&fr(&g)));
        prop_assert_eq!(fr(&f.add(&g)), fr(&f).add(&fr(&g)));
    }

    #[test]
    fn bracket_power_matches_naive(
        pi in 0..3usize,
        e in 1u32..=2,
        k in 0u64..=12,
        f in raw_poly(2, 3, 3),
    ) {
        let p = PRIMES[pi];
        let r = ring(p, 2);
        let f = build(&r, &f);
        let q = FrobeniusPower::new(p as u32, e).unwrap();
        let mut naive = Polynomial::one(&r);
        for _ in 0..k {
            naive = naive.mul(&f);
        }
        prop_assert_eq!(pow_mod_bracket(&f, k, q), drop_bracket(&naive, q.q()));
    }

    #[test]
    fn digitwise_and_binary_powering_agree(
        pi in 0..4usize,
        e in 1u32..=3,
        k in 0u64..200,
        f in raw_poly(2, 3, 3),
    ) {
        let p = PRIMES[pi];
        let r = ring(p, 2);
        let f = build(&r, &f);
        let q = FrobeniusPower::new(p as u32, e).unwrap();
        prop_assert_eq!(pow_mod_bracket(&f, k, q), square_and_multiply_truncated(&f, k, q.q()));
    }

    #[test]
    fn print_parse_round_trip(pi in 0..PRIMES.len(), f in raw_poly(3, 6, 6)) {
        let r = ring(PRIMES[pi], 3);
        let f = build(&r, &f);
        prop_assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn rational_sum_is_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let s = Rational::new(a, b) + Rational::new(c, d);
        let (n, m) = (a * d + c * b, b * d);
        let g = num_integer::Integer::gcd(&n, &m);
        prop_assert_eq!(s.to_string(), if m / g == 1 { format!("{}", n / g) } else { format!("{}/{}", n / g, m / g) });
        prop_assert!(*s.denom() > num_bigint::BigInt::from(0));
    }
}
