use std::sync::Arc;

use frobsing::algebra::{frobenius_power, in_bracket_max, Exponents, FrobeniusPower, Polynomial, Ring};
use frobsing::budget::Budget;
use frobsing::ideal::{
    bracket_power, colon_artinian, groebner, ideal_colon, ideal_member, Ideal, MonomialOrder,
};
use proptest::prelude::*;

type RawPoly = Vec<(Vec<u32>, u32)>;

fn raw_poly(d: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, d), any::<u32>()),
        1..=max_terms,
    )
}

fn build(ring: &Arc<Ring>, raw: &RawPoly) -> Polynomial {
    Polynomial::from_terms(
        ring,
        raw.iter()
            .map(|(e, c)| (Exponents::from_slice(e).unwrap(), c % ring.p())),
    )
}

fn bracket_max(ring: &Arc<Ring>, q: u64) -> Ideal {
    let d = ring.arity();
    Ideal::new(
        ring,
        (0..d)
            .map(|i| Polynomial::monomial(ring, Exponents::unit(d, i, q as u32), 1))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn colon_engines_agree(
        p in prop::sample::select(vec![3u64, 5]),
        e in 1u32..=2,
        d in 1usize..=2,
        h in raw_poly(2, 8, 3),
        probes in prop::collection::vec(raw_poly(2, 10, 4), 50),
    ) {
        let b = Budget::default();
        let ring = Ring::new(p, &["x", "y"][..d]).unwrap();
        let h: RawPoly = h.into_iter().map(|(e, c)| (e[..d].to_vec(), c)).collect();
        let h = build(&ring, &h);
        prop_assume!(!h.is_zero());
        let q = FrobeniusPower::new(p as u32, e).unwrap();
        let a = colon_artinian(q, &h, &b).unwrap();
        let g = ideal_colon(&bracket_max(&ring, q.q()), &Ideal::new(&ring, vec![h.clone()]), &b).unwrap();
        // mutual generator membership
        prop_assert!(a.is_subset_of(&g, &b).unwrap());
        prop_assert!(g.is_subset_of(&a, &b).unwrap());
        // identical normal forms on random probes
        let ga = a.groebner(MonomialOrder::GrevLex, &b).unwrap();
        let gg = g.groebner(MonomialOrder::GrevLex, &b).unwrap();
        for raw in &probes {
            let raw: RawPoly = raw.iter().map(|(e, c)| (e[..d].to_vec(), *c)).collect();
            let f = build(&ring, &raw);
            prop_assert_eq!(ga.normal_form(&f), gg.normal_form(&f));
        }
    }

    #[test]
    fn bracket_power_is_definitional(
        p in prop::sample::select(vec![2u64, 3, 5]),
        e in 1u32..=2,
        gens in prop::collection::vec(raw_poly(2, 3, 3), 1..=2),
    ) {
        let b = Budget::default();
        let ring = Ring::new(p, &["x", "y"]).unwrap();
        let i = Ideal::new(&ring, gens.iter().map(|g| build(&ring, g)).collect());
        let q = FrobeniusPower::new(p as u32, e).unwrap();
        let iq = bracket_power(&i, q).unwrap();
        for g in i.gens() {
            prop_assert!(iq.contains(&frobenius_power(g, q).unwrap(), &b).unwrap());
        }
        let one = FrobeniusPower::new(p as u32, 0).unwrap();
        prop_assert!(bracket_power(&i, one).unwrap().equals(&i, &b).unwrap());
    }

    #[test]
    fn bracket_absorbs(
        p in prop::sample::select(vec![3u64, 5, 7]),
        f in raw_poly(3, 9, 4),
        h in raw_poly(3, 4, 4),
    ) {
        let ring = Ring::new(p, &["x", "y", "z"]).unwrap();
        let (f, h) = (build(&ring, &f), build(&ring, &h));
        let q = p;
        if in_bracket_max(&f, q) {
            prop_assert!(in_bracket_max(&f.mul(&h), q));
        }
        // the part of f in m^[q] always stays there
        let high = Polynomial::from_terms(
            &ring,
            f.terms().iter().filter(|(e, _)| e.as_slice().iter().any(|&a| a as u64 >= q)).cloned(),
        );
        prop_assert!(in_bracket_max(&high.mul(&h), q));
    }

    #[test]
    fn colon_generators_multiply_into_ideal(
        p in prop::sample::select(vec![3u64, 5, 7]),
        i_gens in prop::collection::vec(raw_poly(2, 3, 3), 1..=2),
        j_gens in prop::collection::vec(raw_poly(2, 2, 2), 1..=2),
    ) {
        let b = Budget { dimension: 2_000_000, pairs: 5_000 };
        let ring = Ring::new(p, &["x", "y"]).unwrap();
        let i = Ideal::new(&ring, i_gens.iter().map(|g| build(&ring, g)).collect());
        let j = Ideal::new(&ring, j_gens.iter().map(|g| build(&ring, g)).collect());
        prop_assume!(!j.is_zero());
        match ideal_colon(&i, &j, &b) {
            Ok(c) => {
                for cg in c.gens() {
                    for u in j.gens() {
                        prop_assert!(ideal_member(&cg.mul(u), &i, &b).unwrap());
                    }
                }
            }
            Err(e) => prop_assert!(e.is_budget(), "unexpected error {e}"),
        }
    }

    #[test]
    fn groebner_is_idempotent(
        p in prop::sample::select(vec![3u64, 5, 7]),
        gens in prop::collection::vec(raw_poly(3, 3, 3), 1..=3),
    ) {
        let b = Budget { dimension: 2_000_000, pairs: 5_000 };
        let ring = Ring::new(p, &["x", "y", "z"]).unwrap();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&ring, g)).collect();
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let Ok(gb) = groebner(&ring, &gens, order, &b) else { continue };
            prop_assert!(gb.is_reduced());
            let leads = gb.leading_monomials();
            let divides = |a: &Exponents, b: &Exponents| {
                a.as_slice().iter().zip(b.as_slice()).all(|(x, y)| x <= y)
            };
            for (k, g) in gb.elements().iter().enumerate() {
                prop_assert_eq!(gb.normal_form(g), Polynomial::zero(&ring));
                // g is already in normal form with respect to the others
                for (l, lead) in leads.iter().enumerate() {
                    if l != k {
                        prop_assert!(g.terms().iter().all(|(e, _)| !divides(lead, e)));
                    }
                }
            }
            prop_assert!(gb.s_pair_remainders().iter().all(Polynomial::is_zero));
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
        }
    }
}
