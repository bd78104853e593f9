//! Colon ideals, by two independent routes:
//!
//! * [`colon_artinian`] computes `(m^[q] : h)` as the kernel of
//!   multiplication by `h` on the `q^d`-dimensional algebra `R/m^[q]`;
//! * [`ideal_colon`] computes `(I : J)` for arbitrary ideals through
//!   intersections obtained by eliminating an auxiliary variable.

use std::sync::Arc;

use crate::algebra::{Exponents, FrobeniusPower, Polynomial, Ring};
use crate::budget::Budget;

use super::groebner::groebner;
use super::linalg::{Echelon, Insert, SparseVec};
use super::{Ideal, IdealError, MonomialOrder};

/// `(m^[q] : h)` by exact linear algebra on `R/m^[q]`.
///
/// Columns (monomials `x^a` of the box `[0, q)^d`) are processed in
/// ascending graded-lex order; each image `h·x^a` is reduced against the
/// earlier images. A column that reduces to zero yields a kernel vector
/// whose leading monomial is `x^a`. The kernel is an ideal of `R/m^[q]`, so
/// kernel vectors whose leading monomials are minimal under divisibility,
/// together with `m^[q]`, generate it; columns divisible by an already
/// found leading monomial are skipped.
pub fn colon_artinian(
    q: FrobeniusPower,
    h: &Polynomial,
    budget: &Budget,
) -> Result<Ideal, IdealError> {
    let ring = h.ring().clone();
    let d = ring.arity();
    let qq = q.q();
    let required = (qq as u128).pow(d as u32);
    if required > budget.dimension as u128 {
        return Err(IdealError::DimensionBudget {
            required,
            limit: budget.dimension,
        });
    }
    let bracket: Vec<Polynomial> = (0..d)
        .map(|i| Polynomial::monomial(&ring, Exponents::unit(d, i, qq as u32), 1))
        .collect();
    let h = h.truncate(qq);
    if h.is_zero() {
        return Ok(Ideal::new(&ring, vec![Polynomial::one(&ring)]));
    }

    let index = |a: &Exponents| -> u64 {
        a.as_slice()
            .iter()
            .rev()
            .fold(0u64, |acc, &x| acc * qq + x as u64)
    };
    let decode = |mut idx: u64| -> Exponents {
        let mut v = vec![0u32; d];
        for slot in v.iter_mut() {
            *slot = (idx % qq) as u32;
            idx /= qq;
        }
        Exponents::from_slice(&v).expect("bounded by q")
    };

    let mut columns: Vec<Exponents> = (0..required as u64).map(decode).collect();
    columns.sort_unstable_by(|a, b| a.grlex_cmp(b));

    let field = ring.field();
    let mut echelon = Echelon::new(field);
    let mut leads: Vec<Exponents> = Vec::new();
    let mut kernel: Vec<Polynomial> = Vec::new();
    for a in &columns {
        if leads.iter().any(|l| l.divides(a)) {
            continue;
        }
        let mut image: SparseVec = h
            .terms()
            .iter()
            .filter_map(|(b, c)| a.add_below(b, qq).map(|s| (index(&s), *c)))
            .collect();
        image.sort_unstable_by_key(|t| t.0);
        if let Insert::Dependent(combo) = echelon.insert(image, vec![(index(a), 1)]) {
            let poly = Polynomial::from_terms(
                &ring,
                combo.into_iter().map(|(i, c)| (decode(i), c)),
            );
            debug_assert_eq!(poly.leading_term().map(|t| &t.0), Some(a));
            leads.push(a.clone());
            kernel.push(poly);
        }
    }

    let mut gens = bracket;
    gens.extend(kernel);
    Ok(Ideal::new(&ring, gens))
}

/// Ring with one extra variable in front, used for elimination.
fn elimination_ring(ring: &Arc<Ring>) -> Arc<Ring> {
    let mut vars = vec!["%t".to_string()];
    vars.extend(ring.vars().iter().cloned());
    Ring::with_field(ring.field(), &vars).expect("fresh variable name")
}

fn lift(f: &Polynomial, ext: &Arc<Ring>) -> Polynomial {
    let map: Vec<usize> = (1..=f.ring().arity()).collect();
    f.embed(ext, &map)
}

fn project(f: &Polynomial, ring: &Arc<Ring>) -> Polynomial {
    Polynomial::from_terms(
        ring,
        f.terms().iter().map(|(e, c)| {
            debug_assert_eq!(e.get(0), 0);
            (
                Exponents::from_slice(&e.as_slice()[1..]).expect("same bounds"),
                *c,
            )
        }),
    )
}

/// `A ∩ B` as the `t`-free part of `t·A + (1−t)·B`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal, IdealError> {
    let ring = a.ring().clone();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::new(&ring, Vec::new()));
    }
    let ext = elimination_ring(&ring);
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let mut gens: Vec<Polynomial> = a.gens().iter().map(|g| t.mul(&lift(g, &ext))).collect();
    gens.extend(b.gens().iter().map(|g| one_minus_t.mul(&lift(g, &ext))));
    let gb = groebner(&ext, &gens, MonomialOrder::BlockElimination(1), budget)?;
    let free: Vec<Polynomial> = gb
        .elements()
        .into_iter()
        .filter(|g| g.terms().iter().all(|(e, _)| e.get(0) == 0))
        .map(|g| project(&g, &ring))
        .collect();
    Ok(Ideal::new(&ring, free))
}

/// `(I : u)` for a single nonzero `u`: `(I ∩ (u)) / u`.
pub fn colon_by_element(i: &Ideal, u: &Polynomial, budget: &Budget) -> Result<Ideal, IdealError> {
    let ring = i.ring().clone();
    let meet = intersect(i, &Ideal::new(&ring, vec![u.clone()]), budget)?;
    let mut gens = Vec::with_capacity(meet.gens().len());
    for g in meet.gens() {
        gens.push(g.exact_div(u).ok_or(IdealError::Internal(
            "intersection generator not divisible by colon element",
        ))?);
    }
    Ok(Ideal::new(&ring, gens))
}

/// `(I : J) = ∩_u (I : u)` over the generators `u` of `J`, returned as a
/// reduced grevlex Gröbner basis and verified by `c·u ∈ I` for every
/// generator pair.
pub fn ideal_colon(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal, IdealError> {
    let ring = i.ring().clone();
    if j.is_zero() {
        return Err(IdealError::ZeroColonDivisor);
    }
    let mut acc: Option<Ideal> = None;
    for u in j.gens() {
        let c = colon_by_element(i, u, budget)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c, budget)?,
        });
    }
    let acc = acc.expect("J has a generator");
    let gb = groebner(&ring, acc.gens(), MonomialOrder::GrevLex, budget)?;
    let result = Ideal::new(&ring, gb.elements());

    let i_basis = i.groebner(MonomialOrder::GrevLex, budget)?;
    for c in result.gens() {
        for u in j.gens() {
            if !i_basis.contains(&c.mul(u)) {
                return Err(IdealError::Internal("colon verification failed"));
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(
            ring,
            gens.iter()
                .map(|g| parse_polynomial(g, ring).unwrap())
                .collect(),
        )
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.equals(b, &Budget::default()).unwrap()
    }

    #[test]
    fn artinian_colon_by_unit() {
        let ring = Ring::new(3, &["x", "y"]).unwrap();
        let q = FrobeniusPower::new(3, 1).unwrap();
        let c = colon_artinian(q, &Polynomial::one(&ring), &Budget::default()).unwrap();
        assert!(same(&c, &ideal(&ring, &["x^3", "y^3"])));
    }

    #[test]
    fn artinian_colon_univariate() {
        let ring = Ring::new(5, &["x"]).unwrap();
        let q = FrobeniusPower::new(5, 1).unwrap();
        let h = parse_polynomial("x^4", &ring).unwrap();
        let c = colon_artinian(q, &h, &Budget::default()).unwrap();
        assert!(same(&c, &ideal(&ring, &["x"])));
    }

    #[test]
    fn artinian_colon_monomial() {
        let ring = Ring::new(3, &["x", "y"]).unwrap();
        let q = FrobeniusPower::new(3, 1).unwrap();
        let h = parse_polynomial("x*y", &ring).unwrap();
        let c = colon_artinian(q, &h, &Budget::default()).unwrap();
        assert!(same(&c, &ideal(&ring, &["x^2", "y^2"])));
    }

    #[test]
    fn artinian_dimension_budget() {
        let ring = Ring::new(5, &["x", "y", "z"]).unwrap();
        let q = FrobeniusPower::new(5, 2).unwrap();
        let small = Budget {
            dimension: 1000,
            pairs: 10,
        };
        match colon_artinian(q, &Polynomial::var(&ring, 0), &small) {
            Err(IdealError::DimensionBudget { required, .. }) => assert_eq!(required, 15625),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn principal_colon_in_ufd() {
        let ring = Ring::new(3, &["x", "y", "z"]).unwrap();
        let i = ideal(&ring, &["(x*y - z^2)^3"]);
        let j = ideal(&ring, &["x*y - z^2"]);
        let c = ideal_colon(&i, &j, &Budget::default()).unwrap();
        assert!(same(&c, &ideal(&ring, &["(x*y - z^2)^2"])));
    }

    #[test]
    fn monomial_colon() {
        let ring = Ring::new(5, &["x", "y"]).unwrap();
        let i = ideal(&ring, &["x^3", "y^3"]);
        let j = ideal(&ring, &["x", "y"]);
        let c = ideal_colon(&i, &j, &Budget::default()).unwrap();
        assert!(same(&c, &ideal(&ring, &["x^3", "y^3", "x^2*y^2"])));
    }

    #[test]
    fn colon_by_self_is_unit() {
        let ring = Ring::new(7, &["x", "y"]).unwrap();
        let i = ideal(&ring, &["x^2 - y", "x*y"]);
        let c = ideal_colon(&i, &i, &Budget::default()).unwrap();
        assert!(c.contains(&Polynomial::one(&ring), &Budget::default()).unwrap());
    }

    #[test]
    fn zero_divisor_ideal_rejected() {
        let ring = Ring::new(7, &["x"]).unwrap();
        let i = ideal(&ring, &["x"]);
        let z = Ideal::new(&ring, vec![]);
        assert!(matches!(
            ideal_colon(&i, &z, &Budget::default()),
            Err(IdealError::ZeroColonDivisor)
        ));
    }
}
