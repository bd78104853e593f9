//! Buchberger's algorithm with normal pair selection and the product and
//! chain criteria.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::algebra::{Exponents, Polynomial, PrimeField, Ring};
use crate::budget::Budget;

use super::{IdealError, MonomialOrder};

/// Terms sorted descending in a fixed monomial order.
#[derive(Clone, Debug)]
pub(crate) struct OrderedPoly {
    pub(crate) terms: Vec<(Exponents, u32)>,
}

impl OrderedPoly {
    pub(crate) fn from_poly(f: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms = f.terms().to_vec();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        OrderedPoly { terms }
    }

    pub(crate) fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    fn lead(&self) -> &Exponents {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self, field: PrimeField) {
        if let Some(&(_, c)) = self.terms.first() {
            let inv = field.inv(c);
            for t in self.terms.iter_mut() {
                t.1 = field.mul(t.1, inv);
            }
        }
    }

    /// `self - c · x^m · other`; multiplication by a monomial preserves the
    /// order, so this is a merge.
    fn sub_scaled(
        &self,
        other: &OrderedPoly,
        m: &Exponents,
        c: u32,
        order: MonomialOrder,
        field: PrimeField,
    ) -> OrderedPoly {
        let shifted: Vec<(Exponents, u32)> = other
            .terms
            .iter()
            .map(|(e, k)| {
                (
                    e.checked_add(m).expect("exponent overflow in reduction"),
                    field.mul(*k, c),
                )
            })
            .collect();
        let mut out = Vec::with_capacity(self.terms.len() + shifted.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < shifted.len() {
            let ord = match (self.terms.get(i), shifted.get(j)) {
                (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (e, k) = &shifted[j];
                    out.push((e.clone(), field.neg(*k)));
                    j += 1;
                }
                Ordering::Equal => {
                    let k = field.sub(self.terms[i].1, shifted[j].1);
                    if k != 0 {
                        out.push((self.terms[i].0.clone(), k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        OrderedPoly { terms: out }
    }
}

/// Monomial keyed by a fixed order, so a `BTreeMap` can hold a remainder.
#[derive(Clone, Debug)]
struct Keyed(Exponents, MonomialOrder);

impl PartialEq for Keyed {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for Keyed {}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.cmp(&self.0, &other.0)
    }
}

/// Full normal form of `f` against monic `basis`.
pub(crate) fn reduce(
    f: &OrderedPoly,
    basis: &[OrderedPoly],
    order: MonomialOrder,
    field: PrimeField,
) -> OrderedPoly {
    let mut rem: BTreeMap<Keyed, u32> = f
        .terms
        .iter()
        .map(|(e, c)| (Keyed(e.clone(), order), *c))
        .collect();
    let mut out: Vec<(Exponents, u32)> = Vec::new();
    while let Some((Keyed(e, _), c)) = rem.pop_last() {
        let Some(g) = basis.iter().find(|g| g.lead().divides(&e)) else {
            out.push((e, c));
            continue;
        };
        let m = g.lead().quotient_of(&e);
        let neg = field.neg(c);
        for (ge, gc) in &g.terms[1..] {
            let key = Keyed(ge.checked_add(&m).expect("exponent overflow in reduction"), order);
            let delta = field.mul(*gc, neg);
            match rem.entry(key) {
                Entry::Vacant(v) => {
                    v.insert(delta);
                }
                Entry::Occupied(mut o) => {
                    let sum = field.add(*o.get(), delta);
                    if sum == 0 {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
    }
    OrderedPoly { terms: out }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<OrderedPoly>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|g| g.to_poly(&self.ring)).collect()
    }

    /// Leading monomials in the basis order.
    pub fn leading_monomials(&self) -> Vec<Exponents> {
        self.elements.iter().map(|g| g.lead().clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.lead().is_zero())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let of = OrderedPoly::from_poly(f, self.order);
        reduce(&of, &self.elements, self.order, self.ring.field()).to_poly(&self.ring)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let of = OrderedPoly::from_poly(f, self.order);
        reduce(&of, &self.elements, self.order, self.ring.field()).is_zero()
    }

    /// Normal forms of all S-polynomials of pairs of basis elements.
    pub fn s_pair_remainders(&self) -> Vec<Polynomial> {
        let field = self.ring.field();
        let mut out = Vec::new();
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j], self.order, field);
                out.push(reduce(&s, &self.elements, self.order, field).to_poly(&self.ring));
            }
        }
        out
    }
}

fn s_polynomial(
    a: &OrderedPoly,
    b: &OrderedPoly,
    order: MonomialOrder,
    field: PrimeField,
) -> OrderedPoly {
    let l = a.lead().lcm(b.lead());
    let ma = a.lead().quotient_of(&l);
    let mb = b.lead().quotient_of(&l);
    let zero = OrderedPoly { terms: Vec::new() };
    // both monic: S = ma·a − mb·b
    let sa = zero.sub_scaled(a, &ma, field.neg(1), order, field);
    sa.sub_scaled(b, &mb, 1, order, field)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exponents,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, IdealError> {
    let field = ring.field();
    let mut basis: Vec<OrderedPoly> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut og = reduce(&OrderedPoly::from_poly(g, order), &basis, order, field);
        if !og.is_zero() {
            og.make_monic(field);
            basis.push(og);
        }
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            let lcm = basis[i].lead().lcm(basis[j].lead());
            pending.insert((i, j));
            queue.push(Pair { i, j, lcm });
        }
    }

    let mut processed = 0usize;
    while !queue.is_empty() {
        // normal strategy: smallest lcm first
        let (idx, _) = queue
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm))
            .expect("nonempty");
        let Pair { i, j, lcm } = queue.swap_remove(idx);
        pending.remove(&(i, j));
        processed += 1;
        if processed > budget.pairs {
            return Err(IdealError::PairBudget {
                limit: budget.pairs,
            });
        }

        if basis[i].lead().coprime(basis[j].lead()) {
            continue;
        }
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order, field);
        let mut r = reduce(&s, &basis, order, field);
        if r.is_zero() {
            continue;
        }
        r.make_monic(field);
        let n = basis.len();
        for (k, b) in basis.iter().enumerate() {
            let lcm = b.lead().lcm(r.lead());
            pending.insert((k, n));
            queue.push(Pair { i: k, j: n, lcm });
        }
        basis.push(r);
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        order,
        elements: interreduce(basis, order, field),
        reduced: true,
    })
}

fn interreduce(basis: Vec<OrderedPoly>, order: MonomialOrder, field: PrimeField) -> Vec<OrderedPoly> {
    // minimal basis: drop elements whose leading monomial is divisible by
    // another one (keeping the first of equal leads)
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx
                && h.lead().divides(g.lead())
                && (h.lead() != g.lead() || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<OrderedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let g = &minimal[idx];
        let lead = OrderedPoly {
            terms: vec![g.terms[0].clone()],
        };
        let tail = OrderedPoly {
            terms: g.terms[1..].to_vec(),
        };
        let mut tail = reduce(&tail, &others, order, field);
        let mut terms = lead.terms;
        terms.append(&mut tail.terms);
        let mut r = OrderedPoly { terms };
        r.make_monic(field);
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    out
}
