use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::{AlgebraError, Exponents, PrimeField};

/// Coefficient field plus variable names; shared by every polynomial of the
/// ring through an `Arc`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Arc<Ring>, AlgebraError> {
        let field = PrimeField::new(p)?;
        Self::with_field(field, vars)
    }

    pub fn with_field<S: AsRef<str>>(
        field: PrimeField,
        vars: &[S],
    ) -> Result<Arc<Ring>, AlgebraError> {
        if vars.is_empty() {
            return Err(AlgebraError::NoVariables);
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(AlgebraError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(Ring { field, vars }))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Sparse multivariate polynomial over a prime field.
///
/// Terms are kept sorted in descending graded-lexicographic order with no
/// zero coefficients and no repeated exponent vectors, so structural
/// equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Exponents, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: u64) -> Self {
        let c = ring.field().reduce(c);
        Self::monomial(ring, Exponents::zero(ring.arity()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, Exponents::unit(ring.arity(), i, 1), 1)
    }

    pub fn monomial(ring: &Arc<Ring>, exps: Exponents, c: u32) -> Self {
        assert_eq!(exps.arity(), ring.arity(), "exponent arity mismatch");
        let c = c % ring.p();
        let terms = if c == 0 { Vec::new() } else { vec![(exps, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// reducing coefficients.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, u32)>,
    {
        let field = ring.field();
        let mut acc: HashMap<Exponents, u32> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.arity(), ring.arity(), "exponent arity mismatch");
            let c = c % field.p();
            if c == 0 {
                continue;
            }
            let slot = acc.entry(e).or_insert(0);
            *slot = field.add(*slot, c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Arc<Ring>, acc: HashMap<Exponents, u32>) -> Self {
        let mut terms: Vec<(Exponents, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_unstable_by(|a, b| b.0.grlex_cmp(&a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms in descending graded-lexicographic order.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Exponents, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.grlex_cmp(&w[1].0).is_gt()));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Exponents, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exponents, u32)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_zero())
    }

    pub fn constant_term(&self) -> u32 {
        self.terms
            .last()
            .filter(|(e, _)| e.is_zero())
            .map_or(0, |(_, c)| *c)
    }

    /// Coefficient of `x^exps` (zero if absent).
    pub fn coefficient(&self, exps: &Exponents) -> u32 {
        self.terms
            .binary_search_by(|(e, _)| exps.grlex_cmp(e))
            .map_or(0, |i| self.terms[i].1)
    }

    /// Largest term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<&(Exponents, u32)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.first().map(|(e, _)| e.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((e0, _)) => {
                let d = e0.degree();
                self.terms.iter().all(|(e, _)| e.degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        self.check_ring(other);
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.grlex_cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Greater,
                _ => std::cmp::Ordering::Less,
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (e, c) = &other.terms[j];
                    out.push((e.clone(), if negate { field.neg(*c) } else { *c }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        field.sub(self.terms[i].1, other.terms[j].1)
                    } else {
                        field.add(self.terms[i].1, other.terms[j].1)
                    };
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), field.neg(*c)))
                .collect(),
        }
    }

    pub fn scale(&self, k: u32) -> Self {
        let field = self.field();
        let k = k % field.p();
        if k == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), field.mul(*c, k)))
                .collect(),
        }
    }

    /// Monic multiple (leading coefficient 1 in graded-lex order).
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field().inv(*c)),
        }
    }

    pub fn mul_monomial(&self, exps: &Exponents, c: u32) -> Result<Self, AlgebraError> {
        let field = self.field();
        let c = c % field.p();
        if c == 0 {
            return Ok(Self::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, k) in &self.terms {
            terms.push((e.checked_add(exps)?, field.mul(*k, c)));
        }
        // multiplication by a monomial preserves graded-lex order
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let field = self.field();
        let p = field.p() as u64;
        let mut acc: HashMap<Exponents, u64> =
            HashMap::with_capacity(self.terms.len().max(other.terms.len()) * 2);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_add(eb)?;
                let slot = acc.entry(e).or_insert(0);
                *slot = (*slot + *ca as u64 * *cb as u64) % p;
            }
        }
        Ok(Self::from_map(
            &self.ring,
            acc.into_iter().map(|(e, c)| (e, c as u32)).collect(),
        ))
    }

    /// Product. Panics on exponent overflow; use [`Polynomial::try_mul`]
    /// where exponents may approach `2^31`.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("exponent overflow in product")
    }

    /// Product reduced modulo `m^[q]`: terms with some exponent `>= q` are
    /// discarded as they are produced.
    pub fn mul_truncated(&self, other: &Self, q: u64) -> Self {
        self.check_ring(other);
        let field = self.field();
        let p = field.p() as u64;
        let mut acc: HashMap<Exponents, u64> = HashMap::new();
        for (ea, ca) in &self.terms {
            if !ea.below(q) {
                continue;
            }
            for (eb, cb) in &other.terms {
                if let Some(e) = ea.add_below(eb, q) {
                    let slot = acc.entry(e).or_insert(0);
                    *slot = (*slot + *ca as u64 * *cb as u64) % p;
                }
            }
        }
        Self::from_map(
            &self.ring,
            acc.into_iter().map(|(e, c)| (e, c as u32)).collect(),
        )
    }

    /// Drops every term lying in `m^[q]`.
    pub fn truncate(&self, q: u64) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.below(q))
                .cloned()
                .collect(),
        }
    }

    /// Unreduced power by square-and-multiply.
    pub fn try_pow(&self, mut k: u64) -> Result<Self, AlgebraError> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor` when the division is exact, `None`
    /// otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.check_ring(divisor);
        let (lead_e, lead_c) = divisor.leading_term()?.clone();
        let field = self.field();
        let lead_inv = field.inv(lead_c);
        // remainder keyed in grlex order; the largest key is always next
        let mut rem: BTreeMap<GrlexKey, u32> = self
            .terms
            .iter()
            .map(|(e, c)| (GrlexKey(e.clone()), *c))
            .collect();
        let mut quot: Vec<(Exponents, u32)> = Vec::new();
        while let Some((GrlexKey(e), c)) = rem.pop_last() {
            if !lead_e.divides(&e) {
                return None;
            }
            let m = lead_e.quotient_of(&e);
            let k = field.mul(c, lead_inv);
            for (de, dc) in divisor.terms.iter().skip(1) {
                let key = GrlexKey(de.checked_add(&m).ok()?);
                let sub = field.mul(k, *dc);
                match rem.entry(key) {
                    Entry::Occupied(mut o) => {
                        let v = field.sub(*o.get(), sub);
                        if v == 0 {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(field.neg(sub));
                    }
                }
            }
            quot.push((m, k));
        }
        Some(Self::from_terms(&self.ring, quot))
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]`.
    pub fn embed(&self, target: &Arc<Ring>, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.ring.arity());
        assert_eq!(target.p(), self.ring.p());
        Self::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                let mut out = Exponents::zero(target.arity());
                for (i, &j) in map.iter().enumerate() {
                    out.entries_mut()[j] += e.get(i);
                }
                (out, *c)
            }),
        )
    }
}

#[derive(PartialEq, Eq)]
struct GrlexKey(Exponents);

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.grlex_cmp(&other.0)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} over F_{})", self.ring.p())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: graded-lex descending, coefficients as residues in
    /// `[0, p)`, e.g. `x^2 + 6*y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || e.is_zero() {
                factors.push(c.to_string());
            }
            for (i, &a) in e.as_slice().iter().enumerate() {
                match a {
                    0 => {}
                    1 => factors.push(self.ring.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars[i], a)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
