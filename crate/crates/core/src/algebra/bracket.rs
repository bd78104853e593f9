//! Frobenius powers and arithmetic modulo the bracket power
//! `m^[q] = (x_1^q, ..., x_d^q)`.
//!
//! Powers are evaluated digit by digit in base `p`: for `k = Σ k_i p^i`,
//! `f^k = Π_i F^i(f^{k_i})` where `F^i` is the termwise `p^i`-th power. The
//! factor `F^i(h)` only survives modulo `m^[p^e]` through the terms of `h`
//! lying outside `m^[p^(e-i)]`, so each digit power is computed and kept
//! modulo the smaller bracket power.

use serde::Serialize;

use super::{AlgebraError, Polynomial};

/// `q = p^e` for a fixed prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FrobeniusPower {
    p: u32,
    e: u32,
    q: u64,
}

impl FrobeniusPower {
    pub fn new(p: u32, e: u32) -> Result<Self, AlgebraError> {
        let q = (p as u64)
            .checked_pow(e)
            .filter(|&q| q < super::MAX_EXPONENT)
            .ok_or(AlgebraError::ExponentOverflow)?;
        Ok(FrobeniusPower { p, e, q })
    }

    /// Recovers `e` from `q`; `None` unless `q` is a power of `p`.
    pub fn from_q(p: u32, q: u64) -> Option<Self> {
        let mut e = 0;
        let mut v = 1u64;
        while v < q {
            v = v.checked_mul(p as u64)?;
            e += 1;
        }
        (v == q).then(|| FrobeniusPower::new(p, e).ok()).flatten()
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    /// `p^(e-i)`, or 1 once `i >= e`.
    fn residual(&self, i: u32) -> u64 {
        if i >= self.e {
            1
        } else {
            (self.p as u64).pow(self.e - i)
        }
    }
}

/// `f^q`, computed termwise as `Σ c^q x^(q·a)`.
pub fn frobenius_power(f: &Polynomial, q: FrobeniusPower) -> Result<Polynomial, AlgebraError> {
    assert_eq!(f.ring().p(), q.p(), "Frobenius power of the wrong characteristic");
    let field = f.field();
    let mut terms = Vec::with_capacity(f.len());
    for (e, c) in f.terms() {
        terms.push((e.checked_scale(q.q())?, field.pow(*c, q.q())));
    }
    // scaling exponents preserves graded-lex order
    Ok(Polynomial::from_sorted_terms(f.ring(), terms))
}

/// `F^i(h)` modulo `m^[limit]`, where `F^i` raises to the `p^i`-th power.
fn frobenius_truncated(h: &Polynomial, p: u32, i: u32, limit: u64) -> Polynomial {
    let scale = (p as u64).checked_pow(i);
    let mut terms = Vec::new();
    for (e, c) in h.terms() {
        let survives = match scale {
            Some(s) => e.as_slice().iter().all(|&a| (a as u64).saturating_mul(s) < limit),
            None => e.is_zero(),
        };
        if survives {
            let scaled = match scale {
                Some(s) => e.checked_scale(s).expect("bounded by limit"),
                None => e.clone(),
            };
            // c^(p^i) = c in F_p
            terms.push((scaled, *c));
        }
    }
    Polynomial::from_sorted_terms(h.ring(), terms)
}

/// `true` iff `f ∈ m^[q]`: every term has some exponent `>= q`.
pub fn in_bracket_max(f: &Polynomial, q: u64) -> bool {
    f.terms().iter().all(|(e, _)| !e.below(q))
}

/// Power of `f` modulo `m^[q]`: every stored exponent is `< q`.
pub fn pow_mod_bracket(f: &Polynomial, k: u64, q: FrobeniusPower) -> Polynomial {
    BracketPowers::new(std::slice::from_ref(f), q, None)
        .power_product(&[k])
        .expect("no term budget")
}

/// Square-and-multiply modulo `m^[limit]`, discarding terms after each
/// product.
pub fn square_and_multiply_truncated(f: &Polynomial, mut k: u64, limit: u64) -> Polynomial {
    let mut acc = Polynomial::one(f.ring()).truncate(limit);
    let mut base = f.truncate(limit);
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul_truncated(&base, limit);
        }
        k >>= 1;
        if k > 0 && !base.is_zero() {
            base = base.mul_truncated(&base, limit);
        }
    }
    acc
}

/// Cached digit powers of a fixed list of factors, for repeated evaluation
/// of products `Π_j f_j^(k_j)` modulo `m^[q]`.
pub struct BracketPowers {
    factors: Vec<Polynomial>,
    q: FrobeniusPower,
    term_limit: Option<usize>,
    // cache[j][i][k] = f_j^k mod m^[p^(e-i)] for k < p
    cache: Vec<Vec<Vec<Polynomial>>>,
}

impl BracketPowers {
    pub fn new(factors: &[Polynomial], q: FrobeniusPower, term_limit: Option<usize>) -> Self {
        for f in factors {
            assert_eq!(f.ring().p(), q.p(), "factor of the wrong characteristic");
        }
        BracketPowers {
            factors: factors.to_vec(),
            q,
            term_limit,
            cache: vec![Vec::new(); factors.len()],
        }
    }

    pub fn q(&self) -> FrobeniusPower {
        self.q
    }

    fn check(&self, h: &Polynomial) -> Result<(), AlgebraError> {
        match self.term_limit {
            Some(limit) if h.len() > limit => Err(AlgebraError::TermBudget {
                terms: h.len(),
                limit,
            }),
            _ => Ok(()),
        }
    }

    fn digit_power(&mut self, j: usize, level: u32, k: u32) -> Result<&Polynomial, AlgebraError> {
        let limit = self.q.residual(level);
        let level = level as usize;
        while self.cache[j].len() <= level {
            let lvl = self.cache[j].len() as u32;
            let lim = self.q.residual(lvl);
            let f = &self.factors[j];
            self.cache[j].push(vec![Polynomial::one(f.ring()).truncate(lim)]);
        }
        while self.cache[j][level].len() <= k as usize {
            let prev = self.cache[j][level].last().expect("seeded with 1");
            let next = prev.mul_truncated(&self.factors[j], limit);
            self.check(&next)?;
            self.cache[j][level].push(next);
        }
        Ok(&self.cache[j][level][k as usize])
    }

    /// `Π_j f_j^(exps[j])` modulo `m^[q]`.
    pub fn power_product(&mut self, exps: &[u64]) -> Result<Polynomial, AlgebraError> {
        assert_eq!(exps.len(), self.factors.len());
        let p = self.q.p() as u64;
        let ring = match self.factors.first() {
            Some(f) => f.ring().clone(),
            None => panic!("empty factor list"),
        };
        let q = self.q.q();
        let mut digits: Vec<Vec<u32>> = exps
            .iter()
            .map(|&k| {
                let mut ds = Vec::new();
                let mut k = k;
                while k > 0 {
                    ds.push((k % p) as u32);
                    k /= p;
                }
                ds
            })
            .collect();
        let levels = digits.iter().map(Vec::len).max().unwrap_or(0);
        for ds in digits.iter_mut() {
            ds.resize(levels, 0);
        }
        let mut acc = Polynomial::one(&ring).truncate(q);
        // high levels first: their factors are the sparsest
        for level in (0..levels).rev() {
            let limit = self.q.residual(level as u32);
            let mut piece = Polynomial::one(&ring).truncate(limit);
            for (j, ds) in digits.iter().enumerate() {
                let k = ds[level];
                if k == 0 {
                    continue;
                }
                let dp = self.digit_power(j, level as u32, k)?.clone();
                piece = piece.mul_truncated(&dp, limit);
                self.check(&piece)?;
            }
            let lifted = frobenius_truncated(&piece, self.q.p(), level as u32, q);
            acc = acc.mul_truncated(&lifted, q);
            self.check(&acc)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{poly_parse, Exponents};

    #[test]
    fn frobenius_power_from_q() {
        assert_eq!(FrobeniusPower::from_q(5, 25).map(|q| q.e()), Some(2));
        assert_eq!(FrobeniusPower::from_q(5, 1).map(|q| q.e()), Some(0));
        assert!(FrobeniusPower::from_q(5, 20).is_none());
    }

    #[test]
    fn cusp_cubed_mod_bracket_five() {
        let f = poly_parse("x^2 - y^3", &["x", "y"], 5).unwrap();
        let q = FrobeniusPower::new(5, 1).unwrap();
        let h = pow_mod_bracket(&f, 3, q);
        assert_eq!(h.len(), 1);
        assert_eq!(h.coefficient(&Exponents::from_slice(&[4, 3]).unwrap()), 2);
        assert!(!in_bracket_max(&h, 5));
    }

    #[test]
    fn trivial_powers() {
        let f = poly_parse("x", &["x", "y"], 3).unwrap();
        let q = FrobeniusPower::new(3, 2).unwrap();
        assert_eq!(
            pow_mod_bracket(&f, 8, q),
            poly_parse("x^8", &["x", "y"], 3).unwrap()
        );
        assert!(pow_mod_bracket(&f, 9, q).is_zero());
        let g = poly_parse("x*y + y^2 + 1", &["x", "y"], 3).unwrap();
        assert_eq!(pow_mod_bracket(&g, 0, q).to_string(), "1");
    }

    #[test]
    fn frobenius_examples() {
        let f = poly_parse("x*y - z^2", &["x", "y", "z"], 5).unwrap();
        let q = FrobeniusPower::new(5, 1).unwrap();
        assert_eq!(
            frobenius_power(&f, q).unwrap(),
            poly_parse("x^5*y^5 - z^10", &["x", "y", "z"], 5).unwrap()
        );
        let g = poly_parse("2*x", &["x"], 3).unwrap();
        let q3 = FrobeniusPower::new(3, 1).unwrap();
        assert_eq!(frobenius_power(&g, q3).unwrap().to_string(), "2*x^3");
    }

    #[test]
    fn term_budget_is_enforced() {
        let f = poly_parse("x + y + z", &["x", "y", "z"], 7).unwrap();
        let q = FrobeniusPower::new(7, 1).unwrap();
        let mut bp = BracketPowers::new(&[f], q, Some(5));
        assert!(matches!(
            bp.power_product(&[6]),
            Err(AlgebraError::TermBudget { .. })
        ));
    }
}
