use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::AlgebraError;

/// Largest admissible exponent entry (exclusive).
pub const MAX_EXPONENT: u64 = 1 << 31;

/// Exponent vector `a` of a monomial `x^a`. The derived ordering is not a
/// monomial order; use [`Exponents::grlex_cmp`] or a
/// [`MonomialOrder`](crate::ideal::MonomialOrder) where one is needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents(SmallVec<[u32; 6]>);

impl Exponents {
    pub fn zero(arity: usize) -> Self {
        Exponents(SmallVec::from_elem(0, arity))
    }

    pub fn from_slice(entries: &[u32]) -> Result<Self, AlgebraError> {
        if entries.iter().any(|&a| a as u64 >= MAX_EXPONENT) {
            return Err(AlgebraError::ExponentOverflow);
        }
        Ok(Exponents(SmallVec::from_slice(entries)))
    }

    pub fn unit(arity: usize, var: usize, power: u32) -> Self {
        let mut e = Self::zero(arity);
        e.0[var] = power;
        e
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// `true` iff every entry is `< q`, i.e. `x^a ∉ m^[q]`.
    #[inline]
    pub fn below(&self, q: u64) -> bool {
        self.0.iter().all(|&a| (a as u64) < q)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            let s = *a as u64 + b as u64;
            if s >= MAX_EXPONENT {
                return Err(AlgebraError::ExponentOverflow);
            }
            *a = s as u32;
        }
        Ok(Exponents(out))
    }

    /// Sum of two vectors whose entries are known to stay below `q`; returns
    /// `None` when some entry reaches `q`.
    #[inline]
    pub fn add_below(&self, other: &Self, q: u64) -> Option<Self> {
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            let s = *a as u64 + b as u64;
            if s >= q {
                return None;
            }
            *a = s as u32;
        }
        Some(Exponents(out))
    }

    pub fn checked_scale(&self, k: u64) -> Result<Self, AlgebraError> {
        let mut out = self.0.clone();
        for a in out.iter_mut() {
            let s = (*a as u64)
                .checked_mul(k)
                .filter(|&s| s < MAX_EXPONENT)
                .ok_or(AlgebraError::ExponentOverflow)?;
            *a = s as u32;
        }
        Ok(Exponents(out))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Exponents(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Exponents(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded lexicographic comparison: total degree first, then the first
    /// differing entry.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_reported() {
        let a = Exponents::from_slice(&[(1 << 30) + 5, 0]).unwrap();
        assert!(matches!(
            a.checked_add(&a),
            Err(AlgebraError::ExponentOverflow)
        ));
        assert!(Exponents::from_slice(&[1 << 31]).is_err());
        assert!(a.checked_scale(2).is_err());
    }

    #[test]
    fn grlex() {
        let x2 = Exponents::from_slice(&[2, 0]).unwrap();
        let xy = Exponents::from_slice(&[1, 1]).unwrap();
        let y3 = Exponents::from_slice(&[0, 3]).unwrap();
        assert_eq!(x2.grlex_cmp(&xy), Ordering::Greater);
        assert_eq!(y3.grlex_cmp(&x2), Ordering::Greater);
        assert_eq!(xy.add_below(&xy, 2), None);
        assert!(x2.divides(&Exponents::from_slice(&[3, 1]).unwrap()));
    }
}
