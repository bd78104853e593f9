//! Sparse vectors over `F_p` and incremental echelon forms keyed by the
//! largest nonzero index.

use std::collections::HashMap;

use crate::algebra::PrimeField;

/// Entries sorted by ascending index, no zeros.
pub(crate) type SparseVec = Vec<(u64, u32)>;

/// `a - c·b`.
pub(crate) fn axpy(a: &SparseVec, b: &SparseVec, c: u32, field: PrimeField) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ia, va)), Some(&(ib, vb))) if ia == ib => {
                let v = field.sub(va, field.mul(c, vb));
                if v != 0 {
                    out.push((ia, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(ia, va)), Some(&(ib, _))) if ia < ib => {
                out.push((ia, va));
                i += 1;
            }
            (Some(&(ia, va)), None) => {
                out.push((ia, va));
                i += 1;
            }
            (_, Some(&(ib, vb))) => {
                let v = field.neg(field.mul(c, vb));
                if v != 0 {
                    out.push((ib, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub(crate) fn scale(a: &mut SparseVec, c: u32, field: PrimeField) {
    for t in a.iter_mut() {
        t.1 = field.mul(t.1, c);
    }
}

/// Row echelon form built one vector at a time. Each stored row has
/// leading (largest-index) coefficient 1 and optionally carries the
/// combination of inserted vectors that produced it.
pub(crate) struct Echelon {
    field: PrimeField,
    rows: HashMap<u64, (SparseVec, SparseVec)>,
}

pub(crate) enum Insert {
    /// The vector was independent; a new pivot was created.
    Pivot,
    /// The vector reduced to zero; the returned combination (of the tracked
    /// tags) is a kernel relation.
    Dependent(SparseVec),
}

impl Echelon {
    pub(crate) fn new(field: PrimeField) -> Self {
        Echelon {
            field,
            rows: HashMap::new(),
        }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` (tracking `combo`) and stores it if independent.
    pub(crate) fn insert(&mut self, mut v: SparseVec, mut combo: SparseVec) -> Insert {
        let field = self.field;
        loop {
            let Some(&(lead, c)) = v.last() else {
                return Insert::Dependent(combo);
            };
            match self.rows.get(&lead) {
                Some((row, row_combo)) => {
                    v = axpy(&v, row, c, field);
                    if !row_combo.is_empty() || !combo.is_empty() {
                        combo = axpy(&combo, row_combo, c, field);
                    }
                }
                None => {
                    let inv = field.inv(c);
                    scale(&mut v, inv, field);
                    scale(&mut combo, inv, field);
                    self.rows.insert(lead, (v, combo));
                    return Insert::Pivot;
                }
            }
        }
    }

    /// `true` iff `v` lies in the span of the stored rows.
    pub(crate) fn spans(&self, mut v: SparseVec) -> bool {
        let field = self.field;
        loop {
            let Some(&(lead, c)) = v.last() else {
                return true;
            };
            match self.rows.get(&lead) {
                Some((row, _)) => v = axpy(&v, row, c, field),
                None => return false,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_dependency_with_relation() {
        let f = PrimeField::new(5).unwrap();
        let mut ech = Echelon::new(f);
        assert!(matches!(
            ech.insert(vec![(0, 1), (2, 1)], vec![(0, 1)]),
            Insert::Pivot
        ));
        assert!(matches!(ech.insert(vec![(1, 3)], vec![(1, 1)]), Insert::Pivot));
        // 2·v0 + v1 = (2, 3, 2)
        match ech.insert(vec![(0, 2), (1, 3), (2, 2)], vec![(2, 1)]) {
            Insert::Dependent(rel) => {
                assert_eq!(rel, vec![(0, 3), (1, 4), (2, 1)]);
            }
            Insert::Pivot => panic!("should be dependent"),
        }
        assert_eq!(ech.rank(), 2);
        assert!(ech.spans(vec![(1, 1)]));
        assert!(!ech.spans(vec![(0, 1)]));
    }
}
