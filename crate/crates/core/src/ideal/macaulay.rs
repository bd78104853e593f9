use std::collections::HashMap;

use crate::algebra::{Exponents, Polynomial};

use super::linalg::{Echelon, SparseVec};
use super::{Ideal, IdealError};

/// All exponent vectors of total degree `deg` in `d` variables.
pub(crate) fn monomials_of_degree(d: usize, deg: u32) -> Vec<Exponents> {
    fn rec(d: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if prefix.len() + 1 == d {
            prefix.push(deg);
            out.push(Exponents::from_slice(prefix).expect("small degree"));
            prefix.pop();
            return;
        }
        for a in (0..=deg).rev() {
            prefix.push(a);
            rec(d, deg - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, deg, &mut Vec::with_capacity(d), &mut out);
    out
}

/// Smallest `m <= cap` with `x_i^m ∈ J`, for `J` generated by homogeneous
/// polynomials. Each degree is decided by Gaussian elimination on the
/// Macaulay matrix of `J` in that degree.
pub fn homogeneous_member_power(
    i: usize,
    j: &Ideal,
    cap: u32,
) -> Result<Option<u32>, IdealError> {
    let ring = j.ring();
    let d = ring.arity();
    assert!(i < d, "variable index out of range");
    if let Some(g) = j.gens().iter().find(|g| !g.is_homogeneous()) {
        return Err(IdealError::NotHomogeneous(g.to_string()));
    }
    let gens: Vec<(u32, &Polynomial)> = j
        .gens()
        .iter()
        .map(|g| (g.total_degree().expect("nonzero") as u32, g))
        .collect();
    let field = ring.field();
    for m in 1..=cap {
        let basis = monomials_of_degree(d, m);
        let index: HashMap<&Exponents, u64> = basis
            .iter()
            .enumerate()
            .map(|(k, e)| (e, k as u64))
            .collect();
        let mut echelon = Echelon::new(field);
        for (deg, g) in &gens {
            if *deg > m {
                continue;
            }
            for shift in monomials_of_degree(d, m - deg) {
                let mut row: SparseVec = g
                    .terms()
                    .iter()
                    .map(|(e, c)| {
                        let s = e.checked_add(&shift).expect("small degree");
                        (index[&s], *c)
                    })
                    .collect();
                row.sort_unstable_by_key(|t| t.0);
                echelon.insert(row, Vec::new());
            }
        }
        let target = Exponents::unit(d, i, m);
        if echelon.spans(vec![(index[&target], 1)]) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
