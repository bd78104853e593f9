use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::Exponents;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// The first `k` variables dominate: compared by grevlex on that block,
    /// ties broken by grevlex on the remaining variables.
    BlockElimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Exponents, b: &Exponents) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(a.as_slice(), b.as_slice()),
            MonomialOrder::Lex => a.as_slice().cmp(b.as_slice()),
            MonomialOrder::BlockElimination(k) => {
                let (a1, a2) = a.as_slice().split_at(k.min(a.arity()));
                let (b1, b2) = b.as_slice().split_at(k.min(b.arity()));
                grevlex(a1, b1).then_with(|| grevlex(a2, b2))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                // smaller power of the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
