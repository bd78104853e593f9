//! Ideal-level computations: bracket powers, membership, colon ideals and
//! degree-bounded homogeneous membership.

mod colon;
mod groebner;
mod linalg;
mod macaulay;
mod order;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{frobenius_power, AlgebraError, FrobeniusPower, Polynomial, Ring};
use crate::budget::Budget;

pub use colon::{colon_artinian, colon_by_element, ideal_colon, intersect};
pub use groebner::{groebner, GroebnerBasis};
pub use macaulay::homogeneous_member_power;
pub use order::MonomialOrder;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("Gröbner computation exceeded the pair budget ({limit})")]
    PairBudget { limit: usize },
    #[error("quotient R/m^[q] has dimension {required}, budget is {limit}")]
    DimensionBudget { required: u128, limit: u64 },
    #[error("colon by the zero ideal")]
    ZeroColonDivisor,
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl IdealError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            IdealError::PairBudget { .. }
                | IdealError::DimensionBudget { .. }
                | IdealError::Algebra(AlgebraError::TermBudget { .. })
        )
    }
}

/// Finite generator list in a fixed ring; zero generators are dropped, an
/// empty list is the zero ideal. Equality of ideals is decided with
/// [`Ideal::equals`], never by comparing generator lists.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(
                Arc::ptr_eq(g.ring(), ring) || **g.ring() == **ring,
                "generator from a different ring"
            );
        }
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        Self::new(
            ring,
            (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect(),
        )
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner(
        &self,
        order: MonomialOrder,
        budget: &Budget,
    ) -> Result<GroebnerBasis, IdealError> {
        groebner(&self.ring, &self.gens, order, budget)
    }

    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool, IdealError> {
        ideal_member(f, self, budget)
    }

    pub fn is_subset_of(&self, other: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
        let gb = other.groebner(MonomialOrder::GrevLex, budget)?;
        Ok(self.gens.iter().all(|g| gb.contains(g)))
    }

    /// Double inclusion through normal forms.
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
        Ok(self.is_subset_of(other, budget)? && other.is_subset_of(self, budget)?)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// `I^[q]`, generated by the `q`-th powers of the generators of `I`.
pub fn bracket_power(i: &Ideal, q: FrobeniusPower) -> Result<Ideal, IdealError> {
    let gens = i
        .gens()
        .iter()
        .map(|g| frobenius_power(g, q))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(i.ring(), gens))
}

/// Membership by reduction to zero against a grevlex Gröbner basis.
pub fn ideal_member(f: &Polynomial, i: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
    if f.is_zero() {
        return Ok(true);
    }
    if i.is_zero() {
        return Ok(false);
    }
    Ok(i.groebner(MonomialOrder::GrevLex, budget)?.contains(f))
}
