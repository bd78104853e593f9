//! Fedder-type criteria for pairs `(A, t·div(g))` with `A = R/I`.
//!
//! Every test works level by level over `q = p^e`. A failing level is a
//! definitive refutation; passing all computed levels is reported as
//! [`VerdictKind::HoldsUpToLevel`], never as an unconditional "yes".

mod ci;
mod general;
mod level;
mod validate;
mod verdict;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{parse_polynomial, AlgebraError, Polynomial, Rational, Ring};
use crate::budget::Budget;
use crate::ideal::{Ideal, IdealError};

pub use ci::{
    criterion_product, default_witness, divisorial_freg_test, fpure_test_ci, strong_freg_test_ci,
};
pub use general::fpure_test_general;
pub use level::{r_level, Level};
pub use validate::{validate_implications, ImplicationCheck, ImplicationReport};
pub use verdict::{LevelRecord, Property, RefutationReason, TauRecord, Verdict, VerdictKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("boundary coefficient must be nonnegative, got {0}")]
    NegativeCoefficient(Rational),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("no admissible default witness: every maximal Jacobian minor lies in the ideal")]
    NoDefaultWitness,
    #[error("divisorial test needs a boundary with coefficient exactly 1")]
    NotReducedBoundary,
    #[error("g lies in the defining ideal")]
    BoundaryInIdeal,
}

impl CriteriaError {
    pub fn is_budget(&self) -> bool {
        match self {
            CriteriaError::Algebra(AlgebraError::TermBudget { .. }) => true,
            CriteriaError::Ideal(e) => e.is_budget(),
            _ => false,
        }
    }
}

/// `r_e = ⌊t(q−1)⌋` (weak, F-purity) or `r_e = ⌊tq⌋` (strong, strong
/// F-purity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Weak,
    Strong,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Weak => "weak",
            Mode::Strong => "strong",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weak" => Ok(Mode::Weak),
            "strong" => Ok(Mode::Strong),
            other => Err(format!("unknown mode '{other}' (expected weak|strong)")),
        }
    }
}

/// The divisor `t·div(g)`. In the literature the coefficient is sometimes
/// written `α`; it is the same number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub g: Polynomial,
    pub t: Rational,
}

/// Ambient regular ring `F_p[x_1..x_d]` (localized at the origin), the
/// complete-intersection generators `f_1..f_s` of `A`, and an optional
/// boundary.
///
/// Trusted, not checked: `f_1, .., f_s, g` is a regular sequence, `A` is
/// normal and `div(g)` is reduced. [`PairSpec::regular_sequence_probe`]
/// offers a cheap necessary check.
#[derive(Clone, Debug)]
pub struct PairSpec {
    ring: Arc<Ring>,
    ci: Vec<Polynomial>,
    boundary: Option<Boundary>,
    mode: Mode,
}

impl PairSpec {
    pub fn new(
        ring: &Arc<Ring>,
        ci: Vec<Polynomial>,
        boundary: Option<Boundary>,
        mode: Mode,
    ) -> Result<Self, CriteriaError> {
        if ci.len() > ring.arity() {
            return Err(CriteriaError::InvalidPair(format!(
                "{} generators in {} variables",
                ci.len(),
                ring.arity()
            )));
        }
        for f in &ci {
            if f.is_zero() {
                return Err(CriteriaError::InvalidPair("zero defining equation".into()));
            }
            if f.constant_term() != 0 {
                return Err(CriteriaError::InvalidPair(format!(
                    "{f} is not in the maximal ideal"
                )));
            }
        }
        if let Some(b) = &boundary {
            if b.g.is_zero() {
                return Err(CriteriaError::InvalidPair("boundary g is zero".into()));
            }
            if b.g.constant_term() != 0 {
                return Err(CriteriaError::InvalidPair(format!(
                    "{} is not in the maximal ideal",
                    b.g
                )));
            }
            if b.t.is_negative() {
                return Err(CriteriaError::NegativeCoefficient(b.t.clone()));
            }
        }
        Ok(PairSpec {
            ring: ring.clone(),
            ci,
            boundary,
            mode,
        })
    }

    /// Parses every polynomial in a fresh ring.
    pub fn parse<S: AsRef<str>>(
        p: u64,
        vars: &[S],
        ci: &[&str],
        boundary: Option<(&str, &str)>,
        mode: Mode,
    ) -> Result<Self, CriteriaError> {
        let ring = Ring::new(p, vars)?;
        let ci = ci
            .iter()
            .map(|f| parse_polynomial(f, &ring))
            .collect::<Result<Vec<_>, _>>()?;
        let boundary = match boundary {
            Some((g, t)) => Some(Boundary {
                g: parse_polynomial(g, &ring)?,
                t: t.parse()?,
            }),
            None => None,
        };
        Self::new(&ring, ci, boundary, mode)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn p(&self) -> u32 {
        self.ring.p()
    }

    pub fn ci(&self) -> &[Polynomial] {
        &self.ci
    }

    pub fn boundary(&self) -> Option<&Boundary> {
        self.boundary.as_ref()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Boundary coefficient, 0 without boundary.
    pub fn t(&self) -> Rational {
        self.boundary
            .as_ref()
            .map_or_else(Rational::zero, |b| b.t.clone())
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        PairSpec {
            mode,
            ..self.clone()
        }
    }

    pub fn with_t(&self, t: Rational) -> Result<Self, CriteriaError> {
        let boundary = self
            .boundary
            .as_ref()
            .map(|b| Boundary {
                g: b.g.clone(),
                t,
            })
            .ok_or_else(|| CriteriaError::InvalidPair("pair has no boundary".into()))?;
        Self::new(&self.ring, self.ci.clone(), Some(boundary), self.mode)
    }

    pub fn without_boundary(&self) -> Self {
        PairSpec {
            boundary: None,
            ..self.clone()
        }
    }

    pub fn defining_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.ci.clone())
    }

    /// Necessary conditions for `f_1, .., f_s, g` to be a regular sequence:
    /// no element lies in the ideal generated by its predecessors.
    pub fn regular_sequence_probe(&self, budget: &Budget) -> Result<bool, CriteriaError> {
        let mut seq = self.ci.clone();
        if let Some(b) = &self.boundary {
            seq.push(b.g.clone());
        }
        for k in 0..seq.len() {
            let prefix = Ideal::new(&self.ring, seq[..k].to_vec());
            if prefix.contains(&seq[k], budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ci: Vec<String> = self.ci.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "F_{}[{}]/({})",
            self.ring.p(),
            self.ring.vars().join(","),
            ci.join(", ")
        )?;
        if let Some(b) = &self.boundary {
            write!(f, ", {}·div({})", b.t, b.g)?;
        }
        write!(f, " [{}]", self.mode)
    }
}
