//! ν-values `j_e = max{ j : f^j ∉ m^[q] }`, F-pure threshold bounds for
//! `(R, t·div(f))` and the multiplicity/Jacobian bounds on the threshold.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{
    gradient, initial_form, AlgebraError, BracketPowers, FrobeniusPower, Polynomial, Rational,
};
use crate::budget::Budget;
use crate::ideal::{homogeneous_member_power, Ideal, IdealError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThresholdError {
    #[error("f must be a nonzero element of the maximal ideal, got {0}")]
    NotInMaximal(String),
    #[error("e must be at least 1")]
    ZeroLevel,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

impl ThresholdError {
    pub fn is_budget(&self) -> bool {
        match self {
            ThresholdError::Algebra(AlgebraError::TermBudget { .. }) => true,
            ThresholdError::Ideal(e) => e.is_budget(),
            _ => false,
        }
    }
}

fn ser_poly<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn check_input(f: &Polynomial) -> Result<(), ThresholdError> {
    if f.is_zero() || f.constant_term() != 0 {
        return Err(ThresholdError::NotInMaximal(f.to_string()));
    }
    Ok(())
}

/// `j_e` by binary search on `[0, d(q−1)]`; all probes share one cache of
/// digit powers.
pub fn nu_value(f: &Polynomial, e: u32, budget: &Budget) -> Result<u64, ThresholdError> {
    check_input(f)?;
    if e == 0 {
        return Err(ThresholdError::ZeroLevel);
    }
    let q = FrobeniusPower::new(f.ring().p(), e)?;
    let d = f.ring().arity() as u64;
    let mut powers = BracketPowers::new(std::slice::from_ref(f), q, Some(budget.term_limit()));
    // f^lo ∉ m^[q], f^hi ∈ m^[q]
    let (mut lo, mut hi) = (0u64, d * (q.q() - 1) + 1);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if powers.power_product(&[mid])?.is_zero() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(lo)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NuEntry {
    pub e: u32,
    pub q: u64,
    pub j: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuSequence {
    #[serde(serialize_with = "ser_poly")]
    pub f: Polynomial,
    pub entries: Vec<NuEntry>,
}

impl NuSequence {
    pub fn j(&self, e: u32) -> Option<u64> {
        self.entries.iter().find(|x| x.e == e).map(|x| x.j)
    }
}

/// `j_1, .., j_{e_max}`; levels are computed in parallel.
pub fn nu_sequence(f: &Polynomial, e_max: u32, budget: &Budget) -> Result<NuSequence, ThresholdError> {
    use rayon::prelude::*;
    check_input(f)?;
    let p = f.ring().p() as u64;
    let entries = (1..=e_max)
        .into_par_iter()
        .map(|e| {
            let j = nu_value(f, e, budget)?;
            Ok(NuEntry { e, q: p.pow(e), j })
        })
        .collect::<Result<Vec<_>, ThresholdError>>()?;
    Ok(NuSequence {
        f: f.clone(),
        entries,
    })
}

/// `(1/n, d/n)` where `n` is the order of `f` at the origin.
pub fn multiplicity_bounds(f: &Polynomial) -> Result<(Rational, Rational), ThresholdError> {
    check_input(f)?;
    let (n, _) = initial_form(f)?;
    let d = f.ring().arity() as i64;
    Ok((Rational::new(1, n as i64), Rational::new(d, n as i64)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum PredictionStatus {
    /// `t ≥ min(1, d/n)`.
    NotApplicable,
    /// Some `x_i^m` is never reached by the Jacobian ideal of `f_n`.
    HypothesisFails { missing: Vec<String> },
    /// `p ≥ μ`: the pair is predicted strongly F-pure.
    StronglyFPure,
    /// `p < μ`.
    NoPrediction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianPrediction {
    pub n: u64,
    pub initial_form: String,
    pub t: Rational,
    pub lower: Rational,
    pub upper: Rational,
    pub jacobian: Vec<String>,
    /// `m_i`, smallest with `x_i^(m_i) ∈ J`; `None` where no power lies in
    /// `J` up to the search cap.
    pub m: Vec<Option<u32>>,
    pub mu: Option<Rational>,
    pub status: PredictionStatus,
}

/// Prediction of strong F-purity of `(R, t·div(f))` from the initial form
/// `f_n`: if `J = (∂f_n/∂x_i)` contains `(x_1^(m_1), .., x_d^(m_d))` then the
/// pair is strongly F-pure once `p ≥ μ = (m_1 + .. + m_d)/(d − nt)`.
pub fn jacobian_prediction(f: &Polynomial, t: &Rational) -> Result<JacobianPrediction, ThresholdError> {
    check_input(f)?;
    let ring = f.ring();
    let d = ring.arity();
    let (n, fn_) = initial_form(f)?;
    let (lower, upper) = multiplicity_bounds(f)?;
    let jac = Ideal::new(ring, gradient(&fn_));
    let mut out = JacobianPrediction {
        n,
        initial_form: fn_.to_string(),
        t: t.clone(),
        lower,
        upper: upper.clone(),
        jacobian: jac.gens().iter().map(|g| g.to_string()).collect(),
        m: Vec::new(),
        mu: None,
        status: PredictionStatus::NotApplicable,
    };
    if t.is_negative() || *t >= upper.min(Rational::one()) {
        return Ok(out);
    }
    // socle degree of d forms of degree n−1 forming a regular sequence
    let cap = (d as u64 * n.saturating_sub(2) + 1).min(u32::MAX as u64) as u32;
    let mut missing = Vec::new();
    for i in 0..d {
        let m = if jac.is_zero() {
            None
        } else {
            homogeneous_member_power(i, &jac, cap)?
        };
        if m.is_none() {
            missing.push(ring.vars()[i].clone());
        }
        out.m.push(m);
    }
    if !missing.is_empty() {
        out.status = PredictionStatus::HypothesisFails { missing };
        return Ok(out);
    }
    let sum: u64 = out.m.iter().map(|m| m.unwrap() as u64).sum();
    let denom = Rational::from(d as u64) - Rational::from(n) * t.clone();
    let mu = Rational::from(sum) / denom;
    out.status = if Rational::from(ring.p() as u64) >= mu {
        PredictionStatus::StronglyFPure
    } else {
        PredictionStatus::NoPrediction
    };
    out.mu = Some(mu);
    Ok(out)
}

/// Threshold data for `(R, t·div(f))` from `j_1, .., j_E`.
///
/// In weak mode the level-`e` criterion passes iff `⌊t(q−1)⌋ ≤ j_e`, in
/// strong mode iff `⌊tq⌋ ≤ j_e`. Hence
/// * every `t` with `t ≥ upper` fails some computed level;
/// * every `t ≤ level_watermark` passes all computed levels.
///
/// `estimate` is `j_E/(q_E − 1)`, the largest `t` passing level `E`;
/// `estimate_pe` is `j_E/q_E`. Neither is claimed to converge to the
/// threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub nu: NuSequence,
    pub upper: Rational,
    /// `min(upper, 1)`; thresholds of principal divisors never exceed 1.
    pub upper_capped: Rational,
    pub level_watermark: Rational,
    pub estimate: Rational,
    pub estimate_pe: Rational,
    pub strong_upper: Rational,
    pub strong_watermark: Rational,
    pub jacobian: JacobianPrediction,
}

pub fn fpt_report(f: &Polynomial, e_max: u32, budget: &Budget) -> Result<ThresholdReport, ThresholdError> {
    if e_max == 0 {
        return Err(ThresholdError::ZeroLevel);
    }
    let nu = nu_sequence(f, e_max, budget)?;
    let ratio = |a: u64, b: u64| Rational::from_bigints(a.into(), b.into());
    let fold_min = |it: Vec<Rational>| it.into_iter().reduce(Rational::min).expect("e_max >= 1");
    let upper = fold_min(nu.entries.iter().map(|x| ratio(x.j + 1, x.q - 1)).collect());
    let level_watermark = fold_min(nu.entries.iter().map(|x| ratio(x.j, x.q - 1)).collect());
    let strong_upper = fold_min(nu.entries.iter().map(|x| ratio(x.j + 1, x.q)).collect());
    let strong_watermark = fold_min(nu.entries.iter().map(|x| ratio(x.j, x.q)).collect());
    let last = *nu.entries.last().expect("e_max >= 1");
    let jacobian = jacobian_prediction(f, &level_watermark)?;
    Ok(ThresholdReport {
        upper_capped: upper.clone().min(Rational::one()),
        upper,
        level_watermark,
        estimate: ratio(last.j, last.q - 1),
        estimate_pe: ratio(last.j, last.q),
        strong_upper,
        strong_watermark,
        jacobian,
        nu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_parse;

    fn cusp(p: u64) -> Polynomial {
        poly_parse("x^2 - y^3", &["x", "y"], p).unwrap()
    }

    #[test]
    fn nu_examples() {
        let b = Budget::default();
        let x = poly_parse("x", &["x"], 3).unwrap();
        assert_eq!(nu_value(&x, 2, &b).unwrap(), 8);
        assert_eq!(nu_value(&cusp(5), 1, &b).unwrap(), 3);
        assert_eq!(nu_value(&cusp(5), 2, &b).unwrap(), 19);
        assert_eq!(nu_value(&cusp(7), 2, &b).unwrap(), 40);
    }

    #[test]
    fn cusp_report() {
        let r = fpt_report(&cusp(7), 2, &Budget::default()).unwrap();
        assert_eq!(r.upper, Rational::new(41, 48));
        assert_eq!(r.estimate, Rational::new(5, 6));
        assert_eq!(r.level_watermark, Rational::new(5, 6));
        let r = fpt_report(&cusp(5), 2, &Budget::default()).unwrap();
        assert_eq!(r.upper, Rational::new(5, 6));
        // min(j_1/4, j_2/24) = min(3/4, 19/24)
        assert_eq!(r.level_watermark, Rational::new(3, 4));
    }

    #[test]
    fn smooth_divisor() {
        let x = poly_parse("x", &["x", "y"], 5).unwrap();
        let r = fpt_report(&x, 2, &Budget::default()).unwrap();
        assert_eq!(r.level_watermark, Rational::one());
        assert_eq!(r.upper_capped, Rational::one());
        assert_eq!(r.estimate_pe, Rational::new(24, 25));
    }

    #[test]
    fn bounds() {
        assert_eq!(
            multiplicity_bounds(&cusp(7)).unwrap(),
            (Rational::new(1, 2), Rational::one())
        );
        let quartic = poly_parse("x^4+y^4+z^4+w^4", &["x", "y", "z", "w"], 5).unwrap();
        assert_eq!(
            multiplicity_bounds(&quartic).unwrap(),
            (Rational::new(1, 4), Rational::one())
        );
    }

    #[test]
    fn predictions() {
        let p = jacobian_prediction(&cusp(7), &Rational::new(1, 3)).unwrap();
        assert!(matches!(p.status, PredictionStatus::HypothesisFails { .. }));
        assert_eq!(p.m, vec![Some(1), None]);

        let quartic = poly_parse("x^4+y^4+z^4+w^4", &["x", "y", "z", "w"], 7).unwrap();
        let p = jacobian_prediction(&quartic, &Rational::new(1, 2)).unwrap();
        assert_eq!(p.mu, Some(Rational::from_int(6)));
        assert_eq!(p.status, PredictionStatus::StronglyFPure);
        let quartic5 = poly_parse("x^4+y^4+z^4+w^4", &["x", "y", "z", "w"], 5).unwrap();
        let p = jacobian_prediction(&quartic5, &Rational::new(1, 2)).unwrap();
        assert_eq!(p.status, PredictionStatus::NoPrediction);

        let cubic = poly_parse("x^3+y^3+z^3", &["x", "y", "z"], 7).unwrap();
        let p = jacobian_prediction(&cubic, &Rational::new(2, 3)).unwrap();
        assert_eq!(p.mu, Some(Rational::from_int(6)));
        assert_eq!(p.status, PredictionStatus::StronglyFPure);

        let p = jacobian_prediction(&cubic, &Rational::one()).unwrap();
        assert_eq!(p.status, PredictionStatus::NotApplicable);
    }

    #[test]
    fn rejects_units() {
        let one = poly_parse("1 + x", &["x"], 5).unwrap();
        assert!(matches!(
            nu_value(&one, 1, &Budget::default()),
            Err(ThresholdError::NotInMaximal(_))
        ));
    }
}
