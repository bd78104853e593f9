//! F-purity of `(R/I, t·div(g))` for an arbitrary ideal `I`: the pair is
//! F-pure iff `g^(r_e) (I^[q] : I) ⊄ m^[q]` for every `q`.

use crate::algebra::{in_bracket_max, BracketPowers, FrobeniusPower};
use crate::budget::Budget;
use crate::ideal::{bracket_power, ideal_colon, Ideal};

use super::{
    ci::truncated, r_level, Boundary, CriteriaError, LevelRecord, Mode, Property,
    RefutationReason, Verdict, VerdictKind,
};

fn level_outcome(
    ideal: &Ideal,
    boundary: Option<&Boundary>,
    q: FrobeniusPower,
    r: u64,
    budget: &Budget,
) -> Result<(bool, usize, Option<String>), CriteriaError> {
    let colon = ideal_colon(&bracket_power(ideal, q)?, ideal, budget)?;
    let mut survivors = 0;
    let mut first = None;
    for c in colon.gens() {
        let product = match boundary {
            Some(b) if r > 0 => {
                let mut powers =
                    BracketPowers::new(&[b.g.clone(), c.clone()], q, Some(budget.term_limit()));
                powers.power_product(&[r, 1])?
            }
            _ => c.truncate(q.q()),
        };
        if !in_bracket_max(&product, q.q()) {
            survivors += 1;
            if first.is_none() {
                first = Some(c.to_string());
            }
        }
    }
    Ok((first.is_some(), survivors, first))
}

/// Level-by-level test over `e = 1..=e_max`. The transcript records, per
/// level, how many generators `c` of `I^[q] : I` satisfy `g^(r_e) c ∉ m^[q]`
/// and the first such `c`.
pub fn fpure_test_general(
    ideal: &Ideal,
    boundary: Option<&Boundary>,
    mode: Mode,
    e_max: u32,
    budget: &Budget,
) -> Result<Verdict, CriteriaError> {
    let property = match mode {
        Mode::Weak => Property::FPure,
        Mode::Strong => Property::StronglyFPure,
    };
    let ring = ideal.ring();
    if let Some(b) = boundary {
        if b.t.is_negative() {
            return Err(CriteriaError::NegativeCoefficient(b.t.clone()));
        }
        if ideal.contains(&b.g, budget)? {
            return Err(CriteriaError::BoundaryInIdeal);
        }
    }
    let t = boundary.map_or_else(crate::algebra::Rational::zero, |b| b.t.clone());
    let mut transcript = Vec::new();
    for e in 1..=e_max {
        let level = r_level(&t, ring.p(), e, mode)?;
        let outcome = level_outcome(ideal, boundary, level.power(ring.p()), level.r, budget);
        let (passed, surviving_terms, survivor) = match outcome {
            Ok(o) => o,
            Err(err) if err.is_budget() => return Ok(truncated(property, transcript, e, err)),
            Err(err) => return Err(err),
        };
        transcript.push(LevelRecord {
            e,
            q: level.q,
            r: level.r,
            passed,
            surviving_terms,
            survivor,
            stage: "fpure",
            tau: None,
        });
        if !passed {
            return Ok(Verdict {
                property,
                verdict: VerdictKind::Refuted {
                    level: e,
                    reason: RefutationReason::CriterionInBracket,
                },
                transcript,
                budget_exceeded: None,
                notes: Vec::new(),
            });
        }
    }
    Ok(Verdict {
        property,
        verdict: VerdictKind::HoldsUpToLevel { level: e_max },
        transcript,
        budget_exceeded: None,
        notes: Vec::new(),
    })
}
