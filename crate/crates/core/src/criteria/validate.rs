//! Consistency checks between verdicts of the same pair that follow from
//! the shape of the criteria: each is literally decidable on the computed
//! levels, so a violation means an engine bug.

use serde::Serialize;

use crate::algebra::Rational;

use super::{PairSpec, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationCheck {
    pub rule: &'static str,
    pub level: u32,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ImplicationReport {
    pub checks: Vec<ImplicationCheck>,
    pub violations: Vec<ImplicationCheck>,
}

impl ImplicationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, check: ImplicationCheck) {
        if !check.holds {
            self.violations.push(check.clone());
        }
        self.checks.push(check);
    }
}

fn evaluated_levels(v: &Verdict) -> impl Iterator<Item = (u32, bool)> + '_ {
    v.transcript
        .iter()
        .filter(|r| r.stage == "fpure")
        .map(|r| (r.e, r.passed))
}

/// `weak` and `strong` are F-purity verdicts of `pair` in the two modes;
/// `lower` holds weak-mode verdicts of the same pair at other coefficients.
///
/// * strong pass at level `e` implies weak pass at `e`;
/// * for `t > 1` the weak criterion fails at every level with
///   `q ≥ t/(t−1)`;
/// * for `t' ≤ t`, a weak pass at level `e` for `t` implies one for `t'`.
pub fn validate_implications(
    pair: &PairSpec,
    weak: &Verdict,
    strong: &Verdict,
    lower: &[(Rational, Verdict)],
) -> ImplicationReport {
    let mut report = ImplicationReport::default();
    let t = pair.t();

    for (e, passed) in evaluated_levels(strong) {
        if !passed {
            continue;
        }
        if let Some(w) = weak.passed_at(e) {
            report.push(ImplicationCheck {
                rule: "strong-implies-weak",
                level: e,
                holds: w,
                detail: format!("strong mode passes at level {e}, weak mode passes: {w}"),
            });
        }
    }

    let one = Rational::one();
    if t > one {
        let threshold = &t / &(&t - &one);
        for (e, passed) in evaluated_levels(weak) {
            let q = (pair.ring().p() as u64).checked_pow(e).map(Rational::from);
            if q.is_none_or(|q| q >= threshold) {
                report.push(ImplicationCheck {
                    rule: "coefficient-above-one",
                    level: e,
                    holds: !passed,
                    detail: format!("t = {t} > 1 and q >= {threshold}, weak criterion passed: {passed}"),
                });
            }
        }
    }

    for (t2, v) in lower {
        if t2 > &t {
            continue;
        }
        for (e, passed) in evaluated_levels(weak) {
            if !passed {
                continue;
            }
            if let Some(p2) = v.passed_at(e) {
                report.push(ImplicationCheck {
                    rule: "coefficient-monotone",
                    level: e,
                    holds: p2,
                    detail: format!("passes at t = {t}, at t' = {t2} passes: {p2}"),
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::criteria::{fpure_test_ci, Mode};

    fn cusp(t: &str) -> PairSpec {
        PairSpec::parse(7, &["x", "y"], &[], Some(("x^2 - y^3", t)), Mode::Weak).unwrap()
    }

    #[test]
    fn cusp_checks() {
        let b = Budget::default();
        let pair = cusp("5/6");
        let weak = fpure_test_ci(&pair, 2, &b).unwrap();
        let strong = fpure_test_ci(&pair.with_mode(Mode::Strong), 2, &b).unwrap();
        let half = fpure_test_ci(&cusp("1/2"), 2, &b).unwrap();
        let report = validate_implications(&pair, &weak, &strong, &[(Rational::new(1, 2), half)]);
        assert!(report.ok(), "{:?}", report.violations);
        assert!(report.checks.iter().any(|c| c.rule == "strong-implies-weak" && c.level == 1));
        assert!(report.checks.iter().any(|c| c.rule == "coefficient-monotone" && c.level == 1));
    }

    #[test]
    fn coefficient_two_fails() {
        let b = Budget::default();
        let pair = PairSpec::parse(
            5,
            &["x", "y", "z"],
            &["x*y - z^2"],
            Some(("z", "2")),
            Mode::Weak,
        )
        .unwrap();
        let weak = fpure_test_ci(&pair, 1, &b).unwrap();
        assert!(weak.verdict.is_refuted());
        let strong = fpure_test_ci(&pair.with_mode(Mode::Strong), 1, &b).unwrap();
        let report = validate_implications(&pair, &weak, &strong, &[]);
        assert!(report.ok());
        assert!(report.checks.iter().any(|c| c.rule == "coefficient-above-one"));
    }
}
