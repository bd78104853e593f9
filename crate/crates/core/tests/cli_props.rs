use frobsing::algebra::poly_parse;
use frobsing::cli::{exit_code, run_captured, EXIT_BUDGET, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};
use frobsing::criteria::{Property, RefutationReason, Verdict, VerdictKind};
use proptest::prelude::*;
use serde_json::Value;

fn stub(kind: VerdictKind, budget: bool) -> Verdict {
    Verdict {
        property: Property::FPure,
        verdict: kind,
        transcript: Vec::new(),
        budget_exceeded: budget.then(|| "stub".to_string()),
        notes: Vec::new(),
    }
}

fn kinds() -> Vec<VerdictKind> {
    let one = poly_parse("1", &["x"], 5).unwrap();
    vec![
        VerdictKind::Refuted {
            level: 1,
            reason: RefutationReason::CriterionInBracket,
        },
        VerdictKind::Refuted {
            level: 0,
            reason: RefutationReason::RoundDownNonzero,
        },
        VerdictKind::HoldsUpToLevel { level: 2 },
        VerdictKind::CertifiedPositive {
            level: 1,
            witness: one,
        },
        VerdictKind::Inconclusive { levels: 2 },
    ]
}

#[test]
fn exit_codes_of_stub_verdicts() {
    for kind in kinds() {
        for budget in [false, true] {
            let expected = match (&kind, budget) {
                (VerdictKind::Refuted { .. }, _) => EXIT_REFUTED,
                (_, true) => EXIT_BUDGET,
                _ => EXIT_OK,
            };
            assert_eq!(exit_code(&stub(kind.clone(), budget)), expected, "{kind} budget={budget}");
        }
    }
}

fn run(args: &[&str]) -> (i32, String) {
    let mut all = vec!["frobsing"];
    all.extend_from_slice(args);
    run_captured(all)
}

#[test]
fn exit_codes_of_real_runs() {
    let quartic = |p: &str| {
        run(&["fpure", "--p", p, "--vars", "x,y,z,w", "--ci", "x^4+y^4+z^4+w^4"]).0
    };
    assert_eq!(quartic("3"), EXIT_REFUTED);
    assert_eq!(quartic("5"), EXIT_OK);
    let cone = ["--p", "5", "--vars", "x,y,z", "--ci", "x*y - z^2"];
    let sfr: Vec<&str> = ["sfr"].iter().chain(&cone).copied().chain(["--witness", "x"]).collect();
    assert_eq!(run(&sfr).0, EXIT_OK);
    assert_eq!(run(&["toric", "--rays", "1,0;1,2", "--full-delta"]).0, EXIT_OK);
    assert_eq!(run(&["graph", "--json", r#"{"vertices":[{"b":2}],"boundary":[1]}"#]).0, EXIT_OK);

    for bad in [
        vec!["fpure"],
        vec!["nonsense"],
        vec!["fpure", "--p", "4", "--vars", "x", "--ci", "x"],
        vec!["fpure", "--p", "5", "--vars", "x", "--ci", "x^"],
        vec!["fpure", "--p", "5", "--vars", "x", "--ci", "y"],
        vec!["fpt", "--p", "5", "--vars", "x,y", "--f", "1 + x"],
        vec!["toric", "--rays", "1,0;-1,0", "--full-delta"],
        vec!["graph", "--json", r#"{"vertices":[{"b":1},{"b":1}],"edges":[[0,1]]}"#],
    ] {
        assert_eq!(run(&bad).0, EXIT_USAGE, "{bad:?}");
    }
}

fn untimed(json: &str) -> Value {
    let mut v: Value = serde_json::from_str(json).expect("valid json");
    v.as_object_mut().expect("object").remove("timing");
    v
}

#[test]
fn json_envelope() {
    let (code, out) = run(&["fpt", "--p", "7", "--vars", "x,y", "--f", "x^2 - y^3", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v = untimed(&out);
    assert_eq!(v["schema"], "frobsing/1");
    assert_eq!(v["result"]["estimate"], "5/6");
    assert_eq!(v["result"]["upper"], "41/48");
    assert!(v["flags"].is_array());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn json_reports_are_deterministic(
        p in prop::sample::select(vec!["3", "5", "7"]),
        t in prop::sample::select(vec!["1/2", "5/6", "1", "3/2"]),
        which in 0usize..5,
    ) {
        let args: Vec<&str> = match which {
            0 => vec!["fpure", "--p", p, "--vars", "x,y", "--g", "x^2 - y^3", "--t", t],
            1 => vec!["fpure", "--p", p, "--vars", "x,y,z", "--ci", "x*y - z^2", "--g", "z", "--t", t, "--mode", "strong"],
            2 => vec!["sfr", "--p", p, "--vars", "x,y,z", "--ci", "x*y - z^2", "--g", "z", "--t", t],
            3 => vec!["fpt", "--p", p, "--vars", "x,y", "--f", "x^2 - y^3"],
            _ => vec!["catalog", "--filter", "graph"],
        };
        let mut args = args;
        args.extend(["--format", "json"]);
        let (c1, a) = run(&args);
        let (c2, b) = run(&args);
        prop_assert_eq!(c1, c2);
        let (a, b) = (untimed(&a), untimed(&b));
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
