//! Kept in its own binary: it sets the budget environment variable.

use frobsing::budget::BUDGET_ENV;
use frobsing::cli::{run_captured, EXIT_BUDGET, EXIT_USAGE};

#[test]
fn budget_exhaustion_and_malformed_budget() {
    std::env::set_var(BUDGET_ENV, "dimension=10");
    let (code, out) = run_captured([
        "frobsing", "fpure", "--p", "13", "--vars", "x,y,z,w", "--ci", "x^4+y^4+z^4+w^4",
    ]);
    assert_eq!(code, EXIT_BUDGET, "{out}");

    std::env::set_var(BUDGET_ENV, "speed=fast");
    let (code, _) = run_captured(["frobsing", "fpt", "--p", "5", "--vars", "x", "--f", "x"]);
    assert_eq!(code, EXIT_USAGE);
    std::env::remove_var(BUDGET_ENV);
}
