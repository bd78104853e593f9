//! Runs the built-in examples and prints the agreement table.

use frobsing::budget::Budget;
use frobsing::catalog::{catalog, run_catalog};

fn main() {
    let filter = std::env::args().nth(1);
    let report = run_catalog(&catalog(), filter.as_deref(), 2, &Budget::default(), None);
    print!("{}", report.to_table());
    for row in report.flagged() {
        println!("flagged: {} ({})", row.id, row.computed);
    }
}
