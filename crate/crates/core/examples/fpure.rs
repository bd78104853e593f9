//! F-purity of the Fermat quartic cone across several characteristics.

use frobsing::budget::Budget;
use frobsing::criteria::{fpure_test_ci, Mode, PairSpec};

fn main() {
    let budget = Budget::default();
    for p in [3, 5, 7, 11, 13] {
        let pair = PairSpec::parse(
            p,
            &["x", "y", "z", "w"],
            &["x^4 + y^4 + z^4 + w^4"],
            None,
            Mode::Weak,
        )
        .expect("valid pair");
        let v = fpure_test_ci(&pair, 2, &budget).expect("within budget");
        println!("p = {p:2}: {v}");
        for r in &v.transcript {
            if let Some(s) = &r.survivor {
                println!("        level {} survives via {s}", r.e);
            }
        }
    }
}
