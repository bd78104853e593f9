//! ν-values and threshold bounds for the cusp, compared with its log
//! canonical threshold 5/6.

use frobsing::algebra::poly_parse;
use frobsing::budget::Budget;
use frobsing::thresholds::fpt_report;

fn main() {
    let budget = Budget::default();
    for p in [5, 7, 11, 13] {
        let f = poly_parse("x^2 - y^3", &["x", "y"], p).expect("valid polynomial");
        let r = fpt_report(&f, 2, &budget).expect("within budget");
        let js: Vec<String> = r.nu.entries.iter().map(|x| format!("j{}={}", x.e, x.j)).collect();
        println!(
            "p = {p:2}: {}  upper {}  watermark {}  estimate {}",
            js.join(" "),
            r.upper,
            r.level_watermark,
            r.estimate
        );
    }
}
