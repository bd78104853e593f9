//! Strong and divisorial F-regularity of the quadric cone xy = z^2.

use frobsing::algebra::parse_polynomial;
use frobsing::budget::Budget;
use frobsing::criteria::{divisorial_freg_test, strong_freg_test_ci, Mode, PairSpec};

fn main() {
    let budget = Budget::default();
    let cone = PairSpec::parse(5, &["x", "y", "z"], &["x*y - z^2"], None, Mode::Weak).expect("valid");
    let x = parse_polynomial("x", cone.ring()).expect("valid");
    let v = strong_freg_test_ci(&cone, 2, Some(&x), &budget).expect("within budget");
    println!("no boundary, c = x:      {v}");

    for t in ["1/2", "1"] {
        let pair = PairSpec::parse(5, &["x", "y", "z"], &["x*y - z^2"], Some(("z", t)), Mode::Weak)
            .expect("valid");
        let v = strong_freg_test_ci(&pair, 2, None, &budget).expect("within budget");
        println!("t = {t:3} div(z):         {v}");
    }

    let pair = PairSpec::parse(5, &["x", "y", "z"], &["x*y - z^2"], Some(("z", "1")), Mode::Weak)
        .expect("valid");
    let v = divisorial_freg_test(&pair, 2, None, &budget).expect("within budget");
    println!("divisorial, div(z):      {v}");
    for n in &v.notes {
        println!("    {n}");
    }
}
