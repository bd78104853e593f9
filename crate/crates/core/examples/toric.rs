//! Lattice form of F-purity for the A1 cone, with full and partial boundary.

use frobsing::toric::{toric_fpure_verify, Cone};

fn main() {
    let cone = Cone::parse("1,0;1,2").expect("valid cone");
    for (delta, label) in [(vec![0, 1], "full"), (vec![0], "partial")] {
        for e in 1..=2 {
            let v = toric_fpure_verify(&cone, &delta, 2, e, 8).expect("valid input");
            println!(
                "{label:7} q = {}: identity {}, containment {}, {} strict witnesses",
                v.q,
                v.identity_holds,
                v.containment_holds,
                v.strict_witnesses.len()
            );
        }
    }
}
