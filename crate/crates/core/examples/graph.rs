//! Discrepancies and predicted F-singularity class of the three graph
//! shapes with reduced boundary.

use frobsing::discrepancy::{graph_report, DualGraph};

fn main() {
    let graphs = [
        ("(a) chain", DualGraph::chain(&[2, 2, 2], &[1, 0, 0])),
        ("(b) chain", DualGraph::chain(&[2, 3, 2], &[1, 0, 1])),
        ("(c) fork", DualGraph::new(&[2, 2, 2], &[(0, 1), (0, 2)], &[1, 0, 0])),
        ("star", DualGraph::chain(&[2], &[3])),
    ];
    for (name, g) in graphs {
        let g = g.expect("valid graph");
        for p in [2, 3] {
            let r = graph_report(&g, Some(p)).expect("valid graph");
            println!("{name:10} p = {p}: {}", serde_json::to_string(&r).expect("serializes"));
        }
    }
}
