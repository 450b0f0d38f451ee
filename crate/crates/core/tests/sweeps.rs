use std::time::Instant;

use specht_core::verify::{combinatorics_suite, counting_suite, dominance_suite};
use specht_core::QuiverParams;

#[test]
fn combinatorics_sweep_to_rank_six() {
    let start = Instant::now();
    for e in [0, 2, 3, 4] {
        for charge in [vec![0], vec![0, 0], vec![3, 0], vec![7, 3, 0]] {
            let params = QuiverParams::new(e, charge).unwrap();
            let report = combinatorics_suite(&params, 6);
            assert!(report.passed(), "{report}: {:?}", report.violations);
            assert!(report.checked > 0);
        }
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn counting_to_rank_five() {
    for level in 1..=3 {
        assert!(counting_suite(level, 5).passed());
    }
}

#[test]
fn dominance_to_rank_four() {
    let report = dominance_suite(4, 2);
    assert!(report.passed(), "{:?}", report.violations);
    println!("{report}\n{:#?}", report.notes);
}
