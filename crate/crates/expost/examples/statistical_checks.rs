//! Statistical richness checks on joint type distributions: completeness,
//! strong linear independence, and convex independence, on three canonical
//! joints that separate the concepts.
//!
//! Run with: cargo run --example statistical_checks

use expost::{statistics_report, FiniteBayesGame};

fn report(label: &str, joint: Vec<Vec<f64>>) {
    let game = FiniteBayesGame::new(joint, vec![vec![0.0]], 0.0).unwrap();
    let r = statistics_report(&game, 1e-9).unwrap();
    println!("{label}");
    println!("  rank of joint matrix : {}", r.rank_joint);
    println!(
        "  completeness         : A {}  B {}",
        r.completeness_a, r.completeness_b
    );
    println!("  strong lin. indep.   : A {}  B {}", r.sli_a, r.sli_b);
    println!(
        "  convex independence  : A {}  B {}",
        r.convex_indep_a, r.convex_indep_b
    );
    println!();
}

fn main() {
    // Independent types: every richness notion fails.
    report(
        "uniform independent 2x2 (matching-pennies information)",
        vec![vec![0.25, 0.25], vec![0.25, 0.25]],
    );

    // Correlated full-rank types: everything holds.
    report(
        "correlated full-rank 2x2",
        vec![vec![0.4, 0.1], vec![0.1, 0.4]],
    );

    // The 4x4 example separating convex independence from completeness:
    // row1 + row3 = row2 + row4, so the rank drops to 3, yet each
    // conditional row leads on its own coordinate and stays outside the
    // hull of the others.
    report(
        "4x4 convexly independent but rank-deficient",
        [
            [4.0, 2.0, 1.0, 3.0],
            [2.0, 4.0, 3.0, 1.0],
            [1.0, 3.0, 4.0, 2.0],
            [3.0, 1.0, 2.0, 4.0],
        ]
        .iter()
        .map(|row| row.iter().map(|v| v / 40.0).collect())
        .collect(),
    );
}
