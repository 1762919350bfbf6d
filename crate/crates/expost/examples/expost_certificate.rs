//! Full equilibrium certificates: Bayes-Nash verification, interim payoff
//! constancy, identifiability, the ex-post property, and the single-outcome
//! criterion, contrasted across information structures.
//!
//! Run with: cargo run --example expost_certificate

use expost::fixtures::{convex_independence_game, convex_independence_profile, example1_game, identity_pure_profile};
use expost::verify::OutcomeMap;
use expost::{certify, verify_single_outcome, FiniteBayesGame};

fn describe(label: &str, game: &FiniteBayesGame, profile: &expost::StrategyProfile) {
    let cert = certify(game, profile, 1e-9).unwrap();
    println!("{label}");
    println!(
        "  values: A {:.4}, B {:.4} (constant sum {})",
        cert.value_a,
        cert.value_b,
        game.sum_const()
    );
    println!(
        "  BNE: {} (worst regret {:.2e})",
        cert.is_bne.is_bne, cert.is_bne.worst_regret
    );
    println!(
        "  identifiable: A {}, B {}",
        cert.identifiable_a, cert.identifiable_b
    );
    if let Some(ex) = &cert.is_expost {
        println!("  ex post: {} (max payoff gap {:.4})", ex.is_expost, ex.max_gap);
        if let Some(w) = &ex.witness {
            println!(
                "    witness: types ({}, {}), actions ({}, {}) pay {:.3} instead of {:.3}",
                w.type_a, w.type_b, w.action_a, w.action_b, w.payoff_a, ex.value_a
            );
        }
    }
    if let Some(c) = &cert.interim_constancy {
        println!(
            "  interim constancy: {} (max deviation {:.2e})",
            c.holds, c.max_deviation
        );
    }
    let map = OutcomeMap::from_payoff_classes(game);
    let single = verify_single_outcome(game, &map, profile, 1e-9).unwrap();
    println!(
        "  single outcome: {} (top label {:?} with probability {:.3})\n",
        single.single_outcome,
        single.outcome.as_deref().unwrap_or("-"),
        single.top_probability
    );
}

fn main() {
    describe(
        "independent types, truthful play (no completeness)",
        &example1_game(),
        &identity_pure_profile(2),
    );

    describe(
        "rank-3 correlation, odd/even split equilibrium (convex independence only)",
        &convex_independence_game(),
        &convex_independence_profile(),
    );

    // A full-rank structure forces ex-postness on whatever pure equilibria
    // exist; here a saddle game where both firms have a dominant column.
    let game = FiniteBayesGame::new(
        vec![vec![0.4, 0.1], vec![0.1, 0.4]],
        vec![vec![0.6, 0.3], vec![0.8, 0.1]],
        1.0,
    )
    .unwrap();
    let found = expost::enumerate_pure_bne(&game, 1e-9, expost::DEFAULT_CELL_CAP).unwrap();
    println!(
        "full-rank saddle game: {} pure equilibria, all ex post: {}",
        found.profiles.len(),
        found
            .profiles
            .iter()
            .all(|e| e.certificate.is_expost.as_ref().unwrap().is_expost)
    );
}
