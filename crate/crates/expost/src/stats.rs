//! Statistical richness checks on the joint type distribution: completeness,
//! strong linear independence of conditionals, convex independence, and
//! identifiability of strategies.
//!
//! For finite type spaces, completeness for a player is full rank of the
//! joint matrix in the opponent's dimension, and strong linear independence
//! reduces to plain linear independence of the conditional rows.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::game::{BehaviorStrategy, FiniteBayesGame, GameError, Player, ON_PATH_TOL};
use crate::lp::in_convex_hull;

/// Feasibility slack for the convex-hull membership programs.
pub const HULL_SLACK: f64 = 1e-9;

/// Numerical rank of a row-major matrix: singular values at or above
/// `rank_tol` times the largest one count as nonzero.
pub fn matrix_rank(rows: &[Vec<f64>], rank_tol: f64) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let m = DMatrix::from_row_iterator(
        rows.len(),
        rows[0].len(),
        rows.iter().flat_map(|r| r.iter().copied()),
    );
    let svd = m.svd(false, false);
    let max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    svd.singular_values
        .iter()
        .filter(|&&s| s >= rank_tol * max)
        .count()
}

/// Completeness for `player`: no nontrivial function of the opponent's type
/// has zero conditional mean at every own type. Holds iff the joint matrix
/// has rank equal to the opponent's type count. Returns the verdict and the
/// computed rank of the joint matrix.
pub fn check_completeness(
    game: &FiniteBayesGame,
    player: Player,
    rank_tol: f64,
) -> (bool, usize) {
    let rank = matrix_rank(game.joint(), rank_tol);
    (rank == game.n_types(player.other()), rank)
}

/// Strong linear independence of the conditional family `{F(. | s)}` for
/// `player`: in the finite case, full row rank of the conditional matrix.
pub fn check_sli(game: &FiniteBayesGame, player: Player, rank_tol: f64) -> bool {
    let cond = game.conditional_matrix(player);
    matrix_rank(&cond, rank_tol) == game.n_types(player)
}

/// Convex independence for `player`: no conditional distribution lies in the
/// convex hull of the other types' conditionals. Each row is tested with a
/// linear feasibility program at slack [`HULL_SLACK`].
pub fn check_convex_independence(game: &FiniteBayesGame, player: Player) -> bool {
    let cond = game.conditional_matrix(player);
    for r in 0..cond.len() {
        let others: Vec<Vec<f64>> = cond
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != r)
            .map(|(_, row)| row.clone())
            .collect();
        match in_convex_hull(&cond[r], &others, HULL_SLACK) {
            Ok(true) => return false,
            Ok(false) => {}
            // A failed feasibility solve means we could not certify
            // independence; report the conservative verdict.
            Err(_) => return false,
        }
    }
    true
}

/// Identifiability of a behavioral strategy: the sub-matrix restricted to
/// on-path actions has full column rank, so the induced action distributions
/// distinguish every nontrivial function of actions. Pure strategies always
/// qualify.
pub fn check_identifiable(strategy: &BehaviorStrategy) -> bool {
    let on_path: Vec<usize> = (0..strategy.n_acts())
        .filter(|&x| {
            (0..strategy.n_types())
                .map(|s| strategy.prob(s, x))
                .sum::<f64>()
                > ON_PATH_TOL
        })
        .collect();
    if on_path.is_empty() {
        return false;
    }
    let sub: Vec<Vec<f64>> = (0..strategy.n_types())
        .map(|s| on_path.iter().map(|&x| strategy.prob(s, x)).collect())
        .collect();
    matrix_rank(&sub, crate::game::DEFAULT_RANK_TOL) == on_path.len()
}

/// Combined statistical report over both players.
#[derive(Debug, Clone, Serialize)]
pub struct StatisticsReport {
    pub rank_joint: usize,
    pub completeness_a: bool,
    pub completeness_b: bool,
    pub sli_a: bool,
    pub sli_b: bool,
    pub convex_indep_a: bool,
    pub convex_indep_b: bool,
    pub rank_tolerance: f64,
}

pub fn statistics_report(game: &FiniteBayesGame, rank_tol: f64) -> Result<StatisticsReport, GameError> {
    let (completeness_a, rank_joint) = check_completeness(game, Player::A, rank_tol);
    let (completeness_b, _) = check_completeness(game, Player::B, rank_tol);
    Ok(StatisticsReport {
        rank_joint,
        completeness_a,
        completeness_b,
        sli_a: check_sli(game, Player::A, rank_tol),
        sli_b: check_sli(game, Player::B, rank_tol),
        convex_indep_a: check_convex_independence(game, Player::A),
        convex_indep_b: check_convex_independence(game, Player::B),
        rank_tolerance: rank_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{DEFAULT_RANK_TOL, PureStrategy};

    fn game_with_joint(joint: Vec<Vec<f64>>) -> FiniteBayesGame {
        let acts = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        FiniteBayesGame::new(joint, acts, 1.0).unwrap()
    }

    fn rank_deficient_4x4_joint() -> Vec<Vec<f64>> {
        [
            [4.0, 2.0, 1.0, 3.0],
            [2.0, 4.0, 3.0, 1.0],
            [1.0, 3.0, 4.0, 2.0],
            [3.0, 1.0, 2.0, 4.0],
        ]
        .iter()
        .map(|row| row.iter().map(|v| v / 40.0).collect())
        .collect()
    }

    #[test]
    fn independent_types_fail_completeness() {
        let g = game_with_joint(vec![vec![0.25, 0.25], vec![0.25, 0.25]]);
        let (ok, rank) = check_completeness(&g, Player::A, DEFAULT_RANK_TOL);
        assert!(!ok);
        assert_eq!(rank, 1);
        assert!(!check_sli(&g, Player::A, DEFAULT_RANK_TOL));
        assert!(!check_convex_independence(&g, Player::A));
    }

    #[test]
    fn correlated_full_rank_passes_everything() {
        let g = game_with_joint(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        for p in [Player::A, Player::B] {
            let (ok, rank) = check_completeness(&g, p, DEFAULT_RANK_TOL);
            assert!(ok);
            assert_eq!(rank, 2);
            assert!(check_sli(&g, p, DEFAULT_RANK_TOL));
            assert!(check_convex_independence(&g, p));
        }
    }

    #[test]
    fn convex_independence_fixture_is_rank_three_but_convexly_independent() {
        // Rows 1+3 equal rows 2+4, so the rank drops to 3; yet each
        // conditional row puts its largest mass on a distinct opponent type,
        // so none lies in the hull of the others.
        let g = game_with_joint(rank_deficient_4x4_joint());
        for p in [Player::A, Player::B] {
            let (ok, rank) = check_completeness(&g, p, DEFAULT_RANK_TOL);
            assert!(!ok);
            assert_eq!(rank, 3);
            assert!(!check_sli(&g, p, DEFAULT_RANK_TOL));
            assert!(check_convex_independence(&g, p));
        }
    }

    #[test]
    fn identifiability_examples() {
        let pure = BehaviorStrategy::from_pure(
            &PureStrategy {
                player: Player::A,
                action_of: vec![0, 1],
            },
            2,
        )
        .unwrap();
        assert!(check_identifiable(&pure));

        let flat = BehaviorStrategy::new(
            Player::A,
            vec![vec![0.5, 0.5], vec![0.5, 0.5]],
        )
        .unwrap();
        assert!(!check_identifiable(&flat));

        let tilted = BehaviorStrategy::new(
            Player::A,
            vec![vec![0.9, 0.1], vec![0.1, 0.9]],
        )
        .unwrap();
        assert!(check_identifiable(&tilted));
    }

    #[test]
    fn every_pure_strategy_is_identifiable() {
        // All 27 pure maps from 3 types into 3 actions.
        for code in 0..27usize {
            let action_of = vec![code % 3, (code / 3) % 3, (code / 9) % 3];
            let pure = PureStrategy {
                player: Player::B,
                action_of,
            };
            let strat = BehaviorStrategy::from_pure(&pure, 3).unwrap();
            assert!(check_identifiable(&strat), "failed for {pure:?}");
        }
    }
}
