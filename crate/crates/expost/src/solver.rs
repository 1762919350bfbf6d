//! Value and equilibria of finite constant-sum Bayesian games: the ex-ante
//! normal-form reduction, minimax linear programming, security levels, best
//! responses, and exhaustive pure-equilibrium enumeration for desk-scale
//! games.

use serde::Serialize;
use thiserror::Error;

use crate::game::{
    interim_payoff_against, BehaviorStrategy, FiniteBayesGame, GameError, Player, PureStrategy,
    StrategyProfile,
};
use crate::lp::{solve_matrix_game, LpError};
use crate::verify::{certify, EquilibriumCertificate};

/// Default cap on induced normal-form cells; the reduction is exponential.
pub const DEFAULT_CELL_CAP: u128 = 1_000_000;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("induced normal form needs {cells} cells, exceeding the cap of {cap}")]
    SizeCapExceeded { cells: u128, cap: u128 },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// Action that induced pure strategy `index` assigns to `type_idx`.
///
/// Indices enumerate action tuples lexicographically with type 0 as the
/// most significant digit, so ascending indices are ascending profiles.
pub fn pure_action(index: usize, type_idx: usize, n_types: usize, n_acts: usize) -> usize {
    let place = n_acts.pow((n_types - 1 - type_idx) as u32);
    (index / place) % n_acts
}

pub fn pure_strategy_from_index(
    player: Player,
    index: usize,
    n_types: usize,
    n_acts: usize,
) -> PureStrategy {
    PureStrategy {
        player,
        action_of: (0..n_types)
            .map(|t| pure_action(index, t, n_types, n_acts))
            .collect(),
    }
}

fn pure_counts(game: &FiniteBayesGame, cap: u128) -> Result<(usize, usize), SolverError> {
    let count = |player| {
        (game.n_acts(player) as u128).checked_pow(game.n_types(player) as u32)
    };
    let (Some(ca), Some(cb)) = (count(Player::A), count(Player::B)) else {
        return Err(SolverError::SizeCapExceeded {
            cells: u128::MAX,
            cap,
        });
    };
    let cells = ca.saturating_mul(cb);
    if cells > cap {
        return Err(SolverError::SizeCapExceeded { cells, cap });
    }
    Ok((ca as usize, cb as usize))
}

/// Ex-ante normal form over induced pure strategies: entry `(i, j)` is the
/// expected payoff to A when A commits to pure strategy `i` and B to `j`.
#[derive(Debug, Clone)]
pub struct InducedNormalForm {
    pub pure_count_a: usize,
    pub pure_count_b: usize,
    pub expected_payoff: Vec<Vec<f64>>,
}

pub fn induce_normal_form(
    game: &FiniteBayesGame,
    cap: u128,
) -> Result<InducedNormalForm, SolverError> {
    let (count_a, count_b) = pure_counts(game, cap)?;
    let n_types_a = game.n_types(Player::A);
    let n_types_b = game.n_types(Player::B);
    let n_acts_a = game.n_acts(Player::A);
    let n_acts_b = game.n_acts(Player::B);
    let mut expected = vec![vec![0.0; count_b]; count_a];
    for (i, row) in expected.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut total = 0.0;
            for s_a in 0..n_types_a {
                let x_a = pure_action(i, s_a, n_types_a, n_acts_a);
                for s_b in 0..n_types_b {
                    let x_b = pure_action(j, s_b, n_types_b, n_acts_b);
                    total += game.joint_prob(s_a, s_b) * game.payoff(Player::A, x_a, x_b);
                }
            }
            *cell = total;
        }
    }
    Ok(InducedNormalForm {
        pure_count_a: count_a,
        pure_count_b: count_b,
        expected_payoff: expected,
    })
}

/// Minimax solution of the ex-ante game: the unique equilibrium value plus
/// optimal mixtures over induced pure strategies and their behavioral
/// projections.
#[derive(Debug, Clone, Serialize)]
pub struct MinimaxSolution {
    pub value: f64,
    pub mixed_a: Vec<f64>,
    pub mixed_b: Vec<f64>,
    pub behavioral_a: BehaviorStrategy,
    pub behavioral_b: BehaviorStrategy,
}

/// Solves the game by LP on the induced normal form. The behavioral
/// projection keeps each type's marginal action distribution, which is
/// payoff-equivalent in this ex-ante reduction.
pub fn solve_minimax_lp(game: &FiniteBayesGame, cap: u128) -> Result<MinimaxSolution, SolverError> {
    let induced = induce_normal_form(game, cap)?;
    let sol = solve_matrix_game(&induced.expected_payoff)?;
    let behavioral_a = project_behavioral(game, Player::A, &sol.row_strategy)?;
    let behavioral_b = project_behavioral(game, Player::B, &sol.col_strategy)?;
    Ok(MinimaxSolution {
        value: sol.value,
        mixed_a: sol.row_strategy,
        mixed_b: sol.col_strategy,
        behavioral_a,
        behavioral_b,
    })
}

fn project_behavioral(
    game: &FiniteBayesGame,
    player: Player,
    weights: &[f64],
) -> Result<BehaviorStrategy, SolverError> {
    let n_types = game.n_types(player);
    let n_acts = game.n_acts(player);
    let mut dist = vec![vec![0.0; n_acts]; n_types];
    for (index, &w) in weights.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        for (t, row) in dist.iter_mut().enumerate() {
            row[pure_action(index, t, n_types, n_acts)] += w;
        }
    }
    // Repair accumulated rounding so each row is exactly stochastic.
    for row in &mut dist {
        let sum: f64 = row.iter().sum();
        for v in row.iter_mut() {
            *v /= sum;
        }
    }
    Ok(BehaviorStrategy::new(player, dist)?)
}

/// Worst-case expected payoff of `strategy` over all opponent replies.
///
/// The opponent's best reply decomposes type by type, so the minimum over
/// induced pure strategies is a per-type minimum.
pub fn security_level(game: &FiniteBayesGame, strategy: &BehaviorStrategy) -> f64 {
    let player = strategy.player();
    let opp = player.other();
    let mut total = 0.0;
    for s_opp in 0..game.n_types(opp) {
        let mut best_for_opp = f64::INFINITY;
        for x_opp in 0..game.n_acts(opp) {
            let mut contribution = 0.0;
            for s_own in 0..game.n_types(player) {
                let p = match player {
                    Player::A => game.joint_prob(s_own, s_opp),
                    Player::B => game.joint_prob(s_opp, s_own),
                };
                if p == 0.0 {
                    continue;
                }
                for x_own in 0..game.n_acts(player) {
                    let u = match player {
                        Player::A => game.payoff(Player::A, x_own, x_opp),
                        Player::B => game.payoff(Player::B, x_opp, x_own),
                    };
                    contribution += p * strategy.prob(s_own, x_own) * u;
                }
            }
            best_for_opp = best_for_opp.min(contribution);
        }
        total += best_for_opp;
    }
    total
}

/// Pure best response to `opponent`: per type, an interim-payoff maximizing
/// action, ties broken toward the lowest action index. Also returns the
/// per-type payoffs achieved.
pub fn best_response(
    game: &FiniteBayesGame,
    opponent: &BehaviorStrategy,
    player: Player,
) -> (PureStrategy, Vec<f64>) {
    let mut action_of = Vec::with_capacity(game.n_types(player));
    let mut payoffs = Vec::with_capacity(game.n_types(player));
    for s in 0..game.n_types(player) {
        let cond = game.conditional_row(player, s);
        let mut best_x = 0;
        let mut best_u = f64::NEG_INFINITY;
        for x in 0..game.n_acts(player) {
            let u = interim_payoff_against(game, opponent, player, &cond, x);
            if u > best_u {
                best_u = u;
                best_x = x;
            }
        }
        action_of.push(best_x);
        payoffs.push(best_u);
    }
    (PureStrategy { player, action_of }, payoffs)
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumeratedBne {
    pub pure_a: PureStrategy,
    pub pure_b: PureStrategy,
    pub certificate: EquilibriumCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct BneEnumeration {
    pub profiles: Vec<EnumeratedBne>,
    pub searched: usize,
    pub tolerance: f64,
}

/// All pure Bayes-Nash equilibria at tolerance `tol`, in lexicographic
/// profile order, each with its full certificate.
pub fn enumerate_pure_bne(
    game: &FiniteBayesGame,
    tol: f64,
    cap: u128,
) -> Result<BneEnumeration, SolverError> {
    let (count_a, count_b) = pure_counts(game, cap)?;
    let n_types_a = game.n_types(Player::A);
    let n_types_b = game.n_types(Player::B);
    let n_acts_a = game.n_acts(Player::A);
    let n_acts_b = game.n_acts(Player::B);
    let cond_a = game.conditional_matrix(Player::A);
    let cond_b = game.conditional_matrix(Player::B);

    // Interim payoff tables against every opponent pure strategy. The sums
    // run in the same order as `interim_payoff`, so the screen below agrees
    // with the certificate verification bit for bit.
    let mut table_a = vec![vec![0.0; n_types_a * n_acts_a]; count_b];
    let mut best_a = vec![vec![f64::NEG_INFINITY; n_types_a]; count_b];
    for j in 0..count_b {
        for s_a in 0..n_types_a {
            for x_a in 0..n_acts_a {
                let mut u = 0.0;
                for (s_b, &p) in cond_a[s_a].iter().enumerate() {
                    let x_b = pure_action(j, s_b, n_types_b, n_acts_b);
                    u += p * game.payoff(Player::A, x_a, x_b);
                }
                table_a[j][s_a * n_acts_a + x_a] = u;
                best_a[j][s_a] = best_a[j][s_a].max(u);
            }
        }
    }
    let mut table_b = vec![vec![0.0; n_types_b * n_acts_b]; count_a];
    let mut best_b = vec![vec![f64::NEG_INFINITY; n_types_b]; count_a];
    for i in 0..count_a {
        for s_b in 0..n_types_b {
            for x_b in 0..n_acts_b {
                let mut u = 0.0;
                for (s_a, &p) in cond_b[s_b].iter().enumerate() {
                    let x_a = pure_action(i, s_a, n_types_a, n_acts_a);
                    u += p * game.payoff(Player::B, x_a, x_b);
                }
                table_b[i][s_b * n_acts_b + x_b] = u;
                best_b[i][s_b] = best_b[i][s_b].max(u);
            }
        }
    }

    let mut profiles = Vec::new();
    for i in 0..count_a {
        for j in 0..count_b {
            let a_ok = (0..n_types_a).all(|s| {
                let x = pure_action(i, s, n_types_a, n_acts_a);
                best_a[j][s] - table_a[j][s * n_acts_a + x] <= tol
            });
            if !a_ok {
                continue;
            }
            let b_ok = (0..n_types_b).all(|s| {
                let x = pure_action(j, s, n_types_b, n_acts_b);
                best_b[i][s] - table_b[i][s * n_acts_b + x] <= tol
            });
            if !b_ok {
                continue;
            }
            let pure_a = pure_strategy_from_index(Player::A, i, n_types_a, n_acts_a);
            let pure_b = pure_strategy_from_index(Player::B, j, n_types_b, n_acts_b);
            let profile = StrategyProfile::new(
                BehaviorStrategy::from_pure(&pure_a, n_acts_a)?,
                BehaviorStrategy::from_pure(&pure_b, n_acts_b)?,
            )?;
            let certificate = certify(game, &profile, tol)?;
            debug_assert!(certificate.is_bne.is_bne);
            profiles.push(EnumeratedBne {
                pure_a,
                pure_b,
                certificate,
            });
        }
    }
    Ok(BneEnumeration {
        profiles,
        searched: count_a * count_b,
        tolerance: tol,
    })
}
