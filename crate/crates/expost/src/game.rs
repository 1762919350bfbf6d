//! Finite two-player constant-sum Bayesian games with type-independent
//! payoffs, plus the strategy containers shared by every other module.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance for "a probability vector sums to one".
pub const PROB_SUM_TOL: f64 = 1e-12;
/// Mass below this is treated as off the equilibrium path.
pub const ON_PATH_TOL: f64 = 1e-12;
/// Default relative singular-value cutoff for rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;
/// Default tolerance for equilibrium verification.
pub const DEFAULT_VERIFY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    A,
    B,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::A => Player::B,
            Player::B => Player::A,
        }
    }
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::A => write!(f, "A"),
            Player::B => write!(f, "B"),
        }
    }
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error("joint type distribution sums to {sum}, expected 1")]
    NonStochasticJoint { sum: f64 },
    #[error("negative probability {value} at joint entry ({row}, {col})")]
    NegativeProbability { row: usize, col: usize, value: f64 },
    #[error("type {index} of player {player} has zero marginal probability")]
    EmptySupport { player: Player, index: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error("behavior strategy row {row} sums to {sum}, expected 1")]
    NonStochasticStrategy { row: usize, sum: f64 },
    #[error("behavior strategy has negative weight {value} at ({row}, {col})")]
    NegativeStrategyWeight { row: usize, col: usize, value: f64 },
    #[error("strategy profile must pair one strategy per player")]
    PlayersNotDistinct,
    #[error("action index {action} out of range for {count} actions")]
    ActionOutOfRange { action: usize, count: usize },
    #[error("profile is not a Bayes-Nash equilibrium at tolerance {tol} (worst regret {regret})")]
    NotAnEquilibrium { regret: f64, tol: f64 },
    #[error("outcome map inconsistent with game payoffs: {0}")]
    InconsistentOutcomeMap(String),
}

/// A finite two-player Bayesian game where payoffs depend only on the action
/// pair and sum to a fixed constant: `u_B = sum_const - u_A` by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteBayesGame {
    joint: Vec<Vec<f64>>,
    payoff_a: Vec<Vec<f64>>,
    sum_const: f64,
}

impl FiniteBayesGame {
    /// Builds a game after checking every structural invariant: rectangular
    /// matrices, nonnegative joint probabilities summing to one, strictly
    /// positive type marginals, and finite payoffs. The first violated
    /// invariant is reported.
    pub fn new(
        joint: Vec<Vec<f64>>,
        payoff_a: Vec<Vec<f64>>,
        sum_const: f64,
    ) -> Result<Self, GameError> {
        if joint.is_empty() || joint[0].is_empty() {
            return Err(GameError::DimensionMismatch(
                "joint distribution must be non-empty".into(),
            ));
        }
        let n_b = joint[0].len();
        for (i, row) in joint.iter().enumerate() {
            if row.len() != n_b {
                return Err(GameError::DimensionMismatch(format!(
                    "joint row {i} has {} entries, expected {n_b}",
                    row.len()
                )));
            }
        }
        if payoff_a.is_empty() || payoff_a[0].is_empty() {
            return Err(GameError::DimensionMismatch(
                "payoff matrix must be non-empty".into(),
            ));
        }
        let acts_b = payoff_a[0].len();
        for (i, row) in payoff_a.iter().enumerate() {
            if row.len() != acts_b {
                return Err(GameError::DimensionMismatch(format!(
                    "payoff row {i} has {} entries, expected {acts_b}",
                    row.len()
                )));
            }
        }
        for (i, row) in joint.iter().enumerate() {
            for (j, &p) in row.iter().enumerate() {
                if !p.is_finite() {
                    return Err(GameError::NonFinite(format!("joint entry ({i}, {j})")));
                }
                if p < 0.0 {
                    return Err(GameError::NegativeProbability {
                        row: i,
                        col: j,
                        value: p,
                    });
                }
            }
        }
        let sum: f64 = joint.iter().flatten().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(GameError::NonStochasticJoint { sum });
        }
        for (i, row) in joint.iter().enumerate() {
            if row.iter().sum::<f64>() <= 0.0 {
                return Err(GameError::EmptySupport {
                    player: Player::A,
                    index: i,
                });
            }
        }
        for j in 0..n_b {
            if joint.iter().map(|row| row[j]).sum::<f64>() <= 0.0 {
                return Err(GameError::EmptySupport {
                    player: Player::B,
                    index: j,
                });
            }
        }
        for (i, row) in payoff_a.iter().enumerate() {
            for (j, &u) in row.iter().enumerate() {
                if !u.is_finite() {
                    return Err(GameError::NonFinite(format!("payoff entry ({i}, {j})")));
                }
            }
        }
        if !sum_const.is_finite() {
            return Err(GameError::NonFinite("constant sum".into()));
        }
        Ok(Self {
            joint,
            payoff_a,
            sum_const,
        })
    }

    pub fn n_types(&self, player: Player) -> usize {
        match player {
            Player::A => self.joint.len(),
            Player::B => self.joint[0].len(),
        }
    }

    pub fn n_acts(&self, player: Player) -> usize {
        match player {
            Player::A => self.payoff_a.len(),
            Player::B => self.payoff_a[0].len(),
        }
    }

    pub fn joint(&self) -> &[Vec<f64>] {
        &self.joint
    }

    pub fn joint_prob(&self, s_a: usize, s_b: usize) -> f64 {
        self.joint[s_a][s_b]
    }

    pub fn payoff_matrix_a(&self) -> &[Vec<f64>] {
        &self.payoff_a
    }

    pub fn sum_const(&self) -> f64 {
        self.sum_const
    }

    /// Payoff to `player` when A plays `x_a` and B plays `x_b`.
    pub fn payoff(&self, player: Player, x_a: usize, x_b: usize) -> f64 {
        match player {
            Player::A => self.payoff_a[x_a][x_b],
            Player::B => self.sum_const - self.payoff_a[x_a][x_b],
        }
    }

    /// Uniform payoff bound K = max(|u_A|, |u_B|).
    pub fn payoff_bound(&self) -> f64 {
        self.payoff_a
            .iter()
            .flatten()
            .map(|&u| u.abs().max((self.sum_const - u).abs()))
            .fold(0.0, f64::max)
    }

    /// Marginal type distribution of `player`.
    pub fn marginal(&self, player: Player) -> Vec<f64> {
        match player {
            Player::A => self.joint.iter().map(|row| row.iter().sum()).collect(),
            Player::B => (0..self.n_types(Player::B))
                .map(|j| self.joint.iter().map(|row| row[j]).sum())
                .collect(),
        }
    }

    /// Conditional distribution of the opponent's type given `player`'s type:
    /// row `s` is `F(s_other | s_player = s)`.
    pub fn conditional_matrix(&self, player: Player) -> Vec<Vec<f64>> {
        (0..self.n_types(player))
            .map(|s| self.conditional_row(player, s))
            .collect()
    }

    pub fn conditional_row(&self, player: Player, s: usize) -> Vec<f64> {
        match player {
            Player::A => {
                let m: f64 = self.joint[s].iter().sum();
                self.joint[s].iter().map(|&p| p / m).collect()
            }
            Player::B => {
                let m: f64 = self.joint.iter().map(|row| row[s]).sum();
                self.joint.iter().map(|row| row[s] / m).collect()
            }
        }
    }
}

/// Pure strategy: one action per type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PureStrategy {
    pub player: Player,
    pub action_of: Vec<usize>,
}

/// Behavioral strategy: one action distribution per type. Pure strategies
/// embed as 0/1 rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BehaviorStrategy {
    player: Player,
    dist: Vec<Vec<f64>>,
}

impl BehaviorStrategy {
    pub fn new(player: Player, dist: Vec<Vec<f64>>) -> Result<Self, GameError> {
        if dist.is_empty() || dist[0].is_empty() {
            return Err(GameError::DimensionMismatch(
                "behavior strategy must be non-empty".into(),
            ));
        }
        let n_acts = dist[0].len();
        for (s, row) in dist.iter().enumerate() {
            if row.len() != n_acts {
                return Err(GameError::DimensionMismatch(format!(
                    "strategy row {s} has {} entries, expected {n_acts}",
                    row.len()
                )));
            }
            for (x, &w) in row.iter().enumerate() {
                if !w.is_finite() {
                    return Err(GameError::NonFinite(format!("strategy weight ({s}, {x})")));
                }
                if w < 0.0 {
                    return Err(GameError::NegativeStrategyWeight {
                        row: s,
                        col: x,
                        value: w,
                    });
                }
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > PROB_SUM_TOL {
                return Err(GameError::NonStochasticStrategy { row: s, sum });
            }
        }
        Ok(Self { player, dist })
    }

    /// Embeds a pure strategy as 0/1 rows over `n_acts` actions.
    pub fn from_pure(pure: &PureStrategy, n_acts: usize) -> Result<Self, GameError> {
        let mut dist = vec![vec![0.0; n_acts]; pure.action_of.len()];
        for (s, &a) in pure.action_of.iter().enumerate() {
            if a >= n_acts {
                return Err(GameError::ActionOutOfRange {
                    action: a,
                    count: n_acts,
                });
            }
            dist[s][a] = 1.0;
        }
        BehaviorStrategy::new(pure.player, dist)
    }

    pub fn uniform(player: Player, n_types: usize, n_acts: usize) -> Self {
        let w = 1.0 / n_acts as f64;
        Self {
            player,
            dist: vec![vec![w; n_acts]; n_types],
        }
    }

    /// Constant strategy that plays `action` at every type.
    pub fn constant(
        player: Player,
        n_types: usize,
        n_acts: usize,
        action: usize,
    ) -> Result<Self, GameError> {
        BehaviorStrategy::from_pure(
            &PureStrategy {
                player,
                action_of: vec![action; n_types],
            },
            n_acts,
        )
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn n_types(&self) -> usize {
        self.dist.len()
    }

    pub fn n_acts(&self) -> usize {
        self.dist[0].len()
    }

    pub fn prob(&self, s: usize, x: usize) -> f64 {
        self.dist[s][x]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.dist
    }

    /// Actions with positive mass at type `s`.
    pub fn support(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        self.dist[s]
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > ON_PATH_TOL)
            .map(|(x, _)| x)
    }

    /// Actions with positive mass at some type.
    pub fn on_path_actions(&self) -> Vec<usize> {
        (0..self.n_acts())
            .filter(|&x| self.dist.iter().any(|row| row[x] > ON_PATH_TOL))
            .collect()
    }

    /// Returns the pure strategy when every row is degenerate.
    pub fn as_pure(&self) -> Option<PureStrategy> {
        let mut action_of = Vec::with_capacity(self.n_types());
        for row in &self.dist {
            let x = row.iter().position(|&w| w == 1.0)?;
            action_of.push(x);
        }
        Some(PureStrategy {
            player: self.player,
            action_of,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyProfile {
    strat_a: BehaviorStrategy,
    strat_b: BehaviorStrategy,
}

impl StrategyProfile {
    pub fn new(strat_a: BehaviorStrategy, strat_b: BehaviorStrategy) -> Result<Self, GameError> {
        if strat_a.player() != Player::A || strat_b.player() != Player::B {
            return Err(GameError::PlayersNotDistinct);
        }
        Ok(Self { strat_a, strat_b })
    }

    pub fn strategy(&self, player: Player) -> &BehaviorStrategy {
        match player {
            Player::A => &self.strat_a,
            Player::B => &self.strat_b,
        }
    }

    /// Checks that both strategies match the game's type and action counts.
    pub fn check_dims(&self, game: &FiniteBayesGame) -> Result<(), GameError> {
        for player in [Player::A, Player::B] {
            let s = self.strategy(player);
            if s.n_types() != game.n_types(player) || s.n_acts() != game.n_acts(player) {
                return Err(GameError::DimensionMismatch(format!(
                    "strategy for {player} is {}x{}, game expects {}x{}",
                    s.n_types(),
                    s.n_acts(),
                    game.n_types(player),
                    game.n_acts(player)
                )));
            }
        }
        Ok(())
    }
}

/// Expected payoff to `player` of playing `action` at type `type_idx`,
/// against the opponent's strategy composed with the conditional type
/// distribution.
pub fn interim_payoff(
    game: &FiniteBayesGame,
    profile: &StrategyProfile,
    player: Player,
    type_idx: usize,
    action: usize,
) -> f64 {
    let cond = game.conditional_row(player, type_idx);
    interim_payoff_against(game, profile.strategy(player.other()), player, &cond, action)
}

/// Interim payoff given a precomputed conditional row; shared by the
/// verifiers and the solver so both sides evaluate identical sums.
pub(crate) fn interim_payoff_against(
    game: &FiniteBayesGame,
    opponent: &BehaviorStrategy,
    player: Player,
    cond_row: &[f64],
    action: usize,
) -> f64 {
    let mut total = 0.0;
    for (s_opp, &p) in cond_row.iter().enumerate() {
        for x_opp in 0..opponent.n_acts() {
            let u = match player {
                Player::A => game.payoff(Player::A, action, x_opp),
                Player::B => game.payoff(Player::B, x_opp, action),
            };
            total += p * opponent.prob(s_opp, x_opp) * u;
        }
    }
    total
}

/// Ex-ante expected payoff to player A under `profile`.
pub fn expected_value(game: &FiniteBayesGame, profile: &StrategyProfile) -> f64 {
    let mut total = 0.0;
    for s_a in 0..game.n_types(Player::A) {
        for s_b in 0..game.n_types(Player::B) {
            let p = game.joint_prob(s_a, s_b);
            if p == 0.0 {
                continue;
            }
            for x_a in 0..game.n_acts(Player::A) {
                let wa = profile.strategy(Player::A).prob(s_a, x_a);
                if wa == 0.0 {
                    continue;
                }
                for x_b in 0..game.n_acts(Player::B) {
                    let wb = profile.strategy(Player::B).prob(s_b, x_b);
                    total += p * wa * wb * game.payoff(Player::A, x_a, x_b);
                }
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform_2x2_matching_pennies() -> FiniteBayesGame {
        FiniteBayesGame::new(
            vec![vec![0.25, 0.25], vec![0.25, 0.25]],
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            1.0,
        )
        .unwrap()
    }

    #[test]
    fn accepts_matching_pennies_fixture() {
        let g = uniform_2x2_matching_pennies();
        assert_eq!(g.n_types(Player::A), 2);
        assert_eq!(g.n_acts(Player::B), 2);
        assert_eq!(g.payoff(Player::B, 0, 0), 0.0);
        assert_eq!(g.payoff_bound(), 1.0);
    }

    #[test]
    fn rejects_zero_marginal() {
        let err = FiniteBayesGame::new(
            vec![vec![0.5, 0.5], vec![0.0, 0.0]],
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            1.0,
        )
        .unwrap_err();
        match err {
            GameError::EmptySupport { player, index } => {
                assert_eq!(player, Player::A);
                assert_eq!(index, 1);
            }
            other => panic!("expected EmptySupport, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_stochastic_joint() {
        let err = FiniteBayesGame::new(
            vec![vec![0.5, 0.2], vec![0.1, 0.1]],
            vec![vec![0.0]],
            0.0,
        )
        .unwrap_err();
        assert!(matches!(err, GameError::NonStochasticJoint { .. }));
    }

    #[test]
    fn rejects_negative_probability() {
        let err = FiniteBayesGame::new(
            vec![vec![0.6, -0.1], vec![0.3, 0.2]],
            vec![vec![0.0]],
            0.0,
        )
        .unwrap_err();
        assert!(matches!(err, GameError::NegativeProbability { .. }));
    }

    #[test]
    fn conditional_matrix_normalizes_rows() {
        let g = uniform_2x2_matching_pennies();
        let c = g.conditional_matrix(Player::A);
        assert_eq!(c, vec![vec![0.5, 0.5], vec![0.5, 0.5]]);

        let g = FiniteBayesGame::new(
            vec![vec![0.4, 0.1], vec![0.1, 0.4]],
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            1.0,
        )
        .unwrap();
        let c = g.conditional_matrix(Player::A);
        for (row, expected) in c.iter().zip([[0.8, 0.2], [0.2, 0.8]]) {
            for (got, want) in row.iter().zip(expected) {
                assert!((got - want).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn uniform_marginal_conditional_is_rescaled_joint() {
        let joint: Vec<Vec<f64>> = [
            [4.0, 2.0, 1.0, 3.0],
            [2.0, 4.0, 3.0, 1.0],
            [1.0, 3.0, 4.0, 2.0],
            [3.0, 1.0, 2.0, 4.0],
        ]
        .iter()
        .map(|row| row.iter().map(|v| v / 40.0).collect())
        .collect();
        let g = FiniteBayesGame::new(joint.clone(), vec![vec![0.0]], 0.0).unwrap();
        // Uniform marginals of 1/4: each conditional row is the joint row
        // rescaled by 4, i.e. the integer matrix divided by 10.
        let c = g.conditional_matrix(Player::A);
        for (crow, jrow) in c.iter().zip(&joint) {
            for (got, &j) in crow.iter().zip(jrow) {
                assert!((got - j * 4.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn interim_payoff_examples() {
        let g = uniform_2x2_matching_pennies();
        let identity = |p| {
            BehaviorStrategy::from_pure(
                &PureStrategy {
                    player: p,
                    action_of: vec![0, 1],
                },
                2,
            )
            .unwrap()
        };
        let profile = StrategyProfile::new(identity(Player::A), identity(Player::B)).unwrap();
        // Against an opponent whose induced action is uniform, matching pays 0.5.
        assert_eq!(interim_payoff(&g, &profile, Player::A, 0, 0), 0.5);

        // Opponent pinned to action 0: matching it pays 1 deterministically.
        let const_b = BehaviorStrategy::constant(Player::B, 2, 2, 0).unwrap();
        let profile = StrategyProfile::new(identity(Player::A), const_b).unwrap();
        assert_eq!(interim_payoff(&g, &profile, Player::A, 0, 0), 1.0);
        assert_eq!(interim_payoff(&g, &profile, Player::A, 1, 0), 1.0);
    }

    #[test]
    fn pure_strategies_round_trip() {
        let pure = PureStrategy {
            player: Player::A,
            action_of: vec![2, 0, 1],
        };
        let behavior = BehaviorStrategy::from_pure(&pure, 3).unwrap();
        assert_eq!(behavior.as_pure().unwrap(), pure);
        assert_eq!(behavior.on_path_actions(), vec![0, 1, 2]);
        assert!(BehaviorStrategy::uniform(Player::B, 2, 2).as_pure().is_none());
    }
}
