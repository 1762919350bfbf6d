//! Dual-sphere firm competition: two firms whose choices split a private
//! market and trigger a government action, making total firm payoff
//! constant-sum. Builds the induced Bayesian game between the firms,
//! verifies on-path surplus constancy, and computes what a statistic of the
//! firms' choices reveals about the state.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::game::{FiniteBayesGame, GameError, Player, StrategyProfile, ON_PATH_TOL};
use crate::verify::verify_bne;

#[derive(Debug, Error)]
pub enum DualError {
    #[error("market share {value} at ({row}, {col}) is outside [0, 1]")]
    MarketOutOfRange { row: usize, col: usize, value: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("government strategy is missing statistic {0:?}")]
    MissingStatistic(String),
    #[error("government strategy row {0:?} does not sum to 1")]
    NonStochasticGovernment(String),
    #[error("unknown government action {0:?}")]
    UnknownGovAction(String),
    #[error("valuation missing for government action {0:?}")]
    MissingValuation(String),
    #[error("statistic {0:?} has zero probability on path")]
    UnreachableStatistic(String),
    #[error("no state map supplied")]
    StateMapMissing,
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Market shares, the statistic observed by the government, its action set
/// and firm-A valuation, the joint firm-type distribution, and an optional
/// labelling of states by type pair.
#[derive(Debug, Clone)]
pub struct DualSphereGame {
    market: Vec<Vec<f64>>,
    statistic_of: Vec<Vec<String>>,
    gov_actions: Vec<String>,
    valuation: BTreeMap<String, f64>,
    type_dist: Vec<Vec<f64>>,
    state_of: Option<Vec<Vec<String>>>,
}

impl DualSphereGame {
    pub fn new(
        market: Vec<Vec<f64>>,
        statistic_of: Vec<Vec<String>>,
        gov_actions: Vec<String>,
        valuation: BTreeMap<String, f64>,
        type_dist: Vec<Vec<f64>>,
        state_of: Option<Vec<Vec<String>>>,
    ) -> Result<Self, DualError> {
        if market.is_empty() || market[0].is_empty() {
            return Err(DualError::DimensionMismatch("empty market matrix".into()));
        }
        let (acts_a, acts_b) = (market.len(), market[0].len());
        for (i, row) in market.iter().enumerate() {
            if row.len() != acts_b {
                return Err(DualError::DimensionMismatch(format!(
                    "market row {i} has {} entries, expected {acts_b}",
                    row.len()
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&m) {
                    return Err(DualError::MarketOutOfRange {
                        row: i,
                        col: j,
                        value: m,
                    });
                }
            }
        }
        if statistic_of.len() != acts_a || statistic_of.iter().any(|r| r.len() != acts_b) {
            return Err(DualError::DimensionMismatch(
                "statistic map must cover every action pair".into(),
            ));
        }
        for action in &gov_actions {
            let v = valuation
                .get(action)
                .ok_or_else(|| DualError::MissingValuation(action.clone()))?;
            if !v.is_finite() {
                return Err(DualError::MissingValuation(action.clone()));
            }
        }
        if let Some(states) = &state_of {
            if states.len() != type_dist.len()
                || states
                    .iter()
                    .zip(&type_dist)
                    .any(|(srow, trow)| srow.len() != trow.len())
            {
                return Err(DualError::DimensionMismatch(
                    "state map must cover every type pair".into(),
                ));
            }
        }
        Ok(Self {
            market,
            statistic_of,
            gov_actions,
            valuation,
            type_dist,
            state_of,
        })
    }

    pub fn n_acts(&self, player: Player) -> usize {
        match player {
            Player::A => self.market.len(),
            Player::B => self.market[0].len(),
        }
    }

    pub fn market_share(&self, x_a: usize, x_b: usize) -> f64 {
        self.market[x_a][x_b]
    }

    pub fn statistic(&self, x_a: usize, x_b: usize) -> &str {
        &self.statistic_of[x_a][x_b]
    }

    pub fn gov_actions(&self) -> &[String] {
        &self.gov_actions
    }

    pub fn type_dist(&self) -> &[Vec<f64>] {
        &self.type_dist
    }
}

/// A government strategy: a mixture over actions for every statistic value.
#[derive(Debug, Clone, Serialize)]
pub struct GovernmentStrategy {
    mixing: BTreeMap<String, BTreeMap<String, f64>>,
}

impl GovernmentStrategy {
    pub fn new(
        game: &DualSphereGame,
        mixing: BTreeMap<String, BTreeMap<String, f64>>,
    ) -> Result<Self, DualError> {
        for (statistic, weights) in &mixing {
            let mut total = 0.0;
            for (action, &w) in weights {
                if !game.gov_actions.iter().any(|a| a == action) {
                    return Err(DualError::UnknownGovAction(action.clone()));
                }
                if !(0.0..=1.0).contains(&w) {
                    return Err(DualError::NonStochasticGovernment(statistic.clone()));
                }
                total += w;
            }
            if (total - 1.0).abs() > 1e-12 {
                return Err(DualError::NonStochasticGovernment(statistic.clone()));
            }
        }
        Ok(Self { mixing })
    }

    /// Deterministic strategy mapping each statistic to one action.
    pub fn deterministic(
        game: &DualSphereGame,
        choice: &[(&str, &str)],
    ) -> Result<Self, DualError> {
        let mixing = choice
            .iter()
            .map(|(stat, action)| {
                (
                    stat.to_string(),
                    BTreeMap::from([(action.to_string(), 1.0)]),
                )
            })
            .collect();
        Self::new(game, mixing)
    }

    /// Expected firm-A valuation of the government's mixture at `statistic`.
    pub fn expected_valuation(
        &self,
        game: &DualSphereGame,
        statistic: &str,
    ) -> Result<f64, DualError> {
        let weights = self
            .mixing
            .get(statistic)
            .ok_or_else(|| DualError::MissingStatistic(statistic.to_string()))?;
        Ok(weights
            .iter()
            .map(|(action, w)| w * game.valuation[action])
            .sum())
    }
}

/// The constant-sum Bayesian game the firms face once the government's
/// strategy is fixed: firm A's payoff is `m(x_A, x_B) + v_alpha(x_A, x_B)`
/// and firm B's is its negation.
pub fn induce_firm_game(
    dsg: &DualSphereGame,
    gov: &GovernmentStrategy,
) -> Result<FiniteBayesGame, DualError> {
    let mut payoff = vec![vec![0.0; dsg.n_acts(Player::B)]; dsg.n_acts(Player::A)];
    for (x_a, row) in payoff.iter_mut().enumerate() {
        for (x_b, cell) in row.iter_mut().enumerate() {
            *cell = dsg.market_share(x_a, x_b)
                + gov.expected_valuation(dsg, dsg.statistic(x_a, x_b))?;
        }
    }
    Ok(FiniteBayesGame::new(dsg.type_dist.clone(), payoff, 0.0)?)
}

/// Verdict of the on-path surplus constancy check.
#[derive(Debug, Clone, Serialize)]
pub struct SurplusConstancy {
    pub is_constant: bool,
    /// The on-path surplus value when constant.
    pub constant: Option<f64>,
    pub max_gap: f64,
    /// A pair of on-path action profiles with differing surplus, if any.
    pub witness: Option<SurplusWitness>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurplusWitness {
    pub low_pair: (usize, usize),
    pub low_surplus: f64,
    pub high_pair: (usize, usize),
    pub high_surplus: f64,
}

/// Checks that `m + v_alpha` is constant across positive-probability action
/// pairs of an equilibrium profile. The profile must pass the Bayes-Nash
/// check on the induced firm game first.
pub fn verify_surplus_constancy(
    dsg: &DualSphereGame,
    gov: &GovernmentStrategy,
    profile: &StrategyProfile,
    tol: f64,
) -> Result<SurplusConstancy, DualError> {
    let game = induce_firm_game(dsg, gov)?;
    let bne = verify_bne(&game, profile, tol)?;
    if !bne.is_bne {
        return Err(DualError::Game(GameError::NotAnEquilibrium {
            regret: bne.worst_regret,
            tol,
        }));
    }
    let mut low: Option<((usize, usize), f64)> = None;
    let mut high: Option<((usize, usize), f64)> = None;
    for x_a in 0..dsg.n_acts(Player::A) {
        for x_b in 0..dsg.n_acts(Player::B) {
            if path_probability(dsg, profile, x_a, x_b) <= ON_PATH_TOL {
                continue;
            }
            let surplus = game.payoff(Player::A, x_a, x_b);
            if low.is_none() || surplus < low.unwrap().1 {
                low = Some(((x_a, x_b), surplus));
            }
            if high.is_none() || surplus > high.unwrap().1 {
                high = Some(((x_a, x_b), surplus));
            }
        }
    }
    let (low, high) = (low.expect("some pair is on path"), high.expect("some pair is on path"));
    let max_gap = high.1 - low.1;
    let is_constant = max_gap <= tol;
    Ok(SurplusConstancy {
        is_constant,
        constant: is_constant.then_some(low.1),
        max_gap,
        witness: (!is_constant).then_some(SurplusWitness {
            low_pair: low.0,
            low_surplus: low.1,
            high_pair: high.0,
            high_surplus: high.1,
        }),
        tolerance: tol,
    })
}

fn path_probability(
    dsg: &DualSphereGame,
    profile: &StrategyProfile,
    x_a: usize,
    x_b: usize,
) -> f64 {
    let mut total = 0.0;
    for (s_a, row) in dsg.type_dist.iter().enumerate() {
        let wa = profile.strategy(Player::A).prob(s_a, x_a);
        if wa == 0.0 {
            continue;
        }
        for (s_b, &p) in row.iter().enumerate() {
            total += p * wa * profile.strategy(Player::B).prob(s_b, x_b);
        }
    }
    total
}

/// Bayes posterior over state labels given that the government observed
/// `statistic`, under the firms' profile and the type distribution.
pub fn posterior_from_statistic(
    dsg: &DualSphereGame,
    profile: &StrategyProfile,
    statistic: &str,
) -> Result<BTreeMap<String, f64>, DualError> {
    let states = dsg.state_of.as_ref().ok_or(DualError::StateMapMissing)?;
    let mut mass: BTreeMap<String, f64> = BTreeMap::new();
    let mut total = 0.0;
    for (s_a, row) in dsg.type_dist.iter().enumerate() {
        for (s_b, &p) in row.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            for x_a in 0..dsg.n_acts(Player::A) {
                let wa = profile.strategy(Player::A).prob(s_a, x_a);
                if wa == 0.0 {
                    continue;
                }
                for x_b in 0..dsg.n_acts(Player::B) {
                    if dsg.statistic(x_a, x_b) != statistic {
                        continue;
                    }
                    let w = p * wa * profile.strategy(Player::B).prob(s_b, x_b);
                    if w > 0.0 {
                        *mass.entry(states[s_a][s_b].clone()).or_insert(0.0) += w;
                        total += w;
                    }
                }
            }
        }
    }
    if total <= ON_PATH_TOL {
        return Err(DualError::UnreachableStatistic(statistic.to_string()));
    }
    for v in mass.values_mut() {
        *v /= total;
    }
    Ok(mass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{BehaviorStrategy, PureStrategy};

    /// The 4-cell fixture: uniform independent binary types, theta = 1 when
    /// the signals agree, market share |x_A - x_B|, statistic = market.
    fn counterexample(with_valuation: bool) -> (DualSphereGame, GovernmentStrategy) {
        let market = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let statistic = vec![
            vec!["m=0".to_string(), "m=1".to_string()],
            vec!["m=1".to_string(), "m=0".to_string()],
        ];
        let state = vec![
            vec!["theta=1".to_string(), "theta=0".to_string()],
            vec!["theta=0".to_string(), "theta=1".to_string()],
        ];
        let uniform = vec![vec![0.25, 0.25], vec![0.25, 0.25]];
        if with_valuation {
            let game = DualSphereGame::new(
                market,
                statistic,
                vec!["a=0".into(), "a=1".into()],
                BTreeMap::from([("a=0".to_string(), 0.0), ("a=1".to_string(), 1.0)]),
                uniform,
                Some(state),
            )
            .unwrap();
            // Government plays a = E[theta | m] = 1 - m.
            let gov =
                GovernmentStrategy::deterministic(&game, &[("m=0", "a=1"), ("m=1", "a=0")])
                    .unwrap();
            (game, gov)
        } else {
            let game = DualSphereGame::new(
                market,
                statistic,
                vec!["none".into()],
                BTreeMap::from([("none".to_string(), 0.0)]),
                uniform,
                Some(state),
            )
            .unwrap();
            let gov = GovernmentStrategy::deterministic(
                &game,
                &[("m=0", "none"), ("m=1", "none")],
            )
            .unwrap();
            (game, gov)
        }
    }

    fn identity_profile() -> StrategyProfile {
        let mk = |p| {
            BehaviorStrategy::from_pure(
                &PureStrategy {
                    player: p,
                    action_of: vec![0, 1],
                },
                2,
            )
            .unwrap()
        };
        StrategyProfile::new(mk(Player::A), mk(Player::B)).unwrap()
    }

    #[test]
    fn induced_payoffs_reproduce_both_footnote_cases() {
        let (game, gov) = counterexample(false);
        let induced = induce_firm_game(&game, &gov).unwrap();
        assert_eq!(induced.payoff_matrix_a(), game.market.as_slice());
        assert_eq!(induced.sum_const(), 0.0);

        let (game, gov) = counterexample(true);
        let induced = induce_firm_game(&game, &gov).unwrap();
        // m + (1 - m) is identically one.
        for row in induced.payoff_matrix_a() {
            for &v in row {
                assert_eq!(v, 1.0);
            }
        }
    }

    #[test]
    fn constant_market_induces_constant_payoffs() {
        let (base, _) = counterexample(true);
        let flat = DualSphereGame::new(
            vec![vec![0.5, 0.5], vec![0.5, 0.5]],
            vec![
                vec!["t".to_string(), "t".to_string()],
                vec!["t".to_string(), "t".to_string()],
            ],
            base.gov_actions.clone(),
            base.valuation.clone(),
            base.type_dist.clone(),
            None,
        )
        .unwrap();
        let gov = GovernmentStrategy::new(
            &flat,
            BTreeMap::from([(
                "t".to_string(),
                BTreeMap::from([("a=0".to_string(), 0.25), ("a=1".to_string(), 0.75)]),
            )]),
        )
        .unwrap();
        let induced = induce_firm_game(&flat, &gov).unwrap();
        for row in induced.payoff_matrix_a() {
            for &v in row {
                assert_eq!(v, 1.25);
            }
        }
    }

    #[test]
    fn constancy_fails_without_valuation_and_holds_with_it() {
        let profile = identity_profile();
        let (game, gov) = counterexample(false);
        let verdict = verify_surplus_constancy(&game, &gov, &profile, 1e-9).unwrap();
        assert!(!verdict.is_constant);
        let w = verdict.witness.unwrap();
        assert_eq!(w.low_surplus, 0.0);
        assert_eq!(w.high_surplus, 1.0);

        let (game, gov) = counterexample(true);
        let verdict = verify_surplus_constancy(&game, &gov, &profile, 1e-9).unwrap();
        assert!(verdict.is_constant);
        assert_eq!(verdict.constant, Some(1.0));
    }

    #[test]
    fn posterior_from_market_outcome_is_degenerate_under_identity_play() {
        let (game, _) = counterexample(false);
        let profile = identity_profile();
        let post = posterior_from_statistic(&game, &profile, "m=0").unwrap();
        assert_eq!(post.get("theta=1"), Some(&1.0));
        assert_eq!(post.get("theta=0"), None);
        let post = posterior_from_statistic(&game, &profile, "m=1").unwrap();
        assert_eq!(post.get("theta=0"), Some(&1.0));
    }

    #[test]
    fn uninformative_profile_returns_the_prior() {
        let (game, _) = counterexample(false);
        let profile = StrategyProfile::new(
            BehaviorStrategy::constant(Player::A, 2, 2, 0).unwrap(),
            BehaviorStrategy::constant(Player::B, 2, 2, 0).unwrap(),
        )
        .unwrap();
        let post = posterior_from_statistic(&game, &profile, "m=0").unwrap();
        assert_eq!(post.get("theta=1"), Some(&0.5));
        assert_eq!(post.get("theta=0"), Some(&0.5));
        // The mismatch outcome never occurs under constant play.
        assert!(matches!(
            posterior_from_statistic(&game, &profile, "m=1"),
            Err(DualError::UnreachableStatistic(_))
        ));
    }

    #[test]
    fn non_equilibrium_profile_is_rejected() {
        // Correlated types turn matching-pennies play into a profitable
        // deviation, so the identity profile is no longer an equilibrium.
        let (game, gov) = counterexample(false);
        let correlated = DualSphereGame::new(
            game.market.clone(),
            game.statistic_of.clone(),
            game.gov_actions.clone(),
            game.valuation.clone(),
            vec![vec![0.4, 0.1], vec![0.1, 0.4]],
            game.state_of.clone(),
        )
        .unwrap();
        assert!(matches!(
            verify_surplus_constancy(&correlated, &gov, &identity_profile(), 1e-9),
            Err(DualError::Game(GameError::NotAnEquilibrium { .. }))
        ));
    }
}
