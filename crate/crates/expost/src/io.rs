//! JSON file formats for games, strategies, and dual-sphere scenarios.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dual::{DualError, DualSphereGame, GovernmentStrategy};
use crate::game::{
    BehaviorStrategy, FiniteBayesGame, GameError, Player, PureStrategy, StrategyProfile,
};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: declared {field} {declared} does not match matrix dimension {actual}")]
    DeclaredDimension {
        path: String,
        field: &'static str,
        declared: usize,
        actual: usize,
    },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Dual(#[from] DualError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlayerCounts {
    #[serde(rename = "A")]
    pub a: usize,
    #[serde(rename = "B")]
    pub b: usize,
}

/// On-disk form of a finite constant-sum Bayesian game.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameFile {
    pub types: PlayerCounts,
    pub joint: Vec<Vec<f64>>,
    pub actions: PlayerCounts,
    #[serde(rename = "payoff_A")]
    pub payoff_a: Vec<Vec<f64>>,
    pub constant_sum: f64,
}

impl GameFile {
    pub fn from_game(game: &FiniteBayesGame) -> Self {
        Self {
            types: PlayerCounts {
                a: game.n_types(Player::A),
                b: game.n_types(Player::B),
            },
            joint: game.joint().to_vec(),
            actions: PlayerCounts {
                a: game.n_acts(Player::A),
                b: game.n_acts(Player::B),
            },
            payoff_a: game.payoff_matrix_a().to_vec(),
            constant_sum: game.sum_const(),
        }
    }

    pub fn into_game(self, path: &str) -> Result<FiniteBayesGame, IoError> {
        let check = |field, declared, actual| {
            if declared != actual {
                Err(IoError::DeclaredDimension {
                    path: path.to_string(),
                    field,
                    declared,
                    actual,
                })
            } else {
                Ok(())
            }
        };
        check("types.A", self.types.a, self.joint.len())?;
        check(
            "types.B",
            self.types.b,
            self.joint.first().map_or(0, Vec::len),
        )?;
        check("actions.A", self.actions.a, self.payoff_a.len())?;
        check(
            "actions.B",
            self.actions.b,
            self.payoff_a.first().map_or(0, Vec::len),
        )?;
        Ok(FiniteBayesGame::new(
            self.joint,
            self.payoff_a,
            self.constant_sum,
        )?)
    }
}

/// One player's strategy: either a pure action list or a behavioral matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategySpec {
    Pure(Vec<usize>),
    Behavior(Vec<Vec<f64>>),
}

impl StrategySpec {
    fn into_behavior(self, player: Player, n_acts: usize) -> Result<BehaviorStrategy, GameError> {
        match self {
            StrategySpec::Pure(action_of) => {
                BehaviorStrategy::from_pure(&PureStrategy { player, action_of }, n_acts)
            }
            StrategySpec::Behavior(dist) => BehaviorStrategy::new(player, dist),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrategyFile {
    #[serde(rename = "A")]
    pub a: StrategySpec,
    #[serde(rename = "B")]
    pub b: StrategySpec,
}

impl StrategyFile {
    pub fn into_profile(self, game: &FiniteBayesGame) -> Result<StrategyProfile, GameError> {
        let a = self.a.into_behavior(Player::A, game.n_acts(Player::A))?;
        let b = self.b.into_behavior(Player::B, game.n_acts(Player::B))?;
        let profile = StrategyProfile::new(a, b)?;
        profile.check_dims(game)?;
        Ok(profile)
    }
}

/// On-disk form of a dual-sphere scenario, including the government play.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualFile {
    pub firm_actions: PlayerCounts,
    pub market: Vec<Vec<f64>>,
    pub statistic: Vec<Vec<String>>,
    pub gov_actions: Vec<String>,
    pub valuation: BTreeMap<String, f64>,
    pub gov_strategy: BTreeMap<String, BTreeMap<String, f64>>,
    pub type_dist: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state_of: Option<Vec<Vec<String>>>,
}

impl DualFile {
    pub fn into_scenario(self) -> Result<(DualSphereGame, GovernmentStrategy), IoError> {
        let game = DualSphereGame::new(
            self.market,
            self.statistic,
            self.gov_actions,
            self.valuation,
            self.type_dist,
            self.state_of,
        )?;
        let gov = GovernmentStrategy::new(&game, self.gov_strategy)?;
        Ok((game, gov))
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Parse {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_game(path: &Path) -> Result<FiniteBayesGame, IoError> {
    read_json::<GameFile>(path)?.into_game(&path.display().to_string())
}

pub fn load_profile(path: &Path, game: &FiniteBayesGame) -> Result<StrategyProfile, IoError> {
    Ok(read_json::<StrategyFile>(path)?.into_profile(game)?)
}

pub fn load_dual(path: &Path) -> Result<(DualSphereGame, GovernmentStrategy), IoError> {
    read_json::<DualFile>(path)?.into_scenario()
}
