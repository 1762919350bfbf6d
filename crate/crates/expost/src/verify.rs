//! Equilibrium property verification: Bayes-Nash best responses, the
//! ex-post property, cross-type interim payoff constancy, and the
//! single-outcome criterion.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::game::{
    expected_value, interim_payoff_against, FiniteBayesGame, GameError, Player, StrategyProfile,
    ON_PATH_TOL,
};
use crate::stats::check_identifiable;

/// Worst violation of the best-response condition, if any.
#[derive(Debug, Clone, Serialize)]
pub struct RegretWitness {
    pub player: Player,
    pub type_idx: usize,
    pub action: usize,
    pub regret: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BneVerdict {
    pub is_bne: bool,
    pub worst_regret: f64,
    pub witness: Option<RegretWitness>,
    pub tolerance: f64,
}

/// A profile is a Bayes-Nash equilibrium when every on-path action of every
/// type attains that type's maximal interim payoff within `tol`.
pub fn verify_bne(
    game: &FiniteBayesGame,
    profile: &StrategyProfile,
    tol: f64,
) -> Result<BneVerdict, GameError> {
    profile.check_dims(game)?;
    let mut worst: Option<RegretWitness> = None;
    for player in [Player::A, Player::B] {
        let own = profile.strategy(player);
        let opp = profile.strategy(player.other());
        for s in 0..game.n_types(player) {
            let cond = game.conditional_row(player, s);
            let payoffs: Vec<f64> = (0..game.n_acts(player))
                .map(|x| interim_payoff_against(game, opp, player, &cond, x))
                .collect();
            let best = payoffs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            for x in own.support(s) {
                let regret = best - payoffs[x];
                if worst.as_ref().is_none_or(|w| regret > w.regret) {
                    worst = Some(RegretWitness {
                        player,
                        type_idx: s,
                        action: x,
                        regret,
                    });
                }
            }
        }
    }
    let worst = worst.expect("game has at least one type and action");
    Ok(BneVerdict {
        is_bne: worst.regret <= tol,
        worst_regret: worst.regret,
        witness: (worst.regret > tol).then_some(worst),
        tolerance: tol,
    })
}

/// A positive-probability action pair whose payoff deviates from the value.
#[derive(Debug, Clone, Serialize)]
pub struct ExPostWitness {
    pub type_a: usize,
    pub type_b: usize,
    pub action_a: usize,
    pub action_b: usize,
    pub payoff_a: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExPostVerdict {
    pub is_expost: bool,
    pub value_a: f64,
    pub value_b: f64,
    pub max_gap: f64,
    pub witness: Option<ExPostWitness>,
    pub tolerance: f64,
}

/// An equilibrium is ex post when every on-path action pair yields each
/// player exactly the equilibrium value: nobody regrets their action even
/// after observing the opponent's. Requires `profile` to pass [`verify_bne`]
/// first; ex-postness is a property of equilibria here.
pub fn verify_expost(
    game: &FiniteBayesGame,
    profile: &StrategyProfile,
    tol: f64,
) -> Result<ExPostVerdict, GameError> {
    let bne = verify_bne(game, profile, tol)?;
    if !bne.is_bne {
        return Err(GameError::NotAnEquilibrium {
            regret: bne.worst_regret,
            tol,
        });
    }
    let value_a = expected_value(game, profile);
    let mut max_gap = 0.0;
    let mut witness = None;
    for s_a in 0..game.n_types(Player::A) {
        for s_b in 0..game.n_types(Player::B) {
            let p_type = game.joint_prob(s_a, s_b);
            if p_type == 0.0 {
                continue;
            }
            for x_a in 0..game.n_acts(Player::A) {
                let wa = profile.strategy(Player::A).prob(s_a, x_a);
                for x_b in 0..game.n_acts(Player::B) {
                    let wb = profile.strategy(Player::B).prob(s_b, x_b);
                    if p_type * wa * wb <= ON_PATH_TOL {
                        continue;
                    }
                    let u = game.payoff(Player::A, x_a, x_b);
                    let gap = (u - value_a).abs();
                    if gap > max_gap {
                        max_gap = gap;
                        witness = Some(ExPostWitness {
                            type_a: s_a,
                            type_b: s_b,
                            action_a: x_a,
                            action_b: x_b,
                            payoff_a: u,
                        });
                    }
                }
            }
        }
    }
    Ok(ExPostVerdict {
        is_expost: max_gap <= tol,
        value_a,
        value_b: game.sum_const() - value_a,
        max_gap,
        witness: (max_gap > tol).then(|| witness.unwrap()),
        tolerance: tol,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstancyVerdict {
    pub holds: bool,
    pub value_a: f64,
    pub max_deviation: f64,
    pub tolerance: f64,
}

/// Cross-type indifference: in an equilibrium, every type of a player earns
/// the equilibrium value from any action that is on path for *some* type of
/// that player. Requires `profile` to pass [`verify_bne`] first.
pub fn verify_interim_constancy(
    game: &FiniteBayesGame,
    profile: &StrategyProfile,
    tol: f64,
) -> Result<ConstancyVerdict, GameError> {
    let bne = verify_bne(game, profile, tol)?;
    if !bne.is_bne {
        return Err(GameError::NotAnEquilibrium {
            regret: bne.worst_regret,
            tol,
        });
    }
    let value_a = expected_value(game, profile);
    let mut max_dev = 0.0;
    for player in [Player::A, Player::B] {
        let value = match player {
            Player::A => value_a,
            Player::B => game.sum_const() - value_a,
        };
        let opp = profile.strategy(player.other());
        let actions = profile.strategy(player).on_path_actions();
        for s in 0..game.n_types(player) {
            let cond = game.conditional_row(player, s);
            for &x in &actions {
                let u = interim_payoff_against(game, opp, player, &cond, x);
                max_dev = f64::max(max_dev, (u - value).abs());
            }
        }
    }
    Ok(ConstancyVerdict {
        holds: max_dev <= tol,
        value_a,
        max_deviation: max_dev,
        tolerance: tol,
    })
}

/// Outcome structure: a label per action pair plus injective utilities over
/// labels for each player.
#[derive(Debug, Clone, Serialize)]
pub struct OutcomeMap {
    pub outcome_of: Vec<Vec<String>>,
    pub utility_a: BTreeMap<String, f64>,
    pub utility_b: BTreeMap<String, f64>,
}

impl OutcomeMap {
    /// Canonical outcome structure of a game: one outcome per
    /// utility-equivalence class of action pairs. Preferences over these
    /// outcomes are strict by construction.
    pub fn from_payoff_classes(game: &FiniteBayesGame) -> Self {
        let mut utility_a = BTreeMap::new();
        let mut utility_b = BTreeMap::new();
        let outcome_of = (0..game.n_acts(Player::A))
            .map(|x_a| {
                (0..game.n_acts(Player::B))
                    .map(|x_b| {
                        let u = game.payoff(Player::A, x_a, x_b);
                        let label = format!("uA={u}");
                        utility_a.insert(label.clone(), u);
                        utility_b.insert(label.clone(), game.sum_const() - u);
                        label
                    })
                    .collect()
            })
            .collect();
        Self {
            outcome_of,
            utility_a,
            utility_b,
        }
    }

    /// Checks injectivity per player and that composing `outcome_of` with
    /// the utilities reproduces the game's payoffs.
    pub fn check_consistency(&self, game: &FiniteBayesGame) -> Result<(), GameError> {
        if self.outcome_of.len() != game.n_acts(Player::A)
            || self.outcome_of.iter().any(|r| r.len() != game.n_acts(Player::B))
        {
            return Err(GameError::InconsistentOutcomeMap(
                "label matrix dimensions do not match the action spaces".into(),
            ));
        }
        for (table, who) in [(&self.utility_a, "A"), (&self.utility_b, "B")] {
            let mut seen: Vec<f64> = Vec::new();
            for &u in table.values() {
                if seen.contains(&u) {
                    return Err(GameError::InconsistentOutcomeMap(format!(
                        "player {who} utilities over outcomes are not injective"
                    )));
                }
                seen.push(u);
            }
        }
        for (x_a, row) in self.outcome_of.iter().enumerate() {
            for (x_b, label) in row.iter().enumerate() {
                let (Some(&ua), Some(&ub)) = (self.utility_a.get(label), self.utility_b.get(label))
                else {
                    return Err(GameError::InconsistentOutcomeMap(format!(
                        "no utility assigned to outcome {label:?}"
                    )));
                };
                if (ua - game.payoff(Player::A, x_a, x_b)).abs() > 1e-9
                    || (ub - game.payoff(Player::B, x_a, x_b)).abs() > 1e-9
                {
                    return Err(GameError::InconsistentOutcomeMap(format!(
                        "outcome {label:?} does not reproduce payoffs at ({x_a}, {x_b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SingleOutcomeVerdict {
    pub single_outcome: bool,
    pub outcome: Option<String>,
    pub top_probability: f64,
    pub tolerance: f64,
}

/// Does one outcome label carry (almost) all of the on-path probability?
/// With injective utilities this is equivalent to the ex-post property.
pub fn verify_single_outcome(
    game: &FiniteBayesGame,
    outcome_map: &OutcomeMap,
    profile: &StrategyProfile,
    tol: f64,
) -> Result<SingleOutcomeVerdict, GameError> {
    outcome_map.check_consistency(game)?;
    let bne = verify_bne(game, profile, tol)?;
    if !bne.is_bne {
        return Err(GameError::NotAnEquilibrium {
            regret: bne.worst_regret,
            tol,
        });
    }
    let mut mass: BTreeMap<&str, f64> = BTreeMap::new();
    for s_a in 0..game.n_types(Player::A) {
        for s_b in 0..game.n_types(Player::B) {
            let p = game.joint_prob(s_a, s_b);
            for x_a in 0..game.n_acts(Player::A) {
                for x_b in 0..game.n_acts(Player::B) {
                    let w = p
                        * profile.strategy(Player::A).prob(s_a, x_a)
                        * profile.strategy(Player::B).prob(s_b, x_b);
                    if w > 0.0 {
                        *mass.entry(&outcome_map.outcome_of[x_a][x_b]).or_insert(0.0) += w;
                    }
                }
            }
        }
    }
    let (label, top) = mass
        .into_iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one on-path pair");
    Ok(SingleOutcomeVerdict {
        single_outcome: top >= 1.0 - tol,
        outcome: Some(label.to_string()),
        top_probability: top,
        tolerance: tol,
    })
}

/// One interim payoff entry of a certificate.
#[derive(Debug, Clone, Serialize)]
pub struct InterimEntry {
    pub player: Player,
    pub type_idx: usize,
    pub action: usize,
    pub payoff: f64,
}

/// Full verification record for a strategy profile.
#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumCertificate {
    pub value_a: f64,
    pub value_b: f64,
    pub interim_payoffs: Vec<InterimEntry>,
    pub is_bne: BneVerdict,
    /// Present only when the profile is a BNE.
    pub is_expost: Option<ExPostVerdict>,
    pub interim_constancy: Option<ConstancyVerdict>,
    pub identifiable_a: bool,
    pub identifiable_b: bool,
    pub tolerance: f64,
}

pub fn certify(
    game: &FiniteBayesGame,
    profile: &StrategyProfile,
    tol: f64,
) -> Result<EquilibriumCertificate, GameError> {
    let bne = verify_bne(game, profile, tol)?;
    let value_a = expected_value(game, profile);
    let mut interim = Vec::new();
    for player in [Player::A, Player::B] {
        let own = profile.strategy(player);
        let opp = profile.strategy(player.other());
        for s in 0..game.n_types(player) {
            let cond = game.conditional_row(player, s);
            for x in own.support(s) {
                interim.push(InterimEntry {
                    player,
                    type_idx: s,
                    action: x,
                    payoff: interim_payoff_against(game, opp, player, &cond, x),
                });
            }
        }
    }
    let (expost, constancy) = if bne.is_bne {
        (
            Some(verify_expost(game, profile, tol)?),
            Some(verify_interim_constancy(game, profile, tol)?),
        )
    } else {
        (None, None)
    };
    Ok(EquilibriumCertificate {
        value_a,
        value_b: game.sum_const() - value_a,
        interim_payoffs: interim,
        is_bne: bne,
        is_expost: expost,
        interim_constancy: constancy,
        identifiable_a: check_identifiable(profile.strategy(Player::A)),
        identifiable_b: check_identifiable(profile.strategy(Player::B)),
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{BehaviorStrategy, PureStrategy};

    fn matching_pennies_uniform() -> FiniteBayesGame {
        FiniteBayesGame::new(
            vec![vec![0.25, 0.25], vec![0.25, 0.25]],
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            1.0,
        )
        .unwrap()
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
    fn identity_profile_is_bne_but_not_expost() {
        let g = matching_pennies_uniform();
        let profile = identity_profile();
        let bne = verify_bne(&g, &profile, 1e-9).unwrap();
        assert!(bne.is_bne);
        assert_eq!(bne.worst_regret, 0.0);

        let ex = verify_expost(&g, &profile, 1e-9).unwrap();
        assert!(!ex.is_expost);
        assert_eq!(ex.value_a, 0.5);
        // Both match (payoff 1) and mismatch (payoff 0) pairs are on path
        // and sit 0.5 away from the value.
        assert_eq!(ex.max_gap, 0.5);
        let w = ex.witness.unwrap();
        assert!(w.payoff_a == 0.0 || w.payoff_a == 1.0);

        let constancy = verify_interim_constancy(&g, &profile, 1e-9).unwrap();
        assert!(constancy.holds);
    }

    #[test]
    fn off_equilibrium_profile_reports_regret() {
        let g = matching_pennies_uniform();
        let id_a = BehaviorStrategy::from_pure(
            &PureStrategy {
                player: Player::A,
                action_of: vec![0, 1],
            },
            2,
        )
        .unwrap();
        let const_b = BehaviorStrategy::constant(Player::B, 2, 2, 0).unwrap();
        let profile = StrategyProfile::new(id_a, const_b).unwrap();
        let bne = verify_bne(&g, &profile, 1e-9).unwrap();
        assert!(!bne.is_bne);
        // A's type 1 plays action 1 against a constant action 0 and earns 0
        // where matching would earn 1; B stays indifferent against A's
        // uniform induced action.
        assert_eq!(bne.worst_regret, 1.0);
        assert!(verify_expost(&g, &profile, 1e-9).is_err());
        assert!(matches!(
            verify_interim_constancy(&g, &profile, 1e-9),
            Err(GameError::NotAnEquilibrium { .. })
        ));
    }

    #[test]
    fn complete_info_mix_is_bne_not_expost_not_identifiable() {
        let g = FiniteBayesGame::new(
            vec![vec![1.0]],
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            1.0,
        )
        .unwrap();
        let profile = StrategyProfile::new(
            BehaviorStrategy::uniform(Player::A, 1, 2),
            BehaviorStrategy::uniform(Player::B, 1, 2),
        )
        .unwrap();
        let cert = certify(&g, &profile, 1e-9).unwrap();
        assert!(cert.is_bne.is_bne);
        assert!(!cert.is_expost.as_ref().unwrap().is_expost);
        assert!(cert.interim_constancy.as_ref().unwrap().holds);
        assert!(!cert.identifiable_a);
        assert!(!cert.identifiable_b);
        assert_eq!(cert.value_a, 0.5);
    }

    #[test]
    fn single_on_path_pair_is_trivially_expost_and_single_outcome() {
        // Both play constant action 0 in a game with a saddle at (0, 0)
        // paying c/2, so the lone on-path pair already equals the value.
        let g = FiniteBayesGame::new(
            vec![vec![1.0]],
            vec![vec![0.5, 0.6], vec![0.2, 0.9]],
            1.0,
        )
        .unwrap();
        let profile = StrategyProfile::new(
            BehaviorStrategy::constant(Player::A, 1, 2, 0).unwrap(),
            BehaviorStrategy::constant(Player::B, 1, 2, 0).unwrap(),
        )
        .unwrap();
        let bne = verify_bne(&g, &profile, 1e-9).unwrap();
        assert!(bne.is_bne);
        let ex = verify_expost(&g, &profile, 1e-9).unwrap();
        assert!(ex.is_expost);

        let map = OutcomeMap::from_payoff_classes(&g);
        let v = verify_single_outcome(&g, &map, &profile, 1e-9).unwrap();
        assert!(v.single_outcome);
        assert_eq!(v.outcome.as_deref(), Some("uA=0.5"));
    }

    #[test]
    fn outcome_map_consistency_rejects_bad_maps() {
        let g = matching_pennies_uniform();
        let mut map = OutcomeMap::from_payoff_classes(&g);
        map.utility_b.insert("uA=1".into(), 0.5);
        // "uA=1" and "uA=0" now share player-B utility 0.5: not injective.
        assert!(matches!(
            map.check_consistency(&g),
            Err(GameError::InconsistentOutcomeMap(_))
        ));

        let mut map = OutcomeMap::from_payoff_classes(&g);
        map.utility_a.insert("uA=1".into(), 0.75);
        // Utilities no longer reproduce the payoff matrix.
        assert!(map.check_consistency(&g).is_err());
    }

    #[test]
    fn payoff_class_map_on_mixing_equilibrium_is_not_single() {
        let g = matching_pennies_uniform();
        let profile = identity_profile();
        let map = OutcomeMap::from_payoff_classes(&g);
        let v = verify_single_outcome(&g, &map, &profile, 1e-9).unwrap();
        assert!(!v.single_outcome);
        assert!((v.top_probability - 0.5).abs() < 1e-12);
    }
}
