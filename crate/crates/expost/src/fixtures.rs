//! Self-checking reference scenarios. Each fixture builds a scenario,
//! runs the toolkit's checkers against it, and compares every verdict to the
//! expected conclusion; reference quantities that admit one (delegation
//! values, equilibrium welfare) are recomputed by brute force rather than
//! hard-coded.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dual::{
    induce_firm_game, posterior_from_statistic, verify_surplus_constancy, DualSphereGame,
    GovernmentStrategy,
};
use crate::election::beta::{rational, ExactBetaModel};
use crate::election::{verify_mixed_motives_dominance, NormalModel};
use crate::game::{
    expected_value, interim_payoff, BehaviorStrategy, FiniteBayesGame, Player, PureStrategy,
    StrategyProfile, DEFAULT_RANK_TOL, DEFAULT_VERIFY_TOL,
};
use crate::solver::{solve_minimax_lp, DEFAULT_CELL_CAP};
use crate::stats::{check_completeness, check_convex_independence, check_identifiable, check_sli};
use crate::verify::{verify_bne, verify_expost, verify_interim_constancy};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

impl FixtureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn expect(&mut self, check: &str, passed: bool, detail: String) {
        self.0.push(CheckResult {
            check: check.to_string(),
            passed,
            detail,
            residual: None,
            tolerance: None,
        });
    }

    fn expect_close(&mut self, check: &str, actual: f64, expected: f64, tol: f64) {
        let residual = (actual - expected).abs();
        self.0.push(CheckResult {
            check: check.to_string(),
            passed: residual <= tol,
            detail: format!("actual {actual}, expected {expected}"),
            residual: Some(residual),
            tolerance: Some(tol),
        });
    }
}

pub struct FixtureRecord {
    pub name: &'static str,
    pub summary: &'static str,
    pub run: fn() -> FixtureReport,
}

pub fn registry() -> Vec<FixtureRecord> {
    vec![
        FixtureRecord {
            name: "example1-matching-pennies",
            summary: "independent uniform types: an identifiable equilibrium that is not ex post",
            run: example1_fixture,
        },
        FixtureRecord {
            name: "example2-complete-info-mix",
            summary: "complete information mixing: a non-identifiable equilibrium that is not ex post",
            run: example2_fixture,
        },
        FixtureRecord {
            name: "example3-downsian-4x4",
            summary: "first-best election welfare without completeness, beating both delegation values",
            run: example3_fixture,
        },
        FixtureRecord {
            name: "convex-independence-4x4",
            summary: "convexly independent conditionals with deficient rank; the equilibrium fails ex-postness",
            run: convex_independence_fixture,
        },
        FixtureRecord {
            name: "li-not-sli-truncation",
            summary: "countable family that is linearly independent but admits an infinite null mixture (truncated)",
            run: li_not_sli_fixture,
        },
        FixtureRecord {
            name: "dual-counterexample",
            summary: "dual-sphere competition without completeness: informative market outcomes",
            run: dual_counterexample_fixture,
        },
        FixtureRecord {
            name: "beta-bernoulli",
            summary: "exact overreaction identities in the Beta-Bernoulli specification",
            run: beta_bernoulli_fixture,
        },
        FixtureRecord {
            name: "mixed-motives",
            summary: "mixed-motives equilibrium: the biased winner always beats the supporting loser",
            run: mixed_motives_fixture,
        },
    ]
}

pub fn run_fixture(name: &str) -> Option<FixtureReport> {
    registry().into_iter().find(|f| f.name == name).map(|f| (f.run)())
}

// ---------------------------------------------------------------------------
// Builders shared with tests, examples, and the bundled data files.

/// Matching pennies in win-probability form over independent uniform types.
pub fn example1_game() -> FiniteBayesGame {
    FiniteBayesGame::new(
        vec![vec![0.25, 0.25], vec![0.25, 0.25]],
        vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        1.0,
    )
    .unwrap()
}

pub fn identity_pure_profile(n: usize) -> StrategyProfile {
    let mk = |player| {
        BehaviorStrategy::from_pure(
            &PureStrategy {
                player,
                action_of: (0..n).collect(),
            },
            n,
        )
        .unwrap()
    };
    StrategyProfile::new(mk(Player::A), mk(Player::B)).unwrap()
}

/// Complete-information matching pennies (singleton types).
pub fn example2_game() -> FiniteBayesGame {
    FiniteBayesGame::new(
        vec![vec![1.0]],
        vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        1.0,
    )
    .unwrap()
}

pub fn example2_profile() -> StrategyProfile {
    StrategyProfile::new(
        BehaviorStrategy::uniform(Player::A, 1, 2),
        BehaviorStrategy::uniform(Player::B, 1, 2),
    )
    .unwrap()
}

/// Voter-optimal policy for each signal pair in the 4x4 election table,
/// indexed from zero.
pub const EXAMPLE3_CORRECT_POLICY: [[usize; 4]; 4] = [
    [0, 1, 2, 0],
    [0, 1, 2, 1],
    [2, 1, 2, 3],
    [0, 3, 3, 3],
];

/// The voter's strategy in the same table: which candidate wins at each
/// platform pair.
pub const EXAMPLE3_WINNER: [[Player; 4]; 4] = {
    use Player::{A, B};
    [
        [A, B, B, A],
        [B, A, B, A],
        [A, B, A, B],
        [B, A, A, B],
    ]
};

/// The candidates' game induced by the 4x4 voter table: u_A is A's win
/// probability, types are uniform i.i.d. over four signals.
pub fn example3_game() -> FiniteBayesGame {
    let payoff: Vec<Vec<f64>> = EXAMPLE3_WINNER
        .iter()
        .map(|row| {
            row.iter()
                .map(|w| if *w == Player::A { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    FiniteBayesGame::new(vec![vec![1.0 / 16.0; 4]; 4], payoff, 1.0).unwrap()
}

/// Election welfare quantities of the 4x4 example, brute-forced from the
/// tables: equilibrium welfare under truthful play, and the two delegation
/// values from using only one candidate's signal.
pub fn example3_welfare_by_brute_force() -> (f64, f64, f64) {
    let mut equilibrium = 0.0;
    for s_a in 0..4 {
        for s_b in 0..4 {
            let policy = match EXAMPLE3_WINNER[s_a][s_b] {
                Player::A => s_a,
                Player::B => s_b,
            };
            if policy == EXAMPLE3_CORRECT_POLICY[s_a][s_b] {
                equilibrium += 1.0 / 16.0;
            }
        }
    }
    let delegation = |own: Player| -> f64 {
        let mut total = 0.0;
        for s_own in 0..4 {
            // Voter-optimal platform on the candidate's signal alone.
            let best = (0..4)
                .map(|x| {
                    (0..4)
                        .filter(|&s_opp| {
                            let (s_a, s_b) = match own {
                                Player::A => (s_own, s_opp),
                                Player::B => (s_opp, s_own),
                            };
                            EXAMPLE3_CORRECT_POLICY[s_a][s_b] == x
                        })
                        .count()
                })
                .max()
                .unwrap();
            total += best as f64 / 16.0;
        }
        total
    };
    (equilibrium, delegation(Player::A), delegation(Player::B))
}

/// The 4x4 joint with convexly independent conditionals but rank 3.
pub fn convex_independence_game() -> FiniteBayesGame {
    let joint = [
        [4.0, 2.0, 1.0, 3.0],
        [2.0, 4.0, 3.0, 1.0],
        [1.0, 3.0, 4.0, 2.0],
        [3.0, 1.0, 2.0, 4.0],
    ]
    .iter()
    .map(|row| row.iter().map(|v| v / 40.0).collect())
    .collect();
    // Mismatching pays: u_A = -1{x_A = x_B}, zero sum.
    FiniteBayesGame::new(
        joint,
        vec![vec![-1.0, 0.0], vec![0.0, -1.0]],
        0.0,
    )
    .unwrap()
}

/// The identifiable equilibrium of the rank-3 game: action 1 on the first
/// and third signals, action 0 otherwise.
pub fn convex_independence_profile() -> StrategyProfile {
    let mk = |player| {
        BehaviorStrategy::from_pure(
            &PureStrategy {
                player,
                action_of: vec![1, 0, 1, 0],
            },
            2,
        )
        .unwrap()
    };
    StrategyProfile::new(mk(Player::A), mk(Player::B)).unwrap()
}

/// The dual-sphere counterexample: uniform independent binary types,
/// theta = 1{s_A = s_B}, market share |x_A - x_B|, government observing the
/// market outcome. With `linear_valuation` the firms value the government
/// action a in {0, 1} linearly and the government plays a = 1 - m;
/// otherwise the government action is payoff-irrelevant.
pub fn dual_counterexample(linear_valuation: bool) -> (DualSphereGame, GovernmentStrategy) {
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
    if linear_valuation {
        let game = DualSphereGame::new(
            market,
            statistic,
            vec!["a=0".into(), "a=1".into()],
            BTreeMap::from([("a=0".to_string(), 0.0), ("a=1".to_string(), 1.0)]),
            uniform,
            Some(state),
        )
        .unwrap();
        let gov = GovernmentStrategy::deterministic(&game, &[("m=0", "a=1"), ("m=1", "a=0")])
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
        let gov = GovernmentStrategy::deterministic(&game, &[("m=0", "none"), ("m=1", "none")])
            .unwrap();
        (game, gov)
    }
}

/// Full-rank dual-sphere variant with a pure saddle, so the enumerable
/// equilibrium is constant and the surplus check holds.
pub fn dual_full_rank_variant() -> (DualSphereGame, GovernmentStrategy) {
    let market = vec![vec![0.6, 0.3], vec![0.8, 0.1]];
    let statistic = vec![
        vec!["t00".to_string(), "t01".to_string()],
        vec!["t10".to_string(), "t11".to_string()],
    ];
    let game = DualSphereGame::new(
        market,
        statistic,
        vec!["none".into()],
        BTreeMap::from([("none".to_string(), 0.0)]),
        vec![vec![0.4, 0.1], vec![0.1, 0.4]],
        None,
    )
    .unwrap();
    let gov = GovernmentStrategy::deterministic(
        &game,
        &[("t00", "none"), ("t01", "none"), ("t10", "none"), ("t11", "none")],
    )
    .unwrap();
    (game, gov)
}

// ---------------------------------------------------------------------------
// Fixture runners.

fn example1_fixture() -> FixtureReport {
    let game = example1_game();
    let profile = identity_pure_profile(2);
    let mut checks = Checks::new();

    let (complete_a, rank) = check_completeness(&game, Player::A, DEFAULT_RANK_TOL);
    let (complete_b, _) = check_completeness(&game, Player::B, DEFAULT_RANK_TOL);
    checks.expect(
        "completeness fails for both players",
        !complete_a && !complete_b,
        format!("rank {rank} of independent joint"),
    );
    let bne = verify_bne(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect("truthful profile is a BNE", bne.is_bne, format!("worst regret {}", bne.worst_regret));
    checks.expect(
        "both strategies identifiable",
        check_identifiable(profile.strategy(Player::A))
            && check_identifiable(profile.strategy(Player::B)),
        "pure strategies".into(),
    );
    checks.expect_close("equilibrium value", expected_value(&game, &profile), 0.5, 1e-12);
    let expost = verify_expost(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "equilibrium is NOT ex post",
        !expost.is_expost,
        format!("max payoff gap {}", expost.max_gap),
    );
    let constancy = verify_interim_constancy(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "interim payoffs constant across types and on-path actions",
        constancy.holds,
        format!("max deviation {}", constancy.max_deviation),
    );
    let lp = solve_minimax_lp(&game, DEFAULT_CELL_CAP).unwrap();
    checks.expect_close("minimax value", lp.value, 0.5, 1e-9);
    FixtureReport {
        name: "example1-matching-pennies".into(),
        checks: checks.0,
    }
}

fn example2_fixture() -> FixtureReport {
    let game = example2_game();
    let profile = example2_profile();
    let mut checks = Checks::new();
    let bne = verify_bne(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect("uniform mixing is a BNE", bne.is_bne, format!("worst regret {}", bne.worst_regret));
    checks.expect(
        "neither strategy identifiable",
        !check_identifiable(profile.strategy(Player::A))
            && !check_identifiable(profile.strategy(Player::B)),
        "constant non-degenerate mixtures".into(),
    );
    let expost = verify_expost(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "equilibrium is NOT ex post",
        !expost.is_expost,
        format!("max payoff gap {}", expost.max_gap),
    );
    let constancy = verify_interim_constancy(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "interim payoff constancy still holds",
        constancy.holds,
        format!("max deviation {}", constancy.max_deviation),
    );
    FixtureReport {
        name: "example2-complete-info-mix".into(),
        checks: checks.0,
    }
}

fn example3_fixture() -> FixtureReport {
    let game = example3_game();
    let profile = identity_pure_profile(4);
    let mut checks = Checks::new();
    let bne = verify_bne(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect("truthful candidates are mutual best responses", bne.is_bne, format!("worst regret {}", bne.worst_regret));
    checks.expect_close(
        "each candidate wins with probability 1/2",
        expected_value(&game, &profile),
        0.5,
        1e-12,
    );
    let constancy = verify_interim_constancy(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "win probability constant across types",
        constancy.holds,
        format!("max deviation {}", constancy.max_deviation),
    );
    let expost = verify_expost(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "equilibrium is NOT ex post (completeness fails)",
        !expost.is_expost,
        format!("max payoff gap {}", expost.max_gap),
    );
    let (welfare, v_a, v_b) = example3_welfare_by_brute_force();
    checks.expect_close("first-best voter welfare", welfare, 1.0, 1e-12);
    checks.expect_close("delegation value of candidate A", v_a, 9.0 / 16.0, 1e-12);
    checks.expect_close("delegation value of candidate B", v_b, 11.0 / 16.0, 1e-12);
    checks.expect(
        "equilibrium welfare strictly beats single-candidate delegation",
        welfare > v_a.max(v_b),
        format!("{welfare} vs max({v_a}, {v_b})"),
    );
    FixtureReport {
        name: "example3-downsian-4x4".into(),
        checks: checks.0,
    }
}

fn convex_independence_fixture() -> FixtureReport {
    let game = convex_independence_game();
    let profile = convex_independence_profile();
    let mut checks = Checks::new();
    let (complete, rank) = check_completeness(&game, Player::A, DEFAULT_RANK_TOL);
    checks.expect(
        "completeness fails at rank 3",
        !complete && rank == 3,
        format!("rank {rank}"),
    );
    checks.expect(
        "strong linear independence fails for both players",
        !check_sli(&game, Player::A, DEFAULT_RANK_TOL)
            && !check_sli(&game, Player::B, DEFAULT_RANK_TOL),
        "conditional rows are linearly dependent".into(),
    );
    checks.expect(
        "convex independence holds for both players",
        check_convex_independence(&game, Player::A) && check_convex_independence(&game, Player::B),
        "each row leads on a distinct coordinate".into(),
    );
    let bne = verify_bne(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "the odd/even split profile is a BNE",
        bne.is_bne,
        format!("worst regret {}", bne.worst_regret),
    );
    // Every type of every player faces a uniform action distribution, so
    // every action pays that player's value: -1/2 for A, +1/2 for B.
    let mut max_dev: f64 = 0.0;
    for (player, value) in [(Player::A, -0.5), (Player::B, 0.5)] {
        for s in 0..4 {
            for x in 0..2 {
                max_dev = max_dev
                    .max((interim_payoff(&game, &profile, player, s, x) - value).abs());
            }
        }
    }
    checks.expect(
        "every type and action earns its player's value (-1/2 for A)",
        max_dev <= 1e-12,
        format!("max deviation {max_dev}"),
    );
    let expost = verify_expost(&game, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "equilibrium is NOT ex post",
        !expost.is_expost,
        format!("max payoff gap {}", expost.max_gap),
    );
    let lp = solve_minimax_lp(&game, DEFAULT_CELL_CAP).unwrap();
    checks.expect_close("minimax value", lp.value, -0.5, 1e-9);
    FixtureReport {
        name: "convex-independence-4x4".into(),
        checks: checks.0,
    }
}

fn li_not_sli_fixture() -> FixtureReport {
    let mut checks = Checks::new();
    for depth in [8usize, 16, 32] {
        // Conditional rows over opponent signals 1..=depth: row 0 is the
        // geometric distribution, row s (s >= 1) the indicator of s.
        let geometric: Vec<f64> = (1..=depth).map(|s| 0.5f64.powi(s as i32)).collect();
        let mut residual: f64 = 0.0;
        for (idx, &g) in geometric.iter().enumerate() {
            let s_b = idx + 1;
            // Mixture sum over rows 1..=depth with weights 2^-s hits only
            // the s = s_b indicator.
            let mixture: f64 = (1..=depth)
                .map(|s| if s == s_b { 0.5f64.powi(s as i32) } else { 0.0 })
                .sum();
            residual = residual.max((g - mixture).abs());
        }
        checks.expect(
            &format!("null mixture identity at depth {depth}"),
            residual == 0.0,
            format!("max residual {residual} (exact zero expected: dyadic weights)"),
        );
        // Textbook linear independence of the truncated family: dropping the
        // geometric row leaves indicator rows; any finite combination that
        // vanishes on signals beyond the truncation kills the geometric
        // coefficient first.
        let mut rows = vec![geometric.clone()];
        for s in 1..=depth {
            rows.push((1..=depth).map(|t| if t == s { 1.0 } else { 0.0 }).collect());
        }
        let rank = crate::stats::matrix_rank(&rows, DEFAULT_RANK_TOL);
        checks.expect(
            &format!("truncated family has rank {depth} at depth {depth}"),
            rank == depth,
            format!("rank {rank}: the geometric row is already a combination of the indicators"),
        );
    }
    FixtureReport {
        name: "li-not-sli-truncation".into(),
        checks: checks.0,
    }
}

fn dual_counterexample_fixture() -> FixtureReport {
    let mut checks = Checks::new();
    let profile = identity_pure_profile(2);

    let (game, gov) = dual_counterexample(false);
    let induced = induce_firm_game(&game, &gov).unwrap();
    let bne = verify_bne(&induced, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect("truthful firms are in equilibrium (v = 0)", bne.is_bne, format!("worst regret {}", bne.worst_regret));
    checks.expect(
        "firm strategies identifiable",
        check_identifiable(profile.strategy(Player::A))
            && check_identifiable(profile.strategy(Player::B)),
        "pure strategies".into(),
    );
    let verdict = verify_surplus_constancy(&game, &gov, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "surplus constancy FAILS without completeness",
        !verdict.is_constant,
        format!("market outcomes 0 and 1 both on path, gap {}", verdict.max_gap),
    );
    let post0 = posterior_from_statistic(&game, &profile, "m=0").unwrap();
    let post1 = posterior_from_statistic(&game, &profile, "m=1").unwrap();
    checks.expect(
        "market outcome fully reveals the state",
        post0.get("theta=1") == Some(&1.0) && post1.get("theta=0") == Some(&1.0),
        format!("P(theta=1 | m=0) = {:?}, P(theta=0 | m=1) = {:?}", post0.get("theta=1"), post1.get("theta=0")),
    );

    let (game, gov) = dual_counterexample(true);
    let verdict = verify_surplus_constancy(&game, &gov, &profile, DEFAULT_VERIFY_TOL).unwrap();
    checks.expect(
        "offsetting government action restores constancy at c = 1",
        verdict.is_constant && verdict.constant == Some(1.0),
        format!("constant {:?}", verdict.constant),
    );

    let (game, gov) = dual_full_rank_variant();
    let induced = induce_firm_game(&game, &gov).unwrap();
    let saddle = crate::solver::enumerate_pure_bne(&induced, DEFAULT_VERIFY_TOL, DEFAULT_CELL_CAP)
        .unwrap();
    let mut all_constant = !saddle.profiles.is_empty();
    for e in &saddle.profiles {
        let p = StrategyProfile::new(
            BehaviorStrategy::from_pure(&e.pure_a, 2).unwrap(),
            BehaviorStrategy::from_pure(&e.pure_b, 2).unwrap(),
        )
        .unwrap();
        let v = verify_surplus_constancy(&game, &gov, &p, DEFAULT_VERIFY_TOL).unwrap();
        all_constant &= v.is_constant;
    }
    checks.expect(
        "full-rank variant: every enumerated equilibrium has constant surplus",
        all_constant,
        format!("{} pure equilibria checked", saddle.profiles.len()),
    );
    FixtureReport {
        name: "dual-counterexample".into(),
        checks: checks.0,
    }
}

fn beta_bernoulli_fixture() -> FixtureReport {
    let mut checks = Checks::new();
    let grid: Vec<(i64, i64, i64, i64)> = vec![
        (2, 1, 1, 1),
        (1, 1, 2, 1),
        (3, 1, 1, 2),
        (1, 2, 5, 1),
        (7, 2, 3, 4),
        (9, 4, 1, 3),
    ];
    let mut all_zero = true;
    let mut chain_ok = true;
    let mut shifts_ok = true;
    let mut winner_ok = true;
    for &(an, ad, bn, bd) in &grid {
        let model = ExactBetaModel::new(rational(an, ad), rational(bn, bd)).unwrap();
        for (_, _, r) in model.midpoint_residuals() {
            all_zero &= num::Zero::is_zero(&r);
        }
        let (y0, y1) = model.overreaction_strategy();
        chain_ok &= y0 < model.posterior_single(false)
            && model.posterior_single(false) < model.prior_mean()
            && model.prior_mean() < model.posterior_single(true)
            && model.posterior_single(true) < y1;
        if !model.equal_params() {
            for (s_a, s_b) in [(true, false), (false, true)] {
                let (pair, avg) = model.posterior_shifts(s_a, s_b);
                shifts_ok &= num::Signed::is_positive(&pair) == num::Signed::is_positive(&avg);
                shifts_ok &= num::Signed::abs(&pair) > num::Signed::abs(&avg);
                let out = model.unbiased_outcome(s_a, s_b).unwrap();
                let expected = if model.beta > model.alpha {
                    if s_a { Player::A } else { Player::B }
                } else if s_a {
                    Player::B
                } else {
                    Player::A
                };
                winner_ok &= out.winner == Some(expected);
            }
        }
    }
    checks.expect(
        "midpoint identity is exactly zero on the rational grid",
        all_zero,
        format!("{} models, 4 signal pairs each", grid.len()),
    );
    checks.expect(
        "overreaction ordering chain y(0) < E[th|0] < E[th] < E[th|1] < y(1)",
        chain_ok,
        "strict at every grid point".into(),
    );
    checks.expect(
        "two-signal posterior shifts further than the single-signal average",
        shifts_ok,
        "sign match and strict magnitude".into(),
    );
    checks.expect(
        "unbiased winner is the ex-ante less likely signal",
        winner_ok,
        "matches the parameter branch".into(),
    );
    FixtureReport {
        name: "beta-bernoulli".into(),
        checks: checks.0,
    }
}

fn mixed_motives_fixture() -> FixtureReport {
    let mut checks = Checks::new();
    let model = NormalModel::symmetric(1.0, 1.0).unwrap();
    for b in [-0.5, 0.0, 0.2, 1.0] {
        let report = verify_mixed_motives_dominance(&model, b, 10_000, 2024).unwrap();
        checks.expect(
            &format!("dominance holds on all samples at bias {b}"),
            report.passed,
            format!("{}/{} sampled signal pairs", report.n_passed, report.n_checks),
        );
    }
    FixtureReport {
        name: "mixed-motives".into(),
        checks: checks.0,
    }
}
