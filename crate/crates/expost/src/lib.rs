//! Analysis toolkit for two-player constant-sum Bayesian games with
//! type-independent payoffs, and for the Downsian election and dual-sphere
//! competition models built on them.
//!
//! The crate is organized around four layers:
//!
//! - [`game`], [`stats`], [`verify`]: finite games, statistical richness
//!   checks (completeness, strong linear independence, convex independence,
//!   identifiability), and equilibrium property certification (Bayes-Nash,
//!   ex-post, interim constancy, single outcome).
//! - [`solver`]: minimax values by linear programming on the ex-ante
//!   reduction, security levels, best responses, and exhaustive pure
//!   equilibrium enumeration.
//! - [`election`]: the normal-quadratic election specification with closed
//!   forms, seeded Monte Carlo welfare estimation, the pandering welfare
//!   decomposition, and the exact Beta-Bernoulli and linear-posterior
//!   variants.
//! - [`dual`]: dual-sphere firm competition (market share plus a government
//!   action) and its on-path surplus constancy check.
//!
//! Every capability has a runnable demo under `examples/`, JSON file formats
//! live in [`io`], and [`fixtures`] bundles self-checking reference
//! scenarios.

pub mod dual;
pub mod election;
pub mod fixtures;
pub mod game;
pub mod io;
pub mod lp;
pub mod solver;
pub mod stats;
pub mod verify;

pub use game::{
    expected_value, interim_payoff, BehaviorStrategy, FiniteBayesGame, GameError, Player,
    PureStrategy, StrategyProfile, DEFAULT_RANK_TOL, DEFAULT_VERIFY_TOL, ON_PATH_TOL,
};
pub use solver::{
    best_response, enumerate_pure_bne, induce_normal_form, security_level, solve_minimax_lp,
    BneEnumeration, MinimaxSolution, SolverError, DEFAULT_CELL_CAP,
};
pub use stats::{
    check_completeness, check_convex_independence, check_identifiable, check_sli, matrix_rank,
    statistics_report, StatisticsReport,
};
pub use verify::{
    certify, verify_bne, verify_expost, verify_interim_constancy, verify_single_outcome,
    EquilibriumCertificate, OutcomeMap,
};
