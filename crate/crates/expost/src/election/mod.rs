//! Downsian election analysis: the normal-quadratic specification with
//! closed forms and Monte Carlo estimation, plus the exact Beta-Bernoulli
//! and linear-posterior variants.

pub mod beta;
pub mod mc;
pub mod normal;

pub use beta::{BetaError, BetaModel, ExactBetaModel, FloatBetaModel, LinearPosteriorModel};
pub use mc::{
    draw_sample, mc_decomposition, mc_welfare, sample_stream, verify_antipander_indifference,
    verify_mixed_motives_dominance, DominanceReport, ElectionSample, IndifferenceReport,
    MonteCarloConfig, WelfareDecomposition, WelfareEstimate,
};
pub use normal::{
    closed_form_welfares, make_strategy, mimic_win_probability, normal_cdf, normal_pdf,
    truncated_normal_mean, truncated_normal_moments, voter_decide, ClosedFormWelfares,
    ElectionError, NormalModel, PlatformStrategy, StrategyKind, TieBreak, VoterRule,
    VoterRuleKind,
};
