//! Seeded Monte Carlo estimation for the normal-quadratic election: welfare
//! means, the variance/estimation-loss decomposition, and the sampled
//! identity checks.
//!
//! Every sample is derived from a counter-based stream at `(seed, index)`,
//! so estimates are a pure function of the seed and the sample count, no
//! matter how work is scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::game::Player;

use super::normal::{
    make_strategy, truncated_normal_moments, voter_decide, ElectionError, NormalModel,
    PlatformStrategy, StrategyKind, VoterRule, VoterRuleKind,
};

/// Seed, sample count, and a scheduling hint that must never change results.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MonteCarloConfig {
    pub seed: u64,
    pub n_samples: usize,
    pub worker_hint: usize,
}

impl MonteCarloConfig {
    pub fn new(seed: u64, n_samples: usize) -> Self {
        Self {
            seed,
            n_samples,
            worker_hint: 1,
        }
    }

    pub fn with_worker_hint(mut self, hint: usize) -> Self {
        self.worker_hint = hint;
        self
    }
}

/// Independent per-sample generator: the stream index is the sample counter.
pub fn sample_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One simulated election: the state, both signals, and a tie-break draw,
/// always consumed in this order from the per-sample stream.
#[derive(Debug, Clone, Copy)]
pub struct ElectionSample {
    pub theta: f64,
    pub s_a: f64,
    pub s_b: f64,
    pub tie_draw: f64,
}

pub fn draw_sample(model: &NormalModel, seed: u64, index: u64) -> ElectionSample {
    let mut rng = sample_stream(seed, index);
    let z0: f64 = rng.sample(StandardNormal);
    let z1: f64 = rng.sample(StandardNormal);
    let z2: f64 = rng.sample(StandardNormal);
    let theta = z0 / model.alpha.sqrt();
    ElectionSample {
        theta,
        s_a: theta + z1 / model.beta_a.sqrt(),
        s_b: theta + z2 / model.beta_b.sqrt(),
        tie_draw: rng.gen::<f64>(),
    }
}

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WelfareEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub n_samples: usize,
}

fn estimate(sum: f64, sum_sq: f64, n: usize) -> WelfareEstimate {
    let nf = n as f64;
    let mean = sum / nf;
    let var = ((sum_sq - sum * sum / nf) / (nf - 1.0)).max(0.0);
    WelfareEstimate {
        mean,
        std_error: (var / nf).sqrt(),
        n_samples: n,
    }
}

/// Ex-ante voter welfare `E[-(x_winner - theta)^2]` under the given
/// strategies and voter rule.
pub fn mc_welfare(
    model: &NormalModel,
    strat_a: &PlatformStrategy,
    strat_b: &PlatformStrategy,
    rule: &VoterRule,
    cfg: &MonteCarloConfig,
) -> Result<WelfareEstimate, ElectionError> {
    if cfg.n_samples < 2 {
        return Err(ElectionError::InvalidConfig(
            "need at least two samples".into(),
        ));
    }
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for k in 0..cfg.n_samples {
        let sample = draw_sample(model, cfg.seed, k as u64);
        let x_a = strat_a.evaluate(sample.s_a);
        let x_b = strat_b.evaluate(sample.s_b);
        let winner = voter_decide(rule, model, x_a, x_b, sample.tie_draw)?;
        let x = match winner {
            Player::A => x_a,
            Player::B => x_b,
        };
        let w = -(x - sample.theta) * (x - sample.theta);
        sum += w;
        sum_sq += w * w;
    }
    Ok(estimate(sum, sum_sq, cfg.n_samples))
}

/// The welfare split into a variance term `L_V` (information lost about the
/// loser's signal) and an estimation term `L_E` (distance of the winning
/// platform from the winner-conditional posterior), tied together by
/// `total = -(beta/(alpha+2beta))^2 L_V - L_E - 1/(alpha+2beta)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WelfareDecomposition {
    pub l_v: f64,
    pub l_e: f64,
    pub total: f64,
    /// Gap between the sampled total and the reassembled closed-form split.
    pub reassembly_gap: f64,
    pub se_l_v: f64,
    pub se_l_e: f64,
    pub se_total: f64,
    /// Standard error of the per-sample reassembly residual.
    pub se_gap: f64,
    pub n_samples: usize,
    /// True when the winner-conditional moments came from the truncated
    /// normal closed form rather than signal binning.
    pub closed_form_conditioning: bool,
}

/// Can the winner-conditional moments be computed in closed form? Requires
/// the more-extreme rule and a shared strategy whose platform magnitude is
/// increasing in the signal magnitude, so that the winning event coincides
/// with having the more extreme signal.
fn winner_tracks_extreme_signal(
    rule: &VoterRule,
    strat_a: &PlatformStrategy,
    strat_b: &PlatformStrategy,
) -> bool {
    if !matches!(rule.kind, VoterRuleKind::MoreExtreme) || strat_a != strat_b {
        return false;
    }
    match strat_a {
        PlatformStrategy::Affine { slope, intercept } => *intercept == 0.0 && *slope > 0.0,
        PlatformStrategy::BenevolentPander { .. } => true,
        PlatformStrategy::Custom(_) => false,
    }
}

pub fn mc_decomposition(
    model: &NormalModel,
    strat_a: &PlatformStrategy,
    strat_b: &PlatformStrategy,
    rule: &VoterRule,
    cfg: &MonteCarloConfig,
) -> Result<WelfareDecomposition, ElectionError> {
    if !model.is_symmetric() {
        return Err(ElectionError::AsymmetricUnsupported);
    }
    if cfg.n_samples < 2 {
        return Err(ElectionError::InvalidConfig(
            "need at least two samples".into(),
        ));
    }
    let alpha = model.alpha;
    let beta = model.beta_a;
    let slope = beta / (alpha + 2.0 * beta);
    let residual_const = 1.0 / (alpha + 2.0 * beta);
    let closed_form = winner_tracks_extreme_signal(rule, strat_a, strat_b);

    struct Acc {
        sum: f64,
        sum_sq: f64,
    }
    impl Acc {
        fn new() -> Self {
            Acc { sum: 0.0, sum_sq: 0.0 }
        }
        fn push(&mut self, v: f64) {
            self.sum += v;
            self.sum_sq += v * v;
        }
    }
    let mut acc_lv = Acc::new();
    let mut acc_le = Acc::new();
    let mut acc_total = Acc::new();
    let mut acc_gap = Acc::new();

    if closed_form {
        for k in 0..cfg.n_samples {
            let sample = draw_sample(model, cfg.seed, k as u64);
            let x_a = strat_a.evaluate(sample.s_a);
            let x_b = strat_b.evaluate(sample.s_b);
            let winner = voter_decide(rule, model, x_a, x_b, sample.tie_draw)?;
            let (x_w, s_w) = match winner {
                Player::A => (x_a, sample.s_a),
                Player::B => (x_b, sample.s_b),
            };
            // Winning at the more-extreme rule conditions the loser's signal
            // on [-|s_w|, |s_w|].
            let (cond_mean, cond_var) = model.opponent_conditional(winner, s_w);
            let (h, var_l) =
                truncated_normal_moments(cond_mean, cond_var.sqrt(), -s_w.abs(), s_w.abs())?;
            let le_term = {
                let ideal = slope * (s_w + h);
                (x_w - ideal) * (x_w - ideal)
            };
            let total_term = -(x_w - sample.theta) * (x_w - sample.theta);
            acc_lv.push(var_l);
            acc_le.push(le_term);
            acc_total.push(total_term);
            acc_gap.push(total_term + slope * slope * var_l + le_term + residual_const);
        }
    } else {
        // Empirical conditioning: estimate the winner-conditional moments of
        // the loser's signal by equal-count bins over the winner's signal.
        let mut per_winner: [Vec<(f64, f64, f64, f64)>; 2] = [Vec::new(), Vec::new()];
        for k in 0..cfg.n_samples {
            let sample = draw_sample(model, cfg.seed, k as u64);
            let x_a = strat_a.evaluate(sample.s_a);
            let x_b = strat_b.evaluate(sample.s_b);
            let winner = voter_decide(rule, model, x_a, x_b, sample.tie_draw)?;
            let (x_w, s_w, s_l) = match winner {
                Player::A => (x_a, sample.s_a, sample.s_b),
                Player::B => (x_b, sample.s_b, sample.s_a),
            };
            let idx = match winner {
                Player::A => 0,
                Player::B => 1,
            };
            per_winner[idx].push((s_w, s_l, x_w, sample.theta));
        }
        for records in per_winner.iter_mut() {
            if records.is_empty() {
                continue;
            }
            records.sort_by(|a, b| a.0.total_cmp(&b.0));
            let chunk = (records.len() / 1000).max(100);
            for bin in records.chunks(chunk) {
                let nf = bin.len() as f64;
                let mean_l = bin.iter().map(|r| r.1).sum::<f64>() / nf;
                let var_l = if bin.len() > 1 {
                    bin.iter().map(|r| (r.1 - mean_l) * (r.1 - mean_l)).sum::<f64>() / (nf - 1.0)
                } else {
                    0.0
                };
                for &(s_w, _, x_w, theta) in bin {
                    let ideal = slope * (s_w + mean_l);
                    let le_term = (x_w - ideal) * (x_w - ideal);
                    let total_term = -(x_w - theta) * (x_w - theta);
                    acc_lv.push(var_l);
                    acc_le.push(le_term);
                    acc_total.push(total_term);
                    acc_gap.push(total_term + slope * slope * var_l + le_term + residual_const);
                }
            }
        }
    }

    let lv = estimate(acc_lv.sum, acc_lv.sum_sq, cfg.n_samples);
    let le = estimate(acc_le.sum, acc_le.sum_sq, cfg.n_samples);
    let total = estimate(acc_total.sum, acc_total.sum_sq, cfg.n_samples);
    let gap = estimate(acc_gap.sum, acc_gap.sum_sq, cfg.n_samples);
    Ok(WelfareDecomposition {
        l_v: lv.mean,
        l_e: le.mean,
        total: total.mean,
        reassembly_gap: gap.mean.abs(),
        se_l_v: lv.std_error,
        se_l_e: le.std_error,
        se_total: total.std_error,
        se_gap: gap.std_error,
        n_samples: cfg.n_samples,
        closed_form_conditioning: closed_form,
    })
}

/// Sampled check of the offset-family indifference identity: with platforms
/// `slope*s_A + c` and `slope*s_B - c` at the anti-pandering slope, both
/// candidates sit equidistant from the two-signal posterior for every
/// signal pair.
#[derive(Debug, Clone, Serialize)]
pub struct IndifferenceReport {
    pub max_residual: f64,
    pub n_checks: usize,
    pub offsets: Vec<f64>,
    pub passed: bool,
    pub tolerance: f64,
}

pub const INDIFFERENCE_RESIDUAL_TOL: f64 = 1e-10;

pub fn verify_antipander_indifference(
    model: &NormalModel,
    offsets: &[f64],
    n_checks: usize,
    seed: u64,
) -> Result<IndifferenceReport, ElectionError> {
    if !model.is_symmetric() {
        return Err(ElectionError::AsymmetricUnsupported);
    }
    let slope = 2.0 * model.beta_a / (model.alpha + 2.0 * model.beta_a);
    let mut max_residual: f64 = 0.0;
    for k in 0..n_checks {
        let sample = draw_sample(model, seed, k as u64);
        let m = model.posterior_pair(sample.s_a, sample.s_b);
        for &c in offsets {
            let y_a = slope * sample.s_a + c;
            let y_b = slope * sample.s_b - c;
            let gap_a = (y_a - m) * (y_a - m);
            let gap_b = (y_b - m) * (y_b - m);
            max_residual = max_residual.max((gap_a - gap_b).abs());
        }
    }
    Ok(IndifferenceReport {
        max_residual,
        n_checks,
        offsets: offsets.to_vec(),
        passed: max_residual <= INDIFFERENCE_RESIDUAL_TOL,
        tolerance: INDIFFERENCE_RESIDUAL_TOL,
    })
}

/// Sampled check that the mixed-motives winner's platform is strictly
/// closer to the voter's posterior than the loser's, for every signal pair.
#[derive(Debug, Clone, Serialize)]
pub struct DominanceReport {
    pub n_checks: usize,
    pub n_passed: usize,
    pub passed: bool,
    pub bias: f64,
}

pub fn verify_mixed_motives_dominance(
    model: &NormalModel,
    b: f64,
    n_checks: usize,
    seed: u64,
) -> Result<DominanceReport, ElectionError> {
    let beta = if model.is_symmetric() {
        model.beta_a
    } else {
        return Err(ElectionError::AsymmetricUnsupported);
    };
    let winner = make_strategy(model, StrategyKind::MixedMotivesWinner(b))?;
    let loser = make_strategy(model, StrategyKind::MixedMotivesLoser(b))?;
    let alpha = model.alpha;
    let mut n_passed = 0;
    for k in 0..n_checks {
        let sample = draw_sample(model, seed, k as u64);
        let x_w = winner.evaluate(sample.s_a);
        let x_l = loser.evaluate(sample.s_b);
        // Posterior inferred from the platforms under these conjectures.
        let m = (alpha * x_w + beta * (x_w + x_l)) / (alpha + 2.0 * beta);
        let d_w = (x_w - m) * (x_w - m);
        let d_l = (x_l - m) * (x_l - m);
        if d_w < d_l || x_w == x_l {
            n_passed += 1;
        }
    }
    Ok(DominanceReport {
        n_checks,
        n_passed,
        passed: n_passed == n_checks,
        bias: b,
    })
}
