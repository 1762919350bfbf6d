//! The normal-quadratic election specification: a state `theta ~ N(0, 1/alpha)`,
//! conditionally independent candidate signals `s_i ~ N(theta, 1/beta_i)`,
//! quadratic voter loss, and the closed-form platform strategies built on
//! those posteriors.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use statrs::function::erf::erfc;
use thiserror::Error;

use crate::game::Player;

#[derive(Debug, Error)]
pub enum ElectionError {
    #[error("model parameters must be strictly positive and finite")]
    InvalidModel,
    #[error("this operation is defined only for equal signal precisions")]
    AsymmetricUnsupported,
    #[error("truncation interval is empty: lo {lo} > hi {hi}")]
    EmptyInterval { lo: f64, hi: f64 },
    #[error("voter conjecture is not invertible")]
    NonInvertibleConjecture,
    #[error("{0}")]
    InvalidConfig(String),
}

/// Prior precision `alpha` and per-candidate signal precisions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalModel {
    pub alpha: f64,
    pub beta_a: f64,
    pub beta_b: f64,
}

impl NormalModel {
    pub fn new(alpha: f64, beta_a: f64, beta_b: f64) -> Result<Self, ElectionError> {
        let ok = [alpha, beta_a, beta_b]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0);
        if !ok {
            return Err(ElectionError::InvalidModel);
        }
        Ok(Self {
            alpha,
            beta_a,
            beta_b,
        })
    }

    pub fn symmetric(alpha: f64, beta: f64) -> Result<Self, ElectionError> {
        Self::new(alpha, beta, beta)
    }

    pub fn is_symmetric(&self) -> bool {
        self.beta_a == self.beta_b
    }

    pub fn beta(&self, player: Player) -> f64 {
        match player {
            Player::A => self.beta_a,
            Player::B => self.beta_b,
        }
    }

    fn require_symmetric(&self) -> Result<f64, ElectionError> {
        if self.is_symmetric() {
            Ok(self.beta_a)
        } else {
            Err(ElectionError::AsymmetricUnsupported)
        }
    }

    /// Best estimate of the state given one signal:
    /// `E[theta | s_i] = beta_i / (alpha + beta_i) * s`.
    pub fn posterior_single(&self, player: Player, s: f64) -> f64 {
        let beta = self.beta(player);
        beta / (self.alpha + beta) * s
    }

    /// Best estimate given both signals:
    /// `E[theta | s_A, s_B] = (beta_A s_A + beta_B s_B) / (alpha + beta_A + beta_B)`.
    pub fn posterior_pair(&self, s_a: f64, s_b: f64) -> f64 {
        (self.beta_a * s_a + self.beta_b * s_b) / (self.alpha + self.beta_a + self.beta_b)
    }

    /// Conditional law of the opponent's signal given own signal `s`:
    /// normal with mean `beta_i/(alpha+beta_i) * s` and variance
    /// `1/(alpha+beta_i) + 1/beta_{-i}`.
    pub fn opponent_conditional(&self, player: Player, s: f64) -> (f64, f64) {
        let beta_own = self.beta(player);
        let beta_opp = self.beta(player.other());
        (
            beta_own / (self.alpha + beta_own) * s,
            1.0 / (self.alpha + beta_own) + 1.0 / beta_opp,
        )
    }
}

/// Named closed-form strategies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StrategyKind {
    /// `E[theta | s_i]`: the candidate's honest posterior mean.
    Unbiased(Player),
    /// The overreaction equilibrium strategy `2 beta_i / (alpha + beta_A + beta_B) * s`.
    AntiPander(Player),
    /// `E[theta | s_i, |s_-i| <= |s_i|]`: panders by conditioning on winning.
    Benevolent,
    /// Ignore the signal and propose the prior mean 0.
    FullPander,
    /// The losing candidate of the delegation construction: prior-optimal 0.
    DelegationLoser,
    /// Mixed-motives winner with ideological bias `b`.
    MixedMotivesWinner(f64),
    /// Mixed-motives loser supporting the winner with bias `b`.
    MixedMotivesLoser(f64),
    /// The offset family around the anti-pandering slope; the signed offset
    /// covers both members (`+c` and `-c`) of an equilibrium pair.
    AffineWithOffset(f64),
}

/// An evaluable platform map from signals to platforms.
#[derive(Clone)]
pub enum PlatformStrategy {
    Affine { slope: f64, intercept: f64 },
    BenevolentPander { model: NormalModel },
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for PlatformStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Affine { slope, intercept } => f
                .debug_struct("Affine")
                .field("slope", slope)
                .field("intercept", intercept)
                .finish(),
            Self::BenevolentPander { model } => f
                .debug_struct("BenevolentPander")
                .field("model", model)
                .finish(),
            Self::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

impl PartialEq for PlatformStrategy {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (
                Self::Affine { slope: s1, intercept: i1 },
                Self::Affine { slope: s2, intercept: i2 },
            ) => s1 == s2 && i1 == i2,
            (Self::BenevolentPander { model: m1 }, Self::BenevolentPander { model: m2 }) => {
                m1 == m2
            }
            _ => false,
        }
    }
}

impl PlatformStrategy {
    pub fn evaluate(&self, s: f64) -> f64 {
        match self {
            Self::Affine { slope, intercept } => slope * s + intercept,
            Self::BenevolentPander { model } => benevolent_platform(model, s),
            Self::Custom(f) => f(s),
        }
    }

    pub fn invertible(&self) -> bool {
        matches!(self, Self::Affine { slope, .. } if *slope != 0.0)
    }

    /// Signal that produces `platform`, for invertible (affine) strategies.
    pub fn invert(&self, platform: f64) -> Option<f64> {
        match self {
            Self::Affine { slope, intercept } if *slope != 0.0 => {
                Some((platform - intercept) / slope)
            }
            _ => None,
        }
    }
}

/// Builds the closed-form strategy named by `kind`.
pub fn make_strategy(
    model: &NormalModel,
    kind: StrategyKind,
) -> Result<PlatformStrategy, ElectionError> {
    let affine = |slope: f64, intercept: f64| PlatformStrategy::Affine { slope, intercept };
    Ok(match kind {
        StrategyKind::Unbiased(player) => {
            let beta = model.beta(player);
            affine(beta / (model.alpha + beta), 0.0)
        }
        StrategyKind::AntiPander(player) => {
            let beta = model.beta(player);
            affine(2.0 * beta / (model.alpha + model.beta_a + model.beta_b), 0.0)
        }
        StrategyKind::Benevolent => {
            model.require_symmetric()?;
            PlatformStrategy::BenevolentPander { model: *model }
        }
        StrategyKind::FullPander | StrategyKind::DelegationLoser => affine(0.0, 0.0),
        StrategyKind::MixedMotivesWinner(b) => {
            let beta = model.require_symmetric()?;
            affine(beta / (model.alpha + beta), b)
        }
        StrategyKind::MixedMotivesLoser(b) => {
            let beta = model.require_symmetric()?;
            affine(1.0, -(model.alpha + beta) / beta * b)
        }
        StrategyKind::AffineWithOffset(c) => {
            let beta = model.require_symmetric()?;
            affine(2.0 * beta / (model.alpha + 2.0 * beta), c)
        }
    })
}

/// `E[theta | s_i, |s_-i| <= |s_i|]`, evaluated through the conditional
/// normal truncated to `[-|s|, |s|]`.
fn benevolent_platform(model: &NormalModel, s: f64) -> f64 {
    let beta = model.beta_a;
    if s == 0.0 {
        return 0.0;
    }
    let (mu, var) = model.opponent_conditional(Player::A, s);
    let truncated = truncated_normal_mean(mu, var.sqrt(), -s.abs(), s.abs())
        .expect("valid symmetric interval");
    beta / (model.alpha + 2.0 * beta) * (s + truncated)
}

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const FRAC_1_SQRT_2PI: f64 = 0.3989422804014327;
/// Standardized bound beyond which the direct phi/Phi ratio is replaced by
/// the scaled-tail computation.
const TAIL_GUARD: f64 = 8.0;

pub fn normal_pdf(z: f64) -> f64 {
    if !z.is_finite() {
        return 0.0;
    }
    FRAC_1_SQRT_2PI * (-0.5 * z * z).exp()
}

pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / SQRT_2)
}

/// Scaled complementary error function `exp(x^2) erfc(x)` for `x >= 0`.
fn erfcx(x: f64) -> f64 {
    if x < 25.0 {
        (x * x).exp() * erfc(x)
    } else {
        // Asymptotic series; relative error below 1e-8 in this range.
        let inv2 = 1.0 / (2.0 * x * x);
        (1.0 - inv2 + 3.0 * inv2 * inv2) / (x * std::f64::consts::PI.sqrt())
    }
}

/// Mean of `N(mu, sigma^2)` truncated to `[lo, hi]`.
///
/// A degenerate interval `lo == hi` is treated as a point mass at `lo`.
pub fn truncated_normal_mean(mu: f64, sigma: f64, lo: f64, hi: f64) -> Result<f64, ElectionError> {
    truncated_normal_moments(mu, sigma, lo, hi).map(|(mean, _)| mean)
}

/// Mean and variance of `N(mu, sigma^2)` truncated to `[lo, hi]`, with
/// guarded tails so intervals far from the mean stay accurate.
pub fn truncated_normal_moments(
    mu: f64,
    sigma: f64,
    lo: f64,
    hi: f64,
) -> Result<(f64, f64), ElectionError> {
    if sigma <= 0.0 || !sigma.is_finite() {
        return Err(ElectionError::InvalidModel);
    }
    if lo > hi {
        return Err(ElectionError::EmptyInterval { lo, hi });
    }
    if lo == hi {
        return Ok((lo, 0.0));
    }
    let mut a = (lo - mu) / sigma;
    let mut b = (hi - mu) / sigma;

    // Nearly degenerate once standardized: the truncated law is uniform to
    // second order.
    if b - a < 1e-10 {
        let mid = mu + sigma * 0.5 * (a + b);
        let width = hi - lo;
        return Ok((mid, width * width / 12.0));
    }

    // Reflect so the interval sits on the right of the mean; the mean ratio
    // flips sign, the variance is unchanged.
    let flipped = a + b < 0.0;
    if flipped {
        (a, b) = (-b, -a);
    }

    let (ratio_mean, ratio_var) = if a >= TAIL_GUARD {
        // Deep right tail: factor out exp(-a^2/2) and work with erfcx.
        let t = ((a * a - b * b) / 2.0).exp();
        let denom = 0.5 * (erfcx(a / SQRT_2) - t * erfcx(b / SQRT_2));
        let m = FRAC_1_SQRT_2PI * (1.0 - t) / denom;
        let v = FRAC_1_SQRT_2PI * (a - b * t) / denom;
        (m, v)
    } else {
        let phi_a = normal_pdf(a);
        let phi_b = normal_pdf(b);
        // Right-tail form of Phi(b) - Phi(a); stays accurate when both
        // endpoints are positive.
        let z = 0.5 * (erfc(a / SQRT_2) - erfc(b / SQRT_2));
        let a_phi_a = if a.is_finite() { a * phi_a } else { 0.0 };
        let b_phi_b = if b.is_finite() { b * phi_b } else { 0.0 };
        ((phi_a - phi_b) / z, (a_phi_a - b_phi_b) / z)
    };

    let mean_shift = if flipped { -ratio_mean } else { ratio_mean };
    let mean = mu + sigma * mean_shift;
    let variance = sigma * sigma * (1.0 + ratio_var - ratio_mean * ratio_mean);
    Ok((mean.clamp(lo.min(hi), hi.max(lo)), variance.max(0.0)))
}

/// Closed-form voter welfare of the three reference equilibria in the
/// symmetric model: full pandering `-1/alpha`, anti-pandering
/// `-(alpha+4beta)/(alpha+2beta)^2`, and delegation `-1/(alpha+beta)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClosedFormWelfares {
    pub full_pander: f64,
    pub anti_pander: f64,
    pub delegation: f64,
}

pub fn closed_form_welfares(model: &NormalModel) -> Result<ClosedFormWelfares, ElectionError> {
    let beta = model.require_symmetric()?;
    let alpha = model.alpha;
    Ok(ClosedFormWelfares {
        full_pander: -1.0 / alpha,
        anti_pander: -(alpha + 4.0 * beta) / ((alpha + 2.0 * beta) * (alpha + 2.0 * beta)),
        delegation: -1.0 / (alpha + beta),
    })
}

/// Probability that a candidate whose true signal is `s_true` defeats an
/// unbiased opponent by playing as if the signal were `s_mimic`, when the
/// voter best responds to unbiased conjectures. The mimic wins exactly when
/// the opponent's signal is smaller in magnitude.
pub fn mimic_win_probability(model: &NormalModel, s_true: f64, s_mimic: f64) -> f64 {
    let (mu, var) = model.opponent_conditional(Player::A, s_true);
    let sd = var.sqrt();
    let m = s_mimic.abs();
    normal_cdf((m - mu) / sd) - normal_cdf((-m - mu) / sd)
}

/// Who the voter elects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TieBreak {
    FairCoin,
    FixedA,
    FixedB,
}

#[derive(Debug, Clone)]
pub enum VoterRuleKind {
    /// Invert the conjectured strategies, form the two-signal posterior, and
    /// elect the platform closest to it.
    BestResponseGiven {
        conjecture_a: PlatformStrategy,
        conjecture_b: PlatformStrategy,
    },
    /// Elect the platform furthest from the prior mean.
    MoreExtreme,
    AlwaysElect(Player),
    FairCoin,
}

#[derive(Debug, Clone)]
pub struct VoterRule {
    pub kind: VoterRuleKind,
    pub tie_break: TieBreak,
}

impl VoterRule {
    pub fn new(kind: VoterRuleKind, tie_break: TieBreak) -> Self {
        Self { kind, tie_break }
    }

    pub fn more_extreme() -> Self {
        Self::new(VoterRuleKind::MoreExtreme, TieBreak::FairCoin)
    }

    pub fn fair_coin() -> Self {
        Self::new(VoterRuleKind::FairCoin, TieBreak::FairCoin)
    }

    pub fn always(player: Player) -> Self {
        Self::new(VoterRuleKind::AlwaysElect(player), TieBreak::FairCoin)
    }

    pub fn best_response_given(
        conjecture_a: PlatformStrategy,
        conjecture_b: PlatformStrategy,
    ) -> Result<Self, ElectionError> {
        if !conjecture_a.invertible() || !conjecture_b.invertible() {
            return Err(ElectionError::NonInvertibleConjecture);
        }
        Ok(Self::new(
            VoterRuleKind::BestResponseGiven {
                conjecture_a,
                conjecture_b,
            },
            TieBreak::FairCoin,
        ))
    }
}

/// Squared-gap differences below this count as voter indifference.
pub const INDIFFERENCE_TOL: f64 = 1e-12;

/// Elects a winner given the two platforms; `draw` in `[0, 1)` resolves
/// ties according to the rule's tie-break.
pub fn voter_decide(
    rule: &VoterRule,
    model: &NormalModel,
    x_a: f64,
    x_b: f64,
    draw: f64,
) -> Result<Player, ElectionError> {
    let tie = |tb: TieBreak| match tb {
        TieBreak::FairCoin => {
            if draw < 0.5 {
                Player::A
            } else {
                Player::B
            }
        }
        TieBreak::FixedA => Player::A,
        TieBreak::FixedB => Player::B,
    };
    Ok(match &rule.kind {
        VoterRuleKind::BestResponseGiven {
            conjecture_a,
            conjecture_b,
        } => {
            let s_a = conjecture_a
                .invert(x_a)
                .ok_or(ElectionError::NonInvertibleConjecture)?;
            let s_b = conjecture_b
                .invert(x_b)
                .ok_or(ElectionError::NonInvertibleConjecture)?;
            let m = model.posterior_pair(s_a, s_b);
            let d_a = (x_a - m) * (x_a - m);
            let d_b = (x_b - m) * (x_b - m);
            if (d_a - d_b).abs() <= INDIFFERENCE_TOL {
                tie(rule.tie_break)
            } else if d_a < d_b {
                Player::A
            } else {
                Player::B
            }
        }
        VoterRuleKind::MoreExtreme => {
            if x_a.abs() > x_b.abs() {
                Player::A
            } else if x_a.abs() < x_b.abs() {
                Player::B
            } else {
                tie(rule.tie_break)
            }
        }
        VoterRuleKind::AlwaysElect(p) => *p,
        VoterRuleKind::FairCoin => tie(rule.tie_break),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_model() -> NormalModel {
        NormalModel::symmetric(1.0, 1.0).unwrap()
    }

    #[test]
    fn posterior_formulas() {
        let m = unit_model();
        assert_eq!(m.posterior_single(Player::A, 2.0), 1.0);
        assert_eq!(m.posterior_single(Player::A, 0.0), 0.0);
        let asym = NormalModel::new(1.0, 3.0, 1.0).unwrap();
        assert_eq!(asym.posterior_single(Player::A, 2.0), 1.5);

        assert!((m.posterior_pair(1.0, 3.0) - 4.0 / 3.0).abs() < 1e-15);
        let asym = NormalModel::new(1.0, 1.0, 2.0).unwrap();
        assert_eq!(asym.posterior_pair(0.0, 2.0), 1.0);

        // Equal signals reproduce the anti-pandering platform.
        let anti = make_strategy(&m, StrategyKind::AntiPander(Player::A)).unwrap();
        for s in [-2.0, -0.5, 0.0, 1.5, 3.0] {
            assert!((m.posterior_pair(s, s) - anti.evaluate(s)).abs() < 1e-15);
        }
    }

    #[test]
    fn opponent_conditional_formulas() {
        let m = unit_model();
        assert_eq!(m.opponent_conditional(Player::A, 2.0), (1.0, 1.5));
        let m = NormalModel::new(2.0, 2.0, 1.0).unwrap();
        let (mean, var) = m.opponent_conditional(Player::A, 4.0);
        assert_eq!(mean, 2.0);
        assert!((var - 1.25).abs() < 1e-15);
    }

    #[test]
    fn strategy_construction_matches_closed_forms() {
        let m = unit_model();
        let anti = make_strategy(&m, StrategyKind::AntiPander(Player::A)).unwrap();
        assert_eq!(anti.evaluate(3.0), 2.0);

        let winner = make_strategy(&m, StrategyKind::MixedMotivesWinner(0.2)).unwrap();
        assert!((winner.evaluate(1.0) - 0.7).abs() < 1e-15);
        let loser = make_strategy(&m, StrategyKind::MixedMotivesLoser(0.2)).unwrap();
        assert!((loser.evaluate(1.0) - 0.6).abs() < 1e-15);

        let asym = NormalModel::new(1.0, 2.0, 1.0).unwrap();
        let anti_a = make_strategy(&asym, StrategyKind::AntiPander(Player::A)).unwrap();
        let anti_b = make_strategy(&asym, StrategyKind::AntiPander(Player::B)).unwrap();
        assert_eq!(anti_a.evaluate(1.0), 1.0);
        assert_eq!(anti_b.evaluate(1.0), 0.5);
        assert!(matches!(
            make_strategy(&asym, StrategyKind::Benevolent),
            Err(ElectionError::AsymmetricUnsupported)
        ));
    }

    #[test]
    fn benevolent_value_at_one_matches_quadrature_constant() {
        // Frozen from the adaptive-quadrature oracle in the integration
        // tests: E[s_B | s_A = 1, |s_B| <= 1] at alpha = beta = 1.
        let m = unit_model();
        let strat = make_strategy(&m, StrategyKind::Benevolent).unwrap();
        let expected = (1.0 / 3.0) * (1.0 + 0.1009321342016438);
        assert!((strat.evaluate(1.0) - expected).abs() < 1e-9);
        assert_eq!(strat.evaluate(0.0), 0.0);
    }

    #[test]
    fn benevolent_is_odd_increasing_and_pandering() {
        let m = NormalModel::symmetric(1.3, 0.7).unwrap();
        let benevolent = make_strategy(&m, StrategyKind::Benevolent).unwrap();
        let unbiased = make_strategy(&m, StrategyKind::Unbiased(Player::A)).unwrap();
        let anti = make_strategy(&m, StrategyKind::AntiPander(Player::A)).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=80 {
            let s = -4.0 + i as f64 * 0.1;
            let y = benevolent.evaluate(s);
            assert!(y > prev, "not increasing at {s}");
            prev = y;
            assert!((y + benevolent.evaluate(-s)).abs() < 1e-12, "not odd at {s}");
            if s != 0.0 {
                // Strategy magnitude order: 0 < benevolent < unbiased < anti.
                assert!(y.abs() > 0.0);
                assert!(y.abs() < unbiased.evaluate(s).abs());
                assert!(unbiased.evaluate(s).abs() < anti.evaluate(s).abs());
            }
        }
    }

    #[test]
    fn truncated_normal_symmetry_and_limits() {
        assert_eq!(truncated_normal_mean(0.0, 1.0, -1.0, 1.0).unwrap(), 0.0);
        let unbounded = truncated_normal_mean(0.7, 2.0, f64::NEG_INFINITY, f64::INFINITY).unwrap();
        assert!((unbounded - 0.7).abs() < 1e-12);
        assert_eq!(truncated_normal_mean(3.0, 1.0, 2.0, 2.0).unwrap(), 2.0);
        assert!(truncated_normal_mean(0.0, 1.0, 1.0, -1.0).is_err());
        // Frozen from the quadrature oracle: mu 0.5, sigma sqrt(1.5), [-1, 1].
        let v = truncated_normal_mean(0.5, 1.5f64.sqrt(), -1.0, 1.0).unwrap();
        assert!((v - 0.1009321342016438).abs() < 1e-9);
    }

    #[test]
    fn truncated_normal_survives_deep_tails() {
        // One-sided deep tail: mean approaches lo + sigma^2/(lo - mu).
        let (mean, var) = truncated_normal_moments(0.0, 1.0, 12.0, 14.0).unwrap();
        assert!(mean > 12.0 && mean < 12.2, "mean {mean}");
        assert!(var > 0.0 && var < 0.02);
        let (mean_neg, _) = truncated_normal_moments(0.0, 1.0, -14.0, -12.0).unwrap();
        assert!((mean + mean_neg).abs() < 1e-9);
        // Far past the guard, still finite and inside the interval.
        let (m30, _) = truncated_normal_moments(0.0, 1.0, 30.0, 31.0).unwrap();
        assert!((30.0..31.0).contains(&m30));
    }

    #[test]
    fn closed_form_welfare_table() {
        let w = closed_form_welfares(&unit_model()).unwrap();
        assert_eq!(w.full_pander, -1.0);
        assert!((w.anti_pander + 5.0 / 9.0).abs() < 1e-15);
        assert_eq!(w.delegation, -0.5);

        let w = closed_form_welfares(&NormalModel::symmetric(2.0, 1.0).unwrap()).unwrap();
        assert_eq!(w.full_pander, -0.5);
        assert_eq!(w.anti_pander, -0.375);
        assert!((w.delegation + 1.0 / 3.0).abs() < 1e-15);

        // Ordering holds across parameters.
        for (a, b) in [(0.3, 2.0), (1.0, 0.01), (5.0, 5.0)] {
            let w = closed_form_welfares(&NormalModel::symmetric(a, b).unwrap()).unwrap();
            assert!(w.full_pander < w.anti_pander && w.anti_pander < w.delegation);
        }

        // Uninformative signals collapse everything to the prior variance.
        let w = closed_form_welfares(&NormalModel::symmetric(1.0, 1e-9).unwrap()).unwrap();
        for v in [w.full_pander, w.anti_pander, w.delegation] {
            assert!((v + 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn mimic_win_probability_examples() {
        let m = unit_model();
        assert_eq!(mimic_win_probability(&m, 0.0, 0.0), 0.0);
        let p = mimic_win_probability(&m, 0.0, 1.0);
        assert!((p - 0.5857).abs() < 1e-3);
        assert!(mimic_win_probability(&m, 0.0, 100.0) > 1.0 - 1e-9);
        // Strictly increasing in the mimicked magnitude.
        let mut prev = -1.0;
        for i in 0..60 {
            let p = mimic_win_probability(&m, 0.7, i as f64 * 0.1);
            assert!(p > prev);
            prev = p;
        }
    }

    #[test]
    fn voter_decision_rules() {
        let m = unit_model();
        let unbiased = make_strategy(&m, StrategyKind::Unbiased(Player::A)).unwrap();
        let rule = VoterRule::best_response_given(unbiased.clone(), unbiased.clone()).unwrap();
        // Platforms 0.5 and 0.25 reveal signals 1 and 0.5; the posterior 1.0
        // is closer to the more extreme platform.
        let w = voter_decide(&rule, &m, 0.5, 0.25, 0.9).unwrap();
        assert_eq!(w, Player::A);

        let rule = VoterRule::more_extreme();
        assert_eq!(voter_decide(&rule, &m, -2.0, 1.0, 0.9).unwrap(), Player::A);
        assert_eq!(voter_decide(&rule, &m, 0.5, -1.0, 0.0).unwrap(), Player::B);

        // Anti-pandering conjectures leave the voter indifferent for any
        // platform pair; the draw decides.
        let anti = make_strategy(&m, StrategyKind::AntiPander(Player::A)).unwrap();
        let rule = VoterRule::best_response_given(anti.clone(), anti).unwrap();
        assert_eq!(voter_decide(&rule, &m, 0.9, -1.4, 0.2).unwrap(), Player::A);
        assert_eq!(voter_decide(&rule, &m, 0.9, -1.4, 0.7).unwrap(), Player::B);

        let full = make_strategy(&m, StrategyKind::FullPander).unwrap();
        assert!(VoterRule::best_response_given(full, unbiased).is_err());
    }
}
