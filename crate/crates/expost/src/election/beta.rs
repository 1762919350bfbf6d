//! Beta-prior / Bernoulli-signal election specification and the general
//! linear-posterior overreaction form.
//!
//! The identities here are exact, so the model is generic over the scalar:
//! `BigRational` gives zero residuals, `f64` a 1e-12 fallback.

use num::{BigRational, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::game::Player;

#[derive(Debug, Error)]
pub enum BetaError {
    #[error("beta model parameters must be strictly positive")]
    NonPositiveParams,
    #[error("the unbiased-profile winner analysis assumes alpha != beta")]
    EqualParams,
}

/// Scalar field the Beta-Bernoulli formulas are evaluated over.
pub trait BetaScalar:
    Clone
    + PartialOrd
    + Zero
    + One
    + Signed
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
{
    fn two() -> Self {
        Self::one() + Self::one()
    }
    fn of_signal(s: bool) -> Self {
        if s {
            Self::one()
        } else {
            Self::zero()
        }
    }
}

impl BetaScalar for f64 {}
impl BetaScalar for BigRational {}

/// Beta(alpha, beta) prior over the state with two conditionally independent
/// Bernoulli(theta) signals.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaModel<T> {
    pub alpha: T,
    pub beta: T,
}

pub type FloatBetaModel = BetaModel<f64>;
pub type ExactBetaModel = BetaModel<BigRational>;

impl<T: BetaScalar> BetaModel<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self, BetaError> {
        if alpha <= T::zero() || beta <= T::zero() {
            return Err(BetaError::NonPositiveParams);
        }
        Ok(Self { alpha, beta })
    }

    pub fn equal_params(&self) -> bool {
        self.alpha == self.beta
    }

    /// `E[theta] = alpha / (alpha + beta)`.
    pub fn prior_mean(&self) -> T {
        self.alpha.clone() / (self.alpha.clone() + self.beta.clone())
    }

    /// `E[theta | s] = (alpha + s) / (alpha + beta + 1)`.
    pub fn posterior_single(&self, s: bool) -> T {
        (self.alpha.clone() + T::of_signal(s))
            / (self.alpha.clone() + self.beta.clone() + T::one())
    }

    /// `E[theta | s_A, s_B] = (alpha + s_A + s_B) / (alpha + beta + 2)`.
    pub fn posterior_pair(&self, s_a: bool, s_b: bool) -> T {
        (self.alpha.clone() + T::of_signal(s_a) + T::of_signal(s_b))
            / (self.alpha.clone() + self.beta.clone() + T::two())
    }

    /// The symmetric fully revealing overreaction strategy:
    /// `y(0) = alpha / (alpha + beta + 2)` and `y(1) = (alpha + 2) / (alpha + beta + 2)`.
    pub fn overreaction_strategy(&self) -> (T, T) {
        let denom = self.alpha.clone() + self.beta.clone() + T::two();
        (
            self.alpha.clone() / denom.clone(),
            (self.alpha.clone() + T::two()) / denom,
        )
    }

    /// Residual `E[theta | s_A, s_B] - (y(s_A) + y(s_B)) / 2` for each of the
    /// four signal pairs; identically zero for the overreaction strategy.
    pub fn midpoint_residuals(&self) -> Vec<(bool, bool, T)> {
        let (y0, y1) = self.overreaction_strategy();
        let platform = |s: bool| if s { y1.clone() } else { y0.clone() };
        [(false, false), (false, true), (true, false), (true, true)]
            .into_iter()
            .map(|(s_a, s_b)| {
                let midpoint = (platform(s_a) + platform(s_b)) / T::two();
                (s_a, s_b, self.posterior_pair(s_a, s_b) - midpoint)
            })
            .collect()
    }

    /// Verdict form of the midpoint identity: true when every residual is
    /// within `tol` in absolute value, along with the worst residual.
    /// Exact scalars pass at `tol = 0`.
    pub fn verify_midpoint(&self, tol: &T) -> (bool, T) {
        let mut worst = T::zero();
        for (_, _, r) in self.midpoint_residuals() {
            let a = r.abs();
            if a > worst {
                worst = a;
            }
        }
        (worst <= *tol, worst)
    }

    /// The two sides of the overreaction comparison: how far the two-signal
    /// posterior and the average of the single-signal posteriors each shift
    /// from the prior mean. Both shifts share a sign, and the former is
    /// strictly larger in magnitude.
    pub fn posterior_shifts(&self, s_a: bool, s_b: bool) -> (T, T) {
        let prior = self.prior_mean();
        let pair_shift = self.posterior_pair(s_a, s_b) - prior.clone();
        let avg = (self.posterior_single(s_a) + self.posterior_single(s_b)) / T::two();
        (pair_shift, avg - prior)
    }

    /// Winner when both candidates play unbiased strategies and the voter
    /// best responds: derived by comparing each platform's distance to the
    /// two-signal posterior. Requires `alpha != beta`; at equal parameters
    /// the voter is indifferent on unequal signals.
    pub fn unbiased_outcome(&self, s_a: bool, s_b: bool) -> Result<UnbiasedOutcome<T>, BetaError> {
        if self.equal_params() {
            return Err(BetaError::EqualParams);
        }
        let (pair_shift, avg_shift) = self.posterior_shifts(s_a, s_b);
        if s_a == s_b {
            return Ok(UnbiasedOutcome {
                winner: None,
                pair_shift,
                avg_shift,
            });
        }
        let m = self.posterior_pair(s_a, s_b);
        let d = |s: bool| {
            let gap = self.posterior_single(s) - m.clone();
            gap.clone() * gap
        };
        let (d_a, d_b) = (d(s_a), d(s_b));
        let winner = if d_a < d_b {
            Some(Player::A)
        } else if d_b < d_a {
            Some(Player::B)
        } else {
            None
        };
        Ok(UnbiasedOutcome {
            winner,
            pair_shift,
            avg_shift,
        })
    }
}

/// Outcome of the unbiased profile at one signal pair; `winner == None`
/// means the voter is indifferent.
#[derive(Debug, Clone, Serialize)]
pub struct UnbiasedOutcome<T> {
    pub winner: Option<Player>,
    pub pair_shift: T,
    pub avg_shift: T,
}

/// Conjugate-family posteriors that are affine in the signals: there are
/// weights `w0, w1` and a prior mean parameter `s0` with
/// `E[theta | s] = (w0 s0 + w1 s) / (w0 + w1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearPosteriorModel {
    pub w0: f64,
    pub w1: f64,
    pub s0: f64,
}

impl LinearPosteriorModel {
    pub fn new(w0: f64, w1: f64, s0: f64) -> Result<Self, BetaError> {
        if !(w0 > 0.0 && w1 > 0.0) || !s0.is_finite() {
            return Err(BetaError::NonPositiveParams);
        }
        Ok(Self { w0, w1, s0 })
    }

    pub fn posterior_single(&self, s: f64) -> f64 {
        (self.w0 * self.s0 + self.w1 * s) / (self.w0 + self.w1)
    }

    pub fn posterior_pair(&self, s_a: f64, s_b: f64) -> f64 {
        (self.w0 * self.s0 + self.w1 * (s_a + s_b)) / (self.w0 + 2.0 * self.w1)
    }

    /// The overreaction equilibrium strategy
    /// `y(s) = 2 w1 / (w0 + 2 w1) * s + w0 / (w0 + 2 w1) * s0`.
    pub fn antipander(&self, s: f64) -> f64 {
        (2.0 * self.w1 * s + self.w0 * self.s0) / (self.w0 + 2.0 * self.w1)
    }
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}
