//! Exact rational verification of the Beta-Bernoulli overreaction
//! equilibrium and the general linear-posterior form it instantiates.
//!
//! Run with: cargo run --example beta_bernoulli

use expost::election::beta::{rational, ExactBetaModel, LinearPosteriorModel};
use num::ToPrimitive;

fn main() {
    let model = ExactBetaModel::new(rational(2, 1), rational(1, 1)).unwrap();
    let (y0, y1) = model.overreaction_strategy();
    println!("Beta(2, 1) prior with Bernoulli signals");
    println!("  prior mean      : {}", model.prior_mean());
    println!("  E[theta | s]    : s=0 -> {}, s=1 -> {}",
        model.posterior_single(false), model.posterior_single(true));
    println!("  overreaction    : y(0) = {y0}, y(1) = {y1}");

    println!("\n  midpoint identity E[theta | sA, sB] = (y(sA) + y(sB)) / 2:");
    for (s_a, s_b, r) in model.midpoint_residuals() {
        println!(
            "    ({}, {}): residual {} (exact zero: {})",
            s_a as u8,
            s_b as u8,
            r.clone(),
            num::Zero::is_zero(&r)
        );
    }

    println!("\n  unbiased-profile winner on unequal signals (alpha > beta):");
    let out = model.unbiased_outcome(true, false).unwrap();
    println!(
        "    signals (1, 0): winner {:?} -- the ex-ante less likely signal (P(s=1) = {})",
        out.winner.unwrap(),
        model.prior_mean()
    );

    // The same strategy through the general linear-posterior lens:
    // w0 = alpha + beta, w1 = 1, s0 = prior mean.
    let lp = LinearPosteriorModel::new(3.0, 1.0, model.prior_mean().to_f64().unwrap()).unwrap();
    println!("\nlinear-posterior form with (w0, w1, s0) = (3, 1, 2/3):");
    println!("  y(0) = {}, y(1) = {}", lp.antipander(0.0), lp.antipander(1.0));
    println!("  the prior mean is a fixed point: y(2/3) = {}", lp.antipander(2.0 / 3.0));
}
