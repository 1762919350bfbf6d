//! Oracles shared by the integration tests: independent computations that
//! never touch the library paths they are used to check.
#![allow(dead_code)]

use num::BigRational;

/// Adaptive Simpson quadrature of `f` over `[lo, hi]`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> f64 {
    fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(a, m, fa, flm, fm);
        let right = simpson(m, b, fm, frm, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let m = 0.5 * (lo + hi);
    let (fa, fm, fb) = (f(lo), f(m), f(hi));
    let whole = simpson(lo, hi, fa, fm, fb);
    recurse(f, lo, hi, fa, fm, fb, whole, tol, 48)
}

/// Truncated-normal mean and variance by quadrature over the clipped
/// support; infinite bounds are cut at forty standard deviations. The
/// density is rescaled by its maximum over the interval so deep-tail
/// truncations keep the integrand at unit scale.
pub fn quad_truncated_moments(mu: f64, sigma: f64, lo: f64, hi: f64) -> (f64, f64) {
    let clip_lo = lo.max(mu - 40.0 * sigma);
    let clip_hi = hi.min(mu + 40.0 * sigma);
    let z_lo = (clip_lo - mu) / sigma;
    let z_hi = (clip_hi - mu) / sigma;
    let z_ref_sq = if z_lo <= 0.0 && z_hi >= 0.0 {
        0.0
    } else {
        z_lo.abs().min(z_hi.abs()).powi(2)
    };
    let density = move |x: f64| {
        let z = (x - mu) / sigma;
        (-0.5 * (z * z - z_ref_sq)).exp()
    };
    // Integrate panel by panel in sigma-width strips so the initial Simpson
    // probes can never straddle the entire mass of the density.
    let integrate = |f: &dyn Fn(f64) -> f64| {
        let tol = 1e-14;
        let mut total = 0.0;
        let mut a = clip_lo;
        while a < clip_hi {
            let b = (a + sigma).min(clip_hi);
            total += adaptive_simpson(f, a, b, tol);
            a = b;
        }
        total
    };
    let mass = integrate(&density);
    let first = integrate(&|x| x * density(x));
    let mean = first / mass;
    let second = integrate(&|x| (x - mean) * (x - mean) * density(x));
    (mean, second / mass)
}

/// Exact rank of a rational matrix by Gaussian elimination.
#[allow(clippy::needless_range_loop)] // two rows of `m` are indexed at once
pub fn exact_rank(rows: &[Vec<BigRational>]) -> usize {
    use num::Zero;
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let n_rows = m.len();
    let n_cols = if n_rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut col = 0;
    while rank < n_rows && col < n_cols {
        let pivot = (rank..n_rows).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for r in rank + 1..n_rows {
            if !m[r][col].is_zero() {
                let factor = m[r][col].clone() / lead.clone();
                for c in col..n_cols {
                    let sub = factor.clone() * m[rank][c].clone();
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Brute-force security level: enumerate every opponent pure induced
/// strategy and take the worst ex-ante payoff of `strategy`.
pub fn enumerated_security_level(
    game: &expost::FiniteBayesGame,
    strategy: &expost::BehaviorStrategy,
) -> f64 {
    use expost::{expected_value, BehaviorStrategy, Player, StrategyProfile};
    let player = strategy.player();
    let opp = player.other();
    let n_types = game.n_types(opp);
    let n_acts = game.n_acts(opp);
    let count = n_acts.pow(n_types as u32);
    let mut worst = f64::INFINITY;
    for index in 0..count {
        let pure = expost::solver::pure_strategy_from_index(opp, index, n_types, n_acts);
        let reply = BehaviorStrategy::from_pure(&pure, n_acts).unwrap();
        let profile = match player {
            Player::A => StrategyProfile::new(strategy.clone(), reply),
            Player::B => StrategyProfile::new(reply, strategy.clone()),
        }
        .unwrap();
        let value_a = expected_value(game, &profile);
        let own_value = match player {
            Player::A => value_a,
            Player::B => game.sum_const() - value_a,
        };
        worst = worst.min(own_value);
    }
    worst
}

/// Splitmix-style deterministic generator for test instances.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        lo + (self.next_u64() % (hi_inclusive - lo + 1) as u64) as usize
    }
}

/// Random strictly positive joint distribution of the given shape.
pub fn random_joint(rng: &mut TestRng, rows: usize, cols: usize) -> Vec<Vec<f64>> {
    let mut joint: Vec<Vec<f64>> = (0..rows)
        .map(|_| (0..cols).map(|_| 0.05 + rng.unit()).collect())
        .collect();
    let total: f64 = joint.iter().flatten().sum();
    for row in &mut joint {
        for v in row.iter_mut() {
            *v /= total;
        }
    }
    joint
}

/// Rank-one joint: independent types with random marginals.
pub fn independent_joint(rng: &mut TestRng, rows: usize, cols: usize) -> Vec<Vec<f64>> {
    let norm = |v: Vec<f64>| {
        let t: f64 = v.iter().sum();
        v.into_iter().map(|x| x / t).collect::<Vec<f64>>()
    };
    let pa = norm((0..rows).map(|_| 0.1 + rng.unit()).collect());
    let pb = norm((0..cols).map(|_| 0.1 + rng.unit()).collect());
    pa.iter().map(|&a| pb.iter().map(|&b| a * b).collect()).collect()
}

/// Joint of prescribed rank `r`: a positive combination of `r` outer
/// products, normalized.
pub fn low_rank_joint(rng: &mut TestRng, rows: usize, cols: usize, r: usize) -> Vec<Vec<f64>> {
    let mut joint = vec![vec![0.0; cols]; rows];
    for _ in 0..r {
        let u: Vec<f64> = (0..rows).map(|_| 0.1 + rng.unit()).collect();
        let v: Vec<f64> = (0..cols).map(|_| 0.1 + rng.unit()).collect();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                joint[i][j] += ui * vj;
            }
        }
    }
    let total: f64 = joint.iter().flatten().sum();
    for row in &mut joint {
        for v in row.iter_mut() {
            *v /= total;
        }
    }
    joint
}

/// Random payoff matrix with entries in [-2, 2).
pub fn random_payoff(rng: &mut TestRng, rows: usize, cols: usize) -> Vec<Vec<f64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.unit() * 4.0 - 2.0).collect())
        .collect()
}
