//! Dense tableau simplex for the small linear programs behind minimax
//! solving and convex-hull membership. Bland's rule keeps pivoting finite.

use thiserror::Error;

const COST_EPS: f64 = 1e-10;
const PIVOT_EPS: f64 = 1e-11;

#[derive(Debug, Error)]
pub enum LpError {
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("malformed linear program: {0}")]
    Malformed(String),
    #[error("simplex iteration limit reached")]
    IterationLimit,
    #[error("solution failed verification: duality gap {0}")]
    DualityGap(f64),
}

#[derive(Debug, Clone)]
pub struct SimplexOutcome {
    pub x: Vec<f64>,
    pub objective: f64,
    /// One dual value per constraint row, read off the initial basis columns.
    pub duals: Vec<f64>,
}

/// Leaving-row selection policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RatioRule {
    /// Among near-minimal ratios take the largest pivot element. Numerically
    /// robust under degeneracy but without a termination guarantee.
    StablePivot,
    /// Bland's rule: smallest basis index among minimal ratios. Guaranteed
    /// to terminate; may pivot on tiny elements.
    Bland,
}

/// Minimizes `cost . x` subject to `a x = rhs`, `x >= 0`.
///
/// `basis[i]` must name a column of `a` holding the i-th identity vector
/// (slack or artificial columns supplied by the caller) and every `rhs`
/// entry must be nonnegative, so the initial basis is feasible.
pub fn simplex_min(
    cost: &[f64],
    a: &[Vec<f64>],
    rhs: &[f64],
    basis: &[usize],
) -> Result<SimplexOutcome, LpError> {
    match simplex_min_with(cost, a, rhs, basis, RatioRule::StablePivot) {
        Err(LpError::IterationLimit) => simplex_min_with(cost, a, rhs, basis, RatioRule::Bland),
        other => other,
    }
}

fn simplex_min_with(
    cost: &[f64],
    a: &[Vec<f64>],
    rhs: &[f64],
    basis: &[usize],
    rule: RatioRule,
) -> Result<SimplexOutcome, LpError> {
    let m = a.len();
    let n = cost.len();
    if rhs.len() != m || basis.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(LpError::Malformed("inconsistent dimensions".into()));
    }
    if rhs.iter().any(|&b| b < 0.0) {
        return Err(LpError::Malformed("rhs must be nonnegative".into()));
    }

    // Tableau rows 0..m are the constraints, row m is the reduced-cost row;
    // column n is the right-hand side.
    let mut t = vec![vec![0.0; n + 1]; m + 1];
    for i in 0..m {
        t[i][..n].copy_from_slice(&a[i]);
        t[i][n] = rhs[i];
    }
    t[m][..n].copy_from_slice(cost);
    let mut in_basis = basis.to_vec();
    {
        let (rows, obj) = t.split_at_mut(m);
        let obj = &mut obj[0];
        for (row, &basic) in rows.iter().zip(&in_basis) {
            let cb = cost[basic];
            if cb != 0.0 {
                for (o, v) in obj.iter_mut().zip(row) {
                    *o -= cb * v;
                }
            }
        }
    }

    // The entering column is the lowest index with a negative reduced cost.
    // Induced-game programs are heavily degenerate (many duplicate rows), so
    // the default ratio test avoids pivoting on a tiny element when a
    // well-scaled row ties; the iteration cap hands persistent degeneracy to
    // the Bland fallback, which cannot cycle.
    let mut iterations = 0usize;
    let max_iterations = 200 * (m + n) + 1000;
    while let Some(entering) = (0..n).find(|&j| t[m][j] < -COST_EPS) {
        iterations += 1;
        if iterations > max_iterations {
            return Err(LpError::IterationLimit);
        }
        let mut leaving: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        let mut best_pivot = 0.0;
        for i in 0..m {
            let a = t[i][entering];
            if a > PIVOT_EPS {
                let ratio = t[i][n] / a;
                let tol = 1e-9 * (1.0 + ratio.abs());
                let replace = if ratio < best_ratio - tol {
                    true
                } else if ratio <= best_ratio + tol {
                    match rule {
                        RatioRule::StablePivot => a > best_pivot,
                        RatioRule::Bland => {
                            leaving.is_none_or(|l| in_basis[i] < in_basis[l])
                        }
                    }
                } else {
                    false
                };
                if replace {
                    best_ratio = best_ratio.min(ratio);
                    best_pivot = a;
                    leaving = Some(i);
                }
            }
        }
        let Some(leaving) = leaving else {
            return Err(LpError::Unbounded);
        };
        pivot(&mut t, leaving, entering);
        in_basis[leaving] = entering;
    }

    let mut x = vec![0.0; n];
    for i in 0..m {
        x[in_basis[i]] = t[i][n].max(0.0);
    }
    let duals = basis
        .iter()
        .map(|&j| cost[j] - t[m][j])
        .collect();
    Ok(SimplexOutcome {
        x,
        objective: -t[m][n],
        duals,
    })
}

fn pivot(t: &mut [Vec<f64>], row: usize, col: usize) {
    let p = t[row][col];
    for v in t[row].iter_mut() {
        *v /= p;
    }
    let (before, rest) = t.split_at_mut(row);
    let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
    for other in before.iter_mut().chain(after.iter_mut()) {
        let factor = other[col];
        if factor != 0.0 {
            for (v, pv) in other.iter_mut().zip(pivot_row.iter()) {
                *v -= factor * pv;
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct MatrixGameSolution {
    pub value: f64,
    pub row_strategy: Vec<f64>,
    pub col_strategy: Vec<f64>,
}

/// Value and optimal mixed strategies of the zero-sum matrix game in which
/// the row player maximizes `payoff` and the column player minimizes it.
///
/// Shifts payoffs positive, solves the packing form
/// `max sum(q) s.t. M q <= 1` by simplex, and reads the row strategy from
/// the duals; the shift cancels in the reported value.
pub fn solve_matrix_game(payoff: &[Vec<f64>]) -> Result<MatrixGameSolution, LpError> {
    let m = payoff.len();
    if m == 0 || payoff[0].is_empty() {
        return Err(LpError::Malformed("empty payoff matrix".into()));
    }
    let n = payoff[0].len();
    if payoff.iter().any(|row| row.len() != n) {
        return Err(LpError::Malformed("ragged payoff matrix".into()));
    }
    let min_entry = payoff.iter().flatten().cloned().fold(f64::INFINITY, f64::min);
    let shift = 1.0 - min_entry;

    // min -sum(q) s.t. (M + shift) q + s = 1, q >= 0, s >= 0.
    let mut cost = vec![-1.0; n];
    cost.resize(n + m, 0.0);
    let mut rows = Vec::with_capacity(m);
    for (i, payoff_row) in payoff.iter().enumerate() {
        let mut row = Vec::with_capacity(n + m);
        row.extend(payoff_row.iter().map(|&v| v + shift));
        for k in 0..m {
            row.push(if k == i { 1.0 } else { 0.0 });
        }
        rows.push(row);
    }
    let rhs = vec![1.0; m];
    let basis: Vec<usize> = (n..n + m).collect();

    // Solve with the numerically stable pivot rule first; fall back to
    // Bland's terminating rule if the result does not verify.
    let mut last_err = LpError::Malformed("no solve attempted".into());
    for rule in [RatioRule::StablePivot, RatioRule::Bland] {
        match simplex_min_with(&cost, &rows, &rhs, &basis, rule)
            .and_then(|out| extract_verified_solution(payoff, shift, &out))
        {
            Ok(solution) => return Ok(solution),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

fn extract_verified_solution(
    payoff: &[Vec<f64>],
    shift: f64,
    out: &SimplexOutcome,
) -> Result<MatrixGameSolution, LpError> {
    let m = payoff.len();
    let n = payoff[0].len();
    let q_total: f64 = out.x[..n].iter().sum();
    if q_total <= 0.0 {
        return Err(LpError::Malformed("degenerate game value".into()));
    }
    let col_strategy = normalize(&out.x[..n]);
    // Duals of the packing constraints solve the covering dual; they are the
    // row player's unnormalized optimal strategy.
    let row_strategy = normalize(&out.duals.iter().map(|&y| -y).collect::<Vec<_>>());
    let value = 1.0 / q_total - shift;

    // Verify the claimed saddle point: both strategies must secure the value
    // against every pure reply.
    let secured_row = (0..n)
        .map(|j| (0..m).map(|i| row_strategy[i] * payoff[i][j]).sum::<f64>())
        .fold(f64::INFINITY, f64::min);
    let secured_col = (0..m)
        .map(|i| (0..n).map(|j| col_strategy[j] * payoff[i][j]).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max);
    let gap = (secured_row - value).abs().max((secured_col - value).abs());
    if gap > 1e-9 {
        return Err(LpError::DualityGap(gap));
    }
    Ok(MatrixGameSolution {
        value,
        row_strategy,
        col_strategy,
    })
}

fn normalize(weights: &[f64]) -> Vec<f64> {
    let clamped: Vec<f64> = weights.iter().map(|&w| w.max(0.0)).collect();
    let total: f64 = clamped.iter().sum();
    clamped.iter().map(|&w| w / total).collect()
}

/// Does `target` lie in the convex hull of `points`, up to `slack`?
///
/// Solved as a phase-1 feasibility problem: minimize the total artificial
/// mass needed to write `target` as a convex combination of `points`.
pub fn in_convex_hull(target: &[f64], points: &[Vec<f64>], slack: f64) -> Result<bool, LpError> {
    if points.is_empty() {
        return Ok(false);
    }
    let d = target.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(LpError::Malformed("point dimension mismatch".into()));
    }
    let k = points.len();
    let m = d + 1;
    // Columns: k combination weights, then m artificials.
    let mut cost = vec![0.0; k];
    cost.resize(k + m, 1.0);
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for coord in 0..m {
        let b = if coord < d { target[coord] } else { 1.0 };
        let sign = if b < 0.0 { -1.0 } else { 1.0 };
        let mut row = Vec::with_capacity(k + m);
        for point in points {
            let v = if coord < d { point[coord] } else { 1.0 };
            row.push(sign * v);
        }
        for j in 0..m {
            row.push(if j == coord { 1.0 } else { 0.0 });
        }
        rows.push(row);
        rhs.push(sign * b);
    }
    let basis: Vec<usize> = (k..k + m).collect();
    let out = simplex_min(&cost, &rows, &rhs, &basis)?;
    Ok(out.objective.abs() <= slack)
}
