//! Global minimization of a univariate polynomial on a closed interval.
//!
//! Candidates are both endpoints, `t = 0` when it lies in the bracket, and
//! every real root of the derivative inside the bracket. Roots are isolated
//! by sign changes on a uniform grid and polished with Newton steps guarded
//! by bisection.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tpoly::TPoly;

/// Cells in the initial root-isolation grid.
pub const GRID_CELLS: usize = 1024;
/// Absolute tolerance on polished roots.
pub const ROOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyOptError {
    #[error("cannot minimize a constant polynomial")]
    Constant,
    #[error("invalid bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("polynomial has non-finite coefficients")]
    NonFinite,
}

/// Closed search interval for `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self, PolyOptError> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(PolyOptError::InvalidBracket { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn contains(&self, t: f64) -> bool {
        (self.lo..=self.hi).contains(&t)
    }
}

impl Default for Bracket {
    fn default() -> Self {
        Self { lo: -1.0, hi: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizationResult {
    pub t_min: f64,
    pub value: f64,
    /// Every candidate examined, as `(t, p(t))`.
    pub stationary_points: Vec<(f64, f64)>,
    pub bracket: Bracket,
}

/// All real roots of `p` in `[lo, hi]`, ascending, with multiplicities collapsed.
pub fn real_roots(p: &TPoly, bracket: Bracket) -> Vec<f64> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let (lo, hi) = (bracket.lo, bracket.hi);
    let h = (hi - lo) / GRID_CELLS as f64;
    let grid: Vec<f64> = (0..=GRID_CELLS)
        .map(|i| if i == GRID_CELLS { hi } else { lo + h * i as f64 })
        .collect();
    let vals: Vec<f64> = grid.iter().map(|&t| p.eval(t)).collect();
    let dp = p.derivative();
    let mut roots = Vec::new();

    for i in 0..GRID_CELLS {
        let (a, b) = (grid[i], grid[i + 1]);
        let (fa, fb) = (vals[i], vals[i + 1]);
        if fa == 0.0 {
            roots.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            roots.push(polish(p, &dp, a, b));
        }
    }
    if vals[GRID_CELLS] == 0.0 {
        roots.push(hi);
    }

    // Double roots and close pairs show no sign change on the grid; look at
    // the extremum near each local minimum of |p|.
    for i in 1..GRID_CELLS {
        let (l, m, r) = (vals[i - 1].abs(), vals[i].abs(), vals[i + 1].abs());
        if m <= l && m <= r && vals[i - 1].signum() == vals[i + 1].signum() && m != 0.0 {
            let (a, b) = (grid[i - 1], grid[i + 1]);
            let Some(t) = extremum_near(&dp, grid[i], a, b) else {
                continue;
            };
            let pt = p.eval(t);
            if pt != 0.0 && pt.signum() != vals[i].signum() {
                roots.push(polish(p, &dp, a, t));
                roots.push(polish(p, &dp, t, b));
            } else if grazes(p, t) {
                roots.push(t);
            }
        }
    }

    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9);
    roots.retain(|t| bracket.contains(*t));
    roots
}

// Newton with bisection fallback on a sign-changing cell.
fn polish(p: &TPoly, dp: &TPoly, mut a: f64, mut b: f64) -> f64 {
    let mut fa = p.eval(a);
    let mut t = 0.5 * (a + b);
    for _ in 0..200 {
        let ft = p.eval(t);
        if ft == 0.0 {
            return t;
        }
        if ft.signum() == fa.signum() {
            a = t;
            fa = ft;
        } else {
            b = t;
        }
        let d = dp.eval(t);
        let newton = t - ft / d;
        let next = if d != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
        if (next - t).abs() < ROOT_TOL * 1e-3 || (b - a) < ROOT_TOL * 1e-3 {
            return next;
        }
        t = next;
    }
    t
}

// Newton on p' from t0; None unless it settles strictly inside (a, b).
fn extremum_near(dp: &TPoly, t0: f64, a: f64, b: f64) -> Option<f64> {
    let ddp = dp.derivative();
    let mut t = t0;
    for _ in 0..100 {
        let d2 = ddp.eval(t);
        if d2 == 0.0 {
            break;
        }
        let step = dp.eval(t) / d2;
        t -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    (t > a && t < b).then_some(t)
}

// p vanishes at t up to rounding in its own evaluation.
fn grazes(p: &TPoly, t: f64) -> bool {
    let scale: f64 = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| c.abs() * t.abs().powi(j as i32))
        .sum();
    p.eval(t).abs() <= 1e-12 * scale.max(1.0)
}

/// Global minimum of `p` on the bracket; ties go to the smallest `|t|`.
pub fn minimize(p: &TPoly, bracket: Bracket) -> Result<MinimizationResult, PolyOptError> {
    if !p.is_finite() {
        return Err(PolyOptError::NonFinite);
    }
    if p.degree() <= 0 {
        return Err(PolyOptError::Constant);
    }
    let mut candidates = vec![bracket.lo, bracket.hi];
    if bracket.contains(0.0) {
        candidates.push(0.0);
    }
    candidates.extend(real_roots(&p.derivative(), bracket));
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let stationary_points: Vec<(f64, f64)> = candidates.iter().map(|&t| (t, p.eval(t))).collect();
    let (t_min, value) = stationary_points
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.abs().total_cmp(&b.0.abs())))
        .expect("bracket endpoints are always candidates");
    Ok(MinimizationResult {
        t_min,
        value,
        stationary_points,
        bracket,
    })
}
