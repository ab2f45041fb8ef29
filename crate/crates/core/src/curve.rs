//! Planar curve analogue: shorten a graph `(u, y(u))` with fixed endpoints.
//!
//! Each step replaces `y` by `y + t u(1-u) y''` and picks `t` by minimizing a
//! quadratic functional, all in exact polynomial arithmetic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadrature::{GaussLegendre, QuadratureError};
use crate::tpoly::TPoly;

/// Gauss–Legendre points used for arc length.
pub const LENGTH_QUAD_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("functional is not convex in t (leading coefficient {0})")]
    NotConvex(f64),
    #[error("non-finite curve coefficients")]
    NonFinite,
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Which quadratic in `t` picks each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveFunctional {
    /// `∫ (y_new')^2`, the Dirichlet energy; second-order length decrease.
    #[default]
    SlopeSquared,
    /// `∫ (y_new'')^2`, the squared bare curvature.
    CurvatureSquared,
}

/// `y(u)` as a polynomial in `u`; the `x` component is `u` itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CurvePoly {
    pub y: TPoly,
}

impl CurvePoly {
    pub fn new(y_coeffs: Vec<f64>) -> Self {
        Self {
            y: TPoly::new(y_coeffs),
        }
    }

    /// `u - u^8`.
    pub fn chi0() -> Self {
        let mut c = vec![0.0; 9];
        c[1] = 1.0;
        c[8] = -1.0;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[f64] {
        self.y.coeffs()
    }

    pub fn eval(&self, u: f64) -> f64 {
        self.y.eval(u)
    }

    /// Distance between the fixed endpoints.
    pub fn chord(&self) -> f64 {
        let dy = self.eval(1.0) - self.eval(0.0);
        (1.0 + dy * dy).sqrt()
    }
}

fn integral_01(p: &TPoly) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| c / (j + 1) as f64)
        .sum()
}

fn bump() -> TPoly {
    TPoly::new(vec![0.0, 1.0, -1.0])
}

/// One shortening step; returns the new curve and the chosen `t`.
///
/// A curve with `y'' = 0` is already straight and comes back unchanged with `t = 0`.
pub fn curve_step(c: &CurvePoly, functional: CurveFunctional) -> Result<(CurvePoly, f64), CurveError> {
    if !c.y.is_finite() {
        return Err(CurveError::NonFinite);
    }
    let m = bump().mul(&c.y.derivative().derivative());
    if m.is_zero() {
        return Ok((c.clone(), 0.0));
    }
    let (y_k, m_k) = match functional {
        CurveFunctional::SlopeSquared => (c.y.derivative(), m.derivative()),
        CurveFunctional::CurvatureSquared => (
            c.y.derivative().derivative(),
            m.derivative().derivative(),
        ),
    };
    // ∫ (y_k + t m_k)^2 = a t^2 + 2 b t + const
    let a = integral_01(&m_k.mul(&m_k));
    let b = integral_01(&y_k.mul(&m_k));
    if a.is_nan() || a <= 0.0 {
        return Err(CurveError::NotConvex(a));
    }
    let t = -b / a;
    Ok((
        CurvePoly {
            y: c.y.add(&m.scale(t)),
        },
        t,
    ))
}

/// Arc length `∫ sqrt(1 + y'^2)` over `[0, 1]`.
pub fn curve_length(c: &CurvePoly, rule: &GaussLegendre) -> f64 {
    let dy = c.y.derivative();
    rule.integrate(|u| (1.0 + dy.eval(u).powi(2)).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub n: usize,
    pub t_min: Option<f64>,
    pub length: f64,
    /// `ℓ_{n-1,n}`.
    pub length_pct: Option<f64>,
    /// `ℓ_{0,n}`.
    pub length_total_pct: Option<f64>,
    pub y_coeffs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub initial: CurvePoly,
    pub functional: CurveFunctional,
    pub quad_order: usize,
    pub records: Vec<CurveRecord>,
}

impl CurveReport {
    pub fn lengths(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.length).collect()
    }

    pub fn t_mins(&self) -> Vec<f64> {
        self.records.iter().filter_map(|r| r.t_min).collect()
    }
}

/// Runs `steps` shortening steps from `c0`.
///
/// Percentages are `100 (ℓ_i - ℓ_j) / (ℓ_0 - chord)`; they are zero when the
/// start is already straight.
pub fn curve_iterate(
    c0: &CurvePoly,
    steps: usize,
    functional: CurveFunctional,
) -> Result<CurveReport, CurveError> {
    let rule = GaussLegendre::on_interval(LENGTH_QUAD_ORDER, 0.0, 1.0)?;
    let l0 = curve_length(c0, &rule);
    let excess = l0 - c0.chord();
    let pct = |a: f64, b: f64| {
        if excess.abs() <= 1e-14 {
            0.0
        } else {
            100.0 * (a - b) / excess
        }
    };
    let mut records = vec![CurveRecord {
        n: 0,
        t_min: None,
        length: l0,
        length_pct: None,
        length_total_pct: None,
        y_coeffs: c0.coeffs().to_vec(),
    }];
    let mut c = c0.clone();
    for n in 1..=steps {
        let (next, t) = curve_step(&c, functional)?;
        let length = curve_length(&next, &rule);
        let prev = records[n - 1].length;
        records.push(CurveRecord {
            n,
            t_min: Some(t),
            length,
            length_pct: Some(pct(prev, length)),
            length_total_pct: Some(pct(l0, length)),
            y_coeffs: next.coeffs().to_vec(),
        });
        c = next;
    }
    Ok(CurveReport {
        initial: c0.clone(),
        functional,
        quad_order: LENGTH_QUAD_ORDER,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_step_of_chi0() {
        let (c1, t) = curve_step(&CurvePoly::chi0(), CurveFunctional::SlopeSquared).unwrap();
        assert!((t - 13.0 / 98.0).abs() < 1e-14);
        let y = c1.coeffs();
        assert!((y[1] - 1.0).abs() < 1e-14);
        assert!((y[7] + 7.4286).abs() < 1e-3);
        assert!((y[8] - 6.4286).abs() < 1e-3);
    }

    #[test]
    fn curvature_functional_variant() {
        let (_, t) = curve_step(&CurvePoly::chi0(), CurveFunctional::CurvatureSquared).unwrap();
        assert!((t - 33.0 / 392.0).abs() < 1e-14);
    }

    #[test]
    fn straight_lines() {
        let rule = GaussLegendre::on_interval(LENGTH_QUAD_ORDER, 0.0, 1.0).unwrap();
        assert!((curve_length(&CurvePoly::new(vec![]), &rule) - 1.0).abs() < 1e-15);
        let diag = CurvePoly::new(vec![0.0, 1.0]);
        assert!((curve_length(&diag, &rule) - 2f64.sqrt()).abs() < 1e-15);
        let r = curve_iterate(&diag, 3, CurveFunctional::default()).unwrap();
        assert!(r.records.iter().all(|x| x.y_coeffs == vec![0.0, 1.0]));
        assert!(r.records[1..].iter().all(|x| x.length_pct == Some(0.0)));
    }

    #[test]
    fn endpoints_fixed() {
        let r = curve_iterate(&CurvePoly::chi0(), 4, CurveFunctional::default()).unwrap();
        for rec in &r.records {
            let c = CurvePoly::new(rec.y_coeffs.clone());
            assert_eq!(c.eval(0.0), 0.0);
            assert!(c.eval(1.0).abs() < 1e-12);
        }
    }
}
