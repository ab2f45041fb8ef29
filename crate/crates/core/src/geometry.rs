//! Fundamental magnitudes and curvature numerators of a parametric surface.
//!
//! Second-order magnitudes use the unnormalized normal `N = x_u × x_v`, so
//! `e = x_uu · N`, `f = x_uv · N`, `g = x_vv · N`. In this convention the mean
//! curvature numerator `E g - 2 F f + G e` and the Gaussian numerator
//! `e g - f^2` are polynomial in every input, with no square roots or
//! divisions; they vanish exactly where the true curvatures do.

use thiserror::Error;

use crate::jet::{Jet, JetError};
use crate::ring::{Arith, Ring};

/// Tolerance below zero accepted for `EG - F^2` before it is treated as a degeneracy.
pub const METRIC_DEGENERACY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("surface jets need order >= {required}, got {got}")]
    OrderTooLow { required: usize, got: usize },
    #[error("component jets have different orders")]
    MixedOrders,
    #[error("EG - F^2 = {value:e} is negative at (u, v) = ({u}, {v})")]
    NegativeMetric { value: f64, u: f64, v: f64 },
    #[error(transparent)]
    Jet(#[from] JetError),
}

/// Minimal 3-vector over any [`Arith`] scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct Vec3<T>(pub [T; 3]);

impl<T: Arith> Vec3<T> {
    pub fn dot(&self, o: &Self) -> T {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &o.0;
        a0.mul(b0).add(&a1.mul(b1)).add(&a2.mul(b2))
    }

    pub fn cross(&self, o: &Self) -> Self {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &o.0;
        Vec3([
            a1.mul(b2).sub(&a2.mul(b1)),
            a2.mul(b0).sub(&a0.mul(b2)),
            a0.mul(b1).sub(&a1.mul(b0)),
        ])
    }

    pub fn map<S>(&self, f: impl Fn(&T) -> S) -> Vec3<S> {
        let [a, b, c] = &self.0;
        Vec3([f(a), f(b), f(c)])
    }

    pub fn try_map<S, E>(&self, f: impl Fn(&T) -> Result<S, E>) -> Result<Vec3<S>, E> {
        let [a, b, c] = &self.0;
        Ok(Vec3([f(a)?, f(b)?, f(c)?]))
    }
}

/// Jets of the three components of `x(u, v)` at one parameter point.
pub type SurfacePointJets<R> = Vec3<Jet<R>>;

/// `E, F, G` and numerator-convention `e, f, g`.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalMagnitudes<T> {
    pub e_first: T,
    pub f_first: T,
    pub g_first: T,
    pub e_second: T,
    pub f_second: T,
    pub g_second: T,
}

impl<T: Arith> FundamentalMagnitudes<T> {
    /// `E g - 2 F f + G e`.
    pub fn mean_curvature_numerator(&self) -> T {
        self.e_first
            .mul(&self.g_second)
            .sub(&self.f_first.mul(&self.f_second).scale(2.0))
            .add(&self.g_first.mul(&self.e_second))
    }

    /// `e g - f^2`.
    pub fn gaussian_curvature_numerator(&self) -> T {
        self.e_second
            .mul(&self.g_second)
            .sub(&self.f_second.mul(&self.f_second))
    }

    /// `E G - F^2`, the squared length of the normal numerator.
    pub fn metric_determinant(&self) -> T {
        self.e_first
            .mul(&self.g_first)
            .sub(&self.f_first.mul(&self.f_first))
    }

    pub fn map<S>(&self, f: impl Fn(&T) -> S) -> FundamentalMagnitudes<S> {
        FundamentalMagnitudes {
            e_first: f(&self.e_first),
            f_first: f(&self.f_first),
            g_first: f(&self.g_first),
            e_second: f(&self.e_second),
            f_second: f(&self.f_second),
            g_second: f(&self.g_second),
        }
    }
}

impl<R: Ring> FundamentalMagnitudes<R> {
    /// Magnitudes with the variational parameter fixed at `t`.
    pub fn at(&self, t: f64) -> FundamentalMagnitudes<f64> {
        self.map(|c| c.eval_at(t))
    }
}

impl FundamentalMagnitudes<f64> {
    /// `sqrt(EG - F^2)`; slightly negative round-off is clamped to zero.
    pub fn area_integrand(&self, u: f64, v: f64) -> Result<f64, GeometryError> {
        let w = self.metric_determinant();
        if w < -METRIC_DEGENERACY_TOL {
            return Err(GeometryError::NegativeMetric { value: w, u, v });
        }
        Ok(w.max(0.0).sqrt())
    }
}

/// First partials `x_u`, `x_v`.
type TangentJets<R> = (Vec3<Jet<R>>, Vec3<Jet<R>>);

fn tangents<R: Ring>(p: &SurfacePointJets<R>) -> Result<TangentJets<R>, GeometryError> {
    Ok((p.try_map(Jet::d_du)?, p.try_map(Jet::d_dv)?))
}

fn check_orders<R: Ring>(p: &SurfacePointJets<R>, required: usize) -> Result<usize, GeometryError> {
    let k = p.0[0].order();
    if p.0.iter().any(|c| c.order() != k) {
        return Err(GeometryError::MixedOrders);
    }
    if k < required {
        return Err(GeometryError::OrderTooLow { required, got: k });
    }
    Ok(k)
}

/// `x_u × x_v` as a jet one order below the input.
pub fn normal_numerator_jets<R: Ring>(
    p: &SurfacePointJets<R>,
) -> Result<Vec3<Jet<R>>, GeometryError> {
    check_orders(p, 1)?;
    let (xu, xv) = tangents(p)?;
    Ok(xu.cross(&xv))
}

/// Value of `x_u × x_v` at the expansion point.
pub fn normal_numerator<R: Ring>(p: &SurfacePointJets<R>) -> Result<Vec3<R>, GeometryError> {
    Ok(normal_numerator_jets(p)?.map(|c| c.value().clone()))
}

/// Fundamental magnitudes as jets two orders below the input, so that
/// curvature numerators built from them can themselves be differentiated.
pub fn fundamental_magnitude_jets<R: Ring>(
    p: &SurfacePointJets<R>,
) -> Result<FundamentalMagnitudes<Jet<R>>, GeometryError> {
    let k = check_orders(p, 2)?;
    let (xu, xv) = tangents(p)?;
    let xuu = xu.try_map(Jet::d_du)?;
    let xuv = xu.try_map(Jet::d_dv)?;
    let xvv = xv.try_map(Jet::d_dv)?;
    let low = k - 2;
    let xu = xu.map(|c| c.truncate(low));
    let xv = xv.map(|c| c.truncate(low));
    let n = xu.cross(&xv);
    Ok(FundamentalMagnitudes {
        e_first: xu.dot(&xu),
        f_first: xu.dot(&xv),
        g_first: xv.dot(&xv),
        e_second: xuu.dot(&n),
        f_second: xuv.dot(&n),
        g_second: xvv.dot(&n),
    })
}

/// Fundamental magnitudes at the expansion point.
pub fn fundamental_magnitudes<R: Ring>(
    p: &SurfacePointJets<R>,
) -> Result<FundamentalMagnitudes<R>, GeometryError> {
    // Only values are needed; dropping to order 2 first avoids wasted work.
    let p2 = p.map(|c| c.truncate(2));
    Ok(fundamental_magnitude_jets(&p2)?.map(|c| c.value().clone()))
}
