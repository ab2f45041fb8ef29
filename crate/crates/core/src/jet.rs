//! Truncated bivariate Taylor expansions ("jets") in the surface parameters `(u, v)`.
//!
//! A jet of order `K` stores the scaled Taylor coefficients
//! `c[i][j] = (d^{i+j} f / du^i dv^j) / (i! j!)` for all `i + j <= K` at an
//! expansion point. Sums, products and `sin`/`cos` of jets propagate every
//! mixed partial up to order `K` exactly (up to rounding), which is what the
//! curvature of a surface built from nested curvature terms needs.
//!
//! Coefficients live in a [`Ring`]: `f64` for ordinary evaluation, or
//! [`TPoly`](crate::tpoly::TPoly) when the variational parameter is kept symbolic.

use thiserror::Error;

use crate::ring::{Arith, Ring};
use crate::tpoly::TPoly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JetError {
    #[error("jet order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("partial ({i},{j}) exceeds jet order {order}")]
    IndexBeyondOrder { i: usize, j: usize, order: usize },
    #[error("cannot differentiate an order-0 jet")]
    OrderExhausted,
}

/// Surface parameter a jet can be seeded with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    U,
    V,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Jet<R> {
    order: usize,
    coeffs: Vec<R>,
}

/// Number of stored coefficients for a jet of order `k`.
pub const fn jet_len(k: usize) -> usize {
    (k + 1) * (k + 2) / 2
}

// Coefficients are grouped by total degree, so truncation is a prefix.
#[inline]
fn idx(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

impl<R: Ring> Jet<R> {
    pub fn constant(value: R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); jet_len(order)];
        coeffs[0] = value;
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(R::zero(), order)
    }

    /// Jet of the coordinate function `var` expanded at `value`.
    pub fn seed(var: Var, value: f64, order: usize) -> Self {
        let mut jet = Self::constant(R::from_f64(value), order);
        if order >= 1 {
            let k = match var {
                Var::U => idx(1, 0),
                Var::V => idx(0, 1),
            };
            jet.coeffs[k] = R::from_f64(1.0);
        }
        jet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Scaled Taylor coefficient `c[i][j]`; `None` beyond the order.
    pub fn coeff(&self, i: usize, j: usize) -> Option<&R> {
        (i + j <= self.order).then(|| &self.coeffs[idx(i, j)])
    }

    /// Scaled coefficients grouped by total degree: `1, u, v, u^2, uv, v^2, ...`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Function value at the expansion point.
    pub fn value(&self) -> &R {
        &self.coeffs[0]
    }

    /// The partial derivative `d^{i+j} f / du^i dv^j`.
    pub fn extract(&self, i: usize, j: usize) -> Result<R, JetError> {
        let c = self.coeff(i, j).ok_or(JetError::IndexBeyondOrder {
            i,
            j,
            order: self.order,
        })?;
        Ok(c.scale(factorial(i) * factorial(j)))
    }

    /// Drops every coefficient of total degree above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..jet_len(order)].to_vec(),
        }
    }

    /// `d/du`, one order lower.
    pub fn d_du(&self) -> Result<Self, JetError> {
        self.differentiate(Var::U)
    }

    /// `d/dv`, one order lower.
    pub fn d_dv(&self) -> Result<Self, JetError> {
        self.differentiate(Var::V)
    }

    fn differentiate(&self, var: Var) -> Result<Self, JetError> {
        if self.order == 0 {
            return Err(JetError::OrderExhausted);
        }
        let k = self.order - 1;
        let mut coeffs = Vec::with_capacity(jet_len(k));
        for d in 0..=k {
            for j in 0..=d {
                let i = d - j;
                let c = match var {
                    Var::U => self.coeffs[idx(i + 1, j)].scale((i + 1) as f64),
                    Var::V => self.coeffs[idx(i, j + 1)].scale((j + 1) as f64),
                };
                coeffs.push(c);
            }
        }
        Ok(Self { order: k, coeffs })
    }

    fn check(&self, other: &Self) -> Result<(), JetError> {
        if self.order != other.order {
            return Err(JetError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(self.zip(other, R::add))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(self.zip(other, R::sub))
    }

    /// Truncated Cauchy product over the triangular index set.
    pub fn try_mul(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        let k = self.order;
        let mut out = vec![R::zero(); jet_len(k)];
        for d1 in 0..=k {
            for b in 0..=d1 {
                let a = d1 - b;
                let x = &self.coeffs[idx(a, b)];
                for d2 in 0..=(k - d1) {
                    for dd in 0..=d2 {
                        let c = d2 - dd;
                        let slot = &mut out[idx(a + c, b + dd)];
                        *slot = slot.add(&x.mul(&other.coeffs[idx(c, dd)]));
                    }
                }
            }
        }
        Ok(Self {
            order: k,
            coeffs: out,
        })
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add_scalar(&self, s: &R) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].add(s);
        out
    }

    /// Multiplies every coefficient by the ring element `s`.
    pub fn mul_scalar(&self, s: &R) -> Self {
        self.map(|c| c.mul(s))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.scale(-1.0))
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::constant(R::from_f64(1.0), self.order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Jet<S> {
        Jet {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(R::is_finite)
    }

    /// Real jet obtained by fixing the variational parameter at `t`.
    pub fn eval_at(&self, t: f64) -> Jet<f64> {
        self.map(|c| c.eval_at(t))
    }
}

impl Jet<f64> {
    /// Promotes a real jet to one with (constant) polynomial coefficients.
    pub fn lift(&self) -> Jet<TPoly> {
        self.map(|&c| TPoly::constant(c))
    }

    pub fn sin(&self) -> Self {
        let (even, odd) = self.trig_series();
        let a0 = self.coeffs[0];
        even.scale(a0.sin()).add(&odd.scale(a0.cos()))
    }

    pub fn cos(&self) -> Self {
        let (even, odd) = self.trig_series();
        let a0 = self.coeffs[0];
        even.scale(a0.cos()).sub(&odd.scale(a0.sin()))
    }

    // cos(d) and sin(d) series for the non-constant part d; d^{K+1} vanishes.
    fn trig_series(&self) -> (Self, Self) {
        let k = self.order;
        let mut delta = self.clone();
        delta.coeffs[0] = 0.0;
        let mut even = Self::constant(1.0, k);
        let mut odd = Self::zero(k);
        let mut power = Self::constant(1.0, k);
        for n in 1..=k {
            power = power.mul(&delta);
            let term = power.scale(1.0 / factorial(n));
            match n % 4 {
                0 => even = even.add(&term),
                1 => odd = odd.add(&term),
                2 => even = even.sub(&term),
                _ => odd = odd.sub(&term),
            }
        }
        (even, odd)
    }
}

/// Operator-style arithmetic; mismatched orders are a programming error here.
impl<R: Ring> Arith for Jet<R> {
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("jet add")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("jet sub")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("jet mul")
    }
    fn scale(&self, s: f64) -> Self {
        self.map(|c| c.scale(s))
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
