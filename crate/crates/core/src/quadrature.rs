//! Gauss–Legendre rules on intervals and tensor-product rules on rectangles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("quadrature order must be at least 1")]
    ZeroOrder,
    #[error("degenerate domain [{lo}, {hi}]")]
    DegenerateDomain { lo: f64, hi: f64 },
    #[error("non-finite integrand at node ({u}, {v})")]
    NonFinite { u: f64, v: f64 },
    #[error("field has {got} values for {expected} nodes")]
    FieldLength { got: usize, expected: usize },
}

/// Axis-aligned parameter rectangle `[u0, u1] × [v0, v1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

impl Domain {
    pub const UNIT: Domain = Domain { u0: 0.0, u1: 1.0, v0: 0.0, v1: 1.0 };

    pub fn new(u0: f64, u1: f64, v0: f64, v1: f64) -> Self {
        Self { u0, u1, v0, v1 }
    }

    pub fn square(lo: f64, hi: f64) -> Self {
        Self::new(lo, hi, lo, hi)
    }

    pub fn measure(&self) -> f64 {
        (self.u1 - self.u0) * (self.v1 - self.v0)
    }

    pub fn contains(&self, u: f64, v: f64) -> bool {
        (self.u0..=self.u1).contains(&u) && (self.v0..=self.v1).contains(&v)
    }

    fn validate(&self) -> Result<(), QuadratureError> {
        for (lo, hi) in [(self.u0, self.u1), (self.v0, self.v1)] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(QuadratureError::DegenerateDomain { lo, hi });
            }
        }
        Ok(())
    }
}

/// One-dimensional Gauss–Legendre rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Rule on `[-1, 1]`; abscissae are Newton-refined roots of `P_n`.
    pub fn new(n: usize) -> Result<Self, QuadratureError> {
        if n == 0 {
            return Err(QuadratureError::ZeroOrder);
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    /// Rule affinely mapped onto `[lo, hi]`.
    pub fn on_interval(n: usize, lo: f64, hi: f64) -> Result<Self, QuadratureError> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(QuadratureError::DegenerateDomain { lo, hi });
        }
        let base = Self::new(n)?;
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        Ok(Self {
            nodes: base.nodes.iter().map(|x| mid + half * x).collect(),
            weights: base.weights.iter().map(|w| half * w).collect(),
        })
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// A quadrature node of a tensor-product rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub u: f64,
    pub v: f64,
    pub weight: f64,
}

/// Tensor-product Gauss–Legendre rule over a [`Domain`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub order: usize,
    pub domain: Domain,
    pub u_axis: GaussLegendre,
    pub v_axis: GaussLegendre,
}

impl QuadratureRule {
    pub fn new(order: usize, domain: Domain) -> Result<Self, QuadratureError> {
        domain.validate()?;
        Ok(Self {
            order,
            domain,
            u_axis: GaussLegendre::on_interval(order, domain.u0, domain.u1)?,
            v_axis: GaussLegendre::on_interval(order, domain.v0, domain.v1)?,
        })
    }

    pub fn len(&self) -> usize {
        self.order * self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    /// Nodes in a fixed row-major `(u, v)` order; fields are indexed the same way.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.len());
        for (&u, &wu) in self.u_axis.nodes.iter().zip(&self.u_axis.weights) {
            for (&v, &wv) in self.v_axis.nodes.iter().zip(&self.v_axis.weights) {
                out.push(Node { u, v, weight: wu * wv });
            }
        }
        out
    }

    /// Weighted sum of a node-indexed field, accumulated in node order.
    pub fn integrate_field<R: Ring>(&self, field: &[R]) -> Result<R, QuadratureError> {
        let nodes = self.nodes();
        if field.len() != nodes.len() {
            return Err(QuadratureError::FieldLength {
                got: field.len(),
                expected: nodes.len(),
            });
        }
        let mut acc = R::zero();
        for (node, value) in nodes.iter().zip(field) {
            if !value.is_finite() {
                return Err(QuadratureError::NonFinite { u: node.u, v: node.v });
            }
            acc = acc.add(&value.scale(node.weight));
        }
        Ok(acc)
    }

    pub fn integrate<R: Ring>(&self, f: impl Fn(f64, f64) -> R) -> Result<R, QuadratureError> {
        let field: Vec<R> = self.nodes().iter().map(|n| f(n.u, n.v)).collect();
        self.integrate_field(&field)
    }
}
