//! Scalar rings shared by jets and curvature formulas.

/// Commutative arithmetic without a distinguished zero (jets need an order to build one).
pub trait Arith: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: f64) -> Self;
}

/// Coefficient ring for jets: plain reals or polynomials in `t`.
pub trait Ring: Arith + std::fmt::Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn from_f64(c: f64) -> Self;
    fn is_finite(&self) -> bool;
    /// Value with the variational parameter fixed at `t` (identity for reals).
    fn eval_at(&self, t: f64) -> f64;
}

impl Arith for f64 {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: f64) -> Self {
        self * s
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_f64(c: f64) -> Self {
        c
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn eval_at(&self, _t: f64) -> f64 {
        *self
    }
}
