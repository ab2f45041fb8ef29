//! Univariate real polynomials in the variational parameter `t`.
//!
//! Every geometric quantity of the deformed surface depends polynomially on
//! `t`, so a [`TPoly`] is the scalar type carried through the jet machinery
//! when the top deformation layer is left symbolic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::{Arith, Ring};

/// Polynomial `c[0] + c[1] t + c[2] t^2 + ...` with trailing zeros trimmed.
///
/// The zero polynomial has no coefficients and degree `-1`.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TPoly {
    coeffs: Vec<f64>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::new(vec![0.0, 1.0])
    }

    /// Builds a polynomial from ascending coefficients, trimming exact trailing zeros.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `t^j`; zero beyond the degree.
    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    /// Degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| j as f64 * c)
            .collect();
        Self::new(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    /// Coefficient convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl From<f64> for TPoly {
    fn from(c: f64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match j {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a} t")?,
                _ => write!(f, "{a} t^{j}")?,
            }
        }
        Ok(())
    }
}

impl Arith for TPoly {
    fn add(&self, other: &Self) -> Self {
        TPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        TPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TPoly::mul(self, other)
    }
    fn scale(&self, s: f64) -> Self {
        TPoly::scale(self, s)
    }
}

impl Ring for TPoly {
    fn zero() -> Self {
        TPoly::zero()
    }
    fn from_f64(c: f64) -> Self {
        TPoly::constant(c)
    }
    fn is_finite(&self) -> bool {
        TPoly::is_finite(self)
    }
    fn eval_at(&self, t: f64) -> f64 {
        self.eval(t)
    }
}
