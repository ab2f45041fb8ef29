//! Iterative area reduction of parametric surfaces with fixed boundary.
//!
//! Each step deforms the current surface along `t * b(u,v) * H(u,v) * d`, where
//! `H` is the mean-curvature numerator, `b` vanishes on the boundary and `d` is
//! a fixed direction or the surface normal. The scalar `t` minimizes the mean
//! square of the new surface's `H`, which is an exact polynomial in `t`
//! obtained by pushing truncated Taylor series (jets) with polynomial
//! coefficients through the differential geometry.
//!
//! ```
//! use minsurf::catalog::{get_entry, Params};
//! use minsurf::engine::{iterate, RunSettings, SurfaceSpec};
//!
//! let hump = get_entry("hump", &Params::new()).unwrap();
//! let settings = RunSettings { quad_order: 16, ..Default::default() };
//! let report = iterate(SurfaceSpec::new(hump), 1, settings).unwrap();
//! assert!(report.records[1].area < report.records[0].area);
//! ```

pub mod catalog;
pub mod cli;
pub mod curve;
pub mod engine;
pub mod expr;
pub mod geometry;
pub mod jet;
pub mod polyopt;
pub mod quadrature;
pub mod report;
pub mod ring;
pub mod tpoly;
