//! Built-in starting surfaces and the user-defined patch format.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{ExprError, Expression};
use crate::geometry::Vec3;
use crate::jet::{Jet, Var};
use crate::quadrature::Domain;
use crate::ring::Arith;

/// Largest blend value tolerated on a prescribed boundary edge.
pub const BLEND_BOUNDARY_TOL: f64 = 1e-12;
/// Boundary samples used to validate a custom blend (16 per edge).
pub const CUSTOM_BLEND_SAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown surface `{0}`; expected hemiellipsoid, hump, bilinear or custom")]
    UnknownSurface(String),
    #[error("parameter `{name}` is not valid for {surface}")]
    UnknownParameter { surface: String, name: String },
    #[error("invalid value {value} for parameter `{name}`")]
    InvalidParameter { name: String, value: f64 },
    #[error("custom surfaces are loaded from a JSON document, not by name")]
    CustomNeedsConfig,
    #[error("blend is {value:e} at boundary point ({u}, {v}); it must vanish there")]
    BlendOnBoundary { u: f64, v: f64, value: f64 },
    #[error("fixed direction must have unit length, got |k| = {0}")]
    DirectionNotUnit(f64),
    #[error("invalid domain {0:?}")]
    InvalidDomain([f64; 4]),
    #[error("reference area {reference} must be positive")]
    InvalidReference { reference: f64 },
    #[error(transparent)]
    Expression(#[from] ExprError),
    #[error("malformed custom surface document: {0}")]
    Json(String),
}

/// How the deformation direction is chosen at each step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// The unnormalized normal `x_u × x_v` of the current surface.
    Normal,
    /// A constant unit vector.
    Fixed([f64; 3]),
}

/// Which curvature factor multiplies the blend in each deformation layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HMode {
    /// Mean-curvature numerator of the current surface at every step.
    #[default]
    TrueH,
    /// Constant 1 for the first layer, the true numerator afterwards.
    UnitHFirstStep,
    /// Constant 1 for every layer; only useful as a diagnostic since it cannot iterate.
    UnitHEveryStep,
}

impl HMode {
    pub fn uses_unit(&self, layer: usize) -> bool {
        match self {
            HMode::TrueH => false,
            HMode::UnitHFirstStep => layer == 0,
            HMode::UnitHEveryStep => true,
        }
    }
}

/// Edges of the parameter rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Edge {
    U0,
    U1,
    V0,
    V1,
}

impl Edge {
    pub const ALL: [Edge; 4] = [Edge::U0, Edge::U1, Edge::V0, Edge::V1];

    /// `n` evenly spaced points along the edge, corners included.
    pub fn samples(&self, domain: &Domain, n: usize) -> Vec<(f64, f64)> {
        let lerp = |a: f64, b: f64, i: usize| {
            if n == 1 {
                0.5 * (a + b)
            } else {
                a + (b - a) * i as f64 / (n - 1) as f64
            }
        };
        (0..n)
            .map(|i| match self {
                Edge::U0 => (domain.u0, lerp(domain.v0, domain.v1, i)),
                Edge::U1 => (domain.u1, lerp(domain.v0, domain.v1, i)),
                Edge::V0 => (lerp(domain.u0, domain.u1, i), domain.v0),
                Edge::V1 => (lerp(domain.u0, domain.u1, i), domain.v1),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseSurface {
    /// `(sin u cos v, b sin u sin v, c cos u)`.
    Hemiellipsoid { b: f64, c: f64 },
    /// `(u, v, 16 u v (1-u)(1-v))`.
    Hump,
    /// `r (u + v - 2uv, v, u)`.
    Bilinear { r: f64 },
    Custom { components: [Expression; 3] },
}

impl BaseSurface {
    pub fn jets(&self, u: &Jet<f64>, v: &Jet<f64>) -> Vec3<Jet<f64>> {
        let k = u.order();
        let one = Jet::constant(1.0, k);
        match self {
            BaseSurface::Hemiellipsoid { b, c } => {
                let su = u.sin();
                Vec3([
                    su.mul(&v.cos()),
                    su.mul(&v.sin()).scale(*b),
                    u.cos().scale(*c),
                ])
            }
            BaseSurface::Hump => {
                let z = u
                    .mul(v)
                    .mul(&one.sub(u))
                    .mul(&one.sub(v))
                    .scale(16.0);
                Vec3([u.clone(), v.clone(), z])
            }
            BaseSurface::Bilinear { r } => {
                let x = u.add(v).sub(&u.mul(v).scale(2.0));
                Vec3([x.scale(*r), v.scale(*r), u.scale(*r)])
            }
            BaseSurface::Custom { components } => {
                Vec3(components.clone().map(|e| e.eval_jet(u, v)))
            }
        }
    }

    pub fn point(&self, u: f64, v: f64) -> [f64; 3] {
        let j = self.jets(&Jet::seed(Var::U, u, 0), &Jet::seed(Var::V, v, 0));
        j.0.map(|c| *c.value())
    }
}

/// Boundary-vanishing factor of the deformation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Blend {
    /// `v (pi - v)`.
    VPiMinusV,
    /// `u v (1-u)(1-v)`.
    UnitBubble,
    Custom(Expression),
}

impl Blend {
    pub fn jet(&self, u: &Jet<f64>, v: &Jet<f64>) -> Jet<f64> {
        let k = u.order();
        match self {
            Blend::VPiMinusV => v.mul(&Jet::constant(PI, k).sub(v)),
            Blend::UnitBubble => {
                let one = Jet::constant(1.0, k);
                u.mul(v).mul(&one.sub(u)).mul(&one.sub(v))
            }
            Blend::Custom(e) => e.eval_jet(u, v),
        }
    }

    pub fn value(&self, u: f64, v: f64) -> f64 {
        match self {
            Blend::VPiMinusV => v * (PI - v),
            Blend::UnitBubble => u * v * (1.0 - u) * (1.0 - v),
            Blend::Custom(e) => e.eval(u, v),
        }
    }
}

/// Fully specified starting surface plus the rules of its deformation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub base: BaseSurface,
    pub domain: Domain,
    pub blend: Blend,
    pub direction: Direction,
    pub h_mode: HMode,
    /// Area of the known minimal surface for the boundary, when there is one.
    pub reference_area: Option<f64>,
    /// Edges carrying the prescribed boundary curve.
    pub fixed_edges: Vec<Edge>,
}

impl CatalogEntry {
    pub fn with_h_mode(mut self, mode: HMode) -> Self {
        self.h_mode = mode;
        self
    }

    /// Largest `|b|` over `samples_per_edge` points on each fixed edge.
    pub fn max_blend_on_boundary(&self, samples_per_edge: usize) -> (f64, f64, f64) {
        let mut worst = (0.0, 0.0, 0.0);
        for edge in &self.fixed_edges {
            for (u, v) in edge.samples(&self.domain, samples_per_edge) {
                let b = self.blend.value(u, v).abs();
                if b >= worst.2 {
                    worst = (u, v, b);
                }
            }
        }
        worst
    }
}

/// Numeric parameters of a built-in surface, e.g. `b`, `c`, `r`.
pub type Params = BTreeMap<String, f64>;

/// Built-in names accepted by [`get_entry`], with short descriptions.
pub const BUILTIN: [(&str, &str); 3] = [
    (
        "hemiellipsoid",
        "(sin u cos v, b sin u sin v, c cos u) on [0,pi]^2, params b, c (default 1)",
    ),
    ("hump", "(u, v, 16uv(1-u)(1-v)) on [0,1]^2, no params"),
    ("bilinear", "r(u+v-2uv, v, u) on [0,1]^2, param r (default 1)"),
];

fn take(params: &Params, surface: &str, allowed: &[&str]) -> Result<(), CatalogError> {
    for name in params.keys() {
        if !allowed.contains(&name.as_str()) {
            return Err(CatalogError::UnknownParameter {
                surface: surface.to_string(),
                name: name.clone(),
            });
        }
    }
    for (name, &value) in params {
        if !value.is_finite() || value == 0.0 {
            return Err(CatalogError::InvalidParameter {
                name: name.clone(),
                value,
            });
        }
    }
    Ok(())
}

/// Looks up a built-in surface.
pub fn get_entry(name: &str, params: &Params) -> Result<CatalogEntry, CatalogError> {
    let get = |k: &str| params.get(k).copied().unwrap_or(1.0);
    match name {
        "hemiellipsoid" => {
            take(params, name, &["b", "c"])?;
            let (b, c) = (get("b"), get("c"));
            let reference_area = if b == 1.0 && c == 1.0 {
                Some(PI)
            } else {
                log::warn!("no flat reference area for hemiellipsoid b={b}, c={c}; using q-percentages");
                None
            };
            Ok(CatalogEntry {
                name: name.to_string(),
                base: BaseSurface::Hemiellipsoid { b, c },
                domain: Domain::square(0.0, PI),
                blend: Blend::VPiMinusV,
                direction: Direction::Fixed([0.0, 1.0, 0.0]),
                h_mode: HMode::TrueH,
                reference_area,
                // u = 0 and u = pi collapse to the poles
                fixed_edges: vec![Edge::V0, Edge::V1],
            })
        }
        "hump" => {
            take(params, name, &[])?;
            Ok(CatalogEntry {
                name: name.to_string(),
                base: BaseSurface::Hump,
                domain: Domain::UNIT,
                blend: Blend::UnitBubble,
                direction: Direction::Fixed([0.0, 0.0, 1.0]),
                h_mode: HMode::TrueH,
                reference_area: Some(1.0),
                fixed_edges: Edge::ALL.to_vec(),
            })
        }
        "bilinear" => {
            take(params, name, &["r"])?;
            Ok(CatalogEntry {
                name: name.to_string(),
                base: BaseSurface::Bilinear { r: get("r") },
                domain: Domain::UNIT,
                blend: Blend::UnitBubble,
                direction: Direction::Fixed([-1.0, 0.0, 0.0]),
                h_mode: HMode::TrueH,
                reference_area: None,
                fixed_edges: Edge::ALL.to_vec(),
            })
        }
        "custom" => Err(CatalogError::CustomNeedsConfig),
        other => Err(CatalogError::UnknownSurface(other.to_string())),
    }
}

/// On-disk description of a user-defined patch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomSurfaceConfig {
    pub name: String,
    pub components: [Expression; 3],
    pub domain: [f64; 4],
    pub blend: Expression,
    pub direction: Direction,
    #[serde(default)]
    pub h0_mode: HMode,
    #[serde(default)]
    pub reference_area: Option<f64>,
}

impl CustomSurfaceConfig {
    pub fn into_entry(self) -> Result<CatalogEntry, CatalogError> {
        let [u0, u1, v0, v1] = self.domain;
        if !(self.domain.iter().all(|x| x.is_finite()) && u0 < u1 && v0 < v1) {
            return Err(CatalogError::InvalidDomain(self.domain));
        }
        if let Direction::Fixed(k) = self.direction {
            let norm = k.iter().map(|x| x * x).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > 1e-9 {
                return Err(CatalogError::DirectionNotUnit(norm));
            }
        }
        if let Some(a) = self.reference_area {
            if !(a.is_finite() && a > 0.0) {
                return Err(CatalogError::InvalidReference { reference: a });
            }
        }
        let entry = CatalogEntry {
            name: self.name,
            base: BaseSurface::Custom {
                components: self.components,
            },
            domain: Domain::new(u0, u1, v0, v1),
            blend: Blend::Custom(self.blend),
            direction: self.direction,
            h_mode: self.h0_mode,
            reference_area: self.reference_area,
            fixed_edges: Edge::ALL.to_vec(),
        };
        let (u, v, value) = entry.max_blend_on_boundary(CUSTOM_BLEND_SAMPLES / 4);
        if value >= BLEND_BOUNDARY_TOL {
            return Err(CatalogError::BlendOnBoundary { u, v, value });
        }
        Ok(entry)
    }
}

/// Parses and validates a custom-surface JSON document.
pub fn load_custom(document: &str) -> Result<CatalogEntry, CatalogError> {
    let cfg: CustomSurfaceConfig =
        serde_json::from_str(document).map_err(|e| CatalogError::Json(e.to_string()))?;
    cfg.into_entry()
}
