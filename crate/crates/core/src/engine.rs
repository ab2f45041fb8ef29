//! The iteration driver.
//!
//! A surface `x_n` is the base parametrization plus `n` layers, each adding
//! `t_k * b(u,v) * H_k(u,v) * d` where `H_k` is the mean-curvature numerator of
//! the surface beneath it. Only the `t_k` are stored; everything else is
//! recomputed through jets, two orders deeper per layer.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{CatalogEntry, Direction};
use crate::geometry::{
    fundamental_magnitudes, normal_numerator_jets, FundamentalMagnitudes, GeometryError,
    SurfacePointJets, Vec3, METRIC_DEGENERACY_TOL,
};
use crate::jet::{Jet, Var};
use crate::polyopt::{self, Bracket, PolyOptError, ROOT_TOL};
use crate::quadrature::{QuadratureError, QuadratureRule};
use crate::ring::Arith;
use crate::tpoly::TPoly;

/// Depth beyond which runs are allowed but warned about (base jet order 10).
pub const MAX_SUPPORTED_STEPS: usize = 4;
pub const DEFAULT_QUAD_ORDER: usize = 32;
pub const MIN_QUAD_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("base jet order {got} is too low for {layers} layers; need at least {required}")]
    OrderTooLow {
        required: usize,
        got: usize,
        layers: usize,
    },
    #[error("point ({u}, {v}) is outside the parameter domain")]
    OutsideDomain { u: f64, v: f64 },
    #[error("layer {layer} does not exist (surface has {depth})")]
    NoSuchLayer { layer: usize, depth: usize },
    #[error("layers must be numbered 0, 1, 2, ...; found {found} at position {position}")]
    LayerOrder { position: usize, found: usize },
    #[error("at least one step is required")]
    NoSteps,
    #[error("quadrature order must be at least {MIN_QUAD_ORDER}, got {0}")]
    QuadOrder(usize),
    #[error("reference area {reference} must be below the initial area {initial}")]
    InvalidReference { reference: f64, initial: f64 },
    #[error("curvature ratio is undefined when the mean square curvature is zero")]
    UndefinedRatio,
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    PolyOpt(#[from] PolyOptError),
}

pub type Result<T> = std::result::Result<T, EngineError>;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterationLayer {
    pub step_index: usize,
    pub t_value: f64,
}

/// A starting surface and the deformation layers applied so far.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub entry: CatalogEntry,
    pub layers: Vec<IterationLayer>,
}

impl SurfaceSpec {
    pub fn new(entry: CatalogEntry) -> Self {
        Self {
            entry,
            layers: Vec::new(),
        }
    }

    /// Spec with the given `t` values as layers 0, 1, ...
    pub fn with_layers(entry: CatalogEntry, ts: &[f64]) -> Self {
        let mut s = Self::new(entry);
        for &t in ts {
            s.push_layer(t);
        }
        s
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn push_layer(&mut self, t: f64) {
        let step_index = self.layers.len();
        self.layers.push(IterationLayer {
            step_index,
            t_value: t,
        });
    }

    /// The first `depth` layers only.
    pub fn truncated(&self, depth: usize) -> Self {
        Self {
            entry: self.entry.clone(),
            layers: self.layers[..depth.min(self.layers.len())].to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (position, layer) in self.layers.iter().enumerate() {
            if layer.step_index != position {
                return Err(EngineError::LayerOrder {
                    position,
                    found: layer.step_index,
                });
            }
            if !layer.t_value.is_finite() {
                return Err(EngineError::NonFinite("layer t value"));
            }
        }
        Ok(())
    }

    fn check_point(&self, u: f64, v: f64) -> Result<()> {
        let d = &self.entry.domain;
        let slack = 1e-12 * (d.u1 - d.u0).abs().max(d.v1 - d.v0).max(1.0);
        let inside = u >= d.u0 - slack && u <= d.u1 + slack && v >= d.v0 - slack && v <= d.v1 + slack;
        if inside {
            Ok(())
        } else {
            Err(EngineError::OutsideDomain { u, v })
        }
    }
}

/// Base jet order needed to get order `order` after `layers` layers.
pub fn required_base_order(layers: usize, order: usize) -> usize {
    order + 2 * layers
}

// x_k at jet order `order`, using the first k layers.
fn surface_jets(spec: &SurfaceSpec, k: usize, u: f64, v: f64, order: usize) -> Vec3<Jet<f64>> {
    if k == 0 {
        let ju = Jet::seed(Var::U, u, order);
        let jv = Jet::seed(Var::V, v, order);
        return spec.entry.base.jets(&ju, &jv);
    }
    let below = surface_jets(spec, k - 1, u, v, order + 2);
    let t = spec.layers[k - 1].t_value;
    let m = displacement_jets(spec, k - 1, &below, u, v, order);
    Vec3([0, 1, 2].map(|i| below.0[i].truncate(order).add(&m.0[i].scale(t))))
}

// b * H_k * d at jet order `order`, given x_k at order `order + 2`.
fn displacement_jets(
    spec: &SurfaceSpec,
    layer: usize,
    below: &Vec3<Jet<f64>>,
    u: f64,
    v: f64,
    order: usize,
) -> Vec3<Jet<f64>> {
    let entry = &spec.entry;
    let h = if entry.h_mode.uses_unit(layer) {
        Jet::constant(1.0, order)
    } else {
        mean_curvature_jet(below)
    };
    let ju = Jet::seed(Var::U, u, order);
    let jv = Jet::seed(Var::V, v, order);
    let scalar = entry.blend.jet(&ju, &jv).mul(&h);
    match entry.direction {
        Direction::Fixed(k) => Vec3(k.map(|c| scalar.scale(c))),
        Direction::Normal => {
            let n = normal_numerator_jets(below).expect("orders checked by construction");
            Vec3([0, 1, 2].map(|i| n.0[i].truncate(order).mul(&scalar)))
        }
    }
}

fn mean_curvature_jet(p: &Vec3<Jet<f64>>) -> Jet<f64> {
    crate::geometry::fundamental_magnitude_jets(p)
        .expect("orders checked by construction")
        .mean_curvature_numerator()
}

/// Jets of `x_n` (every stored layer applied), starting from base jets of `base_order`.
pub fn evaluate_surface_from_base(
    spec: &SurfaceSpec,
    u: f64,
    v: f64,
    base_order: usize,
) -> Result<SurfacePointJets<f64>> {
    let n = spec.depth();
    if base_order < 2 * n {
        return Err(EngineError::OrderTooLow {
            required: 2 * n,
            got: base_order,
            layers: n,
        });
    }
    spec.check_point(u, v)?;
    Ok(surface_jets(spec, n, u, v, base_order - 2 * n))
}

/// Jets of `x_n` to order `order`.
pub fn evaluate_surface(
    spec: &SurfaceSpec,
    u: f64,
    v: f64,
    order: usize,
) -> Result<SurfacePointJets<f64>> {
    evaluate_surface_from_base(spec, u, v, required_base_order(spec.depth(), order))
}

/// Jets of the trial surface `x_{n+1}(t)` with the new layer's `t` left symbolic.
pub fn evaluate_trial_surface(
    spec: &SurfaceSpec,
    u: f64,
    v: f64,
    order: usize,
) -> Result<SurfacePointJets<TPoly>> {
    spec.check_point(u, v)?;
    let n = spec.depth();
    let below = surface_jets(spec, n, u, v, order + 2);
    let m = displacement_jets(spec, n, &below, u, v, order);
    let t = TPoly::t();
    Ok(Vec3([0, 1, 2].map(|i| {
        below.0[i]
            .truncate(order)
            .lift()
            .add(&m.0[i].lift().mul_scalar(&t))
    })))
}

/// Displacement shape `b H_k d` of layer `layer` at a point, without the factor `t_k`.
///
/// `layer == depth` gives the shape of the next, not yet chosen, layer.
pub fn displacement_form(spec: &SurfaceSpec, layer: usize, u: f64, v: f64) -> Result<[f64; 3]> {
    if layer > spec.depth() {
        return Err(EngineError::NoSuchLayer {
            layer,
            depth: spec.depth(),
        });
    }
    spec.check_point(u, v)?;
    let below = surface_jets(spec, layer, u, v, 2);
    Ok(displacement_jets(spec, layer, &below, u, v, 0).0.map(|c| *c.value()))
}

/// `x_{k+1} - x_k` at a point, i.e. `t_k` times the layer's shape.
pub fn displacement(spec: &SurfaceSpec, layer: usize, u: f64, v: f64) -> Result<[f64; 3]> {
    let t = spec
        .layers
        .get(layer)
        .ok_or(EngineError::NoSuchLayer {
            layer,
            depth: spec.depth(),
        })?
        .t_value;
    Ok(displacement_form(spec, layer, u, v)?.map(|c| t * c))
}

/// Position of `x_n` at a point.
pub fn position(spec: &SurfaceSpec, u: f64, v: f64) -> Result<[f64; 3]> {
    Ok(evaluate_surface(spec, u, v, 0)?.0.map(|c| *c.value()))
}

/// Fundamental magnitudes of `x_n` at a point.
pub fn magnitudes_at(spec: &SurfaceSpec, u: f64, v: f64) -> Result<FundamentalMagnitudes<f64>> {
    Ok(fundamental_magnitudes(&evaluate_surface(spec, u, v, 2)?)?)
}

/// Fundamental magnitudes of `x_{n+1}(t)` at a point.
pub fn trial_magnitudes_at(
    spec: &SurfaceSpec,
    u: f64,
    v: f64,
) -> Result<FundamentalMagnitudes<TPoly>> {
    Ok(fundamental_magnitudes(&evaluate_trial_surface(spec, u, v, 2)?)?)
}

fn per_node<T: Send>(
    rule: &QuadratureRule,
    f: impl Fn(f64, f64) -> Result<T> + Sync + Send,
) -> Result<Vec<T>> {
    rule.nodes().par_iter().map(|n| f(n.u, n.v)).collect()
}

/// `∫∫ H_{n+1}(u,v,t)^2` over the domain, as a polynomial in `t`.
pub fn mu_sq_polynomial(spec: &SurfaceSpec, rule: &QuadratureRule) -> Result<TPoly> {
    let field = per_node(rule, |u, v| {
        let h = trial_magnitudes_at(spec, u, v)?.mean_curvature_numerator();
        Ok(h.mul(&h))
    })?;
    Ok(rule.integrate_field(&field)?)
}

/// Integrated curvature and area of a surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceMetrics {
    /// `∫∫ H^2`.
    pub mu_sq: f64,
    /// `sqrt(∫∫ K^2)`.
    pub nu: f64,
    pub area: f64,
}

fn metrics_from(rule: &QuadratureRule, fms: &[FundamentalMagnitudes<f64>]) -> Result<SurfaceMetrics> {
    let nodes = rule.nodes();
    let h2: Vec<f64> = fms
        .iter()
        .map(|m| m.mean_curvature_numerator().powi(2))
        .collect();
    let k2: Vec<f64> = fms
        .iter()
        .map(|m| m.gaussian_curvature_numerator().powi(2))
        .collect();
    let da = fms
        .iter()
        .zip(&nodes)
        .map(|(m, n)| m.area_integrand(n.u, n.v))
        .collect::<std::result::Result<Vec<f64>, _>>()?;
    Ok(SurfaceMetrics {
        mu_sq: rule.integrate_field(&h2)?,
        nu: rule.integrate_field(&k2)?.sqrt(),
        area: rule.integrate_field(&da)?,
    })
}

/// Metrics of `x_n`.
pub fn surface_metrics(spec: &SurfaceSpec, rule: &QuadratureRule) -> Result<SurfaceMetrics> {
    let fms = per_node(rule, |u, v| magnitudes_at(spec, u, v))?;
    metrics_from(rule, &fms)
}

/// `ν / μ²`.
pub fn curvature_ratio(nu: f64, mu_sq: f64) -> Result<f64> {
    if mu_sq == 0.0 {
        return Err(EngineError::UndefinedRatio);
    }
    Ok(nu / mu_sq)
}

/// Percentage decreases between every pair of areas, `out[i][j]` for `i < j`.
///
/// With a reference minimal area `A_f` this is `100 (A_i - A_j) / (A_0 - A_f)`,
/// otherwise `100 (A_i - A_j) / A_0`. Entries with `i >= j` are zero.
pub fn percentage_decreases(areas: &[f64], reference: Option<f64>) -> Result<Vec<Vec<f64>>> {
    let a0 = *areas.first().ok_or(EngineError::NoSteps)?;
    if areas.iter().any(|a| !(a.is_finite() && *a > 0.0)) {
        return Err(EngineError::NonFinite("areas"));
    }
    let denom = match reference {
        Some(r) if r >= a0 => {
            return Err(EngineError::InvalidReference {
                reference: r,
                initial: a0,
            })
        }
        Some(r) => a0 - r,
        None => a0,
    };
    let n = areas.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            out[i][j] = 100.0 * (areas[i] - areas[j]) / denom;
        }
    }
    Ok(out)
}

/// Quadrature order and search interval for a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunSettings {
    pub quad_order: usize,
    pub bracket: Bracket,
}

impl Default for RunSettings {
    fn default() -> Self {
        Self {
            quad_order: DEFAULT_QUAD_ORDER,
            bracket: Bracket::default(),
        }
    }
}

/// Numerical tolerances echoed into reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub root_tol: f64,
    pub metric_degeneracy_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            root_tol: ROOT_TOL,
            metric_degeneracy_tol: METRIC_DEGENERACY_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub settings: RunSettings,
    pub tolerances: Tolerances,
}

/// Metrics of one surface in the sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub n: usize,
    /// `t` of the layer that produced this surface; `None` for the starting surface.
    pub t_min: Option<f64>,
    /// `μ_n^2` as a polynomial in that layer's `t` (constant for the starting surface).
    pub mu_sq: TPoly,
    /// `μ_n^2` at `t_min`.
    pub mu_sq_min: f64,
    pub nu: f64,
    pub area: f64,
    pub ratio: Option<f64>,
    /// `p_{n-1,n}`, present when a reference area is configured.
    pub p_pct: Option<f64>,
    /// `p_{0,n}`.
    pub p_total_pct: Option<f64>,
    /// `q_{n-1,n}`.
    pub q_pct: Option<f64>,
    /// `q_{0,n}`.
    pub q_total_pct: Option<f64>,
    /// `100 (μ_{n-1} - μ_n) / μ_{n-1}` with `μ = sqrt(μ^2)`.
    pub mu_rms_decrease_pct: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub spec: SurfaceSpec,
    pub config: RunConfig,
    pub records: Vec<IterationRecord>,
    pub error: Option<String>,
}

impl Report {
    pub fn areas(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.area).collect()
    }

    pub fn t_mins(&self) -> Vec<f64> {
        self.records.iter().filter_map(|r| r.t_min).collect()
    }

    pub fn ratios(&self) -> Vec<Option<f64>> {
        self.records.iter().map(|r| r.ratio).collect()
    }
}

fn initial_record(spec: &SurfaceSpec, rule: &QuadratureRule) -> Result<IterationRecord> {
    let m = surface_metrics(spec, rule)?;
    Ok(IterationRecord {
        n: spec.depth(),
        t_min: None,
        mu_sq: TPoly::constant(m.mu_sq),
        mu_sq_min: m.mu_sq,
        nu: m.nu,
        area: m.area,
        ratio: curvature_ratio(m.nu, m.mu_sq).ok(),
        p_pct: None,
        p_total_pct: None,
        q_pct: None,
        q_total_pct: None,
        mu_rms_decrease_pct: None,
    })
}

// One step: build μ²(t), pick t, and measure the new surface.
fn step(spec: &SurfaceSpec, rule: &QuadratureRule, bracket: Bracket) -> Result<IterationRecord> {
    let trial = per_node(rule, |u, v| trial_magnitudes_at(spec, u, v))?;
    let h2: Vec<TPoly> = trial
        .iter()
        .map(|m| {
            let h = m.mean_curvature_numerator();
            h.mul(&h)
        })
        .collect();
    let mu_sq = rule.integrate_field(&h2)?;
    let (t_min, mu_sq_min) = match polyopt::minimize(&mu_sq, bracket) {
        Ok(r) => (r.t_min, r.value),
        Err(PolyOptError::Constant) => {
            log::info!("mean square curvature does not depend on t; keeping the surface");
            (0.0, mu_sq.eval(0.0))
        }
        Err(e) => return Err(e.into()),
    };
    let fms: Vec<FundamentalMagnitudes<f64>> = trial.iter().map(|m| m.at(t_min)).collect();
    let m = metrics_from(rule, &fms)?;
    Ok(IterationRecord {
        n: spec.depth() + 1,
        t_min: Some(t_min),
        mu_sq,
        mu_sq_min,
        nu: m.nu,
        area: m.area,
        ratio: curvature_ratio(m.nu, mu_sq_min).ok(),
        p_pct: None,
        p_total_pct: None,
        q_pct: None,
        q_total_pct: None,
        mu_rms_decrease_pct: None,
    })
}

fn fill_percentages(report: &mut Report) -> Result<()> {
    let areas = report.areas();
    let q = percentage_decreases(&areas, None)?;
    let p = match report.spec.entry.reference_area {
        Some(r) => Some(percentage_decreases(&areas, Some(r))?),
        None => None,
    };
    for j in 1..report.records.len() {
        let (prev_mu, rec_mu) = (report.records[j - 1].mu_sq_min, report.records[j].mu_sq_min);
        let rec = &mut report.records[j];
        rec.q_pct = Some(q[j - 1][j]);
        rec.q_total_pct = Some(q[0][j]);
        if let Some(p) = &p {
            rec.p_pct = Some(p[j - 1][j]);
            rec.p_total_pct = Some(p[0][j]);
        }
        rec.mu_rms_decrease_pct =
            (prev_mu > 0.0).then(|| 100.0 * (prev_mu.sqrt() - rec_mu.max(0.0).sqrt()) / prev_mu.sqrt());
    }
    Ok(())
}

/// Runs `steps` iterations from `spec`, whose current surface becomes the first record.
///
/// Set-up problems are returned as errors. A failure during a step yields the
/// records computed so far with `error` set.
pub fn iterate(spec: SurfaceSpec, steps: usize, settings: RunSettings) -> Result<Report> {
    let mut report = Report {
        spec,
        config: RunConfig {
            settings,
            tolerances: Tolerances::default(),
        },
        records: Vec::new(),
        error: None,
    };
    continue_run(&mut report, steps)?;
    Ok(report)
}

/// Appends `steps` iterations to an existing report in place.
pub fn continue_run(report: &mut Report, steps: usize) -> Result<()> {
    if steps == 0 {
        return Err(EngineError::NoSteps);
    }
    report.spec.validate()?;
    let settings = report.config.settings;
    if settings.quad_order < MIN_QUAD_ORDER {
        return Err(EngineError::QuadOrder(settings.quad_order));
    }
    let rule = QuadratureRule::new(settings.quad_order, report.spec.entry.domain)?;
    if report.spec.depth() + steps > MAX_SUPPORTED_STEPS {
        log::warn!(
            "{} layers exceeds the supported depth of {MAX_SUPPORTED_STEPS}; cost grows quickly",
            report.spec.depth() + steps
        );
    }
    report.error = None;

    if report.records.is_empty() {
        match initial_record(&report.spec, &rule) {
            Ok(r) => report.records.push(r),
            Err(e) => {
                report.error = Some(e.to_string());
                return Ok(());
            }
        }
    }
    for _ in 0..steps {
        log::info!("step {} of {}", report.spec.depth() + 1, report.spec.entry.name);
        match step(&report.spec, &rule, settings.bracket) {
            Ok(rec) => {
                report.spec.push_layer(rec.t_min.unwrap_or(0.0));
                report.records.push(rec);
            }
            Err(e) => {
                report.error = Some(format!("step {}: {e}", report.spec.depth() + 1));
                break;
            }
        }
    }
    if let Err(e) = fill_percentages(report) {
        report.error.get_or_insert_with(|| e.to_string());
    }
    Ok(())
}

/// How far the shapes of two layers are from being proportional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Proportionality {
    /// Component-wise `shape_b / shape_a` at each sample where `shape_a` is nonzero.
    pub ratios: Vec<f64>,
    pub min: f64,
    pub max: f64,
    /// `(max - min) / max(|min|, |max|)`; zero for perfectly proportional fields.
    pub spread: f64,
}

/// Compares the displacement shapes of layers `a` and `b` at the given points.
///
/// With a unit curvature factor at every step the shapes coincide, so the
/// second layer can only rescale what the first one did.
pub fn proportionality(
    spec: &SurfaceSpec,
    a: usize,
    b: usize,
    points: &[(f64, f64)],
) -> Result<Proportionality> {
    let mut ratios = Vec::new();
    for &(u, v) in points {
        let da = displacement_form(spec, a, u, v)?;
        let db = displacement_form(spec, b, u, v)?;
        for i in 0..3 {
            if da[i].abs() > 1e-12 {
                ratios.push(db[i] / da[i]);
            } else if db[i].abs() > 1e-12 {
                // b moves where a does not: not proportional at all
                ratios.push(f64::INFINITY);
            }
        }
    }
    let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let scale = min.abs().max(max.abs());
    let spread = if ratios.is_empty() || scale == 0.0 {
        0.0
    } else {
        (max - min) / scale
    };
    Ok(Proportionality {
        ratios,
        min,
        max,
        spread,
    })
}
