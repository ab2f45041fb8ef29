//! Report files: JSON envelope with a content hash, tables, and mesh export.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::curve::CurveReport;
use crate::engine::{self, EngineError, Report};

pub const FORMAT_VERSION: u32 = 1;
pub const MIN_MESH_RES: usize = 2;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed report: {0}")]
    Malformed(String),
    #[error("unsupported report format version {0}")]
    Version(u32),
    #[error("content hash mismatch: file says {stored}, content hashes to {actual}")]
    HashMismatch { stored: String, actual: String },
    #[error("step {step} is not in this run (0..={max})")]
    StepOutOfRange { step: usize, max: usize },
    #[error("mesh resolution must be at least {MIN_MESH_RES}, got {0}")]
    Resolution(usize),
    #[error("this operation needs a surface report")]
    NotSurface,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Tool identification; carries nothing that varies between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
}

impl Default for Metadata {
    fn default() -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Payload {
    Surface(Report),
    Curve(CurveReport),
}

/// On-disk report. The hash covers `payload` only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub format_version: u32,
    pub metadata: Metadata,
    pub content_hash: String,
    pub payload: Payload,
}

/// Hex SHA-256 of the compact JSON encoding of a payload.
pub fn content_hash(payload: &Payload) -> String {
    let bytes = serde_json::to_vec(payload).expect("payload serializes");
    hex::encode(Sha256::digest(&bytes))
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            metadata: Metadata::default(),
            content_hash: content_hash(&payload),
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Parses and checks the version and hash.
    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| ReportError::Malformed(e.to_string()))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(ReportError::Version(doc.format_version));
        }
        let actual = content_hash(&doc.payload);
        if actual != doc.content_hash {
            return Err(ReportError::HashMismatch {
                stored: doc.content_hash,
                actual,
            });
        }
        Ok(doc)
    }

    pub fn read(path: &Path) -> Result<Self, ReportError> {
        let text = fs::read_to_string(path).map_err(|source| ReportError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), ReportError> {
        write_atomic(path, self.to_json().as_bytes())
    }

    pub fn surface(&self) -> Result<&Report, ReportError> {
        match &self.payload {
            Payload::Surface(r) => Ok(r),
            Payload::Curve(_) => Err(ReportError::NotSurface),
        }
    }
}

/// Writes to a sibling temporary file, then renames over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), ReportError> {
    let io = |source| ReportError::Io {
        path: path.display().to_string(),
        source,
    };
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "report".into());
    let tmp = path.with_file_name(format!(".{name}.{}.tmp", std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io)
}

/// `x` rounded to six significant digits, printed without an exponent.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.5e}").parse().unwrap_or(x);
    let s = rounded.to_string();
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Csv,
    Text,
}

/// Header and rows of the summary table for a report.
pub fn table_rows(payload: &Payload) -> (Vec<String>, Vec<Vec<String>>) {
    let opt = |x: Option<f64>| x.map(sig6).unwrap_or_default();
    match payload {
        Payload::Surface(r) => {
            let with_ref = r.spec.entry.reference_area.is_some();
            let pct = if with_ref { "p_ij" } else { "q_ij" };
            let header = ["i", "A_i", pct, "nu_i/mu_i^2", "t_min"]
                .map(String::from)
                .to_vec();
            let rows = r
                .records
                .iter()
                .map(|rec| {
                    let p = if with_ref { rec.p_pct } else { rec.q_pct };
                    vec![
                        rec.n.to_string(),
                        sig6(rec.area),
                        opt(p),
                        opt(rec.ratio),
                        opt(rec.t_min),
                    ]
                })
                .collect();
            (header, rows)
        }
        Payload::Curve(c) => {
            let header = ["i", "l_i", "l_ij", "t_min"].map(String::from).to_vec();
            let rows = c
                .records
                .iter()
                .map(|rec| {
                    vec![
                        rec.n.to_string(),
                        sig6(rec.length),
                        opt(rec.length_pct),
                        opt(rec.t_min),
                    ]
                })
                .collect();
            (header, rows)
        }
    }
}

pub fn render_table(payload: &Payload, format: TableFormat) -> String {
    let (header, rows) = table_rows(payload);
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            for line in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = line.iter().map(|c| csv_field(c)).collect();
                out.push_str(&cells.join(","));
                out.push_str("\r\n");
            }
        }
        TableFormat::Text => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            for line in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                let _ = writeln!(out, "{}", cells.join("  ").trim_end());
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MeshFormat {
    #[default]
    Obj,
    Grid,
}

/// Samples `x_step` on an `res × res` grid that includes the domain edges.
///
/// OBJ output lists vertices row-major in `(u, v)` with quad faces; grid
/// output has one `u v x y z H K` line per sample.
pub fn export_mesh(
    report: &Report,
    step: usize,
    res: usize,
    format: MeshFormat,
) -> Result<String, ReportError> {
    if res < MIN_MESH_RES {
        return Err(ReportError::Resolution(res));
    }
    let max = report.spec.depth();
    if step > max {
        return Err(ReportError::StepOutOfRange { step, max });
    }
    let spec = report.spec.truncated(step);
    let d = spec.entry.domain;
    let at = |lo: f64, hi: f64, i: usize| {
        if i + 1 == res {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (res - 1) as f64
        }
    };
    let mut out = String::new();
    match format {
        MeshFormat::Obj => {
            let _ = writeln!(out, "# {} step {step}, {res}x{res}", spec.entry.name);
            for i in 0..res {
                for j in 0..res {
                    let p = engine::position(&spec, at(d.u0, d.u1, i), at(d.v0, d.v1, j))?;
                    let _ = writeln!(out, "v {} {} {}", p[0], p[1], p[2]);
                }
            }
            let id = |i: usize, j: usize| i * res + j + 1;
            for i in 0..res - 1 {
                for j in 0..res - 1 {
                    let _ = writeln!(
                        out,
                        "f {} {} {} {}",
                        id(i, j),
                        id(i + 1, j),
                        id(i + 1, j + 1),
                        id(i, j + 1)
                    );
                }
            }
        }
        MeshFormat::Grid => {
            out.push_str("# u v x y z H K\n");
            for i in 0..res {
                for j in 0..res {
                    let (u, v) = (at(d.u0, d.u1, i), at(d.v0, d.v1, j));
                    let jets = engine::evaluate_surface(&spec, u, v, 2)?;
                    let p = jets.0.clone().map(|c| *c.value());
                    let m = crate::geometry::fundamental_magnitudes(&jets)
                        .map_err(EngineError::from)?;
                    let _ = writeln!(
                        out,
                        "{u} {v} {} {} {} {} {}",
                        p[0],
                        p[1],
                        p[2],
                        m.mean_curvature_numerator(),
                        m.gaussian_curvature_numerator()
                    );
                }
            }
        }
    }
    Ok(out)
}
