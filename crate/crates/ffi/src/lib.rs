//! C ABI over `minsurf`.
//!
//! Objects cross the boundary as opaque handles (`MsSurface`, `MsReport`,
//! `MsCurve`) that the caller releases with the matching `*_free`. Every
//! fallible call returns an `MsStatus`; the message for the most recent
//! failure on the calling thread is available from `ms_last_error_message`.
//! Panics never unwind into C: they are caught and reported as
//! `MS_STATUS_PANIC`.
//!
//! Optional quantities in `MsRecord` and `MsCurveRecord` are NaN when absent.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use minsurf::catalog::{self, CatalogError, HMode, Params};
use minsurf::curve::{self, CurveFunctional, CurvePoly, CurveReport};
use minsurf::engine::{self, EngineError, Report, RunSettings, SurfaceSpec};
use minsurf::polyopt::Bracket;
use minsurf::report::{Document, Payload, ReportError};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A numeric or enum argument is out of range.
    InvalidArgument = 3,
    /// The surface name is not in the catalog.
    UnknownSurface = 4,
    /// The engine failed before producing any result.
    Engine = 5,
    /// A run stopped early; the handle holds the steps that succeeded.
    Partial = 6,
    /// JSON input could not be parsed or failed its integrity check.
    Malformed = 7,
    /// An index is past the end of the run.
    OutOfRange = 8,
    /// The output buffer is too small; the required length was stored.
    BufferTooSmall = 9,
    Panic = 10,
}

/// Mean-curvature factor used by the first layer(s) of a run.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsHMode {
    TrueH = 0,
    UnitHFirstStep = 1,
    UnitHEveryStep = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsCurveFunctional {
    Slope = 0,
    Curvature = 1,
}

/// A surface description: catalog entry plus any variational layers.
pub struct MsSurface {
    spec: SurfaceSpec,
}

/// Result of a surface run.
pub struct MsReport {
    report: Report,
}

/// Result of a curve run.
pub struct MsCurve {
    report: CurveReport,
}

/// One row of a surface run.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct MsRecord {
    pub n: usize,
    pub t_min: f64,
    pub mu_sq_min: f64,
    pub nu: f64,
    pub area: f64,
    pub ratio: f64,
    pub p_pct: f64,
    pub p_total_pct: f64,
    pub q_pct: f64,
    pub q_total_pct: f64,
    pub mu_rms_decrease_pct: f64,
}

/// One row of a curve run.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct MsCurveRecord {
    pub n: usize,
    pub t_min: f64,
    pub length: f64,
    pub length_pct: f64,
    pub length_total_pct: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(MsStatus, String);

impl Failure {
    fn new(status: MsStatus, msg: impl Into<String>) -> Self {
        Self(status, msg.into())
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        let status = match e {
            CatalogError::UnknownSurface(_) => MsStatus::UnknownSurface,
            CatalogError::Json(_) => MsStatus::Malformed,
            _ => MsStatus::InvalidArgument,
        };
        Self(status, e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let status = match e {
            EngineError::NoSteps | EngineError::QuadOrder(_) | EngineError::OutsideDomain { .. } => {
                MsStatus::InvalidArgument
            }
            EngineError::NoSuchLayer { .. } => MsStatus::OutOfRange,
            _ => MsStatus::Engine,
        };
        Self(status, e.to_string())
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        let status = match e {
            ReportError::Engine(_) => MsStatus::Engine,
            ReportError::StepOutOfRange { .. } => MsStatus::OutOfRange,
            _ => MsStatus::Malformed,
        };
        Self(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, recording its error message and converting panics.
fn guard(f: impl FnOnce() -> Result<MsStatus, Failure>) -> MsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("internal panic: {msg}"));
            MsStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(MsStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(MsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(MsStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn mut_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure::new(MsStatus::NullPointer, format!("{what} is NULL")))
}

fn opt(x: Option<f64>) -> f64 {
    x.unwrap_or(f64::NAN)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ms_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the last error message of this thread into `buf`.
///
/// Returns the message length excluding the terminator. At most `len - 1`
/// bytes are copied and the result is always NUL-terminated when `len > 0`.
///
/// # Safety
/// `buf` must be NULL or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ms_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a pointer returned by a `*_to_json` function, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ms_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a catalog surface. `keys` and `values` hold `n_params` parameters.
///
/// # Safety
/// `name` must be a NUL-terminated string; `keys` and `values` must point to
/// `n_params` elements (or may be NULL when `n_params` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ms_surface_new(
    name: *const c_char,
    keys: *const *const c_char,
    values: *const f64,
    n_params: usize,
    out: *mut *mut MsSurface,
) -> MsStatus {
    guard(|| {
        let out = mut_arg(out, "out")?;
        *out = ptr::null_mut();
        let name = str_arg(name, "name")?;
        let mut params = Params::new();
        if n_params > 0 {
            if keys.is_null() || values.is_null() {
                return Err(Failure::new(MsStatus::NullPointer, "parameter arrays are NULL"));
            }
            for i in 0..n_params {
                let k = str_arg(*keys.add(i), "parameter name")?;
                params.insert(k.to_string(), *values.add(i));
            }
        }
        let entry = catalog::get_entry(name, &params)?;
        *out = Box::into_raw(Box::new(MsSurface {
            spec: SurfaceSpec::new(entry),
        }));
        Ok(MsStatus::Ok)
    })
}

/// Creates a surface from a custom-surface JSON description.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ms_surface_from_json(
    json: *const c_char,
    out: *mut *mut MsSurface,
) -> MsStatus {
    guard(|| {
        let out = mut_arg(out, "out")?;
        *out = ptr::null_mut();
        let entry = catalog::load_custom(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(MsSurface {
            spec: SurfaceSpec::new(entry),
        }));
        Ok(MsStatus::Ok)
    })
}

/// # Safety
/// `s` must be a live surface handle.
#[no_mangle]
pub unsafe extern "C" fn ms_surface_set_h_mode(s: *mut MsSurface, mode: MsHMode) -> MsStatus {
    guard(|| {
        let s = mut_arg(s, "surface")?;
        s.spec.entry.h_mode = match mode {
            MsHMode::TrueH => HMode::TrueH,
            MsHMode::UnitHFirstStep => HMode::UnitHFirstStep,
            MsHMode::UnitHEveryStep => HMode::UnitHEveryStep,
        };
        Ok(MsStatus::Ok)
    })
}

/// Sets the reference minimal area; a NaN clears it.
///
/// # Safety
/// `s` must be a live surface handle.
#[no_mangle]
pub unsafe extern "C" fn ms_surface_set_reference_area(s: *mut MsSurface, area: f64) -> MsStatus {
    guard(|| {
        let s = mut_arg(s, "surface")?;
        if area.is_nan() {
            s.spec.entry.reference_area = None;
        } else if area.is_finite() && area > 0.0 {
            s.spec.entry.reference_area = Some(area);
        } else {
            return Err(Failure::new(
                MsStatus::InvalidArgument,
                format!("reference area must be positive, got {area}"),
            ));
        }
        Ok(MsStatus::Ok)
    })
}

/// Writes the point `x(u, v)` to `out[0..3]`.
///
/// # Safety
/// `s` must be a live surface handle and `out` must point to 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn ms_surface_position(
    s: *const MsSurface,
    u: f64,
    v: f64,
    out: *mut f64,
) -> MsStatus {
    guard(|| {
        let s = ref_arg(s, "surface")?;
        if out.is_null() {
            return Err(Failure::new(MsStatus::NullPointer, "out is NULL"));
        }
        let p = engine::position(&s.spec, u, v)?;
        ptr::copy_nonoverlapping(p.as_ptr(), out, 3);
        Ok(MsStatus::Ok)
    })
}

/// # Safety
/// `s` must be NULL or a surface handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ms_surface_free(s: *mut MsSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Iterates `steps` times from the surface.
///
/// `quad_order` 0 selects the default. A bracket with `t_lo >= t_hi` or a NaN
/// bound selects the default `[-1, 1]`. On `MS_STATUS_PARTIAL` the handle
/// is still stored in `out` and holds the completed steps.
///
/// # Safety
/// `s` must be a live surface handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ms_run(
    s: *const MsSurface,
    steps: usize,
    quad_order: usize,
    t_lo: f64,
    t_hi: f64,
    out: *mut *mut MsReport,
) -> MsStatus {
    guard(|| {
        let out = mut_arg(out, "out")?;
        *out = ptr::null_mut();
        let s = ref_arg(s, "surface")?;
        let bracket = if t_lo < t_hi {
            Bracket::new(t_lo, t_hi).map_err(|e| Failure::new(MsStatus::InvalidArgument, e.to_string()))?
        } else {
            Bracket::default()
        };
        let settings = RunSettings {
            quad_order: if quad_order == 0 {
                engine::DEFAULT_QUAD_ORDER
            } else {
                quad_order
            },
            bracket,
        };
        let report = engine::iterate(s.spec.clone(), steps, settings)?;
        Ok(store_report(report, out))
    })
}

fn store_report(report: Report, out: &mut *mut MsReport) -> MsStatus {
    let partial = report.error.clone();
    *out = Box::into_raw(Box::new(MsReport { report }));
    match partial {
        Some(msg) => {
            set_last_error(&msg);
            MsStatus::Partial
        }
        None => MsStatus::Ok,
    }
}

/// Appends `steps` more steps to a finished run.
///
/// # Safety
/// `r` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn ms_report_continue(r: *mut MsReport, steps: usize) -> MsStatus {
    guard(|| {
        let r = mut_arg(r, "report")?;
        if r.report.error.is_some() {
            return Err(Failure::new(
                MsStatus::InvalidArgument,
                "cannot continue a run that stopped with an error",
            ));
        }
        engine::continue_run(&mut r.report, steps)?;
        match &r.report.error {
            Some(msg) => Err(Failure::new(MsStatus::Partial, msg.clone())),
            None => Ok(MsStatus::Ok),
        }
    })
}

/// Number of records, including the initial surface. Returns 0 for NULL.
///
/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn ms_report_record_count(r: *const MsReport) -> usize {
    r.as_ref().map_or(0, |r| r.report.records.len())
}

/// # Safety
/// `r` must be a live report handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ms_report_record(
    r: *const MsReport,
    index: usize,
    out: *mut MsRecord,
) -> MsStatus {
    guard(|| {
        let r = ref_arg(r, "report")?;
        let out = mut_arg(out, "out")?;
        let rec = r.report.records.get(index).ok_or_else(|| {
            Failure::new(
                MsStatus::OutOfRange,
                format!("record {index} of {}", r.report.records.len()),
            )
        })?;
        *out = MsRecord {
            n: rec.n,
            t_min: opt(rec.t_min),
            mu_sq_min: rec.mu_sq_min,
            nu: rec.nu,
            area: rec.area,
            ratio: opt(rec.ratio),
            p_pct: opt(rec.p_pct),
            p_total_pct: opt(rec.p_total_pct),
            q_pct: opt(rec.q_pct),
            q_total_pct: opt(rec.q_total_pct),
            mu_rms_decrease_pct: opt(rec.mu_rms_decrease_pct),
        };
        Ok(MsStatus::Ok)
    })
}

/// Copies the `t`-coefficients of record `index`'s mean-square polynomial.
///
/// `*len` receives the coefficient count. When `cap` is smaller, nothing is
/// copied and `MS_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `r` must be a live report handle, `coeffs` must point to `cap` writable
/// doubles (or be NULL when `cap` is 0) and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ms_report_mu_sq_coeffs(
    r: *const MsReport,
    index: usize,
    coeffs: *mut f64,
    cap: usize,
    len: *mut usize,
) -> MsStatus {
    guard(|| {
        let r = ref_arg(r, "report")?;
        let len = mut_arg(len, "len")?;
        let rec = r.report.records.get(index).ok_or_else(|| {
            Failure::new(MsStatus::OutOfRange, format!("record {index} of {}", r.report.records.len()))
        })?;
        let c = rec.mu_sq.coeffs();
        *len = c.len();
        if cap < c.len() {
            return Ok(MsStatus::BufferTooSmall);
        }
        if !c.is_empty() {
            if coeffs.is_null() {
                return Err(Failure::new(MsStatus::NullPointer, "coeffs is NULL"));
            }
            ptr::copy_nonoverlapping(c.as_ptr(), coeffs, c.len());
        }
        Ok(MsStatus::Ok)
    })
}

/// Writes the point `x_step(u, v)` of a run to `out[0..3]`.
///
/// # Safety
/// `r` must be a live report handle and `out` must point to 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn ms_report_position(
    r: *const MsReport,
    step: usize,
    u: f64,
    v: f64,
    out: *mut f64,
) -> MsStatus {
    guard(|| {
        let r = ref_arg(r, "report")?;
        if out.is_null() {
            return Err(Failure::new(MsStatus::NullPointer, "out is NULL"));
        }
        let depth = r.report.spec.depth();
        if step > depth {
            return Err(Failure::new(
                MsStatus::OutOfRange,
                format!("step {step} is not in this run (0..={depth})"),
            ));
        }
        let p = engine::position(&r.report.spec.truncated(step), u, v)?;
        ptr::copy_nonoverlapping(p.as_ptr(), out, 3);
        Ok(MsStatus::Ok)
    })
}

/// Serializes the run as a report document. Free with `ms_string_free`.
/// Returns NULL for a NULL handle.
///
/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn ms_report_to_json(r: *const MsReport) -> *mut c_char {
    match r.as_ref() {
        Some(r) => into_c_string(Document::new(Payload::Surface(r.report.clone())).to_json()),
        None => ptr::null_mut(),
    }
}

/// Loads a surface report document, checking its version and hash.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ms_report_from_json(json: *const c_char, out: *mut *mut MsReport) -> MsStatus {
    guard(|| {
        let out = mut_arg(out, "out")?;
        *out = ptr::null_mut();
        let doc = Document::from_json(str_arg(json, "json")?)?;
        let report = doc.surface()?.clone();
        *out = Box::into_raw(Box::new(MsReport { report }));
        Ok(MsStatus::Ok)
    })
}

/// # Safety
/// `r` must be NULL or a report handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ms_report_free(r: *mut MsReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Runs the curve analogue from `u - u^8`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ms_curve_run(
    steps: usize,
    functional: MsCurveFunctional,
    out: *mut *mut MsCurve,
) -> MsStatus {
    guard(|| {
        let out = mut_arg(out, "out")?;
        *out = ptr::null_mut();
        if steps == 0 {
            return Err(Failure::new(MsStatus::InvalidArgument, "steps must be at least 1"));
        }
        let functional = match functional {
            MsCurveFunctional::Slope => CurveFunctional::SlopeSquared,
            MsCurveFunctional::Curvature => CurveFunctional::CurvatureSquared,
        };
        let report = curve::curve_iterate(&CurvePoly::chi0(), steps, functional)
            .map_err(|e| Failure::new(MsStatus::Engine, e.to_string()))?;
        *out = Box::into_raw(Box::new(MsCurve { report }));
        Ok(MsStatus::Ok)
    })
}

/// # Safety
/// `c` must be NULL or a live curve handle.
#[no_mangle]
pub unsafe extern "C" fn ms_curve_record_count(c: *const MsCurve) -> usize {
    c.as_ref().map_or(0, |c| c.report.records.len())
}

/// # Safety
/// `c` must be a live curve handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ms_curve_record(
    c: *const MsCurve,
    index: usize,
    out: *mut MsCurveRecord,
) -> MsStatus {
    guard(|| {
        let c = ref_arg(c, "curve")?;
        let out = mut_arg(out, "out")?;
        let rec = c.report.records.get(index).ok_or_else(|| {
            Failure::new(MsStatus::OutOfRange, format!("record {index} of {}", c.report.records.len()))
        })?;
        *out = MsCurveRecord {
            n: rec.n,
            t_min: opt(rec.t_min),
            length: rec.length,
            length_pct: opt(rec.length_pct),
            length_total_pct: opt(rec.length_total_pct),
        };
        Ok(MsStatus::Ok)
    })
}

/// Serializes the curve run as a report document. Free with `ms_string_free`.
///
/// # Safety
/// `c` must be NULL or a live curve handle.
#[no_mangle]
pub unsafe extern "C" fn ms_curve_to_json(c: *const MsCurve) -> *mut c_char {
    match c.as_ref() {
        Some(c) => into_c_string(Document::new(Payload::Curve(c.report.clone())).to_json()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `c` must be NULL or a curve handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ms_curve_free(c: *mut MsCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
