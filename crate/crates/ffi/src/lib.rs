//! C ABI over `ratrig`.
//!
//! Every call returns a [`RatrigStatus`]. Results come back as NUL-terminated
//! JSON (or scalar) strings through an out-parameter and must be released
//! with [`ratrig_string_free`]. On `RATRIG_STATUS_LAW_FAILED` the report is
//! still written. On any other non-OK status nothing is written and
//! [`ratrig_last_error`] describes the failure on the calling thread.
//!
//! Input strings use the same JSON encodings as the command line: vectors
//! are arrays of three scalar strings, forms are `euclidean`, `minkowski`
//! or a 3×3 array of scalar strings.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ratrig::affine::{analyze_triangle, spread, VectorTriangle};
use ratrig::codec::{
    parse_form, parse_vec, parse_vecs, to_json, TriangleReportJson, TripodReportJson,
};
use ratrig::error::Error;
use ratrig::examples::{self, ExampleName};
use ratrig::field::FieldSpec;
use ratrig::metric::{b_quadrance, BilinearForm};
use ratrig::projective::{analyze_tripod, Tripod};
use ratrig::verify::{self, Mode};

/// Status codes; the first four match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatrigStatus {
    Ok = 0,
    /// A law check failed or a pinned value deviated; the report is still returned.
    LawFailed = 1,
    /// Malformed input or configuration.
    InvalidInput = 2,
    /// Degenerate geometric input (null vector, dependent points, singular form, ...).
    DegenerateInput = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// A panic or other unexpected failure inside the library.
    Internal = 5,
}

/// A field together with a bilinear form over it.
pub struct RatrigContext {
    form: BilinearForm,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Failure {
    Lib(Error),
    NullPointer(&'static str),
    Utf8(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Output text plus whether a law check failed.
type Output = (String, bool);

unsafe fn arg<'a>(p: *const c_char, name: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::NullPointer(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8(name))
}

unsafe fn opt_arg<'a>(p: *const c_char, name: &'static str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        arg(p, name).map(Some)
    }
}

unsafe fn context<'a>(ctx: *const RatrigContext) -> Result<&'a RatrigContext, Failure> {
    ctx.as_ref().ok_or(Failure::NullPointer("ctx"))
}

/// Runs `f`, writes its output to `out` and maps failures to a status.
unsafe fn guard(
    out: *mut *mut c_char,
    f: impl FnOnce() -> Result<Output, Failure>,
) -> RatrigStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    if out.is_null() {
        set_last_error("out is null".into());
        return RatrigStatus::NullPointer;
    }
    *out = ptr::null_mut();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok((text, failed))) => match CString::new(text) {
            Ok(c) => {
                *out = c.into_raw();
                if failed {
                    set_last_error("a law check failed".into());
                    RatrigStatus::LawFailed
                } else {
                    RatrigStatus::Ok
                }
            }
            Err(_) => {
                set_last_error("output contained a NUL byte".into());
                RatrigStatus::Internal
            }
        },
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            if e.is_degenerate_input() {
                RatrigStatus::DegenerateInput
            } else {
                RatrigStatus::InvalidInput
            }
        }
        Ok(Err(Failure::NullPointer(name))) => {
            set_last_error(format!("{name} is null"));
            RatrigStatus::NullPointer
        }
        Ok(Err(Failure::Utf8(name))) => {
            set_last_error(format!("{name} is not valid UTF-8"));
            RatrigStatus::InvalidInput
        }
        Err(_) => {
            set_last_error("internal panic".into());
            RatrigStatus::Internal
        }
    }
}

/// Creates a context from a field (`rational` or `prime:<p>`) and a form.
/// Release it with [`ratrig_context_free`].
///
/// # Safety
/// `field` and `form` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ratrig_context_new(
    field: *const c_char,
    form: *const c_char,
    out: *mut *mut RatrigContext,
) -> RatrigStatus {
    let mut text: *mut c_char = ptr::null_mut();
    let mut made: Option<RatrigContext> = None;
    if out.is_null() {
        set_last_error("out is null".into());
        return RatrigStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let status = guard(&mut text, || {
        let spec: FieldSpec = arg(field, "field")?.parse()?;
        let form = parse_form(spec, arg(form, "form")?)?;
        made = Some(RatrigContext { form });
        Ok((String::new(), false))
    });
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
    if let Some(ctx) = made {
        *out = Box::into_raw(Box::new(ctx));
    }
    status
}

/// # Safety
/// `ctx` must come from [`ratrig_context_new`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ratrig_context_free(ctx: *mut RatrigContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Triangle report for `v1`, `v2` and `v3`; a null `v3` means `-v1 - v2`.
///
/// # Safety
/// Pointer arguments must be valid; `v3` may be null.
#[no_mangle]
pub unsafe extern "C" fn ratrig_triangle(
    ctx: *const RatrigContext,
    v1: *const c_char,
    v2: *const c_char,
    v3: *const c_char,
    out_json: *mut *mut c_char,
) -> RatrigStatus {
    guard(out_json, || {
        let b = &context(ctx)?.form;
        let spec = b.spec();
        let (v1, v2) = (
            parse_vec(spec, arg(v1, "v1")?)?,
            parse_vec(spec, arg(v2, "v2")?)?,
        );
        let t = match opt_arg(v3, "v3")? {
            Some(v3) => VectorTriangle::new(v1, v2, parse_vec(spec, v3)?)?,
            None => VectorTriangle::from_two(v1, v2)?,
        };
        let r = analyze_triangle(b, &t)?;
        Ok((to_json(&TriangleReportJson::new(b, &t, &r)), r.any_failed()))
    })
}

/// Tripod report for a JSON array of three representatives.
///
/// # Safety
/// Pointer arguments must be valid.
#[no_mangle]
pub unsafe extern "C" fn ratrig_tripod(
    ctx: *const RatrigContext,
    points: *const c_char,
    out_json: *mut *mut c_char,
) -> RatrigStatus {
    guard(out_json, || {
        let b = &context(ctx)?.form;
        let [p1, p2, p3] = parse_vecs(b.spec(), arg(points, "points")?)?;
        let t = Tripod::from_vectors(&p1, &p2, &p3)?;
        let r = analyze_tripod(b, &t)?;
        Ok((to_json(&TripodReportJson::new(b, &t, &r)), r.any_failed()))
    })
}

/// The quadrance of a vector, as a scalar string.
///
/// # Safety
/// Pointer arguments must be valid.
#[no_mangle]
pub unsafe extern "C" fn ratrig_quadrance(
    ctx: *const RatrigContext,
    v: *const c_char,
    out_scalar: *mut *mut c_char,
) -> RatrigStatus {
    guard(out_scalar, || {
        let b = &context(ctx)?.form;
        let v = parse_vec(b.spec(), arg(v, "v")?)?;
        Ok((b_quadrance(b, &v)?.to_string(), false))
    })
}

/// The spread between two vectors, as a scalar string.
///
/// # Safety
/// Pointer arguments must be valid.
#[no_mangle]
pub unsafe extern "C" fn ratrig_spread(
    ctx: *const RatrigContext,
    v: *const c_char,
    w: *const c_char,
    out_scalar: *mut *mut c_char,
) -> RatrigStatus {
    guard(out_scalar, || {
        let b = &context(ctx)?.form;
        let spec = b.spec();
        let (v, w) = (
            parse_vec(spec, arg(v, "v")?)?,
            parse_vec(spec, arg(w, "w")?)?,
        );
        Ok((spread(b, &v, &w)?.to_string(), false))
    })
}

/// Random identity sweep; the summary is JSON. `RATRIG_STATUS_LAW_FAILED`
/// if any identity failed.
///
/// # Safety
/// Pointer arguments must be valid.
#[no_mangle]
pub unsafe extern "C" fn ratrig_verify(
    ctx: *const RatrigContext,
    seed: u64,
    cases: u64,
    out_json: *mut *mut c_char,
) -> RatrigStatus {
    guard(out_json, || {
        let s = verify::run(&context(ctx)?.form, Mode::Random { seed, cases })?;
        Ok((to_json(&s), s.failures > 0))
    })
}

/// Exhaustive identity sweep; the context field must be `prime:<prime>`.
///
/// # Safety
/// Pointer arguments must be valid.
#[no_mangle]
pub unsafe extern "C" fn ratrig_verify_exhaustive(
    ctx: *const RatrigContext,
    prime: u64,
    out_json: *mut *mut c_char,
) -> RatrigStatus {
    guard(out_json, || {
        let s = verify::run(&context(ctx)?.form, Mode::Exhaustive { prime })?;
        Ok((to_json(&s), s.failures > 0))
    })
}

/// Replays a worked example. `q` is the methane edge quadrance and may be null.
///
/// # Safety
/// `name` must be valid; `q` may be null.
#[no_mangle]
pub unsafe extern "C" fn ratrig_example(
    name: *const c_char,
    q: *const c_char,
    out_json: *mut *mut c_char,
) -> RatrigStatus {
    guard(out_json, || {
        let name: ExampleName = arg(name, "name")?.parse()?;
        let q = opt_arg(q, "q")?
            .map(|s| FieldSpec::rational().parse(s))
            .transpose()?;
        let out = examples::run(name, q.as_ref())?;
        Ok((to_json(&out), out.any_failed()))
    })
}

/// The last error message on this thread, or null. Release with [`ratrig_string_free`].
#[no_mangle]
pub extern "C" fn ratrig_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ratrig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn ratrig_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
