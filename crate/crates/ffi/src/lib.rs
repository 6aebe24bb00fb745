//! C ABI over `b3rep`.
//!
//! Every function returns a [`B3Status`]; on failure a message is available
//! from [`b3rep_last_error`] until the next call on the same thread.
//! Handles and strings returned through out-pointers are owned by the
//! caller and released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use b3rep::algebra::{parse_scalar, Backend};
use b3rep::classify::{classify, ClassificationReport, ClassifyOptions};
use b3rep::error::RepError;
use b3rep::rep::{build_rep, parse_modulus, rep_from_json, rep_to_json, verify_braid, Rep, RepSpec};
use b3rep::tensor_dims::{verify_series, Series};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum B3Status {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed scalar, JSON, or unknown option.
    Parse = 3,
    /// The parameters violate a constraint of the construction.
    Constraint = 4,
    /// Unsupported dimension or family.
    Unsupported = 5,
    /// Internal error, including a caught panic.
    Internal = 6,
}

/// Opaque representation handle.
pub struct B3Rep(Rep);

/// Opaque classification report handle.
pub struct B3Report(ClassificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &RepError) -> B3Status {
    match e {
        RepError::Algebra(b3rep::error::AlgebraError::Parse { .. }) | RepError::Json(_) => B3Status::Parse,
        RepError::Constraint(_) | RepError::ZeroEigenvalue(_) | RepError::BraidRelationFails | RepError::IndexOutOfRange { .. } => {
            B3Status::Constraint
        }
        RepError::Unsupported(_) => B3Status::Unsupported,
        RepError::Internal(_) => B3Status::Internal,
        RepError::Algebra(_) => B3Status::Constraint,
    }
}

struct Failure(B3Status, String);

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> B3Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => B3Status::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside b3rep");
            B3Status::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(B3Status::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(B3Status::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, name: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, name).map(Some)
    }
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(B3Status::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s).map(CString::into_raw).map_err(|_| Failure(B3Status::Internal, "string contained NUL".into()))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn b3rep_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a classified representation.
///
/// `eigs` holds `n_eigs` scalar strings (`dim`, or `dim − 1` for `dim = 4, 5`
/// when `root` is given). `root` is `D` for `dim = 4`, `γ` for `dim = 5` and
/// must be null otherwise. With a non-null `modulus` (e.g. `"z^2-z+1"`) the
/// scalars live in `Q[z]/(modulus)`, otherwise in `Q`.
///
/// # Safety
/// `eigs` must point to `n_eigs` valid C strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn b3rep_rep_build(
    dim: usize,
    eigs: *const *const c_char,
    n_eigs: usize,
    root: *const c_char,
    modulus: *const c_char,
    out: *mut *mut B3Rep,
) -> B3Status {
    guard(|| {
        check_out(out)?;
        if eigs.is_null() && n_eigs > 0 {
            return Err(Failure(B3Status::NullPointer, "eigs is null".into()));
        }
        let backend = match opt_str_arg(modulus, "modulus")? {
            Some(m) => Backend::Extension(parse_modulus("z", m)?),
            None => Backend::Rational,
        };
        let parse = |s: &str| parse_scalar(s, &backend).map_err(RepError::from);
        let mut values = Vec::with_capacity(n_eigs);
        for i in 0..n_eigs {
            values.push(parse(str_arg(*eigs.add(i), "eigenvalue")?)?);
        }
        let root = opt_str_arg(root, "root")?.map(parse).transpose()?;
        let spec = match root {
            Some(r) if n_eigs + 1 == dim => RepSpec::classified_derived(values, r)?,
            root if n_eigs == dim => RepSpec::classified(values, root)?,
            _ => return Err(Failure(B3Status::Constraint, format!("dim={dim} does not match {n_eigs} eigenvalues"))),
        };
        *out = Box::into_raw(Box::new(B3Rep(build_rep(&spec)?)));
        Ok(())
    })
}

/// Builds the representation with free symbolic parameters.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn b3rep_rep_build_symbolic(dim: usize, out: *mut *mut B3Rep) -> B3Status {
    guard(|| {
        check_out(out)?;
        *out = Box::into_raw(Box::new(B3Rep(build_rep(&RepSpec::generic(dim)?)?)));
        Ok(())
    })
}

/// Parses representation JSON as produced by [`b3rep_rep_to_json`].
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn b3rep_rep_from_json(json: *const c_char, out: *mut *mut B3Rep) -> B3Status {
    guard(|| {
        check_out(out)?;
        let rep = rep_from_json(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(B3Rep(rep)));
        Ok(())
    })
}

/// # Safety
/// `rep` must be a live handle; `out` must be writable. Free the string
/// with [`b3rep_string_free`].
#[no_mangle]
pub unsafe extern "C" fn b3rep_rep_to_json(rep: *const B3Rep, out: *mut *mut c_char) -> B3Status {
    guard(|| {
        check_out(out)?;
        let rep = rep.as_ref().ok_or_else(|| Failure(B3Status::NullPointer, "rep is null".into()))?;
        *out = to_c_string(rep_to_json(&rep.0))?;
        Ok(())
    })
}

/// Matrix size of the representation, or 0 for a null handle.
///
/// # Safety
/// `rep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn b3rep_rep_dim(rep: *const B3Rep) -> usize {
    rep.as_ref().map_or(0, |r| r.0.dim())
}

/// Writes whether `ABA = BAB` holds exactly.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn b3rep_rep_verify_braid(rep: *const B3Rep, out: *mut bool) -> B3Status {
    guard(|| {
        check_out(out)?;
        let rep = rep.as_ref().ok_or_else(|| Failure(B3Status::NullPointer, "rep is null".into()))?;
        *out = verify_braid(&rep.0);
        Ok(())
    })
}

/// # Safety
/// `rep` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn b3rep_rep_free(rep: *mut B3Rep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Classifies the representation; `burnside` also runs the span oracle.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn b3rep_classify(rep: *const B3Rep, burnside: bool, out: *mut *mut B3Report) -> B3Status {
    guard(|| {
        check_out(out)?;
        let rep = rep.as_ref().ok_or_else(|| Failure(B3Status::NullPointer, "rep is null".into()))?;
        let opts = ClassifyOptions { burnside, westbury_sixth_root: None };
        *out = Box::into_raw(Box::new(B3Report(classify(&rep.0.spec, &opts)?)));
        Ok(())
    })
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn b3rep_report_is_simple(report: *const B3Report, out: *mut bool) -> B3Status {
    guard(|| {
        check_out(out)?;
        let r = report.as_ref().ok_or_else(|| Failure(B3Status::NullPointer, "report is null".into()))?;
        *out = r.0.simple;
        Ok(())
    })
}

/// # Safety
/// `report` must be a live handle; `out` must be writable. Free the string
/// with [`b3rep_string_free`].
#[no_mangle]
pub unsafe extern "C" fn b3rep_report_to_json(report: *const B3Report, out: *mut *mut c_char) -> B3Status {
    guard(|| {
        check_out(out)?;
        let r = report.as_ref().ok_or_else(|| Failure(B3Status::NullPointer, "report is null".into()))?;
        *out = to_c_string(r.0.to_json())?;
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn b3rep_report_free(report: *mut B3Report) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Runs the dimension comparison for `"bcd"` or `"exceptional"`, writing the
/// JSON report and whether every comparison succeeded.
///
/// # Safety
/// `series` must be a valid C string; `json_out` and `all_equal` writable.
#[no_mangle]
pub unsafe extern "C" fn b3rep_dims(series: *const c_char, json_out: *mut *mut c_char, all_equal: *mut bool) -> B3Status {
    guard(|| {
        check_out(json_out)?;
        check_out(all_equal)?;
        let name = str_arg(series, "series")?;
        let s = Series::parse(name).ok_or_else(|| Failure(B3Status::Parse, format!("unknown series `{name}`")))?;
        let report = verify_series(s)?;
        *all_equal = report.all_equal();
        *json_out = to_c_string(report.to_json())?;
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn b3rep_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
