//! C ABI over the transfinita evaluator.
//!
//! Contexts and values are opaque heap handles. Every fallible call returns a
//! [`TfStatus`]; on failure the message is kept per thread and can be fetched
//! with [`tf_last_error`]. Strings returned to the caller are owned by it and
//! must be released with [`tf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use transfinita::json::value_to_json;
use transfinita::surinteger::validate_lambda;
use transfinita::{print_canonical, ArithError, Error, Evaluator, Limits, Value};

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TfStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    Undefined = 4,
    NotRepresentable = 5,
    DivisionByZero = 6,
    NotDivisible = 7,
    NoWitness = 8,
    InvalidLambda = 9,
    OutOfField = 10,
    Inconclusive = 11,
    ResourceExceeded = 12,
    Unsupported = 13,
    OracleMismatch = 14,
    Panic = 15,
}

/// Evaluation settings and `:let`-style bindings.
pub struct TfContext {
    evaluator: Evaluator,
}

/// An evaluated value.
pub struct TfValue {
    value: Value,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn arith_status(e: &ArithError) -> TfStatus {
    match e {
        ArithError::Undefined(_) => TfStatus::Undefined,
        ArithError::NotRepresentable(_) => TfStatus::NotRepresentable,
        ArithError::DivisionByZero => TfStatus::DivisionByZero,
        ArithError::NotDivisible(_) => TfStatus::NotDivisible,
        ArithError::NoWitness(_) => TfStatus::NoWitness,
        ArithError::InvalidLambda(_) => TfStatus::InvalidLambda,
        ArithError::OutOfField(_) => TfStatus::OutOfField,
        ArithError::Inconclusive(_) => TfStatus::Inconclusive,
        ArithError::ResourceExceeded(_) => TfStatus::ResourceExceeded,
        ArithError::Unsupported(_) => TfStatus::Unsupported,
    }
}

fn error_status(e: &Error) -> TfStatus {
    match e {
        Error::Parse(_) => TfStatus::ParseError,
        Error::Eval(ev) => ev.arith().map_or(TfStatus::OracleMismatch, arith_status),
    }
}

/// Runs `f`, turning a panic into `TfStatus::Panic`.
fn guard(f: impl FnOnce() -> TfStatus) -> TfStatus {
    clear_error();
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        TfStatus::Panic
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TfStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(TfStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        TfStatus::InvalidUtf8
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Creates a context with default limits and `lambda = w^w`.
#[no_mangle]
pub extern "C" fn tf_context_new() -> *mut TfContext {
    Box::into_raw(Box::new(TfContext {
        evaluator: Evaluator::new(),
    }))
}

/// # Safety
/// `ctx` must come from [`tf_context_new`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tf_context_free(ctx: *mut TfContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Caps the bit length of natural coefficients produced during evaluation.
///
/// # Safety
/// `ctx` must be a live context or null.
#[no_mangle]
pub unsafe extern "C" fn tf_context_set_max_magnitude(ctx: *mut TfContext, bits: u64) -> TfStatus {
    guard(|| {
        let Some(ctx) = ctx.as_mut() else {
            set_error("null context");
            return TfStatus::NullArgument;
        };
        ctx.evaluator.limits = Limits {
            max_bits: bits,
            ..ctx.evaluator.limits
        };
        TfStatus::Ok
    })
}

/// Enables or disables cross-checking against the definitional oracle.
///
/// # Safety
/// `ctx` must be a live context or null.
#[no_mangle]
pub unsafe extern "C" fn tf_context_set_oracle(ctx: *mut TfContext, enabled: bool) -> TfStatus {
    guard(|| {
        let Some(ctx) = ctx.as_mut() else {
            set_error("null context");
            return TfStatus::NullArgument;
        };
        ctx.evaluator.oracle = enabled;
        TfStatus::Ok
    })
}

/// Sets the ambient `lambda` from an expression evaluating to a valid ordinal.
///
/// # Safety
/// `ctx` must be a live context or null; `expr` a NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn tf_context_set_lambda(
    ctx: *mut TfContext,
    expr: *const c_char,
) -> TfStatus {
    guard(|| {
        let Some(ctx) = ctx.as_mut() else {
            set_error("null context");
            return TfStatus::NullArgument;
        };
        let src = try_status!(read_str(expr));
        let v = match ctx.evaluator.eval_str(src) {
            Ok(v) => v,
            Err(e) => {
                set_error(e.to_string());
                return error_status(&e);
            }
        };
        let Some(lambda) = v.as_ordinal() else {
            set_error("lambda must be an ordinal");
            return TfStatus::InvalidLambda;
        };
        if let Err(e) = validate_lambda(&lambda) {
            set_error(e.to_string());
            return arith_status(&e);
        }
        ctx.evaluator.lambda = lambda;
        TfStatus::Ok
    })
}

/// Binds `name` to a copy of `value` for later expressions.
///
/// # Safety
/// `ctx` and `value` must be live handles or null; `name` a NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn tf_context_bind(
    ctx: *mut TfContext,
    name: *const c_char,
    value: *const TfValue,
) -> TfStatus {
    guard(|| {
        let (Some(ctx), Some(value)) = (ctx.as_mut(), value.as_ref()) else {
            set_error("null argument");
            return TfStatus::NullArgument;
        };
        let name = try_status!(read_str(name));
        ctx.evaluator
            .bindings
            .insert(name.to_string(), value.value.clone());
        TfStatus::Ok
    })
}

/// Parses and evaluates `expr`. On success `*out` receives a new value handle.
///
/// # Safety
/// `ctx` must be a live context, `expr` a NUL-terminated string and `out` a
/// writable pointer; any of them may be null, which yields `NullArgument`.
#[no_mangle]
pub unsafe extern "C" fn tf_eval(
    ctx: *const TfContext,
    expr: *const c_char,
    out: *mut *mut TfValue,
) -> TfStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return TfStatus::NullArgument;
        }
        *out = ptr::null_mut();
        let Some(ctx) = ctx.as_ref() else {
            set_error("null context");
            return TfStatus::NullArgument;
        };
        let src = try_status!(read_str(expr));
        match ctx.evaluator.eval_str(src) {
            Ok(value) => {
                *out = Box::into_raw(Box::new(TfValue { value }));
                TfStatus::Ok
            }
            Err(e) => {
                let (line, column) = e.position(src);
                set_error(format!("{line}:{column}: {e}"));
                error_status(&e)
            }
        }
    })
}

/// # Safety
/// `value` must come from [`tf_eval`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tf_value_free(value: *mut TfValue) {
    if !value.is_null() {
        drop(Box::from_raw(value));
    }
}

/// Canonical text of a value, parseable back to an equal value. Null on a null handle.
///
/// # Safety
/// `value` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tf_value_canonical(value: *const TfValue) -> *mut c_char {
    match value.as_ref() {
        Some(v) => into_c_string(print_canonical(&v.value)),
        None => ptr::null_mut(),
    }
}

/// JSON document for a value (schema "1"). Null on a null handle.
///
/// # Safety
/// `value` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tf_value_json(value: *const TfValue) -> *mut c_char {
    match value.as_ref() {
        Some(v) => into_c_string(value_to_json(&v.value).to_string()),
        None => ptr::null_mut(),
    }
}

/// Type name of a value, such as "Ordinal" or "SurRational". Null on a null handle.
///
/// # Safety
/// `value` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tf_value_type(value: *const TfValue) -> *mut c_char {
    match value.as_ref() {
        Some(v) => into_c_string(v.value.type_name().to_string()),
        None => ptr::null_mut(),
    }
}

/// Equality up to the identifications between number levels; false if either handle is null.
///
/// # Safety
/// Both handles must be live or null.
#[no_mangle]
pub unsafe extern "C" fn tf_value_equal(a: *const TfValue, b: *const TfValue) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.value == b.value,
        _ => false,
    }
}

/// Message of the most recent failure on this thread, or null if the last call succeeded.
#[no_mangle]
pub extern "C" fn tf_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must come from one of this library's string-returning functions. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
