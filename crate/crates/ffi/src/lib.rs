//! C interface. A context is parsed once from a JSON document and its
//! classes are addressed by name. Every call returns a status code; on
//! failure the message is kept per thread for `pnrd_last_error_message`.
//! Strings returned through out-parameters are owned by the caller and
//! released with `pnrd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::{json, Value};

use pnrd_core::cli::input::{parse_class, parse_document, parse_json, Document, Located};
use pnrd_core::exactmath::{format_rational, RationalPolynomial};
use pnrd_core::regularity::{reg_cont, reg_cont_bundle};
use pnrd_core::riemannroch::{euler_char, index, pnrd_pencil, BundleClass};
use pnrd_core::wedderburn::SymmetricClass;
use pnrd_core::Error;

/// Status codes; the nonzero values match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PnrdStatus {
    Ok = 0,
    /// The document or a class failed validation.
    Validation = 2,
    /// A computation on valid input failed.
    Computation = 3,
    /// A null pointer, non-UTF-8 text, an unknown class name or a zero rank.
    InvalidArgument = 64,
    /// An internal error; the library state is unaffected.
    Internal = 70,
}

/// A validated variety together with its named classes.
pub struct PnrdContext {
    doc: Document,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PnrdStatus, String);

impl From<Located> for Failure {
    fn from(l: Located) -> Self {
        let status = if l.error.is_validation() { PnrdStatus::Validation } else { PnrdStatus::Computation };
        Failure(status, l.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Located { path: String::new(), error: e }.into()
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(PnrdStatus::InvalidArgument, msg.into())
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("interior nul removed"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PnrdStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        Err(Failure(PnrdStatus::Internal, "internal error".into()))
    });
    match outcome {
        Ok(()) => {
            set_error(None);
            PnrdStatus::Ok
        }
        Err(Failure(status, msg)) => {
            set_error(Some(msg));
            status
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(invalid(format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn context<'a>(ctx: *const PnrdContext) -> Result<&'a PnrdContext, Failure> {
    ctx.as_ref().ok_or_else(|| invalid("context is null"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| invalid("output pointer is null"))
}

impl PnrdContext {
    fn class(&self, name: &str) -> Result<SymmetricClass, Failure> {
        let (key, v) = self
            .doc
            .classes
            .iter()
            .find(|(k, _)| k == name)
            .ok_or_else(|| invalid(format!("no class named `{name}`")))?;
        Ok(parse_class(&self.doc.context, v, &format!("$.classes.{key}"))?)
    }
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON and rationals contain no nul").into_raw()
}

fn coefficients(p: &RationalPolynomial) -> Value {
    p.coeffs().iter().map(|c| Value::String(format_rational(c))).collect()
}

/// Parses and validates a JSON document; on success `*out_ctx` owns a new context.
///
/// # Safety
/// `json` must be a nul-terminated string and `out_ctx` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pnrd_context_new(json: *const c_char, out_ctx: *mut *mut PnrdContext) -> PnrdStatus {
    guard(|| {
        let slot = out(out_ctx)?;
        *slot = ptr::null_mut();
        let value = parse_json(text(json, "document")?, "$")?;
        let doc = parse_document(&value)?;
        *slot = Box::into_raw(Box::new(PnrdContext { doc }));
        Ok(())
    })
}

/// Releases a context; null is ignored.
///
/// # Safety
/// `ctx` must come from `pnrd_context_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pnrd_context_free(ctx: *mut PnrdContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// The dimension g of the variety.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pnrd_context_dimension(ctx: *const PnrdContext, out_g: *mut u32) -> PnrdStatus {
    guard(|| {
        *out(out_g)? = context(ctx)?.doc.context.dimension();
        Ok(())
    })
}

/// The Euler characteristic of a class as a rational string such as "-3/4".
///
/// # Safety
/// Pointers must be valid; the string in `*out_chi` is freed with `pnrd_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pnrd_chi(ctx: *const PnrdContext, class_name: *const c_char, out_chi: *mut *mut c_char) -> PnrdStatus {
    guard(|| {
        let slot = out(out_chi)?;
        *slot = ptr::null_mut();
        let ctx = context(ctx)?;
        let alpha = ctx.class(text(class_name, "class name")?)?;
        *slot = owned_string(format_rational(&euler_char(&ctx.doc.context, &alpha)?));
        Ok(())
    })
}

/// The index i and the kernel dimension of a class.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pnrd_index(
    ctx: *const PnrdContext,
    class_name: *const c_char,
    out_i: *mut usize,
    out_dim_k: *mut usize,
) -> PnrdStatus {
    guard(|| {
        let (i, k) = (out(out_i)?, out(out_dim_k)?);
        let ctx = context(ctx)?;
        let alpha = ctx.class(text(class_name, "class name")?)?;
        let p = index(&ctx.doc.context, &alpha)?;
        (*i, *k) = (p.positive, p.zero);
        Ok(())
    })
}

/// The continuous regularity of a bundle with the named determinant class
/// and the given rank; rank 1 treats the class itself.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pnrd_regcont(
    ctx: *const PnrdContext,
    class_name: *const c_char,
    rank: u32,
    out_m: *mut i64,
) -> PnrdStatus {
    guard(|| {
        let slot = out(out_m)?;
        let ctx = context(ctx)?;
        let det = ctx.class(text(class_name, "class name")?)?;
        let vc = &ctx.doc.context;
        let result = match rank {
            0 => return Err(invalid("rank must be positive")),
            1 => reg_cont(vc, &det)?,
            r => reg_cont_bundle(vc, &BundleClass::new(vc, det, r)?)?,
        };
        *slot = result.m;
        Ok(())
    })
}

/// The Hilbert data of a class as a JSON object with the coefficient lists
/// `q` and `hilbert` (constant term first) and the root counts.
///
/// # Safety
/// Pointers must be valid; the string in `*out_json` is freed with `pnrd_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pnrd_hilbert_json(
    ctx: *const PnrdContext,
    class_name: *const c_char,
    out_json: *mut *mut c_char,
) -> PnrdStatus {
    guard(|| {
        let slot = out(out_json)?;
        *slot = ptr::null_mut();
        let ctx = context(ctx)?;
        let alpha = ctx.class(text(class_name, "class name")?)?;
        let data = pnrd_pencil(&ctx.doc.context, &alpha)?;
        let report = json!({
            "g": ctx.doc.context.dimension(),
            "q": coefficients(&data.q),
            "hilbert": coefficients(&data.scaled),
            "positive": data.profile.positive,
            "zero": data.profile.zero,
            "negative": data.negative(),
        });
        *slot = owned_string(report.to_string());
        Ok(())
    })
}

/// The message of the last failed call on this thread, or null after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn pnrd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pnrd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
