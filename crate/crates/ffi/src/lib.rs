//! C ABI for the lift checker and classifier.
//!
//! Every function returns an [`LcStatus`]. On failure a message is kept per
//! thread and can be read with [`lc_last_error`]. Handles are opaque and
//! owned by the caller until passed to their `_free` function. Strings
//! returned through `char **` must be released with [`lc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liftcheck::classify::{classify, witness_representation, ClassificationVerdict, ClassifyError};
use liftcheck::cli::parse_kind;
use liftcheck::groups::{make_family, parse_family, parse_table, FiniteGroup, GroupError};
use liftcheck::replift::{check_lift, parse_rep, write_rep, LiftVerdict, RepError, Representation};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    TooLarge = 5,
    CertificationFailed = 6,
    Panic = 7,
}

/// A representation of a finitely presented group over `F_p`.
pub struct LcRepresentation(Representation);

/// Outcome of a lift check.
pub struct LcLiftResult {
    verdict: LiftVerdict,
    rep: Representation,
}

/// A finite group given by its multiplication table.
pub struct LcGroup(FiniteGroup);

/// Outcome of classifying a group.
pub struct LcClassification(ClassificationVerdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(LcStatus, String);

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        let status = match e {
            RepError::Parse { .. } => LcStatus::Parse,
            RepError::TooLarge(_) | RepError::BudgetExceeded { .. } => LcStatus::TooLarge,
            RepError::CertificationFailed(_) => LcStatus::CertificationFailed,
            _ => LcStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure(LcStatus::InvalidInput, e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Rep(r) => r.into(),
            ClassifyError::CertificationFailed(m) => Failure(LcStatus::CertificationFailed, m),
            other => Failure(LcStatus::InvalidInput, other.to_string()),
        }
    }
}

impl From<liftcheck::cli::CliError> for Failure {
    fn from(e: liftcheck::cli::CliError) -> Self {
        Failure(LcStatus::InvalidInput, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LcStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(LcStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(LcStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, Failure> {
    h.as_ref()
        .ok_or_else(|| Failure(LcStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(LcStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(LcStatus::NullPointer, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(LcStatus::InvalidInput, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(LcStatus::NullPointer, "null output pointer".into()));
    }
    *out = value;
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn lc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` is NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a representation in the text format.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_rep_parse(
    src: *const c_char,
    out: *mut *mut LcRepresentation,
) -> LcStatus {
    guard(|| {
        let rep = parse_rep(text(src)?)?;
        put(out, LcRepresentation(rep))
    })
}

/// Built-in witness for `kind`: `C2xC2`, `Q8`, `C3xC3`, `C9` or `C<p>`.
///
/// # Safety
/// `kind` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_rep_witness(
    kind: *const c_char,
    out: *mut *mut LcRepresentation,
) -> LcStatus {
    guard(|| {
        let rep = witness_representation(parse_kind(text(kind)?)?)?;
        put(out, LcRepresentation(rep))
    })
}

/// # Safety
/// `rep` is a valid handle; `dim` and `p` are writable.
#[no_mangle]
pub unsafe extern "C" fn lc_rep_shape(
    rep: *const LcRepresentation,
    dim: *mut usize,
    p: *mut u32,
) -> LcStatus {
    guard(|| {
        let r = &handle(rep)?.0;
        put_value(dim, r.dim())?;
        put_value(p, r.ctx().p())
    })
}

/// The representation in the text format.
///
/// # Safety
/// `rep` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_rep_to_string(
    rep: *const LcRepresentation,
    out: *mut *mut c_char,
) -> LcStatus {
    guard(|| put_string(out, write_rep(&handle(rep)?.0)))
}

/// # Safety
/// `rep` is NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_rep_free(rep: *mut LcRepresentation) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Decides whether `rep` lifts to `Z/p^2`.
///
/// # Safety
/// `rep` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_check_lift(
    rep: *const LcRepresentation,
    out: *mut *mut LcLiftResult,
) -> LcStatus {
    guard(|| {
        let r = &handle(rep)?.0;
        let verdict = check_lift(r)?;
        put(
            out,
            LcLiftResult {
                verdict,
                rep: r.clone(),
            },
        )
    })
}

/// # Safety
/// `res` is a valid handle; `liftable` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_lift_result_is_liftable(
    res: *const LcLiftResult,
    liftable: *mut bool,
) -> LcStatus {
    guard(|| put_value(liftable, handle(res)?.verdict.is_liftable()))
}

/// The lifted generator matrices, one `name: rows` line per generator with
/// entries in `[0, p^2)`, or the nonzero entries of the refuting functional
/// as `equation:coefficient` pairs.
///
/// # Safety
/// `res` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_lift_result_to_string(
    res: *const LcLiftResult,
    out: *mut *mut c_char,
) -> LcStatus {
    guard(|| {
        let res = handle(res)?;
        let s = match &res.verdict {
            LiftVerdict::Liftable(cert) => res
                .rep
                .presentation()
                .names()
                .iter()
                .zip(&cert.mats)
                .map(|(n, m)| format!("{n}: {:?}\n", m.rows()))
                .collect(),
            LiftVerdict::NotLiftable(r) => {
                let terms: Vec<String> = r
                    .support()
                    .iter()
                    .map(|(i, c)| format!("{i}:{c}"))
                    .collect();
                format!("{}\n", terms.join(" "))
            }
        };
        put_string(out, s)
    })
}

/// # Safety
/// `res` is NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_lift_result_free(res: *mut LcLiftResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Builds a group from a family spec such as `"C 24"` or `"Q 8"`.
///
/// # Safety
/// `spec` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_group_from_family(
    spec: *const c_char,
    out: *mut *mut LcGroup,
) -> LcStatus {
    guard(|| {
        let tokens: Vec<&str> = text(spec)?.split_whitespace().collect();
        put(out, LcGroup(make_family(&parse_family(&tokens)?)?))
    })
}

/// Builds a group from a multiplication table file's contents.
///
/// # Safety
/// `table` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_group_from_table(
    table: *const c_char,
    out: *mut *mut LcGroup,
) -> LcStatus {
    guard(|| put(out, LcGroup(parse_table(text(table)?)?)))
}

/// # Safety
/// `g` is a valid handle; `order` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_group_order(g: *const LcGroup, order: *mut usize) -> LcStatus {
    guard(|| put_value(order, handle(g)?.0.order()))
}

/// # Safety
/// `g` is NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_group_free(g: *mut LcGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_classify(
    g: *const LcGroup,
    out: *mut *mut LcClassification,
) -> LcStatus {
    guard(|| put(out, LcClassification(classify(&handle(g)?.0)?)))
}

/// `liftable` is set for liftable groups. `certified` is set when the
/// verdict is liftable or the witness was refuted by the checker.
///
/// # Safety
/// `c` is a valid handle; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn lc_classification_flags(
    c: *const LcClassification,
    liftable: *mut bool,
    certified: *mut bool,
) -> LcStatus {
    guard(|| {
        let v = &handle(c)?.0;
        put_value(liftable, v.is_liftable())?;
        let ok = match v {
            ClassificationVerdict::Liftable(_) => true,
            ClassificationVerdict::NotLiftable(w) => w.is_certified(),
        };
        put_value(certified, ok)
    })
}

/// The family tag of a liftable group or the obstruction subgroup kind.
///
/// # Safety
/// `c` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_classification_label(
    c: *const LcClassification,
    out: *mut *mut c_char,
) -> LcStatus {
    guard(|| {
        let s = match &handle(c)?.0 {
            ClassificationVerdict::Liftable(tag) => tag.to_string(),
            ClassificationVerdict::NotLiftable(w) => w.bad.kind.to_string(),
        };
        put_string(out, s)
    })
}

/// The witness representation of a non-liftable group.
///
/// # Safety
/// `c` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn lc_classification_witness(
    c: *const LcClassification,
    out: *mut *mut LcRepresentation,
) -> LcStatus {
    guard(|| match &handle(c)?.0 {
        ClassificationVerdict::Liftable(_) => Err(Failure(
            LcStatus::InvalidInput,
            "liftable groups have no witness".into(),
        )),
        ClassificationVerdict::NotLiftable(w) => put(out, LcRepresentation(w.rep.clone())),
    })
}

/// # Safety
/// `c` is NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_classification_free(c: *mut LcClassification) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
