//! C ABI for `partmod`.
//!
//! Conventions:
//! - every fallible function returns a [`PartmodStatus`] and writes its
//!   result through an out-pointer;
//! - on failure, [`partmod_last_error`] describes the most recent error on
//!   the calling thread;
//! - handles and strings returned by this library are owned by the caller
//!   and released with the matching `*_free` function;
//! - partitions are written `5,3,1` and alternating-group labels
//!   `5,3,1+`, `5,3,1-` or `8,1`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use partmod::alternating::{self, AltLabel};
use partmod::branching;
use partmod::classifier::{self, ScanRow, Verdict};
use partmod::error::Error;
use partmod::mullineux;
use partmod::partition::Partition;
use partmod::specht;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartmodStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed partition or label text.
    Parse = 3,
    /// Well-formed input the operation does not accept (characteristic,
    /// regularity, sizes, ranges).
    InvalidArgument = 4,
    /// Input outside the domain of the underlying rule.
    Precondition = 5,
    /// Input above the oracle size cap.
    TooLarge = 6,
    /// A computation failed in a way that indicates a defect.
    Internal = 7,
    /// A Rust panic was caught at the boundary.
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartmodVerdict {
    Trivial = 0,
    NotIrreducible = 1,
    Irreducible = 2,
    BasicSpinOpen = 3,
}

impl From<Verdict> for PartmodVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Trivial => PartmodVerdict::Trivial,
            Verdict::NotIrreducible => PartmodVerdict::NotIrreducible,
            Verdict::Irreducible => PartmodVerdict::Irreducible,
            Verdict::BasicSpinOpen => PartmodVerdict::BasicSpinOpen,
        }
    }
}

/// Opaque partition handle.
pub struct PartmodPartition(Partition);

/// Opaque classification handle.
pub struct PartmodClassification(ScanRow);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_of(e: &Error) -> PartmodStatus {
    match e {
        Error::Parse { .. } | Error::NotAPartition { .. } => PartmodStatus::Parse,
        Error::PreconditionViolated(_)
        | Error::OutsideRuleDomain { .. }
        | Error::EmptyPartition => PartmodStatus::Precondition,
        Error::TooLarge { .. } => PartmodStatus::TooLarge,
        e if e.is_input_error() => PartmodStatus::InvalidArgument,
        _ => PartmodStatus::Internal,
    }
}

struct Failure(PartmodStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PartmodStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PartmodStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("panic inside partmod");
            PartmodStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(Failure(
            PartmodStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| Failure(PartmodStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(ptr: *const T) -> Result<&'a T, Failure> {
    ptr.as_ref()
        .ok_or_else(|| Failure(PartmodStatus::NullPointer, "null handle".into()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            PartmodStatus::NullPointer,
            "null out-pointer".into(),
        ));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(PartmodStatus::Internal, "string contains NUL".into()))
}

/// Message for the last failure on this thread. Valid until the next failing
/// call on the same thread; never NULL.
#[no_mangle]
pub extern "C" fn partmod_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn partmod_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn partmod_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `5,3,1` (or `-` for the empty partition).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_partition_parse(
    text: *const c_char,
    out: *mut *mut PartmodPartition,
) -> PartmodStatus {
    guard(|| {
        let lambda: Partition = read_str(text)?.parse()?;
        write(out, Box::into_raw(Box::new(PartmodPartition(lambda))))
    })
}

/// # Safety
/// `lambda` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn partmod_partition_free(lambda: *mut PartmodPartition) {
    if !lambda.is_null() {
        drop(Box::from_raw(lambda));
    }
}

/// `|λ|`; 0 for NULL.
///
/// # Safety
/// `lambda` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn partmod_partition_size(lambda: *const PartmodPartition) -> usize {
    lambda.as_ref().map_or(0, |l| l.0.size())
}

/// Number of rows; 0 for NULL.
///
/// # Safety
/// `lambda` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn partmod_partition_height(lambda: *const PartmodPartition) -> usize {
    lambda.as_ref().map_or(0, |l| l.0.height())
}

/// Writes a newly allocated `5,3,1` string; free with `partmod_string_free`.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_partition_to_string(
    lambda: *const PartmodPartition,
    out: *mut *mut c_char,
) -> PartmodStatus {
    guard(|| {
        let l = handle(lambda)?;
        write(out, to_c_string(l.0.to_string())?)
    })
}

/// The Mullineux image `λ^M` as a new handle.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_mullineux(
    lambda: *const PartmodPartition,
    p: usize,
    out: *mut *mut PartmodPartition,
) -> PartmodStatus {
    guard(|| {
        let image = mullineux::mullineux(&handle(lambda)?.0, p)?;
        write(out, Box::into_raw(Box::new(PartmodPartition(image))))
    })
}

/// Whether `D^λ` splits on restriction to the alternating group.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_splits(
    lambda: *const PartmodPartition,
    p: usize,
    out: *mut bool,
) -> PartmodStatus {
    guard(|| write(out, alternating::splits(&handle(lambda)?.0, p)?))
}

/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_is_js(
    lambda: *const PartmodPartition,
    p: usize,
    out: *mut bool,
) -> PartmodStatus {
    guard(|| write(out, branching::is_js(&handle(lambda)?.0, p)?))
}

/// Total number of normal nodes over all residues.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_normal_count(
    lambda: *const PartmodPartition,
    p: usize,
    out: *mut usize,
) -> PartmodStatus {
    guard(|| write(out, branching::normal_count(&handle(lambda)?.0, p)?))
}

/// `dim D^λ` over `F_p` as a Gram rank, plus the number of standard
/// tableaux. `syt_out` may be NULL.
///
/// # Safety
/// `lambda` must be a live handle; `rank_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_gram_rank(
    lambda: *const PartmodPartition,
    p: usize,
    rank_out: *mut usize,
    syt_out: *mut usize,
) -> PartmodStatus {
    guard(|| {
        let cert = specht::gram_rank(&handle(lambda)?.0, p)?;
        write(rank_out, cert.rank)?;
        if !syt_out.is_null() {
            syt_out.write(cert.syt);
        }
        Ok(())
    })
}

/// Classifies `lhs ⊗ rhs` for `A_n`, `p ∈ {2, 3}`.
///
/// # Safety
/// `lhs` and `rhs` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_classify(
    p: usize,
    n: usize,
    lhs: *const c_char,
    rhs: *const c_char,
    out: *mut *mut PartmodClassification,
) -> PartmodStatus {
    guard(|| {
        let v = AltLabel::parse(read_str(lhs)?, p)?;
        let w = AltLabel::parse(read_str(rhs)?, p)?;
        let classification = classifier::classify(p, n, &v, &w)?;
        let row = ScanRow {
            p,
            n,
            lhs: v,
            rhs: w,
            classification,
        };
        write(out, Box::into_raw(Box::new(PartmodClassification(row))))
    })
}

/// # Safety
/// `c` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn partmod_classification_free(c: *mut PartmodClassification) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_classification_verdict(
    c: *const PartmodClassification,
    out: *mut PartmodVerdict,
) -> PartmodStatus {
    guard(|| write(out, handle(c)?.0.classification.verdict.into()))
}

/// Writes the product label (e.g. `4,3,2`), or NULL when the verdict carries
/// none.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_classification_product(
    c: *const PartmodClassification,
    out: *mut *mut c_char,
) -> PartmodStatus {
    guard(|| {
        let product = match &handle(c)?.0.classification.product {
            Some(label) => to_c_string(label.to_string())?,
            None => ptr::null_mut(),
        };
        write(out, product)
    })
}

/// The full record as a JSON object, matching the CLI payload.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn partmod_classification_to_json(
    c: *const PartmodClassification,
    out: *mut *mut c_char,
) -> PartmodStatus {
    guard(|| {
        let json = serde_json::to_string(&handle(c)?.0)
            .map_err(|e| Failure(PartmodStatus::Internal, e.to_string()))?;
        write(out, to_c_string(json)?)
    })
}
