//! C ABI over `cyclic_aqec`.
//!
//! Codes are opaque `AqecCode` handles released with `aqec_code_free`.
//! Every fallible call returns an `AqecStatus`; on failure the message of the
//! last error on the calling thread is available from
//! `aqec_last_error_message`. Strings returned through out-parameters are
//! owned by the caller and released with `aqec_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use cyclic_aqec::aqec::{
    css_aqec, css_subsystem, defset_aqec, euclidean_assc, genpoly_aqec, stabilizer_matrices,
    AqecRecord, SubsystemRecord,
};
use cyclic_aqec::catalog::{search_catalog, verify_record, CatalogEntry};
use cyclic_aqec::cyclic::{bch_construct, rs_construct, CodeSpace, CyclicCode};
use cyclic_aqec::polyring::Poly;
use cyclic_aqec::weights::{min_weight, WeightResult};
use cyclic_aqec::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AqecStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Panic = 3,
    BufferTooSmall = 4,
    NotPrime = 10,
    TooLarge = 11,
    DegreeOutOfRange = 12,
    DivisionByZero = 13,
    FieldMismatch = 14,
    OrderUnavailable = 15,
    NotCoprime = 16,
    NotCosetClosed = 17,
    DuplicateResidues = 18,
    ResidueOutOfRange = 19,
    NotDivisor = 20,
    NotMonic = 21,
    DeltaOutOfRange = 22,
    KOutOfRange = 23,
    LengthMismatch = 24,
    ZeroCode = 25,
    EmptyDifference = 26,
    NotNested = 27,
    NonpositiveDimension = 28,
    GaugeOutOfRange = 29,
    InexactDistance = 30,
    ConstantFactor = 31,
    RangeViolation = 32,
    TNotInAdmissibleSet = 33,
    HullTooLarge = 34,
    DimensionIdentity = 35,
    UnknownCommand = 36,
    BadFlag = 37,
    SchemaViolation = 38,
    BudgetExceeded = 39,
    SearchSpaceTooLarge = 40,
    Io = 41,
}

impl From<&Error> for AqecStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotPrime(_) => AqecStatus::NotPrime,
            Error::TooLarge(_) => AqecStatus::TooLarge,
            Error::DegreeOutOfRange(_) => AqecStatus::DegreeOutOfRange,
            Error::DivisionByZero => AqecStatus::DivisionByZero,
            Error::FieldMismatch => AqecStatus::FieldMismatch,
            Error::OrderUnavailable { .. } => AqecStatus::OrderUnavailable,
            Error::NotCoprime { .. } => AqecStatus::NotCoprime,
            Error::NotCosetClosed { .. } => AqecStatus::NotCosetClosed,
            Error::DuplicateResidues(_) => AqecStatus::DuplicateResidues,
            Error::ResidueOutOfRange { .. } => AqecStatus::ResidueOutOfRange,
            Error::NotDivisor(_) => AqecStatus::NotDivisor,
            Error::NotMonic => AqecStatus::NotMonic,
            Error::DeltaOutOfRange { .. } => AqecStatus::DeltaOutOfRange,
            Error::KOutOfRange { .. } => AqecStatus::KOutOfRange,
            Error::LengthMismatch => AqecStatus::LengthMismatch,
            Error::ZeroCode => AqecStatus::ZeroCode,
            Error::EmptyDifference => AqecStatus::EmptyDifference,
            Error::NotNested => AqecStatus::NotNested,
            Error::NonpositiveDimension(_) => AqecStatus::NonpositiveDimension,
            Error::GaugeOutOfRange { .. } => AqecStatus::GaugeOutOfRange,
            Error::InexactDistance => AqecStatus::InexactDistance,
            Error::ConstantFactor => AqecStatus::ConstantFactor,
            Error::RangeViolation { .. } => AqecStatus::RangeViolation,
            Error::TNotInAdmissibleSet => AqecStatus::TNotInAdmissibleSet,
            Error::HullTooLarge { .. } => AqecStatus::HullTooLarge,
            Error::DimensionIdentity(_) => AqecStatus::DimensionIdentity,
            Error::UnknownCommand(_) => AqecStatus::UnknownCommand,
            Error::BadFlag(_) => AqecStatus::BadFlag,
            Error::SchemaViolation(_) => AqecStatus::SchemaViolation,
            Error::BudgetExceeded(_) => AqecStatus::BudgetExceeded,
            Error::SearchSpaceTooLarge { .. } => AqecStatus::SearchSpaceTooLarge,
            Error::Io(_) => AqecStatus::Io,
        }
    }
}

/// Opaque cyclic code.
pub struct AqecCode {
    inner: CyclicCode,
}

/// A minimum weight; when `exact` is set, `lower == upper == value`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct AqecWeight {
    pub value: usize,
    pub exact: bool,
    pub lower: usize,
    pub upper: usize,
}

/// Parameters of an asymmetric quantum or subsystem code.
/// `r` is -1 for plain quantum codes; `pure_x`/`pure_z` are -1 when unknown.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct AqecParams {
    pub n: usize,
    pub q: u32,
    pub k: usize,
    pub r: i64,
    pub dx: usize,
    pub dz: usize,
    pub dx_exact: bool,
    pub dz_exact: bool,
    pub pure_x: i8,
    pub pure_z: i8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, converting errors and panics into a status and recording the message.
fn guard(f: impl FnOnce() -> Result<(), AqecStatus>) -> AqecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AqecStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("panic inside cyclic-aqec".into());
            AqecStatus::Panic
        }
    }
}

fn fail(e: Error) -> AqecStatus {
    set_last_error(e.to_string());
    AqecStatus::from(&e)
}

fn null(what: &str) -> AqecStatus {
    set_last_error(format!("null pointer: {what}"));
    AqecStatus::NullPointer
}

/// # Safety
/// `p` must be null only when `len == 0`; otherwise it must point to `len` readable items.
unsafe fn items<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], AqecStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

/// # Safety
/// `p` must be null or point to a live handle.
unsafe fn code<'a>(p: *const AqecCode, what: &str) -> Result<&'a CyclicCode, AqecStatus> {
    p.as_ref().map(|c| &c.inner).ok_or_else(|| null(what))
}

/// # Safety
/// `out` must be null or writable.
unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), AqecStatus> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(c: CyclicCode) -> *mut AqecCode {
    Box::into_raw(Box::new(AqecCode { inner: c }))
}

fn weight(w: &WeightResult) -> AqecWeight {
    AqecWeight {
        value: w.value,
        exact: w.exact,
        lower: w.lower,
        upper: w.upper,
    }
}

fn tri(x: Option<bool>) -> i8 {
    x.map_or(-1, i8::from)
}

fn aqec_params(r: &AqecRecord) -> AqecParams {
    AqecParams {
        n: r.n,
        q: r.q,
        k: r.k,
        r: -1,
        dx: r.dx.value,
        dz: r.dz.value,
        dx_exact: r.dx.exact,
        dz_exact: r.dz.exact,
        pure_x: tri(r.pure_x),
        pure_z: tri(r.pure_z),
    }
}

fn subsystem_params(r: &SubsystemRecord) -> AqecParams {
    AqecParams {
        n: r.n,
        q: r.q,
        k: r.k,
        r: r.r as i64,
        dx: r.dx.value,
        dz: r.dz.value,
        dx_exact: r.dx.exact,
        dz_exact: r.dz.exact,
        pure_x: tri(r.pure_x),
        pure_z: tri(r.pure_z),
    }
}

/// Message of the last failed call on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn aqec_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library name and version, statically allocated.
#[no_mangle]
pub extern "C" fn aqec_version() -> *const c_char {
    concat!("cyclic-aqec ", env!("CARGO_PKG_VERSION"), "\0")
        .as_ptr()
        .cast()
}

/// Cyclic code of length `n` over GF(q) with the given defining set.
///
/// # Safety
/// `defset` must point to `len` values (may be null when `len == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_from_defset(
    n: usize,
    q: u32,
    defset: *const usize,
    len: usize,
    out: *mut *mut AqecCode,
) -> AqecStatus {
    guard(|| {
        let t = items(defset, len, "defset")?;
        let c = CodeSpace::new(n, q)
            .and_then(|s| s.code_from_defset(t))
            .map_err(fail)?;
        put(out, boxed(c), "out")
    })
}

/// Cyclic code generated by a monic divisor of x^n - 1; coefficients are
/// field element indices, constant term first.
///
/// # Safety
/// `coeffs` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_from_genpoly(
    n: usize,
    q: u32,
    coeffs: *const u32,
    len: usize,
    out: *mut *mut AqecCode,
) -> AqecStatus {
    guard(|| {
        let cs = items(coeffs, len, "coeffs")?;
        let space = CodeSpace::new(n, q).map_err(fail)?;
        let g = Poly::new(space.field(), cs.to_vec()).map_err(fail)?;
        let c = space.code_from_genpoly(&g).map_err(fail)?;
        put(out, boxed(c), "out")
    })
}

/// BCH code with designed distance `delta` and first root exponent `b`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_bch(
    n: usize,
    q: u32,
    delta: usize,
    b: usize,
    out: *mut *mut AqecCode,
) -> AqecStatus {
    guard(|| {
        let c = bch_construct(n, q, delta, b).map_err(fail)?;
        put(out, boxed(c), "out")
    })
}

/// Reed-Solomon code of length q - 1 and dimension `k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_rs(
    q: u32,
    k: usize,
    b: usize,
    out: *mut *mut AqecCode,
) -> AqecStatus {
    guard(|| {
        let c = rs_construct(q, k, b).map_err(fail)?;
        put(out, boxed(c), "out")
    })
}

/// Euclidean dual code.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_dual(c: *const AqecCode, out: *mut *mut AqecCode) -> AqecStatus {
    guard(|| {
        let d = code(c, "code")?.dual();
        put(out, boxed(d), "out")
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_free(c: *mut AqecCode) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Length n, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_length(c: *const AqecCode) -> usize {
    c.as_ref().map_or(0, |c| c.inner.n())
}

/// Dimension k, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_dimension(c: *const AqecCode) -> usize {
    c.as_ref().map_or(0, |c| c.inner.k())
}

/// Copies up to `cap` residues of the sorted defining set into `buf` and
/// returns the full size of the set.
///
/// # Safety
/// `c` must be null or a live handle; `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_defset(
    c: *const AqecCode,
    buf: *mut usize,
    cap: usize,
) -> usize {
    let Some(c) = c.as_ref() else { return 0 };
    let t = c.inner.defset();
    if !buf.is_null() {
        ptr::copy_nonoverlapping(t.as_ptr(), buf, t.len().min(cap));
    }
    t.len()
}

/// Minimum Hamming weight, exact when at most `budget` codewords suffice.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_code_min_weight(
    c: *const AqecCode,
    budget: u64,
    out: *mut AqecWeight,
) -> AqecStatus {
    guard(|| {
        let w = min_weight(code(c, "code")?, budget).map_err(fail)?;
        put(out, weight(&w), "out")
    })
}

/// CSS code from C2^perp inside C1.
///
/// # Safety
/// `c1`, `c2` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_css(
    c1: *const AqecCode,
    c2: *const AqecCode,
    budget: u64,
    out: *mut AqecParams,
) -> AqecStatus {
    guard(|| {
        let rec = css_aqec(code(c1, "c1")?, code(c2, "c2")?, budget).map_err(fail)?;
        put(out, aqec_params(&rec), "out")
    })
}

/// CSS subsystem code with `r` gauge qudits.
///
/// # Safety
/// `c1`, `c2` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_css_subsystem(
    c1: *const AqecCode,
    c2: *const AqecCode,
    r: usize,
    budget: u64,
    out: *mut AqecParams,
) -> AqecStatus {
    guard(|| {
        let rec = css_subsystem(code(c1, "c1")?, code(c2, "c2")?, r, budget).map_err(fail)?;
        put(out, subsystem_params(&rec), "out")
    })
}

/// Construction from a factor f of (x^n - 1) / g1; coefficients constant term first.
///
/// # Safety
/// `c1` must be a live handle; `coeffs` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_genpoly(
    c1: *const AqecCode,
    coeffs: *const u32,
    len: usize,
    budget: u64,
    out: *mut AqecParams,
) -> AqecStatus {
    guard(|| {
        let c1 = code(c1, "c1")?;
        let f = Poly::new(c1.field(), items(coeffs, len, "coeffs")?.to_vec()).map_err(fail)?;
        let rec = genpoly_aqec(c1, &f, budget).map_err(fail)?;
        put(out, aqec_params(&rec), "out")
    })
}

/// Construction from a coset-closed set T of admissible residues.
///
/// # Safety
/// `c1` must be a live handle; `t` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_defset(
    c1: *const AqecCode,
    t: *const usize,
    len: usize,
    budget: u64,
    out: *mut AqecParams,
) -> AqecStatus {
    guard(|| {
        let rec = defset_aqec(code(c1, "c1")?, items(t, len, "t")?, budget).map_err(fail)?;
        put(out, aqec_params(&rec), "out")
    })
}

/// The two subsystem codes built from C1 and its hull; `out` receives two entries.
///
/// # Safety
/// `c1` must be a live handle; `out` must point to two writable `AqecParams`.
#[no_mangle]
pub unsafe extern "C" fn aqec_euclidean(
    c1: *const AqecCode,
    budget: u64,
    out: *mut AqecParams,
) -> AqecStatus {
    guard(|| {
        let (a, b) = euclidean_assc(code(c1, "c1")?, budget).map_err(fail)?;
        if out.is_null() {
            return Err(null("out"));
        }
        out.write(subsystem_params(&a));
        out.add(1).write(subsystem_params(&b));
        Ok(())
    })
}

/// Row-major stabilizer matrices: HX spans C2^perp, HZ spans C1^perp, both
/// with n columns. Row counts are always written; entries are written only
/// when the buffers are large enough, otherwise `BufferTooSmall` is returned.
///
/// # Safety
/// `c1`, `c2` must be live handles; `hx`/`hz` must hold `hx_cap`/`hz_cap`
/// values (may be null when the capacity is 0); row-count pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_stabilizer_matrices(
    c1: *const AqecCode,
    c2: *const AqecCode,
    hx: *mut u32,
    hx_cap: usize,
    hz: *mut u32,
    hz_cap: usize,
    hx_rows: *mut usize,
    hz_rows: *mut usize,
) -> AqecStatus {
    guard(|| {
        let pair = stabilizer_matrices(code(c1, "c1")?, code(c2, "c2")?).map_err(fail)?;
        put(hx_rows, pair.hx.rows(), "hx_rows")?;
        put(hz_rows, pair.hz.rows(), "hz_rows")?;
        let need_x = pair.hx.rows() * pair.hx.cols();
        let need_z = pair.hz.rows() * pair.hz.cols();
        if hx_cap < need_x
            || hz_cap < need_z
            || (need_x > 0 && hx.is_null())
            || (need_z > 0 && hz.is_null())
        {
            set_last_error(format!("need {need_x} entries for HX and {need_z} for HZ"));
            return Err(AqecStatus::BufferTooSmall);
        }
        for (i, v) in pair.hx.iter_rows().flatten().enumerate() {
            hx.add(i).write(*v);
        }
        for (i, v) in pair.hz.iter_rows().flatten().enumerate() {
            hz.add(i).write(*v);
        }
        Ok(())
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("JSON has no interior nul")
        .into_raw()
}

/// Catalog for length `n` over GF(q), one JSON record per line.
///
/// # Safety
/// `out` must be writable; the string is released with `aqec_string_free`.
#[no_mangle]
pub unsafe extern "C" fn aqec_search_json(
    n: usize,
    q: u32,
    budget: u64,
    out: *mut *mut c_char,
) -> AqecStatus {
    guard(|| {
        let entries = search_catalog(n, q, budget).map_err(fail)?;
        let mut text = String::new();
        for e in entries {
            text.push_str(&e.to_json());
            text.push('\n');
        }
        put(out, into_c_string(text), "out")
    })
}

/// Recomputes one JSON record; `pass` receives whether (n, q, k, r, dx, dz) match.
///
/// # Safety
/// `json` must be a nul-terminated string; `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aqec_verify_json(
    json: *const c_char,
    budget: u64,
    pass: *mut bool,
) -> AqecStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| {
            set_last_error(e.to_string());
            AqecStatus::InvalidUtf8
        })?;
        let entry = CatalogEntry::from_json(text).map_err(fail)?;
        let report = verify_record(&entry, budget).map_err(fail)?;
        put(pass, report.pass, "pass")
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aqec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
