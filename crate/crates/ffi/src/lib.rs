//! C ABI for `anisokin`.
//!
//! Every fallible function returns an [`AnisokinStatus`] and writes its result
//! through an out-pointer. On failure the message is kept per thread and can
//! be read with [`anisokin_last_error`]. Velocities and ledgers are opaque
//! handles that must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use anisokin::oracle::ledger::{
    full_ledger, ledger_with_samples, verify_identity, Ledger, Verdict,
};
use anisokin::oracle::OracleError;
use anisokin::{
    a_factor, boost_matrix, compose, dispersion_energy, hamiltonian, invert, k_factor,
    kinematic_length, subtract, transform, CoMomentum, FourVector, KinematicsError, MassShellQuery,
    Velocity3,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnisokinStatus {
    Ok = 0,
    /// A positivity condition failed; the message names the inequality.
    Domain = 1,
    /// Inversion pole or vanishing denominator.
    Singular = 2,
    NullPointer = 3,
    InvalidArgument = 4,
    UnknownIdentity = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnisokinVerdict {
    HoldsExactly = 0,
    HoldsAfterStatedCorrection = 1,
    Fails = 2,
}

impl From<Verdict> for AnisokinVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::HoldsExactly => AnisokinVerdict::HoldsExactly,
            Verdict::HoldsAfterStatedCorrection => AnisokinVerdict::HoldsAfterStatedCorrection,
            Verdict::Fails => AnisokinVerdict::Fails,
        }
    }
}

/// Opaque velocity handle.
pub struct AnisokinVelocity(Velocity3);

/// Opaque ledger handle. Strings handed out stay valid until it is freed.
pub struct AnisokinLedger {
    ledger: Ledger,
    ids: Vec<CString>,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(AnisokinStatus, String);

impl From<KinematicsError> for Failure {
    fn from(e: KinematicsError) -> Self {
        let status = match e {
            KinematicsError::Domain { .. } => AnisokinStatus::Domain,
            KinematicsError::SingularInversion { .. }
            | KinematicsError::DegenerateDenominator { .. }
            | KinematicsError::DivisionByZero { .. } => AnisokinStatus::Singular,
            KinematicsError::InvalidMass(_) | KinematicsError::NonFinite(_) => {
                AnisokinStatus::InvalidArgument
            }
        };
        Failure(status, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure(AnisokinStatus::UnknownIdentity, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(AnisokinStatus::NullPointer, format!("null pointer: {what}"))
}

/// Runs `body`, converting errors and panics into a status plus last-error
/// message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> AnisokinStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            clear_last_error();
            AnisokinStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            AnisokinStatus::Panic
        }
    }
}

unsafe fn read<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

unsafe fn read_array<const N: usize>(p: *const f64, what: &str) -> Result<[f64; N], Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    let mut out = [0.0; N];
    ptr::copy_nonoverlapping(p, out.as_mut_ptr(), N);
    Ok(out)
}

unsafe fn write_array<const N: usize>(
    p: *mut f64,
    value: [f64; N],
    what: &str,
) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    ptr::copy_nonoverlapping(value.as_ptr(), p, N);
    Ok(())
}

fn boxed(v: Velocity3) -> *mut AnisokinVelocity {
    Box::into_raw(Box::new(AnisokinVelocity(v)))
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn anisokin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn anisokin_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// New velocity inside the open domain.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_velocity_new(
    s1: f64,
    s2: f64,
    s3: f64,
    out: *mut *mut AnisokinVelocity,
) -> AnisokinStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let v = Velocity3::new(s1, s2, s3)?;
        write(out, boxed(v), "out")
    })
}

/// New velocity without the domain check, for boundary studies.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_velocity_new_unchecked(
    s1: f64,
    s2: f64,
    s3: f64,
    out: *mut *mut AnisokinVelocity,
) -> AnisokinStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed(Velocity3::unchecked(s1, s2, s3)), "out")
    })
}

/// Releases a velocity. NULL is ignored.
///
/// # Safety
/// `v` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn anisokin_velocity_free(v: *mut AnisokinVelocity) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Writes the three components to `out[0..3]`.
///
/// # Safety
/// `v` must be a live handle, `out` valid for three doubles.
#[no_mangle]
pub unsafe extern "C" fn anisokin_velocity_components(
    v: *const AnisokinVelocity,
    out: *mut f64,
) -> AnisokinStatus {
    guard(|| write_array(out, read(v, "v")?.0.components(), "out"))
}

/// a ⊕ b as a new handle.
///
/// # Safety
/// `a`, `b` must be live handles, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_compose(
    a: *const AnisokinVelocity,
    b: *const AnisokinVelocity,
    out: *mut *mut AnisokinVelocity,
) -> AnisokinStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let v = compose(&read(a, "a")?.0, &read(b, "b")?.0)?;
        write(out, boxed(v), "out")
    })
}

/// ⊖s as a new handle.
///
/// # Safety
/// `s` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_invert(
    s: *const AnisokinVelocity,
    out: *mut *mut AnisokinVelocity,
) -> AnisokinStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let v = invert(&read(s, "s")?.0)?;
        write(out, boxed(v), "out")
    })
}

/// a ⊖ b as a new handle.
///
/// # Safety
/// `a`, `b` must be live handles, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_subtract(
    a: *const AnisokinVelocity,
    b: *const AnisokinVelocity,
    out: *mut *mut AnisokinVelocity,
) -> AnisokinStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let v = subtract(&read(a, "a")?.0, &read(b, "b")?.0)?;
        write(out, boxed(v), "out")
    })
}

/// # Safety
/// `s` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_a_factor(
    s: *const AnisokinVelocity,
    out: *mut f64,
) -> AnisokinStatus {
    guard(|| write(out, a_factor(&read(s, "s")?.0)?, "out"))
}

/// # Safety
/// `s` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_k_factor(
    s: *const AnisokinVelocity,
    out: *mut f64,
) -> AnisokinStatus {
    guard(|| write(out, k_factor(&read(s, "s")?.0), "out"))
}

/// Y' = Λ(s)Y for `y[0..4]`, written to `out[0..4]`.
///
/// # Safety
/// `s` must be a live handle, `y` and `out` valid for four doubles.
#[no_mangle]
pub unsafe extern "C" fn anisokin_transform(
    s: *const AnisokinVelocity,
    y: *const f64,
    out: *mut f64,
) -> AnisokinStatus {
    guard(|| {
        let y = FourVector(read_array::<4>(y, "y")?);
        write_array(out, transform(&read(s, "s")?.0, &y)?.0, "out")
    })
}

/// Λ(s) row-major into `out[0..16]`.
///
/// # Safety
/// `s` must be a live handle, `out` valid for sixteen doubles.
#[no_mangle]
pub unsafe extern "C" fn anisokin_boost_matrix(
    s: *const AnisokinVelocity,
    out: *mut f64,
) -> AnisokinStatus {
    guard(|| {
        let m = boost_matrix(&read(s, "s")?.0)?;
        let mut flat = [0.0; 16];
        for (i, row) in m.entries.iter().enumerate() {
            flat[4 * i..4 * i + 4].copy_from_slice(row);
        }
        write_array(out, flat, "out")
    })
}

/// F(Y) for `y[0..4]`.
///
/// # Safety
/// `y` valid for four doubles, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_kinematic_length(y: *const f64, out: *mut f64) -> AnisokinStatus {
    guard(|| {
        let y = FourVector(read_array::<4>(y, "y")?);
        write(out, kinematic_length(&y)?, "out")
    })
}

/// H(P) for `p[0..4]`.
///
/// # Safety
/// `p` valid for four doubles, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_hamiltonian(p: *const f64, out: *mut f64) -> AnisokinStatus {
    guard(|| {
        let p = CoMomentum(read_array::<4>(p, "p")?);
        write(out, hamiltonian(&p)?, "out")
    })
}

/// Mass-shell energy for spatial momentum `momentum[0..3]`.
///
/// # Safety
/// `momentum` valid for three doubles, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_dispersion_energy(
    mass: f64,
    momentum: *const f64,
    out: *mut f64,
) -> AnisokinStatus {
    guard(|| {
        let q = MassShellQuery::new(mass, read_array::<3>(momentum, "momentum")?)?;
        write(out, dispersion_energy(&q)?, "out")
    })
}

/// Verdict of one registered identity over `samples` exact samples.
///
/// # Safety
/// `id` must be a NUL-terminated string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_verify_identity(
    id: *const c_char,
    samples: usize,
    seed: u64,
    out: *mut AnisokinVerdict,
) -> AnisokinStatus {
    guard(|| {
        if id.is_null() {
            return Err(null("id"));
        }
        let id = CStr::from_ptr(id)
            .to_str()
            .map_err(|_| Failure(AnisokinStatus::InvalidArgument, "id is not UTF-8".into()))?;
        let entry = verify_identity(id, samples, seed)?;
        write(out, entry.verdict.into(), "out")
    })
}

fn wrap_ledger(ledger: Ledger) -> *mut AnisokinLedger {
    let ids = ledger
        .entries
        .iter()
        .map(|e| CString::new(e.identity_id.as_str()).expect("ids have no NUL"))
        .collect();
    let json = CString::new(ledger.to_json()).expect("json has no NUL");
    Box::into_raw(Box::new(AnisokinLedger { ledger, ids, json }))
}

/// Full ledger. `samples == 0` selects the default sample count.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_ledger_new(
    seed: u64,
    samples: usize,
    out: *mut *mut AnisokinLedger,
) -> AnisokinStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let ledger = if samples == 0 {
            full_ledger(seed)
        } else {
            ledger_with_samples(seed, samples)
        };
        write(out, wrap_ledger(ledger), "out")
    })
}

/// Releases a ledger. NULL is ignored.
///
/// # Safety
/// `l` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn anisokin_ledger_free(l: *mut AnisokinLedger) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Number of entries; 0 for NULL.
///
/// # Safety
/// `l` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn anisokin_ledger_len(l: *const AnisokinLedger) -> usize {
    l.as_ref().map_or(0, |l| l.ledger.entries.len())
}

/// Identity id of entry `index`, or NULL when out of range.
///
/// # Safety
/// `l` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn anisokin_ledger_identity_id(
    l: *const AnisokinLedger,
    index: usize,
) -> *const c_char {
    l.as_ref()
        .and_then(|l| l.ids.get(index))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// # Safety
/// `l` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn anisokin_ledger_verdict(
    l: *const AnisokinLedger,
    index: usize,
    out: *mut AnisokinVerdict,
) -> AnisokinStatus {
    guard(|| {
        let l = read(l, "ledger")?;
        let entry = l.ledger.entries.get(index).ok_or_else(|| {
            Failure(
                AnisokinStatus::InvalidArgument,
                format!(
                    "index {index} out of range ({} entries)",
                    l.ledger.entries.len()
                ),
            )
        })?;
        write(out, entry.verdict.into(), "out")
    })
}

/// The whole ledger as JSON, or NULL for a NULL handle.
///
/// # Safety
/// `l` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn anisokin_ledger_json(l: *const AnisokinLedger) -> *const c_char {
    l.as_ref().map_or(ptr::null(), |l| l.json.as_ptr())
}
