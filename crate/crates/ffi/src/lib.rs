//! C ABI for the `periplectic` crate.
//!
//! Objects cross the boundary as opaque handles created by `*_new`/`*_from_*`
//! functions and released with the matching `*_free`. Every fallible call
//! returns a [`PeriplecticStatus`]; on failure a message is available from
//! [`periplectic_last_error`] on the same thread until the next failing call.
//! Strings returned to the caller are NUL-terminated, UTF-8, and must be
//! released with [`periplectic_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use periplectic::blocks::{self, BlockDecomposition};
use periplectic::diagrams::{self, BrauerDiagram, SignedDiagram};
use periplectic::partitions::{self, Partition};
use periplectic::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriplecticStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments are malformed or outside the domain of the operation.
    InvalidArgument = 2,
    /// Valid request the library does not handle, such as characteristic 2.
    Unsupported = 3,
    /// A configured size bound would be exceeded.
    Resource = 4,
    /// A consistency check failed, or the library panicked.
    Internal = 5,
    /// Input text (JSON or a partition) could not be parsed.
    Parse = 6,
}

/// An `(r, s)`-Brauer diagram.
pub struct PeriplecticDiagram {
    inner: BrauerDiagram,
}

/// A block decomposition of `Λ_n`.
pub struct PeriplecticBlocks {
    inner: BlockDecomposition,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PeriplecticStatus {
    match e {
        Error::Usage(_) | Error::Domain(_) => PeriplecticStatus::InvalidArgument,
        Error::Unsupported(_) => PeriplecticStatus::Unsupported,
        Error::Resource(_) => PeriplecticStatus::Resource,
        Error::Internal(_) => PeriplecticStatus::Internal,
        Error::Parse(_) => PeriplecticStatus::Parse,
    }
}

/// Internal failure type: a status plus message.
struct Failure(PeriplecticStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PeriplecticStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PeriplecticStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside the periplectic library".into());
            PeriplecticStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PeriplecticStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(PeriplecticStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(value).map_err(|_| Failure(PeriplecticStatus::Internal, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_diagram(
    sign_out: *mut i8,
    out: *mut *mut PeriplecticDiagram,
    value: SignedDiagram,
) -> Result<(), Failure> {
    if sign_out.is_null() || out.is_null() {
        return Err(null("output pointer"));
    }
    *sign_out = value.sign();
    *out = match value {
        SignedDiagram::Zero => ptr::null_mut(),
        SignedDiagram::Term { diagram, .. } => Box::into_raw(Box::new(PeriplecticDiagram { inner: diagram })),
    };
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>().map_err(Failure::from)
}

/// Message of the last failing call on this thread, or null if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn periplectic_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn periplectic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a diagram from JSON `{"r":…,"s":…,"pairs":[[a,b],…]}` with
/// 1-based nodes.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_diagram_from_json(
    json: *const c_char,
    out: *mut *mut PeriplecticDiagram,
) -> PeriplecticStatus {
    guard(|| {
        let json = text(json, "json")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let inner: BrauerDiagram = serde_json::from_str(json)
            .map_err(|e| Failure(PeriplecticStatus::Parse, format!("bad diagram JSON: {e}")))?;
        *out = Box::into_raw(Box::new(PeriplecticDiagram { inner }));
        Ok(())
    })
}

/// The identity diagram of `A_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_diagram_identity(
    n: usize,
    out: *mut *mut PeriplecticDiagram,
) -> PeriplecticStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(PeriplecticDiagram { inner: BrauerDiagram::identity(n) }));
        Ok(())
    })
}

/// Releases a diagram. Null is ignored.
///
/// # Safety
/// `d` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn periplectic_diagram_free(d: *mut PeriplecticDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of northern and southern nodes.
///
/// # Safety
/// `d` must be a live diagram; `r` and `s` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_diagram_shape(
    d: *const PeriplecticDiagram,
    r: *mut usize,
    s: *mut usize,
) -> PeriplecticStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null("diagram"))?;
        if r.is_null() || s.is_null() {
            return Err(null("output pointer"));
        }
        *r = d.inner.r();
        *s = d.inner.s();
        Ok(())
    })
}

/// JSON form of a diagram; free with [`periplectic_string_free`].
///
/// # Safety
/// `d` must be a live diagram; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_diagram_to_json(
    d: *const PeriplecticDiagram,
    out: *mut *mut c_char,
) -> PeriplecticStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null("diagram"))?;
        write_string(out, serde_json::to_string(&d.inner).expect("diagrams serialise"))
    })
}

/// Signed product `a · b` (`a` on top). Writes the sign (`-1`, `0`, `+1`)
/// and, unless the product is zero, a new diagram; a zero product writes a
/// null diagram.
///
/// # Safety
/// `a`, `b` must be live diagrams; `sign` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_diagram_multiply(
    a: *const PeriplecticDiagram,
    b: *const PeriplecticDiagram,
    sign: *mut i8,
    out: *mut *mut PeriplecticDiagram,
) -> PeriplecticStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        write_diagram(sign, out, diagrams::compose_signed(&a.inner, &b.inner))
    })
}

/// The anti-involution `φ`, as a sign and a diagram.
///
/// # Safety
/// `d` must be a live diagram; `sign` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_diagram_phi(
    d: *const PeriplecticDiagram,
    sign: *mut i8,
    out: *mut *mut PeriplecticDiagram,
) -> PeriplecticStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null("diagram"))?;
        write_diagram(sign, out, diagrams::phi(&d.inner))
    })
}

/// `dim A_n = (2n-1)!!`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_algebra_dimension(n: usize, out: *mut u64) -> PeriplecticStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = (1..2 * n as u64)
            .step_by(2)
            .try_fold(1u64, |acc, k| acc.checked_mul(k))
            .ok_or_else(|| Failure(PeriplecticStatus::Resource, format!("dim A_{n} does not fit in 64 bits")))?;
        Ok(())
    })
}

unsafe fn blocks_into(
    out: *mut *mut PeriplecticBlocks,
    compute: impl FnOnce() -> periplectic::Result<BlockDecomposition>,
) -> PeriplecticStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = compute()?;
        *out = Box::into_raw(Box::new(PeriplecticBlocks { inner }));
        Ok(())
    })
}

/// Closed-form block decomposition; `p` is 0 or an odd prime.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_blocks_classify(
    n: usize,
    p: u64,
    out: *mut *mut PeriplecticBlocks,
) -> PeriplecticStatus {
    blocks_into(out, || blocks::classify(n, p))
}

/// Block decomposition from the central idempotents of `A_n` over GF(p).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_blocks_oracle(
    n: usize,
    p: u64,
    out: *mut *mut PeriplecticBlocks,
) -> PeriplecticStatus {
    blocks_into(out, || blocks::oracle(n, p))
}

/// Releases a block decomposition. Null is ignored.
///
/// # Safety
/// `b` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn periplectic_blocks_free(b: *mut PeriplecticBlocks) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Number of blocks.
///
/// # Safety
/// `b` must be a live decomposition; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_blocks_count(b: *const PeriplecticBlocks, out: *mut usize) -> PeriplecticStatus {
    guard(|| {
        let b = b.as_ref().ok_or_else(|| null("blocks"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = b.inner.len();
        Ok(())
    })
}

/// Whether two decompositions are the same set partition.
///
/// # Safety
/// `a`, `b` must be live decompositions; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_blocks_equal(
    a: *const PeriplecticBlocks,
    b: *const PeriplecticBlocks,
    out: *mut bool,
) -> PeriplecticStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = a.inner.same_partition(&b.inner);
        Ok(())
    })
}

/// JSON `{"n","p","provenance","blocks"}`; free with
/// [`periplectic_string_free`].
///
/// # Safety
/// `b` must be a live decomposition; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_blocks_to_json(
    b: *const PeriplecticBlocks,
    out: *mut *mut c_char,
) -> PeriplecticStatus {
    guard(|| {
        let b = b.as_ref().ok_or_else(|| null("blocks"))?;
        write_string(out, b.inner.to_json())
    })
}

/// The `p`-core of a partition written like `"(4,4,2,1)"`.
///
/// # Safety
/// `partition` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_p_core(
    partition: *const c_char,
    p: usize,
    out: *mut *mut c_char,
) -> PeriplecticStatus {
    guard(|| {
        let lambda = parse_partition(text(partition, "partition")?)?;
        if p < 2 {
            return Err(Failure(PeriplecticStatus::InvalidArgument, "p must be at least 2".into()));
        }
        write_string(out, partitions::p_core(&lambda, p).to_string())
    })
}

/// The Mullineux conjugate of a `p`-restricted partition.
///
/// # Safety
/// `partition` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_mullineux(
    partition: *const c_char,
    p: u32,
    out: *mut *mut c_char,
) -> PeriplecticStatus {
    guard(|| {
        let lambda = parse_partition(text(partition, "partition")?)?;
        write_string(out, partitions::mullineux(&lambda, p)?.to_string())
    })
}

/// Runs the verification grid with every `n` capped at `max_n`; writes the
/// number of failed checks.
///
/// # Safety
/// `failed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn periplectic_verify(max_n: usize, seed: u64, failed: *mut u32) -> PeriplecticStatus {
    guard(|| {
        if failed.is_null() {
            return Err(null("failed"));
        }
        *failed = periplectic::verify::run_all(max_n, seed).iter().filter(|o| !o.passed).count() as u32;
        Ok(())
    })
}
