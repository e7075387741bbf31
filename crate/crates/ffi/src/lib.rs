//! C ABI over `frieze-bracket`.
//!
//! Every function returns an [`FbStatus`]; results come back through out
//! pointers. On failure a message is kept per thread and can be fetched with
//! [`fb_last_error_message`]. Strings handed out by this library must be
//! released with [`fb_string_free`], polynomials with [`fb_poly_free`] and
//! friezes with [`fb_frieze_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use frieze_bracket::frieze::{complete_invariant, Frieze, FriezeError};
use frieze_bracket::lrword::{fraction_of, word_of, LRWord, WordError};
use frieze_bracket::rational::{Fraction, RationalError};
use frieze_bracket::recipe::{
    bracket_num, denominator_link_bracket, RecipeError, DEFAULT_PATH_CAP,
};
use frieze_bracket::yamada::v_phi;
use frieze_bracket::{LaurentPoly, PolyError};

/// Status codes. Zero is success.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    NotZigzag = 5,
    PathCap = 6,
    Overflow = 7,
    Internal = 99,
}

/// A Laurent polynomial in `A`.
pub struct FbPoly {
    inner: LaurentPoly,
}

/// A frieze of zigzag type (or any frieze built from a quiddity cycle).
pub struct FbFrieze {
    inner: Frieze,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(FbStatus, String);

impl Failure {
    fn new(status: FbStatus, msg: impl ToString) -> Self {
        Self(status, msg.to_string())
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        let status = match e {
            PolyError::Parse { .. } => FbStatus::Parse,
            PolyError::NotInT(_) => FbStatus::Domain,
            _ => FbStatus::Overflow,
        };
        Self::new(status, e)
    }
}

impl From<RationalError> for Failure {
    fn from(e: RationalError) -> Self {
        let status = match e {
            RationalError::Parse(..) => FbStatus::Parse,
            RationalError::Overflow => FbStatus::Overflow,
            _ => FbStatus::Domain,
        };
        Self::new(status, e)
    }
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        let status = match e {
            WordError::Parse { .. } => FbStatus::Parse,
            _ => FbStatus::Domain,
        };
        Self::new(status, e)
    }
}

impl From<FriezeError> for Failure {
    fn from(e: FriezeError) -> Self {
        let status = match e {
            FriezeError::NotZigzagType => FbStatus::NotZigzag,
            FriezeError::Overflow { .. } => FbStatus::Overflow,
            _ => FbStatus::Domain,
        };
        Self::new(status, e)
    }
}

impl From<RecipeError> for Failure {
    fn from(e: RecipeError) -> Self {
        let status = match &e {
            RecipeError::PathCapExceeded { .. } => FbStatus::PathCap,
            RecipeError::Frieze(FriezeError::NotZigzagType) => FbStatus::NotZigzag,
            _ => FbStatus::Domain,
        };
        Self::new(status, e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FbStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FbStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::new(FbStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure::new(FbStatus::InvalidUtf8, e))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(FbStatus::NullPointer, "null out pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(FbStatus::NullPointer, "null handle"))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    write_out(out, to_c(s))
}

unsafe fn write_poly(out: *mut *mut FbPoly, p: LaurentPoly) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(FbStatus::NullPointer, "null out pointer"));
    }
    out.write(Box::into_raw(Box::new(FbPoly { inner: p })));
    Ok(())
}

fn fraction(p: u64, q: u64) -> Result<Fraction, Failure> {
    Ok(Fraction::new(p, q)?)
}

unsafe fn word(s: *const c_char) -> Result<LRWord, Failure> {
    Ok(read_str(s)?.parse::<LRWord>()?)
}

/// Copy of the last error message on this thread, or null. Free with
/// `fb_string_free`.
#[no_mangle]
pub extern "C" fn fb_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a polynomial such as `-A^4-A^-4`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_poly_parse(text: *const c_char, out: *mut *mut FbPoly) -> FbStatus {
    guard(|| write_poly(out, read_str(text)?.parse::<LaurentPoly>()?))
}

/// # Safety
/// `p` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_poly_to_string(p: *const FbPoly, out: *mut *mut c_char) -> FbStatus {
    guard(|| write_string(out, deref(p)?.inner.to_string()))
}

/// Value at `A^4 = -1`; fails unless every exponent is a multiple of 4.
///
/// # Safety
/// `p` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_poly_eval_at_a4_minus1(p: *const FbPoly, out: *mut i64) -> FbStatus {
    guard(|| write_out(out, deref(p)?.inner.eval_at_a4_minus1()?))
}

/// Lowest and highest exponent; fails on the zero polynomial.
///
/// # Safety
/// `p` must be a live handle or null; `lo` and `hi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_poly_degree_range(
    p: *const FbPoly,
    lo: *mut i32,
    hi: *mut i32,
) -> FbStatus {
    guard(|| {
        let p = &deref(p)?.inner;
        match (p.min_degree(), p.max_degree()) {
            (Some(a), Some(b)) => {
                write_out(lo, a)?;
                write_out(hi, b)
            }
            _ => Err(Failure::new(
                FbStatus::Domain,
                "zero polynomial has no degree",
            )),
        }
    })
}

/// `A -> A^-1`.
///
/// # Safety
/// `p` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_poly_bar(p: *const FbPoly, out: *mut *mut FbPoly) -> FbStatus {
    guard(|| write_poly(out, deref(p)?.inner.bar()))
}

/// # Safety
/// `a`, `b` must be live handles or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_poly_equal(
    a: *const FbPoly,
    b: *const FbPoly,
    out: *mut bool,
) -> FbStatus {
    guard(|| write_out(out, deref(a)?.inner == deref(b)?.inner))
}

/// # Safety
/// `p` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fb_poly_free(p: *mut FbPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `<Γ(w)>` for an LR word such as `RL^2RL` (`-` is the empty word).
///
/// # Safety
/// `w` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_bracket_of_word(w: *const c_char, out: *mut *mut FbPoly) -> FbStatus {
    guard(|| write_poly(out, v_phi(fraction_of(&word(w)?))))
}

/// `v(φ(p/q))` for any positive `p/q`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_bracket_of_fraction(p: u64, q: u64, out: *mut *mut FbPoly) -> FbStatus {
    guard(|| {
        let x = fraction(p, q)?;
        if x.is_zero() {
            return Err(Failure::new(FbStatus::Domain, "fraction must be positive"));
        }
        write_poly(out, v_phi(x))
    })
}

/// Sum over the folded frieze's paths ending at the floor 1, for `0 < p/q < 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_bracket_num_of_fraction(
    p: u64,
    q: u64,
    out: *mut *mut FbPoly,
) -> FbStatus {
    guard(|| {
        let f = Frieze::from_word(&word_of(fraction(p, q)?)?)?;
        write_poly(out, bracket_num(&f, DEFAULT_PATH_CAP)?)
    })
}

/// Bracket of the denominator closure of the rational tangle `p/q`, `0 < p/q < 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_denominator_link(p: u64, q: u64, out: *mut *mut FbPoly) -> FbStatus {
    guard(|| {
        write_poly(
            out,
            denominator_link_bracket(fraction(p, q)?, DEFAULT_PATH_CAP)?,
        )
    })
}

/// The LR word of `p/q`, `0 < p/q < 1`, in power notation.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_word_of_fraction(p: u64, q: u64, out: *mut *mut c_char) -> FbStatus {
    guard(|| write_string(out, word_of(fraction(p, q)?)?.power_notation()))
}

/// # Safety
/// `w` must be a nul-terminated string; `p`, `q` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_fraction_of_word(
    w: *const c_char,
    p: *mut u64,
    q: *mut u64,
) -> FbStatus {
    guard(|| {
        let x = fraction_of(&word(w)?);
        write_out(p, x.numer())?;
        write_out(q, x.denom())
    })
}

/// `C_w` as text, e.g. `{2/9, 4/9, 5/9, 7/9}`.
///
/// # Safety
/// `w` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_complete_invariant(
    w: *const c_char,
    out: *mut *mut c_char,
) -> FbStatus {
    guard(|| write_string(out, complete_invariant(&word(w)?)?.to_string()))
}

unsafe fn write_frieze(out: *mut *mut FbFrieze, f: Frieze) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(FbStatus::NullPointer, "null out pointer"));
    }
    out.write(Box::into_raw(Box::new(FbFrieze { inner: f })));
    Ok(())
}

/// # Safety
/// `w` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_from_word(
    w: *const c_char,
    out: *mut *mut FbFrieze,
) -> FbStatus {
    guard(|| write_frieze(out, Frieze::from_word(&word(w)?)?))
}

/// # Safety
/// `quiddity` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_from_quiddity(
    quiddity: *const u64,
    len: usize,
    out: *mut *mut FbFrieze,
) -> FbStatus {
    guard(|| {
        if quiddity.is_null() {
            return Err(Failure::new(FbStatus::NullPointer, "null quiddity"));
        }
        let q = std::slice::from_raw_parts(quiddity, len);
        write_frieze(out, Frieze::from_quiddity(q)?)
    })
}

/// # Safety
/// `f` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_free(f: *mut FbFrieze) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of interior rows.
///
/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_height(f: *const FbFrieze, out: *mut usize) -> FbStatus {
    guard(|| write_out(out, deref(f)?.inner.height()))
}

/// Length of the quiddity cycle.
///
/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_width(f: *const FbFrieze, out: *mut usize) -> FbStatus {
    guard(|| write_out(out, deref(f)?.inner.width()))
}

/// Smallest translation period.
///
/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_period(f: *const FbFrieze, out: *mut usize) -> FbStatus {
    guard(|| write_out(out, deref(f)?.inner.period()))
}

/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_max_entry(f: *const FbFrieze, out: *mut u64) -> FbStatus {
    guard(|| write_out(out, deref(f)?.inner.max_entry()))
}

/// Entry at `(row, col)`; rows `-1` and `height` are the boundary 1s and
/// anything further out is 0. Columns wrap around the cycle.
///
/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_entry(
    f: *const FbFrieze,
    row: i64,
    col: i64,
    out: *mut u64,
) -> FbStatus {
    guard(|| write_out(out, deref(f)?.inner.entry(row as isize, col as isize)))
}

/// The word read along a 1-zigzag; `FB_STATUS_NOT_ZIGZAG` if there is none.
///
/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_word(f: *const FbFrieze, out: *mut *mut c_char) -> FbStatus {
    guard(|| write_string(out, deref(f)?.inner.reconstruct_word()?.power_notation()))
}

/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_bracket(f: *const FbFrieze, out: *mut *mut FbPoly) -> FbStatus {
    guard(|| write_poly(out, deref(f)?.inner.bracket()?))
}

/// # Safety
/// `f` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_frieze_render(f: *const FbFrieze, out: *mut *mut c_char) -> FbStatus {
    guard(|| write_string(out, deref(f)?.inner.render_ascii()))
}
