//! C ABI over braidscope.
//!
//! Every fallible function returns a [`BsStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`bs_last_error`] until the next call on the same thread. Handles
//! (`BsWord`, `BsBall`) are opaque and owned by the caller once returned.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use braidscope::conway::{self, ConwayError, Ordering};
use braidscope::garside::{self, CanonicalForm, GarsideError};
use braidscope::geodesy::{self, BallTable, GeodesyError};
use braidscope::render::render_ascii;
use braidscope::word::{BraidWord, WordError};

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    OutOfBall = 5,
    Budget = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque braid word.
pub struct BsWord(BraidWord);

/// Opaque ball of the Cayley graph.
pub struct BsBall(BallTable);

#[repr(C)]
#[derive(Clone, Copy, Default, Debug)]
pub struct BsWordStats {
    /// Positive letters.
    pub positive: usize,
    /// Negative letters.
    pub negative: usize,
    pub exponent_sum: i64,
    pub length: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Default, Debug)]
pub struct BsClassFlags {
    pub positive: bool,
    pub negative: bool,
    pub homogeneous: bool,
    pub alternating: bool,
    pub reduced: bool,
    pub degenerate: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(BsStatus, String);

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        Failure(BsStatus::Parse, e.to_string())
    }
}

impl From<GarsideError> for Failure {
    fn from(e: GarsideError) -> Self {
        Failure(BsStatus::InvalidArgument, e.to_string())
    }
}

impl From<GeodesyError> for Failure {
    fn from(e: GeodesyError) -> Self {
        let status = match e {
            GeodesyError::OutOfBall { .. } => BsStatus::OutOfBall,
            GeodesyError::BudgetExceeded { .. } => BsStatus::Budget,
            _ => BsStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<ConwayError> for Failure {
    fn from(e: ConwayError) -> Self {
        match e {
            ConwayError::BudgetExceeded { .. } => Failure(BsStatus::Budget, e.to_string()),
            ConwayError::Geodesy(g) => g.into(),
            _ => Failure(BsStatus::InvalidArgument, e.to_string()),
        }
    }
}

fn null() -> Failure {
    Failure(BsStatus::NullPointer, "null pointer argument".into())
}

fn set_error(msg: Option<String>) {
    LAST_ERROR.with(|cell| {
        *cell.borrow_mut() = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    });
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> BsStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(Failure(BsStatus::Panic, msg))
    });
    match outcome {
        Ok(()) => {
            set_error(None);
            BsStatus::Ok
        }
        Err(Failure(status, msg)) => {
            set_error(Some(msg));
            status
        }
    }
}

unsafe fn word_ref<'a>(word: *const BsWord) -> Result<&'a BraidWord, Failure> {
    word.as_ref().map(|w| &w.0).ok_or_else(null)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread, or NULL after a
/// success. Valid until the next call into this library.
#[no_mangle]
pub extern "C" fn bs_last_error() -> *const c_char {
    LAST_ERROR.with(|cell| cell.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses letters (`aB…`) or signed indices (`1 -2 …`) as a word on
/// `strands` strands.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bs_word_parse(text: *const c_char, strands: usize, out: *mut *mut BsWord) -> BsStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(BsStatus::InvalidUtf8, e.to_string()))?;
        let word = BraidWord::parse(text, strands)?;
        write_out(out, Box::into_raw(Box::new(BsWord(word))))
    })
}

/// # Safety
/// `word` must come from this library and not be freed twice. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn bs_word_free(word: *mut BsWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// # Safety
/// `s` must be a string returned by this library, or NULL.
#[no_mangle]
pub unsafe extern "C" fn bs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes the word in letter notation; free with [`bs_string_free`].
///
/// # Safety
/// `word` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_word_to_string(word: *const BsWord, out: *mut *mut c_char) -> BsStatus {
    guard(|| {
        let w = word_ref(word)?;
        write_out(out, into_c_string(w.render()))
    })
}

/// ASCII diagram; free with [`bs_string_free`].
///
/// # Safety
/// `word` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_word_render(word: *const BsWord, out: *mut *mut c_char) -> BsStatus {
    guard(|| {
        let w = word_ref(word)?;
        write_out(out, into_c_string(render_ascii(w)))
    })
}

/// Left-greedy normal form written as a word; free with [`bs_string_free`].
///
/// # Safety
/// `word` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_word_normal_form(word: *const BsWord, out: *mut *mut c_char) -> BsStatus {
    guard(|| {
        let w = word_ref(word)?;
        let form = CanonicalForm::from_word(w)?;
        write_out(out, into_c_string(form.to_word().render()))
    })
}

/// # Safety
/// `word` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_word_stats(word: *const BsWord, out: *mut BsWordStats) -> BsStatus {
    guard(|| {
        let s = word_ref(word)?.stats();
        write_out(out, BsWordStats { positive: s.p, negative: s.n, exponent_sum: s.exp, length: s.length })
    })
}

/// # Safety
/// `word` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_word_classify(word: *const BsWord, out: *mut BsClassFlags) -> BsStatus {
    guard(|| {
        let c = word_ref(word)?.classify();
        write_out(
            out,
            BsClassFlags {
                positive: c.positive,
                negative: c.negative,
                homogeneous: c.homogeneous.is_some(),
                alternating: c.alternating,
                reduced: c.reduced,
                degenerate: c.degenerate,
            },
        )
    })
}

/// Whether two words on the same strands represent the same braid.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_word_equal(a: *const BsWord, b: *const BsWord, out: *mut bool) -> BsStatus {
    guard(|| {
        let eq = garside::equal(word_ref(a)?, word_ref(b)?)?;
        write_out(out, eq)
    })
}

/// Closed-form geodesic test in `B_3`.
///
/// # Safety
/// `word` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_b3_geodesic(word: *const BsWord, out: *mut bool) -> BsStatus {
    guard(|| {
        let g = geodesy::b3_geodesic(word_ref(word)?)?;
        write_out(out, g)
    })
}

/// Conway coefficients `a_0..a_d` under the standard ordering. `*len`
/// receives the number of coefficients; when it exceeds `capacity`
/// nothing is written to `coefficients` and the status is
/// `BufferTooSmall`. `coefficients` may be NULL when `capacity` is 0.
///
/// # Safety
/// `coefficients` must have room for `capacity` values; `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_conway_standard(
    word: *const BsWord,
    coefficients: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> BsStatus {
    guard(|| {
        let w = word_ref(word)?;
        let p = conway::conway(w, &Ordering::standard(w.strands()))?;
        let c = p.coefficients();
        write_out(len, c.len())?;
        if c.len() > capacity {
            return Err(Failure(BsStatus::BufferTooSmall, format!("need {} coefficients", c.len())));
        }
        if !c.is_empty() {
            if coefficients.is_null() {
                return Err(null());
            }
            ptr::copy_nonoverlapping(c.as_ptr(), coefficients, c.len());
        }
        Ok(())
    })
}

/// Builds every braid of length at most `radius`, stopping with `Budget`
/// past `budget` elements (0 selects the library default).
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_ball_build(strands: usize, radius: usize, budget: usize, out: *mut *mut BsBall) -> BsStatus {
    guard(|| {
        let budget = if budget == 0 { geodesy::DEFAULT_BUDGET } else { budget };
        let ball = BallTable::build(strands, radius, budget)?;
        write_out(out, Box::into_raw(Box::new(BsBall(ball))))
    })
}

/// # Safety
/// `ball` must come from this library and not be freed twice. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn bs_ball_free(ball: *mut BsBall) {
    if !ball.is_null() {
        drop(Box::from_raw(ball));
    }
}

/// Number of elements in the ball.
///
/// # Safety
/// `ball` must be valid or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn bs_ball_size(ball: *const BsBall) -> usize {
    ball.as_ref().map_or(0, |b| b.0.len())
}

/// Word length of the braid. `OutOfBall` when it lies beyond the radius.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_ball_length(ball: *const BsBall, word: *const BsWord, out: *mut u32) -> BsStatus {
    guard(|| {
        let ball = ball.as_ref().ok_or_else(null)?;
        let l = ball.0.length(word_ref(word)?)?;
        write_out(out, l)
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_ball_is_geodesic(ball: *const BsBall, word: *const BsWord, out: *mut bool) -> BsStatus {
    guard(|| {
        let ball = ball.as_ref().ok_or_else(null)?;
        let g = ball.0.is_geodesic(word_ref(word)?)?;
        write_out(out, g)
    })
}
