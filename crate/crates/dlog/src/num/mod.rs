//! Arbitrary-precision numerics: the big-float type, conversions, fundamental
//! constants with dual-route validation, special functions, double-exponential
//! quadrature, and accelerated series evaluation.
//!
//! Precision model: every public function takes a target precision in bits,
//! computes internally with guard bits, and rounds the result back. Reference
//! decimal literals embedded in [`consts`] are cross-check data only — the
//! computed values are what callers receive.

pub mod accel;
pub mod consts;
pub mod quad;
pub mod special;

use crate::scalar::Rat;
use dashu_base::{BitTest, UnsignedAbs};
use dashu_float::round::mode::HalfEven;
use dashu_float::{DBig, FBig};
use dashu_int::IBig;
use std::str::FromStr;

/// Binary big-float with round-half-even semantics.
pub type BigFloat = FBig<HalfEven, 2>;

/// Guard bits added to working precision inside every routine.
pub const GUARD: usize = 32;

/// Default precision used by the command-line tool and acceptance checks.
pub const DEFAULT_PREC: usize = 256;

/// Numeric-domain errors.
#[derive(Debug, Clone, thiserror::Error)]
pub enum NumError {
    #[error("function has a pole at the requested point")]
    Pole,
    #[error("argument lies outside the principal branch domain")]
    Branch,
    #[error(
        "quadrature failed to reach tolerance: estimated error {est_log2} (log2) after level cap"
    )]
    QuadAccuracy {
        /// Best value found before giving up.
        partial: BigFloat,
        /// log2 of the estimated error of that value.
        est_log2: i64,
    },
}

pub type Result<T> = std::result::Result<T, NumError>;

/// Integer at a given precision.
pub fn bf_int(n: i64, prec: usize) -> BigFloat {
    BigFloat::from(n).with_precision(prec).value()
}

/// Exact rational rounded to a given precision.
pub fn bf_from_rat(r: &Rat, prec: usize) -> BigFloat {
    let numer = IBig::from_str(&r.numer().to_string()).expect("decimal digits");
    let denom = IBig::from_str(&r.denom().to_string()).expect("decimal digits");
    let n = BigFloat::from(numer).with_precision(prec).value();
    let d = BigFloat::from(denom).with_precision(prec).value();
    n / d
}

/// Parse a decimal literal (used for embedded references and CLI input).
/// Panics on malformed input — literals are compiled in or validated upstream.
pub fn bf_from_dec_str(s: &str, prec: usize) -> BigFloat {
    DBig::from_str(s)
        .expect("valid decimal literal")
        .to_binary()
        .value()
        .with_rounding::<HalfEven>()
        .with_precision(prec)
        .value()
}

/// Decimal rendering with the requested number of significant digits.
pub fn bf_to_dec_string(x: &BigFloat, digits: usize) -> String {
    x.to_decimal()
        .value()
        .with_precision(digits)
        .value()
        .to_string()
}

/// Nearest f64 (for seeds and diagnostics).
pub fn bf_to_f64(x: &BigFloat) -> f64 {
    x.to_f64().value()
}

/// |x|.
pub fn bf_abs(x: &BigFloat) -> BigFloat {
    if *x < BigFloat::from(0) {
        -x.clone()
    } else {
        x.clone()
    }
}

/// True exactly for the zero value.
pub fn bf_is_zero(x: &BigFloat) -> bool {
    *x == BigFloat::from(0)
}

/// Bits of agreement between two values: ⌊−log₂|a − b|⌋, saturating at
/// `i64::MAX` for exact equality. Absolute, not relative — callers compare
/// against their own scale.
pub fn agreement_bits(a: &BigFloat, b: &BigFloat) -> i64 {
    let d = bf_abs(&(a.clone() - b.clone()));
    if bf_is_zero(&d) {
        return i64::MAX;
    }
    let l2 = d.ln() / bf_int(2, 32).ln(); // ln 2 at low precision is plenty
    -bf_to_f64(&l2).ceil() as i64
}

/// ⌊log₂|x|⌋ as f64 (−∞ for zero). Read straight off the representation —
/// O(1), safe in per-term termination checks of long summation loops.
pub fn log2_abs(x: &BigFloat) -> f64 {
    let r = x.repr();
    let bits = r.significand().clone().unsigned_abs().bit_len();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    (r.exponent() + bits as isize - 1) as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn conversions_round_trip() {
        let x = bf_from_rat(&ratio(1, 3), 128);
        let s = bf_to_dec_string(&x, 30);
        assert!(s.starts_with("0.3333333333"), "{s}");
        assert!((bf_to_f64(&x) - 1.0 / 3.0).abs() < 1e-15);
        let y = bf_from_dec_str("2.5", 64);
        assert_eq!(y, bf_from_rat(&ratio(5, 2), 64));
    }

    #[test]
    fn agreement_measures_difference() {
        let a = bf_int(1, 256);
        let b = &a + &bf_from_rat(&ratio(1, 1_048_576), 256); // 2^{−20}
        let bits = agreement_bits(&a, &b);
        assert!((19..=21).contains(&bits), "bits = {bits}");
        assert_eq!(agreement_bits(&a, &a), i64::MAX);
    }

    #[test]
    fn abs_and_magnitude() {
        let x = bf_from_rat(&ratio(-3, 4), 64);
        assert_eq!(bf_abs(&x), bf_from_rat(&ratio(3, 4), 64));
        let l = log2_abs(&bf_from_rat(&ratio(1, 1024), 64));
        assert!((l + 10.0).abs() < 1e-9, "{l}");
    }
}
