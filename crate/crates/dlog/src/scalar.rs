//! Exact scalar arithmetic: arbitrary-precision rationals, the coefficient
//! ring abstraction, and combinatorial helpers (factorials, binomial
//! coefficients, Bernoulli numbers).
//!
//! `Rat` (a re-export of `num-rational`'s big rational) upholds the scalar
//! invariants relied on everywhere else: always reduced to lowest terms,
//! denominator > 0, zero represented as 0/1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Exact rational scalar used as the coefficient field throughout.
pub type Rat = BigRational;

/// Integer as an exact rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational (reduced, sign moved to the numerator).
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Error raised when a rational literal cannot be parsed.
#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\")")]
pub struct ParseRatError(pub String);

/// Parse `"p"` or `"p/q"` with optional sign, e.g. `"-31/18"`.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let bad = || ParseRatError(s.to_string());
    match s.split_once('/') {
        None => BigInt::from_str(s.trim())
            .map(Rat::from_integer)
            .map_err(|_| bad()),
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Render as `"p"` or `"p/q"` (the same format `parse_rat` accepts).
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Integer binomial coefficient C(n, k); zero when k > n.
pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Generalized binomial coefficient `r(r−1)…(r−k+1)/k!` for rational top.
pub fn gen_binomial(r: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k {
        acc *= r - rat(j as i64);
    }
    acc / Rat::from_integer(factorial(k))
}

/// Bernoulli numbers B_0..B_q in the B_1 = −1/2 convention (the expansion of
/// t/(e^t−1)), by the standard recurrence Σ_{j≤m} C(m+1,j) B_j = 0.
///
/// Used as the independent oracle for the series-expansion route in
/// [`crate::series::bernoulli_poly`].
pub fn bernoulli_numbers(q: usize) -> Vec<Rat> {
    let mut b = Vec::with_capacity(q + 1);
    b.push(Rat::one());
    for m in 1..=q {
        let mut s = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            s += Rat::from_integer(binom(m + 1, j)) * bj;
        }
        b.push(-s / Rat::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// The coefficient rings the series engine is generic over: exact rationals
/// and dense polynomials over them (including one nesting level for
/// two-variable identities). A ℚ-algebra with partial inversion.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
    /// Embed an exact rational.
    fn from_rat(r: &Rat) -> Self;

    /// Multiplicative inverse when the element is a unit, else `None`.
    fn inv(&self) -> Option<Self>;

    /// Multiply by a rational scalar (ℚ-module action).
    fn scale_rat(&self, r: &Rat) -> Self;
}

impl Ring for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn scale_rat(&self, r: &Rat) -> Self {
        self * r
    }
}

/// True if `r` is a nonnegative integer.
pub fn is_nonneg_int(r: &Rat) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}

/// `r` as i64 if it is an integer in range.
pub fn as_i64(r: &Rat) -> Option<i64> {
    if r.denom().is_one() {
        i64::try_from(r.numer().clone()).ok()
    } else {
        None
    }
}
