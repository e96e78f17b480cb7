//! Truncated formal power series with exact coefficients.
//!
//! A series carries an explicit truncation order `N` and exactly `N + 1`
//! coefficients; every operation states how it propagates the order. Binary
//! operations require both operands at the same order and panic otherwise —
//! an order mismatch is a programming error, not a data condition. Domain
//! violations (dividing by a non-unit, exp of a series with constant term,
//! …) are reported through [`SeriesError`].
//!
//! Coefficients live in any [`Ring`]: exact rationals for ordinary series,
//! polynomials over them for series whose coefficients carry a free
//! parameter.

use crate::poly::gen_binomial_ring;
use crate::scalar::{rat, ratio, Rat, Ring};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Domain error from a series operation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("division requires an invertible constant term")]
    NonUnitConstant,
    #[error("composition requires the inner series to vanish at the origin")]
    InnerNotZero,
    #[error("exp is defined only for series with zero constant term")]
    ExpConstantNotZero,
    #[error("log is defined only for series with constant term 1")]
    LogConstantNotOne,
    #[error("compositional inverse requires f(0) = 0 and an invertible linear term")]
    NotInvertible,
}

pub type Result<T> = std::result::Result<T, SeriesError>;

/// Power series truncated at a fixed order: coefficients of x^0 … x^N.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<R: Ring> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Build from explicit coefficients; `coeffs.len()` must be `order + 1`.
    pub fn new(order: usize, coeffs: Vec<R>) -> Self {
        assert_eq!(coeffs.len(), order + 1, "series needs order+1 coefficients");
        TruncSeries { order, coeffs }
    }

    /// Coefficients produced by a rule, n = 0..=order.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncSeries::new(order, (0..=order).map(f).collect())
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        TruncSeries::from_fn(order, |_| R::zero())
    }

    /// The constant-one series at the given order.
    pub fn one(order: usize) -> Self {
        TruncSeries::from_fn(order, |n| if n == 0 { R::one() } else { R::zero() })
    }

    /// The identity series x at the given order (order ≥ 1).
    pub fn x(order: usize) -> Self {
        assert!(order >= 1, "x needs order >= 1");
        TruncSeries::from_fn(order, |n| if n == 1 { R::one() } else { R::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of x^n; panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> R {
        assert!(
            n <= self.order,
            "coefficient {n} beyond order {}",
            self.order
        );
        self.coeffs[n].clone()
    }

    /// All retained coefficients, constant term first.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Drop coefficients above `order` (which must not exceed the current one).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot truncate upward");
        TruncSeries::new(order, self.coeffs[..=order].to_vec())
    }

    /// Extend with zero coefficients up to `order`. Only sound when the
    /// appended coefficients are genuinely zero or provably irrelevant to the
    /// consumer; callers own that argument.
    pub fn pad_zero(&self, order: usize) -> Self {
        assert!(order >= self.order);
        let mut c = self.coeffs.clone();
        c.resize(order + 1, R::zero());
        TruncSeries::new(order, c)
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale(&self, s: &R) -> Self {
        TruncSeries::new(
            self.order,
            self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        )
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale_rat(&self, s: &Rat) -> Self {
        TruncSeries::new(
            self.order,
            self.coeffs.iter().map(|c| c.scale_rat(s)).collect(),
        )
    }

    /// Map coefficients into another ring (used to lift ℚ-series into
    /// parameter-carrying coefficient rings).
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries::new(self.order, self.coeffs.iter().map(f).collect())
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        assert!(self.order >= 1, "cannot differentiate an order-0 series");
        TruncSeries::new(
            self.order - 1,
            (1..=self.order)
                .map(|n| self.coeffs[n].scale_rat(&rat(n as i64)))
                .collect(),
        )
    }

    /// Termwise antiderivative vanishing at 0; the order rises by one.
    pub fn integrate(&self) -> Self {
        let mut out = Vec::with_capacity(self.order + 2);
        out.push(R::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push(c.scale_rat(&ratio(1, (n + 1) as i64)));
        }
        TruncSeries::new(self.order + 1, out)
    }

    /// Multiply by x; the order rises by one.
    pub fn mul_x(&self) -> Self {
        let mut out = Vec::with_capacity(self.order + 2);
        out.push(R::zero());
        out.extend(self.coeffs.iter().cloned());
        TruncSeries::new(self.order + 1, out)
    }

    /// Divide by x (requires a vanishing constant term); the order drops by
    /// one.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::InnerNotZero);
        }
        assert!(self.order >= 1, "cannot shift an order-0 series down");
        TruncSeries::new(self.order - 1, self.coeffs[1..].to_vec()).pipe_ok()
    }

    fn pipe_ok(self) -> Result<Self> {
        Ok(self)
    }

    /// Quotient of equal-order series; the divisor needs a unit constant
    /// term. Coefficients follow the standard back-substitution recurrence.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.order, rhs.order, "order mismatch in div");
        let g0_inv = rhs.coeffs[0].inv().ok_or(SeriesError::NonUnitConstant)?;
        let mut h: Vec<R> = Vec::with_capacity(self.order + 1);
        for n in 0..=self.order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc = acc - rhs.coeffs[k].clone() * h[n - k].clone();
            }
            h.push(acc * g0_inv.clone());
        }
        Ok(TruncSeries::new(self.order, h))
    }

    /// Multiplicative inverse 1/f (unit constant term required).
    pub fn inv(&self) -> Result<Self> {
        TruncSeries::one(self.order).div(self)
    }

    /// Substitute `g` (with g(0) = 0) for the variable; orders must match.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        assert_eq!(self.order, g.order, "order mismatch in compose");
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::InnerNotZero);
        }
        let mut acc = TruncSeries::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc * g.clone();
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion: with f = x·v and
    /// u = 1/v, the n-th coefficient of the inverse is the (n−1)-st of uⁿ/n.
    /// Requires f(0) = 0 and a unit linear coefficient.
    pub fn comp_inverse(&self) -> Result<Self> {
        if self.order == 0 || !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let v = self.div_x().expect("constant term checked above");
        if v.coeffs[0].inv().is_none() {
            return Err(SeriesError::NotInvertible);
        }
        let u = v.inv()?;
        let mut g = vec![R::zero(); self.order + 1];
        let mut w = u.clone(); // w = u^n while filling g_n
        #[allow(clippy::needless_range_loop)]
        for n in 1..=self.order {
            g[n] = w.coeff(n - 1).scale_rat(&ratio(1, n as i64));
            if n < self.order {
                w = w * u.clone();
            }
        }
        Ok(TruncSeries::new(self.order, g))
    }

    /// Compositional inverse by Newton iteration on f(g) = x — an
    /// independent route kept alongside [`Self::comp_inverse`] so the two can
    /// cross-check each other.
    ///
    /// The derivative f′ is only known to order N−1; padding its top
    /// coefficient with zero is harmless because the correction term has a
    /// vanishing constant term, so the padded coefficient never reaches the
    /// coefficients being updated.
    pub fn comp_inverse_newton(&self) -> Result<Self> {
        if self.order == 0 || !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let f1_inv = self.coeffs[1].inv().ok_or(SeriesError::NotInvertible)?;
        let n = self.order;
        let fp = self.derivative().pad_zero(n);
        let x = TruncSeries::x(n);
        let mut g = x.scale(&f1_inv);
        for _ in 0..64 {
            let err = self.compose(&g)? - x.clone();
            if err.coeffs.iter().all(|c| c.is_zero()) {
                return Ok(g);
            }
            let step = err.div(&fp.compose(&g)?)?;
            g = g - step;
        }
        // convergence is quadratic; 64 rounds exceed any representable order
        unreachable!("Newton iteration failed to converge");
    }

    /// Exponential of a series with zero constant term, via the recurrence
    /// n·Eₙ = Σ k·fₖ·Eₙ₋ₖ obtained from E′ = f′E.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpConstantNotZero);
        }
        let mut e: Vec<R> = Vec::with_capacity(self.order + 1);
        e.push(R::one());
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].scale_rat(&rat(k as i64)) * e[n - k].clone();
            }
            e.push(acc.scale_rat(&ratio(1, n as i64)));
        }
        Ok(TruncSeries::new(self.order, e))
    }

    /// Logarithm of a series with constant term 1, as ∫ f′/f. The result
    /// keeps the full order: its n-th coefficient only needs f up to n.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantNotOne);
        }
        if self.order == 0 {
            return Ok(TruncSeries::zero(0));
        }
        let num = self.derivative();
        let den = self.truncate(self.order - 1);
        Ok(num.div(&den)?.integrate())
    }

    /// Raise a series with constant term 1 to an arbitrary ring exponent:
    /// f^e = exp(e·log f).
    pub fn pow_scalar(&self, e: &R) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// Evaluate the truncated polynomial at a rational point (no tail bound —
    /// plain Horner on the retained coefficients).
    pub fn eval_poly(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }
}

impl<R: Ring> Add for TruncSeries<R> {
    type Output = TruncSeries<R>;

    fn add(self, rhs: TruncSeries<R>) -> TruncSeries<R> {
        assert_eq!(self.order, rhs.order, "order mismatch in add");
        TruncSeries::new(
            self.order,
            self.coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl<R: Ring> Sub for TruncSeries<R> {
    type Output = TruncSeries<R>;

    fn sub(self, rhs: TruncSeries<R>) -> TruncSeries<R> {
        assert_eq!(self.order, rhs.order, "order mismatch in sub");
        TruncSeries::new(
            self.order,
            self.coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl<R: Ring> Neg for TruncSeries<R> {
    type Output = TruncSeries<R>;

    fn neg(self) -> TruncSeries<R> {
        TruncSeries::new(self.order, self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Ring> Mul for TruncSeries<R> {
    type Output = TruncSeries<R>;

    fn mul(self, rhs: TruncSeries<R>) -> TruncSeries<R> {
        assert_eq!(self.order, rhs.order, "order mismatch in mul");
        let mut out = vec![R::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(self.order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries::new(self.order, out)
    }
}

impl fmt::Display for TruncSeries<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with_var("x"))
    }
}

impl TruncSeries<Rat> {
    /// Human-readable rendering with an explicit tail marker.
    pub fn fmt_with_var(&self, var: &str) -> String {
        use num_traits::Signed;
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = crate::scalar::fmt_rat(&c.abs());
            let body = match i {
                0 => mag,
                _ => {
                    let xp = if i == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{i}")
                    };
                    if mag == "1" {
                        xp
                    } else {
                        format!("{mag}·{xp}")
                    }
                }
            };
            if parts.is_empty() {
                let sign = if c.is_negative() { "-" } else { "" };
                parts.push(format!("{sign}{body}"));
            } else {
                let sign = if c.is_negative() { "-" } else { "+" };
                parts.push(format!(" {sign} {body}"));
            }
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        format!("{} + O({var}^{})", parts.concat(), self.order + 1)
    }
}

/// Bernoulli polynomial value B_q(x) from the exponential generating
/// function: B_q(x) = q!·[t^q] e^{xt} / ((e^t − 1)/t), computed with exact
/// rationals. The numeric recurrence route in
/// [`crate::scalar::bernoulli_numbers`] serves as its oracle.
pub fn bernoulli_poly(q: usize, x: &Rat) -> Rat {
    let ext = TruncSeries::from_fn(q, |n| {
        // e^{xt}: x^n/n!
        let mut p = Rat::one();
        for j in 0..n {
            p = p * x / rat((j + 1) as i64);
        }
        p
    });
    let egt = TruncSeries::from_fn(q, |n| {
        // (e^t − 1)/t: 1/(n+1)!
        Rat::new(1.into(), crate::scalar::factorial(n + 1))
    });
    let series = ext.div(&egt).expect("unit constant term");
    series.coeff(q) * Rat::from_integer(crate::scalar::factorial(q))
}

/// Coefficients of (1 + x)^r for rational r: the generalized binomial series.
pub fn binomial_series(order: usize, r: &Rat) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| crate::scalar::gen_binomial(r, n))
}

/// Generic-exponent binomial series over any coefficient ring.
pub fn binomial_series_ring<R: Ring>(order: usize, top: &R) -> TruncSeries<R> {
    TruncSeries::from_fn(order, |n| gen_binomial_ring(top, n))
}
