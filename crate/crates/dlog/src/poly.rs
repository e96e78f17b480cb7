//! Dense univariate polynomials over an arbitrary coefficient ring.
//!
//! Invariant: the coefficient vector carries no trailing zeros, so the zero
//! polynomial is the empty vector and `degree()` is `len − 1` otherwise. The
//! value carries no variable name — a name is chosen only when formatting.
//!
//! Nesting gives two-variable polynomials: `Poly<Poly<Rat>>` with the outer
//! variable conventionally α and the inner β.

use crate::scalar::{fmt_rat, Rat, Ring};
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomials in one variable over the coefficient field of rationals.
pub type AlphaPoly = Poly<Rat>;

/// Dense polynomial: `coeffs[i]` multiplies the i-th power of the variable.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    /// Build from coefficients (low degree first), trimming trailing zeros.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    /// `None` for the zero polynomial, `Some(deg)` otherwise.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the i-th power (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficients, low degree first (no trailing zeros).
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Horner evaluation at a point of any ring containing the coefficients
    /// through `map`.
    pub fn eval_map<S: Ring>(&self, at: &S, map: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + map(c);
        }
        acc
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, at: &R) -> R {
        self.eval_map(at, |c| c.clone())
    }

    /// Formal derivative with respect to the polynomial variable.
    pub fn derivative(&self) -> Self {
        let d: Vec<R> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale_rat(&crate::scalar::rat(i as i64)))
            .collect();
        Poly::new(d)
    }

    /// Substitute `g` for the variable.
    pub fn compose(&self, g: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * g.clone() + Poly::constant(c.clone());
        }
        acc
    }

    /// Shift the variable: `p(x + c)`.
    pub fn shift(&self, c: &R) -> Poly<R> {
        self.compose(&Poly::new(vec![c.clone(), R::one()]))
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale(&self, s: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Exact division by the monic linear factor `x − root`; `None` if the
    /// remainder is nonzero.
    pub fn div_exact_linear(&self, root: &R) -> Option<Poly<R>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let mut q = vec![R::zero(); self.coeffs.len() - 1];
        let mut carry = R::zero();
        for i in (0..self.coeffs.len()).rev() {
            let cur = self.coeffs[i].clone() + carry.clone() * root.clone();
            if i == 0 {
                if !cur.is_zero() {
                    return None;
                }
            } else {
                q[i - 1] = cur.clone();
                carry = cur;
            }
        }
        Some(Poly::new(q))
    }

    /// Exact division by the variable; `None` if the constant term is nonzero.
    pub fn div_exact_x(&self) -> Option<Poly<R>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return None;
        }
        Some(Poly::new(self.coeffs[1..].to_vec()))
    }

    /// Small integer power by repeated multiplication.
    pub fn pow(&self, n: usize) -> Poly<R> {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

impl AlphaPoly {
    /// Format with the given variable name, e.g. `α^2 - 3/2·α + 1`.
    pub fn fmt_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = fmt_rat(&c.clone().abs());
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
                let sign = if c < &Rat::zero() { "-" } else { "" };
                parts.push(format!("{sign}{body}"));
            } else {
                let sign = if c < &Rat::zero() { "-" } else { "+" };
                parts.push(format!(" {sign} {body}"));
            }
        }
        parts.concat()
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;

    fn add(self, rhs: Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;

    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_rat(r: &Rat) -> Self {
        Poly::constant(R::from_rat(r))
    }

    fn inv(&self) -> Option<Self> {
        // only degree-0 units invert inside the polynomial ring
        match self.degree() {
            Some(0) => self.coeffs[0].inv().map(Poly::constant),
            _ => None,
        }
    }

    fn scale_rat(&self, r: &Rat) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.scale_rat(r)).collect())
    }
}

/// Generalized binomial coefficient with the top in an arbitrary ring:
/// `top (top−1) ⋯ (top−k+1) / k!`.
pub fn gen_binomial_ring<R: Ring>(top: &R, k: usize) -> R {
    let mut acc = R::one();
    for j in 0..k {
        acc = acc * (top.clone() - R::from_rat(&crate::scalar::rat(j as i64)));
    }
    acc.scale_rat(&Rat::new(1.into(), crate::scalar::factorial(k)))
}
