//! Closed-form seed series used across the crate: classical functions
//! truncated at a requested order, with exact rational coefficients.
//!
//! Everything here is normalized (zero constant term, unit linear term)
//! unless the name says otherwise, so the seeds can feed the operator
//! calculus directly.

use crate::scalar::{factorial, rat, ratio, Rat};
use crate::series::TruncSeries;
use num_traits::{One, Zero};

fn inv_factorial(n: usize) -> Rat {
    Rat::new(1.into(), factorial(n))
}

/// The identity series x.
pub fn x(order: usize) -> TruncSeries<Rat> {
    TruncSeries::x(order)
}

/// e^x − 1.
pub fn expm1(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            inv_factorial(n)
        }
    })
}

/// (e^{px} − 1)/p for rational p, with the p = 0 limit x.
pub fn expm1_scaled(p: &Rat, order: usize) -> TruncSeries<Rat> {
    if p.is_zero() {
        return x(order);
    }
    TruncSeries::from_fn(order, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            // p^{n−1}/n!
            let mut c = inv_factorial(n);
            for _ in 1..n {
                c *= p;
            }
            c
        }
    })
}

/// 1 − e^{−x}.
pub fn one_minus_exp_neg(order: usize) -> TruncSeries<Rat> {
    expm1_scaled(&rat(-1), order)
}

/// x·e^{−x}.
pub fn x_exp_neg(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            inv_factorial(n - 1) * rat(sign)
        }
    })
}

/// ln(1 + x).
pub fn log1p(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| {
        if n == 0 {
            Rat::zero()
        } else {
            ratio(if n % 2 == 1 { 1 } else { -1 }, n as i64)
        }
    })
}

/// x/(1 − x).
pub fn geometric(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| if n == 0 { Rat::zero() } else { Rat::one() })
}

/// sin x.
pub fn sin(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| {
        if n % 2 == 0 {
            Rat::zero()
        } else {
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            inv_factorial(n) * rat(sign)
        }
    })
}

fn cos(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| {
        if n % 2 == 1 {
            Rat::zero()
        } else {
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            inv_factorial(n) * rat(sign)
        }
    })
}

/// sinh x.
pub fn sinh(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| {
        if n % 2 == 1 {
            inv_factorial(n)
        } else {
            Rat::zero()
        }
    })
}

fn cosh(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| {
        if n % 2 == 0 {
            inv_factorial(n)
        } else {
            Rat::zero()
        }
    })
}

/// tan x = sin x / cos x.
pub fn tan(order: usize) -> TruncSeries<Rat> {
    sin(order)
        .div(&cos(order))
        .expect("cos has unit constant term")
}

/// tanh x = sinh x / cosh x.
pub fn tanh(order: usize) -> TruncSeries<Rat> {
    sinh(order)
        .div(&cosh(order))
        .expect("cosh has unit constant term")
}

/// Look up a seed by its command-line name.
pub fn by_name(name: &str, order: usize) -> Option<TruncSeries<Rat>> {
    Some(match name {
        "x" => x(order),
        "expm1" => expm1(order),
        "one-minus-exp-neg" => one_minus_exp_neg(order),
        "x-exp-neg" => x_exp_neg(order),
        "log1p" => log1p(order),
        "geometric" => geometric(order),
        "sin" => sin(order),
        "sinh" => sinh(order),
        "tan" => tan(order),
        "tanh" => tanh(order),
        _ => return None,
    })
}

/// The names `by_name` accepts, for help text.
pub const NAMES: &[&str] = &[
    "x",
    "expm1",
    "one-minus-exp-neg",
    "x-exp-neg",
    "log1p",
    "geometric",
    "sin",
    "sinh",
    "tan",
    "tanh",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tangent_coefficients() {
        let t = tan(7);
        assert_eq!(t.coeff(1), rat(1));
        assert_eq!(t.coeff(3), ratio(1, 3));
        assert_eq!(t.coeff(5), ratio(2, 15));
        assert_eq!(t.coeff(7), ratio(17, 315));
        let th = tanh(7);
        assert_eq!(th.coeff(3), ratio(-1, 3));
        assert_eq!(th.coeff(7), ratio(-17, 315));
    }

    #[test]
    fn pythagorean_identity() {
        let n = 10;
        let s2 = sin(n).clone() * sin(n);
        let c2 = cos(n).clone() * cos(n);
        assert_eq!(s2 + c2, TruncSeries::one(n));
    }

    #[test]
    fn scaled_exp_family() {
        let n = 6;
        assert_eq!(expm1_scaled(&rat(1), n), expm1(n));
        assert_eq!(expm1_scaled(&rat(0), n), x(n));
        // (e^{2x}−1)/2: coefficient of x^n is 2^{n−1}/n!
        let f = expm1_scaled(&rat(2), n);
        assert_eq!(f.coeff(3), ratio(4, 6));
        // consistency with the exp primitive
        let direct = (TruncSeries::x(n).scale_rat(&rat(2)).exp().unwrap() - TruncSeries::one(n))
            .scale_rat(&ratio(1, 2));
        assert_eq!(f, direct);
    }

    #[test]
    fn catalog_lookup_round_trip() {
        for name in NAMES {
            let s = by_name(name, 8).unwrap();
            assert_eq!(s.order(), 8);
            assert_eq!(s.coeff(0), rat(0));
            assert_eq!(s.coeff(1), rat(1), "{name} should be normalized");
        }
        assert!(by_name("nope", 4).is_none());
    }
}
