//! Special functions: the exponential integral Ei, the logarithmic integral
//! li, the root μ of li, and the principal branch of the Lambert W function.

use super::consts::cached_constants;
use super::{
    bf_abs, bf_from_dec_str, bf_int, bf_is_zero, bf_to_f64, log2_abs, BigFloat, NumError, Result,
    GUARD,
};

/// Ei(x) = γ + ln|x| + Σ_{k≥1} x^k/(k·k!), with ≈|x|·log₂e cancellation
/// guard bits for negative arguments. Once that guard would exceed the
/// requested precision itself, the asymptotic expansion e^x/x·Σ k!/xᵏ at
/// optimal truncation takes over: its absolute error ~e^{−2|x|} is then
/// below 2^{−2·prec}, tighter than the series could deliver.
pub fn ei(x: &BigFloat, prec: usize) -> Result<BigFloat> {
    if bf_is_zero(x) {
        return Err(NumError::Pole);
    }
    let xf = bf_to_f64(x);
    if xf < 0.0 && std::f64::consts::LOG2_E * xf.abs() > (prec + GUARD) as f64 {
        Ok(ei_asymptotic(x, prec))
    } else {
        Ok(ei_series(x, prec))
    }
}

fn ei_series(x: &BigFloat, prec: usize) -> BigFloat {
    let xf = bf_to_f64(x);
    let cancel = if xf < 0.0 {
        (std::f64::consts::LOG2_E * xf.abs()).ceil() as usize + 8
    } else {
        0
    };
    let wp = prec + GUARD + cancel;
    let c = cached_constants(wp);
    let xw = x.clone().with_precision(wp).value();
    let mut p = bf_int(1, wp); // x^k/k!
    let mut acc = c.gamma.clone() + bf_abs(&xw).ln();
    let mut k = 1i64;
    loop {
        p = p * &xw / bf_int(k, wp);
        let term = &p / bf_int(k, wp);
        if k as f64 > xf.abs() && log2_abs(&term) < -((wp + 8) as f64) {
            break;
        }
        acc += term;
        k += 1;
    }
    acc.with_precision(prec).value()
}

fn ei_asymptotic(x: &BigFloat, prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let xw = x.clone().with_precision(wp).value();
    let mut term = bf_int(1, wp); // k!/x^k
    let mut acc = bf_int(1, wp);
    let mut prev_mag = f64::INFINITY;
    let mut k = 1i64;
    loop {
        term = term * bf_int(k, wp) / &xw;
        let mag = log2_abs(&term);
        // optimal truncation: stop as soon as terms stop shrinking
        if mag >= prev_mag || mag < -((wp + 8) as f64) {
            break;
        }
        acc += &term;
        prev_mag = mag;
        k += 1;
    }
    (xw.clone().exp() / xw * acc).with_precision(prec).value()
}

/// li(x) = Ei(ln x) for x > 0; x = 1 is the logarithmic pole.
pub fn li(x: &BigFloat, prec: usize) -> Result<BigFloat> {
    if *x <= BigFloat::from(0) {
        return Err(NumError::Branch);
    }
    let wp = prec + GUARD;
    let l = x.clone().with_precision(wp).value().ln();
    if bf_is_zero(&l) {
        return Err(NumError::Pole);
    }
    ei(&l, prec)
}

/// The unique real zero μ ≈ 1.451369… of li: certified sign change over
/// [1.4, 1.5], a few bisection steps, then Newton x ← x − li(x)·ln x
/// (since li′(x) = 1/ln x). The residual |li(μ̂)| is asserted below
/// 2^{−prec+16}.
pub fn mu_root(prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let mut lo = bf_from_dec_str("1.4", wp);
    let mut hi = bf_from_dec_str("1.5", wp);
    let sign = |v: &BigFloat| *v > BigFloat::from(0);
    let li_wp = |v: &BigFloat| li(v, wp).expect("argument stays inside (1, 2)");
    assert!(!sign(&li_wp(&lo)), "li(1.4) must be negative");
    assert!(sign(&li_wp(&hi)), "li(1.5) must be positive");
    let half = bf_from_dec_str("0.5", wp);
    for _ in 0..8 {
        let mid = (&lo + &hi) * &half;
        if sign(&li_wp(&mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut x = (&lo + &hi) * &half;
    for _ in 0..64 {
        let step = li_wp(&x) * x.clone().ln();
        x -= &step;
        if log2_abs(&step) < -((prec + 16) as f64) {
            break;
        }
    }
    let residual = li_wp(&x);
    assert!(
        log2_abs(&residual) < -((prec as f64) - 16.0),
        "root residual too large: 2^{}",
        log2_abs(&residual)
    );
    x.with_precision(prec).value()
}

/// Principal-branch Lambert W: the solution of w·e^w = x for x > −1/e.
/// Seeded in f64 (with the square-root expansion near the branch point),
/// then Newton-iterated at full precision; the defining residual is
/// enforced before returning.
pub fn lambert_w(x: &BigFloat, prec: usize) -> Result<BigFloat> {
    let wp = prec + GUARD;
    let xw = x.clone().with_precision(wp).value();
    let neg_inv_e = -(-bf_int(1, wp)).exp();
    if xw <= neg_inv_e {
        return Err(NumError::Branch);
    }
    if bf_is_zero(&xw) {
        return Ok(BigFloat::from(0).with_precision(prec).value());
    }

    let xf = bf_to_f64(&xw);
    let mut wf = if xf < -0.25 {
        // branch-point expansion in p = √(2(ex+1))
        let p = (2.0 * (std::f64::consts::E * xf + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0
    } else if xf < 2.0 {
        xf / (1.0 + xf)
    } else {
        xf.ln() - xf.ln().ln().max(0.0)
    };
    for _ in 0..64 {
        let e = wf.exp();
        let f = wf * e - xf;
        let d = e * (1.0 + wf);
        if d.abs() < 1e-300 {
            break;
        }
        let step = f / d;
        wf -= step;
        if step.abs() < 1e-14 * (wf.abs() + 1e-14) {
            break;
        }
    }

    let mut w = BigFloat::try_from(wf)
        .expect("finite seed")
        .with_precision(wp)
        .value();
    for _ in 0..200 {
        let ew = w.clone().exp();
        let f = &w * &ew - &xw;
        let d = ew * (bf_int(1, wp) + &w);
        let step = f / d;
        w -= &step;
        if log2_abs(&step) < log2_abs(&w).max(0.0) - ((wp - 8) as f64) {
            break;
        }
    }
    let residual = &w * w.clone().exp() - &xw;
    let scale = log2_abs(&xw).max(0.0);
    assert!(
        log2_abs(&residual) < scale - ((prec as f64) - 16.0),
        "Lambert W residual too large: 2^{}",
        log2_abs(&residual)
    );
    Ok(w.with_precision(prec).value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::agreement_bits;

    fn lit(s: &str) -> BigFloat {
        bf_from_dec_str(s, 320)
    }

    #[test]
    fn ei_at_unit_arguments() {
        let e1 = ei(&bf_int(1, 288), 256).unwrap();
        assert!(
            agreement_bits(
                &e1,
                &lit("1.89511781635593675546652093433163426901706058173270759164623")
            ) >= 180
        );
        let em1 = ei(&bf_int(-1, 288), 256).unwrap();
        assert!(
            agreement_bits(
                &em1,
                &lit("-0.219383934395520273677163775460121649031047293406908207577979")
            ) >= 180
        );
        assert!(matches!(ei(&BigFloat::from(0), 128), Err(NumError::Pole)));
    }

    #[test]
    fn ei_asymptotic_magnitude_and_sign_behavior() {
        // Ei(−50) ≈ −e^{−50}/50·(1 + 1/50 + …): leading magnitude check
        let v = ei(&bf_int(-50, 288), 256).unwrap();
        let lead = -(-bf_int(50, 288)).exp() / bf_int(50, 288);
        let ratio = bf_to_f64(&(&v / &lead));
        assert!((ratio - 1.0).abs() < 0.05, "ratio = {ratio}");
        // −Ei(−x) positive and decreasing
        let a = -bf_to_f64(&ei(&bf_int(-2, 288), 128).unwrap());
        let b = -bf_to_f64(&ei(&bf_int(-3, 288), 128).unwrap());
        assert!(a > b && b > 0.0);
    }

    #[test]
    fn ei_series_asymptotic_cross_check() {
        // at x = −50 both routes are callable directly; the asymptotic
        // truncation error ~e^{−2|x|} against a value ~e^{−|x|} leaves
        // about |x|·log₂e ≈ 72 agreeing bits relative to the value
        let x = bf_int(-50, 320);
        let s = super::ei_series(&x, 288);
        let a = super::ei_asymptotic(&x, 288);
        let rel = agreement_bits(&s, &a) as f64 + log2_abs(&s);
        assert!(rel >= 60.0, "relative agreement only {rel} bits");
    }

    #[test]
    fn li_of_two() {
        let v = li(&bf_int(2, 288), 256).unwrap();
        assert!(
            agreement_bits(
                &v,
                &lit("1.04516378011749278484458888919461313652261557815120157583291")
            ) >= 180
        );
        assert!(matches!(li(&bf_int(1, 128), 128), Err(NumError::Pole)));
        assert!(matches!(li(&bf_int(-3, 128), 128), Err(NumError::Branch)));
    }

    #[test]
    fn soldner_point_is_the_li_root() {
        let mu = mu_root(256);
        assert!(
            agreement_bits(
                &mu,
                &lit("1.451369234883381050283968485892027449493032283648015863093")
            ) >= 180
        );
        let lnmu = mu.clone().ln();
        assert!(
            agreement_bits(
                &lnmu,
                &lit("0.372507410781366634461991866580119133535689497771654051555657")
            ) >= 180
        );
        // Ei(ln μ) = li(μ) = 0 within tolerance
        let r = ei(&lnmu, 256).unwrap();
        assert!(log2_abs(&r) < -200.0, "Ei(ln μ) = 2^{}", log2_abs(&r));
    }

    #[test]
    fn lambert_w_fixed_points() {
        assert!(lambert_w(&BigFloat::from(0), 128)
            .unwrap()
            .eq(&BigFloat::from(0)));
        let e = bf_int(1, 288).exp();
        let w_e = lambert_w(&e, 256).unwrap();
        assert!(agreement_bits(&w_e, &bf_int(1, 288)) >= 240);
        let w1 = lambert_w(&bf_int(1, 288), 256).unwrap();
        assert!(
            agreement_bits(
                &w1,
                &lit("0.567143290409783872999968662210355549753815787186512508135131")
            ) >= 180
        );
    }

    #[test]
    fn lambert_w_near_branch_point() {
        let wp = 320;
        let x = -(-bf_int(1, wp)).exp() + bf_from_dec_str("1e-10", wp);
        let w = lambert_w(&x, 256).unwrap();
        let wf = bf_to_f64(&w);
        assert!(wf > -1.0 && wf < -0.999, "w = {wf}");
        assert!(matches!(
            lambert_w(&bf_int(-1, 128), 128),
            Err(NumError::Branch)
        ));
    }
}
