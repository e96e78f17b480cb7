//! Fundamental constants at arbitrary precision, each computed by two
//! independent algorithms that must agree, and cross-checked against
//! embedded 60-digit reference literals.
//!
//! The literals are validation data only: the returned values always come
//! from the computation, never from the embedded strings.

use super::{bf_from_dec_str, bf_from_rat, bf_int, log2_abs, BigFloat, GUARD};
use crate::scalar::{bernoulli_numbers, Rat};
use dashu_base::SquareRoot;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

/// 60-digit reference for the Euler–Mascheroni constant (cross-check only).
pub const GAMMA_REF: &str = "0.577215664901532860606512090082402431042159335939923598805767";
/// 60-digit reference for π (cross-check only).
pub const PI_REF: &str = "3.14159265358979323846264338327950288419716939937510582097494";
/// 60-digit reference for ln 2 (cross-check only).
pub const LN2_REF: &str = "0.69314718055994530941723212145817656807550013436025525412068";

/// Reference literals carry just under 200 bits; cross-checks cap there.
const REF_BITS: usize = 190;

/// The trio of constants the analysis layer leans on, at a fixed precision.
#[derive(Debug, Clone)]
pub struct ConstantSet {
    pub prec: usize,
    pub gamma: BigFloat,
    pub pi: BigFloat,
    pub ln2: BigFloat,
}

impl ConstantSet {
    /// e^{−γ}, the scale constant of the bulk series coefficients.
    pub fn exp_neg_gamma(&self) -> BigFloat {
        (-self.gamma.clone()).exp()
    }
}

/// ln 2 by the classic binary series Σ 1/(k·2^k) — one bit per term.
pub fn ln2_series(prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let mut acc = BigFloat::from(0).with_precision(wp).value();
    let half = bf_from_rat(&crate::scalar::ratio(1, 2), wp);
    let mut pow = bf_int(1, wp);
    let mut k = 1i64;
    loop {
        pow *= &half;
        let term = &pow / bf_int(k, wp);
        if log2_abs(&term) < -((wp + 8) as f64) {
            break;
        }
        acc += term;
        k += 1;
    }
    acc.with_precision(prec).value()
}

/// ln 2 = 2·artanh(1/3) = 2·Σ 1/((2k+1)·3^{2k+1}) — the independent route.
fn ln2_atanh(prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let third = bf_from_rat(&crate::scalar::ratio(1, 3), wp);
    let ninth = &third * &third;
    let mut acc = BigFloat::from(0).with_precision(wp).value();
    let mut pow = third.clone();
    let mut k = 0i64;
    loop {
        let term = &pow / bf_int(2 * k + 1, wp);
        if log2_abs(&term) < -((wp + 8) as f64) {
            break;
        }
        acc += term;
        pow *= &ninth;
        k += 1;
    }
    (acc * bf_int(2, wp)).with_precision(prec).value()
}

/// γ by Euler–Maclaurin refinement of H_N − ln N: with N = 2^m the remainder
/// after the B_{2k}/(2k·N^{2k}) corrections is dominated by the first omitted
/// term; N is sized so the smallest term (≈ e^{−2πN}) undershoots the target.
/// ln N = m·ln 2 reuses the series route, keeping this path independent of
/// the built-in logarithm.
pub fn gamma_euler_maclaurin(prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let n = ((wp * 12) / 100 + 16).next_power_of_two();
    let m = n.trailing_zeros() as i64;

    let mut h = BigFloat::from(0).with_precision(wp).value();
    for k in 1..=n as i64 {
        h += bf_int(1, wp) / bf_int(k, wp);
    }
    let ln_n = ln2_series(wp) * bf_int(m, wp);
    let mut acc = h - ln_n - bf_int(1, wp) / bf_int(2 * n as i64, wp);

    let nf = bf_int(n as i64, wp);
    let n2 = &nf * &nf;
    let mut pow = n2.clone(); // N^{2k}
    let mut q = 64;
    let mut bern = bernoulli_numbers(q);
    let mut k = 1usize;
    loop {
        if 2 * k >= q {
            q *= 2;
            bern = bernoulli_numbers(q);
        }
        let term = bf_from_rat(&(&bern[2 * k] / Rat::from_integer((2 * k).into())), wp) / &pow;
        let mag = log2_abs(&term);
        if mag < -((wp + 8) as f64) {
            break;
        }
        assert!(
            (2 * k) < 20 * n,
            "asymptotic tail failed to shrink; N sizing bug"
        );
        acc += term;
        pow *= &n2;
        k += 1;
    }
    acc.with_precision(prec).value()
}

/// γ by the Bessel-ratio method: with t_k = (n^k/k!)² and H_k the harmonic
/// numbers, γ = Σ t_k H_k / Σ t_k − ln n + O(e^{−4n}). Uses the built-in
/// logarithm, so it shares nothing with the Euler–Maclaurin route beyond
/// basic arithmetic.
pub fn gamma_bessel_ratio(prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let n = (wp * 1733) / 10000 + 4;
    let nf = bf_int(n as i64, wp);
    let n2 = &nf * &nf;
    let mut t = bf_int(1, wp);
    let mut h = BigFloat::from(0).with_precision(wp).value();
    let mut num = BigFloat::from(0).with_precision(wp).value();
    let mut den = bf_int(1, wp);
    let mut k = 1i64;
    loop {
        t = t * &n2 / (bf_int(k, wp) * bf_int(k, wp));
        h += bf_int(1, wp) / bf_int(k, wp);
        num += &t * &h;
        den += &t;
        // past the peak at k = n, stop once terms are negligible vs the sum
        if k as usize > n && log2_abs(&t) < log2_abs(&den) - (wp + 8) as f64 {
            break;
        }
        k += 1;
    }
    (num / den - nf.ln()).with_precision(prec).value()
}

/// π by the arithmetic–geometric mean (quadratically convergent).
pub fn pi_agm(prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let one = bf_int(1, wp);
    let half = bf_from_rat(&crate::scalar::ratio(1, 2), wp);
    let mut a = one.clone();
    let mut b = (&one / bf_int(2, wp)).sqrt() * bf_int(2, wp) * &half; // 1/√2
    let mut t = bf_from_rat(&crate::scalar::ratio(1, 4), wp);
    let mut p = bf_int(1, wp);
    let iters = (usize::BITS - wp.leading_zeros()) as usize + 3;
    for _ in 0..iters {
        let an = (&a + &b) * &half;
        let bn = (&a * &b).sqrt();
        let d = &a - &an;
        t -= &p * &d * &d;
        p *= bf_int(2, wp);
        a = an;
        b = bn;
    }
    let s = &a + &b;
    (&s * &s / (bf_int(4, wp) * t)).with_precision(prec).value()
}

/// π by Machin's arctangent relation 16·atan(1/5) − 4·atan(1/239):
/// plain Taylor series on rational arguments, fully independent of the AGM.
pub fn pi_machin(prec: usize) -> BigFloat {
    let wp = prec + GUARD;
    let atan_inv = |q: i64| {
        let qf = bf_int(q, wp);
        let q2 = &qf * &qf;
        let mut pow = bf_int(1, wp) / &qf;
        let mut acc = BigFloat::from(0).with_precision(wp).value();
        let mut k = 0i64;
        loop {
            let term = &pow / bf_int(2 * k + 1, wp);
            if log2_abs(&term) < -((wp + 8) as f64) {
                break;
            }
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            pow /= &q2;
            k += 1;
        }
        acc
    };
    (atan_inv(5) * bf_int(16, wp) - atan_inv(239) * bf_int(4, wp))
        .with_precision(prec)
        .value()
}

fn assert_routes_agree(name: &str, a: &BigFloat, b: &BigFloat, prec: usize, reference: &str) {
    let cross = super::agreement_bits(a, b);
    assert!(
        cross >= (prec as i64) - 8,
        "{name}: independent routes disagree ({cross} bits at precision {prec})"
    );
    let ref_bits = REF_BITS.min(prec) as i64;
    let lit = bf_from_dec_str(reference, prec + GUARD);
    let against_ref = super::agreement_bits(a, &lit);
    assert!(
        against_ref >= ref_bits - 8,
        "{name}: computed value disagrees with reference literal ({against_ref} bits)"
    );
}

/// Compute γ, π and ln 2 at the requested precision with full dual-route and
/// reference-literal validation. Panics loudly if any cross-check fails —
/// a wrong constant would poison every downstream result.
pub fn constants(prec: usize) -> ConstantSet {
    assert!(prec <= 4096, "precision capped at 4096 bits");
    assert!(prec >= 32, "precision below 32 bits is not supported");
    let gamma = gamma_euler_maclaurin(prec);
    let gamma2 = gamma_bessel_ratio(prec);
    assert_routes_agree("gamma", &gamma, &gamma2, prec, GAMMA_REF);
    let pi = pi_agm(prec);
    let pi2 = pi_machin(prec);
    assert_routes_agree("pi", &pi, &pi2, prec, PI_REF);
    let ln2 = ln2_series(prec);
    let ln2b = ln2_atanh(prec);
    assert_routes_agree("ln2", &ln2, &ln2b, prec, LN2_REF);
    ConstantSet {
        prec,
        gamma,
        pi,
        ln2,
    }
}

/// Cached constants, validated once per precision per process.
pub fn cached_constants(prec: usize) -> ConstantSet {
    static CACHE: OnceLock<Mutex<HashMap<usize, ConstantSet>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("constants cache poisoned");
    guard.entry(prec).or_insert_with(|| constants(prec)).clone()
}
