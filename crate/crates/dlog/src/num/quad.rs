//! Tanh–sinh (double-exponential) quadrature on finite intervals, plus a
//! half-line wrapper that maps the tail onto (0, 1).
//!
//! The substitution x = mid + half·tanh((π/2)·sinh t) pushes endpoint
//! singularities of integrable type to doubly-exponentially small weights, so
//! endpoint-singular integrands (logs, fractional powers) converge at the
//! same geometric rate as smooth ones. Levels halve the step h; convergence
//! is declared when two successive levels agree within the target, and the
//! heuristic error estimate is the last inter-level difference.

use super::consts::cached_constants;
use super::{bf_int, bf_is_zero, bf_to_f64, log2_abs, BigFloat, NumError, Result, GUARD};

/// Outcome of a converged quadrature: the value and a (heuristic) bound
/// log₂ of the last inter-level difference.
#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: BigFloat,
    pub est_log2: i64,
}

const MAX_LEVEL: u32 = 12;

fn exp_pair(t: &BigFloat) -> (BigFloat, BigFloat) {
    let e = t.clone().exp();
    let ei = bf_int(1, e.precision().max(32)) / &e;
    let half = bf_int(1, t.precision().max(32)) / bf_int(2, 32);
    let sinh = (&e - &ei) * &half;
    let cosh = (e + ei) * half;
    (sinh, cosh)
}

/// ∫_a^b f(x) dx by tanh–sinh. The integrand receives points strictly
/// inside (a, b) and the working precision; it must be finite there.
pub fn quad<F>(f: F, a: &BigFloat, b: &BigFloat, prec: usize) -> Result<QuadResult>
where
    F: Fn(&BigFloat, usize) -> BigFloat,
{
    let wp = prec + 2 * GUARD;
    let c = cached_constants(wp);
    let half = bf_int(1, wp) / bf_int(2, wp);
    let mid = (a + b) * &half;
    let hw = (b - a) * &half;
    if bf_is_zero(&hw) {
        return Ok(QuadResult {
            value: BigFloat::from(0).with_precision(prec).value(),
            est_log2: -(prec as i64),
        });
    }
    assert!(a < b, "interval must be ordered");
    let lo = a.clone().with_precision(wp).value();
    let hi = b.clone().with_precision(wp).value();
    let pi_half = &c.pi * &half;
    let target = -((prec + 8) as f64);

    // abscissa/weight at parameter t; returns None once the weight has
    // decayed below every representable contribution, or when rounding
    // lands the abscissa exactly on an endpoint (where an integrable
    // singularity would still blow up pointwise) — both are monotone in
    // |t|, so the node loops below may stop at the first double None
    let node = |t: &BigFloat| -> Option<(BigFloat, BigFloat)> {
        let (sh, ch) = exp_pair(t);
        let u = &pi_half * sh;
        let (ush, uch) = exp_pair(&u);
        // tanh u = sinh u / cosh u; weight ∝ cosh t / cosh² u
        let w = &pi_half * ch / (&uch * &uch);
        if log2_abs(&w) < -((wp + 16) as f64) {
            return None;
        }
        let x = &mid + &hw * (ush / uch);
        if x <= lo || x >= hi {
            return None;
        }
        Some((x, &hw * w))
    };

    // contributions this many bits below unit scale cannot move the rounded
    // sum; skipping them also avoids pathological exponent gaps when the
    // integrand underflows doubly-exponentially near a mapped endpoint
    let floor_log2 = -4.0 * (wp as f64);
    let add_term = |s: &mut BigFloat, term: BigFloat| {
        if log2_abs(&term) > floor_log2 {
            *s += term;
        }
    };
    let eval = |x: &BigFloat| -> BigFloat { f(x, wp) };

    let mut h = bf_int(1, wp);
    // level 0: t = 0, ±1, ±2, … with step 1
    let mut sum = {
        let (x0, w0) = node(&BigFloat::from(0).with_precision(wp).value()).expect("center node");
        let mut s = eval(&x0) * w0;
        let mut k = 1i64;
        loop {
            let t = bf_int(k, wp);
            let mut contributed = false;
            if let Some((x, w)) = node(&t) {
                add_term(&mut s, eval(&x) * w);
                contributed = true;
            }
            if let Some((x, w)) = node(&(-t)) {
                add_term(&mut s, eval(&x) * w);
                contributed = true;
            }
            if !contributed {
                break;
            }
            k += 1;
        }
        s
    };
    let mut prev = &sum * &h;
    let mut last_diff_log2 = f64::INFINITY;

    for _level in 1..=MAX_LEVEL {
        h = &h * &half;
        // new nodes at odd multiples of the refined step
        let mut k = 1i64;
        loop {
            let t = &h * bf_int(k, wp);
            let mut contributed = false;
            if let Some((x, w)) = node(&t) {
                add_term(&mut sum, eval(&x) * w);
                contributed = true;
            }
            if let Some((x, w)) = node(&(-t.clone())) {
                add_term(&mut sum, eval(&x) * w);
                contributed = true;
            }
            if !contributed {
                break;
            }
            k += 2;
        }
        let cur = &sum * &h;
        let diff = &cur - &prev;
        last_diff_log2 = log2_abs(&diff) - log2_abs(&cur).max(0.0);
        if std::env::var_os("QUAD_DEBUG").is_some() {
            eprintln!("quad level {_level}: diff 2^{last_diff_log2:.1}, target 2^{target:.1}");
        }
        prev = cur;
        if last_diff_log2 < target {
            return Ok(QuadResult {
                value: prev.with_precision(prec).value(),
                est_log2: last_diff_log2 as i64,
            });
        }
    }
    Err(NumError::QuadAccuracy {
        partial: prev.with_precision(prec).value(),
        est_log2: if last_diff_log2.is_finite() {
            last_diff_log2 as i64
        } else {
            0
        },
    })
}

/// Abscissas beyond this are not evaluated at all: with the exponential
/// decay `quad_to_inf` assumes, the integrand there is far below any
/// supported precision, and big-float `exp` chokes on arguments whose
/// exponents are themselves astronomical.
const TAIL_CUTOFF: f64 = 1e6;

/// ∫_a^∞ f(x) dx: the finite piece [a, a+1] directly, then the tail via
/// x = a + 1 + u/(1−u), dx = du/(1−u)², u ∈ (0, 1). The integrand must
/// decay exponentially (all uses here do), so that the transformed endpoint
/// u → 1 is integrable and everything beyond `TAIL_CUTOFF` is negligible.
pub fn quad_to_inf<F>(f: F, a: &BigFloat, prec: usize) -> Result<QuadResult>
where
    F: Fn(&BigFloat, usize) -> BigFloat,
{
    let wp = prec + GUARD;
    let one = bf_int(1, wp);
    let b = a + &one;
    let head = quad(&f, a, &b, prec + GUARD)?;
    let tail = quad(
        |u: &BigFloat, p: usize| {
            let om = bf_int(1, p) - u;
            let x = &b + u / &om;
            if bf_to_f64(&x) > TAIL_CUTOFF {
                return BigFloat::from(0);
            }
            f(&x, p) / (&om * &om)
        },
        &BigFloat::from(0).with_precision(wp).value(),
        &one,
        prec + GUARD,
    )?;
    Ok(QuadResult {
        value: (head.value + tail.value).with_precision(prec).value(),
        est_log2: head.est_log2.max(tail.est_log2),
    })
}
