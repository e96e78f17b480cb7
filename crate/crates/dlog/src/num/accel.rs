//! Summation of slowly or conditionally convergent series: plain partial
//! sums, iterated Cesàro means, and Euler (iterated-averaging) acceleration
//! for alternating tails.

use crate::scalar::Rat;

use super::{bf_from_rat, bf_int, BigFloat, GUARD};

/// How to turn a stream of terms into a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accel {
    /// Last partial sum, no transformation.
    Plain,
    /// k-fold iterated arithmetic means of the partial sums ((C, k)
    /// summation); regular, and sums bounded oscillations like Σ(−1)ⁿ.
    Cesaro(u32),
    /// Repeated averaging of adjacent partial sums (binomial weights over
    /// the final window); the standard accelerator for alternating tails,
    /// with error roughly 2^{−window} for eventually-alternating terms.
    Euler,
}

/// Window of trailing partial sums fed to the Euler averaging; keeps the
/// transform O(window²) regardless of how many raw terms were summed.
const EULER_WINDOW: usize = 96;

#[derive(Debug, Clone)]
pub struct SeriesEval {
    pub value: BigFloat,
    pub terms: usize,
}

/// Sum up to `max_terms` terms under the chosen transformation. The term
/// stream may end earlier on its own.
pub fn eval_terms<I>(terms: I, accel: Accel, prec: usize, max_terms: usize) -> SeriesEval
where
    I: IntoIterator<Item = BigFloat>,
{
    let wp = prec + GUARD;
    let mut partials: Vec<BigFloat> = Vec::new();
    let mut acc = BigFloat::from(0).with_precision(wp).value();
    for (i, t) in terms.into_iter().enumerate() {
        if i >= max_terms {
            break;
        }
        acc += t;
        partials.push(acc.clone());
    }
    let n = partials.len();
    assert!(n > 0, "series must produce at least one term");
    let half = bf_int(1, wp) / bf_int(2, wp);
    let value = match accel {
        Accel::Plain => partials[n - 1].clone(),
        Accel::Cesaro(k) => {
            let mut row = partials;
            for _ in 0..k {
                let mut running = BigFloat::from(0).with_precision(wp).value();
                for (i, s) in row.iter_mut().enumerate() {
                    running += s.clone();
                    *s = &running / bf_int(i as i64 + 1, wp);
                }
            }
            row[row.len() - 1].clone()
        }
        Accel::Euler => {
            let start = n.saturating_sub(EULER_WINDOW);
            let mut row: Vec<BigFloat> = partials[start..].to_vec();
            while row.len() > 1 {
                for i in 0..row.len() - 1 {
                    row[i] = (&row[i] + &row[i + 1]) * &half;
                }
                row.pop();
            }
            row.pop().expect("window is nonempty")
        }
    };
    SeriesEval {
        value: value.with_precision(prec).value(),
        terms: n,
    }
}

/// Evaluate Σ cₖ xᵏ from exact coefficients at a big-float point.
pub fn eval_power_series(coeffs: &[Rat], x: &BigFloat, prec: usize, accel: Accel) -> SeriesEval {
    let wp = prec + GUARD;
    let xw = x.clone().with_precision(wp).value();
    let mut pow = bf_int(1, wp);
    let stream = coeffs.iter().map(move |c| {
        let t = bf_from_rat(c, wp) * &pow;
        pow *= &xw;
        t
    });
    eval_terms(stream, accel, prec, coeffs.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::consts::cached_constants;
    use crate::num::{agreement_bits, bf_to_f64};
    use crate::scalar::{rat, ratio};

    #[test]
    fn plain_geometric() {
        // Σ (1/2)^k over 60 terms ≈ 2
        let terms = (0..60).map(|k| {
            let mut t = bf_int(1, 160);
            for _ in 0..k {
                t /= bf_int(2, 160);
            }
            t
        });
        let r = eval_terms(terms, Accel::Plain, 128, 100);
        assert_eq!(r.terms, 60);
        assert!(agreement_bits(&r.value, &bf_int(2, 160)) >= 55);
    }

    #[test]
    fn cesaro_sums_grandi() {
        // 1 − 1 + 1 − 1 + … = 1/2 under (C, 1)
        let terms = (0..2000).map(|k| bf_int(if k % 2 == 0 { 1 } else { -1 }, 96));
        let r = eval_terms(terms, Accel::Cesaro(1), 64, 2000);
        let err = bf_to_f64(&(r.value - bf_int(1, 96) / bf_int(2, 96))).abs();
        assert!(err < 1e-3, "err = {err}");
    }

    #[test]
    fn euler_accelerates_alternating_harmonic() {
        // ln 2 from 40 terms of x − x²/2 + x³/3 − … at x = 1
        let mut coeffs = vec![rat(0)];
        for k in 1..=40i64 {
            coeffs.push(ratio(if k % 2 == 0 { -1 } else { 1 }, k));
        }
        let r = eval_power_series(&coeffs, &bf_int(1, 160), 128, Accel::Euler);
        let ln2 = cached_constants(160).ln2.clone();
        let err = bf_to_f64(&(&r.value - &ln2)).abs();
        assert!(err < 1e-9, "err = {err}");
        // plain partial sums are nowhere near by comparison
        let p = eval_power_series(&coeffs, &bf_int(1, 160), 128, Accel::Plain);
        let perr = bf_to_f64(&(&p.value - &ln2)).abs();
        assert!(perr > 1e-3, "plain err = {perr}");
    }

    #[test]
    fn euler_window_caps_work() {
        // long stream still uses only the trailing window
        let terms = (1..=500i64).map(|k| {
            let s = if k % 2 == 0 { -1 } else { 1 };
            bf_int(s, 160) / bf_int(k, 160)
        });
        let r = eval_terms(terms, Accel::Euler, 128, 500);
        let ln2 = cached_constants(160).ln2.clone();
        let err = bf_to_f64(&(&r.value - &ln2)).abs();
        assert!(err < 1e-20, "err = {err}");
    }
}
