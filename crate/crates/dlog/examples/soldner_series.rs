//! The coefficient sequence behind the Ramanujan–Soldner-style constants:
//! exact leading terms, the positive rescaling b_n, and the four weighted
//! series with closed-form limits, plus the conditional alternating sum
//! that is only ever reported.
//!
//! Run with: cargo run --release --example soldner_series

use std::time::Instant;

use dlog::num::{bf_to_dec_string, bf_to_f64};
use dlog::scalar::fmt_rat;
use dlog::soldner::{SeriesKind, SoldnerCoeffs};

fn main() {
    let terms = 10_000;
    let prec = 256;

    println!("exact coefficients a_n of psi = (x exp(int (e^t-1)/t))^inv:");
    let t0 = Instant::now();
    let coeffs = SoldnerCoeffs::new(64, terms, prec);
    println!(
        "  built a_1..a_64 exactly and b_1..b_{terms} at {prec} bits in {:.2?}",
        t0.elapsed()
    );
    for n in 1..=8 {
        println!("  a_{n:<2} = {}", fmt_rat(&coeffs.a()[n]));
    }
    println!("  b_1  = {}", bf_to_dec_string(&coeffs.b()[1], 40));
    println!("  b_{terms} = {:.6e}", bf_to_f64(&coeffs.b()[terms]));
    println!(
        "  n*b_n at n = {terms}: {:.8}  (creeping toward 1 like 1 - c/ln n)",
        terms as f64 * bf_to_f64(&coeffs.b()[terms])
    );

    println!("\nweighted series with closed-form limits:");
    for kind in [
        SeriesKind::One,
        SeriesKind::Ln2,
        SeriesKind::MuMinusOne,
        SeriesKind::Cubic,
    ] {
        let r = coeffs.series(kind, prec);
        let value = r.euler.as_ref().unwrap_or(&r.partial);
        let target = r.target.as_ref().expect("these four have targets");
        println!(
            "  {:<4}  value {:<24.16e} target {:<24.16e} |diff| {:.2e}",
            kind.name(),
            bf_to_f64(value),
            bf_to_f64(target),
            (bf_to_f64(value) - bf_to_f64(target)).abs()
        );
        if let Some(tail) = r.tail_estimate {
            println!("        (raw partial, estimated tail {tail:.2e})");
        }
    }

    // Just inside the disk of convergence |x| < e^{-gamma} the series still
    // sums to a finite value, and the inverse map certifies it: feeding the
    // sum back through the exponential integral must return the argument.
    let near = coeffs.near_radius_check(prec, 1e-6);
    println!("\nevaluation near the radius (x = -0.999 e^-gamma):");
    println!("  {}  {}", if near.pass { "ok " } else { "FAIL" }, near.detail);

    // The plain alternating sum sits at the edge of convergence: partial
    // sums oscillate, the averaged transforms hover near ln(mu), and no
    // theorem settles it -- so it is printed, not asserted.
    let r = coeffs.series(SeriesKind::LnMuConditional, prec);
    println!("\nconditional alternating sum (reported only):");
    println!("  partial   {:.10}", bf_to_f64(&r.partial));
    println!("  cesaro    {:.10}", bf_to_f64(r.cesaro.as_ref().unwrap()));
    println!("  euler     {:.10}", bf_to_f64(r.euler.as_ref().unwrap()));
    println!("  ln(mu)    {:.10}", bf_to_f64(r.target.as_ref().unwrap()));
}
