//! The Dirichlet-type sum over reciprocal zeros of the partial
//! exponential: exact special values at the nonpositive integers, the
//! half-line residue cofactors, and the numeric value at s = 2 computed
//! three independent ways.
//!
//! Run with: cargo run --release --example m_values

use dlog::mfun;
use dlog::num::{bf_int, bf_to_dec_string, bf_to_f64};
use dlog::scalar::fmt_rat;

fn main() {
    // Everything at integer s ≤ 0 is a finite rational computation.
    let sv = mfun::m_special_values(6);
    println!("M(0)  = {}", fmt_rat(&sv.m0));
    for (i, v) in sv.m_neg.iter().enumerate() {
        println!("M(-{}) = {}", i + 1, fmt_rat(v));
    }
    println!(
        "residue cofactors at s = 1/2 - N (times sqrt(2/pi)): {}",
        sv.half_residues
            .iter()
            .map(fmt_rat)
            .collect::<Vec<_>>()
            .join(", ")
    );

    // At s = 2 the defining series, a quadrature, and an
    // integration-by-parts variant of the quadrature must all meet.
    let prec = 192;
    let s = bf_int(2, prec);
    let m = mfun::m_numeric(&s, 500_000, prec).expect("s > 1");
    println!("\nM(2) three ways:");
    println!("  series (tail-corrected) = {:.12}", m.series);
    println!(
        "  integral, direct        = {}",
        bf_to_dec_string(&m.integral_direct, 30)
    );
    println!(
        "  integral, by parts      = {}",
        bf_to_dec_string(&m.integral_parts, 30)
    );
    println!(
        "  spread                  = {:.2e}",
        (m.series - bf_to_f64(&m.integral_direct)).abs()
    );

    // The generating identities behind the special values are exact
    // series statements; the checks replay them at order 10.
    println!();
    for c in mfun::genfunc_checks(10) {
        println!("{:<16} {}", c.name, c.detail);
    }
}
