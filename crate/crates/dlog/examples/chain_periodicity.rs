//! The inverse-logarithmic-derivative map 𝔗f = f/(log f)′ ∘ (x·d/dx) on
//! normalized series: its two-cycles on scaled exponentials, the absence
//! of other small periods, and the n^2k growth law for seed deviations.
//!
//! Run with: cargo run --release --example chain_periodicity

use dlog::catalog;
use dlog::chain;
use dlog::scalar::{rat, ratio, Rat};
use dlog::TruncSeries;

fn main() {
    let order = 25;

    // (e^{px} - 1)/p returns to itself after two applications, for every
    // scale p — the only known nontrivial cycle.
    println!("period of the chain map on scaled exponentials (order {order}):");
    for p in [rat(1), rat(2), rat(3), ratio(1, 2), rat(-1)] {
        let f = catalog::expm1_scaled(&p, order);
        let period = chain::find_period(&f, 8, order).expect("normalized");
        println!("  p = {:<4} period = {:?}", p.to_string(), period);
    }

    // x is the fixed point; a generic normalized series has no period ≤ 8.
    let fixed = chain::find_period(&TruncSeries::x(16), 8, 16).expect("normalized");
    println!("  f = x    period = {fixed:?}");
    let generic = TruncSeries::from_fn(16, |n| match n {
        0 => rat(0),
        1 => rat(1),
        _ => ratio(1, n as i64 + 2),
    });
    println!(
        "  generic  period = {:?}",
        chain::find_period(&generic, 8, 16).expect("normalized")
    );

    // A seed that deviates from the exponential at x^{n+1} by (1-θ) has
    // its deviation amplified by exactly n^{2k} after 2k applications.
    println!("\ndeviation growth through k double-steps (exact):");
    for n in 2..=4 {
        for k in 1..=3 {
            let theta: Rat = ratio(1, 2);
            let ok = chain::theta_propagation(n, &theta, k, n + 2).expect("order suffices");
            println!("  n = {n}, k = {k}: coefficient matches (1 - n^2k(1-θ))/(n+1)!  {ok}");
        }
    }

    // The three composition identities tying 𝔗 to damping by e^{-x}.
    println!("\ncomposition identities on x·e^{{-x}} (order 16):");
    for c in chain::composition_identities(&catalog::x_exp_neg(17), 16).expect("normalized") {
        println!("  {}  {}", if c.pass { "ok " } else { "FAIL" }, c.name);
    }
}
