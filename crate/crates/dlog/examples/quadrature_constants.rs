//! The numeric layer: constants with two independent routes each, the
//! positive zero of the logarithmic integral, tanh-sinh quadrature
//! against a closed form, and Euler acceleration of an alternating
//! series.
//!
//! Run with: cargo run --release --example quadrature_constants

use dlog::catalog;
use dlog::num::accel::{eval_power_series, Accel};
use dlog::num::consts::cached_constants;
use dlog::num::quad::quad;
use dlog::num::special::{ei, lambert_w, li, mu_root};
use dlog::num::{bf_abs, bf_int, bf_to_dec_string, bf_to_f64, log2_abs};

fn main() {
    let prec = 256;

    // Every constant is computed by two unrelated algorithms which must
    // agree to the working precision before the value is released.
    let c = cached_constants(prec);
    println!("gamma = {}", bf_to_dec_string(&c.gamma, 50));
    println!("pi    = {}", bf_to_dec_string(&c.pi, 50));
    println!("ln 2  = {}", bf_to_dec_string(&c.ln2, 50));

    // mu is where li vanishes; the residual after the solve is the proof.
    let mu = mu_root(prec);
    println!("\nmu    = {}", bf_to_dec_string(&mu, 50));
    let resid = li(&mu, prec).expect("mu > 1");
    println!("li(mu) residual ~ 2^{:.0}", log2_abs(&resid));

    // Integration by parts turns the cutoff integral of -Ei into mu - 1
    // exactly; quadrature against ei must land on it.
    let ln_mu = mu.clone().ln();
    let q = quad(
        |x, wq| -(ei(x, wq).expect("x inside (0, ln mu)")),
        &bf_int(0, prec),
        &ln_mu,
        prec,
    )
    .expect("converges");
    let target = &mu - bf_int(1, prec);
    println!(
        "quad of -Ei over (0, ln mu) vs mu - 1: |diff| = {:.2e}",
        bf_to_f64(&bf_abs(&(q.value - target)))
    );

    // Lambert W at its exact fixed points.
    let w_e = lambert_w(&bf_int(1, prec).exp(), prec).expect("principal branch");
    println!("\nW(e)  = {}", bf_to_dec_string(&w_e, 40));

    // The alternating ln(1+x) series at x = 1 crawls at 1/n; the Euler
    // transform reaches 1e-12 territory inside 41 terms.
    let coeffs = catalog::log1p(40).coeffs().to_vec();
    let plain = eval_power_series(&coeffs, &bf_int(1, 128), 128, Accel::Plain);
    let euler = eval_power_series(&coeffs, &bf_int(1, 128), 128, Accel::Euler);
    let ln2 = bf_to_f64(&c.ln2);
    println!("\nalternating series for ln 2, 41 terms:");
    println!(
        "  plain sum  error {:.2e}",
        (bf_to_f64(&plain.value) - ln2).abs()
    );
    println!(
        "  euler sum  error {:.2e}",
        (bf_to_f64(&euler.value) - ln2).abs()
    );
}
