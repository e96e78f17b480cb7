//! The one-parameter family grown from y_p = (e^{px}-1)e^{-x}/p: its five
//! members, closed-form coefficients, the parameter involution, and the
//! logarithmic pole limit with its closed form.
//!
//! Run with: cargo run --release --example p_family

use dlog::family;
use dlog::num::bf_to_f64;
use dlog::scalar::{rat, ratio};

fn main() {
    let p = rat(2);
    let fam = family::PFamily::construct(&p, 8);
    println!("members at p = 2 (order 8):");
    println!("  y     = {}", fam.y().fmt_with_var("x"));
    println!("  gamma = {}", fam.gamma().fmt_with_var("x"));
    println!("  omega = {}", fam.omega().fmt_with_var("x"));
    println!("  psi   = {}", fam.psi().fmt_with_var("x"));

    // gamma's coefficients are scaled generalized binomials, omega's have
    // a two-term closed form — both checked against the structural route.
    println!();
    for c in family::gamma_coeff_checks(&fam) {
        println!("{:<28} {}", c.name, c.detail);
    }
    for c in family::omega_closed_form_checks(&fam) {
        println!("{:<28} {}", c.name, c.detail);
    }

    // p ↔ p/(p-1) swaps siblings up to a rescaling.
    for c in family::t_map_checks(&fam) {
        println!("{:<28} {}", c.name, c.detail);
    }

    // At special parameters psi collapses to logarithms and Lambert-W
    // expressions; each is pinned by an independent construction.
    println!();
    for c in family::psi_closed_form_checks(8) {
        println!("{:<28} {}", c.name, c.detail);
    }

    // Near the blow-up point of the p = 1/2 member, the divergence is
    // exactly logarithmic and the finite part is ln 2.
    let prec = 160;
    let v = family::pole_limit_value(&ratio(1, 2), prec);
    println!("\nregularized pole limit at p = 1/2: {:.10}", bf_to_f64(&v));
    println!(
        "ln 2                             : {:.10}",
        std::f64::consts::LN_2
    );
    let check = family::pole_limit_check(&ratio(1, 2), prec);
    println!("{}: {}", check.name, check.detail);

    // The p → 0 member reproduces the standalone reference series.
    println!();
    for c in family::p_zero_reference_checks(8) {
        println!("{:<28} {}", c.name, c.detail);
    }
}
