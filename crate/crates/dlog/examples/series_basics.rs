//! Exact truncated power series: ring arithmetic, analytic maps, and the
//! two inversion routes, all over arbitrary-precision rationals.
//!
//! Run with: cargo run --release --example series_basics

use dlog::catalog;
use dlog::scalar::{fmt_rat, ratio};
use dlog::TruncSeries;

fn main() {
    let order = 10;

    // e^x - 1 and ln(1+x) are compositional inverses; their coefficient
    // arithmetic is exact, so the round trip is equality, not closeness.
    let e = catalog::expm1(order);
    let l = catalog::log1p(order);
    println!("expm1: {}", e.fmt_with_var("x"));
    println!("log1p: {}", l.fmt_with_var("x"));
    println!(
        "log1p(expm1) == x: {}",
        l.compose(&e).expect("vanishing constant term") == TruncSeries::x(order)
    );

    // Lagrange inversion and Newton iteration are independent algorithms
    // for the same inverse; both must agree with the catalog closed form.
    let inv = e.comp_inverse().expect("normalized");
    let inv_newton = e.comp_inverse_newton().expect("normalized");
    println!("comp_inverse(expm1) == log1p: {}", inv == l);
    println!("newton route agrees:          {}", inv_newton == inv);

    // exp and log as series maps undo each other around 1 + f.
    let f = TruncSeries::from_fn(order, |n| match n {
        0 => ratio(0, 1),
        _ => ratio(1, (n * n) as i64),
    });
    let g = f.exp().expect("zero constant term");
    let back = g.log().expect("unit constant term");
    println!("log(exp(f)) == f:             {}", back == f);

    // Differentiation and integration shift the truncation order by one;
    // integrate . derivative restores everything except the constant.
    let d = f.derivative();
    let rebuilt = d.integrate();
    println!(
        "integrate(derivative(f)) == f truncated: {}",
        rebuilt == f.truncate(rebuilt.order())
    );

    // tan = sin/cos dropping to a quotient of catalog entries.
    let quot = catalog::sin(order)
        .div(&{
            // cos as 1 - x^2/2 + ... via d(sin)
            catalog::sin(order + 1).derivative()
        })
        .expect("unit constant divisor");
    println!(
        "sin/cos == tan:               {}",
        quot == catalog::tan(order)
    );

    println!(
        "\ncoefficient of x^9 in tan: {}",
        fmt_rat(&catalog::tan(9).coeff(9))
    );
}
