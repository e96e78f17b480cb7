//! Polynomial sequences of binomial type from their exponential
//! generators: the convolution identity, the delta-operator action, and
//! the chain map's effect on the whole sequence.
//!
//! Run with: cargo run --release --example binomial_sequences

use dlog::binomial;
use dlog::catalog;

fn main() {
    let n_max = 8;

    // From f = e^x - 1: the exponential polynomials (Touchard/Bell).
    let f = catalog::expm1(n_max);
    let seq = binomial::from_generator(&f, n_max).expect("normalized generator");
    println!("polynomials attached to e^x - 1:");
    for (n, p) in seq.polys.iter().enumerate().take(5) {
        println!("  p_{n}(a) = {}", p.fmt_with_var("a"));
    }

    // The defining identity p_n(a+b) = Σ C(n,k) p_k(a) p_{n-k}(b), checked
    // coefficient-by-coefficient over symbolic a, b.
    let conv = binomial::convolution_check(&seq);
    println!("\n{}: {}", conv.name, conv.detail);

    // f(d/da) acts as the lowering operator, and (𝔗f)(d/da) divides by a.
    let delta = binomial::delta_check(&seq);
    println!("{}: {}", delta.name, delta.detail);
    let t = binomial::t_check(&seq);
    println!("{}: {}", t.name, t.detail);

    // Every normalized catalog generator yields a valid sequence.
    println!("\nall catalog generators, n ≤ {n_max}:");
    for name in ["x-exp-neg", "log1p", "sinh", "tan"] {
        let g = catalog::by_name(name, n_max).expect("known name");
        let s = binomial::from_generator(&g, n_max).expect("normalized");
        let ok = binomial::convolution_failures(&s).is_empty();
        println!("  {name:<12} convolution exact: {ok}");
    }

    // Damping the generator to f·e^{-x} turns the sequence into
    // a·p_n(a+n)/(a+n), with the division guaranteed exact.
    let (deformed, check) = binomial::exp_deform(&seq);
    println!("\n{}: {}", check.name, check.detail);
    println!(
        "  deformed p_3(a) = {}",
        deformed.polys[3].fmt_with_var("a")
    );
}
