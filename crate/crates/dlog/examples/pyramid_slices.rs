//! The derivative pyramid: integer slices with factorials, Stirling
//! numbers of both kinds on their faces, an independent oracle from
//! actual derivatives of (x·ln-composite) expressions, and the
//! one-parameter deformations.
//!
//! Run with: cargo run --release --example pyramid_slices

use dlog::pyramid;
use dlog::scalar::{fmt_rat, ratio};

fn main() {
    let table = pyramid::PyramidTable::build(8);

    for n in [4, 5, 6] {
        println!("slice n = {n}:");
        for line in table.render_slice(n).lines() {
            println!("  {line}");
        }
        println!();
    }

    // Three faces reduce to classical sequences.
    for c in pyramid::faces_check(&table) {
        println!("{:<24} {}", c.name, c.detail);
    }
    let pos = pyramid::positivity_check(&table);
    println!("{:<24} {}", pos.name, pos.detail);

    // The oracle route: build the same numbers by symbolically
    // differentiating the generating expression n times and reading off
    // coefficients — a completely separate computation.
    let oracle = pyramid::ei_oracle_check(8);
    println!("{:<24} {}", oracle.name, oracle.detail);

    // The two p-deformed pyramids collapse to the integer table at the
    // right parameter values and stay polynomial in p everywhere.
    let (a, _b) = pyramid::build_p(5);
    println!("\nA-variant entries at n = 5, k = 2, as polynomials in p:");
    for m in 2..=5 {
        println!("  m = {m}: {}", a.entry(5, 2, m).fmt_with_var("p"));
    }
    let half = ratio(1, 2);
    println!("\nsame entries at p = 1/2:");
    for m in 2..=5 {
        println!("  m = {m}: {}", fmt_rat(&a.entry(5, 2, m).eval(&half)));
    }
    for c in pyramid::p_tables_check(5, &[ratio(0, 1), ratio(1, 1), half]) {
        println!("{:<24} {}", c.name, c.detail);
    }
}
