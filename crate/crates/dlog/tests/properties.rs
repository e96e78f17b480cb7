//! Randomized algebraic invariants. Everything here is an exact identity
//! over ℚ — no tolerances — so a single counterexample is a real bug, and
//! proptest's shrinking makes it a small one. Case counts are trimmed on
//! the strategies whose single case is expensive (inversion, sequence
//! construction), not on the cheap ring laws.

use proptest::prelude::*;

use dlog::scalar::{factorial, rat, ratio, Rat};
use dlog::series::TruncSeries;
use dlog::{binomial, catalog, chain, family, mfun, Poly};
use num_traits::{One, Zero};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("must be nonzero", |r| !r.is_zero())
}

/// A series of the given order with bounded random coefficients.
fn series_of(order: usize) -> impl Strategy<Value = TruncSeries<Rat>> {
    prop::collection::vec(small_rat(), order + 1).prop_map(move |c| TruncSeries::new(order, c))
}

/// Two to three series sharing one random order, as the arithmetic ops
/// require.
fn series_pair(max_order: usize) -> impl Strategy<Value = (TruncSeries<Rat>, TruncSeries<Rat>)> {
    (1..=max_order).prop_flat_map(|n| (series_of(n), series_of(n)))
}

fn series_triple(
    max_order: usize,
) -> impl Strategy<Value = (TruncSeries<Rat>, TruncSeries<Rat>, TruncSeries<Rat>)> {
    (1..=max_order).prop_flat_map(|n| (series_of(n), series_of(n), series_of(n)))
}

/// A series with zero constant term (the domain of exp and of inner
/// composition arguments).
fn zero_const(order: usize) -> impl Strategy<Value = TruncSeries<Rat>> {
    prop::collection::vec(small_rat(), order).prop_map(move |tail| {
        TruncSeries::from_fn(order, |i| {
            if i == 0 {
                Rat::zero()
            } else {
                tail[i - 1].clone()
            }
        })
    })
}

/// A series with constant term 1 (the domain of log, inv and pow_scalar).
fn unit_const(order: usize) -> impl Strategy<Value = TruncSeries<Rat>> {
    prop::collection::vec(small_rat(), order).prop_map(move |tail| {
        TruncSeries::from_fn(order, |i| {
            if i == 0 {
                Rat::one()
            } else {
                tail[i - 1].clone()
            }
        })
    })
}

/// A normalized series: zero constant term, unit linear term.
fn normalized(order: usize) -> impl Strategy<Value = TruncSeries<Rat>> {
    prop::collection::vec(small_rat(), order.saturating_sub(1)).prop_map(move |tail| {
        TruncSeries::from_fn(order, |i| match i {
            0 => Rat::zero(),
            1 => Rat::one(),
            _ => tail[i - 2].clone(),
        })
    })
}

/// Normalized with denominators kept tiny; useful where coefficient blow-up
/// under iteration matters more than coverage.
fn normalized_coarse(order: usize) -> impl Strategy<Value = TruncSeries<Rat>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), order.saturating_sub(1)).prop_map(move |tail| {
        TruncSeries::from_fn(order, |i| match i {
            0 => Rat::zero(),
            1 => Rat::one(),
            _ => {
                let (n, d) = tail[i - 2];
                ratio(n, d)
            }
        })
    })
}

proptest! {
    // Ring laws of the truncated-series quotient ℚ[[x]]/x^{N+1}.

    #[test]
    fn mul_commutes_and_associates((a, b, c) in series_triple(20)) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn mul_distributes_over_add((a, b, c) in series_triple(20)) {
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b + a * c
        );
    }

    #[test]
    fn one_and_zero_behave((a, _b) in series_pair(20)) {
        let n = a.order();
        prop_assert_eq!(a.clone() * TruncSeries::one(n), a.clone());
        prop_assert_eq!(a.clone() * TruncSeries::zero(n), TruncSeries::zero(n));
        prop_assert_eq!(a.clone() - a.clone(), TruncSeries::zero(n));
    }

    #[test]
    fn truncation_respects_multiplication((a, b) in series_pair(20)) {
        // Truncation is a ring quotient: dropping tails before or after a
        // product must agree.
        let k = a.order() / 2;
        prop_assert_eq!(
            (a.clone() * b.clone()).truncate(k),
            a.truncate(k) * b.truncate(k)
        );
    }

    #[test]
    fn derivative_product_rule((a, b) in series_pair(20)) {
        let n = a.order() - 1;
        prop_assert_eq!(
            (a.clone() * b.clone()).derivative(),
            a.derivative() * b.truncate(n) + a.truncate(n) * b.derivative()
        );
    }

    #[test]
    fn integrate_inverts_derivative((a, _b) in series_pair(20)) {
        // One direction loses the constant term, the other is exact.
        let dropped = TruncSeries::from_fn(a.order(), |i| if i == 0 { Rat::zero() } else { a.coeff(i) });
        prop_assert_eq!(a.derivative().integrate(), dropped);
        prop_assert_eq!(a.integrate().derivative(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    // Exponential, logarithm, reciprocal, powers.

    #[test]
    fn exp_log_round_trip(f in zero_const(12)) {
        let e = f.exp().expect("zero constant term");
        prop_assert_eq!(e.log().expect("exp has constant term 1"), f);
    }

    #[test]
    fn log_exp_round_trip(g in unit_const(12)) {
        let l = g.log().expect("unit constant term");
        prop_assert_eq!(l.exp().expect("log has zero constant term"), g);
    }

    #[test]
    fn exp_is_additive_to_multiplicative(f in zero_const(12), g in zero_const(12)) {
        let lhs = (f.clone() + g.clone()).exp().expect("zero constant term");
        let rhs = f.exp().expect("zero constant term") * g.exp().expect("zero constant term");
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reciprocal_multiplies_to_one(g in unit_const(12)) {
        let inv = g.inv().expect("unit constant term");
        prop_assert_eq!(inv * g, TruncSeries::one(12));
    }

    #[test]
    fn integer_pow_scalar_is_repeated_mul(g in unit_const(10), m in 0usize..=5) {
        let via_pow = g.pow_scalar(&rat(m as i64)).expect("unit constant term");
        let mut direct = TruncSeries::one(10);
        for _ in 0..m {
            direct = direct * g.clone();
        }
        prop_assert_eq!(via_pow, direct);
    }

    #[test]
    fn composition_associates(
        f in series_of(10),
        g in zero_const(10),
        h in zero_const(10),
    ) {
        let lhs = f.compose(&g).expect("inner vanishes").compose(&h).expect("inner vanishes");
        let gh = g.compose(&h).expect("inner vanishes");
        prop_assert_eq!(lhs, f.compose(&gh).expect("inner vanishes"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    // Compositional inversion, both routes.

    #[test]
    fn comp_inverse_round_trips(f in normalized(14)) {
        let phi = f.comp_inverse().expect("normalized");
        let x = TruncSeries::x(14);
        prop_assert_eq!(f.compose(&phi).expect("inner vanishes"), x.clone());
        prop_assert_eq!(phi.compose(&f).expect("inner vanishes"), x);
    }

    #[test]
    fn lagrange_and_newton_inverses_agree(f in normalized(14)) {
        prop_assert_eq!(
            f.comp_inverse().expect("normalized"),
            f.comp_inverse_newton().expect("normalized")
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    // The inverse-logarithmic-derivative operator and its chain.

    #[test]
    fn t_round_trips(f in normalized(20)) {
        let tf = chain::t_apply(&f).expect("normalized");
        prop_assert_eq!(chain::t_inverse(&tf).expect("normalized"), f.clone());
        let uf = chain::t_inverse(&f).expect("normalized");
        prop_assert_eq!(chain::t_apply(&uf).expect("normalized"), f);
    }

    #[test]
    fn t_commutes_with_rescaling(f in normalized(16), a in nonzero_rat()) {
        let lhs = chain::t_apply(&chain::rescale(&f, &a)).expect("rescale keeps normalization");
        let rhs = chain::rescale(&chain::t_apply(&f).expect("normalized"), &a);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_exponential_series_have_no_period(f in normalized_coarse(16)) {
        // The candidate exponential is pinned by the quadratic coefficient;
        // anything else in the family differs already at x².
        let p = f.coeff(2) * rat(2);
        prop_assume!(f != catalog::expm1_scaled(&p, 16));
        prop_assert_eq!(chain::find_period(&f, 8, 16).expect("normalized"), None);
    }

    #[test]
    fn single_deviation_scales_by_one_minus_n(
        n in 2usize..=6,
        k in 1usize..=5,
        eps in nonzero_rat(),
    ) {
        // f = x + ε·xⁿ: each application multiplies the deviation by (1−n).
        let f = TruncSeries::from_fn(n, |j| match j {
            1 => Rat::one(),
            j if j == n => eps.clone(),
            _ => Rat::zero(),
        });
        let mut cur = f;
        let mut want = eps;
        for _ in 0..k {
            cur = chain::t_apply(&cur).expect("normalized");
            want *= rat(1 - n as i64);
        }
        prop_assert_eq!(cur.coeff(n), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // Binomial-type sequences from arbitrary normalized generators.

    #[test]
    fn random_generators_make_binomial_sequences(f in normalized(7)) {
        let seq = binomial::from_generator(&f, 6).expect("normalized");
        prop_assert!(binomial::convolution_failures(&seq).is_empty());
        prop_assert!(binomial::delta_check(&seq).pass);
        prop_assert!(binomial::t_check(&seq).pass);
        prop_assert!(binomial::exp_deform(&seq).1.pass);
    }

    #[test]
    fn sequence_at_one_reads_off_exp_phi(f in normalized(7)) {
        let seq = binomial::from_generator(&f, 6).expect("normalized");
        let e = seq.phi.exp().expect("phi vanishes at 0");
        for n in 0..=6 {
            prop_assert_eq!(
                seq.polys[n].eval(&Rat::one()),
                e.coeff(n) * Rat::from_integer(factorial(n))
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // The deformed family holds its closed forms at arbitrary nonzero
    // rational parameters, not just the sampled ones.

    #[test]
    fn family_closed_forms_at_random_parameters(
        num in -5i64..=5,
        den in 1i64..=3,
    ) {
        prop_assume!(num != 0);
        let p = ratio(num, den);
        let fam = family::PFamily::construct(&p, 8);
        let mut checks = family::gamma_coeff_checks(&fam);
        checks.extend(family::omega_closed_form_checks(&fam));
        checks.push(family::gamma_product_inverse_check(&fam));
        checks.extend(family::log_gamma_slope_checks(&fam));
        checks.extend(family::t_map_checks(&fam));
        checks.extend(family::psi_moment_shift_checks(&fam));
        checks.extend(family::chain_coherence_checks(&fam));
        for c in checks {
            prop_assert!(c.pass, "{} failed at p = {}: {}", c.name, p, c.detail);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // The α-power coefficient polynomials specialize correctly.

    #[test]
    fn alpha_polys_specialize_to_integer_powers(m in 0i64..=4) {
        let base = mfun::normalized_remainder(6);
        let polys = mfun::a_polys(6);
        let mut power = TruncSeries::one(6);
        for _ in 0..m {
            power = power * base.clone();
        }
        for (k, poly) in polys.iter().enumerate() {
            prop_assert_eq!(poly.eval(&rat(m)), power.coeff(k));
        }
    }
}

proptest! {
    // Polynomial ring laws backing the α-polynomial machinery.

    #[test]
    fn poly_shift_is_argument_translation(
        coeffs in prop::collection::vec(small_rat(), 1..=7),
        c in small_rat(),
        at in small_rat(),
    ) {
        let p = Poly::new(coeffs);
        prop_assert_eq!(p.shift(&c).eval(&at), p.eval(&(at + c)));
    }

    #[test]
    fn poly_compose_evaluates_pointwise(
        pc in prop::collection::vec(small_rat(), 1..=6),
        qc in prop::collection::vec(small_rat(), 1..=6),
        at in small_rat(),
    ) {
        let p = Poly::new(pc);
        let q = Poly::new(qc);
        prop_assert_eq!(p.compose(&q).eval(&at), p.eval(&q.eval(&at)));
    }

    #[test]
    fn poly_derivative_product_rule(
        pc in prop::collection::vec(small_rat(), 1..=6),
        qc in prop::collection::vec(small_rat(), 1..=6),
    ) {
        let p = Poly::new(pc);
        let q = Poly::new(qc);
        prop_assert_eq!(
            (p.clone() * q.clone()).derivative(),
            p.derivative() * q.clone() + p * q.derivative()
        );
    }
}
