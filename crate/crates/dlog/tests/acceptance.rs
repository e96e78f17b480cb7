//! Release gate: ten end-to-end criteria spanning every module, each with
//! tolerances and runtime budgets pinned right here. One line per criterion
//! is written straight to stdout — bypassing the harness capture — so a
//! plain `cargo test --test acceptance` reads as a checklist. All ten are
//! evaluated before the final assertion, so one failure never hides another.
//!
//! The expensive coefficient set (10⁴ series terms at 256 bits) is built
//! once, inside the first criterion that needs it, and shared by the rest;
//! its build time is charged to that criterion's budget.

use std::io::{self, Write};
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dlog::num::consts::cached_constants;
use dlog::num::special::mu_root;
use dlog::num::{bf_abs, bf_int, bf_to_dec_string, bf_to_f64};
use dlog::poly::Poly;
use dlog::report::Check;
use dlog::scalar::{rat, ratio, Rat};
use dlog::series::TruncSeries;
use dlog::soldner::{SeriesKind, SoldnerCoeffs};
use dlog::{binomial, catalog, chain, family, mfun, pyramid};

/// Seed for the two randomized sweeps (period rejection, random
/// generators), pinned so every run sees the same samples.
const SEED: u64 = 42;

// Tolerances. The series bounds assume 10⁴ terms; the three-route M(2)
// comparison assumes 10⁶; the pole limits use a fixed 1e-8 offset inside
// the regularized evaluation.
const TOL_SUM_ONE: f64 = 2e-4;
const TOL_SUM_LN2: f64 = 1e-7;
const TOL_SUM_MU1: f64 = 1e-4;
const TOL_SUM_CUBIC: f64 = 1e-9;
const TOL_M2: f64 = 1e-5;
const TOL_POLE: f64 = 1e-3;

// Runtime budgets in seconds, enforced per criterion where one is set.
const BUDGET_ROOT: f64 = 5.0;
const BUDGET_SERIES: f64 = 120.0;
const BUDGET_PYRAMID: f64 = 60.0;
const BUDGET_PERIOD: f64 = 60.0;
const BUDGET_FAMILY: f64 = 600.0;

/// Shared 10⁴-term coefficient set at 256 bits. Only the 64-term prefix is
/// kept exact-rational — the exact recurrence cost explodes with length —
/// which is plenty for the certification the constructor performs.
fn coeffs() -> &'static SoldnerCoeffs {
    static CELL: OnceLock<SoldnerCoeffs> = OnceLock::new();
    CELL.get_or_init(|| SoldnerCoeffs::new(64, 10_000, 256))
}

/// Write one line to the real stdout. The print macros would be captured
/// by the test harness; a direct handle write is not, and these lines are
/// the whole point of the target.
fn emit(line: &str) {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn f64_err(value: &dlog::num::BigFloat, target: &dlog::num::BigFloat) -> f64 {
    bf_to_f64(&bf_abs(&(value.clone() - target.clone())))
}

fn count_failures(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.clone())
        .collect()
}

/// Criterion 1: the positive root of li at 256 bits starts 1.451369.
fn root_digits() -> (bool, String) {
    let mu = mu_root(256);
    let digits = bf_to_dec_string(&mu, 16);
    (
        digits.starts_with("1.451369"),
        format!("root of li = {digits}… (256 bits)"),
    )
}

/// Criterion 2: the three weighted coefficient series with closed-form limits, at
/// 10⁴ terms: Σbₙ/n = 1, Σbₙ/n² = ln 2, and the Euler-accelerated
/// alternating Σ(−1)ⁿ⁻¹bₙ/n = μ−1.
fn series_closed_forms() -> (bool, String) {
    let sc = coeffs();
    let one = sc.series(SeriesKind::One, 256);
    let e1 = f64_err(&one.partial, &one.target.expect("has target"));
    let ln2 = sc.series(SeriesKind::Ln2, 256);
    let e2 = f64_err(&ln2.partial, &ln2.target.expect("has target"));
    let mu1 = sc.series(SeriesKind::MuMinusOne, 256);
    let e3 = f64_err(
        &mu1.euler.expect("alternating series gets Euler value"),
        &mu1.target.expect("has target"),
    );
    (
        e1 < TOL_SUM_ONE && e2 < TOL_SUM_LN2 && e3 < TOL_SUM_MU1,
        format!("errors {e1:.1e} (tol {TOL_SUM_ONE:.0e}), {e2:.1e} (tol {TOL_SUM_LN2:.0e}), {e3:.1e} (tol {TOL_SUM_MU1:.0e})"),
    )
}

/// Criterion 3: the cubic-weight series Σbₙ/n³ against its closed form
/// π²/6 − Σ 4⁻ⁿ(2n+1)⁻², still at 10⁴ terms.
fn series_cubic_weight() -> (bool, String) {
    let r = coeffs().series(SeriesKind::Cubic, 256);
    let err = f64_err(&r.partial, &r.target.expect("has target"));
    (
        err < TOL_SUM_CUBIC,
        format!("error {err:.1e} (tol {TOL_SUM_CUBIC:.0e})"),
    )
}

/// Criterion 4: the M pipeline: M(0) = −13/18 exactly, the first two coefficient
/// polynomials equal 2α/3 and α(4α+5)/18 exactly, and three independent
/// routes to M(2) — defining series at 10⁶ terms, both integral forms —
/// agree pairwise.
fn m_function_values() -> (bool, String) {
    let sv = mfun::m_special_values(4);
    let exact_m0 = sv.m0 == ratio(-13, 18);
    let a = mfun::a_polys(2);
    let exact_a1 = a[1] == Poly::new(vec![Rat::zero(), ratio(2, 3)]);
    let exact_a2 = a[2] == Poly::new(vec![Rat::zero(), ratio(5, 18), ratio(2, 9)]);
    let numeric = mfun::m_numeric_checks(&bf_int(2, 256), 1_000_000, 256, TOL_M2);
    let bad = count_failures(&numeric);
    (
        exact_m0 && exact_a1 && exact_a2 && bad.is_empty(),
        format!(
            "M(0) exact: {exact_m0}, A₁/A₂ exact: {}, M(2) routes within {TOL_M2:.0e}: {}",
            exact_a1 && exact_a2,
            if bad.is_empty() {
                "yes".into()
            } else {
                format!("no {bad:?}")
            },
        ),
    )
}

/// Criterion 5: the pyramid: slices n ≤ 6 byte-for-byte against the transcribed
/// tables, all three faces in closed form for n ≤ 12, and the
/// derivative-tower oracle for n ≤ 8 plus its deformed variant for n ≤ 6
/// at five parameter values.
fn pyramid_tables() -> (bool, String) {
    let table = pyramid::PyramidTable::build(12);
    let expected: [&str; 6] = [
        "k=1: 1",
        "k=1: 1 1\nk=2: 1",
        "k=1: 1 2 2\nk=2: 3 3\nk=3: 1",
        "k=1: 1 3 6 6\nk=2: 7 14 11\nk=3: 6 6\nk=4: 1",
        "k=1: 1 4 12 24 24\nk=2: 15 45 70 50\nk=3: 25 50 35\nk=4: 10 10\nk=5: 1",
        "k=1: 1 5 20 60 120 120\nk=2: 31 124 287 404 274\nk=3: 90 270 375 225\nk=4: 65 130 85\nk=5: 15 15\nk=6: 1",
    ];
    let slices_ok = expected
        .iter()
        .enumerate()
        .all(|(i, want)| table.render_slice(i + 1) == *want);
    let mut checks = pyramid::faces_check(&table);
    checks.push(pyramid::ei_oracle_check(8));
    checks.extend(pyramid::p_tables_check(
        6,
        &[Rat::zero(), rat(1), rat(2), rat(-1), ratio(1, 2)],
    ));
    let bad = count_failures(&checks);
    (
        slices_ok && bad.is_empty(),
        format!(
            "slices 1..6 byte-exact: {slices_ok}; {} face/oracle checks{}",
            checks.len(),
            if bad.is_empty() {
                " all exact".into()
            } else {
                format!(", failing {bad:?}")
            },
        ),
    )
}

/// Criterion 6: periodicity of the inverse-logarithmic-derivative map: period 2 on
/// scaled exponentials, period 1 on x, no period on 500 seeded random
/// series, and the deviation-growth law on an (n, θ, k) grid.
fn chain_periodicity() -> (bool, String) {
    let ps = [rat(1), rat(2), rat(3), ratio(1, 2), rat(-1)];
    let exp_two = ps.iter().all(|p| {
        chain::find_period(&catalog::expm1_scaled(p, 25), 8, 25).expect("normalized") == Some(2)
    });
    let id_one = chain::find_period(&TruncSeries::x(16), 8, 16).expect("normalized") == Some(1);

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let rounds = 500usize;
    let rejected = (0..rounds)
        .filter(|_| {
            let f = random_normalized(&mut rng, 16);
            chain::find_period(&f, 8, 16).expect("normalized").is_none()
        })
        .count();

    let mut grid_ok = true;
    for n in 2..=4 {
        for k in 1..=3 {
            for th in [ratio(1, 2), rat(-2), ratio(7, 3)] {
                grid_ok &= chain::theta_propagation(n, &th, k, n + 2)
                    .expect("order reaches the deviation");
            }
        }
    }
    (
        exp_two && id_one && rejected == rounds && grid_ok,
        format!(
            "period 2 at five scale factors: {exp_two}; identity: {id_one}; rejected {rejected}/{rounds}; growth law grid: {grid_ok}"
        ),
    )
}

/// Criterion 7: the dual-route identity suite for the deformed family, exact at five
/// parameter values, plus the parameter-independent towers.
fn family_dual_routes() -> (bool, String) {
    let samples = [rat(1), rat(2), ratio(1, 2), rat(-1), rat(3)];
    let mut checks = Vec::new();
    for p in &samples {
        let fam = family::PFamily::construct(p, 12);
        checks.extend(family::gamma_coeff_checks(&fam));
        checks.extend(family::omega_closed_form_checks(&fam));
        checks.push(family::gamma_product_inverse_check(&fam));
        checks.extend(family::log_gamma_slope_checks(&fam));
        checks.extend(family::observation_checks(&fam));
        checks.extend(family::t_map_checks(&fam));
        checks.extend(family::psi_moment_shift_checks(&fam));
        checks.push(family::psi_exp_sum_check(&fam, 9));
        checks.extend(family::exp_binomial_expansion_checks(&fam));
        checks.extend(family::chain_coherence_checks(&fam));
    }
    checks.extend(family::t_tower_checks(12));
    checks.extend(family::psi_closed_form_checks(10));
    checks.extend(family::p_zero_reference_checks(12));
    let bad = count_failures(&checks);
    (
        bad.is_empty(),
        format!(
            "{} identities at p ∈ {{1, 2, 1/2, −1, 3}}{}",
            checks.len(),
            if bad.is_empty() {
                ", all exact".into()
            } else {
                format!(", failing {bad:?}")
            },
        ),
    )
}

/// Criterion 8: the regularized pole limits: ln 2 at p = 1/2 and 1 − ½·ln 2 at
/// p = 0.
fn family_pole_limits() -> (bool, String) {
    let cs = cached_constants(256);
    let half = family::pole_limit_value(&ratio(1, 2), 256);
    let e_half = f64_err(&half, &cs.ln2);
    let zero = family::pole_limit_value(&Rat::zero(), 256);
    let target0 = bf_int(1, 256) - cs.ln2.clone() / bf_int(2, 256);
    let e_zero = f64_err(&zero, &target0);
    (
        e_half < TOL_POLE && e_zero < TOL_POLE,
        format!("|limit − ln 2| = {e_half:.1e}, |limit − (1 − ½ln 2)| = {e_zero:.1e} (tol {TOL_POLE:.0e})"),
    )
}

/// A random normalized series whose higher coefficients have small
/// denominators, so it can never be a scaled exponential.
fn random_normalized(rng: &mut ChaCha8Rng, order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |n| match n {
        0 => Rat::zero(),
        1 => Rat::one(),
        _ => ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4)),
    })
}

/// Criterion 9: the full binomial-sequence identity suite — convolution, delta
/// operator, 𝔗 operator, exponential damping, polynomial transform, and
/// the three composition identities — exact at n ≤ 12 for five named
/// generators and five seeded random ones.
fn binomial_identities() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut generators: Vec<(String, TruncSeries<Rat>)> = vec![
        ("x".into(), TruncSeries::x(13)),
        ("expm1".into(), catalog::expm1(13)),
        ("x-exp-neg".into(), catalog::x_exp_neg(13)),
        (
            "x-minus-x-squared".into(),
            TruncSeries::from_fn(13, |n| match n {
                1 => Rat::one(),
                2 => rat(-1),
                _ => Rat::zero(),
            }),
        ),
        ("sin".into(), catalog::sin(13)),
    ];
    for i in 0..5 {
        generators.push((format!("seeded-{i}"), random_normalized(&mut rng, 13)));
    }

    let mut checks = Vec::new();
    for (name, f) in &generators {
        let seq = binomial::from_generator(f, 12).expect("generators are normalized");
        let mut cs = vec![
            binomial::convolution_check(&seq),
            binomial::delta_check(&seq),
            binomial::t_check(&seq),
            binomial::exp_deform(&seq).1,
            binomial::tchain_poly_transform(&seq, 12),
        ];
        cs.extend(chain::composition_identities(f, 12).expect("normalized"));
        checks.extend(
            cs.into_iter()
                .map(|c| Check::new(format!("{name}/{}", c.name), c.pass, c.detail)),
        );
    }
    let bad = count_failures(&checks);
    (
        bad.is_empty(),
        format!(
            "{} identities over {} generators at n ≤ 12{}",
            checks.len(),
            generators.len(),
            if bad.is_empty() {
                ", all exact".into()
            } else {
                format!(", failing {bad:?}")
            },
        ),
    )
}

/// Criterion 10: the series/integral bridge: Mellin-weighted sums against
/// quadrature at s = 1 and s = 2, the two generating-function identities
/// exact to order 10, and the p = 0 regularized limit once more.
fn series_integral_bridge() -> (bool, String) {
    let sc = coeffs();
    let mut checks = sc.mellin_checks(1, 128);
    checks.extend(sc.mellin_checks(2, 128));
    checks.extend(mfun::genfunc_checks(10));
    checks.extend(mfun::regularized_checks(256));
    let bad = count_failures(&checks);
    (
        bad.is_empty(),
        format!(
            "{} Mellin/generating-function/regularized-limit checks{}",
            checks.len(),
            if bad.is_empty() {
                " pass".into()
            } else {
                format!(", failing {bad:?}")
            },
        ),
    )
}

#[test]
fn all_criteria() {
    type Criterion = (&'static str, Option<f64>, fn() -> (bool, String));
    let list: [Criterion; 10] = [
        ("soldner-root-digits", Some(BUDGET_ROOT), root_digits),
        (
            "series-closed-forms",
            Some(BUDGET_SERIES),
            series_closed_forms,
        ),
        ("series-cubic-weight", None, series_cubic_weight),
        ("m-function-values", None, m_function_values),
        ("pyramid-tables", Some(BUDGET_PYRAMID), pyramid_tables),
        ("chain-periodicity", Some(BUDGET_PERIOD), chain_periodicity),
        (
            "family-dual-routes",
            Some(BUDGET_FAMILY),
            family_dual_routes,
        ),
        ("family-pole-limits", None, family_pole_limits),
        ("binomial-identities", None, binomial_identities),
        ("series-integral-bridge", None, series_integral_bridge),
    ];

    let t0 = Instant::now();
    emit("");
    let mut failed: Vec<&str> = Vec::new();
    for (i, (name, budget, run)) in list.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        let secs = start.elapsed().as_secs_f64();
        let in_budget = budget.is_none_or(|b| secs < b);
        let pass = ok && in_budget;
        let verdict = if pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "criterion {:>2}  {verdict}  {secs:7.2}s  {name:<24} {detail}",
            i + 1
        );
        if !in_budget {
            line.push_str(&format!(
                "  [budget {}s exceeded]",
                budget.expect("only set budgets can be exceeded")
            ));
        }
        emit(&line);
        if !pass {
            failed.push(name);
        }
    }
    emit(&format!(
        "{}/{} criteria passed in {:.1}s",
        list.len() - failed.len(),
        list.len(),
        t0.elapsed().as_secs_f64()
    ));
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
