//! Binomial-type polynomial sequences generated by a normalized series.
//!
//! Given f with f(0) = 0, f′(0) = 1 and φ = f⁻¹ᶜ (compositional inverse),
//! the sequence p_n(α) is read off exp(α·φ(x)) = Σ p_n(α)xⁿ/n!. The module
//! builds the sequence over ℚ[α], checks the convolution identity that
//! characterizes binomial type, realizes series of d/dα as operators on
//! polynomials, and implements the exponential-damping and 𝔗-transform
//! identities connecting sequences of related generators.

use crate::chain::{is_normalized, t_apply};
use crate::poly::{AlphaPoly, Poly};
use crate::report::Check;
use crate::scalar::{factorial, rat, ratio, Rat, Ring};
use crate::series::TruncSeries;
use num_traits::{One, Zero};

/// Error from sequence construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BinomialError {
    #[error("generator must be normalized: f(0) = 0 and f′(0) = 1")]
    NotNormalized,
}

/// A binomial-type sequence together with the data it was built from.
#[derive(Debug, Clone)]
pub struct BinomialSequence {
    /// The generator f.
    pub generator: TruncSeries<Rat>,
    /// φ = f⁻¹ᶜ, the compositional inverse of the generator.
    pub phi: TruncSeries<Rat>,
    /// p_0 … p_N, where p_n = n!·[xⁿ] exp(α·φ).
    pub polys: Vec<AlphaPoly>,
}

/// Build the sequence for a normalized generator, up to index `n_max`.
/// The generator must carry at least `n_max` orders.
pub fn from_generator(
    f: &TruncSeries<Rat>,
    n_max: usize,
) -> Result<BinomialSequence, BinomialError> {
    if !is_normalized(f) {
        return Err(BinomialError::NotNormalized);
    }
    assert!(
        f.order() >= n_max,
        "generator too short for requested index"
    );
    let ft = f.truncate(n_max.max(1));
    let phi = ft.comp_inverse().expect("normalized series invert");
    // exp(α·φ) over ℚ[α]: lift each coefficient c to the linear polynomial c·α
    let alpha_phi: TruncSeries<AlphaPoly> = phi.map(|c| Poly::new(vec![Rat::zero(), c.clone()]));
    let e = alpha_phi.exp().expect("φ vanishes at 0");
    let polys = (0..=n_max)
        .map(|n| e.coeff(n).scale_rat(&Rat::from_integer(factorial(n))))
        .collect();
    Ok(BinomialSequence {
        generator: ft,
        phi,
        polys,
    })
}

impl BinomialSequence {
    /// Largest index the sequence holds.
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }
}

/// Indices n where p_n(α+β) ≠ Σ C(n,k)p_k(α)p_{n−k}(β) as an exact
/// two-variable polynomial identity (outer variable α, inner β).
pub fn convolution_failures(seq: &BinomialSequence) -> Vec<usize> {
    type Two = Poly<Poly<Rat>>;
    let alpha: Two = Poly::x();
    let beta: Two = Poly::constant(Poly::x());
    let point = alpha + beta;
    let mut failing = Vec::new();
    for n in 0..=seq.n_max() {
        let lhs = seq.polys[n].eval_map(&point, Two::from_rat);
        let mut rhs = Two::zero();
        for k in 0..=n {
            let pa: Two = Poly::new(
                seq.polys[k]
                    .coeffs()
                    .iter()
                    .map(|c| Poly::constant(c.clone()))
                    .collect(),
            );
            let pb: Two = Poly::constant(seq.polys[n - k].clone());
            rhs = rhs + (pa * pb).scale_rat(&Rat::from_integer(crate::scalar::binom(n, k)));
        }
        if lhs != rhs {
            failing.push(n);
        }
    }
    failing
}

/// The convolution identity as a single reported check.
pub fn convolution_check(seq: &BinomialSequence) -> Check {
    let failing = convolution_failures(seq);
    let pass = failing.is_empty();
    let detail = if pass {
        format!(
            "p_n(α+β) = Σ C(n,k)p_k(α)p_{{n−k}}(β) exact for n ≤ {}",
            seq.n_max()
        )
    } else {
        format!("failing indices: {failing:?}")
    };
    Check::new("binomial-convolution", pass, detail)
}

/// Act with the series Σ aₖ·(d/dα)ᵏ on a polynomial. Differentiation is
/// nilpotent, so the sum is finite; the operator series must carry at least
/// deg q coefficients to act faithfully.
pub fn apply_operator_series(op: &TruncSeries<Rat>, q: &AlphaPoly) -> AlphaPoly {
    if let Some(d) = q.degree() {
        assert!(
            op.order() >= d,
            "operator series shorter than polynomial degree"
        );
    }
    let mut acc = AlphaPoly::zero();
    let mut der = q.clone();
    for k in 0..=op.order() {
        if der.is_zero() {
            break;
        }
        acc = acc + der.scale_rat(&op.coeff(k));
        der = der.derivative();
    }
    acc
}

/// The delta-operator identity f(d/dα)·p_n = n·p_{n−1}, for every held index.
pub fn delta_check(seq: &BinomialSequence) -> Check {
    let mut failing = Vec::new();
    for n in 1..=seq.n_max() {
        let got = apply_operator_series(&seq.generator, &seq.polys[n]);
        let want = seq.polys[n - 1].scale_rat(&rat(n as i64));
        if got != want {
            failing.push(n);
        }
    }
    Check::new(
        "delta-operator-lowers-index",
        failing.is_empty(),
        if failing.is_empty() {
            format!("f(d/dα)p_n = n·p_{{n−1}} exact for n ≤ {}", seq.n_max())
        } else {
            format!("failing indices: {failing:?}")
        },
    )
}

/// The 𝔗-operator identity (𝔗f)(d/dα)·p_n = n·p_n/α. The division is exact
/// because p_n(0) = 0 for n ≥ 1.
pub fn t_check(seq: &BinomialSequence) -> Check {
    let op = t_apply(&seq.generator).expect("generator normalized");
    let mut failing = Vec::new();
    for n in 1..=seq.n_max() {
        let got = apply_operator_series(&op, &seq.polys[n]);
        let want = match seq.polys[n].div_exact_x() {
            Some(q) => q.scale_rat(&rat(n as i64)),
            None => {
                failing.push(n);
                continue;
            }
        };
        if got != want {
            failing.push(n);
        }
    }
    Check::new(
        "t-operator-divides-by-alpha",
        failing.is_empty(),
        if failing.is_empty() {
            format!("(𝔗f)(d/dα)p_n = n·p_n/α exact for n ≤ {}", seq.n_max())
        } else {
            format!("failing indices: {failing:?}")
        },
    )
}

/// The sequence for the damped generator f·e⁻ˣ, built two independent ways:
/// by the argument-shift formula q_n = α·p_n(α+n)/(α+n) with mandatory exact
/// division, and from scratch via `from_generator`. Returns the sequence
/// (from the direct route) plus the agreement check.
pub fn exp_deform(seq: &BinomialSequence) -> (BinomialSequence, Check) {
    let n_max = seq.n_max();
    let order = seq.generator.order();
    let damped = seq.generator.clone()
        * (-TruncSeries::<Rat>::x(order))
            .exp()
            .expect("zero constant term");
    let direct = from_generator(&damped, n_max).expect("damping preserves normalization");
    let mut failing = Vec::new();
    for n in 0..=n_max {
        let shifted = if n == 0 {
            AlphaPoly::one()
        } else {
            // α·p_n(α+n)/(α+n): root at α = −n is guaranteed by p_n(0) = 0
            let num = seq.polys[n].shift(&rat(n as i64));
            match num.div_exact_linear(&rat(-(n as i64))) {
                Some(q) => q * AlphaPoly::x(),
                None => {
                    failing.push(n);
                    continue;
                }
            }
        };
        if shifted != direct.polys[n] {
            failing.push(n);
        }
    }
    let check = Check::new(
        "damped-sequence-shift-formula",
        failing.is_empty(),
        if failing.is_empty() {
            format!("α·p_n(α+n)/(α+n) matches the f·e⁻ˣ sequence for n ≤ {n_max}")
        } else {
            format!("failing indices: {failing:?}")
        },
    );
    (direct, check)
}

/// The 𝔗-transform identity (f′(d/dα))ⁿ·(p_n/α) = t_n/α, where t_n is the
/// sequence of the generator 𝔗f.
pub fn tchain_poly_transform(seq: &BinomialSequence, n_upto: usize) -> Check {
    assert!(n_upto <= seq.n_max());
    let t_seq = from_generator(
        &t_apply(&seq.generator).expect("generator normalized"),
        seq.n_max(),
    )
    .expect("𝔗 preserves normalization");
    let fp = seq.generator.derivative();
    let mut failing = Vec::new();
    // op = (f′)ⁿ, built up incrementally at order N−1
    let mut op = TruncSeries::one(fp.order());
    for n in 1..=n_upto {
        op = op * fp.clone();
        let pn_over_alpha = seq.polys[n].div_exact_x().expect("p_n(0) = 0");
        let got = apply_operator_series(&op, &pn_over_alpha);
        let want = t_seq.polys[n].div_exact_x().expect("t_n(0) = 0");
        if got != want {
            failing.push(n);
        }
    }
    Check::new(
        "t-transform-on-polynomials",
        failing.is_empty(),
        if failing.is_empty() {
            format!("(f′(d/dα))ⁿ(p_n/α) = t_n/α exact for n ≤ {n_upto}")
        } else {
            format!("failing indices: {failing:?}")
        },
    )
}

/// Right-hand side of the logarithmic damping expansion: the series whose
/// xⁿ coefficient is (1/n)·Σ_{k<n} p_k(n)·A^{n−k}/k!, for n = 1..=N.
pub fn log_deform_series(seq: &BinomialSequence, a: &Rat, order: usize) -> TruncSeries<Rat> {
    assert!(order <= seq.n_max(), "need p_k up to the requested order");
    TruncSeries::from_fn(order, |n| {
        if n == 0 {
            return Rat::zero();
        }
        let mut inner = Rat::zero();
        let mut a_pow = a.clone(); // A^{n−k}, built from k = n−1 downward
        for k in (0..n).rev() {
            let pk_at_n = seq.polys[k].eval(&rat(n as i64));
            inner += pk_at_n * &a_pow * Rat::new(1.into(), factorial(k));
            a_pow *= a;
        }
        inner * ratio(1, n as i64)
    })
}

/// Direct route for the same series: −ln(1 − A·x·e^{γ(x)}) with
/// γ = (f·e⁻ˣ)⁻¹ᶜ, truncated to the same order.
pub fn log_deform_direct(seq: &BinomialSequence, a: &Rat, order: usize) -> TruncSeries<Rat> {
    let n = order.max(1);
    let damped = seq.generator.truncate(n)
        * (-TruncSeries::<Rat>::x(n))
            .exp()
            .expect("zero constant term");
    let gamma = damped.comp_inverse().expect("normalized");
    let xeg = gamma.exp().expect("γ vanishes at 0").mul_x(); // order n+1
    let inside = TruncSeries::one(n + 1) - xeg.scale_rat(a);
    (-inside.log().expect("constant term 1")).truncate(order)
}
