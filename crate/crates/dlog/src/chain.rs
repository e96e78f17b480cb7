//! The inverse-logarithmic-derivative operator 𝔗f = f/f′ on normalized
//! series (f(0) = 0, f′(0) = 1), its inverse, iterated chains, the three
//! composition identities the operator satisfies, and the classification of
//! periodic chains.
//!
//! Order bookkeeping: both 𝔗 and 𝔗⁻¹ preserve the truncation order — the
//! n-th output coefficient depends only on input coefficients up to n.

use crate::report::Check;
use crate::scalar::{rat, Rat};
use crate::series::TruncSeries;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Domain error for the operator calculus.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("series must be normalized: f(0) = 0 and f′(0) = 1")]
    NotNormalized,
}

pub type Result<T> = std::result::Result<T, ChainError>;

/// True when f(0) = 0 and f′(0) = 1 (and the order retains a linear term).
pub fn is_normalized(f: &TruncSeries<Rat>) -> bool {
    f.order() >= 1 && f.coeff(0).is_zero() && f.coeff(1).is_one()
}

fn require_normalized(f: &TruncSeries<Rat>) -> Result<()> {
    if is_normalized(f) {
        Ok(())
    } else {
        Err(ChainError::NotNormalized)
    }
}

/// 𝔗f = f/f′, computed as x·u/(u + x·u′) with f = x·u so the quotient's
/// constant term is the unit u(0) = 1. Preserves order and normalization.
pub fn t_apply(f: &TruncSeries<Rat>) -> Result<TruncSeries<Rat>> {
    require_normalized(f)?;
    if f.order() == 1 {
        return Ok(f.clone());
    }
    let u = f.div_x().expect("normalized series vanishes at 0");
    let xdu = u.derivative().mul_x();
    let den = u.clone() + xdu;
    let q = u.div(&den).expect("denominator has unit constant term");
    Ok(q.mul_x())
}

/// 𝔗⁻¹f = x·exp(∫(1/f(t) − 1/t) dt): the unique normalized series g with
/// 𝔗g = f. The integrand is formed by inverting f/x and stripping its
/// constant 1, so only unit-constant division is involved.
pub fn t_inverse(f: &TruncSeries<Rat>) -> Result<TruncSeries<Rat>> {
    require_normalized(f)?;
    if f.order() == 1 {
        return Ok(f.clone());
    }
    let w = f.div_x().expect("normalized series vanishes at 0");
    let integrand = (w.inv().expect("unit constant term") - TruncSeries::one(f.order() - 1))
        .div_x()
        .expect("1/w − 1 vanishes at 0");
    let g = integrand.integrate().exp().expect("integral vanishes at 0");
    Ok(g.mul_x())
}

/// Rescale a normalized series: f ↦ f(a·x)/a, which stays normalized and
/// commutes with 𝔗.
pub fn rescale(f: &TruncSeries<Rat>, a: &Rat) -> TruncSeries<Rat> {
    let mut pow = Rat::one() / a; // a^{n−1} built incrementally from a^{−1}
    TruncSeries::from_fn(f.order(), |n| {
        if n == 0 {
            Rat::zero()
        } else {
            pow = &pow * a;
            f.coeff(n) * &pow
        }
    })
}

/// A stretch of the 𝔗-chain through a seed series: link i carries 𝔗^{pᵢ}f
/// where pᵢ runs from 0 to k (negative powers via 𝔗⁻¹).
#[derive(Debug, Clone)]
pub struct ChainState {
    pub powers: Vec<i64>,
    pub links: Vec<TruncSeries<Rat>>,
}

impl ChainState {
    /// The link holding 𝔗^power of the seed, if present.
    pub fn link(&self, power: i64) -> Option<&TruncSeries<Rat>> {
        self.powers
            .iter()
            .position(|&p| p == power)
            .map(|i| &self.links[i])
    }
}

/// Iterate the operator k times (k < 0 iterates the inverse), all links at
/// the given order. |k| is capped at 64 to bound runtime.
pub fn chain(f: &TruncSeries<Rat>, k: i64, order: usize) -> Result<ChainState> {
    assert!(k.unsigned_abs() <= 64, "chain power capped at 64");
    assert!(
        f.order() >= order,
        "seed series too short for requested order"
    );
    let seed = f.truncate(order);
    require_normalized(&seed)?;
    let mut powers = vec![0];
    let mut links = vec![seed];
    for i in 1..=k.unsigned_abs() as i64 {
        let prev = links.last().expect("seeded above");
        let next = if k >= 0 {
            t_apply(prev)?
        } else {
            t_inverse(prev)?
        };
        powers.push(i * k.signum());
        links.push(next);
    }
    Ok(ChainState { powers, links })
}

/// The three exact composition identities tying 𝔗, compositional inversion
/// and exponential damping together, each verified as a series equality:
///
/// 1. (𝔗(f·e⁻ˣ))⁻¹ᶜ = (𝔗f)⁻¹ᶜ ∘ x/(1+x)
/// 2. x·exp((f·e⁻ˣ)⁻¹ᶜ) = (x·exp(−f⁻¹ᶜ))⁻¹ᶜ
/// 3. 𝔗²(f·e⁻ˣ) = 𝔗²f · (1 − 𝔗f)
///
/// (⁻¹ᶜ marks the compositional inverse.) The second identity is checked one
/// order higher than requested since multiplying by x raises the order.
pub fn composition_identities(f: &TruncSeries<Rat>, order: usize) -> Result<Vec<Check>> {
    assert!(f.order() > order, "need one spare order for identity 2");
    let n = order;
    let ft = f.truncate(n);
    require_normalized(&ft)?;
    let e_neg = (-TruncSeries::<Rat>::x(n))
        .exp()
        .expect("zero constant term");
    let fe = ft.clone() * e_neg;

    // 1: inverses related through the Möbius substitution x/(1+x)
    let lhs1 = t_apply(&fe)?.comp_inverse().expect("normalized");
    let moebius = TruncSeries::from_fn(n, |j| {
        if j == 0 {
            Rat::zero()
        } else {
            rat(if j % 2 == 1 { 1 } else { -1 })
        }
    });
    let rhs1 = t_apply(&ft)?
        .comp_inverse()
        .expect("normalized")
        .compose(&moebius)
        .expect("moebius vanishes at 0");
    let c1 = Check::new(
        "damped-t-inverse-moebius",
        lhs1 == rhs1,
        "(𝔗(f·e⁻ˣ))⁻¹ᶜ = (𝔗f)⁻¹ᶜ ∘ x/(1+x)",
    );

    // 2: exponential of the damped inverse, one order up
    let fe1 = f.truncate(n + 1) * (-TruncSeries::<Rat>::x(n + 1)).exp().expect("zero c₀");
    let lhs2 = fe1
        .comp_inverse()
        .expect("normalized")
        .truncate(n)
        .exp()
        .expect("inverse vanishes at 0")
        .mul_x();
    let phi = ft.comp_inverse().expect("normalized");
    let rhs2 = (-phi)
        .exp()
        .expect("inverse vanishes at 0")
        .mul_x()
        .comp_inverse()
        .expect("normalized");
    let c2 = Check::new(
        "exp-of-damped-inverse",
        lhs2 == rhs2,
        "x·exp((f·e⁻ˣ)⁻¹ᶜ) = (x·exp(−f⁻¹ᶜ))⁻¹ᶜ",
    );

    // 3: the damped double application factors
    let lhs3 = t_apply(&t_apply(&fe)?)?;
    let tf = t_apply(&ft)?;
    let rhs3 = t_apply(&tf)? * (TruncSeries::one(n) - tf);
    let c3 = Check::new(
        "damped-t-squared-factorization",
        lhs3 == rhs3,
        "𝔗²(f·e⁻ˣ) = 𝔗²f·(1 − 𝔗f)",
    );

    Ok(vec![c1, c2, c3])
}

/// Least k ≤ max_k with 𝔗^k f = f at the given order, if any. Truncated
/// comparison is conclusive for rejection once the order strictly exceeds
/// the first non-exponential deviation index.
pub fn find_period(f: &TruncSeries<Rat>, max_k: usize, order: usize) -> Result<Option<usize>> {
    assert!(f.order() >= order);
    let seed = f.truncate(order);
    require_normalized(&seed)?;
    let mut cur = seed.clone();
    for k in 1..=max_k {
        cur = t_apply(&cur)?;
        if cur == seed {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// How a single deviation from the exponential pattern travels through an
/// even number of applications: seed f = Σ_{1≤j≤n} x^j/j! + θ·x^{n+1}/(n+1)!
/// and after 𝔗^{2k} the x^{n+1} coefficient must equal
/// (1 − n^{2k}(1−θ))/(n+1)!.
pub fn theta_propagation(n: usize, theta: &Rat, k: usize, order: usize) -> Result<bool> {
    assert!(n > 1, "deviation index must exceed 1");
    assert!(order > n, "order must reach the deviation");
    let f = TruncSeries::from_fn(order, |j| {
        if j == 0 {
            Rat::zero()
        } else if j <= n {
            Rat::new(1.into(), crate::scalar::factorial(j))
        } else if j == n + 1 {
            theta * Rat::new(1.into(), crate::scalar::factorial(j))
        } else {
            Rat::zero()
        }
    });
    let mut cur = f;
    for _ in 0..2 * k {
        cur = t_apply(&cur)?;
    }
    let growth = Rat::from_integer(BigInt::from(n).pow(2 * k as u32));
    let expected = (Rat::one() - growth * (Rat::one() - theta))
        / Rat::from_integer(crate::scalar::factorial(n + 1));
    Ok(cur.coeff(n + 1) == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::report::all_pass;
    use crate::scalar::ratio;

    #[test]
    fn t_of_classical_seeds() {
        let n = 9;
        assert_eq!(t_apply(&catalog::x(n)).unwrap(), catalog::x(n));
        assert_eq!(
            t_apply(&catalog::expm1(n)).unwrap(),
            catalog::one_minus_exp_neg(n)
        );
        assert_eq!(t_apply(&catalog::sin(n)).unwrap(), catalog::tan(n));
        assert_eq!(t_apply(&catalog::sinh(n)).unwrap(), catalog::tanh(n));
    }

    #[test]
    fn t_rejects_unnormalized() {
        assert_eq!(
            t_apply(&TruncSeries::one(4)).unwrap_err(),
            ChainError::NotNormalized
        );
        let double = catalog::x(4).scale_rat(&rat(2));
        assert_eq!(t_apply(&double).unwrap_err(), ChainError::NotNormalized);
    }

    #[test]
    fn inverse_round_trip_and_known_values() {
        let n = 12;
        assert_eq!(t_inverse(&catalog::x(n)).unwrap(), catalog::x(n));
        assert_eq!(
            t_inverse(&catalog::one_minus_exp_neg(n)).unwrap(),
            catalog::expm1(n)
        );
        // 𝔗(2·tanh(x/2)) = sinh, so the inverse of sinh is that rescaling
        assert_eq!(
            t_inverse(&catalog::sinh(n)).unwrap(),
            rescale(&catalog::tanh(n), &ratio(1, 2))
        );
        for f in [catalog::sin(n), catalog::geometric(n), catalog::tan(n)] {
            assert_eq!(t_apply(&t_inverse(&f).unwrap()).unwrap(), f);
            assert_eq!(t_inverse(&t_apply(&f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn inverse_of_damped_identity_seed() {
        // 𝔗⁻¹(x·e⁻ˣ) starts x + x² + (3/4)x³ + (17/36)x⁴ + …
        let g = t_inverse(&catalog::x_exp_neg(6)).unwrap();
        assert_eq!(g.coeff(1), rat(1));
        assert_eq!(g.coeff(2), rat(1));
        assert_eq!(g.coeff(3), ratio(3, 4));
        assert_eq!(g.coeff(4), ratio(17, 36));
        assert_eq!(t_apply(&g).unwrap(), catalog::x_exp_neg(6));
    }

    #[test]
    fn chain_links_and_powers() {
        let st = chain(&catalog::x(8), 5, 8).unwrap();
        assert_eq!(st.powers, vec![0, 1, 2, 3, 4, 5]);
        for l in &st.links {
            assert_eq!(*l, catalog::x(8));
        }
        let two_periodic = chain(&catalog::expm1_scaled(&rat(2), 10), 2, 10).unwrap();
        assert_eq!(two_periodic.links[2], two_periodic.links[0]);
        assert_ne!(two_periodic.links[1], two_periodic.links[0]);
        let back = chain(&catalog::sinh(10), -1, 10).unwrap();
        assert_eq!(
            back.link(-1).unwrap(),
            &rescale(&catalog::tanh(10), &ratio(1, 2))
        );
    }

    #[test]
    fn composition_identity_suite() {
        for f in [catalog::expm1(16), catalog::x(16)] {
            let checks = composition_identities(&f, 15).unwrap();
            assert_eq!(checks.len(), 3);
            assert!(all_pass(&checks), "{checks:?}");
        }
        // a denser seed with irregular coefficients
        let f = catalog::geometric(13);
        assert!(all_pass(&composition_identities(&f, 12).unwrap()));
    }

    #[test]
    fn periods_of_exponential_family() {
        assert_eq!(find_period(&catalog::x(25), 8, 25).unwrap(), Some(1));
        for p in [rat(1), rat(2), rat(3), ratio(1, 2), rat(-1)] {
            let f = catalog::expm1_scaled(&p, 25);
            assert_eq!(find_period(&f, 8, 25).unwrap(), Some(2), "p = {p}");
        }
        // x + x³ deviates at an odd index and can never recur
        let mut c = vec![rat(0); 17];
        c[1] = rat(1);
        c[3] = rat(1);
        let f = TruncSeries::new(16, c);
        assert_eq!(find_period(&f, 10, 16).unwrap(), None);
    }

    #[test]
    fn deviation_growth_under_even_powers() {
        for k in 0..3 {
            assert!(theta_propagation(2, &rat(1), k, 8).unwrap());
        }
        assert!(theta_propagation(2, &rat(0), 1, 8).unwrap());
        assert!(theta_propagation(3, &rat(2), 2, 8).unwrap());
        assert!(theta_propagation(4, &ratio(-3, 7), 3, 10).unwrap());
    }

    #[test]
    fn first_deviation_scales_geometrically() {
        // f = x + c·xⁿ + …: the xⁿ coefficient of 𝔗^k f is (1−n)^k c
        let n = 5;
        let c = ratio(3, 7);
        let mut coeffs = vec![rat(0); 9];
        coeffs[1] = rat(1);
        coeffs[n] = c.clone();
        coeffs[7] = ratio(-2, 5);
        let mut f = TruncSeries::new(8, coeffs);
        let mut factor = Rat::one();
        for _ in 0..4 {
            f = t_apply(&f).unwrap();
            factor *= rat(1 - n as i64);
            assert_eq!(f.coeff(n), &c * &factor);
        }
    }

    #[test]
    fn rescaling_commutes_with_t() {
        let a = ratio(-5, 3);
        for f in [catalog::sin(10), catalog::expm1(10), catalog::geometric(10)] {
            let lhs = t_apply(&rescale(&f, &a)).unwrap();
            let rhs = rescale(&t_apply(&f).unwrap(), &a);
            assert_eq!(lhs, rhs);
        }
    }
}
