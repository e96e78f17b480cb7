//! The derivative pyramid: the three-index integer array A_{k,m}^n
//! defined by reading off the normal form of
//!
//!   [dⁿ/dxⁿ e^{α·Ei(x)}] · e^{−α·Ei(x)} = Σ_{k≤m≤n} (−1)^{k−m} αᵏ eᵏˣ x^{−m} A_{k,m}^n,
//!
//! built here from its three-term recurrence
//!
//!   A_{k,m}^{n+1} = k·A_{k,m}^n + (m−1)·A_{k,m−1}^n + A_{k−1,m−1}^n,
//!
//! together with its two p-deformations (entries polynomial in p)
//!
//!   A_{k,m}^{n+1}(p) = (p(m−k)+k)·A_{k,m}^n(p) + (m−1)·A_{k,m−1}^n(p) + A_{k−1,m−1}^n(p)
//!   B_{k,m}^{n+1}(p) = (pm−k)·B_{k,m}^n(p) + (m−1)·B_{k,m−1}^n(p) + B_{k−1,m−1}^n(p)
//!
//! which arise the same way from dⁿ(T_pᵅ)·T_p^{−α} with (ln T_p)′ = eˣ/Δ_p,
//! Δ_p = (e^{px}−1)/p.
//!
//! Everything recurrence-built is cross-checked against an independent
//! symbolic-differentiation oracle: a little exact algebra on normal
//! forms Σ c·αᵏ·eᵏˣ·Δ_p^{−m} that knows only the generic product/power
//! rules (d eᵏˣ = k·eᵏˣ, dΔ_p^{−m} = −m·Δ_p^{−m−1} − mp·Δ_p^{−m}, and
//! premultiplication by α·eˣ/Δ_p), never the recurrences. At p = 0 the
//! algebra degenerates to the Ei case (Δ₀ = x). The oracle's raw
//! coefficients C relate to the tables by sign flips only:
//! A_{k,m}^n = (−1)^{m−k}·C_{k,m} at p = 0, and B_{k,m}^n(p) =
//! (−1)^{n−k}·C_{k,m}(p); the A(p)-table is compared to the oracle by
//! expanding its shifted exponentials e^{p(m−k)x} = (1 + pΔ_p)^{m−k}
//! into the oracle's basis.
//!
//! The faces of the pyramid are checked against independently built
//! triangles: A_{m,m}^n against Stirling numbers of the second kind,
//! A_{m,n}^n against unsigned Stirling numbers of the first kind, and
//! A_{1,m}^n against (n−1)!/(n−m)!.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::AlphaPoly;
use crate::report::Check;
use crate::scalar::{binom, factorial, rat, Rat, Ring};

/// The integer pyramid, levels 1…n_max. Entries are indexed by
/// (n, k, m) with 1 ≤ k ≤ m ≤ n; everything outside that range is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PyramidTable {
    levels: Vec<Vec<Vec<BigInt>>>,
}

fn build_levels<R: Ring>(n_max: usize, weight: impl Fn(usize, usize) -> R) -> Vec<Vec<Vec<R>>> {
    assert!(n_max >= 1, "pyramid needs at least one level");
    let mut levels: Vec<Vec<Vec<R>>> = Vec::with_capacity(n_max);
    levels.push(vec![vec![R::one()]]);
    for n in 1..n_max {
        let prev = &levels[n - 1];
        let at = |k: usize, m: usize| -> R {
            if (1..=m).contains(&k) && m <= n {
                prev[k - 1][m - k].clone()
            } else {
                R::zero()
            }
        };
        let mut next = Vec::with_capacity(n + 1);
        for k in 1..=n + 1 {
            let mut row = Vec::with_capacity(n + 2 - k);
            for m in k..=n + 1 {
                let mut e = weight(k, m) * at(k, m);
                e = e + at(k, m - 1).scale_rat(&rat(m as i64 - 1));
                e = e + at(k - 1, m - 1);
                row.push(e);
            }
            next.push(row);
        }
        levels.push(next);
    }
    levels
}

impl PyramidTable {
    /// Build levels 1…n_max by the three-term recurrence.
    pub fn build(n_max: usize) -> Self {
        let levels = build_levels::<Rat>(n_max, |k, _| rat(k as i64));
        PyramidTable {
            levels: levels
                .into_iter()
                .map(|lvl| {
                    lvl.into_iter()
                        .map(|row| {
                            row.into_iter()
                                .map(|e| {
                                    debug_assert!(e.is_integer());
                                    e.to_integer()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.levels.len()
    }

    /// Entry A_{k,m}^n, or 0 outside the index range.
    pub fn entry(&self, n: usize, k: usize, m: usize) -> BigInt {
        if n == 0 || n > self.n_max() || k == 0 || k > m || m > n {
            return BigInt::zero();
        }
        self.levels[n - 1][k - 1][m - k].clone()
    }

    /// Rows of slice n: `rows(n)[k-1]` holds A_{k,m}^n for m = k…n.
    pub fn rows(&self, n: usize) -> &[Vec<BigInt>] {
        &self.levels[n - 1]
    }

    /// Slice n in the row-per-k layout, one line per k.
    pub fn render_slice(&self, n: usize) -> String {
        self.rows(n)
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let vals: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                format!("k={}: {}", i + 1, vals.join(" "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

// ---------------------------------------------------------------------------
// Faces.
// ---------------------------------------------------------------------------

/// Stirling numbers of the second kind, S[n][m] for 0 ≤ m ≤ n ≤ n_max,
/// by the standard recurrence {n,m} = m·{n−1,m} + {n−1,m−1}.
fn stirling2_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut tri: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &tri[n - 1];
        let mut row = vec![BigInt::zero()];
        for m in 1..=n {
            let same = if m < n {
                prev[m].clone()
            } else {
                BigInt::zero()
            };
            row.push(same * m + &prev[m - 1]);
        }
        tri.push(row);
    }
    tri
}

/// Unsigned Stirling numbers of the first kind, by
/// [n,m] = (n−1)·[n−1,m] + [n−1,m−1].
fn stirling1_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut tri: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &tri[n - 1];
        let mut row = vec![BigInt::zero()];
        for m in 1..=n {
            let same = if m < n {
                prev[m].clone()
            } else {
                BigInt::zero()
            };
            row.push(same * (n - 1) + &prev[m - 1]);
        }
        tri.push(row);
    }
    tri
}

/// Check the three faces of the pyramid against independently built
/// triangles: the diagonal m = k against Stirling-2, the face m = n
/// against unsigned Stirling-1, and the row k = 1 against the falling
/// factorial (n−1)!/(n−m)!.
pub fn faces_check(table: &PyramidTable) -> Vec<Check> {
    let n_max = table.n_max();
    let s2 = stirling2_triangle(n_max);
    let s1 = stirling1_triangle(n_max);
    let mut bad_s2 = None;
    let mut bad_s1 = None;
    let mut bad_fact = None;
    for n in 1..=n_max {
        for m in 1..=n {
            if bad_s2.is_none() && table.entry(n, m, m) != s2[n][m] {
                bad_s2 = Some((n, m));
            }
            if bad_s1.is_none() && table.entry(n, m, n) != s1[n][m] {
                bad_s1 = Some((n, m));
            }
            let fact = factorial(n - 1) / factorial(n - m);
            if bad_fact.is_none() && table.entry(n, 1, m) != fact {
                bad_fact = Some((n, m));
            }
        }
    }
    let report = |name: &str, bad: Option<(usize, usize)>, what: &str| match bad {
        None => Check::new(name, true, format!("{what} matches for all n ≤ {n_max}")),
        Some((n, m)) => Check::new(name, false, format!("{what} fails at n={n}, m={m}")),
    };
    vec![
        report("face-diagonal-stirling2", bad_s2, "A(m,m) vs Stirling-2"),
        report(
            "face-outer-stirling1",
            bad_s1,
            "A(m,n) vs unsigned Stirling-1",
        ),
        report("face-k1-factorial", bad_fact, "A(1,m) vs (n−1)!/(n−m)!"),
    ]
}

// ---------------------------------------------------------------------------
// Symbolic-differentiation oracle.
// ---------------------------------------------------------------------------

/// Raw normal-form coefficients C_{k,m} of the n-th derivative
/// expression, per level: `oracle[n-1][k-1][m-k]`.
pub type OracleLevels<R> = Vec<Vec<Vec<R>>>;

/// Differentiate the normal form Σ c·αᵏ·eᵏˣ·Δ_p^{−m} repeatedly,
/// starting from the seed α·eˣ·Δ_p^{−1} of the first derivative, using
/// only the generic rules d eᵏˣ = k·eᵏˣ, dΔ_p^{−m} = −m·Δ_p^{−m−1} −
/// mp·Δ_p^{−m} (since Δ_p′ = e^{px} = 1 + pΔ_p), plus premultiplication
/// by α·eˣ·Δ_p^{−1} for the outer exponential factor. Returns the raw
/// coefficients per level; no recurrence knowledge is involved. At
/// p = 0 this is differentiation of Σ c·αᵏ·eᵏˣ·x^{−m}, the Ei case.
pub fn derivative_oracle<R: Ring>(n_max: usize, p: &R) -> OracleLevels<R> {
    assert!((1..=9).contains(&n_max), "oracle supported for n_max ≤ 9");
    let mut levels: OracleLevels<R> = Vec::with_capacity(n_max);
    levels.push(vec![vec![R::one()]]);
    for n in 1..n_max {
        let cur = &levels[n - 1];
        // dense scratch indexed [k][m], 0-padded
        let mut next = vec![vec![R::zero(); n + 2]; n + 2];
        for k in 1..=n {
            for m in k..=n {
                let c = &cur[k - 1][m - k];
                if c.is_zero() {
                    continue;
                }
                // d eᵏˣ
                next[k][m] = next[k][m].clone() + c.scale_rat(&rat(k as i64));
                // dΔ^{−m} = −m·Δ^{−m−1} − mp·Δ^{−m}
                next[k][m + 1] = next[k][m + 1].clone() + c.scale_rat(&rat(-(m as i64)));
                next[k][m] =
                    next[k][m].clone() + (p.clone() * c.clone()).scale_rat(&rat(-(m as i64)));
                // premultiplier α·eˣ·Δ^{−1}
                next[k + 1][m + 1] = next[k + 1][m + 1].clone() + c.clone();
            }
        }
        let mut lvl = Vec::with_capacity(n + 1);
        for k in 1..=n + 1 {
            lvl.push(next[k][k..=n + 1].to_vec());
        }
        levels.push(lvl);
    }
    levels
}

fn first_level_mismatch<R: Ring>(
    a: &OracleLevels<R>,
    b: &OracleLevels<R>,
) -> Option<(usize, usize, usize)> {
    for (i, (la, lb)) in a.iter().zip(b).enumerate() {
        for (ki, (ra, rb)) in la.iter().zip(lb).enumerate() {
            for (mi, (ea, eb)) in ra.iter().zip(rb).enumerate() {
                if ea != eb {
                    return Some((i + 1, ki + 1, ki + 1 + mi));
                }
            }
        }
    }
    None
}

fn mismatch_report<R: Ring>(
    name: &str,
    a: &OracleLevels<R>,
    b: &OracleLevels<R>,
    n_max: usize,
) -> Check {
    match first_level_mismatch(a, b) {
        None => Check::new(name, true, format!("exact entry match for n ≤ {n_max}")),
        Some((n, k, m)) => Check::new(
            name,
            false,
            format!(
                "first mismatch at n={n}, k={k}, m={m}: {:?} vs {:?}",
                a[n - 1][k - 1][m - k],
                b[n - 1][k - 1][m - k]
            ),
        ),
    }
}

/// Compare the recurrence-built integer pyramid against the
/// differentiation oracle at p = 0, entrywise after the sign flip
/// A_{k,m}^n = (−1)^{m−k}·C_{k,m}.
pub fn ei_oracle_check(n_max: usize) -> Check {
    let table = PyramidTable::build(n_max);
    let signed: OracleLevels<Rat> = table
        .levels
        .iter()
        .map(|lvl| {
            lvl.iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .map(|(mi, e)| {
                            let v = Rat::from(e.clone());
                            if mi % 2 == 0 {
                                v
                            } else {
                                -v
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let oracle = derivative_oracle::<Rat>(n_max, &Rat::zero());
    mismatch_report("pyramid-oracle-ei", &signed, &oracle, n_max)
}

// ---------------------------------------------------------------------------
// p-deformed tables.
// ---------------------------------------------------------------------------

/// A p-deformed pyramid: same shape, entries exact polynomials in p.
#[derive(Debug, Clone, PartialEq)]
pub struct PPyramidTable {
    levels: Vec<Vec<Vec<AlphaPoly>>>,
}

impl PPyramidTable {
    pub fn n_max(&self) -> usize {
        self.levels.len()
    }

    /// Entry at (n, k, m), or 0 outside the index range.
    pub fn entry(&self, n: usize, k: usize, m: usize) -> AlphaPoly {
        if n == 0 || n > self.n_max() || k == 0 || k > m || m > n {
            return AlphaPoly::zero();
        }
        self.levels[n - 1][k - 1][m - k].clone()
    }

    /// Substitute a rational value for p in every entry.
    pub fn eval_at(&self, p: &Rat) -> OracleLevels<Rat> {
        self.levels
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|row| row.iter().map(|e| e.eval(p)).collect())
                    .collect()
            })
            .collect()
    }
}

/// Build the two p-deformed pyramids by their recurrences: the
/// A-variant with level weight p(m−k)+k and the B-variant with pm−k.
pub fn build_p(n_max: usize) -> (PPyramidTable, PPyramidTable) {
    let lin = |c0: i64, c1: i64| AlphaPoly::new(vec![rat(c0), rat(c1)]);
    let a = build_levels::<AlphaPoly>(n_max, |k, m| lin(k as i64, (m - k) as i64));
    let b = build_levels::<AlphaPoly>(n_max, |k, m| lin(-(k as i64), m as i64));
    (PPyramidTable { levels: a }, PPyramidTable { levels: b })
}

/// Rewrite the A-variant expansion into the oracle's basis at a given
/// p: each A-term carries e^{(k+p(m−k))x}Δ^{−m}, and expanding
/// e^{p(m−k)x} = (1 + pΔ_p)^{m−k} spreads it over Δ^{−m}…Δ^{−(k)};
/// collecting per (k, m′) must reproduce the raw oracle coefficients.
fn a_form_in_oracle_basis<R: Ring>(a_eval: &OracleLevels<R>, p: &R) -> OracleLevels<R> {
    let mut out: OracleLevels<R> = Vec::with_capacity(a_eval.len());
    for (ni, lvl) in a_eval.iter().enumerate() {
        let n = ni + 1;
        let mut acc = vec![vec![R::zero(); n + 1]; n + 1];
        for (ki, row) in lvl.iter().enumerate() {
            let k = ki + 1;
            for (mi, e) in row.iter().enumerate() {
                let m = k + mi;
                // (−1)^{m−k} · A · Σ_i binom(m−k, i) pⁱ Δ^{i−m}
                let signed = if (m - k) % 2 == 0 {
                    e.clone()
                } else {
                    -e.clone()
                };
                let mut p_pow = R::one();
                for i in 0..=(m - k) {
                    let w = Rat::from(binom(m - k, i));
                    let contrib = (p_pow.clone() * signed.clone()).scale_rat(&w);
                    acc[k][m - i] = acc[k][m - i].clone() + contrib;
                    p_pow = p_pow * p.clone();
                }
            }
        }
        let mut lvl_out = Vec::with_capacity(n);
        for k in 1..=n {
            lvl_out.push(acc[k][k..=n].to_vec());
        }
        out.push(lvl_out);
    }
    out
}

/// Cross-check both p-deformed tables against the differentiation
/// oracle: the B-variant symbolically over ℚ[p] via B = (−1)^{n−k}·C,
/// the p = 0 collapse of the A-variant against the integer pyramid,
/// and at each sampled rational p both variants against the oracle run
/// at that p (the A-variant after the exponential basis change).
pub fn p_tables_check(n_max: usize, samples: &[Rat]) -> Vec<Check> {
    let (a, b) = build_p(n_max);
    let mut out = Vec::new();

    // B symbolically: flip (−1)^{n−k} and compare with the oracle over ℚ[p].
    let oracle_sym = derivative_oracle::<AlphaPoly>(n_max, &AlphaPoly::x());
    let b_signed: OracleLevels<AlphaPoly> = b
        .levels
        .iter()
        .enumerate()
        .map(|(ni, lvl)| {
            let n = ni + 1;
            lvl.iter()
                .enumerate()
                .map(|(ki, row)| {
                    let k = ki + 1;
                    row.iter()
                        .map(|e| {
                            if (n - k) % 2 == 0 {
                                e.clone()
                            } else {
                                -e.clone()
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    out.push(mismatch_report(
        "pyramid-p-oracle-b-symbolic",
        &b_signed,
        &oracle_sym,
        n_max,
    ));

    // A at p = 0 collapses to the integer pyramid.
    let collapsed = a.eval_at(&Rat::zero());
    let plain: OracleLevels<Rat> = PyramidTable::build(n_max)
        .levels
        .iter()
        .map(|lvl| {
            lvl.iter()
                .map(|row| row.iter().map(|e| Rat::from(e.clone())).collect())
                .collect()
        })
        .collect();
    out.push(mismatch_report(
        "pyramid-p-collapse-zero",
        &collapsed,
        &plain,
        n_max,
    ));

    for p in samples {
        let oracle = derivative_oracle::<Rat>(n_max, p);
        let b_eval = b.eval_at(p);
        let b_signed: OracleLevels<Rat> = b_eval
            .iter()
            .enumerate()
            .map(|(ni, lvl)| {
                let n = ni + 1;
                lvl.iter()
                    .enumerate()
                    .map(|(ki, row)| {
                        let k = ki + 1;
                        row.iter()
                            .map(|e| {
                                if (n - k) % 2 == 0 {
                                    e.clone()
                                } else {
                                    -e.clone()
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        out.push(mismatch_report(
            &format!("pyramid-p-oracle-b-p={p}"),
            &b_signed,
            &oracle,
            n_max,
        ));
        let a_based = a_form_in_oracle_basis(&a.eval_at(p), p);
        out.push(mismatch_report(
            &format!("pyramid-p-oracle-a-p={p}"),
            &a_based,
            &oracle,
            n_max,
        ));
    }
    out
}

/// All entries of the integer pyramid are strictly positive (the
/// recurrence has nonnegative weights and a positive seed).
pub fn positivity_check(table: &PyramidTable) -> Check {
    for n in 1..=table.n_max() {
        for (ki, row) in table.rows(n).iter().enumerate() {
            for (mi, e) in row.iter().enumerate() {
                if !e.is_positive() {
                    return Check::new(
                        "pyramid-positive",
                        false,
                        format!(
                            "non-positive entry {e} at n={n}, k={}, m={}",
                            ki + 1,
                            ki + 1 + mi
                        ),
                    );
                }
            }
        }
    }
    Check::new(
        "pyramid-positive",
        true,
        format!("all entries positive for n ≤ {}", table.n_max()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn int_rows(table: &PyramidTable, n: usize) -> Vec<Vec<i64>> {
        table
            .rows(n)
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| i64::try_from(e).expect("small"))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_slices_match_reference_tables() {
        let t = PyramidTable::build(6);
        assert_eq!(int_rows(&t, 1), vec![vec![1]]);
        assert_eq!(int_rows(&t, 2), vec![vec![1, 1], vec![1]]);
        assert_eq!(int_rows(&t, 3), vec![vec![1, 2, 2], vec![3, 3], vec![1]]);
        assert_eq!(
            int_rows(&t, 4),
            vec![vec![1, 3, 6, 6], vec![7, 14, 11], vec![6, 6], vec![1]]
        );
        assert_eq!(
            int_rows(&t, 5),
            vec![
                vec![1, 4, 12, 24, 24],
                vec![15, 45, 70, 50],
                vec![25, 50, 35],
                vec![10, 10],
                vec![1]
            ]
        );
        assert_eq!(
            int_rows(&t, 6),
            vec![
                vec![1, 5, 20, 60, 120, 120],
                vec![31, 124, 287, 404, 274],
                vec![90, 270, 375, 225],
                vec![65, 130, 85],
                vec![15, 15],
                vec![1]
            ]
        );
    }

    #[test]
    fn render_layout_is_row_per_k() {
        let t = PyramidTable::build(4);
        assert_eq!(
            t.render_slice(4),
            "k=1: 1 3 6 6\nk=2: 7 14 11\nk=3: 6 6\nk=4: 1"
        );
    }

    #[test]
    fn faces_hold_to_depth_twelve() {
        let t = PyramidTable::build(12);
        for c in faces_check(&t) {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
        // spot values against the standard triangles
        assert_eq!(t.entry(4, 2, 2), BigInt::from(7));
        assert_eq!(stirling2_triangle(4)[4][2], BigInt::from(7));
        assert_eq!(t.entry(4, 2, 4), BigInt::from(11));
        assert_eq!(stirling1_triangle(4)[4][2], BigInt::from(11));
        assert_eq!(t.entry(4, 1, 3), BigInt::from(6));
        assert!(positivity_check(&t).pass);
    }

    #[test]
    fn face_check_detects_corruption() {
        let mut t = PyramidTable::build(5);
        t.levels[3][1][1] += BigInt::one(); // A_{2,3}^4 — interior, on no face
        assert!(faces_check(&t).iter().all(|c| c.pass));
        t.levels[4][4][0] += BigInt::one(); // A_{5,5}^5 — diagonal
        assert!(faces_check(&t).iter().any(|c| !c.pass));
    }

    #[test]
    fn oracle_seed_and_depth_one() {
        let o = derivative_oracle::<Rat>(1, &Rat::zero());
        assert_eq!(o, vec![vec![vec![rat(1)]]]);
    }

    #[test]
    fn oracle_matches_recurrence_to_depth_eight() {
        let c = ei_oracle_check(8);
        assert!(c.pass, "{}", c.detail);
    }

    #[test]
    fn oracle_mismatch_is_located() {
        let mut a = derivative_oracle::<Rat>(4, &Rat::zero());
        let b = a.clone();
        assert_eq!(first_level_mismatch(&a, &b), None);
        a[3][1][2] += rat(1); // n=4, k=2, m=4
        assert_eq!(first_level_mismatch(&a, &b), Some((4, 2, 4)));
    }

    #[test]
    fn p_table_small_entries() {
        let (a, b) = build_p(3);
        // A³_{1,2} = p + 2; B²_{1,1} = p − 1; B³_{1,2} = 3p − 2
        assert_eq!(a.entry(3, 1, 2), AlphaPoly::new(vec![rat(2), rat(1)]));
        assert_eq!(b.entry(2, 1, 1), AlphaPoly::new(vec![rat(-1), rat(1)]));
        assert_eq!(b.entry(3, 1, 2), AlphaPoly::new(vec![rat(-2), rat(3)]));
        // diagonal entries of the A-variant at p=0 are Stirling-2
        let at0 = a.eval_at(&Rat::zero());
        assert_eq!(at0[2][1][0], Rat::from(BigInt::from(3))); // A_{2,2}^3 = {3,2}
    }

    #[test]
    fn p_tables_pass_all_cross_checks() {
        let samples = [rat(0), rat(1), rat(2), rat(-1), ratio(1, 2)];
        for c in p_tables_check(5, &samples) {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn signed_row_sums_match_numeric_derivatives() {
        // At x = 1 the x^{−m} basis is invisible and the normal form reads
        // dⁿ/dxⁿ e^{αEi(x)} / e^{αEi(1)} = Σ_k (αe)^k Σ_m (−1)^{m−k} A_{k,m}^n,
        // so the signed row sums are pinned by an independent numeric route:
        // high-precision central differences of e^{α·Ei(x)}.
        use crate::num::special::ei;
        use crate::num::{bf_from_rat, bf_int, bf_to_f64};
        let prec = 320;
        let table = PyramidTable::build(5);
        let e = bf_int(1, prec).exp();
        let half_h = bf_from_rat(&Rat::new(BigInt::one(), BigInt::from(2).pow(25)), prec);
        for alpha in [1i64, 2] {
            let g = |x: &crate::num::BigFloat| (ei(x, prec).unwrap() * bf_int(alpha, prec)).exp();
            let g1 = g(&bf_int(1, prec));
            for n in 1..=5usize {
                // exact side: Σ_k (αe)^k · row sum with sign (−1)^{m−k}
                let mut predicted = bf_int(0, prec);
                let mut weight = bf_int(1, prec);
                for k in 1..=n {
                    weight *= &e * bf_int(alpha, prec);
                    let mut s = BigInt::zero();
                    for m in k..=n {
                        let entry = table.entry(n, k, m);
                        if (m - k) % 2 == 0 {
                            s += entry;
                        } else {
                            s -= entry;
                        }
                    }
                    predicted += &weight * bf_from_rat(&Rat::from(s), prec);
                }
                // numeric side: n-th central difference of g at x = 1
                let mut stencil = bf_int(0, prec);
                for j in 0..=n {
                    let x = bf_int(1, prec) + bf_int(n as i64 - 2 * j as i64, prec) * &half_h;
                    let c = Rat::from_integer(crate::scalar::binom(n, j));
                    let term = g(&x) * bf_from_rat(&c, prec);
                    if j % 2 == 0 {
                        stencil += term;
                    } else {
                        stencil -= term;
                    }
                }
                let mut measured = stencil / g1.clone();
                for _ in 0..n {
                    measured /= &half_h * bf_int(2, prec);
                }
                let rel = bf_to_f64(&((&measured - &predicted) / &predicted)).abs();
                assert!(rel < 1e-8, "n={n} α={alpha}: relative error {rel:.3e}");
            }
        }
    }

    #[test]
    fn p_oracle_at_zero_equals_ei_oracle() {
        let tp = derivative_oracle::<Rat>(6, &Rat::zero());
        let sym = derivative_oracle::<AlphaPoly>(6, &AlphaPoly::x());
        let collapsed: OracleLevels<Rat> = sym
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|row| row.iter().map(|e| e.eval(&Rat::zero())).collect())
                    .collect()
            })
            .collect();
        assert_eq!(first_level_mismatch(&tp, &collapsed), None);
    }
}
