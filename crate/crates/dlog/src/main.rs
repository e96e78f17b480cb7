//! Thin command-line front end over the library: every computation and
//! verification suite behind one executable, with plain, JSON and CSV
//! output. All mathematics lives in the library; this file only parses
//! flags, dispatches, and renders.
//!
//! Exit codes: 0 on success, 1 when any emitted check fails, 2 on usage
//! errors. For a fixed set of flags (including `--seed`) the output is
//! byte-identical across runs.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use dlog::num::{bf_abs, bf_from_rat, bf_to_dec_string, bf_to_f64, BigFloat};
use dlog::report::{self, all_pass, Check};
use dlog::scalar::{fmt_rat, rat, ratio, Rat};
use dlog::series::TruncSeries;
use dlog::soldner::{SeriesKind, SoldnerCoeffs};
use dlog::{binomial, catalog, chain, family, mfun, pyramid, soldner, verify};

#[derive(Parser)]
#[command(
    name = "dlog",
    version,
    about = "Exact series engine for the inverse logarithmic derivative chain"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Plain => "plain",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Flags shared by every subcommand; defaults match the documented
/// reproducible configuration.
#[derive(Args)]
struct Common {
    /// Order of series and tables
    #[arg(long, default_value_t = 12)]
    n: usize,
    /// Term count for numeric summations
    #[arg(long, default_value_t = 10_000)]
    terms: usize,
    /// Working precision in bits
    #[arg(long, default_value_t = 256)]
    prec: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for the randomized suites
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilySuite {
    Coeffs,
    Maps,
    Psi,
    Obs,
    Pole,
    Towers,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PVariant {
    A,
    B,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a catalog series, optionally inverted or chain-transformed
    Series {
        #[command(flatten)]
        common: Common,
        /// Seed name: `exp` (scaled by --p) or a catalog entry
        #[arg(long)]
        name: String,
        /// Scale parameter for the `exp` seed, as a rational like 3 or 1/2
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        /// Replace the series by its compositional inverse
        #[arg(long)]
        inverse: bool,
        /// Apply the chain map this many times (negative for the inverse map)
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i64,
    },
    /// Build the polynomial sequence attached to a generator and check it
    Binom {
        #[command(flatten)]
        common: Common,
        /// Generator name: `exp` (scaled by --p) or a catalog entry
        #[arg(long, default_value = "expm1")]
        name: String,
        /// Scale parameter for the `exp` generator
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
    },
    /// Iterate the chain map on a seed series or search for its period
    Tchain {
        #[command(flatten)]
        common: Common,
        /// Seed name: `exp` (scaled by --p) or a catalog entry
        #[arg(long)]
        seed_fn: String,
        /// Scale parameter for the `exp` seed
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        /// Number of chain applications when not searching for a period
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        k: i64,
        /// Search for the smallest k with the k-fold chain equal to the seed
        #[arg(long)]
        find_period: bool,
        /// Largest period considered by the search
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
    /// Soldner-ratio coefficient tables and the attached value series
    Soldner {
        #[command(flatten)]
        common: Common,
        /// Series to evaluate: lnmu, mu1, one, ln2, or pi2
        #[arg(long)]
        series: Option<String>,
    },
    /// Special values and numeric evaluation of the reciprocal-zero sum
    Mfun {
        #[command(flatten)]
        common: Common,
        /// Evaluation point s > 1 as a rational like 2 or 5/2
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        s: String,
        /// Depth of the exact special-value table (1 to 8), overriding --n
        #[arg(long, value_name = "N")]
        special: Option<usize>,
        /// Cross-check the series route against both integral routes at --s
        #[arg(long)]
        check_integrals: bool,
    },
    /// Derivative-pyramid slices and their cross-checks
    Pyramid {
        #[command(flatten)]
        common: Common,
        /// Evaluate the deformed tables at this rational parameter
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        /// Which deformed table to show when --p is given
        #[arg(long, value_enum, default_value_t = PVariant::A)]
        variant: PVariant,
    },
    /// One-parameter family members and their identity suites
    Family {
        #[command(flatten)]
        common: Common,
        /// Family parameter as a rational like 1, 1/2, or -1
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        p: String,
        /// Which identity suite to run
        #[arg(long, value_enum, default_value_t = FamilySuite::All)]
        check: FamilySuite,
    },
    /// Run the cross-module verification suite
    Verify {
        #[command(flatten)]
        common: Common,
        /// Trim the expensive sweeps (finishes in well under two minutes)
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        /// Run everything at acceptance sizes (the default)
        #[arg(long)]
        full: bool,
    },
}

/// What a subcommand produced, before format-specific rendering.
struct Outcome {
    plain: String,
    results: Vec<Value>,
    checks: Vec<Check>,
    csv: Option<String>,
}

#[derive(serde::Serialize)]
struct RunConfig {
    subcommand: &'static str,
    n: usize,
    terms: usize,
    prec_bits: usize,
    p: String,
    format: &'static str,
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, p, common, built) = match cli.cmd {
        Cmd::Series {
            common,
            name,
            p,
            inverse,
            k,
        } => {
            let r = cmd_series(&common, &name, p.as_deref(), inverse, k);
            (
                "series",
                r.as_ref().ok().map(|t| t.1.clone()),
                common,
                r.map(|t| t.0),
            )
        }
        Cmd::Binom { common, name, p } => {
            let r = cmd_binom(&common, &name, p.as_deref());
            (
                "binom",
                r.as_ref().ok().map(|t| t.1.clone()),
                common,
                r.map(|t| t.0),
            )
        }
        Cmd::Tchain {
            common,
            seed_fn,
            p,
            k,
            find_period,
            max_k,
        } => {
            let r = cmd_tchain(&common, &seed_fn, p.as_deref(), k, find_period, max_k);
            (
                "tchain",
                r.as_ref().ok().map(|t| t.1.clone()),
                common,
                r.map(|t| t.0),
            )
        }
        Cmd::Soldner { common, series } => {
            let r = cmd_soldner(&common, series.as_deref());
            ("soldner", None, common, r)
        }
        Cmd::Mfun {
            common,
            s,
            special,
            check_integrals,
        } => {
            let r = cmd_mfun(&common, &s, special, check_integrals);
            (
                "mfun",
                r.as_ref().ok().map(|t| t.1.clone()),
                common,
                r.map(|t| t.0),
            )
        }
        Cmd::Pyramid { common, p, variant } => {
            let r = cmd_pyramid(&common, p.as_deref(), variant);
            (
                "pyramid",
                r.as_ref().ok().map(|t| t.1.clone()),
                common,
                r.map(|t| t.0),
            )
        }
        Cmd::Family { common, p, check } => {
            let r = cmd_family(&common, &p, check);
            (
                "family",
                r.as_ref().ok().map(|t| t.1.clone()),
                common,
                r.map(|t| t.0),
            )
        }
        Cmd::Verify {
            common,
            quick,
            full: _,
        } => {
            let depth = if quick {
                verify::Depth::Quick
            } else {
                verify::Depth::Full
            };
            let r = Ok(cmd_verify(&common, depth));
            ("verify", None, common, r)
        }
    };
    let out = match built {
        Ok(out) => out,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    render(name, &common, p, out)
}

fn render(name: &'static str, common: &Common, p: Option<Rat>, out: Outcome) -> ExitCode {
    let ok = all_pass(&out.checks);
    match common.format {
        Format::Plain => {
            print!("{}", out.plain);
            if !out.checks.is_empty() {
                print!("{}", report::render_plain(&out.checks));
                let passed = out.checks.iter().filter(|c| c.pass).count();
                println!("{passed}/{} checks passed", out.checks.len());
            }
        }
        Format::Json => {
            let config = RunConfig {
                subcommand: name,
                n: common.n,
                terms: common.terms,
                prec_bits: common.prec,
                p: fmt_rat(&p.unwrap_or_else(Rat::one)),
                format: common.format.name(),
                seed: common.seed,
            };
            let doc = json!({
                "subcommand": name,
                "config": config,
                "results": out.results,
                "checks": out.checks,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
        Format::Csv => match out.csv {
            Some(body) => print!("{body}"),
            None => {
                eprintln!("error: no tabular output for `{name}`; use plain or json");
                return ExitCode::from(2);
            }
        },
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let t = s.trim();
    let int = |u: &str| {
        u.parse::<i64>()
            .map_err(|_| format!("invalid rational `{s}`; expected forms like 3, -1, 1/2"))
    };
    match t.split_once('/') {
        Some((a, b)) => {
            let (num, den) = (int(a)?, int(b)?);
            if den == 0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(ratio(num, den))
        }
        None => Ok(rat(int(t)?)),
    }
}

/// Resolves a seed name to a series, treating `exp` as the p-scaled
/// exponential generator.
fn seed_series(
    name: &str,
    p: Option<&str>,
    order: usize,
) -> Result<(TruncSeries<Rat>, Rat), String> {
    if name == "exp" {
        let p = match p {
            Some(s) => parse_rat(s)?,
            None => Rat::one(),
        };
        return Ok((catalog::expm1_scaled(&p, order), p));
    }
    if p.is_some() {
        return Err("--p only applies to the `exp` seed".into());
    }
    match catalog::by_name(name, order) {
        Some(f) => Ok((f, Rat::one())),
        None => Err(format!(
            "unknown seed `{name}`; known: exp, {}",
            catalog::NAMES.join(", ")
        )),
    }
}

/// Decimal digit count carried by a binary precision.
fn digits_for(prec: usize) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor() as usize
}

fn series_csv(f: &TruncSeries<Rat>) -> String {
    report::csv_table((0..=f.order()).map(|n| (n, fmt_rat(&f.coeff(n)))))
}

fn series_result(name: &str, f: &TruncSeries<Rat>) -> Value {
    json!({ "name": name, "series": report::series_json(f) })
}

fn cmd_series(
    common: &Common,
    name: &str,
    p: Option<&str>,
    inverse: bool,
    k: i64,
) -> Result<(Outcome, Rat), String> {
    if common.n < 1 {
        return Err("--n must be at least 1".into());
    }
    let (mut f, p) = seed_series(name, p, common.n)?;
    let mut label = name.to_string();
    if inverse {
        if !chain::is_normalized(&f) {
            return Err(format!(
                "`{name}` has no compositional inverse (not normalized)"
            ));
        }
        f = f.comp_inverse().map_err(|e| e.to_string())?;
        label = format!("inverse of {label}");
    }
    if k != 0 {
        if !chain::is_normalized(&f) {
            return Err(format!(
                "`{name}` is outside the chain domain (not normalized)"
            ));
        }
        let state = chain::chain(&f, k, f.order()).map_err(|e| e.to_string())?;
        f = state.link(k).expect("requested link was built").clone();
        label = format!("chain^{k} of {label}");
    }
    let plain = format!("{label}: {}\n", f.fmt_with_var("x"));
    let csv = Some(series_csv(&f));
    let results = vec![series_result(&label, &f)];
    Ok((
        Outcome {
            plain,
            results,
            checks: Vec::new(),
            csv,
        },
        p,
    ))
}

fn cmd_binom(common: &Common, name: &str, p: Option<&str>) -> Result<(Outcome, Rat), String> {
    if common.n < 1 {
        return Err("--n must be at least 1".into());
    }
    let (f, p) = seed_series(name, p, common.n)?;
    let seq = binomial::from_generator(&f, common.n)
        .map_err(|e| format!("`{name}` is not a valid generator: {e}"))?;
    let mut plain = String::new();
    let mut results = Vec::new();
    for (n, poly) in seq.polys.iter().enumerate() {
        plain += &format!("p_{n}(a) = {}\n", poly.fmt_with_var("a"));
        let mut row = report::poly_json(poly);
        row["n"] = json!(n);
        results.push(row);
    }
    let checks = vec![
        binomial::convolution_check(&seq),
        binomial::delta_check(&seq),
        binomial::t_check(&seq),
    ];
    Ok((
        Outcome {
            plain,
            results,
            checks,
            csv: None,
        },
        p,
    ))
}

fn cmd_tchain(
    common: &Common,
    seed_fn: &str,
    p: Option<&str>,
    k: i64,
    find_period: bool,
    max_k: usize,
) -> Result<(Outcome, Rat), String> {
    if common.n < 2 {
        return Err("--n must be at least 2".into());
    }
    let (f, p) = seed_series(seed_fn, p, common.n)?;
    if !chain::is_normalized(&f) {
        return Err(format!(
            "`{seed_fn}` is outside the chain domain (not normalized)"
        ));
    }
    if find_period {
        let found = chain::find_period(&f, max_k, common.n).map_err(|e| e.to_string())?;
        let plain = match found {
            Some(kk) => format!("period: {kk}\n"),
            None => format!("period: none up to {max_k}\n"),
        };
        let results = vec![json!({ "name": "period", "value": found, "max_k": max_k })];
        return Ok((
            Outcome {
                plain,
                results,
                checks: Vec::new(),
                csv: None,
            },
            p,
        ));
    }
    let state = chain::chain(&f, k, common.n).map_err(|e| e.to_string())?;
    let g = state.link(k).expect("requested link was built");
    let plain = format!("chain^{k} of {seed_fn}: {}\n", g.fmt_with_var("x"));
    let csv = Some(series_csv(g));
    let results = vec![series_result(&format!("chain^{k}"), g)];
    Ok((
        Outcome {
            plain,
            results,
            checks: Vec::new(),
            csv,
        },
        p,
    ))
}

/// Renders a high-precision value with its decimal expansion and an
/// explicit error field.
fn value_result(name: &str, v: &BigFloat, prec: usize, error: &str) -> (String, Value) {
    let dec = bf_to_dec_string(v, digits_for(prec));
    let line = format!("{name} = {dec} (error: {error})\n");
    let entry = json!({ "name": name, "value": dec, "error": error });
    (line, entry)
}

fn cmd_soldner(common: &Common, series: Option<&str>) -> Result<Outcome, String> {
    if let Some(kind_str) = series {
        let kind = SeriesKind::parse(kind_str).ok_or_else(|| {
            format!("unknown series `{kind_str}`; known: lnmu, mu1, one, ln2, pi2")
        })?;
        if common.terms < 10 {
            return Err("--terms must be at least 10".into());
        }
        // Exact rationals only for the short certification prefix; the
        // requested term count applies to the big-float tail.
        let sc = SoldnerCoeffs::new(common.terms.min(64), common.terms, common.prec);
        let rep = sc.series(kind, common.prec);
        let mut plain = format!("series {} over {} terms\n", kind.name(), rep.terms);
        if rep.conditional {
            plain += "order-sensitive sum; terms taken in the symmetric arrangement\n";
        }
        let tail = match rep.tail_estimate {
            Some(t) => format!("{t:.2e} tail bound"),
            None => "tail not estimated".to_string(),
        };
        let (line, entry) = value_result("partial sum", &rep.partial, common.prec, &tail);
        plain += &line;
        let mut results = vec![entry];
        for (label, v) in [
            ("cesaro mean", &rep.cesaro),
            ("euler transform", &rep.euler),
        ] {
            if let Some(v) = v {
                let (line, entry) = value_result(label, v, common.prec, "accelerated partial sum");
                plain += &line;
                results.push(entry);
            }
        }
        if let Some(target) = &rep.target {
            let d = bf_to_f64(&bf_abs(&(rep.partial.clone() - target)));
            let (line, mut entry) =
                value_result("closed-form target", target, common.prec, "reference");
            plain += &line;
            plain += &format!("distance of partial sum from target: {d:.2e}\n");
            entry["distance"] = json!(format!("{d:.2e}"));
            results.push(entry);
        }
        let checks = sc.series_checks(common.prec);
        return Ok(Outcome {
            plain,
            results,
            checks,
            csv: None,
        });
    }

    // No series requested: print the exact coefficient table and its
    // big-float companion column bₙ = (−1)^{n−1}aₙe^{−γn}.
    if common.n < 1 {
        return Err("--n must be at least 1".into());
    }
    if common.n > 256 {
        return Err(
            "--n above 256 is impractical for the exact table; use --series instead".into(),
        );
    }
    let sc = SoldnerCoeffs::new(common.n, common.n, common.prec);
    let digits = digits_for(common.prec);
    let mut plain = String::new();
    let mut csv = String::from("n,a,b\n");
    let mut a_out = Vec::new();
    let mut b_out = Vec::new();
    for n in 1..=common.n {
        let a_s = fmt_rat(&sc.a()[n]);
        let b_s = bf_to_dec_string(&sc.b()[n], digits);
        plain += &format!("a_{n} = {a_s}\n");
        csv += &format!("{n},{a_s},{b_s}\n");
        a_out.push(a_s);
        b_out.push(b_s);
    }
    for (n, b_s) in b_out.iter().enumerate() {
        plain += &format!("b_{} = {b_s}\n", n + 1);
    }
    let results = vec![
        json!({ "name": "a-coefficients", "coeffs": a_out }),
        json!({ "name": "b-sequence", "prec_bits": common.prec, "values": b_out }),
    ];
    let checks = vec![soldner::exp_psi_identity(common.n.min(12))];
    Ok(Outcome {
        plain,
        results,
        checks,
        csv: Some(csv),
    })
}

fn cmd_mfun(
    common: &Common,
    s: &str,
    special: Option<usize>,
    check_integrals: bool,
) -> Result<(Outcome, Rat), String> {
    let s_rat = parse_rat(s)?;
    let n_special = match special {
        None => common.n.clamp(1, 8),
        Some(n) if (1..=8).contains(&n) => n,
        Some(n) => return Err(format!("--special must be between 1 and 8, got {n}")),
    };
    let sv = mfun::m_special_values(n_special);
    let mut plain = format!("M(0) = {}\n", fmt_rat(&sv.m0));
    let mut rows = vec![(0usize, fmt_rat(&sv.m0))];
    for (i, v) in sv.m_neg.iter().enumerate() {
        plain += &format!("M(-{}) = {}\n", i + 1, fmt_rat(v));
        rows.push((i + 1, fmt_rat(v)));
    }
    plain += &format!(
        "residue cofactors at s = 1/2 - N: {}\n",
        sv.half_residues
            .iter()
            .map(fmt_rat)
            .collect::<Vec<_>>()
            .join(", ")
    );
    let mut results = vec![json!({
        "name": "special-values",
        "m0": fmt_rat(&sv.m0),
        "m_negative": sv.m_neg.iter().map(fmt_rat).collect::<Vec<_>>(),
        "half_line_residue_cofactors": sv.half_residues.iter().map(fmt_rat).collect::<Vec<_>>(),
    })];

    let s_bf = bf_from_rat(&s_rat, common.prec);
    let mn = mfun::m_numeric(&s_bf, common.terms, common.prec)
        .map_err(|e| format!("cannot evaluate at s = {}: {e}", fmt_rat(&s_rat)))?;
    plain += &format!(
        "M({}) series route = {:.15} (tail correction {:.2e})\n",
        fmt_rat(&s_rat),
        mn.series,
        mn.tail
    );
    let (l1, e1) = value_result(
        "integral (direct)",
        &mn.integral_direct,
        common.prec,
        "quadrature",
    );
    let (l2, e2) = value_result(
        "integral (by parts)",
        &mn.integral_parts,
        common.prec,
        "quadrature",
    );
    plain += &l1;
    plain += &l2;
    results.push(json!({
        "name": format!("m-at-{}", fmt_rat(&s_rat)),
        "series": format!("{:.15}", mn.series),
        "tail": format!("{:.2e}", mn.tail),
    }));
    results.push(e1);
    results.push(e2);

    let mut checks = mfun::genfunc_checks(common.n.clamp(2, 10));
    checks.push(Check::new(
        "special-values",
        sv.m0 == ratio(-13, 18) && sv.half_residues[0] == ratio(1, 3),
        "M(0) = -13/18 and the first half-line residue cofactor is 1/3",
    ));
    if check_integrals {
        checks.extend(mfun::m_numeric_checks(
            &s_bf,
            common.terms,
            common.prec,
            1e-5,
        ));
    }
    let csv = Some(report::csv_table(rows));
    Ok((
        Outcome {
            plain,
            results,
            checks,
            csv,
        },
        s_rat,
    ))
}

fn cmd_pyramid(
    common: &Common,
    p: Option<&str>,
    variant: PVariant,
) -> Result<(Outcome, Rat), String> {
    if common.n < 1 {
        return Err("--n must be at least 1".into());
    }
    let n = common.n;
    if let Some(p_str) = p {
        let pv = parse_rat(p_str)?;
        let (ta, tb) = pyramid::build_p(n);
        let table = match variant {
            PVariant::A => ta,
            PVariant::B => tb,
        };
        let mut plain = String::new();
        let mut json_rows = Vec::new();
        for k in 1..=n {
            let row: Vec<String> = (k..=n)
                .map(|m| fmt_rat(&table.entry(n, k, m).eval(&pv)))
                .collect();
            plain += &format!("k={k}: {}\n", row.join(" "));
            json_rows.push(json!(row));
        }
        let results = vec![json!({ "name": "deformed-slice", "n": n, "rows": json_rows })];
        return Ok((
            Outcome {
                plain,
                results,
                checks: Vec::new(),
                csv: None,
            },
            pv,
        ));
    }

    let table = pyramid::PyramidTable::build(n);
    let plain = format!("{}\n", table.render_slice(n));
    let rows: Vec<Value> = (1..=n)
        .map(|k| {
            json!((k..=n)
                .map(|m| table.entry(n, k, m).to_string())
                .collect::<Vec<_>>())
        })
        .collect();
    let results = vec![json!({ "name": "slice", "n": n, "rows": rows })];
    let mut checks = pyramid::faces_check(&table);
    checks.push(pyramid::positivity_check(&table));
    checks.push(pyramid::ei_oracle_check(n.min(8)));
    Ok((
        Outcome {
            plain,
            results,
            checks,
            csv: None,
        },
        Rat::one(),
    ))
}

fn cmd_family(common: &Common, p_str: &str, which: FamilySuite) -> Result<(Outcome, Rat), String> {
    let p = parse_rat(p_str)?;
    let n = common.n;
    if n < 4 {
        return Err("family needs --n at least 4".into());
    }
    let fam = family::PFamily::construct(&p, n);
    let members: [(&str, &TruncSeries<Rat>); 5] = [
        ("y", fam.y()),
        ("T", fam.t_big()),
        ("gamma", fam.gamma()),
        ("omega", fam.omega()),
        ("psi", fam.psi()),
    ];
    let mut plain = String::new();
    let mut results = Vec::new();
    for (label, s) in members {
        plain += &format!("{label}(x) = {}\n", s.fmt_with_var("x"));
        results.push(series_result(label, s));
    }

    let mut checks = Vec::new();
    let p0 = p.is_zero();
    let want = |t: FamilySuite| which == t || which == FamilySuite::All;
    if want(FamilySuite::Coeffs) && !p0 {
        checks.extend(family::gamma_coeff_checks(&fam));
        checks.extend(family::omega_closed_form_checks(&fam));
        checks.push(family::gamma_product_inverse_check(&fam));
        checks.extend(family::log_gamma_slope_checks(&fam));
        checks.extend(family::exp_binomial_expansion_checks(&fam));
    }
    if want(FamilySuite::Maps) {
        checks.extend(family::t_map_checks(&fam));
        checks.extend(family::chain_coherence_checks(&fam));
        if p0 {
            checks.extend(family::p_zero_reference_checks(n));
        }
    }
    if want(FamilySuite::Psi) {
        checks.extend(family::psi_moment_shift_checks(&fam));
        if !p0 {
            checks.push(family::psi_exp_sum_check(
                &fam,
                n.saturating_sub(3).clamp(2, 9),
            ));
        }
        checks.extend(family::psi_closed_form_checks(n));
    }
    if want(FamilySuite::Obs) {
        checks.extend(family::observation_checks(&fam));
        match family::observation_numeric_checks(&fam, common.prec) {
            Ok(cs) => checks.extend(cs),
            Err(e) => checks.push(Check::new(
                "numeric-observations",
                false,
                format!("numeric failure: {e}"),
            )),
        }
    }
    if want(FamilySuite::Pole) {
        if !p.is_negative() && p < Rat::one() {
            checks.push(family::pole_limit_check(&p, common.prec));
        }
        if p.is_positive() && p < Rat::one() {
            checks.push(family::half_limit_trend(&p, 200, 96));
        }
    }
    if want(FamilySuite::Towers) {
        checks.extend(family::t_tower_checks(n));
    }
    Ok((
        Outcome {
            plain,
            results,
            checks,
            csv: None,
        },
        p,
    ))
}

fn cmd_verify(common: &Common, depth: verify::Depth) -> Outcome {
    let checks = verify::run(depth, common.seed);
    let plain = format!("verification depth: {}\n", depth.name());
    let results = vec![json!({
        "name": "depth",
        "value": depth.name(),
        "seed": common.seed,
    })];
    Outcome {
        plain,
        results,
        checks,
        csv: None,
    }
}
