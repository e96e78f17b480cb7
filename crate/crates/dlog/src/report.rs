//! Structured pass/fail reporting shared by the command-line tool, the
//! examples, and the test suites, plus the JSON/CSV renderings of the core
//! data types.

use crate::poly::AlphaPoly;
use crate::scalar::{fmt_rat, Rat};
use crate::series::TruncSeries;
use serde::Serialize;

/// One named verification with its outcome and a human-readable detail line.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    /// Exact-equality check with a uniform detail message.
    pub fn equal<T: PartialEq + std::fmt::Debug>(
        name: impl Into<String>,
        got: &T,
        want: &T,
    ) -> Self {
        let pass = got == want;
        let detail = if pass {
            "exact match".to_string()
        } else {
            format!("got {got:?}, want {want:?}")
        };
        Check::new(name, pass, detail)
    }
}

/// True when every check in the slice passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

/// Plain-text rendering: one aligned `PASS`/`FAIL` line per check.
pub fn render_plain(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{tag}  {:width$}  {}\n", c.name, c.detail));
    }
    out
}

/// JSON form of a rational series: explicit order plus `"p/q"` strings.
pub fn series_json(s: &TruncSeries<Rat>) -> serde_json::Value {
    serde_json::json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(fmt_rat).collect::<Vec<_>>(),
    })
}

/// JSON form of a polynomial: degree-ordered `"p/q"` coefficient strings.
pub fn poly_json(p: &AlphaPoly) -> serde_json::Value {
    serde_json::json!({
        "degree": p.degree().map(|d| d as i64).unwrap_or(-1),
        "coeffs": p.coeffs().iter().map(fmt_rat).collect::<Vec<_>>(),
    })
}

/// Two-column CSV with the fixed `n,value` header.
pub fn csv_table<I, A, B>(rows: I) -> String
where
    I: IntoIterator<Item = (A, B)>,
    A: std::fmt::Display,
    B: std::fmt::Display,
{
    let mut out = String::from("n,value\n");
    for (n, v) in rows {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

/// Multi-column CSV with an explicit header row; fields are written as-is,
/// so callers must not pass values containing commas.
pub fn csv_columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn check_rendering() {
        let cs = vec![
            Check::new("alpha", true, "exact match"),
            Check::new("beta-longer", false, "got 1, want 2"),
        ];
        assert!(!all_pass(&cs));
        let text = render_plain(&cs);
        assert!(text.contains("PASS  alpha"));
        assert!(text.contains("FAIL  beta-longer  got 1, want 2"));
    }

    #[test]
    fn json_forms() {
        let s = TruncSeries::new(2, vec![rat(0), rat(1), ratio(-1, 2)]);
        let v = series_json(&s);
        assert_eq!(v["order"], 2);
        assert_eq!(v["coeffs"][2], "-1/2");
        let p = AlphaPoly::new(vec![ratio(1, 6), rat(-1), rat(1)]);
        let pv = poly_json(&p);
        assert_eq!(pv["degree"], 2);
        assert_eq!(pv["coeffs"][0], "1/6");
    }

    #[test]
    fn csv_table_shape() {
        let t = csv_table([(1, "a"), (2, "b")]);
        assert_eq!(t, "n,value\n1,a\n2,b\n");
    }
}
