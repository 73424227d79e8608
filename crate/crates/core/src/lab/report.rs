//! Per-theorem summaries of sweep rows.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lab::rows::{format_float, ExperimentRow};
use crate::lab::sweep::Suite;

/// Resolves `1.5`, `thm1.5` or `thm5` (and `eq1.1`, `sharp`, `lemma4.2`,
/// `cs:<suite>`) to a suite and bound name.
pub fn resolve_theorem(id: &str) -> Result<(Suite, String)> {
    let id = id.trim().to_ascii_lowercase();
    if let Some(suite) = id.strip_prefix("cs:") {
        return Ok((suite.parse()?, "cs".into()));
    }
    let found = match id.trim_start_matches("thm").trim_start_matches("theorem") {
        "1.1" | "bricks" => (Suite::Bricks, "thm1.1"),
        "1.3" | "3" => (Suite::Thm3, "thm1.3"),
        "1.4" | "4" => (Suite::Thm4, "thm1.4"),
        "1.5" | "5" => (Suite::Thm5, "thm1.5"),
        "1.5-min" => (Suite::Thm5, "thm1.5-min"),
        "1.6" | "6" => (Suite::Thm6, "thm1.6"),
        "1.8" | "8" => (Suite::Thm8, "thm1.8"),
        "1.9" | "9" => (Suite::Thm9, "thm1.9"),
        "1.10" | "10" => (Suite::Thm10, "thm1.10"),
        "eq1.1" => (Suite::Thm3, "eq1.1"),
        "sharp" => (Suite::Thm6, "sharp"),
        "lemma4.2" => (Suite::Thm8, "lemma4.2"),
        _ => return Err(Error::InvalidSpec(format!("unknown theorem '{id}'"))),
    };
    Ok((found.0, found.1.to_string()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportLine {
    pub q: u64,
    pub size: u64,
    pub trial: u32,
    pub set_size: String,
    pub measured: String,
    pub bound_expr: String,
    pub ratio: f64,
    /// `K = |A|^3 / E+(A)`, for the small-energy theorem.
    pub k: Option<BigRational>,
    pub flags: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub theorem: String,
    pub suite: Suite,
    pub lines: Vec<ReportLine>,
    /// Cells whose computation failed, with their error text.
    pub errors: Vec<String>,
    pub min_ratio: Option<f64>,
    pub median_ratio: Option<f64>,
    /// Flag name -> (rows where it holds, rows carrying it).
    pub flags: BTreeMap<String, (usize, usize)>,
}

impl TheoremReport {
    /// Minimum ratio over the rows that satisfy every flag in `required`.
    pub fn min_ratio_where(&self, required: &[&str]) -> Option<f64> {
        self.lines
            .iter()
            .filter(|l| {
                required
                    .iter()
                    .all(|f| l.flags.split(';').any(|kv| kv == format!("{f}=true")))
            })
            .map(|l| l.ratio)
            .min_by(f64::total_cmp)
    }
}

fn median(sorted: &[f64]) -> Option<f64> {
    let n = sorted.len();
    match n {
        0 => None,
        _ if n % 2 == 1 => Some(sorted[n / 2]),
        _ => Some((sorted[n / 2 - 1] + sorted[n / 2]) / 2.0),
    }
}

/// Table of ratios for one theorem. Every row must come from the theorem's suite.
pub fn theorem_report(rows: &[ExperimentRow], theorem: &str) -> Result<TheoremReport> {
    let (suite, bound) = resolve_theorem(theorem)?;
    if let Some(other) = rows.iter().find(|r| r.suite != suite.name()) {
        return Err(Error::SuiteMismatch(format!(
            "{bound} needs {suite} rows, found a {} row",
            other.suite
        )));
    }
    let mut report = TheoremReport {
        theorem: bound.clone(),
        suite,
        lines: Vec::new(),
        errors: Vec::new(),
        min_ratio: None,
        median_ratio: None,
        flags: BTreeMap::new(),
    };
    for row in rows {
        if row.is_error() {
            report.errors.push(format!("q={} size={} trial={}: {}", row.q, row.size, row.trial, row.error));
            continue;
        }
        if row.bound != bound {
            continue;
        }
        let ratio = row
            .ratio_value()
            .ok_or_else(|| Error::Parse(format!("bad ratio '{}'", row.ratio)))?;
        for (name, value) in row.flags_iter() {
            let e = report.flags.entry(name.to_string()).or_default();
            e.0 += usize::from(value);
            e.1 += 1;
        }
        let k = (suite == Suite::Thm5).then(|| k_value(row)).flatten();
        report.lines.push(ReportLine {
            q: row.q,
            size: row.size,
            trial: row.trial,
            set_size: row.set_size.clone(),
            measured: row.measured.clone(),
            bound_expr: row.bound_expr.clone(),
            ratio,
            k,
            flags: row.flags.clone(),
        });
    }
    let mut ratios: Vec<f64> = report.lines.iter().map(|l| l.ratio).collect();
    ratios.sort_by(f64::total_cmp);
    report.min_ratio = ratios.first().copied();
    report.median_ratio = median(&ratios);
    Ok(report)
}

fn k_value(row: &ExperimentRow) -> Option<BigRational> {
    let len: BigInt = row.set_size.parse().ok()?;
    let e: BigInt = row.e_add.parse().ok()?;
    Some(BigRational::new(len.pow(3), e))
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} ({} suite): {} cells, {} errors",
            self.theorem,
            self.suite,
            self.lines.len(),
            self.errors.len()
        )?;
        let show = |v: Option<f64>| v.map(format_float).unwrap_or_else(|| "-".into());
        writeln!(f, "min ratio {}  median ratio {}", show(self.min_ratio), show(self.median_ratio))?;
        for (name, (yes, total)) in &self.flags {
            writeln!(f, "  {name}: {yes}/{total}")?;
        }
        let with_k = self.lines.iter().any(|l| l.k.is_some());
        write!(f, "{:>8} {:>6} {:>5} {:>10} {:>14} {:>12}", "q", "size", "trial", "set", "measured", "ratio")?;
        if with_k {
            write!(f, " {:>10}", "K")?;
        }
        writeln!(f, "  predicted")?;
        for l in &self.lines {
            write!(
                f,
                "{:>8} {:>6} {:>5} {:>10} {:>14} {:>12}",
                l.q,
                l.size,
                l.trial,
                l.set_size,
                l.measured,
                format_float(l.ratio)
            )?;
            if with_k {
                write!(f, " {:>10}", l.k.as_ref().map(|k| k.to_string()).unwrap_or_default())?;
            }
            writeln!(f, "  {}", l.bound_expr)?;
        }
        for e in &self.errors {
            writeln!(f, "error: {e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::sweep::{run_experiment, SweepConfig};

    fn sweep(suite: Suite, fields: &[u64], family: &str, sizes: &[u64]) -> Vec<ExperimentRow> {
        let mut c = SweepConfig::new(suite);
        c.fields = fields.to_vec();
        c.family = family.parse().unwrap();
        c.sizes = sizes.to_vec();
        run_experiment(&c).unwrap()
    }

    #[test]
    fn resolves_ids() {
        assert_eq!(resolve_theorem("1.5").unwrap(), (Suite::Thm5, "thm1.5".to_string()));
        assert_eq!(resolve_theorem("thm10").unwrap(), (Suite::Thm10, "thm1.10".to_string()));
        assert_eq!(resolve_theorem("cs:thm4").unwrap(), (Suite::Thm4, "cs".to_string()));
        assert!(resolve_theorem("1.7").is_err());
    }

    #[test]
    fn full_line_report() {
        let rows = sweep(Suite::Thm4, &[5, 7], "interval:lo=0;hi=4", &[]);
        let rows: Vec<_> = rows.into_iter().filter(|r| r.q == 5).collect();
        let rep = theorem_report(&rows, "1.4").unwrap();
        assert_eq!(rep.min_ratio, Some(1.0));
        assert_eq!(rep.median_ratio, Some(1.0));
        assert_eq!(rep.flags["size_ge_q^(2/3)"], (1, 1));
    }

    #[test]
    fn mismatch_and_empty() {
        let rows = sweep(Suite::Thm4, &[5], "interval:lo=0;hi=4", &[]);
        assert!(matches!(theorem_report(&rows, "1.3"), Err(Error::SuiteMismatch(_))));
        let rep = theorem_report(&[], "1.3").unwrap();
        assert_eq!((rep.min_ratio, rep.lines.len()), (None, 0));
    }

    #[test]
    fn small_energy_reports_k() {
        let rows = sweep(Suite::Thm5, &[11], "random:size=4;seed=3", &[]);
        let rep = theorem_report(&rows, "thm5").unwrap();
        let line = &rep.lines[0];
        let len: BigInt = line.set_size.parse().unwrap();
        let e: BigInt = rows[0].e_add.parse().unwrap();
        assert_eq!(line.k, Some(BigRational::new(len.pow(3), e)));
        assert!(rep.to_string().contains(" K"));
    }

    #[test]
    fn brick_report() {
        let mut c = SweepConfig::new(Suite::Bricks);
        c.fields = vec![3, 5];
        c.family = "box_brick:x=5;z=5".parse().unwrap();
        c.dimension = Some(1);
        let rows = run_experiment(&c).unwrap();
        let rep = theorem_report(&rows, "1.1").unwrap();
        // q = 3 cannot host coordinate sets of size 5
        assert_eq!(rep.errors.len(), 1);
        assert_eq!(rep.lines.len(), 1);
        assert_eq!(rep.lines[0].measured, "25");
        assert_eq!(rep.min_ratio, Some(1.0));
    }
}
