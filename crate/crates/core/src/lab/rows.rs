//! Sweep rows, bound expressions and their CSV/JSON forms.

use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Read, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lab::setspec::RNG_ALGORITHM;

/// One factor `base^(num/den)` of a predicted value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTerm {
    pub base: BigRational,
    pub num: i64,
    pub den: u64,
}

impl BoundTerm {
    pub fn new(base: impl Into<BigRational>, num: i64, den: u64) -> Self {
        BoundTerm { base: base.into(), num, den }
    }

    pub fn int(base: u128, num: i64, den: u64) -> Self {
        BoundTerm::new(BigRational::from_integer(BigInt::from(base)), num, den)
    }

    fn ln(&self) -> f64 {
        ln_rational(&self.base) * self.num as f64 / self.den as f64
    }
}

fn ln_big(n: &BigInt) -> f64 {
    // ln of integers too large for f64 via their bit length
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (n >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

fn ln_rational(r: &BigRational) -> f64 {
    ln_big(r.numer()) - ln_big(r.denom())
}

/// A predicted value `prod base_i^(e_i)` under a named bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub name: String,
    pub terms: Vec<BoundTerm>,
}

impl Bound {
    pub fn new(name: &str, terms: Vec<BoundTerm>) -> Self {
        Bound { name: name.to_string(), terms }
    }

    pub fn ln(&self) -> f64 {
        self.terms.iter().map(BoundTerm::ln).sum()
    }

    pub fn predicted(&self) -> f64 {
        self.ln().exp()
    }

    /// The value as an exact rational, when every exponent is an integer.
    pub fn exact(&self) -> Option<BigRational> {
        let mut out = BigRational::one();
        for t in &self.terms {
            if t.num % t.den as i64 != 0 {
                return None;
            }
            let e = t.num / t.den as i64;
            let pow = num_traits::pow(t.base.clone(), e.unsigned_abs() as usize);
            out *= if e < 0 { pow.recip() } else { pow };
        }
        Some(out)
    }

    /// `measured / predicted`, computed in logs so huge values do not overflow.
    pub fn ratio(&self, measured: &BigInt) -> f64 {
        if measured.is_zero() {
            return 0.0;
        }
        if let Some(exact) = self.exact() {
            let r = BigRational::from_integer(measured.clone()) / exact;
            if let Some(v) = r.to_f64().filter(|v| v.is_finite() && *v > 0.0) {
                return v;
            }
        }
        (ln_big(measured) - self.ln()).exp()
    }

    /// `9^(1/2)*36^(5/4)`; exponent 1 is omitted.
    pub fn expr(&self) -> String {
        let mut s = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            let base = if t.base.is_integer() && !t.base.is_negative() {
                t.base.numer().to_string()
            } else {
                format!("({})", t.base)
            };
            s.push_str(&base);
            match (t.num, t.den) {
                (1, 1) => {}
                (n, 1) => {
                    let _ = write!(s, "^{n}");
                }
                (n, d) => {
                    let _ = write!(s, "^({n}/{d})");
                }
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// One sweep cell under one bound. Exact integers are decimal strings and
/// an empty string means "not computed for this suite".
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct ExperimentRow {
    pub suite: String,
    /// `F_p`, `F_p^k` or `C`.
    pub domain: String,
    pub p: u64,
    pub k: u32,
    pub n: usize,
    /// Field order; 0 for the complex numbers.
    pub q: u64,
    pub family: String,
    /// The size parameter of the cell.
    pub size: u64,
    pub trial: u32,
    pub seed: u64,
    /// `|A|`, `|E|` or `|[X, Y, Z]|`.
    pub set_size: String,
    pub product_size: String,
    pub s_count: String,
    pub e_add: String,
    pub e_mul: String,
    pub dot_products: String,
    pub coset_count: String,
    pub bound: String,
    /// The quantity compared against the bound, exact.
    pub measured: String,
    /// The predicted value as a product of exact powers.
    pub bound_expr: String,
    /// The predicted value as an exact rational, when it is one.
    pub predicted_exact: String,
    pub predicted: String,
    pub ratio: String,
    /// `name=true|false` pairs separated by `;`.
    pub flags: String,
    pub error: String,
    pub runtime_ms: String,
}

impl ExperimentRow {
    pub fn set_bound(&mut self, bound: &Bound, measured: &BigInt) {
        self.bound = bound.name.clone();
        self.measured = measured.to_string();
        self.bound_expr = bound.expr();
        self.predicted_exact = bound.exact().map(|r| r.to_string()).unwrap_or_default();
        self.predicted = format_float(bound.predicted());
        self.ratio = format_float(bound.ratio(measured));
    }

    pub fn ratio_value(&self) -> Option<f64> {
        self.ratio.parse().ok()
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags_iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    pub fn flags_iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.flags
            .split(';')
            .filter_map(|kv| kv.split_once('='))
            .map(|(k, v)| (k, v == "true"))
    }

    pub fn push_flag(&mut self, name: &str, value: bool) {
        if !self.flags.is_empty() {
            self.flags.push(';');
        }
        let _ = write!(self.flags, "{name}={value}");
    }

    pub fn is_error(&self) -> bool {
        !self.error.is_empty()
    }

    /// Sort key: `(q, size, trial, bound)`.
    pub fn sort_key(&self) -> (u64, u64, u32, String) {
        (self.q, self.size, self.trial, self.bound.clone())
    }
}

/// Fixed-point with six fractional digits, never scientific notation.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.6}")
    } else {
        v.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format '{other}'"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonDoc {
    rng: String,
    rows: Vec<ExperimentRow>,
}

/// Writes rows with a leading `# rng=chacha8` comment line (CSV) or an
/// `rng` field (JSON).
pub fn write_rows<W: Write>(rows: &[ExperimentRow], format: Format, mut out: W) -> Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "# rng={RNG_ALGORITHM}")?;
            let mut w = csv::Writer::from_writer(out);
            if rows.is_empty() {
                w.write_record(csv_header())
                    .map_err(|e| Error::Io(e.to_string()))?;
            }
            for row in rows {
                w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let doc = JsonDoc { rng: RNG_ALGORITHM.to_string(), rows: rows.to_vec() };
            serde_json::to_writer_pretty(&mut out, &doc).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn csv_header() -> Vec<String> {
    // serialize a default row and read back its header
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(ExperimentRow::default()).expect("in-memory write");
    let bytes = w.into_inner().expect("in-memory write");
    let text = String::from_utf8(bytes).expect("csv is utf-8");
    text.lines().next().unwrap_or_default().split(',').map(str::to_string).collect()
}

pub fn rows_to_string(rows: &[ExperimentRow], format: Format) -> Result<String> {
    let mut buf = Vec::new();
    write_rows(rows, format, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

/// Reads rows written by [`write_rows`]; the format is detected from the content.
pub fn read_rows<R: Read>(input: R) -> Result<Vec<ExperimentRow>> {
    let mut text = String::new();
    BufReader::new(input).read_to_string(&mut text)?;
    if text.trim_start().starts_with('{') {
        let doc: JsonDoc = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(doc.rows);
    }
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

/// The `rng=` value of a CSV file's comment header, if present.
pub fn rng_header<R: BufRead>(mut input: R) -> Option<String> {
    let mut line = String::new();
    input.read_line(&mut line).ok()?;
    line.trim().strip_prefix("# rng=").map(str::to_string)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        let b = Bound::new("x", vec![BoundTerm::int(9, 1, 2), BoundTerm::int(16, 5, 4)]);
        assert_eq!(b.expr(), "9^(1/2)*16^(5/4)");
        assert!((b.predicted() - 96.0).abs() < 1e-9);
        assert_eq!(b.exact(), None);
        assert!((b.ratio(&BigInt::from(192)) - 2.0).abs() < 1e-12);

        let e = Bound::new("y", vec![BoundTerm::int(9, 1, 1), BoundTerm::int(4, 2, 2)]);
        assert_eq!(e.expr(), "9*4^(2/2)");
        assert_eq!(e.exact(), Some(BigRational::from_integer(36.into())));
        assert_eq!(e.ratio(&BigInt::from(36)), 1.0);

        let frac = Bound::new("z", vec![BoundTerm::new(BigRational::new(3.into(), 2.into()), 1, 1)]);
        assert_eq!(frac.expr(), "(3/2)");
    }

    #[test]
    fn huge_values_stay_finite() {
        let big = BigInt::from(10).pow(400);
        let b = Bound::new("h", vec![BoundTerm::new(BigRational::from_integer(big.clone()), 1, 2)]);
        let r = b.ratio(&BigInt::from(10).pow(200));
        assert!((r - 1.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn csv_and_json_round_trip() {
        let mut row = ExperimentRow { suite: "thm3".into(), p: 7, q: 7, size: 3, ..Default::default() };
        row.set_bound(&Bound::new("b", vec![BoundTerm::int(2, 1, 1)]), &BigInt::from(123456789012345678u64));
        row.push_flag("small", true);
        row.push_flag("large", false);
        assert_eq!(row.flag("small"), Some(true));
        assert_eq!(row.flag("large"), Some(false));
        for format in [Format::Csv, Format::Json] {
            let text = rows_to_string(std::slice::from_ref(&row), format).unwrap();
            assert!(!text.contains("e+"), "{text}");
            assert_eq!(read_rows(text.as_bytes()).unwrap(), vec![row.clone()]);
        }
        let csv = rows_to_string(&[row], Format::Csv).unwrap();
        assert_eq!(rng_header(csv.as_bytes()).as_deref(), Some(RNG_ALGORITHM));
        let empty = rows_to_string(&[], Format::Csv).unwrap();
        assert!(empty.lines().nth(1).unwrap().starts_with("suite,domain"));
        assert!(read_rows(empty.as_bytes()).unwrap().is_empty());
    }
}
