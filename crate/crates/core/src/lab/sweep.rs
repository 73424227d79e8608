//! Theorem suites and the parallel sweep runner.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::ComplexRationals;
use crate::domain::{ExactDomain, ScalarSet};
use crate::energy;
use crate::error::{Error, Result};
use crate::ffield::{is_prime, prime_power, FieldCtx, FieldElement};
use crate::heisenberg::{shkredov_condition, HeisenbergGroup};
use crate::lab::rows::{Bound, BoundTerm, ExperimentRow};
use crate::lab::setspec::{gen_set, GeneratedSet, SetDomain, SetSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm8,
    Thm9,
    Thm10,
    Bricks,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Thm3,
        Suite::Thm4,
        Suite::Thm5,
        Suite::Thm6,
        Suite::Thm8,
        Suite::Thm9,
        Suite::Thm10,
        Suite::Bricks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Thm5 => "thm5",
            Suite::Thm6 => "thm6",
            Suite::Thm8 => "thm8",
            Suite::Thm9 => "thm9",
            Suite::Thm10 => "thm10",
            Suite::Bricks => "bricks",
        }
    }

    /// The bound every cell of the suite reports first.
    pub fn main_bound(self) -> &'static str {
        match self {
            Suite::Thm3 => "thm1.3",
            Suite::Thm4 => "thm1.4",
            Suite::Thm5 => "thm1.5",
            Suite::Thm6 => "thm1.6",
            Suite::Thm8 => "thm1.8",
            Suite::Thm9 => "thm1.9",
            Suite::Thm10 => "thm1.10",
            Suite::Bricks => "thm1.1",
        }
    }

    /// Suites stated over a prime field only.
    pub fn prime_only(self) -> bool {
        matches!(self, Suite::Thm3 | Suite::Thm8 | Suite::Thm9 | Suite::Bricks)
    }

    pub fn is_complex(self) -> bool {
        self == Suite::Thm10
    }

    pub fn default_family(self) -> SetSpec {
        let s = match self {
            Suite::Thm9 => "mult_subgroup:d=2",
            Suite::Thm10 => "interval:lo=1;size=10",
            Suite::Bricks => "box_brick:x=2",
            Suite::Thm4 | Suite::Thm5 | Suite::Thm6 | Suite::Thm8 | Suite::Thm3 => "random:size=4",
        };
        s.parse().expect("built-in families parse")
    }

    /// Dimension used when the configuration does not set one.
    pub fn default_dimension(self) -> usize {
        match self {
            Suite::Thm8 | Suite::Bricks => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite '{s}'")))
    }
}

/// A sweep grid: field orders x sizes x trials.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub suite: Suite,
    /// Field orders; ignored by the complex suite.
    pub fields: Vec<u64>,
    pub family: SetSpec,
    /// Values for the family's size parameter; empty keeps the family's own.
    pub sizes: Vec<u64>,
    pub trials: u32,
    pub seed: u64,
    /// Dimension `n` for vector and brick suites.
    pub dimension: Option<usize>,
    /// Worker threads; `None` uses every core.
    pub workers: Option<usize>,
    /// Fill the `runtime_ms` column. Off by default so that output is reproducible.
    pub timing: bool,
}

impl SweepConfig {
    pub fn new(suite: Suite) -> Self {
        SweepConfig {
            suite,
            fields: Vec::new(),
            family: suite.default_family(),
            sizes: Vec::new(),
            trials: 1,
            seed: 0,
            dimension: None,
            workers: None,
            timing: false,
        }
    }

    fn cells(&self) -> Vec<Cell> {
        let fields: Vec<u64> = if self.suite.is_complex() { vec![0] } else { self.fields.clone() };
        let sizes: Vec<Option<u64>> = if self.sizes.is_empty() {
            vec![None]
        } else {
            self.sizes.iter().copied().map(Some).collect()
        };
        let mut out = Vec::new();
        for &q in &fields {
            for &size in &sizes {
                for trial in 0..self.trials {
                    out.push(Cell { q, size, trial });
                }
            }
        }
        out
    }
}

/// Expands `5,7,11`, `5..31` or a mix; inclusive ranges keep the admissible orders
/// (primes when `primes_only`, prime powers otherwise).
pub fn parse_field_list(s: &str, primes_only: bool) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad field order '{t}'")))
        };
        if let Some((a, b)) = part.split_once("..") {
            let hi = num(b.trim_start_matches('='))?;
            let ok = |q: u64| if primes_only { is_prime(q) } else { prime_power(q).is_some() };
            out.extend((num(a)?..=hi).filter(|&q| ok(q)));
        } else {
            out.push(num(part)?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Comma-separated sizes, with `a..b` ranges inclusive.
pub fn parse_size_list(s: &str) -> Result<Vec<u64>> {
    let num = |t: &str| {
        t.trim()
            .trim_start_matches('=')
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad size '{t}'")))
    };
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => out.extend(num(a)?..=num(b)?),
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    q: u64,
    size: Option<u64>,
    trial: u32,
}

/// Seed of one cell, mixed from the sweep seed and the cell coordinates.
pub fn cell_seed(seed: u64, q: u64, size: u64, trial: u32) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for v in [q, size, trial as u64] {
        // splitmix64 finalizer
        h = h.wrapping_add(v).wrapping_add(0x9e37_79b9_7f4a_7c15);
        h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        h ^= h >> 31;
    }
    h
}

/// Runs every cell of the grid, in parallel, and returns the rows sorted by
/// `(q, size, trial, bound)`. Errors inside a cell become an error row.
pub fn run_experiment(config: &SweepConfig) -> Result<Vec<ExperimentRow>> {
    let cells = config.cells();
    let run = || -> Vec<ExperimentRow> { cells.par_iter().flat_map_iter(|c| run_cell(config, c)).collect() };
    let mut rows = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::InvalidSpec(format!("cannot start {w} workers: {e}")))?
            .install(run),
        None => run(),
    };
    rows.sort_by_key(ExperimentRow::sort_key);
    Ok(rows)
}

fn run_cell(config: &SweepConfig, cell: &Cell) -> Vec<ExperimentRow> {
    let start = Instant::now();
    let suite = config.suite;
    let n = config.dimension.unwrap_or(suite.default_dimension());
    let mut base = ExperimentRow {
        suite: suite.name().to_string(),
        n,
        q: cell.q,
        trial: cell.trial,
        ..Default::default()
    };
    let outcome = (|| -> Result<Vec<ExperimentRow>> {
        let family = match cell.size {
            Some(s) => config.family.with_size(s)?,
            None => config.family.clone(),
        };
        base.size = cell.size.unwrap_or_else(|| {
            family.kind.size_key().and_then(|k| family.get(k)).and_then(|v| v.parse().ok()).unwrap_or(0)
        });
        let base_seed = family.get("seed").and_then(|s| s.parse().ok()).unwrap_or(config.seed);
        base.seed = cell_seed(base_seed, cell.q, base.size, cell.trial);
        let family = if family.kind.is_seeded() { family.with("seed", base.seed) } else { family };
        base.family = family.to_string();
        let domain = if suite.is_complex() {
            base.domain = "C".into();
            SetDomain::Complex
        } else {
            let (p, k) = prime_power(cell.q).ok_or(Error::CompositeModulus(cell.q))?;
            if suite.prime_only() && k != 1 {
                return Err(Error::InvalidSpec(format!("{suite} is stated over prime fields; q = {}", cell.q)));
            }
            let ctx = FieldCtx::new(p, k, None)?;
            base.p = p;
            base.k = k;
            base.domain = ctx.to_string();
            SetDomain::field(ctx, n)
        };
        let set = gen_set(&family, &domain)?;
        compute(suite, &domain, set, &base)
    })();
    let mut rows = outcome.unwrap_or_else(|e| {
        let mut row = base.clone();
        row.bound = suite.main_bound().to_string();
        row.error = e.to_string();
        vec![row]
    });
    if config.timing {
        let ms = start.elapsed().as_millis().to_string();
        for r in &mut rows {
            r.runtime_ms = ms.clone();
        }
    }
    rows
}

fn int(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Shared measurements of the scalar suites.
struct ScalarCounts {
    len: u128,
    product: u64,
    s: u128,
    e_add: u128,
    e_mul: u128,
}

fn scalar_counts<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<ScalarCounts> {
    let profile = energy::product_profile(dom, a)?;
    Ok(ScalarCounts {
        len: a.len() as u128,
        product: profile.size,
        s: profile.s_count,
        e_add: energy::energy_add(dom, a),
        e_mul: energy::energy_mul(dom, a),
    })
}

fn fill_counts(row: &mut ExperimentRow, c: &ScalarCounts) {
    row.set_size = c.len.to_string();
    row.product_size = c.product.to_string();
    row.s_count = c.s.to_string();
    row.e_add = c.e_add.to_string();
    row.e_mul = c.e_mul.to_string();
    // trivially true: fixing m1 gives |A|^2 distinct products, and S counts the diagonal |A|^4
    let sanity = c.product as u128 >= c.len * c.len && c.s >= c.len.pow(4);
    row.push_flag("sanity", sanity);
}

/// `|A|^8 / S <= |product|` by Cauchy-Schwarz, with `|A|^8/S` exact.
fn cauchy_schwarz(c: &ScalarCounts) -> Bound {
    let pairs = int(c.len).pow(4);
    Bound::new("cs", vec![BoundTerm::new(BigRational::new(&pairs * &pairs, int(c.s)), 1, 1)])
}

fn with_bound(base: &ExperimentRow, bound: Bound, measured: impl Into<BigInt>, flags: &[(&str, bool)]) -> ExperimentRow {
    let mut row = base.clone();
    for (name, v) in flags {
        row.push_flag(name, *v);
    }
    row.set_bound(&bound, &measured.into());
    row
}

fn compute(suite: Suite, domain: &SetDomain, set: GeneratedSet, base: &ExperimentRow) -> Result<Vec<ExperimentRow>> {
    match (domain, set) {
        (SetDomain::Complex, GeneratedSet::Complex(a)) => {
            let c = scalar_counts(&ComplexRationals, &a)?;
            let mut row = base.clone();
            fill_counts(&mut row, &c);
            let main = Bound::new("thm1.10", vec![BoundTerm::int(c.len, 29, 8)]);
            Ok(vec![
                with_bound(&row, cauchy_schwarz(&c), c.product, &[]),
                with_bound(&row, main, c.product, &[("size_at_least_2", c.len >= 2)]),
            ])
        }
        (SetDomain::Field { ctx, .. }, GeneratedSet::Scalars(a)) => scalar_suite(suite, ctx, &a, base),
        (SetDomain::Field { ctx, n }, GeneratedSet::Vectors(e)) => vector_suite(suite, ctx, *n, &e, base),
        (SetDomain::Field { ctx, n }, GeneratedSet::Brick(b)) => {
            if suite != Suite::Bricks {
                return Err(Error::InvalidSpec(format!("{suite} does not take bricks")));
            }
            let group = HeisenbergGroup::new(ctx.clone(), *n)?;
            let product = group.brick_product(&b, &b)?;
            let p = ctx.p();
            let mut row = base.clone();
            row.set_size = b.len().to_string();
            row.product_size = product.len().to_string();
            row.coset_count = product.coset_count().to_string();
            let order = group.order();
            // |[X,Y,Z]| > |H|^{3/4}, with epsilon = 0
            let hh_size = int(b.len()).pow(4) > int(order).pow(3);
            let mut flags = vec![("hh_size", hh_size)];
            if n % 2 == 0 {
                let check = shkredov_condition(&b, p)?;
                flags.push(("shkredov", check.holds));
            }
            let bound = Bound::new("thm1.1", vec![BoundTerm::new(ratio(b.len(), p), 1, 1)]);
            Ok(vec![with_bound(&row, bound, product.coset_count(), &flags)])
        }
        (_, set) => Err(Error::InvalidSpec(format!("{suite} cannot use a set of kind {:?}", kind_name(&set)))),
    }
}

fn kind_name(set: &GeneratedSet) -> &'static str {
    match set {
        GeneratedSet::Scalars(_) => "scalars",
        GeneratedSet::Vectors(_) => "vectors",
        GeneratedSet::Complex(_) => "complex",
        GeneratedSet::Brick(_) => "brick",
    }
}

fn scalar_suite(
    suite: Suite,
    ctx: &FieldCtx,
    a: &ScalarSet<FieldElement>,
    base: &ExperimentRow,
) -> Result<Vec<ExperimentRow>> {
    let c = scalar_counts(ctx, a)?;
    let mut row = base.clone();
    fill_counts(&mut row, &c);
    let q = ctx.q() as u128;
    let h = c.len * c.len;
    let mut rows = vec![with_bound(&row, cauchy_schwarz(&c), c.product, &[])];
    match suite {
        Suite::Thm3 => {
            let small = c.len.pow(3) <= q * q;
            rows.push(with_bound(
                &row,
                Bound::new("thm1.3", vec![BoundTerm::int(h, 7, 4)]),
                c.product,
                &[("size_le_p^(2/3)", small)],
            ));
            // min { p^{1/2} h^{5/4}, p^{-1/2} h^2 }
            let first = Bound::new("eq1.1", vec![BoundTerm::int(q, 1, 2), BoundTerm::int(h, 5, 4)]);
            let second = Bound::new("eq1.1", vec![BoundTerm::int(q, -1, 2), BoundTerm::int(h, 2, 1)]);
            let eq = if first.ln() <= second.ln() { first } else { second };
            rows.push(with_bound(&row, eq, c.product, &[("size_ge_p^(1/2)", c.len * c.len >= q)]));
        }
        Suite::Thm4 => {
            let large = c.len.pow(3) >= q * q;
            let bound = Bound::new("thm1.4", vec![BoundTerm::int(q, 1, 1), BoundTerm::int(h, 1, 1)]);
            rows.push(with_bound(&row, bound, c.product, &[("size_ge_q^(2/3)", large)]));
        }
        Suite::Thm5 => {
            // K = |A|^3 / E+, and the hypothesis |A| >= K^{1/3} q^{2/3} reads E+ >= q^2
            let k = ratio(c.len.pow(3), c.e_add);
            let hyp = c.e_add >= q * q;
            let main = Bound::new(
                "thm1.5",
                vec![BoundTerm::new(k, 1, 1), BoundTerm::int(q, 1, 1), BoundTerm::int(h, 1, 1)],
            );
            rows.push(with_bound(&row, main, c.product, &[("hypothesis", hyp)]));
            let first = Bound::new("thm1.5-min", vec![BoundTerm::new(ratio(c.len.pow(5), q), 1, 1)]);
            let second = Bound::new("thm1.5-min", vec![BoundTerm::new(ratio(q * c.len.pow(5), c.e_add), 1, 1)]);
            let min = if first.ln() <= second.ln() { first } else { second };
            rows.push(with_bound(&row, min, c.product, &[]));
        }
        Suite::Thm9 => {
            let p = ctx.p() as f64;
            let hyp = (c.len as f64) <= p.sqrt() * p.ln();
            let elems = a.elements();
            let subgroup = elems.iter().all(|&x| elems.iter().all(|&y| a.contains(&ctx.mul(x, y))));
            let bound = Bound::new("thm1.9", vec![BoundTerm::int(h, 151, 80)]);
            rows.push(with_bound(
                &row,
                bound,
                c.product,
                &[("size_le_p^(1/2)log(p)", hyp), ("subgroup", subgroup)],
            ));
        }
        other => return Err(Error::InvalidSpec(format!("{other} needs a vector family"))),
    }
    Ok(rows)
}

fn vector_suite(
    suite: Suite,
    ctx: &FieldCtx,
    n: usize,
    e: &[crate::ffield::FieldVector],
    base: &ExperimentRow,
) -> Result<Vec<ExperimentRow>> {
    let profile = energy::vector_product_profile(ctx, e)?;
    let len = e.len() as u128;
    let h = len * len;
    let q = ctx.q() as u128;
    let mut row = base.clone();
    row.set_size = len.to_string();
    row.product_size = profile.size.to_string();
    row.s_count = profile.s_count.to_string();
    row.push_flag("sanity", profile.size as u128 >= h && profile.s_count >= h * h);
    let pairs = int(h).pow(2);
    let cs = Bound::new("cs", vec![BoundTerm::new(BigRational::new(&pairs * &pairs, int(profile.s_count)), 1, 1)]);
    let mut rows = vec![with_bound(&row, cs, profile.size, &[])];
    match suite {
        Suite::Thm6 => {
            // |E| >= q^{n/2 + 1/4}  <=>  |E|^4 >= q^{2n+1}
            let hyp = int(len).pow(4) >= int(q).pow(2 * n as u32 + 1);
            let bound = Bound::new("thm1.6", vec![BoundTerm::int(q, 1, 1), BoundTerm::int(h, 1, 1)]);
            rows.push(with_bound(&row, bound, profile.size, &[("size_ge_q^(n/2+1/4)", hyp)]));
            if ctx.k() % 2 == 0 {
                let sharp = Bound::new("sharp", vec![BoundTerm::int(q, 1, 2), BoundTerm::int(h, 1, 1)]);
                rows.push(with_bound(&row, sharp, profile.size, &[]));
            }
        }
        Suite::Thm8 => {
            if n != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: n });
            }
            let dots = energy::dot_product_set_vectors(ctx, e)?;
            row.dot_products = dots.values.len().to_string();
            rows[0].dot_products = row.dot_products.clone();
            let p = int(ctx.p());
            let flags = [
                ("p_3_mod_4", ctx.p() % 4 == 3),
                ("size_le_p^(8/5)", int(len).pow(5) <= p.pow(8)),
                ("size_le_p^(8/15)", int(len).pow(15) <= p.pow(8)),
            ];
            let bound = Bound::new("thm1.8", vec![BoundTerm::int(h, 19, 15)]);
            rows.push(with_bound(&row, bound, profile.size, &flags));
            let pi = Bound::new("lemma4.2", vec![BoundTerm::int(len, 8, 15)]);
            rows.push(with_bound(&row, pi, dots.values.len(), &flags));
        }
        other => return Err(Error::InvalidSpec(format!("{other} needs a scalar family"))),
    }
    Ok(rows)
}
