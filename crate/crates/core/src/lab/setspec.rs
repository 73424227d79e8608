//! Set families and their generators.
//!
//! A family is written `kind` or `kind:key=value;key=value`, for example
//! `random:size=10;seed=42`, `mult_subgroup:d=3`, `interval:lo=1;hi=5`,
//! `subspace:dim=2`, `box_brick:x=3;y=3;z=5` or `explicit:values=1|2|4`.
//! Explicit vectors are written with commas: `explicit:values=1,0|0,1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{ComplexRational, ComplexRationals};
use crate::domain::{ExactDomain, ScalarSet};
use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement, FieldVector};
use crate::heisenberg::{Brick, BrickPart};
use crate::limits::Limits;

/// Name of the pseudo-random generator behind every seeded family.
pub const RNG_ALGORITHM: &str = "chacha8";

/// The generator used for seed `seed` and stream `stream`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetKind {
    Interval,
    Random,
    MultSubgroup,
    Geometric,
    Subspace,
    BoxBrick,
    GaussianGrid,
    Explicit,
}

impl SetKind {
    pub const ALL: [SetKind; 8] = [
        SetKind::Interval,
        SetKind::Random,
        SetKind::MultSubgroup,
        SetKind::Geometric,
        SetKind::Subspace,
        SetKind::BoxBrick,
        SetKind::GaussianGrid,
        SetKind::Explicit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetKind::Interval => "interval",
            SetKind::Random => "random",
            SetKind::MultSubgroup => "mult_subgroup",
            SetKind::Geometric => "geometric",
            SetKind::Subspace => "subspace",
            SetKind::BoxBrick => "box_brick",
            SetKind::GaussianGrid => "gaussian_grid",
            SetKind::Explicit => "explicit",
        }
    }

    /// The parameter that `--sizes` overrides.
    pub fn size_key(self) -> Option<&'static str> {
        match self {
            SetKind::Interval | SetKind::Random => Some("size"),
            SetKind::MultSubgroup => Some("d"),
            SetKind::Geometric => Some("len"),
            SetKind::Subspace => Some("dim"),
            SetKind::BoxBrick => Some("x"),
            SetKind::GaussianGrid => Some("side"),
            SetKind::Explicit => None,
        }
    }

    /// Families drawn from a seeded generator.
    pub fn is_seeded(self) -> bool {
        matches!(self, SetKind::Random | SetKind::Subspace | SetKind::BoxBrick)
    }

    fn keys(self) -> &'static [&'static str] {
        match self {
            SetKind::Interval => &["lo", "hi", "size", "zero"],
            SetKind::Random => &["size", "seed", "zero", "radius"],
            SetKind::MultSubgroup => &["d"],
            SetKind::Geometric => &["base", "len"],
            SetKind::Subspace => &["dim", "subfield", "seed"],
            SetKind::BoxBrick => &["x", "y", "z", "seed"],
            SetKind::GaussianGrid => &["side"],
            SetKind::Explicit => &["values"],
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::InvalidSpec(format!("unknown set family '{s}'")))
    }
}

/// A set family with its parameters. Parameters are kept as text and
/// validated when the set is generated against a concrete domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetSpec {
    pub kind: SetKind,
    params: BTreeMap<String, String>,
}

impl SetSpec {
    pub fn new(kind: SetKind) -> Self {
        SetSpec { kind, params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn interval(lo: i64, hi: i64) -> Self {
        SetSpec::new(SetKind::Interval).with("lo", lo).with("hi", hi)
    }

    pub fn random(size: usize, seed: u64) -> Self {
        SetSpec::new(SetKind::Random).with("size", size).with("seed", seed)
    }

    pub fn mult_subgroup(d: u64) -> Self {
        SetSpec::new(SetKind::MultSubgroup).with("d", d)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    /// The same family with its size parameter replaced.
    pub fn with_size(&self, size: u64) -> Result<Self> {
        let key = self
            .kind
            .size_key()
            .ok_or_else(|| Error::InvalidSpec(format!("{} has no size parameter", self.kind)))?;
        let mut out = self.clone().with(key, size);
        if self.kind == SetKind::Interval {
            out.params.remove("hi");
        }
        Ok(out)
    }

    fn num<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get(key)
            .map(|v| {
                v.trim()
                    .parse::<T>()
                    .map_err(|_| Error::InvalidSpec(format!("{}: bad value '{v}' for {key}", self.kind)))
            })
            .transpose()
    }

    fn required<T: FromStr>(&self, key: &str) -> Result<T> {
        self.num(key)?
            .ok_or_else(|| Error::InvalidSpec(format!("{} needs {key}=", self.kind)))
    }

    fn flag(&self, key: &str, default: bool) -> Result<bool> {
        Ok(self.num::<bool>(key)?.unwrap_or(default))
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ':' } else { ';' })?;
        }
        Ok(())
    }
}

impl FromStr for SetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut spec = SetSpec::new(kind.parse()?);
        for pair in rest.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("expected key=value, got '{pair}'")))?;
            let k = k.trim();
            if !spec.kind.keys().contains(&k) {
                return Err(Error::InvalidSpec(format!("{} does not take {k}=", spec.kind)));
            }
            spec.params.insert(k.to_string(), v.trim().to_string());
        }
        Ok(spec)
    }
}

/// Where a set lives: `F_q^n` (scalars when `n = 1`) or the complex numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetDomain {
    Field { ctx: FieldCtx, n: usize },
    Complex,
}

impl SetDomain {
    pub fn field(ctx: FieldCtx, n: usize) -> Self {
        SetDomain::Field { ctx, n }
    }
}

impl fmt::Display for SetDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetDomain::Field { ctx, n: 1 } => write!(f, "{ctx}"),
            SetDomain::Field { ctx, n } => write!(f, "{ctx}^{n}"),
            SetDomain::Complex => f.write_str("C"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratedSet {
    Scalars(ScalarSet<FieldElement>),
    Vectors(Vec<FieldVector>),
    Complex(ScalarSet<ComplexRational>),
    Brick(Brick),
}

impl GeneratedSet {
    pub fn len(&self) -> u128 {
        match self {
            GeneratedSet::Scalars(a) => a.len() as u128,
            GeneratedSet::Vectors(e) => e.len() as u128,
            GeneratedSet::Complex(a) => a.len() as u128,
            GeneratedSet::Brick(b) => b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Generates the set described by `spec` in `domain`. Seeded families are
/// deterministic; sizes are exact or the call fails.
pub fn gen_set(spec: &SetSpec, domain: &SetDomain) -> Result<GeneratedSet> {
    match domain {
        SetDomain::Complex => gen_complex(spec).map(GeneratedSet::Complex),
        SetDomain::Field { ctx, n } => gen_field(spec, ctx, *n),
    }
}

fn check_size(spec: &SetSpec, requested: Option<usize>, found: usize) -> Result<()> {
    match requested {
        Some(r) if r != found => Err(Error::SizeUnsatisfiable { requested: r, available: found as u128 }),
        _ if found == 0 => Err(Error::InvalidSpec(format!("{spec} is empty"))),
        _ => Ok(()),
    }
}

fn interval_bounds(spec: &SetSpec) -> Result<(i64, i64, Option<usize>)> {
    let lo: i64 = spec.num("lo")?.unwrap_or(1);
    let size: Option<usize> = spec.num("size")?;
    let hi: i64 = match (spec.num::<i64>("hi")?, size) {
        (Some(hi), _) => hi,
        (None, Some(s)) => lo + s as i64 - 1,
        (None, None) => return Err(Error::InvalidSpec("interval needs hi= or size=".into())),
    };
    if hi < lo {
        return Err(Error::InvalidSpec(format!("interval [{lo}, {hi}] is empty")));
    }
    Ok((lo, hi, size))
}

fn gen_field(spec: &SetSpec, ctx: &FieldCtx, n: usize) -> Result<GeneratedSet> {
    let scalar = |set: ScalarSet<FieldElement>| -> Result<GeneratedSet> {
        if n != 1 {
            return Err(Error::InvalidSpec(format!("{} produces scalars; dimension is {n}", spec.kind)));
        }
        Ok(GeneratedSet::Scalars(set))
    };
    match spec.kind {
        SetKind::Interval => {
            let (lo, hi, size) = interval_bounds(spec)?;
            let zero = spec.flag("zero", true)?;
            let span = (hi - lo + 1) as usize;
            let set: ScalarSet<FieldElement> = (lo..=hi).map(|v| ctx.from_int(v)).collect();
            if set.len() != span {
                return Err(Error::SizeUnsatisfiable { requested: span, available: ctx.p() as u128 });
            }
            if !zero && set.contains(&ctx.zero()) {
                return Err(Error::InvalidSpec("interval contains 0 but zero=false".into()));
            }
            check_size(spec, size, set.len())?;
            scalar(set)
        }
        SetKind::Random => {
            let size: usize = spec.required("size")?;
            let seed: u64 = spec.required("seed")?;
            let zero = spec.flag("zero", false)?;
            let space = ctx.space_size(n);
            Limits::current().check_space("q^n", space)?;
            let skip = u64::from(!zero);
            let available = space - skip as u128;
            if size as u128 > available || size == 0 {
                return Err(Error::SizeUnsatisfiable { requested: size, available });
            }
            let mut rng = rng_for(seed, 0);
            let mut picks: Vec<u64> = index::sample(&mut rng, available as usize, size)
                .into_iter()
                .map(|i| i as u64 + skip)
                .collect();
            picks.sort_unstable();
            if n == 1 {
                scalar(picks.into_iter().map(|i| ctx.from_index(i)).collect())
            } else {
                Ok(GeneratedSet::Vectors(picks.into_iter().map(|i| ctx.vector_from_index(n, i)).collect()))
            }
        }
        SetKind::MultSubgroup => {
            let d: u64 = spec.required("d")?;
            scalar(ScalarSet::new(ctx.mult_subgroup(d)?))
        }
        SetKind::Geometric => {
            let base: i64 = spec.required("base")?;
            let len: usize = spec.required("len")?;
            let b = ctx.from_int(base);
            let set: ScalarSet<FieldElement> = (0..len as u64).map(|i| ctx.pow(b, i)).collect();
            check_size(spec, Some(len), set.len())?;
            scalar(set)
        }
        SetKind::Subspace => {
            let subfield = spec.flag("subfield", false)?;
            if subfield {
                return subfield_space(ctx, n).map(GeneratedSet::Vectors);
            }
            let dim: usize = spec.required("dim")?;
            let seed: u64 = spec.required("seed")?;
            random_subspace(ctx, n, dim, seed).map(GeneratedSet::Vectors)
        }
        SetKind::BoxBrick => {
            let x: usize = spec.required("x")?;
            let y: usize = spec.num("y")?.unwrap_or(x);
            let z: usize = spec.num("z")?.unwrap_or(ctx.q() as usize);
            let seed: u64 = spec.required("seed")?;
            box_brick(ctx, n, (x, y, z), seed).map(GeneratedSet::Brick)
        }
        SetKind::GaussianGrid => Err(Error::InvalidSpec("gaussian_grid lives in C".into())),
        SetKind::Explicit => {
            let values = spec.get("values").ok_or_else(|| Error::InvalidSpec("explicit needs values=".into()))?;
            let parts: Vec<&str> = values.split('|').map(str::trim).filter(|v| !v.is_empty()).collect();
            if n == 1 {
                let set: ScalarSet<FieldElement> = parts.iter().map(|v| ctx.parse(v)).collect::<Result<_>>()?;
                check_size(spec, None, set.len())?;
                scalar(set)
            } else {
                let mut e: Vec<FieldVector> = parts.iter().map(|v| ctx.parse_vector(v)).collect::<Result<_>>()?;
                if let Some(bad) = e.iter().find(|v| v.len() != n) {
                    return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
                }
                e.sort();
                e.dedup();
                check_size(spec, None, e.len())?;
                Ok(GeneratedSet::Vectors(e))
            }
        }
    }
}

fn gen_complex(spec: &SetSpec) -> Result<ScalarSet<ComplexRational>> {
    let dom = ComplexRationals;
    let set: ScalarSet<ComplexRational> = match spec.kind {
        SetKind::Interval => {
            let (lo, hi, size) = interval_bounds(spec)?;
            let set: ScalarSet<_> = (lo..=hi).map(|v| ComplexRational::from_ints(v, 0)).collect();
            check_size(spec, size, set.len())?;
            if !spec.flag("zero", true)? {
                set.require_nonzero(&dom)?;
            }
            set
        }
        SetKind::Random => {
            // Gaussian integers in the square of the given radius
            let size: usize = spec.required("size")?;
            let seed: u64 = spec.required("seed")?;
            let zero = spec.flag("zero", false)?;
            let radius: i64 = match spec.num("radius")? {
                Some(r) => r,
                None => (size as f64).sqrt().ceil() as i64 + 1,
            };
            let side = 2 * radius + 1;
            let available = (side * side) as u128 - u128::from(!zero);
            if size as u128 > available || size == 0 {
                return Err(Error::SizeUnsatisfiable { requested: size, available });
            }
            let mut rng = rng_for(seed, 0);
            let mut out = std::collections::BTreeSet::new();
            while out.len() < size {
                let (re, im) = (rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius));
                if zero || (re, im) != (0, 0) {
                    out.insert(ComplexRational::from_ints(re, im));
                }
            }
            out.into_iter().collect()
        }
        SetKind::Geometric => {
            let base: ComplexRational = spec
                .get("base")
                .ok_or_else(|| Error::InvalidSpec("geometric needs base=".into()))?
                .parse()?;
            let len: usize = spec.required("len")?;
            let mut cur = dom.one();
            let mut out = Vec::with_capacity(len);
            for _ in 0..len {
                out.push(cur.clone());
                cur = dom.mul(&cur, &base);
            }
            let set = ScalarSet::new(out);
            check_size(spec, Some(len), set.len())?;
            set
        }
        SetKind::GaussianGrid => {
            // {a + bi : 1 <= a <= side, 0 <= b < side}
            let side: i64 = spec.required("side")?;
            if side < 1 {
                return Err(Error::InvalidSpec("gaussian_grid needs side >= 1".into()));
            }
            (1..=side)
                .flat_map(|a| (0..side).map(move |b| ComplexRational::from_ints(a, b)))
                .collect()
        }
        SetKind::Explicit => {
            let values = spec.get("values").ok_or_else(|| Error::InvalidSpec("explicit needs values=".into()))?;
            values
                .split('|')
                .map(str::trim)
                .filter(|v| !v.is_empty())
                .map(str::parse)
                .collect::<Result<_>>()?
        }
        other => return Err(Error::InvalidSpec(format!("{other} needs a finite field"))),
    };
    check_size(spec, None, set.len())?;
    Ok(set)
}

/// `F_p^n` inside `F_q^n`, in index order.
fn subfield_space(ctx: &FieldCtx, n: usize) -> Result<Vec<FieldVector>> {
    let sub = FieldCtx::prime(ctx.p())?;
    let mut out: Vec<FieldVector> = sub
        .enumerate(n)?
        .map(|v| FieldVector::new(v.entries().iter().map(|e| ctx.from_int(e.index() as i64)).collect()))
        .collect();
    out.sort();
    Ok(out)
}

fn random_subspace(ctx: &FieldCtx, n: usize, dim: usize, seed: u64) -> Result<Vec<FieldVector>> {
    if dim > n {
        return Err(Error::InvalidSpec(format!("subspace of dimension {dim} in F_q^{n}")));
    }
    let size = ctx.space_size(dim);
    Limits::current().check_space("q^dim", size)?;
    let mut rng = rng_for(seed, 0);
    let total = ctx.space_size(n);
    // draw vectors until `dim` independent ones are found
    let mut span: Vec<FieldVector> = vec![FieldVector::zero(n)];
    let mut seen: std::collections::HashSet<FieldVector> = span.iter().cloned().collect();
    while span.len() < size as usize {
        let v = ctx.vector_from_index(n, rng.gen_range(0..total as u64));
        if seen.contains(&v) {
            continue;
        }
        let mut next = Vec::with_capacity(span.len() * ctx.q() as usize);
        for s in ctx.elements() {
            let sv = ctx.vscale(s, &v);
            next.extend(span.iter().map(|w| ctx.vadd(w, &sv)));
        }
        seen = next.iter().cloned().collect();
        span = next;
    }
    span.sort();
    Ok(span)
}

fn box_brick(ctx: &FieldCtx, n: usize, (x, y, z): (usize, usize, usize), seed: u64) -> Result<Brick> {
    let q = ctx.q() as usize;
    if let Some(&bad) = [x, y, z].iter().find(|&&s| s == 0 || s > q) {
        return Err(Error::SizeUnsatisfiable { requested: bad, available: q as u128 });
    }
    let mut rng = rng_for(seed, 0);
    let mut pick = |size: usize| -> Vec<FieldElement> {
        let mut v: Vec<FieldElement> = index::sample(&mut rng, q, size)
            .into_iter()
            .map(|i| ctx.from_index(i as u64))
            .collect();
        v.sort_unstable();
        v
    };
    let xs: Vec<Vec<FieldElement>> = (0..n).map(|_| pick(x)).collect();
    let ys: Vec<Vec<FieldElement>> = (0..n).map(|_| pick(y)).collect();
    let zs = pick(z);
    Brick::new(BrickPart::boxed(xs), BrickPart::boxed(ys), zs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> SetDomain {
        SetDomain::field(FieldCtx::prime(7).unwrap(), 1)
    }

    fn scalars(g: GeneratedSet) -> Vec<u64> {
        match g {
            GeneratedSet::Scalars(a) => a.elements().iter().map(|e| e.index()).collect(),
            other => panic!("expected scalars, got {other:?}"),
        }
    }

    #[test]
    fn spec_round_trip() {
        let s: SetSpec = "random:size=10;seed=42".parse().unwrap();
        assert_eq!(s, SetSpec::random(10, 42));
        assert_eq!(s.to_string().parse::<SetSpec>().unwrap(), s);
        assert!("random:colour=red".parse::<SetSpec>().is_err());
        assert!("triangle".parse::<SetSpec>().is_err());
    }

    #[test]
    fn interval_and_subgroup() {
        assert_eq!(scalars(gen_set(&SetSpec::interval(1, 5), &f7()).unwrap()), vec![1, 2, 3, 4, 5]);
        assert_eq!(scalars(gen_set(&SetSpec::mult_subgroup(3), &f7()).unwrap()), vec![1, 2, 4]);
        assert_eq!(
            gen_set(&SetSpec::mult_subgroup(4), &f7()),
            Err(Error::NotADivisor { d: 4, order: 6 })
        );
        assert!(matches!(
            gen_set(&SetSpec::interval(0, 9), &f7()),
            Err(Error::SizeUnsatisfiable { .. })
        ));
    }

    #[test]
    fn random_is_reproducible() {
        let dom = SetDomain::field(FieldCtx::prime(101).unwrap(), 1);
        let a = gen_set(&SetSpec::random(10, 42), &dom).unwrap();
        let b = gen_set(&SetSpec::random(10, 42), &dom).unwrap();
        assert_eq!(a, b);
        let c = gen_set(&SetSpec::random(10, 43), &dom).unwrap();
        assert_ne!(a, c);
        let a = scalars(a);
        assert_eq!(a.len(), 10);
        assert!(!a.contains(&0));
        assert!(matches!(
            gen_set(&SetSpec::random(7, 1), &f7()),
            Err(Error::SizeUnsatisfiable { requested: 7, available: 6 })
        ));
    }

    #[test]
    fn subspaces() {
        let ctx = FieldCtx::of_order(9).unwrap();
        let spec: SetSpec = "subspace:dim=2;seed=5".parse().unwrap();
        let GeneratedSet::Vectors(e) = gen_set(&spec, &SetDomain::field(ctx.clone(), 3)).unwrap() else {
            panic!()
        };
        assert_eq!(e.len(), 81);
        for u in &e {
            for v in &e {
                assert!(e.binary_search(&ctx.vadd(u, v)).is_ok());
            }
        }
        let sub: SetSpec = "subspace:subfield=true".parse().unwrap();
        let GeneratedSet::Vectors(e) = gen_set(&sub, &SetDomain::field(ctx, 2)).unwrap() else {
            panic!()
        };
        assert_eq!(e.len(), 9);
    }

    #[test]
    fn complex_families() {
        let g: SetSpec = "gaussian_grid:side=3".parse().unwrap();
        assert_eq!(gen_set(&g, &SetDomain::Complex).unwrap().len(), 9);
        let r = SetSpec::random(12, 9);
        assert_eq!(gen_set(&r, &SetDomain::Complex), gen_set(&r, &SetDomain::Complex));
        let GeneratedSet::Complex(a) = gen_set(&r, &SetDomain::Complex).unwrap() else { panic!() };
        assert_eq!(a.len(), 12);
        assert!(!a.contains(&ComplexRational::zero()));
        let e: SetSpec = "explicit:values=1|i|2".parse().unwrap();
        assert_eq!(gen_set(&e, &SetDomain::Complex).unwrap().len(), 3);
        let geo: SetSpec = "geometric:base=2;len=4".parse().unwrap();
        assert_eq!(gen_set(&geo, &SetDomain::Complex).unwrap().len(), 4);
    }

    #[test]
    fn bricks_and_explicit_vectors() {
        let ctx = FieldCtx::prime(5).unwrap();
        let spec: SetSpec = "box_brick:x=3;y=2;z=4;seed=1".parse().unwrap();
        let GeneratedSet::Brick(b) = gen_set(&spec, &SetDomain::field(ctx.clone(), 2)).unwrap() else {
            panic!()
        };
        assert_eq!(b.len(), 9 * 4 * 4);
        assert_eq!((b.cal_x(), b.cal_y()), (Some(3), Some(2)));
        let e: SetSpec = "explicit:values=1,0|0,1|1,0".parse().unwrap();
        assert_eq!(gen_set(&e, &SetDomain::field(ctx, 2)).unwrap().len(), 2);
    }

    #[test]
    fn size_override() {
        let s: SetSpec = "interval:lo=2;hi=4".parse().unwrap();
        let s = s.with_size(5).unwrap();
        assert_eq!(scalars(gen_set(&s, &f7()).unwrap()), vec![2, 3, 4, 5, 6]);
        assert_eq!(SetSpec::mult_subgroup(2).with_size(6).unwrap(), SetSpec::mult_subgroup(6));
        assert!("explicit:values=1".parse::<SetSpec>().unwrap().with_size(3).is_err());
    }
}
