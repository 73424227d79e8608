//! Cross-module verification suites. Each suite pits a fast algorithm
//! against an independent brute-force count and records every disagreement
//! as data instead of panicking.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{ComplexRational, ComplexRationals};
use crate::domain::{ExactDomain, ScalarSet};
use crate::energy;
use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement, FieldVector};
use crate::heisenberg::{Brick, HeisPoint, HeisenbergGroup};
use crate::incidence::{self, Line, PointSet2, WeightedLineSet};
use crate::lab::setspec::rng_for;
use crate::spectral::{self, LiftedMultiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerifySuite {
    Core,
    Spectral,
    Reduction,
    Incidence,
    Complex,
}

impl VerifySuite {
    pub const ALL: [VerifySuite; 5] = [
        VerifySuite::Core,
        VerifySuite::Spectral,
        VerifySuite::Reduction,
        VerifySuite::Incidence,
        VerifySuite::Complex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifySuite::Core => "core",
            VerifySuite::Spectral => "spectral",
            VerifySuite::Reduction => "reduction",
            VerifySuite::Incidence => "incidence",
            VerifySuite::Complex => "complex",
        }
    }
}

impl fmt::Display for VerifySuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifySuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VerifySuite::ALL
            .into_iter()
            .find(|v| v.name() == s.trim())
            .ok_or_else(|| Error::InvalidSpec(format!("unknown verification suite '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(suite: VerifySuite) -> Self {
        VerifyReport { suite: suite.name().to_string(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// `{"suite": .., "failures": [..]}`.
    pub fn failures_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            suite: &'a str,
            checks: usize,
            failures: Vec<&'a Check>,
        }
        let out = Out { suite: &self.suite, checks: self.checks.len(), failures: self.failures() };
        serde_json::to_string_pretty(&out).expect("plain data serializes")
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Records an equality; errors count as failures.
    fn equal<T: PartialEq + fmt::Debug>(&mut self, name: impl Into<String>, got: Result<T>, want: Result<T>) {
        match (got, want) {
            (Ok(g), Ok(w)) => {
                let detail = if g == w { String::new() } else { format!("got {g:?}, expected {w:?}") };
                self.check(name, g == w, detail);
            }
            (Err(e), _) | (_, Err(e)) => self.check(name, false, format!("error: {e}")),
        }
    }

    fn holds(&mut self, name: impl Into<String>, result: Result<bool>) {
        match result {
            Ok(ok) => self.check(name, ok, if ok { "" } else { "inequality violated" }),
            Err(e) => self.check(name, false, format!("error: {e}")),
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures();
        writeln!(
            f,
            "suite {}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failed.len()
        )?;
        for c in failed {
            writeln!(f, "  FAIL {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

pub fn verify_suite(suite: VerifySuite) -> VerifyReport {
    let mut report = VerifyReport::new(suite);
    let mut rng = rng_for(0x5eed, suite as u64);
    match suite {
        VerifySuite::Core => core(&mut report, &mut rng),
        VerifySuite::Spectral => spectral_suite(&mut report, &mut rng),
        VerifySuite::Reduction => reduction(&mut report, &mut rng),
        VerifySuite::Incidence => incidence_suite(&mut report, &mut rng),
        VerifySuite::Complex => complex(&mut report, &mut rng),
    }
    report
}

fn random_scalars(ctx: &FieldCtx, size: usize, nonzero: bool, rng: &mut ChaCha8Rng) -> ScalarSet<FieldElement> {
    let skip = usize::from(nonzero);
    let q = ctx.q() as usize;
    sample(rng, q - skip, size.min(q - skip))
        .into_iter()
        .map(|i| ctx.from_index((i + skip) as u64))
        .collect()
}

fn random_vectors(ctx: &FieldCtx, n: usize, size: usize, rng: &mut ChaCha8Rng) -> Vec<FieldVector> {
    let total = ctx.space_size(n) as usize;
    let mut v: Vec<FieldVector> = sample(rng, total, size.min(total))
        .into_iter()
        .map(|i| ctx.vector_from_index(n, i as u64))
        .collect();
    v.sort();
    v
}

fn random_point(group: &HeisenbergGroup, rng: &mut ChaCha8Rng) -> HeisPoint {
    let ctx = group.ctx();
    let n = group.n();
    let mut v = || ctx.vector_from_index(n, rng.gen_range(0..ctx.space_size(n) as u64));
    let (x, y) = (v(), v());
    HeisPoint::new(x, y, ctx.from_index(rng.gen_range(0..ctx.q())))
}

/// `S` straight from `a1 + a2 = a3 + a4`, `b1 + b2 = b3 + b4`, `a1 b2 = a3 b4`,
/// eliminating `a4` and `b4`.
pub(crate) fn s_count_oracle<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> u128 {
    let el = a.elements();
    let mut count = 0u128;
    for a1 in el {
        for a2 in el {
            for a3 in el {
                if !a.contains(&dom.sub(&dom.add(a1, a2), a3)) {
                    continue;
                }
                for b1 in el {
                    for b2 in el {
                        let lhs = dom.mul(a1, b2);
                        for b3 in el {
                            let b4 = dom.sub(&dom.add(b1, b2), b3);
                            if a.contains(&b4) && dom.mul(a3, &b4) == lhs {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    count
}

/// `X` by the six-fold loop over its defining tuples.
fn x_count_oracle<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> u128 {
    let el = a.elements();
    let mut count = 0u128;
    for b in el {
        for bp in el.iter().filter(|&bp| bp != b) {
            let gap = dom.sub(b, bp);
            for d in el {
                if !a.contains(&dom.sub(&dom.add(b, d), bp)) {
                    continue;
                }
                for ap in el {
                    let rhs = dom.mul(ap, &gap);
                    for c in el {
                        for cp in el {
                            if dom.mul(d, &dom.sub(cp, c)) == rhs {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    count
}

/// `#{(a, b, c, a', b', c') : a(b - c) = a'(b' - c')}` by the six-fold loop.
fn m_count_oracle<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> u128 {
    let el = a.elements();
    let values: Vec<D::Elem> = el
        .iter()
        .flat_map(|x| el.iter().flat_map(move |b| el.iter().map(move |c| (x, b, c))))
        .map(|(x, b, c)| dom.mul(x, &dom.sub(b, c)))
        .collect();
    let mut count = 0u128;
    for u in &values {
        for v in &values {
            if u == v {
                count += 1;
            }
        }
    }
    count
}

fn h1_points(a: &ScalarSet<FieldElement>) -> Vec<HeisPoint> {
    let el = a.elements();
    el.iter()
        .flat_map(|&x| {
            el.iter()
                .map(move |&y| HeisPoint::new(FieldVector::new(vec![x]), FieldVector::new(vec![y]), FieldElement::ZERO))
        })
        .collect()
}

fn core(r: &mut VerifyReport, rng: &mut ChaCha8Rng) {
    for q in [4u64, 8, 9, 25, 27] {
        let ctx = FieldCtx::of_order(q).expect("small prime power");
        let els: Vec<FieldElement> = ctx.elements().collect();
        let mut ok = true;
        for &a in &els {
            ok &= a.is_zero() || ctx.mul(a, ctx.inv(a).expect("nonzero")) == ctx.one();
            ok &= ctx.pow(a, q) == a;
            for &b in &els {
                ok &= ctx.mul(a, b) == ctx.mul_by_polynomial(a, b);
                ok &= ctx.add(a, b) == ctx.add(b, a);
            }
        }
        r.check(format!("field axioms F_{q}"), ok, "");
    }
    for (q, n) in [(3u64, 1usize), (5, 1), (9, 1), (3, 2)] {
        let group = HeisenbergGroup::new(FieldCtx::of_order(q).expect("prime power"), n).expect("valid group");
        let mut ok = true;
        for _ in 0..500 {
            let (a, b, c) = (random_point(&group, rng), random_point(&group, rng), random_point(&group, rng));
            let ab = group.mul(&a, &b).expect("valid points");
            ok &= group.mul_via_matrix(&a, &b).as_ref() == Ok(&ab);
            ok &= group.mul(&ab, &c) == group.mul(&a, &group.mul(&b, &c).expect("valid"));
            ok &= group.mul(&a, &group.inv(&a)) == Ok(group.identity());
        }
        r.check(format!("group law H_{n}(F_{q})"), ok, "");
    }
    for p in [3u64, 5] {
        let ctx = FieldCtx::prime(p).expect("prime");
        let group = HeisenbergGroup::new(ctx.clone(), 1).expect("valid group");
        let all: Vec<FieldVector> = ctx.enumerate(1).expect("small").collect();
        let brick = Brick::symmetric(all, ctx.elements().collect()).expect("valid brick");
        let prod = group.brick_product(&brick, &brick);
        r.equal(
            format!("full brick F_{p}"),
            prod.map(|s| (s.len() as u128, s.coset_count())),
            Ok((group.order(), p * p)),
        );
    }
    for n in [1i64, 2, 7, 20, 33] {
        let set: ScalarSet<ComplexRational> = (0..n).map(|v| ComplexRational::from_ints(v, 0)).collect();
        r.equal(
            format!("E+ of {{0..{n}}}"),
            Ok(energy::energy_add(&ComplexRationals, &set)),
            Ok(((2 * n * n * n + n) / 3) as u128),
        );
    }
    for p in [7u64, 13] {
        let ctx = FieldCtx::prime(p).expect("prime");
        for d in (1..p).filter(|d| (p - 1) % d == 0) {
            let h = ScalarSet::new(ctx.mult_subgroup(d).expect("divisor"));
            r.equal(format!("Ex of subgroup {d} in F_{p}"), Ok(energy::energy_mul(&ctx, &h)), Ok((d as u128).pow(3)));
        }
    }
    let ctx = FieldCtx::prime(11).expect("prime");
    for trial in 0..5 {
        let a = random_scalars(&ctx, rng.gen_range(2..=6), false, rng);
        let group = HeisenbergGroup::new(ctx.clone(), 1).expect("valid group");
        let pts = h1_points(&a);
        let direct = group.product_set(&pts, &pts).map(|s| (s.len() as u64, s.collision_energy()));
        let profile = energy::product_profile(&ctx, &a).map(|p| (p.size, p.s_count));
        r.equal(format!("product profile vs group product #{trial}"), profile, direct);
    }
}

fn spectral_suite(r: &mut VerifyReport, rng: &mut ChaCha8Rng) {
    for (q, n) in [(7u64, 1usize), (5, 1), (3, 2)] {
        let ctx = FieldCtx::of_order(q).expect("prime power");
        let total = ctx.space_size(n) as usize;
        let mut agree = 0;
        let mut worst = 0.0f64;
        for _ in 0..50 {
            let e = random_vectors(&ctx, n, rng.gen_range(1..=total), rng);
            let direct = spectral::triple_count_direct(&ctx, &e);
            let diff = spectral::triple_count_differences(&ctx, &e);
            let spec = spectral::triple_count_spectral(&ctx, n, &e);
            if let (Ok(d), Ok(d2), Ok(s)) = (direct, diff, spec) {
                worst = worst.max((s - d as f64).abs());
                if d == d2 && s.round() as u128 == d && spectral::orthogonality_bound_holds(d, e.len() as u128, q, n) {
                    agree += 1;
                }
            }
        }
        r.check(
            format!("triple counts F_{q}^{n}"),
            agree == 50,
            format!("{agree}/50 agree, worst spectral gap {worst:.3e}"),
        );
    }
    let ctx = FieldCtx::prime(3).expect("prime");
    let all: Vec<FieldVector> = ctx.enumerate(1).expect("small").collect();
    r.equal("full space triple count F_3", spectral::triple_count_direct(&ctx, &all), Ok(15));

    let ctx = FieldCtx::prime(5).expect("prime");
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let e = random_vectors(&ctx, 2, rng.gen_range(1..=25), rng);
        let residual = spectral::DensityTable::indicator(ctx.clone(), 2, &e)
            .and_then(|f| spectral::fourier_transform(&f).map(|h| spectral::plancherel_residual(&f, &h)));
        worst = worst.max(residual.unwrap_or(f64::INFINITY));
    }
    r.check("plancherel F_5^2", worst < 1e-9, format!("worst residual {worst:.3e}"));

    let mut ok = 0;
    for _ in 0..50 {
        let (a, b) = (random_multiset(&ctx, rng), random_multiset(&ctx, rng));
        if let Ok(count) = spectral::bilinear_count_n(&ctx, &a, &b) {
            if count.within_bound && count.count == bilinear_oracle(&ctx, &a, &b) {
                ok += 1;
            }
        }
    }
    r.check("bilinear count F_5", ok == 50, format!("{ok}/50"));
}

pub(crate) fn random_multiset(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> LiftedMultiset {
    let mut m = LiftedMultiset::new(1);
    for _ in 0..rng.gen_range(1..=12) {
        let v = ctx.vector_from_index(2, rng.gen_range(0..ctx.space_size(2) as u64));
        let s = ctx.from_index(rng.gen_range(0..ctx.q()));
        m.insert(v, s, rng.gen_range(1..=3)).expect("dimension 2");
    }
    m
}

/// `N(A, B)` by the pair loop over supports.
pub(crate) fn bilinear_oracle(ctx: &FieldCtx, a: &LiftedMultiset, b: &LiftedMultiset) -> BigUint {
    let mut n = BigUint::default();
    for (va, sa, ma) in a.iter() {
        for (vb, sb, mb) in b.iter() {
            if ctx.dot(va, vb) == ctx.add(sa, sb) {
                n += BigUint::from(ma) * mb;
            }
        }
    }
    n
}

fn reduction(r: &mut VerifyReport, rng: &mut ChaCha8Rng) {
    let ctx = FieldCtx::prime(11).expect("prime");
    for trial in 0..12 {
        let a = random_scalars(&ctx, rng.gen_range(2..=8), true, rng);
        let len = a.len() as u128;
        let s = energy::quad_count_s(&ctx, &a);
        r.equal(format!("S oracle #{trial}"), s.clone(), Ok(s_count_oracle(&ctx, &a)));
        let x = energy::x_count(&ctx, &a);
        r.equal(format!("X oracle #{trial}"), x.clone(), Ok(x_count_oracle(&ctx, &a)));
        r.holds(
            format!("S <= X + |A|^4 #{trial}"),
            s.and_then(|s| x.clone().map(|x| s <= x + len.pow(4))),
        );
        let lines = incidence::build_thm0_lines(&ctx, &a);
        let grid = PointSet2::grid(&a);
        r.equal(
            format!("X = I(AxA, L) #{trial}"),
            lines.clone().and_then(|l| incidence::incidence_count(&ctx, &grid, &l)).map(|i| i.incidences),
            x.map(BigUint::from),
        );
        let e_add = energy::energy_add(&ctx, &a);
        r.equal(
            format!("|L| = (E+ - |A|^2)|A| #{trial}"),
            lines.map(|l| l.total()),
            Ok((e_add - len * len) * len),
        );
    }
}

fn incidence_suite(r: &mut VerifyReport, rng: &mut ChaCha8Rng) {
    for p in [3u64, 5] {
        let ctx = FieldCtx::prime(p).expect("prime");
        let all = ScalarSet::new(ctx.elements());
        let grid = PointSet2::grid(&all);
        let lines = all_lines(&ctx);
        r.equal(
            format!("grid incidences F_{p}"),
            incidence::incidence_count(&ctx, &grid, &lines).map(|i| i.incidences),
            Ok(BigUint::from(p.pow(3) + p * p)),
        );
        r.holds(
            format!("Holder F_{p} all lines"),
            incidence::sum_cubes(&ctx, &grid, Some(&lines)).map(|s| s.holder_holds == Some(true)),
        );
    }
    let q = ComplexRationals;
    let a: ScalarSet<ComplexRational> = (1..=3).map(|v| ComplexRational::from_ints(v, 0)).collect();
    r.equal(
        "rich lines {1,2,3}^2, t = 3",
        incidence::rich_lines(&q, &PointSet2::grid(&a), 3).map(|l| l.len()),
        Ok(8),
    );
    let ctx = FieldCtx::prime(13).expect("prime");
    for trial in 0..10 {
        let a = random_scalars(&ctx, rng.gen_range(2..=7), true, rng);
        let grid = PointSet2::grid(&a);
        r.equal(
            format!("collinear triples #{trial}"),
            incidence::collinear_triples(&ctx, &a).map(|t| t.ordered),
            incidence::collinear_triples_brute(&ctx, &a),
        );
        r.holds(
            format!("Holder spanned lines #{trial}"),
            incidence::sum_cubes(&ctx, &grid, None).map(|s| s.holder_holds == Some(true)),
        );
        r.holds(
            format!("dyadic invariants #{trial}"),
            incidence::build_thm0_lines(&ctx, &a).map(|l| incidence::dyadic_invariants_hold(&l, &incidence::dyadic_buckets(&l))),
        );
    }
}

/// Every line of `F_p^2`, each once.
fn all_lines(ctx: &FieldCtx) -> WeightedLineSet<FieldElement> {
    let mut seen = HashSet::new();
    let els: Vec<FieldElement> = ctx.elements().collect();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                if let Ok(l) = Line::new(ctx, a, b, c) {
                    seen.insert(l);
                }
            }
        }
    }
    WeightedLineSet::unweighted(seen)
}

fn random_gaussian(size: usize, radius: i64, rng: &mut ChaCha8Rng) -> ScalarSet<ComplexRational> {
    let mut out = std::collections::BTreeSet::new();
    while out.len() < size {
        let (re, im) = (rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius));
        if (re, im) != (0, 0) {
            out.insert(ComplexRational::from_ints(re, im));
        }
    }
    out.into_iter().collect()
}

fn complex(r: &mut VerifyReport, rng: &mut ChaCha8Rng) {
    let dom = ComplexRationals;
    for trial in 0..10 {
        let a = random_gaussian(rng.gen_range(2..=5), 3, rng);
        let m = energy::m_count(&dom, &a);
        r.equal(format!("M oracle #{trial}"), m.clone().map(|m| m.count), Ok(m_count_oracle(&dom, &a)));
        r.holds(format!("M <= 2 Ex^(1/2) |A|^3 #{trial}"), m.map(|m| m.within_bound));
        r.equal(
            format!("S oracle over C #{trial}"),
            energy::quad_count_s(&dom, &a),
            Ok(s_count_oracle(&dom, &a)),
        );
    }
    let two: ScalarSet<ComplexRational> = [1, 2].iter().map(|&v| ComplexRational::from_ints(v, 0)).collect();
    r.equal("h1 product {1,2}", energy::h1_product_size(&dom, &two), Ok(15));
    let mixed: ScalarSet<ComplexRational> =
        [ComplexRational::from_ints(1, 0), ComplexRational::i(), ComplexRational::from_ints(2, 0)].into_iter().collect();
    r.equal("Ex {1, i, 2}", Ok(energy::energy_mul(&dom, &mixed)), Ok(15));
    r.equal("M {1, i, 2}", energy::m_count(&dom, &mixed).map(|m| m.count), Ok(99));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for suite in VerifySuite::ALL {
            let report = verify_suite(suite);
            assert!(report.passed(), "{report}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn failures_are_reported() {
        let mut r = VerifyReport::new(VerifySuite::Core);
        r.equal("bad", Ok(1), Ok(2));
        r.holds("err", Err(Error::DivisionByZero));
        assert!(!r.passed());
        let json = r.failures_json();
        assert!(json.contains("\"bad\"") && json.contains("division by zero"));
    }
}
