//! Fourier analysis on `F_q^n` and bilinear multiset counts.
//!
//! The transform is normalized as `f^(m) = q^{-n} sum_x chi(-x.m) f(x)`,
//! so that `f(x) = sum_m chi(x.m) f^(m)` and
//! `sum_m |f^(m)|^2 = q^{-n} sum_x |f(x)|^2`.
//!
//! Character sums are evaluated in double precision. Every count derived
//! from them is compared against an integer algorithm before rounding.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement, FieldVector};
use crate::limits::Limits;

/// A complex-valued function on `F_q^n`, stored densely in enumeration order.
#[derive(Debug, Clone)]
pub struct DensityTable {
    ctx: FieldCtx,
    n: usize,
    values: Vec<Complex64>,
}

impl DensityTable {
    pub fn new(ctx: FieldCtx, n: usize, values: Vec<Complex64>) -> Result<Self> {
        let size = ctx.space_size(n);
        Limits::current().check_space("q^n", size)?;
        if values.len() as u128 != size {
            return Err(Error::DimensionMismatch { expected: size as usize, found: values.len() });
        }
        Ok(DensityTable { ctx, n, values })
    }

    pub fn constant(ctx: FieldCtx, n: usize, value: Complex64) -> Result<Self> {
        let size = ctx.space_size(n);
        Limits::current().check_space("q^n", size)?;
        Ok(DensityTable { ctx, n, values: vec![value; size as usize] })
    }

    /// The indicator function of `set`.
    pub fn indicator(ctx: FieldCtx, n: usize, set: &[FieldVector]) -> Result<Self> {
        let mut table = DensityTable::constant(ctx, n, Complex64::new(0.0, 0.0))?;
        for v in set {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            let idx = table.ctx.vector_index(v) as usize;
            table.values[idx] = Complex64::new(1.0, 0.0);
        }
        Ok(table)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn get(&self, v: &FieldVector) -> Complex64 {
        self.values[self.ctx.vector_index(v) as usize]
    }

    /// `sum_x |f(x)|^2`.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(Complex64::norm_sqr).sum()
    }
}

fn transform(f: &DensityTable, sign: f64, scale: f64) -> Result<DensityTable> {
    let size = f.ctx.space_size(f.n);
    Limits::current().check_pairs("q^(2n) transform", size * size)?;
    let ctx = &f.ctx;
    let p = ctx.p() as usize;
    let roots = ctx.roots_of_unity();
    let vectors: Vec<FieldVector> = ctx.enumerate(f.n)?.collect();
    let values = vectors
        .par_iter()
        .map(|m| {
            // bucket f by the trace of x.m, then apply the p-th roots once
            let mut buckets = vec![Complex64::new(0.0, 0.0); p];
            for (x, &fx) in vectors.iter().zip(&f.values) {
                if fx != Complex64::new(0.0, 0.0) {
                    buckets[ctx.trace(ctx.dot(x, m)) as usize] += fx;
                }
            }
            let sum: Complex64 = buckets
                .iter()
                .enumerate()
                .map(|(j, &b)| {
                    let phase = if sign < 0.0 { roots[(p - j) % p] } else { roots[j] };
                    b * phase
                })
                .sum();
            sum * scale
        })
        .collect();
    Ok(DensityTable { ctx: f.ctx.clone(), n: f.n, values })
}

/// `f^(m) = q^{-n} sum_x chi(-x.m) f(x)`, naive `O(q^{2n})`.
pub fn fourier_transform(f: &DensityTable) -> Result<DensityTable> {
    let scale = (f.ctx.q() as f64).powi(-(f.n as i32));
    transform(f, -1.0, scale)
}

/// `f(x) = sum_m chi(x.m) f^(m)`.
pub fn inverse_transform(fhat: &DensityTable) -> Result<DensityTable> {
    transform(fhat, 1.0, 1.0)
}

/// Relative residual of Plancherel, `|sum |f^|^2 - q^{-n} sum |f|^2| / max(1, q^{-n} sum |f|^2)`.
pub fn plancherel_residual(f: &DensityTable, fhat: &DensityTable) -> f64 {
    let rhs = f.energy() * (f.ctx.q() as f64).powi(-(f.n as i32));
    (fhat.energy() - rhs).abs() / rhs.max(1.0)
}

fn check_dims(n: usize, set: &[FieldVector]) -> Result<()> {
    match set.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch { expected: n, found: v.len() }),
        None => Ok(()),
    }
}

/// `T = #{(v, x, x') in E^3 : v.(x - x') = 0}` by the triple loop.
pub fn triple_count_brute(ctx: &FieldCtx, e: &[FieldVector]) -> Result<u128> {
    let len = e.len() as u128;
    Limits::current().check_pairs("|E|^3", len * len * len)?;
    let count = e
        .par_iter()
        .map(|v| {
            let mut c = 0u128;
            for x in e {
                for xp in e {
                    if ctx.dot(v, &ctx.vsub(x, xp)).is_zero() {
                        c += 1;
                    }
                }
            }
            c
        })
        .sum();
    Ok(count)
}

/// `T` through the difference multiset `D(w) = #{(x, x') : x - x' = w}`:
/// `T = sum_v sum_w D(w) [v.w = 0]`, in `O(|E|^2 + |E| |E - E|)`.
pub fn triple_count_differences(ctx: &FieldCtx, e: &[FieldVector]) -> Result<u128> {
    let len = e.len() as u128;
    let mut diffs: HashMap<FieldVector, u64> = HashMap::new();
    for x in e {
        for xp in e {
            *diffs.entry(ctx.vsub(x, xp)).or_default() += 1;
        }
    }
    Limits::current().check_pairs("|E| |E - E|", len * diffs.len() as u128)?;
    let diffs: Vec<(FieldVector, u64)> = diffs.into_iter().collect();
    Ok(e.par_iter()
        .map(|v| {
            diffs
                .iter()
                .filter(|(w, _)| ctx.dot(v, w).is_zero())
                .map(|&(_, c)| c as u128)
                .sum::<u128>()
        })
        .sum())
}

/// Exact orthogonality triple count; picks the cheaper algorithm.
pub fn triple_count_direct(ctx: &FieldCtx, e: &[FieldVector]) -> Result<u128> {
    let Some(first) = e.first() else { return Ok(0) };
    check_dims(first.len(), e)?;
    if e.len() <= 64 {
        triple_count_brute(ctx, e)
    } else {
        triple_count_differences(ctx, e)
    }
}

/// `T = |E|^3/q + q^{2n-1} sum_{s != 0} sum_{v in E} |E^(s v)|^2`.
pub fn triple_count_spectral(ctx: &FieldCtx, n: usize, e: &[FieldVector]) -> Result<f64> {
    check_dims(n, e)?;
    if e.is_empty() {
        return Ok(0.0);
    }
    let ehat = fourier_transform(&DensityTable::indicator(ctx.clone(), n, e)?)?;
    let q = ctx.q() as f64;
    let mut acc = 0.0;
    for s in ctx.elements().filter(|s| !s.is_zero()) {
        for v in e {
            acc += ehat.get(&ctx.vscale(s, v)).norm_sqr();
        }
    }
    let size = e.len() as f64;
    Ok(size.powi(3) / q + q.powi(2 * n as i32 - 1) * acc)
}

/// Whether `T <= |E|^3/q + q^n |E|`, decided exactly.
pub fn orthogonality_bound_holds(t: u128, e_len: u128, q: u64, n: usize) -> bool {
    let q = BigUint::from(q);
    let e = BigUint::from(e_len);
    BigUint::from(t) * &q <= e.pow(3) + q.pow(n as u32 + 1) * e
}

/// A multiset in `F_q^{2n} x F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedMultiset {
    half_dim: usize,
    counts: BTreeMap<(FieldVector, FieldElement), u64>,
}

impl LiftedMultiset {
    pub fn new(half_dim: usize) -> Self {
        LiftedMultiset { half_dim, counts: BTreeMap::new() }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn insert(&mut self, vector: FieldVector, scalar: FieldElement, multiplicity: u64) -> Result<()> {
        if vector.len() != 2 * self.half_dim {
            return Err(Error::DimensionMismatch { expected: 2 * self.half_dim, found: vector.len() });
        }
        if multiplicity > 0 {
            *self.counts.entry((vector, scalar)).or_default() += multiplicity;
        }
        Ok(())
    }

    /// `|A| = sum m(x)`.
    pub fn total(&self) -> u128 {
        self.counts.values().map(|&m| m as u128).sum()
    }

    /// `sum m(x)^2`.
    pub fn second_moment(&self) -> BigUint {
        self.counts.values().map(|&m| BigUint::from(m) * m).sum()
    }

    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FieldVector, FieldElement, u64)> {
        self.counts.iter().map(|((v, s), &m)| (v, *s, m))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BilinearCount {
    /// `N(A, B)`, exact.
    pub count: BigUint,
    /// `|A| |B| / q`.
    pub main_term: BigRational,
    /// `q^n (sum m_A^2 sum m_B^2)^{1/2}`.
    pub error_bound: f64,
    /// `|N - |A||B|/q| <= error_bound`, decided in exact arithmetic.
    pub within_bound: bool,
}

/// `N(A, B) = #{((a, b), (c, d)) in A x B : a.c = b + d}` with multiplicity.
pub fn bilinear_count_n(ctx: &FieldCtx, a: &LiftedMultiset, b: &LiftedMultiset) -> Result<BilinearCount> {
    if a.half_dim != b.half_dim {
        return Err(Error::DimensionMismatch { expected: a.half_dim, found: b.half_dim });
    }
    let mut by_vector: HashMap<&FieldVector, HashMap<FieldElement, u64>> = HashMap::new();
    for (c, d, m) in b.iter() {
        *by_vector.entry(c).or_default().entry(d).or_default() += m;
    }
    Limits::current().check_pairs("bilinear pairs", a.support_len() as u128 * by_vector.len() as u128)?;
    let groups: Vec<_> = by_vector.into_iter().collect();
    let entries: Vec<_> = a.iter().collect();
    let count: u128 = entries
        .par_iter()
        .map(|&(av, bs, ma)| {
            groups
                .iter()
                .map(|(c, ds)| {
                    let d = ctx.sub(ctx.dot(av, c), bs);
                    ds.get(&d).map_or(0, |&mb| ma as u128 * mb as u128)
                })
                .sum::<u128>()
        })
        .sum();

    let q = ctx.q();
    let (ta, tb) = (BigUint::from(a.total()), BigUint::from(b.total()));
    let (ma, mb) = (a.second_moment(), b.second_moment());
    let main_term = BigRational::new(BigInt::from(&ta * &tb), BigInt::from(q));
    let qn = (q as f64).powi(a.half_dim as i32);
    let error_bound = qn * (ma.to_f64().unwrap_or(f64::INFINITY) * mb.to_f64().unwrap_or(f64::INFINITY)).sqrt();
    // (N q - |A||B|)^2 <= q^{2n+2} M_A M_B
    let deviation = BigInt::from(count) * BigInt::from(q) - BigInt::from(ta * tb);
    let lhs = deviation.magnitude().pow(2);
    let rhs = BigUint::from(q).pow(2 * a.half_dim as u32 + 2) * ma * mb;
    Ok(BilinearCount {
        count: BigUint::from(count),
        main_term,
        error_bound,
        within_bound: lhs <= rhs,
    })
}

fn concat(a: &FieldVector, b: &FieldVector) -> FieldVector {
    FieldVector::new(a.entries().iter().chain(b.entries()).copied().collect())
}

/// The multisets `A = {(d, -b, d.c)}` and `B = {(c', a', -a'.b')}` over
/// `b, c, d in E` and `a', b', c' in E`. `N(A, B)` counts the tuples with
/// `d.(c' - c) = a'.(b - b')`.
pub fn lifted_sets_for_thm1(ctx: &FieldCtx, e: &[FieldVector]) -> Result<(LiftedMultiset, LiftedMultiset)> {
    let n = e.first().map_or(1, FieldVector::len);
    check_dims(n, e)?;
    let len = e.len() as u128;
    Limits::current().check_pairs("|E|^3", len * len * len)?;
    let mut lifted_a = LiftedMultiset::new(n);
    let mut lifted_b = LiftedMultiset::new(n);
    for u in e {
        for v in e {
            // A: d = u, b = v; B: c' = u, a' = v
            let da = concat(u, &ctx.vneg(v));
            let db = concat(u, v);
            for w in e {
                lifted_a.insert(da.clone(), ctx.dot(u, w), 1)?;
                lifted_b.insert(db.clone(), ctx.neg(ctx.dot(v, w)), 1)?;
            }
        }
    }
    Ok((lifted_a, lifted_b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::index::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_set(ctx: &FieldCtx, n: usize, size: usize, rng: &mut ChaCha8Rng) -> Vec<FieldVector> {
        let total = ctx.space_size(n) as usize;
        sample(rng, total, size.min(total))
            .into_iter()
            .map(|i| ctx.vector_from_index(n, i as u64))
            .collect()
    }

    #[test]
    fn transform_of_delta_and_constant() {
        let ctx = FieldCtx::of_order(9).unwrap();
        let delta = DensityTable::indicator(ctx.clone(), 1, &[ctx.vector(&[0])]).unwrap();
        let dhat = fourier_transform(&delta).unwrap();
        assert!(dhat.values().iter().all(|v| (v - Complex64::new(1.0 / 9.0, 0.0)).norm() < 1e-12));

        let ctx = FieldCtx::prime(5).unwrap();
        let one = DensityTable::constant(ctx.clone(), 2, Complex64::new(1.0, 0.0)).unwrap();
        let ohat = fourier_transform(&one).unwrap();
        for (i, v) in ohat.values().iter().enumerate() {
            let expected = if i == 0 { 1.0 } else { 0.0 };
            assert!((v - Complex64::new(expected, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn plancherel_and_inversion() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (q, n) in [(5u64, 1usize), (3, 2), (4, 2), (9, 1)] {
            let ctx = FieldCtx::of_order(q).unwrap();
            let e = random_set(&ctx, n, (q as usize).pow(n as u32) / 2, &mut rng);
            let f = DensityTable::indicator(ctx.clone(), n, &e).unwrap();
            let fhat = fourier_transform(&f).unwrap();
            assert!(plancherel_residual(&f, &fhat) < 1e-9);
            let back = inverse_transform(&fhat).unwrap();
            for (a, b) in f.values().iter().zip(back.values()) {
                assert!((a - b).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn triple_counts_small_cases() {
        let ctx = FieldCtx::prime(3).unwrap();
        let all: Vec<_> = ctx.enumerate(1).unwrap().collect();
        assert_eq!(triple_count_direct(&ctx, &all).unwrap(), 15);
        assert_eq!(triple_count_differences(&ctx, &all).unwrap(), 15);
        assert!((triple_count_spectral(&ctx, 1, &all).unwrap() - 15.0).abs() < 1e-9);
        let single = vec![ctx.vector(&[2])];
        assert_eq!(triple_count_direct(&ctx, &single).unwrap(), 1);
        assert_eq!(triple_count_spectral(&ctx, 1, &[]).unwrap(), 0.0);
    }

    #[test]
    fn triple_count_algorithms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (q, n) in [(7u64, 1usize), (3, 2), (5, 2), (4, 2)] {
            let ctx = FieldCtx::of_order(q).unwrap();
            for size in 1..=(q as usize).pow(n as u32) {
                let e = random_set(&ctx, n, size, &mut rng);
                let brute = triple_count_brute(&ctx, &e).unwrap();
                assert_eq!(brute, triple_count_differences(&ctx, &e).unwrap());
                let spectral = triple_count_spectral(&ctx, n, &e).unwrap();
                assert!((spectral - brute as f64).abs() < 0.5);
                assert!(orthogonality_bound_holds(brute, e.len() as u128, q, n));
            }
        }
    }

    fn brute_n(ctx: &FieldCtx, a: &LiftedMultiset, b: &LiftedMultiset) -> u128 {
        let mut total = 0u128;
        for (av, bs, ma) in a.iter() {
            for (cv, ds, mb) in b.iter() {
                if ctx.dot(av, cv) == ctx.add(bs, ds) {
                    total += ma as u128 * mb as u128;
                }
            }
        }
        total
    }

    #[test]
    fn bilinear_full_space_has_zero_error() {
        let ctx = FieldCtx::prime(3).unwrap();
        let mut full = LiftedMultiset::new(1);
        for v in ctx.enumerate(2).unwrap() {
            for s in ctx.elements() {
                full.insert(v.clone(), s, 1).unwrap();
            }
        }
        let res = bilinear_count_n(&ctx, &full, &full).unwrap();
        assert_eq!(res.count, BigUint::from(3u64.pow(5)));
        assert_eq!(res.main_term, BigRational::from_integer(BigInt::from(3u64.pow(5))));
        assert!(res.within_bound);
    }

    #[test]
    fn bilinear_single_pair() {
        let ctx = FieldCtx::prime(5).unwrap();
        let mut a = LiftedMultiset::new(1);
        a.insert(ctx.vector(&[1, 0]), ctx.zero(), 1).unwrap();
        let res = bilinear_count_n(&ctx, &a, &a.clone()).unwrap();
        assert_eq!(res.count, BigUint::from(0u32));
        assert!(a.insert(ctx.vector(&[1]), ctx.zero(), 1).is_err());
    }

    #[test]
    fn bilinear_random_matches_pair_loop() {
        use rand::Rng;
        let ctx = FieldCtx::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let mut make = || {
                let mut m = LiftedMultiset::new(1);
                for _ in 0..rng.gen_range(1..20) {
                    let v = ctx.vector(&[rng.gen_range(0..5), rng.gen_range(0..5)]);
                    m.insert(v, ctx.from_int(rng.gen_range(0..5)), rng.gen_range(1..=3)).unwrap();
                }
                m
            };
            let (a, b) = (make(), make());
            let res = bilinear_count_n(&ctx, &a, &b).unwrap();
            assert_eq!(res.count, BigUint::from(brute_n(&ctx, &a, &b)));
            assert!(res.within_bound);
        }
    }

    #[test]
    fn lifted_singleton() {
        let ctx = FieldCtx::prime(5).unwrap();
        let e = vec![ctx.vector(&[2, 3])];
        let (a, b) = lifted_sets_for_thm1(&ctx, &e).unwrap();
        assert_eq!((a.support_len(), b.support_len()), (1, 1));
        assert_eq!(bilinear_count_n(&ctx, &a, &b).unwrap().count, BigUint::from(1u32));
    }
}
