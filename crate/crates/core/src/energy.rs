//! Energies and the reduction counts behind product-set lower bounds.
//!
//! Everything here is exact and generic over an [`ExactDomain`]. Pairwise
//! sums and products are interned to small integer ids first, so the
//! quartic loops only hash integers regardless of how expensive the
//! underlying arithmetic is.
//!
//! For `A` in a field, the product `[a, b, 0][c, d, 0] = [a + c, b + d, ad]`,
//! so `|[A, A, 0]^2|` is the number of distinct triples `(a + c, b + d, ad)`
//! and `S` (the number of solutions of `m1 m2 = m3 m4`) is the sum of the
//! squared multiplicities of those triples.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::domain::{ExactDomain, ScalarSet};
use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldVector};
use crate::limits::Limits;

/// Interned `i + j` and `i * j` tables over an indexed family.
#[derive(Debug, Clone)]
pub struct PairTables {
    len: usize,
    sum: Vec<u32>,
    prod: Vec<u32>,
    sum_classes: usize,
    prod_classes: usize,
}

fn intern<K: Hash + Eq>(len: usize, key: impl Fn(usize, usize) -> K) -> (Vec<u32>, usize) {
    let mut ids: HashMap<K, u32> = HashMap::new();
    let mut table = Vec::with_capacity(len * len);
    for i in 0..len {
        for j in 0..len {
            let next = ids.len() as u32;
            table.push(*ids.entry(key(i, j)).or_insert(next));
        }
    }
    (table, ids.len())
}

impl PairTables {
    pub fn build<K1: Hash + Eq, K2: Hash + Eq>(
        len: usize,
        sum: impl Fn(usize, usize) -> K1,
        prod: impl Fn(usize, usize) -> K2,
    ) -> Self {
        let (sum, sum_classes) = intern(len, sum);
        let (prod, prod_classes) = intern(len, prod);
        PairTables { len, sum, prod, sum_classes, prod_classes }
    }

    /// Sums `a + b` and products `a b` of a scalar set.
    pub fn for_scalars<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Self {
        let el = a.elements();
        PairTables::build(el.len(), |i, j| dom.add(&el[i], &el[j]), |i, j| dom.mul(&el[i], &el[j]))
    }

    /// Vector sums `u + v` and dot products `u . v` of a vector set.
    pub fn for_vectors(ctx: &FieldCtx, e: &[FieldVector]) -> Self {
        PairTables::build(e.len(), |i, j| ctx.vadd(&e[i], &e[j]), |i, j| ctx.dot(&e[i], &e[j]))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn sum_id(&self, i: usize, j: usize) -> u32 {
        self.sum[i * self.len + j]
    }

    fn prod_id(&self, i: usize, j: usize) -> u32 {
        self.prod[i * self.len + j]
    }

    fn class_energy(table: &[u32], classes: usize) -> u128 {
        let mut r = vec![0u64; classes];
        for &id in table {
            r[id as usize] += 1;
        }
        r.iter().map(|&c| c as u128 * c as u128).sum()
    }

    /// `sum_s r_{A+A}(s)^2`.
    pub fn sum_energy(&self) -> u128 {
        Self::class_energy(&self.sum, self.sum_classes)
    }

    /// `sum_s r_{A.A}(s)^2`.
    pub fn product_energy(&self) -> u128 {
        Self::class_energy(&self.prod, self.prod_classes)
    }

    /// Distinct triples `(a + c, b + d, a * d)` and the sum of their squared
    /// multiplicities. Work is bucketed by the class of `a + c`, so memory
    /// stays `O(|A|^3)`.
    pub fn product_profile(&self) -> Result<ProductProfile> {
        let len = self.len as u128;
        Limits::current().check_pairs("|A|^4 quadruples", len.pow(4))?;
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); self.sum_classes];
        for a in 0..self.len {
            for c in 0..self.len {
                classes[self.sum_id(a, c) as usize].push(a);
            }
        }
        let (size, s) = classes
            .par_iter()
            .map_init(HashMap::<u64, u64>::new, |counts, firsts| {
                counts.clear();
                for &a in firsts {
                    for d in 0..self.len {
                        let prod = self.prod_id(a, d) as u64;
                        for b in 0..self.len {
                            let key = (self.sum_id(b, d) as u64) << 32 | prod;
                            *counts.entry(key).or_default() += 1;
                        }
                    }
                }
                let s: u128 = counts.values().map(|&r| r as u128 * r as u128).sum();
                (counts.len() as u64, s)
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
        Ok(ProductProfile { size, s_count: s })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductProfile {
    /// `|[A, A, 0][A, A, 0]|`.
    pub size: u64,
    /// `S = #{m1 m2 = m3 m4}`.
    pub s_count: u128,
}

impl ProductProfile {
    /// Cauchy-Schwarz: `size * S >= (number of ordered pairs)^2`.
    pub fn cauchy_schwarz_holds(&self, set_len: usize) -> bool {
        let pairs = BigUint::from(set_len).pow(4);
        BigUint::from(self.size) * BigUint::from(self.s_count) >= pairs
    }
}

/// `E+(A) = #{a + b = c + d}`.
pub fn energy_add<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> u128 {
    let el = a.elements();
    PairTables::build(el.len(), |i, j| dom.add(&el[i], &el[j]), |_, _| ()).sum_energy()
}

/// `Ex(A) = #{ab = cd}`; zeros are counted as written.
pub fn energy_mul<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> u128 {
    let el = a.elements();
    PairTables::build(el.len(), |_, _| (), |i, j| dom.mul(&el[i], &el[j])).product_energy()
}

/// Size of `[A, A, 0][A, A, 0]` and the quadruple count `S`.
pub fn product_profile<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<ProductProfile> {
    PairTables::for_scalars(dom, a).product_profile()
}

pub fn quad_count_s<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<u128> {
    Ok(product_profile(dom, a)?.s_count)
}

pub fn h1_product_size<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<u64> {
    Ok(product_profile(dom, a)?.size)
}

/// Size of `[E, E, 0][E, E, 0]` in `H_n(F_q)` and its quadruple count `S`.
pub fn vector_product_profile(ctx: &FieldCtx, e: &[FieldVector]) -> Result<ProductProfile> {
    let mut e = e.to_vec();
    e.sort();
    e.dedup();
    PairTables::for_vectors(ctx, &e).product_profile()
}

pub fn quad_count_s_vectors(ctx: &FieldCtx, e: &[FieldVector]) -> Result<u128> {
    Ok(vector_product_profile(ctx, e)?.s_count)
}

/// `X = #{(a', c, c', b, b', d) in A^6 : b != b', d(c' - c) = a'(b - b'), b + d - b' in A}`.
///
/// Grouped by the slope `s = d / (b - b')`:
/// `X = sum_s w(s) sum_delta r_{A-A}(delta) [s delta in A]`.
pub fn x_count<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<u128> {
    a.require_nonzero(dom)?;
    let el = a.elements();
    let len = el.len() as u128;
    Limits::current().check_pairs("|A|^3 slope triples", len.pow(3))?;
    let mut slopes: HashMap<D::Elem, u64> = HashMap::new();
    for b in el {
        for bp in el {
            if b == bp {
                continue;
            }
            let gap = dom.sub(b, bp);
            for d in el {
                if a.contains(&dom.sub(&dom.add(b, d), bp)) {
                    *slopes.entry(dom.div(d, &gap)?).or_default() += 1;
                }
            }
        }
    }
    let mut diffs: HashMap<D::Elem, u64> = HashMap::new();
    for c in el {
        for cp in el {
            *diffs.entry(dom.sub(cp, c)).or_default() += 1;
        }
    }
    Limits::current().check_pairs("slopes x differences", slopes.len() as u128 * diffs.len() as u128)?;
    let slopes: Vec<_> = slopes.into_iter().collect();
    let diffs: Vec<_> = diffs.into_iter().filter(|(d, _)| !dom.is_zero(d)).collect();
    Ok(slopes
        .par_iter()
        .map(|(s, w)| {
            diffs
                .iter()
                .filter(|(delta, _)| a.contains(&dom.mul(s, delta)))
                .map(|(_, r)| *w as u128 * *r as u128)
                .sum::<u128>()
        })
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCount {
    /// `#{(a, b, c, a', b', c') in A^6 : a(b - c) = a'(b' - c')}`.
    pub count: u128,
    pub e_mul: u128,
    /// `count <= 2 Ex(A)^{1/2} |A|^3`, decided exactly.
    pub within_bound: bool,
}

/// Counts solutions of `a(b - c) = a'(b' - c')` as `sum_v r(v)^2` where
/// `r(v) = #{(a, b, c) : a(b - c) = v}`.
pub fn m_count<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<MCount> {
    if a.len() < 2 {
        return Err(Error::SetTooSmall { required: 2, found: a.len() });
    }
    a.require_nonzero(dom)?;
    let el = a.elements();
    let len = el.len();
    Limits::current().check_pairs("|A|^3 triples", (len as u128).pow(3))?;
    let tables = PairTables::build(len, |i, j| dom.sub(&el[i], &el[j]), |_, _| ());
    // intern differences, then the products a * (b - c)
    let mut diff_rep: Vec<Option<usize>> = vec![None; tables.sum_classes];
    for i in 0..len {
        for j in 0..len {
            diff_rep[tables.sum_id(i, j) as usize].get_or_insert(i * len + j);
        }
    }
    let diff_values: Vec<D::Elem> = diff_rep
        .iter()
        .map(|rep| {
            let r = rep.expect("every class has a representative");
            dom.sub(&el[r / len], &el[r % len])
        })
        .collect();
    let mut diff_count = vec![0u64; tables.sum_classes];
    for &id in &tables.sum {
        diff_count[id as usize] += 1;
    }
    let mut r: HashMap<D::Elem, u64> = HashMap::new();
    for x in el {
        for (delta, &c) in diff_values.iter().zip(&diff_count) {
            *r.entry(dom.mul(x, delta)).or_default() += c;
        }
    }
    let count: u128 = r.values().map(|&c| c as u128 * c as u128).sum();
    let e_mul = energy_mul(dom, a);
    let len3 = BigUint::from(len).pow(3);
    let within_bound = BigUint::from(count).pow(2) <= BigUint::from(4u32) * BigUint::from(e_mul) * &len3 * &len3;
    Ok(MCount { count, e_mul, within_bound })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotProductSet<T> {
    /// `Pi(E) = {a . b : a, b in E}`, sorted.
    pub values: Vec<T>,
    /// `max_a |Pi_a(E)|` where `Pi_a(E) = {a . b : b in E}`.
    pub max_row: usize,
}

/// Dot-product set of a planar set.
pub fn dot_product_set<D: ExactDomain>(dom: &D, e: &[(D::Elem, D::Elem)]) -> DotProductSet<D::Elem> {
    let mut all: HashSet<D::Elem> = HashSet::new();
    let mut max_row = 0;
    for (a1, a2) in e {
        let row: HashSet<D::Elem> = e
            .iter()
            .map(|(b1, b2)| dom.add(&dom.mul(a1, b1), &dom.mul(a2, b2)))
            .collect();
        max_row = max_row.max(row.len());
        all.extend(row);
    }
    let mut values: Vec<D::Elem> = all.into_iter().collect();
    values.sort();
    DotProductSet { values, max_row }
}

/// Convenience wrapper for planar vectors over a finite field.
pub fn dot_product_set_vectors(ctx: &FieldCtx, e: &[FieldVector]) -> Result<DotProductSet<crate::ffield::FieldElement>> {
    let pts = e
        .iter()
        .map(|v| match v.entries() {
            [x, y] => Ok((*x, *y)),
            other => Err(Error::DimensionMismatch { expected: 2, found: other.len() }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(dot_product_set(ctx, &pts))
}
