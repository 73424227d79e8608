//! Arithmetic in `F_q = F_p[t]/(f)` for prime `p` and monic irreducible `f`.
//!
//! Elements are stored as their index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` is the canonical
//! representative of the residue class. The index order is the enumeration
//! order everywhere in the crate (highest-degree coefficient most
//! significant). Multiplication goes through discrete log tables built once
//! per context; a polynomial multiplication path is kept for cross-checks.

mod poly;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Hard cap on the field order so that element indices fit in a `u32`.
const INDEX_CAP: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    /// Position in the canonical enumeration order of the field.
    pub fn index(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A vector in `F_q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldVector(Vec<FieldElement>);

impl FieldVector {
    pub fn new(entries: Vec<FieldElement>) -> Self {
        FieldVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        FieldVector(vec![FieldElement::ZERO; n])
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_entries(self) -> Vec<FieldElement> {
        self.0
    }
}

impl From<Vec<FieldElement>> for FieldVector {
    fn from(v: Vec<FieldElement>) -> Self {
        FieldVector(v)
    }
}

struct FieldInner {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
    generator: FieldElement,
    trace_basis: Vec<u64>,
    roots: Vec<Complex64>,
}

/// An immutable finite field context. Cloning is cheap.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.inner.p)
            .field("k", &self.inner.k)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldCtx {}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.k == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}^{}", self.inner.p, self.inner.k)
        }
    }
}

/// Deterministic trial-division primality check.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits a prime power `q` into `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q % d == 0).unwrap_or(q);
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FieldCtx {
    /// Builds `F_{p^k}` under the process-wide limits. With `modulus` omitted
    /// the lexicographically smallest monic irreducible of degree `k` is used
    /// (`x` when `k = 1`). Coefficients are little-endian, leading 1 included.
    pub fn new(p: u64, k: u32, modulus: Option<&[u64]>) -> Result<Self> {
        Self::with_limits(p, k, modulus, Limits::current())
    }

    pub fn with_limits(p: u64, k: u32, modulus: Option<&[u64]>, limits: &Limits) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        if k == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        let cap = (limits.max_field as u128).min(INDEX_CAP as u128);
        if q > cap {
            return Err(Error::limit("field order", q, cap));
        }
        let q = q as u64;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u64> = m.to_vec();
                if m.len() != k as usize + 1 || m[k as usize] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} little-endian coefficients ending in 1, got {m:?}",
                        k + 1
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {p})")));
                }
                let irreducible = if k <= 4 {
                    !poly::has_proper_factor(&m, p)
                } else {
                    poly::is_irreducible_rabin(&m, p)
                };
                if !irreducible {
                    return Err(Error::ReducibleModulus(m, p));
                }
                m
            }
            None => default_modulus(p, k),
        };
        Ok(Self::build(p, k, q, modulus))
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// The field of order `q` (a prime power) with the default modulus.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::CompositeModulus(q))?;
        Self::new(p, k, None)
    }

    fn build(p: u64, k: u32, q: u64, modulus: Vec<u64>) -> Self {
        let ku = k as usize;
        let to_poly = |idx: u64| poly::trim(poly::digits(idx, p, ku));
        let from_poly = |a: &[u64]| -> u64 {
            a.iter().rev().fold(0u64, |acc, &c| acc * p + c)
        };
        let order = q - 1;
        let factors = poly::distinct_prime_factors(order);
        let generator = (1..q)
            .find(|&g| {
                let gp = to_poly(g);
                factors
                    .iter()
                    .all(|&r| from_poly(&poly::pow_mod(&gp, order / r, &modulus, p)) != 1)
            })
            .expect("the multiplicative group of a field is cyclic");
        let gpoly = to_poly(generator);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur: Vec<u64> = vec![1];
        for i in 0..order {
            let idx = from_poly(&cur);
            exp.push(idx as u32);
            log[idx as usize] = i as u32;
            cur = poly::mul_mod(&cur, &gpoly, &modulus, p);
        }
        let roots = (0..p)
            .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / p as f64))
            .collect();
        let mut ctx = FieldCtx {
            inner: Arc::new(FieldInner {
                p,
                k,
                q,
                modulus,
                exp,
                log,
                generator: FieldElement(generator as u32),
                trace_basis: Vec::new(),
                roots,
            }),
        };
        let trace_basis: Vec<u64> = (0..k)
            .map(|i| {
                let basis = ctx.from_index(p.pow(i));
                ctx.trace_slow(basis)
            })
            .collect();
        Arc::get_mut(&mut ctx.inner)
            .expect("context not yet shared")
            .trace_basis = trace_basis;
        ctx
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn k(&self) -> u32 {
        self.inner.k
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Little-endian coefficients of the modulus, leading 1 included.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// The primitive element the log tables are built on.
    pub fn generator(&self) -> FieldElement {
        self.inner.generator
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Element with the given enumeration index; panics when out of range.
    pub fn from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.inner.q, "index {idx} outside F_{}", self.inner.q);
        FieldElement(idx as u32)
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.inner.p as i64) as u32)
    }

    /// Element from little-endian coefficients; each is reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.k as usize {
            return Err(Error::DimensionMismatch {
                expected: self.inner.k as usize,
                found: coeffs.len(),
            });
        }
        let p = self.inner.p as i64;
        let idx = coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.inner.p + c.rem_euclid(p) as u64);
        Ok(FieldElement(idx as u32))
    }

    /// Little-endian coefficients of the canonical representative (length `k`).
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        poly::digits(a.0 as u64, self.inner.p, self.inner.k as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(|i| FieldElement(i as u32))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return FieldElement(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            place *= p;
            x /= p;
            y /= p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return FieldElement(((p - a.0 as u64) % p) as u32);
        }
        let mut x = a.0 as u64;
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        FieldElement(out as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let order = self.inner.q - 1;
        let e = (self.inner.log[a.0 as usize] as u64 + self.inner.log[b.0 as usize] as u64) % order;
        FieldElement(self.inner.exp[e as usize])
    }

    /// Multiplication by polynomial product and reduction, bypassing the
    /// log tables. Used to cross-check [`FieldCtx::mul`].
    pub fn mul_by_polynomial(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p;
        let pa = poly::trim(self.coeffs(a));
        let pb = poly::trim(self.coeffs(b));
        let r = poly::mul_mod(&pa, &pb, &self.inner.modulus, p);
        FieldElement(r.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.inner.q - 1;
        let e = (order - self.inner.log[a.0 as usize] as u64) % order;
        Ok(FieldElement(self.inner.exp[e as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace `Tr(a) = a + a^p + ... + a^{p^{k-1}}`, as an integer in `[0, p)`.
    pub fn trace(&self, a: FieldElement) -> u64 {
        if self.inner.k == 1 {
            return a.0 as u64;
        }
        let p = self.inner.p;
        let mut x = a.0 as u64;
        let mut acc = 0u64;
        for &t in &self.inner.trace_basis {
            acc = (acc + (x % p) * t) % p;
            x /= p;
        }
        acc
    }

    fn trace_slow(&self, a: FieldElement) -> u64 {
        let mut acc = self.zero();
        let mut cur = a;
        for _ in 0..self.inner.k {
            acc = self.add(acc, cur);
            cur = self.pow(cur, self.inner.p);
        }
        debug_assert!(acc.index() < self.inner.p, "trace must lie in the prime field");
        acc.index()
    }

    /// `exp(2 pi i j / p)` for `j` in `[0, p)`.
    pub fn roots_of_unity(&self) -> &[Complex64] {
        &self.inner.roots
    }

    /// The canonical additive character `chi(a) = exp(2 pi i Tr(a) / p)`.
    pub fn character(&self, a: FieldElement) -> Complex64 {
        self.inner.roots[self.trace(a) as usize]
    }

    /// The unique multiplicative subgroup of order `d`, sorted by index.
    pub fn mult_subgroup(&self, d: u64) -> Result<Vec<FieldElement>> {
        let order = self.inner.q - 1;
        if d == 0 || order % d != 0 {
            return Err(Error::NotADivisor { d, order });
        }
        let step = order / d;
        let mut out: Vec<FieldElement> = (0..d)
            .map(|j| FieldElement(self.inner.exp[(j * step) as usize]))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn space_size(&self, n: usize) -> u128 {
        (self.inner.q as u128).saturating_pow(n as u32)
    }

    /// All of `F_q^n` in lexicographic order, first coordinate most significant.
    pub fn enumerate(&self, n: usize) -> Result<impl Iterator<Item = FieldVector> + '_> {
        let size = self.space_size(n);
        Limits::current().check_space("q^n", size)?;
        Ok((0..size as u64).map(move |i| self.vector_from_index(n, i)))
    }

    pub fn vector_from_index(&self, n: usize, mut idx: u64) -> FieldVector {
        let q = self.inner.q;
        let mut entries = vec![FieldElement::ZERO; n];
        for slot in entries.iter_mut().rev() {
            *slot = FieldElement((idx % q) as u32);
            idx /= q;
        }
        FieldVector(entries)
    }

    pub fn vector_index(&self, v: &FieldVector) -> u64 {
        v.0.iter().fold(0u64, |acc, e| acc * self.inner.q + e.0 as u64)
    }

    pub fn vector(&self, ints: &[i64]) -> FieldVector {
        FieldVector(ints.iter().map(|&v| self.from_int(v)).collect())
    }

    pub fn vadd(&self, a: &FieldVector, b: &FieldVector) -> FieldVector {
        FieldVector(a.0.iter().zip(&b.0).map(|(&x, &y)| self.add(x, y)).collect())
    }

    pub fn vsub(&self, a: &FieldVector, b: &FieldVector) -> FieldVector {
        FieldVector(a.0.iter().zip(&b.0).map(|(&x, &y)| self.sub(x, y)).collect())
    }

    pub fn vneg(&self, a: &FieldVector) -> FieldVector {
        FieldVector(a.0.iter().map(|&x| self.neg(x)).collect())
    }

    pub fn vscale(&self, s: FieldElement, a: &FieldVector) -> FieldVector {
        FieldVector(a.0.iter().map(|&x| self.mul(s, x)).collect())
    }

    /// `x . y = sum x_i y_i`; vectors must have equal length.
    pub fn dot(&self, a: &FieldVector, b: &FieldVector) -> FieldElement {
        debug_assert_eq!(a.len(), b.len());
        a.0.iter()
            .zip(&b.0)
            .fold(self.zero(), |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Prime fields print as integers, extension fields as coefficient tuples `(c0,c1,..)`.
    pub fn format(&self, a: FieldElement) -> String {
        if self.inner.k == 1 {
            return a.0.to_string();
        }
        let parts: Vec<String> = self.coeffs(a).iter().map(u64::to_string).collect();
        format!("({})", parts.join(","))
    }

    /// Inverse of [`FieldCtx::format`]; a bare integer is read into the prime subfield.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse(format!("bad field element '{s}'")))?;
            if coeffs.len() != self.inner.k as usize {
                return Err(Error::Parse(format!(
                    "'{s}' needs {} coefficients",
                    self.inner.k
                )));
            }
            return self.from_coeffs(&coeffs);
        }
        s.parse::<i64>()
            .map(|v| self.from_int(v))
            .map_err(|_| Error::Parse(format!("bad field element '{s}'")))
    }

    pub fn format_vector(&self, v: &FieldVector) -> String {
        v.0.iter().map(|&e| self.format(e)).collect::<Vec<_>>().join(",")
    }

    /// Parses `e1,e2,..`; commas inside parentheses belong to an element.
    pub fn parse_vector(&self, s: &str) -> Result<FieldVector> {
        split_top_level(s, ',')
            .into_iter()
            .map(|part| self.parse(part))
            .collect::<Result<Vec<_>>>()
            .map(FieldVector)
    }
}

/// Splits on `sep` outside of parentheses.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn default_modulus(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    let count = p.pow(k);
    (0..count)
        .map(|idx| {
            let mut f = poly::digits(idx, p, k as usize);
            f.push(1);
            f
        })
        .find(|f| poly::is_irreducible_rabin(f, p))
        .expect("irreducible polynomials of every degree exist")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn make_prime_field() {
        let f = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn make_f9_with_supplied_modulus() {
        let f = f9();
        assert_eq!(f.q(), 9);
        // x^2 + 1 has no root mod 3
        assert!((0..3u64).all(|x| (x * x + 1) % 3 != 0));
    }

    #[test]
    fn make_errors() {
        assert_eq!(FieldCtx::new(4, 1, None).unwrap_err(), Error::CompositeModulus(4));
        // x^2 + 2 = (x + 1)(x + 2) over F_3
        assert!(matches!(
            FieldCtx::new(3, 2, Some(&[2, 0, 1])),
            Err(Error::ReducibleModulus(..))
        ));
        let tight = Limits { max_field: 8, ..Limits::default() };
        assert!(matches!(
            FieldCtx::with_limits(3, 2, None, &tight),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn default_modulus_is_deterministic_and_smallest() {
        let a = FieldCtx::new(3, 2, None).unwrap();
        let b = FieldCtx::new(3, 2, None).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.modulus(), &[1, 0, 1]);
        assert_eq!(FieldCtx::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f5.add(f5.from_int(2), f5.from_int(4)), f5.from_int(1));
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
        assert_eq!(f5.inv(f5.zero()), Err(Error::DivisionByZero));

        let f = f9();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(t, t), f.from_int(2));
        assert_eq!(f.mul_by_polynomial(t, t), f.from_int(2));
    }

    #[test]
    fn traces_and_characters() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f5.trace(f5.from_int(3)), 3);
        assert!((f5.character(f5.zero()) - Complex64::new(1.0, 0.0)).norm() < 1e-12);

        let f = f9();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.trace(t), 0);
        assert!((f.character(t) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(f.trace(f.one()), 2);

        for ctx in [f5, f, FieldCtx::of_order(16).unwrap(), FieldCtx::of_order(49).unwrap()] {
            // trace via basis agrees with the Frobenius sum
            for a in ctx.elements() {
                assert_eq!(ctx.trace(a), ctx.trace_slow(a));
            }
            for s in ctx.elements().filter(|s| !s.is_zero()) {
                let sum: Complex64 = ctx.elements().map(|a| ctx.character(ctx.mul(s, a))).sum();
                assert!(sum.norm() < 1e-9, "{ctx}: |sum chi(sa)| = {}", sum.norm());
            }
        }
    }

    #[test]
    fn subgroups() {
        let f7 = FieldCtx::prime(7).unwrap();
        let h = f7.mult_subgroup(3).unwrap();
        assert_eq!(h, vec![f7.from_int(1), f7.from_int(2), f7.from_int(4)]);
        assert_eq!(f7.mult_subgroup(1).unwrap(), vec![f7.one()]);
        assert_eq!(f7.mult_subgroup(5), Err(Error::NotADivisor { d: 5, order: 6 }));
        for q in [7u64, 9, 13, 16, 31] {
            let ctx = FieldCtx::of_order(q).unwrap();
            for d in (1..q).filter(|d| (q - 1) % d == 0) {
                let h = ctx.mult_subgroup(d).unwrap();
                assert_eq!(h.len() as u64, d);
                for &a in &h {
                    for &b in &h {
                        assert!(h.binary_search(&ctx.mul(a, b)).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration() {
        let f2 = FieldCtx::prime(2).unwrap();
        let v: Vec<_> = f2.enumerate(1).unwrap().collect();
        assert_eq!(v, vec![f2.vector(&[0]), f2.vector(&[1])]);
        let f3 = FieldCtx::prime(3).unwrap();
        let all: Vec<_> = f3.enumerate(2).unwrap().collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[1], f3.vector(&[0, 1]));
        for (i, v) in all.iter().enumerate() {
            assert_eq!(f3.vector_index(v), i as u64);
        }
        let f = f9();
        let mut els: Vec<_> = f.enumerate(1).unwrap().collect();
        els.dedup();
        assert_eq!(els.len(), 9);
    }

    #[test]
    fn exhaustive_fermat_and_frobenius() {
        for q in [2u64, 4, 8, 9, 25, 27, 32, 49, 81, 121, 125, 243, 256, 343, 1024, 2187, 4096] {
            let ctx = FieldCtx::of_order(q).unwrap();
            for a in ctx.elements() {
                assert_eq!(ctx.pow(a, q), a, "a^q = a in F_{q}");
                if !a.is_zero() {
                    assert_eq!(ctx.pow(a, q - 1), ctx.one());
                }
            }
        }
    }

    #[test]
    fn log_table_mul_matches_polynomial_mul() {
        for q in [8u64, 9, 16, 27, 125] {
            let ctx = FieldCtx::of_order(q).unwrap();
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(ctx.mul(a, b), ctx.mul_by_polynomial(a, b));
                }
            }
        }
    }

    #[test]
    fn format_parse() {
        let f = f9();
        let t = f.from_coeffs(&[2, 1]).unwrap();
        assert_eq!(f.format(t), "(2,1)");
        assert_eq!(f.parse("(2,1)").unwrap(), t);
        assert_eq!(f.parse("5").unwrap(), f.from_int(2));
        let v = FieldVector::new(vec![t, f.one()]);
        assert_eq!(f.parse_vector(&f.format_vector(&v)).unwrap(), v);
        assert!(f.parse("(1)").is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    fn field_strategy() -> impl Strategy<Value = FieldCtx> {
        prop::sample::select(vec![2u64, 5, 9, 16, 27, 49, 101, 125, 1024])
            .prop_map(|q| FieldCtx::of_order(q).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(ctx in field_strategy(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let q = ctx.q();
            let (a, b, c) = (ctx.from_index(a % q), ctx.from_index(b % q), ctx.from_index(c % q));
            prop_assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
            prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
            prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
            prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
            if !a.is_zero() {
                prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), ctx.one());
            }
        }

        #[test]
        fn dot_is_symmetric_bilinear(ctx in field_strategy(), seed in prop::collection::vec(any::<u64>(), 9)) {
            let q = ctx.q();
            let v = |o: usize| FieldVector::new((0..3).map(|i| ctx.from_index(seed[o + i] % q)).collect());
            let (x, y, z) = (v(0), v(3), v(6));
            let s = ctx.from_index(seed[0] % q);
            prop_assert_eq!(ctx.dot(&x, &y), ctx.dot(&y, &x));
            prop_assert_eq!(ctx.dot(&ctx.vadd(&x, &z), &y), ctx.add(ctx.dot(&x, &y), ctx.dot(&z, &y)));
            prop_assert_eq!(ctx.dot(&ctx.vscale(s, &x), &y), ctx.mul(s, ctx.dot(&x, &y)));
        }
    }
}
