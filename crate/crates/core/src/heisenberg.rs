//! The Heisenberg group `H_n(F_q)`, bricks, product sets and center cosets.
//!
//! `[x, y, z]` stands for the unitriangular matrix with first row
//! `(1, x, z)`, identity block `I_n`, and last column `(z, y^t, 1)`. The
//! matrix product gives the closed-form law
//! `[x, y, z][x', y', z'] = [x + x', y + y', z + z' + x . y']`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffield::{split_top_level, FieldCtx, FieldElement, FieldVector};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisPoint {
    pub x: FieldVector,
    pub y: FieldVector,
    pub z: FieldElement,
}

impl HeisPoint {
    pub fn new(x: FieldVector, y: FieldVector, z: FieldElement) -> Self {
        HeisPoint { x, y, z }
    }
}

/// `H_n(F_q)` for a fixed field and degree `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergGroup {
    ctx: FieldCtx,
    n: usize,
}

impl HeisenbergGroup {
    pub fn new(ctx: FieldCtx, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        Ok(HeisenbergGroup { ctx, n })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|H_n(F_q)| = q^{2n+1}`.
    pub fn order(&self) -> u128 {
        self.ctx.space_size(2 * self.n + 1)
    }

    pub fn identity(&self) -> HeisPoint {
        HeisPoint::new(FieldVector::zero(self.n), FieldVector::zero(self.n), self.ctx.zero())
    }

    /// Convenience constructor from integers embedded in the prime subfield.
    pub fn point(&self, x: &[i64], y: &[i64], z: i64) -> Result<HeisPoint> {
        let p = HeisPoint::new(self.ctx.vector(x), self.ctx.vector(y), self.ctx.from_int(z));
        self.check(&p)?;
        Ok(p)
    }

    pub fn check(&self, a: &HeisPoint) -> Result<()> {
        for v in [&a.x, &a.y] {
            if v.len() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, found: v.len() });
            }
        }
        Ok(())
    }

    pub fn mul(&self, a: &HeisPoint, b: &HeisPoint) -> Result<HeisPoint> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &HeisPoint, b: &HeisPoint) -> HeisPoint {
        let c = &self.ctx;
        let z = c.add(c.add(a.z, b.z), c.dot(&a.x, &b.y));
        HeisPoint::new(c.vadd(&a.x, &b.x), c.vadd(&a.y, &b.y), z)
    }

    /// `[x, y, z]^{-1} = [-x, -y, -z + x . y]`.
    pub fn inv(&self, a: &HeisPoint) -> HeisPoint {
        let c = &self.ctx;
        let z = c.add(c.neg(a.z), c.dot(&a.x, &a.y));
        HeisPoint::new(c.vneg(&a.x), c.vneg(&a.y), z)
    }

    /// The `(n+2) x (n+2)` matrix of `a`.
    pub fn to_matrix(&self, a: &HeisPoint) -> Vec<Vec<FieldElement>> {
        let size = self.n + 2;
        let mut m = vec![vec![self.ctx.zero(); size]; size];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = self.ctx.one();
        }
        for j in 0..self.n {
            m[0][1 + j] = a.x.entries()[j];
            m[1 + j][size - 1] = a.y.entries()[j];
        }
        m[0][size - 1] = a.z;
        m
    }

    /// Reads `[x, y, z]` back from a matrix, rejecting anything that is not
    /// upper unitriangular of Heisenberg shape.
    pub fn from_matrix(&self, m: &[Vec<FieldElement>]) -> Result<HeisPoint> {
        let size = self.n + 2;
        let shape_err = || Error::Parse("matrix is not of Heisenberg shape".into());
        if m.len() != size || m.iter().any(|r| r.len() != size) {
            return Err(shape_err());
        }
        let a = HeisPoint::new(
            FieldVector::new(m[0][1..=self.n].to_vec()),
            FieldVector::new((1..=self.n).map(|i| m[i][size - 1]).collect()),
            m[0][size - 1],
        );
        if self.to_matrix(&a) != m {
            return Err(shape_err());
        }
        Ok(a)
    }

    /// Product through explicit matrix multiplication; the reference the
    /// closed-form law is tested against.
    pub fn mul_via_matrix(&self, a: &HeisPoint, b: &HeisPoint) -> Result<HeisPoint> {
        self.check(a)?;
        self.check(b)?;
        let (ma, mb) = (self.to_matrix(a), self.to_matrix(b));
        let size = self.n + 2;
        let c = &self.ctx;
        let prod: Vec<Vec<FieldElement>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| (0..size).fold(c.zero(), |acc, t| c.add(acc, c.mul(ma[i][t], mb[t][j]))))
                    .collect()
            })
            .collect();
        self.from_matrix(&prod)
    }

    fn key_fits(&self) -> Result<()> {
        let q = self.ctx.q() as u128;
        q.checked_pow(2 * self.n as u32 + 1)
            .map(|_| ())
            .ok_or_else(|| Error::limit("q^(2n+1)", u128::MAX, u128::MAX))
    }

    /// Injective integer encoding `(index(x) q^n + index(y)) q + z`.
    pub fn key(&self, a: &HeisPoint) -> u128 {
        let q = self.ctx.q() as u128;
        let vec_key = |v: &FieldVector| v.entries().iter().fold(0u128, |acc, e| acc * q + e.index() as u128);
        let qn = q.pow(self.n as u32);
        (vec_key(&a.x) * qn + vec_key(&a.y)) * q + a.z.index() as u128
    }

    pub fn from_key(&self, mut key: u128) -> HeisPoint {
        let q = self.ctx.q() as u128;
        let z = self.ctx.from_index((key % q) as u64);
        key /= q;
        let take = |key: &mut u128| {
            let mut e = vec![FieldElement::ZERO; self.n];
            for slot in e.iter_mut().rev() {
                *slot = self.ctx.from_index((*key % q) as u64);
                *key /= q;
            }
            FieldVector::new(e)
        };
        let y = take(&mut key);
        let x = take(&mut key);
        HeisPoint::new(x, y, z)
    }

    /// Every group element, in key order.
    pub fn elements(&self) -> Result<Vec<HeisPoint>> {
        let order = self.order();
        Limits::current().check_space("|H_n(F_q)|", order)?;
        Ok((0..order).map(|k| self.from_key(k)).collect())
    }

    /// `x1,..,xn|y1,..,yn|z`.
    pub fn format(&self, a: &HeisPoint) -> String {
        format!(
            "{}|{}|{}",
            self.ctx.format_vector(&a.x),
            self.ctx.format_vector(&a.y),
            self.ctx.format(a.z)
        )
    }

    pub fn parse(&self, s: &str) -> Result<HeisPoint> {
        let parts = split_top_level(s.trim(), '|');
        let [x, y, z] = parts.as_slice() else {
            return Err(Error::Parse(format!("'{s}' is not of the form x|y|z")));
        };
        let p = HeisPoint::new(self.ctx.parse_vector(x)?, self.ctx.parse_vector(y)?, self.ctx.parse(z)?);
        self.check(&p)?;
        Ok(p)
    }

    /// The product set `left * right` with its representation counts.
    pub fn product_set(&self, left: &[HeisPoint], right: &[HeisPoint]) -> Result<ProductSet> {
        Limits::current().check_pairs("product pairs", left.len() as u128 * right.len() as u128)?;
        self.key_fits()?;
        for a in left.iter().chain(right) {
            self.check(a)?;
        }
        let chunk = (left.len() / (4 * rayon::current_num_threads().max(1))).max(1);
        let counts = left
            .par_chunks(chunk)
            .map(|block| {
                let mut local: HashMap<u128, u64> = HashMap::new();
                for a in block {
                    for b in right {
                        *local.entry(self.key(&self.mul_unchecked(a, b))).or_default() += 1;
                    }
                }
                local
            })
            .reduce(HashMap::new, |a, b| {
                let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                for (k, v) in small {
                    *big.entry(k).or_default() += v;
                }
                big
            });
        Ok(ProductSet { group: self.clone(), counts })
    }

    pub fn brick_product(&self, b1: &Brick, b2: &Brick) -> Result<ProductSet> {
        self.product_set(&b1.elements(self)?, &b2.elements(self)?)
    }
}

/// The distinct products `g = m1 m2` with counts `r(g)`.
#[derive(Debug, Clone)]
pub struct ProductSet {
    group: HeisenbergGroup,
    counts: HashMap<u128, u64>,
}

impl ProductSet {
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `sum_g r(g)^2`, the number of quadruples with `m1 m2 = m3 m4`.
    pub fn collision_energy(&self) -> u128 {
        self.counts.values().map(|&r| r as u128 * r as u128).sum()
    }

    /// `sum_g r(g)`, i.e. `|left| |right|`.
    pub fn pair_count(&self) -> u128 {
        self.counts.values().map(|&r| r as u128).sum()
    }

    pub fn multiplicity(&self, g: &HeisPoint) -> u64 {
        self.counts.get(&self.group.key(g)).copied().unwrap_or(0)
    }

    pub fn contains(&self, g: &HeisPoint) -> bool {
        self.multiplicity(g) > 0
    }

    /// All products, sorted.
    pub fn points(&self) -> Vec<HeisPoint> {
        let mut keys: Vec<u128> = self.counts.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter().map(|k| self.group.from_key(k)).collect()
    }

    /// Number of center cosets `{[x, y, z] : z in F_q}` fully contained in the set.
    pub fn coset_count(&self) -> u64 {
        coset_count_keys(self.counts.keys().copied(), self.group.ctx.q())
    }
}

fn coset_count_keys(keys: impl Iterator<Item = u128>, q: u64) -> u64 {
    let mut per_coset: HashMap<u128, u64> = HashMap::new();
    for k in keys {
        *per_coset.entry(k / q as u128).or_default() += 1;
    }
    per_coset.values().filter(|&&c| c == q).count() as u64
}

/// Number of full center cosets contained in an arbitrary point set.
pub fn coset_count(group: &HeisenbergGroup, points: &[HeisPoint]) -> u64 {
    let mut keys: Vec<u128> = points.iter().map(|p| group.key(p)).collect();
    keys.sort_unstable();
    keys.dedup();
    coset_count_keys(keys.into_iter(), group.ctx().q())
}

/// One side (`E` or `F`) of a brick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrickPart {
    /// Coordinate box `X_1 x ... x X_n`.
    Box(Vec<Vec<FieldElement>>),
    /// Explicit vector set.
    General(Vec<FieldVector>),
}

impl BrickPart {
    pub fn boxed(coordinate_sets: Vec<Vec<FieldElement>>) -> Self {
        BrickPart::Box(
            coordinate_sets
                .into_iter()
                .map(|mut s| {
                    s.sort_unstable();
                    s.dedup();
                    s
                })
                .collect(),
        )
    }

    pub fn general(mut vectors: Vec<FieldVector>) -> Self {
        vectors.sort();
        vectors.dedup();
        BrickPart::General(vectors)
    }

    pub fn len(&self) -> u128 {
        match self {
            BrickPart::Box(sets) => sets.iter().map(|s| s.len() as u128).product(),
            BrickPart::General(v) => v.len() as u128,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn dim(&self) -> Option<usize> {
        match self {
            BrickPart::Box(sets) => Some(sets.len()),
            BrickPart::General(v) => v.first().map(FieldVector::len),
        }
    }

    /// `max_i |X_i|` for box parts.
    pub fn max_coordinate_size(&self) -> Option<usize> {
        match self {
            BrickPart::Box(sets) => sets.iter().map(Vec::len).max(),
            BrickPart::General(_) => None,
        }
    }

    /// The vectors of this part in lexicographic order.
    pub fn vectors(&self) -> Vec<FieldVector> {
        match self {
            BrickPart::General(v) => v.clone(),
            BrickPart::Box(sets) => {
                let mut out = vec![Vec::new()];
                for set in sets {
                    out = out
                        .into_iter()
                        .flat_map(|prefix: Vec<FieldElement>| {
                            set.iter().map(move |&e| {
                                let mut v = prefix.clone();
                                v.push(e);
                                v
                            })
                        })
                        .collect();
                }
                out.into_iter().map(FieldVector::new).collect()
            }
        }
    }

    pub fn contains(&self, v: &FieldVector) -> bool {
        match self {
            BrickPart::Box(sets) => {
                sets.len() == v.len()
                    && sets.iter().zip(v.entries()).all(|(s, e)| s.binary_search(e).is_ok())
            }
            BrickPart::General(vs) => vs.binary_search(v).is_ok(),
        }
    }
}

/// `[E, F, A] = {[x, y, z] : x in E, y in F, z in A}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Brick {
    pub e: BrickPart,
    pub f: BrickPart,
    pub a: Vec<FieldElement>,
}

impl Brick {
    pub fn new(e: BrickPart, f: BrickPart, mut a: Vec<FieldElement>) -> Result<Self> {
        if let (Some(de), Some(df)) = (e.dim(), f.dim()) {
            if de != df {
                return Err(Error::DimensionMismatch { expected: de, found: df });
            }
        }
        a.sort_unstable();
        a.dedup();
        Ok(Brick { e, f, a })
    }

    /// `[E, E, A]` for an explicit vector set `E`.
    pub fn symmetric(e: Vec<FieldVector>, a: Vec<FieldElement>) -> Result<Self> {
        let part = BrickPart::general(e);
        Brick::new(part.clone(), part, a)
    }

    pub fn len(&self) -> u128 {
        self.e.len() * self.f.len() * self.a.len() as u128
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_box(&self) -> bool {
        matches!((&self.e, &self.f), (BrickPart::Box(_), BrickPart::Box(_)))
    }

    /// `max_i |X_i|`, for box bricks.
    pub fn cal_x(&self) -> Option<usize> {
        self.e.max_coordinate_size()
    }

    /// `max_i |Y_i|`, for box bricks.
    pub fn cal_y(&self) -> Option<usize> {
        self.f.max_coordinate_size()
    }

    pub fn contains(&self, g: &HeisPoint) -> bool {
        self.e.contains(&g.x) && self.f.contains(&g.y) && self.a.binary_search(&g.z).is_ok()
    }

    pub fn elements(&self, group: &HeisenbergGroup) -> Result<Vec<HeisPoint>> {
        Limits::current().check_pairs("brick size", self.len())?;
        let (es, fs) = (self.e.vectors(), self.f.vectors());
        let mut out = Vec::with_capacity(self.len() as usize);
        for x in &es {
            for y in &fs {
                for &z in &self.a {
                    let p = HeisPoint::new(x.clone(), y.clone(), z);
                    group.check(&p)?;
                    out.push(p);
                }
            }
        }
        Ok(out)
    }
}

/// Numerical evaluation of the growth hypothesis for box bricks in even
/// degree: `XY >= p^{3/2} (XY / (p |Z|^{1/2}))^{2^{-n/2}}` together with
/// `|Z| <= XY`, `X <= |Z| Y` and `Y <= |Z| X`, where `X = max |X_i|` and
/// `Y = max |Y_i|`. The implied constant is taken to be 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ShkredovCheck {
    pub holds: bool,
    /// `XY`, exact.
    pub lhs: u128,
    pub rhs: f64,
    pub growth_holds: bool,
    pub z_at_most_xy: bool,
    pub x_at_most_zy: bool,
    pub y_at_most_zx: bool,
}

pub fn shkredov_condition(brick: &Brick, p: u64) -> Result<ShkredovCheck> {
    let (Some(cx), Some(cy), Some(n)) = (brick.cal_x(), brick.cal_y(), brick.e.dim()) else {
        return Err(Error::InvalidSpec("a box brick is required".into()));
    };
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    let (cx, cy, z) = (cx as u128, cy as u128, brick.a.len() as u128);
    let lhs = cx * cy;
    let pf = p as f64;
    let exponent = 0.5f64.powi((n / 2) as i32);
    let rhs = pf.powf(1.5) * (lhs as f64 / (pf * (z as f64).sqrt())).powf(exponent);
    let growth_holds = lhs as f64 >= rhs;
    let z_at_most_xy = z <= lhs;
    let x_at_most_zy = cx <= z * cy;
    let y_at_most_zx = cy <= z * cx;
    Ok(ShkredovCheck {
        holds: growth_holds && z_at_most_xy && x_at_most_zy && y_at_most_zx,
        lhs,
        rhs,
        growth_holds,
        z_at_most_xy,
        x_at_most_zy,
        y_at_most_zx,
    })
}

impl fmt::Display for ShkredovCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "XY = {} vs {:.4}; |Z|<=XY: {}, X<=|Z|Y: {}, Y<=|Z|X: {} => {}",
            self.lhs, self.rhs, self.z_at_most_xy, self.x_at_most_zy, self.y_at_most_zx, self.holds
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h1(p: u64) -> HeisenbergGroup {
        HeisenbergGroup::new(FieldCtx::prime(p).unwrap(), 1).unwrap()
    }

    #[test]
    fn law_examples() {
        let g = h1(5);
        let m = g.point(&[1], &[2], 3).unwrap();
        assert_eq!(g.mul(&g.identity(), &m).unwrap(), m);
        let a = g.point(&[1], &[2], 0).unwrap();
        let b = g.point(&[3], &[4], 0).unwrap();
        assert_eq!(g.mul(&a, &b).unwrap(), g.point(&[4], &[1], 4).unwrap());
        assert_eq!(g.mul_via_matrix(&a, &b).unwrap(), g.point(&[4], &[1], 4).unwrap());
    }

    #[test]
    fn inverse_examples() {
        let g = h1(5);
        let c = g.point(&[0], &[0], 2).unwrap();
        assert_eq!(g.inv(&c), g.point(&[0], &[0], -2).unwrap());
        let a = g.point(&[1], &[2], 3).unwrap();
        assert_eq!(g.inv(&a), g.point(&[4], &[3], 4).unwrap());
        assert_eq!(g.mul(&a, &g.inv(&a)).unwrap(), g.identity());
    }

    #[test]
    fn dimension_mismatch() {
        let g = h1(5);
        let g2 = HeisenbergGroup::new(FieldCtx::prime(5).unwrap(), 2).unwrap();
        let a = g.identity();
        assert!(matches!(g2.mul(&a, &g2.identity()), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn full_group_is_closed() {
        for (q, n) in [(2u64, 1usize), (3, 1), (2, 2), (4, 1)] {
            let g = HeisenbergGroup::new(FieldCtx::of_order(q).unwrap(), n).unwrap();
            let all = g.elements().unwrap();
            assert_eq!(all.len() as u128, g.order());
            let prod = g.product_set(&all, &all).unwrap();
            assert_eq!(prod.len() as u128, g.order());
            // every element has exactly |G| representations
            assert_eq!(prod.collision_energy(), g.order().pow(3));
        }
    }

    #[test]
    fn key_round_trip() {
        let g = HeisenbergGroup::new(FieldCtx::of_order(9).unwrap(), 2).unwrap();
        for k in (0..g.order()).step_by(97) {
            assert_eq!(g.key(&g.from_key(k)), k);
        }
    }

    #[test]
    fn full_brick_products_and_cosets() {
        let g = h1(3);
        let f3: Vec<_> = g.ctx().elements().collect();
        let brick = Brick::new(BrickPart::boxed(vec![f3.clone()]), BrickPart::boxed(vec![f3.clone()]), f3).unwrap();
        let prod = g.brick_product(&brick, &brick).unwrap();
        assert_eq!(prod.len(), 27);
        assert_eq!(prod.coset_count(), 9);
        assert_eq!(coset_count(&g, &g.elements().unwrap()), 9);
    }

    #[test]
    fn thin_brick_has_no_cosets() {
        let g = h1(5);
        let a: Vec<_> = [1, 2, 3].iter().map(|&v| g.ctx().from_int(v)).collect();
        let e: Vec<_> = a.iter().map(|&v| FieldVector::new(vec![v])).collect();
        let brick = Brick::symmetric(e, vec![g.ctx().zero()]).unwrap();
        let pts = brick.elements(&g).unwrap();
        assert_eq!(coset_count(&g, &pts), 0);
    }

    #[test]
    fn subfield_product_is_q_half_times_e_squared() {
        let ctx = FieldCtx::of_order(9).unwrap();
        let g = HeisenbergGroup::new(ctx.clone(), 1).unwrap();
        let e: Vec<_> = (0..3).map(|v| ctx.vector(&[v])).collect();
        let brick = Brick::symmetric(e, vec![ctx.zero()]).unwrap();
        let prod = g.brick_product(&brick, &brick).unwrap();
        assert_eq!(prod.len(), 27);
    }

    #[test]
    fn format_parse() {
        let ctx = FieldCtx::of_order(9).unwrap();
        let g = HeisenbergGroup::new(ctx.clone(), 2).unwrap();
        let a = g.from_key(4242);
        let s = g.format(&a);
        assert_eq!(g.parse(&s).unwrap(), a);
        let g5 = h1(5);
        assert_eq!(g5.format(&g5.point(&[1], &[2], 3).unwrap()), "1|2|3");
        assert!(g5.parse("1|2").is_err());
    }

    #[test]
    fn shkredov_examples() {
        let p = 5u64;
        let ctx = FieldCtx::prime(p).unwrap();
        let full: Vec<_> = ctx.elements().collect();
        let brick = Brick::new(
            BrickPart::boxed(vec![full.clone(), full.clone()]),
            BrickPart::boxed(vec![full.clone(), full.clone()]),
            full.clone(),
        )
        .unwrap();
        let c = shkredov_condition(&brick, p).unwrap();
        assert_eq!(c.lhs, 25);
        assert!((c.rhs - 5f64.powf(1.75)).abs() < 1e-9);
        assert!(c.holds);

        let one = vec![ctx.one()];
        let single = Brick::new(
            BrickPart::boxed(vec![one.clone(), one.clone()]),
            BrickPart::boxed(vec![one.clone(), one.clone()]),
            one.clone(),
        )
        .unwrap();
        let c = shkredov_condition(&single, p).unwrap();
        assert_eq!(c.lhs, 1);
        assert!((c.rhs - 5.0).abs() < 1e-9);
        assert!(!c.holds);

        let big_z = Brick::new(
            BrickPart::boxed(vec![one.clone(), one.clone()]),
            BrickPart::boxed(vec![one.clone(), one.clone()]),
            full.clone(),
        )
        .unwrap();
        assert!(!shkredov_condition(&big_z, p).unwrap().z_at_most_xy);

        let odd = Brick::new(BrickPart::boxed(vec![one.clone()]), BrickPart::boxed(vec![one.clone()]), one).unwrap();
        assert_eq!(shkredov_condition(&odd, p), Err(Error::OddDimension(1)));
    }

    proptest! {
        #[test]
        fn closed_form_matches_matrices(q in prop::sample::select(vec![3u64, 5, 9, 8]), n in 1usize..3, ka in any::<u64>(), kb in any::<u64>(), kc in any::<u64>()) {
            let g = HeisenbergGroup::new(FieldCtx::of_order(q).unwrap(), n).unwrap();
            let (a, b, c) = (g.from_key(ka as u128 % g.order()), g.from_key(kb as u128 % g.order()), g.from_key(kc as u128 % g.order()));
            prop_assert_eq!(g.mul(&a, &b).unwrap(), g.mul_via_matrix(&a, &b).unwrap());
            let ab_c = g.mul(&g.mul(&a, &b).unwrap(), &c).unwrap();
            let a_bc = g.mul(&a, &g.mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(g.mul(&g.inv(&a), &a).unwrap(), g.identity());
            prop_assert_eq!(g.inv(&g.inv(&a)), a);
        }
    }
}
