//! Point-line incidences in the affine plane over an exact domain.
//!
//! Lines are `ax + by = c` in canonical form (the first nonzero of `(a, b)`
//! is 1), vertical lines included. Line multisets carry multiplicities and
//! incidence counts are weighted by them.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::domain::{ExactDomain, ScalarSet};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }
}

/// The affine line `ax + by = c`, canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line<T> {
    a: T,
    b: T,
    c: T,
}

impl<T: Clone + Eq> Line<T> {
    pub fn new<D: ExactDomain<Elem = T>>(dom: &D, a: T, b: T, c: T) -> Result<Self> {
        let lead = if !dom.is_zero(&a) {
            a.clone()
        } else if !dom.is_zero(&b) {
            b.clone()
        } else {
            return Err(Error::InvalidSpec("a line needs (a, b) != (0, 0)".into()));
        };
        let s = dom.inv(&lead)?;
        Ok(Line { a: dom.mul(&a, &s), b: dom.mul(&b, &s), c: dom.mul(&c, &s) })
    }

    /// The line through two distinct points.
    pub fn through<D: ExactDomain<Elem = T>>(dom: &D, p: &Point2<T>, r: &Point2<T>) -> Option<Self> {
        if p == r {
            return None;
        }
        let a = dom.sub(&r.y, &p.y);
        let b = dom.sub(&p.x, &r.x);
        let c = dom.add(&dom.mul(&a, &p.x), &dom.mul(&b, &p.y));
        Line::new(dom, a, b, c).ok()
    }

    pub fn coefficients(&self) -> (&T, &T, &T) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains<D: ExactDomain<Elem = T>>(&self, dom: &D, p: &Point2<T>) -> bool {
        dom.add(&dom.mul(&self.a, &p.x), &dom.mul(&self.b, &p.y)) == self.c
    }

    /// `a:b:c`.
    pub fn format<D: ExactDomain<Elem = T>>(&self, dom: &D) -> String {
        format!("{}:{}:{}", dom.format(&self.a), dom.format(&self.b), dom.format(&self.c))
    }

    pub fn parse<D: ExactDomain<Elem = T>>(dom: &D, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Parse(format!("'{s}' is not of the form a:b:c")));
        };
        Line::new(dom, dom.parse(a)?, dom.parse(b)?, dom.parse(c)?)
    }
}

/// A deduplicated planar point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet2<T> {
    points: Vec<Point2<T>>,
}

impl<T: Ord + Clone> PointSet2<T> {
    pub fn new(points: impl IntoIterator<Item = Point2<T>>) -> Self {
        let mut points: Vec<_> = points.into_iter().collect();
        points.sort();
        points.dedup();
        PointSet2 { points }
    }

    /// The grid `A x A`.
    pub fn grid(a: &ScalarSet<T>) -> Self {
        let el = a.elements();
        PointSet2::new(el.iter().flat_map(|x| el.iter().map(move |y| Point2::new(x.clone(), y.clone()))))
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point2<T>) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

/// A multiset of lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedLineSet<T> {
    lines: BTreeMap<Line<T>, u64>,
}

impl<T: Ord> Default for WeightedLineSet<T> {
    fn default() -> Self {
        WeightedLineSet { lines: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> WeightedLineSet<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every line with multiplicity 1.
    pub fn unweighted(lines: impl IntoIterator<Item = Line<T>>) -> Self {
        let mut set = Self::new();
        for l in lines {
            set.lines.insert(l, 1);
        }
        set
    }

    pub fn insert(&mut self, line: Line<T>, multiplicity: u64) {
        if multiplicity > 0 {
            *self.lines.entry(line).or_default() += multiplicity;
        }
    }

    /// `|L| = sum m(l)`.
    pub fn total(&self) -> u128 {
        self.lines.values().map(|&m| m as u128).sum()
    }

    /// `sum m(l)^2`.
    pub fn second_moment(&self) -> BigUint {
        self.lines.values().map(|&m| BigUint::from(m) * m).sum()
    }

    pub fn distinct(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn multiplicity(&self, l: &Line<T>) -> u64 {
        self.lines.get(l).copied().unwrap_or(0)
    }

    pub fn is_unweighted(&self) -> bool {
        self.lines.values().all(|&m| m == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Line<T>, u64)> {
        self.lines.iter().map(|(l, &m)| (l, m))
    }
}

/// Points per line, `i(l) = |P cap l|`, for every line of `lines`.
fn points_on_lines<D: ExactDomain>(
    dom: &D,
    points: &PointSet2<D::Elem>,
    lines: &WeightedLineSet<D::Elem>,
) -> Result<Vec<(u64, u64)>> {
    let mut by_x: HashMap<&D::Elem, HashSet<&D::Elem>> = HashMap::new();
    for p in points.points() {
        by_x.entry(&p.x).or_default().insert(&p.y);
    }
    Limits::current().check_pairs("lines x columns", lines.distinct() as u128 * by_x.len() as u128)?;
    lines
        .iter()
        .map(|(l, m)| {
            let (a, b, c) = l.coefficients();
            let hits = if dom.is_zero(b) {
                // canonical vertical line: x = c
                by_x.get(c).map_or(0, |ys| ys.len() as u64)
            } else {
                let mut n = 0u64;
                for (x, ys) in &by_x {
                    let y = dom.div(&dom.sub(c, &dom.mul(a, x)), b)?;
                    if ys.contains(&y) {
                        n += 1;
                    }
                }
                n
            };
            Ok((m, hits))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceReport {
    /// `I(P, L) = sum_l m(l) |P cap l|`.
    pub incidences: BigUint,
    pub points: usize,
    /// `|L|` with multiplicity.
    pub lines: u128,
    /// `I / (|P|^{11/15} |L|^{11/15} + |P| + |L|)`.
    pub stevens_de_zeeuw_ratio: f64,
    /// `I / (|P|^{2/3} |L|^{2/3} + |P| + |L|)`; characteristic zero only.
    pub toth_ratio: Option<f64>,
}

pub fn incidence_count<D: ExactDomain>(
    dom: &D,
    points: &PointSet2<D::Elem>,
    lines: &WeightedLineSet<D::Elem>,
) -> Result<IncidenceReport> {
    let total: BigUint = points_on_lines(dom, points, lines)?
        .into_iter()
        .map(|(m, i)| BigUint::from(m) * i)
        .sum();
    let i = total.to_f64().unwrap_or(f64::INFINITY);
    let (np, nl) = (points.len() as f64, lines.total() as f64);
    let ratio = |e: f64| {
        let denom = (np * nl).powf(e) + np + nl;
        if denom == 0.0 { 0.0 } else { i / denom }
    };
    Ok(IncidenceReport {
        incidences: total,
        points: points.len(),
        lines: lines.total(),
        stevens_de_zeeuw_ratio: ratio(11.0 / 15.0),
        toth_ratio: (dom.characteristic() == 0).then(|| ratio(2.0 / 3.0)),
    })
}

fn pairs_to_points(pairs: u64) -> u64 {
    // k (k - 1) / 2 = pairs
    let mut k = ((1.0 + (1.0 + 8.0 * pairs as f64).sqrt()) / 2.0).round() as u64;
    while k * (k - 1) / 2 > pairs {
        k -= 1;
    }
    while k * (k - 1) / 2 < pairs {
        k += 1;
    }
    k
}

/// Every line spanned by `P` together with `|P cap l| >= 2`, sorted by line.
pub fn spanned_lines<D: ExactDomain>(dom: &D, points: &PointSet2<D::Elem>) -> Result<Vec<(Line<D::Elem>, u64)>> {
    let pts = points.points();
    let n = pts.len() as u128;
    Limits::current().check_pairs("point pairs", n * n)?;
    let mut pair_counts: HashMap<Line<D::Elem>, u64> = HashMap::new();
    for (i, p) in pts.iter().enumerate() {
        for r in &pts[i + 1..] {
            let l = Line::through(dom, p, r).expect("points are distinct");
            *pair_counts.entry(l).or_default() += 1;
        }
    }
    let mut out: Vec<_> = pair_counts.into_iter().map(|(l, c)| (l, pairs_to_points(c))).collect();
    out.sort();
    Ok(out)
}

/// Lines containing at least `t >= 2` points of `P`, with their point counts.
pub fn rich_lines<D: ExactDomain>(dom: &D, points: &PointSet2<D::Elem>, t: u64) -> Result<Vec<(Line<D::Elem>, u64)>> {
    if t < 2 {
        return Err(Error::InvalidSpec("richness threshold must be at least 2".into()));
    }
    Ok(spanned_lines(dom, points)?.into_iter().filter(|&(_, k)| k >= t).collect())
}

/// `#rich lines / (|P|^2/t^3 + |P|/t)`.
pub fn rich_line_ratio(points: usize, t: u64, rich: usize) -> f64 {
    let (p, t) = (points as f64, t as f64);
    rich as f64 / (p * p / t.powi(3) + p / t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumCubes {
    /// `sum_l i(l)^3` over distinct lines.
    pub value: BigUint,
    /// `I(P, L) = sum_l m(l) i(l)`.
    pub incidences: BigUint,
    /// `I^3 <= |L|^2 sum i^3`; only decided when every multiplicity is 1.
    pub holder_holds: Option<bool>,
}

/// `sum_l i(l)^3` over the distinct lines of `lines`, or over all lines
/// spanned by `P` when `lines` is `None`.
pub fn sum_cubes<D: ExactDomain>(
    dom: &D,
    points: &PointSet2<D::Elem>,
    lines: Option<&WeightedLineSet<D::Elem>>,
) -> Result<SumCubes> {
    let spanned;
    let lines = match lines {
        Some(l) => l,
        None => {
            spanned = WeightedLineSet::unweighted(spanned_lines(dom, points)?.into_iter().map(|(l, _)| l));
            &spanned
        }
    };
    let counts = points_on_lines(dom, points, lines)?;
    let value: BigUint = counts.iter().map(|&(_, i)| BigUint::from(i).pow(3)).sum();
    let incidences: BigUint = counts.iter().map(|&(m, i)| BigUint::from(m) * i).sum();
    let holder_holds = lines.is_unweighted().then(|| {
        let l = BigUint::from(lines.total());
        incidences.pow(3) <= &l * &l * &value
    });
    Ok(SumCubes { value, incidences, holder_holds })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinearTriples {
    /// Ordered triples `(p1, p2, p3)` with `det(p2 - p1, p3 - p1) = 0`, repetitions allowed.
    pub ordered: BigUint,
    /// `sum i(l)^3` over lines spanned by the grid, for comparison.
    pub spanned_cube_sum: BigUint,
}

/// Collinear triples of a point set from its spanned lines:
/// `T = N + 3N(N - 1) + sum_l k_l (k_l - 1)(k_l - 2)`.
pub fn collinear_triples_of<D: ExactDomain>(dom: &D, points: &PointSet2<D::Elem>) -> Result<CollinearTriples> {
    let n = BigUint::from(points.len());
    let lines = spanned_lines(dom, points)?;
    let mut ordered = if n.is_zero() {
        BigUint::zero()
    } else {
        &n + BigUint::from(3u32) * &n * (&n - 1u32)
    };
    let mut cubes = BigUint::zero();
    for (_, k) in &lines {
        let k = BigUint::from(*k);
        ordered += &k * (&k - 1u32) * (&k - 2u32);
        cubes += k.pow(3);
    }
    Ok(CollinearTriples { ordered, spanned_cube_sum: cubes })
}

/// `T(A)` for the grid `A x A`.
pub fn collinear_triples<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<CollinearTriples> {
    collinear_triples_of(dom, &PointSet2::grid(a))
}

/// `T(A)` by testing every ordered triple of grid points, `O(|A|^6)`.
pub fn collinear_triples_brute<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<BigUint> {
    let grid = PointSet2::grid(a);
    let pts = grid.points();
    Limits::current().check_pairs("point triples", (pts.len() as u128).pow(3))?;
    let mut count = 0u64;
    for p in pts {
        for r in pts {
            let (ux, uy) = (dom.sub(&r.x, &p.x), dom.sub(&r.y, &p.y));
            for s in pts {
                let (vx, vy) = (dom.sub(&s.x, &p.x), dom.sub(&s.y, &p.y));
                if dom.mul(&ux, &vy) == dom.mul(&uy, &vx) {
                    count += 1;
                }
            }
        }
    }
    Ok(BigUint::from(count))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicBucket<T> {
    /// A power of two; the bucket holds the lines with `k <= m(l) < 2k`.
    pub k: u64,
    pub lines: Vec<Line<T>>,
}

/// Splits the distinct lines of `L` by multiplicity into dyadic ranges.
pub fn dyadic_buckets<T: Ord + Clone>(lines: &WeightedLineSet<T>) -> Vec<DyadicBucket<T>> {
    let mut buckets: BTreeMap<u64, Vec<Line<T>>> = BTreeMap::new();
    for (l, m) in lines.iter() {
        let k = 1u64 << (63 - m.leading_zeros());
        buckets.entry(k).or_default().push(l.clone());
    }
    buckets.into_iter().map(|(k, lines)| DyadicBucket { k, lines }).collect()
}

/// `k |L_k| <= |L|` and `k^2 |L_k| <= sum m(l)^2` for every bucket.
pub fn dyadic_invariants_hold<T: Ord + Clone>(lines: &WeightedLineSet<T>, buckets: &[DyadicBucket<T>]) -> bool {
    let total = BigUint::from(lines.total());
    let moment = lines.second_moment();
    buckets.iter().all(|b| {
        let (k, size) = (BigUint::from(b.k), BigUint::from(b.lines.len()));
        &k * &size <= total && &k * &k * &size <= moment
    })
}

/// The line family `y = (d / (b - b'))(x - c)` over `b, b', d, c in A` with
/// `b != b'` and `b + d - b' in A`, with multiplicity.
pub fn build_thm0_lines<D: ExactDomain>(dom: &D, a: &ScalarSet<D::Elem>) -> Result<WeightedLineSet<D::Elem>> {
    a.require_nonzero(dom)?;
    let el = a.elements();
    Limits::current().check_pairs("|A|^3 slope triples", (el.len() as u128).pow(3))?;
    let mut slopes: BTreeMap<D::Elem, u64> = BTreeMap::new();
    for b in el {
        for bp in el.iter().filter(|&bp| bp != b) {
            for d in el {
                if a.contains(&dom.sub(&dom.add(b, d), bp)) {
                    *slopes.entry(dom.div(d, &dom.sub(b, bp))?).or_default() += 1;
                }
            }
        }
    }
    let minus_one = dom.neg(&dom.one());
    let mut lines = WeightedLineSet::new();
    for (s, w) in &slopes {
        for c in el {
            // s x - y = s c
            lines.insert(Line::new(dom, s.clone(), minus_one.clone(), dom.mul(s, c))?, *w);
        }
    }
    Ok(lines)
}
