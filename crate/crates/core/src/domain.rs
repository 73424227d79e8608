//! Exact arithmetic domains shared by the energy and incidence layers.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement};

/// A field with exact, hashable elements: either a finite field or the
/// complex rationals. No floating point is involved in any count computed
/// over an `ExactDomain`.
pub trait ExactDomain: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// 0 for characteristic-zero domains.
    fn characteristic(&self) -> u64;
    /// Embedding of the integers.
    fn from_int(&self, v: i64) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    /// Short description used in reports, e.g. `F_7` or `C`.
    fn label(&self) -> String;
}

impl ExactDomain for FieldCtx {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldCtx::zero(self)
    }
    fn one(&self) -> FieldElement {
        FieldCtx::one(self)
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldCtx::add(self, *a, *b)
    }
    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldCtx::sub(self, *a, *b)
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldCtx::mul(self, *a, *b)
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldCtx::neg(self, *a)
    }
    fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        FieldCtx::inv(self, *a)
    }
    fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        self.p()
    }
    fn from_int(&self, v: i64) -> FieldElement {
        FieldCtx::from_int(self, v)
    }
    fn format(&self, a: &FieldElement) -> String {
        FieldCtx::format(self, *a)
    }
    fn parse(&self, s: &str) -> Result<FieldElement> {
        FieldCtx::parse(self, s)
    }
    fn label(&self) -> String {
        self.to_string()
    }
}

/// A finite set of scalars, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalarSet<T> {
    elements: Vec<T>,
}

impl<T: Ord + Clone> ScalarSet<T> {
    pub fn new(elements: impl IntoIterator<Item = T>) -> Self {
        let mut elements: Vec<T> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        ScalarSet { elements }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub(crate) fn require_nonzero<D: ExactDomain<Elem = T>>(&self, dom: &D) -> Result<()> {
        if self.elements.iter().any(|a| dom.is_zero(a)) {
            return Err(Error::ZeroInSet);
        }
        Ok(())
    }
}

impl<T: Ord + Clone> FromIterator<T> for ScalarSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        ScalarSet::new(iter)
    }
}
