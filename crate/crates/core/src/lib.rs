//! Exact counting laboratory for product growth in the Heisenberg group.
//!
//! The crate computes, exactly, the combinatorial quantities that control
//! the size of product sets `[A, A, 0][A, A, 0]` and `[E, E, 0][E, E, 0]`
//! in `H_n(F_q)` and over the complex numbers: product sets and center
//! cosets, additive and multiplicative energies, the quadruple count `S`,
//! the reduction counts `X` and `M`, orthogonality triples, bilinear
//! multiset counts, and point-line incidences. Most quantities are computed
//! by two independent algorithms so that one can check the other.
//!
//! Modules, bottom-up:
//!
//! * [`ffield`]: arithmetic in `F_{p^k}`, additive characters, subgroups.
//! * [`heisenberg`]: the group law, bricks, product sets, coset counting.
//! * [`spectral`]: Fourier analysis on `F_q^n` and the bilinear count `N`.
//! * [`energy`]: energies and reduction counts over any exact domain.
//! * [`incidence`]: lines, weighted line multisets and incidence functionals.
//! * [`lab`]: set generators, sweeps, reports and verification suites.

pub mod complex;
pub mod domain;
pub mod energy;
pub mod error;
pub mod ffield;
pub mod heisenberg;
pub mod incidence;
pub mod lab;
pub mod limits;
pub mod spectral;

pub use complex::{ComplexRational, ComplexRationals};
pub use domain::{ExactDomain, ScalarSet};
pub use error::{Error, Result};
pub use ffield::{FieldCtx, FieldElement, FieldVector};
pub use heisenberg::{Brick, BrickPart, HeisPoint, HeisenbergGroup};
pub use limits::Limits;
