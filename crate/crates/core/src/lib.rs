//! Exact computations with characteristic classes of surface bundles
//! carrying a line bundle.
//!
//! * [`algebra`]: sparse graded-commutative polynomials over the rationals.
//! * [`bundle`]: fiber integration and evaluation on concrete bundle models.
//! * [`grr`]: truncated Todd/exponential series and the degree-2 index
//!   expansion.
//! * [`stable`]: generator families and Hilbert series of the stable rings.
//! * [`lattice`]: Smith normal form, unimodularity certificates and the
//!   torsion orders of the universal Picard variety.

pub mod algebra;
pub mod bundle;
pub mod grr;
pub mod lattice;
pub mod stable;

pub use algebra::{Element, Generator, Rational};
