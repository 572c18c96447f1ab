//! Exact integer linear algebra for the integral statements: Smith normal
//! form, unimodularity certificates, the fiber edge map and torsion orders.
//!
//! Second cohomology is always written in the chart `(lambda, zeta,
//! m_{0,1})`; `m_{-1,2}` is the derived coordinate `m_{0,1} - 2 zeta`.

mod matrix;
mod smith;
mod torsion;

use thiserror::Error;

pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, verify_free_basis, FreeBasisCertificate, SmithForm};
pub use torsion::{admits_section, edge_kernel, torsion_orders, EdgeKernel, TorsionReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("value does not fit in 64 bits: {0}")]
    Overflow(String),
}
