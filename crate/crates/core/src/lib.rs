//! Floquet algebraic tomography for finite-dimensional non-Hermitian
//! monodromy matrices.
//!
//! The primary data are observable trace sequences ζ_n = Tr(O Mⁿ) generated
//! by an invertible monodromy matrix M. This crate builds the forward models
//! (periodic Hamiltonians, propagators, trace sequences), the analytic
//! spectral components (characteristic coefficients, observable spectral
//! determinant / resolvent / Dirichlet data, T-system determinants, phase
//! windings), the inverse pipeline (Hankel order detection, Prony and
//! Schur-stencil recurrences, block-Hankel realization), the operator-algebra
//! layer (commutants, visible representatives, micromotion families,
//! basis-resolved exact reconstruction), and the two built-in example models.

pub mod algebra;
pub mod error;
pub mod io;
pub mod linalg;
pub mod models;
pub mod monodromy;
pub mod reconstruct;
pub mod spectral;
pub mod traces;

pub use error::{Error, Result};
