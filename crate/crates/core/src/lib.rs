//! Exact-arithmetic construction, verification, classification and central
//! extension of graded left-symmetric (pre-Lie) algebra structures on the
//! Witt and Virasoro algebras.
//!
//! Everything here is exact: concrete computations run over the Gaussian
//! rationals Q(i), symbolic ones over the rational-function field
//! Q(alpha, eps), so "an identity holds" always means "its residual is the
//! zero element of the field" rather than "small".
//!
//! The crate is organized around the structure function `f` of a graded
//! product `x_m x_n = f(m,n) x_{m+n}`:
//!
//! - [`scalar`]: the two exact fields behind a tagged [`scalar::Scalar`].
//! - [`witt`]: windows, structure functions, and residual evaluators for
//!   the commutator and left-symmetry identities.
//! - [`families`]: validated closed-form constructors for the classified
//!   families and the indecomposable weight modules.
//! - [`central`]: extension cocycles, their defect sweeps, an exact linear
//!   solver with infeasibility certificates, and the one-variable
//!   reduction that cross-checks it.
//! - [`classify`]: probe-then-verify family fitting, the flip isomorphism,
//!   and basis rescalings.

pub mod central;
pub mod classify;
pub mod error;
pub mod families;
pub mod scalar;
mod sweep;
pub mod witt;

pub use error::{Error, Result};
pub use scalar::{FieldMode, Scalar};
pub use witt::{GradedLSA, IndexWindow, StructureFunction};
