//! Banded Toeplitz matrices through skew Schur polynomials.
//!
//! Every minor of `T_n(a) = [a_{j-k}]`, where
//! `a(t) = a_p t^{p-w} (t - z_1) ... (t - z_w)`, is `± a_p^m` times a skew
//! Schur polynomial evaluated at the zeros `z_j`. The crate evaluates those
//! polynomials (Jacobi–Trudi, dual Jacobi–Trudi, bialternant), and builds on
//! them to give determinants, cofactors, inverse entries and eigenvectors of
//! banded Toeplitz matrices at a cost that barely depends on `n`.
//!
//! All routines are generic over [`Scalar`]: [`Rational`] for exact
//! verification and [`ScaledComplex`] for fast floating point work.

pub mod document;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod partitions;
pub mod roots;
pub mod scalar;
pub mod schur;
pub mod symcore;
pub mod toeplitz;

pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use partitions::{IndexSet, Partition, SkewPartition};
pub use scalar::{Rational, ScaledComplex, Scalar};
pub use symcore::{ElemSeq, HomSeq, RootList};
pub use toeplitz::{
    AdjMethod, DetMethod, EigenRequest, GeometricForm, LaurentSpec, MinorRequest, MinorVariant,
};
