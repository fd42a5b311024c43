//! Exact scalar and linear algebra.
//!
//! Everything downstream is a matrix identity over an exact field, so no floating
//! point appears anywhere. Tensor products of coordinate spaces are fully flattened
//! with `e_i ⊗ e_j ↦ i · dim₂ + j`, which makes the associativity and unit
//! isomorphisms of vector spaces literal identities.

mod matrix;
mod scalar;
mod subspace;

use thiserror::Error;

pub use matrix::{ExactMatrix, LinearMap, Rref};
pub use scalar::{Field, Scalar};
pub use subspace::{
    direct_sum, image_basis, intersect_subspaces, kernel_basis, quotient, solve_linear_system, Quotient,
    SubspaceBasis,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar literal {0:?}")]
    ParseScalar(String),
    #[error("cannot parse field {0:?} (expected Q or Fp:<prime>)")]
    ParseField(String),
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),
    #[error("literal {literal:?} does not belong to field {field}")]
    FieldMismatch { literal: String, field: Field },
    #[error("matrix rows have different lengths")]
    RaggedRows,
    #[error("matrix entries come from different fields")]
    MixedFields,
    #[error("expected a {}x{} matrix, found {}x{}", expected.0, expected.1, found.0, found.1)]
    Shape { expected: (usize, usize), found: (usize, usize) },
    #[error("cannot compose: inner map lands in dimension {inner}, outer map starts in {outer}")]
    Compose { inner: usize, outer: usize },
}

/// Parses a matrix given as rows of scalar literals.
pub fn parse_matrix(field: Field, rows: &[Vec<String>]) -> Result<ExactMatrix, AlgebraError> {
    let parsed = rows
        .iter()
        .map(|row| row.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    ExactMatrix::from_rows(field, parsed)
}

/// The permutation matrix of the swap `K^a ⊗ K^b → K^b ⊗ K^a`, sending
/// `e_{i·b+j}` to `e_{j·a+i}`.
pub fn commutation_matrix(field: Field, a: usize, b: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(field, a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            m.set(j * a + i, i * b + j, field.one());
        }
    }
    m
}
