//! Strict symmetric monoidal expressions and dual pairings in coordinate spaces.
//!
//! Associators and unitors are identities on flattened words, so an expression is
//! built only from identities and adjacent symmetries. Two parallel expressions are
//! equal exactly when they induce the same permutation of word positions.

mod expr;
mod pairing;
mod text;

use thiserror::Error;

pub use expr::{coherence_equal, eval_in_vec, perm_of, permutation_matrix, ObjectWord, Permutation, SymExpr};
pub use pairing::{check_triangles, dual_map, standard_pairing, DualPairing};
pub use text::{parse_expr, parse_word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoncatError {
    #[error("swap position {position} is out of range for word {word}")]
    SwapPosition { position: usize, word: ObjectWord },
    #[error("cannot compose: codomain {codomain} differs from domain {domain}")]
    ComposeMismatch { codomain: ObjectWord, domain: ObjectWord },
    #[error("expressions are not parallel: {} -> {} vs {} -> {}", left.0, left.1, right.0, right.1)]
    BoundaryMismatch { left: (ObjectWord, ObjectWord), right: (ObjectWord, ObjectWord) },
    #[error("no dimension assigned to atom {0:?}")]
    MissingDimension(String),
    #[error("not a permutation of {len} positions")]
    BadPermutation { len: usize },
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("pairing maps have the wrong shape for a space of dimension {space_dim}")]
    PairingShape { space_dim: usize },
    #[error("change of basis is singular")]
    Singular,
    #[error("dual_map: map is {}x{} but pairings are on dimensions {} and {}", map.0, map.1, pairings.0, pairings.1)]
    DualMapShape { map: (usize, usize), pairings: (usize, usize) },
}
