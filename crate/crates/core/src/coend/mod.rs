//! `Nat^∨(F, G)` as an explicit quotient, `Nat(F, G)` as a solution space, the pairing
//! between them, and the coevaluation, cocomposition and counit maps.
//!
//! Relations come from generating morphisms only: the relation of a composite `g ∘ h`
//! is the sum of a relation for `h` and one for `g`, and identities contribute zero.

mod nat;
mod presentation;
mod structure;

use thiserror::Error;

use crate::catpres::CatError;

pub use nat::{nat_space, nat_to_pairing, pairing_report, pairing_to_nat, EndSpace, NatTrans};
pub use presentation::{descend, descend_pair, natvee, Block, CoendPresentation, CoendSummary, DescendedMap};
pub use structure::{coevaluation, cocomposition, cocomposition_descended, counit, counit_descended};

#[derive(Debug, Error)]
pub enum CoendError {
    #[error("functors live over different fields")]
    FieldMismatch,
    #[error("functor violates a relation ({0})")]
    InvalidFunctor(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("presentations disagree on the dimensions at object {0:?}")]
    Incompatible(String),
    #[error("F(C) and G(C) differ at object {0:?}; the counit needs F = G")]
    NotEndomorphism(String),
    #[error("expected {expected} coordinates, found {found}")]
    Length { expected: usize, found: usize },
    #[error("{what} does not vanish on the relations (residue {residue})")]
    NotWellDefined { what: &'static str, residue: String },
    #[error(transparent)]
    Category(#[from] CatError),
}
