//! Coalgebra, bialgebra and Hopf structure on `End^∨(F)`, the lift of `F` to comodules,
//! the reconstruction morphism `ρ̃`, convolution and the passage between comodules and
//! representations of the character group.
//!
//! Comodules are left comodules `ρ: M → B ⊗ M` throughout.

mod comodule;
mod convolution;
mod endvee;
mod pipeline;
mod rep;
mod structures;

use thiserror::Error;

use crate::catpres::CatError;
use crate::coend::CoendError;

pub use comodule::{
    alpha_tilde, coalgebra_morphism_report, comatrix_coalgebra, lift_functor, parse_comodule_document, rho_tilde,
    rho_tilde_descended, standard_comodule, ComoduleDocument, Lift, RawCoalgebra, RawComoduleDocument, RhoTilde,
};
pub use convolution::{
    characters, check_character, convolution, convolution_group, convolve_functionals, grouplike_group, grouplikes,
    is_grouplike, GroupTable, ENUMERATION_BOUND,
};
pub use endvee::{
    antipode_descended, endvee_antipode, endvee_bialgebra, endvee_coalgebra, multiplication_descended, unit_map,
};
pub use pipeline::{reconstruct, rho_tilde_report, well_definedness_report, Reconstruction, RhoTildeReport};
pub use rep::{
    check_rep_correspondence, comodule_morphism_space, dual_basis, fullness_witness, intertwines, path_image_span,
    rep_of_comodule, FullnessWitness, NamedMorphism,
};
pub use structures::{
    check_comodule, check_comodule_morphism, middle_swap, AlgebraData, BialgebraData, CoalgebraData, ComoduleData,
    HopfData,
};

#[derive(Debug, Error)]
pub enum TannakaError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{what} does not vanish on the relations (residue {residue})")]
    NotWellDefined { what: &'static str, residue: String },
    #[error("{0} is not invertible")]
    Singular(&'static str),
    #[error("no coaction given for {0:?}")]
    MissingCoaction(String),
    #[error("invalid comodule data at {0}")]
    InvalidComodule(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("input {0} is not a character")]
    NotCharacter(usize),
    #[error(transparent)]
    Coend(#[from] CoendError),
    #[error(transparent)]
    Category(#[from] CatError),
}
