//! Finitely presented categories and fiber functors into coordinate spaces,
//! with optional strict tensor and duality data.

mod category;
mod document;
mod duality;
mod tensor;

use thiserror::Error;

use crate::exactalg::AlgebraError;

pub use category::{identity_at, path_eval, validate_functor, FiberFunctor, Generator, Path, PresentedCategory};
pub use document::{
    build_document, document_field, matrix_from_raw, parse_document, Document, RawDocument, RawMatrix,
};
pub use duality::{validate_duality_data, DualEntry, DualityData, EvaluatedDuality};
pub use tensor::{validate_tensor_data, TensorData, WhiskerRule};

#[derive(Debug, Error)]
pub enum CatError {
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("document has no {0} section")]
    MissingSection(&'static str),
    #[error("duplicate {kind} {name:?}")]
    Duplicate { kind: &'static str, name: String },
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("empty path; write the identity as {{\"id\": <object>}}")]
    EmptyPath,
    #[error("path {path} is not composable at generator {at}")]
    NotComposable { path: String, at: String },
    #[error("relation sides {left} and {right} have different endpoints")]
    RelationEndpoints { left: String, right: String },
    #[error("object {0:?} has no dimension")]
    MissingDimension(String),
    #[error("generator {0:?} has no matrix")]
    MissingMatrix(String),
    #[error("{what}: expected a {}x{} matrix, found {}x{}", expected.0, expected.1, found.0, found.1)]
    MatrixShape { what: String, expected: (usize, usize), found: (usize, usize) },
    #[error("{what}: {source}")]
    Scalar { what: String, source: AlgebraError },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("tensor table has no entry for {left}⊗{right}")]
    MissingTensor { left: String, right: String },
    #[error("no structure map s[{left},{right}]")]
    MissingStructureMap { left: String, right: String },
    #[error("no whisker rule for generator {generator} with object {object}")]
    MissingWhisker { generator: String, object: String },
    #[error("object {0:?} has no declared dual")]
    MissingDual(String),
    #[error("duality path {path} for {object} has the wrong endpoints")]
    DualityEndpoints { object: String, path: String },
    #[error("{0} is not invertible")]
    Singular(&'static str),
}
