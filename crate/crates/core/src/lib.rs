//! Exact reconstruction of coalgebras, bialgebras and Hopf algebras from fiber
//! functors on finitely presented categories.
//!
//! Modules, bottom-up:
//! - [`exactalg`]: rational and prime-field matrices, subspaces, quotients.
//! - [`moncat`]: strict symmetric monoidal expressions and dual pairings.
//! - [`catpres`]: presented categories, fiber functors, tensor and duality data.
//! - [`coend`]: `Nat^∨(F,G)` as a quotient, natural transformations, cocomposition.
//! - [`tannaka`]: structure maps on `End^∨(F)`, comodules, reconstruction.
//! - [`jobs`]: document-level commands with text and JSON output.

pub mod exactalg;
pub mod moncat;
pub mod catpres;
pub mod report;
pub mod fixtures;
pub mod coend;
pub mod tannaka;
pub mod jobs;
