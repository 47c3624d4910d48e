//! Decision procedures for elliptic components of the Kippenhahn curve.
//!
//! The general criteria work for any `n`, exactly when the inputs are exact and
//! numerically otherwise. The `n = 7` layer adds the simplified literal systems,
//! the factorization test for shifted pairs and the catalogue of known solutions.

mod catalog;
mod classify;
mod concentric;
mod factorization;
pub mod n7;
mod origin;
mod report;
mod shifted;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::reciprocal::ReciprocalError;

pub use catalog::{paper_catalog_n7, CatalogEntry, Theorem};
pub use classify::{classify, classify_with, Classification, ClassificationKind};
pub use concentric::{concentric_check, concentric_matrix, concentric_system};
pub use factorization::{factorization_check_n7, shifted_configs_n7, ShiftedPairConfig};
pub use origin::{origin_ellipse_check, origin_system, OriginSystem};
pub use report::{
    CheckOptions, CriterionReport, EllipseSpec, Mode, Parameter, Residual, Verdict,
    APPROXIMATE_TOL, NUMERIC_TOL,
};
pub use shifted::{
    admissible_pairs, eliminated_linear_form, shifted_pair_residuals, shifted_system, ShiftedPair,
    ShiftedSystem,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CriteriaError {
    #[error("focus index {k} out of range 1..={m}")]
    FocusIndex { k: usize, m: usize },
    #[error("p ± X must both be nonzero eigenvalues: {0}")]
    NotEigenvalues(String),
    #[error("this check is defined for n = 7 only, got n = {0}")]
    WrongSize(usize),
    #[error("invalid shifted-pair configuration: {0}")]
    InvalidConfig(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Reciprocal(#[from] ReciprocalError),
}
