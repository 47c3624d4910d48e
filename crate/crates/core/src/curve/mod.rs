//! Numerical Kippenhahn curve: the envelope of the support lines
//! `e^{−iθ}(λ_j(θ) + iℝ)`, sampled on a θ grid and checked against candidate conics.

pub mod agreement;
pub mod conic;
pub mod eig;
pub mod export;
pub mod sample;

use thiserror::Error;

pub use agreement::{cross_check, symmetry_defect, Agreement, RejectedCandidate, AGREEMENT_TOL};
pub use conic::{
    min_residual, verify_conics, verify_conics_with, Conic, ConicFit, ConicVerification,
    VerificationSummary, ASSIGN_TOL,
};
pub use export::{render_svg, write_csv};
pub use sample::{
    default_grid, hermitian_part_eigs, hermitian_part_offdiag, sample_at, sample_curve,
    CurveSample, HermitianEigs, GAP_TOL,
};

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("sampling grid is empty")]
    EmptyGrid,
    #[error("invalid conic: {0}")]
    InvalidSpec(String),
}
