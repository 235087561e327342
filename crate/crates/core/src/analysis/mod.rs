//! Matroid and polymatroid analysis built on the polynomial engine:
//! degenerate quadrangles and the spaces `V_M ⊇ W_M`, exact log vectors of
//! minors, relaxation embeddings, the Rayleigh certificate for the P8
//! family, the amalgamation pipeline and the no-amalgam argument.

mod certificate;
mod chain;
mod logvec;
mod pipeline;
mod quadrangle;

use thiserror::Error;

pub use certificate::{
    build_f_ab, expected_cubic, f_unit, fano_perturbed, nonfano_abs_det_polynomial, p8_log2_exponents,
    rayleigh_point, verify_rayleigh_cubic, CubicReport, RAYLEIGH_CUBIC,
};
pub use chain::{no_amalgam_proof_chain, BoundaryValue, ChainReport, ChainStep};
pub use logvec::{
    embed_report, in_v_space, in_w_space, iota_embed, iota_embed_log, log_of_coefficients, relaxed_set,
    scaling_action, u_vector, EmbedReport, LogEntryJson, LogVector,
};
pub use pipeline::{
    amalgamate_from_q, f7_specialized_polynomials, hypcone_sampled, shift_family, support_set,
    AmalgamationInput, HypconeReport, PipelineOutcome, ShiftedFamily,
};
pub use quadrangle::{
    degenerate_quadrangles, expected_w_dim, quadrangle_matrix, quadrangle_row, satisfies_quadrangles, v_space,
    w_generator, w_space, BasisIndexedSpace, QuadrangleRelation,
};

use crate::matroid::MatroidError;
use crate::poly::PolyError;
use crate::polymatroid::PolymatroidError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("matrix does not represent the matroid: {0}")]
    NonRepresentingMatrix(String),
    #[error("not a relaxation: {0}")]
    NotARelaxation(String),
    #[error("identity fails, difference {0}")]
    IdentityMismatch(String),
    #[error("restriction mismatch: {0}")]
    RestrictionMismatch(String),
    #[error("support is not M-convex: {0}")]
    SupportNotMConvex(String),
    #[error("argument breaks at {step}: {detail}")]
    ChainBroken { step: String, detail: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Polymatroid(#[from] PolymatroidError),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;
