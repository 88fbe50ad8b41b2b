//! Concrete algebras and structures: `sl(m+1,ℝ)`, `gl(2n,ℝ)` with their
//! complex product structures, the Sasaki families on `sl(3,ℝ)`, the
//! inclusion maps and the Koszul form.

mod inclusion;
mod sasaki;
mod sl;
mod tables;

pub use inclusion::{gl_to_gl_plus2, gl_to_sl, sl_to_sl_plus2, Inclusion, InclusionReport};
pub use sasaki::{
    chevalley_frame, other_basis, sasaki_basis, sasaki_j, sasaki_sl3, sigma_matrix, OtherFamily,
    SasakiFamily,
};
pub use sl::{
    build_gl, build_sl, cp_structure_gl, cp_structure_sl, gl_e, gl_j, hypercomplex_sl_c,
    koszul_form, sl_e, sl_j, CpAlgebra, Decomposed, SlBlocks, SlIndex,
};
pub use tables::{table_algebra, RescaledTable, TableAlgebra, TableEntry, RESCALE_SQUARES};

use crate::liealg::LieError;
use crate::scalars::ScalarError;
use crate::structures::StructureError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("size parameter must be at least 1")]
    ZeroSize,
    #[error("a² + b² = 1: the complex structure J_(I_λ) is undefined")]
    DenominatorZero,
    #[error("1 + μ = {0} is not a square in ℚ(i)")]
    NotASquare(String),
    #[error("μ = −1 gives a degenerate basis")]
    DegenerateParameter,
    #[error("family {0} has no table in this form")]
    NoTable(&'static str),
    #[error("stored brackets disagree with σ-completion at ({0}, {1})")]
    InconsistentTable(usize, usize),
    #[error("rescaling [b{0}, b{1}] -> b{2} needs √2")]
    OddRescaling(usize, usize, usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}
