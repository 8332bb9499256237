//! Sparse multivariate polynomial arithmetic over prime fields, Groebner
//! bases, zero-dimensional quotient rings and equivariant Jacobian
//! evaluation: the computational engine behind basket computation and
//! quasismoothness certification.

pub mod cells;
pub mod equations;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod macaulay;
pub mod poly;
pub mod quotient;

use thiserror::Error;

pub use cells::{analyze_support_cell, zero_dim_points, CellOutcome, StratumPoints};
pub use equations::{
    build_equations, build_equations_from_model, build_equations_with, stratum_supports,
    EquationSystem, FormOptions, ModelEntry,
};
pub use field::PrimeField;
pub use groebner::{groebner, ideal_dimension, GroebnerBasis, GroebnerBudget};
pub use macaulay::{certify_zero_dimensional, MacaulayBudget, MacaulayOutcome};
pub use poly::{parse_poly, Monomial, PolyRing, SparsePoly};
pub use quotient::{CellAlgebra, QuotientRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CasError {
    #[error("computation budget exceeded after {pair_reductions} pair reductions")]
    BudgetExceeded { pair_reductions: u64 },
    #[error("restricted ideal is not zero-dimensional (no pure power of variable {variable})")]
    NotZeroDimensional { variable: usize },
    #[error("quotient ring exceeds the configured cap of {cap} monomials")]
    QuotientTooLarge { cap: usize },
    #[error("Jacobian rank {rank} < codimension {codim} at points with support {support:?} (stabilizer {stabilizer})")]
    RankDeficient {
        support: Vec<usize>,
        stabilizer: u64,
        rank: usize,
        codim: usize,
    },
    #[error("point with support {support:?} (stabilizer {stabilizer}) has transverse residues {residues:?}: not an isolated quotient point")]
    NonIsolatedPoint {
        support: Vec<usize>,
        stabilizer: u64,
        residues: Vec<u64>,
    },
    #[error("cell analysis is not uniform: {detail}")]
    AmbiguousCell { detail: String },
    #[error("invalid family or model: {0}")]
    InvalidFamily(String),
}
