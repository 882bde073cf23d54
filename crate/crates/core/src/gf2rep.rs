//! Modular representation theory over GF(2), enough to classify the
//! irreducible modules of every subgroup of S6.
//!
//! The pipeline: build the regular module of a small permutation group,
//! chop it into composition factors with a randomized (but seeded and
//! reproducible) splitting algorithm, read off endomorphism-field degrees
//! from spaces of intertwiners, and translate GF(2)-irreducibles into
//! absolutely irreducible dimensions over the splitting field.  The
//! surrounding search then selects the subgroup classes of S6 that admit
//! a four-dimensional absolutely irreducible module.

pub mod matrix;
pub mod meataxe;
pub mod module;
pub mod poly;
pub mod search;

pub use matrix::{GF2Matrix, GF2Vector, RowBasis, MAX_DIM};
pub use meataxe::{chop, CompositionFactor};
pub use module::{hom_dimension, GF2Module};
pub use poly::GF2Poly;
pub use search::{abs_irred_dims, is_absolutely_irreducible, s6_search, S6SearchRow};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GF2RepError {
    #[error("module dimension {dimension} exceeds the supported limit {limit}")]
    DimensionTooLarge { dimension: usize, limit: usize },
    #[error("group of order {order} exceeds the regular-module limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },
    #[error("the heart needs an even permutation degree, got {degree}")]
    OddDegreeHeart { degree: usize },
    #[error("the heart is only defined for modules acting by permutation matrices")]
    NotPermutationAction,
    #[error(
        "splitting did not converge after {attempts} random elements; \
         retry with seed {suggested_seed}"
    )]
    IterationCap { attempts: u32, suggested_seed: u64 },
}
