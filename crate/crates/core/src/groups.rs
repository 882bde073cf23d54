//! Finite permutation groups on up to 16 points.
//!
//! The classification arguments for the small-degree fields need exact
//! answers to a handful of group-theoretic questions: orders, Sylow
//! subgroups, conjugacy classes away from a prime, subgroup lattices up
//! to conjugacy, and the iterated Frattini series of a p-group.  This
//! module computes all of them deterministically from generators given in
//! cycle notation.

pub mod order18;
pub mod perm;
pub mod permgroup;
pub mod subgroups;

pub use order18::{eliminate_order_18, EliminationReason, Order18Report};
pub use perm::{Perm, PermError, MAX_DEGREE};
pub use permgroup::{ConjugacyClass, PermGroup, ENUMERATION_CAP};
pub use subgroups::{subgroup_classes, SubgroupClass, MAX_TABLE_ORDER};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator acts on {found} points, group is defined on {expected}")]
    DegreeMismatch { expected: u8, found: u8 },
    #[error("degree {0} is outside the supported range 1..=16")]
    BadDegree(u8),
    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: u64, p: u32 },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("group of order {order} exceeds the multiplication-table limit {limit}")]
    OrderLimitExceeded { order: u64, limit: u64 },
}
