//! Exact recomputation of discriminant-bound non-existence arguments for
//! mod-p Galois representations ramified at a single small prime.
//!
//! The crate is organised as a pipeline:
//!
//! * [`exact`] — exact rational arithmetic and decimals rounded toward +∞,
//!   so every printed digit is a certified upper bound;
//! * [`bounds`] — the ramification-profile discriminant bound and its
//!   minimisation over admissible degrees;
//! * [`odlyzko`] — root-discriminant lower-bound tables and their inverse
//!   lookup (root-discriminant bound ⇒ degree bound);
//! * [`sieve`] — divisibility/congruence constraints on field degrees;
//! * [`fixpoint`] — the iterative driver that shrinks a degree bound until
//!   the candidate set is empty or stabilises;
//! * [`groups`] — a small permutation-group engine (stabiliser chains,
//!   Sylow subgroups, p-length, subgroup classification);
//! * [`gf2rep`] — bit-packed GF(2) representation theory (chop into
//!   composition factors, absolutely irreducible dimensions);
//! * [`orders`] — order formulas for the finite classical and Suzuki
//!   groups that appear in the large-image arguments.

pub mod bounds;
pub mod exact;
pub mod fixpoint;
pub mod gf2rep;
pub mod groups;
pub mod odlyzko;
pub mod orders;
pub mod sieve;
