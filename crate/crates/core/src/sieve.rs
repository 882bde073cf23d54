//! Degree sieving: which field degrees survive the group-theoretic
//! constraints.
//!
//! For a representation value prime p, the splitting field of a surviving
//! representation has degree `n` constrained in three ways: `n` must be
//! divisible by at least one of a list of divisors, the prime-to-p part of
//! `n` must avoid a finite forbidden set, and `v_p(n)` must be at least the
//! p-length under consideration.  [`DegreeConstraints`] bundles the three;
//! [`preset`] names the combinations used by the bundled bound tables.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SieveError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("divisor list is empty")]
    NoDivisors,
    #[error("divisors must be positive")]
    ZeroDivisor,
    #[error("forbidden part {part} is divisible by p = {p}")]
    ForbiddenPartNotCoprime { part: u32, p: u32 },
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `v_p(n)`: the exponent of `p` in `n`.
pub fn p_valuation(mut n: u32, p: u32) -> u32 {
    assert!(n > 0 && p > 1);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// `n` with every factor of `p` removed: `prime_to_p_part(48, 2) = 3`.
pub fn prime_to_p_part(mut n: u32, p: u32) -> u32 {
    assert!(n > 0 && p > 1);
    while n % p == 0 {
        n /= p;
    }
    n
}

/// The degree constraints for one proof scenario.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeConstraints {
    p: u32,
    any_of_divisors: Vec<u32>,
    forbidden_parts: BTreeSet<u32>,
    min_p_valuation: u32,
}

impl DegreeConstraints {
    pub fn new(
        p: u32,
        any_of_divisors: Vec<u32>,
        forbidden_parts: BTreeSet<u32>,
        min_p_valuation: u32,
    ) -> Result<DegreeConstraints, SieveError> {
        if !is_prime(p) {
            return Err(SieveError::NotPrime(p));
        }
        if any_of_divisors.is_empty() {
            return Err(SieveError::NoDivisors);
        }
        if any_of_divisors.contains(&0) {
            return Err(SieveError::ZeroDivisor);
        }
        for &part in &forbidden_parts {
            if part % p == 0 {
                return Err(SieveError::ForbiddenPartNotCoprime { part, p });
            }
        }
        Ok(DegreeConstraints { p, any_of_divisors, forbidden_parts, min_p_valuation })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn any_of_divisors(&self) -> &[u32] {
        &self.any_of_divisors
    }

    pub fn forbidden_parts(&self) -> &BTreeSet<u32> {
        &self.forbidden_parts
    }

    pub fn min_p_valuation(&self) -> u32 {
        self.min_p_valuation
    }

    pub fn is_candidate(&self, n: u32) -> bool {
        n > 0
            && self.any_of_divisors.iter().any(|&d| n % d == 0)
            && !self.forbidden_parts.contains(&prime_to_p_part(n, self.p))
            && p_valuation(n, self.p) >= self.min_p_valuation
    }

    /// All candidate degrees `≤ nmax`, ascending.
    pub fn candidate_degrees(&self, nmax: u32) -> Vec<u32> {
        let mut out = BTreeSet::new();
        for &d in &self.any_of_divisors {
            let mut n = d;
            while n <= nmax {
                if self.is_candidate(n) {
                    out.insert(n);
                }
                n += d;
            }
        }
        out.into_iter().collect()
    }
}

/// A named scenario: the prime, the p-length and the matching constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub p: u32,
    pub p_length: u32,
    pub constraints: DegreeConstraints,
}

pub const PRESET_NAMES: [&str; 7] =
    ["p2len0", "p2len1", "p2len2", "p2len3", "p3len0", "p3len1", "p3len2"];

/// Look a preset up by name (`p2len2`, `p3len1`, …).
pub fn preset(name: &str) -> Option<Preset> {
    let (p, p_length) = match name {
        "p2len0" => (2, 0),
        "p2len1" => (2, 1),
        "p2len2" => (2, 2),
        "p2len3" => (2, 3),
        "p3len0" => (3, 0),
        "p3len1" => (3, 1),
        "p3len2" => (3, 2),
        _ => return None,
    };
    default_preset(p, p_length)
}

/// The preset for a `(p, p_length)` pair, if that scenario is supported.
///
/// For p = 2 the degree is divisible by 16 and its odd part is at least 9;
/// for p = 3 the degree is divisible by 18 or 27, with small prime-to-3
/// parts excluded (at p-length 1 the part 2 is excluded as well).  The
/// length-0 presets reuse the length-1 sieves; their runs terminate on the
/// discriminant table alone, at degrees below any candidate.
pub fn default_preset(p: u32, p_length: u32) -> Option<Preset> {
    let name = PRESET_NAMES
        .iter()
        .find(|n| **n == format!("p{p}len{p_length}"))?;
    let (divisors, forbidden): (Vec<u32>, &[u32]) = match (p, p_length) {
        (2, _) => (vec![16], &[1, 3, 5, 7]),
        (3, 0 | 1) => (vec![18, 27], &[1, 2, 4, 5, 7]),
        (3, 2) => (vec![18, 27], &[1, 4, 5, 7]),
        _ => unreachable!("name table above filters the rest"),
    };
    let constraints = DegreeConstraints::new(
        p,
        divisors,
        forbidden.iter().copied().collect(),
        p_length,
    )
    .expect("presets are valid by construction");
    Some(Preset { name, p, p_length, constraints })
}
