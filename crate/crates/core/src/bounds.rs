//! The discriminant bound attached to a ramification profile, and its
//! minimisation over candidate degrees.
//!
//! For a field ramified only at `p`, the p-adic valuation of the different
//! is controlled by the jumps of the higher ramification filtration.  A
//! [`RamificationProfile`] records those jumps: the tame index `e_0`
//! (coprime to `p`) and the partition `m_1, …, m_N` of wild steps, giving
//! ramification indices `e_i = e_0·p^(m_1+…+m_i)`.  [`exact_c`] evaluates
//! the resulting exponent bound `C` — the root discriminant is `< p^C` —
//! and [`upper_c`] the slightly weaker global form that only depends on
//! the degree `n` and the partition.
//!
//! The proofs need the *worst* (largest) `C` over all surviving degrees,
//! equivalently the smallest subtracted term; [`min_profile`] and
//! [`min_over_degrees`] compute that minimum exactly.

use crate::exact::{Decimal3, Rational};
use crate::sieve::{is_prime, p_valuation};
use thiserror::Error;

/// Caps keep every intermediate comfortably inside `i128`.
const MAX_STEPS: usize = 32;
const MAX_WILD_BITS: u32 = 60;
const MAX_TAME: u32 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("tame index {e0} must be positive and coprime to {p}")]
    BadTameIndex { e0: u32, p: u32 },
    #[error("partition entries must be positive")]
    ZeroPart,
    #[error("partition is too large for exact arithmetic")]
    PartitionTooLarge,
    #[error("partition sums to {partition_sum} but v_{p}({n}) = {valuation}")]
    PartitionMismatch { p: u32, n: u32, valuation: u32, partition_sum: u32 },
    #[error("ramification index {e_top} does not divide the degree {n}")]
    IndexDoesNotDivideDegree { e_top: i128, n: u32 },
    #[error("no admissible profile: v_{p}({n}) = {valuation} < {n_steps} wild steps")]
    NoAdmissibleProfile { p: u32, n: u32, valuation: u32, n_steps: u32 },
    #[error("degree list is empty")]
    NoDegrees,
}

/// The ramification data of a local extension: tame index and wild jumps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile {
    p: u32,
    e0: u32,
    partition: Vec<u32>,
    degree: Option<u32>,
}

impl RamificationProfile {
    pub fn new(p: u32, e0: u32, partition: Vec<u32>) -> Result<Self, BoundsError> {
        if !is_prime(p) {
            return Err(BoundsError::NotPrime(p));
        }
        if e0 == 0 || e0 % p == 0 || e0 > MAX_TAME {
            return Err(BoundsError::BadTameIndex { e0, p });
        }
        validate_partition(p, &partition)?;
        Ok(RamificationProfile { p, e0, partition, degree: None })
    }

    /// A profile used globally: the wild jumps must exhaust `v_p(n)` and
    /// the full ramification index must divide the degree.
    pub fn with_degree(
        p: u32,
        e0: u32,
        partition: Vec<u32>,
        n: u32,
    ) -> Result<Self, BoundsError> {
        let mut profile = RamificationProfile::new(p, e0, partition)?;
        let valuation = p_valuation(n, p);
        let partition_sum: u32 = profile.partition.iter().sum();
        if partition_sum != valuation {
            return Err(BoundsError::PartitionMismatch { p, n, valuation, partition_sum });
        }
        let e_top = profile.e_at(profile.n_steps());
        if n as i128 % e_top != 0 {
            return Err(BoundsError::IndexDoesNotDivideDegree { e_top, n });
        }
        profile.degree = Some(n);
        Ok(profile)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e0(&self) -> u32 {
        self.e0
    }

    pub fn partition(&self) -> &[u32] {
        &self.partition
    }

    /// Number of wild steps `N`.
    pub fn n_steps(&self) -> u32 {
        self.partition.len() as u32
    }

    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    /// `e_i = e_0 · p^(m_1 + … + m_i)` for `0 ≤ i ≤ N`.
    pub fn e_at(&self, i: u32) -> i128 {
        let sum: u32 = self.partition[..i as usize].iter().sum();
        self.e0 as i128 * (self.p as i128).pow(sum)
    }
}

fn validate_partition(p: u32, partition: &[u32]) -> Result<(), BoundsError> {
    if partition.len() > MAX_STEPS {
        return Err(BoundsError::PartitionTooLarge);
    }
    if partition.contains(&0) {
        return Err(BoundsError::ZeroPart);
    }
    let sum: u32 = partition.iter().sum();
    if sum * (32 - p.leading_zeros()) > MAX_WILD_BITS {
        return Err(BoundsError::PartitionTooLarge);
    }
    Ok(())
}

/// `N + 1 + N/(p−1)`: the profile-independent part of the exponent bound,
/// and the bound used before any degree information is available.
pub fn c_base(p: u32, n_steps: u32) -> Rational {
    let n = n_steps as i128;
    Rational::from_integer(n + 1) + Rational::new(n, (p - 1) as i128)
}

/// The exact exponent bound for one profile:
///
/// `C = N + 1 + N/(p−1) − 1/e_N − (1/(p−1))·Σ p^{1−m_i}
///      − (r/(p−1))·(1/e_0 − 1/e_N)` with `r = e_0 mod (p−1)`
///
/// (for `p = 2` the last term vanishes identically).  The root
/// discriminant of the corresponding field is `< p^C`.
pub fn exact_c(profile: &RamificationProfile) -> Rational {
    let p = profile.p as i128;
    let n_steps = profile.n_steps();
    let e_top = profile.e_at(n_steps);
    let mut subtracted = Rational::new(1, e_top) + wild_sum(profile.p, &profile.partition);
    if profile.p > 2 {
        let r = (profile.e0 % (profile.p - 1)) as i128;
        let spread = Rational::new(1, profile.e0 as i128) - Rational::new(1, e_top);
        subtracted = subtracted + Rational::new(r, p - 1) * spread;
    }
    c_base(profile.p, n_steps) - subtracted
}

/// `(1/(p−1)) · Σ_i 1/p^(m_i − 1)`.
fn wild_sum(p: u32, partition: &[u32]) -> Rational {
    let mut sum = Rational::ZERO;
    for &m in partition {
        sum = sum + Rational::new(1, (p as i128).pow(m - 1));
    }
    sum * Rational::new(1, (p - 1) as i128)
}

/// The subtracted term of the global bound: `1/n + (1/(p−1))·Σ p^{1−m_i}`.
///
/// This is the quantity the tables minimise; the bound itself is
/// [`c_base`]`(p, N) −` this value.
pub fn profile_term(p: u32, n: u32, partition: &[u32]) -> Result<Rational, BoundsError> {
    if !is_prime(p) {
        return Err(BoundsError::NotPrime(p));
    }
    assert!(n > 0, "degree must be positive");
    validate_partition(p, partition)?;
    let valuation = p_valuation(n, p);
    let partition_sum: u32 = partition.iter().sum();
    if partition_sum != valuation {
        return Err(BoundsError::PartitionMismatch { p, n, valuation, partition_sum });
    }
    Ok(Rational::new(1, n as i128) + wild_sum(p, partition))
}

/// The global exponent bound for a degree-`n` field with wild jumps
/// `partition`: valid for *every* tame index, unlike [`exact_c`].
pub fn upper_c(p: u32, n: u32, partition: &[u32]) -> Result<Rational, BoundsError> {
    Ok(c_base(p, partition.len() as u32) - profile_term(p, n, partition)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileMinimum {
    pub value: Rational,
    pub partition: Vec<u32>,
}

/// Minimise [`profile_term`] over all partitions of `v_p(n)` into
/// `n_steps` positive parts.  Ties go to the lexicographically smallest
/// partition (which, the term being symmetric, is the sorted one).
pub fn min_profile(n: u32, p: u32, n_steps: u32) -> Result<ProfileMinimum, BoundsError> {
    if !is_prime(p) {
        return Err(BoundsError::NotPrime(p));
    }
    assert!(n > 0, "degree must be positive");
    let valuation = p_valuation(n, p);
    if n_steps == 0 || valuation < n_steps {
        return Err(BoundsError::NoAdmissibleProfile { p, n, valuation, n_steps });
    }
    let mut best: Option<ProfileMinimum> = None;
    let mut partition = Vec::with_capacity(n_steps as usize);
    // Recursive enumeration emits compositions in lexicographic order, so
    // keeping the first strict minimum realises the tie-break.
    fn descend(
        p: u32,
        n: u32,
        remaining: u32,
        slots: u32,
        partition: &mut Vec<u32>,
        best: &mut Option<ProfileMinimum>,
    ) {
        if slots == 0 {
            if remaining != 0 {
                return;
            }
            let value = profile_term(p, n, partition).expect("composition is admissible");
            if best.as_ref().is_none_or(|b| value < b.value) {
                *best = Some(ProfileMinimum { value, partition: partition.clone() });
            }
            return;
        }
        for m in 1..=(remaining - (slots - 1)) {
            partition.push(m);
            descend(p, n, remaining - m, slots - 1, partition, best);
            partition.pop();
        }
    }
    descend(p, n, valuation, n_steps, &mut partition, &mut best);
    Ok(best.expect("at least one composition exists"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMinimum {
    pub value: Rational,
    pub degree: u32,
    pub partition: Vec<u32>,
}

/// Minimise [`min_profile`] over a set of degrees.  Ties go to the
/// smallest degree.  Every degree must admit a profile (`v_p(n) ≥ n_steps`).
pub fn min_over_degrees(
    degrees: &[u32],
    p: u32,
    n_steps: u32,
) -> Result<DegreeMinimum, BoundsError> {
    if degrees.is_empty() {
        return Err(BoundsError::NoDegrees);
    }
    let mut best: Option<DegreeMinimum> = None;
    for &n in degrees {
        let m = min_profile(n, p, n_steps)?;
        let better = best
            .as_ref()
            .is_none_or(|b| (m.value, n) < (b.value, b.degree));
        if better {
            best = Some(DegreeMinimum { value: m.value, degree: n, partition: m.partition });
        }
    }
    Ok(best.expect("degrees is nonempty"))
}

/// The smallest `v ≥ 0` with `p^(1+v)` strictly above `rd_lower`.
///
/// Every degree-`n` field ramified only at `p` has root discriminant below
/// `p^(1+v_p(n))`; combined with a lower bound `rd_lower` this forces
/// `v_p(n) ≥ v`.  Example: a root discriminant of at least 27.328 forces
/// `v_3(n) ≥ 3`, i.e. `27 | n`.
pub fn min_valuation_from_rd(p: u32, rd_lower: Decimal3) -> u32 {
    assert!(p >= 2);
    assert!(rd_lower.millis() >= 0);
    let mut v = 0u32;
    let mut power = p as i128 * 1000;
    while power <= rd_lower.millis() as i128 {
        v += 1;
        power *= p as i128;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn profile_construction_and_indices() {
        let pr = RamificationProfile::new(2, 1, vec![4, 5]).unwrap();
        assert_eq!(pr.n_steps(), 2);
        assert_eq!(pr.e_at(0), 1);
        assert_eq!(pr.e_at(1), 16);
        assert_eq!(pr.e_at(2), 512);

        let global = RamificationProfile::with_degree(2, 1, vec![4, 5], 4608).unwrap();
        assert_eq!(global.degree(), Some(4608));

        assert_eq!(
            RamificationProfile::new(4, 1, vec![1]).unwrap_err(),
            BoundsError::NotPrime(4)
        );
        assert_eq!(
            RamificationProfile::new(3, 6, vec![1]).unwrap_err(),
            BoundsError::BadTameIndex { e0: 6, p: 3 }
        );
        assert_eq!(
            RamificationProfile::new(2, 1, vec![1, 0]).unwrap_err(),
            BoundsError::ZeroPart
        );
        assert_eq!(
            RamificationProfile::with_degree(2, 1, vec![4, 4], 4608).unwrap_err(),
            BoundsError::PartitionMismatch { p: 2, n: 4608, valuation: 9, partition_sum: 8 }
        );
        assert_eq!(
            RamificationProfile::with_degree(2, 9, vec![1], 6).unwrap_err(),
            BoundsError::IndexDoesNotDivideDegree { e_top: 18, n: 6 }
        );
    }

    #[test]
    fn exact_c_frozen_values() {
        let c = |p, e0, partition: &[u32]| {
            exact_c(&RamificationProfile::new(p, e0, partition.to_vec()).unwrap())
        };
        assert_eq!(c(2, 1, &[1]), rat(3, 2));
        assert_eq!(c(3, 2, &[1]), rat(11, 6));
        assert_eq!(c(2, 1, &[]), Rational::ZERO);
        assert_eq!(c(3, 1, &[]), Rational::ZERO);
        assert_eq!(c(2, 1, &[4, 5]), rat(5, 1) - rat(97, 512));
        // p = 3 exercises the tame-remainder term: r = e0 mod 2 = 1 here.
        assert_eq!(c(3, 1, &[1]), rat(4, 3));
        assert_eq!(c(5, 3, &[1, 2]), rat(1106, 375));
    }

    #[test]
    fn upper_c_frozen_values() {
        assert_eq!(upper_c(2, 4608, &[4, 5]).unwrap(), rat(22175, 4608));
        assert_eq!(upper_c(3, 162, &[2, 2]).unwrap(), rat(593, 162));
        assert_eq!(upper_c(2, 4608, &[3, 3, 3]).unwrap(), rat(28799, 4608));
        assert_eq!(upper_c(3, 18, &[1, 1]).unwrap(), rat(53, 18));
        assert_eq!(upper_c(3, 72, &[2]).unwrap(), rat(167, 72));
        assert_eq!(upper_c(3, 54, &[1, 2]).unwrap(), rat(4, 1) - rat(37, 54));
        assert_eq!(
            upper_c(2, 48, &[3]).unwrap_err(),
            BoundsError::PartitionMismatch { p: 2, n: 48, valuation: 4, partition_sum: 3 }
        );
    }

    #[test]
    fn upper_c_dominates_exact_c() {
        // The global bound drops two nonnegative terms, so it can only grow.
        for p in [2u32, 3, 5, 7] {
            for e0 in 1..=6 {
                if e0 % p == 0 {
                    continue;
                }
                for partition in [vec![1], vec![2], vec![1, 1], vec![3, 1], vec![2, 2, 1]] {
                    let profile =
                        RamificationProfile::new(p, e0, partition.clone()).unwrap();
                    let sum: u32 = partition.iter().sum();
                    let e_top = (e0 as i128 * (p as i128).pow(sum)) as u32;
                    // Multipliers coprime to every tested p keep v_p(n) = Σm.
                    for k in [1u32, 11, 13] {
                        let n = e_top * k;
                        assert!(upper_c(p, n, &partition).unwrap() >= exact_c(&profile));
                    }
                }
            }
        }
    }

    #[test]
    fn min_profile_frozen_values() {
        let m = min_profile(4608, 2, 2).unwrap();
        assert_eq!(m.value, rat(865, 4608));
        assert_eq!(m.partition, vec![4, 5]); // lex-smallest of the tied pair

        let m = min_profile(4608, 2, 3).unwrap();
        assert_eq!(m.value, rat(3457, 4608));
        assert_eq!(m.partition, vec![3, 3, 3]);

        let m = min_profile(162, 3, 2).unwrap();
        assert_eq!(m.value, rat(55, 162));
        assert_eq!(m.partition, vec![2, 2]);

        let m = min_profile(54, 3, 2).unwrap();
        assert_eq!(m.value, rat(37, 54));
        assert_eq!(m.partition, vec![1, 2]);

        let m = min_profile(18, 3, 2).unwrap();
        assert_eq!(m.value, rat(19, 18));

        let m = min_profile(72, 3, 1).unwrap();
        assert_eq!(m.value, rat(13, 72));
        assert_eq!(m.partition, vec![2]);

        let m = min_profile(208, 2, 3).unwrap();
        assert_eq!(m.value, rat(521, 208));
        assert_eq!(m.partition, vec![1, 1, 2]);

        assert_eq!(
            min_profile(18, 3, 3).unwrap_err(),
            BoundsError::NoAdmissibleProfile { p: 3, n: 18, valuation: 2, n_steps: 3 }
        );
    }

    #[test]
    fn min_profile_agrees_with_exhaustive_scan() {
        // Independent re-enumeration with a different strategy: generate
        // all compositions via stars-and-bars bitmasks and take the min.
        for (n, p, steps) in [(4608u32, 2u32, 2u32), (832, 2, 2), (162, 3, 2), (208, 2, 3)] {
            let v = p_valuation(n, p);
            let mut best: Option<(Rational, Vec<u32>)> = None;
            // A composition of v into `steps` parts = choice of `steps−1`
            // cut positions among v−1 gaps.
            let gaps = v - 1;
            for mask in 0u32..(1 << gaps) {
                if mask.count_ones() != steps - 1 {
                    continue;
                }
                let mut parts = Vec::new();
                let mut last = 0u32;
                for g in 0..gaps {
                    if mask & (1 << g) != 0 {
                        parts.push(g + 1 - last);
                        last = g + 1;
                    }
                }
                parts.push(v - last);
                let value = profile_term(p, n, &parts).unwrap();
                let better = best
                    .as_ref()
                    .is_none_or(|(bv, bp)| (value, &parts) < (*bv, bp));
                if better {
                    best = Some((value, parts));
                }
            }
            let (value, parts) = best.unwrap();
            let got = min_profile(n, p, steps).unwrap();
            assert_eq!(got.value, value);
            assert_eq!(got.partition, parts);
        }
    }

    #[test]
    fn min_over_degrees_frozen_values() {
        let m = min_over_degrees(&[144, 176], 2, 2).unwrap();
        assert_eq!((m.value, m.degree), (rat(177, 176), 176));

        let m = min_over_degrees(&[18, 54, 72], 3, 2).unwrap();
        assert_eq!((m.value, m.degree), (rat(37, 54), 54));

        let m = min_over_degrees(&[18], 3, 2).unwrap();
        assert_eq!((m.value, m.degree), (rat(19, 18), 18));

        assert_eq!(min_over_degrees(&[], 2, 2).unwrap_err(), BoundsError::NoDegrees);
        // A degree without enough wild room is a caller error, not a skip.
        assert!(matches!(
            min_over_degrees(&[144, 18], 2, 3),
            Err(BoundsError::NoAdmissibleProfile { .. })
        ));
    }

    #[test]
    fn min_over_degrees_is_order_independent() {
        let a = min_over_degrees(&[176, 144], 2, 2).unwrap();
        let b = min_over_degrees(&[144, 176], 2, 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn c_base_values() {
        assert_eq!(c_base(2, 2), rat(5, 1));
        assert_eq!(c_base(3, 2), rat(4, 1));
        assert_eq!(c_base(2, 3), rat(7, 1));
        assert_eq!(c_base(2, 1), rat(3, 1));
        assert_eq!(c_base(3, 1), rat(5, 2));
        assert_eq!(c_base(2, 0), Rational::ONE);
        assert_eq!(c_base(3, 0), Rational::ONE);
    }

    #[test]
    fn valuation_from_rd() {
        let d = Decimal3::from_millis;
        assert_eq!(min_valuation_from_rd(3, d(27_328)), 3);
        assert_eq!(min_valuation_from_rd(3, d(27_000)), 3); // ties round up
        assert_eq!(min_valuation_from_rd(3, d(26_999)), 2);
        assert_eq!(min_valuation_from_rd(2, d(1_000)), 0);
        assert_eq!(min_valuation_from_rd(2, d(2_000)), 1);
        // The tower bound is strict, so rd ≥ 32 = 2^5 already rules out v = 4.
        assert_eq!(min_valuation_from_rd(2, d(32_000)), 5);
        assert_eq!(min_valuation_from_rd(2, d(0)), 0);
    }
}
