//! Order formulas for the group families that can appear as large images
//! in characteristic 2: the symplectic groups Sp₄(F₂ʳ), the two
//! orthogonal stabilisers SO±(4, F₂ʳ), and the Suzuki groups Sz(F₂ʳ).
//!
//! The classification argument needs only two things from this module:
//! the maximal-subgroup orders of a Suzuki group, and the minimum order
//! any allowed image can have — which turns out to be |Sz(F₈)| = 29120,
//! comfortably above every degree the numerical bounds leave open.

use num_bigint::BigUint;
use thiserror::Error;

/// Orders grow like 2^(10r); keep the exponent small enough that shifts
/// stay sane.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrdersError {
    #[error("field exponent must be at least 1")]
    ZeroExponent,
    #[error("field exponent {0} exceeds the supported limit {MAX_EXPONENT}")]
    ExponentTooLarge(u32),
    #[error("the Suzuki family is defined for odd field exponents, got {0}")]
    EvenSuzukiExponent(u32),
    #[error("the Suzuki maximal-subgroup list needs an odd exponent greater than 1, got {0}")]
    BadSuzukiExponent(u32),
    #[error("the image threshold is defined from exponent 3 upward, got {0}")]
    ThresholdTooSmall(u32),
}

/// The four families over F₂ʳ whose orders the argument compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Sp4,
    SoPlus,
    SoMinus,
    Sz,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Sp4 => "Sp4",
            Family::SoPlus => "SO+",
            Family::SoMinus => "SO-",
            Family::Sz => "Sz",
        }
    }
}

/// A family member: the family tag together with the field exponent `r`
/// of F₂ʳ.  Suzuki groups exist only for odd `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupFamily {
    family: Family,
    r: u32,
}

impl GroupFamily {
    pub fn new(family: Family, r: u32) -> Result<GroupFamily, OrdersError> {
        if r == 0 {
            return Err(OrdersError::ZeroExponent);
        }
        if r > MAX_EXPONENT {
            return Err(OrdersError::ExponentTooLarge(r));
        }
        if family == Family::Sz && r % 2 == 0 {
            return Err(OrdersError::EvenSuzukiExponent(r));
        }
        Ok(GroupFamily { family, r })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn r(&self) -> u32 {
        self.r
    }
}

fn two_pow(k: u32) -> BigUint {
    BigUint::from(1u32) << k
}

/// 2ʳ − 1, 2ʳ + 1 and friends as big integers.
fn q_minus_1(r: u32) -> BigUint {
    two_pow(r) - 1u32
}

fn q_plus_1(r: u32) -> BigUint {
    two_pow(r) + 1u32
}

/// The order of the given family member.
///
/// |Sp₄(F₂ʳ)| = 2⁴ʳ (2ʳ−1)² (2ʳ+1)² (2²ʳ+1) and
/// |Sz(F₂ʳ)| = 2²ʳ (2ʳ−1) (2²ʳ+1) are the standard orders.  The two
/// orthogonal stabiliser orders are taken exactly as quoted in the
/// classification being reproduced — 2²ʳ⁺¹(2ʳ−1)² and
/// 2²ʳ⁺¹(2ʳ−1)(2ʳ+1) — since the argument only ever uses that they are
/// strictly smaller than |Sp₄(F₂ʳ)|.
///
/// Note: the formula gives |Sp₄(F₄)| = 979200 = 2⁸·3²·5²·17, while a
/// nearby value of 979000 is sometimes quoted; this module follows the
/// formula.
pub fn family_order(g: GroupFamily) -> BigUint {
    let r = g.r;
    match g.family {
        Family::Sp4 => {
            two_pow(4 * r)
                * q_minus_1(r).pow(2)
                * q_plus_1(r).pow(2)
                * (two_pow(2 * r) + 1u32)
        }
        Family::SoPlus => two_pow(2 * r + 1) * q_minus_1(r).pow(2),
        Family::SoMinus => two_pow(2 * r + 1) * q_minus_1(r) * q_plus_1(r),
        Family::Sz => two_pow(2 * r) * q_minus_1(r) * (two_pow(2 * r) + 1u32),
    }
}

/// One maximal subgroup of Sz(F₂ʳ), up to conjugacy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuzukiMaximal {
    /// Cyclic of order 2ʳ − 1.
    Cyclic(BigUint),
    /// The intersection with a Borel subgroup; no closed-form order is
    /// asserted for it here.
    BorelIntersection,
    /// Dihedral of order 2(2ʳ − 1).
    Dihedral(BigUint),
    /// C_{2ʳ + 2ˢ⁺¹ + 1} : C₄ with s = (r−1)/2, order 4(2ʳ + 2ˢ⁺¹ + 1).
    CyclicExtensionPlus(BigUint),
    /// C_{2ʳ − 2ˢ⁺¹ + 1} : C₄, order 4(2ʳ − 2ˢ⁺¹ + 1).
    CyclicExtensionMinus(BigUint),
    /// A subfield Suzuki group Sz(F₂^r') for a proper divisor r' of r,
    /// including Sz(F₂), the Frobenius group of order 20.
    Subfield { exponent: u32, order: BigUint },
}

impl SuzukiMaximal {
    /// The subgroup order, when one is asserted.
    pub fn order(&self) -> Option<&BigUint> {
        match self {
            SuzukiMaximal::Cyclic(n)
            | SuzukiMaximal::Dihedral(n)
            | SuzukiMaximal::CyclicExtensionPlus(n)
            | SuzukiMaximal::CyclicExtensionMinus(n)
            | SuzukiMaximal::Subfield { order: n, .. } => Some(n),
            SuzukiMaximal::BorelIntersection => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            SuzukiMaximal::Cyclic(_) => "cyclic".to_string(),
            SuzukiMaximal::BorelIntersection => "borel intersection".to_string(),
            SuzukiMaximal::Dihedral(_) => "dihedral".to_string(),
            SuzukiMaximal::CyclicExtensionPlus(_) => "cyclic-by-C4 (+)".to_string(),
            SuzukiMaximal::CyclicExtensionMinus(_) => "cyclic-by-C4 (-)".to_string(),
            SuzukiMaximal::Subfield { exponent, .. } => format!("subfield Sz(2^{exponent})"),
        }
    }
}

/// The maximal subgroups of Sz(F₂ʳ) for odd r > 1, in a fixed order:
/// cyclic, Borel intersection, dihedral, the two cyclic-by-C₄ groups,
/// then the subfield Suzuki groups by increasing exponent.
pub fn suzuki_maximal_orders(r: u32) -> Result<Vec<SuzukiMaximal>, OrdersError> {
    if r <= 1 || r % 2 == 0 {
        return Err(OrdersError::BadSuzukiExponent(r));
    }
    if r > MAX_EXPONENT {
        return Err(OrdersError::ExponentTooLarge(r));
    }
    let s = (r - 1) / 2;
    let mut list = vec![
        SuzukiMaximal::Cyclic(q_minus_1(r)),
        SuzukiMaximal::BorelIntersection,
        SuzukiMaximal::Dihedral(2u32 * q_minus_1(r)),
        SuzukiMaximal::CyclicExtensionPlus(4u32 * (two_pow(r) + two_pow(s + 1) + 1u32)),
        SuzukiMaximal::CyclicExtensionMinus(4u32 * (two_pow(r) - two_pow(s + 1) + 1u32)),
    ];
    for r_prime in 1..r {
        if r % r_prime == 0 {
            let subfield = GroupFamily::new(Family::Sz, r_prime)
                .expect("divisors of an odd number are odd");
            list.push(SuzukiMaximal::Subfield {
                exponent: r_prime,
                order: family_order(subfield),
            });
        }
    }
    Ok(list)
}

/// The smallest order among the groups that remain possible as large
/// images with field exponent at most `r_max`: Suzuki groups Sz(F₂ʳ)
/// with odd 1 < r ≤ r_max and symplectic groups Sp₄(F₂ˢ) with
/// 1 < s ≤ r_max.
pub fn min_large_image(r_max: u32) -> Result<BigUint, OrdersError> {
    if r_max < 3 {
        return Err(OrdersError::ThresholdTooSmall(r_max));
    }
    if r_max > MAX_EXPONENT {
        return Err(OrdersError::ExponentTooLarge(r_max));
    }
    let mut best: Option<BigUint> = None;
    for r in (3..=r_max).step_by(2) {
        let order = family_order(GroupFamily::new(Family::Sz, r)?);
        best = Some(match best {
            Some(b) => b.min(order),
            None => order,
        });
    }
    for s in 2..=r_max {
        let order = family_order(GroupFamily::new(Family::Sp4, s)?);
        best = Some(match best {
            Some(b) => b.min(order),
            None => order,
        });
    }
    Ok(best.expect("r_max ≥ 3 always yields candidates"))
}
