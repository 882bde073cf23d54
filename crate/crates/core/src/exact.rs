//! Exact arithmetic for certified upper bounds.
//!
//! All quantities that end up printed in a bound table pass through two
//! types: [`Rational`], an exact fraction on `i128`, and [`Decimal3`], a
//! decimal with exactly three fractional digits.  Conversions only ever
//! round *toward +∞* ([`dec_ceil`], [`pow_upper`]), so a displayed value is
//! always an upper bound for the exact one.
//!
//! Overflow policy: `Rational` never wraps.  Any intermediate that does not
//! fit `i128` panics with an explicit message; callers in this crate stay
//! far below that range.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    /// The requested power does not fit the fixed-point range of `Decimal3`.
    #[error("power {base}^{exp} overflows the decimal range")]
    PowOverflow { base: u32, exp: Decimal3 },
    /// `pow_upper` needs a base that is at least 2.
    #[error("power base must be at least 2, got {0}")]
    BaseTooSmall(u32),
    /// `pow_upper` is only defined for non-negative exponents.
    #[error("exponent must be non-negative, got {0}")]
    NegativeExponent(Decimal3),
}

/// An exact rational number with reduced `i128` numerator and denominator.
///
/// Invariants: the denominator is positive and `gcd(num, den) == 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn overflow(op: &str) -> ! {
    panic!("rational arithmetic overflow in {op}");
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Build `num/den`, reducing to lowest terms.  Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().unwrap_or_else(|| overflow("negation"));
            den = den.checked_neg().unwrap_or_else(|| overflow("negation"));
        }
        Rational { num, den }
    }

    pub fn from_integer(n: i128) -> Rational {
        Rational { num: n, den: 1 }
    }

    /// `1/n` for a positive integer `n`.
    pub fn one_over(n: u32) -> Rational {
        assert!(n > 0, "reciprocal of zero");
        Rational { num: 1, den: n as i128 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    fn mul_i128(a: i128, b: i128, op: &str) -> i128 {
        a.checked_mul(b).unwrap_or_else(|| overflow(op))
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        let num = Rational::mul_i128(self.num, rhs.den, "add")
            .checked_add(Rational::mul_i128(rhs.num, self.den, "add"))
            .unwrap_or_else(|| overflow("add"));
        Rational::new(num, Rational::mul_i128(self.den, rhs.den, "add"))
    }
}

impl std::ops::Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: self.num.checked_neg().unwrap_or_else(|| overflow("negation")),
            den: self.den,
        }
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        // Cross-reduce first so intermediates stay small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        Rational::new(
            Rational::mul_i128(self.num / g1, rhs.num / g2, "mul"),
            Rational::mul_i128(self.den / g2, rhs.den / g1, "mul"),
        )
    }
}

impl std::ops::Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.num != 0, "rational division by zero");
        self * Rational::new(rhs.den, rhs.num)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = Rational::mul_i128(self.num, other.den, "cmp");
        let rhs = Rational::mul_i128(other.num, self.den, "cmp");
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A decimal number with exactly three fractional digits, stored as an
/// integer count of thousandths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decimal3 {
    millis: i64,
}

impl Decimal3 {
    pub const ONE: Decimal3 = Decimal3 { millis: 1000 };

    pub fn from_millis(millis: i64) -> Decimal3 {
        Decimal3 { millis }
    }

    pub fn from_integer(n: i64) -> Decimal3 {
        Decimal3 { millis: n.checked_mul(1000).expect("decimal overflow") }
    }

    pub fn millis(&self) -> i64 {
        self.millis
    }

    pub fn is_integer(&self) -> bool {
        self.millis % 1000 == 0
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.millis as i128, 1000)
    }

    /// Render without trailing fractional zeros: `32.000` prints as `32`,
    /// `28.110` stays `28.110`.  Used by the bound tables, which quote
    /// integer entries bare.
    pub fn to_trimmed_string(&self) -> String {
        if self.is_integer() {
            format!("{}", self.millis / 1000)
        } else {
            format!("{self}")
        }
    }
}

impl fmt::Display for Decimal3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.millis < 0 { "-" } else { "" };
        let abs = self.millis.unsigned_abs();
        write!(f, "{sign}{}.{:03}", abs / 1000, abs % 1000)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseDecimalError {
    #[error("invalid decimal literal {0:?}")]
    Invalid(String),
    #[error("more than three fractional digits in {0:?}")]
    TooPrecise(String),
}

impl FromStr for Decimal3 {
    type Err = ParseDecimalError;

    fn from_str(s: &str) -> Result<Decimal3, ParseDecimalError> {
        let invalid = || ParseDecimalError::Invalid(s.to_owned());
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        if !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        if frac_part.len() > 3 {
            return Err(ParseDecimalError::TooPrecise(s.to_owned()));
        }
        let int: i64 = int_part.parse().map_err(|_| invalid())?;
        let mut frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| invalid())? };
        for _ in frac_part.len()..3 {
            frac *= 10;
        }
        let millis = int
            .checked_mul(1000)
            .and_then(|m| m.checked_add(frac))
            .ok_or_else(invalid)?;
        Ok(Decimal3 { millis: sign * millis })
    }
}

/// Round `x` up to `places` fractional digits (1 ≤ `places` ≤ 3) and return
/// the result on the three-digit grid.
///
/// `dec_ceil(22175/4608, 3) = 4.813`, `dec_ceil(1/3, 3) = 0.334`.
pub fn dec_ceil(x: Rational, places: u32) -> Decimal3 {
    assert!((1..=3).contains(&places), "dec_ceil supports 1..=3 places");
    let scale = 10i128.pow(places);
    let num = x
        .numerator()
        .checked_mul(scale)
        .unwrap_or_else(|| overflow("dec_ceil"));
    // den > 0, so this is ⌈num/den⌉ for either sign of num.
    let q = num
        .checked_add(x.denominator() - 1)
        .unwrap_or_else(|| overflow("dec_ceil"))
        .div_euclid(x.denominator());
    let millis = q * 10i128.pow(3 - places);
    Decimal3 { millis: i64::try_from(millis).expect("decimal overflow in dec_ceil") }
}

/// The smallest `Decimal3` (on the `places`-digit grid) that is ≥
/// `base^exp`, computed with integer arithmetic only.
///
/// Write `exp = k/1000`.  The candidate `t/10^places` is an upper bound for
/// `base^(k/1000)` exactly when `t^1000 ≥ base^k · 10^(1000·places)`, an
/// integer comparison, so no transcendental function is ever evaluated.
/// A float estimate seeds the search; the certificate is exact.
pub fn pow_upper(base: u32, exp: Decimal3, places: u32) -> Result<Decimal3, ExactError> {
    assert!((1..=3).contains(&places), "pow_upper supports 1..=3 places");
    if base < 2 {
        return Err(ExactError::BaseTooSmall(base));
    }
    if exp.millis() < 0 {
        return Err(ExactError::NegativeExponent(exp));
    }
    let k = exp.millis() as u64;
    // Coarse overflow guard: base^(k/1000) has at most k·bits(base)/1000 bits.
    let bits = (base.ilog2() as u64 + 1) * k / 1000;
    if bits > 50 {
        return Err(ExactError::PowOverflow { base, exp });
    }

    let rhs = BigUint::from(base).pow(u32::try_from(k).expect("exponent range"))
        * BigUint::from(10u32).pow(1000 * places);
    let ok = |t: i128| -> bool {
        t >= 0 && BigUint::from(t as u128).pow(1000) >= rhs
    };

    let guess = (base as f64).powf(k as f64 / 1000.0) * 10f64.powi(places as i32);
    let mut t = (guess.floor() as i128 - 2).max(0);
    if ok(t) {
        while t > 0 && ok(t - 1) {
            t -= 1;
        }
    } else {
        while !ok(t) {
            t += 1;
        }
    }
    let millis = t * 10i128.pow(3 - places);
    i64::try_from(millis)
        .map(Decimal3::from_millis)
        .map_err(|_| ExactError::PowOverflow { base, exp })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_reduces_and_normalises_sign() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert_eq!(rat(0, -7), Rational::ZERO);
        assert_eq!(rat(865, 4608).to_string(), "865/4608");
        assert_eq!(Rational::from_integer(5).to_string(), "5");
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(1, 2) - rat(1, 3), rat(1, 6));
        assert_eq!(rat(2, 3) * rat(9, 4), rat(3, 2));
        assert_eq!(rat(2, 3) / rat(4, 3), rat(1, 2));
        assert!(rat(417, 832) > rat(1, 2));
        assert!(rat(177, 176) > Rational::ONE);
        assert!(rat(-1, 2) < Rational::ZERO);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn rational_overflow_is_loud() {
        let big = Rational::new(i128::MAX / 2, 1);
        let _ = big * big;
    }

    #[test]
    fn decimal_display_and_parse() {
        assert_eq!(Decimal3::from_millis(28110).to_string(), "28.110");
        assert_eq!(Decimal3::from_millis(32000).to_string(), "32.000");
        assert_eq!(Decimal3::from_millis(32000).to_trimmed_string(), "32");
        assert_eq!(Decimal3::from_millis(4813).to_trimmed_string(), "4.813");
        assert_eq!(Decimal3::from_millis(-1500).to_string(), "-1.500");
        assert_eq!("28.110".parse::<Decimal3>().unwrap(), Decimal3::from_millis(28110));
        assert_eq!("32".parse::<Decimal3>().unwrap(), Decimal3::from_millis(32000));
        assert_eq!("2.5".parse::<Decimal3>().unwrap(), Decimal3::from_millis(2500));
        assert_eq!("-0.25".parse::<Decimal3>().unwrap(), Decimal3::from_millis(-250));
        assert!(matches!(
            "1.2345".parse::<Decimal3>(),
            Err(ParseDecimalError::TooPrecise(_))
        ));
        assert!("1.2.3".parse::<Decimal3>().is_err());
        assert!("".parse::<Decimal3>().is_err());
        assert!("12a".parse::<Decimal3>().is_err());
    }

    #[test]
    fn dec_ceil_frozen_values() {
        assert_eq!(dec_ceil(rat(22175, 4608), 3), Decimal3::from_millis(4813));
        assert_eq!(dec_ceil(rat(1, 3), 3), Decimal3::from_millis(334));
        assert_eq!(dec_ceil(rat(53, 18), 3), Decimal3::from_millis(2945));
        assert_eq!(dec_ceil(rat(167, 72), 3), Decimal3::from_millis(2320));
        assert_eq!(dec_ceil(rat(5, 1), 3), Decimal3::from_millis(5000));
        assert_eq!(dec_ceil(rat(-1, 3), 3), Decimal3::from_millis(-333));
        assert_eq!(dec_ceil(rat(1, 3), 1), Decimal3::from_millis(400));
        assert_eq!(dec_ceil(rat(1, 3), 2), Decimal3::from_millis(340));
    }

    #[test]
    fn dec_ceil_is_an_upper_bound_within_grid_step() {
        // ceil(x) ≥ x and ceil(x) − x < 10^{-places}, checked exactly.
        let samples = [
            rat(22175, 4608),
            rat(1, 3),
            rat(-7, 9),
            rat(999, 1000),
            rat(1000, 999),
            Rational::ZERO,
            rat(53, 18),
        ];
        for places in 1..=3u32 {
            let step = Rational::new(1, 10i128.pow(places));
            for &x in &samples {
                let c = dec_ceil(x, places).to_rational();
                assert!(c >= x, "ceil below input for {x}");
                assert!(c - x < step, "ceil too far above input for {x}");
            }
        }
    }

    #[test]
    fn pow_upper_frozen_values() {
        let d = Decimal3::from_millis;
        assert_eq!(pow_upper(2, d(4813), 3).unwrap(), d(28110));
        assert_eq!(pow_upper(2, d(5000), 3).unwrap(), d(32000));
        assert_eq!(pow_upper(2, d(4499), 3).unwrap(), d(22612));
        assert_eq!(pow_upper(2, d(3995), 3).unwrap(), d(15945));
        assert_eq!(pow_upper(2, d(6250), 3).unwrap(), d(76110));
        assert_eq!(pow_upper(2, d(4496), 3).unwrap(), d(22565));
        assert_eq!(pow_upper(2, d(7000), 3).unwrap(), d(128000));
        assert_eq!(pow_upper(2, d(3000), 3).unwrap(), d(8000));
        assert_eq!(pow_upper(2, d(1000), 3).unwrap(), d(2000));
        assert_eq!(pow_upper(3, d(4000), 3).unwrap(), d(81000));
        assert_eq!(pow_upper(3, d(3661), 3).unwrap(), d(55814));
        assert_eq!(pow_upper(3, d(3315), 3).unwrap(), d(38165));
        assert_eq!(pow_upper(3, d(2945), 3).unwrap(), d(25417));
        assert_eq!(pow_upper(3, d(2320), 3).unwrap(), d(12792));
        assert_eq!(pow_upper(3, d(2500), 3).unwrap(), d(15589));
        assert_eq!(pow_upper(3, d(1000), 3).unwrap(), d(3000));
    }

    #[test]
    fn pow_upper_two_stage_rounding_differs_from_fused() {
        // dec_ceil(22175/4608) = 4.813, and 2^4.813 rounds up to 28.110.
        // Rounding 2^(22175/4608) in one step would give 28.098; the
        // pipeline must round the exponent first.
        let c = dec_ceil(Rational::new(22175, 4608), 3);
        assert_eq!(pow_upper(2, c, 3).unwrap(), Decimal3::from_millis(28110));
        assert!(pow_upper(2, Decimal3::from_millis(4812), 3).unwrap() < Decimal3::from_millis(28110));
    }

    #[test]
    fn pow_upper_edges() {
        let d = Decimal3::from_millis;
        // Exponent 0 gives exactly 1.
        assert_eq!(pow_upper(2, d(0), 3).unwrap(), d(1000));
        // Exact ties land on the grid: 9^(1/2) = 3.
        assert_eq!(pow_upper(9, d(500), 3).unwrap(), d(3000));
        // Fewer places still round up: 2^0.5 = 1.41… → 1.5 at one place.
        assert_eq!(pow_upper(2, d(500), 1).unwrap(), d(1500));
        assert_eq!(pow_upper(2, d(500), 2).unwrap(), d(1420));
        assert_eq!(pow_upper(1, d(1000), 3), Err(ExactError::BaseTooSmall(1)));
        assert_eq!(
            pow_upper(2, d(-1), 3),
            Err(ExactError::NegativeExponent(d(-1)))
        );
        assert!(matches!(
            pow_upper(2, d(90_000), 3),
            Err(ExactError::PowOverflow { .. })
        ));
    }

    #[test]
    fn pow_upper_is_minimal_on_grid() {
        // For a spread of exponents, result^1000 ≥ base^k·10^3000 and
        // (result−0.001)^1000 < base^k·10^3000.
        for &(base, millis) in &[
            (2u32, 4813i64),
            (2, 1),
            (2, 999),
            (3, 2945),
            (5, 1234),
            (7, 3003),
            (10, 2000),
        ] {
            let exp = Decimal3::from_millis(millis);
            let t = pow_upper(base, exp, 3).unwrap().millis();
            let rhs = BigUint::from(base).pow(millis as u32) * BigUint::from(10u32).pow(3000);
            assert!(BigUint::from(t as u64).pow(1000) >= rhs);
            assert!(BigUint::from((t - 1) as u64).pow(1000) < rhs);
        }
    }
}
