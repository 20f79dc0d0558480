//! Exact rationals whose denominator divides 4.
//!
//! The revised Szeged index sums products of two half-integers, so it and its
//! difference to the Szeged index are always multiples of 1/4. Storing four
//! times the value as an integer keeps every comparison exact.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {0:?} as a multiple of 1/4")]
pub struct ParseQuarterError(String);

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuarterRational {
    quadrupled: i128,
}

impl QuarterRational {
    pub const ZERO: QuarterRational = QuarterRational { quadrupled: 0 };

    pub const fn from_quarters(quarters: i128) -> Self {
        QuarterRational { quadrupled: quarters }
    }

    pub const fn from_halves(halves: i128) -> Self {
        QuarterRational { quadrupled: 2 * halves }
    }

    pub const fn from_integer(value: i128) -> Self {
        QuarterRational { quadrupled: 4 * value }
    }

    /// `(a/2) * (b/2)` for integers `a`, `b`.
    pub const fn product_of_halves(a: i128, b: i128) -> Self {
        QuarterRational { quadrupled: a * b }
    }

    /// Four times the represented value.
    pub const fn quadrupled(self) -> i128 {
        self.quadrupled
    }

    /// Numerator and positive denominator in lowest terms.
    pub fn to_fraction(self) -> (i128, i128) {
        let q = self.quadrupled;
        if q % 4 == 0 {
            (q / 4, 1)
        } else if q % 2 == 0 {
            (q / 2, 2)
        } else {
            (q, 4)
        }
    }

    pub fn is_integer(self) -> bool {
        self.quadrupled % 4 == 0
    }

    pub fn to_integer(self) -> Option<i128> {
        self.is_integer().then_some(self.quadrupled / 4)
    }

    /// Exact decimal rendering, e.g. `31.25`, `-0.5`, `3636`.
    pub fn to_decimal_string(self) -> String {
        let sign = if self.quadrupled < 0 { "-" } else { "" };
        let abs = self.quadrupled.unsigned_abs();
        let frac = match abs % 4 {
            0 => "",
            1 => ".25",
            2 => ".5",
            _ => ".75",
        };
        format!("{sign}{}{frac}", abs / 4)
    }
}

impl fmt::Display for QuarterRational {
    /// Lowest-terms `p/q`; integers render as `p/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.to_fraction();
        write!(f, "{p}/{q}")
    }
}

impl FromStr for QuarterRational {
    type Err = ParseQuarterError;

    /// Accepts `p/q` with `q` dividing 4 after reduction, plain integers, and
    /// decimals whose fractional part is one of `.0`, `.25`, `.5`, `.75`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseQuarterError(s.to_string());
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i128 = p.trim().parse().map_err(|_| err())?;
            let q: i128 = q.trim().parse().map_err(|_| err())?;
            if q <= 0 || (4 * p) % q != 0 {
                return Err(err());
            }
            return Ok(QuarterRational::from_quarters(4 * p / q));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let negative = int.starts_with('-');
            let whole: i128 = int.parse().map_err(|_| err())?;
            let quarters = match frac {
                "0" | "00" => 0,
                "25" => 1,
                "5" | "50" => 2,
                "75" => 3,
                _ => return Err(err()),
            };
            let magnitude = 4 * whole.abs() + quarters;
            return Ok(QuarterRational::from_quarters(if negative { -magnitude } else { magnitude }));
        }
        s.parse::<i128>().map(QuarterRational::from_integer).map_err(|_| err())
    }
}

impl Add for QuarterRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QuarterRational { quadrupled: self.quadrupled + rhs.quadrupled }
    }
}

impl Sub for QuarterRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        QuarterRational { quadrupled: self.quadrupled - rhs.quadrupled }
    }
}

impl Neg for QuarterRational {
    type Output = Self;
    fn neg(self) -> Self {
        QuarterRational { quadrupled: -self.quadrupled }
    }
}

impl Mul<i128> for QuarterRational {
    type Output = Self;
    fn mul(self, rhs: i128) -> Self {
        QuarterRational { quadrupled: self.quadrupled * rhs }
    }
}

impl AddAssign for QuarterRational {
    fn add_assign(&mut self, rhs: Self) {
        self.quadrupled += rhs.quadrupled;
    }
}

impl SubAssign for QuarterRational {
    fn sub_assign(&mut self, rhs: Self) {
        self.quadrupled -= rhs.quadrupled;
    }
}

impl Sum for QuarterRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(QuarterRational::ZERO, Add::add)
    }
}

impl From<u64> for QuarterRational {
    fn from(value: u64) -> Self {
        QuarterRational::from_integer(i128::from(value))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    exact: String,
    decimal: String,
}

impl Serialize for QuarterRational {
    /// `{"exact": "125/4", "decimal": "31.25"}`; never a JSON float.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Wire { exact: self.to_string(), decimal: self.to_decimal_string() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuarterRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        wire.exact.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(QuarterRational::from_quarters(125).to_string(), "125/4");
        assert_eq!(QuarterRational::from_integer(3636).to_string(), "3636/1");
        assert_eq!(QuarterRational::from_quarters(6).to_string(), "3/2");
        assert_eq!(QuarterRational::from_quarters(-3).to_string(), "-3/4");
    }

    #[test]
    fn renders_decimals() {
        assert_eq!(QuarterRational::from_quarters(125).to_decimal_string(), "31.25");
        assert_eq!(QuarterRational::from_integer(3636).to_decimal_string(), "3636");
        assert_eq!(QuarterRational::from_quarters(-2).to_decimal_string(), "-0.5");
        assert_eq!(QuarterRational::from_quarters(27).to_decimal_string(), "6.75");
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!("125/4".parse(), Ok(QuarterRational::from_quarters(125)));
        assert_eq!("6/8".parse(), Ok(QuarterRational::from_quarters(3)));
        assert_eq!("31.25".parse(), Ok(QuarterRational::from_quarters(125)));
        assert_eq!("-0.75".parse(), Ok(QuarterRational::from_quarters(-3)));
        assert_eq!("12".parse(), Ok(QuarterRational::from_integer(12)));
        assert!("1/3".parse::<QuarterRational>().is_err());
        assert!("0.1".parse::<QuarterRational>().is_err());
        assert!("1/0".parse::<QuarterRational>().is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = QuarterRational::product_of_halves(5, 5);
        assert_eq!(a.to_string(), "25/4");
        let total: QuarterRational = std::iter::repeat_n(a, 5).sum();
        assert_eq!(total - QuarterRational::from_integer(20), QuarterRational::from_quarters(45));
        assert!(QuarterRational::from_integer(6) < QuarterRational::from_quarters(27));
        assert_eq!(QuarterRational::from_halves(3) * 2, QuarterRational::from_integer(3));
    }
}
