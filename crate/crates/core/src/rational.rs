//! Exact rationals with a `+∞` sentinel.
//!
//! Every threshold comparison in the crate goes through this type; there is
//! no floating point anywhere on a verdict path.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rational {
    Finite(Ratio<i64>),
    Infinity,
}

impl Rational {
    /// Panics on a zero denominator; use [`Rational::try_new`] for untrusted input.
    pub fn new(num: i64, den: i64) -> Self {
        Rational::Finite(Ratio::new(num, den))
    }

    pub fn try_new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::invalid("rational with zero denominator"));
        }
        Ok(Rational::new(num, den))
    }

    pub fn integer(v: i64) -> Self {
        Rational::Finite(Ratio::from_integer(v))
    }

    pub const fn infinity() -> Self {
        Rational::Infinity
    }

    pub fn zero() -> Self {
        Rational::integer(0)
    }

    pub fn one() -> Self {
        Rational::integer(1)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Rational::Infinity)
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Rational::Finite(r) => *r.numer() > 0,
            Rational::Infinity => true,
        }
    }

    pub fn numer(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.numer()),
            Rational::Infinity => None,
        }
    }

    pub fn denom(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.denom()),
            Rational::Infinity => None,
        }
    }

    pub fn floor(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(r.floor().to_integer()),
            Rational::Infinity => None,
        }
    }

    pub fn ceil(&self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(r.ceil().to_integer()),
            Rational::Infinity => None,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    fn finite(self, op: &str) -> Ratio<i64> {
        match self {
            Rational::Finite(r) => r,
            Rational::Infinity => panic!("undefined {op} involving infinity"),
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational::integer(v as i64)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Infinity, Rational::Infinity) => Ordering::Equal,
            (Rational::Infinity, _) => Ordering::Greater,
            (_, Rational::Infinity) => Ordering::Less,
            (Rational::Finite(a), Rational::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        match (self, rhs) {
            (Rational::Finite(a), Rational::Finite(b)) => Rational::Finite(a + b),
            _ => Rational::Infinity,
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        let b = rhs.finite("subtraction");
        match self {
            Rational::Finite(a) => Rational::Finite(a - b),
            Rational::Infinity => Rational::Infinity,
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        match (self, rhs) {
            (Rational::Finite(a), Rational::Finite(b)) => Rational::Finite(a * b),
            (Rational::Infinity, x) | (x, Rational::Infinity) => {
                assert!(x.is_positive(), "undefined product of infinity and {x}");
                Rational::Infinity
            }
        }
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        let b = rhs.finite("division");
        assert!(*b.numer() != 0, "division by zero");
        match self {
            Rational::Finite(a) => Rational::Finite(a / b),
            Rational::Infinity => {
                assert!(*b.numer() > 0, "infinity divided by a non-positive value");
                Rational::Infinity
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Infinity => write!(f, "inf"),
            Rational::Finite(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Rational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `P/Q`, a bare integer `P`, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Rational::Infinity);
        }
        let bad = || Error::invalid(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                Rational::try_new(p, q)
            }
            None => s.parse::<i64>().map(Rational::integer).map_err(|_| bad()),
        }
    }
}

// Wire form: `{"num": p, "den": q}` for finite values, the string `"inf"` otherwise.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Rational::Infinity => serializer.serialize_str("inf"),
            Rational::Finite(r) => {
                let mut st = serializer.serialize_struct("Rational", 2)?;
                st.serialize_field("num", r.numer())?;
                st.serialize_field("den", r.denom())?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Pair { num: i64, den: i64 },
            Text(String),
        }
        match Wire::deserialize(deserializer)? {
            Wire::Pair { num, den } => Rational::try_new(num, den).map_err(de::Error::custom),
            Wire::Text(s) => s.parse().map_err(de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_ordering() {
        let a = Rational::new(4, 6);
        assert_eq!(a.numer(), Some(2));
        assert_eq!(a.denom(), Some(3));
        assert!(Rational::new(4, 3) < Rational::new(3, 2));
        assert!(Rational::integer(1_000_000) < Rational::infinity());
        assert_eq!(Rational::new(-2, -4), Rational::new(1, 2));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("1/4".parse::<Rational>().unwrap(), Rational::new(1, 4));
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::integer(3));
        assert_eq!("inf".parse::<Rational>().unwrap(), Rational::Infinity);
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
        assert_eq!(Rational::new(10, 4).to_string(), "5/2");
        assert_eq!(Rational::integer(7).to_string(), "7");
    }

    #[test]
    fn json_wire_form() {
        let v = serde_json::to_string(&Rational::new(4, 3)).unwrap();
        assert_eq!(v, r#"{"num":4,"den":3}"#);
        assert_eq!(serde_json::to_string(&Rational::Infinity).unwrap(), r#""inf""#);
        let back: Rational = serde_json::from_str(&v).unwrap();
        assert_eq!(back, Rational::new(4, 3));
        let inf: Rational = serde_json::from_str(r#""inf""#).unwrap();
        assert!(inf.is_infinite());
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(Rational::new(20, 3).floor(), Some(6));
        assert_eq!(Rational::new(20, 3).ceil(), Some(7));
        assert_eq!(Rational::integer(8).floor(), Some(8));
    }
}
