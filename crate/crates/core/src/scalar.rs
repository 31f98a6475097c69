//! The ground field: arbitrary-precision rationals, plus the `±1` sign type
//! used by every alternating formula.
//!
//! `Rational` is an alias for `num_rational::BigRational`, which already keeps
//! values in lowest terms with a positive denominator. Code outside this module
//! only relies on field operations, `parse_rational` and `Display`.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`, reducing to lowest terms. `offset` is added to
/// error positions so callers can report columns within a larger input.
pub fn parse_rational_at(text: &str, offset: usize) -> Result<Rational> {
    let t = text.trim();
    let lead = offset + (text.len() - text.trim_start().len());
    if t.is_empty() {
        return Err(Error::Parse { pos: lead, msg: "expected a rational, found nothing".into() });
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some((d.trim(), t.find('/').unwrap() + 1))),
        None => (t, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse { pos: lead, msg: format!("`{num}` is not an integer") })?;
    match den {
        None => Ok(Rational::from_integer(n)),
        Some((d, at)) => {
            let d: BigInt = d.parse().map_err(|_| Error::Parse {
                pos: lead + at,
                msg: format!("`{d}` is not an integer"),
            })?;
            if d.is_zero() {
                return Err(Error::Validation(format!("zero denominator in `{t}`")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    parse_rational_at(text, 0)
}

/// Serde adapter storing a rational as its `"p/q"` string.
pub mod rational_str {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = RationalRepr::deserialize(d)?;
        match raw {
            RationalRepr::Text(t) => parse_rational(&t).map_err(de::Error::custom),
            RationalRepr::Int(i) => Ok(rat(i)),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum RationalRepr {
        Text(String),
        Int(i64),
    }
}

/// Serde adapter for a sequence of rationals.
pub mod rational_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "rational_str")] Rational);

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| Wrap(r.clone())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        Ok(Vec::<Wrap>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^e`.
    pub fn from_parity(e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply<T: Neg<Output = T>>(self, v: T) -> T {
        match self {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }

    pub fn to_rational(self) -> Rational {
        self.apply(Rational::one())
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(ratio(3, -6).to_string(), "-1/2");
        assert_eq!(rat(4).to_string(), "4");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_rational("1/0"), Err(Error::Validation(_))));
        assert!(matches!(parse_rational("abc"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_rational_at("1/x", 10), Err(Error::Parse { pos: 12, .. })));
        assert!(matches!(parse_rational(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn exact_cancellation() {
        let a = ratio(1, 3);
        let b = ratio(-22, 7);
        assert_eq!((&a + &b) - &b, a);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::from_parity(-3), Sign::Minus);
        assert_eq!(Sign::from_parity(4), Sign::Plus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus.apply(rat(5)), rat(-5));
    }
}
