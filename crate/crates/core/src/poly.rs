//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsets::RootMultiset;
use crate::scalar::{rational_vec, Rational};

/// Coefficients in ascending degree, never with a trailing zero. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    #[serde(with = "rational_vec")]
    coeffs: Vec<Rational>,
}

impl From<UPoly> for PolyRepr {
    fn from(p: UPoly) -> Self {
        PolyRepr { coeffs: p.coeffs }
    }
}

impl TryFrom<PolyRepr> for UPoly {
    type Error = Error;
    fn try_from(r: PolyRepr) -> Result<Self> {
        Ok(UPoly::new(r.coeffs))
    }
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| crate::scalar::rat(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        UPoly { coeffs }
    }

    /// `x - a`.
    pub fn linear(a: &Rational) -> Self {
        UPoly::new(vec![-a.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, q: &UPoly) -> Result<(UPoly, UPoly)> {
        let dq = q.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead = q.coeffs[dq].clone();
        let mut rem = self.coeffs.clone();
        let Some(dp) = self.degree().filter(|&dp| dp >= dq) else {
            return Ok((UPoly::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let c = &rem[i + dq] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[i + j] -= &c * qc;
            }
            quot[i] = c;
        }
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// `self / q`, failing unless the division is exact.
    pub fn exact_div(&self, q: &UPoly) -> Result<UPoly> {
        let (quot, rem) = self.div_rem(q)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// The monic polynomial whose roots, with multiplicity, are `roots`.
    pub fn from_roots(roots: &RootMultiset) -> UPoly {
        let mut p = UPoly::one();
        for (v, mult) in roots.entries() {
            let lin = UPoly::linear(v);
            for _ in 0..*mult {
                p = &p * &lin;
            }
        }
        p
    }

    pub fn pow(&self, e: usize) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| &acc * self)
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UPoly {
            type Output = UPoly;
            fn $m(self, rhs: UPoly) -> UPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UPoly> for UPoly {
            type Output = UPoly;
            fn $m(self, rhs: &UPoly) -> UPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for UPoly {
    fn sum<I: Iterator<Item = UPoly>>(iter: I) -> UPoly {
        iter.fold(UPoly::zero(), |acc, p| acc + p)
    }
}

/// Human-readable form, highest degree first: `2*x^2 - 1/3*x + 4`.
impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
