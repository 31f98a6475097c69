//! Confluent Schur polynomials `S_k^(R)(X) = det V_k^(R)(X) / det V(X)`,
//! evaluated as exact determinant ratios, optionally with one extra symbolic
//! simple point `x`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    det_p, det_q, vandermonde, vandermonde_confluent, vandermonde_confluent_with_x,
};
use crate::poly::UPoly;
use crate::rootsets::RootMultiset;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurSpec {
    pub k: usize,
    /// 1-based removed rows, ascending.
    pub removed: Vec<usize>,
    pub points: RootMultiset,
    pub with_x: bool,
}

impl SchurSpec {
    pub fn new(k: usize, removed: Vec<usize>, points: RootMultiset, with_x: bool) -> Result<Self> {
        let spec = SchurSpec { k, removed, points, with_x };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of columns of the rectangular Vandermonde matrix.
    pub fn columns(&self) -> usize {
        self.points.len() + usize::from(self.with_x)
    }

    fn validate(&self) -> Result<()> {
        if self.removed.len() + self.columns() != self.k {
            return Err(Error::InconsistentRemovalCount {
                k: self.k,
                removed: self.removed.len(),
                columns: self.columns(),
            });
        }
        if let Some(&bad) = self.removed.iter().find(|&&i| i == 0 || i > self.k) {
            return Err(Error::IndexOutOfRange { index: bad, bound: self.k });
        }
        if self.removed.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation("removed rows must be strictly increasing".into()));
        }
        Ok(())
    }
}

/// Numeric Schur value of a spec without the symbolic point.
pub fn schur_value(spec: &SchurSpec) -> Result<Rational> {
    spec.validate()?;
    if spec.with_x {
        return Err(Error::Validation("spec carries the symbolic point; use schur_poly_x".into()));
    }
    let r = spec.points.len();
    if r == 0 {
        return if spec.k == 0 { Ok(Rational::from_integer(1.into())) } else { Err(Error::EmptyPoints(spec.k)) };
    }
    let num = det_q(&vandermonde_confluent(spec.k, &spec.points)?.remove_rows(&spec.removed)?)?;
    if num.is_zero() {
        return Ok(num);
    }
    let den = det_q(&vandermonde_confluent(r, &spec.points)?)?;
    Ok(num / den)
}

/// Schur polynomial in the symbolic point `x`, obtained by exact polynomial
/// division of the two determinants.
pub fn schur_poly_x(spec: &SchurSpec) -> Result<UPoly> {
    spec.validate()?;
    if !spec.with_x {
        return Err(Error::Validation("spec has no symbolic point; use schur_value".into()));
    }
    let num = det_p(&vandermonde_confluent_with_x(spec.k, &spec.points)?.remove_rows(&spec.removed)?)?;
    if num.is_zero() {
        return Ok(num);
    }
    let den = det_p(&vandermonde_confluent_with_x(spec.columns(), &spec.points)?)?;
    num.exact_div(&den)
}

/// Classical bialternant ratio for a list of distinct points.
pub fn schur_classical(k: usize, removed: &[usize], points: &[Rational]) -> Result<Rational> {
    let r = points.len();
    if removed.len() + r != k {
        return Err(Error::InconsistentRemovalCount { k, removed: removed.len(), columns: r });
    }
    let num = det_q(&vandermonde(k, points)?.remove_rows(removed)?)?;
    let den = det_q(&vandermonde(r, points)?)?;
    if den.is_zero() {
        return Err(Error::MultiplicityNotOne("points"));
    }
    Ok(num / den)
}

/// Whether the confluent route agrees with the classical bialternant on a set.
pub fn schur_consistency_check(k: usize, removed: &[usize], x: &RootMultiset) -> bool {
    if !x.is_set() {
        return false;
    }
    let points: Vec<Rational> = x.values().cloned().collect();
    let confluent = SchurSpec::new(k, removed.to_vec(), x.clone(), false).and_then(|s| schur_value(&s));
    let classical = schur_classical(k, removed, &points);
    matches!((confluent, classical), (Ok(a), Ok(b)) if a == b)
}
