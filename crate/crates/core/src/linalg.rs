//! Exact determinants over the rationals and over `Q[x]`, plus regular and
//! confluent Vandermonde builders.
//!
//! Row and column indices exposed through `remove_rows` are 1-based.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::rootsets::RootMultiset;
use crate::scalar::Rational;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatrixQ = Matrix<Rational>;
pub type MatrixP = Matrix<UPoly>;

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Validation("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based access.
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Drops the (1-based, sorted) rows in `removed`; the result must be square.
    pub fn remove_rows(&self, removed: &[usize]) -> Result<Self> {
        if let Some(&bad) = removed.iter().find(|&&i| i == 0 || i > self.rows) {
            return Err(Error::IndexOutOfRange { index: bad, bound: self.rows });
        }
        if removed.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation("removed rows must be strictly increasing".into()));
        }
        if self.rows - removed.len() != self.cols {
            return Err(Error::NotSquareAfterRemoval {
                rows: self.rows,
                cols: self.cols,
                removed: removed.len(),
            });
        }
        let mut data = Vec::with_capacity(self.cols * self.cols);
        for i in 0..self.rows {
            if removed.binary_search(&(i + 1)).is_err() {
                data.extend_from_slice(self.row(i));
            }
        }
        Ok(Matrix { rows: self.cols, cols: self.cols, data })
    }

    /// Drops one row and one column (0-based).
    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                data.push(self.at(i, j).clone());
            }
        }
        Matrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }
}

impl MatrixQ {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| crate::scalar::rat(v)).collect()).collect(),
        )
        .expect("rectangular literal")
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators; the scalings are divided
/// back out at the end.
pub fn det_q(m: &MatrixQ) -> Result<Rational> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let l = row.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
        a.push(row.iter().map(|v| v.numer() * (&l / v.denom())).collect());
        scale *= l;
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    Ok(if negate { -det } else { det })
}

/// Textbook cofactor expansion over the rationals; exponential, test-sized
/// matrices only.
pub fn det_q_cofactor(m: &MatrixQ) -> Result<Rational> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    if m.rows == 0 {
        return Ok(Rational::one());
    }
    let mut acc = Rational::zero();
    for j in 0..m.cols {
        if m.at(0, j).is_zero() {
            continue;
        }
        let t = m.at(0, j) * det_q_cofactor(&m.minor(0, j))?;
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    Ok(acc)
}

/// Determinant of a polynomial matrix in which at most one column holds
/// nonconstant entries: cofactor expansion along that column, each minor
/// evaluated by [`det_q`].
pub fn det_p(m: &MatrixP) -> Result<UPoly> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let poly_cols: Vec<usize> =
        (0..n).filter(|&j| (0..n).any(|i| !m.at(i, j).is_constant())).collect();
    if poly_cols.len() > 1 {
        return Err(Error::MultiplePolyColumns);
    }
    let project = |mm: &MatrixP| -> MatrixQ {
        Matrix::from_fn(mm.rows, mm.cols, |i, j| mm.at(i, j).coeff(0))
    };
    let Some(&col) = poly_cols.first() else {
        return Ok(UPoly::constant(det_q(&project(m))?));
    };
    let mut acc = UPoly::zero();
    for i in 0..n {
        let entry = m.at(i, col);
        if entry.is_zero() {
            continue;
        }
        let minor = det_q(&project(&m.minor(i, col)))?;
        if minor.is_zero() {
            continue;
        }
        let c = if (i + col) % 2 == 0 { minor } else { -minor };
        acc = acc + entry.scale(&c);
    }
    Ok(acc)
}

/// `e (e-1) ... (e-c+1) v^(e-c)`: the `c`-th derivative column entry for a
/// row carrying exponent `e`, without the `1/c!` normalization.
fn derivative_entry(e: usize, c: usize, v: &Rational) -> Rational {
    if c > e {
        return Rational::zero();
    }
    let falling: u64 = ((e - c + 1)..=e).map(|t| t as u64).product();
    Rational::from_integer(BigInt::from(falling)) * num_traits::pow(v.clone(), e - c)
}

/// `k x r` confluent Vandermonde matrix: one block of successive derivative
/// columns per distinct value, in canonical (ascending) value order. Row `t`
/// carries exponent `k - t`.
pub fn vandermonde_confluent(k: usize, x: &RootMultiset) -> Result<MatrixQ> {
    let r = x.len();
    if k < r {
        return Err(Error::TooManyColumns { rows: k, cols: r });
    }
    let cols: Vec<(&Rational, usize)> =
        x.entries().iter().flat_map(|(v, mult)| (0..*mult).map(move |c| (v, c))).collect();
    Ok(Matrix::from_fn(k, r, |t, j| {
        let (v, c) = cols[j];
        derivative_entry(k - 1 - t, c, v)
    }))
}

/// The confluent matrix of `x` with one extra trailing column of monomials
/// `x^{k-1}, ..., x, 1` in the symbol `x`.
pub fn vandermonde_confluent_with_x(k: usize, x: &RootMultiset) -> Result<MatrixP> {
    let r = x.len();
    if k < r + 1 {
        return Err(Error::TooManyColumns { rows: k, cols: r + 1 });
    }
    let base = vandermonde_confluent(k, x)?;
    Ok(Matrix::from_fn(k, r + 1, |t, j| {
        if j < r {
            UPoly::constant(base.at(t, j).clone())
        } else {
            UPoly::monomial(k - 1 - t)
        }
    }))
}

/// Plain `k x r` Vandermonde matrix of the listed points, row `t` holding
/// `p^{k-t}`.
pub fn vandermonde(k: usize, points: &[Rational]) -> Result<MatrixQ> {
    if k < points.len() {
        return Err(Error::TooManyColumns { rows: k, cols: points.len() });
    }
    Ok(Matrix::from_fn(k, points.len(), |t, j| num_traits::pow(points[j].clone(), k - 1 - t)))
}

/// `prod_{i<j} (p_i - p_j)`.
pub fn vandermonde_product(points: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            acc *= &points[i] - &points[j];
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn det_q_examples() {
        assert_eq!(det_q(&MatrixQ::identity(3)).unwrap(), rat(1));
        assert_eq!(det_q(&MatrixQ::from_ints(&[&[1, 2], &[3, 4]])).unwrap(), rat(-2));
        let v = vandermonde(3, &[rat(1), rat(2), rat(3)]).unwrap();
        assert_eq!(det_q(&v).unwrap(), rat(-2));
        assert_eq!(vandermonde_product(&[rat(1), rat(2), rat(3)]), rat(-2));
        let rect = MatrixQ::from_ints(&[&[1, 2]]);
        assert!(matches!(det_q(&rect), Err(Error::NotSquare { rows: 1, cols: 2 })));
    }

    #[test]
    fn det_q_needs_pivoting_and_fractions() {
        let m = Matrix::from_rows(vec![
            vec![rat(0), ratio(1, 2), rat(3)],
            vec![ratio(2, 3), rat(0), rat(-1)],
            vec![rat(5), ratio(-7, 4), rat(0)],
        ])
        .unwrap();
        assert_eq!(det_q(&m).unwrap(), det_q_cofactor(&m).unwrap());
        let singular = MatrixQ::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 5]]);
        assert_eq!(det_q(&singular).unwrap(), rat(0));
    }

    #[test]
    fn det_p_examples() {
        let f = UPoly::from_ints(&[2, -3, 1]);
        let g = UPoly::from_ints(&[6, -5, 1]);
        let m = Matrix::from_rows(vec![vec![UPoly::one(), f.clone()], vec![UPoly::one(), g.clone()]])
            .unwrap();
        assert_eq!(det_p(&m).unwrap(), &g - &f);
        let diag = Matrix::from_fn(3, 3, |i, j| {
            if i == j {
                UPoly::constant(rat(i as i64 + 2))
            } else {
                UPoly::zero()
            }
        });
        assert_eq!(det_p(&diag).unwrap(), UPoly::constant(rat(24)));
        let single = Matrix::from_rows(vec![vec![f.clone()]]).unwrap();
        assert_eq!(det_p(&single).unwrap(), f);
        let two = Matrix::from_rows(vec![vec![f.clone(), UPoly::one()], vec![UPoly::one(), g]])
            .unwrap();
        assert_eq!(det_p(&two), Err(Error::MultiplePolyColumns));
    }

    #[test]
    fn confluent_examples() {
        let (a, b) = (rat(3), rat(-2));
        let m = vandermonde_confluent(2, &RootMultiset::from_values([a.clone(), b.clone()])).unwrap();
        assert_eq!(m, Matrix::from_rows(vec![vec![b.clone(), a.clone()], vec![rat(1), rat(1)]]).unwrap());
        let a2 = RootMultiset::from_pairs([(rat(7), 2)]).unwrap();
        let m = vandermonde_confluent(3, &a2).unwrap();
        assert_eq!(m, MatrixQ::from_ints(&[&[49, 14], &[7, 1], &[1, 0]]));
        let z = vandermonde_confluent(3, &RootMultiset::from_ints(&[0])).unwrap();
        assert_eq!(z, MatrixQ::from_ints(&[&[0], &[0], &[1]]));
        assert!(matches!(vandermonde_confluent(1, &a2), Err(Error::TooManyColumns { .. })));
    }

    #[test]
    fn confluent_with_x_examples() {
        let m = vandermonde_confluent_with_x(2, &RootMultiset::empty()).unwrap();
        assert_eq!(m.cols(), 1);
        assert_eq!((m.at(0, 0), m.at(1, 0)), (&UPoly::monomial(1), &UPoly::one()));
        let m = vandermonde_confluent_with_x(3, &RootMultiset::from_ints(&[5])).unwrap();
        let col0: Vec<_> = (0..3).map(|i| m.at(i, 0).clone()).collect();
        let col1: Vec<_> = (0..3).map(|i| m.at(i, 1).clone()).collect();
        assert_eq!(col0, vec![UPoly::from_ints(&[25]), UPoly::from_ints(&[5]), UPoly::one()]);
        assert_eq!(col1, vec![UPoly::monomial(2), UPoly::monomial(1), UPoly::one()]);
        let m = vandermonde_confluent_with_x(3, &RootMultiset::from_pairs([(rat(2), 2)]).unwrap())
            .unwrap();
        let block: Vec<Vec<_>> = (0..3).map(|i| vec![m.at(i, 0).coeff(0), m.at(i, 1).coeff(0)]).collect();
        assert_eq!(block, vec![vec![rat(4), rat(4)], vec![rat(2), rat(1)], vec![rat(1), rat(0)]]);
        assert_eq!(m.at(0, 2), &UPoly::monomial(2));
        assert!(vandermonde_confluent_with_x(2, &RootMultiset::from_ints(&[1, 2])).is_err());
    }

    #[test]
    fn remove_rows_examples() {
        let m = MatrixQ::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.remove_rows(&[]).unwrap(), m);
        let v = vandermonde(3, &[rat(2), rat(5)]).unwrap();
        assert_eq!(v.remove_rows(&[1]).unwrap(), MatrixQ::from_ints(&[&[2, 5], &[1, 1]]));
        let tall = MatrixQ::from_ints(&[&[1, 2], &[3, 4], &[5, 6], &[7, 8]]);
        assert_eq!(tall.remove_rows(&[1, 3]).unwrap(), MatrixQ::from_ints(&[&[3, 4], &[7, 8]]));
        assert!(matches!(tall.remove_rows(&[5, 1]), Err(Error::IndexOutOfRange { index: 5, .. })));
        assert!(matches!(tall.remove_rows(&[1]), Err(Error::NotSquareAfterRemoval { .. })));
    }

    #[test]
    fn confluent_square_is_invertible_for_distinct_points() {
        let x = RootMultiset::from_pairs([(rat(-1), 2), (rat(2), 3), (ratio(1, 2), 1)]).unwrap();
        let v = vandermonde_confluent(x.len(), &x).unwrap();
        assert_ne!(det_q(&v).unwrap(), rat(0));
    }
}
