//! Subresultants and Sylvester sums.
//!
//! [`sres_det`] is the determinant definition and serves as the oracle for
//! everything computed from roots: the double sum [`syl_double`], the single
//! sum [`syl_single`], and the multiset sum [`sylm`], which reduces to the
//! two-index sum [`sylm_bigd`] once `d >= m' + n'` and otherwise carries
//! confluent Schur factors.
//!
//! The `*_eval` functions evaluate the multivariate versions of these sums at
//! rational points; they back the exchange and interpolation identities.

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{binom, sigma_sign, IndexPartition};
use crate::error::{Error, Result};
use crate::linalg::{det_p, Matrix};
use crate::poly::UPoly;
use crate::rootsets::{rprod, rprod_points, RootMultiset, SubsetSelection};
use crate::scalar::{Rational, Sign};
use crate::schur::{schur_poly_x, schur_value, SchurSpec};

/// `0 <= d <= min(m, n)` when `m != n`, and `0 <= d < m` when `m = n`.
pub fn in_degree_window(m: usize, n: usize, d: usize) -> bool {
    if m == n {
        d < m
    } else {
        d <= m.min(n)
    }
}

pub fn check_degree_window(m: usize, n: usize, d: usize) -> Result<()> {
    if in_degree_window(m, n, d) {
        Ok(())
    } else {
        Err(Error::DegreeWindow { m, n, d })
    }
}

/// Every `d` in the degree window for `(m, n)`.
pub fn degree_window(m: usize, n: usize) -> impl Iterator<Item = usize> {
    (0..=m.min(n)).filter(move |&d| in_degree_window(m, n, d))
}

/// A validated subresultant request on coefficient-side inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SresQuery {
    pub f: UPoly,
    pub g: UPoly,
    pub d: usize,
}

impl SresQuery {
    pub fn new(f: UPoly, g: UPoly, d: usize) -> Result<Self> {
        let m = positive_degree(&f, "f")?;
        let n = positive_degree(&g, "g")?;
        check_degree_window(m, n, d)?;
        Ok(SresQuery { f, g, d })
    }

    pub fn from_roots(a: &RootMultiset, b: &RootMultiset, d: usize) -> Result<Self> {
        SresQuery::new(UPoly::from_roots(a), UPoly::from_roots(b), d)
    }

    pub fn eval(&self) -> Result<UPoly> {
        sres_det(&self.f, &self.g, self.d)
    }
}

fn positive_degree(p: &UPoly, name: &str) -> Result<usize> {
    match p.degree() {
        Some(k) if k >= 1 => Ok(k),
        _ => Err(Error::Validation(format!("{name} must have degree at least 1"))),
    }
}

/// Order-`d` subresultant as the determinant of the `(m+n-2d)`-square matrix
/// with `n-d` shifted rows of `f`, `m-d` shifted rows of `g`, and a last
/// column holding `x^{n-d-i} f` and `x^{m-d-i} g`.
pub fn sres_det(f: &UPoly, g: &UPoly, d: usize) -> Result<UPoly> {
    let m = positive_degree(f, "f")?;
    let n = positive_degree(g, "g")?;
    check_degree_window(m, n, d)?;
    let size = m + n - 2 * d;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, count) in [(f, m, n - d), (g, n, m - d)] {
        for i in 1..=count {
            let mut row: Vec<UPoly> = (1..size)
                .map(|j| {
                    let sub = deg as i64 + i as i64 - j as i64;
                    if (0..=deg as i64).contains(&sub) {
                        UPoly::constant(p.coeff(sub as usize))
                    } else {
                        UPoly::zero()
                    }
                })
                .collect();
            row.push(p.shift(count - i));
            rows.push(row);
        }
    }
    det_p(&Matrix::from_rows(rows)?)
}

fn require_set(x: &RootMultiset, name: &'static str) -> Result<()> {
    if x.is_set() {
        Ok(())
    } else {
        Err(Error::MultiplicityNotOne(name))
    }
}

/// `(chosen, rest)` for every `k`-subset of the distinct values of `x`, in
/// lexicographic order of positions.
fn splits(x: &RootMultiset, k: usize) -> impl Iterator<Item = (RootMultiset, RootMultiset)> + '_ {
    (0..x.distinct_len())
        .combinations(k)
        .map(move |pos| (x.select(&pos), x.select_complement(&pos)))
}

/// Sylvester double sum `Syl_{p,q}(A, B)(x)` for sets `A`, `B`.
pub fn syl_double(a: &RootMultiset, b: &RootMultiset, p: usize, q: usize) -> Result<UPoly> {
    require_set(a, "A")?;
    require_set(b, "B")?;
    if p > a.len() || q > b.len() {
        return Err(Error::TooFewElements { needed: p.max(q), got: a.len().min(b.len()) });
    }
    let mut acc = UPoly::zero();
    for (a1, a2) in splits(a, p) {
        let den_a = rprod(&a1, &a2);
        for (b1, b2) in splits(b, q) {
            let c = rprod(&a1, &b1) * rprod(&a2, &b2) / (&den_a * rprod(&b1, &b2));
            if c.is_zero() {
                continue;
            }
            acc = acc + UPoly::from_roots(&a1.union(&b1)).scale(&c);
        }
    }
    Ok(acc)
}

/// Coefficients `R(A2, B) / R(A1, A2)` paired with `A1`, over all splits
/// `A = A1 ⊔ A2` with `|A1| = d`.
fn single_sum_terms(
    a: &RootMultiset,
    b: &RootMultiset,
    d: usize,
) -> Result<Vec<(Rational, RootMultiset)>> {
    require_set(a, "A")?;
    if d > a.len() {
        return Err(Error::TooFewElements { needed: d, got: a.len() });
    }
    Ok(splits(a, d)
        .map(|(a1, a2)| (rprod(&a2, b) / rprod(&a1, &a2), a1))
        .filter(|(c, _)| !c.is_zero())
        .collect())
}

/// Sylvester single sum `Syl_{d,0}(A, B)(x)`; `A` must be a set.
pub fn syl_single(a: &RootMultiset, b: &RootMultiset, d: usize) -> Result<UPoly> {
    Ok(single_sum_terms(a, b, d)?
        .into_iter()
        .map(|(c, a1)| UPoly::from_roots(&a1).scale(&c))
        .sum())
}

/// The single sum with the symbol replaced by a set of variables evaluated
/// at `xs`: `sum R(A2, B) R(xs, A1) / R(A1, A2)`.
pub fn single_sum_eval(a: &RootMultiset, b: &RootMultiset, d: usize, xs: &[Rational]) -> Result<Rational> {
    Ok(single_sum_terms(a, b, d)?
        .into_iter()
        .map(|(c, a1)| c * rprod_points(xs, &a1))
        .fold(Rational::zero(), |acc, t| acc + t))
}

/// `(-1)^{d(|A|-d)} sum_{B1 ⊔ B2 = B, |B1| = d} R(A, B2) R(xs, B1) / R(B1, B2)`.
pub fn exchange_rhs_eval(a: &RootMultiset, b: &RootMultiset, d: usize, xs: &[Rational]) -> Result<Rational> {
    require_set(b, "B")?;
    if b.len() < d {
        return Err(Error::TooFewElements { needed: d, got: b.len() });
    }
    let sum = splits(b, d).fold(Rational::zero(), |acc, (b1, b2)| {
        acc + rprod(a, &b2) * rprod_points(xs, &b1) / rprod(&b1, &b2)
    });
    let e = d as i64 * (a.len() as i64 - d as i64);
    Ok(Sign::from_parity(e).apply(sum))
}

/// Right-hand side of the three-block expansion of the single sum over an
/// auxiliary set `E`:
/// `sum R(A, E3) R(E2, B) R(xs, E1) / (R(E1, E2) R(E1, E3) R(E2, E3))`
/// with `|E1| = d`, `|E2| = m - d`, `|E3| = |E| - m`.
pub fn apery_jouanolou_rhs(
    a: &RootMultiset,
    b: &RootMultiset,
    d: usize,
    e: &RootMultiset,
    xs: &[Rational],
) -> Result<Rational> {
    require_set(e, "E")?;
    let (m, n) = (a.len(), b.len());
    if d > m {
        return Err(Error::TooFewElements { needed: d, got: m });
    }
    let needed = (xs.len() + d).max(m + n - d).max(m);
    if e.len() < needed {
        return Err(Error::CardinalityTooSmall { needed, got: e.len() });
    }
    let mut acc = Rational::zero();
    for (e1, rest) in splits(e, d) {
        let r_x = rprod_points(xs, &e1);
        if r_x.is_zero() {
            continue;
        }
        for (e2, e3) in splits(&rest, m - d) {
            let num = rprod(a, &e3) * rprod(&e2, b);
            if num.is_zero() {
                continue;
            }
            let den = rprod(&e1, &e2) * rprod(&e1, &e3) * rprod(&e2, &e3);
            acc += num * &r_x / den;
        }
    }
    Ok(acc)
}

/// Symmetric Lagrange interpolation of `h` on the `(e-d)`-subsets of `E`,
/// evaluated at `xs`:
/// `sum_{E' ⊆ E, |E'| = d} h(E \ E') R(xs, E') / R(E \ E', E')`.
pub fn sym_interp_eval(
    e: &RootMultiset,
    d: usize,
    h: &dyn Fn(&[Rational]) -> Rational,
    xs: &[Rational],
) -> Result<Rational> {
    require_set(e, "E")?;
    let size = e.len();
    if d >= size {
        return Err(Error::TooFewElements { needed: d + 1, got: size });
    }
    if xs.len() != size - d {
        return Err(Error::ArityMismatch { expected: size - d, got: xs.len() });
    }
    Ok(splits(e, d).fold(Rational::zero(), |acc, (e1, rest)| {
        let node: Vec<Rational> = rest.values().cloned().collect();
        acc + h(&node) * rprod_points(xs, &e1) / rprod(&rest, &e1)
    }))
}

/// Shape parameters `(m, n, mbar, nbar, m', n')` of a multiset pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
    pub mbar: usize,
    pub nbar: usize,
    pub m_ex: usize,
    pub n_ex: usize,
}

impl Shape {
    pub fn of(a: &RootMultiset, b: &RootMultiset) -> Shape {
        Shape {
            m: a.len(),
            n: b.len(),
            mbar: a.distinct_len(),
            nbar: b.distinct_len(),
            m_ex: a.excess_len(),
            n_ex: b.excess_len(),
        }
    }

    /// Whether `d` lies in the two-index regime `d >= m' + n'`.
    pub fn is_large_d(&self, d: usize) -> bool {
        self.m_ex + self.n_ex <= d
    }
}

/// The two-index multiset sum, valid for `m' + n' <= d`:
///
/// `(-1)^{m'(m-d)} sum_{A' ⊆ Abar, |A'| = d-m'} sum_{B' ⊆ Bbar, |B'| = m'}
///  R(A\Abar, Bbar\B') R(Abar\A', B\B') R(x, A') R(x, B') / (R(A', Abar\A') R(B', Bbar\B'))`.
pub fn sylm_bigd(a: &RootMultiset, b: &RootMultiset, d: usize) -> Result<UPoly> {
    let s = Shape::of(a, b);
    check_degree_window(s.m, s.n, d)?;
    if !s.is_large_d(d) {
        return Err(Error::Validation(format!(
            "two-index formula needs d >= m'+n' = {}, got d = {d}",
            s.m_ex + s.n_ex
        )));
    }
    Ok(sylm_bigd_unchecked(a, b, d))
}

/// [`sylm_bigd`] without the range checks. Outside `d >= m' + n'` the value
/// is not a subresultant; it is exposed for the counterexample only.
pub fn sylm_bigd_unchecked(a: &RootMultiset, b: &RootMultiset, d: usize) -> UPoly {
    let s = Shape::of(a, b);
    let Some(a_size) = d.checked_sub(s.m_ex) else {
        return UPoly::zero();
    };
    let (abar, a_excess) = a.split();
    let bbar = b.distinct();
    let mut acc = UPoly::zero();
    for (a1, a2) in splits(&abar, a_size) {
        let den_a = rprod(&a1, &a2);
        for (b1, b2) in splits(&bbar, s.m_ex) {
            let b_rest = b.difference(&b1).expect("B' is drawn from Bbar");
            let c = rprod(&a_excess, &b2) * rprod(&a2, &b_rest) / (&den_a * rprod(&b1, &b2));
            if c.is_zero() {
                continue;
            }
            acc = acc + UPoly::from_roots(&a1.union(&b1)).scale(&c);
        }
    }
    Sign::from_parity((s.m_ex * (s.m - d)) as i64).apply(acc)
}

/// One summand of the multiset Sylvester sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylmTerm {
    pub partition: IndexPartition,
    pub a_prime: SubsetSelection,
    pub b_prime: SubsetSelection,
    pub sign: Sign,
    pub value: UPoly,
}

#[derive(Serialize)]
struct SylmTermJson {
    r1: Vec<usize>,
    r2: Vec<usize>,
    r3: Vec<usize>,
    a_prime: RootMultiset,
    b_prime: RootMultiset,
    sign: Sign,
    value: UPoly,
}

impl Serialize for SylmTerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SylmTermJson {
            r1: self.partition.block(0).to_vec(),
            r2: self.partition.block(1).to_vec(),
            r3: self.partition.block(2).to_vec(),
            a_prime: self.a_prime.chosen(),
            b_prime: self.b_prime.chosen(),
            sign: self.sign,
            value: self.value.clone(),
        }
        .serialize(s)
    }
}

fn size_in(v: i64, hi: usize) -> Option<usize> {
    (0..=hi as i64).contains(&v).then_some(v as usize)
}

/// Schur factor, skipping the determinants when no row is removed.
fn schur_factor(k: usize, removed: &[usize], points: &RootMultiset) -> Result<Rational> {
    if removed.is_empty() {
        return Ok(Rational::one());
    }
    schur_value(&SchurSpec::new(k, removed.to_vec(), points.clone(), false)?)
}

fn schur_factor_x(k: usize, removed: &[usize], points: &RootMultiset) -> Result<UPoly> {
    if removed.is_empty() {
        return Ok(UPoly::one());
    }
    schur_poly_x(&SchurSpec::new(k, removed.to_vec(), points.clone(), true)?)
}

/// Every summand of the multiset Sylvester sum `SylM_{d,0}(A, B)`.
///
/// The sum runs over partitions `R1 ⊔ R2 ⊔ R3` of `{1, ..., m'+n'-d}` with
/// `R1 ⊆ {m+n-2d, ..., m'+n'-d}`, `m'-d <= |R2| <= m-d`, `n'-d <= |R3| <= n-d`,
/// and over `A' ⊆ Abar`, `B' ⊆ Bbar` of sizes `|R2| + d - m'` and
/// `|R3| + min(m', d - n')`. Terms come out ordered by `(|R1|, |R2|, |R3|)`,
/// then block contents, then `A'`, then `B'`, all lexicographic.
pub fn sylm_terms(a: &RootMultiset, b: &RootMultiset, d: usize) -> Result<Vec<SylmTerm>> {
    let s = Shape::of(a, b);
    check_degree_window(s.m, s.n, d)?;
    let (m, n, di) = (s.m as i64, s.n as i64, d as i64);
    let (m_ex, n_ex) = (s.m_ex as i64, s.n_ex as i64);
    let range = (m_ex + n_ex - di).max(0) as usize;
    let (abar, a_excess) = a.split();
    let bbar = b.distinct();

    // R1 lives in {m+n-2d, ..., range}; empty whenever d < mbar + nbar.
    let r1_window: Vec<usize> = ((m + n - 2 * di).max(1) as usize..=range).collect();
    let r2_lo = (m_ex - di).max(0) as usize;
    let r3_lo = (n_ex - di).max(0) as usize;
    let schur_k = s.m + s.n - d;

    let mut terms = Vec::new();
    for r1 in 0..=r1_window.len() {
        let rest_len = range - r1;
        for r2 in r2_lo..=rest_len.min(s.m - d) {
            let r3 = rest_len - r2;
            if r3 < r3_lo || r3 > s.n - d {
                continue;
            }
            let (Some(a_size), Some(b_size)) = (
                size_in(r2 as i64 + di - m_ex, s.mbar),
                size_in(r3 as i64 + m_ex.min(di - n_ex), s.nbar),
            ) else {
                continue;
            };
            for block1 in r1_window.iter().copied().combinations(r1) {
                let rest: Vec<usize> = (1..=range).filter(|i| !block1.contains(i)).collect();
                let shifted: Vec<usize> =
                    block1.iter().map(|&i| i - (s.m + s.n - 2 * d - 1)).collect();
                for block2 in rest.iter().copied().combinations(r2) {
                    let block3: Vec<usize> =
                        rest.iter().copied().filter(|i| !block2.contains(i)).collect();
                    let partition =
                        IndexPartition::new(range, vec![block1.clone(), block2.clone(), block3.clone()])?;
                    let sign = sigma_sign(s.m, s.n, s.mbar, s.nbar, d, &partition)?;
                    for a_pos in (0..s.mbar).combinations(a_size) {
                        let a_sel = SubsetSelection::new(&abar, a_pos)?;
                        let (a1, a2) = (a_sel.chosen(), a_sel.rest());
                        let den_a = rprod(&a1, &a2);
                        for b_pos in (0..s.nbar).combinations(b_size) {
                            let b_sel = SubsetSelection::new(&bbar, b_pos)?;
                            let (b1, b2) = (b_sel.chosen(), b_sel.rest());
                            let b_rest = b.difference(&b1)?;
                            let c = rprod(&a_excess, &b2) * rprod(&a2, &b_rest)
                                / (&den_a * rprod(&b1, &b2));
                            let value = if c.is_zero() {
                                UPoly::zero()
                            } else {
                                let primes = a1.union(&b1);
                                let s2 = schur_factor(schur_k, &block2, &a2.union(b))?;
                                let s3 = schur_factor(schur_k, &block3, &a.union(&b2))?;
                                let s1 = schur_factor_x(d + 1, &shifted, &primes)?;
                                let scalar = sign.apply(c * s2 * s3);
                                (&UPoly::from_roots(&primes) * &s1).scale(&scalar)
                            };
                            terms.push(SylmTerm {
                                partition: partition.clone(),
                                a_prime: a_sel.clone(),
                                b_prime: b_sel,
                                sign,
                                value,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(terms)
}

/// The multiset Sylvester sum `SylM_{d,0}(A, B)(x)`. For monic `f`, `g` with
/// root multisets `A`, `B`, `Sres_d(f, g) = (-1)^{d(m-d)} SylM_{d,0}(A, B)`.
pub fn sylm(a: &RootMultiset, b: &RootMultiset, d: usize) -> Result<UPoly> {
    Ok(sylm_terms(a, b, d)?.into_iter().map(|t| t.value).sum())
}

/// `(-1)^{d(m-d)}`, the sign relating root-side sums to `Sres_d`.
pub fn sres_sign(m: usize, d: usize) -> Sign {
    Sign::from_parity((d * (m - d)) as i64)
}

/// Integer factor `C(d, p)` as a rational.
pub fn binom_q(d: usize, p: usize) -> Rational {
    Rational::from_integer(binom(d, p).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn set(v: &[i64]) -> RootMultiset {
        RootMultiset::from_ints(v)
    }

    fn ms(pairs: &[(i64, usize)]) -> RootMultiset {
        RootMultiset::from_pairs(pairs.iter().map(|&(v, k)| (rat(v), k))).unwrap()
    }

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn window() {
        assert!(in_degree_window(3, 2, 2));
        assert!(!in_degree_window(3, 2, 3));
        assert!(!in_degree_window(3, 3, 3));
        assert!(in_degree_window(3, 3, 2));
        assert_eq!(degree_window(4, 4).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(degree_window(2, 5).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn sres_examples() {
        let f = p(&[2, -3, 1]);
        let g = p(&[6, -5, 1]);
        // [[1, f], [1, g]]
        assert_eq!(sres_det(&f, &g, 1).unwrap(), p(&[4, -2]));
        assert_eq!(sres_det(&f, &g, 1).unwrap(), &g - &f);
        let f3 = UPoly::from_roots(&set(&[1, 4, -2]));
        assert_eq!(sres_det(&f3, &g, 2).unwrap(), g);
        let f = UPoly::from_roots(&ms(&[(0, 1), (1, 2)]));
        let g = UPoly::from_roots(&ms(&[(2, 3)]));
        assert_eq!(sres_det(&f, &g, 2).unwrap(), &g - &f);
        assert_eq!(sres_det(&f, &g, 3), Err(Error::DegreeWindow { m: 3, n: 3, d: 3 }));
    }

    #[test]
    fn sres_zero_is_resultant() {
        let a = set(&[1, -2, 3]);
        let b = set(&[5, 7]);
        let r = sres_det(&UPoly::from_roots(&a), &UPoly::from_roots(&b), 0).unwrap();
        assert_eq!(r, UPoly::constant(rprod(&a, &b)));
    }

    #[test]
    fn sres_non_monic() {
        // Sres_0 of 2x-2 and 3x-9 is det [[2,-2],[3,-9]] = -12.
        let r = sres_det(&p(&[-2, 2]), &p(&[-9, 3]), 0).unwrap();
        assert_eq!(r, UPoly::constant(rat(-12)));
    }

    #[test]
    fn single_examples() {
        let a = set(&[1, 2]);
        let b = set(&[2, 3]);
        assert_eq!(syl_single(&a, &b, 1).unwrap(), p(&[-4, 2]));
        assert_eq!(syl_single(&a, &b, 2).unwrap(), UPoly::from_roots(&a));
        let b2 = set(&[5, 9]);
        assert_eq!(syl_single(&a, &b2, 0).unwrap(), UPoly::constant(rprod(&a, &b2)));
        assert_eq!(syl_single(&ms(&[(1, 2)]), &b, 1), Err(Error::MultiplicityNotOne("A")));
    }

    #[test]
    fn double_examples() {
        let a = set(&[1, 2]);
        let b = set(&[2, 3]);
        assert_eq!(syl_double(&a, &b, 0, 0).unwrap(), UPoly::constant(rprod(&a, &b)));
        assert_eq!(syl_double(&a, &b, 1, 0).unwrap(), p(&[-4, 2]));
        // p=0, q=1, m=2, d=1: (-1)^{1*(2-1)} C(1,0) Syl_{1,0}.
        let b = set(&[3]);
        let lhs = syl_double(&a, &b, 0, 1).unwrap();
        assert_eq!(lhs, -syl_single(&a, &b, 1).unwrap());
        assert_eq!(syl_double(&a, &ms(&[(3, 2)]), 0, 1), Err(Error::MultiplicityNotOne("B")));
    }

    #[test]
    fn single_sum_eval_matches_univariate() {
        let a = set(&[1, 3, 4]);
        let b = set(&[-1, 2]);
        let u = syl_single(&a, &b, 2).unwrap();
        for t in [-3, 0, 5] {
            assert_eq!(single_sum_eval(&a, &b, 2, &[rat(t)]).unwrap(), u.eval(&rat(t)));
        }
    }

    #[test]
    fn exchange_examples() {
        let a = set(&[1, 2, 3]);
        let b = set(&[5]);
        assert_eq!(exchange_rhs_eval(&a, &b, 0, &[]).unwrap(), rprod(&a, &b));
        // B={b}, d=1: (-1)^{|A|-1} R(xs, {b}).
        let xs = [rat(4), rat(7)];
        assert_eq!(exchange_rhs_eval(&a, &b, 1, &xs).unwrap(), rat((4 - 5) * (7 - 5)));
        assert_eq!(
            single_sum_eval(&a, &b, 1, &xs).unwrap(),
            exchange_rhs_eval(&a, &b, 1, &xs).unwrap()
        );
        assert!(matches!(exchange_rhs_eval(&a, &b, 2, &[]), Err(Error::TooFewElements { .. })));
    }

    #[test]
    fn single_sum_vanishes_when_b_small() {
        // |B| = 1 < d = 2 <= |A| = 4, |xs| <= 4 + 1 - 4 = 1.
        let a = set(&[1, 2, 6, -3]);
        let b = set(&[10]);
        for t in [0, 3, 11] {
            assert_eq!(single_sum_eval(&a, &b, 2, &[rat(t)]).unwrap(), rat(0));
        }
    }

    #[test]
    fn apery_jouanolou_examples() {
        let a = set(&[1, 2]);
        let b = set(&[3, 4]);
        let e = set(&[10, 11, 12]);
        let xs = [rat(6)];
        assert_eq!(
            apery_jouanolou_rhs(&a, &b, 1, &e, &xs).unwrap(),
            single_sum_eval(&a, &b, 1, &xs).unwrap()
        );
        let e4 = set(&[10, 11, 12, 13]);
        assert_eq!(apery_jouanolou_rhs(&a, &b, 0, &e4, &[]).unwrap(), rprod(&a, &b));
        assert!(matches!(
            apery_jouanolou_rhs(&a, &b, 0, &e, &[]),
            Err(Error::CardinalityTooSmall { needed: 4, got: 3 })
        ));
        // |E| = m+n-d with one variable gives (-1)^{d(m-d)} Sres_d.
        let sres = sres_det(&UPoly::from_roots(&a), &UPoly::from_roots(&b), 1).unwrap();
        assert_eq!(
            apery_jouanolou_rhs(&a, &b, 1, &e, &xs).unwrap(),
            sres_sign(2, 1).apply(sres.eval(&xs[0]))
        );
    }

    #[test]
    fn interpolation_examples() {
        let e = set(&[1, 2, 4, 7]);
        let one = |_: &[Rational]| rat(1);
        assert_eq!(sym_interp_eval(&e, 2, &one, &[rat(3), rat(-5)]).unwrap(), rat(1));
        let e1 = |v: &[Rational]| v.iter().fold(rat(0), |a, x| a + x);
        let xs = [rat(3), rat(-5), rat(9)];
        assert_eq!(sym_interp_eval(&e, 1, &e1, &xs).unwrap(), rat(7));
        assert_eq!(sym_interp_eval(&e, 0, &one, &vec![rat(0); 4]).unwrap(), rat(1));
        assert!(matches!(sym_interp_eval(&e, 1, &one, &[]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn sylm_on_sets_is_single_sum() {
        let a = set(&[1, 2, 5]);
        let b = set(&[-1, 3]);
        for d in 0..=2 {
            assert_eq!(sylm(&a, &b, d).unwrap(), syl_single(&a, &b, d).unwrap());
        }
    }

    #[test]
    fn sylm_example_large_d() {
        // alpha1 = 0, alpha2 = 1, beta1 = 2: SylM_{2,0} = g.
        let a = ms(&[(0, 1), (1, 2)]);
        let b = ms(&[(2, 2)]);
        let g = UPoly::from_roots(&b);
        assert_eq!(sylm(&a, &b, 2).unwrap(), g);
        assert_eq!(sylm_bigd(&a, &b, 2).unwrap(), g);
        let terms = sylm_terms(&a, &b, 2).unwrap();
        assert!(terms.iter().all(|t| t.partition.is_all_empty()));
    }

    #[test]
    fn sylm_example_small_d() {
        let a = ms(&[(0, 1), (1, 2)]);
        let b = ms(&[(2, 3)]);
        let f = UPoly::from_roots(&a);
        let g = UPoly::from_roots(&b);
        assert_eq!(sylm(&a, &b, 2).unwrap(), &g - &f);
        assert!(sylm_bigd(&a, &b, 2).is_err());
        let forced = sylm_bigd_unchecked(&a, &b, 2);
        assert!(forced.div_rem(&UPoly::linear(&rat(2))).unwrap().1.is_zero());
        assert_ne!(forced, &g - &f);
    }

    #[test]
    fn sylm_matches_sres_small_cases() {
        let cases = [
            (ms(&[(1, 2)]), ms(&[(3, 2)])),
            (ms(&[(0, 3)]), ms(&[(1, 1), (2, 1)])),
            (ms(&[(1, 1), (2, 2)]), ms(&[(2, 1), (5, 3)])),
            (ms(&[(4, 4)]), ms(&[(4, 1), (-1, 2)])),
        ];
        for (a, b) in cases {
            let f = UPoly::from_roots(&a);
            let g = UPoly::from_roots(&b);
            for d in degree_window(a.len(), b.len()) {
                let want = sres_det(&f, &g, d).unwrap();
                let got = sres_sign(a.len(), d).apply(sylm(&a, &b, d).unwrap());
                assert_eq!(got, want, "A={a} B={b} d={d}");
            }
        }
    }
}
