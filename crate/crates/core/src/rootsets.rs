//! Canonical multisets of rational roots and the pairwise-difference product
//! `R(X, Y) = prod_{x in X, y in Y} (x - y)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::scalar::{rational_str, Rational};

/// Distinct values in ascending order, each with a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "MultisetRepr", into = "MultisetRepr")]
pub struct RootMultiset {
    entries: Vec<(Rational, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RootRepr {
    #[serde(with = "rational_str")]
    value: Rational,
    mult: usize,
}

#[derive(Serialize, Deserialize)]
struct MultisetRepr {
    roots: Vec<RootRepr>,
}

impl From<RootMultiset> for MultisetRepr {
    fn from(m: RootMultiset) -> Self {
        MultisetRepr {
            roots: m.entries.into_iter().map(|(value, mult)| RootRepr { value, mult }).collect(),
        }
    }
}

impl TryFrom<MultisetRepr> for RootMultiset {
    type Error = Error;
    fn try_from(r: MultisetRepr) -> Result<Self> {
        RootMultiset::from_pairs(r.roots.into_iter().map(|e| (e.value, e.mult)))
    }
}

impl RootMultiset {
    pub fn empty() -> Self {
        RootMultiset { entries: Vec::new() }
    }

    /// Builds the canonical form, merging repeated values. A zero
    /// multiplicity is rejected.
    pub fn from_pairs<I: IntoIterator<Item = (Rational, usize)>>(pairs: I) -> Result<Self> {
        let mut acc: BTreeMap<Rational, usize> = BTreeMap::new();
        for (v, k) in pairs {
            if k == 0 {
                return Err(Error::Validation(format!("multiplicity of root {v} must be at least 1")));
            }
            *acc.entry(v).or_insert(0) += k;
        }
        Ok(RootMultiset { entries: acc.into_iter().collect() })
    }

    pub fn from_values<I: IntoIterator<Item = Rational>>(values: I) -> Self {
        Self::from_pairs(values.into_iter().map(|v| (v, 1))).expect("multiplicity 1 is valid")
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_values(values.iter().map(|&v| crate::scalar::rat(v)))
    }

    pub fn entries(&self) -> &[(Rational, usize)] {
        &self.entries
    }

    /// Total length counted with multiplicity (`m`).
    pub fn len(&self) -> usize {
        self.entries.iter().map(|(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct values (`m-bar`).
    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    /// `m' = m - m-bar`.
    pub fn excess_len(&self) -> usize {
        self.len() - self.distinct_len()
    }

    pub fn is_set(&self) -> bool {
        self.entries.iter().all(|(_, k)| *k == 1)
    }

    pub fn max_mult(&self) -> usize {
        self.entries.iter().map(|(_, k)| *k).max().unwrap_or(0)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.entries.binary_search_by(|(w, _)| w.cmp(v)).is_ok()
    }

    /// Every element, repeated according to its multiplicity.
    pub fn values(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.entries.iter().flat_map(|(v, k)| std::iter::repeat_n(v, *k))
    }

    pub fn distinct(&self) -> RootMultiset {
        RootMultiset { entries: self.entries.iter().map(|(v, _)| (v.clone(), 1)).collect() }
    }

    /// `A \ A-bar`: one copy fewer of every value.
    pub fn excess(&self) -> RootMultiset {
        RootMultiset {
            entries: self
                .entries
                .iter()
                .filter(|(_, k)| *k > 1)
                .map(|(v, k)| (v.clone(), k - 1))
                .collect(),
        }
    }

    /// `(A-bar, A \ A-bar)`.
    pub fn split(&self) -> (RootMultiset, RootMultiset) {
        (self.distinct(), self.excess())
    }

    /// Multiset sum.
    pub fn union(&self, other: &RootMultiset) -> RootMultiset {
        RootMultiset::from_pairs(self.entries.iter().chain(other.entries.iter()).cloned())
            .expect("entries are already valid")
    }

    /// Multiset difference; `other` must be contained in `self`.
    pub fn difference(&self, other: &RootMultiset) -> Result<RootMultiset> {
        let mut acc: BTreeMap<Rational, usize> = self.entries.iter().cloned().collect();
        for (v, k) in &other.entries {
            match acc.get_mut(v) {
                Some(have) if *have >= *k => *have -= k,
                _ => return Err(Error::Validation(format!("{v} is not contained {k} times"))),
            }
        }
        Ok(RootMultiset { entries: acc.into_iter().filter(|(_, k)| *k > 0).collect() })
    }

    /// Distinct values at the given 0-based entry positions, each once.
    pub fn select(&self, positions: &[usize]) -> RootMultiset {
        RootMultiset { entries: positions.iter().map(|&i| (self.entries[i].0.clone(), 1)).collect() }
    }

    /// Distinct values at positions not listed in `positions` (sorted).
    pub fn select_complement(&self, positions: &[usize]) -> RootMultiset {
        let mut skip = positions.iter().peekable();
        let mut entries = Vec::new();
        for (i, (v, _)) in self.entries.iter().enumerate() {
            if skip.peek() == Some(&&i) {
                skip.next();
            } else {
                entries.push((v.clone(), 1));
            }
        }
        RootMultiset { entries }
    }

    /// Multiplies every value by `lambda` (which must be nonzero).
    pub fn scaled(&self, lambda: &Rational) -> RootMultiset {
        assert!(!lambda.is_zero());
        let mut entries: Vec<_> = self.entries.iter().map(|(v, k)| (v * lambda, *k)).collect();
        entries.sort();
        RootMultiset { entries }
    }
}

/// Compact shorthand: `1:2,3/2:1`.
impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("{}");
        }
        for (i, (v, k)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:{k}")?;
        }
        Ok(())
    }
}

/// A choice of distinct values out of a set, by 0-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSelection {
    parent: RootMultiset,
    chosen: Vec<usize>,
}

impl SubsetSelection {
    /// `parent` is reduced to its distinct values.
    pub fn new(parent: &RootMultiset, chosen: Vec<usize>) -> Result<Self> {
        let parent = parent.distinct();
        if chosen.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation("subset indices must be strictly increasing".into()));
        }
        if let Some(&bad) = chosen.iter().find(|&&i| i >= parent.distinct_len()) {
            return Err(Error::IndexOutOfRange { index: bad + 1, bound: parent.distinct_len() });
        }
        Ok(SubsetSelection { parent, chosen })
    }

    pub fn indices(&self) -> &[usize] {
        &self.chosen
    }

    pub fn chosen(&self) -> RootMultiset {
        self.parent.select(&self.chosen)
    }

    pub fn rest(&self) -> RootMultiset {
        self.parent.select_complement(&self.chosen)
    }
}

/// `R(X, Y)`, with multiplicities; 1 when either side is empty.
pub fn rprod(x: &RootMultiset, y: &RootMultiset) -> Rational {
    let mut acc = Rational::one();
    for (a, ka) in x.entries() {
        for (b, kb) in y.entries() {
            let diff = a - b;
            if diff.is_zero() {
                return Rational::zero();
            }
            acc *= num_traits::pow(diff, ka * kb);
        }
    }
    acc
}

/// `R(xs, Y)` for a plain list of evaluation points.
pub fn rprod_points(xs: &[Rational], y: &RootMultiset) -> Rational {
    let mut acc = Rational::one();
    for a in xs {
        for (b, kb) in y.entries() {
            let diff = a - b;
            if diff.is_zero() {
                return Rational::zero();
            }
            acc *= num_traits::pow(diff, *kb);
        }
    }
    acc
}

/// `R(x, X)` as a polynomial in the symbol `x`.
pub fn rprod_poly(x: &RootMultiset) -> UPoly {
    UPoly::from_roots(x)
}

/// `(A-bar, A \ A-bar)`.
pub fn multiset_split(a: &RootMultiset) -> (RootMultiset, RootMultiset) {
    a.split()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn ms(pairs: &[(i64, usize)]) -> RootMultiset {
        RootMultiset::from_pairs(pairs.iter().map(|&(v, k)| (rat(v), k))).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = RootMultiset::from_pairs(vec![(rat(3), 1), (ratio(1, 2), 2), (rat(3), 2)]).unwrap();
        assert_eq!(a.entries(), &[(ratio(1, 2), 2), (rat(3), 3)]);
        assert_eq!((a.len(), a.distinct_len(), a.excess_len()), (5, 2, 3));
        assert!(RootMultiset::from_pairs(vec![(rat(1), 0)]).is_err());
        assert_eq!(a.to_string(), "1/2:2,3:3");
    }

    #[test]
    fn rprod_examples() {
        assert_eq!(rprod(&ms(&[(1, 1)]), &ms(&[(2, 1), (3, 1)])), rat(2));
        assert_eq!(rprod(&RootMultiset::empty(), &ms(&[(2, 1), (3, 1)])), rat(1));
        assert_eq!(rprod(&ms(&[(2, 1)]), &RootMultiset::empty()), rat(1));
        // (2-3)^2 from the multiplicity-weighted product.
        assert_eq!(rprod(&ms(&[(2, 2)]), &ms(&[(3, 1)])), rat(1));
        assert_eq!(rprod(&ms(&[(4, 2)]), &ms(&[(1, 3)])), rat(3i64.pow(6)));
    }

    #[test]
    fn rprod_poly_examples() {
        assert_eq!(rprod_poly(&ms(&[(1, 1), (2, 1)])), UPoly::from_ints(&[2, -3, 1]));
        assert_eq!(rprod_poly(&RootMultiset::empty()), UPoly::one());
        assert_eq!(rprod_poly(&ms(&[(0, 2)])), UPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn split_examples() {
        let (d, e) = multiset_split(&ms(&[(1, 1), (2, 2)]));
        assert_eq!((d, e), (ms(&[(1, 1), (2, 1)]), ms(&[(2, 1)])));
        let (_, e) = multiset_split(&ms(&[(1, 1), (7, 1)]));
        assert!(e.is_empty());
        let (d, e) = multiset_split(&ms(&[(5, 3)]));
        assert_eq!((d, e), (ms(&[(5, 1)]), ms(&[(5, 2)])));
    }

    #[test]
    fn difference_and_selection() {
        let b = ms(&[(1, 2), (4, 1), (6, 3)]);
        let sel = SubsetSelection::new(&b, vec![0, 2]).unwrap();
        assert_eq!(sel.chosen(), ms(&[(1, 1), (6, 1)]));
        assert_eq!(sel.rest(), ms(&[(4, 1)]));
        assert_eq!(b.difference(&sel.chosen()).unwrap(), ms(&[(1, 1), (4, 1), (6, 2)]));
        assert!(b.difference(&ms(&[(4, 2)])).is_err());
        assert!(SubsetSelection::new(&b, vec![2, 0]).is_err());
        assert!(SubsetSelection::new(&b, vec![3]).is_err());
    }

    #[test]
    fn json_schema() {
        let a = ms(&[(1, 2)]).union(&RootMultiset::from_values([ratio(3, 2)]));
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"roots":[{"value":"1","mult":2},{"value":"3/2","mult":1}]}"#);
        let back: RootMultiset = serde_json::from_str(&j).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<RootMultiset>(r#"{"roots":[{"value":"1","mult":0}]}"#).is_err());
    }
}
