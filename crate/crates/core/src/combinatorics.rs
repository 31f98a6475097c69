//! Subset and ordered-partition enumeration over `{1, ..., r}` together with
//! the transposition-parity signs `sg_r(R)` and `sg(R_1, ..., R_l)`.
//!
//! Index sets are 1-based and sorted ascending throughout this module.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::Sign;

/// All `k`-subsets of `{1, ..., n}` in lexicographic order.
pub fn enum_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> + Clone {
    (1..=n).combinations(k)
}

/// Binomial coefficient, zero when `p > d`.
pub fn binom(d: usize, p: usize) -> u64 {
    if p > d {
        return 0;
    }
    let p = p.min(d - p);
    (0..p).fold(1u64, |acc, i| acc * (d - i) as u64 / (i + 1) as u64)
}

fn check_sorted_within(r: usize, set: &[usize]) -> Result<()> {
    if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > r) {
        return Err(Error::IndexOutOfRange { index: bad, bound: r });
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Validation(format!("index set {set:?} is not strictly increasing")));
    }
    Ok(())
}

/// `sg_r(R) = (-1)^{sum_l (i_l - l)}`: parity of moving `R` to the front of
/// `(1, ..., r)` while keeping the relative order of everything else.
pub fn sg_set(r: usize, set: &[usize]) -> Result<Sign> {
    check_sorted_within(r, set)?;
    let e: usize = set.iter().enumerate().map(|(l, &i)| i - (l + 1)).sum();
    Ok(Sign::from_parity(e as i64))
}

/// Same sign as [`sg_set`], obtained by literally performing adjacent
/// transpositions.
pub fn sg_set_by_transpositions(r: usize, set: &[usize]) -> Result<Sign> {
    check_sorted_within(r, set)?;
    let mut seq: Vec<usize> = (1..=r).collect();
    let mut swaps = 0usize;
    for (target, &i) in set.iter().enumerate() {
        let mut pos = seq.iter().position(|&v| v == i).expect("element present");
        while pos > target {
            seq.swap(pos - 1, pos);
            pos -= 1;
            swaps += 1;
        }
    }
    Ok(Sign::from_parity(swaps as i64))
}

/// An ordered partition of `{1, ..., r}` into sorted blocks. `r = 0` admits
/// only all-empty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct IndexPartition {
    r: usize,
    blocks: Vec<Vec<usize>>,
}

impl IndexPartition {
    pub fn new(r: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; r + 1];
        for b in &blocks {
            check_sorted_within(r, b)
                .map_err(|e| Error::InvalidPartition(format!("block {b:?}: {e}")))?;
            for &i in b {
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidPartition(format!("index {i} appears twice")));
                }
            }
        }
        if let Some(miss) = (1..=r).find(|&i| !seen[i]) {
            return Err(Error::InvalidPartition(format!("index {miss} is not covered")));
        }
        Ok(IndexPartition { r, blocks })
    }

    /// The all-empty partition with `n_blocks` blocks of the empty range.
    pub fn empty(n_blocks: usize) -> Self {
        IndexPartition { r: 0, blocks: vec![Vec::new(); n_blocks] }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_len(&self, i: usize) -> usize {
        self.blocks.get(i).map_or(0, Vec::len)
    }

    pub fn is_all_empty(&self) -> bool {
        self.blocks.iter().all(Vec::is_empty)
    }

    /// Every assignment of `{1, ..., r}` to three ordered blocks (`3^r` of
    /// them), in base-3 counting order.
    pub fn all_three_block(r: usize) -> impl Iterator<Item = IndexPartition> {
        let total = 3usize.pow(r as u32);
        (0..total).map(move |mut code| {
            let mut blocks = vec![Vec::new(), Vec::new(), Vec::new()];
            for i in 1..=r {
                blocks[code % 3].push(i);
                code /= 3;
            }
            IndexPartition { r, blocks }
        })
    }
}

/// `sg(R_1, ..., R_l)`: sign of the permutation obtained by concatenating
/// the sorted blocks.
pub fn sg_partition(p: &IndexPartition) -> Sign {
    let seq: Vec<usize> = p.blocks.iter().flatten().copied().collect();
    let inversions: usize = (0..seq.len())
        .map(|i| seq[i + 1..].iter().filter(|&&v| v < seq[i]).count())
        .sum();
    Sign::from_parity(inversions as i64)
}

/// The term sign of the multiset Sylvester sum for a partition
/// `R_1 ⊔ R_2 ⊔ R_3` of `{1, ..., m'+n'-d}`:
///
/// `(-1)^{m'(m-d) + r1(n-d+r2+r3) + r2(mbar-1) + r3(m'+n'-d-1) + r2 r3} * sg(R)`.
pub fn sigma_sign(
    m: usize,
    n: usize,
    mbar: usize,
    nbar: usize,
    d: usize,
    p: &IndexPartition,
) -> Result<Sign> {
    if mbar > m || nbar > n {
        return Err(Error::Validation("distinct counts exceed lengths".into()));
    }
    let (m, n, mbar, nbar, d) = (m as i64, n as i64, mbar as i64, nbar as i64, d as i64);
    let (mp, np) = (m - mbar, n - nbar);
    let range = (mp + np - d).max(0) as usize;
    if p.blocks.len() != 3 || p.r != range {
        return Err(Error::InvalidPartition(format!(
            "expected three blocks partitioning 1..={range}, got {} blocks of 1..={}",
            p.blocks.len(),
            p.r
        )));
    }
    let (r1, r2, r3) = (p.block_len(0) as i64, p.block_len(1) as i64, p.block_len(2) as i64);
    let e = mp * (m - d)
        + r1 * (n - d + r2 + r3)
        + r2 * (mbar - 1)
        + r3 * (mp + np - d - 1)
        + r2 * r3;
    Ok(Sign::from_parity(e) * sg_partition(p))
}

/// Checks `sg_{r-s}(R~_1) sg_r(R_2) sg_r(R_3) = (-1)^{r1(r2+r3+s) + r2 r3}`
/// where `R~_1 = {i - s : i in R_1}`.
pub fn check_sign_lemma(r: usize, s: usize, p: &IndexPartition) -> Result<bool> {
    if p.blocks.len() != 3 || p.r != r {
        return Err(Error::InvalidPartition(format!("expected three blocks of 1..={r}")));
    }
    if s > r || p.blocks[0].iter().any(|&i| i <= s) {
        return Err(Error::ShiftOutOfRange { bound: r.saturating_sub(s) });
    }
    let shifted: Vec<usize> = p.blocks[0].iter().map(|&i| i - s).collect();
    let lhs = sg_set(r - s, &shifted)? * sg_set(r, &p.blocks[1])? * sg_set(r, &p.blocks[2])?;
    let (r1, r2, r3) = (p.block_len(0), p.block_len(1), p.block_len(2));
    let rhs = Sign::from_parity((r1 * (r2 + r3 + s) + r2 * r3) as i64);
    Ok(lhs == rhs)
}
