//! Polynomial identity checking by exhaustive grid evaluation.
//!
//! Two polynomials in `k` variables whose degree in each variable is at most
//! `deg` are equal iff they agree on a product grid with `deg + 1` distinct
//! points per variable.

use crate::scalar::{rat, Rational};

pub type Evaluator<'a> = dyn Fn(&[Rational]) -> Rational + 'a;

/// `count` integers `0, 1, 2, ...`, skipping anything in `avoid`.
pub fn grid_points(count: usize, avoid: &[Rational]) -> Vec<Rational> {
    (0..)
        .map(rat)
        .filter(|p| !avoid.contains(p))
        .take(count)
        .collect()
}

/// First grid point where `lhs` and `rhs` differ, if any.
pub fn grid_find_mismatch(
    lhs: &Evaluator<'_>,
    rhs: &Evaluator<'_>,
    nvars: usize,
    per_var_degree: usize,
    avoid: &[Rational],
) -> Option<Vec<Rational>> {
    let axis = grid_points(per_var_degree + 1, avoid);
    let mut idx = vec![0usize; nvars];
    loop {
        let point: Vec<Rational> = idx.iter().map(|&i| axis[i].clone()).collect();
        if lhs(&point) != rhs(&point) {
            return Some(point);
        }
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == nvars {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < axis.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

pub fn grid_check_identity(
    lhs: &Evaluator<'_>,
    rhs: &Evaluator<'_>,
    nvars: usize,
    per_var_degree: usize,
    avoid: &[Rational],
) -> bool {
    grid_find_mismatch(lhs, rhs, nvars, per_var_degree, avoid).is_none()
}
