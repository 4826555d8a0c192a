//! Rank and proportionality over field backends. Gated on the backend
//! having both inverses; callers check capabilities before entering.

use crate::scalar::Scalar;

fn sub<S: Scalar>(x: &S, y: &S) -> S {
    x.add(&y.neg().expect("field backend"))
}

/// Row rank by Gaussian elimination. Rows are slices of equal width.
/// Pivoting is by first non-(approx-)zero entry, so the inexact backend is
/// served as well as the exact ones at desk scale.
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(pivot_row) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot_row);
        let inv = m[r][col].inv().expect("nonzero in a field");
        for cell in &mut m[r] {
            *cell = cell.mul(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (cell, p) in m[i].iter_mut().zip(&pivot_row) {
                    *cell = sub(cell, &factor.mul(p));
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// If `y = x . s` for some scalar `s`, return it. Requires a field; the
/// zero vector is proportional to anything with `s = 0`.
pub fn proportional_factor<S: Scalar>(x: &[S], y: &[S]) -> Option<S> {
    debug_assert_eq!(x.len(), y.len());
    if y.iter().all(S::is_zero) {
        return Some(S::zero());
    }
    let k = x.iter().position(|v| !v.is_zero())?;
    let s = y[k].mul(&x[k].inv()?);
    for (xi, yi) in x.iter().zip(y) {
        if !xi.mul(&s).approx_eq(yi) {
            return None;
        }
    }
    Some(s)
}
