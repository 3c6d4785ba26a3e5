//! Dense exact linear solves.

use super::scalar::Scalar;

/// Solves `A a = b` by Gaussian elimination. `A` may have more rows than
/// columns; the extra equations must be consistent. Returns `None` when the
/// system has no unique solution.
pub fn solve_linear<C: Scalar>(mut a: Vec<Vec<C>>, mut b: Vec<C>) -> Option<Vec<C>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let p = (pivot_row..rows).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][col].inv()?;
        for r in 0..rows {
            if r == pivot_row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for c in col..cols {
                if !a[pivot_row][c].is_zero() {
                    let t = a[r][c].sub(&f.mul(&a[pivot_row][c]));
                    a[r][c] = t;
                }
            }
            let t = b[r].sub(&f.mul(&b[pivot_row]));
            b[r] = t;
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if (pivot_row..rows).any(|r| !b[r].is_zero()) {
        return None;
    }
    Some(
        pivots
            .iter()
            .enumerate()
            .map(|(col, &r)| b[r].div(&a[r][col]).expect("pivot is nonzero"))
            .collect(),
    )
}
