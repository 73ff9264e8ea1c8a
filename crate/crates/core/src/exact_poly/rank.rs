use num_traits::{Signed, Zero};

use super::Rational;

/// Rank over the rationals of the matrix whose rows are `rows`. Ragged rows
/// are padded with zeros on the right.
///
/// Plain Gaussian elimination in exact arithmetic; each column pivots on its
/// entry of largest absolute value, which only affects the size of
/// intermediate fractions.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(width, Rational::zero());
            r
        })
        .collect();

    let mut rank = 0;
    for col in 0..width {
        if rank == m.len() {
            break;
        }
        let pivot = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);

        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}
