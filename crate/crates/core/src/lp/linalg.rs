//! Dense exact Gaussian elimination.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
///
/// `width` limits pivoting to the first `width` columns so that an augmented
/// right-hand side is carried along but never pivoted on.
pub fn rref(rows: &mut [Vec<Rational>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    rref(&mut m, width).len()
}

/// Outcome of solving `M x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Consistent with free directions left.
    Underdetermined,
    Inconsistent,
}

/// Solves `rows · x = rhs` for `width` unknowns.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational], width: usize) -> Solution {
    let mut aug: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug, width);
    if aug[pivots.len()..].iter().any(|r| !r[width].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < width {
        return Solution::Underdetermined;
    }
    let mut x = vec![Rational::zero(); width];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][width].clone();
    }
    Solution::Unique(x)
}
