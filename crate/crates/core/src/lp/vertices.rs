//! Vertex enumeration by basis enumeration.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::linalg::{rank, solve, Solution};
use super::simplex::{optimize, solve_feasibility};
use super::{Direction, LinearSystem, LpError, LpOutcome};
use crate::rational::Rational;

/// Largest number of candidate bases inspected before giving up.
pub const VERTEX_COMBINATION_CAP: u128 = 2_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// All vertices of a bounded polyhedron, deduplicated and sorted
/// lexicographically. An empty polyhedron has none.
///
/// A vertex is the unique solution of the equalities together with
/// `num_vars - rank(A)` tight rows from the inequalities and sign bounds.
pub fn enumerate_vertices(sys: &LinearSystem) -> Result<Vec<Vec<Rational>>, LpError> {
    let nv = sys.num_vars();
    if solve_feasibility(sys).is_infeasible() {
        return Ok(Vec::new());
    }
    for j in 0..nv {
        let mut e = vec![Rational::zero(); nv];
        e[j] = Rational::one();
        for dir in [Direction::Minimize, Direction::Maximize] {
            if matches!(optimize(sys, &e, dir), LpOutcome::Unbounded { .. }) {
                return Err(LpError::UnboundedPolytope);
            }
        }
    }

    let eq_rows: Vec<Vec<Rational>> = sys.equalities().iter().map(|r| r.coeffs.clone()).collect();
    let eq_rhs: Vec<Rational> = sys.equalities().iter().map(|r| r.rhs.clone()).collect();
    let mut pool: Vec<(Vec<Rational>, Rational)> =
        sys.inequalities().iter().map(|r| (r.coeffs.clone(), r.rhs.clone())).collect();
    for j in (0..nv).filter(|&j| !sys.is_free(j)) {
        let mut e = vec![Rational::zero(); nv];
        e[j] = Rational::one();
        pool.push((e, Rational::zero()));
    }

    let d = nv - rank(&eq_rows);
    let count = binomial(pool.len(), d);
    if count > VERTEX_COMBINATION_CAP {
        return Err(LpError::TooLarge(count));
    }

    let mut vertices = BTreeSet::new();
    for choice in (0..pool.len()).combinations(d) {
        let mut rows = eq_rows.clone();
        let mut rhs = eq_rhs.clone();
        for &k in &choice {
            rows.push(pool[k].0.clone());
            rhs.push(pool[k].1.clone());
        }
        if let Solution::Unique(x) = solve(&rows, &rhs, nv) {
            if sys.satisfies(&x) {
                vertices.insert(x);
            }
        }
    }
    Ok(vertices.into_iter().collect())
}
