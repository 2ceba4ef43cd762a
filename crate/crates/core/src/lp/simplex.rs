//! Dense tableau simplex over exact rationals, Bland's rule throughout.

use num_traits::{One, Signed, Zero};

use super::{dot, Direction, FarkasCertificate, LinearSystem, LpOutcome};
use crate::rational::Rational;

/// The system rewritten as `M z = b`, `z >= 0`, `b >= 0`.
///
/// Free variables split into `z⁺ - z⁻`; each `>=` row gets a surplus column.
struct StandardForm {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    flipped: Vec<bool>,
    /// Column of `x_j`, and of its negative part when free.
    var_cols: Vec<(usize, Option<usize>)>,
    ncols: usize,
    num_eq: usize,
}

impl StandardForm {
    fn new(sys: &LinearSystem) -> Self {
        let mut var_cols = Vec::with_capacity(sys.num_vars);
        let mut next = 0;
        for j in 0..sys.num_vars {
            let neg = sys.free[j].then_some(next + 1);
            var_cols.push((next, neg));
            next += if neg.is_some() { 2 } else { 1 };
        }
        let ncols = next + sys.inequalities.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut flipped = Vec::new();
        let all_rows = sys
            .equalities
            .iter()
            .map(|r| (r, None))
            .chain(sys.inequalities.iter().enumerate().map(|(i, r)| (r, Some(next + i))));
        for (row, surplus) in all_rows {
            let mut m = vec![Rational::zero(); ncols];
            for (j, c) in row.coeffs.iter().enumerate() {
                let (pos, neg) = var_cols[j];
                m[pos] = c.clone();
                if let Some(neg) = neg {
                    m[neg] = -c;
                }
            }
            if let Some(s) = surplus {
                m[s] = -Rational::one();
            }
            let flip = row.rhs.is_negative();
            if flip {
                m.iter_mut().for_each(|x| *x = -&*x);
            }
            rows.push(m);
            rhs.push(if flip { -&row.rhs } else { row.rhs.clone() });
            flipped.push(flip);
        }
        StandardForm { rows, rhs, flipped, var_cols, ncols, num_eq: sys.equalities.len() }
    }

    fn lift_cost(&self, objective: &[Rational]) -> Vec<Rational> {
        let mut c = vec![Rational::zero(); self.ncols];
        for (j, o) in objective.iter().enumerate() {
            let (pos, neg) = self.var_cols[j];
            c[pos] = o.clone();
            if let Some(neg) = neg {
                c[neg] = -o;
            }
        }
        c
    }

    fn project(&self, z: &[Rational]) -> Vec<Rational> {
        self.var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &z[pos] - &z[neg],
                None => z[pos].clone(),
            })
            .collect()
    }
}

struct Tableau {
    /// Constraint rows, right-hand side in the last column.
    a: Vec<Vec<Rational>>,
    /// Reduced costs; last entry is minus the objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

enum Step {
    Optimal,
    /// Entering column with no blocking row.
    Unbounded(usize),
}

impl Tableau {
    fn width(&self) -> usize {
        self.obj.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rational::one() / &self.a[r][c];
        for x in self.a[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.a[r]);
        let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
        };
        for (i, row) in self.a.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.a[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Minimizes with Bland's rule over columns `< allowed`.
    fn run(&mut self, allowed: usize) -> Step {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return Step::Optimal;
            };
            let last = self.width();
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.a.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[last] / &row[c];
                let better = match &best {
                    None => true,
                    Some((b, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Step::Unbounded(c),
            }
        }
    }

    fn point(&self, ncols: usize) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); ncols];
        let last = self.width();
        for (i, &b) in self.basis.iter().enumerate() {
            if b < ncols {
                z[b] = self.a[i][last].clone();
            }
        }
        z
    }

    /// Direction in which column `c` enters without bound.
    fn ray(&self, c: usize, ncols: usize) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); ncols];
        z[c] = Rational::one();
        for (i, &b) in self.basis.iter().enumerate() {
            if b < ncols {
                z[b] = -&self.a[i][c];
            }
        }
        z
    }
}

enum Phase1 {
    Feasible(Tableau),
    Infeasible(FarkasCertificate),
}

fn phase1(sf: &StandardForm) -> Phase1 {
    let m = sf.rows.len();
    let width = sf.ncols + m;
    let mut a = Vec::with_capacity(m);
    let mut obj = vec![Rational::zero(); width + 1];
    for (i, (row, b)) in sf.rows.iter().zip(&sf.rhs).enumerate() {
        let mut t = row.clone();
        t.resize(width + 1, Rational::zero());
        t[sf.ncols + i] = Rational::one();
        t[width] = b.clone();
        for (o, x) in obj.iter_mut().zip(&t) {
            if !x.is_zero() {
                *o -= x;
            }
        }
        a.push(t);
    }
    for o in &mut obj[sf.ncols..width] {
        *o = Rational::zero();
    }
    let mut tab = Tableau { a, obj, basis: (sf.ncols..width).collect() };
    // Phase 1 is bounded below by zero, so it always ends optimal.
    let _ = tab.run(width);

    if !tab.obj[width].is_zero() {
        // Duals y_i = 1 - (reduced cost of artificial i).
        let y: Vec<Rational> = (0..m).map(|i| Rational::one() - &tab.obj[sf.ncols + i]).collect();
        let signed: Vec<Rational> = y.into_iter().zip(&sf.flipped).map(|(y, f)| if *f { -y } else { y }).collect();
        let (eq, ineq) = signed.split_at(sf.num_eq);
        return Phase1::Infeasible(FarkasCertificate { equality: eq.to_vec(), inequality: ineq.to_vec() });
    }

    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < tab.a.len() {
        if tab.basis[r] >= sf.ncols {
            match (0..sf.ncols).find(|&j| !tab.a[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.a.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in &mut tab.a {
        let rhs = row[width].clone();
        row.truncate(sf.ncols);
        row.push(rhs);
    }
    tab.obj = vec![Rational::zero(); sf.ncols + 1];
    Phase1::Feasible(tab)
}

fn certified(sys: &LinearSystem, cert: FarkasCertificate) -> LpOutcome {
    assert!(cert.verify(sys), "simplex produced an invalid Farkas certificate");
    LpOutcome::Infeasible(cert)
}

/// A feasible point, or a Farkas certificate of infeasibility.
pub fn solve_feasibility(sys: &LinearSystem) -> LpOutcome {
    let sf = StandardForm::new(sys);
    match phase1(&sf) {
        Phase1::Infeasible(cert) => certified(sys, cert),
        Phase1::Feasible(tab) => {
            let x = sf.project(&tab.point(sf.ncols));
            assert!(sys.satisfies(&x), "simplex produced an infeasible point");
            LpOutcome::Feasible(x)
        }
    }
}

/// Optimizes `objective · x` over the system.
pub fn optimize(sys: &LinearSystem, objective: &[Rational], direction: Direction) -> LpOutcome {
    assert_eq!(objective.len(), sys.num_vars, "objective width");
    let sf = StandardForm::new(sys);
    let mut tab = match phase1(&sf) {
        Phase1::Infeasible(cert) => return certified(sys, cert),
        Phase1::Feasible(tab) => tab,
    };
    let mut cost = sf.lift_cost(objective);
    if direction == Direction::Maximize {
        cost.iter_mut().for_each(|c| *c = -&*c);
    }
    let mut obj = cost.clone();
    obj.push(Rational::zero());
    for (row, &b) in tab.a.iter().zip(&tab.basis) {
        if cost[b].is_zero() {
            continue;
        }
        for (o, x) in obj.iter_mut().zip(row) {
            if !x.is_zero() {
                *o -= &cost[b] * x;
            }
        }
    }
    tab.obj = obj;

    match tab.run(sf.ncols) {
        Step::Optimal => {
            let point = sf.project(&tab.point(sf.ncols));
            assert!(sys.satisfies(&point), "simplex produced an infeasible point");
            let value = dot(objective, &point);
            LpOutcome::Optimal { point, value }
        }
        Step::Unbounded(c) => {
            let point = sf.project(&tab.point(sf.ncols));
            let ray = sf.project(&tab.ray(c, sf.ncols));
            assert!(sys.satisfies(&point), "simplex produced an infeasible point");
            assert!(sys.is_recession_direction(&ray), "simplex produced an invalid ray");
            let gain = dot(objective, &ray);
            assert!(
                match direction {
                    Direction::Minimize => gain.is_negative(),
                    Direction::Maximize => gain.is_positive(),
                },
                "simplex ray does not improve the objective"
            );
            LpOutcome::Unbounded { point, ray }
        }
    }
}
