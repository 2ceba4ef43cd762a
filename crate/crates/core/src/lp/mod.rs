//! Exact rational linear programming.
//!
//! Systems are `A x = b`, `C x >= d`, with each variable either nonnegative or
//! free. [`solve_feasibility`] returns a point or a Farkas certificate,
//! [`optimize`] a primal optimum or an improving ray, and
//! [`enumerate_vertices`] every vertex of a bounded polytope. Every returned
//! object is re-verified against the system before it leaves this module.

pub mod linalg;
mod simplex;
mod vertices;

use num_traits::{Signed, Zero};

use crate::rational::Rational;

pub use simplex::{optimize, solve_feasibility};
pub use vertices::{enumerate_vertices, VERTEX_COMBINATION_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("the polytope is unbounded")]
    UnboundedPolytope,
    #[error("vertex enumeration would inspect {0} candidate bases, over the cap")]
    TooLarge(u128),
}

/// One linear row `coeffs · x (= | >=) rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Row {
    pub fn dot(&self, x: &[Rational]) -> Rational {
        dot(&self.coeffs, x)
    }
}

pub(crate) fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).fold(Rational::zero(), |acc, (a, x)| if a.is_zero() { acc } else { acc + a * x })
}

/// A system of equality and `>=` rows over `num_vars` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    num_vars: usize,
    free: Vec<bool>,
    equalities: Vec<Row>,
    inequalities: Vec<Row>,
}

impl LinearSystem {
    /// All variables start nonnegative.
    pub fn new(num_vars: usize) -> Self {
        LinearSystem { num_vars, free: vec![false; num_vars], equalities: Vec::new(), inequalities: Vec::new() }
    }

    /// Every variable unrestricted in sign.
    pub fn new_free(num_vars: usize) -> Self {
        let mut s = Self::new(num_vars);
        s.free = vec![true; num_vars];
        s
    }

    pub fn set_free(&mut self, var: usize, free: bool) -> &mut Self {
        self.free[var] = free;
        self
    }

    pub fn add_eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "row width");
        self.equalities.push(Row { coeffs, rhs });
        self
    }

    pub fn add_ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "row width");
        self.inequalities.push(Row { coeffs, rhs });
        self
    }

    /// Stored as `-coeffs · x >= -rhs`.
    pub fn add_le(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.add_ge(coeffs.into_iter().map(|c| -c).collect(), -rhs)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_free(&self, var: usize) -> bool {
        self.free[var]
    }

    pub fn equalities(&self) -> &[Row] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Row] {
        &self.inequalities
    }

    /// Exact membership test.
    pub fn satisfies(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().zip(&self.free).all(|(x, free)| *free || !x.is_negative())
            && self.equalities.iter().all(|r| r.dot(x) == r.rhs)
            && self.inequalities.iter().all(|r| r.dot(x) >= r.rhs)
    }

    /// `x` is a recession direction: `A x = 0`, `C x >= 0`, sign rules kept.
    pub fn is_recession_direction(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().zip(&self.free).all(|(x, free)| *free || !x.is_negative())
            && self.equalities.iter().all(|r| r.dot(x).is_zero())
            && self.inequalities.iter().all(|r| !r.dot(x).is_negative())
    }
}

/// Multipliers proving a system infeasible.
///
/// With `λ` on the equalities (any sign) and `μ >= 0` on the inequalities,
/// the combination `λᵀA + μᵀC` is `<= 0` on nonnegative variables and `= 0`
/// on free ones while `λᵀb + μᵀd > 0`. Any feasible `x` would give
/// `0 >= (λᵀA + μᵀC) x >= λᵀb + μᵀd > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub equality: Vec<Rational>,
    pub inequality: Vec<Rational>,
}

impl FarkasCertificate {
    /// Combined coefficients and right-hand side.
    pub fn combination(&self, sys: &LinearSystem) -> (Vec<Rational>, Rational) {
        let mut coeffs = vec![Rational::zero(); sys.num_vars];
        let mut rhs = Rational::zero();
        let rows = sys.equalities.iter().zip(&self.equality).chain(sys.inequalities.iter().zip(&self.inequality));
        for (row, m) in rows {
            if m.is_zero() {
                continue;
            }
            for (c, a) in coeffs.iter_mut().zip(&row.coeffs) {
                *c += m * a;
            }
            rhs += m * &row.rhs;
        }
        (coeffs, rhs)
    }

    pub fn verify(&self, sys: &LinearSystem) -> bool {
        if self.equality.len() != sys.equalities.len() || self.inequality.len() != sys.inequalities.len() {
            return false;
        }
        if self.inequality.iter().any(Signed::is_negative) {
            return false;
        }
        let (coeffs, rhs) = self.combination(sys);
        rhs.is_positive()
            && coeffs.iter().zip(&sys.free).all(|(c, free)| if *free { c.is_zero() } else { !c.is_positive() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
    /// `point + t * ray` stays feasible for all `t >= 0` and improves the
    /// objective without bound.
    Unbounded {
        point: Vec<Rational>,
        ray: Vec<Rational>,
    },
    Optimal {
        point: Vec<Rational>,
        value: Rational,
    },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Feasible(p) | LpOutcome::Optimal { point: p, .. } | LpOutcome::Unbounded { point: p, .. } => {
                Some(p)
            }
            LpOutcome::Infeasible(_) => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible(_))
    }
}
