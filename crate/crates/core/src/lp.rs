//! Dense two-phase simplex over exact rationals.
//!
//! Solves `maximize c·x + c0` subject to `A x <= b`, `x >= 0`. Entering and
//! leaving variables follow Bland's smallest-index rule, so the solver
//! terminates and its output is reproducible.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("objective is unbounded")]
    Unbounded,
    #[error("constraint has {got} coefficients, expected {expected}")]
    Dimension { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub bound: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<Rational>,
    pub objective_constant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    Infeasible,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
            objective: vec![Rational::zero(); num_vars],
            objective_constant: Rational::zero(),
        }
    }

    pub fn add_constraint(
        &mut self,
        coefficients: Vec<Rational>,
        bound: Rational,
    ) -> Result<(), LpError> {
        if coefficients.len() != self.num_vars {
            return Err(LpError::Dimension {
                expected: self.num_vars,
                got: coefficients.len(),
            });
        }
        self.constraints.push(Constraint {
            coefficients,
            bound,
        });
        Ok(())
    }

    /// `A x <= b` and `x >= 0` with no slack tolerance.
    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
                lhs <= c.bound
            })
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        self.objective
            .iter()
            .zip(x)
            .map(|(a, v)| a * v)
            .sum::<Rational>()
            + &self.objective_constant
    }

    pub fn solve(&self) -> Result<LpOutcome, LpError> {
        if self.objective.len() != self.num_vars {
            return Err(LpError::Dimension {
                expected: self.num_vars,
                got: self.objective.len(),
            });
        }
        Tableau::build(self).solve(self)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    n: usize,
    m: usize,
    artificial_start: usize,
    width: usize,
}

impl Tableau {
    // Columns: structural 0..n, slack n..n+m, artificial n+m.. (one per
    // row whose bound is negative).
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars;
        let m = lp.constraints.len();
        let negative: Vec<usize> = (0..m)
            .filter(|&i| lp.constraints[i].bound.is_negative())
            .collect();
        let width = n + m + negative.len();
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (i, c) in lp.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); width];
            row[..n].clone_from_slice(&c.coefficients);
            row[n + i] = Rational::from_integer(1.into());
            if let Some(k) = negative.iter().position(|&r| r == i) {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
                row[n + m + k] = Rational::from_integer(1.into());
                rhs.push(-&c.bound);
                basis.push(n + m + k);
            } else {
                rhs.push(c.bound.clone());
                basis.push(n + i);
            }
            rows.push(row);
        }
        Tableau {
            rows,
            rhs,
            basis,
            n,
            m,
            artificial_start: n + m,
            width,
        }
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[r] = col;
    }

    /// Maximizes `cost · y` from the current basic feasible solution.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Result<(), LpError> {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(col) = entering else {
                return Ok(());
            };
            let mut best: Option<(Rational, usize)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((r, bi)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((ratio, i));
                }
            }
            match best {
                None => return Err(LpError::Unbounded),
                Some((_, r)) => self.pivot(r, col),
            }
        }
    }

    fn solve(mut self, lp: &LinearProgram) -> Result<LpOutcome, LpError> {
        if self.width > self.artificial_start {
            let mut cost = vec![Rational::zero(); self.width];
            for c in cost.iter_mut().skip(self.artificial_start) {
                *c = Rational::from_integer((-1).into());
            }
            self.optimize(&cost, self.width)?;
            let infeasible = self
                .basis
                .iter()
                .zip(&self.rhs)
                .any(|(&b, v)| b >= self.artificial_start && v.is_positive());
            if infeasible {
                return Ok(LpOutcome::Infeasible);
            }
            // Drive zero-valued artificials out; drop rows that are redundant.
            let mut r = 0;
            while r < self.rows.len() {
                if self.basis[r] >= self.artificial_start {
                    match (0..self.artificial_start).find(|&j| !self.rows[r][j].is_zero()) {
                        Some(col) => {
                            self.pivot(r, col);
                            r += 1;
                        }
                        None => {
                            self.rows.remove(r);
                            self.rhs.remove(r);
                            self.basis.remove(r);
                        }
                    }
                } else {
                    r += 1;
                }
            }
        }
        let mut cost = vec![Rational::zero(); self.width];
        cost[..self.n].clone_from_slice(&lp.objective);
        self.optimize(&cost, self.artificial_start)?;
        let mut point = vec![Rational::zero(); self.n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                point[b] = self.rhs[i].clone();
            }
        }
        debug_assert!(self.m >= self.rows.len());
        let value = lp.evaluate(&point);
        Ok(LpOutcome::Optimal { value, point })
    }
}
