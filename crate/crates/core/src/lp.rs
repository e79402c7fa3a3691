//! Exact rational linear programming.
//!
//! Variables are free (unrestricted in sign); bounds are ordinary
//! constraints. Internally each variable is split as `x = p − q` with
//! `p, q ≥ 0` and the program is solved by a dense two-phase tableau
//! simplex under Bland's rule, so termination needs no perturbation.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("a program needs at least one variable")]
    NoVariables,
    #[error("row has {found} coefficients, program has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("stage {stage} was {status:?}")]
    StageFailed { stage: usize, status: LpStatus },
    #[error("no stages given")]
    NoStages,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn lhs(&self, x: &[Rational]) -> Rational {
        dot(&self.coefficients, x)
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    variables: usize,
    constraints: Vec<Constraint>,
    objective: Vec<Rational>,
    sense: Sense,
}

impl LinearProgram {
    pub fn new(variables: usize, sense: Sense, objective: Vec<Rational>) -> Result<Self, LpError> {
        if variables == 0 {
            return Err(LpError::NoVariables);
        }
        check_len(variables, objective.len())?;
        Ok(LinearProgram {
            variables,
            constraints: Vec::new(),
            objective,
            sense,
        })
    }

    /// A pure feasibility problem (zero objective).
    pub fn feasibility(variables: usize) -> Result<Self, LpError> {
        Self::new(variables, Sense::Minimize, vec![Rational::zero(); variables])
    }

    pub fn add_constraint(
        &mut self,
        coefficients: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<(), LpError> {
        check_len(self.variables, coefficients.len())?;
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn with_constraint(
        mut self,
        coefficients: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<Self, LpError> {
        self.add_constraint(coefficients, relation, rhs)?;
        Ok(self)
    }

    pub fn set_objective(&mut self, sense: Sense, objective: Vec<Rational>) -> Result<(), LpError> {
        check_len(self.variables, objective.len())?;
        self.sense = sense;
        self.objective = objective;
        Ok(())
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.variables && self.constraints.iter().all(|c| c.is_satisfied(x))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub solution: Option<Vec<Rational>>,
    pub objective_value: Option<Rational>,
}

impl LpOutcome {
    fn without_solution(status: LpStatus) -> Self {
        LpOutcome {
            status,
            solution: None,
            objective_value: None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

fn check_len(expected: usize, found: usize) -> Result<(), LpError> {
    if expected != found {
        return Err(LpError::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs followed by −z in the last slot.
    cost: Vec<Rational>,
    width: usize,
}

enum Phase {
    Done,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if p != Rational::from_integer(1.into()) {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        let nonzero: Vec<usize> = (0..=self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nonzero {
                row[j] -= &f * &pivot_row[j];
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for &j in &nonzero {
                self.cost[j] -= &f * &pivot_row[j];
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by lowest basic index.
    fn run(&mut self, allowed: &dyn Fn(usize) -> bool) -> Phase {
        loop {
            let entering = (0..self.width).find(|&j| allowed(j) && self.cost[j].is_negative());
            let Some(c) = entering else {
                return Phase::Done;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Phase::Unbounded,
            }
        }
    }
}

/// Solves the program exactly.
pub fn solve(lp: &LinearProgram) -> LpOutcome {
    let m = lp.constraints.len();
    let nv = lp.variables;
    let slack_count = lp
        .constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    // columns: p (nv), q (nv), slacks, artificials (m)
    let structural = 2 * nv + slack_count;
    let width = structural + m;
    let mut rows = Vec::with_capacity(m);
    let mut slack = 2 * nv;
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); width + 1];
        for (j, a) in c.coefficients.iter().enumerate() {
            if !a.is_zero() {
                row[j] = a.clone();
                row[nv + j] = -a;
            }
        }
        match c.relation {
            Relation::Le => {
                row[slack] = Rational::from_integer(1.into());
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = Rational::from_integer((-1).into());
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[width] = c.rhs.clone();
        if row[width].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        row[structural + i] = Rational::from_integer(1.into());
        rows.push(row);
    }

    // phase I: minimise the sum of artificials
    let mut cost = vec![Rational::zero(); width + 1];
    for row in &rows {
        for j in 0..structural {
            cost[j] -= &row[j];
        }
        cost[width] -= &row[width];
    }
    let mut t = Tableau {
        rows,
        basis: (structural..width).collect(),
        cost,
        width,
    };
    let _ = t.run(&|_| true);
    if !t.cost[width].is_zero() {
        return LpOutcome::without_solution(LpStatus::Infeasible);
    }

    // drive remaining (zero-valued) artificials out; drop redundant rows
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= structural {
            match (0..structural).find(|&j| !t.rows[r][j].is_zero()) {
                Some(c) => {
                    t.pivot(r, c);
                    r += 1;
                }
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                }
            }
        } else {
            r += 1;
        }
    }

    // phase II
    let mut c_full = vec![Rational::zero(); width];
    for (j, c) in lp.objective.iter().enumerate() {
        let c = match lp.sense {
            Sense::Minimize => c.clone(),
            Sense::Maximize => -c,
        };
        c_full[nv + j] = -&c;
        c_full[j] = c;
    }
    let mut cost = vec![Rational::zero(); width + 1];
    cost[..width].clone_from_slice(&c_full);
    for (i, row) in t.rows.iter().enumerate() {
        let cb = &c_full[t.basis[i]];
        if cb.is_zero() {
            continue;
        }
        for j in 0..=width {
            if !row[j].is_zero() {
                cost[j] -= cb * &row[j];
            }
        }
    }
    t.cost = cost;
    if let Phase::Unbounded = t.run(&|j| j < structural) {
        return LpOutcome::without_solution(LpStatus::Unbounded);
    }

    let mut y = vec![Rational::zero(); width];
    for (i, &b) in t.basis.iter().enumerate() {
        y[b] = t.rows[i][width].clone();
    }
    let x: Vec<Rational> = (0..nv).map(|j| &y[j] - &y[nv + j]).collect();
    let value = lp.objective_at(&x);
    debug_assert!(lp.is_feasible_point(&x));
    LpOutcome {
        status: LpStatus::Optimal,
        solution: Some(x),
        objective_value: Some(value),
    }
}

/// Solves the stages in order. Stage k is optimised over its own
/// constraints, the constraints of all earlier stages, and one equality
/// per earlier stage pinning that stage's objective at its optimum.
pub fn lexicographic_min(stages: &[LinearProgram]) -> Result<LpOutcome, LpError> {
    let first = stages.first().ok_or(LpError::NoStages)?;
    let mut acc = LinearProgram::feasibility(first.variables)?;
    let mut last = None;
    for (k, stage) in stages.iter().enumerate() {
        check_len(acc.variables, stage.variables)?;
        for c in &stage.constraints {
            acc.constraints.push(c.clone());
        }
        acc.set_objective(stage.sense, stage.objective.clone())?;
        let outcome = solve(&acc);
        match (outcome.status, &outcome.objective_value) {
            (LpStatus::Optimal, Some(opt)) => {
                acc.add_constraint(stage.objective.clone(), Relation::Eq, opt.clone())?;
            }
            (status, _) => return Err(LpError::StageFailed { stage: k, status }),
        }
        last = Some(outcome);
    }
    Ok(last.expect("at least one stage"))
}
