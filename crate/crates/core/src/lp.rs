//! Exact two-phase simplex with Bland's rule.
//!
//! Problems are stated as `minimize c·x` subject to `row·x ≤ bound` and
//! `row·x = bound`. Variables are free unless marked nonnegative. Every
//! outcome carries an exact certificate: dual multipliers for an optimum, a
//! Farkas combination for infeasibility.

use num_traits::{Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::rational::{Rational, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem {
    num_vars: usize,
    objective: Vector,
    inequalities: Vec<(Vector, Rational)>,
    equalities: Vec<(Vector, Rational)>,
    nonnegative: Vec<bool>,
}

impl LpProblem {
    /// A feasibility problem (zero objective) over `num_vars` free variables.
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            objective: Vector::zeros(num_vars),
            inequalities: Vec::new(),
            equalities: Vec::new(),
            nonnegative: vec![false; num_vars],
        }
    }

    pub fn minimize(mut self, objective: Vector) -> Self {
        self.objective = objective;
        self
    }

    /// Adds `row·x ≤ bound`.
    pub fn add_le(&mut self, row: Vector, bound: Rational) -> &mut Self {
        self.inequalities.push((row, bound));
        self
    }

    /// Adds `row·x = bound`.
    pub fn add_eq(&mut self, row: Vector, bound: Rational) -> &mut Self {
        self.equalities.push((row, bound));
        self
    }

    pub fn set_nonnegative(&mut self, var: usize) -> &mut Self {
        self.nonnegative[var] = true;
        self
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn objective(&self) -> &Vector {
        &self.objective
    }

    pub fn inequalities(&self) -> &[(Vector, Rational)] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[(Vector, Rational)] {
        &self.equalities
    }

    pub fn is_nonnegative(&self, var: usize) -> bool {
        self.nonnegative[var]
    }

    fn validate(&self) -> Result<()> {
        check_dim(self.num_vars, self.objective.dim())?;
        check_dim(self.num_vars, self.nonnegative.len())?;
        for (row, _) in self.inequalities.iter().chain(&self.equalities) {
            check_dim(self.num_vars, row.dim())?;
        }
        Ok(())
    }

    fn rows(&self) -> impl Iterator<Item = &(Vector, Rational)> {
        self.inequalities.iter().chain(&self.equalities)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    /// `duals` holds one multiplier per row (inequalities first): each
    /// inequality multiplier is ≤ 0, `duals·A` matches the objective on free
    /// variables and is dominated by it on nonnegative ones, and
    /// `duals·bounds = value`.
    Optimal {
        value: Rational,
        point: Vector,
        duals: Vector,
    },
    /// `farkas ≥ 0` on inequality rows, `farkas·A` vanishes on free variables
    /// and is ≥ 0 on nonnegative ones, and `farkas·bounds < 0`.
    Infeasible { farkas: Vector },
    Unbounded,
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible { .. })
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&Vector> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    /// Checks the outcome's certificate against `problem` exactly.
    pub fn verify(&self, problem: &LpProblem) -> bool {
        let n = problem.num_vars;
        let n_ineq = problem.inequalities.len();
        let combine = |mult: &Vector| -> (Vector, Rational) {
            let mut lhs = Vector::zeros(n);
            let mut rhs = Rational::zero();
            for (y, (row, b)) in mult.iter().zip(problem.rows()) {
                if y.is_zero() {
                    continue;
                }
                lhs = &lhs + &row.scale(y);
                rhs += y * b;
            }
            (lhs, rhs)
        };
        match self {
            LpOutcome::Optimal {
                value,
                point,
                duals,
            } => {
                if point.dim() != n || duals.dim() != problem.rows().count() {
                    return false;
                }
                let primal_ok = problem
                    .inequalities
                    .iter()
                    .all(|(row, b)| &row.dot(point) <= b)
                    && problem.equalities.iter().all(|(row, b)| &row.dot(point) == b)
                    && (0..n).all(|j| !problem.nonnegative[j] || !point[j].is_negative())
                    && &problem.objective.dot(point) == value;
                let sign_ok = duals.iter().take(n_ineq).all(|y| !y.is_positive());
                let (lhs, rhs) = combine(duals);
                let stationary = (0..n).all(|j| {
                    let reduced = &problem.objective[j] - &lhs[j];
                    if problem.nonnegative[j] {
                        !reduced.is_negative()
                    } else {
                        reduced.is_zero()
                    }
                });
                primal_ok && sign_ok && stationary && &rhs == value
            }
            LpOutcome::Infeasible { farkas } => {
                if farkas.dim() != problem.rows().count() {
                    return false;
                }
                let sign_ok = farkas.iter().take(n_ineq).all(|y| !y.is_negative());
                let (lhs, rhs) = combine(farkas);
                let cols_ok = (0..n).all(|j| {
                    if problem.nonnegative[j] {
                        !lhs[j].is_negative()
                    } else {
                        lhs[j].is_zero()
                    }
                });
                sign_ok && cols_ok && rhs.is_negative()
            }
            LpOutcome::Unbounded => true,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    reduced: Vec<Rational>,
    first_artificial: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.reduced[c].is_zero() {
            let f = self.reduced[c].clone();
            for (x, p) in self.reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        let mut reduced = costs.to_vec();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &costs[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (x, a) in reduced.iter_mut().zip(row) {
                if !a.is_zero() {
                    *x -= cb * a;
                }
            }
        }
        self.reduced = reduced;
    }

    fn value(&self, costs: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .map(|(&b, v)| &costs[b] * v)
            .sum()
    }

    /// Runs Bland's rule over the structural columns. Returns `false` when
    /// the objective is unbounded below.
    fn run(&mut self) -> bool {
        loop {
            let Some(enter) = (0..self.first_artificial).find(|&j| self.reduced[j].is_negative())
            else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

/// Solves `problem` exactly. Deterministic: identical input yields an
/// identical outcome.
pub fn solve_lp(problem: &LpProblem) -> Result<LpOutcome> {
    problem.validate()?;
    let n = problem.num_vars;
    let n_ineq = problem.inequalities.len();
    let m = n_ineq + problem.equalities.len();

    // Column layout: variable columns (free variables split in two), slacks,
    // then one artificial per row.
    let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut next = 0;
    for j in 0..n {
        if problem.nonnegative[j] {
            var_cols.push((next, None));
            next += 1;
        } else {
            var_cols.push((next, Some(next + 1)));
            next += 2;
        }
    }
    let first_slack = next;
    let first_artificial = first_slack + n_ineq;
    let total = first_artificial + m;

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut sigma = Vec::with_capacity(m);
    for (i, (row, b)) in problem.rows().enumerate() {
        let flip = b.is_negative();
        let s = |x: Rational| if flip { -x } else { x };
        let mut t = vec![Rational::zero(); total];
        for (j, a) in row.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (p, q) = var_cols[j];
            t[p] = s(a.clone());
            if let Some(q) = q {
                t[q] = s(-a.clone());
            }
        }
        if i < n_ineq {
            t[first_slack + i] = s(Rational::from_integer(1.into()));
        }
        t[first_artificial + i] = Rational::from_integer(1.into());
        rows.push(t);
        rhs.push(s(b.clone()));
        sigma.push(flip);
    }

    let mut tab = Tableau {
        rows,
        rhs,
        basis: (first_artificial..total).collect(),
        reduced: Vec::new(),
        first_artificial,
    };

    let one = Rational::from_integer(1.into());
    let mut phase1 = vec![Rational::zero(); total];
    for c in phase1.iter_mut().skip(first_artificial) {
        *c = one.clone();
    }
    tab.set_costs(&phase1);
    // Phase one is bounded below by zero, so `run` always reaches optimality.
    tab.run();
    let infeasibility = tab.value(&phase1);

    let unflip = |i: usize, y: Rational| if sigma[i] { -y } else { y };

    if infeasibility.is_positive() {
        let farkas: Vector = (0..m)
            .map(|i| {
                let pi = &one - &tab.reduced[first_artificial + i];
                unflip(i, -pi)
            })
            .collect();
        return Ok(LpOutcome::Infeasible { farkas });
    }

    // Drive zero-level artificials out of the basis where possible; rows where
    // that fails are redundant and never pivot again.
    for r in 0..m {
        if tab.basis[r] < first_artificial {
            continue;
        }
        if let Some(c) = (0..first_artificial).find(|&j| !tab.rows[r][j].is_zero()) {
            tab.pivot(r, c);
        }
    }

    let mut costs = vec![Rational::zero(); total];
    for (j, &(p, q)) in var_cols.iter().enumerate() {
        costs[p] = problem.objective[j].clone();
        if let Some(q) = q {
            costs[q] = -problem.objective[j].clone();
        }
    }
    tab.set_costs(&costs);
    if !tab.run() {
        return Ok(LpOutcome::Unbounded);
    }

    let mut col_value = vec![Rational::zero(); total];
    for (i, &b) in tab.basis.iter().enumerate() {
        col_value[b] = tab.rhs[i].clone();
    }
    let point: Vector = var_cols
        .iter()
        .map(|&(p, q)| match q {
            Some(q) => &col_value[p] - &col_value[q],
            None => col_value[p].clone(),
        })
        .collect();
    let duals: Vector = (0..m)
        .map(|i| unflip(i, -tab.reduced[first_artificial + i].clone()))
        .collect();
    let value = tab.value(&costs);
    let outcome = LpOutcome::Optimal {
        value,
        point,
        duals,
    };
    debug_assert!(outcome.verify(problem), "simplex produced an invalid certificate");
    Ok(outcome)
}

/// Convenience: the optimum of a problem expected to be feasible and bounded.
pub(crate) fn solve_optimal(problem: &LpProblem) -> Result<(Rational, Vector)> {
    match solve_lp(problem)? {
        LpOutcome::Optimal { value, point, .. } => Ok((value, point)),
        other => Err(Error::Geometry(format!(
            "internal linear program unexpectedly {}",
            if other.is_infeasible() {
                "infeasible"
            } else {
                "unbounded"
            }
        ))),
    }
}
