//! Exact two-phase dense simplex over the rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rel: Relation,
    pub rhs: Rat,
}

/// Minimize `objective . x` subject to the constraints. Variables are free
/// unless marked nonnegative.
#[derive(Clone, Debug)]
pub struct LinProgram {
    pub n_vars: usize,
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
    pub nonneg: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rat,
    pub point: Vec<Rat>,
    /// One multiplier per constraint; optimal for the dual program.
    pub dual: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

impl LinProgram {
    pub fn new(n_vars: usize) -> Self {
        LinProgram {
            n_vars,
            objective: vec![Rat::zero(); n_vars],
            constraints: Vec::new(),
            nonneg: vec![false; n_vars],
        }
    }

    pub fn minimize(mut self, objective: Vec<Rat>) -> Self {
        self.objective = objective;
        self
    }

    pub fn nonnegative(mut self, vars: impl IntoIterator<Item = usize>) -> Self {
        for v in vars {
            self.nonneg[v] = true;
        }
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<Rat>, rel: Relation, rhs: Rat) {
        self.constraints.push(Constraint { coeffs, rel, rhs });
    }

    pub fn is_feasible(&self, x: &[Rat]) -> bool {
        x.len() == self.n_vars
            && self.nonneg.iter().zip(x).all(|(nn, v)| !nn || !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = rat::dot(&c.coeffs, x);
                match c.rel {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }

    /// Whether `y` is feasible for the dual of this (minimization) program.
    pub fn is_dual_feasible(&self, y: &[Rat]) -> bool {
        if y.len() != self.constraints.len() {
            return false;
        }
        let signs_ok = self.constraints.iter().zip(y).all(|(c, v)| match c.rel {
            Relation::Le => !v.is_positive(),
            Relation::Ge => !v.is_negative(),
            Relation::Eq => true,
        });
        signs_ok
            && (0..self.n_vars).all(|j| {
                let aty: Rat = self.constraints.iter().zip(y).map(|(c, v)| &c.coeffs[j] * v).sum();
                if self.nonneg[j] {
                    aty <= self.objective[j]
                } else {
                    aty == self.objective[j]
                }
            })
    }

    pub fn dual_objective(&self, y: &[Rat]) -> Rat {
        self.constraints.iter().zip(y).map(|(c, v)| &c.rhs * v).sum()
    }
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    /// Reduced costs, last entry is minus the objective value.
    cost: Vec<Rat>,
    /// Phase-2 reduced costs carried along during phase 1.
    cost2: Vec<Rat>,
    basis: Vec<usize>,
    rhs: usize,
}

impl Tableau {
    fn pivot(&mut self, p: usize, q: usize) {
        let inv = self.rows[p][q].recip();
        if !inv.is_one() {
            for x in self.rows[p].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let nz: Vec<(usize, Rat)> = self.rows[p]
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        let eliminate = |row: &mut Vec<Rat>| {
            if row.is_empty() || row[q].is_zero() {
                return;
            }
            let k = row[q].clone();
            for (j, x) in &nz {
                row[*j] -= &k * x;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != p {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        eliminate(&mut self.cost2);
        self.basis[p] = q;
    }

    /// Runs Bland's rule on `cost` over columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(q) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[q].is_positive() {
                    let ratio = &row[self.rhs] / &row[q];
                    let better = match &best {
                        None => true,
                        Some((b, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((p, _)) = best else { return false };
            self.pivot(p, q);
        }
    }
}

pub fn solve(lp: &LinProgram) -> Result<LpOutcome> {
    let n = lp.n_vars;
    if lp.objective.len() != n || lp.nonneg.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: lp.objective.len() });
    }
    if let Some(c) = lp.constraints.iter().find(|c| c.coeffs.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: c.coeffs.len() });
    }

    // Structural columns: one per nonnegative variable, two per free one.
    let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut ncol = 0;
    for j in 0..n {
        if lp.nonneg[j] {
            col_of.push((ncol, None));
            ncol += 1;
        } else {
            col_of.push((ncol, Some(ncol + 1)));
            ncol += 2;
        }
    }
    let n_struct = ncol;

    // Normalize to rhs >= 0; a `>= 0` row becomes `<= 0` so its slack is basic.
    let m = lp.constraints.len();
    let mut sign = vec![Rat::one(); m];
    let mut rel = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut r = c.rel;
        if c.rhs.is_negative() || (c.rhs.is_zero() && r == Relation::Ge) {
            sign[i] = -Rat::one();
            r = match r {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rel.push(r);
    }
    let n_slack = rel.iter().filter(|r| **r != Relation::Eq).count();
    let n_art = rel.iter().filter(|r| **r != Relation::Le).count();
    let art_start = n_struct + n_slack;
    let total = art_start + n_art;
    let rhs = total;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut ident = Vec::with_capacity(m);
    let (mut s_next, mut a_next) = (n_struct, art_start);
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![Rat::zero(); total + 1];
        for j in 0..n {
            if c.coeffs[j].is_zero() {
                continue;
            }
            let v = &c.coeffs[j] * &sign[i];
            let (pos, negc) = col_of[j];
            if let Some(nc) = negc {
                row[nc] = -v.clone();
            }
            row[pos] = v;
        }
        row[rhs] = &c.rhs * &sign[i];
        match rel[i] {
            Relation::Le => {
                row[s_next] = Rat::one();
                basis.push(s_next);
                ident.push(s_next);
                s_next += 1;
            }
            Relation::Ge => {
                row[s_next] = -Rat::one();
                s_next += 1;
                row[a_next] = Rat::one();
                basis.push(a_next);
                ident.push(a_next);
                a_next += 1;
            }
            Relation::Eq => {
                row[a_next] = Rat::one();
                basis.push(a_next);
                ident.push(a_next);
                a_next += 1;
            }
        }
        rows.push(row);
    }

    // Phase-1 reduced costs: minimize the sum of artificials.
    let mut cost = vec![Rat::zero(); total + 1];
    for (row, &b) in rows.iter().zip(&basis) {
        if b >= art_start {
            for (c, x) in cost.iter_mut().zip(row) {
                if !x.is_zero() {
                    *c -= x;
                }
            }
        }
    }
    for c in cost.iter_mut().take(total).skip(art_start) {
        *c += Rat::one();
    }
    let mut cost2 = vec![Rat::zero(); total + 1];
    for j in 0..n {
        let (pos, negc) = col_of[j];
        cost2[pos] = lp.objective[j].clone();
        if let Some(nc) = negc {
            cost2[nc] = -lp.objective[j].clone();
        }
    }

    let mut t = Tableau { rows, cost, cost2, basis, rhs };
    if n_art > 0 {
        t.optimize(total);
        if !t.cost[rhs].is_zero() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                if let Some(q) = (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    t.pivot(i, q);
                } else {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
    }
    t.cost = std::mem::take(&mut t.cost2);
    if !t.optimize(art_start) {
        return Ok(LpOutcome::Unbounded);
    }

    let mut colval = vec![Rat::zero(); total];
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        colval[b] = row[rhs].clone();
    }
    let point: Vec<Rat> = col_of
        .iter()
        .map(|&(p, nc)| match nc {
            Some(nc) => &colval[p] - &colval[nc],
            None => colval[p].clone(),
        })
        .collect();
    let value = rat::dot(&lp.objective, &point);
    let dual: Vec<Rat> = ident.iter().zip(&sign).map(|(&c, s)| -&t.cost[c] * s).collect();
    Ok(LpOutcome::Optimal(LpSolution { value, point, dual }))
}
