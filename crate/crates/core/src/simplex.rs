//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Variables are implicitly non-negative.

use num::{BigRational, Signed, Zero};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Maximize `objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLp {
    num_vars: usize,
    objective: Vec<BigRational>,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpSolution {
    Optimal {
        value: BigRational,
        vertex: Vec<BigRational>,
    },
    Infeasible,
    Unbounded,
}

impl LpSolution {
    pub fn optimal(&self) -> Option<(&BigRational, &[BigRational])> {
        match self {
            LpSolution::Optimal { value, vertex } => Some((value, vertex)),
            _ => None,
        }
    }
}

impl RationalLp {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            objective: vec![BigRational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn objective(&self) -> &[BigRational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_objective(&mut self, objective: Vec<BigRational>) -> Result<()> {
        if objective.len() != self.num_vars {
            return invalid(format!(
                "objective has {} coefficients for {} variables",
                objective.len(),
                self.num_vars
            ));
        }
        self.objective = objective;
        Ok(())
    }

    pub fn add_constraint(
        &mut self,
        coeffs: Vec<BigRational>,
        relation: Relation,
        rhs: BigRational,
    ) -> Result<()> {
        if coeffs.len() != self.num_vars {
            return invalid(format!(
                "constraint has {} coefficients for {} variables",
                coeffs.len(),
                self.num_vars
            ));
        }
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    /// Whether `x ≥ 0` satisfies every constraint exactly.
    pub fn is_feasible(&self, x: &[BigRational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }

    pub fn evaluate(&self, x: &[BigRational]) -> BigRational {
        self.objective.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn solve_max(&self) -> LpSolution {
        Tableau::build(self).solve(self)
    }
}

struct Tableau {
    /// `rows × (cols + 1)`, last column is the right-hand side.
    a: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &RationalLp) -> Self {
        let n = lp.num_vars;
        // normalize: rhs ≥ 0; a zero-rhs ≥ row becomes a ≤ row
        let rows: Vec<(Vec<BigRational>, Relation, BigRational)> = lp
            .constraints
            .iter()
            .map(|c| {
                let flip = c.rhs.is_negative() || (c.rhs.is_zero() && c.relation == Relation::Ge);
                if flip {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|v| -v).collect(), rel, -c.rhs.clone())
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        let slack_count = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let art_count = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let cols = n + slack_count + art_count;
        let first_artificial = n + slack_count;
        let mut a = Vec::with_capacity(rows.len());
        let mut basis = Vec::with_capacity(rows.len());
        let (mut next_slack, mut next_art) = (n, first_artificial);
        for (coeffs, rel, rhs) in rows {
            let mut row = coeffs;
            row.resize(cols + 1, BigRational::zero());
            row[cols] = rhs;
            match rel {
                Relation::Le => {
                    row[next_slack] = BigRational::from_integer(1.into());
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = BigRational::from_integer((-1).into());
                    next_slack += 1;
                    row[next_art] = BigRational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = BigRational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            a.push(row);
        }
        Self {
            a,
            basis,
            cols,
            first_artificial,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.a[r][c].clone();
        for v in self.a[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.a[r].clone();
        for (i, row) in self.a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · x` over columns `< limit`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[BigRational], limit: usize) -> bool {
        loop {
            let entering = (0..limit).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.a[i][j].is_zero() {
                        reduced -= &cost[b] * &self.a[i][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.a[i][self.cols] / &self.a[i][c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn solve(mut self, lp: &RationalLp) -> LpSolution {
        let one = BigRational::from_integer(1.into());
        if self.first_artificial < self.cols {
            let mut cost = vec![BigRational::zero(); self.cols];
            for c in cost.iter_mut().skip(self.first_artificial) {
                *c = -one.clone();
            }
            self.optimize(&cost, self.cols);
            let infeasibility: BigRational = self
                .basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| b >= self.first_artificial)
                .map(|(i, _)| self.a[i][self.cols].clone())
                .sum();
            if infeasibility.is_positive() {
                return LpSolution::Infeasible;
            }
            // drive basic artificials out; rows where that fails are redundant
            let mut i = 0;
            while i < self.a.len() {
                if self.basis[i] < self.first_artificial {
                    i += 1;
                    continue;
                }
                match (0..self.first_artificial).find(|&j| !self.a[i][j].is_zero()) {
                    Some(j) => {
                        self.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        self.a.remove(i);
                        self.basis.remove(i);
                    }
                }
            }
        }
        let mut cost = vec![BigRational::zero(); self.cols];
        cost[..lp.num_vars].clone_from_slice(&lp.objective);
        if !self.optimize(&cost, self.first_artificial) {
            return LpSolution::Unbounded;
        }
        let mut vertex = vec![BigRational::zero(); lp.num_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < lp.num_vars {
                vertex[b] = self.a[i][self.cols].clone();
            }
        }
        LpSolution::Optimal {
            value: lp.evaluate(&vertex),
            vertex,
        }
    }
}
