//! Two-phase dictionary simplex over exact rationals.
//!
//! The dictionary keeps one dense row per basic variable, expressing it as
//! `x_B = β + Σ d_j x_j` over the nonbasic variables. Phase one uses a single
//! auxiliary variable added to every row. Bland's rule guarantees
//! termination; the default [`PivotRule::Hybrid`] uses the largest reduced
//! cost and falls back to Bland's rule while the objective stalls.
//!
//! By default a floating-point simplex first proposes a basis; when the
//! exact primal and dual solutions of that basis are feasible they are
//! returned directly and the exact dictionary is never built.

use super::program::{LinearProgram, Relation, Sense};
use super::Rational;
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// Smallest-index entering and leaving variables throughout.
    Bland,
    /// Largest reduced cost, switching to Bland's rule after a run of
    /// degenerate pivots until the objective moves again.
    Hybrid,
}

#[derive(Copy, Clone, Debug)]
pub struct SolverOptions {
    pub rule: PivotRule,
    /// Consecutive degenerate pivots tolerated before Bland's rule takes over.
    pub stall_limit: usize,
    /// Try a certified floating-point basis before the exact simplex.
    pub float_guide: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { rule: PivotRule::Hybrid, stall_limit: 50, float_guide: true }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpResult {
    pub status: LpStatus,
    /// Optimal objective value in the program's own sense.
    pub value: Option<Rational>,
    /// One entry per declared variable; empty unless optimal.
    pub primal: Vec<Rational>,
    pub pivots: usize,
}

impl LpResult {
    /// The optimal value, or an invariant error for infeasible/unbounded programs.
    pub fn optimal_value(&self) -> Result<Rational> {
        match (&self.status, &self.value) {
            (LpStatus::Optimal, Some(v)) => Ok(v.clone()),
            (s, _) => Err(Error::Invariant(format!("expected a finite optimum, solver reported {s:?}"))),
        }
    }

    /// Re-checks the primal certificate against `lp` exactly.
    pub fn verify(&self, lp: &LinearProgram) -> Result<()> {
        if self.status != LpStatus::Optimal {
            return Ok(());
        }
        if !lp.is_feasible(&self.primal) {
            return Err(Error::Invariant("optimal primal point violates a constraint".into()));
        }
        let value = lp.objective().eval(&self.primal);
        if Some(&value) != self.value.as_ref() {
            return Err(Error::Invariant("objective at primal point differs from reported value".into()));
        }
        Ok(())
    }
}

/// Solves with default options.
pub fn solve(lp: &LinearProgram) -> LpResult {
    solve_with(lp, SolverOptions::default())
}

/// Solves and verifies the certificate.
pub fn solve_checked(lp: &LinearProgram) -> Result<LpResult> {
    let r = solve(lp);
    r.verify(lp)?;
    Ok(r)
}

pub fn solve_with(lp: &LinearProgram, opts: SolverOptions) -> LpResult {
    let infeasible = |pivots| LpResult { status: LpStatus::Infeasible, value: None, primal: Vec::new(), pivots };
    if lp.has_contradiction() {
        return infeasible(0);
    }

    // Standard-form columns: nonnegative variables map to one column, free
    // variables to a (+, -) pair.
    let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(lp.num_vars());
    let mut ncols = 0;
    for k in 0..lp.num_vars() {
        if lp.is_nonneg(super::VarId(k as u32)) {
            col_of.push((ncols, None));
            ncols += 1;
        } else {
            col_of.push((ncols, Some(ncols + 1)));
            ncols += 2;
        }
    }
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for c in lp.constraints() {
        let mut a = vec![Rational::ZERO; ncols];
        for (v, coef) in c.expr.terms() {
            let (p, m) = col_of[v.index()];
            a[p] = coef.clone();
            if let Some(m) = m {
                a[m] = -coef;
            }
        }
        if c.rel == Relation::Eq {
            let neg: Vec<Rational> = a.iter().map(|x| -x).collect();
            rows.push((neg, -&c.rhs));
        }
        rows.push((a, c.rhs.clone()));
    }
    let mut cost = vec![Rational::ZERO; ncols];
    for (v, coef) in lp.objective().terms() {
        let coef = match lp.sense() {
            Sense::Maximize => coef.clone(),
            Sense::Minimize => -coef,
        };
        let (p, m) = col_of[v.index()];
        if let Some(m) = m {
            cost[m] = -&coef;
        }
        cost[p] = coef;
    }

    let mut guided_pivots = 0;
    if opts.float_guide {
        let (x, pivots) = super::guided::certified_optimum(ncols, &rows, &cost);
        if let Some(x) = x {
            return optimal(lp, &col_of, &x, pivots);
        }
        guided_pivots = pivots;
    }
    let mut t = Dictionary::new(ncols, rows, opts);
    t.pivots = guided_pivots;
    if !t.phase_one() {
        return infeasible(t.pivots);
    }
    t.set_objective(&cost);
    if !t.optimize() {
        return LpResult { status: LpStatus::Unbounded, value: None, primal: Vec::new(), pivots: t.pivots };
    }
    optimal(lp, &col_of, &t.structural_values(ncols), t.pivots)
}

fn optimal(lp: &LinearProgram, col_of: &[(usize, Option<usize>)], x: &[Rational], pivots: usize) -> LpResult {
    let primal: Vec<Rational> = col_of
        .iter()
        .map(|&(p, m)| match m {
            Some(m) => &x[p] - &x[m],
            None => x[p].clone(),
        })
        .collect();
    let value = lp.objective().eval(&primal);
    LpResult { status: LpStatus::Optimal, value: Some(value), primal, pivots }
}

struct Dictionary {
    /// `d[r][j]`: coefficient of nonbasic column `j` in the row of basic variable `r`.
    d: Vec<Vec<Rational>>,
    beta: Vec<Rational>,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
    obj: Vec<Rational>,
    obj0: Rational,
    opts: SolverOptions,
    pivots: usize,
    aux: Option<usize>,
}

impl Dictionary {
    /// Variables `0..ncols` are structural and `ncols..ncols+m` are slacks.
    fn new(ncols: usize, rows: Vec<(Vec<Rational>, Rational)>, opts: SolverOptions) -> Self {
        let m = rows.len();
        let mut d = Vec::with_capacity(m);
        let mut beta = Vec::with_capacity(m);
        for (a, b) in rows {
            d.push(a.into_iter().map(|x| -x).collect());
            beta.push(b);
        }
        Dictionary {
            d,
            beta,
            basic: (ncols..ncols + m).collect(),
            nonbasic: (0..ncols).collect(),
            obj: vec![Rational::ZERO; ncols],
            obj0: Rational::ZERO,
            opts,
            pivots: 0,
            aux: None,
        }
    }

    fn pivot(&mut self, r: usize, q: usize) {
        self.pivots += 1;
        let inv = self.d[r][q].recip();
        let neg_inv = -&inv;
        let row = &mut self.d[r];
        for (j, x) in row.iter_mut().enumerate() {
            if j != q && !x.is_zero() {
                *x = &*x * &neg_inv;
            }
        }
        row[q] = inv;
        self.beta[r] = &self.beta[r] * &neg_inv;
        let nz: Vec<usize> = (0..row.len()).filter(|&j| !row[j].is_zero()).collect();
        let pivot_row = std::mem::take(&mut self.d[r]);
        let pivot_beta = self.beta[r].clone();
        for i in 0..self.d.len() {
            if i == r || self.d[i][q].is_zero() {
                continue;
            }
            let f = std::mem::take(&mut self.d[i][q]);
            let row = &mut self.d[i];
            for &j in &nz {
                row[j] += &f * &pivot_row[j];
            }
            self.beta[i] += &f * &pivot_beta;
        }
        if !self.obj[q].is_zero() {
            let f = std::mem::take(&mut self.obj[q]);
            for &j in &nz {
                self.obj[j] += &f * &pivot_row[j];
            }
            self.obj0 += &f * &pivot_beta;
        }
        self.d[r] = pivot_row;
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[q]);
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (j, c) in self.obj.iter().enumerate() {
            if !c.is_positive() {
                continue;
            }
            best = match best {
                None => Some(j),
                Some(b) => {
                    let better = if bland {
                        self.nonbasic[j] < self.nonbasic[b]
                    } else {
                        match c.cmp(&self.obj[b]) {
                            std::cmp::Ordering::Greater => true,
                            std::cmp::Ordering::Equal => self.nonbasic[j] < self.nonbasic[b],
                            std::cmp::Ordering::Less => false,
                        }
                    };
                    if better { Some(j) } else { Some(b) }
                }
            };
        }
        best
    }

    /// Minimum-ratio row for entering column `q`, ties to the smallest basic index.
    fn leaving(&self, q: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for i in 0..self.d.len() {
            let a = &self.d[i][q];
            if !a.is_negative() {
                continue;
            }
            let ratio = &self.beta[i] / &(-a);
            best = match best {
                None => Some((i, ratio)),
                Some((b, br)) => match ratio.cmp(&br) {
                    std::cmp::Ordering::Less => Some((i, ratio)),
                    std::cmp::Ordering::Equal if self.basic[i] < self.basic[b] => Some((i, ratio)),
                    _ => Some((b, br)),
                },
            };
        }
        best.map(|(i, _)| i)
    }

    /// Runs primal simplex from a feasible dictionary; false when unbounded.
    fn optimize(&mut self) -> bool {
        let mut stalled = 0usize;
        loop {
            let bland = self.opts.rule == PivotRule::Bland || stalled >= self.opts.stall_limit;
            let Some(q) = self.entering(bland) else {
                return true;
            };
            let Some(r) = self.leaving(q) else {
                return false;
            };
            if self.beta[r].is_zero() {
                stalled += 1;
            } else {
                stalled = 0;
            }
            self.pivot(r, q);
        }
    }

    /// Finds a feasible dictionary; false when none exists.
    fn phase_one(&mut self) -> bool {
        let worst = (0..self.beta.len())
            .filter(|&i| self.beta[i].is_negative())
            .min_by(|&a, &b| self.beta[a].cmp(&self.beta[b]).then(self.basic[a].cmp(&self.basic[b])));
        let Some(r) = worst else {
            return true;
        };
        let aux_id = self.basic.len() + self.nonbasic.len();
        let q = self.nonbasic.len();
        for row in &mut self.d {
            row.push(Rational::ONE);
        }
        self.nonbasic.push(aux_id);
        self.obj = vec![Rational::ZERO; q + 1];
        self.obj[q] = -Rational::ONE;
        self.obj0 = Rational::ZERO;
        self.aux = Some(aux_id);
        self.pivot(r, q);
        let bounded = self.optimize();
        debug_assert!(bounded, "phase one objective is bounded by zero");
        if self.obj0.is_negative() {
            return false;
        }
        if let Some(r) = self.basic.iter().position(|&b| b == aux_id) {
            match (0..self.nonbasic.len()).filter(|&j| !self.d[r][j].is_zero()).min_by_key(|&j| self.nonbasic[j]) {
                Some(j) => self.pivot(r, j),
                None => {
                    self.d.remove(r);
                    self.beta.remove(r);
                    self.basic.remove(r);
                }
            }
        }
        if let Some(col) = self.nonbasic.iter().position(|&v| v == aux_id) {
            for row in &mut self.d {
                row.remove(col);
            }
            self.nonbasic.remove(col);
        }
        self.aux = None;
        true
    }

    /// Expresses `max cost · x` over the current nonbasic variables.
    fn set_objective(&mut self, cost: &[Rational]) {
        let width = self.nonbasic.len();
        self.obj = vec![Rational::ZERO; width];
        self.obj0 = Rational::ZERO;
        for (j, &v) in self.nonbasic.iter().enumerate() {
            if v < cost.len() && !cost[v].is_zero() {
                self.obj[j] += &cost[v];
            }
        }
        for (r, &v) in self.basic.iter().enumerate() {
            if v < cost.len() && !cost[v].is_zero() {
                let c = &cost[v];
                for j in 0..width {
                    if !self.d[r][j].is_zero() {
                        self.obj[j] += c * &self.d[r][j];
                    }
                }
                self.obj0 += c * &self.beta[r];
            }
        }
    }

    fn structural_values(&self, ncols: usize) -> Vec<Rational> {
        let mut x = vec![Rational::ZERO; ncols];
        for (r, &v) in self.basic.iter().enumerate() {
            if v < ncols {
                x[v] = self.beta[r].clone();
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{LinExpr, VarId};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn expr(terms: &[(VarId, i64)]) -> LinExpr {
        LinExpr::from_terms(terms.iter().map(|&(v, c)| (v, q(c))))
    }

    #[test]
    fn bounded_single_variable() {
        let mut lp = LinearProgram::default();
        let x = lp.var("x");
        lp.add_le(expr(&[(x, 1)]), q(1));
        lp.set_objective(Sense::Maximize, expr(&[(x, 1)]));
        let r = solve_checked(&lp).unwrap();
        assert_eq!(r.status, LpStatus::Optimal);
        assert_eq!(r.value, Some(q(1)));
    }

    #[test]
    fn unbounded() {
        let mut lp = LinearProgram::default();
        let x = lp.var("x");
        lp.set_objective(Sense::Maximize, expr(&[(x, 1)]));
        assert_eq!(solve(&lp).status, LpStatus::Unbounded);
    }

    #[test]
    fn two_by_two_vertex() {
        for rule in [PivotRule::Bland, PivotRule::Hybrid] {
            let mut lp = LinearProgram::default();
            let (x, y) = (lp.var("x"), lp.var("y"));
            lp.add_le(expr(&[(x, 1), (y, 2)]), q(4));
            lp.add_le(expr(&[(x, 3), (y, 1)]), q(6));
            lp.set_objective(Sense::Maximize, expr(&[(x, 1), (y, 1)]));
            let r = solve_with(&lp, SolverOptions { rule, stall_limit: 5, float_guide: false });
            assert_eq!(r.value, Some(Rational::new(14, 5)));
            assert_eq!(r.primal, vec![Rational::new(8, 5), Rational::new(6, 5)]);
        }
    }

    #[test]
    fn infeasible_and_phase_one() {
        let mut lp = LinearProgram::default();
        let x = lp.var("x");
        lp.add_ge(expr(&[(x, 1)]), q(2));
        lp.add_le(expr(&[(x, 1)]), q(1));
        lp.set_objective(Sense::Maximize, expr(&[(x, 1)]));
        assert_eq!(solve(&lp).status, LpStatus::Infeasible);

        let mut lp = LinearProgram::new(Sense::Minimize);
        let (x, y) = (lp.var("x"), lp.var("y"));
        lp.add_ge(expr(&[(x, 1), (y, 1)]), q(3));
        lp.add_eq(expr(&[(x, 1), (y, -1)]), q(1));
        lp.set_objective(Sense::Minimize, expr(&[(x, 2), (y, 1)]));
        let r = solve_checked(&lp).unwrap();
        assert_eq!(r.value, Some(q(5)));
        assert_eq!(r.primal, vec![q(2), q(1)]);

        let mut lp = LinearProgram::default();
        lp.add_le(LinExpr::new(), q(-1));
        assert_eq!(solve(&lp).status, LpStatus::Infeasible);
    }

    #[test]
    fn free_variables() {
        let mut lp = LinearProgram::new(Sense::Minimize);
        let x = lp.free_var("x");
        lp.add_ge(expr(&[(x, 1)]), q(-7));
        lp.set_objective(Sense::Minimize, expr(&[(x, 1)]));
        let r = solve_checked(&lp).unwrap();
        assert_eq!(r.value, Some(q(-7)));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook largest-coefficient rule.
        let mut lp = LinearProgram::default();
        let x: Vec<VarId> = (0..4).map(|k| lp.var(format!("x{k}"))).collect();
        let r = Rational::new;
        lp.add_le(LinExpr::from_terms([(x[0], r(1, 4)), (x[1], r(-8, 1)), (x[2], r(-1, 1)), (x[3], r(9, 1))]), q(0));
        lp.add_le(LinExpr::from_terms([(x[0], r(1, 2)), (x[1], r(-12, 1)), (x[2], r(-1, 2)), (x[3], r(3, 1))]), q(0));
        lp.add_le(expr(&[(x[2], 1)]), q(1));
        lp.set_objective(
            Sense::Maximize,
            LinExpr::from_terms([(x[0], r(3, 4)), (x[1], r(-20, 1)), (x[2], r(1, 2)), (x[3], r(-6, 1))]),
        );
        for rule in [PivotRule::Bland, PivotRule::Hybrid] {
            let res = solve_with(&lp, SolverOptions { rule, stall_limit: 3, float_guide: false });
            assert_eq!(res.value, Some(r(5, 4)));
        }
    }

    #[test]
    fn deterministic_pivot_counts() {
        let mut lp = LinearProgram::default();
        let v: Vec<VarId> = (0..5).map(|k| lp.var(format!("v{k}"))).collect();
        for a in 0..5 {
            for b in a + 1..5 {
                lp.add_le(expr(&[(v[a], 1), (v[b], 2)]), q((a * 3 + b) as i64 + 1));
            }
        }
        lp.set_objective(Sense::Maximize, LinExpr::from_terms(v.iter().map(|&x| (x, q(1)))));
        let a = solve(&lp);
        let b = solve(&lp);
        assert_eq!(a.pivots, b.pivots);
        assert_eq!(a.primal, b.primal);
    }

    /// Best objective over all basic feasible points, by brute-force vertex enumeration.
    fn vertex_oracle(a: &[Vec<i64>], b: &[i64], c: &[i64]) -> Option<Rational> {
        let n = c.len();
        let mut rows: Vec<(Vec<Rational>, Rational)> =
            a.iter().zip(b).map(|(r, &bb)| (r.iter().map(|&x| q(x)).collect(), q(bb))).collect();
        for k in 0..n {
            let mut r = vec![q(0); n];
            r[k] = q(-1);
            rows.push((r, q(0)));
        }
        let mut best: Option<Rational> = None;
        let m = rows.len();
        let mut choose = vec![0usize; n];
        fn rec(
            start: usize,
            depth: usize,
            choose: &mut Vec<usize>,
            m: usize,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if depth == choose.len() {
                f(choose);
                return;
            }
            for s in start..m {
                choose[depth] = s;
                rec(s + 1, depth + 1, choose, m, f);
            }
        }
        let mut visit = |sel: &[usize]| {
            let mut mat: Vec<Vec<Rational>> = sel
                .iter()
                .map(|&s| {
                    let mut r = rows[s].0.clone();
                    r.push(rows[s].1.clone());
                    r
                })
                .collect();
            for col in 0..n {
                let Some(p) = (col..n).find(|&r| !mat[r][col].is_zero()) else {
                    return;
                };
                mat.swap(col, p);
                let inv = mat[col][col].recip();
                for x in mat[col].iter_mut() {
                    *x = &*x * &inv;
                }
                for r in 0..n {
                    if r != col && !mat[r][col].is_zero() {
                        let f = mat[r][col].clone();
                        let pivot_row = mat[col].clone();
                        for (x, p) in mat[r].iter_mut().zip(&pivot_row).take(n + 1) {
                            *x -= &(&f * p);
                        }
                    }
                }
            }
            let x: Vec<Rational> = mat.iter().map(|r| r[n].clone()).collect();
            let feasible = rows.iter().all(|(r, bb)| {
                let lhs: Rational = r.iter().zip(&x).map(|(p, v)| p * v).sum();
                lhs <= *bb
            });
            if feasible {
                let val: Rational = c.iter().zip(&x).map(|(&p, v)| q(p) * v).sum();
                if best.as_ref().is_none_or(|bst| val > *bst) {
                    best = Some(val);
                }
            }
        };
        rec(0, 0, &mut choose, m, &mut visit);
        best
    }

    fn build(a: &[Vec<i64>], b: &[i64], c: &[i64]) -> LinearProgram {
        let mut lp = LinearProgram::default();
        let v: Vec<VarId> = (0..c.len()).map(|k| lp.var(format!("x{k}"))).collect();
        for (row, &bb) in a.iter().zip(b) {
            lp.add_le(LinExpr::from_terms(row.iter().enumerate().map(|(k, &x)| (v[k], q(x)))), q(bb));
        }
        lp.set_objective(Sense::Maximize, LinExpr::from_terms(c.iter().enumerate().map(|(k, &x)| (v[k], q(x)))));
        lp
    }

    fn dual(a: &[Vec<i64>], b: &[i64], c: &[i64]) -> LinearProgram {
        let mut lp = LinearProgram::new(Sense::Minimize);
        let y: Vec<VarId> = (0..b.len()).map(|k| lp.var(format!("y{k}"))).collect();
        for (j, &cj) in c.iter().enumerate() {
            lp.add_ge(LinExpr::from_terms(a.iter().enumerate().map(|(i, row)| (y[i], q(row[j])))), q(cj));
        }
        lp.set_objective(Sense::Minimize, LinExpr::from_terms(b.iter().enumerate().map(|(i, &x)| (y[i], q(x)))));
        lp
    }

    fn random_lp() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>, Vec<i64>)> {
        (1usize..=4, 1usize..=5).prop_flat_map(|(n, m)| {
            (
                proptest::collection::vec(proptest::collection::vec(-3i64..=5, n), m),
                proptest::collection::vec(0i64..=9, m),
                proptest::collection::vec(-2i64..=4, n),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn matches_vertex_enumeration_and_duality((a, b, c) in random_lp()) {
            // Rows with b ≥ 0 make the origin feasible; bound every variable to stay bounded.
            let mut a = a;
            let mut b = b;
            for k in 0..c.len() {
                let mut r = vec![0; c.len()];
                r[k] = 1;
                a.push(r);
                b.push(10);
            }
            let lp = build(&a, &b, &c);
            let primal = solve_checked(&lp).unwrap();
            prop_assert_eq!(primal.status, LpStatus::Optimal);
            let oracle = vertex_oracle(&a, &b, &c);
            prop_assert_eq!(primal.value.clone(), oracle);
            let d = dual(&a, &b, &c);
            let dres = solve_checked(&d).unwrap();
            prop_assert_eq!(dres.value, primal.value.clone());
            let bland = solve_with(&lp, SolverOptions { rule: PivotRule::Bland, stall_limit: 0, float_guide: false });
            prop_assert_eq!(bland.value, primal.value);
        }

        #[test]
        fn phase_one_agrees_with_oracle((a, b, c) in random_lp(), shift in proptest::collection::vec(-6i64..=0, 5)) {
            // Negative right-hand sides exercise phase one and infeasibility.
            let mut a = a;
            let mut b: Vec<i64> = b.iter().zip(&shift).map(|(x, s)| x + s).collect();
            for k in 0..c.len() {
                let mut r = vec![0; c.len()];
                r[k] = 1;
                a.push(r);
                b.push(10);
            }
            let lp = build(&a, &b, &c);
            let res = solve_checked(&lp).unwrap();
            let oracle = vertex_oracle(&a, &b, &c);
            match oracle {
                None => prop_assert_eq!(res.status, LpStatus::Infeasible),
                Some(v) => prop_assert_eq!(res.value, Some(v)),
            }
        }
    }
}
