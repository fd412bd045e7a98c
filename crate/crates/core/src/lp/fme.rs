//! Fourier–Motzkin elimination with LP-based redundancy pruning.

use std::collections::HashSet;
use std::fmt;

use super::program::{format_terms, LinExpr, LinearProgram, Relation, Sense, VarId};
use super::simplex::{solve, LpStatus};
use super::Rational;

/// `Σ coeffs[k] · x_k ≤ rhs` over the variables of an [`InequalitySystem`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Inequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Inequality { coeffs, rhs }
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Scales so the first nonzero coefficient has magnitude 1.
    pub fn normalized(&self) -> Inequality {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let s = lead.abs().recip();
                Inequality {
                    coeffs: self.coeffs.iter().map(|c| c * &s).collect(),
                    rhs: &self.rhs * &s,
                }
            }
        }
    }

    /// Whether the row only says `x_k ≥ 0` for a single variable.
    pub fn is_sign_constraint(&self) -> bool {
        let nz: Vec<&Rational> = self.coeffs.iter().filter(|c| !c.is_zero()).collect();
        nz.len() == 1 && nz[0].is_negative() && self.rhs.is_zero()
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
        lhs <= self.rhs
    }
}

/// A finite set of `≤` inequalities over named real variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    pub vars: Vec<String>,
    pub rows: Vec<Inequality>,
}

impl InequalitySystem {
    pub fn new(vars: Vec<String>) -> Self {
        InequalitySystem { vars, rows: Vec::new() }
    }

    /// The feasible set of `lp` (objective ignored): equalities become two
    /// rows and sign constraints become explicit rows.
    pub fn from_lp(lp: &LinearProgram) -> Self {
        let mut sys = InequalitySystem::new(lp.names().to_vec());
        for c in lp.constraints() {
            let terms: Vec<(usize, Rational)> = c.expr.terms().iter().map(|(v, a)| (v.index(), a.clone())).collect();
            sys.push(&terms, c.rhs.clone());
            if c.rel == Relation::Eq {
                let neg: Vec<(usize, Rational)> = terms.iter().map(|(k, a)| (*k, -a)).collect();
                sys.push(&neg, -&c.rhs);
            }
        }
        for k in 0..lp.num_vars() {
            if lp.is_nonneg(VarId(k as u32)) {
                sys.push(&[(k, -Rational::ONE)], Rational::ZERO);
            }
        }
        sys
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Adds a row given as `(variable index, coefficient)` pairs.
    pub fn push(&mut self, terms: &[(usize, Rational)], rhs: Rational) {
        let mut coeffs = vec![Rational::ZERO; self.vars.len()];
        for (k, c) in terms {
            coeffs[*k] += c;
        }
        self.rows.push(Inequality::new(coeffs, rhs));
    }

    /// Adds `x_k ≥ 0` for every variable.
    pub fn push_nonnegativity(&mut self) {
        for k in 0..self.vars.len() {
            self.push(&[(k, -Rational::ONE)], Rational::ZERO);
        }
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|r| r.is_satisfied(x))
    }

    /// Normalizes rows, drops exact duplicates and satisfied constant rows.
    pub fn canonicalize(&mut self) {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(self.rows.len());
        for r in self.rows.drain(..) {
            let r = r.normalized();
            if r.is_trivial() && !r.rhs.is_negative() {
                continue;
            }
            if seen.insert(r.clone()) {
                out.push(r);
            }
        }
        self.rows = out;
    }

    /// Rows sorted by support size, then by coefficient pattern (largest first).
    pub fn sorted(&self) -> InequalitySystem {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| {
            let sa = a.coeffs.iter().filter(|c| !c.is_zero()).count();
            let sb = b.coeffs.iter().filter(|c| !c.is_zero()).count();
            sa.cmp(&sb).then_with(|| b.coeffs.cmp(&a.coeffs)).then_with(|| a.rhs.cmp(&b.rhs))
        });
        InequalitySystem { vars: self.vars.clone(), rows }
    }

    pub fn format_row(&self, r: &Inequality) -> String {
        let terms = self.vars.iter().zip(&r.coeffs).filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n.as_str(), c));
        format!("{} <= {}", format_terms(terms), r.rhs)
    }
}

impl fmt::Display for InequalitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{}", self.format_row(r))?;
        }
        Ok(())
    }
}

fn max_over(c: &[Rational], rows: &[&Inequality], nvars: usize) -> (LpStatus, Option<Rational>) {
    let mut lp = LinearProgram::new(Sense::Maximize);
    let vars: Vec<VarId> = (0..nvars).map(|k| lp.free_var(format!("x{k}"))).collect();
    for r in rows {
        lp.add_le(LinExpr::from_terms(vars.iter().zip(&r.coeffs).map(|(v, a)| (*v, a.clone()))), r.rhs.clone());
    }
    lp.set_objective(Sense::Maximize, LinExpr::from_terms(vars.iter().zip(c).map(|(v, a)| (*v, a.clone()))));
    let res = solve(&lp);
    (res.status, res.value)
}

/// Whether `c` is implied by `others`: the maximum of its left side over
/// `others` does not exceed its right side. Infeasible `others` imply everything.
pub fn is_redundant(c: &Inequality, others: &[Inequality]) -> bool {
    let refs: Vec<&Inequality> = others.iter().collect();
    redundant_among(c, &refs)
}

fn redundant_among(c: &Inequality, others: &[&Inequality]) -> bool {
    match max_over(&c.coeffs, others, c.coeffs.len()) {
        (LpStatus::Infeasible, _) => true,
        (LpStatus::Unbounded, _) => false,
        (LpStatus::Optimal, v) => v.is_some_and(|v| v <= c.rhs),
    }
}

/// Removes rows implied by the remaining ones, scanning in order.
pub fn prune_redundant(system: &mut InequalitySystem) {
    system.canonicalize();
    let mut keep = vec![true; system.rows.len()];
    for k in 0..system.rows.len() {
        let others: Vec<&Inequality> =
            (0..system.rows.len()).filter(|&j| j != k && keep[j]).map(|j| &system.rows[j]).collect();
        if redundant_among(&system.rows[k], &others) {
            keep[k] = false;
        }
    }
    let rows = std::mem::take(&mut system.rows);
    system.rows = rows.into_iter().zip(keep).filter_map(|(r, k)| k.then_some(r)).collect();
}

fn eliminate_one(system: &InequalitySystem, k: usize) -> InequalitySystem {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut rows = Vec::new();
    for r in &system.rows {
        let a = &r.coeffs[k];
        if a.is_positive() {
            pos.push(r);
        } else if a.is_negative() {
            neg.push(r);
        } else {
            rows.push(r.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            let wp = -&n.coeffs[k];
            let wn = p.coeffs[k].clone();
            let coeffs: Vec<Rational> =
                p.coeffs.iter().zip(&n.coeffs).map(|(a, b)| &(a * &wp) + &(b * &wn)).collect();
            let rhs = &(&p.rhs * &wp) + &(&n.rhs * &wn);
            rows.push(Inequality::new(coeffs, rhs));
        }
    }
    let vars = system.vars.clone();
    let mut out = InequalitySystem { vars, rows };
    for r in &mut out.rows {
        r.coeffs[k] = Rational::ZERO;
    }
    out
}

fn drop_columns(system: InequalitySystem, gone: &[usize]) -> InequalitySystem {
    let keep: Vec<usize> = (0..system.vars.len()).filter(|k| !gone.contains(k)).collect();
    InequalitySystem {
        vars: keep.iter().map(|&k| system.vars[k].clone()).collect(),
        rows: system
            .rows
            .into_iter()
            .map(|r| Inequality::new(keep.iter().map(|&k| r.coeffs[k].clone()).collect(), r.rhs))
            .collect(),
    }
}

/// Eliminates `vars` in the given order, pruning redundant rows after each
/// round. Names not present in the system are ignored.
pub fn fme_eliminate(system: &InequalitySystem, vars: &[&str]) -> InequalitySystem {
    let mut cur = system.clone();
    prune_redundant(&mut cur);
    let mut gone = Vec::new();
    for name in vars {
        let Some(k) = cur.var_index(name) else { continue };
        if gone.contains(&k) {
            continue;
        }
        cur = eliminate_one(&cur, k);
        prune_redundant(&mut cur);
        gone.push(k);
    }
    drop_columns(cur, &gone)
}

/// Projects onto the variables in `keep`, choosing at each round the
/// variable whose elimination creates the fewest rows (ties by position).
pub fn project_onto(system: &InequalitySystem, keep: &[&str]) -> InequalitySystem {
    let mut cur = system.clone();
    prune_redundant(&mut cur);
    let mut pending: Vec<usize> =
        (0..cur.vars.len()).filter(|&k| !keep.contains(&cur.vars[k].as_str())).collect();
    let mut gone = Vec::new();
    while !pending.is_empty() {
        let cost = |k: usize| {
            let p = cur.rows.iter().filter(|r| r.coeffs[k].is_positive()).count();
            let n = cur.rows.iter().filter(|r| r.coeffs[k].is_negative()).count();
            p * n
        };
        let (pos, &k) = pending.iter().enumerate().min_by_key(|(_, &k)| cost(k)).expect("nonempty");
        pending.remove(pos);
        cur = eliminate_one(&cur, k);
        prune_redundant(&mut cur);
        gone.push(k);
    }
    drop_columns(cur, &gone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn sys(vars: &[&str], rows: &[(&[i64], i64)]) -> InequalitySystem {
        let mut s = InequalitySystem::new(vars.iter().map(|v| v.to_string()).collect());
        for (c, b) in rows {
            s.rows.push(Inequality::new(c.iter().map(|&x| q(x)).collect(), q(*b)));
        }
        s
    }

    #[test]
    fn eliminates_pair() {
        let s = sys(&["x", "y"], &[(&[1, 1], 2), (&[1, -1], 0)]);
        let p = fme_eliminate(&s, &["y"]);
        assert_eq!(p.vars, vec!["x".to_string()]);
        assert_eq!(p.rows, vec![Inequality::new(vec![q(1)], q(1))]);
        assert_eq!(p.to_string(), "x <= 1\n");
    }

    #[test]
    fn absent_variable_is_noop() {
        let s = sys(&["x", "y"], &[(&[1, 0], 2)]);
        let p = fme_eliminate(&s, &["z", "y"]);
        assert_eq!(p.vars, vec!["x".to_string()]);
        assert_eq!(p.rows.len(), 1);
        let same = fme_eliminate(&s, &["z"]);
        assert_eq!(same, s);
    }

    #[test]
    fn redundancy_checks() {
        let x_le = |b: i64| Inequality::new(vec![q(1), q(0)], q(b));
        assert!(is_redundant(&x_le(2), &[x_le(1)]));
        assert!(!is_redundant(&x_le(1), &[x_le(2)]));
        let both = [Inequality::new(vec![q(1), q(0)], q(1)), Inequality::new(vec![q(0), q(1)], q(1))];
        assert!(is_redundant(&Inequality::new(vec![q(1), q(1)], q(2)), &both));
        assert!(!is_redundant(&Inequality::new(vec![q(1), q(1)], q(1)), &both));
    }

    #[test]
    fn sign_rows_and_sorting() {
        let mut s = sys(&["a", "b"], &[(&[2, 2], 8), (&[-1, 0], 0), (&[1, 0], 3)]);
        s.canonicalize();
        assert!(s.rows[1].is_sign_constraint());
        assert!(!s.rows[2].is_sign_constraint());
        let sorted = s.sorted();
        assert_eq!(sorted.to_string(), "a <= 3\n-a <= 0\na + b <= 4\n");
    }

    /// Whether `point` (over the kept variables) extends to a solution of `full`.
    fn extends(full: &InequalitySystem, kept: &[usize], point: &[Rational]) -> bool {
        let mut lp = LinearProgram::new(Sense::Maximize);
        let vars: Vec<VarId> = (0..full.vars.len()).map(|k| lp.free_var(format!("v{k}"))).collect();
        for r in &full.rows {
            lp.add_le(LinExpr::from_terms(vars.iter().zip(&r.coeffs).map(|(v, a)| (*v, a.clone()))), r.rhs.clone());
        }
        for (&k, val) in kept.iter().zip(point) {
            lp.add_eq(LinExpr::from_terms([(vars[k], q(1))]), val.clone());
        }
        solve(&lp).status == LpStatus::Optimal
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn projection_is_exact(
            rows in proptest::collection::vec((proptest::collection::vec(-3i64..=3, 3), -2i64..=6), 1..7),
            pts in proptest::collection::vec((-8i64..=8, -8i64..=8, 1i64..=3), 12),
        ) {
            let s = sys(&["x", "y", "z"], &rows.iter().map(|(c, b)| (c.as_slice(), *b)).collect::<Vec<_>>());
            let p = fme_eliminate(&s, &["z"]);
            prop_assert_eq!(&p.vars, &vec!["x".to_string(), "y".to_string()]);
            for (a, b, d) in pts {
                let point = vec![Rational::new(a, d), Rational::new(b, d)];
                prop_assert_eq!(p.is_satisfied(&point), extends(&s, &[0, 1], &point));
            }
        }
    }
}
