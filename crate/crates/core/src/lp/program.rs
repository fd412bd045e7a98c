use std::collections::HashMap;
use std::fmt;

use super::Rational;

/// Index of a variable within its [`LinearProgram`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

/// A sparse linear form, sorted by variable with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinExpr(Vec<(VarId, Rational)>);

impl LinExpr {
    pub fn new() -> Self {
        LinExpr(Vec::new())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (VarId, Rational)>) -> Self {
        let mut e = LinExpr::new();
        for (v, c) in terms {
            e.add(v, &c);
        }
        e
    }

    /// Adds `c · v`.
    pub fn add(&mut self, v: VarId, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.0.binary_search_by_key(&v, |t| t.0) {
            Ok(k) => {
                let sum = &self.0[k].1 + c;
                if sum.is_zero() {
                    self.0.remove(k);
                } else {
                    self.0[k].1 = sum;
                }
            }
            Err(k) => self.0.insert(k, (v, c.clone())),
        }
    }

    pub fn add_int(&mut self, v: VarId, c: i64) {
        self.add(v, &Rational::from_int(c));
    }

    pub fn terms(&self) -> &[(VarId, Rational)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, v: VarId) -> Rational {
        match self.0.binary_search_by_key(&v, |t| t.0) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.0.iter().map(|(v, c)| c * &x[v.index()]).sum()
    }

    fn scaled(&self, s: &Rational) -> LinExpr {
        LinExpr(self.0.iter().map(|(v, c)| (*v, c * s)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub expr: LinExpr,
    pub rel: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self.expr.eval(x);
        match self.rel {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// An LP over exact rationals. Constraints are deduplicated on insertion:
/// each row is scaled so its first coefficient has magnitude 1, and among
/// `≤` rows with equal left sides only the tightest is kept.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    names: Vec<String>,
    nonneg: Vec<bool>,
    constraints: Vec<Constraint>,
    index: HashMap<(LinExpr, Relation), Vec<usize>>,
    objective: LinExpr,
    sense: Sense,
    /// A constant row `0 ≤ b` or `0 = b` that cannot hold.
    contradiction: bool,
}

impl Default for LinearProgram {
    fn default() -> Self {
        LinearProgram::new(Sense::Maximize)
    }
}

impl LinearProgram {
    pub fn new(sense: Sense) -> Self {
        LinearProgram {
            names: Vec::new(),
            nonneg: Vec::new(),
            constraints: Vec::new(),
            index: HashMap::new(),
            objective: LinExpr::new(),
            sense,
            contradiction: false,
        }
    }

    /// Declares a variable constrained to be nonnegative.
    pub fn var(&mut self, name: impl Into<String>) -> VarId {
        self.declare(name.into(), true)
    }

    /// Declares an unrestricted variable.
    pub fn free_var(&mut self, name: impl Into<String>) -> VarId {
        self.declare(name.into(), false)
    }

    fn declare(&mut self, name: String, nonneg: bool) -> VarId {
        let id = VarId(self.names.len() as u32);
        self.names.push(name);
        self.nonneg.push(nonneg);
        id
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: VarId) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_nonneg(&self, v: VarId) -> bool {
        self.nonneg[v.index()]
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn objective(&self) -> &LinExpr {
        &self.objective
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn set_objective(&mut self, sense: Sense, objective: LinExpr) {
        self.check_vars(&objective);
        self.sense = sense;
        self.objective = objective;
    }

    pub fn has_contradiction(&self) -> bool {
        self.contradiction
    }

    fn check_vars(&self, e: &LinExpr) {
        if let Some((v, _)) = e.terms().last() {
            assert!(v.index() < self.names.len(), "undeclared variable {v:?}");
        }
    }

    pub fn add_le(&mut self, expr: LinExpr, rhs: Rational) {
        self.add(expr, Relation::Le, rhs);
    }

    pub fn add_eq(&mut self, expr: LinExpr, rhs: Rational) {
        self.add(expr, Relation::Eq, rhs);
    }

    /// `expr ≥ rhs`, stored as `-expr ≤ -rhs`.
    pub fn add_ge(&mut self, expr: LinExpr, rhs: Rational) {
        self.add(expr.scaled(&Rational::from_int(-1)), Relation::Le, -rhs);
    }

    pub fn add(&mut self, expr: LinExpr, rel: Relation, rhs: Rational) {
        self.check_vars(&expr);
        let Some((_, lead)) = expr.terms().first() else {
            let ok = match rel {
                Relation::Le => !rhs.is_negative(),
                Relation::Eq => rhs.is_zero(),
            };
            self.contradiction |= !ok;
            return;
        };
        let scale = match rel {
            Relation::Le => lead.abs().recip(),
            Relation::Eq => lead.recip(),
        };
        let expr = expr.scaled(&scale);
        let rhs = &rhs * &scale;
        let slots = self.index.entry((expr.clone(), rel)).or_default();
        match rel {
            Relation::Le => {
                if let Some(&k) = slots.first() {
                    if rhs < self.constraints[k].rhs {
                        self.constraints[k].rhs = rhs;
                    }
                    return;
                }
            }
            Relation::Eq => {
                if slots.iter().any(|&k| self.constraints[k].rhs == rhs) {
                    return;
                }
            }
        }
        slots.push(self.constraints.len());
        self.constraints.push(Constraint { expr, rel, rhs });
    }

    /// Whether `x` satisfies every constraint and sign restriction.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.names.len()
            && !self.contradiction
            && self.nonneg.iter().zip(x).all(|(&nn, v)| !nn || !v.is_negative())
            && self.constraints.iter().all(|c| c.is_satisfied(x))
    }

    /// Renders `c1 x1 + c2 x2` with this program's variable names.
    pub fn format_expr(&self, e: &LinExpr) -> String {
        format_terms(e.terms().iter().map(|(v, c)| (self.name(*v), c)))
    }
}

pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (&'a str, &'a Rational)>) -> String {
    let mut out = String::new();
    for (k, (name, c)) in terms.enumerate() {
        let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
        if k == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if mag != Rational::ONE {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn linexpr_merges_and_cancels() {
        let mut lp = LinearProgram::default();
        let (x, y) = (lp.var("x"), lp.var("y"));
        let mut e = LinExpr::new();
        e.add_int(y, 2);
        e.add_int(x, 1);
        e.add_int(y, -2);
        assert_eq!(e.terms(), &[(x, q(1))]);
        assert_eq!(e.coeff(y), q(0));
    }

    #[test]
    fn deduplicates_scaled_rows() {
        let mut lp = LinearProgram::default();
        let (x, y) = (lp.var("x"), lp.var("y"));
        lp.add_le(LinExpr::from_terms([(x, q(1)), (y, q(1))]), q(3));
        lp.add_le(LinExpr::from_terms([(x, q(2)), (y, q(2))]), q(4));
        lp.add_le(LinExpr::from_terms([(x, q(1)), (y, q(1))]), q(5));
        assert_eq!(lp.num_constraints(), 1);
        assert_eq!(lp.constraints()[0].rhs, q(2));
        lp.add_le(LinExpr::from_terms([(x, q(-1)), (y, q(-1))]), q(0));
        assert_eq!(lp.num_constraints(), 2);
        lp.add_eq(LinExpr::from_terms([(x, q(-2))]), q(2));
        lp.add_eq(LinExpr::from_terms([(x, q(1))]), q(-1));
        assert_eq!(lp.num_constraints(), 3);
        lp.add_eq(LinExpr::from_terms([(x, q(1))]), q(0));
        assert_eq!(lp.num_constraints(), 4);
    }

    #[test]
    fn constant_rows() {
        let mut lp = LinearProgram::default();
        lp.add_le(LinExpr::new(), q(0));
        assert!(!lp.has_contradiction());
        lp.add_le(LinExpr::new(), q(-1));
        assert!(lp.has_contradiction());
    }

    #[test]
    fn formatting() {
        let mut lp = LinearProgram::default();
        let (x, y) = (lp.var("x"), lp.var("y"));
        let e = LinExpr::from_terms([(x, q(-1)), (y, Rational::new(3, 2))]);
        assert_eq!(lp.format_expr(&e), "-x + 3/2 y");
        assert_eq!(lp.format_expr(&LinExpr::new()), "0");
    }
}
