//! Plain-text LP dump, one constraint per line with exact fractions:
//!
//! ```text
//! maximize: R1 + R2
//! vars: R1 R2
//! free: t
//! R1 + 2 R2 <= 4
//! 3 R1 + R2 - t = 6
//! ```
//!
//! `vars:` and `free:` declare nonnegative and unrestricted variables;
//! names first seen inside a constraint are declared nonnegative. `>=` rows
//! are accepted on input. `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::program::{format_terms, LinExpr, LinearProgram, Relation, Sense, VarId};
use super::Rational;
use crate::error::ParseError;

fn clean(name: &str) -> String {
    name.chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect()
}

/// Renders `lp` in the dump format.
pub fn write_dump(lp: &LinearProgram) -> String {
    let names: Vec<String> = lp.names().iter().map(|n| clean(n)).collect();
    let expr = |e: &LinExpr| format_terms(e.terms().iter().map(|(v, c)| (names[v.index()].as_str(), c)));
    let mut out = String::new();
    let sense = match lp.sense() {
        Sense::Maximize => "maximize",
        Sense::Minimize => "minimize",
    };
    let _ = writeln!(out, "{sense}: {}", expr(lp.objective()));
    let (nonneg, free): (Vec<usize>, Vec<usize>) =
        (0..lp.num_vars()).partition(|&k| lp.is_nonneg(VarId(k as u32)));
    for (label, list) in [("vars", nonneg), ("free", free)] {
        if !list.is_empty() {
            let joined: Vec<&str> = list.iter().map(|&k| names[k].as_str()).collect();
            let _ = writeln!(out, "{label}: {}", joined.join(" "));
        }
    }
    if lp.has_contradiction() {
        out.push_str("0 <= -1\n");
    }
    for c in lp.constraints() {
        let _ = writeln!(out, "{} {} {}", expr(&c.expr), c.rel, c.rhs);
    }
    out
}

struct Reader {
    lp: LinearProgram,
    ids: HashMap<String, VarId>,
}

impl Reader {
    fn declare(&mut self, name: &str, nonneg: bool, line: usize) -> Result<VarId, ParseError> {
        if !valid_name(name) {
            return Err(ParseError::new(line, format!("invalid variable name `{name}`")));
        }
        if self.ids.contains_key(name) {
            return Err(ParseError::new(line, format!("variable `{name}` declared twice")));
        }
        let v = if nonneg { self.lp.var(name) } else { self.lp.free_var(name) };
        self.ids.insert(name.to_string(), v);
        Ok(v)
    }

    fn lookup(&mut self, name: &str, line: usize) -> Result<VarId, ParseError> {
        match self.ids.get(name) {
            Some(&v) => Ok(v),
            None => self.declare(name, true, line),
        }
    }

    fn expr(&mut self, text: &str, line: usize) -> Result<LinExpr, ParseError> {
        let mut e = LinExpr::new();
        let mut sign = Rational::ONE;
        let mut coef: Option<Rational> = None;
        let mut expect_term = true;
        for tok in text.split_whitespace() {
            match tok {
                "+" | "-" => {
                    if coef.is_some() {
                        return Err(ParseError::new(line, format!("dangling coefficient before `{tok}`")));
                    }
                    if !expect_term {
                        sign = Rational::ONE;
                    }
                    if tok == "-" {
                        sign = -sign;
                    }
                    expect_term = true;
                    continue;
                }
                _ => {}
            }
            let (neg, body) = match tok.strip_prefix('-') {
                Some(rest) if coef.is_none() => (true, rest),
                _ => (false, tok),
            };
            if neg {
                sign = -sign;
            }
            if body.starts_with(|c: char| c.is_ascii_digit()) {
                if coef.is_some() {
                    return Err(ParseError::new(line, format!("two coefficients in a row at `{tok}`")));
                }
                let c: Rational =
                    body.parse().map_err(|_| ParseError::new(line, format!("malformed coefficient `{tok}`")))?;
                coef = Some(c);
                continue;
            }
            if !expect_term && coef.is_none() && !neg {
                return Err(ParseError::new(line, format!("missing operator before `{tok}`")));
            }
            let v = self.lookup(body, line)?;
            let c = coef.take().unwrap_or(Rational::ONE);
            e.add(v, &(&sign * &c));
            sign = Rational::ONE;
            expect_term = false;
        }
        match coef {
            Some(c) if c.is_zero() && e.is_empty() => Ok(e),
            Some(_) => Err(ParseError::new(line, "coefficient without a variable")),
            None if expect_term && !e.is_empty() => Err(ParseError::new(line, "expression ends with an operator")),
            None if e.is_empty() => Err(ParseError::new(line, "empty expression")),
            None => Ok(e),
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && name.chars().all(|c| !c.is_whitespace() && !matches!(c, '<' | '>' | '=' | '#' | '+'))
}

/// Parses the dump format back into a program.
pub fn parse_dump(text: &str) -> Result<LinearProgram, ParseError> {
    let mut r = Reader { lp: LinearProgram::new(Sense::Maximize), ids: HashMap::new() };
    let mut objective: Option<(Sense, String, usize)> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        if let Some((head, rest)) = l.split_once(':') {
            let head = head.trim();
            match head {
                "maximize" | "minimize" => {
                    if objective.is_some() {
                        return Err(ParseError::new(line, "objective given twice"));
                    }
                    let sense = if head == "maximize" { Sense::Maximize } else { Sense::Minimize };
                    objective = Some((sense, rest.to_string(), line));
                    continue;
                }
                "vars" | "free" => {
                    for name in rest.split_whitespace() {
                        r.declare(name, head == "vars", line)?;
                    }
                    continue;
                }
                _ => {}
            }
        }
        let (lhs, rel, rhs) = split_relation(l).ok_or_else(|| ParseError::new(line, "expected `<=`, `=` or `>=`"))?;
        let rhs: Rational =
            rhs.trim().parse().map_err(|_| ParseError::new(line, format!("malformed right-hand side `{}`", rhs.trim())))?;
        let e = r.expr(lhs, line)?;
        match rel {
            "<=" => r.lp.add_le(e, rhs),
            ">=" => r.lp.add_ge(e, rhs),
            _ => r.lp.add(e, Relation::Eq, rhs),
        }
    }
    let (sense, obj, line) = objective.ok_or_else(|| ParseError::new(1, "missing `maximize:` or `minimize:` line"))?;
    let obj = if obj.trim() == "0" { LinExpr::new() } else { r.expr(&obj, line)? };
    r.lp.set_objective(sense, obj);
    Ok(r.lp)
}

fn split_relation(l: &str) -> Option<(&str, &'static str, &str)> {
    for rel in ["<=", ">="] {
        if let Some((a, b)) = l.split_once(rel) {
            if b.contains(['<', '>', '=']) {
                return None;
            }
            return Some((a, rel, b));
        }
    }
    let (a, b) = l.split_once('=')?;
    if a.contains(['<', '>']) || b.contains(['<', '>', '=']) {
        return None;
    }
    Some((a, "=", b))
}
