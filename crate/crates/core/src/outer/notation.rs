//! Text form of server groupings.
//!
//! ```text
//! # comments start with '#'
//! ta = touch:1|2,3,4          # named generator
//! fd:                         # named explicit grouping, one group per line
//!   {1,3} {1,4} {2,3}
//!   1,3,4,5 2,3,4,5
//! intersect:ta,fd             # result expression
//! ```
//!
//! Generators: `touch`, `touch:<parts separated by |>`, `fd2:<K>;<K'>[+<L>;<L'>...]`,
//! `allserver`, `single`, `intersect:<expr>,<expr>,...`, or a defined name.
//! A blank line ends a named block. Group lines outside a named block form an
//! anonymous explicit grouping that is the result when no result expression
//! is given.

use std::fmt;

use super::grouping::{
    aggregate_touch, all_server, fd2, fd2_bridges, individual_touch, intersect, single_server, Grouping,
};
use crate::error::{Error, ParseError, Result};
use crate::model::{parse_msg_list, Problem};
use crate::sets::{MsgSet, ServerSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupingExpr {
    Touch,
    AggregateTouch(Vec<MsgSet>),
    Fd2(MsgSet, MsgSet),
    /// Second group is the union of several bridges.
    Fd2Bridges(Vec<(MsgSet, MsgSet)>),
    AllServer,
    Single,
    Intersect(Vec<GroupingExpr>),
    Explicit(Vec<Vec<MsgSet>>),
    Name(String),
}

/// A parsed grouping description over `n` messages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupingSpec {
    pub n: usize,
    pub defs: Vec<(String, GroupingExpr)>,
    pub result: GroupingExpr,
}

type ParseResult<T> = std::result::Result<T, ParseError>;

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

const KEYWORDS: [&str; 5] = ["touch", "fd2", "allserver", "single", "intersect"];

pub(crate) fn parse_group_line(text: &str, n: usize, line: usize) -> ParseResult<Vec<MsgSet>> {
    let mut servers = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let token = if let Some(body) = rest.strip_prefix('{') {
            let close = body.find('}').ok_or_else(|| ParseError::new(line, "unclosed `{`"))?;
            let t = &body[..close];
            rest = body[close + 1..].trim_start();
            t
        } else {
            let end = rest.find(|c: char| c.is_whitespace() || c == '{').unwrap_or(rest.len());
            let t = &rest[..end];
            rest = rest[end..].trim_start();
            t
        };
        let j = parse_msg_list(token, n, line)?;
        if j.is_empty() {
            return Err(ParseError::new(line, "the empty server cannot be grouped"));
        }
        if servers.contains(&j) {
            return Err(ParseError::new(line, format!("server {j} repeated in a group")));
        }
        servers.push(j);
    }
    Ok(servers)
}

fn parse_expr(text: &str, n: usize, line: usize, known: &[String]) -> ParseResult<GroupingExpr> {
    let text = text.trim();
    let (head, arg) = match text.split_once(':') {
        Some((h, a)) => (h.trim(), Some(a.trim())),
        None => (text, None),
    };
    match (head, arg) {
        ("touch", None) => Ok(GroupingExpr::Touch),
        ("allserver", None) => Ok(GroupingExpr::AllServer),
        ("single", None) => Ok(GroupingExpr::Single),
        ("touch", Some(a)) => {
            let parts = a.split('|').map(|p| parse_msg_list(p, n, line)).collect::<ParseResult<Vec<_>>>()?;
            Ok(GroupingExpr::AggregateTouch(parts))
        }
        ("fd2", Some(a)) => {
            let mut pairs = a
                .split('+')
                .map(|pair| {
                    let (k, k2) = pair.split_once(';').ok_or_else(|| ParseError::new(line, "fd2 needs `K;K'`"))?;
                    Ok((parse_msg_list(k, n, line)?, parse_msg_list(k2, n, line)?))
                })
                .collect::<ParseResult<Vec<_>>>()?;
            Ok(match pairs.len() {
                1 => {
                    let (k, k2) = pairs.remove(0);
                    GroupingExpr::Fd2(k, k2)
                }
                _ => GroupingExpr::Fd2Bridges(pairs),
            })
        }
        ("intersect", Some(a)) => {
            let mut items: Vec<String> = Vec::new();
            for tok in a.split(',') {
                let t = tok.trim();
                match items.last_mut() {
                    Some(prev) if t.starts_with(|c: char| c.is_ascii_digit()) => {
                        prev.push(',');
                        prev.push_str(t);
                    }
                    _ => items.push(t.to_string()),
                }
            }
            if items.len() < 2 {
                return Err(ParseError::new(line, "intersect needs at least two operands"));
            }
            let operands =
                items.iter().map(|t| parse_expr(t, n, line, known)).collect::<ParseResult<Vec<_>>>()?;
            Ok(GroupingExpr::Intersect(operands))
        }
        (name, None) if is_name(name) => {
            if known.iter().any(|k| k == name) {
                Ok(GroupingExpr::Name(name.to_string()))
            } else {
                Err(ParseError::new(line, format!("undefined grouping name `{name}`")))
            }
        }
        _ => Err(ParseError::new(line, format!("malformed grouping expression `{text}`"))),
    }
}

/// Parses a grouping description whose message indices lie in `[n]`.
pub fn parse_grouping_spec(text: &str, n: usize) -> ParseResult<GroupingSpec> {
    let mut defs: Vec<(String, GroupingExpr)> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut anonymous: Vec<Vec<MsgSet>> = Vec::new();
    let mut block: Option<(String, Vec<Vec<MsgSet>>, usize)> = None;
    let mut result: Option<GroupingExpr> = None;
    let mut last_line = 1;

    let close_block = |block: &mut Option<(String, Vec<Vec<MsgSet>>, usize)>,
                       defs: &mut Vec<(String, GroupingExpr)>|
     -> ParseResult<()> {
        if let Some((name, groups, line)) = block.take() {
            if groups.is_empty() {
                return Err(ParseError::new(line, format!("grouping `{name}` has no groups")));
            }
            defs.push((name, GroupingExpr::Explicit(groups)));
        }
        Ok(())
    };

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if raw.trim().is_empty() {
            close_block(&mut block, &mut defs)?;
        }
        if l.is_empty() {
            continue;
        }
        last_line = line;
        if l.starts_with(|c: char| c.is_ascii_digit() || c == '{') {
            let group = parse_group_line(l, n, line)?;
            match block.as_mut() {
                Some((_, groups, _)) => groups.push(group),
                None => anonymous.push(group),
            }
            continue;
        }
        close_block(&mut block, &mut defs)?;
        let define = |name: &str, names: &mut Vec<String>| -> ParseResult<String> {
            if !is_name(name) || KEYWORDS.contains(&name) {
                return Err(ParseError::new(line, format!("`{name}` is not a usable grouping name")));
            }
            if names.iter().any(|k| k == name) {
                return Err(ParseError::new(line, format!("grouping `{name}` defined twice")));
            }
            names.push(name.to_string());
            Ok(name.to_string())
        };
        if let Some(name) = l.strip_suffix(':') {
            let name = define(name.trim(), &mut names)?;
            block = Some((name, Vec::new(), line));
        } else if let Some((name, expr)) = l.split_once('=') {
            let expr = parse_expr(expr, n, line, &names)?;
            let name = define(name.trim(), &mut names)?;
            defs.push((name, expr));
        } else {
            if result.is_some() {
                return Err(ParseError::new(line, "more than one result expression"));
            }
            result = Some(parse_expr(l, n, line, &names)?);
        }
    }
    close_block(&mut block, &mut defs)?;
    let result = match (result, anonymous.is_empty()) {
        (Some(_), false) => {
            return Err(ParseError::new(last_line, "both a result expression and unnamed group lines"))
        }
        (Some(r), true) => r,
        (None, false) => GroupingExpr::Explicit(anonymous),
        (None, true) => match defs.last() {
            Some((name, _)) if defs.len() == 1 => GroupingExpr::Name(name.clone()),
            _ => return Err(ParseError::new(last_line, "no grouping to evaluate")),
        },
    };
    Ok(GroupingSpec { n, defs, result })
}

impl GroupingSpec {
    /// Evaluates the result over the ground `N_A` of `problem`.
    pub fn resolve(&self, problem: &Problem) -> Result<Grouping> {
        if problem.n() != self.n {
            return Err(Error::invalid(format!(
                "grouping is over {} messages, problem has {}",
                self.n,
                problem.n()
            )));
        }
        let ground = problem.active_servers();
        if ground.is_empty() {
            return Err(Error::invalid("the problem has no active servers"));
        }
        let mut env: Vec<(&str, Grouping)> = Vec::new();
        for (name, e) in &self.defs {
            let g = self.eval(e, &ground, &env)?;
            env.push((name, g));
        }
        let g = self.eval(&self.result, &ground, &env)?;
        g.check_valid_for(problem)?;
        Ok(g)
    }

    fn eval(&self, e: &GroupingExpr, ground: &ServerSet, env: &[(&str, Grouping)]) -> Result<Grouping> {
        let n = self.n;
        match e {
            GroupingExpr::Touch => individual_touch(ground),
            GroupingExpr::AggregateTouch(parts) => aggregate_touch(ground, parts),
            GroupingExpr::Fd2(k, k2) => fd2(ground, *k, *k2),
            GroupingExpr::Fd2Bridges(pairs) => fd2_bridges(ground, pairs),
            GroupingExpr::AllServer => all_server(ground),
            GroupingExpr::Single => single_server(ground),
            GroupingExpr::Intersect(ops) => {
                let mut acc = self.eval(&ops[0], ground, env)?;
                for op in &ops[1..] {
                    acc = intersect(&acc, &self.eval(op, ground, env)?)?;
                }
                Ok(acc)
            }
            GroupingExpr::Explicit(groups) => Grouping::with_ground(
                groups
                    .iter()
                    .map(|g| ServerSet::from_servers(n, g.iter().copied()).intersection(ground))
                    .collect(),
                ground,
            ),
            GroupingExpr::Name(name) => env
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, g)| g.clone())
                .ok_or_else(|| Error::invalid(format!("undefined grouping name `{name}`"))),
        }
    }
}

fn list(s: MsgSet) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GroupingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupingExpr::Touch => f.write_str("touch"),
            GroupingExpr::AggregateTouch(parts) => {
                write!(f, "touch:{}", parts.iter().map(|p| list(*p)).collect::<Vec<_>>().join("|"))
            }
            GroupingExpr::Fd2(k, k2) => write!(f, "fd2:{};{}", list(*k), list(*k2)),
            GroupingExpr::Fd2Bridges(pairs) => {
                let parts: Vec<String> = pairs.iter().map(|(k, k2)| format!("{};{}", list(*k), list(*k2))).collect();
                write!(f, "fd2:{}", parts.join("+"))
            }
            GroupingExpr::AllServer => f.write_str("allserver"),
            GroupingExpr::Single => f.write_str("single"),
            GroupingExpr::Intersect(ops) => {
                write!(f, "intersect:{}", ops.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(","))
            }
            GroupingExpr::Explicit(groups) => {
                for (k, g) in groups.iter().enumerate() {
                    if k > 0 {
                        f.write_str("\n")?;
                    }
                    let servers: Vec<String> = g.iter().map(|j| format!("{{{}}}", list(*j))).collect();
                    f.write_str(&servers.join(" "))?;
                }
                Ok(())
            }
            GroupingExpr::Name(name) => f.write_str(name),
        }
    }
}

impl fmt::Display for GroupingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, e) in &self.defs {
            match e {
                GroupingExpr::Explicit(_) => writeln!(f, "{name}:\n{e}\n")?,
                _ => writeln!(f, "{name} = {e}")?,
            }
        }
        writeln!(f, "{}", self.result)
    }
}
