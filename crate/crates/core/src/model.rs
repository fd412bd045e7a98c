//! Distributed index coding problem instances and their text notation.
//!
//! The notation lists each receiver with its side information, e.g.
//! `(1|-),(2|3),(3|2)`. Optional capacity lines follow it:
//!
//! ```text
//! (1|2,5),(2|3,4),(3|-),(4|2,5),(5|1,2,4)
//! default: 0
//! 1,2,3: 1
//! 1,4: 1
//! 1,3,4,5: 2
//! ```
//!
//! Servers not listed get the `default` capacity, which is itself 1 unless
//! stated. Blank lines and `#` comments are ignored.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::lp::Rational;
use crate::sets::{MsgSet, ServerSet, MAX_MESSAGES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Problem {
    side_info: Vec<MsgSet>,
    /// Indexed by server mask; entry 0 is the dummy empty server and stays 0.
    capacities: Vec<Rational>,
}

impl Problem {
    /// A problem with unit capacity on every nonempty server.
    pub fn new(side_info: Vec<MsgSet>) -> Result<Self> {
        Problem::with_default_capacity(side_info, Rational::ONE)
    }

    pub fn with_default_capacity(side_info: Vec<MsgSet>, default: Rational) -> Result<Self> {
        let n = side_info.len();
        if n == 0 {
            return Err(Error::invalid("a problem needs at least one message"));
        }
        if n > MAX_MESSAGES {
            return Err(Error::invalid(format!(
                "{n} messages requested but at most {MAX_MESSAGES} are supported"
            )));
        }
        if default.is_negative() {
            return Err(Error::invalid("capacities must be nonnegative"));
        }
        let full = MsgSet::full(n);
        for (k, a) in side_info.iter().enumerate() {
            if !a.is_subset(full) {
                return Err(Error::invalid(format!("side information of receiver {} outside [{n}]", k + 1)));
            }
            if a.contains(k + 1) {
                return Err(Error::invalid(format!("receiver {} lists itself as side information", k + 1)));
            }
        }
        let mut capacities = vec![default; 1 << n];
        capacities[0] = Rational::ZERO;
        Ok(Problem { side_info, capacities })
    }

    /// Uniform-capacity problem from 1-based side-information lists.
    pub fn from_lists(lists: &[&[usize]]) -> Result<Self> {
        Problem::new(lists.iter().map(|l| MsgSet::of(l)).collect())
    }

    /// Sets `C_J`; `J` must be a nonempty subset of `[n]`.
    pub fn set_capacity(&mut self, server: MsgSet, c: Rational) -> Result<()> {
        if server.is_empty() || !server.is_subset(MsgSet::full(self.n())) {
            return Err(Error::invalid(format!("{server} is not a server of this problem")));
        }
        if c.is_negative() {
            return Err(Error::invalid(format!("negative capacity {c} for server {server}")));
        }
        self.capacities[server.mask() as usize] = c;
        Ok(())
    }

    /// Builder form of [`Problem::set_capacity`].
    pub fn capacity_set(mut self, server: MsgSet, c: Rational) -> Result<Self> {
        self.set_capacity(server, c)?;
        Ok(self)
    }

    /// Keeps only the listed servers (with their capacities) active.
    pub fn restricted_to(side_info: Vec<MsgSet>, servers: &[(MsgSet, Rational)]) -> Result<Self> {
        let mut p = Problem::with_default_capacity(side_info, Rational::ZERO)?;
        for (j, c) in servers {
            p.set_capacity(*j, c.clone())?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.side_info.len()
    }

    /// `[n]`.
    pub fn messages(&self) -> MsgSet {
        MsgSet::full(self.n())
    }

    /// `A_i` for 1-based `i`; panics when out of range.
    pub fn side_info(&self, i: usize) -> MsgSet {
        self.side_info[i - 1]
    }

    pub fn side_infos(&self) -> &[MsgSet] {
        &self.side_info
    }

    /// `B_i = [n] \ (A_i ∪ {i})`; panics when out of range.
    pub fn interfering(&self, i: usize) -> MsgSet {
        self.messages() - self.side_info(i) - MsgSet::singleton(i)
    }

    /// `C_J`, zero for the empty server.
    pub fn capacity(&self, server: MsgSet) -> &Rational {
        &self.capacities[server.mask() as usize]
    }

    /// Total capacity of a collection of servers.
    pub fn capacity_sum<'a>(&self, servers: impl IntoIterator<Item = &'a MsgSet>) -> Rational {
        let mut acc = Rational::ZERO;
        for j in servers {
            acc += self.capacity(*j);
        }
        acc
    }

    /// `N_A`: servers with strictly positive capacity.
    pub fn active_servers(&self) -> ServerSet {
        ServerSet::from_servers(
            self.n(),
            (1..self.capacities.len())
                .filter(|&m| self.capacities[m].is_positive())
                .map(|m| MsgSet::from_mask(m as u16)),
        )
    }

    /// Whether every nonempty server has capacity exactly 1.
    pub fn has_unit_capacities(&self) -> bool {
        self.capacities[1..].iter().all(|c| *c == Rational::ONE)
    }

    /// The compact sequence form, without capacities.
    pub fn sequence(&self) -> String {
        let mut out = String::new();
        for (k, a) in self.side_info.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&format!("({}|", k + 1));
            if a.is_empty() {
                out.push('-');
            } else {
                let items: Vec<String> = a.iter().map(|i| i.to_string()).collect();
                out.push_str(&items.join(","));
            }
            out.push(')');
        }
        out
    }

    /// Full text form accepted by [`parse_problem`].
    pub fn to_text(&self) -> String {
        let mut out = self.sequence();
        out.push('\n');
        if self.has_unit_capacities() {
            return out;
        }
        let mut counts: BTreeMap<&Rational, usize> = BTreeMap::new();
        for c in &self.capacities[1..] {
            *counts.entry(c).or_default() += 1;
        }
        let default = counts
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
            .map(|(c, _)| (*c).clone())
            .unwrap_or(Rational::ONE);
        if default != Rational::ONE {
            out.push_str(&format!("default: {default}\n"));
        }
        for m in 1..self.capacities.len() {
            let c = &self.capacities[m];
            if *c != default {
                let j = MsgSet::from_mask(m as u16);
                let items: Vec<String> = j.iter().map(|i| i.to_string()).collect();
                out.push_str(&format!("{}: {c}\n", items.join(",")));
            }
        }
        out
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sequence())
    }
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_text().trim_end())
    }
}

/// `B_i` with range checking.
pub fn interfering_set(p: &Problem, i: usize) -> Result<MsgSet> {
    if !(1..=p.n()).contains(&i) {
        return Err(Error::invalid(format!("receiver {i} out of range 1..={}", p.n())));
    }
    Ok(p.interfering(i))
}

/// `N_A`.
pub fn active_servers(p: &Problem) -> ServerSet {
    p.active_servers()
}

/// Parses a problem in sequence notation with an optional capacity block.
/// When `n` is given the receiver count must match it.
pub fn parse_problem(text: &str, n: Option<usize>) -> Result<Problem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (seq_line, seq) = lines.next().ok_or_else(|| ParseError::new(1, "empty problem text"))?;
    let side_info = parse_sequence(seq, seq_line)?;
    if let Some(expected) = n {
        if expected != side_info.len() {
            return Err(ParseError::new(
                seq_line,
                format!("expected {expected} receivers, found {}", side_info.len()),
            )
            .into());
        }
    }
    let count = side_info.len();
    let mut overrides = Vec::new();
    let mut default = Rational::ONE;
    let mut seen_default = false;
    for (line, l) in lines {
        let (key, value) = l
            .split_once(':')
            .ok_or_else(|| ParseError::new(line, format!("expected `servers: capacity`, found `{l}`")))?;
        let value: Rational = value
            .trim()
            .parse()
            .map_err(|e: crate::lp::ParseRationalError| ParseError::new(line, e.to_string()))?;
        if value.is_negative() {
            return Err(ParseError::new(line, "capacities must be nonnegative").into());
        }
        let key = key.trim();
        if key == "default" {
            if seen_default {
                return Err(ParseError::new(line, "duplicate default capacity").into());
            }
            seen_default = true;
            default = value;
        } else {
            let j = parse_msg_list(key, count, line)?;
            if j.is_empty() {
                return Err(ParseError::new(line, "the empty server has no capacity").into());
            }
            if overrides.iter().any(|(_, k, _)| *k == j) {
                return Err(ParseError::new(line, format!("capacity of {j} given twice")).into());
            }
            overrides.push((line, j, value));
        }
    }
    let mut p = Problem::with_default_capacity(side_info, default)
        .map_err(|e| ParseError::new(seq_line, e.to_string()))?;
    for (line, j, c) in overrides {
        p.set_capacity(j, c).map_err(|e| ParseError::new(line, e.to_string()))?;
    }
    Ok(p)
}

/// Parses `1,2,3` (optionally braced) into a message set within `[n]`.
pub(crate) fn parse_msg_list(text: &str, n: usize, line: usize) -> std::result::Result<MsgSet, ParseError> {
    let t = text.trim();
    let t = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t).trim();
    if t.is_empty() || t == "-" {
        return Ok(MsgSet::EMPTY);
    }
    let mut set = MsgSet::EMPTY;
    for tok in t.split(',') {
        let i = parse_index(tok.trim(), n, line)?;
        if set.contains(i) {
            return Err(ParseError::new(line, format!("message {i} repeated in `{text}`")));
        }
        set = set.with(i);
    }
    Ok(set)
}

fn parse_index(tok: &str, n: usize, line: usize) -> std::result::Result<usize, ParseError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(line, format!("malformed message index `{tok}`")));
    }
    match tok.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(i),
        _ => Err(ParseError::new(line, format!("message index {tok} out of range 1..={n}"))),
    }
}

fn parse_sequence(seq: &str, line: usize) -> std::result::Result<Vec<MsgSet>, ParseError> {
    let compact: String = seq.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |msg: String| ParseError::new(line, msg);
    let mut items: Vec<(usize, &str)> = Vec::new();
    let mut rest = compact.as_str();
    loop {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| bad(format!("expected `(` at `{rest}`")))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed `(`".to_string()))?;
        let inner = &body[..close];
        let (recv, side) =
            inner.split_once('|').ok_or_else(|| bad(format!("missing `|` in `({inner})`")))?;
        if recv.is_empty() || !recv.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(format!("malformed receiver index `{recv}`")));
        }
        let r: usize = recv.parse().map_err(|_| bad(format!("receiver index `{recv}` too large")))?;
        items.push((r, side));
        rest = &body[close + 1..];
        if rest.is_empty() {
            break;
        }
        rest = rest.strip_prefix(',').ok_or_else(|| bad(format!("expected `,` at `{rest}`")))?;
    }
    let n = items.len();
    if n > MAX_MESSAGES {
        return Err(bad(format!("{n} receivers given but at most {MAX_MESSAGES} are supported")));
    }
    let mut side_info = Vec::with_capacity(n);
    for (pos, (r, side)) in items.iter().enumerate() {
        if items[..pos].iter().any(|(q, _)| q == r) {
            return Err(bad(format!("duplicate receiver {r}")));
        }
        if *r == 0 || *r > n {
            return Err(bad(format!("receiver index {r} out of range 1..={n}")));
        }
        if *r != pos + 1 {
            return Err(bad(format!("receiver {r} listed in position {}", pos + 1)));
        }
        if side.is_empty() {
            return Err(bad(format!("receiver {r} has an empty side-information list; use `-`")));
        }
        let a = parse_msg_list(side, n, line)?;
        if a.contains(*r) {
            return Err(bad(format!("receiver {r} lists its own message as side information")));
        }
        side_info.push(a);
    }
    Ok(side_info)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_sequence_notation() {
        let p = parse_problem("(1|-),(2|3),(3|2)", None).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.side_infos(), &[MsgSet::EMPTY, MsgSet::of(&[3]), MsgSet::of(&[2])]);
        assert_eq!(p.capacity(MsgSet::of(&[1, 2])), &Rational::ONE);
        assert_eq!(p.capacity(MsgSet::EMPTY), &Rational::ZERO);

        let p = parse_problem("(1|-)", None).unwrap();
        assert_eq!(p.n(), 1);
        assert_eq!(p.side_info(1), MsgSet::EMPTY);

        let p = parse_problem(" ( 1 | 2 , 3 ) ,(2|-),(3|1)\n", Some(3)).unwrap();
        assert_eq!(p.side_info(1), MsgSet::of(&[2, 3]));
    }

    #[test]
    fn rejects_malformed_sequences() {
        let cases = [
            "(1|1),(2|-)",
            "(1|-),(1|-)",
            "(1|3),(2|-)",
            "(2|-),(1|-)",
            "(1|-)(2|-)",
            "(1-)",
            "(1|-),",
            "(x|-)",
            "(1|2,2),(2|-)",
            "(1|),(2|-)",
            "",
            "(1|-),(2|-),(3|-),(4|-),(5|-),(6|-),(7|-),(8|-),(9|-),(10|-),(11|-),(12|-),(13|-),(14|-),(15|-),(16|-),(17|-)",
        ];
        for c in cases {
            assert!(parse_problem(c, None).is_err(), "{c}");
        }
        assert!(parse_problem("(1|-),(2|-)", Some(3)).is_err());
    }

    #[test]
    fn interfering_sets() {
        let p = parse_problem("(1|-),(2|4),(3|4),(4|3)", None).unwrap();
        assert_eq!(interfering_set(&p, 1).unwrap(), MsgSet::of(&[2, 3, 4]));
        assert_eq!(interfering_set(&p, 2).unwrap(), MsgSet::of(&[1, 3]));
        assert!(interfering_set(&p, 5).is_err());
        assert!(interfering_set(&p, 0).is_err());
        let one = parse_problem("(1|-)", None).unwrap();
        assert_eq!(interfering_set(&one, 1).unwrap(), MsgSet::EMPTY);
    }

    #[test]
    fn active_server_sets() {
        let p = parse_problem("(1|-),(2|-),(3|-),(4|-)", None).unwrap();
        assert_eq!(active_servers(&p).len(), 15);

        let text = "(1|2,5),(2|3,4),(3|-),(4|2,5),(5|1,2,4)\ndefault: 0\n1,2,3: 1\n1,4: 1\n1,3,4,5: 2\n";
        let p = parse_problem(text, None).unwrap();
        let expect = ServerSet::from_servers(
            5,
            [MsgSet::of(&[1, 2, 3]), MsgSet::of(&[1, 4]), MsgSet::of(&[1, 3, 4, 5])],
        );
        assert_eq!(active_servers(&p), expect);
        assert_eq!(p.capacity(MsgSet::of(&[1, 3, 4, 5])), &Rational::from_int(2));

        let p = parse_problem("(1|-),(2|1)\ndefault: 0", None).unwrap();
        assert!(active_servers(&p).is_empty());
    }

    #[test]
    fn capacity_block_errors() {
        for c in [
            "(1|-)\n1: -1",
            "(1|-)\n2: 1",
            "(1|-)\n: 1",
            "(1|-)\n1 1",
            "(1|-)\n1: 1\n1: 2",
            "(1|-)\ndefault: 1\ndefault: 2",
            "(1|-)\n1: x",
        ] {
            assert!(parse_problem(c, None).is_err(), "{c:?}");
        }
        let err = parse_problem("(1|-),(2|-)\n\n3: 1", None).unwrap_err();
        assert!(matches!(err, Error::Parse(ParseError { line: 3, .. })), "{err}");
    }

    #[test]
    fn text_round_trip_with_capacities() {
        let text = "(1|2,5),(2|3,4),(3|-),(4|2,5),(5|1,2,4)\ndefault: 0\n1,2,3: 1\n1,4: 1\n1,3,4,5: 2\n";
        let p = parse_problem(text, None).unwrap();
        assert_eq!(p.to_text(), text);
        assert_eq!(parse_problem(&p.to_text(), None).unwrap(), p);
        let q = parse_problem("(1|-),(2|-)\n1,2: 7/2", None).unwrap();
        assert_eq!(q.to_text(), "(1|-),(2|-)\n1,2: 7/2\n");
    }

    fn arb_problem() -> impl Strategy<Value = Problem> {
        (1usize..=6).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<u16>(), n),
                proptest::collection::vec((0i64..4, 1i64..4), 1 << n),
            )
                .prop_map(move |(masks, caps)| {
                    let side: Vec<MsgSet> = masks
                        .iter()
                        .enumerate()
                        .map(|(k, m)| MsgSet::from_mask(m & MsgSet::full(n).mask()).without(k + 1))
                        .collect();
                    let mut p = Problem::new(side).unwrap();
                    for (m, (a, b)) in caps.iter().enumerate().skip(1) {
                        p.set_capacity(MsgSet::from_mask(m as u16), Rational::new(*a, *b)).unwrap();
                    }
                    p
                })
        })
    }

    proptest! {
        #[test]
        fn round_trip(p in arb_problem()) {
            prop_assert_eq!(parse_problem(&p.to_text(), None).unwrap(), p.clone());
            let q = parse_problem(&p.sequence(), Some(p.n())).unwrap();
            prop_assert_eq!(q.side_infos(), p.side_infos());
        }

        #[test]
        fn receiver_partition(p in arb_problem()) {
            for i in 1..=p.n() {
                let (a, b, own) = (p.side_info(i), p.interfering(i), MsgSet::singleton(i));
                prop_assert!(!a.intersects(b) && !a.intersects(own) && !b.intersects(own));
                prop_assert_eq!(a | b | own, p.messages());
            }
        }
    }
}
