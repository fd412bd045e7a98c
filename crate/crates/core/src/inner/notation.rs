//! Text form of decoding configurations.
//!
//! ```text
//! # one configuration per block, blocks separated by `---`
//! P = active              # default group for every receiver: `active`, `all` or servers
//! P3 = {1,4} 2,3          # group of receiver 3
//! D = dstar               # default sets: `dstar` or `max`
//! D2 = 1,2                # decoding set of receiver 2
//! ---
//! P = {1,2,3}
//! ```
//!
//! Unset groups default to the active servers, unset decoding sets to the
//! closure heuristic.

use std::fmt;

use super::config::{dstar, maximal_decoding_sets, DecodingConfig};
use crate::error::{ParseError, Result};
use crate::model::{parse_msg_list, Problem};
use crate::outer::notation::parse_group_line;
use crate::sets::{MsgSet, ServerSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupChoice {
    Active,
    All,
    Servers(Vec<MsgSet>),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DecodingChoice {
    Closure,
    Maximal,
}

/// One configuration block before it is checked against a problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigDraft {
    pub n: usize,
    pub default_group: GroupChoice,
    pub default_sets: DecodingChoice,
    pub groups: Vec<Option<GroupChoice>>,
    pub sets: Vec<Option<MsgSet>>,
    pub line: usize,
}

impl ConfigDraft {
    fn new(n: usize, line: usize) -> Self {
        ConfigDraft {
            n,
            default_group: GroupChoice::Active,
            default_sets: DecodingChoice::Closure,
            groups: vec![None; n],
            sets: vec![None; n],
            line,
        }
    }

    pub fn resolve(&self, problem: &Problem) -> Result<DecodingConfig> {
        let n = problem.n();
        if n != self.n {
            return Err(crate::Error::invalid(format!(
                "configuration is over {} receivers, problem has {n}",
                self.n
            )));
        }
        let group = |c: &GroupChoice| match c {
            GroupChoice::Active => problem.active_servers(),
            GroupChoice::All => ServerSet::all(n),
            GroupChoice::Servers(list) => ServerSet::from_servers(n, list.iter().copied()),
        };
        let defaults = match self.default_sets {
            DecodingChoice::Closure => dstar(problem),
            DecodingChoice::Maximal => maximal_decoding_sets(problem),
        };
        let p = self.groups.iter().map(|g| group(g.as_ref().unwrap_or(&self.default_group))).collect();
        let d = self.sets.iter().zip(defaults).map(|(s, def)| s.unwrap_or(def)).collect();
        DecodingConfig::new(problem, p, d)
    }
}

fn receiver_key(key: &str, prefix: char, n: usize, line: usize) -> std::result::Result<Option<usize>, ParseError> {
    let rest = &key[prefix.len_utf8()..];
    if rest.is_empty() || rest == "*" {
        return Ok(None);
    }
    if !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(line, format!("malformed key `{key}`")));
    }
    match rest.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(Some(i)),
        _ => Err(ParseError::new(line, format!("receiver {rest} out of range 1..={n}"))),
    }
}

/// Parses configuration blocks for a problem with `n` receivers.
pub fn parse_config_text(text: &str, n: usize) -> std::result::Result<Vec<ConfigDraft>, ParseError> {
    let mut out = Vec::new();
    let mut current = ConfigDraft::new(n, 1);
    let mut touched = false;
    let mut seen_default = (false, false);
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        if l.chars().all(|c| c == '-') && l.len() >= 3 {
            if !touched {
                return Err(ParseError::new(line, "empty configuration block"));
            }
            out.push(std::mem::replace(&mut current, ConfigDraft::new(n, line + 1)));
            touched = false;
            seen_default = (false, false);
            continue;
        }
        let (key, value) =
            l.split_once('=').ok_or_else(|| ParseError::new(line, format!("expected `key = value`, found `{l}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if !touched {
            current.line = line;
        }
        touched = true;
        if key.starts_with('P') {
            let choice = match value {
                "active" => GroupChoice::Active,
                "all" => GroupChoice::All,
                _ => {
                    let servers = parse_group_line(value, n, line)?;
                    if servers.is_empty() {
                        return Err(ParseError::new(line, "a decoding server group needs servers"));
                    }
                    GroupChoice::Servers(servers)
                }
            };
            match receiver_key(key, 'P', n, line)? {
                None if seen_default.0 => return Err(ParseError::new(line, "default group given twice")),
                None => {
                    seen_default.0 = true;
                    current.default_group = choice;
                }
                Some(i) if current.groups[i - 1].is_some() => {
                    return Err(ParseError::new(line, format!("group of receiver {i} given twice")))
                }
                Some(i) => current.groups[i - 1] = Some(choice),
            }
        } else if key.starts_with('D') {
            match receiver_key(key, 'D', n, line)? {
                None if seen_default.1 => return Err(ParseError::new(line, "default decoding sets given twice")),
                None => {
                    seen_default.1 = true;
                    current.default_sets = match value {
                        "dstar" => DecodingChoice::Closure,
                        "max" => DecodingChoice::Maximal,
                        other => {
                            return Err(ParseError::new(line, format!("default decoding sets must be `dstar` or `max`, found `{other}`")))
                        }
                    };
                }
                Some(i) if current.sets[i - 1].is_some() => {
                    return Err(ParseError::new(line, format!("decoding set of receiver {i} given twice")))
                }
                Some(i) => current.sets[i - 1] = Some(parse_msg_list(value, n, line)?),
            }
        } else {
            return Err(ParseError::new(line, format!("unknown key `{key}`")));
        }
    }
    if touched || out.is_empty() {
        out.push(current);
    }
    Ok(out)
}

impl fmt::Display for GroupChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupChoice::Active => f.write_str("active"),
            GroupChoice::All => f.write_str("all"),
            GroupChoice::Servers(list) => {
                let parts: Vec<String> = list.iter().map(|j| j.to_string()).collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

impl fmt::Display for ConfigDraft {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "P = {}", self.default_group)?;
        let sets = match self.default_sets {
            DecodingChoice::Closure => "dstar",
            DecodingChoice::Maximal => "max",
        };
        writeln!(f, "D = {sets}")?;
        for (k, g) in self.groups.iter().enumerate() {
            if let Some(g) = g {
                writeln!(f, "P{} = {g}", k + 1)?;
            }
        }
        for (k, d) in self.sets.iter().enumerate() {
            if let Some(d) = d {
                writeln!(f, "D{} = {d}", k + 1)?;
            }
        }
        Ok(())
    }
}

/// Configuration blocks in the text form read by [`parse_config_text`].
pub fn format_configs(drafts: &[ConfigDraft]) -> String {
    drafts.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("---\n")
}

/// Parses and validates configuration blocks against `problem`.
pub fn parse_configs(text: &str, problem: &Problem) -> Result<Vec<DecodingConfig>> {
    parse_config_text(text, problem.n())?.iter().map(|d| d.resolve(problem)).collect()
}
