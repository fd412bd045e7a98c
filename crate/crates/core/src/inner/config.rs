use std::fmt;

use crate::error::{Error, Result};
use crate::model::Problem;
use crate::sets::{MsgSet, ServerSet};

/// Per-receiver decoding server groups `P_i` and decoding message sets `D_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecodingConfig {
    pub p: Vec<ServerSet>,
    pub d: Vec<MsgSet>,
}

impl DecodingConfig {
    /// Validates `i ∈ D_i`, `D_i ∩ A_i = ∅` and nonempty `P_i` for every receiver.
    pub fn new(problem: &Problem, p: Vec<ServerSet>, d: Vec<MsgSet>) -> Result<Self> {
        let n = problem.n();
        if p.len() != n || d.len() != n {
            return Err(Error::invalid(format!(
                "decoding configuration lists {} server groups and {} message sets for {n} receivers",
                p.len(),
                d.len()
            )));
        }
        for i in 1..=n {
            let (pi, di) = (&p[i - 1], d[i - 1]);
            if pi.n() != n {
                return Err(Error::invalid(format!("server group of receiver {i} is over the wrong message count")));
            }
            if pi.is_empty() {
                return Err(Error::invalid(format!("receiver {i} has an empty decoding server group")));
            }
            if !di.contains(i) {
                return Err(Error::invalid(format!("decoding set {di} of receiver {i} must contain {i}")));
            }
            if !di.is_subset(problem.messages()) {
                return Err(Error::invalid(format!("decoding set {di} of receiver {i} outside [{n}]")));
            }
            if di.intersects(problem.side_info(i)) {
                return Err(Error::invalid(format!("decoding set {di} of receiver {i} meets its side information")));
            }
        }
        Ok(DecodingConfig { p, d })
    }

    /// The same server group for every receiver.
    pub fn uniform(problem: &Problem, group: &ServerSet, d: Vec<MsgSet>) -> Result<Self> {
        DecodingConfig::new(problem, vec![group.clone(); problem.n()], d)
    }

    /// `P_i = N_A` and `D = D*`.
    pub fn standard(problem: &Problem) -> Result<Self> {
        DecodingConfig::uniform(problem, &problem.active_servers(), dstar(problem))
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }
}

impl fmt::Debug for DecodingConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, d)) in self.p.iter().zip(&self.d).enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "P{}={p} D{}={d}", k + 1, k + 1)?;
        }
        Ok(())
    }
}

/// `Δ_i = (⋃_{J ∈ P_i} J) ∩ D_i`.
pub fn delta(_problem: &Problem, cfg: &DecodingConfig, i: usize) -> MsgSet {
    cfg.p[i - 1].messages() & cfg.d[i - 1]
}

/// Decoding message sets from the closure heuristic: start from `D_i = {i}`
/// and, while some `A_j ⊆ A_i ∪ D_i` would enlarge it, replace `D_i` by
/// `(D_i ∪ D_j) \ A_i`. Pairs are scanned in lexicographic order.
pub fn dstar(problem: &Problem) -> Vec<MsgSet> {
    dstar_scan(problem, false)
}

/// As [`dstar`] with pairs scanned in reverse lexicographic order.
pub fn dstar_reversed(problem: &Problem) -> Vec<MsgSet> {
    dstar_scan(problem, true)
}

fn dstar_scan(problem: &Problem, reversed: bool) -> Vec<MsgSet> {
    let n = problem.n();
    let mut d: Vec<MsgSet> = (1..=n).map(MsgSet::singleton).collect();
    let order: Vec<usize> = if reversed { (0..n).rev().collect() } else { (0..n).collect() };
    loop {
        let mut changed = false;
        for &i in &order {
            for &j in &order {
                if i == j {
                    continue;
                }
                let ai = problem.side_info(i + 1);
                if problem.side_info(j + 1).is_subset(ai | d[i]) {
                    let next = (d[i] | d[j]) - ai;
                    if next != d[i] {
                        d[i] = next;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return d;
        }
    }
}

/// `D_i = [n] \ A_i` for every receiver.
pub fn maximal_decoding_sets(problem: &Problem) -> Vec<MsgSet> {
    (1..=problem.n()).map(|i| problem.messages() - problem.side_info(i)).collect()
}

/// Every tuple `(D_1, …, D_n)` with `i ∈ D_i ⊆ [n] \ A_i`, in lexicographic order.
pub fn all_decoding_tuples(problem: &Problem) -> Vec<Vec<MsgSet>> {
    let choices: Vec<Vec<MsgSet>> = (1..=problem.n())
        .map(|i| {
            let free = problem.messages() - problem.side_info(i) - MsgSet::singleton(i);
            free.subsets().map(|s| s.with(i)).collect()
        })
        .collect();
    let mut out: Vec<Vec<MsgSet>> = vec![Vec::new()];
    for opts in &choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out
}

/// All nonempty subsets of `servers`, ordered by their bit pattern over the
/// server list.
pub fn server_subfamilies(servers: &ServerSet) -> Vec<ServerSet> {
    let list = servers.to_vec();
    (1u64..1u64 << list.len())
        .map(|bits| {
            ServerSet::from_servers(
                servers.n(),
                list.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &j)| j),
            )
        })
        .collect()
}
