use std::fmt;
use std::str::FromStr;

use super::grouping::{all_server, fd2, fd2_bridges, individual_touch, intersect, m_fd, Grouping};
use super::pm::{grouping_pm_lp, OuterOptions};
use crate::error::{Error, Result};
use crate::lp::Rational;
use crate::model::Problem;
use crate::sets::{MsgSet, ServerSet};

/// Finite grouping families searched for the smallest outer bound.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    AllServer,
    IndividualTouch,
    /// Maximal 2-fd groupings over all unordered disjoint pairs.
    Fd2AllPairs,
    /// 2-fd groupings whose first group avoids the bridges of two disjoint pairs.
    Fd2BridgePairs,
    /// Individual touch intersected with each maximal 2-fd grouping.
    TouchCrossFd2,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::AllServer,
        Family::IndividualTouch,
        Family::Fd2AllPairs,
        Family::Fd2BridgePairs,
        Family::TouchCrossFd2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AllServer => "all_server",
            Family::IndividualTouch => "individual_touch",
            Family::Fd2AllPairs => "fd2_all_pairs",
            Family::Fd2BridgePairs => "fd2_bridge_pairs",
            Family::TouchCrossFd2 => "touch_cross_fd2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().replace('_', "") == s)
            .ok_or_else(|| Error::invalid(format!("unknown grouping family `{s}`")))
    }
}

/// Unordered pairs of disjoint nonempty message sets of `[n]`, each with `k < k2`.
pub fn disjoint_pairs(n: usize) -> Vec<(MsgSet, MsgSet)> {
    let full = MsgSet::full(n);
    let mut out = Vec::new();
    for k in full.nonempty_subsets() {
        for k2 in (full - k).nonempty_subsets() {
            if k.mask() < k2.mask() {
                out.push((k, k2));
            }
        }
    }
    out
}

/// Text form of an fd2 member, e.g. `fd2:1,2;4`.
pub fn fd2_label(k: MsgSet, k2: MsgSet) -> String {
    let list = |s: MsgSet| s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
    format!("fd2:{};{}", list(k), list(k2))
}

/// Labelled members of `family` over the ground `N_A`, repeated groupings dropped.
pub fn family_members(problem: &Problem, family: Family) -> Result<Vec<(String, Grouping)>> {
    let ground = problem.active_servers();
    if ground.is_empty() {
        return Err(Error::invalid("the problem has no active servers"));
    }
    let n = problem.n();
    let mut out: Vec<(String, Grouping)> = Vec::new();
    let mut push = |label: String, g: Grouping| {
        if !out.iter().any(|(_, h)| *h == g) {
            out.push((label, g));
        }
    };
    match family {
        Family::AllServer => push("allserver".into(), all_server(&ground)?),
        Family::IndividualTouch => push("touch".into(), individual_touch(&ground)?),
        Family::Fd2AllPairs => {
            for (k, k2) in disjoint_pairs(n) {
                push(fd2_label(k, k2), fd2(&ground, k, k2)?);
            }
        }
        Family::Fd2BridgePairs => {
            let pairs = disjoint_pairs(n);
            for (a, &(k, k2)) in pairs.iter().enumerate() {
                for &(l, l2) in &pairs[a + 1..] {
                    let g = fd2_bridges(&ground, &[(k, k2), (l, l2)])?;
                    if g.m() < 2 {
                        continue;
                    }
                    let label = format!("{}+{}", fd2_label(k, k2), fd2_label(l, l2).trim_start_matches("fd2:"));
                    push(label, g);
                }
            }
        }
        Family::TouchCrossFd2 => {
            let touch = individual_touch(&ground)?;
            for (k, k2) in disjoint_pairs(n) {
                let g = intersect(&touch, &fd2(&ground, k, k2)?)?;
                push(format!("touch*{}", fd2_label(k, k2)), g);
            }
        }
    }
    Ok(out)
}

/// A family member that could not be evaluated.
#[derive(Clone, Debug)]
pub struct Skipped {
    pub label: String,
    pub error: Error,
}

/// Smallest bound found over a family.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub value: Rational,
    pub label: String,
    pub grouping: Grouping,
    pub evaluated: usize,
    pub skipped: Vec<Skipped>,
}

/// Minimum of the weighted grouping bound over a list of labelled groupings;
/// members exceeding a size cap are skipped and recorded.
pub fn search_groupings(
    problem: &Problem,
    members: Vec<(String, Grouping)>,
    weights: &[Rational],
    opts: &OuterOptions,
) -> Result<SearchOutcome> {
    let mut best: Option<(Rational, String, Grouping)> = None;
    let mut skipped = Vec::new();
    let mut evaluated = 0;
    for (label, g) in members {
        let value = match grouping_pm_lp(problem, &g, weights, opts).and_then(|lp| lp.value()) {
            Ok(v) => v,
            Err(error @ Error::CapExceeded { .. }) => {
                skipped.push(Skipped { label, error });
                continue;
            }
            Err(e) => return Err(e),
        };
        evaluated += 1;
        if best.as_ref().is_none_or(|(b, _, _)| value < *b) {
            best = Some((value, label, g));
        }
    }
    match best {
        Some((value, label, grouping)) => Ok(SearchOutcome { value, label, grouping, evaluated, skipped }),
        None => match skipped.into_iter().next() {
            Some(s) => Err(s.error),
            None => Err(Error::invalid("the grouping family is empty")),
        },
    }
}

/// Minimum weighted outer bound over a named family.
pub fn search_upper(problem: &Problem, family: Family, weights: &[Rational], opts: &OuterOptions) -> Result<SearchOutcome> {
    search_groupings(problem, family_members(problem, family)?, weights, opts)
}

/// The non-maximal 2-fd grouping known to certify catalog problem 46.
pub fn canned_groupings(problem_no: u16, problem: &Problem) -> Result<Vec<(String, Grouping)>> {
    if problem_no != 46 || problem.n() != 4 {
        return Ok(Vec::new());
    }
    let first: &[&[usize]] = &[&[1], &[2], &[3], &[4], &[1, 2], &[1, 3], &[2, 4], &[3, 4]];
    let ground = problem.active_servers();
    let q1 = ServerSet::from_servers(4, first.iter().map(|s| MsgSet::of(s))).intersection(&ground);
    Ok(vec![("canned:fd46".into(), m_fd(&ground, vec![q1.clone(), ground.difference(&q1)])?)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entry;
    use crate::inner::unit_weights;

    #[test]
    fn pair_count() {
        assert_eq!(disjoint_pairs(2).len(), 1);
        assert_eq!(disjoint_pairs(3).len(), 6);
        assert_eq!(disjoint_pairs(4).len(), 25);
        assert_eq!(fd2_label(MsgSet::of(&[1, 2]), MsgSet::of(&[4])), "fd2:1,2;4");
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn problem_14_touch_search() {
        let p = &entry(14).unwrap().problem;
        let out = search_upper(p, Family::IndividualTouch, &unit_weights(4), &OuterOptions::default()).unwrap();
        assert_eq!(out.value, Rational::from_int(21));
        assert_eq!(out.label, "touch");
    }

    #[test]
    fn members_are_distinct() {
        let p = &entry(46).unwrap().problem;
        let members = family_members(p, Family::Fd2AllPairs).unwrap();
        for (a, (_, g)) in members.iter().enumerate() {
            assert!(members[a + 1..].iter().all(|(_, h)| h != g));
        }
    }

    #[test]
    fn canned_grouping_for_46() {
        let p = &entry(46).unwrap().problem;
        let members = canned_groupings(46, p).unwrap();
        let out = search_groupings(p, members, &unit_weights(4), &OuterOptions::default()).unwrap();
        assert_eq!(out.value, Rational::new(70, 3));
        assert!(canned_groupings(14, &entry(14).unwrap().problem).unwrap().is_empty());
    }

    #[test]
    fn cap_errors_are_recorded() {
        let p = &entry(14).unwrap().problem;
        let opts = OuterOptions { max_lattice: 32, ..OuterOptions::default() };
        let ground = p.active_servers();
        let members = vec![
            ("touch".to_string(), individual_touch(&ground).unwrap()),
            ("allserver".to_string(), all_server(&ground).unwrap()),
        ];
        let out = search_groupings(p, members, &unit_weights(4), &opts).unwrap();
        assert_eq!(out.skipped.len(), 1);
        assert_eq!(out.value, Rational::from_int(22));
        assert!(search_upper(p, Family::IndividualTouch, &unit_weights(4), &opts).is_err());
    }
}
