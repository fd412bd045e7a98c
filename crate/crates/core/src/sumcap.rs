//! Sum-capacity verdicts from the default inner bound and a ladder of outer
//! grouping families.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::inner::{fixed_lp, unit_weights, DecodingConfig};
use crate::lp::{solve_checked, Rational};
use crate::model::Problem;
use crate::outer::{canned_groupings, family_members, search_groupings, Family, OuterOptions, Skipped};

/// Families tried in order until the outer bound meets the inner bound.
pub const LADDER: [Family; 4] =
    [Family::AllServer, Family::IndividualTouch, Family::Fd2AllPairs, Family::Fd2BridgePairs];

#[derive(Clone, Debug)]
pub struct Verdict {
    pub inner: Rational,
    pub outer: Rational,
    /// Label of the grouping attaining `outer`.
    pub grouping: String,
    pub established: bool,
    pub inner_time: Duration,
    pub outer_time: Duration,
    pub skipped: Vec<Skipped>,
}

/// Inner bound with `P_i = N_A`, `D = D*`.
pub fn default_inner(problem: &Problem) -> Result<Rational> {
    let cfg = DecodingConfig::standard(problem)?;
    solve_checked(&fixed_lp(problem, &cfg, &unit_weights(problem.n()))?)?.optimal_value()
}

/// Runs the default inner bound and the outer ladder; `catalog_no` enables
/// canned groupings for known catalog problems.
pub fn sumcap(problem: &Problem, catalog_no: Option<u16>, opts: &OuterOptions) -> Result<Verdict> {
    let start = Instant::now();
    let inner = default_inner(problem)?;
    let inner_time = start.elapsed();

    let start = Instant::now();
    let weights = unit_weights(problem.n());
    let mut stages: Vec<Vec<(String, crate::outer::Grouping)>> = Vec::new();
    let mut families = LADDER.iter();
    for family in families.by_ref().take(3) {
        stages.push(family_members(problem, *family)?);
    }
    if let Some(no) = catalog_no {
        stages.push(canned_groupings(no, problem)?);
    }
    for family in families {
        stages.push(family_members(problem, *family)?);
    }
    let mut best: Option<(Rational, String)> = None;
    let mut skipped = Vec::new();
    for members in stages {
        if members.is_empty() {
            continue;
        }
        match search_groupings(problem, members, &weights, opts) {
            Ok(out) => {
                skipped.extend(out.skipped);
                if best.as_ref().is_none_or(|(b, _)| out.value < *b) {
                    best = Some((out.value, out.label));
                }
            }
            Err(error @ crate::Error::CapExceeded { .. }) => {
                skipped.push(Skipped { label: "family".into(), error });
            }
            Err(e) => return Err(e),
        }
        if best.as_ref().is_some_and(|(b, _)| *b <= inner) {
            break;
        }
    }
    let (outer, grouping) = match best {
        Some(b) => b,
        None => {
            return Err(skipped
                .into_iter()
                .next()
                .map(|s| s.error)
                .unwrap_or_else(|| crate::Error::invalid("no grouping could be evaluated")))
        }
    };
    if outer < inner {
        return Err(crate::Error::Invariant(format!("outer bound {outer} below inner bound {inner}")));
    }
    Ok(Verdict {
        established: outer == inner,
        inner,
        outer,
        grouping,
        inner_time,
        outer_time: start.elapsed(),
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::entry;

    #[test]
    fn problem_14_is_established_by_touch() {
        let v = sumcap(&entry(14).unwrap().problem, Some(14), &OuterOptions::default()).unwrap();
        assert!(v.established);
        assert_eq!(v.inner, Rational::from_int(21));
        assert_eq!(v.grouping, "touch");
    }

    #[test]
    fn problem_218_is_established() {
        let v = sumcap(&entry(218).unwrap().problem, Some(218), &OuterOptions::default()).unwrap();
        assert!(v.established);
        assert_eq!(v.outer, Rational::from_int(32));
        assert_eq!(v.grouping, "allserver");
    }

    #[test]
    fn problem_16_is_established_by_two_bridges() {
        let v = sumcap(&entry(16).unwrap().problem, Some(16), &OuterOptions::default()).unwrap();
        assert!(v.established, "{v:?}");
        assert_eq!(v.outer, Rational::from_int(19));
        assert!(v.grouping.contains('+'));
    }

    #[test]
    fn problem_46_reaches_its_value() {
        let v = sumcap(&entry(46).unwrap().problem, Some(46), &OuterOptions::default()).unwrap();
        assert!(v.established);
        assert_eq!(v.outer, Rational::new(70, 3));
        assert_eq!(v.grouping, "canned:fd46");
    }
}
