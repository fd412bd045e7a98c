//! The 218 non-isomorphic four-message problems with unit link capacities and
//! their known sum-capacities.

mod data;

use std::sync::OnceLock;

use crate::lp::Rational;
use crate::model::{parse_problem, Problem};

/// Smallest grouping family known to certify an entry's sum-capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Technique {
    /// The single group of all servers.
    AllServer,
    /// A two-group fd grouping.
    Fd2,
    /// Touch sets of a two-part message partition.
    AggregateTouch2,
    /// Touch sets of a three-part message partition.
    AggregateTouch3,
}

impl Technique {
    pub fn name(self) -> &'static str {
        match self {
            Technique::AllServer => "all_server",
            Technique::Fd2 => "fd2",
            Technique::AggregateTouch2 => "aggregate_touch_2",
            Technique::AggregateTouch3 => "aggregate_touch_3",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub problem_no: u16,
    pub problem: Problem,
    pub expected_sumcap: Rational,
    pub technique: Technique,
}

/// All 218 entries ordered by problem number.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        data::ENTRIES
            .iter()
            .map(|&(no, seq, num, den, technique)| CatalogEntry {
                problem_no: no,
                problem: parse_problem(seq, Some(4)).expect("catalog sequences are well formed"),
                expected_sumcap: Rational::new(num, den),
                technique,
            })
            .collect()
    })
}

/// Entry by 1-based problem number.
pub fn entry(problem_no: u16) -> Option<&'static CatalogEntry> {
    let k = usize::from(problem_no).checked_sub(1)?;
    catalog().get(k)
}
