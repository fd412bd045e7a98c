//! Grouping polymatroidal outer bounds.

mod grouping;
pub(crate) mod notation;
mod pm;
mod region;
mod search;

pub use grouping::{
    aggregate_touch, all_server, fd2, fd2_bridges, individual_touch, intersect, is_refinement, m_fd, single_server,
    Grouping,
    MAX_GROUPS,
};
pub use pm::{
    all_server_lp, fl_bound, fl_lp, grouping_pm_lp, grouping_sum_bound, touch_specialized_lp, Merge, OuterLp,
    OuterOptions, OuterStats, SubmodMode,
};
pub use notation::{parse_grouping_spec, GroupingExpr, GroupingSpec};
pub use search::{
    canned_groupings, disjoint_pairs, family_members, fd2_label, search_groupings, search_upper, Family,
    SearchOutcome, Skipped,
};
pub use region::{allserver_region, DEFAULT_FME_MAX_N};
