use proptest::prelude::*;

use dix::catalog::catalog;
use dix::inner::{
    ccc_sum_rate, dstar, fixed_composite_region, fixed_composite_region_pruned, fixed_lp, format_configs,
    fractional_lp, maximal_decoding_sets, parse_config_text, ConfigDraft, DecodingChoice, DecodingConfig,
    GroupChoice, unit_weights,
};
use dix::lp::{solve_checked, InequalitySystem, LinExpr, LinearProgram, Sense};
use dix::{MsgSet, Problem, Rational, ServerSet};

fn value(lp: &LinearProgram) -> Rational {
    solve_checked(lp).unwrap().optimal_value().unwrap()
}

fn region_sum_rate(sys: &InequalitySystem) -> Rational {
    let mut lp = LinearProgram::new(Sense::Maximize);
    let x: Vec<_> = sys.vars.iter().map(|v| lp.var(v.clone())).collect();
    for r in &sys.rows {
        lp.add_le(LinExpr::from_terms(x.iter().copied().zip(r.coeffs.iter().cloned())), r.rhs.clone());
    }
    lp.set_objective(Sense::Maximize, LinExpr::from_terms(x.iter().map(|&v| (v, Rational::ONE))));
    value(&lp)
}

fn sample() -> impl Iterator<Item = &'static Problem> {
    catalog().iter().step_by(7).map(|e| &e.problem)
}

#[test]
fn fixed_composite_region_lies_inside_fixed_lp() {
    for p in sample() {
        let d = dstar(p);
        let region = region_sum_rate(&fixed_composite_region(p, &d).unwrap());
        let pruned = region_sum_rate(&fixed_composite_region_pruned(p, &d).unwrap());
        assert_eq!(region, pruned);
        let cfg = DecodingConfig::uniform(p, &ServerSet::all(4), d).unwrap();
        assert!(region <= value(&fixed_lp(p, &cfg, &unit_weights(4)).unwrap()));
    }
}

#[test]
fn all_servers_and_active_servers_agree() {
    for p in sample() {
        for d in [dstar(p), maximal_decoding_sets(p)] {
            let w = unit_weights(4);
            let all = DecodingConfig::uniform(p, &ServerSet::all(4), d.clone()).unwrap();
            let active = DecodingConfig::uniform(p, &p.active_servers(), d).unwrap();
            assert_eq!(value(&fixed_lp(p, &all, &w).unwrap()), value(&fixed_lp(p, &active, &w).unwrap()));
        }
    }
}

#[test]
fn time_sharing_is_monotone_and_dominates_each_configuration() {
    for p in sample() {
        let w = unit_weights(4);
        let na = p.active_servers();
        let a = DecodingConfig::uniform(p, &na, dstar(p)).unwrap();
        let b = DecodingConfig::uniform(p, &na, maximal_decoding_sets(p)).unwrap();
        let both = value(&fractional_lp(p, &[a.clone(), b.clone()], &w).unwrap());
        assert!(both >= value(&fixed_lp(p, &a, &w).unwrap()));
        assert!(both >= value(&fixed_lp(p, &b, &w).unwrap()));
    }
}

#[test]
fn cooperative_family_growth_never_hurts() {
    for p in sample().take(8) {
        let d = dstar(p);
        let na = p.active_servers();
        let halves: Vec<ServerSet> = {
            let (lo, hi): (Vec<MsgSet>, Vec<MsgSet>) = na.iter().partition(|s| s.contains(1));
            vec![ServerSet::from_servers(4, lo), ServerSet::from_servers(4, hi)]
        };
        let single = ccc_sum_rate(p, &d, std::slice::from_ref(&na)).unwrap();
        let mut family = halves;
        family.push(na.clone());
        assert!(ccc_sum_rate(p, &d, &family).unwrap() >= single);
        let cfg = DecodingConfig::uniform(p, &na, d.clone()).unwrap();
        assert_eq!(single, value(&fixed_lp(p, &cfg, &unit_weights(4)).unwrap()));
    }
}

fn arb_msgs(n: usize) -> impl Strategy<Value = MsgSet> {
    (1u16..(1 << n)).prop_map(MsgSet::from_mask)
}

fn arb_group(n: usize) -> impl Strategy<Value = GroupChoice> {
    prop_oneof![
        Just(GroupChoice::Active),
        Just(GroupChoice::All),
        proptest::collection::btree_set(arb_msgs(n), 1..4).prop_map(|s| GroupChoice::Servers(s.into_iter().collect())),
    ]
}

fn arb_draft() -> impl Strategy<Value = ConfigDraft> {
    (1usize..=5).prop_flat_map(|n| {
        (
            arb_group(n),
            prop_oneof![Just(DecodingChoice::Closure), Just(DecodingChoice::Maximal)],
            proptest::collection::vec(proptest::option::of(arb_group(n)), n),
            proptest::collection::vec(proptest::option::of(arb_msgs(n)), n),
        )
            .prop_map(move |(default_group, default_sets, groups, sets)| ConfigDraft {
                n,
                default_group,
                default_sets,
                groups,
                sets,
                line: 1,
            })
    })
}

fn strip_lines(mut drafts: Vec<ConfigDraft>) -> Vec<ConfigDraft> {
    drafts.iter_mut().for_each(|d| d.line = 0);
    drafts
}

proptest! {
    #[test]
    fn config_text_round_trips(drafts in proptest::collection::vec(arb_draft(), 1..4)) {
        let n = drafts[0].n;
        let drafts: Vec<ConfigDraft> = drafts.into_iter().filter(|d| d.n == n).collect();
        let text = format_configs(&drafts);
        let back = parse_config_text(&text, n).unwrap();
        prop_assert_eq!(strip_lines(back), strip_lines(drafts));
    }
}
