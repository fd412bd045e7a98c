use proptest::prelude::*;

use dix::catalog::{catalog, Technique};
use dix::model::interfering_set;
use dix::{parse_problem, MsgSet, Problem, Rational};

#[test]
fn catalog_text_round_trips() {
    for e in catalog() {
        let text = e.problem.to_text();
        assert_eq!(parse_problem(&text, None).unwrap(), e.problem, "problem {}", e.problem_no);
        assert_eq!(parse_problem(&e.problem.sequence(), Some(4)).unwrap(), e.problem);
    }
}

#[test]
fn catalog_receivers_partition_messages() {
    for e in catalog() {
        let p = &e.problem;
        for i in 1..=4 {
            let a = p.side_info(i);
            let b = interfering_set(p, i).unwrap();
            let own = MsgSet::singleton(i);
            assert!(!a.intersects(b) && !a.intersects(own) && !b.intersects(own));
            assert_eq!(a | b | own, MsgSet::full(4));
        }
    }
}

#[test]
fn catalog_technique_counts() {
    let count = |t: Technique| catalog().iter().filter(|e| e.technique == t).count();
    assert_eq!(catalog().len(), 218);
    assert_eq!(count(Technique::AllServer), 145);
    assert_eq!(count(Technique::Fd2), 10);
}

fn arb_problem() -> impl Strategy<Value = Problem> {
    (1usize..=5).prop_flat_map(|n| {
        let side = proptest::collection::vec(0u16..(1 << n), n);
        let caps = proptest::collection::vec((0i64..=4, 1i64..=3), (1 << n) - 1);
        (Just(n), side, caps).prop_map(|(_, side, caps)| {
            let side: Vec<MsgSet> =
                side.iter().enumerate().map(|(k, &m)| MsgSet::from_mask(m).without(k + 1)).collect();
            let mut p = Problem::new(side).unwrap();
            for (k, (num, den)) in caps.into_iter().enumerate() {
                p.set_capacity(MsgSet::from_mask(k as u16 + 1), Rational::new(num, den)).unwrap();
            }
            p
        })
    })
}

proptest! {
    #[test]
    fn text_round_trip(p in arb_problem()) {
        prop_assert_eq!(parse_problem(&p.to_text(), None).unwrap(), p);
    }

    #[test]
    fn receivers_partition_messages(p in arb_problem()) {
        for i in 1..=p.n() {
            let b = interfering_set(&p, i).unwrap();
            prop_assert_eq!(p.side_info(i) | b | MsgSet::singleton(i), p.messages());
            prop_assert!(!p.side_info(i).intersects(b));
        }
    }

    #[test]
    fn active_servers_have_positive_capacity(p in arb_problem()) {
        for j in p.messages().nonempty_subsets() {
            prop_assert_eq!(p.active_servers().contains(j), p.capacity(j).is_positive());
        }
    }
}
