use proptest::prelude::*;

use dix::catalog::catalog;
use dix::inner::{fixed_lp, unit_weights, DecodingConfig};
use dix::lp::{
    parse_dump, solve, solve_checked, solve_with, write_dump, LinExpr, LinearProgram, PivotRule, Sense,
    SolverOptions,
};
use dix::outer::{all_server, grouping_pm_lp, OuterOptions};
use dix::Rational;

fn sample_lps() -> Vec<LinearProgram> {
    let mut out = Vec::new();
    for e in catalog().iter().step_by(37) {
        let p = &e.problem;
        let w = unit_weights(4);
        out.push(fixed_lp(p, &DecodingConfig::standard(p).unwrap(), &w).unwrap());
        let g = all_server(&p.active_servers()).unwrap();
        out.push(grouping_pm_lp(p, &g, &w, &OuterOptions::default()).unwrap().lp);
    }
    out
}

#[test]
fn solves_are_deterministic() {
    for lp in sample_lps() {
        let (a, b) = (solve(&lp), solve(&lp));
        assert_eq!(a.value, b.value);
        assert_eq!(a.primal, b.primal);
        assert_eq!(a.pivots, b.pivots);
    }
}

#[test]
fn float_guided_and_exact_solves_agree() {
    let exact = SolverOptions { float_guide: false, ..SolverOptions::default() };
    let bland = SolverOptions { rule: PivotRule::Bland, stall_limit: 0, float_guide: false };
    for lp in sample_lps() {
        let guided = solve_checked(&lp).unwrap();
        let plain = solve_with(&lp, exact);
        plain.verify(&lp).unwrap();
        assert_eq!(guided.value, plain.value);
        if lp.num_constraints() < 400 {
            assert_eq!(solve_with(&lp, bland).value, plain.value);
        }
    }
}

#[test]
fn dumps_of_real_programs_round_trip() {
    for lp in sample_lps() {
        let text = write_dump(&lp);
        let back = parse_dump(&text).unwrap();
        assert_eq!(write_dump(&back), text);
        assert_eq!(solve(&back).value, solve(&lp).value);
    }
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(a, b)| Rational::new(a, b)),
        (-1000i64..1000, 1i64..50).prop_map(|(a, b)| Rational::new(a, b)),
    ]
}

proptest! {
    #[test]
    fn rational_text_round_trips(r in arb_rational()) {
        prop_assert_eq!(Rational::parse(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn random_program_dump_round_trips(
        rows in proptest::collection::vec((proptest::collection::vec(-5i64..=5, 3), 0i64..=9, 0u8..3), 1..6),
        cost in proptest::collection::vec(-3i64..=3, 3),
    ) {
        let mut lp = LinearProgram::new(Sense::Maximize);
        let x: Vec<_> = (0..3).map(|k| lp.var(format!("x{k}"))).collect();
        for (coeffs, rhs, rel) in &rows {
            let e = LinExpr::from_terms(x.iter().zip(coeffs).map(|(&v, &c)| (v, Rational::from_int(c))));
            let rhs = Rational::from_int(*rhs);
            match rel {
                0 => lp.add_le(e, rhs),
                1 => lp.add_ge(e, rhs),
                _ => lp.add_eq(e, rhs),
            }
        }
        lp.set_objective(Sense::Maximize, LinExpr::from_terms(x.iter().zip(&cost).map(|(&v, &c)| (v, Rational::from_int(c)))));
        let text = write_dump(&lp);
        let back = parse_dump(&text).unwrap();
        prop_assert_eq!(write_dump(&back), text);
    }
}
