use std::collections::BTreeMap;

use super::config::DecodingConfig;
use super::fixed::{check_weights, config_rows, rate_vars, weighted, CapTerm, InnerOptions, Materializer};
use crate::error::{Error, Result};
use crate::lp::{solve_checked, LinExpr, LinearProgram, Rational, Sense, VarId};
use crate::model::Problem;
use crate::sets::{MsgSet, ServerSet};

/// Largest accepted CCC server-group family.
pub const MAX_CCC_FAMILY: usize = 1 << 12;

/// Time sharing over several decoding configurations with the link
/// capacities split among them.
pub fn fractional_lp(problem: &Problem, configs: &[DecodingConfig], weights: &[Rational]) -> Result<LinearProgram> {
    fractional_lp_with(problem, configs, weights, &InnerOptions::default())
}

pub fn fractional_lp_with(
    problem: &Problem,
    configs: &[DecodingConfig],
    weights: &[Rational],
    opts: &InnerOptions,
) -> Result<LinearProgram> {
    check_weights(problem, weights)?;
    if configs.is_empty() {
        return Err(Error::invalid("fractional coding needs at least one decoding configuration"));
    }
    let n = problem.n();
    let estimate: u128 = configs
        .iter()
        .map(|c| {
            let servers = c.p.iter().fold(ServerSet::empty(n), |acc, p| acc.union(p));
            (n + (1usize << n) + servers.len()) as u128
        })
        .sum::<u128>()
        + n as u128;
    if estimate > opts.max_vars as u128 {
        return Err(Error::cap("fractional coding variables", estimate, opts.max_vars as u128));
    }

    let mut lp = LinearProgram::new(Sense::Maximize);
    let totals = rate_vars(&mut lp, n, "");
    let mut shares: BTreeMap<MsgSet, Vec<VarId>> = BTreeMap::new();
    let mut per_config_rates = Vec::with_capacity(configs.len());
    for (c, cfg) in configs.iter().enumerate() {
        let suffix = format!("@{}", c + 1);
        let rows = config_rows(problem, cfg, opts)?;
        let rates = rate_vars(&mut lp, n, &suffix);
        let mut local: BTreeMap<MsgSet, VarId> = BTreeMap::new();
        let mut m = Materializer { lp: &mut lp, rates: rates.clone(), composite: BTreeMap::new(), suffix: suffix.clone() };
        m.emit(&rows, |lp, j| {
            let v = *local.entry(j).or_insert_with(|| lp.var(format!("C{}{suffix}", super::fixed::msg_label(j))));
            CapTerm::Var(v)
        });
        for (j, v) in local {
            shares.entry(j).or_default().push(v);
        }
        per_config_rates.push(rates);
    }
    for (i, total) in totals.iter().enumerate() {
        let mut e = LinExpr::from_terms([(*total, Rational::ONE)]);
        for rates in &per_config_rates {
            e.add(rates[i], &-Rational::ONE);
        }
        lp.add_eq(e, Rational::ZERO);
    }
    for (j, vars) in shares {
        lp.add_le(LinExpr::from_terms(vars.into_iter().map(|v| (v, Rational::ONE))), problem.capacity(j).clone());
    }
    lp.set_objective(Sense::Maximize, weighted(&totals, weights));
    Ok(lp)
}

/// Cooperative composite coding for a fixed `D`: one uniform configuration
/// `P_i = P` per member of `family`, capacities split among them.
pub fn ccc_lp(problem: &Problem, d: &[MsgSet], family: &[ServerSet], weights: &[Rational]) -> Result<LinearProgram> {
    if family.is_empty() {
        return Err(Error::invalid("the server-group family is empty"));
    }
    if family.len() > MAX_CCC_FAMILY {
        return Err(Error::cap("server-group family", family.len() as u128, MAX_CCC_FAMILY as u128));
    }
    let configs = family
        .iter()
        .map(|p| DecodingConfig::uniform(problem, p, d.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    fractional_lp(problem, &configs, weights)
}

/// Sum-rate of [`ccc_lp`] with unit weights.
pub fn ccc_sum_rate(problem: &Problem, d: &[MsgSet], family: &[ServerSet]) -> Result<Rational> {
    let lp = ccc_lp(problem, d, family, &vec![Rational::ONE; problem.n()])?;
    solve_checked(&lp)?.optimal_value()
}
