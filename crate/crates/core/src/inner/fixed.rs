use std::collections::{BTreeMap, HashSet};

use super::config::{delta, DecodingConfig};
use crate::error::{Error, Result};
use crate::lp::{LinExpr, LinearProgram, Rational, Sense, VarId};
use crate::model::Problem;
use crate::sets::{MsgFamily, MsgSet, ServerSet};

/// How first-step decoding constraints are enumerated. All forms describe
/// the same region.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FirstStepForm {
    /// Server-group subsets when `P_i` is smaller than its set of unknown
    /// composite indices, composite-index subsets otherwise.
    Auto,
    /// One row per distinct set of servers `Γ^*(M) ∩ P_i`, with `M` taken
    /// as large as that server set allows.
    CompositeSubsets,
    /// One row per nonempty `M ⊆ Γ*(P_i) \ 2^{A_i}`, without pruning.
    CompositeSubsetsUnpruned,
    /// One row per nonempty `Q ⊆ P_i`.
    ServerSubsets,
}

#[derive(Copy, Clone, Debug)]
pub struct InnerOptions {
    pub form: FirstStepForm,
    /// Refuse to emit more first-step rows than this for one receiver.
    pub max_rows_per_receiver: usize,
    /// Refuse fractional programs with more variables than this.
    pub max_vars: usize,
}

impl Default for InnerOptions {
    fn default() -> Self {
        InnerOptions { form: FirstStepForm::Auto, max_rows_per_receiver: 1 << 18, max_vars: 1 << 16 }
    }
}

/// Constraint skeleton of one decoding configuration, independent of
/// whether link capacities are constants or variables.
#[derive(Debug, Default)]
pub(crate) struct ConfigRows {
    /// Receivers whose own message is not recoverable (`i ∉ Δ_i`).
    pub zero_rates: Vec<usize>,
    /// `Σ_{j∈L} R_j ≤ Σ_{K} S_K`.
    pub second: Vec<(MsgSet, Vec<MsgSet>)>,
    /// `Σ_{K} S_K ≤ Σ_{J} C_J`.
    pub first: Vec<(Vec<MsgSet>, Vec<MsgSet>)>,
}

pub(crate) fn config_rows(problem: &Problem, cfg: &DecodingConfig, opts: &InnerOptions) -> Result<ConfigRows> {
    let n = problem.n();
    let mut rows = ConfigRows::default();
    let mut seen_first: HashSet<(Vec<MsgSet>, Vec<MsgSet>)> = HashSet::new();
    for i in 1..=n {
        let pi = &cfg.p[i - 1];
        let ai = problem.side_info(i);
        let di = delta(problem, cfg, i);
        if !di.contains(i) {
            rows.zero_rates.push(i);
        }
        if di.is_empty() {
            continue;
        }
        let completion = pi.subset_completion();
        let useful: Vec<MsgSet> =
            completion.iter().filter(|k| !k.is_empty() && k.is_subset(di | ai)).collect();
        for l in di.nonempty_subsets() {
            let ks: Vec<MsgSet> = useful.iter().copied().filter(|k| k.intersects(l)).collect();
            rows.second.push((l, ks));
        }
        let unknown: Vec<MsgSet> = completion.iter().filter(|k| !k.is_subset(ai)).collect();
        let form = match opts.form {
            FirstStepForm::Auto if pi.len() < unknown.len() => FirstStepForm::ServerSubsets,
            FirstStepForm::Auto => FirstStepForm::CompositeSubsets,
            f => f,
        };
        let first = match form {
            FirstStepForm::ServerSubsets => server_subset_rows(pi, ai, i, opts)?,
            FirstStepForm::CompositeSubsetsUnpruned => composite_rows_unpruned(pi, &unknown, i, opts)?,
            _ => composite_rows(pi, &unknown, i, opts)?,
        };
        for r in first {
            if seen_first.insert(r.clone()) {
                rows.first.push(r);
            }
        }
    }
    Ok(rows)
}

fn too_many(i: usize, estimate: u128, opts: &InnerOptions) -> Error {
    Error::cap(
        format!("first-step constraints of receiver {i}"),
        estimate,
        opts.max_rows_per_receiver as u128,
    )
}

/// `Γ^*({K}) ∩ P` for each unknown `K`.
fn holders(pi: &ServerSet, unknown: &[MsgSet]) -> Vec<ServerSet> {
    unknown
        .iter()
        .map(|&k| MsgFamily::from_sets(pi.n(), [k]).superset_completion().intersection(pi))
        .collect()
}

fn composite_rows(
    pi: &ServerSet,
    unknown: &[MsgSet],
    i: usize,
    opts: &InnerOptions,
) -> Result<Vec<(Vec<MsgSet>, Vec<MsgSet>)>> {
    let hold = holders(pi, unknown);
    // Every reachable union of holder sets, in discovery order.
    let mut unions: Vec<ServerSet> = Vec::new();
    let mut seen: HashSet<ServerSet> = HashSet::new();
    for h in &hold {
        let mut fresh = Vec::new();
        for u in unions.iter().chain(std::iter::once(&ServerSet::empty(pi.n()))) {
            let v = u.union(h);
            if !seen.contains(&v) {
                seen.insert(v.clone());
                fresh.push(v);
            }
        }
        unions.extend(fresh);
        if unions.len() > opts.max_rows_per_receiver {
            return Err(too_many(i, unions.len() as u128, opts));
        }
    }
    unions.sort();
    Ok(unions
        .into_iter()
        .map(|u| {
            let m: Vec<MsgSet> =
                unknown.iter().zip(&hold).filter(|(_, h)| h.is_subset(&u)).map(|(k, _)| *k).collect();
            (m, u.to_vec())
        })
        .collect())
}

fn composite_rows_unpruned(
    pi: &ServerSet,
    unknown: &[MsgSet],
    i: usize,
    opts: &InnerOptions,
) -> Result<Vec<(Vec<MsgSet>, Vec<MsgSet>)>> {
    let count = 1u128 << unknown.len().min(127);
    if unknown.len() >= 64 || count - 1 > opts.max_rows_per_receiver as u128 {
        return Err(too_many(i, count - 1, opts));
    }
    let hold = holders(pi, unknown);
    Ok((1u64..1u64 << unknown.len())
        .map(|bits| {
            let mut u = ServerSet::empty(pi.n());
            let mut m = Vec::new();
            for (k, h) in hold.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    u = u.union(h);
                    m.push(unknown[k]);
                }
            }
            (m, u.to_vec())
        })
        .collect())
}

fn server_subset_rows(
    pi: &ServerSet,
    ai: MsgSet,
    i: usize,
    opts: &InnerOptions,
) -> Result<Vec<(Vec<MsgSet>, Vec<MsgSet>)>> {
    let servers = pi.to_vec();
    let count = 1u128 << servers.len().min(127);
    if servers.len() >= 64 || count - 1 > opts.max_rows_per_receiver as u128 {
        return Err(too_many(i, count - 1, opts));
    }
    let known = MsgFamily::power_set(pi.n(), ai);
    let mut out = Vec::new();
    for bits in 1u64..1u64 << servers.len() {
        let (q, rest): (Vec<_>, Vec<_>) =
            servers.iter().enumerate().partition(|(k, _)| bits >> k & 1 == 1);
        let q = ServerSet::from_servers(pi.n(), q.into_iter().map(|(_, &j)| j));
        let rest = ServerSet::from_servers(pi.n(), rest.into_iter().map(|(_, &j)| j));
        let only_here = q.subset_completion().difference(&rest.subset_completion()).difference(&known);
        if only_here.is_empty() {
            continue;
        }
        out.push((only_here.to_vec(), q.to_vec()));
    }
    Ok(out)
}

pub(crate) fn msg_label(s: MsgSet) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Adds the variables and rows of one configuration; `suffix` tags
/// variable names and `capacity` supplies the right side of first-step rows.
pub(crate) struct Materializer<'a> {
    pub lp: &'a mut LinearProgram,
    pub rates: Vec<VarId>,
    pub composite: BTreeMap<MsgSet, VarId>,
    pub suffix: String,
}

impl Materializer<'_> {
    pub fn composite_var(&mut self, k: MsgSet) -> VarId {
        if let Some(&v) = self.composite.get(&k) {
            return v;
        }
        let v = self.lp.var(format!("S{}{}", msg_label(k), self.suffix));
        self.composite.insert(k, v);
        v
    }

    /// Emits the rows; `capacity` returns either a constant or a variable term per server.
    pub fn emit(&mut self, rows: &ConfigRows, mut capacity: impl FnMut(&mut LinearProgram, MsgSet) -> CapTerm) {
        for &i in &rows.zero_rates {
            self.lp.add_eq(LinExpr::from_terms([(self.rates[i - 1], Rational::ONE)]), Rational::ZERO);
        }
        for (l, ks) in &rows.second {
            let mut e = LinExpr::new();
            for j in l.iter() {
                e.add(self.rates[j - 1], &Rational::ONE);
            }
            for &k in ks {
                let v = self.composite_var(k);
                e.add(v, &-Rational::ONE);
            }
            self.lp.add_le(e, Rational::ZERO);
        }
        for (ks, servers) in &rows.first {
            let mut e = LinExpr::new();
            for &k in ks {
                let v = self.composite_var(k);
                e.add(v, &Rational::ONE);
            }
            let mut rhs = Rational::ZERO;
            for &j in servers {
                match capacity(self.lp, j) {
                    CapTerm::Const(c) => rhs += c,
                    CapTerm::Var(v) => e.add(v, &-Rational::ONE),
                }
            }
            self.lp.add_le(e, rhs);
        }
    }
}

pub(crate) enum CapTerm {
    Const(Rational),
    Var(VarId),
}

pub(crate) fn rate_vars(lp: &mut LinearProgram, n: usize, suffix: &str) -> Vec<VarId> {
    (1..=n).map(|i| lp.var(format!("R{i}{suffix}"))).collect()
}

pub(crate) fn check_weights(problem: &Problem, weights: &[Rational]) -> Result<()> {
    if weights.len() != problem.n() {
        return Err(Error::invalid(format!("{} weights given for {} receivers", weights.len(), problem.n())));
    }
    if weights.iter().any(Rational::is_negative) {
        return Err(Error::invalid("weights must be nonnegative"));
    }
    Ok(())
}

pub(crate) fn weighted(rates: &[VarId], weights: &[Rational]) -> LinExpr {
    LinExpr::from_terms(rates.iter().zip(weights).map(|(v, w)| (*v, w.clone())))
}

/// Unit weight on every receiver.
pub fn unit_weights(n: usize) -> Vec<Rational> {
    vec![Rational::ONE; n]
}

/// The composite coding LP for one decoding configuration.
pub fn fixed_lp(problem: &Problem, cfg: &DecodingConfig, weights: &[Rational]) -> Result<LinearProgram> {
    fixed_lp_with(problem, cfg, weights, &InnerOptions::default())
}

/// As [`fixed_lp`] with first-step rows over server-group subsets.
pub fn fixed_lp_q_form(problem: &Problem, cfg: &DecodingConfig, weights: &[Rational]) -> Result<LinearProgram> {
    let opts = InnerOptions { form: FirstStepForm::ServerSubsets, ..InnerOptions::default() };
    fixed_lp_with(problem, cfg, weights, &opts)
}

pub fn fixed_lp_with(
    problem: &Problem,
    cfg: &DecodingConfig,
    weights: &[Rational],
    opts: &InnerOptions,
) -> Result<LinearProgram> {
    check_weights(problem, weights)?;
    let rows = config_rows(problem, cfg, opts)?;
    let mut lp = LinearProgram::new(Sense::Maximize);
    let rates = rate_vars(&mut lp, problem.n(), "");
    let mut m = Materializer { lp: &mut lp, rates: rates.clone(), composite: BTreeMap::new(), suffix: String::new() };
    m.emit(&rows, |_, j| CapTerm::Const(problem.capacity(j).clone()));
    lp.set_objective(Sense::Maximize, weighted(&rates, weights));
    Ok(lp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inner::config::{dstar, maximal_decoding_sets};
    use crate::lp::solve_checked;
    use crate::model::parse_problem;

    fn value(lp: &LinearProgram) -> Rational {
        solve_checked(lp).unwrap().optimal_value().unwrap()
    }

    #[test]
    fn standard_configuration_on_problem_14() {
        let p = parse_problem("(1|-),(2|4),(3|4),(4|3)", None).unwrap();
        let mut d = maximal_decoding_sets(&p);
        d[0] = MsgSet::singleton(1);
        let cfg = DecodingConfig::uniform(&p, &ServerSet::all(4), d).unwrap();
        let w = unit_weights(4);
        assert_eq!(value(&fixed_lp(&p, &cfg, &w).unwrap()), Rational::from_int(21));
        assert_eq!(value(&fixed_lp_q_form(&p, &cfg, &w).unwrap()), Rational::from_int(21));
        let cfg = DecodingConfig::uniform(&p, &ServerSet::all(4), dstar(&p)).unwrap();
        assert_eq!(value(&fixed_lp(&p, &cfg, &w).unwrap()), Rational::from_int(21));
    }

    #[test]
    fn singleton_decoding_on_problem_46() {
        let p = parse_problem("(1|4),(2|3),(3|2),(4|1)", None).unwrap();
        let d = (1..=4).map(MsgSet::singleton).collect();
        let cfg = DecodingConfig::uniform(&p, &ServerSet::all(4), d).unwrap();
        assert_eq!(value(&fixed_lp(&p, &cfg, &unit_weights(4)).unwrap()), Rational::new(70, 3));
    }

    #[test]
    fn single_message() {
        let p = parse_problem("(1|-)", None).unwrap();
        let cfg = DecodingConfig::uniform(&p, &ServerSet::all(1), vec![MsgSet::singleton(1)]).unwrap();
        assert_eq!(value(&fixed_lp(&p, &cfg, &unit_weights(1)).unwrap()), Rational::ONE);
    }

    #[test]
    fn single_server_group_gives_one_row() {
        let p = parse_problem("(1|2),(2|-),(3|1)", None).unwrap();
        let j = MsgSet::of(&[1, 2, 3]);
        let cfg = DecodingConfig::uniform(&p, &ServerSet::from_servers(3, [j]), dstar(&p)).unwrap();
        let opts = InnerOptions { form: FirstStepForm::ServerSubsets, ..Default::default() };
        let rows = config_rows(&p, &cfg, &opts).unwrap();
        let a1 = p.side_info(1);
        let expect: Vec<MsgSet> = j.subsets().filter(|k| !k.is_subset(a1)).collect();
        let first_of_1: Vec<_> = rows.first.iter().filter(|(ks, _)| ks.len() == expect.len()).collect();
        assert!(first_of_1.iter().any(|(ks, srv)| *ks == expect && *srv == vec![j]));
    }

    #[test]
    fn unrecoverable_receiver_gets_zero_rate() {
        let p = parse_problem("(1|-),(2|-),(3|-)", None).unwrap();
        let mut groups = vec![ServerSet::all(3); 3];
        groups[0] = ServerSet::from_servers(3, [MsgSet::of(&[2, 3])]);
        let cfg = DecodingConfig::new(&p, groups, (1..=3).map(MsgSet::singleton).collect()).unwrap();
        let res = solve_checked(&fixed_lp(&p, &cfg, &unit_weights(3)).unwrap()).unwrap();
        assert_eq!(res.primal[0], Rational::ZERO);
    }

    #[test]
    fn receiver_with_nothing_to_recover_adds_no_rows() {
        let p = parse_problem("(1|-),(2|-),(3|-)", None).unwrap();
        let mut groups = vec![ServerSet::all(3); 3];
        groups[0] = ServerSet::from_servers(3, [MsgSet::of(&[2, 3])]);
        let cfg = DecodingConfig::new(&p, groups, (1..=3).map(MsgSet::singleton).collect()).unwrap();
        let rows = config_rows(&p, &cfg, &InnerOptions::default()).unwrap();
        let alone = DecodingConfig::new(&p, vec![ServerSet::all(3); 3], (1..=3).map(MsgSet::singleton).collect()).unwrap();
        let full = config_rows(&p, &alone, &InnerOptions::default()).unwrap();
        assert_eq!(rows.zero_rates, vec![1]);
        assert!(rows.first.len() <= full.first.len());
        assert!(rows.second.iter().all(|(l, _)| !l.contains(1)));
    }

    #[test]
    fn forms_agree_on_small_problems() {
        let w = unit_weights(3);
        for text in ["(1|2),(2|3),(3|1)", "(1|-),(2|1),(3|1,2)", "(1|2,3),(2|1),(3|-)"] {
            let p = parse_problem(text, None).unwrap();
            let cfg = DecodingConfig::standard(&p).unwrap();
            let vals: Vec<Rational> = [
                FirstStepForm::CompositeSubsets,
                FirstStepForm::CompositeSubsetsUnpruned,
                FirstStepForm::ServerSubsets,
                FirstStepForm::Auto,
            ]
            .iter()
            .map(|&form| {
                let opts = InnerOptions { form, ..Default::default() };
                value(&fixed_lp_with(&p, &cfg, &w, &opts).unwrap())
            })
            .collect();
            assert!(vals.windows(2).all(|v| v[0] == v[1]), "{text}: {vals:?}");
        }
    }

    #[test]
    fn cap_is_reported() {
        let p = parse_problem("(1|-),(2|-),(3|-),(4|-)", None).unwrap();
        let cfg = DecodingConfig::standard(&p).unwrap();
        let opts = InnerOptions { form: FirstStepForm::ServerSubsets, max_rows_per_receiver: 100, ..Default::default() };
        let err = fixed_lp_with(&p, &cfg, &unit_weights(4), &opts).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }), "{err}");
        assert!(err.to_string().contains("receiver 1"));
    }
}
