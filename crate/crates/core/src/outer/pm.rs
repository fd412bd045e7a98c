use std::collections::HashMap;

use super::grouping::Grouping;
use crate::error::{Error, Result};
use crate::inner::{check_weights, unit_weights};
use crate::lp::{solve_checked, LinExpr, LinearProgram, Rational, Relation, Sense, VarId};
use crate::model::Problem;
use crate::sets::{not_touch, touch, touch_both, MsgSet, ServerSet};

/// How submodularity rows are generated.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SubmodMode {
    /// Every incomparable pair of lattice points.
    Full,
    /// Only the diamonds `x, x+a, x+b, x+a+b` of the Boolean lattice.
    Elemental,
}

#[derive(Clone, Debug)]
pub struct OuterOptions {
    pub submod: SubmodMode,
    /// Emit the fd-separation equalities.
    pub fd_separation: bool,
    /// Largest accepted number of lattice points (or `f_L` variables).
    pub max_lattice: usize,
    /// Largest accepted number of generated submodularity rows.
    pub max_rows: usize,
}

impl Default for OuterOptions {
    fn default() -> Self {
        OuterOptions { submod: SubmodMode::Elemental, fd_separation: true, max_lattice: 1 << 12, max_rows: 1 << 20 }
    }
}

/// Row and variable counts of a generated outer-bound LP.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OuterStats {
    pub lattice_points: usize,
    pub variables: usize,
    /// Points identified with the constant zero.
    pub zero_points: usize,
    /// Points identified with an earlier point of the same class.
    pub merged_points: usize,
    pub capacity_rows: usize,
    pub monotone_rows: usize,
    pub submod_rows: usize,
    /// fd-separation equalities whose expression is not identically zero.
    pub separation_rows: usize,
    pub rate_rows: usize,
}

/// Record of a point `f(G,K)` identified with `f(representative,K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    pub groups: u32,
    pub msgs: MsgSet,
    pub representative: u32,
}

/// A generated outer-bound LP together with its rate variables.
#[derive(Clone, Debug)]
pub struct OuterLp {
    pub lp: LinearProgram,
    pub rates: Vec<VarId>,
    pub stats: OuterStats,
    pub merges: Vec<Merge>,
}

impl OuterLp {
    /// Optimal weighted sum-rate.
    pub fn value(&self) -> Result<Rational> {
        solve_checked(&self.lp)?.optimal_value()
    }

    /// Whether every recorded merge passes the symmetric-difference test.
    pub fn merges_sound(&self, grouping: &Grouping) -> bool {
        let n = grouping.n();
        self.merges.iter().all(|mg| {
            let a = grouping.pg(mg.groups);
            let b = grouping.pg(mg.representative);
            let sym = a.union(&b).difference(&a.intersection(&b));
            sym.is_subset(&not_touch(n, mg.msgs))
        })
    }
}

/// Points of the product lattice `2^[m] × 2^[n]`, stored at index
/// `G | K << m`, each mapped to an LP variable or to the constant zero.
struct Lattice {
    m: usize,
    n: usize,
    var: Vec<Option<VarId>>,
}

impl Lattice {
    fn dims(&self) -> usize {
        self.m + self.n
    }

    fn at(&self, groups: u32, msgs: u16) -> Option<VarId> {
        self.var[(groups as usize) | (msgs as usize) << self.m]
    }

    /// Bits that decrease the entropic argument `K^c` when set.
    fn msg_bits(&self) -> usize {
        ((1usize << self.n) - 1) << self.m
    }

    fn add_monotone(&self, lp: &mut LinearProgram, stats: &mut OuterStats) {
        let size = 1usize << self.dims();
        for x in 0..size {
            if self.var[x].is_none() {
                continue;
            }
            for b in 0..self.dims() {
                if x >> b & 1 == 0 && push_row(lp, &[(self.var[x], 1), (self.var[x | 1 << b], -1)], Relation::Le) {
                    stats.monotone_rows += 1;
                }
            }
        }
    }

    /// Submodularity in the coordinates `(G, K^c)`.
    fn add_submod(&self, lp: &mut LinearProgram, mode: SubmodMode, stats: &mut OuterStats) {
        let d = self.dims();
        let size = 1usize << d;
        let flip = self.msg_bits();
        let f = |h: usize| self.var[h ^ flip];
        match mode {
            SubmodMode::Elemental => {
                for y in 0..size {
                    for a in 0..d {
                        if y >> a & 1 == 1 {
                            continue;
                        }
                        for b in a + 1..d {
                            if y >> b & 1 == 1 {
                                continue;
                            }
                            let (ya, yb) = (y | 1 << a, y | 1 << b);
                            let terms = [(f(ya | yb), 1), (f(y), 1), (f(ya), -1), (f(yb), -1)];
                            if push_row(lp, &terms, Relation::Le) {
                                stats.submod_rows += 1;
                            }
                        }
                    }
                }
            }
            SubmodMode::Full => {
                for y in 0..size {
                    for z in y + 1..size {
                        let (join, meet) = (y | z, y & z);
                        if join == y || join == z {
                            continue;
                        }
                        let terms = [(f(join), 1), (f(meet), 1), (f(y), -1), (f(z), -1)];
                        if push_row(lp, &terms, Relation::Le) {
                            stats.submod_rows += 1;
                        }
                    }
                }
            }
        }
    }

    /// `R_i ≤ f([m], B_i ∪ {i}) − f([m], B_i)`.
    fn add_rates(&self, lp: &mut LinearProgram, problem: &Problem, rates: &[VarId], stats: &mut OuterStats) {
        let all = ((1u64 << self.m) - 1) as u32;
        for i in 1..=problem.n() {
            let b = problem.interfering(i);
            let terms = [(Some(rates[i - 1]), 1), (self.at(all, b.with(i).mask()), -1), (self.at(all, b.mask()), 1)];
            push_row(lp, &terms, Relation::Le);
            stats.rate_rows += 1;
        }
    }
}

/// Adds `Σ c·v ≤ 0` (or `= 0`) skipping zero terms; false if nothing remains.
fn push_row(lp: &mut LinearProgram, terms: &[(Option<VarId>, i64)], rel: Relation) -> bool {
    let mut e = LinExpr::new();
    for (v, c) in terms {
        if let Some(v) = v {
            e.add_int(*v, *c);
        }
    }
    if e.is_empty() {
        return false;
    }
    lp.add(e, rel, Rational::ZERO);
    true
}

fn label(bits: u32) -> String {
    (0..32).filter(|b| bits >> b & 1 == 1).map(|b| (b + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn capacity_of(problem: &Problem, servers: &ServerSet) -> Rational {
    servers.iter().map(|j| problem.capacity(j).clone()).sum()
}

fn check_size(dims: usize, opts: &OuterOptions) -> Result<()> {
    let points = 1u128 << dims.min(120);
    if points > opts.max_lattice as u128 {
        return Err(Error::cap("outer-bound lattice points", points, opts.max_lattice as u128));
    }
    if opts.submod == SubmodMode::Full {
        let pairs = points * (points - 1) / 2;
        if pairs > opts.max_rows as u128 {
            return Err(Error::cap("submodularity pairs", pairs, opts.max_rows as u128));
        }
    }
    Ok(())
}

fn rate_vars_and_objective(lp: &mut LinearProgram, weights: &[Rational]) -> Vec<VarId> {
    let rates: Vec<VarId> = (1..=weights.len()).map(|i| lp.var(format!("R{i}"))).collect();
    lp.set_objective(Sense::Maximize, LinExpr::from_terms(rates.iter().zip(weights).map(|(v, w)| (*v, w.clone()))));
    rates
}

/// The grouping polymatroidal LP: `f(G,K)` on the product lattice, points
/// with equal `P_G ∩ T_K` (for fixed `K`) sharing one variable, points with
/// `P_G ∩ T_K = ∅` fixed to zero, capacity bounds per class, monotonicity on
/// covers, submodularity, fd-separation equalities and rate rows.
pub fn grouping_pm_lp(
    problem: &Problem,
    grouping: &Grouping,
    weights: &[Rational],
    opts: &OuterOptions,
) -> Result<OuterLp> {
    check_weights(problem, weights)?;
    grouping.check_valid_for(problem)?;
    let (m, n) = (grouping.m(), problem.n());
    check_size(m + n, opts)?;

    let mut lp = LinearProgram::new(Sense::Maximize);
    let rates = rate_vars_and_objective(&mut lp, weights);
    let mut stats = OuterStats { lattice_points: 1 << (m + n), ..OuterStats::default() };
    let mut merges = Vec::new();
    let unions = grouping.all_unions();
    let mut var = vec![None; 1 << (m + n)];
    for k in 1u16..=MsgSet::full(n).mask() {
        let msgs = MsgSet::from_mask(k);
        let touching = touch(n, msgs);
        let mut classes: HashMap<ServerSet, (VarId, u32)> = HashMap::new();
        for g in 1u32..1 << m {
            let sig = unions[g as usize].intersection(&touching);
            if sig.is_empty() {
                stats.zero_points += 1;
                continue;
            }
            let v = match classes.get(&sig) {
                Some(&(v, rep)) => {
                    merges.push(Merge { groups: g, msgs, representative: rep });
                    stats.merged_points += 1;
                    v
                }
                None => {
                    let v = lp.var(format!("f{{{}|{}}}", label(g), label(k as u32)));
                    lp.add_le(LinExpr::from_terms([(v, Rational::ONE)]), capacity_of(problem, &sig));
                    stats.capacity_rows += 1;
                    stats.variables += 1;
                    classes.insert(sig, (v, g));
                    v
                }
            };
            var[g as usize | (k as usize) << m] = Some(v);
        }
    }
    let lattice = Lattice { m, n, var };
    lattice.add_monotone(&mut lp, &mut stats);
    lattice.add_submod(&mut lp, opts.submod, &mut stats);
    if opts.fd_separation {
        add_fd_separation(&mut lp, &lattice, &unions, &mut stats);
    }
    lattice.add_rates(&mut lp, problem, &rates, &mut stats);
    Ok(OuterLp { lp, rates, stats, merges })
}

/// `f(G,K) + f(G,K') = f(G,K∪K')` whenever no server of `P_G` touches both.
fn add_fd_separation(lp: &mut LinearProgram, lattice: &Lattice, unions: &[ServerSet], stats: &mut OuterStats) {
    let n = lattice.n;
    let full = MsgSet::full(n).mask();
    for g in 1u32..1 << lattice.m {
        // reach[a]: messages sharing some server of P_G with message a+1.
        let mut reach = vec![0u16; n];
        for j in unions[g as usize].iter() {
            for a in j.iter() {
                reach[a - 1] |= j.mask();
            }
        }
        for k in 1u16..=full {
            let spread = MsgSet::from_mask(k).iter().fold(0u16, |acc, a| acc | reach[a - 1]);
            let rest = full & !k;
            let mut k2 = rest;
            while k2 != 0 {
                if k2 > k && spread & k2 == 0 {
                    let terms =
                        [(lattice.at(g, k), 1), (lattice.at(g, k2), 1), (lattice.at(g, k | k2), -1)];
                    if push_row(lp, &terms, Relation::Eq) {
                        stats.separation_rows += 1;
                    }
                }
                k2 = (k2 - 1) & rest;
            }
        }
    }
}

/// The individual-touch bound in its specialized form: `f(G,K)` for all
/// `G, K ⊆ [n]` with `f(G,K) = f(K,K)` for `K ⊆ G` and capacity bounds over
/// `T_{G,K}`; no fd-separation rows.
pub fn touch_specialized_lp(problem: &Problem, weights: &[Rational], opts: &OuterOptions) -> Result<OuterLp> {
    check_weights(problem, weights)?;
    let n = problem.n();
    check_size(2 * n, opts)?;
    let mut lp = LinearProgram::new(Sense::Maximize);
    let rates = rate_vars_and_objective(&mut lp, weights);
    let mut stats = OuterStats { lattice_points: 1 << (2 * n), ..OuterStats::default() };
    let mut var: Vec<Option<VarId>> = vec![None; 1 << (2 * n)];
    for k in 1usize..1 << n {
        for g in 1usize..1 << n {
            let idx = g | k << n;
            if k & g == k && g != k {
                var[idx] = var[k | k << n];
                stats.merged_points += 1;
                continue;
            }
            let v = lp.var(format!("t{{{}|{}}}", label(g as u32), label(k as u32)));
            let servers = touch_both(n, MsgSet::from_mask(g as u16), MsgSet::from_mask(k as u16));
            lp.add_le(LinExpr::from_terms([(v, Rational::ONE)]), capacity_of(problem, &servers));
            stats.capacity_rows += 1;
            stats.variables += 1;
            var[idx] = Some(v);
        }
    }
    stats.zero_points = (1 << (n + 1)) - 1;
    let lattice = Lattice { m: n, n, var };
    lattice.add_monotone(&mut lp, &mut stats);
    lattice.add_submod(&mut lp, opts.submod, &mut stats);
    lattice.add_rates(&mut lp, problem, &rates, &mut stats);
    Ok(OuterLp { lp, rates, stats, merges: Vec::new() })
}

/// The all-server bound over `g(K)`: `g(K) ≤ Σ_{J ∈ T_K} C_J`, monotone,
/// submodular, `R_i ≤ g(B_i ∪ {i}) − g(B_i)`.
pub fn all_server_lp(problem: &Problem, weights: &[Rational], opts: &OuterOptions) -> Result<OuterLp> {
    check_weights(problem, weights)?;
    let n = problem.n();
    check_size(n + 1, opts)?;
    let mut lp = LinearProgram::new(Sense::Maximize);
    let rates = rate_vars_and_objective(&mut lp, weights);
    let mut stats = OuterStats { lattice_points: 1 << (n + 1), ..OuterStats::default() };
    let mut var: Vec<Option<VarId>> = vec![None; 1 << (n + 1)];
    for k in 1usize..1 << n {
        let v = lp.var(format!("g{{{}}}", label(k as u32)));
        let servers = touch(n, MsgSet::from_mask(k as u16));
        lp.add_le(LinExpr::from_terms([(v, Rational::ONE)]), capacity_of(problem, &servers));
        stats.capacity_rows += 1;
        stats.variables += 1;
        var[1 | k << 1] = Some(v);
    }
    stats.zero_points = (1 << (n + 1)) - stats.variables;
    let lattice = Lattice { m: 1, n, var };
    lattice.add_monotone(&mut lp, &mut stats);
    lattice.add_submod(&mut lp, opts.submod, &mut stats);
    lattice.add_rates(&mut lp, problem, &rates, &mut stats);
    Ok(OuterLp { lp, rates, stats, merges: Vec::new() })
}

/// Scatters the low bits of `bits` onto the members of `within`.
fn expand(bits: usize, within: MsgSet) -> MsgSet {
    within.iter().enumerate().filter(|(b, _)| bits >> b & 1 == 1).map(|(_, i)| i).collect()
}

/// The `f_L` bound: an independent polymatroid block `f_L(S)`, `S ⊆ L`, for
/// every nonempty `L`, with `f_L(L) ≤ Σ_{J ∈ T_L} C_J` and, for `i ∈ L`,
/// `R_i ≤ f_L((B_i ∪ {i}) ∩ L) − f_L(B_i ∩ L)`.
pub fn fl_lp(problem: &Problem, weights: &[Rational], opts: &OuterOptions) -> Result<OuterLp> {
    check_weights(problem, weights)?;
    let n = problem.n();
    let blocks = 3u128.pow(n as u32);
    if blocks > opts.max_lattice as u128 {
        return Err(Error::cap("f_L variables", blocks, opts.max_lattice as u128));
    }
    let mut lp = LinearProgram::new(Sense::Maximize);
    let rates = rate_vars_and_objective(&mut lp, weights);
    let mut stats = OuterStats { lattice_points: blocks as usize, ..OuterStats::default() };
    for l in MsgSet::full(n).nonempty_subsets() {
        let d = l.len();
        let mut var: Vec<Option<VarId>> = vec![None; 1 << d];
        for (bits, slot) in var.iter_mut().enumerate().skip(1) {
            let s = expand(bits, l);
            *slot = Some(lp.var(format!("f[{}]{{{}}}", label(l.mask() as u32), label(s.mask() as u32))));
            stats.variables += 1;
        }
        let top = var[(1 << d) - 1].expect("top of a nonempty block");
        lp.add_le(LinExpr::from_terms([(top, Rational::ONE)]), capacity_of(problem, &touch(n, l)));
        stats.capacity_rows += 1;
        let block = Lattice { m: 0, n: d, var };
        block.add_monotone(&mut lp, &mut stats);
        block.add_submod(&mut lp, opts.submod, &mut stats);
        let position = |s: MsgSet| -> usize {
            l.iter().enumerate().filter(|(_, i)| s.contains(*i)).map(|(b, _)| 1usize << b).sum()
        };
        for i in l.iter() {
            let b = problem.interfering(i);
            let terms = [
                (Some(rates[i - 1]), 1),
                (block.var[position(b.with(i) & l)], -1),
                (block.var[position(b & l)], 1),
            ];
            push_row(&mut lp, &terms, Relation::Le);
            stats.rate_rows += 1;
        }
    }
    stats.zero_points = 1 << n;
    Ok(OuterLp { lp, rates, stats, merges: Vec::new() })
}

/// Unit-weight sum-rate bound of [`fl_lp`].
pub fn fl_bound(problem: &Problem, weights: &[Rational]) -> Result<Rational> {
    fl_lp(problem, weights, &OuterOptions::default())?.value()
}

/// Unit-weight sum-rate bound of [`grouping_pm_lp`].
pub fn grouping_sum_bound(problem: &Problem, grouping: &Grouping, opts: &OuterOptions) -> Result<Rational> {
    grouping_pm_lp(problem, grouping, &unit_weights(problem.n()), opts)?.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_problem;
    use crate::outer::grouping::{aggregate_touch, all_server, individual_touch, m_fd};

    fn s(items: &[usize]) -> MsgSet {
        MsgSet::of(items)
    }

    fn int(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn p14() -> Problem {
        parse_problem("(1|-),(2|4),(3|4),(4|3)", None).unwrap()
    }

    #[test]
    fn problem_14_bounds() {
        let p = p14();
        let w = unit_weights(4);
        let opts = OuterOptions::default();
        let all = ServerSet::all(4);
        let t = individual_touch(&all).unwrap();
        assert_eq!(grouping_sum_bound(&p, &t, &opts).unwrap(), int(21));
        let agg = aggregate_touch(&all, &[s(&[4]), s(&[1, 2, 3])]).unwrap();
        assert_eq!(grouping_sum_bound(&p, &agg, &opts).unwrap(), int(21));
        assert_eq!(all_server_lp(&p, &w, &opts).unwrap().value().unwrap(), int(22));
        assert_eq!(grouping_sum_bound(&p, &all_server(&all).unwrap(), &opts).unwrap(), int(22));
        assert_eq!(fl_bound(&p, &w).unwrap(), int(22));
        assert_eq!(touch_specialized_lp(&p, &w, &opts).unwrap().value().unwrap(), int(21));
    }

    #[test]
    fn problem_46_fd_grouping() {
        let p = parse_problem("(1|4),(2|3),(3|2),(4|1)", None).unwrap();
        let all = ServerSet::all(4);
        let q1 = ServerSet::from_servers(
            4,
            [s(&[1]), s(&[2]), s(&[3]), s(&[4]), s(&[1, 2]), s(&[1, 3]), s(&[2, 4]), s(&[3, 4])],
        );
        let g = m_fd(&all, vec![q1.clone(), all.difference(&q1)]).unwrap();
        let opts = OuterOptions::default();
        let out = grouping_pm_lp(&p, &g, &unit_weights(4), &opts).unwrap();
        assert!(out.stats.separation_rows > 0);
        assert!(out.merges_sound(&g));
        assert_eq!(out.value().unwrap(), Rational::new(70, 3));
        let loose = OuterOptions { fd_separation: false, ..opts.clone() };
        assert_eq!(grouping_sum_bound(&p, &g, &loose).unwrap(), int(24));
        assert_eq!(grouping_sum_bound(&p, &individual_touch(&all).unwrap(), &opts).unwrap(), int(24));
    }

    #[test]
    fn touch_groupings_have_no_fd_rows() {
        let p = p14();
        let all = ServerSet::all(4);
        let out = grouping_pm_lp(&p, &individual_touch(&all).unwrap(), &unit_weights(4), &OuterOptions::default())
            .unwrap();
        assert_eq!(out.stats.separation_rows, 0);
        assert!(out.merges_sound(&individual_touch(&all).unwrap()));
    }

    #[test]
    fn full_and_elemental_agree_on_small_cases() {
        let full = OuterOptions { submod: SubmodMode::Full, ..OuterOptions::default() };
        let elem = OuterOptions::default();
        for text in ["(1|2),(2|3),(3|1)", "(1|-),(2|3),(3|-)", "(1|2,3),(2|-),(3|1)"] {
            let p = parse_problem(text, None).unwrap();
            let all = ServerSet::all(3);
            for g in [individual_touch(&all).unwrap(), aggregate_touch(&all, &[s(&[1]), s(&[2, 3])]).unwrap()] {
                assert_eq!(grouping_sum_bound(&p, &g, &full).unwrap(), grouping_sum_bound(&p, &g, &elem).unwrap());
            }
            let w = unit_weights(3);
            assert_eq!(fl_lp(&p, &w, &full).unwrap().value().unwrap(), fl_lp(&p, &w, &elem).unwrap().value().unwrap());
        }
    }

    #[test]
    fn single_message_bounds() {
        let p = parse_problem("(1|-)\ndefault: 3/2", None).unwrap();
        let w = unit_weights(1);
        assert_eq!(fl_bound(&p, &w).unwrap(), Rational::new(3, 2));
        assert_eq!(all_server_lp(&p, &w, &OuterOptions::default()).unwrap().value().unwrap(), Rational::new(3, 2));
    }

    #[test]
    fn size_caps() {
        let p = parse_problem("(1|-),(2|-),(3|-),(4|-),(5|-),(6|-),(7|-)", None).unwrap();
        let t = individual_touch(&ServerSet::all(7)).unwrap();
        let err = grouping_pm_lp(&p, &t, &unit_weights(7), &OuterOptions::default()).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn grouping_must_cover_active_servers() {
        let p = p14();
        let g = Grouping::new(vec![touch(4, s(&[1]))]).unwrap();
        assert!(grouping_pm_lp(&p, &g, &unit_weights(4), &OuterOptions::default()).is_err());
    }
}
