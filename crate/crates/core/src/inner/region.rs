use super::config::DecodingConfig;
use crate::error::{Error, Result};
use crate::lp::{prune_redundant, InequalitySystem, Rational};
use crate::model::Problem;
use crate::sets::{MsgSet, ServerSet};

/// The rate region obtained by fixing composite rates to link capacities:
/// for each receiver `i` and nonempty `L ⊆ D_i`,
/// `Σ_{j∈L} R_j ≤ Σ_{J ⊆ D_i ∪ A_i, J ∩ L ≠ ∅} C_J`, plus `R ≥ 0`.
pub fn fixed_composite_region(problem: &Problem, d: &[MsgSet]) -> Result<InequalitySystem> {
    let n = problem.n();
    if d.len() != n {
        return Err(Error::invalid(format!("{} decoding sets given for {n} receivers", d.len())));
    }
    DecodingConfig::uniform(problem, &ServerSet::all(n), d.to_vec())?;
    let mut sys = InequalitySystem::new((1..=n).map(|i| format!("R{i}")).collect());
    for i in 1..=n {
        let reach = d[i - 1] | problem.side_info(i);
        for l in d[i - 1].nonempty_subsets() {
            let rhs: Rational = reach
                .nonempty_subsets()
                .filter(|j| j.intersects(l))
                .map(|j| problem.capacity(j).clone())
                .sum();
            let terms: Vec<(usize, Rational)> = l.iter().map(|j| (j - 1, Rational::ONE)).collect();
            sys.push(&terms, rhs);
        }
    }
    sys.push_nonnegativity();
    Ok(sys)
}

/// [`fixed_composite_region`] without redundant rows, sorted.
pub fn fixed_composite_region_pruned(problem: &Problem, d: &[MsgSet]) -> Result<InequalitySystem> {
    let mut sys = fixed_composite_region(problem, d)?;
    prune_redundant(&mut sys);
    Ok(sys.sorted())
}
