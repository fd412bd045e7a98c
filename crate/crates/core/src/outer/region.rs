use super::pm::{all_server_lp, OuterOptions};
use crate::error::{Error, Result};
use crate::inner::unit_weights;
use crate::lp::{project_onto, InequalitySystem};
use crate::model::Problem;

/// Largest message count accepted for region projection by default.
pub const DEFAULT_FME_MAX_N: usize = 4;

/// The all-server outer region projected onto the rates.
pub fn allserver_region(problem: &Problem, max_n: usize) -> Result<InequalitySystem> {
    let n = problem.n();
    if n > max_n {
        return Err(Error::cap("messages for region projection", n as u128, max_n as u128));
    }
    let outer = all_server_lp(problem, &unit_weights(n), &OuterOptions::default())?;
    let sys = InequalitySystem::from_lp(&outer.lp);
    let keep: Vec<String> = outer.rates.iter().map(|&v| outer.lp.name(v).to_string()).collect();
    let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
    Ok(project_onto(&sys, &keep).sorted())
}
