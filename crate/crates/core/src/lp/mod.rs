//! Exact rational linear programming and Fourier–Motzkin elimination.

mod dump;
mod fme;
mod guided;
mod program;
mod rational;
mod simplex;

pub use dump::{parse_dump, write_dump};
pub use fme::{fme_eliminate, is_redundant, project_onto, prune_redundant, Inequality, InequalitySystem};
pub use program::{Constraint, LinExpr, LinearProgram, Relation, Sense, VarId};
pub use rational::{ParseRationalError, Rational};
pub use simplex::{solve, solve_checked, solve_with, LpResult, LpStatus, PivotRule, SolverOptions};
