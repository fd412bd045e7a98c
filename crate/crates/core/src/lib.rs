//! Capacity bounds for distributed index coding.
//!
//! Inner bounds come from composite coding LPs, outer bounds from grouping
//! polymatroidal LPs; both are solved exactly over the rationals.

pub mod catalog;
pub mod error;
pub mod fdg;
pub mod inner;
pub mod lp;
pub mod model;
pub mod outer;
pub mod sets;
pub mod sumcap;

pub use error::{Error, ParseError, Result};
pub use lp::Rational;
pub use model::{parse_problem, Problem};
pub use sets::{MsgFamily, MsgSet, ServerSet};
