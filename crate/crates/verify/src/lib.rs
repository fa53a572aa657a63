//! Independent oracles for the exact computations in `hms-core`, and the
//! acceptance criteria built on them.

pub mod criteria;
pub mod oracles;

pub use criteria::{run_all, run_criterion, Check, CriterionResult};
