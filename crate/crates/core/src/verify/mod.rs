//! Executable checkers for the lemmas, inequalities and closed forms behind
//! the Bohr-type theorems.

pub mod checks;
pub mod closed_forms;
pub mod samples;
pub mod suite;

pub use checks::*;
pub use closed_forms::Phi4Convention;
pub use samples::{polar_grid, BlaschkeSample, ConstantFunction, DiskFunction};
pub use suite::{run_check, SuiteConfig, CHECK_NAMES};
