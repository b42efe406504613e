//! Closed-form values and batch verification of the corresponding claims.

pub mod formulas;
pub mod suite;

pub use formulas::{bondage_formula, chi_dt_cycle_formula, chi_dt_path_formula, stability_formula, FormulaFamily};
pub use suite::{run_suite, ClaimFamily, ClaimVerdict, SuiteConfig, TheoremReport, Verdict};
