//! Theorem checks, exhaustive and family sweeps, random instances and
//! extremal search.

mod iso;
pub mod random;
mod report;
mod search;
mod sweep;
mod theorem;

pub use iso::{canonical_form, tree_canonical, trees_isomorphic, CANONICAL_LIMIT};
pub use random::{random_connected, random_tree, random_two_level};
pub use report::{write_csv, ReportRow};
pub use search::{
    extremal_search, AdmittingPredicate, SearchConfig, SearchConstraints, SearchReport,
};
pub use sweep::{
    exhaustive_sweep, family_sweep, parse_ranges, SweepOptions, SweepReport, SWEEP_LIMIT,
};
pub use theorem::{
    check_theorem, congruent_one_mod, main_bound, tree_deficiency_formula, CheckResult, Hypothesis,
    Outcome, TheoremId, TheoremSpec,
};
