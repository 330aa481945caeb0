//! Levelling-matching: a level-by-level matching construction that certifies
//! an upper bound on the deficiency.

mod algorithm;
mod two_level;
mod validate;

pub use algorithm::{lm_best_root, lm_run, lm_run_auto, LevelRecord, LmTrace};
pub use two_level::{two_level_matching, TwoLevelResult};
pub use validate::{validate_trace, Rule, Violation};
