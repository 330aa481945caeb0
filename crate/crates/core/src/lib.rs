//! Matching deficiency of simple graphs: exact computation, induced bones,
//! the levelling-matching upper bound, extremal families and a harness for
//! checking deficiency bounds.

pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod levelling;
pub mod lm;
pub mod matching;
pub mod structure;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, GraphBuilder, GraphDoc, SnailHorn, Vertex};
pub use harness::{check_theorem, CheckResult, Outcome, TheoremId, TheoremSpec};
pub use levelling::{FriendlyLevel, Levelling};
pub use lm::{lm_run, validate_trace, LmTrace};
pub use matching::{deficiency, maximum_matching, MatchingResult};
pub use structure::{structure_profile, StructureProfile};
