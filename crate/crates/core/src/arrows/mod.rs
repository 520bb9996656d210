//! Arrowing: verification of good colorings, the decision search, CNF
//! export and small Ramsey numbers.

pub mod cnf;
pub mod ramsey;
pub mod search;
pub mod targets;
pub mod verify;

pub use cnf::export_cnf;
pub use ramsey::{base_coloring_search, ramsey_number};
pub use search::{arrows_decision, ArrowResult, Budget, Verdict};
pub use targets::TargetList;
pub use verify::{verify_good_coloring, ColoringCheck};
