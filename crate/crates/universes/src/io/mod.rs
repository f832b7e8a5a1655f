//! Serialization: universe documents (JSON), scenario files (JSON), and
//! graph export (DOT).

mod document;
mod dot;
mod scenario;

pub use document::{LabelsDocument, PatternDocument, ShapeDocument, UniverseDocument};
pub use dot::{assignment_to_dot, pattern_to_dot};
pub use scenario::{Scenario, SubjectSpec};
