//! A toolkit for m⊕n universes: systems of `m` subjects that sense `n`
//! objects and communicate with each other, where every edge carries an
//! opaque label and only label equality is observable.
//!
//! Each universe boils down to its **digit pattern** — the m²·n bit string
//! that records, comparison by comparison, whether two labels coincide. The
//! crate enumerates those patterns, decides which are realizable, collapses
//! them under subject renaming, audits the closed-form counting predictions
//! against independent oracles, names the classic 2⊕1 reality classes, and
//! simulates the two-subject agreement scenario in which privately different
//! perceptions stay forever undetectable behind a common language.
//!
//! ## Modules
//!
//! - [`model`] — shapes, label assignments, comparison schemas, digit patterns.
//! - [`feasibility`] — union-find realizability, witnesses, and two
//!   independent oracles (exhaustive assignment search, connected partitions).
//! - [`symmetry`] — the subject-renaming action: orbits, canonical forms,
//!   Burnside class counts.
//! - [`enumeration`] — pattern streams, class streams, closed-form
//!   predictions, and the [`enumeration::CountReport`] audit.
//! - [`classify`] — the 2⊕1 reality taxonomy and its projection onto larger
//!   systems.
//! - [`simulate`] — the two-subject perception/language agreement run.
//! - [`io`] — JSON universe documents, scenario files, DOT export.
//! - [`cli`] — the `universes` command-line driver.
//!
//! ## Examples
//!
//! One runnable example per capability:
//!
//! ```bash
//! cargo run -p universes --example enumerate_universes
//! cargo run -p universes --example feasibility_oracles
//! cargo run -p universes --example orbits_and_classes
//! cargo run -p universes --example verify_formulas
//! cargo run -p universes --example classify_realities
//! cargo run -p universes --example personal_universe_simulation
//! cargo run -p universes --example export_dot
//! ```
//!
//! ## Quick start
//!
//! ```
//! use universes::enumeration::{DEFAULT_DIGIT_CAP, verify_counts};
//! use universes::model::{ComparisonSchema, SystemShape};
//!
//! let shape = SystemShape::new(2, 1)?;
//! let schema = ComparisonSchema::for_shape(&shape);
//! let report = verify_counts(&schema, DEFAULT_DIGIT_CAP);
//! assert_eq!(report.feasible_observed, Some(12));
//! assert_eq!(report.classes_observed, Some(9));
//! assert_eq!(report.predicted_feasible_matches, Some(true));
//! # Ok::<(), universes::Error>(())
//! ```

pub mod classify;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod feasibility;
pub mod io;
pub mod model;
pub mod simulate;
pub mod symmetry;

pub use error::{Error, Result};
pub use model::{
    ComparisonSchema, DigitDescriptor, DigitPattern, Label, LabelAssignment, PatternOrder,
    SystemShape,
};
