//! The reality taxonomy over 2⊕1 universes, and its projection onto larger
//! systems.
//!
//! Only six four-digit codes carry a name; classification is therefore an
//! exact table over canonical forms, not a predicate that could over-reach.
//! Displayed codes here use the display order (SS, SC1, CC, SC2):
//!
//! * `0000` — full agreement in sensation and communication.
//! * `1111` — nothing agrees with anything.
//! * `0111` — same sensation, yet no agreement about what was seen.
//! * `1101`, `0101`, `1001` (and `1100`, isomorphic to `1001`) — subjects
//!   communicate identically whatever they privately sense.
//!
//! Every other feasible code is deliberately left unclassified.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::feasibility::is_feasible;
use crate::model::{
    ComparisonSchema, ConvertDirection, DigitPattern, LabelAssignment, SystemShape,
    paper_order_convert,
};
use crate::symmetry::canonical_form;

/// Base class of a 2⊕1 universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealityClass {
    MetaphysicalRealist,
    Maya,
    Synaesthetic,
    PersonalUniverse,
    Unclassified,
}

impl RealityClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            RealityClass::MetaphysicalRealist => "metaphysical_realist",
            RealityClass::Maya => "maya",
            RealityClass::Synaesthetic => "synaesthetic",
            RealityClass::PersonalUniverse => "personal_universe",
            RealityClass::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for RealityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// System-level report flags; the base classes never change with these.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Read realist universes without the assumption that subjects and
    /// objects exist; surfaces as the `dogmatic_variant` tag.
    pub dogmatic_variant: bool,
}

/// One projected 2⊕1 subsystem of a larger system and its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemClassification {
    /// Zero-based subject pair, `subjects.0 < subjects.1`.
    pub subjects: (usize, usize),
    pub object: usize,
    /// Projected pattern in display order.
    pub pattern: DigitPattern,
    pub class: RealityClass,
}

/// Classification of a whole system as the multiset of its 2⊕1 projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationSummary {
    pub classes: BTreeMap<RealityClass, usize>,
    pub subsystems: Vec<SubsystemClassification>,
    /// Set when some object is unobservable.
    pub super_real: bool,
    pub dogmatic_variant: bool,
}

impl ClassificationSummary {
    /// Active system-level tags, in their fixed serialized spelling.
    pub fn tags(&self) -> Vec<&'static str> {
        let mut tags = Vec::new();
        if self.super_real {
            tags.push("super_real");
        }
        if self.dogmatic_variant {
            tags.push("dogmatic_variant");
        }
        tags
    }
}

fn two_one_shape() -> SystemShape {
    SystemShape::new(2, 1).expect("2⊕1 is a valid shape")
}

/// Class of a canonical, feasible, internal-order 2⊕1 pattern.
fn class_of_canonical(p: &DigitPattern) -> RealityClass {
    match (p.bit(0), p.bit(1), p.bit(2), p.bit(3)) {
        (false, false, false, false) => RealityClass::MetaphysicalRealist,
        (true, true, true, true) => RealityClass::Maya,
        (false, true, true, true) => RealityClass::Synaesthetic,
        // display-order 0101, {1001, 1100} and 1101: identical communication
        (false, true, true, false) => RealityClass::PersonalUniverse,
        (true, false, true, false) => RealityClass::PersonalUniverse,
        (true, true, true, false) => RealityClass::PersonalUniverse,
        // display-order {0011, 0110}, 1010 and {1011, 1110} carry no name
        (false, false, true, true) => RealityClass::Unclassified,
        (true, false, false, true) => RealityClass::Unclassified,
        (true, false, true, true) => RealityClass::Unclassified,
        _ => unreachable!("{p} is not a canonical feasible 2⊕1 pattern"),
    }
}

/// Classify a feasible 2⊕1 pattern given in display order.
///
/// Canonicalizes first, so the result is constant on isomorphism classes.
/// Infeasible patterns and lengths other than four are rejected.
pub fn classify_two_one(display_pattern: &DigitPattern) -> Result<RealityClass> {
    let shape = two_one_shape();
    let internal = paper_order_convert(display_pattern, &shape, ConvertDirection::FromPaper)?;
    let schema = ComparisonSchema::for_shape(&shape);
    if !is_feasible(&internal, &schema)? {
        return Err(Error::InfeasiblePattern);
    }
    let canonical = canonical_form(&internal, &schema)?;
    Ok(class_of_canonical(&canonical))
}

/// Classify a system by projecting every (subject pair, observable object)
/// onto its 2⊕1 subsystem. Systems with fewer than two subjects or no
/// observable object yield only the tags.
pub fn classify_system(
    assignment: &LabelAssignment,
    options: ClassifyOptions,
) -> ClassificationSummary {
    let shape = assignment.shape();
    let two_one = two_one_shape();
    let schema = ComparisonSchema::for_shape(&two_one);

    let mut subsystems = Vec::new();
    let mut classes: BTreeMap<RealityClass, usize> = BTreeMap::new();
    for a in 0..shape.subjects() {
        for b in a + 1..shape.subjects() {
            for &object in shape.observable() {
                let projected = LabelAssignment::new(
                    two_one.clone(),
                    vec![
                        vec![assignment.sensation(a, object)],
                        vec![assignment.sensation(b, object)],
                    ],
                    vec![
                        assignment.communication(a),
                        assignment.communication(b),
                    ],
                )
                .expect("projection dimensions are fixed");
                let internal = schema
                    .pattern_of(&projected)
                    .expect("projection shares the 2⊕1 shape");
                let display =
                    paper_order_convert(&internal, &two_one, ConvertDirection::ToPaper)
                        .expect("projection is a 2⊕1 pattern");
                let class = classify_two_one(&display)
                    .expect("patterns read off an assignment are feasible");
                *classes.entry(class).or_insert(0) += 1;
                subsystems.push(SubsystemClassification {
                    subjects: (a, b),
                    object,
                    pattern: display,
                    class,
                });
            }
        }
    }

    ClassificationSummary {
        classes,
        subsystems,
        super_real: !shape.is_fully_observable(),
        dogmatic_variant: options.dogmatic_variant,
    }
}
