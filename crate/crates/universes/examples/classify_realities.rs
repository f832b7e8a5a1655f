//! The 2⊕1 reality taxonomy, and whole-system classification by projecting
//! every subject pair and object onto its 2⊕1 subsystem.
//!
//! ```bash
//! cargo run -p universes --example classify_realities
//! ```

use universes::classify::{ClassifyOptions, classify_system, classify_two_one};
use universes::enumeration::{DEFAULT_DIGIT_CAP, enumerate_classes};
use universes::model::{
    ComparisonSchema, ConvertDirection, Label, LabelAssignment, SystemShape, paper_order_convert,
};

fn main() -> universes::Result<()> {
    let shape = SystemShape::new(2, 1)?;
    let schema = ComparisonSchema::for_shape(&shape);

    println!("the nine 2⊕1 classes and their names (display order):");
    for class in enumerate_classes(&schema, DEFAULT_DIGIT_CAP)? {
        let display = paper_order_convert(&class.canonical, &shape, ConvertDirection::ToPaper)?;
        println!(
            "  {display}  {}",
            class.reality.expect("2⊕1 classes are named").as_str()
        );
    }

    // Isomorphic patterns share a name: 1100 canonicalizes to 1001.
    println!(
        "\ndisplay 1100 classifies as {}",
        classify_two_one(&"1100".parse()?)?
    );

    // A three-subject system where everyone senses and speaks differently:
    // every pairwise projection is the all-different universe.
    let three = SystemShape::new(3, 1)?;
    let distinct = LabelAssignment::pairwise_distinct(three);
    let summary = classify_system(&distinct, ClassifyOptions::default());
    println!("\n3⊕1, all labels distinct:");
    for (class, count) in &summary.classes {
        println!("  {class}: ×{count}");
    }

    // A system with an object nobody can sense gets the super-real tag.
    let masked = SystemShape::with_observable(2, 2, [0])?;
    let assignment = LabelAssignment::constant(masked, Label(1));
    let summary = classify_system(&assignment, ClassifyOptions::default());
    println!("\n2⊕2 with only O1 observable:");
    for s in &summary.subsystems {
        println!(
            "  S{}-S{} via O{}: {} ({})",
            s.subjects.0 + 1,
            s.subjects.1 + 1,
            s.object + 1,
            s.pattern,
            s.class
        );
    }
    println!("  tags: {:?}", summary.tags());
    Ok(())
}
