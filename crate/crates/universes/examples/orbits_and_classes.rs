//! Subject renaming: orbits, canonical forms, and the Burnside count of
//! isomorphism classes.
//!
//! ```bash
//! cargo run -p universes --example orbits_and_classes
//! ```

use universes::enumeration::{DEFAULT_DIGIT_CAP, enumerate_classes};
use universes::model::{
    ComparisonSchema, ConvertDirection, DigitPattern, PatternOrder, SystemShape, convert_order,
    paper_order_convert,
};
use universes::symmetry::{
    SubjectPermutation, apply_subject_permutation, burnside_class_count, canonical_form, orbit,
};

fn main() -> universes::Result<()> {
    let shape = SystemShape::new(2, 1)?;
    let schema = ComparisonSchema::for_shape(&shape);
    let to_display = |p: &DigitPattern| -> universes::Result<String> {
        Ok(paper_order_convert(p, &shape, ConvertDirection::ToPaper)?.to_string())
    };

    // Swapping the two subjects pairs up some patterns.
    let swap = SubjectPermutation::transposition(2, 0, 1)?;
    for bits in ["0110", "1110", "0101"] {
        let internal = convert_order(&bits.parse()?, &shape, PatternOrder::Paper, PatternOrder::Internal)?;
        let swapped = apply_subject_permutation(&internal, &swap, &schema)?;
        println!("display {bits} --swap--> {}", to_display(&swapped)?);
    }

    // Canonical form and orbit of a non-canonical member.
    let internal = convert_order(&"1100".parse()?, &shape, PatternOrder::Paper, PatternOrder::Internal)?;
    let canonical = canonical_form(&internal, &schema)?;
    let members: Vec<String> = orbit(&internal, &schema)?
        .iter()
        .map(&to_display)
        .collect::<universes::Result<_>>()?;
    println!(
        "\ndisplay 1100: canonical form {}, orbit {{{}}}",
        to_display(&canonical)?,
        members.join(", ")
    );

    // All nine classes of the 2⊕1 system.
    println!("\n2⊕1 isomorphism classes (canonical form, orbit size, name):");
    for class in enumerate_classes(&schema, DEFAULT_DIGIT_CAP)? {
        println!(
            "  {}  ×{}  {}",
            to_display(&class.canonical)?,
            class.orbit_size,
            class.reality.map(|r| r.as_str()).unwrap_or("-"),
        );
    }

    // The group-averaged count agrees, here and in higher dimensions.
    for (m, n) in [(2, 1), (2, 2), (3, 1)] {
        let schema = ComparisonSchema::for_shape(&SystemShape::new(m, n)?);
        println!(
            "{m}⊕{n}: {} classes by canonical enumeration, {} by group averaging",
            enumerate_classes(&schema, DEFAULT_DIGIT_CAP)?.len(),
            burnside_class_count(&schema, DEFAULT_DIGIT_CAP)?,
        );
    }
    Ok(())
}
