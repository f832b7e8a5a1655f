//! Enumerate every digit pattern of the 2⊕1 system and mark which ones are
//! realizable.
//!
//! ```bash
//! cargo run -p universes --example enumerate_universes
//! ```

use universes::enumeration::{DEFAULT_DIGIT_CAP, enumerate_patterns};
use universes::feasibility::is_feasible;
use universes::model::{ComparisonSchema, ConvertDirection, SystemShape, paper_order_convert};

fn main() -> universes::Result<()> {
    let shape = SystemShape::new(2, 1)?;
    let schema = ComparisonSchema::for_shape(&shape);

    println!("shape {shape}: {} digits, comparisons:", schema.len());
    for digit in schema.digits() {
        println!("  {digit}");
    }

    println!("\nall {} patterns (display order):", 1u64 << schema.len());
    let mut feasible = 0;
    for pattern in enumerate_patterns(&schema, DEFAULT_DIGIT_CAP)? {
        let ok = is_feasible(&pattern, &schema)?;
        feasible += ok as u32;
        let display = paper_order_convert(&pattern, &shape, ConvertDirection::ToPaper)?;
        println!(
            "  {display}  {}",
            if ok { "feasible" } else { "infeasible" }
        );
    }
    println!("\n{feasible} of 16 patterns are realizable.");
    Ok(())
}
