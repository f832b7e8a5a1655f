//! Render universes as DOT graphs: an explicit assignment, a witness drawn
//! for a bare pattern, and a system with an unobservable object.
//!
//! ```bash
//! cargo run -p universes --example export_dot
//! # pipe any block through `dot -Tpng` to draw it
//! ```

use universes::io::{assignment_to_dot, pattern_to_dot};
use universes::model::{
    ComparisonSchema, ConvertDirection, Label, LabelAssignment, SystemShape, paper_order_convert,
};

fn main() -> universes::Result<()> {
    // The full-agreement universe, labels given explicitly.
    let shape = SystemShape::new(2, 1)?;
    let realist = LabelAssignment::constant(shape.clone(), Label(0));
    println!("// display 0000 — everyone sees and says the same\n{}", assignment_to_dot(&realist));

    // A personal universe drawn from a witness of its pattern.
    let schema = ComparisonSchema::for_shape(&shape);
    let internal = paper_order_convert(&"1001".parse()?, &shape, ConvertDirection::FromPaper)?;
    println!("// display 1001 — identical speech over different sensations\n{}", pattern_to_dot(&internal, &schema)?);

    // An object outside every subject's reach stays an isolated node.
    let masked = SystemShape::with_observable(2, 2, [0])?;
    let super_real = LabelAssignment::constant(masked, Label(2));
    println!("// 2⊕2, O2 unobservable\n{}", assignment_to_dot(&super_real));
    Ok(())
}
