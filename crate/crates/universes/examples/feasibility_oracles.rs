//! Witness construction and the oracle cross-checks behind the feasibility
//! decision procedure.
//!
//! ```bash
//! cargo run -p universes --example feasibility_oracles
//! ```

use universes::enumeration::{DEFAULT_DIGIT_CAP, count_feasible};
use universes::feasibility::{
    feasible_count_by_partitions, is_feasible, is_feasible_bruteforce, witness,
};
use universes::model::{
    ComparisonSchema, ConvertDirection, DigitPattern, SystemShape, paper_order_convert,
};

fn main() -> universes::Result<()> {
    let shape = SystemShape::new(2, 1)?;
    let schema = ComparisonSchema::for_shape(&shape);

    // A realizable pattern and one of its witnesses.
    let display: DigitPattern = "1001".parse()?;
    let internal = paper_order_convert(&display, &shape, ConvertDirection::FromPaper)?;
    let assignment = witness(&internal, &schema)?.expect("1001 is realizable");
    println!("witness for display pattern {display}:");
    println!(
        "  sens(S1)={} comm(S1)={} comm(S2)={} sens(S2)={}",
        assignment.sensation(0, 0),
        assignment.communication(0),
        assignment.communication(1),
        assignment.sensation(1, 0),
    );
    println!("  re-encodes to internal {}\n", schema.pattern_of(&assignment)?);

    // An unrealizable one: a single disagreement on the comparison cycle.
    let impossible = paper_order_convert(&"0100".parse()?, &shape, ConvertDirection::FromPaper)?;
    println!(
        "display pattern 0100: union-find says {}, exhaustive search says {}\n",
        is_feasible(&impossible, &schema)?,
        is_feasible_bruteforce(&impossible, &schema)?,
    );

    // Three independent routes to the same counts.
    for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        let schema = ComparisonSchema::for_shape(&SystemShape::new(m, n)?);
        let enumerated = count_feasible(&schema, DEFAULT_DIGIT_CAP)?;
        let partitions = feasible_count_by_partitions(&schema)?;
        let mut searched = 0u64;
        for i in 0..1u64 << schema.len() {
            let p = DigitPattern::from_index(i, schema.len());
            searched += is_feasible_bruteforce(&p, &schema)? as u64;
        }
        println!(
            "{m}⊕{n}: enumerated {enumerated}, connected partitions {partitions}, \
             exhaustive search {searched}"
        );
        assert_eq!(enumerated, partitions);
        assert_eq!(enumerated, searched);
    }
    Ok(())
}
