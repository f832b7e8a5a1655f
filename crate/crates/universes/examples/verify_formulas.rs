//! Audit the closed-form counting predictions against enumeration and both
//! oracles, shape by shape. The predictions hold at 2⊕1 and fall apart
//! beyond it; the report records both outcomes.
//!
//! ```bash
//! cargo run -p universes --example verify_formulas
//! ```

use universes::enumeration::{DEFAULT_DIGIT_CAP, verify_counts};
use universes::model::{ComparisonSchema, SystemShape};

fn main() -> universes::Result<()> {
    println!(
        "{:<6} {:>8} {:>9} {:>10} {:>8} {:>10} {:>6}",
        "shape", "total", "feasible", "predicted", "classes", "predicted", "match"
    );
    for (m, n) in [(1, 0), (1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        let shape = SystemShape::new(m, n)?;
        let report = verify_counts(&ComparisonSchema::for_shape(&shape), DEFAULT_DIGIT_CAP);
        assert!(!report.oracles_disagree());
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
        println!(
            "{:<6} {:>8} {:>9} {:>10} {:>8} {:>10} {:>6}",
            shape.to_string(),
            report.total_patterns.to_string(),
            opt(report.feasible_observed),
            report.predicted_feasible.to_string(),
            opt(report.classes_observed),
            report.predicted_classes.to_string(),
            match report.predicted_feasible_matches {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            },
        );
    }

    println!("\nfull report for 3⊕1:");
    let schema = ComparisonSchema::for_shape(&SystemShape::new(3, 1)?);
    println!("{}", verify_counts(&schema, DEFAULT_DIGIT_CAP).to_json());
    Ok(())
}
