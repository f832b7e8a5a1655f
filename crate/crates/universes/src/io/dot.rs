//! DOT export of universes: subject nodes, object nodes, labeled sensation
//! and communication edges, in a fixed deterministic order.

use std::fmt::Write;

use crate::error::Result;
use crate::feasibility::witness;
use crate::model::{ComparisonSchema, DigitPattern, LabelAssignment};

/// Render an assignment as a directed graph. Subjects are circles S1..Sm,
/// objects are boxes O1..On; unobservable objects appear as isolated nodes.
/// Sensation edges run subject→object, communication edges both ways between
/// every subject pair, each labeled with its label symbol.
pub fn assignment_to_dot(assignment: &LabelAssignment) -> String {
    let shape = assignment.shape();
    let mut out = String::new();
    out.push_str("digraph universe {\n");
    let _ = writeln!(out, "  label=\"{shape}\";");
    out.push_str("  rankdir=LR;\n");
    for a in 0..shape.subjects() {
        let _ = writeln!(out, "  S{} [shape=circle];", a + 1);
    }
    for o in 0..shape.objects() {
        let _ = writeln!(out, "  O{} [shape=box];", o + 1);
    }
    for a in 0..shape.subjects() {
        for &o in shape.observable() {
            let _ = writeln!(
                out,
                "  S{} -> O{} [label=\"{}\"];",
                a + 1,
                o + 1,
                assignment.sensation(a, o)
            );
        }
    }
    for a in 0..shape.subjects() {
        for b in 0..shape.subjects() {
            if a != b {
                let _ = writeln!(
                    out,
                    "  S{} -> S{} [label=\"{}\"];",
                    a + 1,
                    b + 1,
                    assignment.communication(a)
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Render a feasible pattern by drawing one of its witnesses. Infeasible
/// patterns have nothing to draw and are rejected.
pub fn pattern_to_dot(pattern: &DigitPattern, schema: &ComparisonSchema) -> Result<String> {
    let assignment =
        witness(pattern, schema)?.ok_or(crate::error::Error::InfeasiblePattern)?;
    Ok(assignment_to_dot(&assignment))
}
