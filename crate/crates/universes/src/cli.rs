//! Command-line driver. The binary is a thin wrapper around [`run`], which is
//! also what the CLI tests call directly.
//!
//! Exit statuses: 0 success, 1 usage error, 2 cap exceeded, 3 internal oracle
//! disagreement. A formula/observation mismatch in `verify-counts` is a
//! reported finding, not a failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::classify_two_one;
use crate::enumeration::{
    DEFAULT_DIGIT_CAP, enumerate_classes, enumerate_patterns, verify_counts,
};
use crate::error::{Error, Result};
use crate::feasibility::is_feasible;
use crate::io::{Scenario, UniverseDocument, assignment_to_dot, pattern_to_dot};
use crate::model::{ComparisonSchema, DigitPattern, PatternOrder, SystemShape, convert_order};
use crate::symmetry::{canonical_form, orbit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP_EXCEEDED: i32 = 2;
pub const EXIT_ORACLE_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "universes",
    version,
    about = "Enumerate, verify, classify and draw m⊕n subject/object universes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Paper,
    Internal,
}

impl From<OrderArg> for PatternOrder {
    fn from(value: OrderArg) -> Self {
        match value {
            OrderArg::Paper => PatternOrder::Paper,
            OrderArg::Internal => PatternOrder::Internal,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream every digit pattern of a shape
    Enumerate {
        /// Number of subjects
        #[arg(long)]
        m: usize,
        /// Number of objects
        #[arg(long)]
        n: usize,
        /// Keep only realizable patterns
        #[arg(long)]
        feasible_only: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Digit order for bit strings (default: paper for 2⊕1, internal otherwise)
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        /// Override the enumeration digit cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Stream isomorphism classes with orbit sizes
    Classes {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Name the reality class of a feasible 2⊕1 pattern
    Classify {
        /// Four-digit bit string
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Paper)]
        order: OrderArg,
    },
    /// Compare observed counts against the closed-form predictions and both oracles
    VerifyCounts {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Canonical form and orbit of a pattern under subject renaming
    Canonical {
        #[arg(long)]
        pattern: String,
        /// Subjects (default 2 for four-digit patterns)
        #[arg(long)]
        m: Option<usize>,
        /// Objects (default 1 for four-digit patterns)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Run an agreement scenario file and print the transcript and verdict
    Simulate {
        /// Scenario JSON file
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Export a universe as a DOT graph
    ExportDot {
        /// Bit string; a witness assignment provides the edge labels
        #[arg(long, conflicts_with = "labels")]
        pattern: Option<String>,
        /// Universe document JSON file
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        /// Output file
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parse and dispatch; everything is written to `out`/`err` so callers can
/// capture it. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CapExceeded { .. } => EXIT_CAP_EXCEEDED,
                _ => EXIT_USAGE,
            }
        }
    }
}

#[derive(Serialize)]
struct PatternRecord {
    pattern: String,
    order: &'static str,
    feasible: bool,
}

#[derive(Serialize)]
struct ClassRecord {
    canonical: String,
    order: &'static str,
    orbit_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<&'static str>,
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Enumerate {
            m,
            n,
            feasible_only,
            format,
            order,
            cap,
        } => {
            let shape = SystemShape::new(m, n)?;
            let schema = ComparisonSchema::for_shape(&shape);
            let display = resolve_order(order, &shape);
            let cap = cap.unwrap_or(DEFAULT_DIGIT_CAP);
            let mut records = Vec::new();
            for p in enumerate_patterns(&schema, cap)? {
                let feasible = is_feasible(&p, &schema)?;
                if feasible_only && !feasible {
                    continue;
                }
                records.push(PatternRecord {
                    pattern: convert_order(&p, &shape, PatternOrder::Internal, display)?
                        .to_string(),
                    order: display.as_str(),
                    feasible,
                });
            }
            match format {
                OutputFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&records)?)?;
                }
                OutputFormat::Csv => {
                    writeln!(out, "pattern,order,feasible")?;
                    for r in records {
                        writeln!(out, "{},{},{}", r.pattern, r.order, r.feasible)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classes {
            m,
            n,
            format,
            order,
            cap,
        } => {
            let shape = SystemShape::new(m, n)?;
            let schema = ComparisonSchema::for_shape(&shape);
            let display = resolve_order(order, &shape);
            let cap = cap.unwrap_or(DEFAULT_DIGIT_CAP);
            let records: Vec<ClassRecord> = enumerate_classes(&schema, cap)?
                .into_iter()
                .map(|c| {
                    Ok(ClassRecord {
                        canonical: convert_order(&c.canonical, &shape, PatternOrder::Internal, display)?
                            .to_string(),
                        order: display.as_str(),
                        orbit_size: c.orbit_size,
                        class: c.reality.map(|r| r.as_str()),
                    })
                })
                .collect::<Result<_>>()?;
            match format {
                OutputFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&records)?)?;
                }
                OutputFormat::Csv => {
                    writeln!(out, "canonical,order,orbit_size,class")?;
                    for r in records {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            r.canonical,
                            r.order,
                            r.orbit_size,
                            r.class.unwrap_or("")
                        )?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify { pattern, order } => {
            let bits: DigitPattern = pattern.parse()?;
            let shape = SystemShape::new(2, 1)?;
            let display = convert_order(&bits, &shape, order.into(), PatternOrder::Paper)?;
            writeln!(out, "{}", classify_two_one(&display)?)?;
            Ok(EXIT_OK)
        }
        Command::VerifyCounts { m, n, cap } => {
            let shape = SystemShape::new(m, n)?;
            let schema = ComparisonSchema::for_shape(&shape);
            let report = verify_counts(&schema, cap.unwrap_or(DEFAULT_DIGIT_CAP));
            writeln!(out, "{}", report.to_json())?;
            Ok(if report.oracles_disagree() {
                EXIT_ORACLE_DISAGREEMENT
            } else {
                EXIT_OK
            })
        }
        Command::Canonical { pattern, m, n, order } => {
            let bits: DigitPattern = pattern.parse()?;
            let shape = resolve_pattern_shape(bits.len(), m, n)?;
            let schema = ComparisonSchema::for_shape(&shape);
            let display = resolve_order(order, &shape);
            let internal = convert_order(&bits, &shape, display, PatternOrder::Internal)?;
            let canonical = canonical_form(&internal, &schema)?;
            writeln!(
                out,
                "{}",
                convert_order(&canonical, &shape, PatternOrder::Internal, display)?
            )?;
            let mut members: Vec<String> = orbit(&internal, &schema)?
                .iter()
                .map(|p| {
                    convert_order(p, &shape, PatternOrder::Internal, display)
                        .map(|q| q.to_string())
                })
                .collect::<Result<_>>()?;
            members.sort();
            writeln!(out, "orbit: {}", members.join(" "))?;
            Ok(EXIT_OK)
        }
        Command::Simulate { scenario } => {
            let text = std::fs::read_to_string(&scenario)?;
            let scenario = Scenario::from_json(&text)?;
            let transcript = scenario.run()?;
            writeln!(out, "event\tS1:percept\tS2:percept\tS1:token\tS2:token\tagree")?;
            for e in &transcript.entries {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    e.event,
                    e.percepts[0],
                    e.percepts[1],
                    e.tokens[0],
                    e.tokens[1],
                    if e.agree { "yes" } else { "no" }
                )?;
            }
            writeln!(out, "all_agree: {}", transcript.all_agree)?;
            writeln!(out, "percepts_ever_differ: {}", transcript.percepts_ever_differ)?;
            for (i, flagged) in transcript.language_noninjective.iter().enumerate() {
                if *flagged {
                    writeln!(out, "note: S{}'s language maps two percepts to one token", i + 1)?;
                }
            }
            writeln!(out, "verdict: {}", transcript.verdict())?;
            Ok(EXIT_OK)
        }
        Command::ExportDot {
            pattern,
            labels,
            m,
            n,
            order,
            out: out_path,
        } => {
            let dot = match (pattern, labels) {
                (Some(pattern), None) => {
                    let bits: DigitPattern = pattern.parse()?;
                    let shape = resolve_pattern_shape(bits.len(), m, n)?;
                    let schema = ComparisonSchema::for_shape(&shape);
                    let display = resolve_order(order, &shape);
                    let internal = convert_order(&bits, &shape, display, PatternOrder::Internal)?;
                    pattern_to_dot(&internal, &schema)?
                }
                (None, Some(path)) => {
                    let doc = UniverseDocument::from_json(&std::fs::read_to_string(&path)?)?;
                    match doc.to_assignment()? {
                        Some(assignment) => assignment_to_dot(&assignment),
                        None => {
                            let internal = doc
                                .to_internal_pattern()?
                                .expect("validated documents hold labels or a pattern");
                            let schema = ComparisonSchema::for_shape(&doc.shape()?);
                            pattern_to_dot(&internal, &schema)?
                        }
                    }
                }
                _ => {
                    return Err(Error::InvalidPattern(
                        "pass exactly one of --pattern or --labels".into(),
                    ));
                }
            };
            std::fs::write(&out_path, dot)?;
            writeln!(out, "wrote {}", out_path.display())?;
            Ok(EXIT_OK)
        }
    }
}

fn resolve_order(arg: Option<OrderArg>, shape: &SystemShape) -> PatternOrder {
    match arg {
        Some(order) => order.into(),
        None if shape.is_two_one() => PatternOrder::Paper,
        None => PatternOrder::Internal,
    }
}

/// Shape for a bare pattern: explicit --m/--n win; four-digit patterns
/// default to 2⊕1.
fn resolve_pattern_shape(
    pattern_len: usize,
    m: Option<usize>,
    n: Option<usize>,
) -> Result<SystemShape> {
    let shape = match (m, n) {
        (Some(m), Some(n)) => SystemShape::new(m, n)?,
        (None, None) if pattern_len == 4 => SystemShape::new(2, 1)?,
        (None, None) => {
            return Err(Error::InvalidPattern(format!(
                "a {pattern_len}-digit pattern needs explicit --m and --n"
            )));
        }
        _ => {
            return Err(Error::InvalidPattern(
                "--m and --n must be given together".into(),
            ));
        }
    };
    if shape.digit_count() != pattern_len {
        return Err(Error::LengthMismatch {
            expected: shape.digit_count(),
            actual: pattern_len,
        });
    }
    Ok(shape)
}
