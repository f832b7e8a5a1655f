//! Pattern-space enumeration and count verification.
//!
//! The closed-form predictions for how many universes a shape generates are
//! treated as claims to be measured, never assumed: [`verify_counts`] runs the
//! enumeration, both independent oracles, and both formulas, and records
//! where observation and prediction agree or part ways. A formula mismatch is
//! a finding, not an error.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serializer;

use crate::classify::{RealityClass, classify_two_one};
use crate::error::{Error, Result};
use crate::feasibility::{digit_variable_pairs, feasible_count_by_partitions, satisfiable_bits};
use crate::model::{ComparisonSchema, ConvertDirection, DigitPattern, paper_order_convert};
use crate::symmetry::{burnside_class_count, canonical_form};

/// Default digit cap for exhaustive pattern enumeration (~16M patterns).
pub const DEFAULT_DIGIT_CAP: usize = 24;

/// Hard ceiling: pattern indices are u64.
const INDEX_DIGIT_LIMIT: usize = 63;

fn checked_digit_count(schema: &ComparisonSchema, cap: usize) -> Result<usize> {
    let digits = schema.len();
    let limit = cap.min(INDEX_DIGIT_LIMIT);
    if digits > limit {
        return Err(Error::CapExceeded {
            what: "pattern enumeration",
            limit,
            actual: digits,
        });
    }
    Ok(digits)
}

/// All 2^d patterns of the schema in lexicographic order.
pub fn enumerate_patterns(
    schema: &ComparisonSchema,
    cap: usize,
) -> Result<impl Iterator<Item = DigitPattern>> {
    let digits = checked_digit_count(schema, cap)?;
    Ok((0..1u64 << digits).map(move |i| DigitPattern::from_index(i, digits)))
}

/// The feasible subsequence of [`enumerate_patterns`], same order.
pub fn enumerate_feasible(
    schema: &ComparisonSchema,
    cap: usize,
) -> Result<impl Iterator<Item = DigitPattern>> {
    let digits = checked_digit_count(schema, cap)?;
    let variable_count = schema.shape().variable_count();
    let pairs = digit_variable_pairs(schema);
    Ok((0..1u64 << digits).filter_map(move |i| {
        let p = DigitPattern::from_index(i, digits);
        satisfiable_bits(variable_count, &pairs, |j| p.bit(j)).then_some(p)
    }))
}

/// Feasible patterns collected in parallel over index ranges; the output
/// order is identical to the sequential stream.
pub fn feasible_patterns_par(
    schema: &ComparisonSchema,
    cap: usize,
) -> Result<Vec<DigitPattern>> {
    let digits = checked_digit_count(schema, cap)?;
    let variable_count = schema.shape().variable_count();
    let pairs = digit_variable_pairs(schema);
    Ok((0..1u64 << digits)
        .into_par_iter()
        .filter_map(|i| {
            let p = DigitPattern::from_index(i, digits);
            satisfiable_bits(variable_count, &pairs, |j| p.bit(j)).then_some(p)
        })
        .collect())
}

/// Number of feasible patterns, counted in parallel.
pub fn count_feasible(schema: &ComparisonSchema, cap: usize) -> Result<u64> {
    let digits = checked_digit_count(schema, cap)?;
    let variable_count = schema.shape().variable_count();
    let pairs = digit_variable_pairs(schema);
    Ok((0..1u64 << digits)
        .into_par_iter()
        .filter(|&i| {
            let p = DigitPattern::from_index(i, digits);
            satisfiable_bits(variable_count, &pairs, |j| p.bit(j))
        })
        .count() as u64)
}

/// One isomorphism class of feasible patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniverseClass {
    /// Lexicographically smallest member, internal digit order.
    pub canonical: DigitPattern,
    pub orbit_size: usize,
    pub feasible: bool,
    /// Taxonomy name; only 2⊕1 classes carry one.
    pub reality: Option<RealityClass>,
}

/// One entry per isomorphism class among feasible patterns, ordered
/// lexicographically by canonical pattern.
pub fn enumerate_classes(schema: &ComparisonSchema, cap: usize) -> Result<Vec<UniverseClass>> {
    let mut orbit_sizes: BTreeMap<DigitPattern, usize> = BTreeMap::new();
    for p in enumerate_feasible(schema, cap)? {
        *orbit_sizes.entry(canonical_form(&p, schema)?).or_insert(0) += 1;
    }
    let is_two_one = schema.shape().is_two_one();
    orbit_sizes
        .into_iter()
        .map(|(canonical, orbit_size)| {
            let reality = if is_two_one {
                let display =
                    paper_order_convert(&canonical, schema.shape(), ConvertDirection::ToPaper)?;
                Some(classify_two_one(&display)?)
            } else {
                None
            };
            Ok(UniverseClass {
                canonical,
                orbit_size,
                feasible: true,
                reality,
            })
        })
        .collect()
}

/// Closed-form prediction for the number of realizable universes of an
/// m⊕n system: 2^(m²n) − m²n.
pub fn predicted_feasible_count(m: usize, n: usize) -> BigInt {
    let digits = m * m * n;
    (BigInt::from(1u8) << digits) - BigInt::from(digits)
}

/// Closed-form prediction for the number of universes distinct up to subject
/// renaming: 2^(m²n) − m²n − (3/2)·n·m·(m−1). The subtracted term is always
/// an integer because m(m−1) is even.
pub fn predicted_class_count(m: usize, n: usize) -> BigInt {
    predicted_feasible_count(m, n) - BigInt::from(3 * n * m * (m - 1) / 2)
}

fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Observed counts vs. closed-form predictions vs. independent oracles for
/// one shape. `None` marks a field skipped because a guard tripped. Big
/// integers serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CountReport {
    pub m: usize,
    pub n: usize,
    pub observable: Vec<usize>,
    pub digit_count: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub total_patterns: BigUint,
    pub feasible_observed: Option<u64>,
    pub classes_observed: Option<u64>,
    /// Connected-partition oracle for the feasible count.
    pub partition_oracle: Option<u64>,
    /// Group-averaged fixed-pattern oracle for the class count.
    pub burnside_check: Option<u64>,
    #[serde(serialize_with = "serialize_bigint")]
    pub predicted_feasible: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub predicted_classes: BigInt,
    pub predicted_feasible_matches: Option<bool>,
    pub predicted_classes_matches: Option<bool>,
    pub partition_oracle_agrees: Option<bool>,
    pub burnside_agrees: Option<bool>,
}

impl CountReport {
    /// True when two routes that both ran contradict each other — the only
    /// outcome the report treats as an internal failure.
    pub fn oracles_disagree(&self) -> bool {
        self.partition_oracle_agrees == Some(false) || self.burnside_agrees == Some(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Run enumeration, both oracles, and both formulas for a shape, recording
/// every comparison. Guard-excluded fields are reported as skipped rather
/// than failing the whole report. Predictions use the effective object count
/// |observable|, the only reading consistent with the pattern total.
pub fn verify_counts(schema: &ComparisonSchema, cap: usize) -> CountReport {
    let shape = schema.shape();
    let digits = schema.len();
    let (m, n_effective) = (shape.subjects(), shape.observable_count());

    let feasible_observed = count_feasible(schema, cap).ok();
    let classes_observed = enumerate_classes(schema, cap).ok().map(|v| v.len() as u64);
    let partition_oracle = feasible_count_by_partitions(schema).ok();
    let burnside_check = burnside_class_count(schema, cap).ok();
    let predicted_feasible = predicted_feasible_count(m, n_effective);
    let predicted_classes = predicted_class_count(m, n_effective);

    let against = |observed: Option<u64>, predicted: &BigInt| {
        observed.map(|o| BigInt::from(o) == *predicted)
    };
    let agree = |a: Option<u64>, b: Option<u64>| match (a, b) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };

    CountReport {
        m,
        n: shape.objects(),
        observable: shape.observable().to_vec(),
        digit_count: digits,
        total_patterns: BigUint::from(1u8) << digits,
        predicted_feasible_matches: against(feasible_observed, &predicted_feasible),
        predicted_classes_matches: against(classes_observed, &predicted_classes),
        partition_oracle_agrees: agree(feasible_observed, partition_oracle),
        burnside_agrees: agree(classes_observed, burnside_check),
        feasible_observed,
        classes_observed,
        partition_oracle,
        burnside_check,
        predicted_feasible,
        predicted_classes,
    }
}
