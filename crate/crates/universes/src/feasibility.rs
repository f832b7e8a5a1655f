//! Realizability of digit patterns.
//!
//! A pattern is feasible when some label assignment produces it. The decision
//! procedure unions the variables joined by 0-digits and then rejects any
//! 1-digit whose endpoints landed in the same set; this is exact because the
//! label alphabet is unbounded, so any remaining distinctness demands are
//! always satisfiable. Two independent oracles — an exhaustive assignment
//! search and a connected-partition count — exist solely to cross-check it.

use crate::error::{Error, Result};
use crate::model::{ComparisonSchema, DigitPattern, Label, LabelAssignment, LabelSlot};

/// Variable-count guard for [`is_feasible_bruteforce`].
pub const MAX_BRUTEFORCE_VARIABLES: usize = 10;
/// Variable-count guard for [`feasible_count_by_partitions`].
pub const MAX_PARTITION_VARIABLES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    Different,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintEdge {
    pub u: usize,
    pub v: usize,
    pub relation: Relation,
}

/// A pattern aligned with its schema, read as equality/inequality constraints
/// over the shape's label variables: one edge per digit.
#[derive(Debug, Clone)]
pub struct ConstraintGraph {
    variable_count: usize,
    edges: Vec<ConstraintEdge>,
}

impl ConstraintGraph {
    pub fn new(pattern: &DigitPattern, schema: &ComparisonSchema) -> Result<Self> {
        if pattern.len() != schema.len() {
            return Err(Error::LengthMismatch {
                expected: schema.len(),
                actual: pattern.len(),
            });
        }
        let shape = schema.shape();
        let edges = schema
            .digits()
            .iter()
            .zip(pattern.bits())
            .map(|(digit, &bit)| {
                let (x, y) = digit.slots();
                ConstraintEdge {
                    u: x.index(shape),
                    v: y.index(shape),
                    relation: if bit { Relation::Different } else { Relation::Equal },
                }
            })
            .collect();
        Ok(Self {
            variable_count: shape.variable_count(),
            edges,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn edges(&self) -> &[ConstraintEdge] {
        &self.edges
    }

    pub fn is_satisfiable(&self) -> bool {
        self.merged_sets().is_some()
    }

    /// One label per variable when satisfiable: a fresh natural number per
    /// merged equality set, numbered in first-appearance order.
    pub fn satisfying_labels(&self) -> Option<Vec<Label>> {
        let mut sets = self.merged_sets()?;
        let mut numbering = vec![u64::MAX; self.variable_count];
        let mut next = 0u64;
        let labels = (0..self.variable_count)
            .map(|v| {
                let root = sets.find(v);
                if numbering[root] == u64::MAX {
                    numbering[root] = next;
                    next += 1;
                }
                Label(numbering[root])
            })
            .collect();
        Some(labels)
    }

    fn merged_sets(&self) -> Option<DisjointSets> {
        let mut sets = DisjointSets::new(self.variable_count);
        for e in &self.edges {
            if e.relation == Relation::Equal {
                sets.union(e.u, e.v);
            }
        }
        for e in &self.edges {
            if e.relation == Relation::Different && sets.find(e.u) == sets.find(e.v) {
                return None;
            }
        }
        Some(sets)
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Is `pattern` realizable by some label assignment?
pub fn is_feasible(pattern: &DigitPattern, schema: &ComparisonSchema) -> Result<bool> {
    Ok(ConstraintGraph::new(pattern, schema)?.is_satisfiable())
}

/// A realizing assignment for `pattern`, or `None` when the pattern is
/// infeasible. The witness re-encodes to exactly `pattern`.
pub fn witness(
    pattern: &DigitPattern,
    schema: &ComparisonSchema,
) -> Result<Option<LabelAssignment>> {
    let graph = ConstraintGraph::new(pattern, schema)?;
    let Some(labels) = graph.satisfying_labels() else {
        return Ok(None);
    };
    let shape = schema.shape();
    Ok(Some(LabelAssignment::from_fn(
        shape.clone(),
        |subject, object| labels[LabelSlot::Sensation { subject, object }.index(shape)],
        |subject| labels[LabelSlot::Communication { subject }.index(shape)],
    )))
}

/// Independent oracle: exhaustive search for a realizing assignment.
///
/// Labels only matter up to equality, so candidates are capped at one fresh
/// symbol beyond those already in use; every assignment over a V-symbol
/// alphabet is a relabeling of one the search visits. Must agree with
/// [`is_feasible`] everywhere it runs. Guarded to
/// [`MAX_BRUTEFORCE_VARIABLES`] variables.
pub fn is_feasible_bruteforce(
    pattern: &DigitPattern,
    schema: &ComparisonSchema,
) -> Result<bool> {
    let variables = schema.shape().variable_count();
    if variables > MAX_BRUTEFORCE_VARIABLES {
        return Err(Error::CapExceeded {
            what: "exhaustive assignment search",
            limit: MAX_BRUTEFORCE_VARIABLES,
            actual: variables,
        });
    }
    if pattern.len() != schema.len() {
        return Err(Error::LengthMismatch {
            expected: schema.len(),
            actual: pattern.len(),
        });
    }

    // constraints[v] = (earlier variable, must-be-equal) for every digit
    // touching v from below, so each DFS level checks all decided digits.
    let shape = schema.shape();
    let mut constraints: Vec<Vec<(usize, bool)>> = vec![Vec::new(); variables];
    for (i, digit) in schema.digits().iter().enumerate() {
        let (x, y) = digit.slots();
        let (lo, hi) = {
            let (a, b) = (x.index(shape), y.index(shape));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        constraints[hi].push((lo, !pattern.bit(i)));
    }

    let mut labels = vec![0u64; variables];
    Ok(search(0, 0, &mut labels, &constraints))
}

fn search(v: usize, used: u64, labels: &mut [u64], constraints: &[Vec<(usize, bool)>]) -> bool {
    if v == labels.len() {
        return true;
    }
    let mut forced: Option<u64> = None;
    for &(u, equal) in &constraints[v] {
        if equal {
            match forced {
                None => forced = Some(labels[u]),
                Some(f) if f != labels[u] => return false,
                Some(_) => {}
            }
        }
    }
    let violates = |candidate: u64, labels: &[u64]| {
        constraints[v]
            .iter()
            .any(|&(u, equal)| !equal && labels[u] == candidate)
    };
    if let Some(f) = forced {
        if violates(f, labels) {
            return false;
        }
        labels[v] = f;
        return search(v + 1, used, labels, constraints);
    }
    for candidate in 0..=used {
        if violates(candidate, labels) {
            continue;
        }
        labels[v] = candidate;
        let used_next = if candidate == used { used + 1 } else { used };
        if search(v + 1, used_next, labels, constraints) {
            return true;
        }
    }
    false
}

/// Independent oracle: the number of feasible patterns of a schema, counted
/// without ever touching patterns.
///
/// Feasible patterns are in bijection with partitions of the label variables
/// in which every block induces a connected subgraph of the comparison graph
/// (bit 0 exactly on within-block digits). Guarded to
/// [`MAX_PARTITION_VARIABLES`] variables.
pub fn feasible_count_by_partitions(schema: &ComparisonSchema) -> Result<u64> {
    let variables = schema.shape().variable_count();
    if variables > MAX_PARTITION_VARIABLES {
        return Err(Error::CapExceeded {
            what: "set-partition enumeration",
            limit: MAX_PARTITION_VARIABLES,
            actual: variables,
        });
    }
    let shape = schema.shape();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); variables];
    for digit in schema.digits() {
        let (x, y) = digit.slots();
        let (u, v) = (x.index(shape), y.index(shape));
        adjacency[u].push(v);
        adjacency[v].push(u);
    }

    let mut block_of = vec![0usize; variables];
    let mut count = 0u64;
    connected_partition_rec(0, 0, &mut block_of, &adjacency, &mut count);
    Ok(count)
}

fn connected_partition_rec(
    v: usize,
    blocks: usize,
    block_of: &mut [usize],
    adjacency: &[Vec<usize>],
    count: &mut u64,
) {
    if v == block_of.len() {
        if all_blocks_connected(blocks, block_of, adjacency) {
            *count += 1;
        }
        return;
    }
    for b in 0..=blocks {
        block_of[v] = b;
        connected_partition_rec(v + 1, blocks.max(b + 1), block_of, adjacency, count);
    }
}

fn all_blocks_connected(blocks: usize, block_of: &[usize], adjacency: &[Vec<usize>]) -> bool {
    let n = block_of.len();
    let mut seen = vec![false; n];
    for b in 0..blocks {
        let members: Vec<usize> = (0..n).filter(|&v| block_of[v] == b).collect();
        if members.is_empty() {
            continue;
        }
        let mut stack = vec![members[0]];
        let mut reached = 0usize;
        for s in seen.iter_mut() {
            *s = false;
        }
        seen[members[0]] = true;
        while let Some(x) = stack.pop() {
            reached += 1;
            for &y in &adjacency[x] {
                if block_of[y] == b && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if reached != members.len() {
            return false;
        }
    }
    true
}

/// Flat variable-index pairs per digit, for bulk feasibility sweeps that
/// cannot afford to rebuild a [`ConstraintGraph`] per pattern.
pub(crate) fn digit_variable_pairs(schema: &ComparisonSchema) -> Vec<(u32, u32)> {
    let shape = schema.shape();
    schema
        .digits()
        .iter()
        .map(|d| {
            let (x, y) = d.slots();
            (x.index(shape) as u32, y.index(shape) as u32)
        })
        .collect()
}

/// Union-find feasibility over pre-extracted variable pairs; `bit` yields the
/// digit values of the candidate pattern.
pub(crate) fn satisfiable_bits(
    variable_count: usize,
    pairs: &[(u32, u32)],
    bit: impl Fn(usize) -> bool,
) -> bool {
    let mut sets = DisjointSets::new(variable_count);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if !bit(i) {
            sets.union(u as usize, v as usize);
        }
    }
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if bit(i) && sets.find(u as usize) == sets.find(v as usize) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ConvertDirection, SystemShape, paper_order_convert};

    fn two_one() -> ComparisonSchema {
        ComparisonSchema::for_shape(&SystemShape::new(2, 1).unwrap())
    }

    fn paper(s: &str) -> DigitPattern {
        let shape = SystemShape::new(2, 1).unwrap();
        paper_order_convert(&s.parse().unwrap(), &shape, ConvertDirection::FromPaper).unwrap()
    }

    #[test]
    fn all_zero_and_all_one_are_feasible() {
        let schema = two_one();
        assert!(is_feasible(&DigitPattern::zeros(4), &schema).unwrap());
        assert!(is_feasible(&DigitPattern::ones(4), &schema).unwrap());
    }

    #[test]
    fn single_different_digit_on_the_comparison_cycle_is_infeasible() {
        let schema = two_one();
        assert!(!is_feasible(&paper("0100"), &schema).unwrap());
        assert!(!is_feasible_bruteforce(&paper("1000"), &schema).unwrap());
    }

    #[test]
    fn two_one_has_exactly_four_infeasible_patterns_each_with_one_1_bit() {
        let schema = two_one();
        let infeasible: Vec<DigitPattern> = (0..16)
            .map(|i| DigitPattern::from_index(i, 4))
            .filter(|p| !is_feasible(p, &schema).unwrap())
            .collect();
        assert_eq!(infeasible.len(), 4);
        assert!(infeasible.iter().all(|p| p.count_ones() == 1));
    }

    #[test]
    fn witness_round_trips_for_every_feasible_pattern() {
        let schema = two_one();
        for i in 0..16 {
            let p = DigitPattern::from_index(i, 4);
            match witness(&p, &schema).unwrap() {
                Some(a) => assert_eq!(schema.pattern_of(&a).unwrap(), p, "witness for {p}"),
                None => assert!(!is_feasible(&p, &schema).unwrap()),
            }
        }
    }

    #[test]
    fn witness_structure_for_paper_1001() {
        let schema = two_one();
        let a = witness(&paper("1001"), &schema).unwrap().expect("feasible");
        assert_eq!(a.sensation(0, 0), a.communication(0));
        assert_eq!(a.communication(0), a.communication(1));
        assert_ne!(a.sensation(1, 0), a.sensation(0, 0));
    }

    #[test]
    fn witness_is_none_for_paper_0010() {
        let schema = two_one();
        assert!(witness(&paper("0010"), &schema).unwrap().is_none());
    }

    #[test]
    fn bruteforce_agrees_with_union_find_on_all_two_one_patterns() {
        let schema = two_one();
        for i in 0..16 {
            let p = DigitPattern::from_index(i, 4);
            assert_eq!(
                is_feasible(&p, &schema).unwrap(),
                is_feasible_bruteforce(&p, &schema).unwrap(),
                "disagreement on {p}"
            );
        }
    }

    #[test]
    fn partition_count_two_one_is_12() {
        assert_eq!(feasible_count_by_partitions(&two_one()).unwrap(), 12);
    }

    #[test]
    fn partition_count_one_one_is_2() {
        let schema = ComparisonSchema::for_shape(&SystemShape::new(1, 1).unwrap());
        assert_eq!(feasible_count_by_partitions(&schema).unwrap(), 2);
    }

    #[test]
    fn partition_count_matches_enumerated_count_at_three_one() {
        let schema = ComparisonSchema::for_shape(&SystemShape::new(3, 1).unwrap());
        let enumerated = (0..512u64)
            .filter(|&i| is_feasible(&DigitPattern::from_index(i, 9), &schema).unwrap())
            .count() as u64;
        assert_eq!(feasible_count_by_partitions(&schema).unwrap(), enumerated);
        // frozen from a pre-build oracle run
        assert_eq!(enumerated, 114);
    }

    #[test]
    fn every_assignment_pattern_is_feasible() {
        let shape = SystemShape::new(3, 2).unwrap();
        let schema = ComparisonSchema::for_shape(&shape);
        for seed in 0..50u64 {
            let a = LabelAssignment::from_fn(
                shape.clone(),
                |s, o| Label((seed + 3 * s as u64 + 5 * o as u64) % 4),
                |s| Label((seed + s as u64) % 3),
            );
            let p = schema.pattern_of(&a).unwrap();
            assert!(is_feasible(&p, &schema).unwrap());
        }
    }

    #[test]
    fn guards_reject_oversized_shapes() {
        let big = ComparisonSchema::for_shape(&SystemShape::new(4, 2).unwrap()); // 12 variables
        assert!(matches!(
            is_feasible_bruteforce(&DigitPattern::zeros(32), &big),
            Err(Error::CapExceeded { .. })
        ));
        let bigger = ComparisonSchema::for_shape(&SystemShape::new(4, 3).unwrap()); // 16 variables
        assert!(matches!(
            feasible_count_by_partitions(&bigger),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let schema = two_one();
        assert!(matches!(
            is_feasible(&DigitPattern::zeros(3), &schema),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
