//! The subject-permutation action on digit patterns.
//!
//! Renaming subjects permutes the digits of the comparison schema; two
//! patterns are isomorphic when some renaming maps one onto the other. The
//! canonical representative of a class is the lexicographically smallest
//! pattern of the orbit, in the internal digit order. The group is tiny
//! (m! elements), so everything here is plain brute force over it.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::feasibility::{digit_variable_pairs, satisfiable_bits};
use crate::model::{ComparisonSchema, DigitDescriptor, DigitPattern};

/// Subject-count guard for orbit and canonical-form computations.
pub const MAX_ORBIT_SUBJECTS: usize = 8;

/// A bijection on the subjects of a shape, zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubjectPermutation {
    map: Vec<usize>,
}

impl SubjectPermutation {
    pub fn identity(m: usize) -> Self {
        Self {
            map: (0..m).collect(),
        }
    }

    /// `map[i]` is the image of subject `i`; must be a bijection.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &image in &map {
            if image >= map.len() || seen[image] {
                return Err(Error::InvalidPermutation(format!(
                    "{map:?} is not a bijection on 0..{}",
                    map.len()
                )));
            }
            seen[image] = true;
        }
        Ok(Self { map })
    }

    /// The permutation swapping subjects `a` and `b`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        if a >= m || b >= m {
            return Err(Error::InvalidPermutation(format!(
                "swap ({a} {b}) out of range for {m} subjects"
            )));
        }
        let mut map: Vec<usize> = (0..m).collect();
        map.swap(a, b);
        Ok(Self { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn image(&self, subject: usize) -> usize {
        self.map[subject]
    }

    /// `self ∘ other`: apply `other` first. Panics on degree mismatch.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            map: (0..self.degree()).map(|i| self.map[other.map[i]]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.map.len()];
        for (i, &image) in self.map.iter().enumerate() {
            map[image] = i;
        }
        Self { map }
    }

    /// All m! permutations, lexicographic by image vector (identity first).
    pub fn all(m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(m);
        let mut used = vec![false; m];
        build_permutations(m, &mut current, &mut used, &mut out);
        out
    }
}

fn build_permutations(
    m: usize,
    current: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<SubjectPermutation>,
) {
    if current.len() == m {
        out.push(SubjectPermutation {
            map: current.clone(),
        });
        return;
    }
    for i in 0..m {
        if !used[i] {
            used[i] = true;
            current.push(i);
            build_permutations(m, current, used, out);
            current.pop();
            used[i] = false;
        }
    }
}

fn permuted_descriptor(d: &DigitDescriptor, pi: &SubjectPermutation) -> DigitDescriptor {
    let norm = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    match *d {
        DigitDescriptor::SensSens { a, b, object } => {
            let (a, b) = norm(pi.image(a), pi.image(b));
            DigitDescriptor::SensSens { a, b, object }
        }
        DigitDescriptor::SensComm { a, object } => DigitDescriptor::SensComm {
            a: pi.image(a),
            object,
        },
        DigitDescriptor::CommComm { a, b, object } => {
            let (a, b) = norm(pi.image(a), pi.image(b));
            DigitDescriptor::CommComm { a, b, object }
        }
    }
}

/// Position map of a permutation: entry `i` is the schema position whose bit
/// lands at position `i` after renaming the subjects by `pi`.
fn position_map(pi: &SubjectPermutation, schema: &ComparisonSchema) -> Vec<usize> {
    let index: HashMap<DigitDescriptor, usize> = schema
        .digits()
        .iter()
        .enumerate()
        .map(|(i, d)| (*d, i))
        .collect();
    schema
        .digits()
        .iter()
        .map(|d| index[&permuted_descriptor(d, pi)])
        .collect()
}

/// The pattern seen after renaming subjects by `pi`: the digit at descriptor
/// D takes the value that sat at the pi⁻¹-relabeled descriptor, so renamings
/// compose as a left action: `apply(apply(p, pi), sigma) = apply(p, sigma∘pi)`.
pub fn apply_subject_permutation(
    pattern: &DigitPattern,
    pi: &SubjectPermutation,
    schema: &ComparisonSchema,
) -> Result<DigitPattern> {
    if pi.degree() != schema.shape().subjects() {
        return Err(Error::ShapeMismatch(format!(
            "permutation acts on {} subjects, shape {} has {}",
            pi.degree(),
            schema.shape(),
            schema.shape().subjects()
        )));
    }
    if pattern.len() != schema.len() {
        return Err(Error::LengthMismatch {
            expected: schema.len(),
            actual: pattern.len(),
        });
    }
    let map = position_map(&pi.inverse(), schema);
    Ok(DigitPattern::new(
        (0..pattern.len()).map(|i| pattern.bit(map[i])).collect(),
    ))
}

fn check_orbit_guard(schema: &ComparisonSchema) -> Result<()> {
    let m = schema.shape().subjects();
    if m > MAX_ORBIT_SUBJECTS {
        return Err(Error::CapExceeded {
            what: "subject-permutation group enumeration",
            limit: MAX_ORBIT_SUBJECTS,
            actual: m,
        });
    }
    Ok(())
}

/// Lexicographically smallest pattern in the orbit of `pattern` under all
/// subject permutations, in the internal digit order.
pub fn canonical_form(pattern: &DigitPattern, schema: &ComparisonSchema) -> Result<DigitPattern> {
    check_orbit_guard(schema)?;
    let mut best: Option<DigitPattern> = None;
    for pi in SubjectPermutation::all(schema.shape().subjects()) {
        let candidate = apply_subject_permutation(pattern, &pi, schema)?;
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("group is never empty"))
}

/// The orbit of `pattern` as a deduplicated, lexicographically sorted set.
pub fn orbit(pattern: &DigitPattern, schema: &ComparisonSchema) -> Result<Vec<DigitPattern>> {
    check_orbit_guard(schema)?;
    let mut members = BTreeSet::new();
    for pi in SubjectPermutation::all(schema.shape().subjects()) {
        members.insert(apply_subject_permutation(pattern, &pi, schema)?);
    }
    Ok(members.into_iter().collect())
}

/// Number of isomorphism classes among feasible patterns, as the group
/// average of per-permutation fixed feasible patterns. Feasibility is
/// invariant under the action, so the average counts orbits of feasible
/// patterns. `cap` bounds the digit count, as for enumeration.
pub fn burnside_class_count(schema: &ComparisonSchema, cap: usize) -> Result<u64> {
    check_orbit_guard(schema)?;
    let digits = schema.len();
    let limit = cap.min(63);
    if digits > limit {
        return Err(Error::CapExceeded {
            what: "fixed-pattern enumeration",
            limit,
            actual: digits,
        });
    }
    let variable_count = schema.shape().variable_count();
    let pairs = digit_variable_pairs(schema);
    let perms = SubjectPermutation::all(schema.shape().subjects());
    let group_order = perms.len() as u64;

    let mut total_fixed = 0u64;
    for pi in &perms {
        let map = position_map(pi, schema);
        let cycles = position_cycles(&map);
        // A pattern is fixed by pi exactly when it is constant on the cycles
        // of the position map, so only 2^(#cycles) candidates exist.
        let mut bits = vec![false; digits];
        for choice in 0u64..(1u64 << cycles.len()) {
            for (c, cycle) in cycles.iter().enumerate() {
                let value = choice >> c & 1 == 1;
                for &pos in cycle {
                    bits[pos] = value;
                }
            }
            if satisfiable_bits(variable_count, &pairs, |i| bits[i]) {
                total_fixed += 1;
            }
        }
    }
    debug_assert_eq!(total_fixed % group_order, 0);
    Ok(total_fixed / group_order)
}

fn position_cycles(map: &[usize]) -> Vec<Vec<usize>> {
    let mut cycles = Vec::new();
    let mut visited = vec![false; map.len()];
    for start in 0..map.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !visited[x] {
            visited[x] = true;
            cycle.push(x);
            x = map[x];
        }
        cycles.push(cycle);
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::is_feasible;
    use crate::model::{ConvertDirection, SystemShape, paper_order_convert};

    fn schema(m: usize, n: usize) -> ComparisonSchema {
        ComparisonSchema::for_shape(&SystemShape::new(m, n).unwrap())
    }

    fn paper(s: &str) -> DigitPattern {
        let shape = SystemShape::new(2, 1).unwrap();
        paper_order_convert(&s.parse().unwrap(), &shape, ConvertDirection::FromPaper).unwrap()
    }

    fn to_paper(p: &DigitPattern) -> DigitPattern {
        let shape = SystemShape::new(2, 1).unwrap();
        paper_order_convert(p, &shape, ConvertDirection::ToPaper).unwrap()
    }

    #[test]
    fn identity_leaves_patterns_unchanged() {
        let s = schema(3, 1);
        let id = SubjectPermutation::identity(3);
        for i in [0u64, 5, 99, 511] {
            let p = DigitPattern::from_index(i, 9);
            assert_eq!(apply_subject_permutation(&p, &id, &s).unwrap(), p);
        }
    }

    #[test]
    fn swap_maps_the_documented_two_one_pairs() {
        let s = schema(2, 1);
        let swap = SubjectPermutation::transposition(2, 0, 1).unwrap();
        let moved = apply_subject_permutation(&paper("0110"), &swap, &s).unwrap();
        assert_eq!(to_paper(&moved).to_string(), "0011");
        let moved = apply_subject_permutation(&paper("1110"), &swap, &s).unwrap();
        assert_eq!(to_paper(&moved).to_string(), "1011");
    }

    #[test]
    fn group_action_laws_hold_exhaustively_for_small_shapes() {
        for (m, n) in [(2usize, 1usize), (3, 1)] {
            let s = schema(m, n);
            let d = s.len();
            let perms = SubjectPermutation::all(m);
            let id = SubjectPermutation::identity(m);
            for i in 0..(1u64 << d) {
                let p = DigitPattern::from_index(i, d);
                assert_eq!(apply_subject_permutation(&p, &id, &s).unwrap(), p);
                for a in &perms {
                    let once = apply_subject_permutation(&p, a, &s).unwrap();
                    for b in &perms {
                        let twice = apply_subject_permutation(&once, b, &s).unwrap();
                        let composed =
                            apply_subject_permutation(&p, &b.compose(a), &s).unwrap();
                        assert_eq!(twice, composed);
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_examples() {
        let s = schema(2, 1);
        let canon = |p: &str| to_paper(&canonical_form(&paper(p), &s).unwrap()).to_string();
        assert_eq!(canon("0110"), "0011");
        assert_eq!(canon("1100"), "1001");
        assert_eq!(canon("0000"), "0000");
    }

    #[test]
    fn orbit_examples() {
        let s = schema(2, 1);
        let orb = |p: &str| -> Vec<String> {
            let mut v: Vec<String> = orbit(&paper(p), &s)
                .unwrap()
                .iter()
                .map(|q| to_paper(q).to_string())
                .collect();
            v.sort();
            v
        };
        assert_eq!(orb("0011"), vec!["0011", "0110"]);
        assert_eq!(orb("0101"), vec!["0101"]);
        assert_eq!(orb("1111"), vec!["1111"]);
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_constant() {
        let s = schema(3, 1);
        let perms = SubjectPermutation::all(3);
        for i in 0..512u64 {
            let p = DigitPattern::from_index(i, 9);
            let c = canonical_form(&p, &s).unwrap();
            assert_eq!(canonical_form(&c, &s).unwrap(), c);
            for pi in &perms {
                let moved = apply_subject_permutation(&p, pi, &s).unwrap();
                assert_eq!(canonical_form(&moved, &s).unwrap(), c);
            }
        }
    }

    #[test]
    fn feasibility_is_orbit_invariant() {
        let s = schema(3, 1);
        let perms = SubjectPermutation::all(3);
        for i in 0..512u64 {
            let p = DigitPattern::from_index(i, 9);
            let f = is_feasible(&p, &s).unwrap();
            for pi in &perms {
                let moved = apply_subject_permutation(&p, pi, &s).unwrap();
                assert_eq!(is_feasible(&moved, &s).unwrap(), f);
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        let s = schema(3, 1);
        for i in 0..512u64 {
            let p = DigitPattern::from_index(i, 9);
            assert_eq!(6 % orbit(&p, &s).unwrap().len(), 0);
        }
    }

    #[test]
    fn burnside_two_one_is_9_with_the_expected_split() {
        let s = schema(2, 1);
        assert_eq!(burnside_class_count(&s, 24).unwrap(), 9);
        // identity fixes all 12 feasible patterns, the swap fixes 6
        let swap = SubjectPermutation::transposition(2, 0, 1).unwrap();
        let fixed_by_swap = (0..16u64)
            .map(|i| DigitPattern::from_index(i, 4))
            .filter(|p| is_feasible(p, &s).unwrap())
            .filter(|p| apply_subject_permutation(p, &swap, &s).unwrap() == *p)
            .count();
        assert_eq!(fixed_by_swap, 6);
    }

    #[test]
    fn burnside_one_one_is_2() {
        assert_eq!(burnside_class_count(&schema(1, 1), 24).unwrap(), 2);
    }

    #[test]
    fn permutation_validation() {
        assert!(SubjectPermutation::new(vec![1, 2, 0]).is_ok());
        assert!(SubjectPermutation::new(vec![0, 0, 1]).is_err());
        assert!(SubjectPermutation::new(vec![0, 3, 1]).is_err());
        let s = schema(3, 1);
        let wrong = SubjectPermutation::identity(2);
        assert!(matches!(
            apply_subject_permutation(&DigitPattern::zeros(9), &wrong, &s),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn compose_and_inverse_are_consistent() {
        let a = SubjectPermutation::new(vec![2, 0, 1]).unwrap();
        let id = SubjectPermutation::identity(3);
        assert_eq!(a.compose(&a.inverse()), id);
        assert_eq!(a.inverse().compose(&a), id);
    }
}
