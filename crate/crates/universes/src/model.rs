//! Core domain types for m⊕n universes.
//!
//! An m⊕n system has `m` subjects and `n` objects. Subjects sense objects
//! and communicate with each other; objects do nothing. A [`LabelAssignment`]
//! records the ground-truth labels on those edges, and a [`ComparisonSchema`]
//! lists the ordered label comparisons whose equal/different outcomes form a
//! [`DigitPattern`] — the m²·|observable| bit signature of a universe.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dimensions of a system plus the subset of objects its subjects can sense.
///
/// The observability mask defaults to every object; a strict subset models
/// systems that contain objects no subject can interact with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemShape {
    m: usize,
    n: usize,
    observable: Vec<usize>,
}

impl SystemShape {
    /// A shape with `m` subjects, `n` objects, all objects observable.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        Self::with_observable(m, n, 0..n)
    }

    /// A shape whose subjects can sense only the listed objects.
    pub fn with_observable(
        m: usize,
        n: usize,
        observable: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidShape(
                "at least one subject is required".into(),
            ));
        }
        let mut obs: Vec<usize> = observable.into_iter().collect();
        obs.sort_unstable();
        obs.dedup();
        if let Some(&bad) = obs.iter().find(|&&o| o >= n) {
            return Err(Error::InvalidShape(format!(
                "observable object {bad} is out of range for {n} objects"
            )));
        }
        Ok(Self {
            m,
            n,
            observable: obs,
        })
    }

    pub fn subjects(&self) -> usize {
        self.m
    }

    pub fn objects(&self) -> usize {
        self.n
    }

    /// Observable object indices, ascending.
    pub fn observable(&self) -> &[usize] {
        &self.observable
    }

    pub fn observable_count(&self) -> usize {
        self.observable.len()
    }

    pub fn is_fully_observable(&self) -> bool {
        self.observable.len() == self.n
    }

    /// Number of digits in this shape's comparison schema: m² per observable object.
    pub fn digit_count(&self) -> usize {
        self.m * self.m * self.observable.len()
    }

    /// Number of label variables: one sensation per (subject, observable object)
    /// plus one communication label per subject.
    pub fn variable_count(&self) -> usize {
        self.m * self.observable.len() + self.m
    }

    /// True for the two-subject, one-object, fully observable shape, the only
    /// shape with a fixed four-digit display order.
    pub fn is_two_one(&self) -> bool {
        self.m == 2 && self.n == 1 && self.is_fully_observable()
    }

    pub(crate) fn observable_rank(&self, object: usize) -> Option<usize> {
        self.observable.binary_search(&object).ok()
    }
}

impl fmt::Display for SystemShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊕{}", self.m, self.n)?;
        if !self.is_fully_observable() {
            let objs: Vec<String> = self.observable.iter().map(|o| format!("O{}", o + 1)).collect();
            write!(f, " (observable: {})", objs.join(","))?;
        }
        Ok(())
    }
}

/// An opaque label. Only equality between labels means anything; there is no
/// order and no arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Label(pub u64);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Ground-truth labels of one universe: a sensation label per
/// (subject, observable object) and a single communication label per subject.
///
/// The representation bakes in the structural rules: objects carry no outgoing
/// labels, unobservable objects carry no sensation edge, and all of a subject's
/// outgoing subject-edges share that subject's one communication label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelAssignment {
    shape: SystemShape,
    sens: Vec<Label>, // subject-major over observable ranks
    comm: Vec<Label>,
}

impl LabelAssignment {
    /// Build from explicit rows: `sens[subject][rank]` follows the ascending
    /// observable-object order of the shape.
    pub fn new(shape: SystemShape, sens: Vec<Vec<Label>>, comm: Vec<Label>) -> Result<Self> {
        let k = shape.observable_count();
        if sens.len() != shape.subjects() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} sensation rows, got {}",
                shape.subjects(),
                sens.len()
            )));
        }
        if let Some((i, row)) = sens.iter().enumerate().find(|(_, r)| r.len() != k) {
            return Err(Error::ShapeMismatch(format!(
                "sensation row {} has {} labels, expected {} (one per observable object)",
                i,
                row.len(),
                k
            )));
        }
        if comm.len() != shape.subjects() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} communication labels, got {}",
                shape.subjects(),
                comm.len()
            )));
        }
        Ok(Self {
            shape,
            sens: sens.into_iter().flatten().collect(),
            comm,
        })
    }

    /// Build by evaluating `sens_fn(subject, object)` over observable objects
    /// and `comm_fn(subject)` over subjects.
    pub fn from_fn(
        shape: SystemShape,
        mut sens_fn: impl FnMut(usize, usize) -> Label,
        mut comm_fn: impl FnMut(usize) -> Label,
    ) -> Self {
        let mut sens = Vec::with_capacity(shape.subjects() * shape.observable_count());
        for a in 0..shape.subjects() {
            for &o in shape.observable() {
                sens.push(sens_fn(a, o));
            }
        }
        let comm = (0..shape.subjects()).map(&mut comm_fn).collect();
        Self { shape, sens, comm }
    }

    /// Every slot gets the same label.
    pub fn constant(shape: SystemShape, label: Label) -> Self {
        Self::from_fn(shape, |_, _| label, |_| label)
    }

    /// Every slot gets a distinct label.
    pub fn pairwise_distinct(shape: SystemShape) -> Self {
        let mut counter = 0u64;
        let mut fresh = move || {
            let l = Label(counter);
            counter += 1;
            l
        };
        let sens: Vec<Label> = (0..shape.subjects() * shape.observable_count())
            .map(|_| fresh())
            .collect();
        let comm: Vec<Label> = (0..shape.subjects()).map(|_| fresh()).collect();
        Self { shape, sens, comm }
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    /// Sensation label of `subject` for `object`.
    ///
    /// Panics if the subject is out of range or the object is not observable;
    /// sensation is defined exactly on subjects × observable objects.
    pub fn sensation(&self, subject: usize, object: usize) -> Label {
        let rank = self
            .shape
            .observable_rank(object)
            .unwrap_or_else(|| panic!("object {object} is not observable in {}", self.shape));
        assert!(subject < self.shape.subjects(), "subject {subject} out of range");
        self.sens[subject * self.shape.observable_count() + rank]
    }

    /// Communication label of `subject` (shared by all of its subject-edges).
    pub fn communication(&self, subject: usize) -> Label {
        self.comm[subject]
    }

    /// Apply `f` to every stored label. When `f` is injective the digit
    /// pattern of the result is identical to the original's.
    pub fn relabel(&self, mut f: impl FnMut(Label) -> Label) -> Self {
        Self {
            shape: self.shape.clone(),
            sens: self.sens.iter().map(|&l| f(l)).collect(),
            comm: self.comm.iter().map(|&l| f(l)).collect(),
        }
    }

    /// Sensation rows in the layout accepted by [`LabelAssignment::new`].
    pub fn sensation_rows(&self) -> Vec<Vec<Label>> {
        let k = self.shape.observable_count();
        (0..self.shape.subjects())
            .map(|a| self.sens[a * k..(a + 1) * k].to_vec())
            .collect()
    }

    pub fn communication_labels(&self) -> &[Label] {
        &self.comm
    }

}

/// One of the label variables of a shape, addressable as a flat index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelSlot {
    Sensation { subject: usize, object: usize },
    Communication { subject: usize },
}

impl LabelSlot {
    /// Flat variable index: sensation slots first (subject-major over
    /// observable ranks), then one communication slot per subject.
    pub fn index(&self, shape: &SystemShape) -> usize {
        match *self {
            LabelSlot::Sensation { subject, object } => {
                let rank = shape
                    .observable_rank(object)
                    .unwrap_or_else(|| panic!("object {object} is not observable in {shape}"));
                subject * shape.observable_count() + rank
            }
            LabelSlot::Communication { subject } => {
                shape.subjects() * shape.observable_count() + subject
            }
        }
    }

    pub fn read(&self, assignment: &LabelAssignment) -> Label {
        match *self {
            LabelSlot::Sensation { subject, object } => assignment.sensation(subject, object),
            LabelSlot::Communication { subject } => assignment.communication(subject),
        }
    }
}

/// One digit of the comparison schema: which two labels it compares.
///
/// Subject indices are zero-based and normalized so that `a < b` for the
/// two-subject kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DigitDescriptor {
    /// sens(a, o) vs sens(b, o): do the two subjects sense the object alike?
    SensSens { a: usize, b: usize, object: usize },
    /// sens(a, o) vs comm(a): does the subject call the object what it senses?
    SensComm { a: usize, object: usize },
    /// comm(a) vs comm(b): do the two subjects communicate alike?
    CommComm { a: usize, b: usize, object: usize },
}

impl DigitDescriptor {
    pub fn object(&self) -> usize {
        match *self {
            DigitDescriptor::SensSens { object, .. }
            | DigitDescriptor::SensComm { object, .. }
            | DigitDescriptor::CommComm { object, .. } => object,
        }
    }

    /// The two label slots this digit compares.
    pub fn slots(&self) -> (LabelSlot, LabelSlot) {
        match *self {
            DigitDescriptor::SensSens { a, b, object } => (
                LabelSlot::Sensation { subject: a, object },
                LabelSlot::Sensation { subject: b, object },
            ),
            DigitDescriptor::SensComm { a, object } => (
                LabelSlot::Sensation { subject: a, object },
                LabelSlot::Communication { subject: a },
            ),
            DigitDescriptor::CommComm { a, b, .. } => (
                LabelSlot::Communication { subject: a },
                LabelSlot::Communication { subject: b },
            ),
        }
    }

    /// Digit value under `assignment`: false (0) when the compared labels are
    /// equal, true (1) when they differ.
    pub fn evaluate(&self, assignment: &LabelAssignment) -> bool {
        let (x, y) = self.slots();
        x.read(assignment) != y.read(assignment)
    }
}

impl fmt::Display for DigitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DigitDescriptor::SensSens { a, b, object } => {
                write!(f, "SS(S{},S{};O{})", a + 1, b + 1, object + 1)
            }
            DigitDescriptor::SensComm { a, object } => {
                write!(f, "SC(S{};O{})", a + 1, object + 1)
            }
            DigitDescriptor::CommComm { a, b, object } => {
                write!(f, "CC(S{},S{};O{})", a + 1, b + 1, object + 1)
            }
        }
    }
}

/// The ordered list of digit comparisons for a shape.
///
/// Per observable object (ascending): all sensation/sensation pairs in
/// lexicographic (a, b) order, then the per-subject sensation/communication
/// digits, then all communication/communication pairs — m² digits per object.
/// Communication pairs repeat for every observable object; their digits are
/// therefore redundant copies by construction, which is what pins the digit
/// count at m² per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonSchema {
    shape: SystemShape,
    digits: Vec<DigitDescriptor>,
}

impl ComparisonSchema {
    pub fn for_shape(shape: &SystemShape) -> Self {
        let m = shape.subjects();
        let mut digits = Vec::with_capacity(shape.digit_count());
        for &object in shape.observable() {
            for a in 0..m {
                for b in a + 1..m {
                    digits.push(DigitDescriptor::SensSens { a, b, object });
                }
            }
            for a in 0..m {
                digits.push(DigitDescriptor::SensComm { a, object });
            }
            for a in 0..m {
                for b in a + 1..m {
                    digits.push(DigitDescriptor::CommComm { a, b, object });
                }
            }
        }
        debug_assert_eq!(digits.len(), shape.digit_count());
        Self {
            shape: shape.clone(),
            digits,
        }
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn digits(&self) -> &[DigitDescriptor] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The digit pattern of an assignment: one bit per digit, 0 when the
    /// compared labels are equal, 1 when they differ.
    pub fn pattern_of(&self, assignment: &LabelAssignment) -> Result<DigitPattern> {
        if assignment.shape() != &self.shape {
            return Err(Error::ShapeMismatch(format!(
                "assignment is for {}, schema is for {}",
                assignment.shape(),
                self.shape
            )));
        }
        Ok(DigitPattern::new(
            self.digits.iter().map(|d| d.evaluate(assignment)).collect(),
        ))
    }
}

/// A concrete bit pattern aligned to a comparison schema.
///
/// Bit semantics: 0 = the compared labels are equal, 1 = they differ.
/// Ordering is lexicographic with 0 < 1, which for fixed length coincides
/// with numeric order of the bits read most-significant-first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitPattern {
    bits: Vec<bool>,
}

impl DigitPattern {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![false; len] }
    }

    pub fn ones(len: usize) -> Self {
        Self { bits: vec![true; len] }
    }

    /// The `index`-th pattern of `len` digits in lexicographic order.
    /// `len` must be at most 63 so the index fits in a u64.
    pub fn from_index(index: u64, len: usize) -> Self {
        debug_assert!(len <= 63);
        Self {
            bits: (0..len).map(|j| index >> (len - 1 - j) & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for DigitPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DigitPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitPattern({self})")
    }
}

impl FromStr for DigitPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidPattern(format!(
                    "unexpected character '{other}', want only 0s and 1s"
                ))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(Self::new)
    }
}

/// The two digit orderings a 2⊕1 pattern can be written in.
///
/// `Internal` is this crate's grouped order (SS, SC1, SC2, CC); `Paper` is the
/// interleaved display order (SS, SC1, CC, SC2) that four-digit universe codes
/// are conventionally quoted in. They differ only in the last two positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternOrder {
    Internal,
    Paper,
}

impl PatternOrder {
    pub fn as_str(&self) -> &'static str {
        match self {
            PatternOrder::Internal => "internal",
            PatternOrder::Paper => "paper",
        }
    }
}

impl fmt::Display for PatternOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PatternOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "internal" => Ok(PatternOrder::Internal),
            "paper" => Ok(PatternOrder::Paper),
            other => Err(Error::InvalidPattern(format!(
                "unknown pattern order '{other}', want 'internal' or 'paper'"
            ))),
        }
    }
}

/// Direction for [`paper_order_convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertDirection {
    ToPaper,
    FromPaper,
}

/// Convert a 2⊕1 pattern between the internal digit order and the display
/// order. The conversion swaps the last two positions and is its own inverse.
/// Only the 2⊕1 shape has a fixed display order; anything else is rejected.
pub fn paper_order_convert(
    pattern: &DigitPattern,
    shape: &SystemShape,
    _direction: ConvertDirection,
) -> Result<DigitPattern> {
    if !shape.is_two_one() {
        return Err(Error::RequiresTwoOne("the display digit order"));
    }
    if pattern.len() != shape.digit_count() {
        return Err(Error::LengthMismatch {
            expected: shape.digit_count(),
            actual: pattern.len(),
        });
    }
    let b = pattern.bits();
    Ok(DigitPattern::new(vec![b[0], b[1], b[3], b[2]]))
}

/// Convert between orders, treating same-order conversion as a copy.
pub fn convert_order(
    pattern: &DigitPattern,
    shape: &SystemShape,
    from: PatternOrder,
    to: PatternOrder,
) -> Result<DigitPattern> {
    if from == to {
        return Ok(pattern.clone());
    }
    let direction = match to {
        PatternOrder::Paper => ConvertDirection::ToPaper,
        PatternOrder::Internal => ConvertDirection::FromPaper,
    };
    paper_order_convert(pattern, shape, direction)
}
