//! The JSON document for a single universe: its shape plus either explicit
//! labels or a digit pattern (never both), with the digit order always
//! spelled out so a stored bit string can never be misread.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    ComparisonSchema, DigitPattern, Label, LabelAssignment, PatternOrder, SystemShape,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeDocument {
    pub m: usize,
    pub n: usize,
    /// Always written explicitly; absent means fully observable on input.
    #[serde(default)]
    pub observable: Option<Vec<usize>>,
}

/// Explicit labels: `sensation[subject][rank]` over the shape's observable
/// objects in ascending order, one communication label per subject.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelsDocument {
    pub sensation: Vec<Vec<u64>>,
    pub communication: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDocument {
    pub bits: String,
    pub order: PatternOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseDocument {
    pub shape: ShapeDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<LabelsDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

impl UniverseDocument {
    pub fn from_assignment(assignment: &LabelAssignment) -> Self {
        let shape = assignment.shape();
        Self {
            shape: ShapeDocument {
                m: shape.subjects(),
                n: shape.objects(),
                observable: Some(shape.observable().to_vec()),
            },
            labels: Some(LabelsDocument {
                sensation: assignment
                    .sensation_rows()
                    .into_iter()
                    .map(|row| row.into_iter().map(|Label(v)| v).collect())
                    .collect(),
                communication: assignment
                    .communication_labels()
                    .iter()
                    .map(|&Label(v)| v)
                    .collect(),
            }),
            pattern: None,
            class: None,
        }
    }

    pub fn from_pattern(
        pattern: &DigitPattern,
        shape: &SystemShape,
        order: PatternOrder,
    ) -> Result<Self> {
        let doc = Self {
            shape: ShapeDocument {
                m: shape.subjects(),
                n: shape.objects(),
                observable: Some(shape.observable().to_vec()),
            },
            labels: None,
            pattern: Some(PatternDocument {
                bits: pattern.to_string(),
                order,
            }),
            class: None,
        };
        doc.validate()?;
        Ok(doc)
    }

    pub fn shape(&self) -> Result<SystemShape> {
        match &self.shape.observable {
            Some(observable) => {
                SystemShape::with_observable(self.shape.m, self.shape.n, observable.iter().copied())
            }
            None => SystemShape::new(self.shape.m, self.shape.n),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let shape = self.shape()?;
        match (&self.labels, &self.pattern) {
            (Some(_), Some(_)) | (None, None) => {
                return Err(Error::InvalidDocument(
                    "exactly one of `labels` and `pattern` must be present".into(),
                ));
            }
            (Some(labels), None) => {
                if labels.sensation.len() != shape.subjects()
                    || labels.communication.len() != shape.subjects()
                    || labels
                        .sensation
                        .iter()
                        .any(|row| row.len() != shape.observable_count())
                {
                    return Err(Error::InvalidDocument(format!(
                        "label matrix does not fit shape {shape}"
                    )));
                }
            }
            (None, Some(pattern)) => {
                let bits: DigitPattern = pattern.bits.parse()?;
                if bits.len() != shape.digit_count() {
                    return Err(Error::InvalidDocument(format!(
                        "pattern has {} bits, shape {shape} has {} digits",
                        bits.len(),
                        shape.digit_count()
                    )));
                }
                if pattern.order == PatternOrder::Paper && !shape.is_two_one() {
                    return Err(Error::InvalidDocument(
                        "order \"paper\" is only valid for the 2⊕1 shape".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The stored labels as an assignment, if this is a labels document.
    pub fn to_assignment(&self) -> Result<Option<LabelAssignment>> {
        self.validate()?;
        let Some(labels) = &self.labels else {
            return Ok(None);
        };
        let assignment = LabelAssignment::new(
            self.shape()?,
            labels
                .sensation
                .iter()
                .map(|row| row.iter().map(|&v| Label(v)).collect())
                .collect(),
            labels.communication.iter().map(|&v| Label(v)).collect(),
        )?;
        Ok(Some(assignment))
    }

    /// The stored pattern in internal digit order, if this is a pattern
    /// document.
    pub fn to_internal_pattern(&self) -> Result<Option<DigitPattern>> {
        self.validate()?;
        let Some(pattern) = &self.pattern else {
            return Ok(None);
        };
        let shape = self.shape()?;
        let bits: DigitPattern = pattern.bits.parse()?;
        Ok(Some(crate::model::convert_order(
            &bits,
            &shape,
            pattern.order,
            PatternOrder::Internal,
        )?))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }
}

impl LabelAssignment {
    /// The document pattern of this assignment, via its schema.
    pub fn to_pattern(&self) -> DigitPattern {
        ComparisonSchema::for_shape(self.shape())
            .pattern_of(self)
            .expect("assignment matches its own shape")
    }
}
