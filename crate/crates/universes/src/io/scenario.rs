//! Scenario files for the agreement simulation: one JSON document declaring
//! the event alphabet, the event sequence, and each subject's perception map
//! and language table.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::simulate::{LanguageTable, PerceptionMap, Transcript, run_agreement_simulation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubjectSpec {
    /// event → percept
    pub perception: BTreeMap<String, String>,
    /// percept → token
    pub language: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub alphabet: Vec<String>,
    pub events: Vec<String>,
    pub subjects: Vec<SubjectSpec>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        let scenario: Self = serde_json::from_str(text)?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serialization cannot fail")
    }

    /// Exactly two subjects; every event drawn from the alphabet; perception
    /// total on the alphabet; language total on each perception's range.
    pub fn validate(&self) -> Result<()> {
        if self.subjects.len() != 2 {
            return Err(Error::SubjectCount(self.subjects.len()));
        }
        if let Some(stray) = self.events.iter().find(|e| !self.alphabet.contains(e)) {
            return Err(Error::InvalidScenario(format!(
                "event '{stray}' is not in the alphabet"
            )));
        }
        for (i, subject) in self.subjects.iter().enumerate() {
            for event in &self.alphabet {
                let Some(percept) = subject.perception.get(event) else {
                    return Err(Error::InvalidScenario(format!(
                        "subject {} has no percept for event '{event}'",
                        i + 1
                    )));
                };
                if !subject.language.contains_key(percept) {
                    return Err(Error::InvalidScenario(format!(
                        "subject {} has no token for percept '{percept}'",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn run(&self) -> Result<Transcript> {
        self.validate()?;
        let perceptions: Vec<PerceptionMap> = self
            .subjects
            .iter()
            .map(|s| s.perception.clone().into_iter().collect())
            .collect();
        let languages: Vec<LanguageTable> = self
            .subjects
            .iter()
            .map(|s| s.language.clone().into_iter().collect())
            .collect();
        run_agreement_simulation(&self.events, &perceptions, &languages)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::AgreementVerdict;

    fn common_language_json() -> String {
        r#"{
            "alphabet": ["a", "b", "c", "d", "e"],
            "events": ["a", "b", "c", "d", "e"],
            "subjects": [
                {
                    "perception": {"a": "a1", "b": "b1", "c": "c1", "d": "d1", "e": "e1"},
                    "language": {"a1": "u", "b1": "v", "c1": "w", "d1": "x", "e1": "y"}
                },
                {
                    "perception": {"a": "a2", "b": "b2", "c": "c2", "d": "d2", "e": "e2"},
                    "language": {"a2": "u", "b2": "v", "c2": "w", "d2": "x", "e2": "y"}
                }
            ]
        }"#
        .to_string()
    }

    #[test]
    fn parses_runs_and_round_trips() {
        let scenario = Scenario::from_json(&common_language_json()).unwrap();
        let t = scenario.run().unwrap();
        assert!(t.all_agree);
        assert!(t.percepts_ever_differ);
        assert_eq!(t.verdict(), AgreementVerdict::PersonalUniverseConsistent);
        let json = scenario.to_json();
        assert_eq!(Scenario::from_json(&json).unwrap().to_json(), json);
    }

    #[test]
    fn validation_failures() {
        let mut s = Scenario::from_json(&common_language_json()).unwrap();
        s.events.push("z".into());
        assert!(matches!(s.validate(), Err(Error::InvalidScenario(_))));

        let mut s = Scenario::from_json(&common_language_json()).unwrap();
        s.subjects[0].perception.remove("c");
        assert!(matches!(s.validate(), Err(Error::InvalidScenario(_))));

        let mut s = Scenario::from_json(&common_language_json()).unwrap();
        s.subjects[1].language.remove("d2");
        assert!(matches!(s.validate(), Err(Error::InvalidScenario(_))));

        let mut s = Scenario::from_json(&common_language_json()).unwrap();
        s.subjects.pop();
        assert!(matches!(s.validate(), Err(Error::SubjectCount(1))));
    }
}
