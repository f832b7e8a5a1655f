//! Two subjects experiencing a shared event sequence through private
//! perception and a common language.
//!
//! Each subject turns an event into a private percept and the percept into a
//! spoken token. Agreement is checked on tokens only — percepts are never
//! observable across subjects, except by the omniscient bookkeeping that
//! records whether they differed at all. When the two composed
//! event→token maps coincide, the subjects agree forever no matter how
//! differently they perceive: the defining trait of a personal universe.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub type EventSymbol = String;
pub type Percept = String;
pub type Token = String;

/// One subject's total map from events to private percepts. Deterministic:
/// the same event always yields the same percept.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PerceptionMap {
    map: BTreeMap<EventSymbol, Percept>,
}

impl PerceptionMap {
    pub fn new(map: BTreeMap<EventSymbol, Percept>) -> Self {
        Self { map }
    }

    pub fn percept(&self, event: &str) -> Option<&Percept> {
        self.map.get(event)
    }

    pub fn is_total_over<'a>(&self, alphabet: impl IntoIterator<Item = &'a str>) -> bool {
        alphabet.into_iter().all(|e| self.map.contains_key(e))
    }
}

impl FromIterator<(EventSymbol, Percept)> for PerceptionMap {
    fn from_iter<T: IntoIterator<Item = (EventSymbol, Percept)>>(iter: T) -> Self {
        Self {
            map: iter.into_iter().collect(),
        }
    }
}

/// One subject's total map from its percepts to communicated tokens. May be
/// non-injective; the transcript flags that case.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LanguageTable {
    map: BTreeMap<Percept, Token>,
}

impl LanguageTable {
    pub fn new(map: BTreeMap<Percept, Token>) -> Self {
        Self { map }
    }

    pub fn token(&self, percept: &str) -> Option<&Token> {
        self.map.get(percept)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.map.values().all(|t| seen.insert(t))
    }
}

impl FromIterator<(Percept, Token)> for LanguageTable {
    fn from_iter<T: IntoIterator<Item = (Percept, Token)>>(iter: T) -> Self {
        Self {
            map: iter.into_iter().collect(),
        }
    }
}

/// One event of a run: what each subject perceived, what each said, and
/// whether the spoken tokens matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    pub event: EventSymbol,
    pub percepts: [Percept; 2],
    pub tokens: [Token; 2],
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub entries: Vec<TranscriptEntry>,
    /// Tokens matched on every event (vacuously true for an empty run).
    pub all_agree: bool,
    /// The omniscient flag: some event was perceived differently.
    pub percepts_ever_differ: bool,
    /// Per subject: its language table maps two percepts to one token.
    pub language_noninjective: [bool; 2],
}

/// What a finished run says about the subjects' world.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AgreementVerdict {
    /// Always agreeing while perceiving differently — consistent with each
    /// subject inhabiting its own universe, undetectably.
    PersonalUniverseConsistent,
    /// Always agreeing and never perceiving differently.
    SharedExperience,
    /// At least one event produced different tokens.
    DetectableDisagreement,
}

impl AgreementVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            AgreementVerdict::PersonalUniverseConsistent => "personal_universe_consistent",
            AgreementVerdict::SharedExperience => "shared_experience",
            AgreementVerdict::DetectableDisagreement => "detectable_disagreement",
        }
    }
}

impl std::fmt::Display for AgreementVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Transcript {
    pub fn verdict(&self) -> AgreementVerdict {
        match (self.all_agree, self.percepts_ever_differ) {
            (true, true) => AgreementVerdict::PersonalUniverseConsistent,
            (true, false) => AgreementVerdict::SharedExperience,
            (false, _) => AgreementVerdict::DetectableDisagreement,
        }
    }
}

/// Run an event sequence through two subjects' perception maps and language
/// tables. Exactly two subjects are supported; maps must cover every event
/// that occurs.
pub fn run_agreement_simulation(
    events: &[EventSymbol],
    perceptions: &[PerceptionMap],
    languages: &[LanguageTable],
) -> Result<Transcript> {
    if perceptions.len() != 2 {
        return Err(Error::SubjectCount(perceptions.len()));
    }
    if languages.len() != 2 {
        return Err(Error::SubjectCount(languages.len()));
    }

    let mut entries = Vec::with_capacity(events.len());
    let mut all_agree = true;
    let mut percepts_ever_differ = false;
    for event in events {
        let mut percepts: [Percept; 2] = Default::default();
        let mut tokens: [Token; 2] = Default::default();
        for subject in 0..2 {
            let percept =
                perceptions[subject]
                    .percept(event)
                    .ok_or_else(|| Error::UnknownEvent {
                        subject,
                        event: event.clone(),
                    })?;
            let token = languages[subject]
                .token(percept)
                .ok_or_else(|| Error::MissingToken {
                    subject,
                    percept: percept.clone(),
                })?;
            percepts[subject] = percept.clone();
            tokens[subject] = token.clone();
        }
        let agree = tokens[0] == tokens[1];
        all_agree &= agree;
        percepts_ever_differ |= percepts[0] != percepts[1];
        entries.push(TranscriptEntry {
            event: event.clone(),
            percepts,
            tokens,
            agree,
        });
    }

    Ok(Transcript {
        entries,
        all_agree,
        percepts_ever_differ,
        language_noninjective: [!languages[0].is_injective(), !languages[1].is_injective()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn table(entries: &[(&str, &str)]) -> Vec<(String, String)> {
        entries
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    /// Five events, subject-indexed percepts, one shared token table.
    fn common_language_setup() -> (Vec<String>, Vec<PerceptionMap>, Vec<LanguageTable>) {
        let events: Vec<String> = ["a", "b", "c", "d", "e"]
            .iter()
            .map(ToString::to_string)
            .collect();
        let perceptions: Vec<PerceptionMap> = (1..=2)
            .map(|s| {
                events
                    .iter()
                    .map(|e| (e.clone(), format!("{e}{s}")))
                    .collect()
            })
            .collect();
        let tokens = ["u", "v", "w", "x", "y"];
        let languages: Vec<LanguageTable> = (1..=2)
            .map(|s| {
                events
                    .iter()
                    .zip(tokens)
                    .map(|(e, t)| (format!("{e}{s}"), t.to_string()))
                    .collect()
            })
            .collect();
        (events, perceptions, languages)
    }

    #[test]
    fn common_language_run_agrees_despite_different_percepts() {
        let (events, perceptions, languages) = common_language_setup();
        let t = run_agreement_simulation(&events, &perceptions, &languages).unwrap();
        assert_eq!(t.entries.len(), 5);
        assert!(t.all_agree);
        assert!(t.percepts_ever_differ);
        assert_eq!(t.language_noninjective, [false, false]);
        let spoken: Vec<&str> = t.entries.iter().map(|e| e.tokens[0].as_str()).collect();
        assert_eq!(spoken, ["u", "v", "w", "x", "y"]);
        assert!(t.entries.iter().all(|e| e.tokens[0] == e.tokens[1]));
        assert_eq!(t.verdict(), AgreementVerdict::PersonalUniverseConsistent);
    }

    #[test]
    fn empty_run_agrees_vacuously() {
        let (_, perceptions, languages) = common_language_setup();
        let t = run_agreement_simulation(&[], &perceptions, &languages).unwrap();
        assert!(t.all_agree);
        assert!(!t.percepts_ever_differ);
        assert_eq!(t.verdict(), AgreementVerdict::SharedExperience);
    }

    #[test]
    fn identical_maps_are_a_shared_experience() {
        let events = vec!["a".to_string(), "b".to_string(), "a".to_string()];
        let perception: PerceptionMap = table(&[("a", "pa"), ("b", "pb")]).into_iter().collect();
        let language: LanguageTable = table(&[("pa", "u"), ("pb", "v")]).into_iter().collect();
        let t = run_agreement_simulation(
            &events,
            &[perception.clone(), perception],
            &[language.clone(), language],
        )
        .unwrap();
        assert!(t.all_agree);
        assert!(!t.percepts_ever_differ);
        assert_eq!(t.verdict(), AgreementVerdict::SharedExperience);
    }

    #[test]
    fn diverging_language_is_detected_on_the_event_that_exposes_it() {
        let (events, perceptions, mut languages) = common_language_setup();
        // second subject calls its b-percept "w" instead of "v"
        languages[1] = table(&[("a2", "u"), ("b2", "w"), ("c2", "w"), ("d2", "x"), ("e2", "y")])
            .into_iter()
            .collect();
        let t = run_agreement_simulation(&events, &perceptions, &languages).unwrap();
        assert!(!t.all_agree);
        assert_eq!(t.verdict(), AgreementVerdict::DetectableDisagreement);
        let disagreements: Vec<&str> = t
            .entries
            .iter()
            .filter(|e| !e.agree)
            .map(|e| e.event.as_str())
            .collect();
        assert_eq!(disagreements, ["b"]);
        assert_eq!(t.language_noninjective, [false, true]);
    }

    #[test]
    fn rejects_anything_but_two_subjects() {
        let (events, perceptions, languages) = common_language_setup();
        let three = vec![
            perceptions[0].clone(),
            perceptions[1].clone(),
            perceptions[0].clone(),
        ];
        assert!(matches!(
            run_agreement_simulation(&events, &three, &languages),
            Err(Error::SubjectCount(3))
        ));
        assert!(matches!(
            run_agreement_simulation(&events, &perceptions, &languages[..1]),
            Err(Error::SubjectCount(1))
        ));
    }

    #[test]
    fn missing_entries_are_reported() {
        let (events, perceptions, languages) = common_language_setup();
        let gappy: Vec<PerceptionMap> = vec![
            table(&[("a", "a1")]).into_iter().collect(),
            perceptions[1].clone(),
        ];
        assert!(matches!(
            run_agreement_simulation(&events, &gappy, &languages),
            Err(Error::UnknownEvent { subject: 0, .. })
        ));
        let silent: Vec<LanguageTable> = vec![
            table(&[("a1", "u")]).into_iter().collect(),
            languages[1].clone(),
        ];
        assert!(matches!(
            run_agreement_simulation(&events, &perceptions, &silent),
            Err(Error::MissingToken { subject: 0, .. })
        ));
    }

    proptest! {
        /// all_agree holds exactly when the two composed event→token maps
        /// are equal as functions on the events that occur.
        #[test]
        fn agreement_equals_composed_map_equality(
            percept_choice in proptest::collection::vec((0usize..3, 0usize..3), 1..12),
            token_choice in proptest::collection::vec((0usize..2, 0usize..2), 9),
        ) {
            let events: Vec<String> = (0..percept_choice.len()).map(|i| format!("e{}", i % 4)).collect();
            let percept_names = ["p0", "p1", "p2"];
            let token_names = ["t0", "t1"];
            let perceptions: Vec<PerceptionMap> = (0..2)
                .map(|s| {
                    events
                        .iter()
                        .enumerate()
                        .map(|(i, e)| {
                            let (c0, c1) = percept_choice[i % percept_choice.len()];
                            let c = if s == 0 { c0 } else { c1 };
                            // percepts are subject-private symbols
                            (e.clone(), format!("s{s}_{}", percept_names[c]))
                        })
                        .collect()
                })
                .collect();
            let languages: Vec<LanguageTable> = (0..2)
                .map(|s| {
                    (0..3)
                        .map(|c| {
                            let (t0, t1) = token_choice[s * 3 + c];
                            let t = if s == 0 { t0 } else { t1 };
                            (format!("s{s}_{}", percept_names[c]), token_names[t].to_string())
                        })
                        .collect()
                })
                .collect();

            let t = run_agreement_simulation(&events, &perceptions, &languages).unwrap();
            let composed = |s: usize, e: &str| {
                let p = perceptions[s].percept(e).unwrap();
                languages[s].token(p).unwrap().clone()
            };
            let maps_equal = events.iter().all(|e| composed(0, e) == composed(1, e));
            prop_assert_eq!(t.all_agree, maps_equal);
            for entry in &t.entries {
                prop_assert_eq!(entry.agree, entry.tokens[0] == entry.tokens[1]);
            }
        }
    }
}
