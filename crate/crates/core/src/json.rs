//! Text and JSON forms of closed sets and solver reports.
//!
//! A set serializes as
//! `{"points": [...], "cosets": [{"rep": ..., "root": ...}], "whole_group": bool}`
//! with every word in the word grammar.

use serde::{Deserialize, Serialize};

use crate::algset::{AlgebraicSet, ClosedSet};
use crate::error::{Error, Result};
use crate::solver::SolveReport;
use crate::word::Alphabet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetJson {
    pub rep: String,
    pub root: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetJson {
    #[serde(default)]
    pub points: Vec<String>,
    #[serde(default)]
    pub cosets: Vec<CosetJson>,
    #[serde(default)]
    pub whole_group: bool,
}

impl SetJson {
    pub fn from_set(set: &AlgebraicSet, alphabet: &Alphabet) -> Self {
        SetJson {
            points: set.points().iter().map(|p| alphabet.format(p)).collect(),
            cosets: set
                .cosets()
                .iter()
                .map(|c| CosetJson {
                    rep: alphabet.format(c.rep()),
                    root: alphabet.format(c.root()),
                })
                .collect(),
            whole_group: false,
        }
    }

    pub fn from_closed(set: &ClosedSet, alphabet: &Alphabet) -> Self {
        match set {
            ClosedSet::WholeGroup => SetJson {
                whole_group: true,
                ..SetJson::default()
            },
            ClosedSet::Set(s) => Self::from_set(s, alphabet),
        }
    }

    /// Parses and canonicalizes.
    pub fn to_closed(&self, alphabet: &Alphabet) -> Result<ClosedSet> {
        if self.whole_group {
            if !self.points.is_empty() || !self.cosets.is_empty() {
                return Err(Error::Json(
                    "whole_group set must not list components".into(),
                ));
            }
            return Ok(ClosedSet::WholeGroup);
        }
        let points = self
            .points
            .iter()
            .map(|p| alphabet.parse(p))
            .collect::<Result<Vec<_>>>()?;
        let cosets = self
            .cosets
            .iter()
            .map(|c| Ok((alphabet.parse(&c.rep)?, alphabet.parse(&c.root)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClosedSet::Set(AlgebraicSet::canonicalize(points, cosets)?))
    }

    /// Like [`to_closed`](Self::to_closed) but rejects the whole group.
    pub fn to_set(&self, alphabet: &Alphabet) -> Result<AlgebraicSet> {
        match self.to_closed(alphabet)? {
            ClosedSet::Set(s) => Ok(s),
            ClosedSet::WholeGroup => Err(Error::Json(
                "the whole group is not a finite union of components".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveJson {
    #[serde(flatten)]
    pub set: SetJson,
    pub complete_on_radius: usize,
    pub escalations: u32,
    pub sound: bool,
}

impl SolveJson {
    pub fn from_report(report: &SolveReport, alphabet: &Alphabet) -> Self {
        SolveJson {
            set: SetJson::from_closed(&report.result, alphabet),
            complete_on_radius: report.complete_on_radius,
            escalations: report.escalations,
            sound: report.sound,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_canonicalize() {
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        let raw =
            r#"{"points": ["a^2", "b a b", "a^-1"], "cosets": [{"rep": "a^3", "root": "a^-1"}]}"#;
        let parsed: SetJson = serde_json::from_str(raw).unwrap();
        let set = parsed.to_closed(&alphabet).unwrap();
        let out = SetJson::from_closed(&set, &alphabet);
        assert_eq!(out.points, ["b a b"]);
        assert_eq!(
            out.cosets,
            [CosetJson {
                rep: "1".into(),
                root: "a".into()
            }]
        );
        let text = serde_json::to_string(&out).unwrap();
        let again: SetJson = serde_json::from_str(&text).unwrap();
        assert_eq!(again.to_closed(&alphabet).unwrap(), set);
    }

    #[test]
    fn whole_group() {
        let alphabet = Alphabet::new(["a"]).unwrap();
        let j = SetJson::from_closed(&ClosedSet::WholeGroup, &alphabet);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"points":[],"cosets":[],"whole_group":true}"#
        );
        assert_eq!(j.to_closed(&alphabet).unwrap(), ClosedSet::WholeGroup);
        assert!(j.to_set(&alphabet).is_err());
        let bad = SetJson {
            whole_group: true,
            points: vec!["a".into()],
            ..SetJson::default()
        };
        assert!(bad.to_closed(&alphabet).is_err());
    }
}
