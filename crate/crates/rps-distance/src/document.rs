//! JSON document format for named permutation mass functions.
//!
//! ```json
//! {
//!   "frame": ["a", "b", "c"],
//!   "pmfs": [
//!     {"name": "P1", "assignments": [{"event": ["a", "c"], "mass": 1.0}]}
//!   ]
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::event::OrderedFocalSet;
use crate::frame::FrameOfDiscernment;
use crate::mass::PermutationMassFunction;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PmfDocument {
    pub frame: Vec<String>,
    pub pmfs: Vec<PmfEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PmfEntry {
    pub name: String,
    pub assignments: Vec<AssignmentEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AssignmentEntry {
    pub event: Vec<String>,
    pub mass: f64,
}

impl PmfDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn frame(&self) -> Result<FrameOfDiscernment> {
        FrameOfDiscernment::with_labels(self.frame.clone())
    }

    /// Resolve every entry against the document frame, in order.
    pub fn resolve_all(&self) -> Result<Vec<(String, PermutationMassFunction)>> {
        let frame = self.frame()?;
        self.pmfs
            .iter()
            .map(|entry| Ok((entry.name.clone(), entry.resolve(&frame)?)))
            .collect()
    }

    pub fn resolve(&self, name: &str) -> Result<PermutationMassFunction> {
        let frame = self.frame()?;
        self.pmfs
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownPmf {
                name: name.to_string(),
            })?
            .resolve(&frame)
    }

    /// Build a document from named PMFs sharing one labelled frame.
    pub fn from_pmfs(pmfs: &[(&str, &PermutationMassFunction)]) -> Result<Self> {
        let frame = match pmfs.first() {
            Some((_, p)) => p.frame().clone(),
            None => return Err(Error::Parse("document needs at least one pmf".into())),
        };
        if pmfs.iter().any(|(_, p)| p.frame() != &frame) {
            return Err(Error::FrameMismatch);
        }
        let labels = (1..=frame.size()).map(|i| frame.label(i)).collect();
        let entries = pmfs
            .iter()
            .map(|(name, p)| PmfEntry {
                name: name.to_string(),
                assignments: p
                    .assignments()
                    .iter()
                    .map(|(e, m)| AssignmentEntry {
                        event: e.elements().iter().map(|&i| frame.label(i)).collect(),
                        mass: *m,
                    })
                    .collect(),
            })
            .collect();
        Ok(Self {
            frame: labels,
            pmfs: entries,
        })
    }
}

impl PmfEntry {
    pub fn resolve(&self, frame: &FrameOfDiscernment) -> Result<PermutationMassFunction> {
        let assignments = self
            .assignments
            .iter()
            .map(|a| {
                let indices = a
                    .event
                    .iter()
                    .map(|l| frame.index_of(l))
                    .collect::<Result<Vec<_>>>()?;
                Ok((OrderedFocalSet::new(indices, frame)?, a.mass))
            })
            .collect::<Result<Vec<_>>>()?;
        PermutationMassFunction::new(frame.clone(), assignments)
    }
}
