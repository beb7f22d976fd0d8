//! Permutation mass functions, their order-forgetting images, and
//! vectorization over a shared event universe.

use crate::error::{Error, Result};
use crate::event::{enumerate_pes, OrderedFocalSet};
use crate::frame::FrameOfDiscernment;

const MASS_SUM_TOL: f64 = 1e-9;

/// Mass assignment over permutation events. Masses are in (0, 1] and sum
/// to 1 within 1e-9; the empty event carries no mass by construction.
///
/// Values are immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PermutationMassFunction {
    frame: FrameOfDiscernment,
    // sorted by (l, o); keys distinct
    assignments: Vec<(OrderedFocalSet, f64)>,
}

impl PermutationMassFunction {
    pub fn new(
        frame: FrameOfDiscernment,
        assignments: Vec<(OrderedFocalSet, f64)>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(assignments.len());
        let mut sum = 0.0;
        for (event, mass) in assignments {
            // re-validate against this frame; events may come from elsewhere
            let event = OrderedFocalSet::new(event.elements().to_vec(), &frame)?;
            if !(mass > 0.0 && mass <= 1.0) {
                return Err(Error::BadMass {
                    event: event.display(&frame),
                    mass,
                });
            }
            sum += mass;
            entries.push((event, mass));
        }
        entries.sort_by_key(|(e, _)| e.sort_key());
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateAssignment {
                    event: w[0].0.display(&frame),
                });
            }
        }
        if (sum - 1.0).abs() > MASS_SUM_TOL {
            return Err(Error::MassSum { sum });
        }
        Ok(Self {
            frame,
            assignments: entries,
        })
    }

    /// Convenience constructor from element-index sequences.
    pub fn from_sequences(
        frame: FrameOfDiscernment,
        assignments: &[(&[usize], f64)],
    ) -> Result<Self> {
        let pairs = assignments
            .iter()
            .map(|(seq, m)| Ok((OrderedFocalSet::new(seq.to_vec(), &frame)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, pairs)
    }

    pub fn frame(&self) -> &FrameOfDiscernment {
        &self.frame
    }

    /// Focal assignments in canonical (l, o) order.
    pub fn assignments(&self) -> &[(OrderedFocalSet, f64)] {
        &self.assignments
    }

    pub fn mass_of(&self, event: &OrderedFocalSet) -> f64 {
        self.assignments
            .iter()
            .find(|(e, _)| e == event)
            .map(|(_, m)| *m)
            .unwrap_or(0.0)
    }

    /// Sum masses of ordered events with identical underlying sets onto
    /// the unordered set.
    pub fn forget_order(&self) -> MassFunction {
        let mut sets: Vec<(u64, f64)> = Vec::new();
        for (event, mass) in &self.assignments {
            let mask = event.set_mask();
            match sets.iter_mut().find(|(m, _)| *m == mask) {
                Some((_, acc)) => *acc += mass,
                None => sets.push((mask, *mass)),
            }
        }
        sets.sort_by_key(|&(m, _)| m);
        MassFunction {
            frame: self.frame.clone(),
            assignments: sets,
        }
    }
}

/// A classical mass function: unordered focal sets (as bitmasks) to mass.
#[derive(Debug, Clone, PartialEq)]
pub struct MassFunction {
    frame: FrameOfDiscernment,
    // sorted by mask; keys distinct
    assignments: Vec<(u64, f64)>,
}

impl MassFunction {
    pub fn new(frame: FrameOfDiscernment, assignments: Vec<(u64, f64)>) -> Result<Self> {
        let full = if frame.size() >= 64 {
            u64::MAX
        } else {
            (1u64 << frame.size()) - 1
        };
        let mut entries = assignments;
        let mut sum = 0.0;
        for &(mask, mass) in &entries {
            if mask == 0 || mask & !full != 0 {
                return Err(Error::BadEventCode {
                    l: mask,
                    o: 1,
                    reason: "set code invalid for this frame".into(),
                });
            }
            if !(mass > 0.0 && mass <= 1.0) {
                return Err(Error::BadMass {
                    event: format!("l={mask}"),
                    mass,
                });
            }
            sum += mass;
        }
        entries.sort_by_key(|&(m, _)| m);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateAssignment {
                event: "set".into(),
            });
        }
        if (sum - 1.0).abs() > MASS_SUM_TOL {
            return Err(Error::MassSum { sum });
        }
        Ok(Self {
            frame,
            assignments: entries,
        })
    }

    pub fn frame(&self) -> &FrameOfDiscernment {
        &self.frame
    }

    pub fn assignments(&self) -> &[(u64, f64)] {
        &self.assignments
    }

    pub fn mass_of(&self, mask: u64) -> f64 {
        self.assignments
            .iter()
            .find(|&&(m, _)| m == mask)
            .map(|&(_, v)| v)
            .unwrap_or(0.0)
    }

    pub fn total_mass(&self) -> f64 {
        self.assignments.iter().map(|&(_, m)| m).sum()
    }
}

/// Which event universe vectorization spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UniversePolicy {
    /// Every non-empty permutation event of the frame.
    FullPes,
    /// Only the union of the inputs' focal sets, in (l, o) order.
    #[default]
    FocalUnion,
}

/// Mass coordinates of one PMF over a shared universe.
#[derive(Debug, Clone, PartialEq)]
pub struct BeliefVector {
    coords: Vec<f64>,
}

impl BeliefVector {
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// The shared coordinate basis plus one belief vector per input PMF.
#[derive(Debug, Clone)]
pub struct Vectorized {
    pub universe: Vec<OrderedFocalSet>,
    pub vectors: Vec<BeliefVector>,
}

/// Represent one or more PMFs as vectors over a single universe.
pub fn vectorize(pmfs: &[&PermutationMassFunction], policy: UniversePolicy) -> Result<Vectorized> {
    let frame = match pmfs.first() {
        Some(p) => p.frame(),
        None => {
            return Ok(Vectorized {
                universe: Vec::new(),
                vectors: Vec::new(),
            })
        }
    };
    if pmfs.iter().any(|p| p.frame() != frame) {
        return Err(Error::FrameMismatch);
    }
    let universe = match policy {
        UniversePolicy::FullPes => enumerate_pes(frame)?,
        UniversePolicy::FocalUnion => {
            let mut u: Vec<OrderedFocalSet> = Vec::new();
            for p in pmfs {
                for (e, _) in p.assignments() {
                    if !u.contains(e) {
                        u.push(e.clone());
                    }
                }
            }
            u.sort_by_key(|e| e.sort_key());
            u
        }
    };
    let vectors = pmfs
        .iter()
        .map(|p| BeliefVector {
            coords: universe.iter().map(|e| p.mass_of(e)).collect(),
        })
        .collect();
    Ok(Vectorized { universe, vectors })
}
