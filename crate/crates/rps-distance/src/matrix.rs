//! Weighting matrices over an event universe: Jaccard, ordered-degree
//! product, and cumulative Jaccard, with eigenanalysis and the diagonal
//! positive-definiteness correction.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::event::OrderedFocalSet;
use crate::frame::FrameOfDiscernment;
use crate::owa::maxent_weights;
use crate::similarity::{cumulative_jaccard, jaccard, ordered_degree, DepthWeights};

/// Default shift parameter for the positive-definiteness correction.
pub const DEFAULT_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// Set-level Jaccard index of the underlying (unordered) sets.
    Jaccard,
    /// Jaccard times ordered degree.
    OrderedDegreeProduct,
    /// Cumulative Jaccard index at the configured orness and depth.
    CumulativeJaccard,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixParams {
    pub orn: f64,
    /// Global depth cap; each pair is clamped to min(t_global, pair max).
    pub t_global: Option<usize>,
}

impl Default for MatrixParams {
    fn default() -> Self {
        Self {
            orn: 0.5,
            t_global: None,
        }
    }
}

/// Which divisor the eigenvalue-shift correction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionDivisor {
    /// Divide by 1 + |λ_min| + ε, keeping the diagonal at 1.
    DiagonalPreserving,
    /// Divide by |λ_min| + ε only. Does not preserve the unit diagonal;
    /// kept for comparison purposes.
    ShiftOnly,
}

/// Symmetric similarity matrix over an ordered event universe.
#[derive(Debug)]
pub struct WeightingMatrix {
    universe: Vec<OrderedFocalSet>,
    entries: Vec<f64>,
    kind: MatrixKind,
    params: MatrixParams,
    corrected: bool,
    min_eigenvalue: OnceLock<f64>,
}

impl Clone for WeightingMatrix {
    fn clone(&self) -> Self {
        Self {
            universe: self.universe.clone(),
            entries: self.entries.clone(),
            kind: self.kind,
            params: self.params,
            corrected: self.corrected,
            min_eigenvalue: self.min_eigenvalue.clone(),
        }
    }
}

/// Build the weighting matrix of the given kind over a universe.
///
/// Entries for disjoint pairs are 0 without any depth evaluation; the
/// diagonal is exactly 1.
pub fn build_matrix(
    universe: Vec<OrderedFocalSet>,
    kind: MatrixKind,
    params: MatrixParams,
) -> Result<WeightingMatrix> {
    if universe.is_empty() {
        return Err(Error::InvalidParameter("empty universe".into()));
    }
    for (i, e) in universe.iter().enumerate() {
        if universe[..i].contains(e) {
            return Err(Error::InvalidParameter(format!(
                "duplicate universe entry at position {i}"
            )));
        }
    }
    if !(0.0..=1.0).contains(&params.orn) {
        return Err(Error::OrnessOutOfRange { orn: params.orn });
    }
    if params.t_global == Some(0) {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }

    let n = universe.len();
    let mut entries = vec![0.0; n * n];
    // weights only depend on the effective depth; memoize per length
    let mut weights: HashMap<usize, DepthWeights> = HashMap::new();
    for i in 0..n {
        entries[i * n + i] = 1.0;
        for j in i + 1..n {
            let (a, b) = (&universe[i], &universe[j]);
            let value = if a.set_mask() & b.set_mask() == 0 {
                0.0
            } else {
                match kind {
                    MatrixKind::Jaccard => jaccard(a.set_mask(), b.set_mask())?,
                    MatrixKind::OrderedDegreeProduct => {
                        jaccard(a.set_mask(), b.set_mask())? * ordered_degree(a, b)
                    }
                    MatrixKind::CumulativeJaccard => {
                        let pair_max = a.len().max(b.len());
                        let t_eff = params.t_global.map_or(pair_max, |t| t.min(pair_max));
                        let w = match weights.get(&t_eff) {
                            Some(w) => w,
                            None => {
                                weights.insert(t_eff, maxent_weights(t_eff, params.orn)?);
                                &weights[&t_eff]
                            }
                        };
                        cumulative_jaccard(a, b, w)?
                    }
                }
            };
            entries[i * n + j] = value;
            entries[j * n + i] = value;
        }
    }
    Ok(WeightingMatrix {
        universe,
        entries,
        kind,
        params,
        corrected: false,
        min_eigenvalue: OnceLock::new(),
    })
}

impl WeightingMatrix {
    pub fn dim(&self) -> usize {
        self.universe.len()
    }

    pub fn universe(&self) -> &[OrderedFocalSet] {
        &self.universe
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn params(&self) -> MatrixParams {
        self.params
    }

    pub fn corrected(&self) -> bool {
        self.corrected
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim() + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Smallest eigenvalue; computed once and cached.
    pub fn min_eigenvalue(&self) -> f64 {
        *self
            .min_eigenvalue
            .get_or_init(|| symmetric_eigenvalues(&self.entries, self.dim())[0])
    }

    pub fn is_positive_definite(&self) -> bool {
        self.min_eigenvalue() > 0.0
    }

    /// Diagonal eigenvalue-shift correction with the diagonal-preserving
    /// divisor. A positive-definite matrix is returned unchanged.
    pub fn correct(&self, epsilon: f64) -> WeightingMatrix {
        self.correct_with(epsilon, CorrectionDivisor::DiagonalPreserving)
    }

    pub fn correct_with(&self, epsilon: f64, divisor: CorrectionDivisor) -> WeightingMatrix {
        let lambda = self.min_eigenvalue();
        if lambda > 0.0 {
            return self.clone();
        }
        let shift = lambda.abs() + epsilon;
        let denom = match divisor {
            CorrectionDivisor::DiagonalPreserving => 1.0 + shift,
            CorrectionDivisor::ShiftOnly => shift,
        };
        let n = self.dim();
        let mut entries = self.entries.clone();
        for (idx, e) in entries.iter_mut().enumerate() {
            let diag = idx / n == idx % n;
            *e = (*e + if diag { shift } else { 0.0 }) / denom;
        }
        let cache = OnceLock::new();
        // spectrum shifts by `shift` then scales by 1/denom
        let _ = cache.set((lambda + shift) / denom);
        WeightingMatrix {
            universe: self.universe.clone(),
            entries,
            kind: self.kind,
            params: self.params,
            corrected: true,
            min_eigenvalue: cache,
        }
    }

    /// CSV rendering with event labels on the header row and column.
    pub fn to_csv(&self, frame: &FrameOfDiscernment) -> String {
        let n = self.dim();
        let labels: Vec<String> = self.universe.iter().map(|e| e.display(frame)).collect();
        let mut out = String::from("event");
        for l in &labels {
            out.push(',');
            out.push_str(l);
        }
        out.push('\n');
        for (i, label) in labels.iter().enumerate() {
            out.push_str(label);
            for j in 0..n {
                out.push_str(&format!(",{:.6}", self.entry(i, j)));
            }
            out.push('\n');
        }
        out
    }
}
