//! Quadratic-form distances between mass vectors, the top-level RPS
//! distance entry point, and the classical baselines.

use crate::error::{Error, Result};
use crate::mass::{vectorize, MassFunction, PermutationMassFunction, UniversePolicy};
use crate::matrix::{build_matrix, MatrixKind, MatrixParams, WeightingMatrix, DEFAULT_EPSILON};
use crate::similarity::jaccard;

/// Negative quadratic-form values above this are treated as rounding noise
/// and clamped to zero.
const NEGATIVE_TOL: f64 = -1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Measure {
    /// Quadratic-form distance under the cumulative-Jaccard matrix.
    #[default]
    CumulativeJaccard,
    /// Quadratic-form distance under the Jaccard × ordered-degree matrix.
    OrderedDegree,
    /// Jousselme distance between the order-forgetting images.
    JousselmeOnForgottenOrder,
}

/// Whether to apply the positive-definiteness correction to the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Correction {
    /// Correct only when the smallest eigenvalue is not positive.
    #[default]
    Auto,
    Always,
    Never,
}

#[derive(Debug, Clone)]
pub struct DistanceRequest<'a> {
    pub pmf_a: &'a PermutationMassFunction,
    pub pmf_b: &'a PermutationMassFunction,
    pub measure: Measure,
    pub orn: f64,
    pub t_global: Option<usize>,
    pub universe_policy: UniversePolicy,
    pub correction: Correction,
}

impl<'a> DistanceRequest<'a> {
    pub fn new(pmf_a: &'a PermutationMassFunction, pmf_b: &'a PermutationMassFunction) -> Self {
        Self {
            pmf_a,
            pmf_b,
            measure: Measure::default(),
            orn: 0.5,
            t_global: None,
            universe_policy: UniversePolicy::default(),
            correction: Correction::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics {
    /// Smallest eigenvalue of the uncorrected matrix, when one was built.
    pub lambda_min: Option<f64>,
    pub corrected: bool,
    pub universe_size: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult {
    pub value: f64,
    pub diagnostics: Diagnostics,
}

fn bilinear(x: &[f64], y: &[f64], m: &WeightingMatrix) -> f64 {
    let mut acc = 0.0;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0.0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            acc += xi * m.entry(i, j) * yj;
        }
    }
    acc
}

fn check_dims(a: &[f64], b: &[f64], m: &WeightingMatrix) -> Result<()> {
    if a.len() != m.dim() || b.len() != m.dim() {
        return Err(Error::UniverseMismatch {
            left: a.len().min(b.len()),
            right: m.dim(),
        });
    }
    Ok(())
}

fn sqrt_half(value: f64) -> Result<f64> {
    let half = 0.5 * value;
    if half < 0.0 {
        if half >= NEGATIVE_TOL {
            return Ok(0.0);
        }
        return Err(Error::IndefiniteMatrix { value: half });
    }
    Ok(half.sqrt())
}

/// δᵀMδ for δ = a − b. Exposed separately because it is invariant under
/// extension of the universe with events both vectors assign zero mass.
pub fn quadratic_energy(a: &[f64], b: &[f64], m: &WeightingMatrix) -> Result<f64> {
    check_dims(a, b, m)?;
    let delta: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    Ok(bilinear(&delta, &delta, m))
}

/// √(½ δᵀMδ). Rounding-level negatives clamp to 0; anything worse is
/// reported as an indefinite-matrix error.
pub fn quadratic_form_distance(a: &[f64], b: &[f64], m: &WeightingMatrix) -> Result<f64> {
    sqrt_half(quadratic_energy(a, b, m)?)
}

/// Same distance via the expanded form ‖a‖² + ‖b‖² − 2⟨a, b⟩; useful as a
/// cross-check on the difference route.
pub fn expanded_form_distance(a: &[f64], b: &[f64], m: &WeightingMatrix) -> Result<f64> {
    check_dims(a, b, m)?;
    let value = bilinear(a, a, m) + bilinear(b, b, m) - 2.0 * bilinear(a, b, m);
    sqrt_half(value)
}

/// Jousselme distance between classical mass functions: quadratic form
/// under the Jaccard kernel over the union of focal sets.
pub fn jousselme_distance(a: &MassFunction, b: &MassFunction) -> Result<f64> {
    if a.frame() != b.frame() {
        return Err(Error::FrameMismatch);
    }
    let mut universe: Vec<u64> = a
        .assignments()
        .iter()
        .chain(b.assignments())
        .map(|&(mask, _)| mask)
        .collect();
    universe.sort_unstable();
    universe.dedup();
    let n = universe.len();
    let mut delta = vec![0.0; n];
    for (i, &mask) in universe.iter().enumerate() {
        delta[i] = a.mass_of(mask) - b.mass_of(mask);
    }
    let mut value = 0.0;
    for i in 0..n {
        for j in 0..n {
            value += delta[i] * jaccard(universe[i], universe[j])? * delta[j];
        }
    }
    sqrt_half(value)
}

/// Ordered-degree RPS distance: Jaccard × ordered-degree matrix over the
/// focal union, no positive-definiteness correction.
pub fn ordered_degree_distance(
    a: &PermutationMassFunction,
    b: &PermutationMassFunction,
) -> Result<f64> {
    let req = DistanceRequest {
        measure: Measure::OrderedDegree,
        correction: Correction::Never,
        universe_policy: UniversePolicy::FocalUnion,
        ..DistanceRequest::new(a, b)
    };
    Ok(rps_distance(&req)?.value)
}

/// Distance between two permutation mass functions per the request.
pub fn rps_distance(req: &DistanceRequest) -> Result<DistanceResult> {
    if req.pmf_a.frame() != req.pmf_b.frame() {
        return Err(Error::FrameMismatch);
    }
    if let Measure::JousselmeOnForgottenOrder = req.measure {
        let (ma, mb) = (req.pmf_a.forget_order(), req.pmf_b.forget_order());
        let mut universe: Vec<u64> = ma
            .assignments()
            .iter()
            .chain(mb.assignments())
            .map(|&(m, _)| m)
            .collect();
        universe.sort_unstable();
        universe.dedup();
        let value = jousselme_distance(&ma, &mb)?;
        return Ok(DistanceResult {
            value,
            diagnostics: Diagnostics {
                lambda_min: None,
                corrected: false,
                universe_size: universe.len(),
            },
        });
    }

    let kind = match req.measure {
        Measure::CumulativeJaccard => MatrixKind::CumulativeJaccard,
        Measure::OrderedDegree => MatrixKind::OrderedDegreeProduct,
        Measure::JousselmeOnForgottenOrder => unreachable!(),
    };
    let v = vectorize(&[req.pmf_a, req.pmf_b], req.universe_policy)?;
    let universe_size = v.universe.len();
    let matrix = build_matrix(
        v.universe,
        kind,
        MatrixParams {
            orn: req.orn,
            t_global: req.t_global,
        },
    )?;
    let lambda = matrix.min_eigenvalue();
    let matrix = match req.correction {
        Correction::Never => matrix,
        Correction::Always => matrix.correct(DEFAULT_EPSILON),
        Correction::Auto => {
            if lambda > 0.0 {
                matrix
            } else {
                matrix.correct(DEFAULT_EPSILON)
            }
        }
    };
    let corrected = matrix.corrected();
    let value = quadratic_form_distance(v.vectors[0].coords(), v.vectors[1].coords(), &matrix)?;
    Ok(DistanceResult {
        value,
        diagnostics: Diagnostics {
            lambda_min: Some(lambda),
            corrected,
            universe_size,
        },
    })
}
