//! Orness measure and max-entropy (MEOWA) weight generation.
//!
//! Weights with a prescribed orness are geometric with ratio h, where h is
//! the unique positive root of Σ_{i=1}^{n} ((n−i)/(n−1) − Orn)·h^{n−i} = 0.

use crate::error::{Error, Result};
use crate::similarity::DepthWeights;

/// Orness characteristic of a weight vector: (1/(n−1)) Σ (n−i)ωᵢ.
///
/// A single weight is degenerate; by convention its orness is 0.5.
pub fn orness(weights: &DepthWeights) -> f64 {
    let n = weights.len();
    if n == 1 {
        return 0.5;
    }
    let sum: f64 = weights
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &w)| (n - 1 - i) as f64 * w)
        .sum();
    sum / (n - 1) as f64
}

fn poly(n: usize, orn: f64, h: f64) -> f64 {
    // Σ_{j=0}^{n-1} (j/(n-1) − orn) h^j, evaluated by Horner from the top
    let mut acc = 0.0;
    for j in (0..n).rev() {
        acc = acc * h + (j as f64 / (n - 1) as f64 - orn);
    }
    acc
}

fn poly_deriv(n: usize, orn: f64, h: f64) -> f64 {
    let mut acc = 0.0;
    for j in (1..n).rev() {
        acc = acc * h + j as f64 * (j as f64 / (n - 1) as f64 - orn);
    }
    acc
}

/// The unique positive root h of the orness polynomial.
///
/// h > 1 iff orn > 0.5; the limits orn ∈ {0, 1} are handled by
/// [`maxent_weights`] directly and rejected here.
pub fn solve_h(n: usize, orn: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter("solve_h requires n >= 2".into()));
    }
    if !(orn > 0.0 && orn < 1.0) {
        return Err(Error::OrnessOutOfRange { orn });
    }
    if (orn - 0.5).abs() < 1e-15 {
        return Ok(1.0);
    }
    // the polynomial has exactly one sign change in each regime; bracket
    // then bisect, finishing with Newton refinements
    let (mut lo, mut hi) = if orn < 0.5 {
        (1e-12, 1.0)
    } else {
        let mut b = 2.0;
        while poly(n, orn, b) < 0.0 {
            b *= 2.0;
        }
        (1.0, b)
    };
    // p(h) → -orn·sign at h→0+ and grows with the top coefficient, so
    // p(lo) < 0 < p(hi) in both regimes
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if poly(n, orn, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 * hi.max(1.0) {
            break;
        }
    }
    let mut h = 0.5 * (lo + hi);
    for _ in 0..8 {
        let f = poly(n, orn, h);
        if f.abs() < 1e-13 {
            break;
        }
        let df = poly_deriv(n, orn, h);
        if df == 0.0 {
            break;
        }
        let next = h - f / df;
        if next > lo && next < hi {
            h = next;
        } else {
            break;
        }
    }
    Ok(h)
}

/// Max-entropy weights with the prescribed orness: ωᵢ = h^{n−i} / Σ h^{n−j}.
///
/// Limits: orn = 1 → [1, 0, …], orn = 0 → […, 0, 1], orn = 0.5 → uniform.
pub fn maxent_weights(n: usize, orn: f64) -> Result<DepthWeights> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "weight count must be positive".into(),
        ));
    }
    if !(0.0..=1.0).contains(&orn) {
        return Err(Error::OrnessOutOfRange { orn });
    }
    if n == 1 {
        return Ok(DepthWeights::new_unchecked(vec![1.0]));
    }
    if orn == 1.0 {
        let mut w = vec![0.0; n];
        w[0] = 1.0;
        return Ok(DepthWeights::new_unchecked(w));
    }
    if orn == 0.0 {
        let mut w = vec![0.0; n];
        w[n - 1] = 1.0;
        return Ok(DepthWeights::new_unchecked(w));
    }
    if (orn - 0.5).abs() < 1e-15 {
        return Ok(DepthWeights::new_unchecked(vec![1.0 / n as f64; n]));
    }
    let h = solve_h(n, orn)?;
    let mut w: Vec<f64> = (0..n).map(|i| h.powi((n - 1 - i) as i32)).collect();
    let sum: f64 = w.iter().sum();
    for x in &mut w {
        *x /= sum;
    }
    Ok(DepthWeights::new_unchecked(w))
}
