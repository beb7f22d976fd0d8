//! Pairwise similarity indices between sets and permutations: Jaccard,
//! ordered degree, and the cumulative Jaccard index.

use crate::error::{Error, Result};
use crate::event::OrderedFocalSet;
use crate::owa::maxent_weights;

/// Per-depth weights α₁..α_t, each in [0, 1], summing to 1 within 1e-9.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthWeights {
    weights: Vec<f64>,
}

impl DepthWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::BadWeights {
                reason: "empty weight vector".into(),
            });
        }
        if weights.iter().any(|&w| !(0.0..=1.0).contains(&w)) {
            return Err(Error::BadWeights {
                reason: "entry outside [0, 1]".into(),
            });
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::BadWeights {
                reason: format!("sum {sum} != 1"),
            });
        }
        Ok(Self { weights })
    }

    pub(crate) fn new_unchecked(weights: Vec<f64>) -> Self {
        Self { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }
}

/// Set of the first min(d, |S|) elements of S, as a bitmask. Depths past
/// the end of the permutation saturate to its full set.
pub fn prefix_set(s: &OrderedFocalSet, d: usize) -> u64 {
    s.prefix_mask(d)
}

/// |A∩B| / |A∪B| over membership bitmasks.
pub fn jaccard(a: u64, b: u64) -> Result<f64> {
    let union = (a | b).count_ones();
    if union == 0 {
        return Err(Error::EmptySets);
    }
    Ok((a & b).count_ones() as f64 / union as f64)
}

/// Exponential penalty on the rank displacement of common elements.
///
/// exp(−Σ_{τ∈S∩T} |rank_S(τ) − rank_T(τ)| / |S∪T|), ranks 1-based.
pub fn ordered_degree(s: &OrderedFocalSet, t: &OrderedFocalSet) -> f64 {
    let union = (s.set_mask() | t.set_mask()).count_ones() as f64;
    let mut displacement = 0usize;
    for (pos, &e) in s.elements().iter().enumerate() {
        if let Some(rank_t) = t.rank_of(e) {
            displacement += (pos + 1).abs_diff(rank_t);
        }
    }
    (-(displacement as f64) / union).exp()
}

/// Depth-weighted sum of prefix Jaccard indices (depth count = weight count).
pub fn cumulative_jaccard(
    s: &OrderedFocalSet,
    t: &OrderedFocalSet,
    weights: &DepthWeights,
) -> Result<f64> {
    let depth = weights.len();
    let max_depth = s.len().max(t.len());
    if depth > max_depth {
        return Err(Error::DepthOutOfRange {
            t: depth,
            max: max_depth,
        });
    }
    let mut acc = 0.0;
    for (d, &alpha) in weights.as_slice().iter().enumerate() {
        acc += alpha * jaccard(s.prefix_mask(d + 1), t.prefix_mask(d + 1))?;
    }
    Ok(acc)
}

/// Cumulative Jaccard with max-entropy weights at the given orness.
///
/// `t` defaults to max(|S|, |T|).
pub fn cumulative_jaccard_orness(
    s: &OrderedFocalSet,
    t: &OrderedFocalSet,
    orn: f64,
    depth: Option<usize>,
) -> Result<f64> {
    let max_depth = s.len().max(t.len());
    let depth = depth.unwrap_or(max_depth);
    if depth < 1 || depth > max_depth {
        return Err(Error::DepthOutOfRange {
            t: depth,
            max: max_depth,
        });
    }
    cumulative_jaccard(s, t, &maxent_weights(depth, orn)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::FrameOfDiscernment;

    fn ofs(elems: &[usize], n: usize) -> OrderedFocalSet {
        OrderedFocalSet::new(elems.to_vec(), &FrameOfDiscernment::new(n).unwrap()).unwrap()
    }

    #[test]
    fn prefix_clamps_at_length() {
        let s = ofs(&[3, 2, 4], 4);
        assert_eq!(prefix_set(&s, 1), 0b0100);
        assert_eq!(prefix_set(&s, 2), 0b0110);
        assert_eq!(prefix_set(&s, 4), 0b1110);
    }

    #[test]
    fn jaccard_values() {
        assert!((jaccard(0b101, 0b111).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(jaccard(0b11, 0b11).unwrap(), 1.0);
        assert_eq!(jaccard(0b01, 0b10).unwrap(), 0.0);
        assert!(jaccard(0, 0).is_err());
    }

    #[test]
    fn ordered_degree_values() {
        let s = ofs(&[1, 2], 3);
        assert_eq!(ordered_degree(&s, &s), 1.0);
        // common elements shift by one position each, union of 3
        let t = ofs(&[3, 1, 2], 3);
        assert!((ordered_degree(&s, &t) - (-2.0f64 / 3.0).exp()).abs() < 1e-12);
        // full swap in a 2-element event
        let u = ofs(&[2, 1], 3);
        assert!((ordered_degree(&s, &u) - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn cumulative_jaccard_identity() {
        let s = ofs(&[2, 3, 1], 3);
        let w = DepthWeights::new(vec![0.5, 0.2, 0.3]).unwrap();
        assert!((cumulative_jaccard(&s, &s, &w).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cumulative_jaccard_worked_pair() {
        let s = ofs(&[3, 2, 4], 4);
        let t = ofs(&[1, 2, 3, 4], 4);
        let w = crate::owa::maxent_weights(4, 0.7).unwrap();
        // per-depth Jaccard: 0, 1/3, 1/2, 3/4
        let ws = w.as_slice();
        let expect = ws[1] / 3.0 + ws[2] / 2.0 + ws[3] * 0.75;
        assert!((cumulative_jaccard(&s, &t, &w).unwrap() - expect).abs() < 1e-12);
        assert!((cumulative_jaccard(&s, &t, &w).unwrap() - 0.2480).abs() < 5e-4);

        let bottom = DepthWeights::new(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!((cumulative_jaccard(&s, &t, &bottom).unwrap() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn orness_variant_depths() {
        let s = ofs(&[3, 2, 4], 4);
        let t = ofs(&[1, 2, 3, 4], 4);
        let expect = [0.0, 0.1667, 0.2778, 0.3958];
        for (i, e) in expect.iter().enumerate() {
            let v = cumulative_jaccard_orness(&s, &t, 0.5, Some(i + 1)).unwrap();
            assert!((v - e).abs() < 5e-5, "depth {} got {v}", i + 1);
        }
        assert!(cumulative_jaccard_orness(&s, &t, 0.5, Some(5)).is_err());
        assert!(cumulative_jaccard_orness(&s, &t, 0.5, Some(0)).is_err());
    }

    #[test]
    fn mixed_length_uniform_weights() {
        // depth terms 1, 1/3, 2/3 under uniform thirds
        let s = ofs(&[1, 3], 3);
        let t = ofs(&[1, 2, 3], 3);
        let v = cumulative_jaccard_orness(&s, &t, 0.5, None).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn orn_zero_degenerates_to_set_jaccard() {
        let s = ofs(&[3, 2, 4], 4);
        let t = ofs(&[1, 2, 3, 4], 4);
        let v = cumulative_jaccard_orness(&s, &t, 0.0, None).unwrap();
        let j = jaccard(s.set_mask(), t.set_mask()).unwrap();
        assert!((v - j).abs() < 1e-15);
    }

    #[test]
    fn disjoint_events_score_zero() {
        let s = ofs(&[1, 2], 4);
        let t = ofs(&[3, 4], 4);
        assert_eq!(cumulative_jaccard_orness(&s, &t, 0.5, None).unwrap(), 0.0);
    }
}
