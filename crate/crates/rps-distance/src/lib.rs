//! Distance measures between random permutation sets.
//!
//! A random permutation set assigns mass to *ordered* focal sets — events
//! that carry both membership and visit order. The distance between two
//! such mass assignments is a quadratic form √(½ δᵀMδ) whose weighting
//! matrix M scores event pairs by a similarity index:
//!
//! - [`matrix::MatrixKind::CumulativeJaccard`]: depth-weighted Jaccard
//!   indices of growing prefixes, with max-entropy weights at a chosen
//!   orness (the attitude towards early positions),
//! - [`matrix::MatrixKind::OrderedDegreeProduct`]: Jaccard times an
//!   exponential rank-displacement penalty,
//! - [`matrix::MatrixKind::Jaccard`]: plain set overlap, order-blind.
//!
//! Cumulative-Jaccard matrices can be indefinite; [`rps_distance`] applies
//! a diagonal eigenvalue-shift correction before taking the square root.
//!
//! ```
//! use rps_distance::{DistanceRequest, FrameOfDiscernment, PermutationMassFunction};
//!
//! let frame = FrameOfDiscernment::new(3)?;
//! let a = PermutationMassFunction::from_sequences(
//!     frame.clone(),
//!     &[(&[1][..], 0.4), (&[1, 3][..], 0.3), (&[3, 1][..], 0.3)],
//! )?;
//! let b = PermutationMassFunction::from_sequences(frame, &[(&[2, 3, 1][..], 1.0)])?;
//! let result = rps_distance::rps_distance(&DistanceRequest::new(&a, &b))?;
//! assert!(result.value > 0.0 && result.value <= 1.0);
//! # Ok::<(), rps_distance::Error>(())
//! ```

pub mod distance;
pub mod document;
pub mod eigen;
pub mod error;
pub mod event;
pub mod frame;
pub mod mass;
pub mod matrix;
pub mod owa;
pub mod repro;
pub mod similarity;

pub use distance::{
    expanded_form_distance, jousselme_distance, ordered_degree_distance, quadratic_energy,
    quadratic_form_distance, rps_distance, Correction, Diagnostics, DistanceRequest,
    DistanceResult, Measure,
};
pub use document::PmfDocument;
pub use error::{Error, Result};
pub use event::{decode_event, encode_event, enumerate_pes, pes_size, EventCode, OrderedFocalSet};
pub use frame::FrameOfDiscernment;
pub use mass::{MassFunction, PermutationMassFunction, UniversePolicy};
pub use matrix::{build_matrix, CorrectionDivisor, MatrixKind, MatrixParams, WeightingMatrix};
pub use owa::{maxent_weights, orness};
pub use similarity::{
    cumulative_jaccard, cumulative_jaccard_orness, jaccard, ordered_degree, DepthWeights,
};
