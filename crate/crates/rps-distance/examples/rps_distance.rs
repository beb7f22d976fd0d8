//! End-to-end distance between two permutation mass functions, showing the
//! effect of universe choice and the positive-definiteness correction.

use rps_distance::{
    rps_distance, Correction, DistanceRequest, FrameOfDiscernment, PermutationMassFunction,
    UniversePolicy,
};

fn main() -> Result<(), rps_distance::Error> {
    let frame = FrameOfDiscernment::new(3)?;
    let a = PermutationMassFunction::from_sequences(
        frame.clone(),
        &[(&[1][..], 0.4), (&[1, 3][..], 0.3), (&[3, 1][..], 0.3)],
    )?;
    let b = PermutationMassFunction::from_sequences(
        frame,
        &[
            (&[2][..], 0.4),
            (&[1, 3][..], 0.1),
            (&[1, 2, 3][..], 0.15),
            (&[2, 3, 1][..], 0.35),
        ],
    )?;

    for (label, policy, correction) in [
        (
            "focal union, uncorrected",
            UniversePolicy::FocalUnion,
            Correction::Never,
        ),
        (
            "full space,  uncorrected",
            UniversePolicy::FullPes,
            Correction::Never,
        ),
        (
            "full space,  auto",
            UniversePolicy::FullPes,
            Correction::Auto,
        ),
    ] {
        let req = DistanceRequest {
            universe_policy: policy,
            correction,
            ..DistanceRequest::new(&a, &b)
        };
        let r = rps_distance(&req)?;
        let d = &r.diagnostics;
        println!(
            "{label}: d = {:.4}  (universe {}, lambda_min {}, corrected {})",
            r.value,
            d.universe_size,
            d.lambda_min.map(|l| format!("{l:.4}")).unwrap_or_default(),
            d.corrected
        );
    }
    Ok(())
}
