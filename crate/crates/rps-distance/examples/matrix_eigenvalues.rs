//! Minimum eigenvalues of the three weighting matrices over growing full
//! event spaces, and what the correction does to an indefinite one.

use rps_distance::{build_matrix, enumerate_pes, FrameOfDiscernment, MatrixKind, MatrixParams};

fn main() -> Result<(), rps_distance::Error> {
    println!("n   events  jaccard   ordered   cumulative");
    for n in 1..=4 {
        let frame = FrameOfDiscernment::new(n)?;
        let universe = enumerate_pes(&frame)?;
        let mut lambdas = Vec::new();
        for kind in [
            MatrixKind::Jaccard,
            MatrixKind::OrderedDegreeProduct,
            MatrixKind::CumulativeJaccard,
        ] {
            let m = build_matrix(universe.clone(), kind, MatrixParams::default())?;
            lambdas.push(m.min_eigenvalue());
        }
        println!(
            "{n}   {:>5}  {:>8.4}  {:>8.4}  {:>8.4}",
            universe.len(),
            lambdas[0],
            lambdas[1],
            lambdas[2]
        );
    }

    let frame = FrameOfDiscernment::new(3)?;
    let m = build_matrix(
        enumerate_pes(&frame)?,
        MatrixKind::CumulativeJaccard,
        MatrixParams::default(),
    )?;
    let c = m.correct(rps_distance::matrix::DEFAULT_EPSILON);
    println!(
        "\nn = 3 cumulative matrix: lambda_min {:.4} -> corrected {:.2e} (diagonal stays 1)",
        m.min_eigenvalue(),
        c.min_eigenvalue()
    );
    Ok(())
}
