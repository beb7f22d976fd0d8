//! Randomized and property-based invariants that complement the frozen
//! reference values.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rps_distance::{
    decode_event, encode_event, enumerate_pes, rps_distance, Correction, DistanceRequest,
    EventCode, FrameOfDiscernment, Measure, PermutationMassFunction, PmfDocument, UniversePolicy,
};

fn random_pmf(rng: &mut StdRng, frame: &FrameOfDiscernment) -> PermutationMassFunction {
    let pes = enumerate_pes(frame).unwrap();
    let count = rng.gen_range(1..=4.min(pes.len()));
    let mut picked: Vec<usize> = Vec::new();
    while picked.len() < count {
        let i = rng.gen_range(0..pes.len());
        if !picked.contains(&i) {
            picked.push(i);
        }
    }
    let raw: Vec<f64> = (0..count).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let assignments = picked
        .iter()
        .zip(&raw)
        .map(|(&i, &m)| (pes[i].clone(), m / total))
        .collect();
    PermutationMassFunction::new(frame.clone(), assignments).unwrap()
}

#[test]
fn symmetry_and_reflexivity_all_measures() {
    let mut rng = StdRng::seed_from_u64(11);
    let measures = [
        Measure::CumulativeJaccard,
        Measure::OrderedDegree,
        Measure::JousselmeOnForgottenOrder,
    ];
    for _ in 0..500 {
        let n = rng.gen_range(2..=4);
        let frame = FrameOfDiscernment::new(n).unwrap();
        let (a, b) = (random_pmf(&mut rng, &frame), random_pmf(&mut rng, &frame));
        for measure in measures {
            let ab = rps_distance(&DistanceRequest {
                measure,
                ..DistanceRequest::new(&a, &b)
            })
            .unwrap()
            .value;
            let ba = rps_distance(&DistanceRequest {
                measure,
                ..DistanceRequest::new(&b, &a)
            })
            .unwrap()
            .value;
            assert!((ab - ba).abs() < 1e-15, "{measure:?}: {ab} vs {ba}");
            let aa = rps_distance(&DistanceRequest {
                measure,
                ..DistanceRequest::new(&a, &a)
            })
            .unwrap()
            .value;
            assert_eq!(aa, 0.0, "{measure:?}");
        }
    }
}

#[test]
fn correction_is_idempotent_on_random_universes() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let frame = FrameOfDiscernment::new(n).unwrap();
        let (a, b) = (random_pmf(&mut rng, &frame), random_pmf(&mut rng, &frame));
        let v = rps_distance::mass::vectorize(&[&a, &b], UniversePolicy::FocalUnion).unwrap();
        let m = rps_distance::build_matrix(
            v.universe,
            rps_distance::MatrixKind::CumulativeJaccard,
            rps_distance::MatrixParams::default(),
        )
        .unwrap();
        let eps = rps_distance::matrix::DEFAULT_EPSILON;
        let once = m.correct(eps);
        let twice = once.correct(eps);
        assert!(once.is_positive_definite());
        for (x, y) in once.entries().iter().zip(twice.entries()) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}

#[test]
fn auto_correction_is_identity_on_definite_matrices() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let frame = FrameOfDiscernment::new(n).unwrap();
        let (a, b) = (random_pmf(&mut rng, &frame), random_pmf(&mut rng, &frame));
        let auto = rps_distance(&DistanceRequest::new(&a, &b)).unwrap();
        if auto.diagnostics.lambda_min.unwrap() > 0.0 {
            assert!(!auto.diagnostics.corrected);
            let raw = rps_distance(&DistanceRequest {
                correction: Correction::Never,
                ..DistanceRequest::new(&a, &b)
            })
            .unwrap();
            assert_eq!(auto.value, raw.value);
        } else {
            assert!(auto.diagnostics.corrected);
        }
    }
}

proptest! {
    #[test]
    fn codec_roundtrips_random_sequences(n in 1usize..=8, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let frame = FrameOfDiscernment::new(n).unwrap();
        let k = rng.gen_range(1..=n);
        let mut elems: Vec<usize> = (1..=n).collect();
        for i in (1..elems.len()).rev() {
            elems.swap(i, rng.gen_range(0..=i));
        }
        elems.truncate(k);
        let event = rps_distance::OrderedFocalSet::new(elems, &frame).unwrap();
        let code = encode_event(&event);
        prop_assert!(code.o >= 1);
        prop_assert_eq!(decode_event(code, &frame).unwrap(), event);
    }

    #[test]
    fn decode_rejects_out_of_range_order(n in 1usize..=6, l in 1u64..64, o_extra in 1u64..100) {
        let frame = FrameOfDiscernment::new(n).unwrap();
        let code = if l < (1 << n) {
            let k = l.count_ones() as usize;
            let kfact: u64 = (1..=k as u64).product();
            EventCode { l, o: kfact + o_extra }
        } else {
            EventCode { l, o: 1 }
        };
        let decoded = decode_event(code, &frame);
        prop_assert!(decoded.is_err());
    }

    #[test]
    fn document_roundtrips_random_pmfs(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let frame = FrameOfDiscernment::new(n).unwrap();
        let a = random_pmf(&mut rng, &frame);
        let b = random_pmf(&mut rng, &frame);
        let doc = PmfDocument::from_pmfs(&[("A", &a), ("B", &b)]).unwrap();
        let parsed = PmfDocument::from_json(&doc.to_json()).unwrap();
        let a2 = parsed.resolve("A").unwrap();
        let b2 = parsed.resolve("B").unwrap();
        // frames differ (labelled vs default) but the assignments must agree
        prop_assert_eq!(a.assignments().len(), a2.assignments().len());
        for ((ea, ma), (eb, mb)) in a.assignments().iter().zip(a2.assignments()) {
            prop_assert_eq!(ea.elements(), eb.elements());
            prop_assert!((ma - mb).abs() < 1e-15);
        }
        prop_assert_eq!(b.assignments().len(), b2.assignments().len());
    }
}
