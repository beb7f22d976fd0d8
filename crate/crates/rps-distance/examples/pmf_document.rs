//! Load mass functions from the JSON document format and measure them.

use rps_distance::{rps_distance, DistanceRequest, PmfDocument};

fn main() -> Result<(), rps_distance::Error> {
    let text = r#"{
        "frame": ["clubs", "diamonds", "spades"],
        "pmfs": [
            {"name": "witness", "assignments": [
                {"event": ["clubs"], "mass": 0.4},
                {"event": ["clubs", "spades"], "mass": 0.3},
                {"event": ["spades", "clubs"], "mass": 0.3}
            ]},
            {"name": "sensor", "assignments": [
                {"event": ["diamonds", "spades", "clubs"], "mass": 1.0}
            ]}
        ]
    }"#;

    let doc = PmfDocument::from_json(text)?;
    let a = doc.resolve("witness")?;
    let b = doc.resolve("sensor")?;
    let r = rps_distance(&DistanceRequest::new(&a, &b))?;
    println!("d(witness, sensor) = {:.4}", r.value);

    let roundtrip = PmfDocument::from_pmfs(&[("witness", &a), ("sensor", &b)])?;
    println!("\nserialized back:\n{}", roundtrip.to_json());
    Ok(())
}
