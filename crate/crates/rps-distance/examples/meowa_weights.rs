//! Generate max-entropy depth weights across the orness range.

use rps_distance::{maxent_weights, orness};

fn main() -> Result<(), rps_distance::Error> {
    let n = 4;
    println!("max-entropy weights for n = {n}");
    for k in 0..=10 {
        let orn = k as f64 / 10.0;
        let w = maxent_weights(n, orn)?;
        let cells: Vec<String> = w.as_slice().iter().map(|x| format!("{x:.4}")).collect();
        println!(
            "  orn = {orn:.1}  ->  [{}]  (roundtrip orness {:.6})",
            cells.join(", "),
            orness(&w)
        );
    }
    Ok(())
}
