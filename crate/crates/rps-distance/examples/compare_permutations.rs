//! Score two permutation events with every similarity index in the crate.

use rps_distance::{
    cumulative_jaccard_orness, encode_event, jaccard, ordered_degree, FrameOfDiscernment,
    OrderedFocalSet,
};

fn main() -> Result<(), rps_distance::Error> {
    let frame = FrameOfDiscernment::new(4)?;
    let s = OrderedFocalSet::new(vec![3, 2, 4], &frame)?;
    let t = OrderedFocalSet::new(vec![1, 2, 3, 4], &frame)?;

    let (cs, ct) = (encode_event(&s), encode_event(&t));
    println!("S = {}  (l = {}, o = {})", s.display(&frame), cs.l, cs.o);
    println!("T = {}  (l = {}, o = {})", t.display(&frame), ct.l, ct.o);

    println!(
        "set Jaccard          {:.4}",
        jaccard(s.set_mask(), t.set_mask())?
    );
    println!("ordered degree       {:.4}", ordered_degree(&s, &t));
    for orn in [0.0, 0.3, 0.5, 0.7, 1.0] {
        println!(
            "cumulative J (orn {orn:.1}) {:.4}",
            cumulative_jaccard_orness(&s, &t, orn, None)?
        );
    }
    Ok(())
}
