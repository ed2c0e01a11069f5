//! A negative control: resolving each power of (x, y, z) by the full
//! simplex on its generators. The member complexes grow in dimension, so
//! no earlier member can reach the new top cells and every covering
//! check fails — finite generation of the top syzygy data never gets a
//! witness from this presentation.

use cellres::covering::{covering_horizon, syzygy_fg_witness};
use cellres::families::{Family, FamilySpec};

fn main() -> cellres::Result<()> {
    let fam = Family::new(FamilySpec::taylor_powers("(x,y,z)"))?;

    for i in 1..=3 {
        let x = fam.complex(i)?;
        println!(
            "member {i}: {} generators, top dimension {:?}",
            x.dim_range(0).len(),
            x.top_dim()
        );
    }

    let horizon = covering_horizon(&fam, 4)?;
    println!("horizon scan to 4: threshold {:?}", horizon.threshold);

    for h in 2..=4 {
        let witness = syzygy_fg_witness(&fam, 3, h)?;
        println!(
            "witness for the 2-cells at horizon {h}: {} ({} uncovered)",
            if witness.succeeded { "succeeded" } else { "FAILED" },
            witness.uncovered.len()
        );
    }
    for note in syzygy_fg_witness(&fam, 3, 4)?.notes {
        println!("note: {note}");
    }
    Ok(())
}
