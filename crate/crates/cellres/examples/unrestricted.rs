//! Families over growing polynomial rings. Members are connected by an
//! injective variable renaming followed by a multiplication morphism;
//! covering and witnesses work the same way, with the injection recorded
//! next to each multiplier.

use cellres::covering::syzygy_fg_witness;
use cellres::families::{path_complex, Family, FamilySpec, PathVariant};
use cellres::morphism::find_renamed_embeddings;

fn main() -> cellres::Result<()> {
    // The 4-path complex embeds into the 5-path complex in exactly four
    // ways: two order-preserving shifts and their two reversals.
    let p4 = path_complex(PathVariant::Y, 4, 1)?;
    let p5 = path_complex(PathVariant::Y, 5, 1)?;
    for e in find_renamed_embeddings(&p4, &p5)? {
        let images: Vec<&str> = e
            .injection
            .iter()
            .map(|&j| p5.var_names().name(j))
            .collect();
        println!(
            "embedding: variables map to ({}), image spans {} cells",
            images.join(", "),
            e.morphism.cell_map.len()
        );
    }

    // Growing simplices: every new cell is a renamed copy of an old one,
    // so each syzygy dimension is finitely generated, with generators
    // appearing as soon as the dimension exists.
    let fam = Family::new(FamilySpec::simplex_growing())?;
    for t in 1..=3 {
        let witness = syzygy_fg_witness(&fam, t, 6)?;
        println!(
            "simplex family, dimension {t}: witness {} (threshold {:?}, {} generators)",
            if witness.succeeded { "succeeded" } else { "failed" },
            witness.threshold,
            witness.generators.len()
        );
        if let Some(row) = witness.table.first() {
            println!(
                "  first table row: member {} cell {} rooted at member {} cell {}, multiplier {:?}",
                row.index,
                row.cell,
                row.root_index,
                row.root_cell,
                row.multiplier.exponents()
            );
        }
    }
    Ok(())
}
