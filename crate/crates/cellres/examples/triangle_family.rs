//! The triangle family: subdivided simplices resolving the powers of
//! (x, y, z). Consecutive members admit exactly the morphisms x, y, z;
//! coverage by earlier members fails once (the central triangle of the
//! second member) and then holds from the third member on.

use cellres::covering::{covering_horizon, full_covering};
use cellres::families::{Family, FamilySpec};
use cellres::morphism::find_multiplication_morphisms;

fn main() -> cellres::Result<()> {
    let fam = Family::new(FamilySpec::maximal(3))?;

    for k in 1..=3 {
        let x = fam.complex(k)?;
        let y = fam.complex(k + 1)?;
        let multipliers: Vec<String> = find_multiplication_morphisms(&x, &y)
            .iter()
            .map(|g| y.var_names().monomial_string(&g.multiplier))
            .collect();
        println!(
            "Hom(member {k}, member {}): multipliers {multipliers:?}",
            k + 1
        );
    }

    let report = full_covering(&fam, 2, &[1])?;
    println!("member 2 covered by member 1: {}", report.covered);
    for gap in report.uncovered() {
        println!(
            "  uncovered {}-cell with vertices {{{}}}",
            gap.dim,
            gap.labels.join(", ")
        );
    }

    let horizon = covering_horizon(&fam, 6)?;
    println!(
        "horizon scan to 6: threshold {:?} (indices {:?} covered)",
        horizon.threshold,
        horizon
            .entries
            .iter()
            .filter(|e| e.covered)
            .map(|e| e.index)
            .collect::<Vec<_>>()
    );
    for note in &horizon.notes {
        println!("note: {note}");
    }
    Ok(())
}
