//! Cube families: subdivided cubes resolving powers of products of sums
//! of variable pairs. Every member is covered by the first, so the
//! syzygy data is finitely generated with all generators in low index.

use cellres::covering::{full_covering, syzygy_fg_witness};
use cellres::families::{Family, FamilySpec};
use cellres::field::FieldChoice;
use cellres::resolution::{free_complex_from_labeled, minimal_betti};

fn main() -> cellres::Result<()> {
    let c2 = Family::new(FamilySpec::cube(vec![(1, 2), (3, 4)]))?;
    for p in 1..=4 {
        let x = c2.complex(p)?;
        let table = minimal_betti(&free_complex_from_labeled(&x), FieldChoice::Rational)?;
        println!("square member {p}: f-vector {:?}, betti {table}", x.f_vector());
    }
    for p in 2..=4 {
        let report = full_covering(&c2, p, &[1])?;
        println!("square member {p} covered by member 1: {}", report.covered);
    }

    let c3 = Family::new(FamilySpec::cube(vec![(1, 2), (3, 4), (5, 6)]))?;
    let report = full_covering(&c3, 2, &[1])?;
    println!("cube member 2 covered by member 1: {}", report.covered);

    let witness = syzygy_fg_witness(&c2, 2, 5)?;
    println!(
        "first-syzygy witness over the square family, horizon 5: {} (threshold {:?}, {} generators)",
        if witness.succeeded { "succeeded" } else { "failed" },
        witness.threshold,
        witness.generators.len()
    );
    Ok(())
}
