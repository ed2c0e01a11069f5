//! From cellular maps to chain maps. A multiplication morphism assigns a
//! target cell to every source cell so that labels multiply by one fixed
//! monomial; the induced chain map on free complexes is then forced, one
//! dimension at a time, and the pair must satisfy the commuting squares.

use cellres::families::{Family, FamilySpec};
use cellres::morphism::{
    build_chain_map, compose, find_multiplication_morphisms, is_compatible_pair,
};

fn main() -> cellres::Result<()> {
    let fam = Family::new(FamilySpec::maximal(2))?;
    let x1 = fam.complex(1)?;
    let x2 = fam.complex(2)?;
    let x3 = fam.complex(3)?;

    let step1 = find_multiplication_morphisms(&x1, &x2);
    let step2 = find_multiplication_morphisms(&x2, &x3);
    println!(
        "morphisms member 1 -> 2: {}, member 2 -> 3: {}",
        step1.len(),
        step2.len()
    );

    let g = &step1[0];
    let f = build_chain_map(&x1, &x2, g)?;
    println!(
        "multiplier {}: chain map with {} levels, compatible: {}",
        x2.var_names().monomial_string(&g.multiplier),
        f.matrices.len(),
        is_compatible_pair(&x1, &x2, g, &f)
    );

    // Composites multiply the multipliers; all of Hom(1, 3) arises this way.
    let composite = compose(&step2[0], g)?;
    println!(
        "composite multiplier: {}",
        x3.var_names().monomial_string(&composite.multiplier)
    );
    let direct = find_multiplication_morphisms(&x1, &x3);
    println!("direct morphisms member 1 -> 3: {}", direct.len());
    Ok(())
}
