//! Ideals generated by the degree-d monomials dividing a fixed bound
//! x^b, and their powers: each power is resolved by the subcomplex of
//! the ambient subdivided simplex lying under the scaled bound.

use cellres::families::{Family, FamilySpec};
use cellres::field::FieldChoice;
use cellres::resolution::{free_complex_from_labeled, is_resolution, minimal_betti};

fn main() -> cellres::Result<()> {
    // b = (1,1,1), d = 2: the squarefree quadrics xy, xz, yz.
    let fam = Family::new(FamilySpec::bounded(3, 2, vec![1, 1, 1]))?;
    for m in 1..=3 {
        let x = fam.complex(m)?;
        let table = minimal_betti(&free_complex_from_labeled(&x), FieldChoice::Rational)?;
        println!(
            "power {m}: f-vector {:?}, resolution {}, betti {table}",
            x.f_vector(),
            is_resolution(&x, FieldChoice::Rational)?
        );
    }

    // A non-uniform bound: x may appear squared among the generators.
    let skew = Family::new(FamilySpec::bounded(3, 2, vec![2, 1, 1]))?;
    let x = skew.complex(1)?;
    let labels: Vec<String> = x
        .dim_range(0)
        .map(|id| x.var_names().monomial_string(&x.cell(id).label))
        .collect();
    println!("bound (2,1,1) generators: {}", labels.join(", "));
    Ok(())
}
