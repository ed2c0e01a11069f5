//! Randomized property suites: monomial lattice laws, label/boundary
//! invariants under restriction, string and JSON round trips, and
//! field-independence of Betti numbers on desk-scale inputs.

use proptest::prelude::*;

use cellres::complex::LabeledComplex;
use cellres::families::{path_complex, Family, FamilySpec, PathVariant};
use cellres::field::{FieldChoice, FAST_PRIME};
use cellres::io;
use cellres::monomial::{parse_ideal, ExponentVector, MonomialIdeal, VarNames};
use cellres::resolution::{betti, free_complex_from_labeled, minimal_betti};

fn exponent_vector(n: usize, max: u32) -> impl Strategy<Value = ExponentVector> {
    proptest::collection::vec(0..=max, n).prop_map(ExponentVector::new)
}

/// A nonzero monomial in n variables.
fn monomial(n: usize, max: u32) -> impl Strategy<Value = ExponentVector> {
    exponent_vector(n, max).prop_filter("nonzero", |e| e.total_degree() > 0)
}

fn small_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(monomial(n, 3), 1..=5)
        .prop_map(move |gens| MonomialIdeal::from_generators(n, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lcm_gcd_lattice_laws(
        a in exponent_vector(4, 6),
        b in exponent_vector(4, 6),
        c in exponent_vector(4, 6),
    ) {
        prop_assert_eq!(a.lcm(&b), b.lcm(&a));
        prop_assert_eq!(a.gcd(&b), b.gcd(&a));
        prop_assert_eq!(a.lcm(&b).lcm(&c), a.lcm(&b.lcm(&c)));
        prop_assert_eq!(a.lcm(&a), a.clone());
        prop_assert!(a.divides(&a.lcm(&b)));
        prop_assert!(a.gcd(&b).divides(&a));
        // Entrywise max + min recovers the sum.
        prop_assert_eq!(a.lcm(&b).times(&a.gcd(&b)), a.times(&b));
        // Absorption.
        prop_assert_eq!(a.lcm(&a.gcd(&b)), a.clone());
    }

    #[test]
    fn divisibility_is_a_partial_order(
        a in exponent_vector(3, 4),
        b in exponent_vector(3, 4),
    ) {
        if a.divides(&b) && b.divides(&a) {
            prop_assert_eq!(a.clone(), b.clone());
        }
        prop_assert_eq!(a.divides(&b), b.checked_div(&a).is_some());
    }

    #[test]
    fn renaming_commutes_with_the_lattice(
        a in exponent_vector(3, 4),
        b in exponent_vector(3, 4),
        perm in Just([2usize, 0, 1]),
    ) {
        let ra = a.rename(&perm, 3).unwrap();
        let rb = b.rename(&perm, 3).unwrap();
        prop_assert_eq!(ra.lcm(&rb), a.lcm(&b).rename(&perm, 3).unwrap());
        prop_assert_eq!(ra.gcd(&rb), a.gcd(&b).rename(&perm, 3).unwrap());
        prop_assert_eq!(a.rename(&perm, 3).unwrap().total_degree(), a.total_degree());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Printing an ideal and parsing it back gives the same minimal
    /// generators whenever every variable is mentioned (the parser infers
    /// the ring from the text).
    #[test]
    fn ideal_strings_round_trip(ideal in small_ideal(3)) {
        let names = VarNames::standard(3);
        let mentions_all = (0..3).all(|v| {
            ideal.generators().iter().any(|g| g.exponent(v) > 0)
        });
        prop_assume!(mentions_all);
        let text = format!(
            "({})",
            ideal
                .generators()
                .iter()
                .map(|g| names.monomial_string(g))
                .collect::<Vec<_>>()
                .join(",")
        );
        let (parsed_names, parsed) = parse_ideal(&text).unwrap();
        prop_assert_eq!(parsed_names.names(), names.names());
        prop_assert_eq!(parsed.generators(), ideal.generators());
    }

    /// Betti numbers do not depend on the coefficient field on this corpus
    /// (no torsion at desk scale).
    #[test]
    fn betti_agrees_over_q_and_p32003(ideal in small_ideal(3)) {
        let over_q = betti(&ideal, FieldChoice::Rational).unwrap();
        let over_p = betti(&ideal, FieldChoice::Prime(FAST_PRIME)).unwrap();
        prop_assert_eq!(over_q.ranks, over_p.ranks);
    }
}

/// A fixed stable of family members used for restriction properties.
fn stable() -> Vec<LabeledComplex> {
    let maximal = Family::new(FamilySpec::maximal(3)).unwrap();
    let cube = Family::new(FamilySpec::cube(vec![(1, 2), (3, 4)])).unwrap();
    vec![
        maximal.complex(2).unwrap(),
        maximal.complex(3).unwrap(),
        cube.complex(2).unwrap(),
        path_complex(PathVariant::Y, 4, 2).unwrap(),
        path_complex(PathVariant::Z, 5, 1).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Restricting to the faces whose label divides x^b preserves every
    /// structural invariant, never grows the complex, and is monotone.
    #[test]
    fn restriction_preserves_invariants(
        which in 0usize..5,
        b in exponent_vector(6, 6),
        extra in exponent_vector(6, 2),
    ) {
        let x = &stable()[which];
        let n = x.num_vars();
        let b = ExponentVector::new(b.iter().take(n).collect());
        let bigger = ExponentVector::new(
            b.iter().zip(extra.iter()).map(|(u, v)| u + v).collect(),
        );

        let small = x.restrict_leq(&b).unwrap();
        let large = x.restrict_leq(&bigger).unwrap();
        prop_assert!(small.validate().is_empty());
        prop_assert!(free_complex_from_labeled(&small).validate().is_empty());
        prop_assert!(small.num_cells() <= large.num_cells());
        prop_assert!(large.num_cells() <= x.num_cells());
        for id in 0..small.num_cells() {
            prop_assert!(small.cell(id).label.divides(&b));
        }

        // Monotonicity as face sets: every face of the smaller restriction
        // appears in the larger one (keyed by dim + vertex labels).
        let key = |y: &LabeledComplex, id: usize| {
            let c = y.cell(id);
            let mut vs: Vec<ExponentVector> = c
                .vertices
                .iter()
                .map(|&v| y.cell(v).label.clone())
                .collect();
            vs.sort();
            (c.dim, vs)
        };
        let in_large: std::collections::BTreeSet<_> =
            (0..large.num_cells()).map(|id| key(&large, id)).collect();
        for id in 0..small.num_cells() {
            prop_assert!(in_large.contains(&key(&small, id)));
        }
    }

    /// Complex JSON round trips byte-identically through export/import.
    #[test]
    fn complex_json_round_trips(which in 0usize..5) {
        let x = &stable()[which];
        let text = io::export_complex(x).unwrap();
        let back = io::import_complex(&text).unwrap();
        prop_assert_eq!(io::export_complex(&back).unwrap(), text);
    }

    /// Free-complex JSON round trips and revalidates.
    #[test]
    fn free_complex_json_round_trips(which in 0usize..5) {
        let x = &stable()[which];
        let f = free_complex_from_labeled(x);
        let doc = io::free_complex_to_doc(&f);
        let text = io::canonical_json(&doc).unwrap();
        let back = io::free_complex_from_doc(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back.ranks(), f.ranks());
        prop_assert_eq!(
            minimal_betti(&back, FieldChoice::Rational).unwrap().ranks,
            minimal_betti(&f, FieldChoice::Rational).unwrap().ranks
        );
    }
}
