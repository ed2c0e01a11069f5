//! Morphisms between labeled complexes: multiplication maps, embeddings,
//! variable renamings, and the chain maps they induce.
//!
//! A multiplication morphism X → Y is determined by one monomial μ: each
//! source vertex with label m must land on the target vertex labeled μ·m,
//! and every source cell's mapped vertex set must be exactly the vertex set
//! of a target cell of the same dimension, compatibly with the facet
//! relation. Enumeration is complete because any morphism sends the first
//! source vertex somewhere, so μ is a difference of a target vertex label
//! and that fixed source label.
//!
//! A chain map is compatible with a cellular map g when f_0 restricts to
//! the label map on the ideal and each f_i is supported on g. f_0 is a
//! 1×1 matrix — multiplication by a single monomial — so compatibility
//! requires every vertex label to be multiplied by the *same* monomial;
//! a cellular map whose label map is not one uniform multiplication admits
//! no compatible chain map at all. Once f_0 is fixed, homogeneity forces
//! each entry's monomial and the commuting squares force each entry's sign
//! from any single facet, so signs propagate upward by dimension and the
//! remaining facet equations are pure consistency checks. A propagation
//! failure therefore proves that no compatible chain map exists, not
//! merely that one heuristic failed.

use std::collections::BTreeSet;

use crate::complex::{LabeledComplex, RawCell, RawComplex};
use crate::monomial::{ExponentVector, VarNames};
use crate::resolution::{free_complex_from_labeled, MonomialMatrix};
use crate::{Error, Result};

/// A cellular map X → Y multiplying every label by a fixed monomial.
///
/// `cell_map[src]` is the target cell id of source cell `src`; the map is
/// dimension-preserving, injective, and facet-compatible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationMorphism {
    pub multiplier: ExponentVector,
    pub cell_map: Vec<usize>,
}

/// A chain map between the free complexes of two labeled complexes;
/// `matrices[i]` maps module i of the source free complex to module i of
/// the target free complex.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    pub matrices: Vec<MonomialMatrix<i64>>,
}

/// Check the structural invariants of a multiplication morphism between
/// the two given complexes.
pub fn check_multiplication_morphism(
    x: &LabeledComplex,
    y: &LabeledComplex,
    g: &MultiplicationMorphism,
) -> Result<()> {
    if x.num_vars() != y.num_vars() {
        return Err(Error::LengthMismatch(x.num_vars(), y.num_vars()));
    }
    if g.multiplier.len() != x.num_vars() {
        return Err(Error::LengthMismatch(g.multiplier.len(), x.num_vars()));
    }
    if g.cell_map.len() != x.num_cells() {
        return Err(Error::Input(format!(
            "cell map covers {} cells, complex has {}",
            g.cell_map.len(),
            x.num_cells()
        )));
    }
    let mut hit = vec![false; y.num_cells()];
    for (src, &dst) in g.cell_map.iter().enumerate() {
        if dst >= y.num_cells() {
            return Err(Error::Input(format!("cell map target {dst} out of range")));
        }
        if std::mem::replace(&mut hit[dst], true) {
            return Err(Error::Input("cell map is not injective".into()));
        }
        let (a, b) = (x.cell(src), y.cell(dst));
        if a.dim != b.dim {
            return Err(Error::Input(format!(
                "cell map sends a {}-cell to a {}-cell",
                a.dim, b.dim
            )));
        }
        if b.label != g.multiplier.times(&a.label) {
            return Err(Error::Input(format!(
                "label of image cell {dst} is not the multiplied label of cell {src}"
            )));
        }
        for &(facet, _) in x.facets_of(src) {
            if !y
                .facets_of(dst)
                .iter()
                .any(|&(f, _)| f == g.cell_map[facet])
            {
                return Err(Error::Input(format!(
                    "cell map does not commute with the facet relation at cell {src}"
                )));
            }
        }
    }
    Ok(())
}

/// All multiplication morphisms X → Y, sorted by multiplier.
///
/// Includes embeddings (multiplier 1); returns one morphism per feasible
/// multiplier since the multiplier determines the whole map.
pub fn find_multiplication_morphisms(
    x: &LabeledComplex,
    y: &LabeledComplex,
) -> Vec<MultiplicationMorphism> {
    let mut out = Vec::new();
    if x.num_vars() != y.num_vars() || x.num_cells() == 0 {
        return out;
    }
    let v0 = x.dim_range(0).start;
    let base = &x.cell(v0).label;
    let candidates: BTreeSet<ExponentVector> = y
        .dim_range(0)
        .filter_map(|w| y.cell(w).label.checked_div(base))
        .collect();
    'candidates: for multiplier in candidates {
        let mut cell_map = vec![usize::MAX; x.num_cells()];
        for v in x.dim_range(0) {
            let target_label = multiplier.times(&x.cell(v).label);
            match y.vertex_id_by_label(&target_label) {
                Some(w) => cell_map[v] = w,
                None => continue 'candidates,
            }
        }
        let Some(top) = x.top_dim() else {
            continue;
        };
        for d in 1..=top {
            for f in x.dim_range(d) {
                let mut image: Vec<usize> =
                    x.cell(f).vertices.iter().map(|&v| cell_map[v]).collect();
                image.sort_unstable();
                match y.cell_by_vertices(d, &image) {
                    Some(t) => cell_map[f] = t,
                    None => continue 'candidates,
                }
            }
        }
        // Facet compatibility of the forced map.
        for f in 0..x.num_cells() {
            for &(facet, _) in x.facets_of(f) {
                if !y
                    .facets_of(cell_map[f])
                    .iter()
                    .any(|&(t, _)| t == cell_map[facet])
                {
                    continue 'candidates;
                }
            }
        }
        out.push(MultiplicationMorphism {
            multiplier,
            cell_map,
        });
    }
    out
}

/// The induced map on ideal generators: each source vertex label paired
/// with its image label (the label times the multiplier), in canonical
/// source order.
pub fn induced_label_map(
    x: &LabeledComplex,
    g: &MultiplicationMorphism,
) -> Vec<(ExponentVector, ExponentVector)> {
    x.dim_range(0)
        .map(|v| {
            let m = x.cell(v).label.clone();
            let image = g.multiplier.times(&m);
            (m, image)
        })
        .collect()
}

/// The unique candidate chain map compatible with an arbitrary dimension-
/// and facet-preserving cellular map.
///
/// f_0 must restrict to the label map, and f_0 is multiplication by a
/// single monomial, so the multiplier is read off the first vertex and
/// every other vertex must be multiplied by the same monomial. Errors when
/// the label map is not one uniform multiplication, when some entry
/// monomial would be negative, or when the forced sign propagation hits a
/// contradiction — each of which proves no compatible chain map exists.
pub fn chain_map_for_cell_map(
    x: &LabeledComplex,
    y: &LabeledComplex,
    cell_map: &[usize],
) -> Result<ChainMap> {
    if x.num_vars() != y.num_vars() {
        return Err(Error::LengthMismatch(x.num_vars(), y.num_vars()));
    }
    if cell_map.len() != x.num_cells() {
        return Err(Error::Input(format!(
            "cell map covers {} cells, complex has {}",
            cell_map.len(),
            x.num_cells()
        )));
    }
    for (src, &dst) in cell_map.iter().enumerate() {
        if dst >= y.num_cells() || y.cell(dst).dim != x.cell(src).dim {
            return Err(Error::IncompatibleChainMap(format!(
                "cell {src} does not map to a target cell of its dimension"
            )));
        }
    }
    if x.num_cells() == 0 {
        return Err(Error::IncompatibleChainMap(
            "the source complex has no cells".into(),
        ));
    }
    // The label map must be multiplication by one monomial.
    let ratio = |v: usize| -> Result<ExponentVector> {
        let a = &x.cell(v).label;
        let b = &y.cell(cell_map[v]).label;
        b.checked_div(a).ok_or_else(|| {
            Error::IncompatibleChainMap(format!(
                "vertex label {} does not divide its image label {}",
                x.var_names().monomial_string(a),
                y.var_names().monomial_string(b),
            ))
        })
    };
    let v0 = x.dim_range(0).start;
    let multiplier = ratio(v0)?;
    for v in x.dim_range(0) {
        let r = ratio(v)?;
        if r != multiplier {
            return Err(Error::IncompatibleChainMap(format!(
                "the label map is not multiplication by a single monomial: \
                 vertex {} is multiplied by {}, vertex {} by {}",
                x.var_names().monomial_string(&x.cell(v0).label),
                x.var_names().monomial_string(&multiplier),
                x.var_names().monomial_string(&x.cell(v).label),
                x.var_names().monomial_string(&r),
            )));
        }
    }
    // Degree feasibility per cell: entry monomials must be non-negative.
    let mut deltas: Vec<ExponentVector> = Vec::with_capacity(x.num_cells());
    for (src, &dst) in cell_map.iter().enumerate() {
        let total = multiplier.times(&x.cell(src).label);
        match total.checked_div(&y.cell(dst).label) {
            Some(delta) => deltas.push(delta),
            None => {
                return Err(Error::IncompatibleChainMap(format!(
                    "degree-infeasible at cell {src}: multiplied label {} is not divisible by image label {}",
                    x.var_names().monomial_string(&total),
                    y.var_names().monomial_string(&y.cell(dst).label),
                )))
            }
        }
    }
    // Sign propagation by dimension; the augmentation square forces +1 on
    // vertices, and each higher cell's sign is forced by its first facet.
    let mut eps = vec![0i64; x.num_cells()];
    for v in x.dim_range(0) {
        eps[v] = 1;
    }
    let top = x.top_dim().unwrap_or(0);
    for d in 1..=top {
        for f in x.dim_range(d) {
            let image = cell_map[f];
            if x.facets_of(f).len() != y.facets_of(image).len() {
                return Err(Error::IncompatibleChainMap(format!(
                    "support mismatch at cell {f}: its image has {} facets, it has {}",
                    y.facets_of(image).len(),
                    x.facets_of(f).len()
                )));
            }
            for (k, &(facet, s)) in x.facets_of(f).iter().enumerate() {
                let image_facet = cell_map[facet];
                let s_image = y
                    .facets_of(image)
                    .iter()
                    .find(|&&(t, _)| t == image_facet)
                    .map(|&(_, sig)| sig)
                    .ok_or_else(|| {
                        Error::IncompatibleChainMap(format!(
                            "cell map does not commute with the facet relation at cell {f}"
                        ))
                    })?;
                let forced = s as i64 * eps[facet] * s_image as i64;
                if k == 0 {
                    eps[f] = forced;
                } else if eps[f] != forced {
                    return Err(Error::IncompatibleChainMap(format!(
                        "sign propagation is inconsistent at cell {f}: \
                         its facets force contradictory orientations"
                    )));
                }
            }
        }
    }
    // Assemble the matrices module by module.
    let mut f0 = MonomialMatrix::zero(1, 1);
    f0.set(0, 0, Some((1, multiplier.clone())));
    let mut matrices = vec![f0];
    for d in 0..=top {
        let rows = y.dim_range(d);
        let cols = x.dim_range(d);
        let mut m = MonomialMatrix::zero(rows.len(), cols.len());
        for (j, src) in cols.clone().enumerate() {
            m.set(
                cell_map[src] - rows.start,
                j,
                Some((eps[src], deltas[src].clone())),
            );
        }
        matrices.push(m);
    }
    Ok(ChainMap { matrices })
}

/// The canonical chain map of a multiplication morphism: f_0 is
/// multiplication by the multiplier, and all higher entries are ±1 with
/// monomial 1.
pub fn build_chain_map(
    x: &LabeledComplex,
    y: &LabeledComplex,
    g: &MultiplicationMorphism,
) -> Result<ChainMap> {
    check_multiplication_morphism(x, y, g)?;
    chain_map_for_cell_map(x, y, &g.cell_map)
}

/// Does the chain map realize the morphism?
///
/// True iff f_0 is multiplication by the multiplier, each f_i's support is
/// exactly the cell map restricted to dimension i−1, and every commuting
/// square d′_i ∘ f_i = f_{i−1} ∘ d_i holds.
pub fn is_compatible_pair(
    x: &LabeledComplex,
    y: &LabeledComplex,
    g: &MultiplicationMorphism,
    f: &ChainMap,
) -> bool {
    if check_multiplication_morphism(x, y, g).is_err() {
        return false;
    }
    let fx = free_complex_from_labeled(x);
    let fy = free_complex_from_labeled(y);
    if f.matrices.len() != fx.modules.len() {
        return false;
    }
    for (i, m) in f.matrices.iter().enumerate() {
        let rows = if i < fy.modules.len() {
            fy.modules[i].len()
        } else {
            0
        };
        if m.rows() != rows || m.cols() != fx.modules[i].len() {
            return false;
        }
    }
    match f.matrices[0].get(0, 0) {
        Some((1, mon)) if *mon == g.multiplier => {}
        _ => return false,
    }
    // Support: f_i hits exactly the image of the cell map.
    let top = x.top_dim();
    if let Some(top) = top {
        for d in 0..=top {
            let rows = y.dim_range(d);
            let cols = x.dim_range(d);
            let m = &f.matrices[d + 1];
            for (j, src) in cols.clone().enumerate() {
                for r in 0..m.rows() {
                    let expected = g.cell_map[src] - rows.start;
                    match m.get(r, j) {
                        Some(_) if r != expected => return false,
                        None if r == expected => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    // Commuting squares, one per source differential.
    for i in 0..fx.differentials.len() {
        let lhs = match mat_mul(&fy.differentials[i], &f.matrices[i + 1]) {
            Some(p) => p,
            None => return false,
        };
        let rhs = match mat_mul(&f.matrices[i], &fx.differentials[i]) {
            Some(p) => p,
            None => return false,
        };
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Multiply monomial matrices over the integers; `None` when the terms of
/// some entry carry different monomials (inhomogeneous input).
fn mat_mul(a: &MonomialMatrix<i64>, b: &MonomialMatrix<i64>) -> Option<MonomialMatrix<i64>> {
    let mut out = MonomialMatrix::zero(a.rows(), b.cols());
    for r in 0..a.rows() {
        for c in 0..b.cols() {
            let mut acc: Option<(i64, ExponentVector)> = None;
            for k in 0..a.cols() {
                if let (Some((x, mx)), Some((y, my))) = (a.get(r, k), b.get(k, c)) {
                    let mon = mx.times(my);
                    acc = match acc {
                        None => Some((x * y, mon)),
                        Some((s, m)) => {
                            if m != mon {
                                return None;
                            }
                            Some((s + x * y, m))
                        }
                    };
                }
            }
            if let Some((s, m)) = acc {
                if s != 0 {
                    out.set(r, c, Some((s, m)));
                }
            }
        }
    }
    Some(out)
}

/// Push the labels of a complex forward along an injective variable map
/// into a ring with `target_n` variables (standard names); the cell
/// structure is unchanged.
pub fn rename_variables(
    x: &LabeledComplex,
    injection: &[usize],
    target_n: usize,
) -> Result<LabeledComplex> {
    let mut raw = RawComplex {
        var_names: VarNames::standard(target_n),
        ..Default::default()
    };
    for c in x.cells() {
        raw.cells.push(RawCell {
            dim: c.dim,
            vertices: c.vertices.clone(),
            label: if c.dim == 0 {
                Some(c.label.rename(injection, target_n)?)
            } else {
                None
            },
        });
    }
    for id in 0..x.num_cells() {
        for &(facet, sign) in x.facets_of(id) {
            raw.incidence.push((id, facet, sign));
        }
    }
    LabeledComplex::from_raw(raw)
}

/// Compose multiplication morphisms (`g2` after `g1`).
pub fn compose(
    g2: &MultiplicationMorphism,
    g1: &MultiplicationMorphism,
) -> Result<MultiplicationMorphism> {
    if g2.multiplier.len() != g1.multiplier.len() {
        return Err(Error::ComposeMismatch(format!(
            "multipliers live in {} and {} variables",
            g1.multiplier.len(),
            g2.multiplier.len()
        )));
    }
    let cell_map = g1
        .cell_map
        .iter()
        .map(|&mid| {
            g2.cell_map.get(mid).copied().ok_or_else(|| {
                Error::ComposeMismatch(format!(
                    "intermediate cell {mid} is outside the second morphism's source"
                ))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(MultiplicationMorphism {
        multiplier: g2.multiplier.times(&g1.multiplier),
        cell_map,
    })
}

/// A variable renaming together with the embedding it induces: the map of
/// an unrestricted family, connecting complexes over different rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenamedEmbedding {
    /// 0-based injection; variable `i` of the source is variable
    /// `injection[i]` of the target.
    pub injection: Vec<usize>,
    /// The multiplier-1 morphism from the renamed source into the target.
    pub morphism: MultiplicationMorphism,
}

/// Enumerate every injection of the source variables into the target
/// variables under which the renamed complex embeds into `y` by a
/// multiplier-1 multiplication morphism.
///
/// Injections are tried in lexicographic order; ones that send some vertex
/// label outside the target's vertex labels are skipped before any cell
/// matching.
pub fn find_renamed_embeddings(
    x: &LabeledComplex,
    y: &LabeledComplex,
) -> Result<Vec<RenamedEmbedding>> {
    fn rec(
        x: &LabeledComplex,
        y: &LabeledComplex,
        injection: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<RenamedEmbedding>,
    ) -> Result<()> {
        let m = y.num_vars();
        if injection.len() == x.num_vars() {
            let keeps_labels = x
                .cells()
                .iter()
                .filter(|c| c.dim == 0)
                .all(|c| match c.label.rename(injection, m) {
                    Ok(l) => y.vertex_id_by_label(&l).is_some(),
                    Err(_) => false,
                });
            if keeps_labels {
                let renamed = rename_variables(x, injection, m)?;
                for g in find_multiplication_morphisms(&renamed, y) {
                    if g.multiplier.is_one() {
                        out.push(RenamedEmbedding {
                            injection: injection.clone(),
                            morphism: g,
                        });
                    }
                }
            }
            return Ok(());
        }
        for v in 0..m {
            if used[v] {
                continue;
            }
            used[v] = true;
            injection.push(v);
            rec(x, y, injection, used, out)?;
            injection.pop();
            used[v] = false;
        }
        Ok(())
    }

    let mut out = Vec::new();
    if x.num_vars() > y.num_vars() {
        return Ok(out);
    }
    let mut injection = Vec::with_capacity(x.num_vars());
    let mut used = vec![false; y.num_vars()];
    rec(x, y, &mut injection, &mut used, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{parse_ideal, MonomialIdeal};
    use crate::subdivision::{build_arrangement_complex, ArrangementSpec, HyperplaneFamily};

    fn coordinate_complex(s: &str) -> (VarNames, LabeledComplex) {
        let (names, ideal) = parse_ideal(s).unwrap();
        let n = names.len();
        let families = (0..n)
            .map(|i| {
                let mut f = vec![0i64; n];
                f[i] = 1;
                HyperplaneFamily { functional: f }
            })
            .collect();
        let spec =
            ArrangementSpec::new(names.clone(), ideal.generators().to_vec(), families).unwrap();
        (names, build_arrangement_complex(&spec).unwrap())
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn multipliers(ms: &[MultiplicationMorphism], names: &VarNames) -> Vec<String> {
        ms.iter()
            .map(|g| names.monomial_string(&g.multiplier))
            .collect()
    }

    #[test]
    fn triangle_degree_step_has_exactly_the_variable_maps() {
        let (names, x1) = coordinate_complex("(x,y,z)");
        let (_, x2) = coordinate_complex("(x^2,xy,xz,y^2,yz,z^2)");
        let ms = find_multiplication_morphisms(&x1, &x2);
        assert_eq!(multipliers(&ms, &names), vec!["z", "y", "x"]);
        for g in &ms {
            assert!(check_multiplication_morphism(&x1, &x2, g).is_ok());
            let f = build_chain_map(&x1, &x2, g).unwrap();
            assert!(is_compatible_pair(&x1, &x2, g, &f));
            // Higher entries of a multiplication chain map are ±1·1.
            for m in &f.matrices[1..] {
                for (_, _, coeff, mon) in m.iter_entries() {
                    assert!(mon.is_one());
                    assert!(*coeff == 1 || *coeff == -1);
                }
            }
        }
    }

    #[test]
    fn square_degree_step_has_exactly_the_four_pair_products() {
        let (names, c1) = coordinate_complex("(xz,xw,yz,yw)");
        let (_, c2) = coordinate_complex("(x^2z^2,x^2zw,x^2w^2,xyz^2,xyzw,xyw^2,y^2z^2,y^2zw,y^2w^2)");
        let ms = find_multiplication_morphisms(&c1, &c2);
        let mut names_found = multipliers(&ms, &names);
        names_found.sort();
        assert_eq!(names_found, vec!["xw", "xz", "yw", "yz"]);
    }

    #[test]
    fn identity_morphism_gives_identity_chain_map() {
        let (_, x) = coordinate_complex("(xz,xw,yz,yw)");
        let ms = find_multiplication_morphisms(&x, &x);
        assert_eq!(ms.len(), 1);
        let id = &ms[0];
        assert!(id.multiplier.is_one());
        assert!(id.cell_map.iter().enumerate().all(|(i, &j)| i == j));
        let f = build_chain_map(&x, &x, id).unwrap();
        for (i, m) in f.matrices.iter().enumerate() {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    match m.get(r, c) {
                        Some((coeff, mon)) => {
                            assert_eq!(r, c, "matrix {i} must be diagonal");
                            assert_eq!(*coeff, 1);
                            if i > 0 {
                                assert!(mon.is_one());
                            }
                        }
                        None => assert_ne!(r, c),
                    }
                }
            }
        }
        assert!(is_compatible_pair(&x, &x, id, &f));
    }

    #[test]
    fn zero_chain_map_is_not_compatible() {
        let (_, x1) = coordinate_complex("(x,y,z)");
        let (_, x2) = coordinate_complex("(x^2,xy,xz,y^2,yz,z^2)");
        let g = &find_multiplication_morphisms(&x1, &x2)[0];
        let real = build_chain_map(&x1, &x2, g).unwrap();
        let zero = ChainMap {
            matrices: real
                .matrices
                .iter()
                .map(|m| MonomialMatrix::zero(m.rows(), m.cols()))
                .collect(),
        };
        assert!(!is_compatible_pair(&x1, &x2, g, &zero));
    }

    #[test]
    fn induced_label_map_multiplies_labels() {
        let (_, x1) = coordinate_complex("(x,y,z)");
        let (_, x2) = coordinate_complex("(x^2,xy,xz,y^2,yz,z^2)");
        let ms = find_multiplication_morphisms(&x1, &x2);
        let by_x = ms
            .iter()
            .find(|g| g.multiplier == ev(&[1, 0, 0]))
            .unwrap();
        let pairs = induced_label_map(&x1, by_x);
        assert_eq!(
            pairs,
            vec![
                (ev(&[0, 0, 1]), ev(&[1, 0, 1])),
                (ev(&[0, 1, 0]), ev(&[1, 1, 0])),
                (ev(&[1, 0, 0]), ev(&[2, 0, 0])),
            ]
        );
    }

    #[test]
    fn central_triangle_vertex_maps_admit_no_chain_map() {
        // Map the labels x ↦ xy, y ↦ yz, z ↦ xz onto the central triangle:
        // a perfectly good cellular map, but each vertex label is
        // multiplied by a *different* variable, so no single 1×1 matrix
        // f_0 can restrict to the label map — the compatibility definition
        // itself rules out a chain map. The two rotated variants fail the
        // same way.
        let (_, x1) = coordinate_complex("(x,y,z)");
        let (_, x2) = coordinate_complex("(x^2,xy,xz,y^2,yz,z^2)");
        let assignments: [[(ExponentVector, ExponentVector); 3]; 3] = [
            [
                (ev(&[1, 0, 0]), ev(&[1, 1, 0])), // x ↦ xy
                (ev(&[0, 1, 0]), ev(&[0, 1, 1])), // y ↦ yz
                (ev(&[0, 0, 1]), ev(&[1, 0, 1])), // z ↦ xz
            ],
            [
                (ev(&[1, 0, 0]), ev(&[0, 1, 1])), // x ↦ yz
                (ev(&[0, 1, 0]), ev(&[1, 0, 1])), // y ↦ xz
                (ev(&[0, 0, 1]), ev(&[1, 1, 0])), // z ↦ xy
            ],
            [
                (ev(&[1, 0, 0]), ev(&[1, 0, 1])), // x ↦ xz
                (ev(&[0, 1, 0]), ev(&[1, 1, 0])), // y ↦ xy
                (ev(&[0, 0, 1]), ev(&[0, 1, 1])), // z ↦ yz
            ],
        ];
        for images in &assignments {
            let mut cell_map = vec![usize::MAX; x1.num_cells()];
            for (src_label, dst_label) in images {
                cell_map[x1.vertex_id_by_label(src_label).unwrap()] =
                    x2.vertex_id_by_label(dst_label).unwrap();
            }
            for d in 1..=2 {
                for f in x1.dim_range(d) {
                    let mut image: Vec<usize> =
                        x1.cell(f).vertices.iter().map(|&v| cell_map[v]).collect();
                    image.sort_unstable();
                    cell_map[f] = x2.cell_by_vertices(d, &image).unwrap();
                }
            }
            let err = chain_map_for_cell_map(&x1, &x2, &cell_map).unwrap_err();
            match err {
                // Either no uniform multiplier exists, or some vertex
                // label does not even divide its image label.
                Error::IncompatibleChainMap(msg) => assert!(
                    msg.contains("single monomial") || msg.contains("does not divide"),
                    "unexpected failure reason: {msg}"
                ),
                other => panic!("expected an incompatible chain map, got {other:?}"),
            }
        }
    }

    #[test]
    fn renaming_pushes_labels_forward() {
        let (_, g1) = coordinate_complex("(xy,yz,zw)");
        let renamed = rename_variables(&g1, &[1, 2, 3, 4], 5).unwrap();
        let labels: Vec<ExponentVector> = renamed
            .dim_range(0)
            .map(|v| renamed.cell(v).label.clone())
            .collect();
        assert_eq!(
            labels,
            vec![
                ev(&[0, 0, 0, 1, 1]),
                ev(&[0, 0, 1, 1, 0]),
                ev(&[0, 1, 1, 0, 0]),
            ]
        );
        // The identity renaming is a no-op.
        let same = rename_variables(&g1, &[0, 1, 2, 3], 4).unwrap();
        assert_eq!(same.f_vector(), g1.f_vector());
        assert_eq!(
            same.cell(0).label,
            g1.cell(0).label
        );
        // Non-injective maps are rejected.
        assert!(matches!(
            rename_variables(&g1, &[0, 0, 1, 2], 4),
            Err(Error::BadRenaming)
        ));
    }

    #[test]
    fn renamed_path_embeds_by_multiplier_one() {
        let (_, p4) = coordinate_complex("(xy,yz,zw)");
        let (_, p5) = coordinate_complex("(xy,yz,zw,wt)");
        let renamed = rename_variables(&p4, &[1, 2, 3, 4], 5).unwrap();
        let p5_in_five = rename_variables(&p5, &[0, 1, 2, 3, 4], 5).unwrap();
        let ms = find_multiplication_morphisms(&renamed, &p5_in_five);
        assert!(ms.iter().any(|g| g.multiplier.is_one()));
    }

    #[test]
    fn renamed_embeddings_of_paths_are_the_four_subpath_maps() {
        let (_, p4) = coordinate_complex("(xy,yz,zw)");
        let (_, p5) = coordinate_complex("(xy,yz,zw,wt)");
        let found = find_renamed_embeddings(&p4, &p5).unwrap();
        let injections: Vec<Vec<usize>> =
            found.iter().map(|e| e.injection.clone()).collect();
        // Exactly the injections matching consecutive pairs to consecutive
        // pairs: the two shifts and their two reversals.
        assert_eq!(
            injections,
            vec![
                vec![0, 1, 2, 3],
                vec![1, 2, 3, 4],
                vec![3, 2, 1, 0],
                vec![4, 3, 2, 1],
            ]
        );
        for e in &found {
            assert!(e.morphism.multiplier.is_one());
            let renamed = rename_variables(&p4, &e.injection, 5).unwrap();
            check_multiplication_morphism(&renamed, &p5, &e.morphism).unwrap();
        }
    }

    #[test]
    fn renamed_embeddings_of_simplices_are_all_injections() {
        let (_, edge) = coordinate_complex("(x,y)");
        let (_, triangle) = coordinate_complex("(x,y,z)");
        let found = find_renamed_embeddings(&edge, &triangle).unwrap();
        // Any injection of two variables into three hits a face.
        assert_eq!(found.len(), 6);
        // Too many source variables: no injections at all.
        assert!(find_renamed_embeddings(&triangle, &edge)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn composition_multiplies_multipliers() {
        let (names, x1) = coordinate_complex("(x,y,z)");
        let (_, x2) = coordinate_complex("(x^2,xy,xz,y^2,yz,z^2)");
        let gens3 = MonomialIdeal::from_generators(
            3,
            vec![ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[0, 0, 1])],
        )
        .unwrap()
        .power(3);
        let spec = ArrangementSpec::new(
            names.clone(),
            gens3.generators().to_vec(),
            (0..3)
                .map(|i| {
                    let mut f = vec![0i64; 3];
                    f[i] = 1;
                    HyperplaneFamily { functional: f }
                })
                .collect(),
        )
        .unwrap();
        let x3 = build_arrangement_complex(&spec).unwrap();

        let step1 = find_multiplication_morphisms(&x1, &x2);
        let step2 = find_multiplication_morphisms(&x2, &x3);
        let direct = find_multiplication_morphisms(&x1, &x3);
        // Every composite of consecutive maps is found directly, and
        // every direct map is such a composite.
        let mut composite_multipliers = BTreeSet::new();
        for g2 in &step2 {
            for g1 in &step1 {
                let c = compose(g2, g1).unwrap();
                assert_eq!(c.multiplier, g2.multiplier.times(&g1.multiplier));
                composite_multipliers.insert(c.multiplier);
            }
        }
        let direct_multipliers: BTreeSet<ExponentVector> =
            direct.iter().map(|g| g.multiplier.clone()).collect();
        assert_eq!(composite_multipliers, direct_multipliers);
        assert_eq!(direct.len(), 6); // the six degree-2 monomials in x, y, z
    }

    #[test]
    fn composition_with_identity_is_identity() {
        let (_, x1) = coordinate_complex("(x,y,z)");
        let (_, x2) = coordinate_complex("(x^2,xy,xz,y^2,yz,z^2)");
        let id = &find_multiplication_morphisms(&x1, &x1)[0];
        let g = &find_multiplication_morphisms(&x1, &x2)[0];
        assert_eq!(&compose(g, id).unwrap(), g);
    }
}
