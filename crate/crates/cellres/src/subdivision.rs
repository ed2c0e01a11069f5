//! Polyhedral complexes from lattice points cut by hyperplane families.
//!
//! The input is a set of lattice points (exponent vectors of ideal
//! generators) together with integer linear functionals; each functional h
//! contributes the whole family of hyperplanes `h·y = j` for integer
//! thresholds j ≥ 0. The output is the common refinement of the convex hull
//! of the points by all those hyperplanes, as a [`LabeledComplex`]: every
//! face becomes a cell identified by the vertex points it contains, labeled
//! by the lcm of their monomials, with geometrically computed incidence
//! signs.
//!
//! The construction assumes — and verifies — that the subdivision is
//! *vertex-supported*: every face of the refinement has all its polytope
//! vertices among the input points, and every input point is a 0-cell.
//! Verification is twofold: each input point must show up as a 0-face of
//! the computed face lattice, and the normalized volumes of the maximal
//! cells must add up exactly to the normalized volume of the whole
//! polytope. Either failure aborts the build, surfacing inputs whose
//! subdivision would silently need new vertices.
//!
//! Maximal cells are found by recursive halving: a region (tracked as the
//! subset of input points it contains) is split along any hyperplane with
//! points strictly on both sides, until no hyperplane cuts it. Faces of
//! each maximal cell are then enumerated geometrically — every supporting
//! hyperplane spanned by a subset of its vertices yields a facet, and the
//! face lattice is closed recursively. This captures boundary faces of the
//! polytope itself, which no input hyperplane may pass through.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::complex::{LabeledComplex, RawCell, RawComplex};
use crate::intlin::{det_sign, dot, nullspace, rank, rank_with_pivot_columns};
use crate::monomial::{ExponentVector, VarNames};
use crate::{Error, Result};

/// All hyperplanes `functional · y = j` for integer thresholds j ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneFamily {
    pub functional: Vec<i64>,
}

/// A vertex-supported subdivision problem: lattice points plus hyperplane
/// families.
#[derive(Clone, Debug)]
pub struct ArrangementSpec {
    pub var_names: VarNames,
    pub vertex_points: Vec<ExponentVector>,
    pub families: Vec<HyperplaneFamily>,
}

impl ArrangementSpec {
    pub fn new(
        var_names: VarNames,
        vertex_points: Vec<ExponentVector>,
        families: Vec<HyperplaneFamily>,
    ) -> Result<Self> {
        let n = var_names.len();
        if vertex_points.is_empty() {
            return Err(Error::BadArrangementSpec("no vertex points".into()));
        }
        let mut seen = BTreeSet::new();
        for p in &vertex_points {
            if p.len() != n {
                return Err(Error::LengthMismatch(p.len(), n));
            }
            if !seen.insert(p.clone()) {
                return Err(Error::BadArrangementSpec(format!(
                    "duplicate vertex point {p:?}"
                )));
            }
        }
        for f in &families {
            if f.functional.len() != n {
                return Err(Error::LengthMismatch(f.functional.len(), n));
            }
            if f.functional.iter().all(|&c| c == 0) {
                return Err(Error::BadArrangementSpec("zero functional".into()));
            }
        }
        Ok(ArrangementSpec {
            var_names,
            vertex_points,
            families,
        })
    }
}

/// Build the subdivision complex described by `spec`.
///
/// Errors with [`Error::NotVertexSupported`] if the true geometric
/// refinement would contain faces whose vertices are not input points.
pub fn build_arrangement_complex(spec: &ArrangementSpec) -> Result<LabeledComplex> {
    let points: Vec<Vec<i128>> = spec
        .vertex_points
        .iter()
        .map(|p| p.exponents().iter().map(|&e| e as i128).collect())
        .collect();
    let functionals: Vec<Vec<i128>> = spec
        .families
        .iter()
        .map(|f| f.functional.iter().map(|&c| c as i128).collect())
        .collect();

    let all: Vec<usize> = (0..points.len()).collect();
    let top_dim = affine_rank(&points, &all);
    let regions = bsp_regions(&points, &functionals);

    let mut table: BTreeMap<Vec<usize>, FaceInfo> = BTreeMap::new();
    for region in &regions {
        let d = affine_rank(&points, region);
        if d != top_dim {
            return Err(Error::NotVertexSupported(format!(
                "a maximal region on points {region:?} has affine dimension {d} < {top_dim}; \
                 a hyperplane must cut the polytope at non-vertex points"
            )));
        }
        face_lattice_into(&points, region, d, &mut table)?;
    }

    // Every input point must be a 0-cell of the subdivision.
    for (id, p) in spec.vertex_points.iter().enumerate() {
        if !table.contains_key(&vec![id]) {
            return Err(Error::NotVertexSupported(format!(
                "input point {} is not a vertex of the subdivision",
                spec.var_names.monomial_string(p)
            )));
        }
    }

    // Exact tiling check: maximal cells must fill the polytope.
    let proj_cols = {
        let diffs = difference_rows(&points, &all);
        rank_with_pivot_columns(&diffs).1
    };
    let projected: Vec<Vec<i128>> = points
        .iter()
        .map(|p| proj_cols.iter().map(|&c| p[c]).collect())
        .collect();
    let mut hull_table: BTreeMap<Vec<usize>, FaceInfo> = BTreeMap::new();
    face_lattice_into(&points, &all, top_dim, &mut hull_table)?;
    let hull_volume = pulling_volume(&projected, &all, &hull_table);
    let mut tiled_volume: i128 = 0;
    for region in &regions {
        tiled_volume += pulling_volume(&projected, region, &table);
    }
    if hull_volume != tiled_volume {
        return Err(Error::NotVertexSupported(format!(
            "maximal cells tile normalized volume {tiled_volume} of {hull_volume}; \
             the subdivision has faces with non-input vertices"
        )));
    }

    // Assemble the labeled complex. Raw vertex ids equal point ids.
    let mut raw = RawComplex {
        var_names: spec.var_names.clone(),
        ..Default::default()
    };
    for p in &spec.vertex_points {
        raw.cells.push(RawCell {
            dim: 0,
            vertices: Vec::new(),
            label: Some(p.clone()),
        });
    }
    let mut raw_id: HashMap<&[usize], usize> = HashMap::new();
    for (face, info) in &table {
        if info.dim == 0 {
            raw_id.insert(face.as_slice(), face[0]);
            continue;
        }
        raw_id.insert(face.as_slice(), raw.cells.len());
        raw.cells.push(RawCell {
            dim: info.dim,
            vertices: face.clone(),
            label: None,
        });
    }
    for (face, info) in &table {
        if info.dim == 0 {
            continue;
        }
        let cell_pts = label_sorted_points(&points, face);
        for facet in &info.facets {
            let facet_pts = label_sorted_points(&points, facet);
            let sign = incidence_sign(&cell_pts, &facet_pts)?;
            raw.incidence
                .push((raw_id[face.as_slice()], raw_id[facet.as_slice()], sign));
        }
    }

    let complex = LabeledComplex::from_raw(raw)?;
    let diags = complex.validate();
    if !diags.is_empty() {
        return Err(Error::InvalidComplex(diags));
    }
    Ok(complex)
}

/// Incidence sign of a facet within a cell, both given as their vertex
/// points **sorted by label** (lexicographically as coordinate vectors).
///
/// Each face is oriented by the lexicographically smallest affinely
/// independent spanning subset of its sorted vertices. The sign compares
/// the facet's own orientation against the orientation induced from the
/// cell with the outward normal placed last:
/// `sign(det[basis(G) | ν]) · sign(det[basis(F)])`, both determinants taken
/// in pivot coordinates of the cell's affine hull, where ν is the integer
/// outward vector `|F|·Σ(G) − |G|·Σ(F)`. The product is independent of the
/// pivot-coordinate choice.
pub fn incidence_sign(cell: &[Vec<i128>], facet: &[Vec<i128>]) -> Result<i32> {
    let n = cell
        .first()
        .ok_or_else(|| Error::Input("incidence_sign on an empty cell".into()))?
        .len();
    let all_cell: Vec<usize> = (0..cell.len()).collect();
    let all_facet: Vec<usize> = (0..facet.len()).collect();
    let d = affine_rank(cell, &all_cell);
    if d == 0 || affine_rank(facet, &all_facet) + 1 != d {
        return Err(Error::Input(
            "incidence_sign: facet dimension must be cell dimension minus one".into(),
        ));
    }
    let diffs = difference_rows(cell, &all_cell);
    let (r, cols) = rank_with_pivot_columns(&diffs);
    debug_assert_eq!(r, d);
    let proj = |p: &[i128]| -> Vec<i128> { cols.iter().map(|&c| p[c]).collect() };

    let basis_f = greedy_affine_basis(cell, d)?;
    let basis_g = greedy_affine_basis(facet, d - 1)?;

    let flen = cell.len() as i128;
    let glen = facet.len() as i128;
    let mut nu = vec![0i128; n];
    for g in facet {
        for i in 0..n {
            nu[i] += flen * g[i];
        }
    }
    for f in cell {
        for i in 0..n {
            nu[i] -= glen * f[i];
        }
    }

    let mat_f: Vec<Vec<i128>> = basis_f[1..]
        .iter()
        .map(|&i| {
            let row: Vec<i128> = (0..n).map(|k| cell[i][k] - cell[basis_f[0]][k]).collect();
            proj(&row)
        })
        .collect();
    let mut mat_g: Vec<Vec<i128>> = basis_g[1..]
        .iter()
        .map(|&i| {
            let row: Vec<i128> = (0..n)
                .map(|k| facet[i][k] - facet[basis_g[0]][k])
                .collect();
            proj(&row)
        })
        .collect();
    mat_g.push(proj(&nu));

    let sign = det_sign(&mat_g) * det_sign(&mat_f);
    if sign == 0 {
        return Err(Error::Input(
            "incidence_sign: degenerate orientation determinant".into(),
        ));
    }
    Ok(sign)
}

struct FaceInfo {
    dim: usize,
    /// Facets as sorted point-id sets.
    facets: BTreeSet<Vec<usize>>,
}

/// Recursive halving: split a region along any family hyperplane with
/// points strictly on both sides; a region nobody cuts is a maximal cell.
fn bsp_regions(points: &[Vec<i128>], functionals: &[Vec<i128>]) -> Vec<Vec<usize>> {
    let mut stack: Vec<Vec<usize>> = vec![(0..points.len()).collect()];
    let mut done: BTreeSet<Vec<usize>> = BTreeSet::new();
    while let Some(region) = stack.pop() {
        match find_cut(points, functionals, &region) {
            Some((below, above)) => {
                stack.push(below);
                stack.push(above);
            }
            None => {
                done.insert(region);
            }
        }
    }
    done.into_iter().collect()
}

fn find_cut(
    points: &[Vec<i128>],
    functionals: &[Vec<i128>],
    region: &[usize],
) -> Option<(Vec<usize>, Vec<usize>)> {
    for h in functionals {
        let vals: Vec<i128> = region.iter().map(|&p| dot(h, &points[p])).collect();
        let lo = *vals.iter().min().unwrap();
        let hi = *vals.iter().max().unwrap();
        // Thresholds are integers j ≥ 0; any j strictly inside the value
        // range has points strictly on both sides.
        let j = (lo + 1).max(0);
        if j <= hi - 1 {
            let below: Vec<usize> = region
                .iter()
                .zip(&vals)
                .filter(|(_, &v)| v <= j)
                .map(|(&p, _)| p)
                .collect();
            let above: Vec<usize> = region
                .iter()
                .zip(&vals)
                .filter(|(_, &v)| v >= j)
                .map(|(&p, _)| p)
                .collect();
            return Some((below, above));
        }
    }
    None
}

/// Insert `cell` (sorted point ids, affine dimension `dim`) and its whole
/// face lattice into `table`.
///
/// Facets are found by scanning all dim-element subsets that span a
/// hyperplane of the cell's affine hull: if all cell points lie weakly on
/// one side, the tight points form a facet.
fn face_lattice_into(
    points: &[Vec<i128>],
    cell: &[usize],
    dim: usize,
    table: &mut BTreeMap<Vec<usize>, FaceInfo>,
) -> Result<()> {
    if table.contains_key(cell) {
        return Ok(());
    }
    table.insert(
        cell.to_vec(),
        FaceInfo {
            dim,
            facets: BTreeSet::new(),
        },
    );
    if dim == 0 {
        return Ok(());
    }
    let n = points[0].len();
    let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for subset in k_subsets(cell, dim) {
        if affine_rank(points, &subset) != dim - 1 {
            continue;
        }
        // Affine functionals vanishing on the subset: kernel of (p, 1) rows.
        let m: Vec<Vec<i128>> = subset
            .iter()
            .map(|&p| {
                let mut row = points[p].clone();
                row.push(1);
                row
            })
            .collect();
        let kernel = nullspace(&m);
        // Restricted to the cell's hull the kernel is one-dimensional, so
        // evaluations of any non-vanishing kernel vector agree up to scale.
        let mut evals: Option<Vec<i128>> = None;
        for h in &kernel {
            let e: Vec<i128> = cell
                .iter()
                .map(|&p| dot(&h[..n], &points[p]) + h[n])
                .collect();
            if e.iter().any(|&v| v != 0) {
                evals = Some(e);
                break;
            }
        }
        let Some(evals) = evals else { continue };
        let has_pos = evals.iter().any(|&v| v > 0);
        let has_neg = evals.iter().any(|&v| v < 0);
        if has_pos && has_neg {
            continue; // not a supporting hyperplane
        }
        let tight: Vec<usize> = cell
            .iter()
            .zip(&evals)
            .filter(|(_, &v)| v == 0)
            .map(|(&p, _)| p)
            .collect();
        facets.insert(tight);
    }
    for facet in &facets {
        face_lattice_into(points, facet, dim - 1, table)?;
    }
    table.get_mut(cell).expect("inserted above").facets = facets;
    Ok(())
}

/// Normalized volume (sum of |det| over a pulling triangulation) of a face
/// in the given lattice, in the supplied projected coordinates.
fn pulling_volume(
    projected: &[Vec<i128>],
    face: &[usize],
    table: &BTreeMap<Vec<usize>, FaceInfo>,
) -> i128 {
    let mut total = 0i128;
    for simplex in pulling_simplices(face, table) {
        let rows: Vec<Vec<i128>> = simplex[1..]
            .iter()
            .map(|&p| {
                (0..projected[p].len())
                    .map(|k| projected[p][k] - projected[simplex[0]][k])
                    .collect()
            })
            .collect();
        total += crate::intlin::det(&rows).abs();
    }
    total
}

/// Pulling triangulation: cone the smallest vertex of each face over the
/// triangulations of the facets that avoid it.
fn pulling_simplices(face: &[usize], table: &BTreeMap<Vec<usize>, FaceInfo>) -> Vec<Vec<usize>> {
    let info = &table[face];
    if info.dim == 0 {
        return vec![face.to_vec()];
    }
    let v = face[0];
    let mut out = Vec::new();
    for facet in &info.facets {
        if facet.contains(&v) {
            continue;
        }
        for mut simplex in pulling_simplices(facet, table) {
            simplex.insert(0, v);
            out.push(simplex);
        }
    }
    out
}

fn difference_rows(points: &[Vec<i128>], ids: &[usize]) -> Vec<Vec<i128>> {
    if ids.is_empty() {
        return Vec::new();
    }
    let base = &points[ids[0]];
    ids[1..]
        .iter()
        .map(|&p| (0..base.len()).map(|k| points[p][k] - base[k]).collect())
        .collect()
}

fn affine_rank(points: &[Vec<i128>], ids: &[usize]) -> usize {
    rank(&difference_rows(points, ids))
}

/// First points (in the given order) whose affine rank reaches `target`:
/// the lexicographically smallest affinely independent spanning subset.
fn greedy_affine_basis(points: &[Vec<i128>], target: usize) -> Result<Vec<usize>> {
    let mut chosen = vec![0usize];
    for i in 1..points.len() {
        if chosen.len() == target + 1 {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(i);
        if affine_rank(points, &trial) == trial.len() - 1 {
            chosen = trial;
        }
    }
    if chosen.len() != target + 1 {
        return Err(Error::Input(
            "affinely dependent point set where a spanning basis was required".into(),
        ));
    }
    Ok(chosen)
}

fn label_sorted_points(points: &[Vec<i128>], ids: &[usize]) -> Vec<Vec<i128>> {
    let mut pts: Vec<Vec<i128>> = ids.iter().map(|&p| points[p].clone()).collect();
    pts.sort();
    pts
}

fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=items.len().saturating_sub(needed) {
            current.push(items[i]);
            rec(items, k, i + 1, current, out);
            current.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut current, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldChoice;
    use crate::monomial::MonomialIdeal;

    fn coordinate_spec(n: usize, gens: &MonomialIdeal) -> ArrangementSpec {
        let families = (0..n)
            .map(|i| {
                let mut f = vec![0i64; n];
                f[i] = 1;
                HyperplaneFamily { functional: f }
            })
            .collect();
        ArrangementSpec::new(
            VarNames::standard(n),
            gens.generators().to_vec(),
            families,
        )
        .unwrap()
    }

    fn powers_of_max_ideal(n: usize, k: usize) -> MonomialIdeal {
        let vars: Vec<ExponentVector> = (0..n)
            .map(|i| {
                let mut e = vec![0u32; n];
                e[i] = 1;
                ExponentVector::new(e)
            })
            .collect();
        let ideal = MonomialIdeal::from_generators(n, vars).unwrap();
        ideal.power(k)
    }

    #[test]
    fn degree_one_simplex_in_three_vars() {
        let spec = coordinate_spec(3, &powers_of_max_ideal(3, 1));
        let x = build_arrangement_complex(&spec).unwrap();
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
        assert_eq!(x.validate(), Vec::<String>::new());
    }

    #[test]
    fn degree_two_triangle_subdivision() {
        let spec = coordinate_spec(3, &powers_of_max_ideal(3, 2));
        let x = build_arrangement_complex(&spec).unwrap();
        assert_eq!(x.f_vector(), vec![6, 9, 4]);
        // The central 2-cell spans xy, xz, yz; its label is the lcm xyz.
        let central = x
            .dim_range(2)
            .find(|&c| x.cell(c).label == ExponentVector::new(vec![1, 1, 1]))
            .expect("central triangle present");
        assert_eq!(x.cell(central).vertices.len(), 3);
        assert!(x.is_acyclic(FieldChoice::Rational).unwrap());
    }

    #[test]
    fn degree_k_triangle_counts() {
        // (k+1)(k+2)/2 vertices and k² top cells.
        for k in 1..=4usize {
            let spec = coordinate_spec(3, &powers_of_max_ideal(3, k));
            let x = build_arrangement_complex(&spec).unwrap();
            let f = x.f_vector();
            assert_eq!(f[0], (k + 1) * (k + 2) / 2);
            assert_eq!(f[2], k * k);
            assert_eq!(x.validate(), Vec::<String>::new());
        }
    }

    #[test]
    fn unit_square_from_paired_variables() {
        // Generators xz, xw, yz, yw over (x,y | z,w).
        let gens = MonomialIdeal::from_generators(
            4,
            vec![
                ExponentVector::new(vec![1, 0, 1, 0]),
                ExponentVector::new(vec![1, 0, 0, 1]),
                ExponentVector::new(vec![0, 1, 1, 0]),
                ExponentVector::new(vec![0, 1, 0, 1]),
            ],
        )
        .unwrap();
        let spec = coordinate_spec(4, &gens);
        let x = build_arrangement_complex(&spec).unwrap();
        assert_eq!(x.f_vector(), vec![4, 4, 1]);
        let top = x.dim_range(2).start;
        assert_eq!(x.cell(top).label, ExponentVector::new(vec![1, 1, 1, 1]));
    }

    #[test]
    fn squared_square_subdivides_into_four() {
        let gens = MonomialIdeal::from_generators(
            4,
            vec![
                ExponentVector::new(vec![1, 0, 1, 0]),
                ExponentVector::new(vec![1, 0, 0, 1]),
                ExponentVector::new(vec![0, 1, 1, 0]),
                ExponentVector::new(vec![0, 1, 0, 1]),
            ],
        )
        .unwrap()
        .power(2);
        let spec = coordinate_spec(4, &gens);
        let x = build_arrangement_complex(&spec).unwrap();
        assert_eq!(x.f_vector(), vec![9, 12, 4]);
        assert!(x.is_acyclic(FieldChoice::Rational).unwrap());
    }

    #[test]
    fn path_triangle_keeps_boundary_edges() {
        // Exponent vectors of xy, yz, zw in four variables: a triangle none
        // of whose edges lies on a coordinate hyperplane level ≠ constant…
        // in particular the edge {xy, zw} is cut out by no input
        // hyperplane and must still be enumerated.
        let pts = vec![
            ExponentVector::new(vec![1, 1, 0, 0]),
            ExponentVector::new(vec![0, 1, 1, 0]),
            ExponentVector::new(vec![0, 0, 1, 1]),
        ];
        let spec = ArrangementSpec::new(
            VarNames::standard(4),
            pts,
            (0..4)
                .map(|i| {
                    let mut f = vec![0i64; 4];
                    f[i] = 1;
                    HyperplaneFamily { functional: f }
                })
                .collect(),
        )
        .unwrap();
        let x = build_arrangement_complex(&spec).unwrap();
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
        assert_eq!(x.validate(), Vec::<String>::new());
    }

    #[test]
    fn non_vertex_cut_is_rejected() {
        // Points 0 and 2 on a line: the hyperplane y = 1 cuts the segment
        // at the non-input point 1.
        let spec = ArrangementSpec::new(
            VarNames::standard(1),
            vec![
                ExponentVector::new(vec![0]),
                ExponentVector::new(vec![2]),
            ],
            vec![HyperplaneFamily { functional: vec![1] }],
        )
        .unwrap();
        let err = build_arrangement_complex(&spec).unwrap_err();
        assert!(matches!(err, Error::NotVertexSupported(_)));
    }

    #[test]
    fn single_point_builds_a_point() {
        let spec = ArrangementSpec::new(
            VarNames::standard(2),
            vec![ExponentVector::new(vec![1, 1])],
            vec![HyperplaneFamily {
                functional: vec![1, 0],
            }],
        )
        .unwrap();
        let x = build_arrangement_complex(&spec).unwrap();
        assert_eq!(x.f_vector(), vec![1]);
    }

    #[test]
    fn edge_orientation_points_to_larger_label() {
        let v0 = vec![0i128, 0];
        let v1 = vec![1i128, 0];
        let cell = vec![v0.clone(), v1.clone()];
        assert_eq!(incidence_sign(&cell, &[v1.clone()]).unwrap(), 1);
        assert_eq!(incidence_sign(&cell, &[v0.clone()]).unwrap(), -1);
    }

    #[test]
    fn three_dim_cube_of_paired_variables() {
        // Pairing (x,y)(z,w)(u,v): 8 generators, a genuine 3-cube.
        let mut gens = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let mut e = vec![0u32; 6];
                    e[a] = 1;
                    e[2 + b] = 1;
                    e[4 + c] = 1;
                    gens.push(ExponentVector::new(e));
                }
            }
        }
        let spec = coordinate_spec(6, &MonomialIdeal::from_generators(6, gens).unwrap());
        let x = build_arrangement_complex(&spec).unwrap();
        assert_eq!(x.f_vector(), vec![8, 12, 6, 1]);
        assert_eq!(x.validate(), Vec::<String>::new());
        assert!(x.is_acyclic(FieldChoice::Prime(32003)).unwrap());
    }
}
