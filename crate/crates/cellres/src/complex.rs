//! Labeled regular CW complexes with signed facet incidence.
//!
//! A [`LabeledComplex`] stores cells of dimension ≥ 0; the empty cell of
//! dimension −1 (label 1) is implicit and participates only in the
//! augmented chain complex and the free-complex construction. Every cell
//! knows its vertex set and its monomial label, which for a non-vertex cell
//! must equal the lcm of its vertices' labels.
//!
//! Cells are kept in a canonical order — by (dimension, label, sorted
//! vertex labels) — so that every derived artifact (matrices, reports,
//! JSON) is byte-stable across runs.

use std::collections::{BTreeSet, HashMap};

use crate::field::{matrix_rank, Field, FieldChoice, PrimeField, Rationals};
use crate::monomial::{ExponentVector, VarNames};
use crate::{Error, Result};

/// A cell of dimension ≥ 0. Its id is its index in the owning complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub dim: usize,
    /// Ids of the vertex cells of this cell, sorted ascending.
    /// A vertex lists exactly itself.
    pub vertices: Vec<usize>,
    pub label: ExponentVector,
}

/// Pre-canonical input to [`LabeledComplex::from_raw`]: cells in any order
/// (ids = positions), incidence as (cell, facet, sign) triples.
#[derive(Clone, Debug, Default)]
pub struct RawComplex {
    pub var_names: VarNames,
    pub cells: Vec<RawCell>,
    pub incidence: Vec<(usize, usize, i32)>,
}

#[derive(Clone, Debug)]
pub struct RawCell {
    pub dim: usize,
    pub vertices: Vec<usize>,
    /// Required for vertices; for higher cells `None` means "lcm of the
    /// vertex labels".
    pub label: Option<ExponentVector>,
}

/// An immutable labeled complex in canonical cell order.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    var_names: VarNames,
    cells: Vec<Cell>,
    /// Per cell: its facets as (facet id, incidence sign), sorted by id.
    /// Empty for vertices (their unique facet, the empty cell, is implicit
    /// with sign +1).
    facets: Vec<Vec<(usize, i32)>>,
    /// First cell id of each dimension; `offsets[d]..offsets[d+1]` is the
    /// id range of the d-cells.
    offsets: Vec<usize>,
    vertex_by_label: HashMap<ExponentVector, usize>,
    cell_by_key: HashMap<(usize, Vec<usize>), usize>,
}

impl LabeledComplex {
    /// Canonicalize a raw complex: derive labels, sort cells by
    /// (dim, label, sorted vertex labels), remap ids, build lookup caches.
    ///
    /// Only structural defects are errors here (bad ids, missing vertex
    /// labels, a non-vertex listed as a vertex); semantic invariants are
    /// reported by [`LabeledComplex::validate`].
    pub fn from_raw(raw: RawComplex) -> Result<Self> {
        let n = raw.var_names.len();
        let ncells = raw.cells.len();
        for (c, f, s) in &raw.incidence {
            if *c >= ncells || *f >= ncells {
                return Err(Error::Input(format!(
                    "incidence ({c},{f}) references a missing cell"
                )));
            }
            if *s != 1 && *s != -1 {
                return Err(Error::Input(format!("incidence sign {s} is not ±1")));
            }
        }

        // First pass: vertex labels.
        let mut vertex_labels: HashMap<usize, ExponentVector> = HashMap::new();
        for (id, cell) in raw.cells.iter().enumerate() {
            if cell.dim == 0 {
                let label = cell.label.clone().ok_or_else(|| {
                    Error::Input(format!("vertex cell {id} has no label"))
                })?;
                if label.len() != n {
                    return Err(Error::LengthMismatch(label.len(), n));
                }
                vertex_labels.insert(id, label);
            }
        }
        // Second pass: full cells with derived labels.
        let mut cells: Vec<Cell> = Vec::with_capacity(ncells);
        for (id, cell) in raw.cells.iter().enumerate() {
            let vertices: Vec<usize> = if cell.dim == 0 {
                vec![id]
            } else {
                let mut vs: Vec<usize> = cell.vertices.clone();
                vs.sort_unstable();
                vs.dedup();
                if vs.is_empty() {
                    return Err(Error::Input(format!(
                        "cell {id} of dim {} has no vertices",
                        cell.dim
                    )));
                }
                for &v in &vs {
                    if !vertex_labels.contains_key(&v) {
                        return Err(Error::Input(format!(
                            "cell {id} lists {v} as a vertex, but {v} is not a 0-cell"
                        )));
                    }
                }
                vs
            };
            let derived = vertices
                .iter()
                .map(|v| &vertex_labels[v])
                .fold(ExponentVector::one(n), |acc, l| acc.lcm(l));
            let label = match &cell.label {
                Some(l) => {
                    if l.len() != n {
                        return Err(Error::LengthMismatch(l.len(), n));
                    }
                    l.clone()
                }
                None => derived,
            };
            cells.push(Cell {
                dim: cell.dim,
                vertices,
                label,
            });
        }

        // Canonical order: (dim, label, sorted vertex labels).
        let sort_key = |c: &Cell| -> (usize, ExponentVector, Vec<ExponentVector>) {
            let mut vls: Vec<ExponentVector> = c
                .vertices
                .iter()
                .map(|v| vertex_labels[v].clone())
                .collect();
            vls.sort();
            (c.dim, c.label.clone(), vls)
        };
        let mut order: Vec<usize> = (0..ncells).collect();
        order.sort_by_cached_key(|&i| sort_key(&cells[i]));
        let mut new_id = vec![0usize; ncells];
        for (pos, &old) in order.iter().enumerate() {
            new_id[old] = pos;
        }
        let mut sorted_cells: Vec<Cell> = order.iter().map(|&old| cells[old].clone()).collect();
        for cell in &mut sorted_cells {
            for v in &mut cell.vertices {
                *v = new_id[*v];
            }
            cell.vertices.sort_unstable();
        }

        let mut facets: Vec<Vec<(usize, i32)>> = vec![Vec::new(); ncells];
        let mut seen_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (c, f, s) in &raw.incidence {
            let (c, f) = (new_id[*c], new_id[*f]);
            if !seen_pairs.insert((c, f)) {
                return Err(Error::Input(format!(
                    "duplicate incidence entry for cell {c}, facet {f}"
                )));
            }
            facets[c].push((f, *s));
        }
        for list in &mut facets {
            list.sort_unstable_by_key(|&(f, _)| f);
        }

        let top = sorted_cells.iter().map(|c| c.dim).max();
        let mut offsets = Vec::new();
        if let Some(top) = top {
            offsets = vec![0usize; top + 2];
            for c in &sorted_cells {
                offsets[c.dim + 1] += 1;
            }
            for d in 0..=top {
                offsets[d + 1] += offsets[d];
            }
        }

        let mut vertex_by_label = HashMap::new();
        let mut cell_by_key = HashMap::new();
        for (id, c) in sorted_cells.iter().enumerate() {
            if c.dim == 0 {
                vertex_by_label.entry(c.label.clone()).or_insert(id);
            }
            cell_by_key
                .entry((c.dim, c.vertices.clone()))
                .or_insert(id);
        }

        Ok(LabeledComplex {
            var_names: raw.var_names,
            cells: sorted_cells,
            facets,
            offsets,
            vertex_by_label,
            cell_by_key,
        })
    }

    /// Build the full simplicial complex on the given faces: each face is a
    /// set of indices into `labels`, the cells are exactly the listed faces
    /// plus one vertex per label index that appears, and incidence signs
    /// are the alternating simplicial signs in label-sorted vertex order.
    pub(crate) fn simplicial_on_labels(
        var_names: VarNames,
        labels: &[ExponentVector],
        faces: &[Vec<usize>],
    ) -> Result<Self> {
        let mut raw = RawComplex {
            var_names,
            ..Default::default()
        };
        for l in labels {
            raw.cells.push(RawCell {
                dim: 0,
                vertices: Vec::new(),
                label: Some(l.clone()),
            });
        }
        // Sort each face by vertex label so facet signs follow positions.
        let canon = |f: &Vec<usize>| -> Vec<usize> {
            let mut v = f.clone();
            v.sort_by(|&a, &b| labels[a].cmp(&labels[b]).then(a.cmp(&b)));
            v.dedup();
            v
        };
        let mut id_of: HashMap<Vec<usize>, usize> = HashMap::new();
        for face in faces {
            let v = canon(face);
            if v.len() < 2 || id_of.contains_key(&v) {
                continue; // vertices are always present; faces are deduplicated
            }
            let id = raw.cells.len();
            id_of.insert(v.clone(), id);
            raw.cells.push(RawCell {
                dim: v.len() - 1,
                vertices: v,
                label: None,
            });
        }
        for (v, &id) in &id_of {
            for (pos, &drop) in v.iter().enumerate() {
                let mut sub = v.clone();
                sub.remove(pos);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let facet_id = if sub.len() == 1 {
                    sub[0]
                } else {
                    match id_of.get(&sub) {
                        Some(&f) => f,
                        None => {
                            return Err(Error::Input(format!(
                                "simplicial face list is not closed: missing facet of face {v:?} (drop {drop})"
                            )))
                        }
                    }
                };
                raw.incidence.push((id, facet_id, sign));
            }
        }
        Self::from_raw(raw)
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &VarNames {
        &self.var_names
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    /// Facets of a cell as (facet id, sign); empty for vertices.
    pub fn facets_of(&self, id: usize) -> &[(usize, i32)] {
        &self.facets[id]
    }

    /// Largest cell dimension, or `None` for the complex with only the
    /// implicit empty cell.
    pub fn top_dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim)
    }

    /// Id range of the d-cells (contiguous thanks to canonical order).
    pub fn dim_range(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.offsets.len() {
            return 0..0;
        }
        self.offsets[d]..self.offsets[d + 1]
    }

    pub fn vertex_id_by_label(&self, label: &ExponentVector) -> Option<usize> {
        self.vertex_by_label.get(label).copied()
    }

    /// Look up a cell by dimension and sorted vertex-id set.
    pub fn cell_by_vertices(&self, dim: usize, vertices: &[usize]) -> Option<usize> {
        self.cell_by_key
            .get(&(dim, vertices.to_vec()))
            .copied()
    }

    /// Cell counts per dimension, starting at dimension 0. The implicit
    /// empty cell is not counted.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.top_dim() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.dim_range(d).len()).collect(),
        }
    }

    /// Semantic diagnostics; the complex is valid iff the list is empty.
    ///
    /// Checks: labels are lcms of vertex labels; facet dimensions drop by
    /// exactly one and facet vertex sets are contained in the cell's;
    /// d-cells carry at least d+1 vertices; the signed incidence composes
    /// to zero (including the augmentation row); cells of equal dimension
    /// have distinct vertex sets.
    pub fn validate(&self) -> Vec<String> {
        let mut diags = Vec::new();
        for (id, c) in self.cells.iter().enumerate() {
            if c.dim > 0 {
                let lcm = c
                    .vertices
                    .iter()
                    .map(|&v| &self.cells[v].label)
                    .fold(ExponentVector::one(self.num_vars()), |acc, l| acc.lcm(l));
                if lcm != c.label {
                    diags.push(format!(
                        "cell {id}: label {} is not the lcm {} of its vertex labels",
                        self.var_names.monomial_string(&c.label),
                        self.var_names.monomial_string(&lcm)
                    ));
                }
                if c.vertices.len() < c.dim + 1 {
                    diags.push(format!(
                        "cell {id}: dimension {} but only {} vertices",
                        c.dim,
                        c.vertices.len()
                    ));
                }
            }
            for &(f, _) in &self.facets[id] {
                let fc = &self.cells[f];
                if c.dim == 0 || fc.dim + 1 != c.dim {
                    diags.push(format!(
                        "cell {id} (dim {}) has facet {f} of dim {}",
                        c.dim, fc.dim
                    ));
                    continue;
                }
                if !fc.vertices.iter().all(|v| c.vertices.contains(v)) {
                    diags.push(format!(
                        "facet {f} has vertices outside its cell {id}"
                    ));
                }
            }
        }
        // ∂∘∂ = 0 over the integers. Dimension-1 cells compose with the
        // augmentation (every vertex hits the empty cell with sign +1), so
        // their facet signs must sum to zero.
        for (id, c) in self.cells.iter().enumerate() {
            if c.dim == 1 {
                let s: i32 = self.facets[id].iter().map(|&(_, s)| s).sum();
                if s != 0 {
                    diags.push(format!("∂∂ ≠ 0 at cell {id} over the empty cell"));
                }
            } else if c.dim >= 2 {
                let mut acc: HashMap<usize, i32> = HashMap::new();
                for &(g, s1) in &self.facets[id] {
                    for &(h, s2) in &self.facets[g] {
                        *acc.entry(h).or_insert(0) += s1 * s2;
                    }
                }
                let mut bad: Vec<usize> =
                    acc.iter().filter(|(_, &v)| v != 0).map(|(&h, _)| h).collect();
                bad.sort_unstable();
                for h in bad {
                    diags.push(format!("∂∂ ≠ 0 at cell {id} over face {h}"));
                }
            }
        }
        // Regularity proxy: vertex sets determine cells within a dimension.
        let mut seen: HashMap<(usize, &[usize]), usize> = HashMap::new();
        for (id, c) in self.cells.iter().enumerate() {
            if let Some(prev) = seen.insert((c.dim, c.vertices.as_slice()), id) {
                diags.push(format!(
                    "cells {prev} and {id} share dimension {} and vertex set",
                    c.dim
                ));
            }
        }
        diags
    }

    /// The full subcomplex of cells whose label divides `b`.
    ///
    /// The implicit empty cell is always retained, so the result of
    /// restricting to b = 0 is the complex with no stored cells.
    pub fn restrict_leq(&self, b: &ExponentVector) -> Result<Self> {
        if b.len() != self.num_vars() {
            return Err(Error::LengthMismatch(b.len(), self.num_vars()));
        }
        let keep: Vec<bool> = self.cells.iter().map(|c| c.label.divides(b)).collect();
        self.subcomplex(&keep)
    }

    /// The full subcomplex on a cell mask (a kept cell keeps only kept
    /// facets; callers pass downward-closed masks).
    pub(crate) fn subcomplex(&self, keep: &[bool]) -> Result<Self> {
        let mut old_of_new = Vec::new();
        let mut new_of_old = vec![usize::MAX; self.cells.len()];
        for (id, k) in keep.iter().enumerate() {
            if *k {
                new_of_old[id] = old_of_new.len();
                old_of_new.push(id);
            }
        }
        let mut raw = RawComplex {
            var_names: self.var_names.clone(),
            ..Default::default()
        };
        for &old in &old_of_new {
            let c = &self.cells[old];
            raw.cells.push(RawCell {
                dim: c.dim,
                vertices: c
                    .vertices
                    .iter()
                    .map(|&v| new_of_old[v])
                    .collect(),
                label: Some(c.label.clone()),
            });
            for &(f, s) in &self.facets[old] {
                if keep[f] {
                    raw.incidence
                        .push((new_of_old[old], new_of_old[f], s));
                }
            }
        }
        // A downward-closed mask never leaves a dangling vertex reference.
        for cell in &raw.cells {
            if cell.vertices.iter().any(|&v| v == usize::MAX) {
                return Err(Error::Input(
                    "subcomplex mask drops a vertex of a kept cell".into(),
                ));
            }
        }
        Self::from_raw(raw)
    }

    /// Ranks of reduced homology of the augmented cellular chain complex,
    /// indexed from dimension −1 (so entry 0 is ĤH_{−1}, entry d+1 is ĤH_d).
    pub fn reduced_homology_ranks(&self, field: FieldChoice) -> Result<Vec<usize>> {
        match field {
            FieldChoice::Rational => Ok(self.homology_over(&Rationals)),
            FieldChoice::Prime(p) => Ok(self.homology_over(&PrimeField::new(p)?)),
        }
    }

    fn homology_over<F: Field>(&self, field: &F) -> Vec<usize> {
        let Some(top) = self.top_dim() else {
            // Only the empty cell: ĤH_{−1} has rank 1.
            return vec![1];
        };
        // boundary_rank[d] = rank of ∂_d : C_d → C_{d−1}, d = 0..=top.
        let mut boundary_rank = vec![0usize; top + 2];
        // Augmentation ∂_0: one row (the empty cell), all entries 1.
        let n0 = self.dim_range(0).len();
        if n0 > 0 {
            let row: Vec<F::Elem> = vec![field.one(); n0];
            boundary_rank[0] = matrix_rank(field, vec![row]);
        }
        for d in 1..=top {
            let rows = self.dim_range(d - 1);
            let cols = self.dim_range(d);
            if rows.is_empty() || cols.is_empty() {
                continue;
            }
            let mut m: Vec<Vec<F::Elem>> =
                vec![vec![field.zero(); cols.len()]; rows.len()];
            for (j, cell) in cols.clone().enumerate() {
                for &(f, s) in &self.facets[cell] {
                    m[f - rows.start][j] = field.from_int(s as i64);
                }
            }
            boundary_rank[d] = matrix_rank(field, m);
        }
        let mut ranks = vec![0usize; top + 2];
        ranks[0] = 1 - boundary_rank[0];
        for d in 0..=top {
            let nd = self.dim_range(d).len();
            ranks[d + 1] = nd - boundary_rank[d] - boundary_rank[d + 1];
        }
        ranks
    }

    /// True iff all reduced homology vanishes over the given field.
    pub fn is_acyclic(&self, field: FieldChoice) -> Result<bool> {
        Ok(self.reduced_homology_ranks(field)?.iter().all(|&r| r == 0))
    }
}
