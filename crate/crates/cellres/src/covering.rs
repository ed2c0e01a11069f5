//! Covering checks between family members and finite-generation witnesses.
//!
//! A target complex is *covered* by earlier family members when every cell
//! is the image of a source cell under some morphism; `d`-covering asks the
//! same for the `d`-cells only. Cell identity across a morphism is by
//! vertex-label translation, so all checks here are exact label
//! arithmetic. [`syzygy_fg_witness`] turns a stable covering threshold into
//! an auditable finite-generation witness: a generator list plus a
//! verification table mapping every relevant cell back to a generator via a
//! composite morphism.
//!
//! Every "for all indices large enough" statement is reported as evidence
//! over a scanned window `[1, max_index]`, never as the infinite claim.

use serde::Serialize;

use crate::complex::LabeledComplex;
use crate::error::{Error, Result};
use crate::families::{Family, FamilyKind};
use crate::monomial::ExponentVector;
use crate::morphism::{find_multiplication_morphisms, find_renamed_embeddings, rename_variables};

/// A cell of one family member: (family index, cell id).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CellRef {
    pub index: usize,
    pub cell: usize,
}

/// How one target cell is reached: which source complex, which cell of it,
/// and the morphism data (multiplier, plus the variable injection for
/// unrestricted families).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveredBy {
    pub source_index: usize,
    pub source_cell: usize,
    pub multiplier: ExponentVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injection: Option<Vec<usize>>,
}

/// Per-cell assignment row of a covering report. `covered_by: None` marks
/// an UNCOVERED cell; `labels` lists the cell's vertex labels so failures
/// are auditable by hand.
#[derive(Clone, Debug, Serialize)]
pub struct CellCover {
    pub cell: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    pub covered_by: Option<CoveredBy>,
}

/// Result of a covering or d-covering check of one family member against a
/// set of earlier members.
#[derive(Clone, Debug, Serialize)]
pub struct CoveringReport {
    pub target_index: usize,
    pub source_indices: Vec<usize>,
    /// `Some(d)`: only the d-cells were checked; `None`: every cell.
    pub dimension: Option<usize>,
    pub covered: bool,
    pub assignments: Vec<CellCover>,
}

impl CoveringReport {
    pub fn uncovered(&self) -> Vec<&CellCover> {
        self.assignments
            .iter()
            .filter(|a| a.covered_by.is_none())
            .collect()
    }
}

/// A map from one family member into another with the source's own cell
/// ids: the multiplication morphisms for restricted families, the renamed
/// embeddings for unrestricted ones.
struct MapInto {
    multiplier: ExponentVector,
    injection: Option<Vec<usize>>,
    /// `cell_map[e]` = target cell id of source cell `e`.
    cell_map: Vec<usize>,
}

fn maps_between(
    family: &Family,
    source: &LabeledComplex,
    target: &LabeledComplex,
) -> Result<Vec<MapInto>> {
    if !family.is_unrestricted() {
        return Ok(find_multiplication_morphisms(source, target)
            .into_iter()
            .map(|g| MapInto {
                multiplier: g.multiplier,
                injection: None,
                cell_map: g.cell_map,
            })
            .collect());
    }
    let m = target.num_vars();
    let mut out = Vec::new();
    for e in find_renamed_embeddings(source, target)? {
        // The renamed complex re-canonicalizes cell ids; translate its cell
        // map back to the source's own ids through vertex labels.
        let renamed = rename_variables(source, &e.injection, m)?;
        let mut cell_map = Vec::with_capacity(source.num_cells());
        for c in source.cells() {
            let mut vs = c
                .vertices
                .iter()
                .map(|&v| {
                    let l = source.cell(v).label.rename(&e.injection, m)?;
                    renamed.vertex_id_by_label(&l).ok_or_else(|| {
                        Error::Input("renamed complex lost a vertex label".to_string())
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            vs.sort_unstable();
            let rid = renamed.cell_by_vertices(c.dim, &vs).ok_or_else(|| {
                Error::Input("renamed complex lost a cell".to_string())
            })?;
            cell_map.push(e.morphism.cell_map[rid]);
        }
        out.push(MapInto {
            multiplier: e.morphism.multiplier.clone(),
            injection: Some(e.injection.clone()),
            cell_map,
        });
    }
    Ok(out)
}

/// First-found covering assignment for every cell of the target complex:
/// sources ascending, morphisms in enumeration order, source cells
/// ascending.
fn coverage_assignments(
    family: &Family,
    target_index: usize,
    sources: &[usize],
) -> Result<(LabeledComplex, Vec<Option<CoveredBy>>)> {
    if target_index < 2 {
        return Err(Error::Input(
            "covering checks need a target index >= 2".to_string(),
        ));
    }
    let mut srcs = sources.to_vec();
    srcs.sort_unstable();
    srcs.dedup();
    if srcs.is_empty() {
        return Err(Error::Input("no source indices given".to_string()));
    }
    for &j in &srcs {
        if j < 1 || j >= target_index {
            return Err(Error::Input(format!(
                "source index {j} must lie strictly below the target index {target_index}"
            )));
        }
    }
    let target = family.complex(target_index)?;
    let mut assignments: Vec<Option<CoveredBy>> = vec![None; target.num_cells()];
    for &j in &srcs {
        let source = family.complex(j)?;
        for map in maps_between(family, &source, &target)? {
            for (e, &img) in map.cell_map.iter().enumerate() {
                if assignments[img].is_none() {
                    assignments[img] = Some(CoveredBy {
                        source_index: j,
                        source_cell: e,
                        multiplier: map.multiplier.clone(),
                        injection: map.injection.clone(),
                    });
                }
            }
        }
    }
    Ok((target, assignments))
}

fn vertex_label_strings(x: &LabeledComplex, cell: usize) -> Vec<String> {
    x.cell(cell)
        .vertices
        .iter()
        .map(|&v| x.var_names().monomial_string(&x.cell(v).label))
        .collect()
}

fn report_for_cells(
    target: &LabeledComplex,
    assignments: &[Option<CoveredBy>],
    cells: impl Iterator<Item = usize>,
    target_index: usize,
    sources: &[usize],
    dimension: Option<usize>,
) -> CoveringReport {
    let mut rows = Vec::new();
    for c in cells {
        rows.push(CellCover {
            cell: c,
            dim: target.cell(c).dim,
            labels: vertex_label_strings(target, c),
            covered_by: assignments[c].clone(),
        });
    }
    let mut source_indices = sources.to_vec();
    source_indices.sort_unstable();
    source_indices.dedup();
    CoveringReport {
        target_index,
        source_indices,
        dimension,
        covered: rows.iter().all(|r| r.covered_by.is_some()),
        assignments: rows,
    }
}

/// Check whether the d-cells of member `i` are all images of d-cells of the
/// given earlier members.
pub fn d_covering(
    family: &Family,
    i: usize,
    sources: &[usize],
    d: usize,
) -> Result<CoveringReport> {
    let (target, assignments) = coverage_assignments(family, i, sources)?;
    let range = if target.top_dim().is_some_and(|t| d <= t) {
        target.dim_range(d)
    } else {
        0..0
    };
    Ok(report_for_cells(
        &target,
        &assignments,
        range,
        i,
        sources,
        Some(d),
    ))
}

/// Check whether every cell of member `i` is an image of a cell of the
/// given earlier members (d-covering for every d at once).
pub fn full_covering(family: &Family, i: usize, sources: &[usize]) -> Result<CoveringReport> {
    let (target, assignments) = coverage_assignments(family, i, sources)?;
    let all = 0..target.num_cells();
    Ok(report_for_cells(&target, &assignments, all, i, sources, None))
}

/// A cell left uncovered at one index of a horizon scan.
#[derive(Clone, Debug, Serialize)]
pub struct UncoveredCell {
    pub index: usize,
    pub cell: usize,
    pub dim: usize,
    pub labels: Vec<String>,
}

/// One index of a horizon scan: was member `index` covered by all its
/// predecessors?
#[derive(Clone, Debug, Serialize)]
pub struct HorizonEntry {
    pub index: usize,
    pub covered: bool,
    pub uncovered: Vec<UncoveredCell>,
}

/// Scan result of [`covering_horizon`]: per-index coverage over
/// `2..=max_index` and the first index from which coverage holds through
/// the end of the window.
#[derive(Clone, Debug, Serialize)]
pub struct HorizonReport {
    pub family: String,
    pub max_index: usize,
    pub entries: Vec<HorizonEntry>,
    /// Smallest i₀ with every index in `[i₀, max_index]` covered; `None`
    /// when even the last scanned index is uncovered.
    pub threshold: Option<usize>,
    /// Set for the maximal-power family, whose recorded threshold claims
    /// disagree by one index; the scan reports computed values only.
    pub threshold_discrepancy_flagged: bool,
    pub notes: Vec<String>,
}

/// Scan `full_covering(i, {1..i})` for `i` in `2..=max_index` and report
/// the first stable threshold inside the window.
pub fn covering_horizon(family: &Family, max_index: usize) -> Result<HorizonReport> {
    if max_index < 2 {
        return Err(Error::Input(
            "covering_horizon needs max_index >= 2".to_string(),
        ));
    }
    let mut entries = Vec::new();
    let mut last_uncovered = None;
    for i in 2..=max_index {
        let sources: Vec<usize> = (1..i).collect();
        let (target, assignments) = coverage_assignments(family, i, &sources)?;
        let uncovered: Vec<UncoveredCell> = (0..target.num_cells())
            .filter(|&c| assignments[c].is_none())
            .map(|c| UncoveredCell {
                index: i,
                cell: c,
                dim: target.cell(c).dim,
                labels: vertex_label_strings(&target, c),
            })
            .collect();
        let covered = uncovered.is_empty();
        if !covered {
            last_uncovered = Some(i);
        }
        entries.push(HorizonEntry {
            index: i,
            covered,
            uncovered,
        });
    }
    let threshold = match last_uncovered {
        None => Some(2),
        Some(u) if u == max_index => None,
        Some(u) => Some(u + 1),
    };
    let mut notes = vec![format!(
        "finite-horizon evidence over indices 2..={max_index}; the scan proves \
         nothing about larger indices"
    )];
    let threshold_discrepancy_flagged = family.kind() == FamilyKind::Maximal;
    if threshold_discrepancy_flagged {
        notes.push(
            "known threshold statements for this family disagree by one index \
             (the general claim versus the three-variable case); the threshold \
             above is the computed value, not a quoted one"
                .to_string(),
        );
    }
    Ok(HorizonReport {
        family: family.kind().as_str().to_string(),
        max_index,
        entries,
        threshold,
        threshold_discrepancy_flagged,
        notes,
    })
}

/// One verified row of a finite-generation witness: the cell at
/// `(index, cell)` equals the image of generator `(root_index, root_cell)`
/// under multiplication by `multiplier` (composed with the variable
/// `injection` for unrestricted families).
#[derive(Clone, Debug, Serialize)]
pub struct WitnessRow {
    pub index: usize,
    pub cell: usize,
    pub labels: Vec<String>,
    pub root_index: usize,
    pub root_cell: usize,
    pub multiplier: ExponentVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injection: Option<Vec<usize>>,
}

/// Finite-generation witness for the degree-`t` syzygy data of a family:
/// a finite generator list plus a full verification table over the horizon,
/// or the uncovered cells that block one.
#[derive(Clone, Debug, Serialize)]
pub struct FGWitness {
    /// Syzygy dimension `t`; the covering below is of the (t−1)-cells.
    pub dimension: usize,
    pub horizon: usize,
    pub succeeded: bool,
    /// Smallest index from which (t−1)-covering holds through the horizon.
    pub threshold: Option<usize>,
    /// All (t−1)-cells of the members up to and including the threshold.
    pub generators: Vec<CellRef>,
    pub table: Vec<WitnessRow>,
    pub uncovered: Vec<UncoveredCell>,
    pub notes: Vec<String>,
}

#[derive(Clone)]
struct RootInfo {
    index: usize,
    cell: usize,
    multiplier: ExponentVector,
    injection: Option<Vec<usize>>,
}

/// Compose a covering anchor (source j → target i) with the root
/// information of the anchor's source cell (root r → j), yielding root → i.
fn compose_root(anchor: &CoveredBy, root: &RootInfo, target_vars: usize) -> Result<RootInfo> {
    let injection = match (&anchor.injection, &root.injection) {
        (None, None) => None,
        (Some(a), Some(b)) => Some(b.iter().map(|&v| a[v]).collect()),
        (Some(a), None) => Some(a.clone()),
        (None, Some(b)) => Some(b.clone()),
    };
    let pushed = match &anchor.injection {
        Some(a) => root.multiplier.rename(a, target_vars)?,
        None => root.multiplier.clone(),
    };
    Ok(RootInfo {
        index: root.index,
        cell: root.cell,
        multiplier: anchor.multiplier.times(&pushed),
        injection,
    })
}

/// Verify a table row by label translation: the root cell's vertex labels,
/// pushed through the injection and multiplied, must equal the target
/// cell's vertex labels.
fn row_translates(
    root_complex: &LabeledComplex,
    root: &RootInfo,
    target: &LabeledComplex,
    cell: usize,
) -> bool {
    let m = target.num_vars();
    let mut image: Vec<ExponentVector> = root_complex
        .cell(root.cell)
        .vertices
        .iter()
        .map(|&v| {
            let l = &root_complex.cell(v).label;
            let renamed = match &root.injection {
                Some(inj) => match l.rename(inj, m) {
                    Ok(r) => r,
                    Err(_) => return ExponentVector::one(m),
                },
                None => l.clone(),
            };
            renamed.times(&root.multiplier)
        })
        .collect();
    image.sort();
    let mut expected: Vec<ExponentVector> = target
        .cell(cell)
        .vertices
        .iter()
        .map(|&v| target.cell(v).label.clone())
        .collect();
    expected.sort();
    image == expected
}

/// Build a finite-generation witness for dimension `t` over `1..=horizon`.
///
/// Scans (t−1)-coverings; on a stable threshold the generator set is every
/// (t−1)-cell of the members up to the threshold, and the table re-roots
/// each later (t−1)-cell to a generator through composite morphisms,
/// verifying each row by label translation. Without a threshold the
/// witness fails and lists the uncovered cells.
pub fn syzygy_fg_witness(family: &Family, t: usize, horizon: usize) -> Result<FGWitness> {
    if t < 1 {
        return Err(Error::Input("syzygy dimension t must be >= 1".to_string()));
    }
    if horizon < 2 {
        return Err(Error::Input("the horizon must be >= 2".to_string()));
    }
    let d = t - 1;
    let mut complexes: Vec<LabeledComplex> = vec![family.complex(1)?];
    let mut anchors: Vec<Vec<Option<CoveredBy>>> = vec![Vec::new()];
    let mut last_uncovered = None;
    for i in 2..=horizon {
        let sources: Vec<usize> = (1..i).collect();
        let (target, assignments) = coverage_assignments(family, i, &sources)?;
        let covered = cells_of_dim(&target, d).all(|c| assignments[c].is_some());
        if !covered {
            last_uncovered = Some(i);
        }
        complexes.push(target);
        anchors.push(assignments);
    }
    let threshold = match last_uncovered {
        None => Some(2),
        Some(u) if u == horizon => None,
        Some(u) => Some(u + 1),
    };
    let mut notes = vec![format!(
        "finite-horizon evidence over indices 1..={horizon}; the witness makes \
         no claim about larger indices"
    )];

    let Some(t0) = threshold else {
        let mut uncovered = Vec::new();
        for (offset, assignments) in anchors.iter().enumerate().skip(1) {
            let i = offset + 1;
            let x = &complexes[offset];
            for c in cells_of_dim(x, d).filter(|&c| assignments[c].is_none()) {
                uncovered.push(UncoveredCell {
                    index: i,
                    cell: c,
                    dim: d,
                    labels: vertex_label_strings(x, c),
                });
            }
        }
        notes.push(format!(
            "no ({d})-covering threshold exists within the horizon; the \
             dimension-{t} syzygy data acquires new generators through the \
             last scanned index"
        ));
        return Ok(FGWitness {
            dimension: t,
            horizon,
            succeeded: false,
            threshold: None,
            generators: Vec::new(),
            table: Vec::new(),
            uncovered,
            notes,
        });
    };

    let mut generators = Vec::new();
    let mut table = Vec::new();
    // roots[i-1]: for each d-cell of member i (by offset within its dim
    // range), where it re-roots to.
    let mut roots: Vec<Vec<RootInfo>> = Vec::new();
    for i in 1..=horizon {
        let x = &complexes[i - 1];
        let range = if x.top_dim().is_some_and(|top| d <= top) {
            x.dim_range(d)
        } else {
            0..0
        };
        let mut level = Vec::new();
        for c in range.clone() {
            let root = if i <= t0 {
                generators.push(CellRef { index: i, cell: c });
                RootInfo {
                    index: i,
                    cell: c,
                    multiplier: ExponentVector::one(x.num_vars()),
                    injection: if family.is_unrestricted() {
                        Some((0..x.num_vars()).collect())
                    } else {
                        None
                    },
                }
            } else {
                let anchor = anchors[i - 1][c].clone().ok_or_else(|| {
                    Error::Input(format!(
                        "internal: cell {c} of member {i} lost its covering anchor"
                    ))
                })?;
                let j = anchor.source_index;
                if j <= t0 {
                    RootInfo {
                        index: j,
                        cell: anchor.source_cell,
                        multiplier: anchor.multiplier.clone(),
                        injection: anchor.injection.clone(),
                    }
                } else {
                    let source = &complexes[j - 1];
                    let offset = anchor.source_cell - source.dim_range(d).start;
                    compose_root(&anchor, &roots[j - 1][offset], x.num_vars())?
                }
            };
            if !row_translates(&complexes[root.index - 1], &root, x, c) {
                return Err(Error::Input(format!(
                    "internal: composite verification failed for cell {c} of member {i}"
                )));
            }
            table.push(WitnessRow {
                index: i,
                cell: c,
                labels: vertex_label_strings(x, c),
                root_index: root.index,
                root_cell: root.cell,
                multiplier: root.multiplier.clone(),
                injection: root.injection.clone(),
            });
            level.push(root);
        }
        roots.push(level);
    }
    notes.push(format!(
        "the table witnesses finite generation of the dimension-{t} module \
         data over the scanned window; the corresponding syzygy \
         subrepresentation inherits finite generation under the noetherian \
         hypothesis on the representation category"
    ));
    Ok(FGWitness {
        dimension: t,
        horizon,
        succeeded: true,
        threshold: Some(t0),
        generators,
        table,
        uncovered: Vec::new(),
        notes,
    })
}

fn cells_of_dim(x: &LabeledComplex, d: usize) -> impl Iterator<Item = usize> + '_ {
    if x.top_dim().is_some_and(|top| d <= top) {
        x.dim_range(d)
    } else {
        0..0
    }
}
