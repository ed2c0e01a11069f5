//! JSON interchange documents and canonical (de)serialization.
//!
//! Every document type mirrors one library type field-for-field in a
//! stable order so that repeated exports of the same object are
//! byte-identical. Imports go through the owning type's constructor and
//! validator: a complex that parses but fails `validate` (wrong labels,
//! ∂∘∂ ≠ 0, missing faces) is rejected, not repaired.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::complex::{LabeledComplex, RawCell, RawComplex};
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, VarNames};
use crate::morphism::MultiplicationMorphism;
use crate::resolution::{FreeComplex, MonomialMatrix};
use crate::subdivision::{ArrangementSpec, HyperplaneFamily};

/// Pretty-printed JSON with a trailing newline; the only serializer used
/// for report and interchange output.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, canonical_json(value)?)?;
    Ok(())
}

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// One cell of a [`ComplexDoc`]; `id`s must form `0..cells.len()`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellDoc {
    pub id: usize,
    pub dim: usize,
    pub vertices: Vec<usize>,
    pub label: ExponentVector,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IncidenceDoc {
    pub cell: usize,
    pub facet: usize,
    pub sign: i32,
}

/// Interchange form of a labeled complex. The empty cell is implicit and
/// never serialized; vertex incidences to it are likewise implicit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub variables: Vec<String>,
    pub cells: Vec<CellDoc>,
    pub incidence: Vec<IncidenceDoc>,
}

pub fn complex_to_doc(x: &LabeledComplex) -> ComplexDoc {
    let cells = x
        .cells()
        .iter()
        .enumerate()
        .map(|(id, c)| CellDoc {
            id,
            dim: c.dim,
            vertices: c.vertices.clone(),
            label: c.label.clone(),
        })
        .collect();
    let mut incidence = Vec::new();
    for id in 0..x.num_cells() {
        for &(facet, sign) in x.facets_of(id) {
            incidence.push(IncidenceDoc {
                cell: id,
                facet,
                sign,
            });
        }
    }
    ComplexDoc {
        variables: x.var_names().names().to_vec(),
        cells,
        incidence,
    }
}

pub fn complex_from_doc(doc: &ComplexDoc) -> Result<LabeledComplex> {
    let ncells = doc.cells.len();
    let mut raw_cells: Vec<Option<RawCell>> = vec![None; ncells];
    for cell in &doc.cells {
        if cell.id >= ncells {
            return Err(Error::Input(format!(
                "cell id {} outside 0..{ncells}",
                cell.id
            )));
        }
        if raw_cells[cell.id].is_some() {
            return Err(Error::Input(format!("duplicate cell id {}", cell.id)));
        }
        raw_cells[cell.id] = Some(RawCell {
            dim: cell.dim,
            vertices: cell.vertices.clone(),
            label: Some(cell.label.clone()),
        });
    }
    let raw = RawComplex {
        var_names: VarNames::from_names(doc.variables.clone()),
        cells: raw_cells.into_iter().map(|c| c.unwrap()).collect(),
        incidence: doc
            .incidence
            .iter()
            .map(|i| (i.cell, i.facet, i.sign))
            .collect(),
    };
    let x = LabeledComplex::from_raw(raw)?;
    let diags = x.validate();
    if !diags.is_empty() {
        return Err(Error::InvalidComplex(diags));
    }
    Ok(x)
}

/// Export a complex to canonical JSON.
pub fn export_complex(x: &LabeledComplex) -> Result<String> {
    canonical_json(&complex_to_doc(x))
}

/// Import a complex from JSON, canonicalize, and validate.
pub fn import_complex(json: &str) -> Result<LabeledComplex> {
    complex_from_doc(&serde_json::from_str(json)?)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctionalDoc {
    pub functional: Vec<i64>,
}

/// Interchange form of a subdivision problem: lattice points plus one
/// hyperplane family per functional (all integer levels implied).
/// Variable names are positional, so they are not stored.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementDoc {
    pub vertices: Vec<Vec<u32>>,
    pub families: Vec<FunctionalDoc>,
}

pub fn arrangement_to_doc(spec: &ArrangementSpec) -> ArrangementDoc {
    ArrangementDoc {
        vertices: spec
            .vertex_points
            .iter()
            .map(|p| p.exponents().to_vec())
            .collect(),
        families: spec
            .families
            .iter()
            .map(|f| FunctionalDoc {
                functional: f.functional.clone(),
            })
            .collect(),
    }
}

pub fn arrangement_from_doc(doc: &ArrangementDoc) -> Result<ArrangementSpec> {
    let first = doc
        .vertices
        .first()
        .ok_or_else(|| Error::BadArrangementSpec("no vertex points".to_string()))?;
    let n = first.len();
    ArrangementSpec::new(
        VarNames::standard(n),
        doc.vertices
            .iter()
            .map(|v| ExponentVector::new(v.clone()))
            .collect(),
        doc.families
            .iter()
            .map(|f| HyperplaneFamily {
                functional: f.functional.clone(),
            })
            .collect(),
    )
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixEntryDoc {
    pub row: usize,
    pub col: usize,
    pub coeff: i64,
    pub monomial: ExponentVector,
}

/// Interchange form of an integer free complex; differential `i` has shape
/// `modules[i].len() × modules[i+1].len()`, entries sorted by (row, col).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FreeComplexDoc {
    pub modules: Vec<Vec<ExponentVector>>,
    pub differentials: Vec<Vec<MatrixEntryDoc>>,
}

pub fn free_complex_to_doc(f: &FreeComplex<i64>) -> FreeComplexDoc {
    let differentials = f
        .differentials
        .iter()
        .map(|d| {
            let mut entries: Vec<MatrixEntryDoc> = d
                .iter_entries()
                .map(|(row, col, coeff, monomial)| MatrixEntryDoc {
                    row,
                    col,
                    coeff: *coeff,
                    monomial: monomial.clone(),
                })
                .collect();
            entries.sort_by_key(|e| (e.row, e.col));
            entries
        })
        .collect();
    FreeComplexDoc {
        modules: f.modules.clone(),
        differentials,
    }
}

pub fn free_complex_from_doc(doc: &FreeComplexDoc) -> Result<FreeComplex<i64>> {
    if doc.differentials.len() + 1 != doc.modules.len() {
        return Err(Error::Input(format!(
            "{} modules need {} differentials, found {}",
            doc.modules.len(),
            doc.modules.len().saturating_sub(1),
            doc.differentials.len()
        )));
    }
    let mut differentials = Vec::new();
    for (i, entries) in doc.differentials.iter().enumerate() {
        let rows = doc.modules[i].len();
        let cols = doc.modules[i + 1].len();
        let mut m = MonomialMatrix::zero(rows, cols);
        for e in entries {
            if e.row >= rows || e.col >= cols {
                return Err(Error::Input(format!(
                    "differential {i} entry ({},{}) outside {rows}x{cols}",
                    e.row, e.col
                )));
            }
            if m.get(e.row, e.col).is_some() {
                return Err(Error::Input(format!(
                    "differential {i} entry ({},{}) is duplicated",
                    e.row, e.col
                )));
            }
            m.set(e.row, e.col, Some((e.coeff, e.monomial.clone())));
        }
        differentials.push(m);
    }
    let f = FreeComplex {
        modules: doc.modules.clone(),
        differentials,
    };
    let diags = f.validate();
    if !diags.is_empty() {
        return Err(Error::InvalidComplex(diags));
    }
    Ok(f)
}

/// Interchange form of a multiplication morphism; the cell map is stored
/// as explicit `[source, target]` pairs covering every source cell.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub multiplier: ExponentVector,
    pub cell_map: Vec<(usize, usize)>,
}

pub fn morphism_to_doc(g: &MultiplicationMorphism) -> MorphismDoc {
    MorphismDoc {
        multiplier: g.multiplier.clone(),
        cell_map: g.cell_map.iter().copied().enumerate().collect(),
    }
}

pub fn morphism_from_doc(doc: &MorphismDoc) -> Result<MultiplicationMorphism> {
    let k = doc.cell_map.len();
    let mut cell_map: Vec<Option<usize>> = vec![None; k];
    for &(src, dst) in &doc.cell_map {
        if src >= k {
            return Err(Error::Input(format!(
                "cell map source {src} outside 0..{k}"
            )));
        }
        if cell_map[src].is_some() {
            return Err(Error::Input(format!("cell map source {src} is duplicated")));
        }
        cell_map[src] = Some(dst);
    }
    Ok(MultiplicationMorphism {
        multiplier: doc.multiplier.clone(),
        cell_map: cell_map.into_iter().map(|d| d.unwrap()).collect(),
    })
}
