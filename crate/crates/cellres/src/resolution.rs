//! Cellular free complexes: acyclicity, minimality, minimalization, Betti
//! numbers, and syzygy generator degrees.
//!
//! A labeled complex X gives a complex of free multigraded modules: one
//! generator per cell (the empty cell gives the rank-1 module in degree 0),
//! with differential entries `sign(G,F)·x^{a_F − a_G}`. Whether that complex
//! resolves S/I is a purely topological condition — every degree-restricted
//! subcomplex X_⪯b must be acyclic over the coefficient field — and only
//! degrees b in the lcm lattice of the vertex labels need checking, since
//! restrictions change only at lattice joins.
//!
//! Minimalization repeatedly cancels unit entries (monomial 1, invertible
//! coefficient) through a change of basis that removes one generator from
//! each of two consecutive modules. The cancellation order is fixed — first
//! unit in row-major order of the lowest-index differential — so results
//! are deterministic; the resulting ranks are basis-independent. The Betti
//! numbers of an ideal are computed by minimalizing the Taylor complex,
//! which doubles as an independent oracle for every cellular resolution:
//! both must minimalize to the same ranks.

use std::fmt;

use crate::complex::LabeledComplex;
use crate::field::{with_field, Field, FieldChoice};
use crate::monomial::{lcm_lattice, ExponentVector, MonomialIdeal, VarNames};
use crate::{Error, Result};

/// Generator count beyond which Taylor complexes are refused (2^g cells).
pub const TAYLOR_GENERATOR_LIMIT: usize = 16;
/// Generator count beyond which Betti/syzygy computations are refused.
pub const BETTI_GENERATOR_LIMIT: usize = 12;

/// A matrix whose entries are coefficient–monomial pairs (zero = absent).
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialMatrix<C> {
    rows: usize,
    cols: usize,
    entries: Vec<Option<(C, ExponentVector)>>,
}

impl<C: Clone> MonomialMatrix<C> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MonomialMatrix {
            rows,
            cols,
            entries: vec![None; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&(C, ExponentVector)> {
        self.entries[r * self.cols + c].as_ref()
    }

    pub fn set(&mut self, r: usize, c: usize, entry: Option<(C, ExponentVector)>) {
        self.entries[r * self.cols + c] = entry;
    }

    /// All nonzero entries as (row, col, coefficient, monomial).
    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, &C, &ExponentVector)> {
        self.entries.iter().enumerate().filter_map(move |(i, e)| {
            e.as_ref()
                .map(|(c, m)| (i / self.cols, i % self.cols, c, m))
        })
    }

    fn remove_row(&mut self, r: usize) {
        let start = r * self.cols;
        self.entries.drain(start..start + self.cols);
        self.rows -= 1;
    }

    fn remove_col(&mut self, c: usize) {
        let mut out = Vec::with_capacity(self.rows * (self.cols - 1));
        for r in 0..self.rows {
            for j in 0..self.cols {
                if j != c {
                    out.push(self.entries[r * self.cols + j].take());
                }
            }
        }
        self.entries = out;
        self.cols -= 1;
    }
}

/// A complex of free multigraded modules with monomial matrices.
///
/// `modules[i]` lists the generator degrees of the i-th module;
/// `differentials[i]` maps module i+1 to module i.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeComplex<C> {
    pub modules: Vec<Vec<ExponentVector>>,
    pub differentials: Vec<MonomialMatrix<C>>,
}

impl<C: Clone> FreeComplex<C> {
    /// Module ranks β_0, β_1, …
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(Vec::len).collect()
    }
}

impl FreeComplex<i64> {
    /// Reinterpret integer coefficients in a field; entries that become
    /// zero (e.g. multiples of the characteristic) are dropped.
    pub fn to_field<Fd: Field>(&self, field: &Fd) -> FreeComplex<Fd::Elem> {
        let differentials = self
            .differentials
            .iter()
            .map(|d| {
                let mut out = MonomialMatrix::zero(d.rows(), d.cols());
                for (r, c, coeff, mon) in d.iter_entries() {
                    let x = field.from_int(*coeff);
                    if !field.is_zero(&x) {
                        out.set(r, c, Some((x, mon.clone())));
                    }
                }
                out
            })
            .collect();
        FreeComplex {
            modules: self.modules.clone(),
            differentials,
        }
    }

    /// Structural diagnostics; valid iff empty. Checks matrix shapes,
    /// homogeneity of every entry (monomial = column degree minus row
    /// degree), and that consecutive differentials compose to zero.
    pub fn validate(&self) -> Vec<String> {
        let mut diags = Vec::new();
        if self.differentials.len() + 1 != self.modules.len() {
            diags.push(format!(
                "{} modules need {} differentials, found {}",
                self.modules.len(),
                self.modules.len().saturating_sub(1),
                self.differentials.len()
            ));
            return diags;
        }
        for (i, d) in self.differentials.iter().enumerate() {
            if d.rows() != self.modules[i].len() || d.cols() != self.modules[i + 1].len() {
                diags.push(format!(
                    "differential {i} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    self.modules[i].len(),
                    self.modules[i + 1].len()
                ));
                continue;
            }
            for (r, c, coeff, mon) in d.iter_entries() {
                if *coeff == 0 {
                    diags.push(format!("differential {i} entry ({r},{c}) stores a zero"));
                }
                match self.modules[i + 1][c].checked_div(&self.modules[i][r]) {
                    Some(expected) if expected == *mon => {}
                    _ => diags.push(format!(
                        "differential {i} entry ({r},{c}) is not homogeneous"
                    )),
                }
            }
        }
        for i in 0..self.differentials.len().saturating_sub(1) {
            let a = &self.differentials[i];
            let b = &self.differentials[i + 1];
            for r in 0..a.rows() {
                for c in 0..b.cols() {
                    let mut acc: i128 = 0;
                    for k in 0..a.cols() {
                        if let (Some((x, _)), Some((y, _))) = (a.get(r, k), b.get(k, c)) {
                            acc += (*x as i128) * (*y as i128);
                        }
                    }
                    if acc != 0 {
                        diags.push(format!(
                            "differentials {i} and {} do not compose to zero at ({r},{c})",
                            i + 1
                        ));
                    }
                }
            }
        }
        diags
    }
}

/// Betti numbers β_0, β_1, … of a cyclic quotient S/I.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BettiTable {
    pub ranks: Vec<usize>,
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.ranks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// The free complex of a labeled complex: one generator per cell in the
/// cell's degree (module 0 from the empty cell), differential entries
/// `sign(G,F)·x^{a_F − a_G}`.
pub fn free_complex_from_labeled(x: &LabeledComplex) -> FreeComplex<i64> {
    let n = x.num_vars();
    let mut modules = vec![vec![ExponentVector::one(n)]];
    let mut differentials = Vec::new();
    let Some(top) = x.top_dim() else {
        return FreeComplex {
            modules,
            differentials,
        };
    };
    for d in 0..=top {
        modules.push(
            x.dim_range(d)
                .map(|id| x.cell(id).label.clone())
                .collect(),
        );
    }
    // Augmentation: every vertex maps to the empty cell with sign +1.
    let mut d0 = MonomialMatrix::zero(1, x.dim_range(0).len());
    for (j, id) in x.dim_range(0).enumerate() {
        d0.set(0, j, Some((1, x.cell(id).label.clone())));
    }
    differentials.push(d0);
    for d in 1..=top {
        let rows = x.dim_range(d - 1);
        let cols = x.dim_range(d);
        let mut m = MonomialMatrix::zero(rows.len(), cols.len());
        for (j, id) in cols.clone().enumerate() {
            for &(facet, sign) in x.facets_of(id) {
                let mon = x
                    .cell(id)
                    .label
                    .checked_div(&x.cell(facet).label)
                    .expect("facet label divides cell label in a validated complex");
                m.set(facet - rows.start, j, Some((sign as i64, mon)));
            }
        }
        differentials.push(m);
    }
    FreeComplex {
        modules,
        differentials,
    }
}

/// Does the free complex of X resolve S/(vertex labels of X)?
///
/// True iff the restriction X_⪯b is acyclic for every b in the lcm lattice
/// of the vertex labels; restrictions only change at lattice joins, so this
/// finite check decides the unrestricted condition.
pub fn is_resolution(x: &LabeledComplex, field: FieldChoice) -> Result<bool> {
    let labels: Vec<ExponentVector> = x
        .dim_range(0)
        .map(|id| x.cell(id).label.clone())
        .collect();
    for b in lcm_lattice(&labels) {
        if !x.restrict_leq(&b)?.is_acyclic(field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A free complex is minimal iff no differential entry has monomial 1.
pub fn is_minimal<C>(f: &FreeComplex<C>) -> bool {
    f.differentials.iter().all(|d| {
        d.entries
            .iter()
            .all(|e| !matches!(e, Some((_, mon)) if mon.is_one()))
    })
}

/// Cancel unit entries until the complex is minimal.
///
/// Each step removes the first unit (monomial 1, invertible coefficient) in
/// row-major order of the lowest-index differential, deleting one generator
/// from each of the two modules it connects. The result is quasi-isomorphic
/// to the input and its ranks do not depend on the cancellation order.
pub fn minimalize<Fd: Field>(field: &Fd, f: &FreeComplex<Fd::Elem>) -> FreeComplex<Fd::Elem> {
    let mut out = f.clone();
    while let Some((i, r, c)) = first_unit(field, &out) {
        cancel(field, &mut out, i, r, c);
    }
    // Cancellation can exhaust the modules beyond the projective
    // dimension; drop the trailing rank-0 tail.
    while out.modules.len() > 1 && out.modules.last().expect("nonempty").is_empty() {
        out.modules.pop();
        out.differentials.pop();
    }
    out
}

fn first_unit<Fd: Field>(field: &Fd, f: &FreeComplex<Fd::Elem>) -> Option<(usize, usize, usize)> {
    for (i, d) in f.differentials.iter().enumerate() {
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                if let Some((coeff, mon)) = d.get(r, c) {
                    if mon.is_one() && field.inv(coeff).is_some() {
                        return Some((i, r, c));
                    }
                }
            }
        }
    }
    None
}

fn cancel<Fd: Field>(field: &Fd, f: &mut FreeComplex<Fd::Elem>, i: usize, r: usize, c: usize) {
    let d = &f.differentials[i];
    let (u, _) = d.get(r, c).expect("unit entry present").clone();
    let uinv = field.inv(&u).expect("unit coefficient invertible");
    let row_entries: Vec<(usize, Fd::Elem, ExponentVector)> = (0..d.cols())
        .filter(|&c2| c2 != c)
        .filter_map(|c2| d.get(r, c2).map(|(x, m)| (c2, x.clone(), m.clone())))
        .collect();
    let col_entries: Vec<(usize, Fd::Elem, ExponentVector)> = (0..d.rows())
        .filter(|&r2| r2 != r)
        .filter_map(|r2| d.get(r2, c).map(|(x, m)| (r2, x.clone(), m.clone())))
        .collect();
    let d = &mut f.differentials[i];
    for (r2, a, mon_a) in &col_entries {
        let factor = field.mul(a, &uinv);
        for (c2, b, mon_b) in &row_entries {
            let delta = field.mul(&factor, b);
            let mon = mon_a.times(mon_b);
            let new = match d.get(*r2, *c2) {
                Some((old, old_mon)) => {
                    debug_assert_eq!(*old_mon, mon, "homogeneity breached in cancellation");
                    field.sub(old, &delta)
                }
                None => field.neg(&delta),
            };
            d.set(
                *r2,
                *c2,
                (!field.is_zero(&new)).then_some((new, mon)),
            );
        }
    }
    d.remove_row(r);
    d.remove_col(c);
    if i + 1 < f.differentials.len() {
        f.differentials[i + 1].remove_row(c);
    }
    if i >= 1 {
        f.differentials[i - 1].remove_col(r);
    }
    f.modules[i].remove(r);
    f.modules[i + 1].remove(c);
}

/// Ranks of the minimalization of an integer free complex over the field.
pub fn minimal_betti(f: &FreeComplex<i64>, field: FieldChoice) -> Result<BettiTable> {
    let ranks = with_field!(field, fd, {
        minimalize(&fd, &f.to_field(&fd)).ranks()
    });
    Ok(BettiTable { ranks })
}

/// Generator degrees of each module of the minimalization, in the
/// deterministic cancellation order.
pub fn minimal_module_degrees(
    f: &FreeComplex<i64>,
    field: FieldChoice,
) -> Result<Vec<Vec<ExponentVector>>> {
    Ok(with_field!(field, fd, {
        minimalize(&fd, &f.to_field(&fd)).modules
    }))
}

/// The Taylor complex of an ideal: the full simplex on its generators,
/// faces labeled by lcms.
pub fn taylor_complex(ideal: &MonomialIdeal, var_names: &VarNames) -> Result<LabeledComplex> {
    let g = ideal.num_generators();
    if g > TAYLOR_GENERATOR_LIMIT {
        return Err(Error::TooManyGenerators {
            got: g,
            limit: TAYLOR_GENERATOR_LIMIT,
        });
    }
    let mut faces = Vec::new();
    for mask in 1u32..(1 << g) {
        if mask.count_ones() >= 2 {
            let face: Vec<usize> = (0..g).filter(|&i| mask >> i & 1 == 1).collect();
            faces.push(face);
        }
    }
    LabeledComplex::simplicial_on_labels(var_names.clone(), ideal.generators(), &faces)
}

/// Betti numbers of S/I, by minimalizing the Taylor complex.
pub fn betti(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable> {
    let g = ideal.num_generators();
    if g > BETTI_GENERATOR_LIMIT {
        return Err(Error::TooManyGenerators {
            got: g,
            limit: BETTI_GENERATOR_LIMIT,
        });
    }
    let taylor = taylor_complex(ideal, &VarNames::standard(ideal.num_vars()))?;
    minimal_betti(&free_complex_from_labeled(&taylor), field)
}

/// Multidegrees of the minimal generators of the t-th syzygy module of S/I
/// (column degrees of the t-th minimal differential), sorted; empty when t
/// exceeds the projective dimension.
pub fn syzygy_generators(
    ideal: &MonomialIdeal,
    t: usize,
    field: FieldChoice,
) -> Result<Vec<ExponentVector>> {
    let g = ideal.num_generators();
    if g > BETTI_GENERATOR_LIMIT {
        return Err(Error::TooManyGenerators {
            got: g,
            limit: BETTI_GENERATOR_LIMIT,
        });
    }
    let taylor = taylor_complex(ideal, &VarNames::standard(ideal.num_vars()))?;
    let modules = minimal_module_degrees(&free_complex_from_labeled(&taylor), field)?;
    let mut degrees = modules.get(t).cloned().unwrap_or_default();
    degrees.sort();
    Ok(degrees)
}
