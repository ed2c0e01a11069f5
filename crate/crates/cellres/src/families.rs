//! Constructors for the families of labeled complexes studied by the crate:
//! subdivided simplices supporting powers of the maximal ideal, subdivided
//! cubes, bounded-power ideals, path-ideal subdivisions (variants `Y`, `Z`,
//! `Z̄`), Taylor complexes of ideal powers, edge ideals of graphs, and the
//! growing-simplex sequence.
//!
//! A [`Family`] bundles one such sequence behind a power index: `complex(i)`
//! builds (and caches) the `i`-th member, `step_morphisms(i)` enumerates the
//! multiplication morphisms from member `i − 1` into member `i`. The
//! growing-simplex family is *unrestricted* — its members live over different
//! polynomial rings and are connected by variable renamings instead; see
//! [`crate::morphism::find_renamed_embeddings`].

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::complex::LabeledComplex;
use crate::error::{Error, Result};
use crate::monomial::{parse_ideal, ExponentVector, MonomialIdeal, VarNames};
use crate::morphism::{find_multiplication_morphisms, MultiplicationMorphism};
use crate::resolution::taylor_complex;
use crate::subdivision::{build_arrangement_complex, ArrangementSpec, HyperplaneFamily};

/// A finite simple graph with 1-based vertices, as in the JSON interchange
/// format `{"n": 4, "edges": [[1,2],[2,3],[3,4]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// A validated simple graph: vertices in `1..=n`, no loops, no parallel
    /// edges (in either orientation).
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = Graph { n, edges };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(i, j) in &self.edges {
            if i < 1 || i > self.n || j < 1 || j > self.n {
                return Err(Error::BadGraph(format!(
                    "edge ({i},{j}) leaves the vertex range 1..={}",
                    self.n
                )));
            }
            if i == j {
                return Err(Error::BadGraph(format!("loop at vertex {i}")));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::BadGraph(format!("repeated edge ({i},{j})")));
            }
        }
        Ok(())
    }

    /// The path graph `P_n`: edges 12, 23, …, (n−1)n.
    pub fn path(n: usize) -> Self {
        Graph {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph { n, edges }
    }

    /// The cycle graph `C_n` (`n ≥ 3`).
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph { n, edges }
    }
}

/// The edge ideal `I_G = (x_i x_j | ij ∈ E(G))` in `n` variables.
pub fn graph_to_edge_ideal(graph: &Graph) -> Result<MonomialIdeal> {
    graph.validate()?;
    let gens = graph
        .edges
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![0u32; graph.n];
            e[i - 1] += 1;
            e[j - 1] += 1;
            ExponentVector::new(e)
        })
        .collect();
    MonomialIdeal::from_generators(graph.n, gens)
}

/// All exponent vectors of total degree `k` in `n` variables, in ascending
/// lexicographic order.
fn degree_vectors(n: usize, k: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(out: &mut Vec<ExponentVector>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(ExponentVector::new(current.clone()));
            current[pos] = 0;
            return;
        }
        for e in 0..=remaining {
            current[pos] = e;
            rec(out, current, pos + 1, remaining - e);
        }
        current[pos] = 0;
    }
    rec(&mut out, &mut current, 0, k);
    out.sort();
    out
}

fn coordinate_families(n: usize) -> Vec<HyperplaneFamily> {
    (0..n)
        .map(|i| {
            let mut f = vec![0i64; n];
            f[i] = 1;
            HyperplaneFamily { functional: f }
        })
        .collect()
}

/// The subdivided simplex `X_n^k`: the Newton polytope of `m_n^k` (all
/// degree-`k` monomials in `n` variables) cut by every coordinate hyperplane
/// `y_i = j`.
pub fn maximal_power_complex(n: usize, k: usize) -> Result<LabeledComplex> {
    if n < 2 || k < 1 {
        return Err(Error::Input(format!(
            "maximal_power_complex needs n >= 2 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    let spec = ArrangementSpec::new(
        VarNames::standard(n),
        degree_vectors(n, k as u32),
        coordinate_families(n),
    )?;
    build_arrangement_complex(&spec)
}

/// The subdivided cube `C_n^p` for a pairing of `2n` variables: vertices are
/// the exponent vectors of `I_P^p` where `I_P` picks one variable from each
/// pair, cut by every coordinate hyperplane.
///
/// `pairing` lists `n` disjoint 1-based variable pairs covering `1..=2n`.
pub fn cube_complex(pairing: &[(usize, usize)], p: usize) -> Result<LabeledComplex> {
    let n = pairing.len();
    let num_vars = 2 * n;
    if n == 0 || p < 1 {
        return Err(Error::Input(
            "cube_complex needs a non-empty pairing and p >= 1".to_string(),
        ));
    }
    let mut seen = vec![false; num_vars];
    for &(a, b) in pairing {
        for idx in [a, b] {
            if idx < 1 || idx > num_vars {
                return Err(Error::Input(format!(
                    "pair index {idx} leaves the variable range 1..={num_vars}"
                )));
            }
            if seen[idx - 1] {
                return Err(Error::Input(format!(
                    "overlapping pairs: variable {idx} appears twice"
                )));
            }
            seen[idx - 1] = true;
        }
    }
    // Vertices: distribute p between the two ends of each pair.
    let mut points = Vec::new();
    let mut choice = vec![0u32; n];
    loop {
        let mut v = vec![0u32; num_vars];
        for (j, &(a, b)) in pairing.iter().enumerate() {
            v[a - 1] = choice[j];
            v[b - 1] = p as u32 - choice[j];
        }
        points.push(ExponentVector::new(v));
        let mut j = 0;
        while j < n && choice[j] == p as u32 {
            choice[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        choice[j] += 1;
    }
    points.sort();
    let spec = ArrangementSpec::new(
        VarNames::standard(num_vars),
        points,
        coordinate_families(num_vars),
    )?;
    build_arrangement_complex(&spec)
}

/// The complex supporting `I_{⪯b}^m`, where `I_{⪯b}` is generated by the
/// degree-`d` monomials dividing `x^b`: the subcomplex of `X_n^{md}` of cells
/// whose label divides `x^{mb}`.
pub fn bounded_power_complex(
    n: usize,
    d: usize,
    b: &ExponentVector,
    m: usize,
) -> Result<LabeledComplex> {
    if b.len() != n {
        return Err(Error::LengthMismatch(b.len(), n));
    }
    if m < 1 || d < 1 {
        return Err(Error::Input(format!(
            "bounded_power_complex needs d >= 1 and m >= 1, got d = {d}, m = {m}"
        )));
    }
    let base = MonomialIdeal::bounded_maximal_power(n, d as u32, b)?;
    if base.is_zero() {
        return Err(Error::EmptyGenerators);
    }
    let ambient = maximal_power_complex(n, m * d)?;
    let scaled = ExponentVector::new(b.iter().map(|e| e * m as u32).collect());
    ambient.restrict_leq(&scaled)
}

/// Which hyperplane system subdivides the Newton polytope of a path-ideal
/// power: coordinates only (`Y`), with alternating sums added (`Z`), or with
/// every-third sums added as well (`Zbar`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathVariant {
    Y,
    Z,
    Zbar,
}

/// The edge ideal of the path `P_n` in `n` variables.
pub fn path_edge_ideal(n: usize) -> Result<MonomialIdeal> {
    graph_to_edge_ideal(&Graph::path(n))
}

/// The subdivision `Y_n^d`, `Z_n^d`, or `Z̄_n^d` of the Newton polytope of
/// `I_{P_n}^d`.
///
/// All three cut by the coordinate hyperplanes `y_i = j`. `Z` adds the
/// alternating sums `y_i + y_{i−2} + y_{i−4} + … = j`, and `Zbar` further
/// adds the every-third sums `y_i + y_{i−3} + y_{i−6} + … = j`.
pub fn path_complex(variant: PathVariant, n: usize, d: usize) -> Result<LabeledComplex> {
    if n < 2 || d < 1 {
        return Err(Error::Input(format!(
            "path_complex needs n >= 2 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    let ideal = path_edge_ideal(n)?.power(d);
    let mut functionals: BTreeSet<Vec<i64>> = coordinate_families(n)
        .into_iter()
        .map(|f| f.functional)
        .collect();
    let mut add_strided = |stride: usize| {
        for i in 1..=n {
            let mut f = vec![0i64; n];
            let mut pos = i;
            loop {
                f[pos - 1] = 1;
                if pos <= stride {
                    break;
                }
                pos -= stride;
            }
            functionals.insert(f);
        }
    };
    if matches!(variant, PathVariant::Z | PathVariant::Zbar) {
        add_strided(2);
    }
    if matches!(variant, PathVariant::Zbar) {
        add_strided(3);
    }
    let spec = ArrangementSpec::new(
        VarNames::standard(n),
        ideal.generators().to_vec(),
        functionals
            .into_iter()
            .map(|functional| HyperplaneFamily { functional })
            .collect(),
    )?;
    build_arrangement_complex(&spec)
}

/// The Taylor complex of `I^k` (full simplex on the minimal generators of
/// the power).
pub fn taylor_powers_complex(
    ideal: &MonomialIdeal,
    var_names: &VarNames,
    k: usize,
) -> Result<LabeledComplex> {
    if k < 1 {
        return Err(Error::Input("taylor_powers_complex needs k >= 1".to_string()));
    }
    taylor_complex(&ideal.power(k), var_names)
}

/// The full subcomplex of `x` on the vertices labeled by generators of
/// `ideal`; every generator must appear among the vertex labels.
pub fn equigenerated_subcomplex(
    x: &LabeledComplex,
    ideal: &MonomialIdeal,
) -> Result<LabeledComplex> {
    if ideal.num_vars() != x.num_vars() {
        return Err(Error::LengthMismatch(ideal.num_vars(), x.num_vars()));
    }
    let mut keep_vertex = vec![false; x.num_cells()];
    for g in ideal.generators() {
        match x.vertex_id_by_label(g) {
            Some(v) => keep_vertex[v] = true,
            None => {
                return Err(Error::MissingGeneratorLabel(
                    x.var_names().monomial_string(g),
                ))
            }
        }
    }
    let keep: Vec<bool> = x
        .cells()
        .iter()
        .map(|c| c.vertices.iter().all(|&v| keep_vertex[v]))
        .collect();
    x.subcomplex(&keep)
}

/// The full `n`-simplex over `n + 1` variables, vertex `i` labeled by the
/// `i`-th variable.
pub fn simplex_growing_complex(n: usize) -> Result<LabeledComplex> {
    let ideal = MonomialIdeal::from_generators(
        n + 1,
        (0..=n)
            .map(|i| {
                let mut e = vec![0u32; n + 1];
                e[i] = 1;
                ExponentVector::new(e)
            })
            .collect(),
    )?;
    taylor_complex(&ideal, &VarNames::standard(n + 1))
}

/// The family kinds a [`FamilySpec`] can name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "maximal")]
    Maximal,
    #[serde(rename = "cube")]
    Cube,
    #[serde(rename = "bounded")]
    Bounded,
    #[serde(rename = "path_Y")]
    PathY,
    #[serde(rename = "path_Z")]
    PathZ,
    #[serde(rename = "path_Zbar")]
    PathZbar,
    #[serde(rename = "taylor_powers")]
    TaylorPowers,
    #[serde(rename = "edge_ideal")]
    EdgeIdeal,
    #[serde(rename = "simplex_growing")]
    SimplexGrowing,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Maximal => "maximal",
            FamilyKind::Cube => "cube",
            FamilyKind::Bounded => "bounded",
            FamilyKind::PathY => "path_Y",
            FamilyKind::PathZ => "path_Z",
            FamilyKind::PathZbar => "path_Zbar",
            FamilyKind::TaylorPowers => "taylor_powers",
            FamilyKind::EdgeIdeal => "edge_ideal",
            FamilyKind::SimplexGrowing => "simplex_growing",
        }
    }
}

/// Parameters naming one indexed family. The index meaning depends on the
/// kind: the power `k`/`p`/`m`/`d` for the restricted families, the
/// dimension for the growing simplex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    /// Variable count (maximal, bounded) or path length (path variants).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Generator degree of the bounded base ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    /// Exponent bound of the bounded base ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<Vec<u32>>,
    /// Disjoint 1-based variable pairs (cube).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<(usize, usize)>>,
    /// Base ideal (taylor_powers), e.g. `"(x,y,z)"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    /// Underlying graph (edge_ideal).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<Graph>,
}

impl FamilySpec {
    pub fn maximal(n: usize) -> Self {
        FamilySpec {
            kind: FamilyKind::Maximal,
            n: Some(n),
            ..FamilySpec::empty(FamilyKind::Maximal)
        }
    }

    pub fn cube(pairing: Vec<(usize, usize)>) -> Self {
        FamilySpec {
            pairing: Some(pairing),
            ..FamilySpec::empty(FamilyKind::Cube)
        }
    }

    pub fn bounded(n: usize, d: usize, bound: Vec<u32>) -> Self {
        FamilySpec {
            n: Some(n),
            d: Some(d),
            bound: Some(bound),
            ..FamilySpec::empty(FamilyKind::Bounded)
        }
    }

    pub fn path(variant: PathVariant, n: usize) -> Self {
        let kind = match variant {
            PathVariant::Y => FamilyKind::PathY,
            PathVariant::Z => FamilyKind::PathZ,
            PathVariant::Zbar => FamilyKind::PathZbar,
        };
        FamilySpec {
            n: Some(n),
            ..FamilySpec::empty(kind)
        }
    }

    pub fn taylor_powers(ideal: &str) -> Self {
        FamilySpec {
            ideal: Some(ideal.to_string()),
            ..FamilySpec::empty(FamilyKind::TaylorPowers)
        }
    }

    pub fn edge_ideal(graph: Graph) -> Self {
        FamilySpec {
            graph: Some(graph),
            ..FamilySpec::empty(FamilyKind::EdgeIdeal)
        }
    }

    pub fn simplex_growing() -> Self {
        FamilySpec::empty(FamilyKind::SimplexGrowing)
    }

    fn empty(kind: FamilyKind) -> Self {
        FamilySpec {
            kind,
            n: None,
            d: None,
            bound: None,
            pairing: None,
            ideal: None,
            graph: None,
        }
    }
}

/// An indexed family of labeled complexes, built on demand and cached.
pub struct Family {
    spec: FamilySpec,
    /// Parsed base ideal for the Taylor/edge-ideal kinds.
    base_ideal: Option<(VarNames, MonomialIdeal)>,
    cache: RefCell<BTreeMap<usize, LabeledComplex>>,
}

impl Family {
    /// Validates that every parameter the kind needs is present.
    pub fn new(spec: FamilySpec) -> Result<Self> {
        fn need<T: Clone>(opt: &Option<T>, what: &str, kind: FamilyKind) -> Result<T> {
            opt.clone().ok_or_else(|| {
                Error::Input(format!(
                    "family kind {} needs the `{what}` parameter",
                    kind.as_str()
                ))
            })
        }
        let base_ideal = match spec.kind {
            FamilyKind::Maximal | FamilyKind::PathY | FamilyKind::PathZ | FamilyKind::PathZbar => {
                need(&spec.n, "n", spec.kind)?;
                None
            }
            FamilyKind::Cube => {
                need(&spec.pairing, "pairing", spec.kind)?;
                None
            }
            FamilyKind::Bounded => {
                let n = need(&spec.n, "n", spec.kind)?;
                need(&spec.d, "d", spec.kind)?;
                let b = need(&spec.bound, "bound", spec.kind)?;
                if b.len() != n {
                    return Err(Error::LengthMismatch(b.len(), n));
                }
                None
            }
            FamilyKind::TaylorPowers => {
                let text = need(&spec.ideal, "ideal", spec.kind)?;
                Some(parse_ideal(&text)?)
            }
            FamilyKind::EdgeIdeal => {
                let graph = need(&spec.graph, "graph", spec.kind)?;
                let ideal = graph_to_edge_ideal(&graph)?;
                if ideal.is_zero() {
                    return Err(Error::EmptyGenerators);
                }
                Some((VarNames::standard(graph.n), ideal))
            }
            FamilyKind::SimplexGrowing => None,
        };
        Ok(Family {
            spec,
            base_ideal,
            cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn kind(&self) -> FamilyKind {
        self.spec.kind
    }

    /// Unrestricted families change the polynomial ring along the index;
    /// their maps are variable renamings composed with embeddings, not
    /// multiplication morphisms.
    pub fn is_unrestricted(&self) -> bool {
        self.spec.kind == FamilyKind::SimplexGrowing
    }

    /// The `index`-th member (`index ≥ 1`), cached after the first build.
    pub fn complex(&self, index: usize) -> Result<LabeledComplex> {
        if index < 1 {
            return Err(Error::Input("family indices start at 1".to_string()));
        }
        if let Some(x) = self.cache.borrow().get(&index) {
            return Ok(x.clone());
        }
        let built = self.build(index)?;
        self.cache
            .borrow_mut()
            .insert(index, built.clone());
        Ok(built)
    }

    fn build(&self, index: usize) -> Result<LabeledComplex> {
        match self.spec.kind {
            FamilyKind::Maximal => maximal_power_complex(self.spec.n.unwrap(), index),
            FamilyKind::Cube => cube_complex(self.spec.pairing.as_ref().unwrap(), index),
            FamilyKind::Bounded => bounded_power_complex(
                self.spec.n.unwrap(),
                self.spec.d.unwrap(),
                &ExponentVector::new(self.spec.bound.clone().unwrap()),
                index,
            ),
            FamilyKind::PathY => path_complex(PathVariant::Y, self.spec.n.unwrap(), index),
            FamilyKind::PathZ => path_complex(PathVariant::Z, self.spec.n.unwrap(), index),
            FamilyKind::PathZbar => path_complex(PathVariant::Zbar, self.spec.n.unwrap(), index),
            FamilyKind::TaylorPowers | FamilyKind::EdgeIdeal => {
                let (names, ideal) = self.base_ideal.as_ref().unwrap();
                taylor_powers_complex(ideal, names, index)
            }
            FamilyKind::SimplexGrowing => simplex_growing_complex(index),
        }
    }

    /// Multiplication morphisms from member `index − 1` into member `index`
    /// (`index ≥ 2`). Errors for unrestricted families.
    pub fn step_morphisms(&self, index: usize) -> Result<Vec<MultiplicationMorphism>> {
        if index < 2 {
            return Err(Error::Input(
                "step morphisms need an index >= 2".to_string(),
            ));
        }
        if self.is_unrestricted() {
            return Err(Error::Input(
                "the growing-simplex family is unrestricted; enumerate renamed \
                 embeddings instead of multiplication morphisms"
                    .to_string(),
            ));
        }
        let source = self.complex(index - 1)?;
        let target = self.complex(index)?;
        Ok(find_multiplication_morphisms(&source, &target))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldChoice;
    use crate::resolution::{
        free_complex_from_labeled, is_resolution, minimal_betti, BettiTable,
    };

    fn labels_of(x: &LabeledComplex) -> Vec<ExponentVector> {
        x.cells()
            .iter()
            .filter(|c| c.dim == 0)
            .map(|c| c.label.clone())
            .collect()
    }

    #[test]
    fn maximal_triangle_counts() {
        let x = maximal_power_complex(3, 1).unwrap();
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
        let x4 = maximal_power_complex(3, 4).unwrap();
        assert_eq!(x4.f_vector()[0], 15);
        // Side-k triangle: (k+1)(k+2)/2 lattice vertices, k² small triangles.
        for k in 1..=6usize {
            let x = maximal_power_complex(3, k).unwrap();
            let f = x.f_vector();
            assert_eq!(f[0], (k + 1) * (k + 2) / 2, "vertices of X_3^{k}");
            assert_eq!(f[2], k * k, "top cells of X_3^{k}");
        }
    }

    #[test]
    fn maximal_tetrahedron() {
        let x = maximal_power_complex(4, 1).unwrap();
        assert_eq!(x.f_vector(), vec![4, 6, 4, 1]);
        assert!(x.validate().is_empty());
    }

    #[test]
    fn maximal_rejects_degenerate_parameters() {
        assert!(maximal_power_complex(1, 2).is_err());
        assert!(maximal_power_complex(3, 0).is_err());
    }

    #[test]
    fn cube_square_counts() {
        let square = cube_complex(&[(1, 2), (3, 4)], 1).unwrap();
        assert_eq!(square.f_vector(), vec![4, 4, 1]);
        let names = square.var_names().clone();
        let mut labels: Vec<String> = labels_of(&square)
            .iter()
            .map(|l| names.monomial_string(l))
            .collect();
        labels.sort();
        assert_eq!(labels, vec!["xw", "xz", "yw", "yz"]);

        let p2 = cube_complex(&[(1, 2), (3, 4)], 2).unwrap();
        assert_eq!(p2.f_vector(), vec![9, 12, 4]);
    }

    #[test]
    fn cube_vertex_and_top_counts() {
        for n in 1..=3usize {
            let pairing: Vec<(usize, usize)> = (0..n).map(|j| (2 * j + 1, 2 * j + 2)).collect();
            for p in 1..=3usize {
                if n == 3 && p == 3 {
                    continue; // covered by the n=3,p=2 and n=2,p=3 cases
                }
                let x = cube_complex(&pairing, p).unwrap();
                let f = x.f_vector();
                assert_eq!(f[0], (p + 1).pow(n as u32), "vertices of C_{n}^{p}");
                assert_eq!(f[n], p.pow(n as u32), "top cells of C_{n}^{p}");
            }
        }
    }

    #[test]
    fn cube_rejects_overlapping_pairs() {
        assert!(cube_complex(&[(1, 2), (2, 3)], 1).is_err());
        assert!(cube_complex(&[(1, 1), (3, 4)], 1).is_err());
    }

    #[test]
    fn bounded_squarefree_triangle() {
        // I_{⪯(1,1,1)} in degree 2 is the K_3 edge ideal (xy, xz, yz).
        let b = ExponentVector::new(vec![1, 1, 1]);
        let x = bounded_power_complex(3, 2, &b, 1).unwrap();
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
        let names = x.var_names().clone();
        let mut labels: Vec<String> = labels_of(&x)
            .iter()
            .map(|l| names.monomial_string(l))
            .collect();
        labels.sort();
        assert_eq!(labels, vec!["xy", "xz", "yz"]);

        // With all bound entries ≥ d the restriction is the whole X_n^{md}.
        let top = ExponentVector::new(vec![2, 2, 2]);
        let whole = bounded_power_complex(3, 2, &top, 1).unwrap();
        assert_eq!(
            whole.f_vector(),
            maximal_power_complex(3, 2).unwrap().f_vector()
        );
    }

    #[test]
    fn bounded_labels_are_power_generators() {
        // Vertex labels of the bounded complex = generators of I_{⪯b}^m.
        let cases: &[(usize, usize, Vec<u32>)] = &[
            (3, 2, vec![1, 1, 1]),
            (3, 1, vec![2, 1, 0]),
            (4, 2, vec![1, 1, 1, 1]),
        ];
        for (n, d, b) in cases {
            let bound = ExponentVector::new(b.clone());
            let base = MonomialIdeal::bounded_maximal_power(*n, *d as u32, &bound).unwrap();
            for m in 1..=3usize {
                if *n == 4 && m == 3 {
                    continue; // X_4^6 is beyond what this check needs
                }
                let x = bounded_power_complex(*n, *d, &bound, m).unwrap();
                let mut labels = labels_of(&x);
                labels.sort();
                let mut expected = base.power(m).generators().to_vec();
                expected.sort();
                assert_eq!(labels, expected, "n={n} d={d} m={m}");
            }
        }
    }

    #[test]
    fn bounded_rejects_empty_generators() {
        let b = ExponentVector::new(vec![1, 0, 0]);
        assert!(matches!(
            bounded_power_complex(3, 2, &b, 1),
            Err(Error::EmptyGenerators)
        ));
    }

    #[test]
    fn path_four_vertices_degree_one() {
        let y = path_complex(PathVariant::Y, 4, 1).unwrap();
        assert_eq!(y.f_vector(), vec![3, 3, 1]);
        assert!(is_resolution(&y, FieldChoice::Rational).unwrap());
        let betti = minimal_betti(&free_complex_from_labeled(&y), FieldChoice::Rational).unwrap();
        assert_eq!(betti, BettiTable { ranks: vec![1, 3, 2] });
    }

    #[test]
    fn path_five_vertices_degree_one() {
        let y = path_complex(PathVariant::Y, 5, 1).unwrap();
        assert_eq!(y.f_vector(), vec![4, 6, 4, 1]);
        let betti = minimal_betti(&free_complex_from_labeled(&y), FieldChoice::Rational).unwrap();
        assert_eq!(
            betti,
            BettiTable {
                ranks: vec![1, 4, 4, 1]
            }
        );
    }

    #[test]
    fn path_zbar_adds_no_vertices_over_z() {
        for (n, d) in [(4usize, 1usize), (4, 2), (5, 1)] {
            let z = path_complex(PathVariant::Z, n, d).unwrap();
            let zbar = path_complex(PathVariant::Zbar, n, d).unwrap();
            let mut vz = labels_of(&z);
            let mut vzbar = labels_of(&zbar);
            vz.sort();
            vzbar.sort();
            assert_eq!(vz, vzbar, "Z̄_{n}^{d} vertex set");
            assert!(zbar.num_cells() >= z.num_cells());
        }
    }

    #[test]
    fn path_variants_support_resolutions() {
        for (n, d) in [(4usize, 2usize), (5, 2)] {
            for variant in [PathVariant::Y, PathVariant::Z, PathVariant::Zbar] {
                let x = path_complex(variant, n, d).unwrap();
                assert!(x.validate().is_empty(), "{variant:?} ({n},{d})");
                assert!(
                    is_resolution(&x, FieldChoice::Rational).unwrap(),
                    "{variant:?} ({n},{d})"
                );
            }
        }
    }

    #[test]
    fn taylor_powers_of_the_maximal_ideal() {
        let (names, ideal) = parse_ideal("(x,y,z)").unwrap();
        let k1 = taylor_powers_complex(&ideal, &names, 1).unwrap();
        assert_eq!(k1.f_vector(), vec![3, 3, 1]);
        let k2 = taylor_powers_complex(&ideal, &names, 2).unwrap();
        // Full simplex on the 6 generators of (x,y,z)².
        assert_eq!(k2.f_vector(), vec![6, 15, 20, 15, 6, 1]);
        let top = k2.cell(k2.num_cells() - 1);
        assert_eq!(top.dim, 5);
        assert_eq!(top.label, ExponentVector::new(vec![2, 2, 2]));
    }

    #[test]
    fn edge_ideals_of_small_graphs() {
        let p4 = graph_to_edge_ideal(&Graph::path(4)).unwrap();
        assert_eq!(
            p4.generators(),
            &[
                ExponentVector::new(vec![0, 0, 1, 1]),
                ExponentVector::new(vec![0, 1, 1, 0]),
                ExponentVector::new(vec![1, 1, 0, 0]),
            ]
        );
        let c4 = graph_to_edge_ideal(&Graph::cycle(4)).unwrap();
        assert_eq!(c4.num_generators(), 4);
        let k3 = graph_to_edge_ideal(&Graph::complete(3)).unwrap();
        assert_eq!(k3.num_generators(), 3);
        assert!(k3.generators().iter().all(|g| g.total_degree() == 2));
    }

    #[test]
    fn graphs_must_be_simple() {
        assert!(matches!(
            Graph::new(3, vec![(1, 1)]),
            Err(Error::BadGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, vec![(1, 2), (2, 1)]),
            Err(Error::BadGraph(_))
        ));
        assert!(matches!(
            Graph::new(2, vec![(1, 3)]),
            Err(Error::BadGraph(_))
        ));
    }

    #[test]
    fn equigenerated_central_triangle() {
        let x = maximal_power_complex(3, 2).unwrap();
        let (_, k3) = parse_ideal("(xy,xz,yz)").unwrap();
        let sub = equigenerated_subcomplex(&x, &k3).unwrap();
        assert_eq!(sub.f_vector(), vec![3, 3, 1]);
        assert_eq!(
            sub.cell(sub.num_cells() - 1).label,
            ExponentVector::new(vec![1, 1, 1])
        );

        // All vertex labels back: the subcomplex is the whole complex.
        let all = MonomialIdeal::from_generators(3, labels_of(&x)).unwrap();
        let whole = equigenerated_subcomplex(&x, &all).unwrap();
        assert_eq!(whole.f_vector(), x.f_vector());

        // A single generator leaves a single point.
        let one =
            MonomialIdeal::from_generators(3, vec![ExponentVector::new(vec![2, 0, 0])]).unwrap();
        let point = equigenerated_subcomplex(&x, &one).unwrap();
        assert_eq!(point.f_vector(), vec![1]);

        let missing =
            MonomialIdeal::from_generators(3, vec![ExponentVector::new(vec![2, 1, 0])]).unwrap();
        assert!(matches!(
            equigenerated_subcomplex(&x, &missing),
            Err(Error::MissingGeneratorLabel(_))
        ));
    }

    #[test]
    fn simplex_growing_shapes() {
        let edge = simplex_growing_complex(1).unwrap();
        assert_eq!(edge.f_vector(), vec![2, 1]);
        let labels = labels_of(&edge);
        assert!(labels.iter().all(|l| l.total_degree() == 1));

        let tet = simplex_growing_complex(3).unwrap();
        assert_eq!(tet.f_vector(), vec![4, 6, 4, 1]);
        assert!(is_resolution(&tet, FieldChoice::Rational).unwrap());
    }

    #[test]
    fn family_builds_and_caches() {
        let fam = Family::new(FamilySpec::maximal(3)).unwrap();
        assert_eq!(fam.complex(2).unwrap().f_vector(), vec![6, 9, 4]);
        // Second call hits the cache and agrees.
        assert_eq!(fam.complex(2).unwrap().f_vector(), vec![6, 9, 4]);

        let steps = fam.step_morphisms(2).unwrap();
        let names = fam.complex(1).unwrap().var_names().clone();
        let mults: Vec<String> = steps
            .iter()
            .map(|m| names.monomial_string(&m.multiplier))
            .collect();
        assert_eq!(mults, vec!["z", "y", "x"]);
    }

    #[test]
    fn family_specs_validate_parameters() {
        assert!(Family::new(FamilySpec::empty(FamilyKind::Maximal)).is_err());
        assert!(Family::new(FamilySpec::empty(FamilyKind::Cube)).is_err());
        assert!(Family::new(FamilySpec::empty(FamilyKind::TaylorPowers)).is_err());
        let growing = Family::new(FamilySpec::simplex_growing()).unwrap();
        assert!(growing.is_unrestricted());
        assert!(growing.step_morphisms(2).is_err());
        assert_eq!(growing.complex(2).unwrap().f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn family_spec_json_round_trip() {
        let spec = FamilySpec::bounded(3, 2, vec![1, 1, 1]);
        let text = serde_json::to_string(&spec).unwrap();
        assert!(text.contains("\"kind\":\"bounded\""));
        let back: FamilySpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back.kind, FamilyKind::Bounded);
        assert_eq!(back.bound, Some(vec![1, 1, 1]));

        let path = serde_json::to_string(&FamilySpec::path(PathVariant::Zbar, 4)).unwrap();
        assert!(path.contains("\"path_Zbar\""));
    }

    #[test]
    fn shipped_instances_resolve() {
        // Every family constructor yields a valid complex supporting a
        // resolution of the ideal generated by its vertex labels.
        let instances: Vec<(String, LabeledComplex)> = vec![
            ("X_3^2".into(), maximal_power_complex(3, 2).unwrap()),
            ("X_4^2".into(), maximal_power_complex(4, 2).unwrap()),
            ("C_2^2".into(), cube_complex(&[(1, 2), (3, 4)], 2).unwrap()),
            (
                "bounded".into(),
                bounded_power_complex(3, 2, &ExponentVector::new(vec![1, 1, 1]), 2).unwrap(),
            ),
            ("Y_4^2".into(), path_complex(PathVariant::Y, 4, 2).unwrap()),
            (
                "Zbar_4^2".into(),
                path_complex(PathVariant::Zbar, 4, 2).unwrap(),
            ),
            ("simplex_3".into(), simplex_growing_complex(3).unwrap()),
        ];
        for (name, x) in &instances {
            assert!(x.validate().is_empty(), "{name} validates");
            assert!(
                is_resolution(x, FieldChoice::Rational).unwrap(),
                "{name} resolves"
            );
        }
    }
}
