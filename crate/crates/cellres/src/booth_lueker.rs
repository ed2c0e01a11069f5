//! Derived graphs whose edge ideals carry linear quotients.
//!
//! For a simple graph `G` the derived graph has vertex set `V(G) ∪ E(G)`,
//! a complete graph on `V(G)`, and an incidence edge `u–e` for each
//! endpoint `u` of each edge `e`. Its edge ideal, written in the variable
//! order `x_1, …, x_n, y_1, …, y_e` and the generator order "all pair
//! monomials `x_i x_j` (i < j, lexicographic), then per edge `k` the pair
//! `x_{i_k} y_k, x_{j_k} y_k`", has linear quotients with a regular
//! decomposition function. Those two facts feed a mapping-cone minimal
//! resolution; this module checks them by brute-force colon computations
//! and derives the Betti numbers directly from the quotient sets.
//!
//! `set()` values are computed from the colon ideal, never from a closed
//! formula; [`bl_report`] surfaces where the naive closed formula for
//! mixed generators would disagree.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Graph;
use crate::field::FieldChoice;
use crate::monomial::{minimalize_generators, ExponentVector, MonomialIdeal, VarNames};
use crate::resolution::{betti, BettiTable};

/// A monomial ideal together with a fixed total order on its generators.
/// Unlike [`MonomialIdeal`], the order carries meaning (colon ideals are
/// taken against prefixes) and is never re-sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedIdeal {
    var_names: VarNames,
    generators: Vec<ExponentVector>,
}

impl OrderedIdeal {
    /// Generators in the given order; duplicates and units are rejected,
    /// but the list need not be minimal.
    pub fn new(var_names: VarNames, generators: Vec<ExponentVector>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let n = var_names.len();
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.len() != n {
                return Err(Error::LengthMismatch(g.len(), n));
            }
            if g.is_one() {
                return Err(Error::Input(
                    "a unit generator is not allowed in an ordered ideal".to_string(),
                ));
            }
            if !seen.insert(g.clone()) {
                return Err(Error::Input(format!(
                    "duplicate generator {}",
                    var_names.monomial_string(g)
                )));
            }
        }
        Ok(OrderedIdeal {
            var_names,
            generators,
        })
    }

    pub fn var_names(&self) -> &VarNames {
        &self.var_names
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| self.var_names.monomial_string(g))
            .collect()
    }

    /// Minimal generators of the colon ideal `(m_1, …, m_j) : m_{j+1}`
    /// (0-based `j`), i.e. of the prefix before generator `j` against it.
    fn prefix_colon(&self, j: usize) -> Vec<ExponentVector> {
        let m = &self.generators[j];
        let quotients = self.generators[..j]
            .iter()
            .map(|g| {
                let d = g.gcd(m);
                g.checked_div(&d).expect("gcd divides")
            })
            .collect();
        minimalize_generators(quotients)
    }
}

/// The derived graph: a complete graph on the vertices of `g` plus one new
/// vertex per edge, joined to the edge's two endpoints. Edge order matches
/// the generator order of [`bl_ideal_ordered`].
pub fn bl_graph(g: &Graph) -> Result<Graph> {
    g.validate()?;
    let n = g.n;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    for (k, &(a, b)) in g.edges.iter().enumerate() {
        let (lo, hi) = (a.min(b), a.max(b));
        edges.push((lo, n + k + 1));
        edges.push((hi, n + k + 1));
    }
    Ok(Graph {
        n: n + g.edges.len(),
        edges,
    })
}

/// The edge ideal of the derived graph in its canonical generator order:
/// variables `x_1…x_n` then `y_1…y_e` (one per edge of `g`, in input
/// order), generators `x_i x_j` for `i < j` in lexicographic pair order,
/// then `x_{i_k} y_k, x_{j_k} y_k` per edge `k` with `i_k < j_k`.
pub fn bl_ideal_ordered(g: &Graph) -> Result<OrderedIdeal> {
    let bl = bl_graph(g)?;
    let total = bl.n;
    let mut names: Vec<String> = (1..=g.n).map(|i| format!("x{i}")).collect();
    names.extend((1..=g.edges.len()).map(|k| format!("y{k}")));
    let generators = bl
        .edges
        .iter()
        .map(|&(a, b)| {
            let mut v = vec![0u32; total];
            v[a - 1] = 1;
            v[b - 1] = 1;
            ExponentVector::new(v)
        })
        .collect();
    OrderedIdeal::new(VarNames::from_names(names), generators)
}

/// Whether every prefix colon ideal `(m_1,…,m_{j−1}) : m_j` is generated
/// by variables, for the order as given.
pub fn has_linear_quotients(ideal: &OrderedIdeal) -> bool {
    (0..ideal.num_generators()).all(|j| {
        ideal
            .prefix_colon(j)
            .iter()
            .all(|q| q.total_degree() == 1)
    })
}

/// The quotient set of generator `j` (0-based): the 1-based variable
/// indices `k` with `x_k` in the prefix colon ideal. Errors when that
/// colon is not generated by variables.
pub fn set_of_generator(ideal: &OrderedIdeal, j: usize) -> Result<BTreeSet<usize>> {
    let colon = ideal.prefix_colon(j);
    if colon.iter().any(|q| q.total_degree() != 1) {
        return Err(Error::NoLinearQuotients(j + 1));
    }
    Ok(colon.iter().map(|q| q.support()[0] + 1).collect())
}

/// The decomposition function: the smallest generator index (0-based)
/// whose generator divides `m`.
pub fn decomposition_function(ideal: &OrderedIdeal, m: &ExponentVector) -> Result<usize> {
    ideal
        .generators
        .iter()
        .position(|g| g.divides(m))
        .ok_or(Error::NotInIdeal)
}

/// Whether the decomposition function is regular: for every generator `m`
/// and every `t ∈ set(m)`, `set(b(x_t·m)) ⊆ set(m)`.
pub fn is_regular_decomposition(ideal: &OrderedIdeal) -> Result<bool> {
    let n = ideal.var_names.len();
    let sets: Vec<BTreeSet<usize>> = (0..ideal.num_generators())
        .map(|j| set_of_generator(ideal, j))
        .collect::<Result<_>>()?;
    for (j, m) in ideal.generators.iter().enumerate() {
        for &t in &sets[j] {
            let mut e = vec![0u32; n];
            e[t - 1] = 1;
            let b = decomposition_function(ideal, &m.times(&ExponentVector::new(e)))?;
            if !sets[b].is_subset(&sets[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Betti numbers read off the quotient sets, in the ideal convention:
/// `ranks[i] = β_i(I) = Σ_m C(|set(m)|, i)` — the quotient-ring table
/// without its leading 1. Errors when the order lacks linear quotients.
pub fn betti_from_linear_quotients(ideal: &OrderedIdeal) -> Result<BettiTable> {
    let sizes: Vec<usize> = (0..ideal.num_generators())
        .map(|j| set_of_generator(ideal, j).map(|s| s.len()))
        .collect::<Result<_>>()?;
    let top = sizes.iter().copied().max().unwrap_or(0);
    let mut ranks = vec![0usize; top + 1];
    for s in sizes {
        for (i, r) in ranks.iter_mut().enumerate() {
            *r += binomial(s, i);
        }
    }
    Ok(BettiTable { ranks })
}

/// One generator row of a [`BLReport`].
#[derive(Clone, Debug, Serialize)]
pub struct BLGeneratorEntry {
    pub generator: String,
    /// 1-based variable indices of the quotient set, ascending.
    pub set: Vec<usize>,
    pub set_variables: Vec<String>,
}

/// Full report on the derived-graph ideal of one input graph.
#[derive(Clone, Debug, Serialize)]
pub struct BLReport {
    pub graph: Graph,
    pub derived_graph: Graph,
    pub variables: Vec<String>,
    pub generators: Vec<BLGeneratorEntry>,
    pub has_linear_quotients: bool,
    pub regular_decomposition: bool,
    /// `β_i(I)` from the quotient sets (ideal convention).
    pub betti_ideal: Vec<usize>,
    /// The same table in quotient-ring convention (leading 1 prepended).
    pub betti_quotient: Vec<usize>,
    pub notes: Vec<String>,
}

/// Build the ordered ideal of the derived graph, check linear quotients
/// and regularity, and read off the Betti table. Notes record every mixed
/// generator whose colon-computed quotient set differs from the naive
/// closed formula that ignores edge order.
pub fn bl_report(g: &Graph) -> Result<BLReport> {
    let ideal = bl_ideal_ordered(g)?;
    let lq = has_linear_quotients(&ideal);
    if !lq {
        return Ok(BLReport {
            graph: g.clone(),
            derived_graph: bl_graph(g)?,
            variables: ideal.var_names.names().to_vec(),
            generators: Vec::new(),
            has_linear_quotients: false,
            regular_decomposition: false,
            betti_ideal: Vec::new(),
            betti_quotient: Vec::new(),
            notes: vec!["the canonical order does not give linear quotients".to_string()],
        });
    }
    let n = g.n;
    let mut entries = Vec::new();
    let mut notes = Vec::new();
    for j in 0..ideal.num_generators() {
        let set = set_of_generator(&ideal, j)?;
        let gen_string = ideal.var_names.monomial_string(&ideal.generators[j]);
        // For mixed generators x_i·y_k, the closed formula that ignores
        // which edges come earlier would list every edge at x_i; the colon
        // keeps only the earlier ones. Surface the difference.
        let support = ideal.generators[j].support();
        if support.iter().any(|&v| v >= n) {
            let i = support.iter().find(|&&v| v < n).copied().unwrap_or(0) + 1;
            let naive: BTreeSet<usize> = (1..=n)
                .filter(|&k| k != i)
                .chain(ideal.generators.iter().filter_map(|other| {
                    let s = other.support();
                    (s.len() == 2 && s[0] == i - 1 && s[1] >= n).then(|| s[1] + 1)
                }))
                .collect();
            if naive != set {
                let extra: Vec<String> = naive
                    .difference(&set)
                    .map(|&v| ideal.var_names.name(v - 1).to_string())
                    .collect();
                notes.push(format!(
                    "set({gen_string}) by colon omits {{{}}} that the orderless \
                     closed formula would include",
                    extra.join(", ")
                ));
            }
        }
        entries.push(BLGeneratorEntry {
            generator: gen_string,
            set_variables: set
                .iter()
                .map(|&v| ideal.var_names.name(v - 1).to_string())
                .collect(),
            set: set.into_iter().collect(),
        });
    }
    let regular = is_regular_decomposition(&ideal)?;
    let table = betti_from_linear_quotients(&ideal)?;
    let mut quotient = vec![1usize];
    quotient.extend_from_slice(&table.ranks);
    Ok(BLReport {
        graph: g.clone(),
        derived_graph: bl_graph(g)?,
        variables: ideal.var_names.names().to_vec(),
        generators: entries,
        has_linear_quotients: true,
        regular_decomposition: regular,
        betti_ideal: table.ranks,
        betti_quotient: quotient,
        notes,
    })
}

/// Cross-check helper: the same Betti table from the minimalized simplex
/// resolution of the unordered ideal. Limited to small generator counts.
pub fn betti_oracle(ideal: &OrderedIdeal, field: FieldChoice) -> Result<BettiTable> {
    let unordered = MonomialIdeal::from_generators(
        ideal.var_names.len(),
        ideal.generators.clone(),
    )?;
    betti(&unordered, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(n: usize, vars: &[usize]) -> ExponentVector {
        let mut v = vec![0u32; n];
        for &i in vars {
            v[i] = 1;
        }
        ExponentVector::new(v)
    }

    #[test]
    fn derived_graph_shapes() {
        let p3 = bl_graph(&Graph::path(3)).unwrap();
        assert_eq!(p3.n, 5);
        assert_eq!(p3.edges.len(), 7);
        p3.validate().unwrap();

        // A single edge derives to a triangle on {1, 2, e1}.
        let k2 = bl_graph(&Graph::path(2)).unwrap();
        assert_eq!(k2.n, 3);
        assert_eq!(k2.edges, vec![(1, 2), (1, 3), (2, 3)]);

        // No edges: the derived graph is the complete graph.
        let empty4 = bl_graph(&Graph {
            n: 4,
            edges: vec![],
        })
        .unwrap();
        assert_eq!(empty4.n, 4);
        assert_eq!(empty4.edges.len(), 6);
    }

    #[test]
    fn ordered_ideal_of_the_short_path() {
        let ideal = bl_ideal_ordered(&Graph::path(3)).unwrap();
        assert_eq!(
            ideal.generator_strings(),
            vec!["x1*x2", "x1*x3", "x2*x3", "x1*y1", "x2*y1", "x2*y2", "x3*y2"]
        );
        let k2 = bl_ideal_ordered(&Graph::path(2)).unwrap();
        assert_eq!(k2.generator_strings(), vec!["x1*x2", "x1*y1", "x2*y1"]);
        let c3 = bl_ideal_ordered(&Graph::cycle(3)).unwrap();
        assert_eq!(c3.num_generators(), 9);
    }

    #[test]
    fn linear_quotients_verdicts() {
        assert!(has_linear_quotients(
            &bl_ideal_ordered(&Graph::path(3)).unwrap()
        ));
        // (xy, zw): the colon (xy) : zw = (xy) has a degree-2 generator.
        let bad = OrderedIdeal::new(
            VarNames::standard(4),
            vec![sf(4, &[0, 1]), sf(4, &[2, 3])],
        )
        .unwrap();
        assert!(!has_linear_quotients(&bad));
        assert!(matches!(
            set_of_generator(&bad, 1),
            Err(Error::NoLinearQuotients(2))
        ));
        // The maximal ideal works in any order.
        let maximal = OrderedIdeal::new(
            VarNames::standard(3),
            vec![sf(3, &[1]), sf(3, &[0]), sf(3, &[2])],
        )
        .unwrap();
        assert!(has_linear_quotients(&maximal));
    }

    #[test]
    fn quotient_sets_of_the_short_path() {
        let ideal = bl_ideal_ordered(&Graph::path(3)).unwrap();
        let sets: Vec<BTreeSet<usize>> = (0..7)
            .map(|j| set_of_generator(&ideal, j).unwrap())
            .collect();
        assert_eq!(sets[0], BTreeSet::new()); // x1x2
        assert_eq!(sets[1], BTreeSet::from([2])); // x1x3
        assert_eq!(sets[2], BTreeSet::from([1])); // x2x3
        assert_eq!(sets[3], BTreeSet::from([2, 3])); // x1y1
        assert_eq!(sets[4], BTreeSet::from([1, 3])); // x2y1
        assert_eq!(sets[5], BTreeSet::from([1, 3, 4])); // x2y2
        assert_eq!(sets[6], BTreeSet::from([1, 2])); // x3y2
    }

    #[test]
    fn decomposition_function_scans_divisors() {
        let ideal = bl_ideal_ordered(&Graph::path(3)).unwrap();
        // x1x2x3 is divisible by x1x2 first.
        assert_eq!(
            decomposition_function(&ideal, &sf(5, &[0, 1, 2])).unwrap(),
            0
        );
        // x2·(x1y1) = x1x2y1 is again caught by x1x2.
        assert_eq!(
            decomposition_function(&ideal, &sf(5, &[0, 1, 3])).unwrap(),
            0
        );
        // Each generator decomposes to itself.
        for (j, g) in ideal.generators().iter().enumerate() {
            assert_eq!(decomposition_function(&ideal, g).unwrap(), j);
        }
        assert!(matches!(
            decomposition_function(&ideal, &sf(5, &[0])),
            Err(Error::NotInIdeal)
        ));
        assert!(matches!(
            decomposition_function(&ideal, &sf(5, &[3, 4])),
            Err(Error::NotInIdeal)
        ));
    }

    #[test]
    fn regularity_verdicts() {
        for g in [Graph::path(3), Graph::cycle(4)] {
            let ideal = bl_ideal_ordered(&g).unwrap();
            assert!(is_regular_decomposition(&ideal).unwrap());
        }
        let maximal = OrderedIdeal::new(
            VarNames::standard(3),
            vec![sf(3, &[0]), sf(3, &[1]), sf(3, &[2])],
        )
        .unwrap();
        assert!(is_regular_decomposition(&maximal).unwrap());
    }

    #[test]
    fn betti_tables_from_quotient_sets() {
        let maximal = OrderedIdeal::new(
            VarNames::standard(3),
            vec![sf(3, &[0]), sf(3, &[1]), sf(3, &[2])],
        )
        .unwrap();
        assert_eq!(
            betti_from_linear_quotients(&maximal).unwrap().ranks,
            vec![3, 3, 1]
        );

        let k2 = bl_ideal_ordered(&Graph::path(2)).unwrap();
        let table = betti_from_linear_quotients(&k2).unwrap();
        assert_eq!(table.ranks, vec![3, 2]);
        let oracle = betti_oracle(&k2, FieldChoice::Rational).unwrap();
        assert_eq!(oracle.ranks[1..], table.ranks[..]);

        let p3 = bl_ideal_ordered(&Graph::path(3)).unwrap();
        let table = betti_from_linear_quotients(&p3).unwrap();
        assert_eq!(table.ranks, vec![7, 11, 6, 1]);
        let oracle = betti_oracle(&p3, FieldChoice::Rational).unwrap();
        assert_eq!(oracle.ranks[1..], table.ranks[..]);
    }

    #[test]
    fn report_of_the_short_path() {
        let report = bl_report(&Graph::path(3)).unwrap();
        assert!(report.has_linear_quotients);
        assert!(report.regular_decomposition);
        assert_eq!(report.betti_ideal, vec![7, 11, 6, 1]);
        assert_eq!(report.betti_quotient, vec![1, 7, 11, 6, 1]);
        assert_eq!(report.generators.len(), 7);
        assert_eq!(report.variables, vec!["x1", "x2", "x3", "y1", "y2"]);
        // x2y1 is where the orderless closed formula would also list y2.
        assert!(report.notes.iter().any(|s| s.contains("set(x2*y1)")));
        let row = &report.generators[5];
        assert_eq!(row.generator, "x2*y2");
        assert_eq!(row.set, vec![1, 3, 4]);
        assert_eq!(row.set_variables, vec!["x1", "x3", "y1"]);
    }

    /// The closed formula for pure pair generators: set(x_i x_j) =
    /// {1,…,i−1} ∪ {i+1,…,j−1}; for mixed generators the x-part is
    /// {1,…,n} \ {i}.
    fn check_closed_formulas(g: &Graph) {
        let ideal = bl_ideal_ordered(g).unwrap();
        let n = g.n;
        for (j, m) in ideal.generators().iter().enumerate() {
            let set = set_of_generator(&ideal, j).unwrap();
            let support = m.support();
            if support[1] < n {
                let (a, b) = (support[0] + 1, support[1] + 1);
                let formula: BTreeSet<usize> =
                    (1..a).chain(a + 1..b).collect();
                assert_eq!(set, formula, "pair generator {j} of {g:?}");
            } else {
                let i = support[0] + 1;
                let x_part: BTreeSet<usize> =
                    set.iter().copied().filter(|&v| v <= n).collect();
                let expected: BTreeSet<usize> =
                    (1..=n).filter(|&v| v != i).collect();
                assert_eq!(x_part, expected, "mixed generator {j} of {g:?}");
                // The y-part only references strictly earlier edges.
                let k = support[1] - n + 1;
                assert!(set
                    .iter()
                    .all(|&v| v <= n || v - n < k));
            }
        }
    }

    fn check_graph_thoroughly(g: &Graph, taylor_limit: usize) {
        let ideal = bl_ideal_ordered(g).unwrap();
        assert!(has_linear_quotients(&ideal), "{g:?}");
        assert!(is_regular_decomposition(&ideal).unwrap(), "{g:?}");
        check_closed_formulas(g);
        // Decomposition of x_t·m strictly precedes m whenever t ∈ set(m).
        let n_vars = ideal.var_names().len();
        for (j, m) in ideal.generators().iter().enumerate() {
            for &t in &set_of_generator(&ideal, j).unwrap() {
                let mut e = vec![0u32; n_vars];
                e[t - 1] = 1;
                let b =
                    decomposition_function(&ideal, &m.times(&ExponentVector::new(e))).unwrap();
                assert!(b < j, "decomposition must move strictly earlier");
            }
        }
        if ideal.num_generators() <= taylor_limit {
            let table = betti_from_linear_quotients(&ideal).unwrap();
            let oracle = betti_oracle(&ideal, FieldChoice::Prime(32003)).unwrap();
            assert_eq!(oracle.ranks[1..], table.ranks[..], "{g:?}");
        }
    }

    #[test]
    fn sweep_all_labeled_graphs_up_to_five_vertices() {
        // A single vertex has an empty derived-graph ideal, which the
        // ordered-ideal constructor rejects; the sweep starts at two.
        assert!(bl_ideal_ordered(&Graph { n: 1, edges: vec![] }).is_err());
        for n in 2..=5usize {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
                .collect();
            for mask in 0..(1u32 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                check_graph_thoroughly(&Graph { n, edges }, 11);
            }
        }
    }

    #[test]
    fn sweep_six_vertex_graphs_up_to_relabeling() {
        // All set()/regularity checks are instances of the same per-graph
        // statement, so one representative per isomorphism class suffices
        // at this size. Canonical form: the minimal edge bitmask over all
        // vertex relabelings.
        let n = 6usize;
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        let pair_index = |a: usize, b: usize| -> usize {
            pairs
                .iter()
                .position(|&p| p == (a.min(b), a.max(b)))
                .unwrap()
        };
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut base: Vec<usize> = (1..=n).collect();
        fn heap(k: usize, arr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(arr.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, arr, out);
                if k % 2 == 0 {
                    arr.swap(i, k - 1);
                } else {
                    arr.swap(0, k - 1);
                }
            }
        }
        heap(n, &mut base, &mut perms);
        assert_eq!(perms.len(), 720);
        let tables: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .map(|&(a, b)| pair_index(p[a - 1], p[b - 1]))
                    .collect()
            })
            .collect();

        let mut representatives = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let canonical = tables
                .iter()
                .map(|t| {
                    let mut image = 0u32;
                    for (b, &tb) in t.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            image |= 1 << tb;
                        }
                    }
                    image
                })
                .min()
                .unwrap();
            if canonical == mask {
                representatives.push(mask);
            }
        }
        // Number of simple graphs on six unlabeled vertices.
        assert_eq!(representatives.len(), 156);

        for mask in representatives {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            check_graph_thoroughly(&Graph { n, edges }, 0);
        }
    }

    #[test]
    fn ordered_ideal_rejects_bad_input() {
        let names = VarNames::standard(2);
        assert!(OrderedIdeal::new(names.clone(), vec![]).is_err());
        assert!(OrderedIdeal::new(
            names.clone(),
            vec![sf(2, &[0]), sf(2, &[0])]
        )
        .is_err());
        assert!(OrderedIdeal::new(names.clone(), vec![ExponentVector::one(2)]).is_err());
        assert!(OrderedIdeal::new(names, vec![sf(3, &[0])]).is_err());
    }
}
