//! Monomials as dense exponent vectors, and monomial ideals given by minimal
//! generating sets.
//!
//! A monomial in `n` variables is its exponent vector in `N^n`; the zero
//! vector is the monomial `1`. Componentwise max is `lcm`, componentwise sum
//! is the product, and componentwise `<=` is divisibility. Operations that
//! combine two vectors require equal lengths and panic otherwise; inputs that
//! cross a serialization or CLI boundary are length-checked there.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A monomial, stored as its dense exponent vector.
///
/// `Ord` is lexicographic on the exponents; it is the canonical order used
/// everywhere a deterministic order of labels is needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True for the monomial `1` (all exponents zero).
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn check_len(&self, other: &Self) {
        assert_eq!(
            self.0.len(),
            other.0.len(),
            "exponent vectors have mismatched lengths ({} vs {})",
            self.0.len(),
            other.0.len()
        );
    }

    /// Least common multiple: componentwise max.
    pub fn lcm(&self, other: &Self) -> Self {
        self.check_len(other);
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Greatest common divisor: componentwise min.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_len(other);
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// Product of monomials: componentwise sum.
    pub fn times(&self, other: &Self) -> Self {
        self.check_len(other);
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// Whether `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Self) -> bool {
        self.check_len(other);
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        self.check_len(other);
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<u32>>>()
            .map(ExponentVector)
    }

    /// Support: indices (0-based) of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Push the exponents through an injection of variable indices into a
    /// larger variable set; unassigned target variables get exponent zero.
    pub fn rename(&self, injection: &[usize], target_n: usize) -> Result<Self> {
        if injection.len() != self.0.len() {
            return Err(Error::LengthMismatch(injection.len(), self.0.len()));
        }
        let mut out = vec![0u32; target_n];
        let mut seen = vec![false; target_n];
        for (i, &img) in injection.iter().enumerate() {
            if img >= target_n || seen[img] {
                return Err(Error::BadRenaming);
            }
            seen[img] = true;
            out[img] = self.0[i];
        }
        Ok(ExponentVector(out))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// Variable names for display and parsing.
///
/// The default scheme uses `x, y, z, w, t, u, v` for up to seven variables
/// and `x1, x2, …` beyond that.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarNames(Vec<String>);

const LETTER_VARS: [&str; 7] = ["x", "y", "z", "w", "t", "u", "v"];

impl VarNames {
    pub fn standard(n: usize) -> Self {
        if n <= LETTER_VARS.len() {
            VarNames(LETTER_VARS[..n].iter().map(|s| s.to_string()).collect())
        } else {
            VarNames((1..=n).map(|i| format!("x{i}")).collect())
        }
    }

    pub fn from_names(names: Vec<String>) -> Self {
        VarNames(names)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// Render a monomial, e.g. `x^2yz` (single-letter names) or
    /// `x1^2*x2*x3` (longer names). The monomial `1` renders as `1`.
    pub fn monomial_string(&self, e: &ExponentVector) -> String {
        assert_eq!(e.len(), self.0.len(), "monomial has wrong variable count");
        if e.is_one() {
            return "1".to_string();
        }
        let needs_sep = self.0.iter().any(|s| s.len() > 1);
        let mut parts = Vec::new();
        for (i, exp) in e.iter().enumerate() {
            if exp == 0 {
                continue;
            }
            if exp == 1 {
                parts.push(self.0[i].clone());
            } else {
                parts.push(format!("{}^{}", self.0[i], exp));
            }
        }
        parts.join(if needs_sep { "*" } else { "" })
    }
}

/// A monomial ideal, kept as its unique minimal generating set, sorted.
///
/// The zero ideal is represented by an empty generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalize the generating set: drop duplicates and any generator
    /// strictly divisible by another. An empty input yields the zero ideal.
    pub fn from_generators(n: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        for g in &gens {
            if g.len() != n {
                return Err(Error::LengthMismatch(g.len(), n));
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize_generators(gens),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Minimal generators of the `k`-th power, `k >= 1`.
    pub fn power(&self, k: usize) -> Self {
        assert!(k >= 1, "ideal powers need k >= 1");
        if self.is_zero() {
            return self.clone();
        }
        let mut current = self.gens.clone();
        for _ in 1..k {
            let mut products = Vec::with_capacity(current.len() * self.gens.len());
            for a in &current {
                for b in &self.gens {
                    products.push(a.times(b));
                }
            }
            current = minimalize_generators(products);
        }
        MonomialIdeal {
            n: self.n,
            gens: current,
        }
    }

    /// Generators of degree `d` dividing the bound `b` — the bounded ideal
    /// `I_{<=b}` inside the maximal-ideal power `m^d`.
    pub fn bounded_maximal_power(n: usize, d: u32, bound: &ExponentVector) -> Result<Self> {
        if bound.len() != n {
            return Err(Error::LengthMismatch(bound.len(), n));
        }
        let mut gens = Vec::new();
        let mut current = vec![0u32; n];
        collect_bounded(&mut gens, &mut current, 0, d, bound);
        Self::from_generators(n, gens)
    }
}

fn collect_bounded(
    out: &mut Vec<ExponentVector>,
    current: &mut Vec<u32>,
    pos: usize,
    remaining: u32,
    bound: &ExponentVector,
) {
    if pos == current.len() {
        if remaining == 0 {
            out.push(ExponentVector::new(current.clone()));
        }
        return;
    }
    let cap = remaining.min(bound.exponent(pos));
    for e in 0..=cap {
        current[pos] = e;
        collect_bounded(out, current, pos + 1, remaining - e, bound);
    }
    current[pos] = 0;
}

/// Drop duplicates and non-minimal elements from a monomial generating set;
/// the result is sorted lexicographically.
pub fn minimalize_generators(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            !gens
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.divides(g) && h != g)
        })
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// The lcm lattice of a label set: all joins of nonempty subsets, computed
/// by closing the set under pairwise lcm. Sorted, duplicate-free.
pub fn lcm_lattice(labels: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut set: BTreeSet<ExponentVector> = labels.iter().cloned().collect();
    loop {
        let current: Vec<ExponentVector> = set.iter().cloned().collect();
        let before = set.len();
        for i in 0..current.len() {
            for j in (i + 1)..current.len() {
                set.insert(current[i].lcm(&current[j]));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

/// Parse an ideal like `(xz,xw,yz,yw)` or `x1x2, x2x3`.
///
/// Single-letter variables come from the fixed alphabet `x,y,z,w,t,u,v`;
/// numbered variables are written `x1, x2, …`. The two schemes cannot be
/// mixed. `^` introduces an exponent (`x^2y`), and `*` separators are
/// allowed. The variable count is the largest variable mentioned.
pub fn parse_ideal(input: &str) -> Result<(VarNames, MonomialIdeal)> {
    let trimmed = input.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Err(Error::Input("empty ideal".to_string()));
    }
    let raw: Vec<Vec<(VarToken, u32)>> = inner
        .split(',')
        .map(|m| tokenize_monomial(m.trim()))
        .collect::<Result<_>>()?;

    let mut any_letter = false;
    let mut any_numbered = false;
    let mut max_index = 0usize; // 0-based variable index
    for mono in &raw {
        for (tok, _) in mono {
            match tok {
                VarToken::Letter(i) => {
                    any_letter = true;
                    max_index = max_index.max(*i);
                }
                VarToken::Numbered(k) => {
                    any_numbered = true;
                    max_index = max_index.max(*k - 1);
                }
            }
        }
    }
    if any_letter && any_numbered {
        return Err(Error::Input(
            "cannot mix letter variables (x,y,z,…) with numbered variables (x1,x2,…)".to_string(),
        ));
    }
    let n = max_index + 1;
    let names = if any_numbered {
        VarNames((1..=n).map(|i| format!("x{i}")).collect())
    } else {
        VarNames::standard(n)
    };
    finish_parse(raw, n, names)
}

fn finish_parse(
    raw: Vec<Vec<(VarToken, u32)>>,
    n: usize,
    names: VarNames,
) -> Result<(VarNames, MonomialIdeal)> {
    let mut gens = Vec::new();
    for mono in raw {
        let mut e = vec![0u32; n];
        for (tok, exp) in mono {
            let idx = match tok {
                VarToken::Letter(i) => i,
                VarToken::Numbered(k) => k - 1,
            };
            e[idx] += exp;
        }
        gens.push(ExponentVector::new(e));
    }
    let ideal = MonomialIdeal::from_generators(n, gens)?;
    Ok((names, ideal))
}

enum VarToken {
    /// Index into the fixed letter alphabet.
    Letter(usize),
    /// 1-based index of a numbered variable `x<k>`.
    Numbered(usize),
}

fn tokenize_monomial(s: &str) -> Result<Vec<(VarToken, u32)>> {
    if s == "1" {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '*' || c.is_whitespace() {
            i += 1;
            continue;
        }
        let letter_pos = LETTER_VARS.iter().position(|v| v.chars().next() == Some(c));
        let Some(pos) = letter_pos else {
            return Err(Error::Input(format!("unexpected character '{c}' in monomial '{s}'")));
        };
        i += 1;
        // digits directly after a letter name a numbered variable
        let mut digits = String::new();
        while i < chars.len() && chars[i].is_ascii_digit() {
            digits.push(chars[i]);
            i += 1;
        }
        let token = if digits.is_empty() {
            VarToken::Letter(pos)
        } else {
            if c != 'x' {
                return Err(Error::Input(format!(
                    "numbered variables must be written x1, x2, … (got '{c}{digits}')"
                )));
            }
            let k: usize = digits
                .parse()
                .map_err(|_| Error::Input(format!("bad variable index '{digits}'")))?;
            if k == 0 {
                return Err(Error::Input("variable indices start at 1".to_string()));
            }
            VarToken::Numbered(k)
        };
        // optional exponent
        let mut exp = 1u32;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let mut ds = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                ds.push(chars[i]);
                i += 1;
            }
            if ds.is_empty() {
                return Err(Error::Input(format!("missing exponent after '^' in '{s}'")));
            }
            exp = ds
                .parse()
                .map_err(|_| Error::Input(format!("bad exponent in '{s}'")))?;
        }
        out.push((token, exp));
    }
    if out.is_empty() {
        return Err(Error::Input(format!("empty monomial '{s}'")));
    }
    Ok(out)
}
