//! Small exact integer linear algebra over `i128`.
//!
//! The subdivision and orientation machinery only ever meets tiny dense
//! matrices (lattice points of modest degree in few variables), so
//! fraction-free Gaussian elimination in `i128` is both exact and fast.
//! Intermediate entries of Bareiss elimination are minors of the input,
//! which keeps them comfortably inside `i128` for everything this crate
//! builds.

use num::{BigInt, BigRational, Integer, One, Zero};

pub fn dot(a: &[i128], b: &[i128]) -> i128 {
    assert_eq!(a.len(), b.len(), "dot product of unequal lengths");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Echelon {
    rows: Vec<Vec<i128>>,
    pivot_cols: Vec<usize>,
    swaps: usize,
}

/// Fraction-free (Bareiss) row echelon form with column pivoting.
///
/// Every division below is exact: after `k` steps the working entries are
/// `(k+1) x (k+1)` minors of the original matrix taken on the pivot columns.
fn echelon(mut m: Vec<Vec<i128>>) -> Echelon {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut pivot_cols = Vec::new();
    let mut swaps = 0usize;
    let mut prev = 1i128;
    let mut r = 0usize;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if pr != r {
            m.swap(pr, r);
            swaps += 1;
        }
        let piv = m[r][c];
        for i in r + 1..nrows {
            let lead = m[i][c];
            for j in c + 1..ncols {
                m[i][j] = (m[i][j] * piv - m[r][j] * lead) / prev;
            }
            m[i][c] = 0;
        }
        prev = piv;
        pivot_cols.push(c);
        r += 1;
    }
    Echelon {
        rows: m,
        pivot_cols,
        swaps,
    }
}

pub fn rank(rows: &[Vec<i128>]) -> usize {
    echelon(rows.to_vec()).pivot_cols.len()
}

/// Rank together with a set of pivot columns: the submatrix on those
/// columns has the same rank as the whole matrix.
pub fn rank_with_pivot_columns(rows: &[Vec<i128>]) -> (usize, Vec<usize>) {
    let e = echelon(rows.to_vec());
    (e.pivot_cols.len(), e.pivot_cols)
}

/// Exact determinant of a square matrix.
pub fn det(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    assert!(rows.iter().all(|r| r.len() == n), "det of non-square matrix");
    let e = echelon(rows.to_vec());
    if e.pivot_cols.len() < n {
        return 0;
    }
    // Full rank leaves the final Bareiss pivot equal to +/- det.
    let d = e.rows[n - 1][n - 1];
    if e.swaps % 2 == 0 {
        d
    } else {
        -d
    }
}

pub fn det_sign(rows: &[Vec<i128>]) -> i32 {
    det(rows).signum() as i32
}

/// Primitive integer basis of the right kernel `{ x : M x = 0 }`.
///
/// One basis vector per non-pivot column; each is scaled to integer entries
/// with content 1. Back-substitution runs in exact rationals, so the result
/// is correct regardless of pivot growth.
pub fn nullspace(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let ncols = if rows.is_empty() { 0 } else { rows[0].len() };
    let e = echelon(rows.to_vec());
    let nr = e.pivot_cols.len();
    let mut basis = Vec::new();
    for f in 0..ncols {
        if e.pivot_cols.contains(&f) {
            continue;
        }
        let mut x = vec![BigRational::zero(); ncols];
        x[f] = BigRational::one();
        for i in (0..nr).rev() {
            let pc = e.pivot_cols[i];
            let mut s = BigRational::zero();
            for c in pc + 1..ncols {
                if e.rows[i][c] != 0 && !x[c].is_zero() {
                    s += BigRational::from_integer(e.rows[i][c].into()) * &x[c];
                }
            }
            x[pc] = -s / BigRational::from_integer(e.rows[i][pc].into());
        }
        basis.push(primitive_integer_vector(&x));
    }
    basis
}

/// Scale a rational vector to a primitive integer vector (content 1),
/// preserving direction.
fn primitive_integer_vector(x: &[BigRational]) -> Vec<i128> {
    let mut scale = BigInt::one();
    for v in x {
        scale = scale.lcm(v.denom());
    }
    let ints: Vec<BigInt> = x.iter().map(|v| v.numer() * &scale / v.denom()).collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    ints.iter()
        .map(|v| {
            i128::try_from(v / &content).expect("kernel vector exceeds i128 range")
        })
        .collect()
}
