//! Exact coefficient fields for homological computations.
//!
//! Two fields are supported: the rationals (the default, via arbitrary
//! precision integers) and a prime field `F_p` (`p = 32003` is the
//! conventional fast mode). Field structures follow the "context object"
//! pattern: a [`Field`] value owns the arithmetic and its elements are plain
//! data, which keeps a runtime-chosen prime out of the element type.

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A field, presented as a context object acting on its element type.
pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b).expect("division by zero"))
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// A prime field `F_p`, elements stored as reduced `u64` residues.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Runtime choice of coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldChoice {
    /// Exact rationals (the default).
    Rational,
    /// The prime field `F_p`.
    Prime(u64),
}

/// The conventional fast-mode prime.
pub const FAST_PRIME: u64 = 32003;

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Rational
    }
}

impl FieldChoice {
    /// Parse the CLI spellings `q` and `p32003` (any `p<prime>` works).
    pub fn parse(s: &str) -> Result<Self> {
        if s == "q" || s == "Q" {
            return Ok(FieldChoice::Rational);
        }
        if let Some(num) = s.strip_prefix('p') {
            let p: u64 = num
                .parse()
                .map_err(|_| Error::Input(format!("bad field spec '{s}'")))?;
            PrimeField::new(p)?;
            return Ok(FieldChoice::Prime(p));
        }
        Err(Error::Input(format!(
            "bad field spec '{s}' (expected 'q' or 'p32003')"
        )))
    }

    pub fn describe(&self) -> String {
        match self {
            FieldChoice::Rational => "Q".to_string(),
            FieldChoice::Prime(p) => format!("F_{p}"),
        }
    }
}

/// Run `$body` with `$f` bound to the concrete field named by a
/// [`FieldChoice`]. The enclosing function must return [`crate::Result`]
/// (a bad prime surfaces as an error).
macro_rules! with_field {
    ($choice:expr, $f:ident, $body:expr) => {
        match $choice {
            $crate::field::FieldChoice::Rational => {
                let $f = $crate::field::Rationals;
                $body
            }
            $crate::field::FieldChoice::Prime(p) => {
                let $f = $crate::field::PrimeField::new(p)?;
                $body
            }
        }
    };
}
pub(crate) use with_field;

/// Rank of a dense matrix over a field, by Gaussian elimination.
///
/// `rows` is consumed; an empty matrix has rank 0.
pub fn matrix_rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row >= nrows {
            break;
        }
        let Some(found) = (pivot_row..nrows).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = field
            .inv(&rows[pivot_row][col])
            .expect("pivot is nonzero");
        for r in pivot_row + 1..nrows {
            if field.is_zero(&rows[r][col]) {
                continue;
            }
            let factor = field.mul(&rows[r][col], &inv);
            for c in col..ncols {
                let delta = field.mul(&factor, &rows[pivot_row][c]);
                rows[r][c] = field.sub(&rows[r][c], &delta);
            }
        }
        pivot_row += 1;
        rank += 1;
    }
    rank
}
