//! Exact-arithmetic tools for cellular resolutions of monomial ideals.
//!
//! The crate builds labelled cell complexes (regular CW complexes whose cells
//! carry monomial labels), turns them into complexes of free modules over a
//! polynomial ring, and checks the properties that make those complexes
//! useful: being a resolution, being minimal, admitting multiplication
//! morphisms into larger members of a family, and covering — the combinatorial
//! condition that yields finite-generation witnesses for syzygy modules across
//! a whole family at once.
//!
//! All arithmetic is exact: homology ranks are computed over the rationals by
//! default, with a prime field (`p = 32003`) available as a fast mode.
//!
//! Entry points:
//! - [`monomial`]: exponent vectors and monomial ideals.
//! - [`complex`]: labelled complexes, restriction, reduced homology.
//! - [`subdivision`]: polytope subdivision by hyperplane families.
//! - [`resolution`]: free complexes, acyclicity, minimalization, Betti numbers.
//! - [`morphism`]: multiplication morphisms and compatible chain maps.
//! - [`families`]: the shipped complex families (powers, cubes, paths, …).
//! - [`covering`]: d-covering, covering horizons, finite-generation witnesses.
//! - [`booth_lueker`]: Booth–Lueker graph ideals and linear quotients.
//! - [`io`]: JSON interchange documents.
//! - [`cli`]: the `cellres` command-line front end.

pub mod booth_lueker;
pub mod cli;
pub mod complex;
pub mod covering;
mod error;
pub mod families;
pub mod field;
mod intlin;
pub mod io;
pub mod monomial;
pub mod morphism;
pub mod resolution;
pub mod subdivision;

pub use error::{Error, Result};
