//! Exact evaluation of one-point Z2 Hurwitz-Hodge integrals on the hyperelliptic locus.
//!
//! The two families of integrals are
//!
//! * `D(i, g)`: a monomial `λ_{i_1} ⋯ λ_{i_n}` against the top power of one ψ-class on the
//!   space of genus 0 stable maps to `BZ2` with `2g + 2` twisted points, and
//! * `d(i, g)`: the same with one extra untwisted point carrying the ψ-class.
//!
//! [`Engine`] evaluates both through memoized recursions over exact rationals. Around it sit
//! independent closed forms ([`oracles`]), the binomial-basis polynomials in `g`
//! ([`polybasis`]), truncated generating functions and their PDE system ([`series`]), a
//! conjecture scanner ([`conjectures`]) and reference tables ([`golden`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod combinat;
pub mod conjectures;
pub mod engine;
mod error;
pub mod golden;
pub mod multiindex;
pub mod oracles;
pub mod polybasis;
pub mod series;

pub use engine::{Engine, IntegralKey, Kind, MemoStore};
pub use error::{Error, Result};
pub use multiindex::MultiIndex;

/// Exact value type of every integral.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;
