//! Normalized integrals as integer-valued polynomials in `g`.
//!
//! `N(g) = 2^{|i|+1} X(i, g)` is a polynomial of degree at most `|i|^2 + 1` with integer
//! coordinates `c_k` in the basis `C(g, k)`. Extraction reads `N(0), …, N(|i|^2 + 1)` off the
//! engine and peels them with `c_k = N(k) - Σ_{j<k} c_j C(k, j)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::binomial;
use crate::engine::{Engine, IntegralKey, Kind};
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPolynomial {
    pub kind: Kind,
    pub index: MultiIndex,
    /// `c_0, …, c_{|i|^2+1}`, trailing zeros kept.
    pub coeffs: Vec<BigInt>,
    /// `|i| + 1`.
    pub scale_exp: u32,
    /// Smallest `g` with a nonzero integral, if any in range.
    pub first_nonzero: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    /// Largest `k` with `c_k ≠ 0`; `None` for the zero polynomial.
    pub observed: Option<usize>,
    pub bound: usize,
    /// Whether `observed = 2|i|`.
    pub matches_conjecture: bool,
}

/// `|i|^2 + 1`.
pub fn degree_bound(index: &MultiIndex) -> usize {
    let w = index.weight() as usize;
    w * w + 1
}

pub fn extract(engine: &mut Engine, kind: Kind, index: &MultiIndex) -> Result<BinomialPolynomial> {
    let top = degree_bound(index);
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(top + 1);
    let mut first_nonzero = None;
    for g in 0..=top {
        let n = engine.normalized_integer(&IntegralKey::new(kind, g as u32, index.clone()))?;
        if first_nonzero.is_none() && !n.is_zero() {
            first_nonzero = Some(g as u32);
        }
        let mut c = n;
        for (j, cj) in coeffs.iter().enumerate() {
            if !cj.is_zero() {
                c -= cj * binomial(g as i64, j as i64);
            }
        }
        coeffs.push(c);
    }
    Ok(BinomialPolynomial { kind, index: index.clone(), coeffs, scale_exp: index.weight() + 1, first_nonzero })
}

/// `Σ_k c_k C(g, k)`.
pub fn evaluate(p: &BinomialPolynomial, g: u32) -> BigInt {
    p.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| c * binomial(g as i64, k as i64))
        .sum()
}

pub fn degree_report(p: &BinomialPolynomial) -> Result<DegreeReport> {
    let observed = p.coeffs.iter().rposition(|c| !c.is_zero());
    let bound = degree_bound(&p.index);
    if let Some(d) = observed {
        if d > bound {
            return Err(Error::DegreeBound { kind: p.kind, index: p.index.clone(), degree: d, bound });
        }
    }
    let matches_conjecture = observed.unwrap_or(0) == 2 * p.index.weight() as usize;
    Ok(DegreeReport { observed, bound, matches_conjecture })
}

impl BinomialPolynomial {
    /// Coefficients up to the observed degree.
    pub fn trimmed(&self) -> &[BigInt] {
        let end = self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |d| d + 1);
        &self.coeffs[..end]
    }
}
