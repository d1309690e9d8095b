//! Scanner for the open statements about the normalized integrals.
//!
//! Checked per instance, each yielding a [`Finding`]:
//! - the binomial-basis degree is exactly `2|i|`
//! - the binomial-basis coefficients are nonnegative and log-concave
//! - `Σ_{i=0}^{g} (-2)^i D((ℓ, i), g) = 0` when `|ℓ| ≤ g - 1`
//! - `i ↦ 2^{|ℓ|+i+1} X((ℓ, i), g)` is log-concave for both kinds
//! - `2^{2g} D((g-1, g), g)` counts the up-down permutations of `[1..=2g-1]`

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinat::pow2;
use crate::engine::{Engine, IntegralKey, Kind};
use crate::error::Result;
use crate::multiindex::MultiIndex;
use crate::oracles::alternating_permutation_count;
use crate::polybasis::{degree_report, extract};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConjectureId {
    Degree,
    Nonnegative,
    CoefficientLogConcave,
    VanishingSum,
    SliceLogConcave,
    Zigzag,
}

impl ConjectureId {
    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::Degree => "degree",
            ConjectureId::Nonnegative => "nonnegative-coefficients",
            ConjectureId::CoefficientLogConcave => "log-concave-coefficients",
            ConjectureId::VanishingSum => "vanishing-sum",
            ConjectureId::SliceLogConcave => "log-concave-slices",
            ConjectureId::Zigzag => "zigzag",
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Violated,
    Vacuous,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::Vacuous => "vacuous",
        }
    }
}

/// A labelled exact number attached to a finding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub value: Rational,
}

fn witness(label: impl Into<String>, value: impl Into<Rational>) -> Witness {
    Witness { label: label.into(), value: value.into() }
}

fn whole(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub id: ConjectureId,
    pub kind: Option<Kind>,
    /// The index, or the prefix `ℓ` for the per-genus statements.
    pub index: MultiIndex,
    pub genus: Option<u32>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

/// Outcome of a log-concavity check on an integer sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogConcavity {
    Holds,
    /// Fewer than three nonzero terms.
    Vacuous,
    /// `c_k^2 < c_{k-1} c_{k+1}` at this `k`.
    Violated { at: usize },
    /// A zero at position `at` strictly inside the nonzero support.
    Gap { at: usize },
}

impl LogConcavity {
    pub fn status(self) -> Status {
        match self {
            LogConcavity::Holds => Status::Holds,
            LogConcavity::Vacuous => Status::Vacuous,
            LogConcavity::Violated { .. } | LogConcavity::Gap { .. } => Status::Violated,
        }
    }
}

/// Log-concavity over the nonzero support, which must be contiguous.
pub fn check_log_concavity(seq: &[BigInt]) -> LogConcavity {
    let Some(lo) = seq.iter().position(|c| !c.is_zero()) else {
        return LogConcavity::Vacuous;
    };
    let hi = seq.iter().rposition(|c| !c.is_zero()).unwrap();
    if let Some(off) = seq[lo..=hi].iter().position(Zero::is_zero) {
        return LogConcavity::Gap { at: lo + off };
    }
    if hi - lo < 2 {
        return LogConcavity::Vacuous;
    }
    for k in lo + 1..hi {
        if &seq[k] * &seq[k] < &seq[k - 1] * &seq[k + 1] {
            return LogConcavity::Violated { at: k };
        }
    }
    LogConcavity::Holds
}

fn concavity_witnesses(seq: &[BigInt], result: LogConcavity) -> Vec<Witness> {
    match result {
        LogConcavity::Violated { at } => alloc::vec![
            witness("k", BigInt::from(at)),
            witness("c[k-1]", seq[at - 1].clone()),
            witness("c[k]", seq[at].clone()),
            witness("c[k+1]", seq[at + 1].clone()),
        ],
        LogConcavity::Gap { at } => alloc::vec![witness("zero at k", BigInt::from(at))],
        _ => Vec::new(),
    }
}

/// `Σ_{i=0}^{g} (-2)^i D((ℓ, i), g)`.
pub fn vanishing_sum(engine: &mut Engine, genus: u32, prefix: &MultiIndex) -> Rational {
    let mut acc = Rational::zero();
    let mut factor = BigInt::from(1);
    for i in 0..=genus {
        let v = engine.eval(&IntegralKey::twisted(genus, prefix.with_entry(i)));
        acc += v * whole(&factor);
        factor *= -2;
    }
    acc
}

/// `2^{|ℓ|+i+1} X((ℓ, i), g)` for `i = 0..=g`.
pub fn slice(engine: &mut Engine, kind: Kind, genus: u32, prefix: &MultiIndex) -> Result<Vec<BigInt>> {
    (0..=genus)
        .map(|i| engine.normalized_integer(&IntegralKey::new(kind, genus, prefix.with_entry(i))))
        .collect()
}

/// Runs every check over indices of weight `≤ weight_max` and genera `≤ g_max`.
///
/// Findings come grouped by statement, then by kind, genus, and index.
pub fn scan(engine: &mut Engine, g_max: u32, weight_max: u32) -> Result<Vec<Finding>> {
    let mut out = Vec::new();
    let indices = MultiIndex::enumerate(weight_max, weight_max);

    let mut polys = Vec::new();
    for kind in Kind::ALL {
        for index in &indices {
            polys.push(extract(engine, kind, index)?);
        }
    }
    for p in &polys {
        let report = degree_report(p)?;
        let observed = report.observed.unwrap_or(0);
        out.push(Finding {
            id: ConjectureId::Degree,
            kind: Some(p.kind),
            index: p.index.clone(),
            genus: None,
            status: if report.matches_conjecture { Status::Holds } else { Status::Violated },
            witnesses: alloc::vec![
                witness("observed degree", BigInt::from(observed)),
                witness("expected degree", BigInt::from(2 * p.index.weight())),
                witness("proven bound", BigInt::from(report.bound)),
            ],
        });
    }
    for p in &polys {
        let negative = p.coeffs.iter().position(Signed::is_negative);
        out.push(Finding {
            id: ConjectureId::Nonnegative,
            kind: Some(p.kind),
            index: p.index.clone(),
            genus: None,
            status: if negative.is_some() { Status::Violated } else { Status::Holds },
            witnesses: negative
                .map(|k| alloc::vec![witness("k", BigInt::from(k)), witness("c[k]", p.coeffs[k].clone())])
                .unwrap_or_default(),
        });
    }
    for p in &polys {
        let result = check_log_concavity(&p.coeffs);
        out.push(Finding {
            id: ConjectureId::CoefficientLogConcave,
            kind: Some(p.kind),
            index: p.index.clone(),
            genus: None,
            status: result.status(),
            witnesses: concavity_witnesses(&p.coeffs, result),
        });
    }

    for genus in 1..=g_max {
        for prefix in MultiIndex::enumerate(genus - 1, genus - 1) {
            let sum = vanishing_sum(engine, genus, &prefix);
            out.push(Finding {
                id: ConjectureId::VanishingSum,
                kind: Some(Kind::TwistedD),
                index: prefix,
                genus: Some(genus),
                status: if sum.is_zero() { Status::Holds } else { Status::Violated },
                witnesses: alloc::vec![witness("sum", sum)],
            });
        }
    }
    for kind in Kind::ALL {
        for genus in 1..=g_max {
            for prefix in MultiIndex::enumerate(genus - 1, genus - 1) {
                let seq = slice(engine, kind, genus, &prefix)?;
                let result = check_log_concavity(&seq);
                out.push(Finding {
                    id: ConjectureId::SliceLogConcave,
                    kind: Some(kind),
                    index: prefix,
                    genus: Some(genus),
                    status: result.status(),
                    witnesses: concavity_witnesses(&seq, result),
                });
            }
        }
    }

    for genus in 1..=g_max.min(5) {
        let key = IntegralKey::twisted(genus, [genus - 1, genus]);
        let scaled = engine.eval(&key) * whole(&pow2(2 * genus));
        let count = alternating_permutation_count(2 * genus - 1);
        out.push(Finding {
            id: ConjectureId::Zigzag,
            kind: Some(Kind::TwistedD),
            index: key.index,
            genus: Some(genus),
            status: if scaled == whole(&count) { Status::Holds } else { Status::Violated },
            witnesses: alloc::vec![witness("2^(2g) D", scaled), witness("alternating count", count)],
        });
    }
    Ok(out)
}
