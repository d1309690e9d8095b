//! Named verification suites behind `hodgerec verify`.

use clap::ValueEnum;
use hodgerec_core::multiindex::MultiIndex;
use hodgerec_core::oracles::{
    alternating_permutation_count, combinatorial_identity_check, expansion_identity_check, faber_pandharipande,
    identity_lhs, identity_rhs, one_lambda_closed_form, IdentitySign,
};
use hodgerec_core::polybasis::{degree_report, evaluate, extract};
use hodgerec_core::series::{verify_pde, CellCause};
use hodgerec_core::{golden, BigInt, Engine, IntegralKey, Kind, Rational};
use serde::Serialize;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Golden,
    ClosedForms,
    KIndependence,
    Pde,
    Identity,
    PolynomialExtrapolation,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::ClosedForms => "closed-forms",
            Suite::KIndependence => "k-independence",
            Suite::Pde => "pde",
            Suite::Identity => "identity",
            Suite::PolynomialExtrapolation => "polynomial-extrapolation",
        }
    }
}

/// Ranges for a suite; `None` picks the suite's default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Params {
    pub g_max: Option<u32>,
    pub weight_max: Option<u32>,
    pub t_order: Option<u32>,
    pub n_max: Option<u32>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

struct Collector {
    checks: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Collector {
    fn new() -> Self {
        Collector { checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn eq<T: PartialEq + ToString>(&mut self, check: impl FnOnce() -> String, expected: &T, actual: &T) {
        self.checks += 1;
        if expected != actual {
            self.failures.push(Failure {
                check: check(),
                expected: expected.to_string(),
                actual: actual.to_string(),
                note: None,
            });
        }
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite: suite.name().to_string(),
            checks: self.checks,
            passed: self.failures.is_empty(),
            failures: self.failures,
            notes: self.notes,
        }
    }
}

pub fn run(engine: &mut Engine, suite: Suite, params: Params) -> Result<SuiteReport, CliError> {
    let mut c = Collector::new();
    match suite {
        Suite::Golden => golden_values(engine, &mut c),
        Suite::ClosedForms => closed_forms(engine, &mut c, params.g_max.unwrap_or(6)),
        Suite::KIndependence => k_independence(engine, &mut c, params.g_max.unwrap_or(5), params.weight_max.unwrap_or(5))?,
        Suite::Pde => pde(engine, &mut c, params.t_order.unwrap_or(12), params.weight_max.unwrap_or(3))?,
        Suite::Identity => identity(&mut c, params.n_max.unwrap_or(20)),
        Suite::PolynomialExtrapolation => extrapolation(engine, &mut c, params.weight_max.unwrap_or(4))?,
    }
    Ok(c.finish(suite))
}

fn golden_values(engine: &mut Engine, c: &mut Collector) {
    for e in golden::values() {
        let key = e.key();
        let got = engine.eval(&key);
        c.eq(|| format!("{key} ({})", e.source), &e.value(), &got);
    }
}

fn closed_forms(engine: &mut Engine, c: &mut Collector, g_max: u32) {
    for kind in Kind::ALL {
        for g in 0..=g_max {
            for i in 0..=g {
                let key = IntegralKey::new(kind, g, [i]);
                let got = engine.eval(&key);
                c.eq(|| format!("{key} one-λ closed form"), &one_lambda_closed_form(kind, g, i), &got);
            }
        }
    }
    for g in 1..=g_max {
        let key = IntegralKey::twisted(g, [g - 1, g]);
        let got = engine.eval(&key);
        c.eq(|| format!("{key} Bernoulli closed form"), &faber_pandharipande(g), &got);
        if 2 * g - 1 <= 13 {
            let scaled = got * Rational::from_integer(BigInt::from(2).pow(2 * g));
            let count = Rational::from_integer(alternating_permutation_count(2 * g - 1));
            c.eq(|| format!("{key} times 2^(2g) against up-down permutations of {}", 2 * g - 1), &count, &scaled);
        }
    }
}

fn k_independence(engine: &mut Engine, c: &mut Collector, g_max: u32, weight_max: u32) -> Result<(), CliError> {
    for g in 1..=g_max {
        for index in MultiIndex::enumerate(weight_max, g) {
            let w = index.weight();
            let entries = index.entries();
            if w + 2 <= 2 * g {
                let base = engine.eval(&IntegralKey::twisted(g, index.clone()));
                for k in 0..=2 * g - 2 - w {
                    let got = engine.nph_twisted(g, entries, k)?;
                    c.eq(|| format!("D[g={g}, i={index}] at k={k}"), &base, &got);
                }
            }
            if w < 2 * g {
                let base = engine.eval(&IntegralKey::untwisted(g, index.clone()));
                for k in 0..=2 * g - 1 - w {
                    let got = engine.nph_untwisted(g, entries, k)?;
                    c.eq(|| format!("d[g={g}, i={index}] at k={k}"), &base, &got);
                }
            }
        }
    }
    Ok(())
}

fn pde(engine: &mut Engine, c: &mut Collector, t_order: u32, weight_cap: u32) -> Result<(), CliError> {
    if t_order < 4 {
        return Err(CliError::Usage(format!("--t-order must be at least 4, got {t_order}")));
    }
    for slots in [1, 2] {
        let report = verify_pde(engine, slots, t_order, weight_cap)?;
        c.checks += 2 * report.compared;
        for (eq, cells) in [("first", &report.first), ("second", &report.second)] {
            for cell in cells {
                let note = match cell.cause {
                    CellCause::PureHodge => "pure Hodge cell: both products vanish, leaving D(i,g)D((),0) on the left",
                    CellCause::GenusZero => "genus-zero cell: only -G_tt contributes",
                    CellCause::Unexplained => "unexplained",
                };
                c.failures.push(Failure {
                    check: format!(
                        "{eq} equation, slots={slots}, s^{:?} t^{}, left side vs right side",
                        cell.exponent, cell.t_power
                    ),
                    expected: cell.lhs.to_string(),
                    actual: cell.rhs.to_string(),
                    note: Some(note.to_string()),
                });
            }
        }
        let unexplained = report.unexplained().count();
        c.notes.push(format!(
            "slots={slots}: {} mismatched cells of {}, {unexplained} unexplained",
            report.first.len() + report.second.len(),
            2 * report.compared
        ));
    }
    Ok(())
}

fn identity(c: &mut Collector, n_max: u32) {
    let mut expansion_ok = true;
    for n in 0..=n_max {
        for k in 0..=n {
            c.checks += 1;
            if !combinatorial_identity_check(n, k) {
                c.failures.push(Failure {
                    check: format!("n={n}, k={k}"),
                    expected: identity_rhs(n, k).to_string(),
                    actual: identity_lhs(n, k, IdentitySign::Literal).to_string(),
                    note: None,
                });
            }
            expansion_ok &= expansion_identity_check(n, k);
        }
    }
    c.notes.push(format!(
        "with the sign (-1)^(n-l) every pair up to n={n_max} {}",
        if expansion_ok { "holds" } else { "does not hold" }
    ));
}

fn extrapolation(engine: &mut Engine, c: &mut Collector, weight_max: u32) -> Result<(), CliError> {
    for kind in Kind::ALL {
        for index in MultiIndex::enumerate(weight_max, weight_max) {
            let p = extract(engine, kind, &index)?;
            let report = degree_report(&p)?;
            let w = index.weight();
            for g in [w * w + 2, w * w + 3] {
                let want = engine.normalized_integer(&IntegralKey::new(kind, g, index.clone()))?;
                c.eq(|| format!("{kind}[{index}] at g={g}"), &want, &evaluate(&p, g));
            }
            if !report.matches_conjecture {
                c.notes.push(format!(
                    "{kind}[{index}]: degree {:?}, expected {}",
                    report.observed,
                    2 * w
                ));
            }
        }
    }
    Ok(())
}
