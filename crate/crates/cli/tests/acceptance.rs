//! Exit criteria. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
//!
//! Every comparison is exact equality of reduced rationals or integers; the only tolerances
//! are the wall-clock limits below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hodgerec_core::combinat::binomial;
use hodgerec_core::conjectures::vanishing_sum;
use hodgerec_core::multiindex::MultiIndex;
use hodgerec_core::oracles::{
    brute_force_alternating, combinatorial_identity_check, expansion_identity_check, faber_pandharipande,
    literal_identity_residual, one_lambda_closed_form,
};
use hodgerec_core::polybasis::{degree_bound, degree_report, evaluate, extract};
use hodgerec_core::series::verify_pde;
use hodgerec_core::{golden, BigInt, Engine, IntegralKey, Kind, Rational};

const GOLDEN_LIMIT: Duration = Duration::from_secs(10);
const ZIGZAG_LIMIT: Duration = Duration::from_secs(60);
const K_INDEPENDENCE_LIMIT: Duration = Duration::from_secs(300);
const PDE_LIMIT: Duration = Duration::from_secs(120);
const GENUS_EIGHT_LIMIT: Duration = Duration::from_secs(30);

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn golden_via_cli() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hodgerec"))
        .args(["verify", "--suite", "golden"])
        .env_remove("HODGEREC_CACHE")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("JSON report");
    let checks = report["checks"].as_u64().unwrap_or(0);
    let failures = report["failures"].as_array().map_or(usize::MAX, Vec::len);
    outcome(
        out.status.code() == Some(0) && checks == 84 && failures == 0 && elapsed < GOLDEN_LIMIT,
        format!("{checks} values, {failures} mismatches, exit {:?}, {elapsed:.2?}", out.status.code()),
    )
}

fn worked_example() -> Outcome {
    let mut e = Engine::new();
    let idx = MultiIndex::new(&[2, 1]);
    let d = extract(&mut e, Kind::TwistedD, &idx).unwrap();
    let u = extract(&mut e, Kind::UntwistedD, &idx).unwrap();
    let want_d = [&ints(&[0, 0])[..], &ints(&[2, 61, 364, 660, 360])].concat();
    let want_u = [&ints(&[0, 0])[..], &ints(&[8, 168, 640, 840, 360])].concat();
    let ok = d.trimmed() == want_d.as_slice() && u.trimmed() == want_u.as_slice();
    outcome(ok, format!("D: {:?}, d: {:?}", &d.trimmed()[2..], &u.trimmed()[2..]))
}

fn binomial_rows() -> Outcome {
    let mut e = Engine::new();
    let mut bad = Vec::new();
    for row in golden::polynomials() {
        let p = extract(&mut e, row.kind, &row.multi_index()).unwrap();
        if p.trimmed() != row.dense().as_slice() {
            bad.push(format!("{}[{}]", row.kind, row.multi_index()));
        }
    }
    // the printed λ1 row reads 3 C(g,2); the stored one is C(g,1) + 2 C(g,2)
    let printed = |g: i64| binomial(g, 2) * 3;
    let corrected = |g: i64| binomial(g, 1) + binomial(g, 2) * 2;
    let mut printed_misses = 0;
    for g in 1..=5u32 {
        let tab = golden::values()
            .iter()
            .find(|v| v.kind == Kind::TwistedD && v.genus == g && v.index == [1])
            .unwrap()
            .value()
            * q(4, 1);
        if tab != Rational::from_integer(corrected(g as i64)) {
            bad.push(format!("corrected λ1 fit at g={g}"));
        }
        if tab != Rational::from_integer(printed(g as i64)) {
            printed_misses += 1;
        }
    }
    let longest = golden::polynomials().iter().map(|r| r.first + r.coeffs.len() - 1).max().unwrap();
    outcome(
        bad.is_empty(),
        format!(
            "{} rows, mismatches {:?}, top basis index C(g,{longest}); printed λ1 row misses the value table at {printed_misses} of 5 genera",
            golden::polynomials().len(),
            bad
        ),
    )
}

fn closed_forms() -> Outcome {
    let mut e = Engine::new();
    let mut n = 0;
    let mut bad = Vec::new();
    for kind in Kind::ALL {
        for g in 0..=6 {
            for i in 0..=g {
                n += 1;
                if e.eval(&IntegralKey::new(kind, g, [i])) != one_lambda_closed_form(kind, g, i) {
                    bad.push(format!("{kind} g={g} i={i}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} one-λ values, mismatches {bad:?}"))
}

fn bernoulli_form() -> Outcome {
    let mut e = Engine::new();
    let got: Vec<Rational> = (1..=6).map(|g| e.eval(&IntegralKey::twisted(g, [g - 1, g]))).collect();
    let formula: Vec<Rational> = (1..=6).map(faber_pandharipande).collect();
    let listed = [q(1, 4), q(1, 8), q(1, 4), q(17, 16), q(31, 4)];
    let table_ok = (3..=5).all(|g| {
        golden::values()
            .iter()
            .any(|v| v.key() == IntegralKey::twisted(g, [g - 1, g]) && v.value() == listed[g as usize - 1])
    });
    let shown: Vec<String> = got.iter().map(ToString::to_string).collect();
    outcome(got == formula && got[..5] == listed && table_ok, format!("g=1..6: {}", shown.join(", ")))
}

fn zigzag() -> Outcome {
    let mut e = Engine::new();
    let start = Instant::now();
    let mut ok = true;
    let mut shown = Vec::new();
    for g in 1..=5u32 {
        let count = brute_force_alternating(2 * g - 1);
        let scaled = e.eval(&IntegralKey::twisted(g, [g - 1, g])) * q(1 << (2 * g), 1);
        ok &= scaled == q(count as i64, 1);
        shown.push(count.to_string());
    }
    let elapsed = start.elapsed();
    ok &= shown == ["1", "2", "16", "272", "7936"] && elapsed < ZIGZAG_LIMIT;
    outcome(ok, format!("brute-force counts {} in {elapsed:.2?}", shown.join(", ")))
}

fn k_independence() -> Outcome {
    let mut e = Engine::new();
    let start = Instant::now();
    let mut n = 0;
    let mut bad = Vec::new();
    for g in 1..=5u32 {
        for idx in MultiIndex::enumerate(5, g) {
            let w = idx.weight();
            if w + 2 <= 2 * g {
                let base = e.eval(&IntegralKey::twisted(g, idx.clone()));
                for k in 0..=2 * g - 2 - w {
                    n += 1;
                    if e.nph_twisted(g, idx.entries(), k).unwrap() != base {
                        bad.push(format!("D g={g} i={idx} k={k}"));
                    }
                }
            }
            if w < 2 * g {
                let base = e.eval(&IntegralKey::untwisted(g, idx.clone()));
                for k in 0..=2 * g - 1 - w {
                    n += 1;
                    if e.nph_untwisted(g, idx.entries(), k).unwrap() != base {
                        bad.push(format!("d g={g} i={idx} k={k}"));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(bad.is_empty() && elapsed < K_INDEPENDENCE_LIMIT, format!("{n} (key, k) pairs, mismatches {bad:?}, {elapsed:.2?}"))
}

fn integrality() -> Outcome {
    let mut e = Engine::new();
    let mut n = 0;
    let mut bad = Vec::new();
    for kind in Kind::ALL {
        for g in 0..=6u32 {
            for idx in MultiIndex::enumerate(2 * g, g) {
                let key = IntegralKey::new(kind, g, idx);
                let v = e.eval(&key);
                if v == q(0, 1) {
                    continue;
                }
                n += 1;
                if e.normalized_integer(&key).is_err() {
                    bad.push(key.to_string());
                }
            }
        }
    }
    outcome(bad.is_empty() && n > 0, format!("{n} nonzero values with g <= 6, non-integral {bad:?}"))
}

fn polynomiality() -> Outcome {
    let mut e = Engine::new();
    let mut bad = Vec::new();
    let mut off_conjecture = Vec::new();
    let mut n = 0;
    for kind in Kind::ALL {
        for idx in MultiIndex::enumerate(4, 4) {
            let p = extract(&mut e, kind, &idx).unwrap();
            let w = idx.weight();
            for g in [w * w + 2, w * w + 3] {
                n += 1;
                let want = e.normalized_integer(&IntegralKey::new(kind, g, idx.clone())).unwrap();
                if evaluate(&p, g) != want {
                    bad.push(format!("{kind}[{idx}] g={g}"));
                }
            }
            match degree_report(&p) {
                Ok(r) if r.observed.unwrap_or(0) <= degree_bound(&idx) => {
                    if !r.matches_conjecture {
                        off_conjecture.push(format!("{kind}[{idx}]"));
                    }
                }
                _ => bad.push(format!("{kind}[{idx}] degree above bound")),
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{n} extrapolations, failures {bad:?}; degree = 2|i| except at {off_conjecture:?}"
        ),
    )
}

fn pde() -> Outcome {
    let mut e = Engine::new();
    let start = Instant::now();
    let mut cells = Vec::new();
    let mut compared = 0;
    let mut unexplained = 0;
    for slots in [1, 2] {
        let r = verify_pde(&mut e, slots, 12, 3).unwrap();
        compared += 2 * r.compared;
        unexplained += r.unexplained().count();
        for c in r.cells() {
            cells.push(format!("slots={slots} s^{:?} t^{} {:?} offset {}", c.exponent, c.t_power, c.cause, c.offset()));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        cells.is_empty() && elapsed < PDE_LIMIT,
        format!(
            "{compared} cells in {elapsed:.2?}; {} nonzero residuals ({unexplained} unexplained): {}",
            cells.len(),
            cells.join("; ")
        ),
    )
}

fn vanishing() -> Outcome {
    let mut e = Engine::new();
    let mut n = 0;
    let mut bad = Vec::new();
    for g in 1..=4u32 {
        for prefix in MultiIndex::enumerate(g - 1, g - 1) {
            n += 1;
            let s = vanishing_sum(&mut e, g, &prefix);
            if s != q(0, 1) {
                bad.push(format!("g={g} prefix={prefix}: {s}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} sums, nonzero {bad:?}"))
}

fn identity() -> Outcome {
    let mut failing = Vec::new();
    let mut expansion = true;
    let mut n_pairs = 0;
    for n in 0..=20u32 {
        for k in 0..=n {
            n_pairs += 1;
            if !combinatorial_identity_check(n, k) {
                failing.push((n, k));
            }
            expansion &= expansion_identity_check(n, k);
        }
    }
    let all_odd = failing.iter().all(|&(n, _)| n % 2 == 1);
    let first = failing.first().map(|&(n, k)| format!(" first ({n},{k}) residual {}", literal_identity_residual(n, k)));
    outcome(
        failing.is_empty(),
        format!(
            "{} of {n_pairs} pairs fail as written{} (all odd n: {all_odd}); with sign (-1)^(n-l) all hold: {expansion}",
            failing.len(),
            first.unwrap_or_default()
        ),
    )
}

fn genus_eight() -> Outcome {
    let mut worst = (Duration::ZERO, String::new());
    let mut rates = Vec::new();
    let indices = MultiIndex::enumerate(5, 8);
    let start = Instant::now();
    for idx in &indices {
        let mut e = Engine::new();
        let t = Instant::now();
        e.eval(&IntegralKey::twisted(8, idx.clone()));
        let dt = t.elapsed();
        if dt > worst.0 {
            worst = (dt, idx.to_string());
        }
        rates.push(e.memo().hit_rate());
    }
    let mean = rates.iter().sum::<f64>() / rates.len() as f64;
    outcome(
        worst.0 < GENUS_EIGHT_LIMIT,
        format!(
            "{} indices cold in {:.2?}, slowest [{}] {:.2?}, mean memo hit rate {mean:.3}",
            indices.len(),
            start.elapsed(),
            worst.1,
            worst.0
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (1, "reference values via verify --suite golden", golden_via_cli),
        (2, "worked (2,1) binomial coefficients", worked_example),
        (3, "binomial-basis reference rows", binomial_rows),
        (4, "one-λ closed forms, g <= 6", closed_forms),
        (5, "λ_{g-1}λ_g Bernoulli formula, g <= 6", bernoulli_form),
        (6, "up-down permutation counts, g <= 5", zigzag),
        (7, "k-independence, g <= 5, |i| <= 5", k_independence),
        (8, "integrality, g <= 6", integrality),
        (9, "polynomial extrapolation, |i| <= 4", polynomiality),
        (10, "PDE residuals, slots 1 and 2, t_order 12, weight 3", pde),
        (11, "vanishing sums, g <= 4", vanishing),
        (12, "binomial-product identity, n <= 20", identity),
        (13, "genus 8 cold evaluation, |i| <= 5", genus_eight),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let o = check();
        if !o.passed {
            failed += 1;
        }
        println!("{} criterion {id:>2}: {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
