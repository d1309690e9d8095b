//! Row types shared by `compute`, `table` and `golden`, with CSV and JSON writers.

use std::io::Write;

use hodgerec_core::{golden, Engine, IntegralKey, Kind, MultiIndex, Rational};
use serde::Serialize;

use crate::error::CliError;

/// One value, in the CSV column order.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ValueRow {
    pub kind: String,
    pub g: u32,
    pub index: String,
    pub numerator: String,
    pub denominator: String,
    pub normalized_integer: String,
}

impl ValueRow {
    pub fn new(key: &IntegralKey, value: &Rational) -> Self {
        let scaled = value * Rational::from_integer(hodgerec_core::BigInt::from(2).pow(key.index.weight() + 1));
        ValueRow {
            kind: key.kind.symbol().to_string(),
            g: key.genus,
            index: key.index.to_string(),
            numerator: value.numer().to_string(),
            denominator: value.denom().to_string(),
            normalized_integer: scaled.to_string(),
        }
    }
}

/// Nonzero `D` then `d` values at genus `g` with `|i| ≤ weight_max`, by weight then index.
pub fn table_rows(engine: &mut Engine, genus: u32, weight_max: u32) -> Vec<ValueRow> {
    let indices = MultiIndex::enumerate(weight_max, genus);
    let mut rows = Vec::new();
    for kind in Kind::ALL {
        for index in &indices {
            let key = IntegralKey::new(kind, genus, index.clone());
            let value = engine.eval(&key);
            if value != Rational::from_integer(0.into()) {
                rows.push(ValueRow::new(&key, &value));
            }
        }
    }
    rows
}

pub fn golden_value_rows() -> Vec<ValueRow> {
    golden::values().iter().map(|e| ValueRow::new(&e.key(), &e.value())).collect()
}

/// One binomial-basis coefficient of a tabulated row.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CoefficientRow {
    pub kind: String,
    pub index: String,
    pub k: usize,
    pub coefficient: String,
    pub source: String,
}

pub fn golden_polynomial_rows() -> Vec<CoefficientRow> {
    let mut rows = Vec::new();
    for p in golden::polynomials() {
        for (j, c) in p.coeffs.iter().enumerate() {
            rows.push(CoefficientRow {
                kind: p.kind.symbol().to_string(),
                index: p.multi_index().to_string(),
                k: p.first + j,
                coefficient: c.to_string(),
                source: p.source.to_string(),
            });
        }
    }
    rows
}

pub fn write_csv<T: Serialize>(rows: &[T], out: impl Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| CliError::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

pub fn write_json<T: Serialize + ?Sized>(value: &T, mut out: impl Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out).map_err(|e| CliError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_table() {
        // λ1^2 = 2λ2 and λ1^3 = 2λ1λ2 in genus 2 fix the untabulated rows
        let mut e = Engine::new();
        let rows = table_rows(&mut e, 2, 3);
        let text: Vec<_> = rows.iter().map(|r| format!("{} {} {}/{}", r.kind, r.index, r.numerator, r.denominator)).collect();
        assert_eq!(
            text,
            [
                "D - 1/2", "D 1 1/1", "D 1,1 3/4", "D 2 3/8", "D 1,1,1 1/4", "D 2,1 1/8",
                "d - 1/2", "d 1 3/2", "d 1,1 2/1", "d 2 1/1", "d 1,1,1 1/1", "d 2,1 1/2",
            ]
        );
        assert_eq!(table_rows(&mut e, 2, 0).len(), 2);
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        let key = IntegralKey::untwisted(2, [2]);
        write_csv(&[ValueRow::new(&key, &Rational::from_integer(1.into()))], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "kind,g,index,numerator,denominator,normalized_integer\nd,2,2,1,1,8\n"
        );
    }
}
