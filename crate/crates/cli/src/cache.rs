//! JSON-lines persistence for the memo table.
//!
//! Line 1 is a header `{"format":"hodgerec-cache","version":1}`; every later line is one
//! [`CacheRecord`]. Records are written sorted by key and carry numbers as decimal strings.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use hodgerec_core::engine::two_adic_exponent;
use hodgerec_core::{golden, BigInt, IntegralKey, Kind, MemoStore, MultiIndex, Rational};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT: &str = "hodgerec-cache";
pub const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct Header {
    format: String,
    version: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheRecord {
    pub version: u32,
    pub kind: String,
    pub g: u32,
    pub index: String,
    pub numerator: String,
    pub denominator: String,
}

impl CacheRecord {
    pub fn new(key: &IntegralKey, value: &Rational) -> Self {
        CacheRecord {
            version: VERSION,
            kind: key.kind.symbol().to_string(),
            g: key.genus,
            index: key.index.to_string(),
            numerator: value.numer().to_string(),
            denominator: value.denom().to_string(),
        }
    }

    pub fn decode(&self) -> Result<(IntegralKey, Rational), String> {
        if self.version != VERSION {
            return Err(format!("record version {} does not match {VERSION}", self.version));
        }
        let kind = Kind::from_symbol(&self.kind).ok_or_else(|| format!("unknown kind {:?}", self.kind))?;
        let index: MultiIndex = self.index.parse().map_err(|e| format!("{e}"))?;
        if index.to_string() != self.index {
            return Err(format!("index {:?} is not in canonical form", self.index));
        }
        let num: BigInt = self.numerator.parse().map_err(|_| format!("bad numerator {:?}", self.numerator))?;
        let den: BigInt = self.denominator.parse().map_err(|_| format!("bad denominator {:?}", self.denominator))?;
        if den.sign() != num_bigint::Sign::Plus {
            return Err(format!("denominator {den} must be positive"));
        }
        Ok((IntegralKey::new(kind, self.g, index), Rational::new(num, den)))
    }
}

/// Writes every binding in key order.
pub fn save(path: &Path, memo: &MemoStore) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("cannot write cache {}: {e}", path.display()));
    let file = fs::File::create(path).map_err(io)?;
    let mut w = BufWriter::new(file);
    let header = Header { format: FORMAT.to_string(), version: VERSION };
    writeln!(w, "{}", serde_json::to_string(&header).expect("header serializes")).map_err(io)?;
    for (key, value) in memo.iter() {
        let line = serde_json::to_string(&CacheRecord::new(key, value)).expect("record serializes");
        writeln!(w, "{line}").map_err(io)?;
    }
    w.flush().map_err(io)
}

/// Merges the file into `memo`. Returns how many bindings were new.
///
/// Besides conflicts with `memo`, a record is rejected if it disagrees with a tabulated
/// reference value or if `2^{|i|+1}` times it is not an integer.
pub fn load(path: &Path, memo: &mut MemoStore) -> Result<usize, CliError> {
    let reference: BTreeMap<IntegralKey, Rational> = golden::values().iter().map(|e| (e.key(), e.value())).collect();
    let file = fs::File::open(path).map_err(|e| CliError::Io(format!("cannot read cache {}: {e}", path.display())))?;
    let mut lines = BufReader::new(file).lines();
    let bad = |line: usize, msg: String| CliError::Integrity(format!("{}:{line}: {msg}", path.display()));

    let first = match lines.next() {
        None => return Err(bad(1, "empty cache file, expected a header".into())),
        Some(l) => l.map_err(|e| bad(1, e.to_string()))?,
    };
    let header: Header = serde_json::from_str(&first).map_err(|e| bad(1, format!("bad header: {e}")))?;
    if header.format != FORMAT || header.version != VERSION {
        return Err(bad(
            1,
            format!("cache format {} v{} does not match {FORMAT} v{VERSION}", header.format, header.version),
        ));
    }

    let mut fresh = 0;
    for (n, line) in lines.enumerate() {
        let lineno = n + 2;
        let line = line.map_err(|e| bad(lineno, e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CacheRecord = serde_json::from_str(&line).map_err(|e| bad(lineno, format!("bad record: {e}")))?;
        let (key, value) = record.decode().map_err(|msg| bad(lineno, msg))?;
        if let Some(known) = reference.get(&key) {
            if *known != value {
                return Err(bad(lineno, format!("{key} = {value} contradicts the reference value {known}")));
            }
        }
        if two_adic_exponent(&value).is_none_or(|a| a > key.index.weight() + 1) {
            return Err(bad(lineno, format!("{key} = {value} is not an integer after scaling by 2^{}", key.index.weight() + 1)));
        }
        fresh += memo.import([(key, value)]).map_err(|e| bad(lineno, e.to_string()))?;
    }
    Ok(fresh)
}
