//! λ-class exponent vectors.
//!
//! A [`MultiIndex`] is the canonical form of a monomial `λ_{i_1} ⋯ λ_{i_n}`: zero entries are
//! dropped (`λ_0 = 1`) and the rest are sorted nonincreasing. Inside the recursions the
//! positional form (a plain `&[u32]`) is used instead, since sums run over componentwise
//! splits of a fixed representative.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// Canonical exponent vector of a λ-monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    /// The empty monomial `1`.
    pub const fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn new(raw: &[u32]) -> Self {
        canonicalize(raw)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// The index with one more entry `e` (dropped again if `e == 0`).
    pub fn with_entry(&self, e: u32) -> Self {
        canonicalize(&append(&self.0, e))
    }

    /// All canonical indices with entries in `1..=max_entry` and weight at most `max_weight`,
    /// ordered by weight and then lexicographically.
    pub fn enumerate(max_weight: u32, max_entry: u32) -> Vec<MultiIndex> {
        fn rec(remaining: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            out.push(MultiIndex(cur.clone()));
            for e in (1..=cap.min(remaining)).rev() {
                cur.push(e);
                rec(remaining - e, e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(max_weight, max_entry, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (n, e) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// Parses `"4,2,1"` (any order, zeros allowed) or `"-"` for the empty index.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "-" {
            return Ok(MultiIndex::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse(String::from("empty index text; use \"-\" for the empty index")));
        }
        let raw = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(alloc::format!("bad index entry {part:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(canonicalize(&raw))
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(raw: &[u32]) -> Self {
        canonicalize(raw)
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(raw: [u32; N]) -> Self {
        canonicalize(&raw)
    }
}

/// Drops zeros and sorts nonincreasing.
pub fn canonicalize(raw: &[u32]) -> MultiIndex {
    let mut v: Vec<u32> = raw.iter().copied().filter(|&e| e > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    MultiIndex(v)
}

/// Every `ℓ` with `0 ≤ ℓ_j ≤ i_j`, lexicographic ascending.
pub fn sub_indices(i: &[u32]) -> Vec<Vec<u32>> {
    let total: usize = i.iter().map(|&e| e as usize + 1).product();
    let mut out = Vec::with_capacity(total);
    let mut cur = alloc::vec![0u32; i.len()];
    loop {
        out.push(cur.clone());
        // odometer, last position fastest
        let mut pos = i.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < i[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
        }
    }
}

/// Every split `ℓ1 + ℓ2 = m`, ordered by `ℓ1` ascending.
pub fn decompositions(m: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    sub_indices(m)
        .into_iter()
        .map(|l1| {
            let l2 = m.iter().zip(&l1).map(|(a, b)| a - b).collect();
            (l1, l2)
        })
        .collect()
}

pub fn append(i: &[u32], e: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(i.len() + 1);
    v.extend_from_slice(i);
    v.push(e);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize(&[0, 2, 1]).entries(), &[2, 1]);
        assert_eq!(canonicalize(&[]).entries(), &[] as &[u32]);
        assert_eq!(canonicalize(&[4, 1, 2, 0, 0]).entries(), &[4, 2, 1]);
        assert_eq!(canonicalize(&[4, 1, 2, 0, 0]).weight(), 7);
    }

    #[test]
    fn sub_index_enumeration() {
        assert_eq!(sub_indices(&[1]), vec![vec![0], vec![1]]);
        assert_eq!(
            sub_indices(&[1, 2]),
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        assert_eq!(sub_indices(&[]), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn decomposition_enumeration() {
        assert_eq!(decompositions(&[1]), vec![(vec![0], vec![1]), (vec![1], vec![0])]);
        assert_eq!(
            decompositions(&[2]),
            vec![(vec![0], vec![2]), (vec![1], vec![1]), (vec![2], vec![0])]
        );
        assert_eq!(decompositions(&[1, 1]).len(), 4);
    }

    #[test]
    fn appending() {
        assert_eq!(append(&[1], 2), vec![1, 2]);
        assert_eq!(append(&[], 0), vec![0]);
        assert_eq!(append(&[2, 3], 1), vec![2, 3, 1]);
    }

    #[test]
    fn text_form() {
        let idx: MultiIndex = "1,2,4".parse().unwrap();
        assert_eq!(idx.to_string(), "4,2,1");
        assert_eq!(MultiIndex::empty().to_string(), "-");
        assert_eq!("-".parse::<MultiIndex>().unwrap(), MultiIndex::empty());
        assert_eq!("0,0".parse::<MultiIndex>().unwrap(), MultiIndex::empty());
        assert!("".parse::<MultiIndex>().is_err());
        assert!("1,x".parse::<MultiIndex>().is_err());
        assert!("1,-2".parse::<MultiIndex>().is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = MultiIndex::enumerate(3, 3);
        let text: Vec<_> = all.iter().map(|m| m.to_string()).collect();
        assert_eq!(text, ["-", "1", "1,1", "2", "1,1,1", "2,1", "3"]);
        assert_eq!(MultiIndex::enumerate(4, 2).len(), 1 + 1 + 2 + 2 + 3);
    }
}
