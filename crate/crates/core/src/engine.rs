//! Memoized evaluation of `D(i, g)` and `d(i, g)`.
//!
//! `D(i, g)` integrates `λ_i ψ^{2g-1-|i|}` over the twisted space with `2g + 2` points and
//! `d(i, g)` integrates `λ_i ψ^{2g-|i|}` over the space with one extra untwisted point. Values
//! with at least one ψ-class come from the two non-pure-Hodge recursions; pure Hodge values
//! (`|i| = 2g - 1` on the twisted space) come from isolating `D(i, g)` in the vanishing
//! localization sum. The recursions bottom out at `D((), g) = d((), g) = 1/2`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinat::{binomial, pow2, sign};
use crate::error::{Error, Result};
use crate::multiindex::{append, canonicalize, decompositions, sub_indices, MultiIndex};
use crate::Rational;

/// Which moduli space the integral lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// `D`: `2g + 2` twisted points.
    TwistedD,
    /// `d`: `2g + 2` twisted points and one untwisted point.
    UntwistedD,
}

impl Kind {
    pub const ALL: [Kind; 2] = [Kind::TwistedD, Kind::UntwistedD];

    /// `"D"` or `"d"`.
    pub fn symbol(self) -> &'static str {
        match self {
            Kind::TwistedD => "D",
            Kind::UntwistedD => "d",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Kind> {
        match s {
            "D" => Some(Kind::TwistedD),
            "d" => Some(Kind::UntwistedD),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegralKey {
    pub kind: Kind,
    pub genus: u32,
    pub index: MultiIndex,
}

impl IntegralKey {
    pub fn new(kind: Kind, genus: u32, index: impl Into<MultiIndex>) -> Self {
        IntegralKey { kind, genus, index: index.into() }
    }

    pub fn twisted(genus: u32, index: impl Into<MultiIndex>) -> Self {
        Self::new(Kind::TwistedD, genus, index)
    }

    pub fn untwisted(genus: u32, index: impl Into<MultiIndex>) -> Self {
        Self::new(Kind::UntwistedD, genus, index)
    }
}

impl fmt::Display for IntegralKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[g={}, i={}]", self.kind, self.genus, self.index)
    }
}

/// Write-once table of evaluated integrals.
///
/// Alongside each value the table keeps `2^{|i|+1}` times it when that is an integer, which
/// lets the recursions run on integers.
#[derive(Clone, Debug, Default)]
pub struct MemoStore {
    map: BTreeMap<IntegralKey, Slot>,
    hits: u64,
    misses: u64,
}

#[derive(Clone, Debug)]
struct Slot {
    value: Rational,
    scaled: Option<BigInt>,
}

impl Slot {
    fn new(key: &IntegralKey, value: Rational) -> Self {
        let n = value.clone() * int(pow2(key.index.weight() + 1));
        let scaled = n.is_integer().then(|| n.to_integer());
        Slot { value, scaled }
    }
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    /// Fraction of lookups answered from the table, `0.0` before any lookup.
    pub fn hit_rate(&self) -> f64 {
        let total = self.hits + self.misses;
        if total == 0 {
            0.0
        } else {
            self.hits as f64 / total as f64
        }
    }

    /// Looks up without touching the counters.
    pub fn peek(&self, key: &IntegralKey) -> Option<&Rational> {
        self.map.get(key).map(|s| &s.value)
    }

    fn lookup(&mut self, key: &IntegralKey) -> Option<&Slot> {
        match self.map.get(key) {
            Some(slot) => {
                self.hits += 1;
                Some(slot)
            }
            None => {
                self.misses += 1;
                None
            }
        }
    }

    /// Binds `key`. Rebinding to an equal value is a no-op; a different value is rejected.
    pub fn insert(&mut self, key: IntegralKey, value: Rational) -> Result<()> {
        match self.map.get(&key) {
            Some(stored) if stored.value == value => Ok(()),
            Some(stored) => Err(Error::MemoConflict { key, stored: Box::new(stored.value.clone()), incoming: Box::new(value) }),
            None => {
                let slot = Slot::new(&key, value);
                self.map.insert(key, slot);
                Ok(())
            }
        }
    }

    /// All bindings in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&IntegralKey, &Rational)> {
        self.map.iter().map(|(k, s)| (k, &s.value))
    }

    pub fn export(&self) -> Vec<(IntegralKey, Rational)> {
        self.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }

    /// Merges `records`, stopping at the first conflict. Returns how many were new.
    pub fn import<I>(&mut self, records: I) -> Result<usize>
    where
        I: IntoIterator<Item = (IntegralKey, Rational)>,
    {
        let mut fresh = 0;
        for (key, value) in records {
            let before = self.map.len();
            self.insert(key, value)?;
            fresh += self.map.len() - before;
        }
        Ok(fresh)
    }
}

/// Evaluator for both integral families.
#[derive(Clone, Debug, Default)]
pub struct Engine {
    memo: MemoStore,
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

fn int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn weight(i: &[u32]) -> i64 {
    i.iter().map(|&e| e as i64).sum()
}

/// Groups the splits `ℓ ≤ i` by the canonical pair `(i - ℓ, ℓ)`, carrying `Σ (-1)^{|ℓ|}`.
fn signed_splits(i: &[u32]) -> Vec<(MultiIndex, MultiIndex, i64)> {
    let mut grouped: BTreeMap<(MultiIndex, MultiIndex), i64> = BTreeMap::new();
    for l in sub_indices(i) {
        let rest: Vec<u32> = i.iter().zip(&l).map(|(a, b)| a - b).collect();
        let s = sign(weight(&l)) as i64;
        *grouped.entry((canonicalize(&rest), canonicalize(&l))).or_insert(0) += s;
    }
    grouped.into_iter().filter(|(_, c)| *c != 0).map(|((a, b), c)| (a, b, c)).collect()
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts from an existing table, e.g. one loaded from disk.
    pub fn with_memo(memo: MemoStore) -> Self {
        Engine { memo }
    }

    pub fn memo(&self) -> &MemoStore {
        &self.memo
    }

    pub fn memo_mut(&mut self) -> &mut MemoStore {
        &mut self.memo
    }

    pub fn into_memo(self) -> MemoStore {
        self.memo
    }

    /// Exact value of `key`.
    pub fn eval(&mut self, key: &IntegralKey) -> Rational {
        self.value(key.kind, key.genus, &key.index)
    }

    /// Convenience form of [`eval`](Self::eval) taking a positional index.
    pub fn eval_raw(&mut self, kind: Kind, genus: u32, index: &[u32]) -> Rational {
        self.value(kind, genus, &canonicalize(index))
    }

    /// The value if it vanishes for rank or dimension reasons, or is an initial condition.
    fn shortcut(kind: Kind, genus: u32, index: &MultiIndex) -> Option<Rational> {
        if index.max_entry() > genus {
            return Some(Rational::zero());
        }
        if index.is_empty() {
            return Some(half());
        }
        let w = index.weight() as i64;
        let g = genus as i64;
        let vanishes = match kind {
            Kind::TwistedD => w > 2 * g - 1,
            // |i| = 2g is zero in Chow: such monomials are pulled back from the twisted space
            Kind::UntwistedD => w >= 2 * g,
        };
        vanishes.then(Rational::zero)
    }

    fn value(&mut self, kind: Kind, genus: u32, index: &MultiIndex) -> Rational {
        if let Some(v) = Self::shortcut(kind, genus, index) {
            return v;
        }
        let key = IntegralKey { kind, genus, index: index.clone() };
        if let Some(slot) = self.memo.lookup(&key) {
            return slot.value.clone();
        }
        self.compute(key).value.clone()
    }

    /// Evaluates a key known to be absent from the memo and stores it.
    fn compute(&mut self, key: IntegralKey) -> &Slot {
        let w = key.index.weight() as i64;
        let g = key.genus as i64;
        let entries = key.index.entries();
        let computed = match key.kind {
            Kind::TwistedD if w == 2 * g - 1 => self.pure_hodge_unchecked(key.genus, entries, 0),
            Kind::TwistedD => self.nph_twisted_unchecked(key.genus, entries, 0),
            Kind::UntwistedD => self.nph_untwisted_unchecked(key.genus, entries, 0),
        };
        let slot = Slot::new(&key, computed);
        self.memo.map.entry(key).or_insert(slot)
    }

    /// `D(i, g)` for `|i| ≤ 2g - 2` through the twisted non-pure-Hodge recursion at parameter
    /// `k ∈ [0, 2g - 2 - |i|]`. Every valid `k` yields the same value.
    pub fn nph_twisted(&mut self, genus: u32, index: &[u32], k: u32) -> Result<Rational> {
        let (g, w, k64) = (genus as i64, weight(index), k as i64);
        if genus == 0 {
            return Err(Error::InvalidArgument(format!("twisted recursion needs g > 0, got g = {genus}")));
        }
        if w > 2 * g - 2 {
            return Err(Error::InvalidArgument(format!(
                "twisted recursion needs |i| <= 2g - 2 = {}, got |i| = {w}",
                2 * g - 2
            )));
        }
        if k64 > 2 * g - 2 - w {
            return Err(Error::InvalidArgument(format!(
                "twisted recursion needs k <= 2g - 2 - |i| = {}, got k = {k}",
                2 * g - 2 - w
            )));
        }
        Ok(self.nph_twisted_unchecked(genus, index, k))
    }

    fn nph_twisted_unchecked(&mut self, genus: u32, index: &[u32], k: u32) -> Rational {
        let (g, k) = (genus as i64, k as i64);
        let mut terms = Vec::new();
        // d·d over g1 + g2 = g - 1
        for g2 in 0..=((2 * g - 2 - k) / 2).min(g - 1) {
            terms.push((binomial(2 * g - 1 - k, 2 * g2 + 1), Kind::UntwistedD, g - 1 - g2, g2));
        }
        // D·D over g1 + g2 = g, g2 ≥ 1
        for g2 in 1..=((2 * g - 1 - k) / 2).min(g) {
            terms.push((-binomial(2 * g - 1 - k, 2 * g2), Kind::TwistedD, g - g2, g2));
        }
        self.combine(index, &terms)
    }

    /// `d(i, g)` for `|i| ≤ 2g - 1` through the untwisted recursion at parameter
    /// `k ∈ [0, 2g - 1 - |i|]`.
    pub fn nph_untwisted(&mut self, genus: u32, index: &[u32], k: u32) -> Result<Rational> {
        let (g, w, k64) = (genus as i64, weight(index), k as i64);
        if genus == 0 {
            return Err(Error::InvalidArgument(format!("untwisted recursion needs g > 0, got g = {genus}")));
        }
        if w > 2 * g - 1 {
            return Err(Error::InvalidArgument(format!(
                "untwisted recursion needs |i| <= 2g - 1 = {}, got |i| = {w}",
                2 * g - 1
            )));
        }
        if k64 > 2 * g - 1 - w {
            return Err(Error::InvalidArgument(format!(
                "untwisted recursion needs k <= 2g - 1 - |i| = {}, got k = {k}",
                2 * g - 1 - w
            )));
        }
        Ok(self.nph_untwisted_unchecked(genus, index, k))
    }

    fn nph_untwisted_unchecked(&mut self, genus: u32, index: &[u32], k: u32) -> Rational {
        let (g, k) = (genus as i64, k as i64);
        let mut terms = Vec::new();
        // D·D over g1 + g2 = g
        for g2 in 0..=((2 * g - 1 - k) / 2).min(g) {
            terms.push((binomial(2 * g - k, 2 * g2 + 1), Kind::TwistedD, g - g2, g2));
        }
        // d·d over g1 + g2 = g - 1
        for g2 in 0..=((2 * g - k) / 2 - 1).min(g - 1) {
            terms.push((-binomial(2 * g - k, 2 * g2 + 2), Kind::UntwistedD, g - 1 - g2, g2));
        }
        self.combine(index, &terms)
    }

    /// `2 Σ_terms c Σ_ℓ (-1)^{|ℓ|} X(i - ℓ, g1) X(ℓ, g2)`.
    ///
    /// Each product has total weight `|i|`, so with `N = 2^{w+1} X` the whole sum is
    /// `Σ c Σ_ℓ ± N N / 2^{|i|+1}`. That integer form is used whenever every factor has a
    /// power-of-two denominator small enough, with plain rationals as the fallback.
    fn combine(&mut self, index: &[u32], terms: &[(BigInt, Kind, i64, i64)]) -> Rational {
        let splits = signed_splits(index);
        let terms: Vec<_> = terms.iter().filter(|t| !t.0.is_zero()).collect();
        let mut total = BigInt::zero();
        let mut integral = true;
        for &(c, kind, g1, g2) in &terms {
            match self.split_sum_scaled(&splits, *kind, *g1 as u32, *g2 as u32) {
                Some(inner) => total += c * inner,
                None => {
                    integral = false;
                    break;
                }
            }
        }
        if integral {
            return Rational::new(total, pow2(weight(index) as u32 + 1));
        }
        let mut total = Rational::zero();
        for &(c, kind, g1, g2) in &terms {
            total += int(c.clone()) * self.split_sum(&splits, *kind, *g1 as u32, *g2 as u32);
        }
        total * int(BigInt::from(2))
    }

    /// `N(key)` if the value times `2^{|i|+1}` is an integer.
    fn scaled(&mut self, kind: Kind, genus: u32, index: &MultiIndex) -> Option<BigInt> {
        if let Some(v) = Self::shortcut(kind, genus, index) {
            // zero, or 1/2 at the empty index
            return Some(if v.is_zero() { BigInt::zero() } else { BigInt::one() });
        }
        let key = IntegralKey { kind, genus, index: index.clone() };
        if let Some(slot) = self.memo.lookup(&key) {
            return slot.scaled.clone();
        }
        self.compute(key).scaled.clone()
    }

    fn split_sum_scaled(
        &mut self,
        splits: &[(MultiIndex, MultiIndex, i64)],
        kind: Kind,
        g1: u32,
        g2: u32,
    ) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (rest, l, count) in splits {
            let right = self.scaled(kind, g2, l)?;
            if right.is_zero() {
                continue;
            }
            let left = self.scaled(kind, g1, rest)?;
            if left.is_zero() {
                continue;
            }
            acc += left * right * count;
        }
        Some(acc)
    }

    /// `Σ_ℓ (-1)^{|ℓ|} X(i - ℓ, g1) X(ℓ, g2)` over grouped splits.
    fn split_sum(
        &mut self,
        splits: &[(MultiIndex, MultiIndex, i64)],
        kind: Kind,
        g1: u32,
        g2: u32,
    ) -> Rational {
        let mut acc = Rational::zero();
        for (rest, l, count) in splits {
            let right = self.value(kind, g2, l);
            if right.is_zero() {
                continue;
            }
            let left = self.value(kind, g1, rest);
            if left.is_zero() {
                continue;
            }
            acc += left * right * int(BigInt::from(*count));
        }
        acc
    }

    /// Pure Hodge value `D(i, g)` with `|i| = 2g - 1`, isolating on the largest entry.
    pub fn pure_hodge(&mut self, genus: u32, index: &[u32]) -> Result<Rational> {
        let pos = index
            .iter()
            .enumerate()
            .max_by_key(|&(n, &e)| (e, core::cmp::Reverse(n)))
            .map(|(n, _)| n)
            .ok_or_else(|| Error::InvalidArgument(format!("pure Hodge index must be nonempty (g = {genus})")))?;
        self.pure_hodge_at(genus, index, pos)
    }

    /// Pure Hodge value isolating on the entry at position `pos`, which must be positive.
    pub fn pure_hodge_at(&mut self, genus: u32, index: &[u32], pos: usize) -> Result<Rational> {
        let (g, w) = (genus as i64, weight(index));
        if genus == 0 {
            return Err(Error::InvalidArgument(format!("pure Hodge recursion needs g > 0, got g = {genus}")));
        }
        if w != 2 * g - 1 {
            return Err(Error::InvalidArgument(format!(
                "pure Hodge recursion needs |i| = 2g - 1 = {}, got |i| = {w}",
                2 * g - 1
            )));
        }
        if let Some(&e) = index.iter().find(|&&e| e > genus) {
            return Err(Error::InvalidArgument(format!("pure Hodge entry {e} exceeds g = {genus}")));
        }
        match index.get(pos) {
            Some(&e) if e > 0 => Ok(self.pure_hodge_unchecked(genus, index, pos)),
            Some(_) => Err(Error::InvalidArgument(format!("distinguished entry at position {pos} is zero"))),
            None => Err(Error::InvalidArgument(format!("position {pos} outside index of length {}", index.len()))),
        }
    }

    fn pure_hodge_unchecked(&mut self, genus: u32, index: &[u32], pos: usize) -> Rational {
        let g = genus as i64;
        let top = index[pos];
        let rest: Vec<u32> = index
            .iter()
            .enumerate()
            .filter(|&(n, _)| n != pos)
            .map(|(_, &e)| e)
            .collect();
        let tn = top as i64;

        let mut lower = Rational::zero();
        for r in 1..=tn {
            let coeff = int(binomial(g - tn + r, r + 1)) + half() * int(binomial(g - tn + r, r));
            let idx = canonicalize(&append(&rest, (tn - r) as u32));
            lower += coeff * self.value(Kind::TwistedD, genus, &idx);
        }
        let outer = sign(tn + 1);
        let bracket = lower * int(BigInt::from(outer))
            + self.cont_gamma1(genus, &rest, top)
            + self.cont_even(genus, &rest, top)
            + self.cont_odd(genus, &rest, top);
        bracket / int(BigInt::from(tn * outer as i64))
    }

    /// Contribution of the graphs with one point over `∞` besides the first:
    /// `(2g + 1)(-1)^{i_n} Σ_{r=1}^{i_n} C(g - i_n + r, r + 1) d((m, i_n - r), g - 1)`.
    pub fn cont_gamma1(&mut self, genus: u32, m: &[u32], top: u32) -> Rational {
        if genus == 0 {
            return Rational::zero();
        }
        let (g, tn) = (genus as i64, top as i64);
        let mut acc = Rational::zero();
        for r in 1..=tn {
            let b = binomial(g - tn + r, r + 1);
            if b.is_zero() {
                continue;
            }
            let idx = canonicalize(&append(m, (tn - r) as u32));
            acc += int(b) * self.value(Kind::UntwistedD, genus - 1, &idx);
        }
        acc * int(BigInt::from((2 * g + 1) * sign(tn) as i64))
    }

    /// Sum over the even graphs `2 ≤ j ≤ 2g - 2` (products of two twisted spaces).
    pub fn cont_even(&mut self, genus: u32, m: &[u32], top: u32) -> Rational {
        let g = genus as i64;
        let splits = decompositions(m);
        let mut acc = Rational::zero();
        for g2 in 1..g {
            let g1 = g - g2;
            let b = binomial(2 * g + 1, 2 * g2);
            // the p + q = i_n + 1 sum carries an extra factor 2
            for (total, factor) in [(top as i64 + 1, 2), (top as i64, 1)] {
                let part = self.glued_sum(&splits, Kind::TwistedD, g1, g2, total, |q, l2| sign(1 + q + l2));
                acc += int(&b * BigInt::from(factor)) * part;
            }
        }
        acc * int(BigInt::from(sign(top as i64)))
    }

    /// Sum over the odd graphs `3 ≤ j ≤ 2g - 3` (products of two untwisted spaces).
    pub fn cont_odd(&mut self, genus: u32, m: &[u32], top: u32) -> Rational {
        let g = genus as i64;
        let splits = decompositions(m);
        let mut acc = Rational::zero();
        for g2 in 1..(g - 1) {
            let g1 = g - 1 - g2;
            let b = binomial(2 * g + 1, 2 * g2 + 1);
            for total in [top as i64 + 1, top as i64] {
                let part = self.glued_sum(&splits, Kind::UntwistedD, g1, g2, total, |q, l2| sign(q + l2));
                acc += int(b.clone()) * part;
            }
        }
        acc * int(BigInt::from(2 * sign(top as i64)))
    }

    /// `Σ_{ℓ1+ℓ2=m, p+q=total, 0≤r≤p} s(q, |ℓ2|) C(g1 - p + r, r) X((ℓ1, p - r), g1) X((ℓ2, q), g2)`.
    fn glued_sum(
        &mut self,
        splits: &[(Vec<u32>, Vec<u32>)],
        kind: Kind,
        g1: i64,
        g2: i64,
        total: i64,
        sgn: impl Fn(i64, i64) -> i32,
    ) -> Rational {
        let mut acc = Rational::zero();
        for (l1, l2) in splits {
            let w2 = weight(l2);
            for p in 0..=total {
                let q = total - p;
                if q > g2 {
                    continue;
                }
                let right = self.value(kind, g2 as u32, &canonicalize(&append(l2, q as u32)));
                if right.is_zero() {
                    continue;
                }
                let mut left_sum = Rational::zero();
                // p - r ≤ g1 keeps the binomial top nonnegative; larger p - r vanishes by rank
                for r in (p - g1).max(0)..=p {
                    let b = binomial(g1 - p + r, r);
                    if b.is_zero() {
                        continue;
                    }
                    let left = self.value(kind, g1 as u32, &canonicalize(&append(l1, (p - r) as u32)));
                    if !left.is_zero() {
                        left_sum += int(b) * left;
                    }
                }
                if !left_sum.is_zero() {
                    acc += left_sum * right * int(BigInt::from(sgn(q, w2)));
                }
            }
        }
        acc
    }

    /// `2^{|i|+1}` times the value; errors if that is not an integer.
    pub fn normalized_integer(&mut self, key: &IntegralKey) -> Result<BigInt> {
        let value = self.eval(key);
        let scaled = value.clone() * int(pow2(key.index.weight() + 1));
        if scaled.is_integer() {
            Ok(scaled.to_integer())
        } else {
            Err(Error::NonIntegral { key: key.clone(), value })
        }
    }
}

/// Smallest `a` with `2^a · value` integral, if the denominator is a power of two.
pub fn two_adic_exponent(value: &Rational) -> Option<u32> {
    let den = value.denom().abs();
    let tz = den.trailing_zeros().unwrap_or(0) as u32;
    (den >> tz as usize).is_one().then_some(tz)
}
