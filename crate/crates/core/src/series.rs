//! Truncated generating functions in `s_1, …, s_n` and `t`, and the PDE check.
//!
//! `F = Σ D(i, g) s^i t^{2g+2} / (2g+2)!` and `G` likewise with `d`. A series keeps every
//! coefficient with `t`-power `≤ t_order` and `s`-weight `≤ weight_cap`; everything above is
//! unknown rather than zero, and operations shrink the orders accordingly.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::combinat::factorial;
use crate::engine::{Engine, Kind};
use crate::error::{Error, Result};
use crate::multiindex::{canonicalize, sub_indices};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    slots: usize,
    t_order: u32,
    weight_cap: u32,
    /// `(exponent of s, power of t) -> coefficient`; absent means zero, never stores zero.
    coeffs: BTreeMap<(Vec<u32>, u32), Rational>,
}

impl TruncatedSeries {
    pub fn zero(slots: usize, t_order: u32, weight_cap: u32) -> Self {
        TruncatedSeries { slots, t_order, weight_cap, coeffs: BTreeMap::new() }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn t_order(&self) -> u32 {
        self.t_order
    }

    pub fn weight_cap(&self) -> u32 {
        self.weight_cap
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `s^exponent t^t_power`, zero outside the retained window.
    pub fn coeff(&self, exponent: &[u32], t_power: u32) -> Rational {
        self.coeffs.get(&(exponent.to_vec(), t_power)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sets a coefficient; terms outside the window are dropped.
    pub fn set(&mut self, exponent: &[u32], t_power: u32, value: Rational) {
        assert_eq!(exponent.len(), self.slots, "exponent length must equal the slot count");
        if !self.keeps(exponent, t_power) {
            return;
        }
        let key = (exponent.to_vec(), t_power);
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
    }

    fn keeps(&self, exponent: &[u32], t_power: u32) -> bool {
        t_power <= self.t_order && exponent.iter().sum::<u32>() <= self.weight_cap
    }

    /// Nonzero terms in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u32, &Rational)> {
        self.coeffs.iter().map(|((e, t), c)| (e.as_slice(), *t, c))
    }

    /// Every exponent vector of this slot count within the weight cap.
    pub fn exponents(&self) -> Vec<Vec<u32>> {
        sub_indices(&vec![self.weight_cap; self.slots])
            .into_iter()
            .filter(|e| e.iter().sum::<u32>() <= self.weight_cap)
            .collect()
    }

    /// `∂_t^times`; the retained order drops by `times`.
    pub fn d_dt(&self, times: u32) -> Self {
        let mut out = Self::zero(self.slots, self.t_order.saturating_sub(times), self.weight_cap);
        if times > self.t_order {
            return out;
        }
        for ((e, t), c) in &self.coeffs {
            if *t < times {
                continue;
            }
            let falling: u64 = (t - times + 1..=*t).map(u64::from).product();
            out.coeffs.insert((e.clone(), t - times), c * Rational::from_integer(falling.into()));
        }
        out
    }

    /// `s ↦ -s`: the coefficient of `s^i` picks up `(-1)^{|i|}`.
    pub fn flip_s(&self) -> Self {
        let mut out = self.clone();
        for ((e, _), c) in out.coeffs.iter_mut() {
            if e.iter().sum::<u32>() % 2 == 1 {
                *c = -c.clone();
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.slots, self.t_order, self.weight_cap);
        if factor.is_zero() {
            return out;
        }
        for (k, c) in &self.coeffs {
            out.coeffs.insert(k.clone(), c * factor);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        self.check_slots(other)?;
        let mut out = Self::zero(
            self.slots,
            self.t_order.min(other.t_order),
            self.weight_cap.min(other.weight_cap),
        );
        let zero = Rational::zero();
        let keys: Vec<_> = self.coeffs.keys().chain(other.coeffs.keys()).cloned().collect();
        for (e, t) in keys {
            let a = self.coeffs.get(&(e.clone(), t)).unwrap_or(&zero);
            let b = other.coeffs.get(&(e.clone(), t)).unwrap_or(&zero);
            out.set(&e, t, op(a, b));
        }
        Ok(out)
    }

    /// Cauchy product, truncated to the smaller of the two windows.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_slots(other)?;
        let t_order = self.t_order.min(other.t_order);
        let weight_cap = self.weight_cap.min(other.weight_cap);
        let mut acc: BTreeMap<(Vec<u32>, u32), Rational> = BTreeMap::new();
        for ((ea, ta), ca) in &self.coeffs {
            for ((eb, tb), cb) in &other.coeffs {
                let t = ta + tb;
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if t > t_order || e.iter().sum::<u32>() > weight_cap {
                    continue;
                }
                *acc.entry((e, t)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries { slots: self.slots, t_order, weight_cap, coeffs: acc })
    }

    fn check_slots(&self, other: &Self) -> Result<()> {
        if self.slots == other.slots {
            Ok(())
        } else {
            Err(Error::SlotMismatch { left: self.slots, right: other.slots })
        }
    }
}

fn build(engine: &mut Engine, kind: Kind, slots: usize, t_order: u32, weight_cap: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(slots, t_order, weight_cap);
    let exponents = out.exponents();
    for g in 0..=t_order.saturating_sub(2) / 2 {
        let t = 2 * g + 2;
        if t > t_order {
            break;
        }
        let denom = Rational::from_integer(factorial(t));
        for e in &exponents {
            let v = engine.eval_raw(kind, g, e);
            if !v.is_zero() {
                out.set(e, t, v / &denom);
            }
        }
    }
    out
}

/// `F` through `t^{t_order}` and `s`-weight `weight_cap`.
pub fn build_f(engine: &mut Engine, slots: usize, t_order: u32, weight_cap: u32) -> TruncatedSeries {
    build(engine, Kind::TwistedD, slots, t_order, weight_cap)
}

/// `G` through `t^{t_order}` and `s`-weight `weight_cap`.
pub fn build_g(engine: &mut Engine, slots: usize, t_order: u32, weight_cap: u32) -> TruncatedSeries {
    build(engine, Kind::UntwistedD, slots, t_order, weight_cap)
}

/// Why a compared cell disagrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellCause {
    /// First equation at `s^i t^{2g-1}` with `|i| = 2g - 1`. Both products vanish there and the
    /// left side keeps `D(i, g) D((), 0)`, so the offset is `-D(i, g) / (2g-1)!`.
    PureHodge,
    /// Second equation at `s^0 t^0`, where only `-G_tt` contributes `-d((), 0) = -1/2`.
    GenusZero,
    Unexplained,
}

/// A coefficient where the two sides of an equation differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub exponent: Vec<u32>,
    pub t_power: u32,
    pub lhs: Rational,
    pub rhs: Rational,
    pub cause: CellCause,
}

impl Cell {
    pub fn offset(&self) -> Rational {
        &self.rhs - &self.lhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdeReport {
    pub slots: usize,
    pub t_order: u32,
    pub weight_cap: u32,
    /// Cells compared per equation.
    pub compared: usize,
    /// `2 F_ttt(s) F_tt(-s) = 2 G_tt(s) G_t(-s)` mismatches.
    pub first: Vec<Cell>,
    /// `2 G_tt(s) G(-s) = 2 F_ttt(s) F_t(-s) - G_tt(s)` mismatches.
    pub second: Vec<Cell>,
}

impl PdeReport {
    /// Both residual lists empty.
    pub fn passed(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.first.iter().chain(&self.second)
    }

    pub fn unexplained(&self) -> impl Iterator<Item = &Cell> {
        self.cells().filter(|c| c.cause == CellCause::Unexplained)
    }
}

/// Compares both sides of both equations on every cell with `t`-power `≤ t_order - 3`.
pub fn verify_pde(engine: &mut Engine, slots: usize, t_order: u32, weight_cap: u32) -> Result<PdeReport> {
    if t_order < 4 {
        return Err(Error::InvalidArgument(alloc::format!("PDE check needs t_order >= 4, got {t_order}")));
    }
    let f = build_f(engine, slots, t_order, weight_cap);
    let g = build_g(engine, slots, t_order, weight_cap);
    let two = Rational::from_integer(2.into());

    let lhs1 = f.d_dt(3).multiply(&f.flip_s().d_dt(2))?.scale(&two);
    let rhs1 = g.d_dt(2).multiply(&g.flip_s().d_dt(1))?.scale(&two);
    let lhs2 = g.d_dt(2).multiply(&g.flip_s())?.scale(&two);
    let rhs2 = f.d_dt(3).multiply(&f.flip_s().d_dt(1))?.scale(&two).sub(&g.d_dt(2))?;

    let window = t_order - 3;
    let exponents = f.exponents();
    let mut report = PdeReport {
        slots,
        t_order,
        weight_cap,
        compared: exponents.len() * (window as usize + 1),
        first: Vec::new(),
        second: Vec::new(),
    };
    for e in &exponents {
        let w: u32 = e.iter().sum();
        for t in 0..=window {
            let (l, r) = (lhs1.coeff(e, t), rhs1.coeff(e, t));
            if l != r {
                let mut cause = CellCause::Unexplained;
                if t % 2 == 1 && w == t {
                    let genus = t.div_ceil(2);
                    let expected = -engine.eval_raw(Kind::TwistedD, genus, e) / Rational::from_integer(factorial(t));
                    if &r - &l == expected {
                        cause = CellCause::PureHodge;
                    }
                }
                report.first.push(Cell { exponent: e.clone(), t_power: t, lhs: l, rhs: r, cause });
            }
            let (l, r) = (lhs2.coeff(e, t), rhs2.coeff(e, t));
            if l != r {
                let genus_zero = t == 0 && canonicalize(e).is_empty() && &r - &l == -engine.eval_raw(Kind::UntwistedD, 0, &[]);
                let cause = if genus_zero { CellCause::GenusZero } else { CellCause::Unexplained };
                report.second.push(Cell { exponent: e.clone(), t_power: t, lhs: l, rhs: r, cause });
            }
        }
    }
    Ok(report)
}
