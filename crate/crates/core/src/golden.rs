//! Reference tables: exact values for `g = 1..=5` and binomial-basis coefficient rows.
//!
//! Entries are transcribed literally. Each carries a provenance string naming its table so
//! that auditing is a line-by-line comparison.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::engine::{IntegralKey, Kind};
use crate::multiindex::MultiIndex;
use crate::Rational;

/// One exact value `X(i, g) = num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenValue {
    pub kind: Kind,
    pub genus: u32,
    /// As printed, e.g. `[1, 2, 4]` for `λ1λ2λ4`.
    pub index: &'static [u32],
    pub num: i64,
    pub den: i64,
    pub source: &'static str,
}

impl GoldenValue {
    pub fn key(&self) -> IntegralKey {
        IntegralKey::new(self.kind, self.genus, MultiIndex::new(self.index))
    }

    pub fn value(&self) -> Rational {
        Rational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

/// One row `2^{|i|+1} X(i, g) = Σ_k c_k C(g, k)`, with `coeffs[j] = c_{first + j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenPolynomial {
    pub kind: Kind,
    pub index: &'static [u32],
    pub first: usize,
    pub coeffs: &'static [u64],
    pub source: &'static str,
    /// Set when the stored row differs from the printed one.
    pub note: Option<&'static str>,
}

impl GoldenPolynomial {
    pub fn multi_index(&self) -> MultiIndex {
        MultiIndex::new(self.index)
    }

    /// Dense coefficients `c_0, c_1, …` up to the last stored one.
    pub fn dense(&self) -> Vec<BigInt> {
        let mut v = alloc::vec![BigInt::from(0); self.first];
        v.extend(self.coeffs.iter().map(|&c| BigInt::from(c)));
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenEntry {
    Value(GoldenValue),
    Polynomial(GoldenPolynomial),
}

/// Both tables, values first.
pub fn all_entries() -> Vec<GoldenEntry> {
    VALUES
        .iter()
        .copied()
        .map(GoldenEntry::Value)
        .chain(POLYNOMIALS.iter().copied().map(GoldenEntry::Polynomial))
        .collect()
}

pub fn values() -> &'static [GoldenValue] {
    VALUES
}

pub fn polynomials() -> &'static [GoldenPolynomial] {
    POLYNOMIALS
}

const fn v(kind: Kind, genus: u32, index: &'static [u32], num: i64, den: i64, source: &'static str) -> GoldenValue {
    GoldenValue { kind, genus, index, num, den, source }
}

use Kind::{TwistedD as T, UntwistedD as U};

const A1D: &str = "value table, g = 1, D";
const A1U: &str = "value table, g = 1, d";
const A2D: &str = "value table, g = 2, D";
const A2U: &str = "value table, g = 2, d";
const A3D: &str = "value table, g = 3, D";
const A3U: &str = "value table, g = 3, d";
const A4D: &str = "value table, g = 4, D";
const A4U: &str = "value table, g = 4, d";
const A5D: &str = "value table, g = 5, D";
const A5U: &str = "value table, g = 5, d";

static VALUES: &[GoldenValue] = &[
    v(T, 1, &[1], 1, 4, A1D),
    v(U, 1, &[1], 1, 2, A1U),
    // g = 2
    v(T, 2, &[1], 1, 1, A2D),
    v(T, 2, &[2], 3, 8, A2D),
    v(T, 2, &[1, 2], 1, 8, A2D),
    v(U, 2, &[1], 3, 2, A2U),
    v(U, 2, &[2], 1, 1, A2U),
    v(U, 2, &[1, 2], 1, 2, A2U),
    // g = 3
    v(T, 3, &[1], 9, 4, A3D),
    v(T, 3, &[2], 23, 8, A3D),
    v(T, 3, &[3], 15, 16, A3D),
    v(T, 3, &[1, 2], 67, 16, A3D),
    v(T, 3, &[1, 3], 15, 16, A3D),
    v(T, 3, &[2, 3], 1, 4, A3D),
    v(U, 3, &[1], 3, 1, A3U),
    v(U, 3, &[2], 11, 2, A3U),
    v(U, 3, &[3], 3, 1, A3U),
    v(U, 3, &[1, 2], 12, 1, A3U),
    v(U, 3, &[1, 3], 4, 1, A3U),
    v(U, 3, &[2, 3], 3, 2, A3U),
    // g = 4
    v(T, 4, &[1], 4, 1, A4D),
    v(T, 4, &[2], 43, 4, A4D),
    v(T, 4, &[3], 11, 1, A4D),
    v(T, 4, &[4], 105, 32, A4D),
    v(T, 4, &[1, 2], 155, 4, A4D),
    v(T, 4, &[1, 3], 221, 8, A4D),
    v(T, 4, &[1, 4], 105, 16, A4D),
    v(T, 4, &[2, 3], 403, 16, A4D),
    v(T, 4, &[2, 4], 147, 32, A4D),
    v(T, 4, &[3, 4], 17, 16, A4D),
    v(T, 4, &[1, 2, 4], 27, 8, A4D),
    v(U, 4, &[1], 5, 1, A4U),
    v(U, 4, &[2], 35, 2, A4U),
    v(U, 4, &[3], 25, 1, A4U),
    v(U, 4, &[4], 12, 1, A4U),
    v(U, 4, &[1, 2], 85, 1, A4U),
    v(U, 4, &[1, 3], 85, 1, A4U),
    v(U, 4, &[1, 4], 30, 1, A4U),
    v(U, 4, &[2, 3], 211, 2, A4U),
    v(U, 4, &[2, 4], 27, 1, A4U),
    v(U, 4, &[3, 4], 17, 2, A4U),
    v(U, 4, &[1, 2, 4], 27, 1, A4U),
    // g = 5
    v(T, 5, &[1], 25, 4, A5D),
    v(T, 5, &[2], 115, 4, A5D),
    v(T, 5, &[3], 475, 8, A5D),
    v(T, 5, &[4], 1689, 32, A5D),
    v(T, 5, &[5], 945, 64, A5D),
    v(T, 5, &[1, 2], 1555, 8, A5D),
    v(T, 5, &[1, 3], 1195, 4, A5D),
    v(T, 5, &[1, 4], 13185, 64, A5D),
    v(T, 5, &[1, 5], 1575, 32, A5D),
    v(T, 5, &[2, 3], 18599, 32, A5D),
    v(T, 5, &[2, 4], 10179, 32, A5D),
    v(T, 5, &[2, 5], 4095, 64, A5D),
    v(T, 5, &[3, 4], 14801, 64, A5D),
    v(T, 5, &[3, 5], 1185, 32, A5D),
    v(T, 5, &[4, 5], 31, 4, A5D),
    v(T, 5, &[1, 2, 3], 56119, 32, A5D),
    v(T, 5, &[1, 2, 4], 47367, 64, A5D),
    v(T, 5, &[1, 2, 5], 1845, 16, A5D),
    v(T, 5, &[1, 3, 4], 11835, 32, A5D),
    v(T, 5, &[1, 3, 5], 139, 4, A5D),
    v(T, 5, &[2, 3, 4], 1381, 8, A5D),
    v(U, 5, &[1], 15, 2, A5U),
    v(U, 5, &[2], 85, 2, A5U),
    v(U, 5, &[3], 225, 2, A5U),
    v(U, 5, &[4], 137, 1, A5U),
    v(U, 5, &[5], 60, 1, A5U),
    v(U, 5, &[1, 2], 725, 2, A5U),
    v(U, 5, &[1, 3], 725, 1, A5U),
    v(U, 5, &[1, 4], 680, 1, A5U),
    v(U, 5, &[1, 5], 240, 1, A5U),
    v(U, 5, &[2, 3], 3637, 2, A5U),
    v(U, 5, &[2, 4], 2687, 2, A5U),
    v(U, 5, &[2, 5], 381, 1, A5U),
    v(U, 5, &[3, 4], 1279, 1, A5U),
    v(U, 5, &[3, 5], 278, 1, A5U),
    v(U, 5, &[4, 5], 155, 2, A5U),
    v(U, 5, &[1, 2, 3], 14295, 2, A5U),
    v(U, 5, &[1, 2, 4], 4087, 1, A5U),
    v(U, 5, &[1, 2, 5], 864, 1, A5U),
    v(U, 5, &[1, 3, 4], 2762, 1, A5U),
    v(U, 5, &[1, 3, 5], 695, 2, A5U),
    v(U, 5, &[2, 3, 4], 6905, 4, A5U),
];

const fn p(kind: Kind, index: &'static [u32], first: usize, coeffs: &'static [u64], source: &'static str) -> GoldenPolynomial {
    GoldenPolynomial { kind, index, first, coeffs, source, note: None }
}

const B1D: &str = "binomial table, single-λ D";
const B1U: &str = "binomial table, single-λ d";
const B2D: &str = "binomial table, two-λ D";
const B2U: &str = "binomial table, two-λ d";
const B3D: &str = "binomial table, three-λ D";
const B3U: &str = "binomial table, three-λ d";

static POLYNOMIALS: &[GoldenPolynomial] = &[
    GoldenPolynomial {
        kind: T,
        index: &[1],
        first: 1,
        coeffs: &[1, 2],
        source: B1D,
        note: Some("printed as C(g,2) + 2C(g,2), which gives 0 at g = 1 instead of 4·D((1),1) = 1; stored as C(g,1) + 2C(g,2)"),
    },
    p(T, &[2], 2, &[3, 14, 12], B1D),
    p(T, &[3], 3, &[15, 116, 220, 120], B1D),
    p(T, &[4], 4, &[105, 1164, 3580, 4200, 1680], B1D),
    p(T, &[5], 5, &[945, 13854, 60508, 113120, 95760, 30240], B1D),
    p(U, &[1], 1, &[2, 2], B1U),
    p(U, &[2], 2, &[8, 20, 12], B1U),
    p(U, &[3], 3, &[48, 208, 280, 120], B1U),
    p(U, &[4], 4, &[384, 2464, 5440, 5040, 1680], B1U),
    p(U, &[5], 5, &[3840, 33408, 105728, 156800, 110880, 30240], B1U),
    p(T, &[1, 2], 2, &[2, 61, 364, 660, 360], B2D),
    p(T, &[1, 3], 3, &[30, 764, 5440, 14800, 16800, 6720], B2D),
    p(T, &[2, 3], 3, &[16, 1548, 29298, 208724, 697144, 1171520, 957600, 302400], B2D),
    p(
        T,
        &[2, 4],
        4,
        &[588, 37776, 688661, 5395054, 21681016, 48109152, 59446800, 38253600, 9979200],
        B2D,
    ),
    p(
        T,
        &[3, 4],
        4,
        &[
            272, 57844, 2318756, 36063149, 281352536, 1243038072, 3296287120, 5336685200, 5154811200,
            2724321600, 605404800,
        ],
        B2D,
    ),
    p(
        T,
        &[3, 5],
        5,
        &[
            18960, 2372368, 82990414, 1277796904, 10577739904, 52202352960, 162223105440, 324989181440,
            418367389440, 333860567040, 150140390400, 29059430400,
        ],
        B2D,
    ),
    p(
        T,
        &[4, 5],
        5,
        &[
            7936, 3077720, 218029720, 6007887736, 84538397486, 696641555804, 3632616132464,
            12530730860032, 29238584620960, 46328057455680, 49056314186880, 33195555993600,
            12967770816000, 2223046425600,
        ],
        B2D,
    ),
    p(U, &[1, 2], 2, &[8, 168, 640, 840, 360], B2U),
    p(U, &[1, 3], 3, &[128, 2208, 10880, 22240, 20160, 6720], B2U),
    p(U, &[2, 3], 3, &[96, 6368, 83584, 444896, 1169504, 1608320, 1108800, 302400], B2U),
    p(
        U,
        &[2, 4],
        4,
        &[3456, 154688, 2037312, 12279680, 39703552, 73258752, 77212800, 43243200, 9979200],
        B2U,
    ),
    p(
        U,
        &[3, 4],
        4,
        &[
            2176, 316544, 8989696, 106257664, 661451008, 2413320192, 5421758720, 7586163200,
            6435475200, 3027024000, 605404800,
        ],
        B2U,
    ),
    p(
        U,
        &[3, 5],
        5,
        &[
            142336, 12537344, 321875456, 3857878016, 25934706688, 107151344640, 285191920640,
            498116917760, 567135528960, 405056171520, 164670105600, 29059430400,
        ],
        B2U,
    ),
    p(
        U,
        &[4, 5],
        5,
        &[
            79360, 21071360, 1068101632, 22535566336, 254648976384, 1742858805248, 7737100743680,
            23154969480192, 47579454208000, 67202354419200, 64079434298880, 39385214668800,
            14079294028800, 2223046425600,
        ],
        B2U,
    ),
    p(
        T,
        &[1, 2, 3],
        4,
        &[
            3976, 204596, 3262812, 23632720, 90667808, 195992832, 238996800, 153014400, 39916800,
        ],
        B3D,
    ),
    p(
        T,
        &[2, 3, 4],
        5,
        &[
            176768, 52956760, 3233676672, 79792843192, 1033784133532, 8008401061128, 39884957383392,
            133034003257408, 303050501490880, 472326815600640, 494856672710400, 332827342848000,
            129677708160000, 22230464256000,
        ],
        B3D,
    ),
    p(
        U,
        &[1, 2, 3],
        4,
        &[
            23296, 798400, 9337664, 52746112, 164374784, 297196032, 310060800, 172972800, 39916800,
        ],
        B3U,
    ),
    p(
        U,
        &[2, 3, 4],
        5,
        &[
            1767680, 352174336, 15267284992, 289757178880, 3035405595648, 19658941571072,
            83824149843456, 243660123176448, 490474167040000, 683102129149440, 645523765286400,
            394723929600000, 140792940288000, 22230464256000,
        ],
        B3U,
    ),
];
