//! Closed forms and brute-force counts that do not go through the recursions.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinat::{binomial, pow2, sign};
use crate::engine::Kind;
use crate::Rational;

/// Exact Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Fills the table from `Σ_{k=0}^{m} C(m+1, k) B_k = 0`.
    pub fn new(n: usize) -> Self {
        let mut values: Vec<Rational> = Vec::with_capacity(n + 1);
        values.push(Rational::one());
        for m in 1..=n as i64 {
            let mut acc = Rational::zero();
            for (k, b) in values.iter().enumerate() {
                acc += Rational::from_integer(binomial(m + 1, k as i64)) * b;
            }
            values.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
        }
        BernoulliTable { values }
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn bernoulli(n: usize) -> Rational {
    BernoulliTable::new(n).values.pop().unwrap()
}

/// `e_i(values)`; `1` for `i = 0` and `0` for `i > values.len()`.
pub fn elementary_symmetric(i: usize, values: &[i64]) -> BigInt {
    // e[j] holds e_j of the prefix seen so far
    let mut e = vec![BigInt::zero(); i + 1];
    e[0] = BigInt::one();
    for &x in values {
        for j in (1..=i).rev() {
            let prev = &e[j - 1] * x;
            e[j] += prev;
        }
    }
    e.pop().unwrap()
}

/// One-λ values `(1/2)^{i+1} e_i(1, 3, …, 2g-1)` for `D` and `(1/2)^{i+1} e_i(2, 4, …, 2g)` for `d`.
pub fn one_lambda_closed_form(kind: Kind, genus: u32, i: u32) -> Rational {
    let g = genus as i64;
    let values: Vec<i64> = match kind {
        Kind::TwistedD => (1..=g).map(|j| 2 * j - 1).collect(),
        Kind::UntwistedD => (1..=g).map(|j| 2 * j).collect(),
    };
    Rational::new(elementary_symmetric(i as usize, &values), pow2(i + 1))
}

/// `(2^{2g} - 1) / (2g) · |B_{2g}|`, the value of `λ_g λ_{g-1}` on the hyperelliptic locus.
pub fn faber_pandharipande(genus: u32) -> Rational {
    let b = bernoulli(2 * genus as usize).abs();
    let num = pow2(2 * genus) - 1u32;
    Rational::new(num, BigInt::from(2 * genus)) * b
}

/// Up-down permutations of `[1..=n]` (`a_1 < a_2 > a_3 < ⋯`). Brute force up to `n = 10`,
/// the boustrophedon recurrence beyond.
pub fn alternating_permutation_count(n: u32) -> BigInt {
    if n <= 10 {
        BigInt::from(brute_force_alternating(n))
    } else {
        euler_zigzag(n)
    }
}

/// Walks all `n!` permutations in lexicographic order and counts the up-down ones.
pub fn brute_force_alternating(n: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut perm: Vec<u32> = (1..=n).collect();
    let mut count = 0;
    loop {
        if perm.windows(2).enumerate().all(|(j, w)| (w[0] < w[1]) == (j % 2 == 0)) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Euler zigzag number `E_n` from the Seidel–Entringer triangle.
pub fn euler_zigzag(n: u32) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n as usize {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            next[k] = &next[k - 1] + &row[m - k];
        }
        row = next;
    }
    row.pop().unwrap()
}

/// Sign placed on `C(n, ℓ) C(n, m)` in the binomial-product identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentitySign {
    /// `(-1)^ℓ`, as the statement is written.
    Literal,
    /// `(-1)^{n-ℓ}`, the coefficients of `(x - 1)^n (x + 1)^n` that the proof expands.
    Expansion,
}

/// `Σ_{ℓ+m=2(n-k), 0≤ℓ,m≤n} s(ℓ) C(n, ℓ) C(n, m)`.
pub fn identity_lhs(n: u32, k: u32, convention: IdentitySign) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    let total = 2 * (n - k);
    let mut acc = BigInt::zero();
    for l in (total - n).max(0)..=total.min(n) {
        let s = match convention {
            IdentitySign::Literal => sign(l),
            IdentitySign::Expansion => sign(n - l),
        };
        acc += binomial(n, l) * binomial(n, total - l) * s;
    }
    acc
}

pub fn identity_rhs(n: u32, k: u32) -> BigInt {
    binomial(n as i64, k as i64) * sign(k as i64)
}

/// Whether `Σ_{ℓ+m=2(n-k)} (-1)^ℓ C(n, ℓ) C(n, m) = (-1)^k C(n, k)` holds at `(n, k)`, with
/// `0 ≤ ℓ, m ≤ n`. The two sides differ by `(-1)^n`, so this fails for every odd `n`.
pub fn combinatorial_identity_check(n: u32, k: u32) -> bool {
    k <= n && identity_lhs(n, k, IdentitySign::Literal) == identity_rhs(n, k)
}

/// The same identity with `(-1)^{n-ℓ}`, which holds for all `0 ≤ k ≤ n`.
pub fn expansion_identity_check(n: u32, k: u32) -> bool {
    k <= n && identity_lhs(n, k, IdentitySign::Expansion) == identity_rhs(n, k)
}

/// Left minus right side with the sign taken as written.
pub fn literal_identity_residual(n: u32, k: u32) -> BigInt {
    identity_lhs(n, k, IdentitySign::Literal) - identity_rhs(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(3), q(0, 1));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
        let t = BernoulliTable::new(30);
        for n in (3..=30).step_by(2) {
            assert!(t.get(n).unwrap().is_zero());
        }
    }

    #[test]
    fn elementary_symmetric_values() {
        assert_eq!(elementary_symmetric(2, &[1, 3]), BigInt::from(3));
        assert_eq!(elementary_symmetric(2, &[2, 4]), BigInt::from(8));
        assert_eq!(elementary_symmetric(0, &[5, 7]), BigInt::one());
        assert_eq!(elementary_symmetric(3, &[5, 7]), BigInt::zero());
        assert_eq!(elementary_symmetric(1, &[1, 3, 5]), BigInt::from(9));
    }

    #[test]
    fn one_lambda_values() {
        assert_eq!(one_lambda_closed_form(Kind::TwistedD, 2, 2), q(3, 8));
        assert_eq!(one_lambda_closed_form(Kind::UntwistedD, 2, 2), q(1, 1));
        assert_eq!(one_lambda_closed_form(Kind::TwistedD, 3, 1), q(9, 4));
        assert_eq!(one_lambda_closed_form(Kind::TwistedD, 3, 0), q(1, 2));
    }

    #[test]
    fn faber_pandharipande_values() {
        let got: Vec<_> = (1..=5).map(faber_pandharipande).collect();
        assert_eq!(got, [q(1, 4), q(1, 8), q(1, 4), q(17, 16), q(31, 4)]);
    }

    #[test]
    fn alternating_counts() {
        let brute: Vec<u64> = (1..=9).map(brute_force_alternating).collect();
        assert_eq!(brute, [1, 1, 2, 5, 16, 61, 272, 1385, 7936]);
        for n in 0..=10 {
            assert_eq!(BigInt::from(brute_force_alternating(n)), euler_zigzag(n), "n = {n}");
        }
        assert_eq!(alternating_permutation_count(11), BigInt::from(353792));
    }

    #[test]
    fn identity_small_cases() {
        // (1, 0): the only term is ℓ = m = 1, giving -1 against C(1, 0) = 1
        assert_eq!(identity_lhs(1, 0, IdentitySign::Literal), BigInt::from(-1));
        assert_eq!(literal_identity_residual(1, 0), BigInt::from(-2));
        assert!(!combinatorial_identity_check(1, 0));
        assert!(expansion_identity_check(1, 0));
        assert!(combinatorial_identity_check(2, 1));
        assert!(combinatorial_identity_check(4, 4));
        assert!(!combinatorial_identity_check(2, 3));
        assert!(!expansion_identity_check(2, 3));
    }
}
