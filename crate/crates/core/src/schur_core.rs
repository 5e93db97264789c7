//! Raising operators on integer vectors, the straightening law for
//! `s_α = det(h_{α_i + j - i})`, and the signed Jacobi-Trudi expansion.

use num_bigint::BigInt;

use crate::combinatorics::{IntVector, Partition, Permutation};
use crate::error::{Error, Result};
use crate::symfunc::{Basis, SymFunc};

/// The result of straightening `s_α`: zero, or `±s_μ` for a partition `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignedPartition {
    Zero,
    Plus(Partition),
    Minus(Partition),
}

impl SignedPartition {
    pub fn new(sign: i64, partition: Partition) -> Self {
        match sign.signum() {
            1 => SignedPartition::Plus(partition),
            -1 => SignedPartition::Minus(partition),
            _ => SignedPartition::Zero,
        }
    }

    pub fn sign(&self) -> i64 {
        match self {
            SignedPartition::Zero => 0,
            SignedPartition::Plus(_) => 1,
            SignedPartition::Minus(_) => -1,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            SignedPartition::Zero => None,
            SignedPartition::Plus(p) | SignedPartition::Minus(p) => Some(p),
        }
    }

    pub fn negate(self) -> Self {
        match self {
            SignedPartition::Zero => SignedPartition::Zero,
            SignedPartition::Plus(p) => SignedPartition::Minus(p),
            SignedPartition::Minus(p) => SignedPartition::Plus(p),
        }
    }

    /// As a single-term Schur function (or zero).
    pub fn to_symfunc(&self) -> SymFunc {
        match self.partition() {
            None => SymFunc::zero(Basis::Schur),
            Some(p) => SymFunc::term(Basis::Schur, p.clone(), self.sign()),
        }
    }
}

/// The staircase `ρ_ℓ = (ℓ-1, ℓ-2, …, 1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Staircase {
    len: usize,
}

impl Staircase {
    pub fn new(len: usize) -> Self {
        Staircase { len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn entry(&self, i: usize) -> i64 {
        (self.len - 1 - i) as i64
    }

    pub fn rho(&self) -> Vec<i64> {
        (0..self.len).map(|i| self.entry(i)).collect()
    }

    /// `v + ρ_ℓ`; `v` is padded with zeros up to the staircase length.
    pub fn shift(&self, v: &[i64]) -> Vec<i64> {
        (0..self.len)
            .map(|i| v.get(i).copied().unwrap_or(0) + self.entry(i))
            .collect()
    }

    /// `v - ρ_ℓ`.
    pub fn unshift(&self, v: &[i64]) -> Vec<i64> {
        v.iter().enumerate().map(|(i, x)| x - self.entry(i)).collect()
    }
}

/// `R_{ij}`: adds one to entry `i` and subtracts one from entry `j`
/// (1-based, `i < j`).
pub fn apply_raising(alpha: &IntVector, i: usize, j: usize) -> Result<IntVector> {
    let len = alpha.len();
    if i == 0 || i >= j || j > len {
        return Err(Error::InvalidRaising { i, j, len });
    }
    let mut entries = alpha.entries().to_vec();
    entries[i - 1] += 1;
    entries[j - 1] -= 1;
    Ok(IntVector::new(entries))
}

/// Straightens `s_α` with `ℓ = len(α)`: either zero or `(-1)^w s_μ` where
/// `α + ρ_ℓ = w(μ + ρ_ℓ)`.
pub fn straighten(alpha: &IntVector) -> SignedPartition {
    let stairs = Staircase::new(alpha.len());
    let mut shifted = stairs.shift(alpha.entries());

    // insertion sort into decreasing order; each swap is one inversion
    let mut swaps = 0usize;
    for k in 1..shifted.len() {
        let mut m = k;
        while m > 0 && shifted[m - 1] < shifted[m] {
            shifted.swap(m - 1, m);
            swaps += 1;
            m -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return SignedPartition::Zero;
    }
    let mu = stairs.unshift(&shifted);
    if mu.last().is_some_and(|&x| x < 0) {
        return SignedPartition::Zero;
    }
    let partition = Partition::new(mu.into_iter().map(|x| x as usize).collect())
        .expect("strictly decreasing minus staircase is a partition");
    SignedPartition::new(if swaps.is_multiple_of(2) { 1 } else { -1 }, partition)
}

/// Self-test of the adjacent swap rule `s_{(α,r,s,β)} = -s_{(α,s-1,r+1,β)}`.
pub fn adjacent_swap_identity_check(alpha: &[i64], r: i64, s: i64, beta: &[i64]) -> bool {
    let build = |a: i64, b: i64| {
        let mut v = alpha.to_vec();
        v.push(a);
        v.push(b);
        v.extend_from_slice(beta);
        IntVector::new(v)
    };
    straighten(&build(r, s)) == straighten(&build(s - 1, r + 1)).negate()
}

/// Expands `det(h_{α_i + j - i})` as the signed sum over `w ∈ S_ℓ` of
/// `h_{w(α+ρ_ℓ) - ρ_ℓ}`. Terms with a negative index vanish and zero
/// indices are dropped (`h_0 = 1`).
pub fn jacobi_trudi_expand(alpha: &IntVector) -> SymFunc {
    let stairs = Staircase::new(alpha.len());
    let shifted = stairs.shift(alpha.entries());
    let mut out = SymFunc::zero(Basis::Complete);
    for w in Permutation::all(alpha.len()) {
        let index = stairs.unshift(&w.apply(&shifted));
        if index.iter().any(|&x| x < 0) {
            continue;
        }
        let key = Partition::from_unsorted(index.into_iter().map(|x| x as usize).collect());
        out.add_term(key, BigInt::from(w.sign()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn iv(entries: &[i64]) -> IntVector {
        IntVector::new(entries.to_vec())
    }

    #[test]
    fn raising_examples() {
        assert_eq!(apply_raising(&iv(&[1, 1]), 1, 2).unwrap(), iv(&[2, 0]));
        assert_eq!(apply_raising(&iv(&[3, 2, 1]), 1, 3).unwrap(), iv(&[4, 2, 0]));
        assert_eq!(apply_raising(&iv(&[0, 2]), 1, 2).unwrap(), iv(&[1, 1]));
        assert!(apply_raising(&iv(&[1, 1]), 2, 1).is_err());
        assert!(apply_raising(&iv(&[1, 1]), 1, 3).is_err());
        assert!(apply_raising(&iv(&[1, 1]), 0, 1).is_err());
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&iv(&[2, 1])), SignedPartition::Plus(partition![2, 1]));
        assert_eq!(straighten(&iv(&[1, 3])), SignedPartition::Minus(partition![2, 2]));
        assert_eq!(straighten(&iv(&[1, 2])), SignedPartition::Zero);
        assert_eq!(straighten(&iv(&[0, 2])), SignedPartition::Minus(partition![1, 1]));
        assert_eq!(straighten(&iv(&[])), SignedPartition::Plus(partition![]));
        assert_eq!(straighten(&iv(&[-1])), SignedPartition::Zero);
        assert_eq!(straighten(&iv(&[2, 0, 0])), SignedPartition::Plus(partition![2]));
    }

    #[test]
    fn adjacent_swap_examples() {
        assert!(adjacent_swap_identity_check(&[], 1, 3, &[]));
        assert!(adjacent_swap_identity_check(&[4], 2, 2, &[1]));
        assert!(adjacent_swap_identity_check(&[], 0, 2, &[]));
    }

    #[test]
    fn jacobi_trudi_examples() {
        let e = jacobi_trudi_expand(&iv(&[2, 1]));
        assert_eq!(
            e,
            SymFunc::from_terms(Basis::Complete, [(partition![2, 1], 1), (partition![3], -1)])
        );
        let e = jacobi_trudi_expand(&iv(&[1, 1]));
        assert_eq!(
            e,
            SymFunc::from_terms(Basis::Complete, [(partition![1, 1], 1), (partition![2], -1)])
        );
        for p in 0..5 {
            assert_eq!(
                jacobi_trudi_expand(&iv(&[p])),
                SymFunc::basis_element(Basis::Complete, Partition::row(p as usize))
            );
        }
        assert!(jacobi_trudi_expand(&iv(&[1, 2])).is_zero());
    }
}
