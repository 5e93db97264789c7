//! The ring of symmetric functions: Pieri and Littlewood-Richardson
//! multiplication, basis changes, the involution `ω` and skew Schur
//! functions.
//!
//! Products are computed in the Schur basis. Sums of elements written in
//! different bases are rejected; convert explicitly first.

mod identities;
mod transition;

pub use identities::{
    cauchy_abstract_check, generalized_mirror_check, mirror_identity_check, newton_relation,
    omega_via_elementary_products, Mirror,
};
pub use transition::{convert, degree_tables, DegreeTables, TransitionMatrix};

use num_bigint::BigInt;

use crate::combinatorics::{
    horizontal_strip_extensions, partitions_of, vertical_strip_extensions, Partition, Permutation,
};
use crate::error::{Error, Result};
use crate::schur_core::Staircase;
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::lr_coefficient;

fn require_schur(f: &SymFunc) -> Result<()> {
    if f.basis() != Basis::Schur {
        return Err(Error::MixedBasis {
            left: Basis::Schur,
            right: f.basis(),
        });
    }
    Ok(())
}

/// `h_p · f` by adding horizontal `p`-strips to every term.
pub fn pieri_h(p: usize, f: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in f.iter() {
        for mu in horizontal_strip_extensions(lambda, p, None) {
            out.add_term(mu, c.clone());
        }
    }
    Ok(out)
}

/// `e_p · f` by adding vertical `p`-strips to every term.
pub fn pieri_e(p: usize, f: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in f.iter() {
        for mu in vertical_strip_extensions(lambda, p, None) {
            out.add_term(mu, c.clone());
        }
    }
    Ok(out)
}

/// `s_μ · s_ν = Σ_λ c^λ_{μν} s_λ`.
pub fn schur_product(mu: &Partition, nu: &Partition) -> SymFunc {
    let k = mu.size() + nu.size();
    let max_len = mu.len() + nu.len();
    let max_part = mu.part(0) + nu.part(0);
    let mut out = SymFunc::zero(Basis::Schur);
    for lambda in partitions_of(k, Some(max_len), Some(max_part)) {
        if !lambda.contains(mu) || !lambda.contains(nu) {
            continue;
        }
        let c = lr_coefficient(&lambda, mu, nu);
        out.add_term(lambda, BigInt::from(c));
    }
    out
}

/// Product of two symmetric functions, returned in the Schur basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let f = convert(f, Basis::Schur);
    let g = convert(g, Basis::Schur);
    let mut out = SymFunc::zero(Basis::Schur);
    for (mu, a) in f.iter() {
        for (nu, b) in g.iter() {
            out.add_scaled(&schur_product(mu, nu), &(a * b))
                .expect("both in the Schur basis");
        }
    }
    out
}

/// The involution `ω`: conjugates Schur indices and swaps `h` with `e`.
/// Monomial input is routed through the Schur basis.
pub fn omega(f: &SymFunc) -> SymFunc {
    match f.basis() {
        Basis::Schur => f.map_keys(Basis::Schur, Partition::conjugate),
        Basis::Complete => f.retag(Basis::Elementary),
        Basis::Elementary => f.retag(Basis::Complete),
        Basis::Monomial => convert(&omega(&convert(f, Basis::Schur)), Basis::Monomial),
    }
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`; zero unless `μ ⊂ λ`.
pub fn skew_schur(lambda: &Partition, mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    if !lambda.contains(mu) {
        return out;
    }
    let k = lambda.size() - mu.size();
    for nu in partitions_of(k, Some(lambda.len()), Some(lambda.part(0))) {
        if lambda.contains(&nu) {
            out.add_term(nu.clone(), BigInt::from(lr_coefficient(lambda, mu, &nu)));
        }
    }
    out
}

/// Which determinant to expand in [`skew_jacobi_trudi`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// `det(h_{λ_i - μ_j + j - i})`.
    Complete,
    /// `det(e_{λ'_i - μ'_j + j - i})`.
    Elementary,
}

/// `s_{λ/μ}` as a signed sum of `h` (or `e`) products from the skew
/// Jacobi-Trudi determinant. The `e` flavor expands over the conjugate
/// shapes, so both flavors represent the same function.
pub fn skew_jacobi_trudi(lambda: &Partition, mu: &Partition, flavor: Flavor) -> SymFunc {
    let (outer, inner, basis) = match flavor {
        Flavor::Complete => (lambda.clone(), mu.clone(), Basis::Complete),
        Flavor::Elementary => (lambda.conjugate(), mu.conjugate(), Basis::Elementary),
    };
    let mut out = SymFunc::zero(basis);
    if !outer.contains(&inner) {
        return out;
    }
    let len = outer.len();
    let stairs = Staircase::new(len);
    let top = stairs.shift(&outer.padded(len));
    let bottom = stairs.shift(&inner.padded(len));
    for w in Permutation::all(len) {
        let moved = w.apply(&bottom);
        let index: Vec<i64> = top.iter().zip(&moved).map(|(a, b)| a - b).collect();
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

    fn s(terms: &[(Partition, i64)]) -> SymFunc {
        SymFunc::from_terms(Basis::Schur, terms.iter().cloned())
    }

    fn s1(lambda: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Schur, lambda)
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri_h(1, &s1(partition![1])).unwrap(),
            s(&[(partition![2], 1), (partition![1, 1], 1)])
        );
        assert_eq!(
            pieri_h(2, &s1(partition![2, 1])).unwrap(),
            s(&[
                (partition![4, 1], 1),
                (partition![3, 2], 1),
                (partition![3, 1, 1], 1),
                (partition![2, 2, 1], 1)
            ])
        );
        let f = s(&[(partition![3], 2), (partition![1, 1], -1)]);
        assert_eq!(pieri_h(0, &f).unwrap(), f);
        assert_eq!(
            pieri_e(1, &s1(partition![1])).unwrap(),
            s(&[(partition![2], 1), (partition![1, 1], 1)])
        );
        assert_eq!(
            pieri_e(2, &s1(partition![1])).unwrap(),
            s(&[(partition![2, 1], 1), (partition![1, 1, 1], 1)])
        );
        assert_eq!(pieri_e(2, &s1(partition![])).unwrap(), s(&[(partition![1, 1], 1)]));
        assert!(pieri_h(1, &SymFunc::one(Basis::Complete)).is_err());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            multiply(&s1(partition![1]), &s1(partition![1])),
            s(&[(partition![2], 1), (partition![1, 1], 1)])
        );
        let expected = s(&[
            (partition![4, 2], 1),
            (partition![4, 1, 1], 1),
            (partition![3, 3], 1),
            (partition![3, 2, 1], 2),
            (partition![3, 1, 1, 1], 1),
            (partition![2, 2, 2], 1),
            (partition![2, 2, 1, 1], 1),
        ]);
        assert_eq!(multiply(&s1(partition![2, 1]), &s1(partition![2, 1])), expected);
        let f = s(&[(partition![3, 1], 3), (partition![2], -1)]);
        assert_eq!(multiply(&SymFunc::one(Basis::Schur), &f), f);
        assert!(multiply(&SymFunc::zero(Basis::Schur), &f).is_zero());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&s1(partition![3, 1])), s1(partition![2, 1, 1]));
        assert_eq!(
            omega(&SymFunc::basis_element(Basis::Complete, partition![2, 1])),
            SymFunc::basis_element(Basis::Elementary, partition![2, 1])
        );
        let m = SymFunc::from_terms(Basis::Monomial, [(partition![2, 1], 3), (partition![3], 1)]);
        assert_eq!(omega(&omega(&m)), m);
        // ω(m_[2]) = ω(s_[2] - s_[1,1]) = s_[1,1] - s_[2] = -m_[2]
        assert_eq!(
            omega(&SymFunc::basis_element(Basis::Monomial, partition![2])),
            SymFunc::term(Basis::Monomial, partition![2], -1)
        );
    }

    #[test]
    fn skew_examples() {
        assert_eq!(
            skew_schur(&partition![2, 1], &partition![1]),
            s(&[(partition![2], 1), (partition![1, 1], 1)])
        );
        assert_eq!(
            skew_schur(&partition![3, 1], &partition![3, 1]),
            SymFunc::one(Basis::Schur)
        );
        assert_eq!(skew_schur(&partition![2, 2], &partition![1]), s1(partition![2, 1]));
        assert!(skew_schur(&partition![2], &partition![1, 1]).is_zero());
    }

    #[test]
    fn skew_jacobi_trudi_examples() {
        assert_eq!(
            skew_jacobi_trudi(&partition![2, 1], &partition![1], Flavor::Complete),
            SymFunc::basis_element(Basis::Complete, partition![1, 1])
        );
        assert_eq!(
            skew_jacobi_trudi(&partition![2, 1], &partition![], Flavor::Complete),
            crate::schur_core::jacobi_trudi_expand(&partition![2, 1].to_int_vector())
        );
        let e = skew_jacobi_trudi(&partition![1, 1], &partition![], Flavor::Elementary);
        assert_eq!(e, SymFunc::basis_element(Basis::Elementary, partition![2]));
        assert_eq!(convert(&e, Basis::Schur), s1(partition![1, 1]));
    }
}
