//! Identity checks in the ring: the mirror identities for sums of
//! straightened Schur functions, the `h`/`e` relation, the Cauchy
//! identities in transition-matrix form, and an independent route to `ω`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{
    compositions_of, horizontal_strip_extensions, horizontal_strip_reductions, partitions_of, IntVector, Partition,
    SkewShape,
};
use crate::error::{Error, Result};
use crate::schur_core::straighten;
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::kostka;

use super::{convert, multiply, skew_schur};

/// The two mirror identities for a partition `λ` and `p ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mirror {
    /// `Σ_{|α|=p} s_{λ+α} = Σ_{λ→μ} s_μ` over horizontal `p`-strips `μ/λ`.
    Raise,
    /// `Σ_{|α|=p} s_{λ-α} = Σ_{μ→λ} s_μ` over horizontal `p`-strips `λ/μ`.
    Lower,
}

/// Both sides of a mirror identity. With `n = Some(n)`, the compositions
/// `α` and the partitions `μ` are restricted to length at most `n`.
pub fn mirror_identity_sides(
    lambda: &Partition,
    p: usize,
    n: Option<usize>,
    which: Mirror,
) -> Result<(SymFunc, SymFunc)> {
    if let Some(n) = n {
        if n < lambda.len() {
            return Err(Error::Precondition(format!(
                "length bound {n} is shorter than {lambda}"
            )));
        }
    }
    // Without a bound, length ℓ(λ)+p already reaches every strip, and the
    // identity holds for each longer length as well.
    let len = n.unwrap_or(lambda.len() + p.max(1));
    let base = lambda.padded(len);
    let sign = match which {
        Mirror::Raise => 1,
        Mirror::Lower => -1,
    };
    let mut lhs = SymFunc::zero(Basis::Schur);
    for alpha in compositions_of(p, len) {
        let v: Vec<i64> = base
            .iter()
            .zip(alpha.entries())
            .map(|(b, &a)| b + sign * a as i64)
            .collect();
        let term = straighten(&IntVector::new(v)).to_symfunc();
        lhs.add_scaled(&term, &BigInt::one())?;
    }
    let strips = match which {
        Mirror::Raise => horizontal_strip_extensions(lambda, p, n),
        Mirror::Lower => horizontal_strip_reductions(lambda, p),
    };
    let rhs = SymFunc::from_terms(Basis::Schur, strips.into_iter().map(|mu| (mu, 1)));
    Ok((lhs, rhs))
}

/// Whether the mirror identity holds for the given data.
pub fn mirror_identity_check(lambda: &Partition, p: usize, n: Option<usize>, which: Mirror) -> Result<bool> {
    let (lhs, rhs) = mirror_identity_sides(lambda, p, n, which)?;
    Ok(lhs == rhs)
}

/// `Σ_{i=0}^{r} (-1)^i h_i e_{r-i}` in the Schur basis; zero for `r ≥ 1`.
pub fn newton_relation(r: usize) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for i in 0..=r {
        let h = SymFunc::basis_element(Basis::Complete, Partition::row(i));
        let e = SymFunc::basis_element(Basis::Elementary, Partition::row(r - i));
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_scaled(&multiply(&h, &e), &sign).expect("products are Schur");
    }
    out
}

type Tensor = BTreeMap<(Partition, Partition), BigInt>;

fn add_tensor(acc: &mut Tensor, left: &SymFunc, right: &SymFunc) {
    for (a, ca) in left.iter() {
        for (b, cb) in right.iter() {
            *acc.entry((a.clone(), b.clone())).or_default() += ca * cb;
        }
    }
}

/// Degree-`k` Cauchy identity in `Λ ⊗ Λ`: `Σ s_λ ⊗ s_λ = Σ m_λ ⊗ h_λ`,
/// or with `dual`, `Σ s_λ ⊗ s_{λ'} = Σ m_λ ⊗ e_λ`. Both sides are
/// expanded in the `m ⊗ h` (resp. `m ⊗ e`) basis.
pub fn cauchy_abstract_check(k: usize, dual: bool) -> bool {
    let right_basis = if dual { Basis::Elementary } else { Basis::Complete };
    let mut lhs = Tensor::new();
    let mut rhs = Tensor::new();
    for lambda in partitions_of(k, None, None) {
        let left = convert(&SymFunc::basis_element(Basis::Schur, lambda.clone()), Basis::Monomial);
        let partner = if dual { lambda.conjugate() } else { lambda.clone() };
        let right = convert(&SymFunc::basis_element(Basis::Schur, partner), right_basis);
        add_tensor(&mut lhs, &left, &right);
        add_tensor(
            &mut rhs,
            &SymFunc::basis_element(Basis::Monomial, lambda.clone()),
            &SymFunc::basis_element(right_basis, lambda),
        );
    }
    lhs.retain(|_, c| !c.is_zero());
    rhs.retain(|_, c| !c.is_zero());
    lhs == rhs
}

/// `s_{λ/μ} = Σ_α K_{μ,α} s_{λ-α}` with each `s_{λ-α}` straightened.
pub fn generalized_mirror_check(lambda: &Partition, mu: &Partition) -> bool {
    let len = lambda.len();
    let base = lambda.padded(len);
    let mu_shape = SkewShape::straight(mu.clone());
    let mut rhs = SymFunc::zero(Basis::Schur);
    for alpha in compositions_of(mu.size(), len) {
        let weight = kostka(&mu_shape, &alpha.to_int_vector());
        if weight.is_zero() {
            continue;
        }
        let v: Vec<i64> = base.iter().zip(alpha.entries()).map(|(b, &a)| b - a as i64).collect();
        let term = straighten(&IntVector::new(v)).to_symfunc();
        rhs.add_scaled(&term, &BigInt::from(weight)).expect("Schur terms");
    }
    skew_schur(lambda, mu) == rhs
}

/// `ω(f)` computed by expanding `f` in the `h` basis and replacing each
/// `h_μ` with the Littlewood-Richardson product `e_{μ_1} e_{μ_2} ⋯`.
pub fn omega_via_elementary_products(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (mu, c) in convert(f, Basis::Complete).iter() {
        let mut prod = SymFunc::one(Basis::Schur);
        for &part in mu.parts() {
            prod = multiply(&prod, &SymFunc::basis_element(Basis::Schur, Partition::column(part)));
        }
        out.add_scaled(&prod, c).expect("Schur terms");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn mirror_examples() {
        assert!(mirror_identity_check(&partition![1], 1, None, Mirror::Raise).unwrap());
        assert!(mirror_identity_check(&partition![2, 1], 2, Some(2), Mirror::Raise).unwrap());
        assert!(mirror_identity_check(&partition![2, 2], 1, None, Mirror::Lower).unwrap());
        let (lhs, _) = mirror_identity_sides(&partition![2, 2], 1, Some(2), Mirror::Lower).unwrap();
        assert_eq!(lhs, SymFunc::basis_element(Basis::Schur, partition![2, 1]));
        assert!(mirror_identity_check(&partition![], 0, None, Mirror::Raise).unwrap());
        assert!(matches!(
            mirror_identity_check(&partition![2, 1], 1, Some(1), Mirror::Raise),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bounded_raise_drops_long_strips() {
        let (lhs, rhs) = mirror_identity_sides(&partition![2], 1, Some(1), Mirror::Raise).unwrap();
        assert_eq!(rhs, SymFunc::basis_element(Basis::Schur, partition![3]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn newton_small() {
        assert_eq!(newton_relation(0), SymFunc::one(Basis::Schur));
        for r in 1..=4 {
            assert!(newton_relation(r).is_zero());
        }
    }

    #[test]
    fn cauchy_small() {
        for k in 0..=4 {
            assert!(cauchy_abstract_check(k, false));
            assert!(cauchy_abstract_check(k, true));
        }
    }

    #[test]
    fn generalized_mirror_small() {
        assert!(generalized_mirror_check(&partition![2, 1], &partition![1]));
        assert!(generalized_mirror_check(&partition![3, 2], &partition![2, 1]));
        assert!(generalized_mirror_check(&partition![2], &partition![1, 1]));
        assert!(generalized_mirror_check(&partition![], &partition![]));
    }

    #[test]
    fn omega_routes_agree() {
        for lambda in partitions_of(4, None, None) {
            let f = SymFunc::basis_element(Basis::Schur, lambda.clone());
            assert_eq!(
                omega_via_elementary_products(&f),
                SymFunc::basis_element(Basis::Schur, lambda.conjugate())
            );
        }
    }
}
