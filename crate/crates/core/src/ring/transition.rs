//! Change of basis between `s`, `h`, `e` and `m`, one degree at a time.
//!
//! Every conversion routes through the Schur basis. The Kostka matrix
//! `K[λ][μ] = K_{λμ}` gives `s → m` directly and `h → s` through its
//! transpose; the inverse directions use the exact inverse of `K`, which is
//! unitriangular in the canonical order. The `e` basis is reached by
//! transporting the `h` tables through `ω`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{partition_dominates, partitions_of, Composition, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::kostka_by_shape;

/// Kostka matrix and its inverse for one degree, indexed by
/// `partitions_of(k)` in canonical order.
#[derive(Debug)]
pub struct DegreeTables {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    pub kostka: Vec<Vec<BigInt>>,
    pub kostka_inverse: Vec<Vec<BigInt>>,
}

impl DegreeTables {
    fn compute(k: usize) -> Self {
        let partitions = partitions_of(k, None, None);
        let index: HashMap<Partition, usize> = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let n = partitions.len();
        let mut kostka = vec![vec![BigInt::zero(); n]; n];
        for (col, mu) in partitions.iter().enumerate() {
            let counts = kostka_by_shape(&Composition::new(mu.parts().to_vec()));
            for (lambda, count) in counts {
                kostka[index[&lambda]][col] = BigInt::from(count);
            }
        }
        let kostka_inverse = invert_upper_unitriangular(&kostka);
        DegreeTables {
            partitions,
            index,
            kostka,
            kostka_inverse,
        }
    }

    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }
}

/// Inverts a unitriangular matrix with zeros below the diagonal by back
/// substitution over the integers.
#[allow(clippy::needless_range_loop)]
fn invert_upper_unitriangular(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        assert!(row[i].is_one(), "Kostka matrix diagonal must be 1");
        assert!(row[..i].iter().all(Zero::is_zero), "Kostka matrix must be triangular");
    }
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        inv[j][j] = BigInt::one();
        for i in (0..j).rev() {
            let mut acc = BigInt::zero();
            for m in i + 1..=j {
                if !a[i][m].is_zero() && !inv[m][j].is_zero() {
                    acc += &a[i][m] * &inv[m][j];
                }
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

/// Shared per-degree tables, computed once and then read concurrently.
pub fn degree_tables(k: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("transition cache poisoned");
    guard
        .entry(k)
        .or_insert_with(|| Arc::new(DegreeTables::compute(k)))
        .clone()
}

fn to_schur(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    match f.basis() {
        Basis::Schur => return f.clone(),
        Basis::Monomial => {
            // m_μ = Σ_λ K⁻¹[μ][λ] s_λ
            for (mu, c) in f.iter() {
                let t = degree_tables(mu.size());
                let row = &t.kostka_inverse[t.index_of(mu)];
                for (lambda, a) in t.partitions.iter().zip(row) {
                    out.add_term(lambda.clone(), a * c);
                }
            }
        }
        Basis::Complete => {
            // h_λ = Σ_μ K[μ][λ] s_μ
            for (lambda, c) in f.iter() {
                let t = degree_tables(lambda.size());
                let col = t.index_of(lambda);
                for (mu, row) in t.partitions.iter().zip(&t.kostka) {
                    out.add_term(mu.clone(), &row[col] * c);
                }
            }
        }
        Basis::Elementary => {
            // e_λ = ω(h_λ)
            return to_schur(&f.retag(Basis::Complete)).map_keys(Basis::Schur, Partition::conjugate);
        }
    }
    out
}

fn from_schur(f: &SymFunc, target: Basis) -> SymFunc {
    debug_assert_eq!(f.basis(), Basis::Schur);
    let mut out = SymFunc::zero(target);
    match target {
        Basis::Schur => return f.clone(),
        Basis::Monomial => {
            // s_λ = Σ_μ K[λ][μ] m_μ
            for (lambda, c) in f.iter() {
                let t = degree_tables(lambda.size());
                let row = &t.kostka[t.index_of(lambda)];
                for (mu, a) in t.partitions.iter().zip(row) {
                    out.add_term(mu.clone(), a * c);
                }
            }
        }
        Basis::Complete => {
            // s_λ = Σ_μ K⁻¹[μ][λ] h_μ
            for (lambda, c) in f.iter() {
                let t = degree_tables(lambda.size());
                let col = t.index_of(lambda);
                for (mu, row) in t.partitions.iter().zip(&t.kostka_inverse) {
                    out.add_term(mu.clone(), &row[col] * c);
                }
            }
        }
        Basis::Elementary => {
            let dual = f.map_keys(Basis::Schur, Partition::conjugate);
            return from_schur(&dual, Basis::Complete).retag(Basis::Elementary);
        }
    }
    out
}

/// Exact change of basis.
pub fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis() == target {
        return f.clone();
    }
    from_schur(&to_schur(f), target)
}

/// The matrix expressing each source basis element of degree `k` in the
/// target basis: `entries[i][j]` is the coefficient of `target_j` in
/// `source_i`, both indexed by `partitions_of(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub degree: usize,
    pub source: Basis,
    pub target: Basis,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn new(degree: usize, source: Basis, target: Basis) -> Self {
        let partitions = partitions_of(degree, None, None);
        let entries = partitions
            .iter()
            .map(|lambda| {
                let image = convert(&SymFunc::basis_element(source, lambda.clone()), target);
                partitions.iter().map(|mu| image.coeff(mu)).collect()
            })
            .collect();
        TransitionMatrix {
            degree,
            source,
            target,
            partitions,
            entries,
        }
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> BigInt {
        let i = self.partitions.iter().position(|p| p == row);
        let j = self.partitions.iter().position(|p| p == col);
        match (i, j) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigInt::zero(),
        }
    }

    /// Unit diagonal, and `entries[λ][μ] ≠ 0` only when `λ ⪰ μ`.
    pub fn is_lower_unitriangular(&self) -> bool {
        self.unitriangular_by(|row, col| partition_dominates(row, col).unwrap_or(false))
    }

    /// Unit diagonal, and `entries[λ][μ] ≠ 0` only when `μ ⪰ λ`.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.unitriangular_by(|row, col| partition_dominates(col, row).unwrap_or(false))
    }

    fn unitriangular_by(&self, allowed: impl Fn(&Partition, &Partition) -> bool) -> bool {
        self.partitions.iter().enumerate().all(|(i, row)| {
            self.partitions.iter().enumerate().all(|(j, col)| {
                let a = &self.entries[i][j];
                if i == j {
                    a.is_one()
                } else {
                    a.is_zero() || allowed(row, col)
                }
            })
        })
    }

    pub fn transpose(&self) -> Vec<Vec<BigInt>> {
        let n = self.partitions.len();
        (0..n)
            .map(|j| (0..n).map(|i| self.entries[i][j].clone()).collect())
            .collect()
    }
}
