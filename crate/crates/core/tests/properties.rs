use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use schurkit::combinatorics::{conjugate, partition_dominates, partitions_of};
use schurkit::polyval::{eval_s_tableau, eval_symfunc, SparsePoly};
use schurkit::ring::{convert, multiply, omega};
use schurkit::schur_core::{straighten, SignedPartition};
use schurkit::tableaux::{kostka, lr_coefficient};
use schurkit::{Basis, Composition, IntVector, Partition, SkewShape, SymFunc};

fn partition_up_to(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|k| {
        let all = partitions_of(k, None, None);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![
        Just(Basis::Schur),
        Just(Basis::Complete),
        Just(Basis::Elementary),
        Just(Basis::Monomial)
    ]
}

fn symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    (
        basis(),
        prop::collection::vec((partition_up_to(max_degree), -5i64..=5), 0..4),
    )
        .prop_map(|(b, terms)| SymFunc::from_terms(b, terms))
}

/// Counts fillings of `λ/μ` with content `α` cell by cell, row by row.
fn brute_kostka(lambda: &Partition, mu: &Partition, alpha: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.part(0)]; lambda.len()];
    let mut left = alpha.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], mu: &Partition, grid: &mut [Vec<usize>], left: &mut [usize]) -> u64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if j > mu.part(i) && grid[i][j - 1] > v {
                continue;
            }
            if i > 0 && j >= mu.part(i - 1) && grid[i - 1][j] >= v {
                continue;
            }
            left[v - 1] -= 1;
            grid[i][j] = v;
            total += go(k + 1, cells, mu, grid, left);
            left[v - 1] += 1;
        }
        total
    }
    go(0, &cells, mu, &mut grid, &mut left)
}

/// Counts tableaux of shape `λ/μ` and content `ν` whose reverse reading
/// word (rows top to bottom, each right to left) is a lattice word.
fn brute_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.part(0)]; lambda.len()];
    let mut seen = vec![0usize; nu.len() + 1];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        grid: &mut [Vec<usize>],
        seen: &mut [usize],
    ) -> u64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let mut total = 0;
        for v in 1..=nu.len() {
            if seen[v] == nu.part(v - 1) || (v > 1 && seen[v] == seen[v - 1]) {
                continue;
            }
            // filled right to left, so the right neighbour is known
            if j + 1 < lambda.part(i) && grid[i][j + 1] < v {
                continue;
            }
            if i > 0 && j >= mu.part(i - 1) && grid[i - 1][j] >= v {
                continue;
            }
            grid[i][j] = v;
            seen[v] += 1;
            total += go(k + 1, cells, lambda, mu, nu, grid, seen);
            seen[v] -= 1;
        }
        total
    }
    go(0, &cells, lambda, mu, nu, &mut grid, &mut seen)
}

#[test]
fn kostka_matches_brute_force() {
    for k in 0..=6 {
        for lambda in partitions_of(k, None, None) {
            for j in 0..=k {
                for mu in partitions_of(j, None, None).into_iter().filter(|m| lambda.contains(m)) {
                    let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
                    for alpha in schurkit::combinatorics::compositions_of(k - j, 3) {
                        let got = kostka(&shape, &alpha.to_int_vector());
                        assert_eq!(
                            got,
                            BigUint::from(brute_kostka(&lambda, &mu, alpha.entries())),
                            "{lambda}/{mu} {alpha}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn lr_matches_lattice_word_count() {
    for k in 0..=7 {
        for lambda in partitions_of(k, None, None) {
            for a in 0..=k {
                for mu in partitions_of(a, None, None) {
                    for nu in partitions_of(k - a, None, None) {
                        assert_eq!(
                            lr_coefficient(&lambda, &mu, &nu),
                            brute_lr(&lambda, &mu, &nu),
                            "{lambda} {mu} {nu}"
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_round_trip(p in partition_up_to(12)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(conjugate(&conjugate(&p)), p.clone());
        prop_assert_eq!(conjugate(&p).size(), p.size());
    }

    #[test]
    fn dominance_reverses_under_conjugation(a in partition_up_to(8), b in partition_up_to(8)) {
        prop_assume!(a.size() == b.size());
        let forward = partition_dominates(&a, &b).unwrap();
        prop_assert_eq!(forward, partition_dominates(&b.conjugate(), &a.conjugate()).unwrap());
    }

    #[test]
    fn straighten_swap_relation(v in prop::collection::vec(-3i64..=6, 1..6), pos in 0usize..5) {
        prop_assume!(pos + 1 < v.len());
        let mut swapped = v.clone();
        swapped[pos] = v[pos + 1] - 1;
        swapped[pos + 1] = v[pos] + 1;
        let a = straighten(&IntVector::new(v.clone()));
        let b = straighten(&IntVector::new(swapped));
        prop_assert_eq!(a.clone(), b.negate());
        if let Some(lambda) = a.partition() {
            prop_assert_eq!(lambda.size() as i64, v.iter().sum::<i64>());
        }
    }

    #[test]
    fn straighten_fixes_partitions(p in partition_up_to(10), pad in 0usize..3) {
        let mut v: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
        v.extend(std::iter::repeat_n(0, pad));
        prop_assert_eq!(straighten(&IntVector::new(v)), SignedPartition::Plus(p));
    }

    #[test]
    fn conversions_round_trip(f in symfunc(6), target in basis()) {
        let there = convert(&f, target);
        prop_assert_eq!(there.basis(), target);
        prop_assert_eq!(convert(&there, f.basis()), f);
    }

    #[test]
    fn conversions_preserve_polynomial_values(f in symfunc(4), target in basis()) {
        prop_assert_eq!(eval_symfunc(&convert(&f, target), 4), eval_symfunc(&f, 4));
    }

    #[test]
    fn product_is_commutative_and_omega_multiplicative(f in symfunc(3), g in symfunc(3)) {
        let fg = multiply(&f, &g);
        prop_assert_eq!(&fg, &multiply(&g, &f));
        prop_assert_eq!(omega(&fg), multiply(&omega(&f), &omega(&g)));
    }

    #[test]
    fn product_is_associative(f in symfunc(2), g in symfunc(2), h in symfunc(2)) {
        prop_assert_eq!(multiply(&multiply(&f, &g), &h), multiply(&f, &multiply(&g, &h)));
    }

    #[test]
    fn product_matches_polynomial_product(f in symfunc(3), g in symfunc(3)) {
        let n = 3;
        prop_assert_eq!(eval_symfunc(&multiply(&f, &g), n), &eval_symfunc(&f, n) * &eval_symfunc(&g, n));
    }

    #[test]
    fn lr_symmetries(lambda in partition_up_to(8), mu in partition_up_to(4)) {
        prop_assume!(lambda.contains(&mu));
        for nu in partitions_of(lambda.size() - mu.size(), None, None) {
            let c = lr_coefficient(&lambda, &mu, &nu);
            prop_assert_eq!(c, lr_coefficient(&lambda, &nu, &mu));
            prop_assert_eq!(c, lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
        }
    }

    #[test]
    fn kostka_ignores_content_order(lambda in partition_up_to(7), perm in Just(()).prop_perturb(|_, mut rng| rng.random::<u64>())) {
        for mu in partitions_of(lambda.size(), None, None) {
            let mut alpha = mu.parts().to_vec();
            let len = alpha.len();
            if len > 1 {
                alpha.swap((perm as usize) % len, (perm as usize / 7) % len);
            }
            let shape = SkewShape::straight(lambda.clone());
            prop_assert_eq!(kostka(&shape, &Composition::new(alpha).to_int_vector()), kostka(&shape, &mu.to_int_vector()));
        }
    }

    #[test]
    fn schur_polynomials_are_symmetric_and_stable(lambda in partition_up_to(5), n in 1usize..4) {
        let p = eval_s_tableau(&lambda, &Partition::empty(), n + 1);
        prop_assert!(p.is_symmetric());
        prop_assert_eq!(p.drop_last_variable(), eval_s_tableau(&lambda, &Partition::empty(), n));
    }

    #[test]
    fn text_and_json_round_trips(f in symfunc(6)) {
        prop_assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f.clone());
        if !f.is_zero() {
            prop_assert_eq!(f.to_string().parse::<SymFunc>().unwrap(), f.clone());
        }
        let p = eval_symfunc(&f, 3);
        prop_assert_eq!(SparsePoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn scaling_is_linear(f in symfunc(4), c in -4i64..=4) {
        let c = BigInt::from(c);
        prop_assert_eq!(convert(&f.scale(&c), Basis::Schur), convert(&f, Basis::Schur).scale(&c));
    }
}
