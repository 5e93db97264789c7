//! Property suites over every instance of a given size.
//!
//! Each suite checks one family of identities for all instances of a
//! single degree (or, with `upto`, of every degree up to the bound) and
//! reports how many instances passed together with the first
//! counterexample. Instances within a degree are checked in parallel and
//! collected in canonical order, so reports are deterministic.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::{partitions_of, Composition, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::polyval::{
    alternant_pieri_check, bialternant_check, cauchy_truncated_check, eval_h, eval_s_tableau,
    generating_function_check, product_oracle_with, reduction_check, two_alphabet_check, SchurPolyCache, SparsePoly,
};
use crate::ring::{
    cauchy_abstract_check, convert, generalized_mirror_check, mirror_identity_check, multiply, newton_relation, omega,
    omega_via_elementary_products, pieri_e, pieri_h, schur_product, skew_jacobi_trudi, skew_schur, Flavor, Mirror,
    TransitionMatrix,
};
use crate::schur_core::jacobi_trudi_expand;
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{bz_involution, kostka, lr_coefficient, signed_lr_sum, signed_pairs};

pub const SUITES: &[&str] = &[
    "pieri",
    "lr-signed",
    "mirror",
    "cauchy",
    "bialternant",
    "reduction",
    "skew-jt",
    "duality",
    "newton",
    "oracle",
    "jacobi-trudi",
    "kostka",
];

/// Outcome of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub bound: usize,
    pub unit: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "bound": self.bound,
            "unit": self.unit,
            "checked": self.checked,
            "failed": self.failed,
            "counterexample": self.counterexample,
        })
    }

    fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.counterexample.is_none() {
            self.counterexample = other.first;
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} {}", self.checked, self.unit)
        } else {
            write!(f, "FAIL {} of {} {}", self.failed, self.checked, self.unit)
        }
    }
}

/// Pass/fail counts for one batch of instances.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub first: Option<String>,
}

impl Tally {
    /// Checks every instance in parallel; the first failure in input order
    /// becomes the counterexample.
    pub fn run<T, F>(instances: Vec<T>, check: F) -> Tally
    where
        T: Send + Sync + fmt::Debug,
        F: Fn(&T) -> std::result::Result<(), String> + Sync + Send,
    {
        let outcomes: Vec<Option<String>> = instances
            .par_iter()
            .map(|inst| check(inst).err().map(|why| format!("{inst:?}: {why}")))
            .collect();
        let mut t = Tally {
            checked: outcomes.len(),
            ..Tally::default()
        };
        for o in outcomes.into_iter().flatten() {
            t.failed += 1;
            t.first.get_or_insert(o);
        }
        t
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }
}

fn expect(ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn expect_ok(r: Result<bool>, what: &str) -> std::result::Result<(), String> {
    match r {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("{what} failed")),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn s(lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(Basis::Schur, lambda.clone())
}

/// Pairs `(μ, ν)` with `|μ| + |ν| = k`.
pub fn pairs_of_total(k: usize) -> Vec<(Partition, Partition)> {
    (0..=k)
        .flat_map(|a| {
            let left = partitions_of(a, None, None);
            let right = partitions_of(k - a, None, None);
            left.into_iter()
                .flat_map(move |mu| right.clone().into_iter().map(move |nu| (mu.clone(), nu)))
        })
        .collect()
}

/// Pairs `μ ⊂ λ` with `|λ| = k`.
pub fn skew_pairs(k: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for lambda in partitions_of(k, None, None) {
        for j in 0..=k {
            for mu in partitions_of(j, Some(lambda.len()), Some(lambda.part(0))) {
                if lambda.contains(&mu) {
                    out.push((lambda.clone(), mu));
                }
            }
        }
    }
    out
}

/// Horizontal and vertical Pieri rules against the LR product, for
/// `|λ| + p = k`.
pub fn check_pieri(k: usize) -> Tally {
    let instances: Vec<(Partition, usize)> = (0..=k)
        .flat_map(|p| partitions_of(k - p, None, None).into_iter().map(move |l| (l, p)))
        .collect();
    Tally::run(instances, |(lambda, p)| {
        let h = pieri_h(*p, &s(lambda)).map_err(|e| e.to_string())?;
        expect(h == schur_product(lambda, &Partition::row(*p)), || {
            format!("h_{p} s_{lambda} = {h}")
        })?;
        let via_h = multiply(&SymFunc::basis_element(Basis::Complete, Partition::row(*p)), &s(lambda));
        expect(h == via_h, || format!("h_{p} product route gives {via_h}"))?;
        let e = pieri_e(*p, &s(lambda)).map_err(|e| e.to_string())?;
        expect(e == schur_product(lambda, &Partition::column(*p)), || {
            format!("e_{p} s_{lambda} = {e}")
        })
    })
}

/// `c^λ_{μν}` equals the signed sum for every triple with `|λ| = k`.
pub fn check_lr_signed(k: usize) -> Tally {
    let instances: Vec<(Partition, Partition, Partition)> = partitions_of(k, None, None)
        .into_iter()
        .flat_map(|lambda| {
            pairs_of_total(k)
                .into_iter()
                .map(move |(mu, nu)| (lambda.clone(), mu, nu))
        })
        .collect();
    Tally::run(instances, |(lambda, mu, nu)| {
        let c = lr_coefficient(lambda, mu, nu);
        let signed = signed_lr_sum(lambda, mu, nu);
        expect(c as i64 == signed, || format!("c = {c}, signed sum = {signed}"))
    })
}

/// The sign-reversing involution on every bad pair for triples with
/// `|λ| = k`: it maps bad pairs to bad pairs of opposite sign and squares
/// to the identity.
pub fn check_involution(k: usize) -> Tally {
    let instances: Vec<(Partition, Partition, Partition)> = partitions_of(k, None, None)
        .into_iter()
        .flat_map(|lambda| {
            pairs_of_total(k)
                .into_iter()
                .map(move |(mu, nu)| (lambda.clone(), mu, nu))
        })
        .collect();
    Tally::run(instances, |(lambda, mu, nu)| {
        for pair in signed_pairs(lambda, mu, nu).into_iter().filter(|p| p.is_bad()) {
            let image = bz_involution(&pair, nu).map_err(|e| e.to_string())?;
            expect(image.is_bad(), || format!("image of {pair:?} is good"))?;
            expect(image.sign() == -pair.sign(), || format!("sign kept on {pair:?}"))?;
            let back = bz_involution(&image, nu).map_err(|e| e.to_string())?;
            expect(back == pair, || format!("not an involution on {pair:?}"))?;
        }
        Ok(())
    })
}

/// Both mirror identities for `|λ| = k`, `p ≤ 4`, unbounded and with
/// `n ∈ {ℓ, ℓ+1, ℓ+2}`.
pub fn check_mirror(k: usize) -> Tally {
    Tally::run(partitions_of(k, None, None), |lambda| {
        let l = lambda.len();
        for p in 0..=4 {
            for n in [None, Some(l), Some(l + 1), Some(l + 2)] {
                for which in [Mirror::Raise, Mirror::Lower] {
                    expect_ok(
                        mirror_identity_check(lambda, p, n, which),
                        &format!("{which:?} p={p} n={n:?}"),
                    )?;
                }
            }
        }
        Ok(())
    })
}

/// Truncated Cauchy identities in `n ≤ 3` variables and the abstract
/// forms, for degree `k`.
pub fn check_cauchy(k: usize) -> Tally {
    let instances: Vec<(usize, bool)> = (1..=3).flat_map(|n| [(n, false), (n, true)]).collect();
    let poly = Tally::run(instances, |&(n, dual)| {
        expect(cauchy_truncated_check(k, n, dual), || "truncated".into())
    });
    let abstract_form = Tally::run(vec![false, true], |&dual| {
        expect(cauchy_abstract_check(k, dual), || "transition matrices".into())
    });
    poly.merge(abstract_form)
}

/// Bialternant formula and alternant Pieri rule with `r ≤ 3` for `|λ| = k`
/// in `ℓ(λ) ≤ n ≤ 4` variables.
pub fn check_bialternant(k: usize) -> Tally {
    let instances: Vec<(Partition, usize)> = partitions_of(k, Some(4), None)
        .into_iter()
        .flat_map(|lambda| (lambda.len().max(1)..=4).map(move |n| (lambda.clone(), n)))
        .collect();
    Tally::run(instances, |(lambda, n)| {
        expect_ok(bialternant_check(lambda, *n), "bialternant")?;
        for r in 0..=3 {
            expect_ok(alternant_pieri_check(lambda, r, *n), &format!("alternant Pieri r={r}"))?;
        }
        Ok(())
    })
}

/// Reduction formula for `|λ| = k` and `1 ≤ n ≤ 4`.
pub fn check_reduction(k: usize) -> Tally {
    let instances: Vec<(Partition, usize)> = partitions_of(k, None, None)
        .into_iter()
        .flat_map(|lambda| (1..=4).map(move |n| (lambda.clone(), n)))
        .collect();
    Tally::run(instances, |(lambda, n)| {
        expect_ok(reduction_check(lambda, *n), "reduction")
    })
}

/// For `μ ⊂ λ` with `|λ| = k`: both skew Jacobi-Trudi determinants, the
/// straightened expansion and the skew Kostka numbers agree with the LR
/// expansion; for `k ≤ 6` also the two-alphabet identity in 2+2 variables.
pub fn check_skew(k: usize) -> Tally {
    Tally::run(skew_pairs(k), |(lambda, mu)| {
        let target = skew_schur(lambda, mu);
        for flavor in [Flavor::Complete, Flavor::Elementary] {
            let jt = convert(&skew_jacobi_trudi(lambda, mu, flavor), Basis::Schur);
            expect(jt == target, || format!("{flavor:?} determinant gives {jt}"))?;
        }
        expect(generalized_mirror_check(lambda, mu), || "straightened expansion".into())?;
        let shape = SkewShape::new(lambda.clone(), mu.clone()).map_err(|e| e.to_string())?;
        let m = convert(&target, Basis::Monomial);
        for nu in partitions_of(lambda.size() - mu.size(), None, None) {
            let count = BigInt::from(kostka(&shape, &nu.to_int_vector()));
            expect(m.coeff(&nu) == count, || {
                format!("m-coefficient of {nu} is {} not {count}", m.coeff(&nu))
            })?;
        }
        if k <= 6 && mu.is_empty() {
            expect(two_alphabet_check(lambda, 2, 2), || "two-alphabet expansion".into())?;
        }
        Ok(())
    })
}

/// `ω` for `|λ| = k`: involutive, conjugates Schur functions, agrees with
/// the product-of-`e` route and across bases; for `k ≤ 7` also the dual
/// Pieri rule for `p ≤ 4`.
pub fn check_duality(k: usize) -> Tally {
    Tally::run(partitions_of(k, None, None), |lambda| {
        let f = s(lambda);
        let w = omega(&f);
        expect(w == s(&lambda.conjugate()), || format!("ω(s) = {w}"))?;
        expect(omega(&w) == f, || "ω is not involutive".into())?;
        expect(omega_via_elementary_products(&f) == w, || {
            "e-product route disagrees".into()
        })?;
        for b in [Basis::Complete, Basis::Elementary, Basis::Monomial] {
            let g = SymFunc::basis_element(b, lambda.clone());
            let direct = convert(&omega(&g), Basis::Schur);
            let routed = omega(&convert(&g, Basis::Schur));
            expect(direct == routed, || format!("ω on {b} basis"))?;
        }
        if k <= 7 {
            for p in 0..=4 {
                let e = pieri_e(p, &f).map_err(|e| e.to_string())?;
                let mirrored = omega(&pieri_h(p, &s(&lambda.conjugate())).map_err(|e| e.to_string())?);
                expect(e == mirrored, || format!("dual Pieri p={p}"))?;
                let product = multiply(&SymFunc::basis_element(Basis::Elementary, Partition::row(p)), &f);
                expect(e == product, || format!("e_{p} product route p={p}"))?;
            }
        }
        Ok(())
    })
}

/// `Σ (-1)^i h_i e_{r-i} = 0` for `r = k` in the ring and as polynomials
/// in four variables.
pub fn check_newton(k: usize) -> Tally {
    Tally::run(vec![k], |&r| {
        let rel = newton_relation(r);
        let expected = if r == 0 {
            SymFunc::one(Basis::Schur)
        } else {
            SymFunc::zero(Basis::Schur)
        };
        expect(rel == expected, || format!("relation gives {rel}"))?;
        expect(generating_function_check(r, 4), || {
            "polynomial generating functions".into()
        })
    })
}

/// Number of variables used by the product oracle at total degree `k`.
pub fn oracle_vars(k: usize) -> usize {
    k.max(8)
}

/// `multiply(s_μ, s_ν)` against the polynomial peeling oracle for
/// `|μ| + |ν| = k`.
pub fn check_oracle(k: usize, cache: &SchurPolyCache) -> Tally {
    Tally::run(pairs_of_total(k), |(mu, nu)| {
        let ring = multiply(&s(mu), &s(nu));
        let oracle = product_oracle_with(mu, nu, cache).map_err(|e| e.to_string())?;
        expect(ring == oracle, || format!("ring {ring} vs oracle {oracle}"))
    })
}

/// Polynomial value of a Jacobi-Trudi `h`-expansion, sharing `h_r`.
fn eval_h_expansion(f: &SymFunc, h: &[SparsePoly], n: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(n);
    for (mu, c) in f.iter() {
        let prod = mu.parts().iter().fold(SparsePoly::one(n), |acc, &p| &acc * &h[p]);
        out.add_scaled(&prod, c);
    }
    out
}

/// Jacobi-Trudi expansion evaluated through `h_r` polynomials equals the
/// tableau Schur polynomial, for `|λ| = k` in `n` variables.
pub fn check_jacobi_trudi(k: usize, n: usize) -> Tally {
    let h: Vec<SparsePoly> = (0..=k as i64).map(|r| eval_h(r, n)).collect();
    Tally::run(partitions_of(k, None, None), |lambda| {
        let jt = jacobi_trudi_expand(&lambda.to_int_vector());
        let lhs = eval_h_expansion(&jt, &h, n);
        let rhs = eval_s_tableau(lambda, &Partition::empty(), n);
        expect(lhs == rhs, || "evaluations differ".into())
    })
}

/// Number of partitions of `k` from Euler's pentagonal recurrence.
pub fn partition_count(k: usize) -> u64 {
    let mut p = vec![0i64; k + 1];
    p[0] = 1;
    for m in 1..=k as i64 {
        let mut acc = 0i64;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[(m - g1) as usize];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                acc += sign * p[(m - g2) as usize];
            }
        }
        p[m as usize] = acc;
    }
    p[k] as u64
}

/// Kostka matrix of degree `k` is unitriangular for dominance, matches
/// tableau counts, and the partition list has the right length.
pub fn check_kostka(k: usize) -> Tally {
    Tally::run(vec![k], |&k| {
        let count = partitions_of(k, None, None).len() as u64;
        expect(count == partition_count(k), || format!("{count} partitions listed"))?;
        let m = TransitionMatrix::new(k, Basis::Schur, Basis::Monomial);
        expect(m.is_lower_unitriangular(), || "not unitriangular".into())?;
        for (i, lambda) in m.partitions.iter().enumerate() {
            for (j, mu) in m.partitions.iter().enumerate() {
                let direct = kostka(&SkewShape::straight(lambda.clone()), &mu.to_int_vector());
                let rearranged: Vec<usize> = mu.parts().iter().rev().copied().collect();
                let reversed = kostka(
                    &SkewShape::straight(lambda.clone()),
                    &Composition::new(rearranged).to_int_vector(),
                );
                expect(
                    m.entries[i][j] == BigInt::from(direct.clone()) && direct == reversed,
                    || format!("K[{lambda}][{mu}]"),
                )?;
                if !m.entries[i][j].is_zero() {
                    expect(i <= j, || format!("entry below the diagonal at {lambda}, {mu}"))?;
                }
            }
        }
        Ok(())
    })
}

fn unit(suite: &str) -> &'static str {
    match suite {
        "pieri" | "oracle" | "skew-jt" => "pairs",
        "lr-signed" => "triples",
        "cauchy" | "newton" | "kostka" => "checks",
        _ => "partitions",
    }
}

/// Runs a named suite at degree `bound`, or at every degree `0..=bound`
/// with `upto`. `progress` receives one line per finished degree.
pub fn run_suite(suite: &str, bound: usize, upto: bool, progress: &mut dyn FnMut(&str)) -> Result<Report> {
    if !SUITES.contains(&suite) {
        return Err(Error::Parse(format!(
            "unknown suite `{suite}`; expected one of {}",
            SUITES.join(", ")
        )));
    }
    let degrees: Vec<usize> = if upto { (0..=bound).collect() } else { vec![bound] };
    let oracle_cache = (suite == "oracle").then(|| SchurPolyCache::with_degrees(oracle_vars(bound), bound));
    let mut report = Report {
        suite: suite.to_string(),
        bound,
        unit: unit(suite),
        checked: 0,
        failed: 0,
        counterexample: None,
    };
    for k in degrees {
        let tally = match suite {
            "pieri" => check_pieri(k),
            "lr-signed" => {
                let t = check_lr_signed(k);
                if k <= 6 {
                    t.merge(check_involution(k))
                } else {
                    t
                }
            }
            "mirror" => check_mirror(k),
            "cauchy" => check_cauchy(k),
            "bialternant" => check_bialternant(k),
            "reduction" => check_reduction(k),
            "skew-jt" => check_skew(k),
            "duality" => check_duality(k),
            "newton" => check_newton(k),
            "oracle" => check_oracle(k, oracle_cache.as_ref().expect("built above")),
            "jacobi-trudi" => check_jacobi_trudi(k, bound.max(1)),
            "kostka" => check_kostka(k),
            _ => unreachable!("suite names checked above"),
        };
        progress(&format!(
            "{suite} degree {k}: {} checked, {} failed",
            tally.checked, tally.failed
        ));
        report.absorb(tally);
    }
    Ok(report)
}
