//! Exact polynomials in finitely many variables, used as ground truth for
//! the ring-level computations.
//!
//! Everything here is computed from monomials: monomial symmetric
//! functions by listing rearrangements, `h_r` and `e_r` from their
//! generating products, Schur polynomials by summing `x^{c(T)}` over
//! tableaux, and alternants by antisymmetrizing.

use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    compositions_of, horizontal_strip_extensions, horizontal_strip_reductions, next_permutation, partitions_of,
    IntVector, Partition, Permutation, SkewShape,
};
use crate::error::{Error, Result};
use crate::schur_core::{straighten, Staircase};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::enumerate_ssyt;

pub type Exponents = Vec<u32>;

/// A polynomial in `n` variables with big-integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    n: usize,
    terms: HashMap<Exponents, BigInt>,
}

impl SparsePoly {
    pub fn zero(n: usize) -> Self {
        SparsePoly {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    pub fn monomial(exps: Exponents, coeff: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self::monomial(exps, BigInt::one())
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        assert_eq!(exps.len(), self.n, "exponent vector has the wrong length");
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(exps) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    /// Terms in canonical order: by total degree, then lexicographically
    /// decreasing exponents.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }

    /// `self += c * other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        assert_eq!(self.n, other.n, "variable counts differ");
        for (e, a) in &other.terms {
            self.add_term(e.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a * c);
        }
        out
    }

    /// Keeps the terms accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        SparsePoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies, discarding every product term rejected by `keep`.
    pub fn mul_filtered(&self, other: &Self, keep: impl Fn(&[u32]) -> bool) -> Self {
        assert_eq!(self.n, other.n, "variable counts differ");
        let mut out = Self::zero(self.n);
        let mut key = vec![0u32; self.n];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for ((k, a), b) in key.iter_mut().zip(ea).zip(eb) {
                    *k = a + b;
                }
                if keep(&key) {
                    out.add_term(key.clone(), ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// Invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_vars(i - 1, i) == *self)
    }

    /// Sets the last variable to zero, leaving a polynomial in `n - 1`
    /// variables.
    pub fn drop_last_variable(&self) -> Self {
        assert!(self.n > 0, "no variable to drop");
        let mut out = Self::zero(self.n - 1);
        for (e, c) in &self.terms {
            if e[self.n - 1] == 0 {
                out.terms.insert(e[..self.n - 1].to_vec(), c.clone());
            }
        }
        out
    }

    /// Reindexes into `total` variables, placing variable `i` at
    /// `offset + i`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        assert!(offset + self.n <= total, "embedding does not fit");
        let mut out = Self::zero(total);
        for (e, c) in &self.terms {
            let mut big = vec![0; total];
            big[offset..offset + self.n].copy_from_slice(e);
            out.terms.insert(big, c.clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let raw = PolyJson {
            n: self.n,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| PolyTermJson {
                    exps: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(raw).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: PolyJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(raw.n);
        for t in raw.terms {
            if t.exps.len() != raw.n {
                return Err(Error::Parse(format!(
                    "exponent vector {:?} does not have {} entries",
                    t.exps, raw.n
                )));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            out.add_term(t.exps, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyTermJson {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<PolyTermJson>,
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (exps, c)) in terms.into_iter().enumerate() {
            match (k, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{a}", i + 1)
                    }
                })
                .collect();
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.n, rhs.n, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_filtered(rhs, |_| true)
    }
}

/// `m_λ` in `n` variables: the sum of `x^α` over distinct rearrangements
/// `α` of `λ`.
pub fn eval_m(lambda: &Partition, n: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(n);
    if lambda.len() > n {
        return out;
    }
    let mut exps: Vec<u32> = lambda.padded(n).into_iter().map(|x| x as u32).collect();
    exps.sort_unstable();
    loop {
        out.add_term(exps.clone(), BigInt::one());
        if !next_permutation(&mut exps) {
            return out;
        }
    }
}

fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// `h_r` in `n` variables, read off from `Π_i (1 - x_i t)^{-1}`.
pub fn eval_h(r: i64, n: usize) -> SparsePoly {
    if r < 0 {
        return SparsePoly::zero(n);
    }
    let r = r as u32;
    let mut acc = SparsePoly::one(n);
    for i in 0..n {
        // truncated geometric series 1 + x_i + x_i^2 + ⋯ + x_i^r
        let mut series = SparsePoly::zero(n);
        for a in 0..=r {
            let mut e = vec![0; n];
            e[i] = a;
            series.add_term(e, BigInt::one());
        }
        acc = acc.mul_filtered(&series, |e| total_degree(e) <= r);
    }
    acc.filter(|e| total_degree(e) == r)
}

/// `e_r` in `n` variables, read off from `Π_i (1 + x_i t)`.
pub fn eval_e(r: i64, n: usize) -> SparsePoly {
    if r < 0 {
        return SparsePoly::zero(n);
    }
    let r = r as u32;
    let mut acc = SparsePoly::one(n);
    for i in 0..n {
        let factor = &SparsePoly::one(n) + &SparsePoly::variable(n, i);
        acc = acc.mul_filtered(&factor, |e| total_degree(e) <= r);
    }
    acc.filter(|e| total_degree(e) == r)
}

/// `h_α = Π h_{α_i}` in `n` variables.
pub fn eval_h_product(alpha: &[i64], n: usize) -> SparsePoly {
    alpha.iter().fold(SparsePoly::one(n), |acc, &a| &acc * &eval_h(a, n))
}

/// `e_α = Π e_{α_i}` in `n` variables.
pub fn eval_e_product(alpha: &[i64], n: usize) -> SparsePoly {
    alpha.iter().fold(SparsePoly::one(n), |acc, &a| &acc * &eval_e(a, n))
}

/// `s_{λ/μ}` in `n` variables as `Σ_T x^{c(T)}` over tableaux with entries
/// at most `n`. Zero when `μ ⊄ λ`.
pub fn eval_s_tableau(lambda: &Partition, mu: &Partition, n: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(n);
    let Ok(shape) = SkewShape::new(lambda.clone(), mu.clone()) else {
        return out;
    };
    for t in enumerate_ssyt(&shape, n, None) {
        let exps = t.content(n).into_iter().map(|c| c as u32).collect();
        out.add_term(exps, BigInt::one());
    }
    out
}

/// Evaluates a symmetric function given in any basis in `n` variables.
pub fn eval_symfunc(f: &SymFunc, n: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(n);
    for (lambda, c) in f.iter() {
        let parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        let p = match f.basis() {
            Basis::Schur => eval_s_tableau(lambda, &Partition::empty(), n),
            Basis::Complete => eval_h_product(&parts, n),
            Basis::Elementary => eval_e_product(&parts, n),
            Basis::Monomial => eval_m(lambda, n),
        };
        out = &out + &p.scale(c);
    }
    out
}

/// The alternant `A_α = Σ_{w ∈ S_n} (-1)^w x^{w(α)} = det(x_i^{α_j})`.
pub fn alternant(alpha: &IntVector, n: usize) -> Result<SparsePoly> {
    if alpha.len() > n {
        return Err(Error::Precondition(format!("{alpha} has more than {n} entries")));
    }
    if let Some(&neg) = alpha.entries().iter().find(|&&a| a < 0) {
        return Err(Error::NegativeExponent(neg));
    }
    let padded: Vec<i64> = (0..n).map(|i| alpha.entries().get(i).copied().unwrap_or(0)).collect();
    let mut out = SparsePoly::zero(n);
    for w in Permutation::all(n) {
        let exps = w.apply(&padded).into_iter().map(|a| a as u32).collect();
        out.add_term(exps, BigInt::from(w.sign()));
    }
    Ok(out)
}

fn shifted_alternant(lambda: &Partition, n: usize) -> SparsePoly {
    let stairs = Staircase::new(n);
    alternant(&IntVector::new(stairs.shift(&lambda.padded(n))), n).expect("shifted partition is nonnegative")
}

fn require_length(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("{lambda} has more than {n} parts")));
    }
    Ok(())
}

/// `A_{λ+ρ} = s_λ · A_ρ` in `n` variables, with `s_λ` from tableaux.
pub fn bialternant_check(lambda: &Partition, n: usize) -> Result<bool> {
    require_length(lambda, n)?;
    let lhs = shifted_alternant(lambda, n);
    let rhs = &eval_s_tableau(lambda, &Partition::empty(), n) * &shifted_alternant(&Partition::empty(), n);
    Ok(lhs == rhs)
}

/// `A_{λ+ρ} h_r = Σ_{|α|=r} A_{λ+α+ρ} = Σ_{λ→μ} A_{μ+ρ}` in `n` variables,
/// with `ℓ(α), ℓ(μ) ≤ n`.
pub fn alternant_pieri_check(lambda: &Partition, r: usize, n: usize) -> Result<bool> {
    require_length(lambda, n)?;
    let product = &shifted_alternant(lambda, n) * &eval_h(r as i64, n);

    let stairs = Staircase::new(n);
    let base = stairs.shift(&lambda.padded(n));
    let mut raised = SparsePoly::zero(n);
    for alpha in compositions_of(r, n) {
        let v: Vec<i64> = base.iter().zip(alpha.entries()).map(|(b, &a)| b + a as i64).collect();
        raised = &raised + &alternant(&IntVector::new(v), n)?;
    }

    let mut strips = SparsePoly::zero(n);
    for mu in horizontal_strip_extensions(lambda, r, Some(n)) {
        strips = &strips + &shifted_alternant(&mu, n);
    }
    Ok(product == strips && raised == strips)
}

/// `s_λ(x_1..x_n) = Σ_p x_n^p Σ_{μ→λ} s_μ(x_1..x_{n-1})` over horizontal
/// `p`-strips `λ/μ`.
pub fn reduction_check(lambda: &Partition, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("reduction needs at least one variable".into()));
    }
    let lhs = eval_s_tableau(lambda, &Partition::empty(), n);
    let mut rhs = SparsePoly::zero(n);
    for p in 0..=lambda.part(0) {
        let mut power = vec![0; n];
        power[n - 1] = p as u32;
        let xp = SparsePoly::monomial(power, BigInt::one());
        for mu in horizontal_strip_reductions(lambda, p) {
            let smaller = eval_s_tableau(&mu, &Partition::empty(), n - 1).embed(n, 0);
            rhs = &rhs + &(&xp * &smaller);
        }
    }
    Ok(lhs == rhs)
}

/// Recovers `c^λ_{μν}` by expanding `s_μ s_ν` as a polynomial in `n`
/// variables and repeatedly peeling off the Schur polynomial of the
/// lexicographically leading monomial.
///
/// Requires `n ≥ |μ| + |ν|` so that no `s_λ` in the product vanishes.
pub fn product_oracle(mu: &Partition, nu: &Partition, n: usize) -> Result<SymFunc> {
    product_oracle_with(mu, nu, &SchurPolyCache::new(n))
}

/// Straight-shape Schur polynomials in a fixed number of variables,
/// optionally precomputed so the cache can be shared across threads.
pub struct SchurPolyCache {
    n: usize,
    polys: HashMap<Partition, SparsePoly>,
}

impl SchurPolyCache {
    pub fn new(n: usize) -> Self {
        SchurPolyCache {
            n,
            polys: HashMap::new(),
        }
    }

    /// Precomputes `s_λ` for every `|λ| ≤ max_degree` with `ℓ(λ) ≤ n`.
    pub fn with_degrees(n: usize, max_degree: usize) -> Self {
        let shapes: Vec<Partition> = (0..=max_degree).flat_map(|k| partitions_of(k, Some(n), None)).collect();
        let polys = shapes
            .into_par_iter()
            .map(|lambda| {
                let p = eval_s_tableau(&lambda, &Partition::empty(), n);
                (lambda, p)
            })
            .collect();
        SchurPolyCache { n, polys }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn get(&self, lambda: &Partition) -> Cow<'_, SparsePoly> {
        match self.polys.get(lambda) {
            Some(p) => Cow::Borrowed(p),
            None => Cow::Owned(eval_s_tableau(lambda, &Partition::empty(), self.n)),
        }
    }
}

/// [`product_oracle`] reading Schur polynomials from `cache`.
pub fn product_oracle_with(mu: &Partition, nu: &Partition, cache: &SchurPolyCache) -> Result<SymFunc> {
    let n = cache.num_vars();
    if n < mu.size() + nu.size() {
        return Err(Error::Precondition(format!(
            "{n} variables cannot separate Schur polynomials of degree {}",
            mu.size() + nu.size()
        )));
    }
    let mut rest = &*cache.get(mu) * &*cache.get(nu);
    let mut out = SymFunc::zero(Basis::Schur);
    while !rest.is_zero() {
        let lead = rest.terms.keys().max().expect("nonempty").clone();
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OracleResidual(format!(
                "leading exponent {lead:?} is not a partition"
            )));
        }
        let lambda = Partition::new(lead.iter().map(|&e| e as usize).collect()).expect("checked decreasing");
        let c = rest.coeff(&lead);
        rest.add_scaled(&cache.get(&lambda), &-&c);
        if !rest.coeff(&lead).is_zero() {
            return Err(Error::OracleResidual(format!(
                "peeling {lambda} left its leading monomial"
            )));
        }
        out.add_term(lambda, c);
    }
    Ok(out)
}

/// Compares the degree-`(k, k)` part of `Π_{i,j≤n} (1 - x_i y_j)^{-1}` with
/// `Σ_{|λ|=k} s_λ(x) s_λ(y)`, or with `dual`, `Π (1 + x_i y_j)` with
/// `Σ s_λ(x) s_{λ'}(y)`. Variables `0..n` are `x`, `n..2n` are `y`.
pub fn cauchy_truncated_check(k: usize, n: usize, dual: bool) -> bool {
    let total = 2 * n;
    let k32 = k as u32;
    let x_degree = |e: &[u32]| e[..n].iter().sum::<u32>();

    let mut product = SparsePoly::one(total);
    for i in 0..n {
        for j in 0..n {
            let mut factor = SparsePoly::zero(total);
            let top = if dual { 1 } else { k32 };
            for a in 0..=top {
                let mut e = vec![0; total];
                e[i] = a;
                e[n + j] = a;
                factor.add_term(e, BigInt::one());
            }
            product = product.mul_filtered(&factor, |e| x_degree(e) <= k32);
        }
    }
    let product = product.filter(|e| x_degree(e) == k32);

    let mut schur_side = SparsePoly::zero(total);
    for lambda in partitions_of(k, None, None) {
        let partner = if dual { lambda.conjugate() } else { lambda.clone() };
        let sx = eval_s_tableau(&lambda, &Partition::empty(), n).embed(total, 0);
        let sy = eval_s_tableau(&partner, &Partition::empty(), n).embed(total, n);
        schur_side = &schur_side + &(&sx * &sy);
    }
    product == schur_side
}

/// Two-alphabet expansion `s_λ(x, y) = Σ_{μ⊂λ} s_{λ/μ}(x) s_μ(y)` with `a`
/// variables in `x` and `b` in `y`.
pub fn two_alphabet_check(lambda: &Partition, a: usize, b: usize) -> bool {
    let total = a + b;
    let lhs = eval_s_tableau(lambda, &Partition::empty(), total);
    let mut rhs = SparsePoly::zero(total);
    for k in 0..=lambda.size() {
        for mu in partitions_of(k, Some(lambda.len()), Some(lambda.part(0))) {
            if !lambda.contains(&mu) {
                continue;
            }
            let sx = eval_s_tableau(lambda, &mu, a).embed(total, 0);
            let sy = eval_s_tableau(&mu, &Partition::empty(), b).embed(total, a);
            rhs = &rhs + &(&sx * &sy);
        }
    }
    lhs == rhs
}

/// `s_λ(x, y) = Σ_α h_α(x) s_{λ-α}(y)` with each `s_{λ-α}` straightened;
/// `α` runs over compositions with `ℓ(λ)` entries.
pub fn complete_expansion_check(lambda: &Partition, a: usize, b: usize) -> bool {
    let total = a + b;
    let lhs = eval_s_tableau(lambda, &Partition::empty(), total);
    let len = lambda.len();
    let base = lambda.padded(len);
    let mut rhs = SparsePoly::zero(total);
    for size in 0..=lambda.size() {
        for alpha in compositions_of(size, len) {
            let v: Vec<i64> = base.iter().zip(alpha.entries()).map(|(x, &y)| x - y as i64).collect();
            let straight = straighten(&IntVector::new(v));
            let Some(mu) = straight.partition() else {
                continue;
            };
            let hx = eval_h_product(alpha.to_int_vector().entries(), a).embed(total, 0);
            let sy = eval_s_tableau(mu, &Partition::empty(), b).embed(total, a);
            rhs = &rhs + &(&hx * &sy).scale(&BigInt::from(straight.sign()));
        }
    }
    lhs == rhs
}

/// `Σ_{i=0}^{r} (-1)^i h_i e_{r-i} = 0` in `n` variables for each
/// `1 ≤ r ≤ degree`, i.e. `H(t) E(-t) = 1` through `t^degree`.
pub fn generating_function_check(degree: usize, n: usize) -> bool {
    (1..=degree as i64).all(|r| {
        let mut acc = SparsePoly::zero(n);
        for i in 0..=r {
            let term = &eval_h(i, n) * &eval_e(r - i, n);
            acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc.is_zero()
    })
}

/// Expands an `h`-basis symmetric function via products of `eval_h` and
/// compares with the tableau Schur polynomial of `λ`.
pub fn h_expansion_matches_schur(h_expansion: &SymFunc, lambda: &Partition, n: usize) -> bool {
    debug_assert_eq!(h_expansion.basis(), Basis::Complete);
    eval_symfunc(h_expansion, n) == eval_s_tableau(lambda, &Partition::empty(), n)
}

/// The coefficients of `f` on the monomials `x^λ` for partitions `λ`,
/// i.e. its `m`-expansion when `f` is symmetric and `n` is large enough.
pub fn monomial_coefficients(f: &SparsePoly) -> BTreeMap<Partition, BigInt> {
    f.terms
        .iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| {
            (
                Partition::new(e.iter().map(|&x| x as usize).collect()).expect("decreasing"),
                c.clone(),
            )
        })
        .collect()
}
