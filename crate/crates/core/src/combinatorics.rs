//! Partitions, integer vectors, skew shapes and the enumeration primitives
//! everything else is built on.
//!
//! Partitions are stored in canonical form (positive parts only, weakly
//! decreasing). Their `Ord` implementation is the crate-wide term order:
//! by size first, then reverse-lexicographically on the parts, so `[4]`
//! comes before `[3,1]` which comes before `[2,2]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(p)`; empty when `p = 0`.
    pub fn row(p: usize) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![p] }
        }
    }

    /// The single-column partition `(1^p)`.
    pub fn column(p: usize) -> Self {
        Partition { parts: vec![1; p] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Young diagram containment `other ⊂ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// The parts padded with zeros to length `len`, as signed integers.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len.max(self.len())).map(|i| self.part(i) as i64).collect()
    }

    pub fn to_int_vector(&self) -> IntVector {
        IntVector::new(self.parts.iter().map(|&p| p as i64).collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, self.parts.iter())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_bracketed(s)?;
        Partition::new(entries).map_err(|_| Error::Parse(format!("`{s}` is not weakly decreasing")))
    }
}

/// Convenience constructor for literals in tests and examples.
///
/// Panics if the parts are not weakly decreasing.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("partition literal must be weakly decreasing")
    };
}

/// A finite sequence of nonnegative integers; order matters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    entries: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_int_vector(&self) -> IntVector {
        IntVector::new(self.entries.iter().map(|&e| e as i64).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, self.entries.iter())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bracketed(s).map(Composition::new)
    }
}

/// An integer vector with an explicit working length. Entries may be
/// negative; the length fixes the staircase used when straightening.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntVector {
    entries: Vec<i64>,
}

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Returns the vector as a composition when every entry is nonnegative.
    pub fn as_composition(&self) -> Option<Composition> {
        self.entries
            .iter()
            .map(|&e| usize::try_from(e).ok())
            .collect::<Option<Vec<_>>>()
            .map(Composition::new)
    }

    /// Returns the vector as a partition when it is weakly decreasing and
    /// nonnegative.
    pub fn as_partition(&self) -> Option<Partition> {
        let comp = self.as_composition()?;
        Partition::new(comp.entries).ok()
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(entries: Vec<i64>) -> Self {
        IntVector::new(entries)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, self.entries.iter())
    }
}

/// A skew diagram `outer/inner` with `inner ⊂ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Precondition(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `outer/()`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes in the skew diagram.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Per-row `(first column, end column)` of the boxes, 0-based and half-open.
    pub fn row_spans(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .map(|i| (self.inner.part(i), self.outer.part(i)))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

fn write_bracketed<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = T>) -> fmt::Result {
    let body: Vec<String> = items.map(|item| item.to_string()).collect();
    f.pad(&format!("[{}]", body.join(",")))
}

/// Parses `[a,b,...]` or `[]`, ignoring whitespace.
pub(crate) fn parse_bracketed(s: &str) -> Result<Vec<usize>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{s}`")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad entry `{tok}` in `{s}`")));
            }
            tok.parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad entry `{tok}`: {e}")))
        })
        .collect()
}

/// Transposes the Young diagram: `λ'_i = #{j : λ_j ≥ i}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.part(0);
    let parts = (1..=width)
        .map(|i| lambda.parts.iter().take_while(|&&p| p >= i).count())
        .collect();
    Partition { parts }
}

/// Dominance `α ⪰ β`: every prefix sum of `α` is at least that of `β`.
/// Only defined when `|α| = |β|`.
pub fn dominates(alpha: &IntVector, beta: &IntVector) -> Result<bool> {
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            left: alpha.size(),
            right: beta.size(),
        });
    }
    let len = alpha.len().max(beta.len());
    let (mut sa, mut sb) = (0i64, 0i64);
    for i in 0..len {
        sa += alpha.entries.get(i).copied().unwrap_or(0);
        sb += beta.entries.get(i).copied().unwrap_or(0);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dominance between partitions of equal size.
pub fn partition_dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    dominates(&lambda.to_int_vector(), &mu.to_int_vector())
}

/// Whether `outer/inner` is a horizontal strip: `inner ⊂ outer` and the
/// rows interleave, `outer_{i+1} ≤ inner_i`.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
}

/// Whether `outer/inner` is a vertical strip: at most one box per row.
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1)
}

/// All vectors `a` with `0 ≤ a_i ≤ caps[i]` and `Σ a_i = total`, in
/// lexicographically decreasing order.
pub fn bounded_compositions(caps: &[usize], total: usize) -> Vec<Vec<usize>> {
    let n = caps.len();
    if n == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    // suffix[i] = capacity available in positions i..n
    let mut suffix = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].saturating_add(caps[i]);
    }
    if suffix[0] < total {
        return Vec::new();
    }

    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    // Greedy fill from position `from` onward with `remaining` units.
    let fill = |cur: &mut [usize], from: usize, mut remaining: usize| {
        for i in from..n {
            let take = remaining.min(caps[i]);
            cur[i] = take;
            remaining -= take;
        }
        debug_assert_eq!(remaining, 0);
    };
    fill(&mut cur, 0, total);
    loop {
        out.push(cur.clone());
        // Find the rightmost position i < n-1 that can be decremented while
        // the tail i+1.. can absorb the extra unit.
        let mut tail_sum = cur[n - 1];
        let mut advanced = false;
        for i in (0..n - 1).rev() {
            if cur[i] > 0 && suffix[i + 1] > tail_sum {
                cur[i] -= 1;
                fill(&mut cur, i + 1, tail_sum + 1);
                advanced = true;
                break;
            }
            tail_sum += cur[i];
        }
        if !advanced {
            return out;
        }
    }
}

/// All compositions of `total` with exactly `len` entries (zeros allowed).
pub fn compositions_of(total: usize, len: usize) -> Vec<Composition> {
    bounded_compositions(&vec![total; len], total)
        .into_iter()
        .map(Composition::new)
        .collect()
}

/// All `μ ⊃ λ` with `μ/λ` a horizontal strip of `p` boxes and, if given,
/// `ℓ(μ) ≤ max_len`. Sorted in the canonical term order.
pub fn horizontal_strip_extensions(lambda: &Partition, p: usize, max_len: Option<usize>) -> Vec<Partition> {
    if max_len.is_some_and(|m| m < lambda.len()) {
        return Vec::new();
    }
    let rows = max_len.map_or(lambda.len() + 1, |m| m.min(lambda.len() + 1));
    let caps: Vec<usize> = (0..rows)
        .map(|i| if i == 0 { p } else { lambda.part(i - 1) - lambda.part(i) })
        .collect();
    let mut out: Vec<Partition> = bounded_compositions(&caps, p)
        .into_iter()
        .map(|add| {
            let parts = add.iter().enumerate().map(|(i, a)| lambda.part(i) + a).collect();
            Partition::new(parts).expect("interleaving keeps parts decreasing")
        })
        .collect();
    out.sort();
    out
}

/// All `μ ⊂ λ` with `λ/μ` a horizontal strip of `p` boxes, in canonical order.
pub fn horizontal_strip_reductions(lambda: &Partition, p: usize) -> Vec<Partition> {
    let caps: Vec<usize> = (0..lambda.len()).map(|i| lambda.part(i) - lambda.part(i + 1)).collect();
    let mut out: Vec<Partition> = bounded_compositions(&caps, p)
        .into_iter()
        .map(|rem| {
            let parts = rem.iter().enumerate().map(|(i, r)| lambda.part(i) - r).collect();
            Partition::new(parts).expect("interleaving keeps parts decreasing")
        })
        .collect();
    out.sort();
    out
}

/// All `μ ⊃ λ` with `μ/λ` a vertical strip of `p` boxes, in canonical order.
pub fn vertical_strip_extensions(lambda: &Partition, p: usize, max_len: Option<usize>) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strip_extensions(&lambda.conjugate(), p, None)
        .iter()
        .map(conjugate)
        .filter(|mu| max_len.is_none_or(|m| mu.len() <= m))
        .collect();
    out.sort();
    out
}

/// All partitions of `k` with at most `max_len` parts, each at most
/// `max_part`, in canonical (reverse-lexicographic) order.
pub fn partitions_of(k: usize, max_len: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    if k == 0 {
        return vec![Partition::empty()];
    }
    let top = max_part.unwrap_or(k).min(k);
    if top == 0 {
        return Vec::new();
    }
    let fits = |parts: &[usize]| max_len.is_none_or(|m| parts.len() <= m);

    // Greedy start: as many copies of `top` as fit, then the remainder.
    let mut parts = vec![top; k / top];
    if !k.is_multiple_of(top) {
        parts.push(k % top);
    }
    let mut out = Vec::new();
    loop {
        if fits(&parts) {
            out.push(Partition { parts: parts.clone() });
        }
        // Strip trailing ones, then decrement the last part larger than one
        // and refill greedily with parts no larger than the new value.
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        let Some(last) = parts.last_mut() else {
            return out;
        };
        *last -= 1;
        let cap = *last;
        freed += 1;
        while freed > 0 {
            let take = freed.min(cap);
            parts.push(take);
            freed -= take;
        }
    }
}

/// A permutation `w ∈ S_n` acting on vectors by `(w·v)_i = v_{w[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// `(-1)^w`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.images.iter().map(|&k| v[k]).collect()
    }

    /// `ε_j · w` where `ε_j` exchanges positions `j` and `j+1` (0-based).
    pub fn left_transpose(&self, j: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(j, j + 1);
        Permutation { images }
    }

    /// Every permutation of `n` letters in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Permutation { images: cur.clone() });
        }
        out
    }
}

/// Advances `v` to the next lexicographic arrangement; repeated values
/// yield each distinct arrangement once.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, self.images.iter().map(|i| i + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn iv(entries: &[i64]) -> IntVector {
        IntVector::new(entries.to_vec())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[])), p(&[]));
        assert_eq!(conjugate(&p(&[3, 1])), p(&[2, 1, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&iv(&[2]), &iv(&[1, 1])).unwrap());
        assert!(!dominates(&iv(&[1, 1]), &iv(&[2])).unwrap());
        assert!(!dominates(&iv(&[2, 2]), &iv(&[3, 1])).unwrap());
        assert_eq!(
            dominates(&iv(&[2]), &iv(&[1])),
            Err(Error::SizeMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn strip_predicates() {
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[4, 1])));
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[2, 2, 1])));
        assert!(!is_horizontal_strip(&p(&[2, 1]), &p(&[2, 1, 1, 1])));
        assert!(is_vertical_strip(&p(&[1]), &p(&[1, 1])));
        assert!(!is_vertical_strip(&p(&[1]), &p(&[3])));
        assert!(is_vertical_strip(&p(&[2, 1]), &p(&[2, 2, 1])));
        assert!(!is_horizontal_strip(&p(&[3]), &p(&[2, 2])));
    }

    #[test]
    fn strip_extensions() {
        assert_eq!(
            horizontal_strip_extensions(&p(&[1]), 1, None),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            horizontal_strip_extensions(&p(&[2, 1]), 2, None),
            vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])]
        );
        assert_eq!(horizontal_strip_extensions(&p(&[2]), 1, Some(1)), vec![p(&[3])]);
        assert_eq!(horizontal_strip_extensions(&p(&[3, 1]), 0, None), vec![p(&[3, 1])]);
        assert_eq!(
            vertical_strip_extensions(&p(&[1]), 2, None),
            vec![p(&[2, 1]), p(&[1, 1, 1])]
        );
    }

    #[test]
    fn strip_reductions() {
        assert_eq!(horizontal_strip_reductions(&p(&[2]), 1), vec![p(&[1])]);
        // canonical order puts [2] before [1,1]
        assert_eq!(horizontal_strip_reductions(&p(&[2, 1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(horizontal_strip_reductions(&p(&[2, 2]), 1), vec![p(&[2, 1])]);
        assert!(horizontal_strip_reductions(&p(&[1, 1]), 2).is_empty());
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(0, None, None), vec![p(&[])]);
        assert_eq!(
            partitions_of(4, None, None),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(3, Some(2), None), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(partitions_of(5, None, Some(2)).len(), 3);
        assert!(partitions_of(3, None, Some(0)).is_empty());
    }

    #[test]
    fn bounded_compositions_respect_caps() {
        let all = bounded_compositions(&[2, 0, 1], 2);
        assert_eq!(all, vec![vec![2, 0, 0], vec![1, 0, 1]]);
        assert_eq!(compositions_of(2, 2).len(), 3);
        assert_eq!(compositions_of(0, 0), vec![Composition::new(vec![])]);
        assert!(bounded_compositions(&[1, 1], 3).is_empty());
    }

    #[test]
    fn term_order() {
        let mut v = vec![p(&[1, 1]), p(&[3]), p(&[2]), p(&[]), p(&[2, 1])];
        v.sort();
        assert_eq!(v, vec![p(&[]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])]);
    }

    #[test]
    fn literals() {
        assert_eq!("[3, 1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("[2,0]".parse::<Partition>().unwrap(), p(&[2]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[1,,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[-1]".parse::<Partition>().is_err());
        assert_eq!("[1,2]".parse::<Composition>().unwrap().entries(), &[1, 2]);
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert_eq!(p(&[]).to_string(), "[]");
    }

    #[test]
    fn permutations() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().map(Permutation::sign).sum::<i64>(), 0);
        assert_eq!(Permutation::all(0).len(), 1);
        let w = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(w.sign(), -1);
        assert_eq!(w.apply(&[5, 6, 7]), vec![6, 5, 7]);
        assert_eq!(w.left_transpose(0), Permutation::identity(3));
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
