//! Semistandard tableaux on skew shapes, Kostka numbers and the
//! Littlewood-Richardson rule.
//!
//! Tableaux are enumerated as chains of horizontal strips
//! `μ = λ⁰ → λ¹ → ⋯ → λʳ = λ`, where the strip `λⁱ/λⁱ⁻¹` holds the
//! entries equal to `i`. Littlewood-Richardson coefficients are counted
//! directly, and also through the alternating sum over pairs `(w, T)` with
//! `c(T) + ρ_ℓ = w(ν + ρ_ℓ)`, whose bad pairs cancel under
//! [`bz_involution`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    bounded_compositions, horizontal_strip_extensions, Composition, IntVector, Partition, Permutation, SkewShape,
};
use crate::error::{Error, Result};
use crate::schur_core::Staircase;

/// A semistandard filling of a skew shape.
///
/// `rows[i]` holds the entries of row `i` from column `inner_i` to
/// `outer_i - 1`; rows lying entirely inside the inner shape are empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates the row lengths and the semistandard conditions.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { shape, rows };
        let spans = t.shape.row_spans();
        let lengths_ok =
            t.rows.len() == spans.len() && t.rows.iter().zip(&spans).all(|(row, (a, b))| row.len() == b - a);
        if !lengths_ok {
            return Err(Error::Precondition(format!("row lengths do not fit {}", t.shape)));
        }
        if !t.is_semistandard() {
            return Err(Error::Precondition(format!("filling {:?} is not semistandard", t.rows)));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry in row `i`, column `c` (both 0-based), if that box is in the
    /// skew diagram.
    pub fn entry(&self, i: usize, c: usize) -> Option<usize> {
        let start = self.shape.inner().part(i);
        self.rows.get(i)?.get(c.checked_sub(start)?).copied()
    }

    /// `(row, column, entry)` for every box, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let start = self.shape.inner().part(i);
            row.iter().enumerate().map(move |(k, &e)| (i, start + k, e))
        })
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_weak = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] <= w[1]) && row.iter().all(|&e| e >= 1));
        rows_weak
            && self.cells().all(|(i, c, e)| match self.entry(i + 1, c) {
                Some(below) => below > e,
                None => true,
            })
    }

    pub fn max_entry(&self) -> usize {
        self.cells().map(|(_, _, e)| e).max().unwrap_or(0)
    }

    /// The content vector padded to at least `len` entries.
    pub fn content(&self, len: usize) -> Vec<usize> {
        self.content_from_column(0, len)
    }

    /// Content of the sub-tableau in columns `col` and higher (0-based).
    pub fn content_from_column(&self, col: usize, len: usize) -> Vec<usize> {
        let mut c = vec![0usize; len.max(self.max_entry())];
        for (_, column, e) in self.cells() {
            if column >= col {
                c[e - 1] += 1;
            }
        }
        c
    }

    /// Number of columns spanned by the outer shape.
    pub fn width(&self) -> usize {
        self.shape.outer().part(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson {
            outer: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            rows: self.rows.clone(),
        })
        .expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: TableauJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let shape = SkewShape::new(Partition::new(raw.outer)?, Partition::new(raw.inner)?)?;
        Tableau::new(shape, raw.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for _ in 0..self.shape.inner().part(i) {
                f.write_str(". ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Vec<usize>,
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

/// Caps on the number of boxes each row may gain in one horizontal strip
/// step from `cur` without leaving `outer`.
fn strip_caps(cur: &[usize], outer: &Partition) -> Vec<usize> {
    (0..outer.len())
        .map(|i| {
            let room = outer.part(i) - cur[i];
            if i == 0 {
                room
            } else {
                room.min(cur[i - 1] - cur[i])
            }
        })
        .collect()
}

/// All semistandard tableaux on `shape` with entries at most `max_entry`,
/// optionally with a prescribed content.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize, content: Option<&Composition>) -> Vec<Tableau> {
    let outer = shape.outer();
    let total = shape.size();
    let levels = match content {
        Some(c) => {
            if c.size() != total || c.entries().iter().skip(max_entry).any(|&x| x > 0) {
                return Vec::new();
            }
            c.len().min(max_entry)
        }
        None => max_entry,
    };

    let start: Vec<usize> = (0..outer.len()).map(|i| shape.inner().part(i)).collect();
    let empty_rows: Vec<Vec<usize>> = vec![Vec::new(); outer.len()];

    struct Frame {
        level: usize,
        cur: Vec<usize>,
        rows: Vec<Vec<usize>>,
    }

    let mut out = Vec::new();
    let mut stack = vec![Frame {
        level: 0,
        cur: start,
        rows: empty_rows,
    }];
    while let Some(Frame { level, cur, rows }) = stack.pop() {
        let placed: usize = cur.iter().sum::<usize>() - shape.inner().size();
        if level == levels {
            if placed == total {
                out.push(Tableau {
                    shape: shape.clone(),
                    rows,
                });
            }
            continue;
        }
        let remaining = total - placed;
        let sizes: Vec<usize> = match content {
            Some(c) => vec![c.entries()[level]],
            None if level + 1 == levels => vec![remaining],
            None => (0..=remaining).rev().collect(),
        };
        let caps = strip_caps(&cur, outer);
        let mut children = Vec::new();
        for size in sizes {
            for add in bounded_compositions(&caps, size) {
                let mut next = cur.clone();
                let mut next_rows = rows.clone();
                for (i, a) in add.iter().enumerate() {
                    next[i] += a;
                    next_rows[i].extend(std::iter::repeat_n(level + 1, *a));
                }
                children.push(Frame {
                    level: level + 1,
                    cur: next,
                    rows: next_rows,
                });
            }
        }
        stack.extend(children.into_iter().rev());
    }
    out
}

/// The Kostka number `K_{λ/μ, α}`: the number of tableaux of shape `λ/μ`
/// and content `α`. Zero when `α` is not a composition of `|λ/μ|`.
///
/// Counted by dynamic programming over the horizontal-strip chain rather
/// than by listing tableaux.
pub fn kostka(shape: &SkewShape, alpha: &IntVector) -> BigUint {
    let Some(content) = alpha.as_composition() else {
        return BigUint::zero();
    };
    if content.size() != shape.size() {
        return BigUint::zero();
    }
    let outer = shape.outer();
    let start: Vec<usize> = (0..outer.len()).map(|i| shape.inner().part(i)).collect();
    let mut layer: HashMap<Vec<usize>, BigUint> = HashMap::from([(start, BigUint::one())]);
    for &size in content.entries() {
        let mut next: HashMap<Vec<usize>, BigUint> = HashMap::new();
        for (cur, count) in &layer {
            for add in bounded_compositions(&strip_caps(cur, outer), size) {
                let grown: Vec<usize> = cur.iter().zip(&add).map(|(c, a)| c + a).collect();
                *next.entry(grown).or_default() += count;
            }
        }
        layer = next;
    }
    let target: Vec<usize> = outer.parts().to_vec();
    layer.remove(&target).unwrap_or_default()
}

/// `K_{λ,α}` for every straight shape `λ` at once, keyed by `λ`; shapes
/// with no tableau of content `α` are absent.
pub fn kostka_by_shape(content: &Composition) -> HashMap<Partition, BigUint> {
    let mut layer: HashMap<Partition, BigUint> = HashMap::from([(Partition::empty(), BigUint::one())]);
    for &size in content.entries() {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (cur, count) in &layer {
            for grown in horizontal_strip_extensions(cur, size, None) {
                *next.entry(grown).or_default() += count;
            }
        }
        layer = next;
    }
    layer
}

/// Whether the content of every column suffix `T_{≥r}` is a partition.
pub fn is_lr_tableau(t: &Tableau) -> bool {
    lr_violation(t, 0).is_none()
}

/// The maximal 0-based column `r` whose suffix content is not a partition,
/// with the minimal 0-based index `j` where `c_j < c_{j+1}`.
fn lr_violation(t: &Tableau, len: usize) -> Option<(usize, usize)> {
    let width = t.width();
    let mut counts = vec![0usize; len.max(t.max_entry())];
    let mut by_column: Vec<Vec<usize>> = vec![Vec::new(); width];
    for (_, c, e) in t.cells() {
        by_column[c].push(e);
    }
    for r in (0..width).rev() {
        for &e in &by_column[r] {
            counts[e - 1] += 1;
        }
        if let Some(j) = counts.windows(2).position(|w| w[0] < w[1]) {
            return Some((r, j));
        }
    }
    None
}

/// The LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<Tableau> {
    if !lambda.contains(mu) || mu.size() + nu.size() != lambda.size() {
        return Vec::new();
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    let content = Composition::new(nu.parts().to_vec());
    enumerate_ssyt(&shape, nu.len(), Some(&content))
        .into_iter()
        .filter(is_lr_tableau)
        .collect()
}

/// The Littlewood-Richardson coefficient `c^λ_{μν}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    lr_tableaux(lambda, mu, nu).len() as u64
}

/// A term `(w, T)` of the alternating sum for `c^λ_{μν}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPair {
    pub w: Permutation,
    pub tableau: Tableau,
}

impl SignedPair {
    pub fn sign(&self) -> i64 {
        self.w.sign()
    }

    /// Bad pairs have some column suffix whose content is not a partition.
    pub fn is_bad(&self) -> bool {
        lr_violation(&self.tableau, self.w.len()).is_some()
    }
}

/// Every pair `(w, T)` with `w ∈ S_ℓ`, `ℓ = ℓ(ν)`, and `T` a tableau on
/// `λ/μ` with `c(T) + ρ_ℓ = w(ν + ρ_ℓ)`.
pub fn signed_pairs(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<SignedPair> {
    if !lambda.contains(mu) || mu.size() + nu.size() != lambda.size() {
        return Vec::new();
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    let len = nu.len();
    let stairs = Staircase::new(len);
    let shifted = stairs.shift(&nu.padded(len));
    let mut out = Vec::new();
    for w in Permutation::all(len) {
        let content = stairs.unshift(&w.apply(&shifted));
        if content.iter().any(|&x| x < 0) {
            continue;
        }
        let content = Composition::new(content.into_iter().map(|x| x as usize).collect());
        for tableau in enumerate_ssyt(&shape, len, Some(&content)) {
            out.push(SignedPair { w: w.clone(), tableau });
        }
    }
    out
}

/// `Σ_{(w,T)} (-1)^w` over [`signed_pairs`], without cancelling anything.
pub fn signed_lr_sum(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    signed_pairs(lambda, mu, nu).iter().map(SignedPair::sign).sum()
}

/// The sign-reversing involution on bad pairs.
///
/// Takes the maximal column `r` whose suffix content fails to be a
/// partition and the minimal `j` with `c_j(T_{≥r}) < c_{j+1}(T_{≥r})`. Every
/// `j` or `j+1` left of column `r` whose column lacks the other value is
/// flipped, rows are re-sorted, and `w` becomes `ε_j w`.
pub fn bz_involution(pair: &SignedPair, nu: &Partition) -> Result<SignedPair> {
    let len = nu.len().max(pair.w.len());
    let (r, j) = lr_violation(&pair.tableau, len).ok_or(Error::NotBadPair)?;
    let t = &pair.tableau;
    let (low, high) = (j + 1, j + 2);

    let mut has = vec![(false, false); t.width()];
    for (_, c, e) in t.cells() {
        if e == low {
            has[c].0 = true;
        } else if e == high {
            has[c].1 = true;
        }
    }
    let mut rows = t.rows.clone();
    for (i, row) in rows.iter_mut().enumerate() {
        let start = t.shape.inner().part(i);
        for (k, e) in row.iter_mut().enumerate() {
            let c = start + k;
            if c >= r {
                break;
            }
            if *e == low && !has[c].1 {
                *e = high;
            } else if *e == high && !has[c].0 {
                *e = low;
            }
        }
        row.sort_unstable();
    }
    let image = Tableau {
        shape: t.shape.clone(),
        rows,
    };
    debug_assert!(image.is_semistandard(), "involution produced a non-tableau:\n{image}");
    if j + 1 >= pair.w.len() {
        return Err(Error::Precondition(format!(
            "violated index {} lies outside S_{}",
            j + 1,
            pair.w.len()
        )));
    }
    Ok(SignedPair {
        w: pair.w.left_transpose(j),
        tableau: image,
    })
}
