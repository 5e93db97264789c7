//! Sparse linear combinations of basis elements indexed by partitions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{parse_bracketed, Partition};
use crate::error::{Error, Result};

/// The four classical bases of the ring of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Schur functions `s_λ`.
    #[serde(rename = "s")]
    Schur,
    /// Complete homogeneous `h_λ = h_{λ_1} h_{λ_2} ⋯`.
    #[serde(rename = "h")]
    Complete,
    /// Elementary `e_λ = e_{λ_1} e_{λ_2} ⋯`.
    #[serde(rename = "e")]
    Elementary,
    /// Monomial symmetric functions `m_λ`.
    #[serde(rename = "m")]
    Monomial,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::Schur, Basis::Complete, Basis::Elementary, Basis::Monomial];

    pub fn tag(self) -> char {
        match self {
            Basis::Schur => 's',
            Basis::Complete => 'h',
            Basis::Elementary => 'e',
            Basis::Monomial => 'm',
        }
    }

    pub fn from_tag(tag: char) -> Option<Basis> {
        match tag {
            's' => Some(Basis::Schur),
            'h' => Some(Basis::Complete),
            'e' => Some(Basis::Elementary),
            'm' => Some(Basis::Monomial),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Basis::from_tag(c),
            _ => None,
        }
        .ok_or_else(|| Error::Parse(format!("unknown basis `{s}` (expected s, h, e or m)")))
    }
}

/// An element of the ring of symmetric functions written in one basis.
///
/// Zero coefficients are never stored. Terms of different degrees may be
/// mixed freely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit, indexed by the empty partition in every basis.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, BigInt::one())
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: impl Into<BigInt>) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, coeff.into());
        f
    }

    pub fn from_terms<I, C>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c.into());
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    /// Adds `coeff · other` into `self`; both must share a basis.
    pub fn add_scaled(&mut self, other: &SymFunc, coeff: &BigInt) -> Result<()> {
        self.same_basis(other)?;
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), c * coeff);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SymFunc) -> Result<SymFunc> {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one())?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymFunc) -> Result<SymFunc> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one())?;
        Ok(out)
    }

    pub fn scale(&self, coeff: &BigInt) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), c * coeff);
        }
        out
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-BigInt::one())
    }

    /// The homogeneous component of degree `k`.
    pub fn component(&self, k: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == k)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest degree among the stored terms; `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Same coefficients, different basis label.
    pub fn retag(&self, basis: Basis) -> SymFunc {
        SymFunc {
            basis,
            terms: self.terms.clone(),
        }
    }

    /// Applies `f` to every key, summing collisions.
    pub fn map_keys(&self, basis: Basis, f: impl Fn(&Partition) -> Partition) -> SymFunc {
        let mut out = SymFunc::zero(basis);
        for (lambda, c) in &self.terms {
            out.add_term(f(lambda), c.clone());
        }
        out
    }

    fn same_basis(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::MixedBasis {
                left: self.basis,
                right: other.basis,
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SymFuncJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SymFunc> {
        let raw: SymFuncJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}{}", self.basis, lambda)?;
        }
        Ok(())
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    /// Parses the text form, e.g. `2*s[3,2,1] - s[4,2]`. The literal `0`
    /// parses as the zero Schur function.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(SymFunc::zero(Basis::Schur));
        }
        if compact.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut basis = None;
        let mut out: Option<SymFunc> = None;
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'+' if !first => {
                    rest = &rest[1..];
                    false
                }
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                _ if first => false,
                _ => return Err(Error::Parse(format!("expected `+` or `-` before `{rest}`"))),
            };
            first = false;
            let end = rest
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unterminated term `{rest}`")))?;
            let (term, tail) = rest.split_at(end + 1);
            rest = tail;
            let (coeff, body) = match term.split_once('*') {
                Some((c, body)) => {
                    let c: BigInt = c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))?;
                    (c, body)
                }
                None => (BigInt::one(), term),
            };
            let tag = body
                .chars()
                .next()
                .ok_or_else(|| Error::Parse("missing basis tag".into()))?;
            let b = Basis::from_tag(tag).ok_or_else(|| Error::Parse(format!("unknown basis tag `{tag}`")))?;
            if let Some(prev) = basis {
                if prev != b {
                    return Err(Error::MixedBasis { left: prev, right: b });
                }
            }
            basis = Some(b);
            let parts = parse_bracketed(&body[tag.len_utf8()..])?;
            let lambda = Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))?;
            let coeff = if negative { -coeff } else { coeff };
            out.get_or_insert_with(|| SymFunc::zero(b)).add_term(lambda, coeff);
        }
        Ok(out.unwrap_or_else(|| SymFunc::zero(Basis::Schur)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> Self {
        SymFuncJson {
            basis: f.basis,
            terms: f
                .terms
                .iter()
                .map(|(l, c)| TermJson {
                    partition: l.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SymFuncJson> for SymFunc {
    type Error = Error;

    fn try_from(raw: SymFuncJson) -> Result<SymFunc> {
        let mut out = SymFunc::zero(raw.basis);
        for t in raw.terms {
            let lambda = Partition::new(t.partition)?;
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            out.add_term(lambda, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn text_form() {
        let f = SymFunc::from_terms(Basis::Schur, [(partition![3, 2, 1], 2), (partition![4, 2], 1)]);
        assert_eq!(f.to_string(), "s[4,2] + 2*s[3,2,1]");
        assert_eq!(f, "2*s[3,2,1] + s[4,2]".parse().unwrap());
        let g = SymFunc::from_terms(Basis::Monomial, [(partition![2], -1), (partition![1, 1], -3)]);
        assert_eq!(g.to_string(), "-m[2] - 3*m[1,1]");
        assert_eq!(g, g.to_string().parse().unwrap());
        assert_eq!(SymFunc::zero(Basis::Schur).to_string(), "0");
        assert_eq!(SymFunc::one(Basis::Schur).to_string(), "s[]");
    }

    #[test]
    fn parse_errors() {
        assert!("s[1]+h[1]".parse::<SymFunc>().is_err());
        assert!("x[1]".parse::<SymFunc>().is_err());
        assert!("s[1,2]".parse::<SymFunc>().is_err());
        assert!("s[1]s[2]".parse::<SymFunc>().is_err());
        assert!("".parse::<SymFunc>().is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut f = SymFunc::basis_element(Basis::Schur, partition![2]);
        f.add_term(partition![2], BigInt::from(-1));
        assert!(f.is_zero());
        let h = SymFunc::one(Basis::Complete);
        assert!(matches!(
            SymFunc::one(Basis::Schur).checked_add(&h),
            Err(Error::MixedBasis { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let f = SymFunc::from_terms(Basis::Schur, [(partition![3, 2, 1], 2)]);
        let v = f.to_json();
        assert_eq!(
            v,
            serde_json::json!({"basis":"s","terms":[{"partition":[3,2,1],"coeff":"2"}]})
        );
        assert_eq!(SymFunc::from_json(&v).unwrap(), f);
    }
}
