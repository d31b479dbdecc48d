//! Irreducible labels `V(i, j)` and finitely supported integer combinations of
//! them (elements of the representation ring, used additively).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dims::label_dim;
use super::weight::WeightVector;
use crate::error::ReprError;

/// The sp(2g) irreducible with highest weight `i·ω₁ + ω_j`, or the zero
/// representation.
///
/// `(i, 1)` and `(i + 1, 0)` name the same module, so labels are stored with
/// `j ≥ 1` whenever the weight is nonzero; `j = 0` occurs only for the trivial
/// representation `V(0,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepLabel {
    Zero,
    Irrep { i: u32, j: u32 },
}

impl RepLabel {
    pub const ZERO: RepLabel = RepLabel::Zero;
    pub const TRIVIAL: RepLabel = RepLabel::Irrep { i: 0, j: 0 };

    /// Label for `i·ω₁ + ω_j` in genus `genus`. Non-dominant requests
    /// (`i < 0`, `j < 0`, `j > genus`) give [`RepLabel::ZERO`].
    pub fn new(genus: u32, i: i64, j: i64) -> RepLabel {
        if i < 0 || j < 0 || j > i64::from(genus) {
            return RepLabel::Zero;
        }
        let (i, j) = if j == 0 && i > 0 { (i - 1, 1) } else { (i, j) };
        if j > i64::from(genus) {
            return RepLabel::Zero;
        }
        match (u32::try_from(i), u32::try_from(j)) {
            (Ok(i), Ok(j)) => RepLabel::Irrep { i, j },
            _ => RepLabel::Zero,
        }
    }

    /// The standard representation `V(0,1)`.
    pub fn standard() -> RepLabel {
        RepLabel::Irrep { i: 0, j: 1 }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RepLabel::Zero)
    }

    pub fn is_trivial(&self) -> bool {
        *self == RepLabel::TRIVIAL
    }

    pub fn indices(&self) -> Option<(u32, u32)> {
        match *self {
            RepLabel::Zero => None,
            RepLabel::Irrep { i, j } => Some((i, j)),
        }
    }

    /// Highest weight in `e`-coordinates: `(i+1, 1, …, 1, 0, …)` with `j`
    /// nonzero entries, or `(i, 0, …)` when `j = 0`.
    pub fn highest_weight(&self, genus: u32) -> Result<WeightVector, ReprError> {
        let (i, j) = self.indices().ok_or(ReprError::ZeroLabel)?;
        if j > genus || (genus == 0 && i > 0) {
            return Err(ReprError::OutOfRange(format!(
                "label V({i},{j}) does not exist in genus {genus}"
            )));
        }
        let mut w = vec![0i64; genus as usize];
        if j == 0 {
            if genus > 0 {
                w[0] = i64::from(i);
            }
        } else {
            w[0] = i64::from(i) + 1;
            for x in w.iter_mut().take(j as usize).skip(1) {
                *x = 1;
            }
        }
        Ok(WeightVector::new(w))
    }

    /// Inverse of [`RepLabel::highest_weight`]; `None` unless the weight is a
    /// dominant hook `i·ω₁ + ω_j`.
    pub fn from_highest_weight(weight: &WeightVector) -> Option<RepLabel> {
        if !weight.is_dominant() {
            return None;
        }
        let e = weight.entries();
        let genus = e.len() as u32;
        if e.iter().all(|&x| x == 0) {
            return Some(RepLabel::TRIVIAL);
        }
        let j = e.iter().take_while(|&&x| x > 0).count();
        if e[1..j].iter().any(|&x| x != 1) {
            return None;
        }
        Some(RepLabel::new(genus, e[0] - 1, j as i64))
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Zero => write!(f, "0"),
            RepLabel::Irrep { i, j } => write!(f, "V({i},{j})"),
        }
    }
}

/// A finitely supported integer combination of irreducible labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VirtualRep {
    terms: BTreeMap<RepLabel, BigInt>,
}

impl VirtualRep {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn trivial() -> Self {
        Self::scalar(BigInt::one())
    }

    /// `c·[trivial]`.
    pub fn scalar(c: impl Into<BigInt>) -> Self {
        let mut r = Self::zero();
        r.add_term(RepLabel::TRIVIAL, c);
        r
    }

    pub fn from_label(label: RepLabel) -> Self {
        let mut r = Self::zero();
        r.add_term(label, 1);
        r
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (RepLabel, C)>,
        C: Into<BigInt>,
    {
        let mut r = Self::zero();
        for (l, c) in terms {
            r.add_term(l, c);
        }
        r
    }

    /// Adds `coeff·[label]`; zero labels and zero coefficients are dropped.
    pub fn add_term(&mut self, label: RepLabel, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if label.is_zero() || coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(label).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &RepLabel) -> BigInt {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RepLabel, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when this is `c·[trivial]` (including `c = 0`).
    pub fn as_scalar(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&RepLabel::TRIVIAL).cloned(),
            _ => None,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(l, v)| (*l, v * c)).collect(),
        }
    }

    /// Σ coeff·dim(label).
    pub fn dim(&self, genus: u32) -> Result<BigInt, ReprError> {
        let mut total = BigInt::zero();
        for (l, c) in &self.terms {
            total += c * BigInt::from(label_dim(genus, *l)?);
        }
        Ok(total)
    }

    pub fn to_json_terms(&self) -> Vec<RepTerm> {
        self.terms
            .iter()
            .filter_map(|(l, c)| {
                l.indices().map(|(i, j)| RepTerm {
                    i,
                    j,
                    mult: c.clone(),
                })
            })
            .collect()
    }

    /// Rebuilds from JSON terms, re-canonicalising labels for `genus`.
    pub fn from_json_terms(genus: u32, terms: &[RepTerm]) -> Self {
        let mut r = Self::zero();
        for t in terms {
            r.add_term(
                RepLabel::new(genus, i64::from(t.i), i64::from(t.j)),
                t.mult.clone(),
            );
        }
        r
    }
}

/// JSON record `{i, j, mult}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepTerm {
    pub i: u32,
    pub j: u32,
    #[serde(with = "crate::bigjson::int")]
    pub mult: BigInt,
}

impl Serialize for VirtualRep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VirtualRep {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<RepTerm>::deserialize(d)?;
        Ok(VirtualRep::from_terms(
            terms
                .into_iter()
                .map(|t| (RepLabel::Irrep { i: t.i, j: t.j }, t.mult)),
        ))
    }
}

/// Highest label first: `3·V(1,2) + V(0,0)`.
impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (l, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "{mag}·{l}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&VirtualRep> for VirtualRep {
    fn add_assign(&mut self, rhs: &VirtualRep) {
        for (l, c) in &rhs.terms {
            self.add_term(*l, c.clone());
        }
    }
}

impl Add<&VirtualRep> for &VirtualRep {
    type Output = VirtualRep;

    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub<&VirtualRep> for &VirtualRep {
    type Output = VirtualRep;

    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        self + &(-rhs)
    }
}

impl Neg for &VirtualRep {
    type Output = VirtualRep;

    fn neg(self) -> VirtualRep {
        VirtualRep {
            terms: self.terms.iter().map(|(l, c)| (*l, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_dominant_requests_give_zero() {
        assert!(RepLabel::new(2, -1, 1).is_zero());
        assert!(RepLabel::new(2, 0, 3).is_zero());
        assert!(RepLabel::new(2, 0, -1).is_zero());
        assert!(RepLabel::new(0, 1, 0).is_zero());
        assert_eq!(RepLabel::new(0, 0, 0), RepLabel::TRIVIAL);
    }

    #[test]
    fn aliases_collapse_to_one_label() {
        assert_eq!(RepLabel::new(3, 2, 0), RepLabel::new(3, 1, 1));
        assert_eq!(RepLabel::new(1, 1, 0), RepLabel::standard());
    }

    #[test]
    fn highest_weight_round_trip() {
        for g in 1..=4u32 {
            for i in 0..5 {
                for j in 0..=g {
                    let l = RepLabel::new(g, i, i64::from(j));
                    let w = l.highest_weight(g).unwrap();
                    assert_eq!(RepLabel::from_highest_weight(&w), Some(l));
                }
            }
        }
        let not_hook = WeightVector::new(vec![2, 2, 0]);
        assert_eq!(RepLabel::from_highest_weight(&not_hook), None);
    }

    #[test]
    fn virtual_rep_never_stores_zero() {
        let mut r = VirtualRep::from_label(RepLabel::standard());
        r.add_term(RepLabel::standard(), -1);
        r.add_term(RepLabel::ZERO, 5);
        assert!(r.is_zero());
    }

    #[test]
    fn text_form() {
        let r = VirtualRep::from_terms([
            (RepLabel::Irrep { i: 1, j: 2 }, 3),
            (RepLabel::TRIVIAL, 1),
        ]);
        assert_eq!(r.to_string(), "3·V(1,2) + V(0,0)");
        let s = VirtualRep::from_terms([(RepLabel::standard(), -1), (RepLabel::TRIVIAL, 2)]);
        assert_eq!(s.to_string(), "-V(0,1) + 2·V(0,0)");
        assert_eq!(VirtualRep::zero().to_string(), "0");
    }

    #[test]
    fn json_form() {
        let r = VirtualRep::from_terms([
            (RepLabel::Irrep { i: 1, j: 2 }, 3),
            (RepLabel::TRIVIAL, 1),
        ]);
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(
            text,
            r#"[{"i":0,"j":0,"mult":1},{"i":1,"j":2,"mult":3}]"#
        );
        let back: VirtualRep = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn dim_allows_any_sign() {
        let r = VirtualRep::from_terms([(RepLabel::standard(), 1), (RepLabel::TRIVIAL, -3)]);
        assert_eq!(r.dim(2).unwrap(), BigInt::from(1));
    }
}
