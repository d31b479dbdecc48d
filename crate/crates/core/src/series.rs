//! Truncated formal power series in `t, s` (and `u`) with coefficients in
//! the representation ring.
//!
//! Coefficient multiplication is only defined when one side is scalar: the
//! representation ring is used additively.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{ReprError, SeriesError};
use crate::repr::VirtualRep;

type BiExp = (u32, u32);

/// Exponent triple `(t, s, u)`.
pub type TriExp = (u32, u32, u32);

/// Truncated series in `t, s, u`; every stored key has `u ≤ u_trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriSeries {
    coeffs: BTreeMap<TriExp, VirtualRep>,
    u_trunc: u32,
}

/// Series in `t, s` truncated at `t + s ≤ total_trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: BTreeMap<(u32, u32), VirtualRep>,
    total_trunc: u32,
}

/// One JSON record of a [`TriSeries`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub t: u32,
    pub s: u32,
    pub u: u32,
    pub rep: VirtualRep,
}

fn all_scalar<'a>(mut it: impl Iterator<Item = &'a VirtualRep>) -> bool {
    it.all(|r| r.as_scalar().is_some())
}

/// `a·b` where at least one side is `c·[trivial]`.
fn coeff_mul(a: &VirtualRep, b: &VirtualRep) -> Result<VirtualRep, SeriesError> {
    if let Some(c) = a.as_scalar() {
        Ok(b.scale(&c))
    } else if let Some(c) = b.as_scalar() {
        Ok(a.scale(&c))
    } else {
        Err(SeriesError::BothSidesVirtual)
    }
}

fn insert_add<K: Ord>(map: &mut BTreeMap<K, VirtualRep>, key: K, rep: &VirtualRep) {
    if rep.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(rep.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += rep;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl TriSeries {
    pub fn zero(u_trunc: u32) -> Self {
        TriSeries {
            coeffs: BTreeMap::new(),
            u_trunc,
        }
    }

    pub fn one(u_trunc: u32) -> Self {
        Self::monomial((0, 0, 0), VirtualRep::trivial(), u_trunc)
    }

    /// `rep · t^a s^b u^c`, or zero if `c > u_trunc`.
    pub fn monomial(exp: TriExp, rep: VirtualRep, u_trunc: u32) -> Self {
        let mut s = Self::zero(u_trunc);
        s.add_term(exp, &rep);
        s
    }

    /// `Σ_{n ≤ N} uⁿ`.
    pub fn geom_u(n_max: u32) -> Self {
        let mut s = Self::zero(n_max);
        for n in 0..=n_max {
            s.add_term((0, 0, n), &VirtualRep::trivial());
        }
        s
    }

    pub fn u_trunc(&self) -> u32 {
        self.u_trunc
    }

    /// Adds `rep` at `exp`; terms beyond the truncation are dropped.
    pub fn add_term(&mut self, exp: TriExp, rep: &VirtualRep) {
        if exp.2 <= self.u_trunc {
            insert_add(&mut self.coeffs, exp, rep);
        }
    }

    pub fn get(&self, exp: TriExp) -> VirtualRep {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TriExp, &VirtualRep)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether every coefficient is an integer multiple of the trivial rep.
    pub fn is_scalar(&self) -> bool {
        all_scalar(self.coeffs.values())
    }

    /// Drops everything above `u_trunc` (only ever lowers the truncation).
    pub fn truncate(&self, u_trunc: u32) -> Self {
        let u_trunc = u_trunc.min(self.u_trunc);
        TriSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.2 <= u_trunc)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            u_trunc,
        }
    }

    /// Sum, truncated at the smaller of the two truncations.
    pub fn add(&self, other: &TriSeries) -> Self {
        let mut out = self.truncate(other.u_trunc);
        for (k, v) in &other.coeffs {
            out.add_term(*k, v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        TriSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect(),
            u_trunc: self.u_trunc,
        }
    }

    pub fn sub(&self, other: &TriSeries) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.u_trunc);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &v.scale(c));
        }
        out
    }

    /// Multiplies an integer-valued series by a representation.
    pub fn scale_rep(&self, rep: &VirtualRep) -> Result<Self, SeriesError> {
        let mut out = Self::zero(self.u_trunc);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &coeff_mul(v, rep)?);
        }
        Ok(out)
    }

    /// Multiplies by `t^a s^b u^c`.
    pub fn shift(&self, by: TriExp) -> Self {
        let mut out = Self::zero(self.u_trunc);
        for (k, v) in &self.coeffs {
            out.add_term((k.0 + by.0, k.1 + by.1, k.2 + by.2), v);
        }
        out
    }

    /// Cauchy product; at most one factor may carry non-scalar coefficients.
    pub fn mul(&self, other: &TriSeries) -> Result<Self, SeriesError> {
        if !self.is_scalar() && !other.is_scalar() {
            return Err(SeriesError::BothSidesVirtual);
        }
        let mut out = Self::zero(self.u_trunc.min(other.u_trunc));
        for (ka, va) in &self.coeffs {
            for (kb, vb) in &other.coeffs {
                let u = ka.2 + kb.2;
                if u > out.u_trunc {
                    continue;
                }
                out.add_term((ka.0 + kb.0, ka.1 + kb.1, u), &coeff_mul(va, vb)?);
            }
        }
        Ok(out)
    }

    /// The slice at `uⁿ`, keyed by `(t, s)`.
    pub fn coeff_u(&self, n: u32) -> Result<BTreeMap<(u32, u32), VirtualRep>, SeriesError> {
        if n > self.u_trunc {
            return Err(SeriesError::OutOfTruncation {
                n,
                trunc: self.u_trunc,
            });
        }
        Ok(self
            .coeffs
            .range((0, 0, n)..)
            .filter(|(k, _)| k.2 == n)
            .map(|(k, v)| ((k.0, k.1), v.clone()))
            .collect())
    }

    /// Replaces every coefficient by its dimension.
    pub fn dims(&self, genus: u32) -> Result<Self, ReprError> {
        let mut out = Self::zero(self.u_trunc);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &VirtualRep::scalar(v.dim(genus)?));
        }
        Ok(out)
    }

    pub fn max_t_minus_u(&self) -> Option<i64> {
        self.coeffs
            .keys()
            .map(|k| i64::from(k.0) - i64::from(k.2))
            .max()
    }

    pub fn to_terms(&self) -> Vec<SeriesTerm> {
        let mut terms: Vec<SeriesTerm> = self
            .coeffs
            .iter()
            .map(|(k, v)| SeriesTerm {
                t: k.0,
                s: k.1,
                u: k.2,
                rep: v.clone(),
            })
            .collect();
        terms.sort_by_key(|x| (x.u, x.t, x.s));
        terms
    }

    pub fn from_terms(terms: &[SeriesTerm], u_trunc: u32) -> Self {
        let mut out = Self::zero(u_trunc);
        for x in terms {
            out.add_term((x.t, x.s, x.u), &x.rep);
        }
        out
    }

    /// Renders grouped by powers of `u`: `1 + (2t + t²)u`.
    pub fn render_grouped(&self) -> String {
        let mut groups: BTreeMap<u32, Vec<(BiExp, &VirtualRep)>> = BTreeMap::new();
        for (k, v) in &self.coeffs {
            groups.entry(k.2).or_default().push(((k.0, k.1), v));
        }
        if groups.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (u, terms) in groups {
            let inner = join_terms(terms.iter().map(|((t, s), v)| term_text(v, &ts_monomial(*t, *s, ""))));
            let upow = power("u", u);
            parts.push(match (u, terms.len()) {
                (0, _) => inner,
                (_, 1) if inner == "1" => upow,
                _ => format!("({inner}){upow}"),
            });
        }
        parts.join(" + ")
    }
}

/// Flat rendering in lexicographic `(t, s, u)` order:
/// `[V(1,1)]·t²s·u³`.
impl fmt::Display for TriSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let text = join_terms(self.coeffs.iter().map(|((t, s, u), v)| {
            let ts = ts_monomial(*t, *s, "");
            let up = power("u", *u);
            let mono = match (ts.is_empty(), up.is_empty()) {
                (true, _) => up,
                (false, true) => ts,
                (false, false) => format!("{ts}·{up}"),
            };
            term_text(v, &mono)
        }));
        write!(f, "{text}")
    }
}

impl BiSeries {
    pub fn zero(total_trunc: u32) -> Self {
        BiSeries {
            coeffs: BTreeMap::new(),
            total_trunc,
        }
    }

    pub fn one(total_trunc: u32) -> Self {
        Self::monomial((0, 0), VirtualRep::trivial(), total_trunc)
    }

    pub fn monomial(exp: (u32, u32), rep: VirtualRep, total_trunc: u32) -> Self {
        let mut s = Self::zero(total_trunc);
        s.add_term(exp, &rep);
        s
    }

    pub fn total_trunc(&self) -> u32 {
        self.total_trunc
    }

    pub fn add_term(&mut self, exp: (u32, u32), rep: &VirtualRep) {
        if exp.0 + exp.1 <= self.total_trunc {
            insert_add(&mut self.coeffs, exp, rep);
        }
    }

    pub fn get(&self, exp: (u32, u32)) -> VirtualRep {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &VirtualRep)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        all_scalar(self.coeffs.values())
    }

    pub fn truncate(&self, total_trunc: u32) -> Self {
        let total_trunc = total_trunc.min(self.total_trunc);
        let mut out = Self::zero(total_trunc);
        for (k, v) in &self.coeffs {
            out.add_term(*k, v);
        }
        out
    }

    pub fn add(&self, other: &BiSeries) -> Self {
        let mut out = self.truncate(other.total_trunc);
        for (k, v) in &other.coeffs {
            out.add_term(*k, v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect(),
            total_trunc: self.total_trunc,
        }
    }

    pub fn sub(&self, other: &BiSeries) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.total_trunc);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &v.scale(c));
        }
        out
    }

    pub fn scale_rep(&self, rep: &VirtualRep) -> Result<Self, SeriesError> {
        let mut out = Self::zero(self.total_trunc);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &coeff_mul(v, rep)?);
        }
        Ok(out)
    }

    /// Multiplies by `t^a s^b`.
    pub fn shift(&self, by: (u32, u32)) -> Self {
        let mut out = Self::zero(self.total_trunc);
        for (k, v) in &self.coeffs {
            out.add_term((k.0 + by.0, k.1 + by.1), v);
        }
        out
    }

    pub fn mul(&self, other: &BiSeries) -> Result<Self, SeriesError> {
        if !self.is_scalar() && !other.is_scalar() {
            return Err(SeriesError::BothSidesVirtual);
        }
        let mut out = Self::zero(self.total_trunc.min(other.total_trunc));
        for (ka, va) in &self.coeffs {
            for (kb, vb) in &other.coeffs {
                let k = (ka.0 + kb.0, ka.1 + kb.1);
                if k.0 + k.1 <= out.total_trunc {
                    out.add_term(k, &coeff_mul(va, vb)?);
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `t ↦ tu, s ↦ su`, giving a series truncated at
    /// `u ≤ u_trunc`.
    pub fn lift_u(&self, u_trunc: u32) -> TriSeries {
        let mut out = TriSeries::zero(u_trunc);
        for ((t, s), v) in &self.coeffs {
            out.add_term((*t, *s, t + s), v);
        }
        out
    }

    pub fn dims(&self, genus: u32) -> Result<Self, ReprError> {
        let mut out = Self::zero(self.total_trunc);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &VirtualRep::scalar(v.dim(genus)?));
        }
        Ok(out)
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let text = join_terms(
            self.coeffs
                .iter()
                .map(|((t, s), v)| term_text(v, &ts_monomial(*t, *s, ""))),
        );
        write!(f, "{text}")
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

pub(crate) fn superscript(n: u32) -> String {
    n.to_string()
        .chars()
        .map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap_or(0) as usize])
        .collect()
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}{}", superscript(e)),
    }
}

fn ts_monomial(t: u32, s: u32, sep: &str) -> String {
    let (a, b) = (power("t", t), power("s", s));
    if a.is_empty() || b.is_empty() {
        format!("{a}{b}")
    } else {
        format!("{a}{sep}{b}")
    }
}

/// One signed term; the leading sign is kept separate so [`join_terms`] can
/// print `a - b`.
struct Term {
    negative: bool,
    body: String,
}

fn term_text(rep: &VirtualRep, mono: &str) -> Term {
    match rep.as_scalar() {
        Some(c) => {
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono.to_string()
            } else {
                format!("{mag}{mono}")
            };
            Term {
                negative: c.is_negative(),
                body,
            }
        }
        None if mono.is_empty() => Term {
            negative: false,
            body: format!("[{rep}]"),
        },
        None => Term {
            negative: false,
            body: format!("[{rep}]·{mono}"),
        },
    }
}

fn join_terms(terms: impl Iterator<Item = Term>) -> String {
    let mut out = String::new();
    for (n, t) in terms.enumerate() {
        match (n, t.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t.body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Serialize for TriSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}

/// Integer-valued convenience: `Σ c·t^a s^b u^c` from a list.
pub fn scalar_tri(terms: &[(TriExp, i64)], u_trunc: u32) -> TriSeries {
    let mut out = TriSeries::zero(u_trunc);
    for (k, c) in terms {
        out.add_term(*k, &VirtualRep::scalar(*c));
    }
    out
}

pub fn scalar_bi(terms: &[((u32, u32), i64)], total_trunc: u32) -> BiSeries {
    let mut out = BiSeries::zero(total_trunc);
    for (k, c) in terms {
        out.add_term(*k, &VirtualRep::scalar(*c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::RepLabel;

    fn std_rep() -> VirtualRep {
        VirtualRep::from_label(RepLabel::standard())
    }

    #[test]
    fn add_cancels() {
        let a = scalar_tri(&[((0, 0, 0), 1), ((1, 0, 0), 1)], 3);
        let b = scalar_tri(&[((0, 0, 0), -1)], 3);
        assert_eq!(a.add(&b), scalar_tri(&[((1, 0, 0), 1)], 3));
        let v = TriSeries::monomial((1, 0, 0), std_rep(), 2);
        assert_eq!(
            v.add(&v),
            TriSeries::monomial((1, 0, 0), std_rep().scale(&BigInt::from(2)), 2)
        );
    }

    #[test]
    fn terms_beyond_truncation_are_dropped() {
        let mut a = TriSeries::one(2);
        a.add_term((0, 0, 3), &VirtualRep::trivial());
        assert_eq!(a, TriSeries::one(2));
        let b = scalar_tri(&[((0, 0, 3), 5)], 4);
        assert_eq!(a.add(&b).u_trunc(), 2);
        assert_eq!(a.add(&b), TriSeries::one(2));
    }

    #[test]
    fn products() {
        let a = scalar_tri(&[((0, 0, 0), 1), ((2, 0, 1), 1)], 6);
        let b = scalar_tri(&[((0, 0, 0), 1), ((2, 1, 3), 1)], 6);
        let want = scalar_tri(
            &[((0, 0, 0), 1), ((2, 0, 1), 1), ((2, 1, 3), 1), ((4, 1, 4), 1)],
            6,
        );
        assert_eq!(a.mul(&b).unwrap(), want);
        assert_eq!(
            TriSeries::geom_u(3).mul(&TriSeries::one(3)).unwrap(),
            scalar_tri(&[((0, 0, 0), 1), ((0, 0, 1), 1), ((0, 0, 2), 1), ((0, 0, 3), 1)], 3)
        );
        let v = TriSeries::monomial((1, 0, 1), std_rep(), 5);
        let c = scalar_tri(&[((0, 0, 0), 1), ((0, 1, 2), 1)], 5);
        let mut want = TriSeries::monomial((1, 0, 1), std_rep(), 5);
        want.add_term((1, 1, 3), &std_rep());
        assert_eq!(v.mul(&c).unwrap(), want);
        assert_eq!(v.mul(&v), Err(SeriesError::BothSidesVirtual));
    }

    #[test]
    fn geometric_series() {
        assert_eq!(TriSeries::geom_u(0), TriSeries::one(0));
        let g = TriSeries::geom_u(2);
        assert_eq!(g.len(), 3);
        assert_eq!(g.get((0, 0, 2)), VirtualRep::trivial());
    }

    #[test]
    fn coefficient_slices() {
        let a = TriSeries::geom_u(5)
            .mul(&scalar_tri(&[((2, 0, 1), 1)], 5))
            .unwrap();
        let slice = a.coeff_u(1).unwrap();
        assert_eq!(slice.len(), 1);
        assert_eq!(slice[&(2, 0)], VirtualRep::trivial());
        assert_eq!(
            a.coeff_u(6),
            Err(SeriesError::OutOfTruncation { n: 6, trunc: 5 })
        );
    }

    #[test]
    fn rendering() {
        let a = scalar_tri(&[((0, 0, 0), 1), ((1, 0, 1), 2), ((2, 0, 1), 1)], 1);
        assert_eq!(a.render_grouped(), "1 + (2t + t²)u");
        assert_eq!(a.to_string(), "1 + 2t·u + t²·u");
        let v = TriSeries::monomial(
            (2, 1, 3),
            VirtualRep::from_label(RepLabel::Irrep { i: 1, j: 1 }),
            3,
        );
        assert_eq!(v.to_string(), "[V(1,1)]·t²s·u³");
        let n = scalar_tri(&[((1, 0, 0), -3), ((0, 0, 2), 1)], 2);
        assert_eq!(n.render_grouped(), "-3t + u²");
        assert_eq!(TriSeries::zero(3).to_string(), "0");
        assert_eq!(superscript(12), "¹²");
    }

    #[test]
    fn json_round_trip() {
        let mut a = scalar_tri(&[((0, 0, 0), 1), ((2, 0, 1), 1)], 4);
        a.add_term((1, 0, 1), &std_rep());
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"t\":1"));
        let back: Vec<SeriesTerm> = serde_json::from_str(&text).unwrap();
        assert_eq!(TriSeries::from_terms(&back, 4), a);
    }

    #[test]
    fn lift_to_u() {
        let b = scalar_bi(&[((0, 0), 1), ((1, 2), 3), ((4, 0), 1)], 4);
        let t = b.lift_u(3);
        assert_eq!(t.get((1, 2, 3)), VirtualRep::scalar(3));
        assert!(t.get((4, 0, 4)).is_zero());
        assert_eq!(b.truncate(2).len(), 1);
    }
}
