//! Per-`n` tables of weight-graded cohomology.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{FormulaError, ReprError};
use crate::repr::{RepTerm, VirtualRep};

/// Series key `(t_exp, s_exp)` to `(degree k, weight h)`.
pub fn key_to_degree_weight(key: (u32, u32)) -> (u32, u32) {
    (key.0 + key.1, key.0 + 2 * key.1)
}

/// Inverse of [`key_to_degree_weight`]; `None` off the image.
pub fn degree_weight_to_key(k: u32, h: u32) -> Option<(u32, u32)> {
    let t = (2 * i64::from(k)) - i64::from(h);
    let s = i64::from(h) - i64::from(k);
    (t >= 0 && s >= 0).then_some((t as u32, s as u32))
}

/// `gr^W_h H^k(UConf_n(Σ_g))` for every `(k, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedTable {
    pub genus: u32,
    pub n: u32,
    entries: BTreeMap<(u32, u32), VirtualRep>,
}

impl MixedTable {
    pub fn new(genus: u32, n: u32) -> Self {
        MixedTable {
            genus,
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Builds from a `uⁿ` slice keyed by series exponents.
    pub fn from_series_slice(
        genus: u32,
        n: u32,
        slice: &BTreeMap<(u32, u32), VirtualRep>,
    ) -> Self {
        let mut t = Self::new(genus, n);
        for (key, rep) in slice {
            let (k, h) = key_to_degree_weight(*key);
            t.add(k, h, rep);
        }
        t
    }

    pub fn add(&mut self, k: u32, h: u32, rep: &VirtualRep) {
        if rep.is_zero() {
            return;
        }
        let e = self.entries.entry((k, h)).or_default();
        *e += rep;
        if e.is_zero() {
            self.entries.remove(&(k, h));
        }
    }

    pub fn get(&self, k: u32, h: u32) -> VirtualRep {
        self.entries.get(&(k, h)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<(u32, u32), VirtualRep> {
        &self.entries
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Dimension of every nonzero entry.
    pub fn dims(&self) -> Result<BTreeMap<(u32, u32), BigInt>, ReprError> {
        self.entries
            .iter()
            .map(|(k, v)| Ok((*k, v.dim(self.genus)?)))
            .collect()
    }

    /// `b_k = Σ_h dim`; always at least `b_0`.
    pub fn betti(&self) -> Result<Vec<BigUint>, FormulaError> {
        let mut out = vec![BigUint::zero(); self.max_degree() as usize + 1];
        for ((k, _), d) in self.dims()? {
            let d = d.to_biguint().ok_or_else(|| {
                FormulaError::Inconsistent(format!("negative dimension at degree {k}"))
            })?;
            out[k as usize] += d;
        }
        Ok(out)
    }

    pub fn euler_characteristic(&self) -> Result<BigInt, ReprError> {
        let mut chi = BigInt::zero();
        for ((k, _), d) in self.dims()? {
            if k % 2 == 0 {
                chi += d;
            } else {
                chi -= d;
            }
        }
        Ok(chi)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(VirtualRep::is_nonnegative)
    }

    /// Entries outside `h ≥ k, 0 ≤ 3k − 2h ≤ 2g + 2`.
    pub fn band_violations(&self) -> Vec<(u32, u32)> {
        let top = 2 * i64::from(self.genus) + 2;
        self.entries
            .keys()
            .filter(|(k, h)| {
                let c = 3 * i64::from(*k) - 2 * i64::from(*h);
                h < k || c < 0 || c > top
            })
            .copied()
            .collect()
    }

    /// Entrywise `self ≥ other` in the representation ring.
    pub fn dominates(&self, other: &MixedTable) -> bool {
        other
            .entries
            .keys()
            .chain(self.entries.keys())
            .all(|(k, h)| (&self.get(*k, *h) - &other.get(*k, *h)).is_nonnegative())
    }

    /// Coefficients nonnegative and the Euler characteristic equal to the
    /// coefficient of `uⁿ` in `(1+u)^{2−2g}`.
    pub fn check(&self) -> Result<(), FormulaError> {
        if !self.is_nonnegative() {
            return Err(FormulaError::Inconsistent(format!(
                "negative coefficient in the table for g={}, n={}",
                self.genus, self.n
            )));
        }
        let want = super::euler_expected_coefficient(self.genus, self.n);
        let chi = self.euler_characteristic()?;
        if chi != want {
            return Err(FormulaError::Inconsistent(format!(
                "Euler characteristic {chi} != {want} for g={}, n={}",
                self.genus, self.n
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<TableJson, ReprError> {
        let mut rows = Vec::with_capacity(self.entries.len());
        for ((k, h), rep) in &self.entries {
            rows.push(TableRow {
                degree: *k,
                weight: *h,
                dim: rep.dim(self.genus)?,
                decomposition: rep.to_json_terms(),
            });
        }
        Ok(TableJson {
            genus: self.genus,
            n: self.n,
            table: rows,
        })
    }

    pub fn from_json(json: &TableJson) -> Self {
        let mut t = Self::new(json.genus, json.n);
        for row in &json.table {
            t.add(
                row.degree,
                row.weight,
                &VirtualRep::from_json_terms(json.genus, &row.decomposition),
            );
        }
        t
    }

    /// CSV records `(n, k, h, dim)`.
    pub fn csv_rows(&self) -> Result<Vec<(u32, u32, u32, BigInt)>, ReprError> {
        Ok(self
            .dims()?
            .into_iter()
            .map(|((k, h), d)| (self.n, k, h, d))
            .collect())
    }
}

/// `{genus, n, table: [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub genus: u32,
    pub n: u32,
    pub table: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub degree: u32,
    pub weight: u32,
    #[serde(with = "crate::bigjson::int")]
    pub dim: BigInt,
    pub decomposition: Vec<RepTerm>,
}

impl Serialize for MixedTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json()
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MixedTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(MixedTable::from_json(&TableJson::deserialize(d)?))
    }
}
