//! Torus characters of sp(2g)-modules.
//!
//! Irreducible characters come from Freudenthal's recursion, run on dominant
//! weights only and extended by Weyl-group orbits. Peeling inverts this:
//! repeatedly take a maximal dominant weight and subtract its irreducible
//! character.

use std::collections::BTreeMap;

use super::label::{RepLabel, VirtualRep};
use super::weight::WeightVector;
use crate::error::ReprError;

/// Finitely supported weight multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character {
    genus: u32,
    mults: BTreeMap<WeightVector, u64>,
}

impl Character {
    pub fn empty(genus: u32) -> Self {
        Character {
            genus,
            mults: BTreeMap::new(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn get(&self, w: &WeightVector) -> u64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, &u64)> {
        self.mults.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn add(&mut self, w: WeightVector, m: u64) -> Result<(), ReprError> {
        if w.genus() != self.genus {
            return Err(ReprError::WrongLength {
                len: w.entries().len(),
                weight: w.entries().to_vec(),
                genus: self.genus,
            });
        }
        if m == 0 {
            return Ok(());
        }
        let e = self.mults.entry(w).or_insert(0);
        *e = e.checked_add(m).ok_or(ReprError::Overflow)?;
        Ok(())
    }

    /// Total multiplicity; equals the dimension of the module.
    pub fn mass(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Whether every multiplicity is constant on its Weyl orbit.
    pub fn is_weyl_invariant(&self) -> bool {
        self.mults.iter().all(|(w, &m)| {
            self.get(&w.dominant_representative()) == m
                && (!w.is_dominant() || w.weyl_orbit().iter().all(|x| self.get(x) == m))
        })
    }

    pub fn dominant_part(&self) -> BTreeMap<WeightVector, u64> {
        self.mults
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, &m)| (w.clone(), m))
            .collect()
    }

    /// Expands dominant multiplicities to the full character.
    pub fn from_dominant(
        genus: u32,
        dominant: &BTreeMap<WeightVector, u64>,
    ) -> Result<Character, ReprError> {
        let mut c = Character::empty(genus);
        for (w, &m) in dominant {
            for x in w.weyl_orbit() {
                c.add(x, m)?;
            }
        }
        Ok(c)
    }

    /// Character of a representation with nonnegative coefficients.
    pub fn of_virtual_rep(
        engine: &CharacterEngine,
        genus: u32,
        rep: &VirtualRep,
    ) -> Result<Character, ReprError> {
        let mut dominant = BTreeMap::new();
        for (label, coeff) in rep.iter() {
            let k: u64 = coeff
                .try_into()
                .map_err(|_| ReprError::NotACharacter(format!("coefficient {coeff} of {label}")))?;
            let hw = label.highest_weight(genus)?;
            for (w, m) in engine.dominant_multiplicities(genus, &hw)? {
                let e: &mut u64 = dominant.entry(w).or_insert(0);
                *e = m
                    .checked_mul(k)
                    .and_then(|x| e.checked_add(x))
                    .ok_or(ReprError::Overflow)?;
            }
        }
        Character::from_dominant(genus, &dominant)
    }
}

/// Computes irreducible characters up to a genus budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterEngine {
    pub max_genus: u32,
}

impl Default for CharacterEngine {
    fn default() -> Self {
        CharacterEngine { max_genus: 3 }
    }
}

impl CharacterEngine {
    pub fn new(max_genus: u32) -> Self {
        CharacterEngine { max_genus }
    }

    fn check_budget(&self, genus: u32) -> Result<(), ReprError> {
        if genus > self.max_genus {
            Err(ReprError::BudgetExceeded {
                genus,
                max: self.max_genus,
            })
        } else {
            Ok(())
        }
    }

    /// Full weight multiplicities of `V(label)`.
    pub fn irreducible_character(
        &self,
        genus: u32,
        label: RepLabel,
    ) -> Result<Character, ReprError> {
        let hw = label.highest_weight(genus)?;
        let dom = self.dominant_multiplicities(genus, &hw)?;
        Character::from_dominant(genus, &dom)
    }

    /// Multiplicities of the dominant weights of the irreducible with the
    /// given highest weight (Freudenthal).
    pub fn dominant_multiplicities(
        &self,
        genus: u32,
        highest: &WeightVector,
    ) -> Result<BTreeMap<WeightVector, u64>, ReprError> {
        self.check_budget(genus)?;
        if highest.genus() != genus {
            return Err(ReprError::WrongLength {
                weight: highest.entries().to_vec(),
                len: highest.entries().len(),
                genus,
            });
        }
        if !highest.is_dominant() {
            return Err(ReprError::NotDominant(highest.entries().to_vec()));
        }
        let rho = WeightVector::rho(genus);
        let roots = WeightVector::positive_roots(genus);
        let mut candidates = dominant_weights_below(highest);
        // Highest first: dominant representatives of μ + kα sit strictly above μ.
        candidates.sort_by(|a, b| b.rho_height().cmp(&a.rho_height()).then(b.cmp(a)));

        let top = highest.add(&rho);
        let top_norm = i128::from(top.dot(&top));
        let mut mults: BTreeMap<WeightVector, u64> = BTreeMap::new();
        for mu in candidates {
            if &mu == highest {
                mults.insert(mu, 1);
                continue;
            }
            let mut sum: i128 = 0;
            for alpha in &roots {
                let mut k = 1;
                loop {
                    let nu = mu.add_scaled(alpha, k);
                    let m = mults.get(&nu.dominant_representative()).copied().unwrap_or(0);
                    if m == 0 {
                        break;
                    }
                    sum += i128::from(m) * i128::from(nu.dot(alpha));
                    k += 1;
                }
            }
            let shifted = mu.add(&rho);
            let den = top_norm - i128::from(shifted.dot(&shifted));
            assert!(den > 0, "Freudenthal denominator must be positive");
            assert_eq!((2 * sum) % den, 0, "Freudenthal quotient is not exact");
            let m = (2 * sum) / den;
            if m > 0 {
                mults.insert(mu, u64::try_from(m).map_err(|_| ReprError::Overflow)?);
            }
        }
        Ok(mults)
    }

    /// Decomposes a genuine character into irreducibles `V(i,j)`.
    pub fn peel_character(&self, character: &Character) -> Result<VirtualRep, ReprError> {
        let genus = character.genus();
        if !character.is_weyl_invariant() {
            return Err(ReprError::NotACharacter(
                "multiplicities are not Weyl-invariant".into(),
            ));
        }
        let mut rest: BTreeMap<WeightVector, u64> = character.dominant_part();
        let mut out = VirtualRep::zero();
        while let Some(top) = rest
            .keys()
            .max_by(|a, b| a.rho_height().cmp(&b.rho_height()).then(a.cmp(b)))
            .cloned()
        {
            let times = rest[&top];
            let label = RepLabel::from_highest_weight(&top)
                .ok_or_else(|| ReprError::NotAHook(top.entries().to_vec()))?;
            for (w, m) in self.dominant_multiplicities(genus, &top)? {
                let have = rest.get(&w).copied().unwrap_or(0);
                let take = m.checked_mul(times).ok_or(ReprError::Overflow)?;
                let left = have.checked_sub(take).ok_or_else(|| {
                    ReprError::NotACharacter(format!(
                        "multiplicity of {w} would go negative while removing {times}·{label}"
                    ))
                })?;
                if left == 0 {
                    rest.remove(&w);
                } else {
                    rest.insert(w, left);
                }
            }
            out.add_term(label, times);
        }
        Ok(out)
    }
}

/// Dominant `μ` with `λ − μ` a nonnegative integer combination of simple
/// roots: partial sums of `λ − μ` nonnegative and total even.
fn dominant_weights_below(highest: &WeightVector) -> Vec<WeightVector> {
    let g = highest.entries().len();
    let total: i64 = highest.entries().iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(g);
    fill(highest.entries(), total, &mut cur, 0, &mut out);
    out
}

fn fill(lambda: &[i64], bound: i64, cur: &mut Vec<i64>, slack: i64, out: &mut Vec<WeightVector>) {
    let k = cur.len();
    if k == lambda.len() {
        if slack % 2 == 0 {
            out.push(WeightVector::new(cur.clone()));
        }
        return;
    }
    // Partial sums Σ_{l≤k} (λ_l − μ_l) must stay ≥ 0.
    let max_here = bound.min(slack + lambda[k]);
    for v in (0..=max_here).rev() {
        cur.push(v);
        fill(lambda, v, cur, slack + lambda[k] - v, out);
        cur.pop();
    }
}
