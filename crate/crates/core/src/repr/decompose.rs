//! Decomposition rules into sp(2g) irreducibles: exterior powers, tensor
//! products `V_{ω_j} ⊗ SⁱV`, and restriction of sl(2g) hook modules.

use super::label::{RepLabel, VirtualRep};
use crate::error::ReprError;

fn check_genus(genus: u32) -> Result<(), ReprError> {
    if genus == 0 {
        Err(ReprError::GenusZero)
    } else {
        Ok(())
    }
}

fn lbl(genus: u32, i: i64, j: i64) -> RepLabel {
    RepLabel::new(genus, i, j)
}

/// `ΛʲV = ⊕_{k ≤ j/2} V_{ω_{j−2k}}` for `j ≤ g`, using `ΛʲV ≅ Λ^{2g−j}V`
/// above the middle.
pub fn ext_power_decomp(genus: u32, j: u32) -> Result<VirtualRep, ReprError> {
    check_genus(genus)?;
    if j > 2 * genus {
        return Err(ReprError::OutOfRange(format!("Λ^{j} with 2g = {}", 2 * genus)));
    }
    let j = i64::from(j.min(2 * genus - j));
    Ok(VirtualRep::from_terms(
        (0..=j / 2).map(|k| (lbl(genus, 0, j - 2 * k), 1)),
    ))
}

/// `SⁱV`, irreducible with highest weight `iω₁`.
pub fn sym_power_decomp(genus: u32, i: u32) -> Result<VirtualRep, ReprError> {
    check_genus(genus)?;
    Ok(VirtualRep::from_label(lbl(genus, i64::from(i), 0)))
}

/// `V_{ω_j} ⊗ SⁱV = V(i,j) ⊕ V(i−1,j+1) ⊕ V(i−1,j−1) ⊕ V(i−2,j)` for
/// `i ≥ 1`, `1 ≤ j ≤ g`; non-dominant summands vanish, and for `j = 1` the
/// module `V_{(i−1)ω₁}` appears once.
pub fn tensor_std_sym_decomp(genus: u32, i: u32, j: u32) -> Result<VirtualRep, ReprError> {
    check_genus(genus)?;
    if i == 0 || j == 0 || j > genus {
        return Err(ReprError::OutOfRange(format!(
            "tensor rule needs i >= 1 and 1 <= j <= g, got i = {i}, j = {j}, g = {genus}"
        )));
    }
    let (i, j) = (i64::from(i), i64::from(j));
    let mut r = VirtualRep::zero();
    r.add_term(lbl(genus, i, j), 1);
    r.add_term(lbl(genus, i - 1, j + 1), 1);
    r.add_term(lbl(genus, i - 1, j - 1), 1);
    // At j = 1 the last summand (i−2)ω₁ + ω₁ repeats (i−1)ω₁ + ω₀ and is
    // counted once; at i = 1 it is non-dominant.
    if i >= 2 && j >= 2 {
        r.add_term(lbl(genus, i - 2, j), 1);
    }
    Ok(r)
}

/// `ΛʲV ⊗ SⁱV` as an sp(2g)-module, for any `0 ≤ j ≤ 2g`.
pub fn ext_sym_decomp(genus: u32, j: u32, i: u32) -> Result<VirtualRep, ReprError> {
    let ext = ext_power_decomp(genus, j)?;
    if i == 0 {
        return Ok(ext);
    }
    let mut out = VirtualRep::zero();
    for (label, mult) in ext.iter() {
        let (_, l) = label.indices().expect("nonzero label");
        let piece = if l == 0 {
            sym_power_decomp(genus, i)?
        } else {
            tensor_std_sym_decomp(genus, i, l)?
        };
        out += &piece.scale(mult);
    }
    Ok(out)
}

/// Restriction to sp(2g) of the sl(2g) module `W_{iω₁+ω_j}` (hook diagram
/// with a row of `i+1` boxes and a column of `j` boxes), `1 ≤ j ≤ 2g`.
///
/// With `j' = min(j, 2g−j)` the summands are
/// * `V(i, j'−2m)` for `j'−2m ≥ 1` (`≥ 0` when `i = 0`), and
/// * for `i ≥ 1`, `V(i−1, j'+1−2m)` for `j'+1−2m ≥ 1`, where `m` starts at 1
///   when `j ≤ g` and at 0 when `j > g`.
///
/// For `j ≤ g` these are the shapes left after removing a vertical strip of
/// even length from the hook. Both cases reduce to `ΛʲV` at `i = 0`.
pub fn branching_hook(genus: u32, i: u32, j: u32) -> Result<VirtualRep, ReprError> {
    check_genus(genus)?;
    if j == 0 || j > 2 * genus {
        return Err(ReprError::OutOfRange(format!(
            "branching needs 1 <= j <= 2g, got j = {j}, g = {genus}"
        )));
    }
    let above_middle = j > genus;
    let jp = i64::from(j.min(2 * genus - j));
    let i = i64::from(i);
    let mut r = VirtualRep::zero();
    let lowest = if i == 0 { 0 } else { 1 };
    let mut top = jp;
    while top >= lowest {
        r.add_term(lbl(genus, i, top), 1);
        top -= 2;
    }
    if i >= 1 {
        let mut top = if above_middle { jp + 1 } else { jp - 1 };
        while top >= 1 {
            r.add_term(lbl(genus, i - 1, top), 1);
            top -= 2;
        }
    }
    Ok(r)
}
