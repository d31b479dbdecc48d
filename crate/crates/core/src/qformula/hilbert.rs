//! Hilbert–Poincaré series `Σ [W^{a,b}] t^a s^b` of the pieces of the
//! cohomology computation, and of `H(A)` itself.

use crate::error::FormulaError;
use crate::repr::{RepLabel, VirtualRep};
use crate::series::{scalar_bi, BiSeries};

fn check_genus(genus: u32) -> Result<(), FormulaError> {
    if genus == 0 {
        Err(FormulaError::GenusZero)
    } else {
        Ok(())
    }
}

/// `Σ_{1≤j≤g, i≥0} [V(i,j)] t^{a(i,j)} s^i`, truncated at total degree `d`.
///
/// `t_exp` must be nondecreasing in `i`; the loop over `i` stops once the
/// total degree leaves the truncation.
pub(crate) fn hook_sum(genus: u32, d: u32, t_exp: impl Fn(u32, u32) -> u32) -> BiSeries {
    (1..=genus).fold(BiSeries::zero(d), |acc, j| {
        acc.add(&hook_column(j, d, |i| t_exp(i, j)))
    })
}

/// The `j`-th column `Σ_i [V(i,j)] t^{a(i)} s^i` of [`hook_sum`].
pub(crate) fn hook_column(j: u32, d: u32, t_exp: impl Fn(u32) -> u32) -> BiSeries {
    let mut out = BiSeries::zero(d);
    for i in 0..=d {
        let a = t_exp(i);
        if a + i > d {
            break;
        }
        out.add_term((a, i), &VirtualRep::from_label(RepLabel::Irrep { i, j }));
    }
    out
}

/// `1 + t² + … + t^{2m}`.
fn even_geometric(m: u32, d: u32) -> BiSeries {
    let terms: Vec<((u32, u32), i64)> = (0..=m).map(|k| ((2 * k, 0), 1)).collect();
    scalar_bi(&terms, d)
}

fn one_plus_t2s(d: u32) -> BiSeries {
    scalar_bi(&[((0, 0), 1), ((2, 1), 1)], d)
}

/// Series of `Λ^•V ⊗ S^•V` as a graded sp(2g)-module (`t` counts both
/// factors, `s` the symmetric one).
pub fn build_p_sv(genus: u32, d: u32) -> Result<BiSeries, FormulaError> {
    check_genus(genus)?;
    let mut out = even_geometric(genus, d).add(&even_geometric(genus - 1, d).shift((2, 1)));
    let factor = scalar_bi(&[((0, 0), 1), ((0, 1), 1)], d).mul(&one_plus_t2s(d))?;
    for j in 1..=genus {
        let column = hook_column(j, d, |i| i + j);
        out = out.add(&factor.mul(&even_geometric(genus - j, d))?.mul(&column)?);
    }
    Ok(out)
}

/// `ker d̃ ∩ ker L_ω`: `t^{2g} + (1+t²s) Σ [V(i,j)] t^{2g−j+i} s^i`.
pub fn build_p_ker_cap(genus: u32, d: u32) -> Result<BiSeries, FormulaError> {
    check_genus(genus)?;
    let sum = hook_sum(genus, d, |i, j| 2 * genus - j + i);
    let head = scalar_bi(&[((2 * genus, 0), 1)], d);
    Ok(head.add(&one_plus_t2s(d).mul(&sum)?))
}

/// `ker d̃ / ω ker d̃`: `1 + (1+t²s) Σ [V(i,j)] t^{j+i} s^i`.
pub fn build_p_ker_mod(genus: u32, d: u32) -> Result<BiSeries, FormulaError> {
    check_genus(genus)?;
    let sum = hook_sum(genus, d, |i, j| j + i);
    Ok(BiSeries::one(d).add(&one_plus_t2s(d).mul(&sum)?))
}

/// Quotient of `SV` by the images of `L_ω` and `d̃`:
/// `(1+t²s)(1 + s Σ [V(i,j)] t^{j+i} s^i)`.
pub fn build_p_quot(genus: u32, d: u32) -> Result<BiSeries, FormulaError> {
    check_genus(genus)?;
    let sum = hook_sum(genus, d, |i, j| j + i).shift((0, 1));
    Ok(one_plus_t2s(d).mul(&BiSeries::one(d).add(&sum))?)
}

/// `(1+t²s)(1+t²+t^{2g}s) + (1+t²s)² Σ [V(i,j)] t^{j+i} s^i (1 + t^{2(g−j)} s)`.
pub fn build_p_ha_direct(genus: u32, d: u32) -> Result<BiSeries, FormulaError> {
    check_genus(genus)?;
    let head = one_plus_t2s(d).mul(&scalar_bi(
        &[((0, 0), 1), ((2, 0), 1), ((2 * genus, 1), 1)],
        d,
    ))?;
    let mut sum = BiSeries::zero(d);
    for j in 1..=genus {
        let tail = scalar_bi(&[((0, 0), 1), ((2 * (genus - j), 1), 1)], d);
        sum = sum.add(&tail.mul(&hook_column(j, d, |i| i + j))?);
    }
    let sq = one_plus_t2s(d).mul(&one_plus_t2s(d))?;
    Ok(head.add(&sq.mul(&sum)?))
}

/// `s·P_cap + t²s + t²s²·P_cap + P_mod + t²·P_quot`.
pub fn build_p_ha_assembled(genus: u32, d: u32) -> Result<BiSeries, FormulaError> {
    let cap = build_p_ker_cap(genus, d)?;
    let m = build_p_ker_mod(genus, d)?;
    let q = build_p_quot(genus, d)?;
    Ok(cap
        .shift((0, 1))
        .add(&scalar_bi(&[((2, 1), 1)], d))
        .add(&cap.shift((2, 2)))
        .add(&m)
        .add(&q.shift((2, 0))))
}

/// `P_{H(A)}`, built both ways; errors if they differ.
pub fn build_p_ha(genus: u32, d: u32) -> Result<BiSeries, FormulaError> {
    let direct = build_p_ha_direct(genus, d)?;
    let assembled = build_p_ha_assembled(genus, d)?;
    if direct != assembled {
        return Err(FormulaError::Inconsistent(format!(
            "P_H(A) direct and assembled differ at genus {genus}, degree {d}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::ext_sym_decomp;

    fn v(i: u32, j: u32) -> VirtualRep {
        VirtualRep::from_label(RepLabel::Irrep { i, j })
    }

    #[test]
    fn sv_low_order() {
        let p = build_p_sv(1, 3).unwrap();
        assert_eq!(p.get((1, 0)), v(0, 1));
        // V ⊗ V: the t²s geometric term contributes the trivial summand.
        assert_eq!(p.get((2, 1)), &v(1, 1) + &VirtualRep::trivial());
        let p2 = build_p_sv(2, 2).unwrap();
        assert_eq!(p2.get((2, 0)), &v(0, 2) + &VirtualRep::trivial());
    }

    #[test]
    fn sv_matches_exterior_symmetric_products() {
        for g in 1..=3u32 {
            let d = 12;
            let p = build_p_sv(g, d).unwrap();
            for j in 0..=2 * g {
                for i in 0..=d {
                    if j + 2 * i > d {
                        continue;
                    }
                    assert_eq!(
                        p.get((j + i, i)),
                        ext_sym_decomp(g, j, i).unwrap(),
                        "g={g} j={j} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn kernel_pieces() {
        let cap = build_p_ker_cap(1, 2).unwrap();
        assert_eq!(cap.get((2, 0)), VirtualRep::trivial());
        assert_eq!(cap.get((1, 0)), v(0, 1));
        assert!(build_p_ker_cap(2, 1).unwrap().get((1, 0)).is_zero());
        assert_eq!(build_p_ker_mod(3, 0).unwrap(), BiSeries::one(0));
        assert_eq!(build_p_ker_mod(1, 1).unwrap().get((1, 0)), v(0, 1));
        assert_eq!(build_p_ker_mod(2, 2).unwrap().get((2, 0)), v(0, 2));
        let q = build_p_quot(1, 4).unwrap();
        assert_eq!(q.get((0, 0)), VirtualRep::trivial());
        assert_eq!(q.get((2, 1)), VirtualRep::trivial());
        assert_eq!(q.get((1, 1)), v(0, 1));
        let q2 = build_p_quot(2, 4).unwrap();
        assert_eq!(q2.get((2, 1)), &v(0, 2) + &VirtualRep::trivial());
    }

    #[test]
    fn cohomology_series_low_order() {
        assert_eq!(build_p_ha(1, 0).unwrap(), BiSeries::one(0));
        assert_eq!(build_p_ha(1, 1).unwrap().get((1, 0)), v(0, 1));
        assert_eq!(build_p_ha(1, 2).unwrap().get((2, 0)), VirtualRep::trivial());
        assert_eq!(build_p_ha(0, 3), Err(FormulaError::GenusZero));
    }

    #[test]
    fn assembly_agrees() {
        for g in 1..=3 {
            for d in [0, 5, 20] {
                assert_eq!(
                    build_p_ha_direct(g, d).unwrap(),
                    build_p_ha_assembled(g, d).unwrap()
                );
            }
        }
    }
}
