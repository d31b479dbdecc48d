//! The master series `Q_g(t, s, u) = Σ_n Σ [gr^W_{a+2b} H^{a+b}(UConf_n)] t^a s^b uⁿ`.

use crate::error::FormulaError;
use crate::repr::{RepLabel, VirtualRep};
use crate::series::{scalar_tri, TriSeries};

use super::hilbert::{build_p_ker_cap, build_p_ker_mod, build_p_quot};

/// `Σ_{j,i} [V(i,j)] t^{j+i} s^i u^{j+2i} (1 + t^{2(g−j)} s u^{2(g−j+1)})`.
fn hook_sum_u(genus: u32, n_max: u32) -> TriSeries {
    let mut out = TriSeries::zero(n_max);
    for j in 1..=genus {
        let tail = (2 * (genus - j), 1, 2 * (genus - j + 1));
        for i in 0..=n_max {
            let u = j + 2 * i;
            if u > n_max {
                break;
            }
            let rep = VirtualRep::from_label(RepLabel::Irrep { i, j });
            out.add_term((j + i, i, u), &rep);
            out.add_term((j + i + tail.0, i + tail.1, u + tail.2), &rep);
        }
    }
    out
}

/// `(1−u)·Q_g`, truncated at `u ≤ n_max`.
pub fn build_q_numerator(genus: u32, n_max: u32) -> Result<TriSeries, FormulaError> {
    if genus == 0 {
        return Err(FormulaError::GenusZero);
    }
    let g = genus;
    let head = scalar_tri(&[((0, 0, 0), 1), ((2, 1, 3), 1)], n_max)
        .mul(&scalar_tri(&[((0, 0, 0), 1), ((2, 0, 1), 1)], n_max))?;
    let top = scalar_tri(&[((0, 0, 0), 1), ((2, 1, 2), 1)], n_max).shift((2 * g, 1, 2 * g + 2));
    let frame = scalar_tri(&[((0, 0, 0), 1), ((2, 1, 2), 1)], n_max)
        .mul(&scalar_tri(&[((0, 0, 0), 1), ((2, 1, 3), 1)], n_max))?;
    Ok(head.add(&top).add(&frame.mul(&hook_sum_u(g, n_max))?))
}

/// `Q_g` truncated at `u ≤ n_max`.
pub fn build_q(genus: u32, n_max: u32) -> Result<TriSeries, FormulaError> {
    Ok(TriSeries::geom_u(n_max).mul(&build_q_numerator(genus, n_max)?)?)
}

/// `(1−u)·Q_g` rebuilt from the kernel and quotient series:
/// `su²·C + t²su³ + t²s²u⁴·C + M + t²u·P`, each evaluated at `(tu, su)`.
pub fn build_q_numerator_from_pieces(genus: u32, n_max: u32) -> Result<TriSeries, FormulaError> {
    let cap = build_p_ker_cap(genus, n_max)?.lift_u(n_max);
    let modulo = build_p_ker_mod(genus, n_max)?.lift_u(n_max);
    let quot = build_p_quot(genus, n_max)?.lift_u(n_max);
    Ok(cap
        .shift((0, 1, 2))
        .add(&scalar_tri(&[((2, 1, 3), 1)], n_max))
        .add(&cap.shift((2, 2, 4)))
        .add(&modulo)
        .add(&quot.shift((2, 0, 1))))
}

/// Least `n₀` such that the `(1−u)·Q_g` has no term at series key
/// `(t_exp, s_exp)` beyond `u^{n₀}`; 0 if it has none at all.
pub fn stabilization_bound_key(genus: u32, key: (u32, u32)) -> Result<u32, FormulaError> {
    // Every numerator term has u ≤ t + s + 1.
    let n_max = key.0 + key.1 + 1;
    let num = build_q_numerator(genus, n_max)?;
    Ok(num
        .iter()
        .filter(|((t, s, _), _)| (*t, *s) == key)
        .map(|((_, _, u), _)| *u)
        .max()
        .unwrap_or(0))
}
