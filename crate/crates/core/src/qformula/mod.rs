//! Closed-form route: generating series, per-`n` tables, Betti numbers and
//! Euler characteristics.

mod genus0;
mod hilbert;
mod master;
mod table;

use num_bigint::{BigInt, BigUint};

pub use genus0::{genus0_betti, genus0_table};
pub use hilbert::{
    build_p_ha, build_p_ha_assembled, build_p_ha_direct, build_p_ker_cap, build_p_ker_mod,
    build_p_quot, build_p_sv,
};
pub use master::{build_q, build_q_numerator, build_q_numerator_from_pieces};
pub use table::{degree_weight_to_key, key_to_degree_weight, MixedTable, TableJson, TableRow};

use crate::error::FormulaError;
use crate::repr::binomial_signed;
use crate::series::BiSeries;

/// Coefficient of `uⁿ` in `(1+u)^{2−2g}`.
pub fn euler_expected_coefficient(genus: u32, n: u32) -> BigInt {
    binomial_signed(2 - 2 * i64::from(genus), u64::from(n))
}

/// Tables for `n = 0..=n_max` from one expansion of the master series.
pub fn mixed_tables(genus: u32, n_max: u32) -> Result<Vec<MixedTable>, FormulaError> {
    if genus == 0 {
        return Ok((0..=n_max).map(genus0_table).collect());
    }
    let q = build_q(genus, n_max)?;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let table = MixedTable::from_series_slice(genus, n, &q.coeff_u(n)?);
        table.check()?;
        let outside = table.band_violations();
        if !outside.is_empty() {
            log::warn!("g={genus} n={n}: entries outside the weight band: {outside:?}");
        }
        out.push(table);
    }
    Ok(out)
}

/// The table of `UConf_n(Σ_g)` for `g ≥ 1`.
pub fn mixed_table(genus: u32, n: u32) -> Result<MixedTable, FormulaError> {
    if genus == 0 {
        return Err(FormulaError::GenusZero);
    }
    Ok(mixed_tables(genus, n)?.pop().expect("n_max + 1 tables"))
}

/// Betti numbers `b_0, …, b_top`; genus 0 uses the closed form.
pub fn betti(genus: u32, n: u32) -> Result<Vec<BigUint>, FormulaError> {
    if genus == 0 {
        return Ok(genus0_betti(n));
    }
    mixed_table(genus, n)?.betti()
}

/// `Σ dim gr^W_{a+2b} H^{a+b} · t^a s^b`.
pub fn mixed_poincare(genus: u32, n: u32) -> Result<BiSeries, FormulaError> {
    let table = if genus == 0 {
        genus0_table(n)
    } else {
        mixed_table(genus, n)?
    };
    let top = table.entries().keys().map(|(_, h)| *h).max().unwrap_or(0);
    let mut out = BiSeries::zero(top);
    for ((k, h), d) in table.dims()? {
        let key = degree_weight_to_key(k, h).expect("table keys come from series keys");
        out.add_term(key, &crate::repr::VirtualRep::scalar(d));
    }
    Ok(out)
}

/// `χ(UConf_n(Σ_g))` for `n = 0..=n_max`.
pub fn euler_series(genus: u32, n_max: u32) -> Result<Vec<BigInt>, FormulaError> {
    mixed_tables(genus, n_max)?
        .iter()
        .map(|t| Ok(t.euler_characteristic()?))
        .collect()
}

/// Least `n₀` with the `(k, h)` entry constant for all `n ≥ n₀`; 0 off the
/// weight band.
pub fn stabilization_bound(genus: u32, k: u32, h: u32) -> Result<u32, FormulaError> {
    match degree_weight_to_key(k, h) {
        Some(key) => master::stabilization_bound_key(genus, key),
        None if genus == 0 => Err(FormulaError::GenusZero),
        None => Ok(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{RepLabel, VirtualRep};

    fn v(i: u32, j: u32) -> VirtualRep {
        VirtualRep::from_label(RepLabel::Irrep { i, j })
    }

    fn nums(xs: &[u32]) -> Vec<BigUint> {
        xs.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn torus_tables() {
        let t1 = mixed_table(1, 1).unwrap();
        assert_eq!(t1.entries().len(), 3);
        assert_eq!(t1.get(1, 1), v(0, 1));
        assert_eq!(t1.get(2, 2), VirtualRep::trivial());
        let t3 = mixed_table(1, 3).unwrap();
        assert_eq!(t3.entries().len(), 6);
        assert_eq!(t3.get(3, 4), &v(1, 1) + &VirtualRep::trivial());
        assert_eq!(t3.get(2, 3), v(0, 1));
        assert_eq!(t3.get(4, 5), v(0, 1));
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(1, 2).unwrap(), nums(&[1, 2, 1]));
        assert_eq!(betti(1, 3).unwrap(), nums(&[1, 2, 3, 4, 2]));
        for g in 0..=3 {
            assert_eq!(betti(g, 0).unwrap(), nums(&[1]));
        }
        assert_eq!(betti(0, 5).unwrap(), nums(&[1, 0, 0, 1]));
    }

    #[test]
    fn euler_examples() {
        let one = |x: i64| BigInt::from(x);
        assert_eq!(euler_series(1, 4).unwrap(), vec![one(1), one(0), one(0), one(0), one(0)]);
        assert_eq!(euler_series(2, 3).unwrap(), vec![one(1), one(-2), one(3), one(-4)]);
        assert_eq!(euler_series(0, 3).unwrap(), vec![one(1), one(2), one(1), one(0)]);
    }

    #[test]
    fn poincare_polynomial() {
        assert_eq!(mixed_poincare(1, 2).unwrap().to_string(), "1 + 2t + t²");
    }

    #[test]
    fn stabilization() {
        assert_eq!(stabilization_bound(1, 0, 0).unwrap(), 0);
        assert_eq!(stabilization_bound(1, 2, 2).unwrap(), 1);
        assert_eq!(stabilization_bound(1, 2, 1).unwrap(), 0);
        assert!(mixed_table(1, 8).unwrap().get(2, 1).is_zero());
    }
}
