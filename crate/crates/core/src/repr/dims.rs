//! Dimension formulas: the closed hook formula, the Weyl product over
//! positive roots, and the sl(2g) hook dimension.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::label::RepLabel;
use super::weight::WeightVector;
use crate::error::ReprError;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Generalised binomial `C(m, n)` for any integer `m`: the coefficient of
/// `uⁿ` in `(1+u)^m`.
pub fn binomial_signed(m: i64, n: u64) -> BigInt {
    let mut num = BigInt::one();
    for t in 0..n {
        num *= BigInt::from(m) - BigInt::from(t);
    }
    num / BigInt::from(factorial(n))
}

/// `dim V(i, j)` from `multinomial(2g+i+1; i, j)·(2g+2−2j)/(2g+2+i−j)·j/(i+j)`,
/// where the multinomial is `(2g+i+1)!/(i!·j!·(2g+1−j)!)`. Valid for
/// `1 ≤ j ≤ g`.
pub fn dim_irrep(genus: u32, label: RepLabel) -> Result<BigUint, ReprError> {
    if genus == 0 {
        return Err(ReprError::GenusZero);
    }
    let (i, j) = label.indices().ok_or(ReprError::ZeroLabel)?;
    if j == 0 || j > genus {
        return Err(ReprError::OutOfRange(format!(
            "closed form needs 1 <= j <= g, got j = {j}, g = {genus}"
        )));
    }
    let (g, i, j) = (u64::from(genus), u64::from(i), u64::from(j));
    let multinomial =
        factorial(2 * g + i + 1) / (factorial(i) * factorial(j) * factorial(2 * g + 1 - j));
    let value = BigRational::from_integer(multinomial.into())
        * BigRational::new(
            BigInt::from(2 * g + 2 - 2 * j),
            BigInt::from(2 * g + 2 + i - j),
        )
        * BigRational::new(BigInt::from(j), BigInt::from(i + j));
    assert!(value.is_integer(), "hook dimension formula is not integral");
    Ok(value.to_integer().to_biguint().expect("dimension is positive"))
}

/// Weyl dimension formula `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` for a dominant weight.
pub fn weyl_dim(genus: u32, weight: &WeightVector) -> Result<BigUint, ReprError> {
    if weight.genus() != genus {
        return Err(ReprError::WrongLength {
            weight: weight.entries().to_vec(),
            len: weight.entries().len(),
            genus,
        });
    }
    if !weight.is_dominant() {
        return Err(ReprError::NotDominant(weight.entries().to_vec()));
    }
    let rho = WeightVector::rho(genus);
    let shifted = weight.add(&rho);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in WeightVector::positive_roots(genus) {
        num *= shifted.dot(&alpha);
        den *= rho.dot(&alpha);
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension quotient is not exact");
    Ok(q.to_biguint().expect("dimension is positive"))
}

/// Dimension of any nonzero label: the closed form for `j ≥ 1`, the Weyl
/// product for `j = 0`.
pub fn label_dim(genus: u32, label: RepLabel) -> Result<BigUint, ReprError> {
    let (_, j) = label.indices().ok_or(ReprError::ZeroLabel)?;
    if j == 0 {
        weyl_dim(genus, &label.highest_weight(genus)?)
    } else {
        dim_irrep(genus, label)
    }
}

/// `dim W_{iω₁+ω_j} = C(i+j−1, i)·C(i+2g, i+j)` for the sl(2g) hook module.
pub fn sl_hook_dim(genus: u32, i: u32, j: u32) -> Result<BigUint, ReprError> {
    if j == 0 || j > 2 * genus {
        return Err(ReprError::OutOfRange(format!(
            "sl hook needs 1 <= j <= 2g, got j = {j}, g = {genus}"
        )));
    }
    let (g, i, j) = (i64::from(genus), i64::from(i), i64::from(j));
    Ok(binomial(i + j - 1, i) * binomial(i + 2 * g, i + j))
}
