//! Sparse fraction-free elimination, generic over the coefficient arithmetic.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) trait Arith {
    type T: Clone;

    fn is_zero(&self, x: &Self::T) -> bool;

    /// `a·b − c·d`, or `None` on overflow.
    fn mul_sub(&self, a: &Self::T, b: &Self::T, c: &Self::T, d: &Self::T) -> Option<Self::T>;

    /// Divides a row by its content; `None` on overflow.
    fn normalize(&self, row: &mut [(usize, Self::T)]) -> Option<()>;
}

pub(crate) struct I64Arith;
pub(crate) struct BigArith;
pub(crate) struct ModArith {
    pub p: u64,
}

impl Arith for I64Arith {
    type T = i64;

    fn is_zero(&self, x: &i64) -> bool {
        *x == 0
    }

    fn mul_sub(&self, a: &i64, b: &i64, c: &i64, d: &i64) -> Option<i64> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }

    fn normalize(&self, row: &mut [(usize, i64)]) -> Option<()> {
        let mut g = 0i64;
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g == 1 {
                return Some(());
            }
        }
        if g > 1 {
            for (_, v) in row.iter_mut() {
                *v /= g;
            }
        }
        // gcd(i64::MIN, 0) overflows to a negative value.
        (g >= 0).then_some(())
    }
}

impl Arith for BigArith {
    type T = BigInt;

    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }

    fn mul_sub(&self, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Option<BigInt> {
        Some(a * b - c * d)
    }

    fn normalize(&self, row: &mut [(usize, BigInt)]) -> Option<()> {
        let mut g = BigInt::zero();
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g.is_one() {
                return Some(());
            }
        }
        if g.is_positive() && !g.is_one() {
            for (_, v) in row.iter_mut() {
                *v /= &g;
            }
        }
        Some(())
    }
}

impl Arith for ModArith {
    type T = u64;

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn mul_sub(&self, a: &u64, b: &u64, c: &u64, d: &u64) -> Option<u64> {
        let p = self.p;
        Some((a * b % p + p - c * d % p) % p)
    }

    fn normalize(&self, _row: &mut [(usize, u64)]) -> Option<()> {
        Some(())
    }
}

/// `pv·row − rv·pivot_row` on sorted sparse rows, dropping zeros.
fn combine<A: Arith>(
    a: &A,
    row: &[(usize, A::T)],
    pivot_row: &[(usize, A::T)],
    pv: &A::T,
    rv: &A::T,
    zero: &A::T,
) -> Option<Vec<(usize, A::T)>> {
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot_row.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot_row.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, a.mul_sub(pv, &row[i - 1].1, rv, zero)?)
        } else if cj < ci {
            j += 1;
            (cj, a.mul_sub(pv, zero, rv, &pivot_row[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, a.mul_sub(pv, &row[i - 1].1, rv, &pivot_row[j - 1].1)?)
        };
        if !a.is_zero(&v) {
            out.push((col, v));
        }
    }
    Some(out)
}

/// Rank of the matrix with the given sorted sparse rows; `None` if the
/// arithmetic overflowed.
pub(crate) fn eliminate<A: Arith>(
    a: &A,
    rows: Vec<Vec<(usize, A::T)>>,
    n_cols: usize,
) -> Option<usize>
where
    A::T: From<u8>,
{
    let zero = A::T::from(0u8);
    let mut rows: Vec<Vec<(usize, A::T)>> = rows;
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n_cols];
    // Active rows keyed by (length, index).
    let mut active: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            continue;
        }
        for (c, _) in row {
            col_rows[*c].insert(r);
        }
        active.insert((row.len(), r));
    }

    let mut rank = 0;
    while let Some((_, pr)) = active.pop_first() {
        let pivot_row = std::mem::take(&mut rows[pr]);
        let &(pc, ref pv) = pivot_row
            .iter()
            .min_by_key(|(c, _)| (col_rows[*c].len(), *c))
            .expect("active rows are nonempty");
        let pv = pv.clone();
        for (c, _) in &pivot_row {
            col_rows[*c].remove(&pr);
        }
        rank += 1;

        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for r in targets {
            let old = std::mem::take(&mut rows[r]);
            active.remove(&(old.len(), r));
            let rv = old
                .iter()
                .find(|(c, _)| *c == pc)
                .map(|(_, v)| v.clone())
                .expect("column index is consistent");
            let mut new = combine(a, &old, &pivot_row, &pv, &rv, &zero)?;
            a.normalize(&mut new)?;
            for (c, _) in &old {
                col_rows[*c].remove(&r);
            }
            for (c, _) in &new {
                col_rows[*c].insert(r);
            }
            if !new.is_empty() {
                active.insert((new.len(), r));
            }
            rows[r] = new;
        }
    }
    Some(rank)
}
