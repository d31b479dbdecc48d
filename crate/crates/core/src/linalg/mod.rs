//! Exact rank of sparse integer matrices.
//!
//! [`rank`] runs fraction-free Gaussian elimination on sparse rows, picking
//! pivots Markowitz-style (shortest row, then sparsest column, ties to the
//! lowest index) and dividing every updated row by its content. It first
//! runs on `i64` with checked arithmetic and restarts over big integers if
//! anything overflows. [`rank_dense_bareiss`] is the small-matrix reference.

mod eliminate;
mod market;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use market::{read_matrix_market, write_matrix_market, MarketError};

use eliminate::{eliminate, BigArith, I64Arith, ModArith};

/// Sparse integer matrix; no explicit zeros, no repeated positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseIntMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseIntMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        SparseIntMatrix {
            n_rows,
            n_cols,
            entries: BTreeMap::new(),
        }
    }

    /// Sums repeated positions and drops zeros.
    ///
    /// # Panics
    /// If a position lies outside the shape or a sum overflows.
    pub fn from_triplets(
        n_rows: usize,
        n_cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for (r, c, v) in triplets {
            m.add(r, c, v);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let n_cols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            rows.len(),
            n_cols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                row.iter().enumerate().map(move |(c, &v)| (r, c, v))
            }),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, 1)))
    }

    /// Adds `v` at `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.n_rows && c < self.n_cols, "entry ({r}, {c}) out of bounds");
        if v == 0 {
            return;
        }
        let e = self.entries.entry((r, c)).or_insert(0);
        *e = e.checked_add(v).expect("matrix entry overflow");
        if *e == 0 {
            self.entries.remove(&(r, c));
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries.get(&(r, c)).copied().unwrap_or(0)
    }

    /// `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.n_cols,
            self.n_rows,
            self.triplets().map(|(r, c, v)| (c, r, v)),
        )
    }

    /// `self · other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &SparseIntMatrix) -> Option<SparseIntMatrix> {
        assert_eq!(self.n_cols, other.n_rows, "shape mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
        for (r, c, v) in other.triplets() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, k, a) in self.triplets() {
            for &(c, b) in by_row.get(&k).into_iter().flatten() {
                let e = acc.entry((r, c)).or_insert(0);
                *e = e.checked_add(a.checked_mul(b)?)?;
            }
        }
        Some(Self::from_triplets(
            self.n_rows,
            other.n_cols,
            acc.into_iter().map(|((r, c), v)| (r, c, v)),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn rows<T>(&self, conv: impl Fn(i64) -> T) -> Vec<Vec<(usize, T)>> {
        let mut rows: Vec<Vec<(usize, T)>> = (0..self.n_rows).map(|_| Vec::new()).collect();
        for (r, c, v) in self.triplets() {
            rows[r].push((c, conv(v)));
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.n_cols]; self.n_rows];
        for (r, c, v) in self.triplets() {
            d[r][c] = v;
        }
        d
    }
}

/// Exact rank over the rationals.
pub fn rank(m: &SparseIntMatrix) -> usize {
    // Eliminate along the shorter side.
    let m = if m.n_cols < m.n_rows {
        std::borrow::Cow::Owned(m.transpose())
    } else {
        std::borrow::Cow::Borrowed(m)
    };
    if m.is_zero() {
        return 0;
    }
    if let Some(r) = eliminate(&I64Arith, m.rows(|v| v), m.n_cols) {
        return r;
    }
    log::debug!(
        "rank: i64 overflow on a {}x{} matrix, restarting with big integers",
        m.n_rows,
        m.n_cols
    );
    eliminate(&BigArith, m.rows(BigInt::from), m.n_cols).expect("big-integer elimination is total")
}

/// `n_cols − rank`.
pub fn kernel_dim(m: &SparseIntMatrix) -> usize {
    m.n_cols - rank(m)
}

/// Rank modulo a prime `p < 2³²`; never exceeds the rational rank.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    assert!((2..(1 << 32)).contains(&p), "modulus must fit in 32 bits");
    let arith = ModArith { p };
    let rows = m.rows(|v| v.rem_euclid(p as i64) as u64);
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().filter(|(_, v)| *v != 0).collect())
        .collect();
    eliminate(&arith, rows, m.n_cols).expect("modular elimination is total")
}

/// Dense fraction-free (Bareiss) elimination over big integers.
pub fn rank_dense_bareiss(m: &SparseIntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let (n_rows, n_cols) = (m.n_rows, m.n_cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..n_rows {
            for j in c + 1..n_cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}
