//! Brute-force route: the filtered model `A = Λ(aᵢ, bᵢ, s1) ⊗ Q[p]/(p²) ⊗
//! Q[saᵢ, sbᵢ]` (and its parent `B`, which keeps `sp` and all powers of `p`)
//! restricted to `deg₃ ≤ n`, with cohomology computed by exact rank.
//!
//! The differential is bihomogeneous of bidegree `(+2, −1)` and preserves
//! the torus weight, so every rank is computed on a block of fixed
//! `(deg₁, deg₂, weight)`.

mod differential;
mod monomial;

use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use rayon::prelude::*;

pub use differential::differential;
pub use monomial::{enumerate_basis, Generator, Model, Monomial, TriDegree};

use crate::error::OracleError;
use crate::linalg::{rank, write_matrix_market, SparseIntMatrix};
use crate::qformula::MixedTable;
use crate::repr::{Character, CharacterEngine, WeightVector};

/// `(deg₁, deg₂, weight)`.
pub type BlockKey = (u32, u32, Vec<i64>);

/// Matrix of `d` from one block to the block at `(deg₁+2, deg₂−1)`.
/// Column `c` is the image of `cols[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    pub source: (u32, u32),
    pub target: (u32, u32),
    pub cols: Vec<Monomial>,
    pub rows: Vec<Monomial>,
    pub matrix: SparseIntMatrix,
}

/// Basis of `F_n` split into blocks.
#[derive(Clone, Debug)]
pub struct FilteredBasis {
    pub genus: u32,
    pub n: u32,
    pub model: Model,
    monomials: Vec<Monomial>,
    blocks: BTreeMap<BlockKey, Vec<usize>>,
}

impl FilteredBasis {
    pub fn new(genus: u32, n: u32, model: Model) -> Self {
        let monomials = enumerate_basis(genus, n, model);
        let mut blocks: BTreeMap<BlockKey, Vec<usize>> = BTreeMap::new();
        for (idx, m) in monomials.iter().enumerate() {
            let (d1, d2) = m.bidegree();
            blocks.entry((d1, d2, m.weight())).or_default().push(idx);
        }
        FilteredBasis {
            genus,
            n,
            model,
            monomials,
            blocks,
        }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn block_keys(&self) -> impl Iterator<Item = &BlockKey> {
        self.blocks.keys()
    }

    pub fn block(&self, key: &BlockKey) -> &[usize] {
        self.blocks.get(key).map_or(&[], Vec::as_slice)
    }

    pub fn target_key(key: &BlockKey) -> Option<BlockKey> {
        (key.1 >= 1).then(|| (key.0 + 2, key.1 - 1, key.2.clone()))
    }

    /// `d` restricted to one weight block.
    pub fn block_matrix(&self, key: &BlockKey) -> BlockMatrix {
        let cols = self.block(key);
        let tkey = Self::target_key(key);
        let rows = tkey.as_ref().map_or(&[][..], |t| self.block(t));
        self.matrix_between(key, cols, rows)
    }

    fn matrix_between(&self, key: &BlockKey, cols: &[usize], rows: &[usize]) -> BlockMatrix {
        let row_of: HashMap<&Monomial, usize> = rows
            .iter()
            .enumerate()
            .map(|(r, &idx)| (&self.monomials[idx], r))
            .collect();
        let mut matrix = SparseIntMatrix::zeros(rows.len(), cols.len());
        for (c, &idx) in cols.iter().enumerate() {
            for (m, v) in differential(&self.monomials[idx], self.model) {
                let r = *row_of.get(&m).unwrap_or_else(|| {
                    panic!("d({}) leaves the target block: {m}", self.monomials[idx])
                });
                matrix.add(r, c, v);
            }
        }
        BlockMatrix {
            source: (key.0, key.1),
            target: (key.0 + 2, key.1.saturating_sub(1)),
            cols: cols.iter().map(|&i| self.monomials[i].clone()).collect(),
            rows: rows.iter().map(|&i| self.monomials[i].clone()).collect(),
            matrix,
        }
    }

    /// `d` on a whole bidegree, all weights together.
    pub fn differential_block(&self, bidegree: (u32, u32)) -> BlockMatrix {
        let gather = |d: (u32, u32)| -> Vec<usize> {
            let mut v: Vec<usize> = self
                .blocks
                .iter()
                .filter(|(k, _)| (k.0, k.1) == d)
                .flat_map(|(_, idx)| idx.iter().copied())
                .collect();
            v.sort_unstable();
            v
        };
        let cols = gather(bidegree);
        let rows = if bidegree.1 >= 1 {
            gather((bidegree.0 + 2, bidegree.1 - 1))
        } else {
            Vec::new()
        };
        self.matrix_between(&(bidegree.0, bidegree.1, Vec::new()), &cols, &rows)
    }

    /// Rank of `d` out of every block, computed in parallel.
    pub fn ranks(&self) -> BTreeMap<BlockKey, usize> {
        let keys: Vec<&BlockKey> = self.blocks.keys().collect();
        keys.par_iter()
            .map(|key| {
                let m = self.block_matrix(key);
                ((*key).clone(), rank(&m.matrix))
            })
            .collect()
    }

    /// Cohomology dimension of every block.
    pub fn cohomology_by_block(&self) -> BTreeMap<BlockKey, usize> {
        let ranks = self.ranks();
        let mut out = BTreeMap::new();
        for (key, idx) in &self.blocks {
            let out_rank = ranks[key];
            let in_rank = if key.0 >= 2 {
                ranks
                    .get(&(key.0 - 2, key.1 + 1, key.2.clone()))
                    .copied()
                    .unwrap_or(0)
            } else {
                0
            };
            let h = idx.len() - out_rank - in_rank;
            if h > 0 {
                out.insert(key.clone(), h);
            }
        }
        out
    }

    /// Writes every nonempty weight block as Matrix Market files into `dir`.
    pub fn dump_blocks(&self, dir: &Path) -> Result<usize, OracleError> {
        std::fs::create_dir_all(dir)?;
        let mut written = 0;
        for key in self.blocks.keys() {
            let m = self.block_matrix(key);
            if m.matrix.n_rows() == 0 {
                continue;
            }
            let w: Vec<String> = key.2.iter().map(ToString::to_string).collect();
            let name = format!(
                "g{}_n{}_{:?}_d{}_{}_w{}.mtx",
                self.genus,
                self.n,
                self.model,
                key.0,
                key.1,
                w.join("_")
            );
            write_matrix_market(&m.matrix, BufWriter::new(File::create(dir.join(name))?))?;
            written += 1;
        }
        Ok(written)
    }
}

fn check_supported(genus: u32, n: u32) -> Result<(), OracleError> {
    if genus == 0 && n == 1 {
        Err(OracleError::Genus0N1Unsupported)
    } else {
        Ok(())
    }
}

/// `dim H^{deg₁, deg₂}(F_n)`, nonzero entries only.
pub fn cohomology_dims(
    genus: u32,
    n: u32,
    model: Model,
) -> Result<BTreeMap<(u32, u32), u64>, OracleError> {
    check_supported(genus, n)?;
    let basis = FilteredBasis::new(genus, n, model);
    let mut out: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for ((d1, d2, _), h) in basis.cohomology_by_block() {
        *out.entry((d1, d2)).or_insert(0) += h as u64;
    }
    Ok(out)
}

/// Oracle dimensions regraded to `(k, h) = (deg₁+deg₂, deg₁+2deg₂)`.
pub fn cohomology_degree_weight_dims(
    genus: u32,
    n: u32,
    model: Model,
) -> Result<BTreeMap<(u32, u32), u64>, OracleError> {
    Ok(cohomology_dims(genus, n, model)?
        .into_iter()
        .map(|((d1, d2), h)| ((d1 + d2, d1 + 2 * d2), h))
        .collect())
}

/// Torus character of every nonzero cohomology bidegree of `F_nA`.
pub fn cohomology_weights(
    genus: u32,
    n: u32,
) -> Result<BTreeMap<(u32, u32), Character>, OracleError> {
    check_supported(genus, n)?;
    let basis = FilteredBasis::new(genus, n, Model::A);
    let mut out: BTreeMap<(u32, u32), Character> = BTreeMap::new();
    for ((d1, d2, w), h) in basis.cohomology_by_block() {
        out.entry((d1, d2))
            .or_insert_with(|| Character::empty(genus))
            .add(WeightVector::new(w), h as u64)?;
    }
    Ok(out)
}

/// Decomposition of `H(F_nA)` into irreducibles, by character peeling.
pub fn cohomology_reps(
    genus: u32,
    n: u32,
    engine: &CharacterEngine,
) -> Result<MixedTable, OracleError> {
    let mut table = MixedTable::new(genus, n);
    for ((d1, d2), ch) in cohomology_weights(genus, n)? {
        let rep = engine.peel_character(&ch)?;
        table.add(d1 + d2, d1 + 2 * d2, &rep);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_one_point() {
        let dims = cohomology_dims(1, 1, Model::A).unwrap();
        assert_eq!(dims, BTreeMap::from([((0, 0), 1), ((1, 0), 2), ((2, 0), 1)]));
        let w = cohomology_weights(1, 1).unwrap();
        let ch = &w[&(1, 0)];
        assert_eq!(ch.get(&WeightVector::new(vec![1])), 1);
        assert_eq!(ch.get(&WeightVector::new(vec![-1])), 1);
    }

    #[test]
    fn sphere() {
        let dims = cohomology_dims(0, 3, Model::A).unwrap();
        assert_eq!(dims, BTreeMap::from([((0, 0), 1), ((2, 1), 1)]));
        assert_eq!(cohomology_dims(0, 1, Model::A), Err(OracleError::Genus0N1Unsupported));
    }

    #[test]
    fn block_shape() {
        let basis = FilteredBasis::new(1, 2, Model::A);
        let b = basis.differential_block((0, 1));
        assert_eq!(b.target, (2, 0));
        assert_eq!(b.cols.len(), 1);
        assert_eq!(b.cols[0].to_string(), "s1");
        let names: Vec<String> = b.rows.iter().map(ToString::to_string).collect();
        assert_eq!(names, vec!["p", "a1·b1"]);
        assert_eq!(b.matrix.to_dense(), vec![vec![1], vec![-1]]);
    }
}
