//! Structural checks on the filtered models: d² = 0, bidegree, basis
//! counts, equivariance and the acyclicity of the ideal (sp, p²).

use std::collections::BTreeMap;

use confcoh::dga::{
    cohomology_dims, differential, enumerate_basis, FilteredBasis, Model,
};

/// Truncated power-series product.
fn mul(a: &[i64], b: &[i64], len: usize) -> Vec<i64> {
    let mut out = vec![0; len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn pow(a: &[i64], e: u32, len: usize) -> Vec<i64> {
    let mut out = vec![0; len];
    out[0] = 1;
    for _ in 0..e {
        out = mul(&out, a, len);
    }
    out
}

/// Coefficients of the generating function of monomials by `deg₃`.
fn basis_series(genus: u32, model: Model, len: usize) -> Vec<i64> {
    let one_plus_t = [1, 1];
    let one_plus_t2 = [1, 0, 1];
    let geo1: Vec<i64> = vec![1; len];
    let geo2: Vec<i64> = (0..len).map(|k| i64::from(k % 2 == 0)).collect();
    let mut k = pow(&one_plus_t, 2 * genus, len);
    k = mul(&k, &pow(&geo2, 2 * genus, len), len);
    match model {
        Model::B => {
            k = mul(&k, &pow(&one_plus_t2, 2, len), len);
            mul(&k, &geo1, len)
        }
        Model::A => {
            k = mul(&k, &one_plus_t2, len);
            mul(&k, &one_plus_t, len)
        }
    }
}

#[test]
fn basis_counts_match_generating_functions() {
    for genus in 0..=3 {
        for model in [Model::A, Model::B] {
            let len = 9;
            let k = basis_series(genus, model, len);
            for n in 0..len {
                let want: i64 = k[..=n].iter().sum();
                let got = enumerate_basis(genus, n as u32, model).len() as i64;
                assert_eq!(got, want, "g={genus} n={n} {model:?}");
            }
        }
    }
    assert_eq!(enumerate_basis(1, 1, Model::A).len(), 4);
    assert_eq!(enumerate_basis(0, 2, Model::A).len(), 3);
}

#[test]
fn d_squared_vanishes_and_shifts_bidegree() {
    for (genus, n) in [(0, 6), (1, 7), (2, 5), (3, 4)] {
        for model in [Model::A, Model::B] {
            for m in enumerate_basis(genus, n, model) {
                let (d1, d2) = m.bidegree();
                let mut dd: BTreeMap<_, i64> = BTreeMap::new();
                for (x, c) in differential(&m, model) {
                    assert_eq!(x.bidegree(), (d1 + 2, d2 - 1), "d({m}) ∋ {x}");
                    assert!(x.degree().2 <= m.degree().2, "d({m}) leaves F_n");
                    assert_eq!(x.weight(), m.weight(), "d({m}) changes weight");
                    for (y, e) in differential(&x, model) {
                        *dd.entry(y).or_insert(0) += c * e;
                    }
                }
                assert!(dd.values().all(|v| *v == 0), "d²({m}) ≠ 0 in {model:?}");
            }
        }
    }
}

#[test]
fn consecutive_blocks_compose_to_zero() {
    let basis = FilteredBasis::new(2, 5, Model::A);
    let keys: Vec<_> = basis.block_keys().cloned().collect();
    for key in keys {
        let first = basis.block_matrix(&key);
        let Some(next) = FilteredBasis::target_key(&key) else {
            continue;
        };
        let second = basis.block_matrix(&next);
        if first.matrix.n_rows() == 0 || second.matrix.n_rows() == 0 {
            continue;
        }
        assert!(second.matrix.checked_mul(&first.matrix).unwrap().is_zero());
    }
}

#[test]
fn ideal_is_acyclic() {
    for genus in 0..=2 {
        for n in 0..=6 {
            if genus == 0 && n == 1 {
                continue;
            }
            assert_eq!(
                cohomology_dims(genus, n, Model::A).unwrap(),
                cohomology_dims(genus, n, Model::B).unwrap(),
                "g={genus} n={n}"
            );
        }
    }
}

#[test]
fn euler_characteristic_of_chains() {
    for (genus, n) in [(1, 6), (2, 5), (3, 4)] {
        let basis = FilteredBasis::new(genus, n, Model::A);
        let chains: i64 = basis
            .monomials()
            .iter()
            .map(|m| {
                let (d1, d2) = m.bidegree();
                if (d1 + d2) % 2 == 0 { 1 } else { -1 }
            })
            .sum();
        let homology: i64 = cohomology_dims(genus, n, Model::A)
            .unwrap()
            .iter()
            .map(|((d1, d2), h)| if (d1 + d2) % 2 == 0 { *h as i64 } else { -(*h as i64) })
            .sum();
        assert_eq!(chains, homology, "g={genus} n={n}");
    }
}

#[test]
fn s1_column() {
    let basis = FilteredBasis::new(1, 2, Model::A);
    let block = basis.differential_block((0, 1));
    let col: BTreeMap<String, i64> = block
        .rows
        .iter()
        .enumerate()
        .map(|(r, m)| (m.to_string(), block.matrix.get(r, 0)))
        .collect();
    assert_eq!(col, BTreeMap::from([("p".to_string(), 1), ("a1·b1".to_string(), -1)]));
}

#[test]
fn matrix_market_dump() {
    let dir = tempdir();
    let basis = FilteredBasis::new(1, 3, Model::A);
    let written = basis.dump_blocks(&dir).unwrap();
    assert!(written > 0);
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(files.len(), written);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("confcoh-dump-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}
