use confcoh::linalg::{
    kernel_dim, rank, rank_dense_bareiss, rank_mod_p, read_matrix_market, write_matrix_market,
    SparseIntMatrix,
};
use proptest::prelude::*;

fn sparse_matrix(max_dim: usize) -> impl Strategy<Value = SparseIntMatrix> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(|(r, c)| {
            let nnz = (r * c / 8).max(1);
            (
                Just(r),
                Just(c),
                prop::collection::vec((0..r, 0..c, -3i64..=3), 0..=nnz),
            )
        })
        .prop_map(|(r, c, t)| SparseIntMatrix::from_triplets(r, c, t))
}

/// `(r×k)·(k×c)`: rank at most `k`, with plenty of cancellation.
fn low_rank_matrix() -> impl Strategy<Value = SparseIntMatrix> {
    (1usize..50, 1usize..50, 1usize..6)
        .prop_flat_map(|(r, c, k)| {
            (
                prop::collection::vec((0..r, 0..k, -2i64..=2), 0..2 * r),
                prop::collection::vec((0..k, 0..c, -2i64..=2), 0..2 * c),
                Just((r, c, k)),
            )
        })
        .prop_map(|(a, b, (r, c, k))| {
            SparseIntMatrix::from_triplets(r, k, a)
                .checked_mul(&SparseIntMatrix::from_triplets(k, c, b))
                .expect("small entries")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sparse_rank_matches_dense_reference(m in sparse_matrix(60)) {
        let r = rank(&m);
        prop_assert_eq!(r, rank_dense_bareiss(&m));
        prop_assert_eq!(r, rank(&m.transpose()));
        prop_assert!(r <= m.n_rows().min(m.n_cols()));
        prop_assert_eq!(kernel_dim(&m), m.n_cols() - r);
        for p in [3u64, 65_521, 4_294_967_291] {
            prop_assert!(rank_mod_p(&m, p) <= r);
        }
    }

    #[test]
    fn low_rank_products(m in low_rank_matrix()) {
        prop_assert_eq!(rank(&m), rank_dense_bareiss(&m));
    }

    #[test]
    fn matrix_market_round_trip(m in sparse_matrix(30)) {
        let mut buf = Vec::new();
        write_matrix_market(&m, &mut buf).unwrap();
        prop_assert_eq!(read_matrix_market(buf.as_slice()).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn large_sparse_rank_matches_dense_reference(m in sparse_matrix(200)) {
        prop_assert_eq!(rank(&m), rank_dense_bareiss(&m));
    }
}
