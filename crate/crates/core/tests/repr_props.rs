use confcoh::repr::{
    binomial, branching_hook, dim_irrep, ext_sym_decomp, label_dim, sl_hook_dim,
    tensor_std_sym_decomp, weyl_dim, Character, CharacterEngine, RepLabel, VirtualRep,
};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn closed_form_dimension_matches_weyl() {
    for g in 1..=6u32 {
        for i in 0..=40i64 {
            for j in 1..=i64::from(g) {
                let label = RepLabel::new(g, i, j);
                assert_eq!(
                    dim_irrep(g, label).unwrap(),
                    weyl_dim(g, &label.highest_weight(g).unwrap()).unwrap(),
                    "g={g} i={i} j={j}"
                );
            }
        }
    }
}

#[test]
fn sl_binomial_identity() {
    for g in 1..=6i64 {
        for i in 0..=20i64 {
            for j in 1..=2 * g {
                let lhs = binomial(i + j - 1, i) * binomial(i + 2 * g, i + j)
                    + binomial(i + j - 1, i - 1) * binomial(i + 2 * g - 1, i + j);
                let rhs = binomial(2 * g, j) * binomial(i + 2 * g - 1, i);
                assert_eq!(lhs, rhs, "g={g} i={i} j={j}");
            }
        }
    }
}

#[test]
fn branching_and_tensor_dimensions() {
    for g in 1..=4u32 {
        for i in 0..=15u32 {
            for j in 1..=2 * g {
                let r = branching_hook(g, i, j).unwrap();
                assert!(r.is_nonnegative());
                assert_eq!(
                    r.dim(g).unwrap(),
                    BigInt::from(sl_hook_dim(g, i, j).unwrap()),
                    "branching g={g} i={i} j={j}"
                );
            }
            for j in 1..=g {
                if i == 0 {
                    continue;
                }
                let (gi, ii, ji) = (i64::from(g), i64::from(i), i64::from(j));
                let fundamental = BigInt::from(binomial(2 * gi, ji)) - BigInt::from(binomial(2 * gi, ji - 2));
                let want = fundamental * BigInt::from(binomial(2 * gi + ii - 1, ii));
                assert_eq!(tensor_std_sym_decomp(g, i, j).unwrap().dim(g).unwrap(), want);
            }
        }
    }
}

#[test]
fn exterior_symmetric_products_split_into_two_hooks() {
    for g in 1..=3u32 {
        for i in 1..=8u32 {
            for j in 1..2 * g {
                let lhs = ext_sym_decomp(g, j, i).unwrap();
                let rhs = &branching_hook(g, i, j).unwrap() + &branching_hook(g, i - 1, j + 1).unwrap();
                assert_eq!(lhs, rhs, "g={g} i={i} j={j}");
            }
        }
    }
}

#[test]
fn peeling_inverts_characters_of_irreducibles() {
    let engine = CharacterEngine::default();
    for g in 1..=3u32 {
        for j in 0..=g {
            for i in 0..=60u32 {
                let label = RepLabel::new(g, i64::from(i), i64::from(j));
                if label.is_zero() || label_dim(g, label).unwrap() > 10_000u32.into() {
                    continue;
                }
                let ch = engine.irreducible_character(g, label).unwrap();
                assert!(ch.is_weyl_invariant());
                assert_eq!(BigInt::from(ch.mass()), BigInt::from(label_dim(g, label).unwrap()));
                assert_eq!(engine.peel_character(&ch).unwrap(), VirtualRep::from_label(label));
            }
        }
    }
}

fn genus_and_rep() -> impl Strategy<Value = (u32, VirtualRep)> {
    (1u32..=3).prop_flat_map(|g| {
        prop::collection::vec((0i64..5, 0i64..=i64::from(g), 1u32..4), 0..5).prop_map(move |terms| {
            let rep = VirtualRep::from_terms(
                terms.into_iter().map(|(i, j, c)| (RepLabel::new(g, i, j), c)),
            );
            (g, rep)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn peeling_inverts_sums((g, rep) in genus_and_rep()) {
        let engine = CharacterEngine::default();
        let ch = Character::of_virtual_rep(&engine, g, &rep).unwrap();
        prop_assert_eq!(BigInt::from(ch.mass()), rep.dim(g).unwrap());
        prop_assert_eq!(engine.peel_character(&ch).unwrap(), rep);
    }
}
