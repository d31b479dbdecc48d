//! `UConf_n(S²)`.
//!
//! Rationally: a point for `n = 0`, the sphere for `n = 1`, `RP²` (hence
//! rationally a point) for `n = 2`, and a rational `S³` for `n ≥ 3`, the
//! degree-3 class having weight 4.

use num_bigint::BigUint;

use super::table::MixedTable;
use crate::repr::VirtualRep;

pub fn genus0_table(n: u32) -> MixedTable {
    let mut t = MixedTable::new(0, n);
    t.add(0, 0, &VirtualRep::trivial());
    match n {
        1 => t.add(2, 2, &VirtualRep::trivial()),
        3.. => t.add(3, 4, &VirtualRep::trivial()),
        _ => {}
    }
    t
}

pub fn genus0_betti(n: u32) -> Vec<BigUint> {
    let betti: &[u32] = match n {
        0 | 2 => &[1],
        1 => &[1, 0, 1],
        _ => &[1, 0, 0, 1],
    };
    betti.iter().map(|&b| b.into()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_betti_agree() {
        for n in 0..10 {
            assert_eq!(genus0_table(n).betti().unwrap(), genus0_betti(n));
            genus0_table(n).check().unwrap();
        }
    }
}
