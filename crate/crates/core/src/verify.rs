//! Closed form against oracle, table by table.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::dga::{cohomology_degree_weight_dims, cohomology_reps, Model};
use crate::error::VerifyError;
use crate::qformula::mixed_tables;
use crate::repr::CharacterEngine;

/// One disagreeing `(n, k, h)` cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u32,
    pub k: u32,
    pub h: u32,
    pub formula: String,
    pub oracle: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} (k,h)=({},{}): formula {}, oracle {}",
            self.n, self.k, self.h, self.formula, self.oracle
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub genus: u32,
    pub checked: Vec<u32>,
    pub skipped: Vec<u32>,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares dimensions for every `n ≤ max_n` and, with `reps`, the
/// decompositions too. `UConf_1(S²)` is outside the oracle's range and is
/// skipped.
pub fn verify(
    genus: u32,
    max_n: u32,
    reps: bool,
    engine: &CharacterEngine,
) -> Result<VerifyReport, VerifyError> {
    let tables = mixed_tables(genus, max_n)?;
    let mut report = VerifyReport {
        genus,
        ..VerifyReport::default()
    };
    for table in &tables {
        let n = table.n;
        if genus == 0 && n == 1 {
            report.skipped.push(n);
            continue;
        }
        log::info!("verify: genus {genus}, n = {n}");
        let formula = table.dims()?;
        let oracle = cohomology_degree_weight_dims(genus, n, Model::A)?;
        let keys: BTreeSet<(u32, u32)> = formula.keys().chain(oracle.keys()).copied().collect();
        for (k, h) in keys {
            let f = formula.get(&(k, h)).cloned().unwrap_or_default();
            let o = BigInt::from(oracle.get(&(k, h)).copied().unwrap_or(0));
            if f != o {
                report.mismatches.push(Mismatch {
                    n,
                    k,
                    h,
                    formula: f.to_string(),
                    oracle: o.to_string(),
                });
            }
        }
        if reps && genus >= 1 {
            let peeled = cohomology_reps(genus, n, engine)?;
            let keys: BTreeSet<(u32, u32)> = table
                .entries()
                .keys()
                .chain(peeled.entries().keys())
                .copied()
                .collect();
            for (k, h) in keys {
                let (f, o) = (table.get(k, h), peeled.get(k, h));
                if f != o {
                    report.mismatches.push(Mismatch {
                        n,
                        k,
                        h,
                        formula: f.to_string(),
                        oracle: o.to_string(),
                    });
                }
            }
        }
        report.checked.push(n);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_agree() {
        let e = CharacterEngine::default();
        let r = verify(1, 4, true, &e).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.checked, vec![0, 1, 2, 3, 4]);
        let r0 = verify(0, 5, false, &e).unwrap();
        assert!(r0.passed(), "{:?}", r0.mismatches);
        assert_eq!(r0.skipped, vec![1]);
    }
}
