use std::fmt;

/// A torus weight in `e₁ … e_g` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(entries: Vec<i64>) -> Self {
        WeightVector(entries)
    }

    pub fn zero(genus: u32) -> Self {
        WeightVector(vec![0; genus as usize])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn genus(&self) -> u32 {
        self.0.len() as u32
    }

    /// Weakly decreasing and nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_none_or(|&x| x >= 0)
    }

    /// The dominant element of the Weyl orbit (signed permutations).
    pub fn dominant_representative(&self) -> WeightVector {
        let mut v: Vec<i64> = self.0.iter().map(|x| x.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        WeightVector(v)
    }

    /// `⟨self, ρ⟩` with `ρ = (g, g−1, …, 1)`.
    pub fn rho_height(&self) -> i64 {
        let g = self.0.len() as i64;
        self.0
            .iter()
            .enumerate()
            .map(|(k, x)| x * (g - k as i64))
            .sum()
    }

    pub fn dot(&self, other: &WeightVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_scaled(&self, other: &WeightVector, k: i64) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    /// All signed permutations of this weight, deduplicated and sorted.
    pub fn weyl_orbit(&self) -> Vec<WeightVector> {
        let mut out = Vec::new();
        let mut abs: Vec<i64> = self.0.iter().map(|x| x.abs()).collect();
        abs.sort_unstable();
        let mut perms = Vec::new();
        permutations(&mut abs, 0, &mut perms);
        for p in perms {
            let nz: Vec<usize> = (0..p.len()).filter(|&k| p[k] != 0).collect();
            for mask in 0u64..(1u64 << nz.len()) {
                let mut v = p.clone();
                for (b, &k) in nz.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        v[k] = -v[k];
                    }
                }
                out.push(v);
            }
        }
        out.sort();
        out.dedup();
        out.into_iter().map(WeightVector).collect()
    }

    /// Positive roots of sp(2g): `e_k ± e_h` (k < h) and `2e_k`.
    pub fn positive_roots(genus: u32) -> Vec<WeightVector> {
        let g = genus as usize;
        let mut roots = Vec::new();
        for k in 0..g {
            for h in k + 1..g {
                let mut a = vec![0; g];
                a[k] = 1;
                a[h] = -1;
                roots.push(WeightVector(a.clone()));
                a[h] = 1;
                roots.push(WeightVector(a));
            }
            let mut a = vec![0; g];
            a[k] = 2;
            roots.push(WeightVector(a));
        }
        roots
    }

    /// `ρ = Σ (g+1−k) e_k`.
    pub fn rho(genus: u32) -> WeightVector {
        WeightVector((0..genus).map(|k| i64::from(genus - k)).collect())
    }
}

// Distinct permutations of a sorted multiset.
fn permutations(v: &mut Vec<i64>, start: usize, out: &mut Vec<Vec<i64>>) {
    if start == v.len() {
        out.push(v.clone());
        return;
    }
    let mut seen = Vec::new();
    for k in start..v.len() {
        if seen.contains(&v[k]) {
            continue;
        }
        seen.push(v[k]);
        v.swap(start, k);
        permutations(v, start + 1, out);
        v.swap(start, k);
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(WeightVector::new(vec![1, 0]).weyl_orbit().len(), 4);
        assert_eq!(WeightVector::new(vec![1, 1]).weyl_orbit().len(), 4);
        assert_eq!(WeightVector::new(vec![2, 1]).weyl_orbit().len(), 8);
        assert_eq!(WeightVector::new(vec![3, 2, 1]).weyl_orbit().len(), 48);
        assert_eq!(WeightVector::new(vec![0, 0, 0]).weyl_orbit().len(), 1);
    }

    #[test]
    fn dominance() {
        assert!(WeightVector::new(vec![2, 1, 1]).is_dominant());
        assert!(!WeightVector::new(vec![1, 2]).is_dominant());
        assert!(!WeightVector::new(vec![1, -1]).is_dominant());
        assert_eq!(
            WeightVector::new(vec![-1, 3]).dominant_representative(),
            WeightVector::new(vec![3, 1])
        );
    }

    #[test]
    fn root_count() {
        for g in 1..=5u32 {
            assert_eq!(WeightVector::positive_roots(g).len() as u32, g * g);
        }
    }
}
