//! Generators and basis monomials of the models.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::series::superscript;

/// `B` is free on all generators; `A = B / (sp, p²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    A,
    B,
}

/// Generators, in the order used for canonical words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A(u32),
    B(u32),
    S1,
    P,
    Sp,
    Sa(u32),
    Sb(u32),
}

/// `(deg₁, deg₂, deg₃)`.
pub type TriDegree = (u32, u32, u32);

impl Generator {
    pub fn degree(self) -> TriDegree {
        match self {
            Generator::A(_) | Generator::B(_) => (1, 0, 1),
            Generator::P => (2, 0, 1),
            Generator::S1 => (0, 1, 2),
            Generator::Sp => (2, 1, 2),
            Generator::Sa(_) | Generator::Sb(_) => (1, 1, 2),
        }
    }

    /// Parity of the total degree `deg₁ + deg₂`.
    pub fn is_odd(self) -> bool {
        let (d1, d2, _) = self.degree();
        (d1 + d2) % 2 == 1
    }

    pub fn all(genus: u32, model: Model) -> Vec<Generator> {
        let mut out: Vec<Generator> = (0..genus).map(Generator::A).collect();
        out.extend((0..genus).map(Generator::B));
        out.push(Generator::S1);
        out.push(Generator::P);
        if model == Model::B {
            out.push(Generator::Sp);
        }
        out.extend((0..genus).map(Generator::Sa));
        out.extend((0..genus).map(Generator::Sb));
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A(i) => write!(f, "a{}", i + 1),
            Generator::B(i) => write!(f, "b{}", i + 1),
            Generator::S1 => write!(f, "s1"),
            Generator::P => write!(f, "p"),
            Generator::Sp => write!(f, "sp"),
            Generator::Sa(i) => write!(f, "sa{}", i + 1),
            Generator::Sb(i) => write!(f, "sb{}", i + 1),
        }
    }
}

/// A basis monomial. Bit `i` of `ext` is `a_{i+1}`, bit `g+i` is `b_{i+1}`;
/// `sym` holds the exponents of `sa₁…sa_g, sb₁…sb_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub ext: u64,
    pub s1: bool,
    pub p: u32,
    pub sp: bool,
    pub sym: Vec<u32>,
}

impl Monomial {
    pub fn one(genus: u32) -> Self {
        Monomial {
            ext: 0,
            s1: false,
            p: 0,
            sp: false,
            sym: vec![0; 2 * genus as usize],
        }
    }

    pub fn genus(&self) -> u32 {
        (self.sym.len() / 2) as u32
    }

    fn sym_total(&self) -> u32 {
        self.sym.iter().sum()
    }

    pub fn degree(&self) -> TriDegree {
        let e = self.ext.count_ones();
        let (s1, sp) = (u32::from(self.s1), u32::from(self.sp));
        let y = self.sym_total();
        (
            e + 2 * self.p + 2 * sp + y,
            s1 + sp + y,
            e + self.p + 2 * s1 + 2 * sp + 2 * y,
        )
    }

    /// `(deg₁, deg₂)`.
    pub fn bidegree(&self) -> (u32, u32) {
        let (d1, d2, _) = self.degree();
        (d1, d2)
    }

    /// Torus weight: `a_i, sa_i ↦ +e_i`, `b_i, sb_i ↦ −e_i`.
    pub fn weight(&self) -> Vec<i64> {
        let g = self.genus() as usize;
        (0..g)
            .map(|i| {
                let a = i64::from((self.ext >> i) & 1 == 1);
                let b = i64::from((self.ext >> (g + i)) & 1 == 1);
                a - b + i64::from(self.sym[i]) - i64::from(self.sym[g + i])
            })
            .collect()
    }

    /// Factors in canonical order, with multiplicity.
    pub fn factors(&self) -> Vec<(Generator, u32)> {
        let g = self.genus();
        let mut out = Vec::new();
        for i in 0..g {
            if (self.ext >> i) & 1 == 1 {
                out.push((Generator::A(i), 1));
            }
        }
        for i in 0..g {
            if (self.ext >> (g + i)) & 1 == 1 {
                out.push((Generator::B(i), 1));
            }
        }
        if self.s1 {
            out.push((Generator::S1, 1));
        }
        if self.p > 0 {
            out.push((Generator::P, self.p));
        }
        if self.sp {
            out.push((Generator::Sp, 1));
        }
        for i in 0..g {
            if self.sym[i as usize] > 0 {
                out.push((Generator::Sa(i), self.sym[i as usize]));
            }
        }
        for i in 0..g {
            if self.sym[(g + i) as usize] > 0 {
                out.push((Generator::Sb(i), self.sym[(g + i) as usize]));
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors();
        if factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = factors
            .iter()
            .map(|(gen, e)| {
                if *e == 1 {
                    gen.to_string()
                } else {
                    format!("{gen}{}", superscript(*e))
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// All monomials with `deg₃ ≤ n`, ordered by `(deg₃, deg₁, deg₂)` and then
/// lexicographically.
pub fn enumerate_basis(genus: u32, n: u32, model: Model) -> Vec<Monomial> {
    assert!(genus <= 31, "exterior part is stored in a 64-bit mask");
    let g = genus as usize;
    let mut out = Vec::new();
    let mut sym_choices = Vec::new();
    let max_sym = n / 2;
    let mut buf = vec![0u32; 2 * g];
    compositions_upto(&mut buf, 0, max_sym, &mut sym_choices);

    let p_max = match model {
        Model::A => 1,
        Model::B => n,
    };
    let sp_choices: &[bool] = match model {
        Model::A => &[false],
        Model::B => &[false, true],
    };
    for sym in &sym_choices {
        let y: u32 = sym.iter().sum();
        for sp in sp_choices {
            for s1 in [false, true] {
                let fixed = 2 * y + 2 * u32::from(*sp) + 2 * u32::from(s1);
                if fixed > n {
                    continue;
                }
                for ext in 0u64..(1u64 << (2 * g)) {
                    let e = ext.count_ones();
                    if fixed + e > n {
                        continue;
                    }
                    for p in 0..=p_max.min(n - fixed - e) {
                        out.push(Monomial {
                            ext,
                            s1,
                            p,
                            sp: *sp,
                            sym: sym.clone(),
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| {
        let (a1, a2, a3) = x.degree();
        let (b1, b2, b3) = y.degree();
        (a3, a1, a2).cmp(&(b3, b1, b2)).then_with(|| x.cmp(y))
    });
    out
}

/// Every exponent vector of the given length with total at most `budget`.
fn compositions_upto(buf: &mut Vec<u32>, pos: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
    if pos == buf.len() {
        out.push(buf.clone());
        return;
    }
    for e in 0..=budget {
        buf[pos] = e;
        compositions_upto(buf, pos + 1, budget - e, out);
    }
    buf[pos] = 0;
}
