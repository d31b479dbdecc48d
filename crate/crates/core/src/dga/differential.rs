//! The differential `d(s1) = p − Σ aᵢbᵢ`, `d(saᵢ) = aᵢp`, `d(sbᵢ) = bᵢp`,
//! `d(sp) = p²`, extended by the graded Leibniz rule.

use std::collections::BTreeMap;

use super::monomial::{Model, Monomial};

/// Odd generators as word letters: `aᵢ ↦ i`, `bᵢ ↦ g+i`, `s1 ↦ 2g`,
/// `sp ↦ 2g+1`. For `a` and `b` the letter is the bit index in `ext`.
fn odd_word(m: &Monomial) -> Vec<u32> {
    let g = m.genus();
    let mut w: Vec<u32> = (0..2 * g).filter(|&b| (m.ext >> b) & 1 == 1).collect();
    if m.s1 {
        w.push(2 * g);
    }
    if m.sp {
        w.push(2 * g + 1);
    }
    w
}

/// Sorts a word of odd letters; `None` if a letter repeats. Returns the
/// Koszul sign of the sorting permutation.
fn sort_word(word: &mut [u32]) -> Option<i64> {
    let mut sign = 1;
    // Insertion sort: every swap is one transposition.
    for i in 1..word.len() {
        let mut j = i;
        while j > 0 && word[j - 1] > word[j] {
            word.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && word[j - 1] == word[j] {
            return None;
        }
    }
    Some(sign)
}

/// `coef · word · p^p · sym` reduced to a basis monomial.
fn canonical(
    genus: u32,
    model: Model,
    coef: i64,
    mut word: Vec<u32>,
    p: u32,
    sym: Vec<u32>,
) -> Option<(Monomial, i64)> {
    if model == Model::A && p >= 2 {
        return None;
    }
    let sign = sort_word(&mut word)?;
    let mut m = Monomial {
        ext: 0,
        s1: false,
        p,
        sp: false,
        sym,
    };
    for letter in word {
        match letter {
            l if l < 2 * genus => m.ext |= 1 << l,
            l if l == 2 * genus => m.s1 = true,
            _ => m.sp = true,
        }
    }
    if model == Model::A && m.sp {
        return None;
    }
    Some((m, sign * coef))
}

/// `d(m)` as a combination of basis monomials, sorted and without zeros.
pub fn differential(m: &Monomial, model: Model) -> Vec<(Monomial, i64)> {
    let g = m.genus();
    let word = odd_word(m);
    let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
    let mut push = |t: Option<(Monomial, i64)>| {
        if let Some((mono, c)) = t {
            *acc.entry(mono).or_insert(0) += c;
        }
    };

    for (k, &letter) in word.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let rest: Vec<u32> = word[..k].iter().chain(&word[k + 1..]).copied().collect();
        if letter == 2 * g {
            // d(s1) = p − Σ aᵢbᵢ
            push(canonical(g, model, sign, rest.clone(), m.p + 1, m.sym.clone()));
            for i in 0..g {
                let mut w = word[..k].to_vec();
                w.extend([i, g + i]);
                w.extend(&word[k + 1..]);
                push(canonical(g, model, -sign, w, m.p, m.sym.clone()));
            }
        } else if letter == 2 * g + 1 {
            // d(sp) = p²
            push(canonical(g, model, sign, rest, m.p + 2, m.sym.clone()));
        }
    }

    // The even part sits after every odd letter.
    let tail_sign = if word.len().is_multiple_of(2) { 1 } else { -1 };
    for (v, &e) in m.sym.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let mut sym = m.sym.clone();
        sym[v] -= 1;
        // saᵢ ↦ aᵢp (letter i), sbᵢ ↦ bᵢp (letter g+i): the letter is v.
        let mut w = word.clone();
        w.push(v as u32);
        push(canonical(g, model, tail_sign * i64::from(e), w, m.p + 1, sym));
    }

    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(g: u32, ext: u64, s1: bool, p: u32, sym: &[u32]) -> Monomial {
        let mut m = Monomial::one(g);
        m.ext = ext;
        m.s1 = s1;
        m.p = p;
        m.sym = sym.to_vec();
        m
    }

    #[test]
    fn generator_images() {
        let s1 = mono(1, 0, true, 0, &[0, 0]);
        let d = differential(&s1, Model::A);
        assert_eq!(
            d,
            vec![(mono(1, 0, false, 1, &[0, 0]), 1), (mono(1, 0b11, false, 0, &[0, 0]), -1)]
        );
        let sa = mono(1, 0, false, 0, &[1, 0]);
        assert_eq!(differential(&sa, Model::A), vec![(mono(1, 0b01, false, 1, &[0, 0]), 1)]);
        let sa_p = mono(1, 0, false, 1, &[1, 0]);
        assert!(differential(&sa_p, Model::A).is_empty());
        assert_eq!(differential(&sa_p, Model::B).len(), 1);
    }

    #[test]
    fn koszul_signs() {
        // d(b1·s1) = −b1·p + b1·a1·b1 = −b1·p
        let m = mono(1, 0b10, true, 0, &[0, 0]);
        assert_eq!(differential(&m, Model::A), vec![(mono(1, 0b10, false, 1, &[0, 0]), -1)]);
        // d(b1·sa1) = −b1·a1·p = a1·b1·p
        let m = mono(1, 0b10, false, 0, &[1, 0]);
        assert_eq!(differential(&m, Model::A), vec![(mono(1, 0b11, false, 1, &[0, 0]), 1)]);
        let mut w = vec![2, 0, 1];
        assert_eq!(sort_word(&mut w), Some(1));
        assert_eq!(w, vec![0, 1, 2]);
        assert_eq!(sort_word(&mut [1, 0]), Some(-1));
        assert_eq!(sort_word(&mut [1, 0, 1]), None);
    }
}
