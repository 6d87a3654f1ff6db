use std::collections::{HashMap, VecDeque};

use num_traits::ToPrimitive;

use super::{int_mat_mul, Family, RootSystem, WeylElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::num::int;

/// Default enumeration bound, overridable through `SPINWEYL_MAX_GROUP_ORDER`.
pub fn default_group_bound() -> u128 {
    std::env::var("SPINWEYL_MAX_GROUP_ORDER")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(1_000_000)
}

/// Order of the Weyl group from the classical formulas.
pub fn weyl_group_order(family: Family, n: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

/// The lexicographically least reduced word of the element with the given
/// simple-root matrix, found by repeatedly stripping the smallest left descent.
pub fn canonical_word(rs: &RootSystem, matrix: &[i64]) -> Vec<usize> {
    let n = rs.rank;
    let g = rs.simple_gram();
    let ginv = linalg::inverse(&g).expect("nondegenerate");
    let simple: Vec<Vec<i64>> = (0..n).map(|i| rs.reflection_matrix(i)).collect();
    let mut m = matrix.to_vec();
    let mut word = Vec::new();
    loop {
        // w⁻¹ = G⁻¹ Mᵀ G
        let mt: linalg::RMatrix = (0..n).map(|i| (0..n).map(|j| int(m[j * n + i])).collect()).collect();
        let inv = linalg::mat_mul(&linalg::mat_mul(&ginv, &mt), &g);
        // s_i is a left descent iff w⁻¹(α_i) < 0, i.e. column i of w⁻¹ is negative
        let descent = (0..n).find(|&i| (0..n).any(|k| inv[k][i] < num_traits::Zero::zero()));
        match descent {
            None => break,
            Some(i) => {
                word.push(i);
                m = int_mat_mul(n, &simple[i], &m);
            }
        }
        debug_assert!(word.len() <= rs.num_positive());
    }
    word
}

/// The Weyl group enumerated as integer matrices in simple-root coordinates.
/// Elements are sorted by (length, canonical word); element 0 is the identity.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub rank: usize,
    matrices: Vec<i8>,
    index: HashMap<Vec<i8>, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    lengths: Vec<u16>,
    words: Vec<Vec<u8>>,
    inverses: Vec<u32>,
}

pub fn generate_weyl_group(rs: &RootSystem, bound: u128) -> Result<WeylGroup> {
    let order = weyl_group_order(rs.family, rs.rank);
    if order > bound {
        return Err(Error::BoundExceeded { order, bound });
    }
    let n = rs.rank;
    let nn = n * n;
    let gens: Vec<Vec<i64>> = (0..n).map(|i| rs.reflection_matrix(i)).collect();
    let to_i8 = |m: &[i64]| m.iter().map(|&x| x as i8).collect::<Vec<i8>>();

    // breadth-first search by right multiplication
    let mut mats: Vec<Vec<i8>> = vec![to_i8(&WeylElement::identity(n).matrix)];
    let mut index: HashMap<Vec<i8>, u32> = HashMap::new();
    index.insert(mats[0].clone(), 0);
    let mut lengths = vec![0u16];
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        let mw: Vec<i64> = mats[w].iter().map(|&x| x as i64).collect();
        for g in &gens {
            let p = to_i8(&int_mat_mul(n, &mw, g));
            if !index.contains_key(&p) {
                let id = mats.len() as u32;
                index.insert(p.clone(), id);
                mats.push(p);
                lengths.push(lengths[w] + 1);
                queue.push_back(id as usize);
            }
        }
    }
    let size = mats.len();
    if size as u128 != order {
        return Err(Error::Usage(format!("enumeration produced {} elements, expected {}", size, order)));
    }
    let lookup = |m: Vec<i64>, index: &HashMap<Vec<i8>, u32>| index[&to_i8(&m)];
    let mut right = vec![0u32; size * n];
    let mut left = vec![0u32; size * n];
    for w in 0..size {
        let mw: Vec<i64> = mats[w].iter().map(|&x| x as i64).collect();
        for (s, g) in gens.iter().enumerate() {
            right[w * n + s] = lookup(int_mat_mul(n, &mw, g), &index);
            left[w * n + s] = lookup(int_mat_mul(n, g, &mw), &index);
        }
    }
    // canonical words in order of length
    let mut by_len: Vec<usize> = (0..size).collect();
    by_len.sort_by_key(|&w| lengths[w]);
    let mut words: Vec<Vec<u8>> = vec![vec![]; size];
    for &w in &by_len {
        if lengths[w] == 0 {
            continue;
        }
        let s = (0..n).find(|&s| lengths[left[w * n + s] as usize] < lengths[w]).unwrap();
        let mut word = vec![s as u8];
        word.extend_from_slice(&words[left[w * n + s] as usize]);
        words[w] = word;
    }
    // sort by (length, word) and relabel
    let mut perm: Vec<usize> = (0..size).collect();
    perm.sort_by(|&a, &b| lengths[a].cmp(&lengths[b]).then_with(|| words[a].cmp(&words[b])));
    let mut new_of = vec![0u32; size];
    for (new, &old) in perm.iter().enumerate() {
        new_of[old] = new as u32;
    }
    let relabel = |t: &[u32]| {
        let mut out = vec![0u32; size * n];
        for (new, &old) in perm.iter().enumerate() {
            for s in 0..n {
                out[new * n + s] = new_of[t[old * n + s] as usize];
            }
        }
        out
    };
    let right = relabel(&right);
    let left = relabel(&left);
    let mut matrices = Vec::with_capacity(size * nn);
    let mut new_index = HashMap::with_capacity(size);
    for (new, &old) in perm.iter().enumerate() {
        matrices.extend_from_slice(&mats[old]);
        new_index.insert(std::mem::take(&mut mats[old]), new as u32);
    }
    let lengths: Vec<u16> = perm.iter().map(|&o| lengths[o]).collect();
    let words: Vec<Vec<u8>> = perm.iter().map(|&o| std::mem::take(&mut words[o])).collect();
    let mut group = WeylGroup {
        rank: n,
        matrices,
        index: new_index,
        right,
        left,
        lengths,
        words,
        inverses: vec![],
    };
    group.inverses = (0..size)
        .map(|w| {
            let mut cur = 0u32;
            for &s in group.words[w].iter().rev() {
                cur = group.right[cur as usize * n + s as usize];
            }
            cur
        })
        .collect();
    Ok(group)
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn matrix(&self, w: usize) -> Vec<i64> {
        let nn = self.rank * self.rank;
        self.matrices[w * nn..(w + 1) * nn].iter().map(|&x| x as i64).collect()
    }

    pub fn element(&self, w: usize) -> WeylElement {
        WeylElement { rank: self.rank, matrix: self.matrix(w), word: self.word(w) }
    }

    pub fn index_of(&self, matrix: &[i64]) -> Option<usize> {
        let key: Vec<i8> = matrix.iter().map(|&x| x.to_i8().unwrap_or(i8::MAX)).collect();
        self.index.get(&key).map(|&i| i as usize)
    }

    pub fn word(&self, w: usize) -> Vec<usize> {
        self.words[w].iter().map(|&s| s as usize).collect()
    }

    pub fn word_u8(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w] as usize
    }

    /// `w·s`.
    pub fn right_mul(&self, w: usize, s: usize) -> usize {
        self.right[w * self.rank + s] as usize
    }

    /// `s·w`.
    pub fn left_mul(&self, s: usize, w: usize) -> usize {
        self.left[w * self.rank + s] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let mut cur = a;
        for &s in &self.words[b] {
            cur = self.right[cur * self.rank + s as usize] as usize;
        }
        cur
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverses[w] as usize
    }

    pub fn det(&self, w: usize) -> i64 {
        if self.lengths[w] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn trace(&self, w: usize) -> i64 {
        let n = self.rank;
        (0..n).map(|i| self.matrices[w * n * n + i * n + i] as i64).sum()
    }

    pub fn element_order(&self, w: usize) -> usize {
        let mut cur = w;
        let mut k = 1;
        while cur != 0 {
            cur = self.mul(cur, w);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn orders() {
        for (f, n, ord) in [(Family::A, 2, 6), (Family::B, 3, 48), (Family::F, 4, 1152), (Family::G, 2, 12)] {
            let rs = build_root_system(f, n).unwrap();
            let g = generate_weyl_group(&rs, 1 << 40).unwrap();
            assert_eq!(g.order(), ord);
        }
    }

    #[test]
    fn bound_refusal() {
        let rs = build_root_system(Family::E, 7).unwrap();
        assert!(matches!(generate_weyl_group(&rs, 1_000_000), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn words_lengths_and_tables() {
        let rs = build_root_system(Family::B, 3).unwrap();
        let g = generate_weyl_group(&rs, 1000).unwrap();
        for w in 0..g.order() {
            let e = g.element(w);
            assert_eq!(e.length(), e.inversions(&rs));
            assert_eq!(canonical_word(&rs, &e.matrix), e.word);
            assert_eq!(WeylElement::from_word(&rs, &e.word).matrix, e.matrix);
            assert_eq!(g.mul(w, g.inverse(w)), 0);
            // gram preservation in ambient coordinates
            let a = rs.ambient_matrix(&e.matrix);
            assert_eq!(linalg::mat_mul(&linalg::transpose(&a), &a), linalg::identity(3));
        }
        for a in (0..48).step_by(5) {
            for b in (0..48).step_by(7) {
                let m = int_mat_mul(3, &g.matrix(a), &g.matrix(b));
                assert_eq!(g.index_of(&m), Some(g.mul(a, b)));
            }
        }
    }
}
