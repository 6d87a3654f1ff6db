//! The spin double cover W̃ ⊂ Pin(V) as a concrete finite group, its split
//! classes, and the Casimir element Ω_{W̃,c}.

mod casimir;

pub use casimir::{casimir_element, casimir_scalar, CasimirElement};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::clifford::{lift_reflection, lift_word, orthogonalize, spin_character, CliffordElement, OrthoBasis};
use crate::error::{Error, Result};
use crate::grouprep::{Character, Classes, FiniteGroup};
use crate::num::{Cyclotomic, Rational};
use crate::rootsys::{generate_weyl_group, RootSystem, WeylGroup};

/// W̃ with elements indexed `2w + b`, standing for `z^b · lift(w)` where
/// `lift(w)` is the product of the `f_α` along the canonical word of `w`.
pub struct SpinCover {
    pub rs: RootSystem,
    pub weyl: WeylGroup,
    pub basis: OrthoBasis,
    /// `lift(w)·f_s = (−1)^{neg} lift(ws)`.
    right_neg: Vec<u8>,
    inverses: Vec<u32>,
    /// Cover element `s̃_β` for each positive root.
    root_elements: Vec<usize>,
}

/// Integer model of the Clifford algebra used to extract the cocycle signs:
/// a positively rescaled orthogonal basis with integer squares.
struct IntClifford {
    rank: usize,
    d: Vec<i128>,
    gens: Vec<Vec<i128>>,
}

impl IntClifford {
    fn new(rs: &RootSystem, basis: &OrthoBasis) -> IntClifford {
        let r = rs.rank;
        // e'_i = μ_i e_i with μ_i = denominator of d_i, so d'_i = μ_i² d_i ∈ Z
        let mu: Vec<BigInt> = basis.sq_norms.iter().map(|d| d.denom().clone()).collect();
        let d: Vec<i128> = basis
            .sq_norms
            .iter()
            .zip(&mu)
            .map(|(x, m)| (x * Rational::from_integer(m * m)).to_integer().to_i128().unwrap())
            .collect();
        let gens = (0..r)
            .map(|s| {
                let b: Vec<Rational> =
                    (0..r).map(|j| Rational::from_integer(((s == j) as i64).into())).collect();
                let c: Vec<Rational> = basis
                    .from_simple_coords(&b)
                    .into_iter()
                    .zip(&mu)
                    .map(|(x, m)| x / Rational::from_integer(m.clone()))
                    .collect();
                let l = c.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
                c.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer().to_i128().unwrap()).collect()
            })
            .collect();
        IntClifford { rank: r, d, gens }
    }

    /// `f_s · a` for a dense element `a`.
    fn left_gen(&self, s: usize, a: &[i128]) -> Vec<i128> {
        let mut out = vec![0i128; a.len()];
        for (mask, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for i in 0..self.rank {
                let v = self.gens[s][i];
                if v == 0 {
                    continue;
                }
                // e_i e_S: move e_i past the members of S below i
                let below = (mask as u32 & ((1u32 << i) - 1)).count_ones();
                let mut t = x * v;
                if below % 2 == 1 {
                    t = -t;
                }
                if mask >> i & 1 == 1 {
                    t *= -self.d[i];
                }
                out[mask ^ (1 << i)] += t;
            }
        }
        primitive(out)
    }

    /// Coefficient of `a · f_s` at one mask.
    fn right_gen_at(&self, a: &[i128], s: usize, target: usize) -> i128 {
        let mut acc = 0i128;
        for i in 0..self.rank {
            let v = self.gens[s][i];
            if v == 0 {
                continue;
            }
            let mask = target ^ (1 << i);
            let x = a[mask];
            if x == 0 {
                continue;
            }
            // e_S e_i: move e_i past the members of S above i
            let above = (mask as u32 >> (i + 1)).count_ones();
            let mut t = x * v;
            if above % 2 == 1 {
                t = -t;
            }
            if mask >> i & 1 == 1 {
                t *= -self.d[i];
            }
            acc += t;
        }
        acc
    }
}

fn primitive(mut v: Vec<i128>) -> Vec<i128> {
    let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
    v
}

pub fn build_spin_cover(rs: &RootSystem, bound: u128) -> Result<SpinCover> {
    let weyl = generate_weyl_group(rs, bound)?;
    let basis = orthogonalize(rs);
    let ic = IntClifford::new(rs, &basis);
    let r = rs.rank;
    let n = weyl.order();

    // canonical lifts, in order of length (element order is by length)
    let mut lifts: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut one = vec![0i64; 1 << r];
    one[0] = 1;
    lifts.push(one);
    for w in 1..n {
        let s = weyl.word_u8(w)[0] as usize;
        let rest = weyl.left_mul(s, w);
        let prev: Vec<i128> = lifts[rest].iter().map(|&x| x as i128).collect();
        let next = ic.left_gen(s, &prev);
        let stored: Option<Vec<i64>> = next.iter().map(|&x| x.to_i64()).collect();
        lifts.push(stored.ok_or_else(|| Error::Mismatch("lift coefficients overflow".into()))?);
    }
    let mut right_neg = vec![0u8; n * r];
    for w in 0..n {
        let a: Vec<i128> = lifts[w].iter().map(|&x| x as i128).collect();
        for s in 0..r {
            let ws = weyl.right_mul(w, s);
            let target = &lifts[ws];
            let m = target.iter().position(|&x| x != 0).unwrap();
            let c = ic.right_gen_at(&a, s, m);
            if c == 0 {
                return Err(Error::Mismatch("cocycle: lift(w)·f_s not proportional to lift(ws)".into()));
            }
            right_neg[w * r + s] = ((c < 0) != (target[m] < 0)) as u8;
        }
    }
    drop(lifts);

    let mut cover = SpinCover {
        rs: rs.clone(),
        weyl,
        basis,
        right_neg,
        inverses: vec![],
        root_elements: vec![],
    };
    // inverse of z^b f_{s_1}⋯f_{s_k} is z^{b+k} f_{s_k}⋯f_{s_1}
    cover.inverses = (0..2 * n)
        .map(|x| {
            let w = x / 2;
            let word = cover.weyl.word_u8(w).to_vec();
            let mut cur = 0usize;
            for &s in word.iter().rev() {
                cur = cover.mul_gen(cur, s as usize);
            }
            (cur ^ ((x & 1) ^ (word.len() & 1))) as u32
        })
        .collect();
    cover.root_elements = (0..rs.num_positive())
        .map(|b| {
            let w = cover.weyl.index_of(&rs.reflection_matrix(b)).expect("reflection in W");
            let lift = lift_word(rs, &cover.basis, &cover.weyl.word(w));
            let f = lift_reflection(rs, &cover.basis, b);
            match f.projective_sign(&lift) {
                Some(1) => Ok(2 * w),
                Some(_) => Ok(2 * w + 1),
                None => Err(Error::Mismatch(format!("f_β not proportional to the lift of s_β for root {}", b))),
            }
        })
        .collect::<Result<_>>()?;
    Ok(cover)
}

impl SpinCover {
    pub fn weyl_order(&self) -> usize {
        self.weyl.order()
    }

    /// The central element z.
    pub fn z(&self) -> usize {
        1
    }

    /// `x · s̃_s` for a simple reflection `s`.
    pub fn mul_gen(&self, x: usize, s: usize) -> usize {
        let w = x / 2;
        let r = self.rs.rank;
        2 * self.weyl.right_mul(w, s) + ((x & 1) ^ self.right_neg[w * r + s] as usize)
    }

    pub fn base(&self, x: usize) -> usize {
        x / 2
    }

    pub fn root_element(&self, root: usize) -> usize {
        self.root_elements[root]
    }

    /// Clifford element representing a cover element.
    pub fn clifford_lift(&self, x: usize) -> CliffordElement {
        let a = lift_word(&self.rs, &self.basis, &self.weyl.word(x / 2));
        if x & 1 == 1 {
            a.neg()
        } else {
            a
        }
    }

    /// Sign character `x ↦ det p(x)` on the classes of W̃.
    pub fn sign_character(&self, cl: &Classes) -> Character {
        cl.reps.iter().map(|&x| Cyclotomic::from_int(self.weyl.det(x / 2))).collect()
    }

    /// Character of the reflection representation pulled back to W̃.
    pub fn reflection_character(&self, cl: &Classes) -> Character {
        cl.reps.iter().map(|&x| Cyclotomic::from_int(self.weyl.trace(x / 2))).collect()
    }

    /// Spin-module characters on the classes of W̃: `[S]` for even rank,
    /// `[S⁺, S⁻]` for odd rank.
    pub fn spin_characters(&self, cl: &Classes) -> Result<Vec<Character>> {
        let mut cols: Vec<Vec<Cyclotomic>> = Vec::new();
        for &x in &cl.reps {
            let v = spin_character(&self.basis, &self.clifford_lift(x))?;
            cols.push(v.iter().map(|s| s.to_cyclotomic()).collect());
        }
        let k = cols.first().map_or(0, Vec::len);
        Ok((0..k).map(|m| cols.iter().map(|c| c[m].clone()).collect()).collect())
    }

    /// Whether the W-class of `w` splits into two W̃-classes.
    pub fn class_splits(&self, cl: &Classes, w: usize) -> bool {
        cl.class_of(2 * w) != cl.class_of(2 * w + 1)
    }

    /// Cover class lying over each W-class representative (the one
    /// containing the canonical lift).
    pub fn cover_class_of_weyl(&self, cl: &Classes, w: usize) -> usize {
        cl.class_of(2 * w)
    }

    /// Norm-free check of the presentation on simple generators:
    /// `s̃² = z` and `(s̃_i s̃_j)^{m_ij} = z` for `i ≠ j`.
    pub fn presentation_holds(&self) -> bool {
        let r = self.rs.rank;
        let gens: Vec<usize> = (0..r).map(|s| self.mul_gen(0, s)).collect();
        for i in 0..r {
            if self.mul(gens[i], gens[i]) != self.z() {
                return false;
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                let p = self.mul(gens[i], gens[j]);
                let m = self.weyl.element_order(p / 2);
                let mut q = 0;
                for _ in 0..m {
                    q = self.mul(q, p);
                }
                if q != self.z() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks that `(w, sign)` pairs agree with honest Clifford products on
    /// the given pairs.
    pub fn check_against_clifford(&self, pairs: &[(usize, usize)]) -> bool {
        pairs.iter().all(|&(a, b)| {
            let prod = self.basis.mul(&self.clifford_lift(a), &self.clifford_lift(b)).unwrap();
            let c = self.mul(a, b);
            prod.projective_sign(&self.clifford_lift(c)) == Some(1)
        })
    }
}

impl FiniteGroup for SpinCover {
    fn order(&self) -> usize {
        2 * self.weyl.order()
    }
    fn identity(&self) -> usize {
        0
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let mut cur = a ^ (b & 1);
        for &s in self.weyl.word_u8(b / 2) {
            cur = self.mul_gen(cur, s as usize);
        }
        cur
    }
    fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }
    fn generators(&self) -> Vec<usize> {
        (0..self.rs.rank).map(|s| self.mul_gen(0, s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family};

    fn cover(f: Family, n: usize) -> SpinCover {
        build_spin_cover(&build_root_system(f, n).unwrap(), 1 << 30).unwrap()
    }

    #[test]
    fn orders_and_presentation() {
        let a1 = cover(Family::A, 1);
        assert_eq!(FiniteGroup::order(&a1), 4);
        let s = a1.mul_gen(0, 0);
        assert_eq!(a1.mul(s, s), 1);
        assert_eq!(a1.mul(a1.mul(s, s), a1.mul(s, s)), 0);
        for (f, n, ord) in [(Family::G, 2, 24), (Family::F, 4, 2304), (Family::B, 3, 96)] {
            let c = cover(f, n);
            assert_eq!(FiniteGroup::order(&c), ord);
            assert!(c.presentation_holds());
        }
    }

    #[test]
    fn products_match_clifford() {
        for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::A, 3)] {
            let c = cover(f, n);
            let m = FiniteGroup::order(&c);
            let pairs: Vec<(usize, usize)> = (0..m).step_by(7).flat_map(|a| (0..m).step_by(11).map(move |b| (a, b))).collect();
            assert!(c.check_against_clifford(&pairs));
            for x in 0..m {
                assert_eq!(c.mul(x, c.inv(x)), 0);
                assert_eq!(c.mul(1, x), c.mul(x, 1));
            }
            // root lifts square to z
            for b in 0..c.rs.num_positive() {
                let e = c.root_element(b);
                assert_eq!(c.mul(e, e), 1);
            }
        }
    }

    #[test]
    fn split_classes() {
        let c = cover(Family::A, 2);
        let cl = Classes::new(&c);
        let w = c.weyl.mul(c.weyl.right_mul(0, 0), c.weyl.right_mul(0, 1));
        assert!(c.class_splits(&cl, w));
        // n-cycles in S_4
        let c4 = cover(Family::A, 3);
        let cl4 = Classes::new(&c4);
        let cyc = c4.weyl.index_of(&crate::rootsys::WeylElement::from_word(&c4.rs, &[0, 1, 2]).matrix).unwrap();
        assert!(c4.class_splits(&cl4, cyc));
    }
}
