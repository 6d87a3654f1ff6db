//! Clifford algebra of the root span over an orthogonal (unnormalized) basis,
//! Pin projections, reflection lifts and spin-module characters.

mod gamma;

pub use gamma::{spin_character, SpinCharacterValue};

use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, RMatrix};
use crate::num::{int, Rational};
use crate::rootsys::RootSystem;

/// Pairwise orthogonal basis `e_1..e_n` of the root span obtained by
/// Gram–Schmidt on the simple roots, without normalization.
#[derive(Clone, Debug)]
pub struct OrthoBasis {
    pub id: u64,
    /// Basis vectors in ambient coordinates.
    pub vectors: Vec<Vec<Rational>>,
    /// `d_i = ⟨e_i, e_i⟩`.
    pub sq_norms: Vec<Rational>,
    /// Column `j` holds the coordinates of `α_j` in the basis `e`.
    simple_in_basis: RMatrix,
    basis_in_simple: RMatrix,
}

pub fn orthogonalize(rs: &RootSystem) -> OrthoBasis {
    let mut vectors: Vec<Vec<Rational>> = Vec::new();
    let mut sq_norms: Vec<Rational> = Vec::new();
    for a in &rs.simple_roots {
        let mut v = a.clone();
        for (e, d) in vectors.iter().zip(&sq_norms) {
            let f = rs.inner(a, e) / d;
            for (x, y) in v.iter_mut().zip(e) {
                *x -= &f * y;
            }
        }
        sq_norms.push(rs.inner(&v, &v));
        vectors.push(v);
    }
    let n = rs.rank;
    let simple_in_basis: RMatrix = (0..n)
        .map(|i| (0..n).map(|j| rs.inner(&rs.simple_roots[j], &vectors[i]) / &sq_norms[i]).collect())
        .collect();
    let basis_in_simple = linalg::inverse(&simple_in_basis).expect("basis change is invertible");
    let mut h = std::collections::hash_map::DefaultHasher::new();
    for v in vectors.iter().chain(std::iter::once(&sq_norms)) {
        for x in v {
            x.hash(&mut h);
        }
    }
    rs.gram_scale.hash(&mut h);
    OrthoBasis { id: h.finish(), vectors, sq_norms, simple_in_basis, basis_in_simple }
}

impl OrthoBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Coordinates of a vector given in simple-root coordinates.
    pub fn from_simple_coords(&self, b: &[Rational]) -> Vec<Rational> {
        linalg::mat_vec(&self.simple_in_basis, b)
    }

    /// Change of coordinates from the basis `e` back to simple roots.
    pub fn to_simple_coords(&self, c: &[Rational]) -> Vec<Rational> {
        linalg::mat_vec(&self.basis_in_simple, c)
    }

    /// Converts a matrix acting on `e`-coordinates to simple-root coordinates.
    pub fn matrix_to_simple(&self, m: &RMatrix) -> RMatrix {
        linalg::mat_mul(&linalg::mat_mul(&self.basis_in_simple, m), &self.simple_in_basis)
    }

    pub fn scalar(&self, r: Rational) -> CliffordElement {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        CliffordElement { basis_id: self.id, coeffs, scale_sq: Rational::one() }
    }

    pub fn one(&self) -> CliffordElement {
        self.scalar(Rational::one())
    }

    /// The basis vector `e_i`.
    pub fn generator(&self, i: usize) -> CliffordElement {
        self.vector(&(0..self.dim()).map(|j| if i == j { int(1) } else { int(0) }).collect::<Vec<_>>())
    }

    /// A vector of V given by its `e`-coordinates, as a grade-one element.
    pub fn vector(&self, c: &[Rational]) -> CliffordElement {
        let coeffs =
            c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (1u32 << i, x.clone())).collect();
        CliffordElement { basis_id: self.id, coeffs, scale_sq: Rational::one() }
    }

    /// Product of two basis monomials: sign and factor `Π_{i∈S∩T} (−d_i)`.
    fn monomial_product(&self, s: u32, t: u32) -> (u32, Rational) {
        let mut swaps = 0u32;
        let mut tt = t;
        while tt != 0 {
            let j = tt.trailing_zeros();
            swaps += (s >> (j + 1)).count_ones();
            tt &= tt - 1;
        }
        let mut f = if swaps % 2 == 0 { Rational::one() } else { -Rational::one() };
        let mut common = s & t;
        while common != 0 {
            let i = common.trailing_zeros() as usize;
            f *= -&self.sq_norms[i];
            common &= common - 1;
        }
        (s ^ t, f)
    }

    pub fn mul(&self, a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement> {
        if a.basis_id != self.id || b.basis_id != self.id {
            return Err(Error::BasisMismatch);
        }
        let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&s, x) in &a.coeffs {
            for (&t, y) in &b.coeffs {
                let (m, f) = self.monomial_product(s, t);
                let e = out.entry(m).or_insert_with(Rational::zero);
                *e += f * x * y;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(CliffordElement { basis_id: self.id, coeffs: out, scale_sq: &a.scale_sq * &b.scale_sq })
    }

    /// The scalar `N` with `aᵗ a = N·1`, if `aᵗ a` is a positive scalar.
    pub fn spinor_norm(&self, a: &CliffordElement) -> Result<Rational> {
        let p = self.mul(&a.transpose(), a)?;
        if p.coeffs.len() == 1 {
            if let Some(n) = p.coeffs.get(&0) {
                if n.is_positive() {
                    return Ok(n.clone());
                }
            }
        }
        Err(Error::NotPin)
    }

    /// The orthogonal map `ω ↦ ε(a) ω a⁻¹`, in simple-root coordinates.
    pub fn pin_project(&self, a: &CliffordElement) -> Result<RMatrix> {
        let n = self.spinor_norm(a)?;
        let ea = a.epsilon();
        let at = a.transpose();
        let dim = self.dim();
        let mut m = vec![vec![Rational::zero(); dim]; dim];
        for j in 0..dim {
            let img = self.mul(&self.mul(&ea, &self.generator(j))?, &at)?;
            for (&mask, c) in &img.coeffs {
                if mask.count_ones() != 1 {
                    return Err(Error::NotPin);
                }
                m[mask.trailing_zeros() as usize][j] = c / &n;
            }
        }
        Ok(self.matrix_to_simple(&m))
    }
}

/// An element of C(V), stored as rational coefficients on basis monomials
/// (bitmasks over the orthogonal basis) together with a projective scale: the
/// element represented is `coeffs / sqrt(scale_sq)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordElement {
    pub basis_id: u64,
    pub coeffs: BTreeMap<u32, Rational>,
    pub scale_sq: Rational,
}

impl CliffordElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Reversal anti-automorphism: `e_S ↦ (−1)^{k(k+1)/2} e_S` on degree `k`.
    pub fn transpose(&self) -> CliffordElement {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&m, c)| {
                let k = m.count_ones();
                (m, if (k * (k + 1) / 2) % 2 == 0 { c.clone() } else { -c })
            })
            .collect();
        CliffordElement { basis_id: self.basis_id, coeffs, scale_sq: self.scale_sq.clone() }
    }

    /// Parity automorphism.
    pub fn epsilon(&self) -> CliffordElement {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&m, c)| (m, if m.count_ones() % 2 == 0 { c.clone() } else { -c }))
            .collect();
        CliffordElement { basis_id: self.basis_id, coeffs, scale_sq: self.scale_sq.clone() }
    }

    pub fn neg(&self) -> CliffordElement {
        let coeffs = self.coeffs.iter().map(|(&m, c)| (m, -c)).collect();
        CliffordElement { basis_id: self.basis_id, coeffs, scale_sq: self.scale_sq.clone() }
    }

    /// Parity of a homogeneous element.
    pub fn is_odd(&self) -> bool {
        self.coeffs.keys().next().is_some_and(|m| m.count_ones() % 2 == 1)
    }

    /// Sign `s` with `self = s·λ·other` for some `λ > 0`, if the two are
    /// proportional.
    pub fn projective_sign(&self, other: &CliffordElement) -> Option<i32> {
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let (m0, c0) = self.coeffs.iter().next()?;
        let lambda = c0 / other.coeffs.get(m0)?;
        for (m, c) in &self.coeffs {
            if *c != &lambda * other.coeffs.get(m)? {
                return None;
            }
        }
        Some(if lambda.is_positive() { 1 } else { -1 })
    }

    /// Rescales to a primitive integer coefficient vector with positive
    /// leading coefficient times the returned sign; the projective scale is
    /// reset to the spinor norm convention of the caller.
    pub fn normalized(&self) -> CliffordElement {
        use num_integer::Integer;
        let mut l = num_bigint::BigInt::one();
        for c in self.coeffs.values() {
            l = l.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(&(c * Rational::from_integer(l.clone())).to_integer());
        }
        if g.is_zero() {
            return self.clone();
        }
        let f = Rational::new(l, g);
        let coeffs = self.coeffs.iter().map(|(&m, c)| (m, c * &f)).collect();
        CliffordElement { basis_id: self.basis_id, coeffs, scale_sq: &self.scale_sq * &f * &f }
    }
}

/// `f_α = α/|α|` as a Clifford element: α in the orthogonal basis with
/// projective scale `|α|`.
pub fn lift_reflection(rs: &RootSystem, basis: &OrthoBasis, root: usize) -> CliffordElement {
    let b: Vec<Rational> = rs.positive_coords[root].iter().map(|&x| int(x)).collect();
    let mut v = basis.vector(&basis.from_simple_coords(&b));
    v.scale_sq = rs.root_norm_sq(root);
    v
}

/// Product of the lifts `f_{α_s}` along a word of simple reflections.
pub fn lift_word(rs: &RootSystem, basis: &OrthoBasis, word: &[usize]) -> CliffordElement {
    let mut a = basis.one();
    for &s in word {
        a = basis.mul(&a, &lift_reflection(rs, basis, s)).expect("same basis");
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, generate_weyl_group, int_to_rmatrix, Family};

    #[test]
    fn orthogonal_basis() {
        for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::G, 2), (Family::F, 4)] {
            let rs = build_root_system(f, n).unwrap();
            let b = orthogonalize(&rs);
            for i in 0..n {
                assert!(b.sq_norms[i].is_positive());
                for j in 0..i {
                    assert!(rs.inner(&b.vectors[i], &b.vectors[j]).is_zero());
                }
            }
        }
        let a1 = build_root_system(Family::A, 1).unwrap();
        assert_eq!(orthogonalize(&a1).sq_norms[0], int(2));
    }

    #[test]
    fn defining_relations() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let b = orthogonalize(&rs);
        let (e1, e2) = (b.generator(0), b.generator(1));
        let d1 = b.sq_norms[0].clone();
        let d2 = b.sq_norms[1].clone();
        assert_eq!(b.mul(&e1, &e1).unwrap(), b.scalar(-d1.clone()));
        assert_eq!(b.mul(&e1, &e2).unwrap(), b.mul(&e2, &e1).unwrap().neg());
        let e12 = b.mul(&e1, &e2).unwrap();
        assert_eq!(b.mul(&e12, &e12).unwrap(), b.scalar(-(d1 * d2)));
        assert_eq!(e12.transpose(), e12.neg());
        assert_eq!(e12.transpose().transpose(), e12);
        assert_eq!(e1.epsilon(), e1.neg());
        assert_eq!(e12.epsilon(), e12);
        let other = orthogonalize(&build_root_system(Family::B, 2).unwrap());
        assert!(matches!(b.mul(&e1, &other.generator(0)), Err(Error::BasisMismatch)));
    }

    #[test]
    fn transpose_is_antiautomorphism() {
        let rs = build_root_system(Family::B, 3).unwrap();
        let b = orthogonalize(&rs);
        let x = lift_word(&rs, &b, &[0, 1, 2]);
        let y = lift_word(&rs, &b, &[2, 1]);
        let lhs = b.mul(&x, &y).unwrap().transpose();
        let rhs = b.mul(&y.transpose(), &x.transpose()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lifts_project_to_reflections() {
        for (f, n) in [(Family::A, 2), (Family::G, 2), (Family::B, 3)] {
            let rs = build_root_system(f, n).unwrap();
            let b = orthogonalize(&rs);
            assert_eq!(b.pin_project(&b.one()).unwrap(), linalg::identity(n));
            for r in 0..rs.num_positive() {
                let f = lift_reflection(&rs, &b, r);
                assert_eq!(b.pin_project(&f).unwrap(), int_to_rmatrix(n, &rs.reflection_matrix(r)));
                // f² is projectively −1
                assert_eq!(b.mul(&f, &f).unwrap().projective_sign(&b.one()), Some(-1));
                assert_eq!(b.spinor_norm(&f).unwrap(), rs.root_norm_sq(r));
            }
            // braid relations: (f_i f_j)^m is projectively −1, i.e. the central element z
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let p = b.mul(&lift_reflection(&rs, &b, i), &lift_reflection(&rs, &b, j)).unwrap();
                    let m = crate::rootsys::WeylElement::from_word(&rs, &[i, j]).order();
                    let mut q = b.one();
                    for _ in 0..m {
                        q = b.mul(&q, &p).unwrap();
                    }
                    assert_eq!(q.projective_sign(&b.one()), Some(-1));
                }
            }
        }
    }

    #[test]
    fn cocycle_soundness() {
        let rs = build_root_system(Family::B, 3).unwrap();
        let b = orthogonalize(&rs);
        let g = generate_weyl_group(&rs, 1000).unwrap();
        for x in (0..48).step_by(3) {
            for y in (0..48).step_by(5) {
                let p = b.mul(&lift_word(&rs, &b, &g.word(x)), &lift_word(&rs, &b, &g.word(y))).unwrap();
                assert_eq!(b.pin_project(&p).unwrap(), int_to_rmatrix(3, &g.matrix(g.mul(x, y))));
            }
        }
    }

    #[test]
    fn non_pin_rejected() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let b = orthogonalize(&rs);
        let x = b.mul(&b.generator(0), &b.generator(1)).unwrap();
        let mut y = x.clone();
        y.coeffs.insert(1, int(1));
        assert!(matches!(b.pin_project(&y), Err(Error::NotPin)));
    }
}
