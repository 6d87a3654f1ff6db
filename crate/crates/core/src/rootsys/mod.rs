//! Crystallographic root systems in Bourbaki coordinates, their Weyl groups
//! and conjugacy classes.

mod classes;
mod group;

pub use classes::{conjugacy_classes, elliptic_class_count, ConjClass};
pub use group::{canonical_word, default_group_bound, generate_weyl_group, weyl_group_order, WeylGroup};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, RMatrix};
use crate::num::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "E" => Some(Family::E),
            "F" => Some(Family::F),
            "G" => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// A reduced crystallographic root system with a scaled standard form
/// `⟨u,v⟩ = t·(u·v)` on the ambient space and a W-invariant parameter
/// function on roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub ambient_dim: usize,
    /// Simple roots in ambient coordinates.
    pub simple_roots: Vec<Vec<Rational>>,
    /// Positive roots in simple-root coordinates, sorted by (height, coordinates).
    pub positive_coords: Vec<Vec<i64>>,
    /// Positive roots in ambient coordinates, same order.
    pub positive_roots: Vec<Vec<Rational>>,
    /// `cartan[i][j] = (α_i, α̌_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// Scale `t` of the Gram form relative to the standard dot product.
    pub gram_scale: Rational,
    /// W-orbit id of every positive root; orbit ids are numbered in order of
    /// the first simple root they contain.
    pub orbit_of: Vec<usize>,
    /// Parameter value per orbit.
    pub param_c: Vec<Rational>,
    root_index: HashMap<Vec<i64>, usize>,
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = int(1);
    v[j] = int(-1);
    v
}

fn simple_roots_for(family: Family, rank: usize) -> Result<(usize, Vec<Vec<Rational>>)> {
    let bad = || Error::Usage(format!("no simple root system of type {}{}", family, rank));
    let n = rank;
    Ok(match family {
        Family::A => {
            if n < 1 {
                return Err(bad());
            }
            (n + 1, (0..n).map(|i| diff(n + 1, i, i + 1)).collect())
        }
        Family::B | Family::C => {
            if n < 2 {
                return Err(bad());
            }
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let last = unit(n, n - 1);
            s.push(if family == Family::B { last } else { last.into_iter().map(|x| x * int(2)).collect() });
            (n, s)
        }
        Family::D => {
            if n < 3 {
                return Err(bad());
            }
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![Rational::zero(); n];
            last[n - 2] = int(1);
            last[n - 1] = int(1);
            s.push(last);
            (n, s)
        }
        Family::E => {
            if !(6..=8).contains(&n) {
                return Err(bad());
            }
            let h = rat(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut a2 = vec![Rational::zero(); 8];
            a2[0] = int(1);
            a2[1] = int(1);
            let mut s = vec![a1, a2];
            for i in 0..n - 2 {
                s.push(diff(8, i + 1, i));
            }
            (8, s)
        }
        Family::F => {
            if n != 4 {
                return Err(bad());
            }
            let h = rat(1, 2);
            (
                4,
                vec![
                    diff(4, 1, 2),
                    diff(4, 2, 3),
                    unit(4, 3),
                    vec![h.clone(), -h.clone(), -h.clone(), -h],
                ],
            )
        }
        Family::G => {
            if n != 2 {
                return Err(bad());
            }
            (3, vec![diff(3, 0, 1), vec![int(-2), int(1), int(1)]])
        }
    })
}

/// The classical number of positive roots.
pub fn positive_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let (ambient_dim, simple_roots) = simple_roots_for(family, rank)?;
    let n = rank;
    let mut cartan = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = int(2) * linalg::dot(&simple_roots[i], &simple_roots[j])
                / linalg::dot(&simple_roots[j], &simple_roots[j]);
            debug_assert!(p.is_integer());
            cartan[i][j] = p.to_integer().to_i64().unwrap();
        }
    }

    // positive roots by closure under simple reflections
    let mut found: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = found.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = found.iter().cloned().collect();
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let k: i64 = (0..n).map(|j| b[j] * cartan[j][i]).sum();
            let mut c = b.clone();
            c[i] -= k;
            if c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0) && seen.insert(c.clone()) {
                found.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    found.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    if found.len() != positive_root_count(family, n) {
        return Err(Error::Usage(format!("root closure produced {} positive roots", found.len())));
    }
    let positive_roots: Vec<Vec<Rational>> = found
        .iter()
        .map(|b| {
            (0..ambient_dim)
                .map(|k| (0..n).fold(Rational::zero(), |acc, j| acc + &simple_roots[j][k] * int(b[j])))
                .collect()
        })
        .collect();
    let root_index: HashMap<Vec<i64>, usize> = found.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();

    let mut rs = RootSystem {
        family,
        rank,
        ambient_dim,
        simple_roots,
        positive_coords: found,
        positive_roots,
        cartan,
        gram_scale: Rational::one(),
        orbit_of: vec![],
        param_c: vec![],
        root_index,
    };
    rs.compute_orbits();
    rs.param_c = vec![Rational::one(); rs.orbit_count()];
    Ok(rs)
}

impl RootSystem {
    fn compute_orbits(&mut self) {
        let np = self.positive_coords.len();
        let mut orbit = vec![usize::MAX; np];
        let mut next = 0;
        for start in 0..self.rank {
            if orbit[start] != usize::MAX {
                continue;
            }
            orbit[start] = next;
            let mut stack = vec![start];
            while let Some(r) = stack.pop() {
                for i in 0..self.rank {
                    let img = self.apply_simple(i, &self.positive_coords[r]);
                    let (p, _) = self.positive_index_signed(&img).expect("root image");
                    if orbit[p] == usize::MAX {
                        orbit[p] = next;
                        stack.push(p);
                    }
                }
            }
            next += 1;
        }
        self.orbit_of = orbit;
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Sets the parameter function, one value per orbit (see `orbit_of`).
    pub fn with_params(mut self, params: &[Rational]) -> Result<Self> {
        if params.len() != self.orbit_count() {
            return Err(Error::Usage(format!(
                "{} has {} root orbits, got {} parameters",
                self.label(),
                self.orbit_count(),
                params.len()
            )));
        }
        if params.iter().any(|p| !p.is_positive()) {
            return Err(Error::Usage("parameters must be positive".into()));
        }
        self.param_c = params.to_vec();
        Ok(self)
    }

    /// Multiplies the Gram form by `t > 0`.
    pub fn with_gram_scale(mut self, t: Rational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::Usage("gram scale must be positive".into()));
        }
        self.gram_scale = t;
        Ok(self)
    }

    pub fn num_positive(&self) -> usize {
        self.positive_coords.len()
    }

    /// Parameter value on a positive root.
    pub fn c(&self, root: usize) -> &Rational {
        &self.param_c[self.orbit_of[root]]
    }

    /// Orbit id of the simple root `α_i`.
    pub fn simple_orbit(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    /// Gram form `⟨u,v⟩ = t·(u·v)` on ambient vectors.
    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        linalg::dot(u, v) * &self.gram_scale
    }

    /// Gram matrix of the ambient space.
    pub fn gram(&self) -> RMatrix {
        let mut g = linalg::identity(self.ambient_dim);
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = self.gram_scale.clone();
        }
        g
    }

    /// Dual form on coroots, identified with ambient vectors through the
    /// standard dot product: `⟨x,y⟩∨ = (x·y)/t`.
    pub fn dual_inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        linalg::dot(x, y) / &self.gram_scale
    }

    /// Coroot of a positive root, `2α/(α·α)` in ambient coordinates, so that
    /// the pairing `(v, α̌) = v·α̌` does not depend on the gram scale.
    pub fn coroot(&self, root: usize) -> Vec<Rational> {
        let a = &self.positive_roots[root];
        let n = linalg::dot(a, a);
        a.iter().map(|x| x * int(2) / &n).collect()
    }

    /// `ρ̌ = ½ Σ_{α>0} α̌`.
    pub fn coroot_half_sum(&self) -> Vec<Rational> {
        let mut s = vec![Rational::zero(); self.ambient_dim];
        for r in 0..self.num_positive() {
            for (x, y) in s.iter_mut().zip(self.coroot(r)) {
                *x += y;
            }
        }
        s.into_iter().map(|x| x / int(2)).collect()
    }

    /// `⟨2ρ̌, 2ρ̌⟩` in the dual form.
    pub fn two_rho_check_norm(&self) -> Rational {
        let r = self.coroot_half_sum();
        self.dual_inner(&r, &r) * int(4)
    }

    /// `⟨α̌, α̌⟩` for a positive root.
    pub fn coroot_norm_sq(&self, root: usize) -> Rational {
        let c = self.coroot(root);
        self.dual_inner(&c, &c)
    }

    pub fn root_norm_sq(&self, root: usize) -> Rational {
        self.inner(&self.positive_roots[root], &self.positive_roots[root])
    }

    /// `(α_j, β̌)` for simple root `j` and positive root `root`, an integer.
    pub fn pairing_simple(&self, j: usize, root: usize) -> i64 {
        let p = linalg::dot(&self.simple_roots[j], &self.coroot(root));
        p.to_integer().to_i64().unwrap()
    }

    fn apply_simple(&self, i: usize, b: &[i64]) -> Vec<i64> {
        let k: i64 = (0..self.rank).map(|j| b[j] * self.cartan[j][i]).sum();
        let mut c = b.to_vec();
        c[i] -= k;
        c
    }

    /// Index of `±β` among positive roots with the sign, for `β` in simple
    /// coordinates.
    pub fn positive_index_signed(&self, b: &[i64]) -> Option<(usize, i32)> {
        if let Some(&i) = self.root_index.get(b) {
            return Some((i, 1));
        }
        let neg: Vec<i64> = b.iter().map(|x| -x).collect();
        self.root_index.get(&neg).map(|&i| (i, -1))
    }

    /// Finds a root given in ambient coordinates.
    pub fn find_root(&self, v: &[Rational]) -> Result<(usize, i32)> {
        let coords = self.to_simple_coords(v).ok_or_else(|| Error::NotARoot(format!("{:?}", v)))?;
        let ints: Option<Vec<i64>> =
            coords.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect();
        ints.and_then(|b| self.positive_index_signed(&b))
            .ok_or_else(|| Error::NotARoot(format!("{:?}", v.iter().map(crate::num::rat_to_string).collect::<Vec<_>>())))
    }

    /// Coordinates of an ambient vector in the simple-root basis, if it lies
    /// in the root span.
    pub fn to_simple_coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let cols: Vec<Vec<Rational>> = self.simple_roots.clone();
        crate::num::solve_exact(&cols, v)
    }

    /// Gram matrix of the simple roots, `G_ij = ⟨α_i, α_j⟩`.
    pub fn simple_gram(&self) -> RMatrix {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.inner(&self.simple_roots[i], &self.simple_roots[j])).collect())
            .collect()
    }

    /// Matrix of the reflection `s_β` in simple-root coordinates; column `j`
    /// is the image of `α_j`.
    pub fn reflection_matrix(&self, root: usize) -> Vec<i64> {
        let n = self.rank;
        let b = &self.positive_coords[root];
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            let k = self.pairing_simple(j, root);
            for i in 0..n {
                m[i * n + j] = (i == j) as i64 - k * b[i];
            }
        }
        m
    }

    /// Reflection in a root as a Weyl element with its canonical word.
    pub fn reflection(&self, root: usize) -> WeylElement {
        WeylElement::from_matrix(self, self.reflection_matrix(root))
    }

    /// Ambient matrix of an element given in simple-root coordinates: acts as
    /// `M` on the root span and as the identity on its orthogonal complement.
    pub fn ambient_matrix(&self, m: &[i64]) -> RMatrix {
        let n = self.rank;
        let d = self.ambient_dim;
        // S: d×n matrix of simple roots as columns
        let s: RMatrix = (0..d).map(|k| (0..n).map(|j| self.simple_roots[j][k].clone()).collect()).collect();
        let g: RMatrix = (0..n)
            .map(|i| (0..n).map(|j| linalg::dot(&self.simple_roots[i], &self.simple_roots[j])).collect())
            .collect();
        let ginv = linalg::inverse(&g).expect("simple roots independent");
        let mm: RMatrix = (0..n).map(|i| (0..n).map(|j| int(m[i * n + j])).collect()).collect();
        let st = linalg::transpose(&s);
        let proj = linalg::mat_mul(&linalg::mat_mul(&s, &ginv), &st);
        let a = linalg::mat_mul(&linalg::mat_mul(&linalg::mat_mul(&s, &mm), &ginv), &st);
        let id = linalg::identity(d);
        (0..d).map(|i| (0..d).map(|j| &a[i][j] + &id[i][j] - &proj[i][j]).collect()).collect()
    }
}

/// Integer matrix multiplication for rank×rank row-major matrices.
pub fn int_mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += x * b[k * n + j];
            }
        }
    }
    c
}

pub fn int_to_rmatrix(n: usize, m: &[i64]) -> RMatrix {
    (0..n).map(|i| (0..n).map(|j| int(m[i * n + j])).collect()).collect()
}

/// A Weyl group element: its matrix in simple-root coordinates and its
/// lexicographically least reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub rank: usize,
    pub matrix: Vec<i64>,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement { rank, matrix: m, word: vec![] }
    }

    pub fn from_matrix(rs: &RootSystem, matrix: Vec<i64>) -> Self {
        let word = canonical_word(rs, &matrix);
        WeylElement { rank: rs.rank, matrix, word }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut m = WeylElement::identity(rs.rank).matrix;
        for &s in word {
            m = int_mat_mul(rs.rank, &m, &rs.reflection_matrix(s));
        }
        WeylElement::from_matrix(rs, m)
    }

    pub fn mul(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        WeylElement::from_matrix(rs, int_mat_mul(self.rank, &self.matrix, &other.matrix))
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        let n = self.rank;
        rs.positive_coords
            .iter()
            .filter(|b| {
                let img: Vec<i64> = (0..n).map(|i| (0..n).map(|j| self.matrix[i * n + j] * b[j]).sum()).collect();
                img.iter().any(|&x| x < 0)
            })
            .count()
    }

    pub fn det(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Characteristic polynomial `det(xI − w)` on the root span, coefficients
    /// in increasing degree.
    pub fn char_poly(&self) -> Vec<Rational> {
        linalg::char_poly(&int_to_rmatrix(self.rank, &self.matrix))
    }

    pub fn order(&self) -> usize {
        let n = self.rank;
        let id = WeylElement::identity(n).matrix;
        let mut m = self.matrix.clone();
        let mut k = 1;
        while m != id {
            m = int_mat_mul(n, &m, &self.matrix);
            k += 1;
        }
        k
    }

    pub fn trace(&self) -> i64 {
        (0..self.rank).map(|i| self.matrix[i * self.rank + i]).sum()
    }
}
