//! Exact character theory for the finite groups built here: conjugacy
//! classes, Dixon–Schneider tables, and operations on class functions.

mod dixon;
mod elliptic;
mod ops;
mod subgroup;

pub use dixon::{character_table, default_table_bound};
pub use elliptic::{
    elliptic_pairing, elliptic_space_dims, iota_bar_rank, iota_s_surjectivity, split_classes, xi_map, EllipticDims,
};
pub use ops::{
    decompose, induce, inner_product, is_irreducible, pointwise_product, restrict, sign_twist, wedge_character,
    Character,
};
pub use subgroup::Subgroup;

use crate::num::Cyclotomic;
use crate::rootsys::WeylGroup;

/// A finite group given by indexed elements and a multiplication.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    fn generators(&self) -> Vec<usize>;
}

impl FiniteGroup for WeylGroup {
    fn order(&self) -> usize {
        WeylGroup::order(self)
    }
    fn identity(&self) -> usize {
        0
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        WeylGroup::mul(self, a, b)
    }
    fn inv(&self, a: usize) -> usize {
        self.inverse(a)
    }
    fn generators(&self) -> Vec<usize> {
        (0..self.rank).map(|s| self.right_mul(0, s)).collect()
    }
}

/// Conjugacy classes of a finite group, sorted by least member; each class
/// is represented by its least member.
#[derive(Clone, Debug)]
pub struct Classes {
    pub group_order: usize,
    pub class_of: Vec<u32>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub element_orders: Vec<usize>,
    pub members: Vec<Vec<u32>>,
    pub inverse_class: Vec<usize>,
}

impl Classes {
    pub fn new<G: FiniteGroup + ?Sized>(g: &G) -> Classes {
        let size = g.order();
        let gens = g.generators();
        let gen_inv: Vec<usize> = gens.iter().map(|&s| g.inv(s)).collect();
        let mut class_of = vec![u32::MAX; size];
        let mut members_all = Vec::new();
        for start in 0..size {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = members_all.len() as u32;
            class_of[start] = id;
            let mut members = vec![start as u32];
            let mut i = 0;
            while i < members.len() {
                let x = members[i] as usize;
                for (&s, &si) in gens.iter().zip(&gen_inv) {
                    let y = g.mul(g.mul(si, x), s);
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        members.push(y as u32);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            members_all.push(members);
        }
        let reps: Vec<usize> = members_all.iter().map(|m| m[0] as usize).collect();
        let identity = g.identity();
        let element_orders = reps
            .iter()
            .map(|&r| {
                let mut cur = r;
                let mut k = 1;
                while cur != identity {
                    cur = g.mul(cur, r);
                    k += 1;
                }
                k
            })
            .collect();
        let inverse_class = reps.iter().map(|&r| class_of[g.inv(r)] as usize).collect();
        Classes {
            group_order: size,
            sizes: members_all.iter().map(Vec::len).collect(),
            class_of,
            reps,
            element_orders,
            members: members_all,
            inverse_class,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class<G: FiniteGroup + ?Sized>(&self, g: &G, c: usize, k: i64) -> usize {
        let o = self.element_orders[c] as i64;
        let k = k.rem_euclid(o);
        let r = self.reps[c];
        let mut cur = g.identity();
        for _ in 0..k {
            cur = g.mul(cur, r);
        }
        self.class_of(cur)
    }

    /// Exponent of the group (lcm of element orders).
    pub fn exponent(&self) -> u64 {
        self.element_orders.iter().fold(1u64, |a, &b| crate::num::lcm_u64(a, b as u64))
    }
}

#[derive(Clone, Debug)]
pub struct Irreducible {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
    /// `χ(z) = −χ(1)` for the central element of a spin cover.
    pub genuine: bool,
    /// `χ ⊗ sgn = χ`.
    pub self_associate: bool,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Classes,
    pub irreducibles: Vec<Irreducible>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Sets the `genuine` and `self_associate` flags from the class of the
    /// central element and a sign character.
    pub fn annotate(&mut self, z_class: Option<usize>, sign: Option<&[Cyclotomic]>) {
        for chi in &mut self.irreducibles {
            if let Some(zc) = z_class {
                chi.genuine = chi.values[zc] == Cyclotomic::from_int(-(chi.degree as i64));
            }
            if let Some(sgn) = sign {
                chi.self_associate = chi.values.iter().zip(sgn).all(|(v, s)| *v == v * s);
            }
        }
    }

    /// Index of the irreducible equal to a given class function.
    pub fn find(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.irreducibles.iter().position(|chi| chi.values == values)
    }
}
