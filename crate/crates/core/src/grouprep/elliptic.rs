use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::linalg;
use crate::num::{Cyclotomic, Rational};

use super::{inner_product, pointwise_product, Character, Classes, FiniteGroup};

/// `e(σ, σ′) = Σ_i (−1)^i ⟨∧^i V ⊗ σ, σ′⟩`, given the wedge characters.
pub fn elliptic_pairing(cl: &Classes, wedges: &[Character], a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Rational> {
    let mut total = Rational::zero();
    for (i, w) in wedges.iter().enumerate() {
        let ip = inner_product(cl, &pointwise_product(w, a), b)?;
        if i % 2 == 0 {
            total += ip;
        } else {
            total -= ip;
        }
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticDims {
    /// `dim R̄(W)`: number of elliptic classes of W.
    pub elliptic: usize,
    /// `dim R̄_gen(W̃)`: number of elliptic classes of W that split in W̃.
    pub split_elliptic: usize,
}

/// Dimensions of the elliptic spaces from per-class ellipticity and
/// splitting flags of W.
pub fn elliptic_space_dims(elliptic: &[bool], split: &[bool]) -> EllipticDims {
    EllipticDims {
        elliptic: elliptic.iter().filter(|&&e| e).count(),
        split_elliptic: elliptic.iter().zip(split).filter(|(&e, &s)| e && s).count(),
    }
}

/// Classes `C` of a double cover with central element `z` such that `zC ≠ C`.
pub fn split_classes<G: FiniteGroup + ?Sized>(g: &G, cl: &Classes, z: usize) -> Vec<bool> {
    (0..cl.len()).map(|c| cl.class_of(g.mul(z, cl.reps[c])) != c).collect()
}

/// `ι_S: σ ↦ σ ⊗ S` is onto the genuine characters iff the spin character
/// vanishes on no class over a split class.
pub fn iota_s_surjectivity<G: FiniteGroup + ?Sized>(g: &G, cl: &Classes, z: usize, spin: &[Cyclotomic]) -> bool {
    split_classes(g, cl, z).iter().zip(spin).all(|(&s, v)| !s || !v.is_zero())
}

/// Rank of the image of `R̄(W)` under `ῑ_S`: rank of the values of the
/// W-characters (rational, pulled back) on the split elliptic cover classes
/// where the spin character is nonzero, one class per pair `{C, zC}`.
pub fn iota_bar_rank<G: FiniteGroup + ?Sized>(
    g: &G,
    cl: &Classes,
    z: usize,
    elliptic: &[bool],
    spin: &[Cyclotomic],
    w_characters: &[Character],
) -> usize {
    let split = split_classes(g, cl, z);
    let cols: Vec<usize> = (0..cl.len())
        .filter(|&c| elliptic[c] && split[c] && !spin[c].is_zero())
        .filter(|&c| c < cl.class_of(g.mul(z, cl.reps[c])))
        .collect();
    let m: linalg::RMatrix = w_characters
        .iter()
        .map(|chi| cols.iter().map(|&c| chi[c].as_rational().cloned().expect("rational W-character")).collect())
        .collect();
    if cols.is_empty() {
        0
    } else {
        linalg::rank(&m)
    }
}

/// `ξ(σ̃) = σ̃ ⊗ sgn + (−1)^{dim V} σ̃`.
pub fn xi_map(chi: &[Cyclotomic], sign: &[Cyclotomic], dim_v: usize) -> Character {
    chi.iter()
        .zip(sign)
        .map(|(x, s)| {
            let t = x * s;
            if dim_v % 2 == 0 {
                &t + x
            } else {
                &t - x
            }
        })
        .collect()
}
