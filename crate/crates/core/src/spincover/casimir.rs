use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::grouprep::{is_irreducible, Classes, FiniteGroup};
use crate::linalg;
use crate::num::{Cyclotomic, QuadValue, Rational};

use super::SpinCover;

/// `Ω_{W̃,c}` as coefficients on elements of W̃, and summed over classes.
#[derive(Clone, Debug)]
pub struct CasimirElement {
    pub params: Vec<Rational>,
    pub coefficients: BTreeMap<usize, QuadValue>,
    /// Total coefficient carried by each class of W̃.
    pub class_function: Vec<QuadValue>,
}

fn add(map: &mut BTreeMap<usize, QuadValue>, x: usize, v: QuadValue) {
    let e = map.entry(x).or_insert_with(QuadValue::zero);
    *e += &v;
    if e.is_zero() {
        map.remove(&x);
    }
}

/// Builds Ω from pairs `α, β > 0` with `s_α(β) < 0`, with terms
/// `c(α)c(β)|α̌||β̌| · z s̃_α s̃_β`. The factor `z` makes the trace of every
/// term on a spin module equal to `+|cos(α,β)|·dim S` in this Pin model,
/// where `tr_S(f_α f_β) = −cos(α,β)·dim S`. Also evaluates the second form
/// over all pairs with `⟨α,β⟩ ≠ 0` and checks that the two agree, and that
/// the result is a class function.
pub fn casimir_element(cover: &SpinCover, cl: &Classes) -> Result<CasimirElement> {
    let rs = &cover.rs;
    let np = rs.num_positive();
    let z = cover.z();
    let coroots: Vec<Vec<Rational>> = (0..np).map(|a| rs.coroot(a)).collect();
    let norm_sq: Vec<Rational> = (0..np).map(|a| rs.coroot_norm_sq(a)).collect();
    let length = |a: usize, b: usize| -> Result<QuadValue> {
        QuadValue::sqrt_of_rational(&(&norm_sq[a] * &norm_sq[b]))
            .ok_or_else(|| Error::Mismatch("|α̌||β̌| outside Q(√2,√3)".into()))
    };

    let mut first = BTreeMap::new();
    for a in 0..np {
        for b in 0..np {
            let k: Rational = linalg::dot(&rs.positive_roots[b], &coroots[a]);
            let k = k.to_integer();
            let img: Vec<i64> = (0..rs.rank)
                .map(|j| {
                    rs.positive_coords[b][j]
                        - num_traits::ToPrimitive::to_i64(&k).unwrap() * rs.positive_coords[a][j]
                })
                .collect();
            if !img.iter().any(|&x| x < 0) {
                continue;
            }
            let g = cover.mul(cover.mul(z, cover.root_element(a)), cover.root_element(b));
            let coef = length(a, b)?.scale(&(rs.c(a) * rs.c(b)));
            add(&mut first, g, coef);
        }
    }

    let mut second = BTreeMap::new();
    for a in 0..np {
        for b in 0..np {
            let ip = rs.inner(&rs.positive_roots[a], &rs.positive_roots[b]);
            if ip.is_zero() {
                continue;
            }
            // ⟨α̌,β̌⟩/|cos(α,β)| = sign(cos)·|α̌||β̌|
            let mut coef = length(a, b)?.scale(&(rs.c(a) * rs.c(b)));
            let mut g = cover.mul(cover.root_element(a), cover.root_element(b));
            if ip.is_positive() {
                g = cover.mul(z, g);
            } else {
                coef = -coef;
            }
            add(&mut second, g, coef);
        }
    }
    if first != second {
        return Err(Error::Mismatch("the two forms of the Casimir element differ".into()));
    }

    let mut class_function = vec![QuadValue::zero(); cl.len()];
    for (&g, v) in &first {
        class_function[cl.class_of(g)] += v;
    }
    for (c, total) in class_function.iter().enumerate() {
        if total.is_zero() {
            if cl.members[c].iter().any(|&g| first.contains_key(&(g as usize))) {
                return Err(Error::Mismatch("Casimir element is not central".into()));
            }
            continue;
        }
        let each = total.scale(&Rational::new(1.into(), (cl.sizes[c] as i64).into()));
        if cl.members[c].iter().any(|&g| first.get(&(g as usize)) != Some(&each)) {
            return Err(Error::Mismatch("Casimir element is not central".into()));
        }
    }
    Ok(CasimirElement { params: rs.param_c.clone(), coefficients: first, class_function })
}

/// `χ(Ω)/χ(1)` for an irreducible character of W̃.
pub fn casimir_scalar(cl: &Classes, omega: &CasimirElement, chi: &[Cyclotomic]) -> Result<QuadValue> {
    if !is_irreducible(cl, chi)? {
        return Err(Error::NotIrreducible);
    }
    casimir_trace(omega, chi)
}

/// `χ(Ω)/χ(1)` without the irreducibility check.
pub(crate) fn casimir_trace(omega: &CasimirElement, chi: &[Cyclotomic]) -> Result<QuadValue> {
    let mut total = QuadValue::zero();
    for (c, w) in omega.class_function.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let v = chi[c].to_quad().ok_or_else(|| Error::Mismatch(format!("character value {} not real quadratic", chi[c])))?;
        total += &(w * &v);
    }
    let dim = chi[0].to_quad().ok_or_else(|| Error::Mismatch("degree".into()))?;
    Ok(&total / &dim)
}
