
use crate::error::{Error, Result};
use crate::num::{Cyclotomic, Rational};

use super::{CharacterTable, Classes, FiniteGroup, Subgroup};

/// A class function: one value per conjugacy class.
pub type Character = Vec<Cyclotomic>;

/// `(1/|G|) Σ_C |C| a(C) conj(b(C))`, required to be rational.
pub fn inner_product(cl: &Classes, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Rational> {
    let mut acc = Cyclotomic::zero();
    for c in 0..cl.len() {
        if a[c].is_zero() || b[c].is_zero() {
            continue;
        }
        let t = (&a[c] * &b[c].conj()).scale(&Rational::from_integer((cl.sizes[c] as i64).into()));
        acc = &acc + &t;
    }
    let r = acc
        .as_rational()
        .ok_or_else(|| Error::Mismatch(format!("inner product {} is not rational", acc)))?;
    Ok(r / Rational::from_integer((cl.group_order as i64).into()))
}

pub fn pointwise_product(a: &[Cyclotomic], b: &[Cyclotomic]) -> Character {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

pub fn sign_twist(a: &[Cyclotomic], sign: &[Cyclotomic]) -> Character {
    pointwise_product(a, sign)
}

/// Multiplicity of every irreducible of the table in a class function.
pub fn decompose(table: &CharacterTable, chi: &[Cyclotomic]) -> Result<Vec<Rational>> {
    table.irreducibles.iter().map(|irr| inner_product(&table.classes, chi, &irr.values)).collect()
}

pub fn is_irreducible(cl: &Classes, chi: &[Cyclotomic]) -> Result<bool> {
    Ok(inner_product(cl, chi, chi)? == Rational::from_integer(1.into()))
}

/// Restriction of a class function of the parent to a subgroup.
pub fn restrict<G: FiniteGroup + ?Sized>(
    parent_cl: &Classes,
    sub: &Subgroup<'_, G>,
    sub_cl: &Classes,
    chi: &[Cyclotomic],
) -> Character {
    sub_cl.reps.iter().map(|&h| chi[parent_cl.class_of(sub.parent_index(h))].clone()).collect()
}

/// Induction of a class function of a subgroup to the parent.
pub fn induce<G: FiniteGroup + ?Sized>(
    parent_cl: &Classes,
    sub: &Subgroup<'_, G>,
    sub_cl: &Classes,
    psi: &[Cyclotomic],
) -> Character {
    let mut buckets = vec![Cyclotomic::zero(); parent_cl.len()];
    let mut counts = vec![vec![0u64; sub_cl.len()]; parent_cl.len()];
    for h in 0..FiniteGroup::order(sub) {
        counts[parent_cl.class_of(sub.parent_index(h))][sub_cl.class_of(h)] += 1;
    }
    for (c, row) in counts.iter().enumerate() {
        for (k, &n) in row.iter().enumerate() {
            if n > 0 && !psi[k].is_zero() {
                buckets[c] = &buckets[c] + &psi[k].scale(&Rational::from_integer((n as i64).into()));
            }
        }
    }
    let g = parent_cl.group_order as i64;
    let h = FiniteGroup::order(sub) as i64;
    buckets
        .into_iter()
        .enumerate()
        .map(|(c, v)| v.scale(&Rational::new(g.into(), (h * parent_cl.sizes[c] as i64).into())))
        .collect()
}

/// Character of `∧^k V` from the character of `V`, by Newton's identities.
pub fn wedge_character<G: FiniteGroup + ?Sized>(g: &G, cl: &Classes, v: &[Cyclotomic], k: usize) -> Character {
    (0..cl.len())
        .map(|c| {
            let p: Vec<Cyclotomic> = (0..=k).map(|i| v[cl.power_class(g, c, i as i64)].clone()).collect();
            let mut e = vec![Cyclotomic::one()];
            for m in 1..=k {
                let mut s = Cyclotomic::zero();
                for i in 1..=m {
                    let t = &e[m - i] * &p[i];
                    s = if i % 2 == 1 { &s + &t } else { &s - &t };
                }
                e.push(s.scale(&Rational::new(1.into(), (m as i64).into())));
            }
            e.pop().unwrap()
        })
        .collect()
}
