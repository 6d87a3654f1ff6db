use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{CoverData, Report};
use crate::combinat::{
    bn_character, content_power_sum, distinct_partitions, dn_restriction, lift_to_cover, partitions,
    read_parameterization, schur_dimension, signed_permutations, slooten, sn_pullback, spin_char_on_3cycle,
    Bipartition, Partition, SignedPerm,
};
use crate::error::{Error, Result};
use crate::grouprep::{Character, Classes, FiniteGroup};
use crate::nilpotent::{classify_orbits, orbit_from_contents, Algebra, NilpotentOrbitClass};
use crate::num::{int, serialize_rational, QuadValue, Rational};
use crate::rootsys::{build_root_system, weyl_group_order, Family, RootSystem};

/// Springer W-type of a classical orbit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpringerType {
    /// `σ_λ` of `S_n`.
    Symmetric(Partition),
    /// `σ_(μ,μ′)` of the hyperoctahedral group.
    Hyperoctahedral(Bipartition),
    /// Restriction of `σ_(μ,μ′)` to `W(D_n)`, unordered; stored with the
    /// larger partition on the left.
    Unordered(Bipartition),
}

impl SpringerType {
    fn unordered(b: Bipartition) -> SpringerType {
        if b.left >= b.right {
            SpringerType::Unordered(b)
        } else {
            SpringerType::Unordered(Bipartition::new(b.right, b.left))
        }
    }
}

impl fmt::Display for SpringerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpringerType::Symmetric(l) => write!(f, "{l}"),
            SpringerType::Hyperoctahedral(b) => write!(f, "{b}"),
            SpringerType::Unordered(b) => write!(f, "{{{},{}}}", b.left, b.right),
        }
    }
}

impl Serialize for SpringerType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Multiplicity of the row's genuine types in `σ ⊗ S`, summed over spin
/// modules.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub springer: SpringerType,
    #[serde(serialize_with = "serialize_rational")]
    pub multiplicity: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiRow {
    pub root_system: String,
    pub lambda: Partition,
    /// Indices into the character table of W̃ (empty without a table).
    pub genuine: Vec<usize>,
    pub dims: Vec<u64>,
    /// Closed form: `Σλᵢ(λᵢ²−1)/3` in type A, `4p₂` of the weighted contents
    /// otherwise.
    #[serde(serialize_with = "serialize_rational")]
    pub formula_scalar: Rational,
    /// `σ̃(Ω)` from the table, when one was computed.
    pub casimir_scalar: Option<QuadValue>,
    /// Defined for the unparametrized Casimir element.
    pub orbit: Option<NilpotentOrbitClass>,
    pub springer: Vec<SpringerType>,
    pub tensor_witness: Vec<Witness>,
}

fn family_size(family: Family, rank: usize) -> Result<usize> {
    match family {
        Family::A => Ok(rank + 1),
        Family::B | Family::C => Ok(rank),
        Family::D if rank >= 3 => Ok(rank),
        _ => Err(Error::Usage(format!("{family}{rank} is not a classical type covered here"))),
    }
}

/// `(c₁, c₂)` for the contents `c₁(j−i)+c₂`, and the overall factor in
/// type A.
fn content_params(rs: &RootSystem) -> (Rational, Rational) {
    let c = &rs.param_c;
    match rs.family {
        Family::A | Family::D => (c[0].clone(), Rational::zero()),
        Family::B => (c[0].clone(), c[1].clone()),
        // c(2ε_n) enters through the coroot ε_n of half the length
        Family::C => (c[0].clone(), &c[1] / int(2)),
        _ => unreachable!("classical"),
    }
}

fn formula_scalar(rs: &RootSystem, lambda: &Partition) -> Rational {
    let (c1, c2) = content_params(rs);
    let raw = match rs.family {
        Family::A => {
            let s: Rational = lambda.parts().iter().map(|&l| int((l * l * l - l) as i64)).sum();
            s / int(3) * &c1 * &c1
        }
        _ => content_power_sum(lambda, 2, &c1, &c2) * int(4),
    };
    raw / &rs.gram_scale
}

fn is_uniform(rs: &RootSystem) -> bool {
    rs.param_c.iter().all(One::is_one)
}

fn springer_types(rs: &RootSystem, lambda: &Partition) -> Vec<SpringerType> {
    let (c1, c2) = content_params(rs);
    match rs.family {
        Family::A => vec![SpringerType::Symmetric(lambda.clone())],
        Family::D => {
            let set: BTreeSet<SpringerType> = slooten(lambda, &c1, &c2).into_iter().map(SpringerType::unordered).collect();
            set.into_iter().collect()
        }
        _ => slooten(lambda, &c1, &c2).into_iter().map(SpringerType::Hyperoctahedral).collect(),
    }
}

/// Character of a Springer type on the classes of W̃.
pub fn springer_character(
    data: &CoverData,
    w_cl: &Classes,
    perms: &[SignedPerm],
    t: &SpringerType,
) -> Result<Character> {
    let rs = &data.cover.rs;
    let chi = match t {
        SpringerType::Symmetric(l) => sn_pullback(w_cl, perms, l),
        SpringerType::Hyperoctahedral(b) | SpringerType::Unordered(b) => {
            bn_character(rs, &data.cover.weyl, w_cl, perms, &b.left, &b.right)?
        }
    };
    Ok(lift_to_cover(&data.cover, data.classes(), w_cl, &chi))
}

/// `s̃₁s̃₂`, the lift of a 3-cycle with `(s̃₁s̃₂)³ = z`.
fn three_cycle(data: &CoverData) -> usize {
    let c = &data.cover;
    c.mul(c.mul_gen(0, 0), c.mul_gen(0, 1))
}

fn quad_rational(q: &QuadValue) -> Result<Rational> {
    q.as_rational().cloned().ok_or_else(|| Error::Mismatch(format!("irrational scalar {q}")))
}

/// Genuine types of `S̃_n` grouped by strict partitions, matched on degree,
/// Casimir scalar and the trace on a 3-cycle.
fn type_a_members(data: &CoverData, lambdas: &[Partition]) -> Result<Vec<Vec<usize>>> {
    let rs = &data.cover.rs;
    let n = rs.rank + 1;
    let cl = data.classes();
    let c3 = (n >= 3).then(|| cl.class_of(three_cycle(data)));
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for l in lambdas {
        let dim = schur_dimension(l)?;
        let scalar = formula_scalar(rs, l);
        let ratio = if n >= 3 { Some(spin_char_on_3cycle(l)?) } else { None };
        let mut members = Vec::new();
        for i in data.genuine() {
            let irr = &data.table.irreducibles[i];
            if num_bigint::BigInt::from(irr.degree) != dim || quad_rational(&data.scalar(i)?)? != scalar {
                continue;
            }
            if let (Some(c), Some(r)) = (c3, &ratio) {
                let v = irr.values[c].as_rational().cloned();
                if v != Some(r * Rational::from_integer(dim.clone())) {
                    continue;
                }
            }
            members.push(i);
        }
        let expected = if (n - l.len()) % 2 == 1 { 2 } else { 1 };
        if members.len() != expected {
            return Err(Error::Table(format!("{l}: {} genuine types match, expected {expected}", members.len())));
        }
        for &m in &members {
            if !used.insert(m) {
                return Err(Error::Table(format!("genuine type {m} matches two partitions")));
            }
        }
        out.push(members);
    }
    if used.len() != data.genuine().len() {
        return Err(Error::Table("strict partitions do not exhaust the genuine types".into()));
    }
    Ok(out)
}

fn lambdas_for(family: Family, n: usize) -> Vec<Partition> {
    match family {
        Family::A => distinct_partitions(n),
        Family::D => {
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for l in partitions(n) {
                if !seen.contains(&l.transpose()) {
                    seen.insert(l.clone());
                    out.push(l);
                }
            }
            out
        }
        _ => partitions(n),
    }
}

/// Rows of Ψ for a classical type with optional parameters (one per orbit of
/// roots; empty for `c ≡ 1`). The table and tensor witnesses are computed
/// when `2|W|` is within `bound`.
pub fn psi_classical(family: Family, rank: usize, params: &[Rational], bound: u128) -> Result<Vec<PsiRow>> {
    let mut rs = build_root_system(family, rank)?;
    if !params.is_empty() {
        rs = rs.with_params(params)?;
    }
    let with_table = 2 * weyl_group_order(family, rank) <= bound;
    let data = if with_table { Some(CoverData::new(&rs, bound)?) } else { None };
    rows_for(&rs, data.as_ref())
}

pub(crate) fn rows_for(rs: &RootSystem, data: Option<&CoverData>) -> Result<Vec<PsiRow>> {
    let n = family_size(rs.family, rs.rank)?;
    if data.is_none() && n > 12 {
        return Err(Error::Usage("closed-form rows are provided up to n = 12".into()));
    }
    let mut lambdas = lambdas_for(rs.family, n);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); lambdas.len()];
    let mut w_data = None;
    if let Some(d) = data {
        let w_cl = Classes::new(&d.cover.weyl);
        let perms = signed_permutations(rs, &d.cover.weyl)?;
        match rs.family {
            Family::A => members = type_a_members(d, &lambdas)?,
            Family::D => {
                let res = dn_restriction(&d.cover, d.classes(), &d.table, &w_cl, &perms)?;
                lambdas = res.iter().map(|r| r.lambda.clone()).collect();
                members = res.into_iter().map(|r| r.members).collect();
            }
            _ => {
                let res = read_parameterization(&d.cover, d.classes(), &d.table, &w_cl, &perms)?;
                lambdas = res.iter().map(|r| r.lambda.clone()).collect();
                members = res.into_iter().map(|r| r.members).collect();
            }
        }
        w_data = Some((d, w_cl, perms));
    }
    let mut rows = Vec::new();
    for (lambda, genuine) in lambdas.into_iter().zip(members) {
        let formula = formula_scalar(rs, &lambda);
        let orbit = if is_uniform(rs) { Some(orbit_from_contents(&lambda, rs.family)?) } else { None };
        let springer = springer_types(rs, &lambda);
        let mut dims = Vec::new();
        let mut casimir = None;
        let mut witness = Vec::new();
        if let Some((d, w_cl, perms)) = &w_data {
            dims = genuine.iter().map(|&i| d.degree(i)).collect();
            casimir = Some(d.scalar(genuine[0])?);
            for t in &springer {
                let chi = springer_character(d, w_cl, perms, t)?;
                let mult: Rational = d
                    .tensor_with_spins(&chi)?
                    .iter()
                    .map(|m| genuine.iter().map(|&i| m[i].clone()).sum::<Rational>())
                    .sum();
                witness.push(Witness { springer: t.clone(), multiplicity: mult });
            }
        }
        rows.push(PsiRow {
            root_system: rs.label(),
            lambda,
            genuine,
            dims,
            formula_scalar: formula,
            casimir_scalar: casimir,
            orbit,
            springer,
            tensor_witness: witness,
        });
    }
    Ok(rows)
}

fn algebra_for(family: Family, rank: usize) -> Result<Algebra> {
    match family {
        Family::A => Ok(Algebra::Sl(rank + 1)),
        _ => Algebra::for_type(family, rank),
    }
}

/// Checks the scalar identity, both tensor-containment directions, the
/// distinguished bijection count and surjectivity onto the orbits with
/// solvable centralizer, for `c ≡ 1` on the given root system.
pub fn verify_theorem1(rs: &RootSystem, bound: u128) -> Result<Report> {
    if !is_uniform(rs) {
        return Err(Error::Usage("orbits are attached to the unparametrized Casimir element".into()));
    }
    let data = CoverData::new(rs, bound)?;
    let mut report = Report::new(format!("{} (form scaled by {})", rs.label(), crate::num::rat_to_string(&rs.gram_scale)));
    let rows = rows_for(rs, Some(&data))?;
    let w_cl = Classes::new(&data.cover.weyl);
    let perms = signed_permutations(rs, &data.cover.weyl)?;

    // (1) scalars, and associates in one row
    let mut row_of = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        for &i in &row.genuine {
            row_of.insert(i, r);
        }
    }
    for row in &rows {
        let orbit = row.orbit.as_ref().expect("uniform parameters");
        let h = &orbit.h_norm_sq / &rs.gram_scale;
        for &i in &row.genuine {
            let s = data.scalar(i)?;
            report.compare(format!("{}: scalar of type {i} equals 4p2 / closed form", row.lambda), &QuadValue::from_rational(row.formula_scalar.clone()), &s);
            report.compare(format!("{}: scalar of type {i} equals <h,h> of {orbit}", row.lambda), &QuadValue::from_rational(h.clone()), &s);
            let a = data.associate(i)?;
            let same = row_of.get(&a) == Some(&row_of[&i]);
            report.record(format!("{}: associate {a} of type {i} in the same row", row.lambda), same, true, same);
        }
        report.record(format!("{}: orbit {orbit} has solvable centralizer", row.lambda), orbit.in_n0, true, orbit.in_n0);
    }

    // fibers over orbits
    let mut fibers: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        fibers.entry(row.orbit.as_ref().unwrap().partition.clone()).or_default().push(r);
    }
    let mut tensor_cache: BTreeMap<SpringerType, Vec<Vec<Rational>>> = BTreeMap::new();
    for (part, fiber) in &fibers {
        let orbit = rows[fiber[0]].orbit.clone().unwrap();
        let genuine: Vec<usize> = fiber.iter().flat_map(|&r| rows[r].genuine.iter().copied()).collect();
        let springer: BTreeSet<SpringerType> = fiber.iter().flat_map(|&r| rows[r].springer.iter().cloned()).collect();
        for t in &springer {
            if !tensor_cache.contains_key(t) {
                let chi = springer_character(&data, &w_cl, &perms, t)?;
                tensor_cache.insert(t.clone(), data.tensor_with_spins(&chi)?);
            }
        }
        // (2) every Springer type and spin module reach the fiber
        for t in &springer {
            for (k, m) in tensor_cache[t].iter().enumerate() {
                let hit = genuine.iter().any(|&i| !m[i].is_zero());
                report.record(format!("{orbit}: {t} ⊗ S{k} meets the fiber"), hit, true, hit);
            }
        }
        // (2) converse: every type of the fiber sits in some σ ⊗ S
        for &i in &genuine {
            let hit = springer.iter().any(|t| tensor_cache[t].iter().any(|m| !m[i].is_zero()));
            report.record(format!("{orbit}: type {i} lies in some Springer type ⊗ S"), hit, true, hit);
        }
        // (3) distinguished orbits: fiber mod associates ↔ Springer types
        let mut classes = BTreeSet::new();
        for &i in &genuine {
            let a = data.associate(i)?;
            classes.insert(i.min(a));
        }
        if orbit.distinguished {
            report.compare(format!("{orbit}: |fiber/~| = |Springer types| (distinguished)"), &springer.len(), &classes.len());
        } else {
            report.note(format!("{part}: fiber/~ has {} classes, {} Springer types", classes.len(), springer.len()));
        }
    }

    // surjectivity onto N₀
    let n0: BTreeSet<Partition> = classify_orbits(algebra_for(rs.family, rs.rank)?)
        .into_iter()
        .filter(|o| o.in_n0)
        .map(|o| o.partition)
        .collect();
    let image: BTreeSet<Partition> = fibers.keys().cloned().collect();
    report.compare("image of Ψ is the set of orbits with solvable centralizer", &fmt_set(&n0), &fmt_set(&image));

    // spin modules sit over the regular orbit
    for k in 0..data.spins.len() {
        let i = data.spin_index(k)?;
        report.compare(format!("spin module S{k} has scalar <2ρ̌,2ρ̌>"), &QuadValue::from_rational(rs.two_rho_check_norm()), &data.scalar(i)?);
        let regular = rows[row_of[&i]].orbit.as_ref().unwrap();
        let top = image.iter().max_by_key(|p| p.parts().first().copied()).cloned().unwrap_or_else(Partition::empty);
        report.compare(format!("spin module S{k} maps to the regular orbit"), &top, &regular.partition);
    }
    Ok(report)
}

fn fmt_set(s: &BTreeSet<Partition>) -> String {
    s.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}
