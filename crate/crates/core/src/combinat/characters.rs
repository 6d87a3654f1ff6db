//! Characters of symmetric and hyperoctahedral groups realized on the Weyl
//! groups of classical type, and the tensor-with-spin parameterization of
//! genuine types.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::{partitions, Partition};
use crate::error::{Error, Result};
use crate::grouprep::{
    decompose, induce, is_irreducible, pointwise_product, sign_twist, Character, CharacterTable, Classes, Subgroup,
};
use crate::num::{Cyclotomic, Rational};
use crate::rootsys::{Family, RootSystem, WeylGroup};
use crate::spincover::SpinCover;

/// Action of a Weyl group element on the ambient coordinate basis:
/// `w·e_j = sign·e_{img[j].0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    pub img: Vec<(usize, i8)>,
}

impl SignedPerm {
    fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let img = other.img.iter().map(|&(i, s)| (self.img[i].0, s * self.img[i].1)).collect();
        SignedPerm { img }
    }

    /// Cycle lengths of the underlying permutation restricted to `coords`
    /// (which must be stable).
    pub fn cycle_type_on(&self, coords: std::ops::Range<usize>) -> Vec<usize> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for start in coords {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.img[j].0;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycle_type_on(0..self.img.len())
    }
}

/// Signed permutations for every element of a classical Weyl group, in the
/// group's element order.
pub fn signed_permutations(rs: &RootSystem, g: &WeylGroup) -> Result<Vec<SignedPerm>> {
    if !matches!(rs.family, Family::A | Family::B | Family::C | Family::D) {
        return Err(Error::Usage(format!("{} is not classical", rs.label())));
    }
    let d = rs.ambient_dim;
    let gens: Vec<SignedPerm> = (0..rs.rank)
        .map(|s| {
            let m = rs.ambient_matrix(&g.matrix(g.left_mul(s, 0)));
            let img = (0..d)
                .map(|j| {
                    let i = (0..d).find(|&i| !m[i][j].is_zero()).expect("nonzero column");
                    (i, if m[i][j] > Rational::zero() { 1 } else { -1 })
                })
                .collect();
            SignedPerm { img }
        })
        .collect();
    let mut out: Vec<SignedPerm> = Vec::with_capacity(g.order());
    out.push(SignedPerm { img: (0..d).map(|j| (j, 1)).collect() });
    for w in 1..g.order() {
        let s = *g.word_u8(w).last().expect("non-identity has a word") as usize;
        let prev = g.right_mul(w, s);
        debug_assert!(prev < w);
        out.push(out[prev].compose(&gens[s]));
    }
    Ok(out)
}

/// `χ_λ` of the symmetric group at a cycle type, by Murnaghan–Nakayama on
/// beta-sets.
pub fn sn_character(lambda: &Partition, cycle_type: &[usize]) -> i64 {
    fn rec(beta: &mut Vec<usize>, cycles: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
        let Some((&k, rest)) = cycles.split_first() else { return 1 };
        let key = (beta.clone(), cycles.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for idx in 0..beta.len() {
            let x = beta[idx];
            if x < k || beta.contains(&(x - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&y| y > x - k && y < x).count();
            beta[idx] = x - k;
            let v = rec(beta, rest, memo);
            beta[idx] = x;
            total += if between % 2 == 0 { v } else { -v };
        }
        memo.insert(key, total);
        total
    }
    let m = lambda.len();
    let mut beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + m - 1 - i).collect();
    let n: usize = cycle_type.iter().sum();
    assert_eq!(n, lambda.n(), "cycle type and partition sizes differ");
    rec(&mut beta, cycle_type, &mut HashMap::new())
}

/// `w ↦ χ_λ(π(w))` on the classes of a classical Weyl group.
pub fn sn_pullback(cl: &Classes, perms: &[SignedPerm], lambda: &Partition) -> Character {
    cl.reps.iter().map(|&w| Cyclotomic::from_int(sn_character(lambda, &perms[w].cycle_type()))).collect()
}

/// Character of `σ_(λ,μ)` of the hyperoctahedral group, induced from
/// `S_{n−k} × S_k × (Z/2)ⁿ` with the sign character on the last `k`
/// coordinates. On `W(D_n)` the same induction gives the restriction of
/// `σ_(λ,μ)`, since the stabilizer meets both cosets of `W(D_n)`.
pub fn bn_character(
    rs: &RootSystem,
    g: &WeylGroup,
    cl: &Classes,
    perms: &[SignedPerm],
    lambda: &Partition,
    mu: &Partition,
) -> Result<Character> {
    if !matches!(rs.family, Family::B | Family::C | Family::D) {
        return Err(Error::Usage("bipartition characters need type B, C or D".into()));
    }
    let n = rs.rank;
    if lambda.n() + mu.n() != n {
        return Err(Error::Usage(format!("bipartition ({lambda},{mu}) does not have size {n}")));
    }
    let split = lambda.n();
    let sub = Subgroup::from_predicate(g, |w| perms[w].img[..split].iter().all(|&(i, _)| i < split))?;
    let sub_cl = Classes::new(&sub);
    let psi: Character = sub_cl
        .reps
        .iter()
        .map(|&h| {
            let p = &perms[sub.parent_index(h)];
            let a = sn_character(lambda, &p.cycle_type_on(0..split));
            let b = sn_character(mu, &p.cycle_type_on(split..n));
            let sign: i64 = p.img[split..].iter().map(|&(_, s)| s as i64).product();
            Cyclotomic::from_int(a * b * sign)
        })
        .collect();
    Ok(induce(cl, &sub, &sub_cl, &psi))
}

/// Pulls a class function of W back to the classes of W̃.
pub fn lift_to_cover(cover: &SpinCover, cover_cl: &Classes, w_cl: &Classes, chi: &[Cyclotomic]) -> Character {
    cover_cl.reps.iter().map(|&x| chi[w_cl.class_of(cover.base(x))].clone()).collect()
}

/// Genuine types attached to a partition through `σ_(λ,∅) ⊗ S`.
#[derive(Clone, Debug)]
pub struct ReadEntry {
    pub lambda: Partition,
    /// Table indices, one per spin module (deduplicated).
    pub members: Vec<usize>,
}

fn constituents(table: &CharacterTable, chi: &[Cyclotomic]) -> Result<Vec<(usize, Rational)>> {
    Ok(decompose(table, chi)?.into_iter().enumerate().filter(|(_, m)| !m.is_zero()).collect())
}

fn check_partition_of_genuine(table: &CharacterTable, entries: &[ReadEntry]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for e in entries {
        for &m in &e.members {
            if !seen.insert(m) {
                return Err(Error::Table(format!("genuine type {m} reached twice (at {})", e.lambda)));
            }
        }
    }
    let genuine: BTreeSet<usize> =
        table.irreducibles.iter().enumerate().filter(|(_, c)| c.genuine).map(|(i, _)| i).collect();
    if seen != genuine {
        return Err(Error::Table("tensor construction does not exhaust the genuine types".into()));
    }
    Ok(())
}

/// For `W̃(B_n)` or `W̃(C_n)`: `σ̃_λ = σ_(λ,∅) ⊗ S` (resp. `⊗ S^±`), checked
/// irreducible, associate for odd `n`, and exhausting the genuine types.
pub fn read_parameterization(
    cover: &SpinCover,
    cover_cl: &Classes,
    table: &CharacterTable,
    w_cl: &Classes,
    perms: &[SignedPerm],
) -> Result<Vec<ReadEntry>> {
    if !matches!(cover.rs.family, Family::B | Family::C) {
        return Err(Error::Usage("Read's parameterization needs type B or C".into()));
    }
    let spins = cover.spin_characters(cover_cl)?;
    let sign = cover.sign_character(cover_cl);
    let n = cover.rs.rank;
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let base = lift_to_cover(cover, cover_cl, w_cl, &sn_pullback(w_cl, perms, &lambda));
        let mut members = Vec::new();
        for s in &spins {
            let chi = pointwise_product(&base, s);
            if !is_irreducible(cover_cl, &chi)? {
                return Err(Error::Table(format!("σ_({lambda},∅)⊗S is reducible")));
            }
            let idx = table.find(&chi).ok_or_else(|| Error::Table(format!("{lambda}: not in table")))?;
            members.push(idx);
        }
        if members.len() == 2 {
            let twisted = sign_twist(&table.irreducibles[members[0]].values, &sign);
            if members[0] == members[1] || table.find(&twisted) != Some(members[1]) {
                return Err(Error::Table(format!("{lambda}: S± tensors are not an associate pair")));
            }
        }
        out.push(ReadEntry { lambda, members });
    }
    check_partition_of_genuine(table, &out)?;
    Ok(out)
}

/// Restriction data for `W̃(D_n)`: for each λ up to transposition, the
/// genuine constituents of `σ_λ ⊗ S` over all spin modules.
#[derive(Clone, Debug)]
pub struct DnRestriction {
    pub lambda: Partition,
    pub members: Vec<usize>,
    /// `λ = λᵗ` with `n` even: the restriction splits into two pieces of
    /// equal degree.
    pub splits: bool,
}

pub fn dn_restriction(
    cover: &SpinCover,
    cover_cl: &Classes,
    table: &CharacterTable,
    w_cl: &Classes,
    perms: &[SignedPerm],
) -> Result<Vec<DnRestriction>> {
    if cover.rs.family != Family::D {
        return Err(Error::Usage("restriction data needs type D".into()));
    }
    let spins = cover.spin_characters(cover_cl)?;
    let n = cover.rs.rank;
    let mut out = Vec::new();
    let mut done = BTreeSet::new();
    for lambda in partitions(n) {
        let lt = lambda.transpose();
        if done.contains(&lt) {
            continue;
        }
        done.insert(lambda.clone());
        let base = lift_to_cover(cover, cover_cl, w_cl, &sn_pullback(w_cl, perms, &lambda));
        let mut members = Vec::new();
        let mut splits = false;
        for s in &spins {
            let parts = constituents(table, &pointwise_product(&base, s))?;
            if parts.iter().any(|(_, m)| *m != Rational::from_integer(1.into())) {
                return Err(Error::Table(format!("{lambda}: constituent with multiplicity > 1")));
            }
            match parts.len() {
                1 => {}
                2 if n % 2 == 0 && lambda == lt => {
                    let (a, b) = (&table.irreducibles[parts[0].0], &table.irreducibles[parts[1].0]);
                    if a.degree != b.degree {
                        return Err(Error::Table(format!("{lambda}: split pieces differ in degree")));
                    }
                    splits = true;
                }
                k => return Err(Error::Table(format!("{lambda}: restriction has {k} constituents"))),
            }
            members.extend(parts.into_iter().map(|(i, _)| i));
        }
        members.sort_unstable();
        members.dedup();
        out.push(DnRestriction { lambda, members, splits });
    }
    let entries: Vec<ReadEntry> =
        out.iter().map(|d| ReadEntry { lambda: d.lambda.clone(), members: d.members.clone() }).collect();
    check_partition_of_genuine(table, &entries)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprep::{character_table, inner_product, wedge_character};
    use crate::rootsys::{build_root_system, generate_weyl_group};
    use crate::spincover::build_spin_cover;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn murnaghan_nakayama_small() {
        // S₃: standard rep
        assert_eq!(sn_character(&p("2,1"), &[1, 1, 1]), 2);
        assert_eq!(sn_character(&p("2,1"), &[2, 1]), 0);
        assert_eq!(sn_character(&p("2,1"), &[3]), -1);
        assert_eq!(sn_character(&p("1,1,1"), &[2, 1]), -1);
        // S₅ dimensions via hook lengths
        assert_eq!(sn_character(&p("3,2"), &[1; 5]), 5);
        assert_eq!(sn_character(&p("3,1,1"), &[1; 5]), 6);
        assert_eq!(sn_character(&p("3,1,1"), &[5]), 1);
    }

    #[test]
    fn b_characters() {
        let rs = build_root_system(Family::B, 3).unwrap();
        let g = generate_weyl_group(&rs, 100_000).unwrap();
        let cl = Classes::new(&g);
        let perms = signed_permutations(&rs, &g).unwrap();
        let triv = bn_character(&rs, &g, &cl, &perms, &p("3"), &Partition::empty()).unwrap();
        assert!(triv.iter().all(|v| *v == Cyclotomic::one()));
        let refl: Character = cl.reps.iter().map(|&w| Cyclotomic::from_int(g.trace(w))).collect();
        for k in 0..=3 {
            let lam = if k == 3 { Partition::empty() } else { Partition::new(vec![3 - k]).unwrap() };
            let mu = Partition::new(vec![1; k]).unwrap();
            let chi = bn_character(&rs, &g, &cl, &perms, &lam, &mu).unwrap();
            assert_eq!(chi, wedge_character(&g, &cl, &refl, k), "k={k}");
        }
        // σ_(λ,∅) is the pullback of σ_λ
        let a = bn_character(&rs, &g, &cl, &perms, &p("2,1"), &Partition::empty()).unwrap();
        assert_eq!(a, sn_pullback(&cl, &perms, &p("2,1")));
        // ten bipartitions of 3, all irreducible and pairwise orthogonal
        let mut chars = Vec::new();
        for k in 0..=3 {
            for l in partitions(3 - k) {
                for m in partitions(k) {
                    chars.push(bn_character(&rs, &g, &cl, &perms, &l, &m).unwrap());
                }
            }
        }
        assert_eq!(chars.len(), 10);
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = inner_product(&cl, a, b).unwrap();
                assert_eq!(ip, Rational::from_integer(((i == j) as i64).into()));
            }
        }
    }

    #[test]
    fn b2_bipartition_dims() {
        let rs = build_root_system(Family::B, 2).unwrap();
        let g = generate_weyl_group(&rs, 100).unwrap();
        let cl = Classes::new(&g);
        let perms = signed_permutations(&rs, &g).unwrap();
        let chi = bn_character(&rs, &g, &cl, &perms, &p("1"), &p("1")).unwrap();
        assert_eq!(chi[cl.class_of(0)], Cyclotomic::from_int(2));
    }

    #[test]
    fn read_small_ranks() {
        for n in 2..=4 {
            let rs = build_root_system(Family::B, n).unwrap();
            let cover = build_spin_cover(&rs, 1_000_000).unwrap();
            let mut table = character_table(&cover, 1_000_000).unwrap();
            table.annotate(Some(table.classes.class_of(cover.z())), Some(&cover.sign_character(&table.classes)));
            let w_cl = Classes::new(&cover.weyl);
            let perms = signed_permutations(&rs, &cover.weyl).unwrap();
            let entries = read_parameterization(&cover, &table.classes, &table, &w_cl, &perms).unwrap();
            assert_eq!(entries.len(), partitions(n).len());
            let expect = if n % 2 == 0 { 1 } else { 2 };
            assert!(entries.iter().all(|e| e.members.len() == expect));
        }
    }

    #[test]
    fn d_restrictions() {
        for n in 3..=4 {
            let rs = build_root_system(Family::D, n).unwrap();
            let cover = build_spin_cover(&rs, 1_000_000).unwrap();
            let mut table = character_table(&cover, 1_000_000).unwrap();
            table.annotate(Some(table.classes.class_of(cover.z())), Some(&cover.sign_character(&table.classes)));
            let w_cl = Classes::new(&cover.weyl);
            let perms = signed_permutations(&rs, &cover.weyl).unwrap();
            let res = dn_restriction(&cover, &table.classes, &table, &w_cl, &perms).unwrap();
            if n == 3 {
                assert_eq!(res.len(), 2);
                assert!(res.iter().all(|r| !r.splits));
            } else {
                let square = res.iter().find(|r| r.lambda == p("2,2")).unwrap();
                assert!(square.splits);
                assert_eq!(square.members.len(), 2);
                // even rank: every genuine type is its own associate, the two
                // pieces included
                let sign = cover.sign_character(&table.classes);
                for &m in &square.members {
                    let tw = sign_twist(&table.irreducibles[m].values, &sign);
                    assert_eq!(table.find(&tw), Some(m));
                }
                let hook = res.iter().find(|r| r.lambda == p("3,1") || r.lambda == p("2,1,1")).unwrap();
                assert!(!hook.splits);
                assert_eq!(hook.members.len(), 1);
            }
        }
    }
}
