//! Verification suites, shared by the command line and the acceptance tests.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{distinct_partitions, partition_count, partitions, signed_permutations, verify_identity_eq_iden, Partition};
use crate::error::{Error, Result};
use crate::grouprep::{
    character_table, iota_bar_rank, iota_s_surjectivity, split_classes, wedge_character, Character,
    Classes, FiniteGroup,
};
use crate::combinat::lift_to_cover;
use crate::linalg;
use crate::nilpotent::{cuspidal_case, CuspidalFamily};
use crate::num::{int, Cyclotomic, QuadValue, Rational};
use crate::psi::reference::{E6, E7, E8, F4, G2};
use crate::psi::{self, simply_laced_consistency, verify_exceptional, verify_generalized, verify_theorem1, CoverData, Report};
use crate::rootsys::{build_root_system, conjugacy_classes, generate_weyl_group, weyl_group_order, Family, RootSystem};
use crate::spincover::{build_spin_cover, casimir_element, casimir_scalar, SpinCover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    PaperTables,
    Theorem1,
    Identities,
    Counting,
    Generalized,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "paper-tables" => Suite::PaperTables,
            "theorem1" => Suite::Theorem1,
            "identities" => Suite::Identities,
            "counting" => Suite::Counting,
            "generalized" => Suite::Generalized,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::PaperTables => "paper-tables",
            Suite::Theorem1 => "theorem1",
            Suite::Identities => "identities",
            Suite::Counting => "counting",
            Suite::Generalized => "generalized",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Run the E6 cover computations.
    pub long: bool,
    pub bound: u128,
}

pub fn run(suite: Suite, opts: &Options) -> Result<Vec<Report>> {
    match suite {
        Suite::PaperTables => paper_tables(opts),
        Suite::Theorem1 => theorem1(opts),
        Suite::Identities => identities(opts),
        Suite::Counting => counting(opts),
        Suite::Generalized => generalized(opts),
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::PaperTables, Suite::Theorem1, Suite::Identities, Suite::Counting, Suite::Generalized] {
                out.extend(run(s, opts)?);
            }
            Ok(out)
        }
    }
}

fn rs(family: Family, rank: usize) -> Result<RootSystem> {
    build_root_system(family, rank)
}

pub fn paper_tables(opts: &Options) -> Result<Vec<Report>> {
    let mut out = vec![verify_exceptional(&G2, opts.bound)?, verify_exceptional(&F4, opts.bound)?];
    if opts.long {
        out.extend(e6_suite(opts.bound)?);
    } else {
        let mut r = Report::new("table E6");
        r.note("skipped: the E6 cover table needs --long");
        out.push(r);
    }
    for t in [&E6, &E7, &E8] {
        out.push(simply_laced_consistency(t)?);
    }
    Ok(out)
}

/// E6 table rows and the `D₄(a₁)` fiber facts, from one computed table.
pub fn e6_suite(bound: u128) -> Result<Vec<Report>> {
    let data = CoverData::new(&rs(Family::E, 6)?, bound)?;
    Ok(vec![psi::verify_exceptional_on(&E6, &data)?, psi::verify_counterexample_on(&data)?])
}

pub const THEOREM1_CASES: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::B, 2),
    (Family::B, 3),
    (Family::B, 4),
    (Family::C, 2),
    (Family::C, 3),
    (Family::C, 4),
    (Family::D, 4),
];

pub const ANCHOR_CASES: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::A, 6),
    (Family::A, 7),
    (Family::B, 2),
    (Family::B, 3),
    (Family::B, 4),
    (Family::B, 5),
    (Family::B, 6),
    (Family::C, 2),
    (Family::C, 3),
    (Family::C, 4),
    (Family::C, 5),
    (Family::C, 6),
    (Family::D, 4),
    (Family::D, 5),
    (Family::D, 6),
    (Family::G, 2),
    (Family::F, 4),
];

pub fn theorem1(opts: &Options) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for &(f, n) in THEOREM1_CASES {
        out.push(verify_theorem1(&rs(f, n)?, opts.bound)?);
    }
    let mut anchors = Report::new("spin modules");
    for &(f, n) in ANCHOR_CASES {
        anchors.merge(spin_anchor(&rs(f, n)?, opts.bound)?);
    }
    out.push(anchors);
    Ok(out)
}

/// Casimir scalar of each spin module against `⟨2ρ̌,2ρ̌⟩`; needs only the
/// classes of W̃, not its character table.
pub fn spin_anchor(rs: &RootSystem, bound: u128) -> Result<Report> {
    let cover = build_spin_cover(rs, bound)?;
    let cl = Classes::new(&cover);
    let omega = casimir_element(&cover, &cl)?;
    let mut report = Report::new(rs.label());
    let want = QuadValue::from_rational(rs.two_rho_check_norm());
    for (k, s) in cover.spin_characters(&cl)?.iter().enumerate() {
        report.compare(format!("spin module {k}: scalar is <2ρ̌,2ρ̌>"), &want, &casimir_scalar(&cl, &omega, s)?);
    }
    Ok(report)
}

pub const COVER_CASES: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::B, 2),
    (Family::B, 3),
    (Family::B, 4),
    (Family::C, 3),
    (Family::D, 4),
    (Family::G, 2),
    (Family::F, 4),
];

pub fn identities(opts: &Options) -> Result<Vec<Report>> {
    let mut iden = Report::new("content identity on strict partitions");
    for n in 1..=12 {
        let ps = distinct_partitions(n);
        let bad: Vec<String> = ps.iter().filter(|l| !verify_identity_eq_iden(l)).map(|l| l.to_string()).collect();
        iden.record(format!("n={n}: {} strict partitions", ps.len()), bad.is_empty(), "all hold", if bad.is_empty() { "all hold".into() } else { bad.join(" ") });
    }
    let mut out = vec![iden];
    for &(f, n) in COVER_CASES {
        out.push(spin_square_identities(&rs(f, n)?, opts.bound)?);
    }
    Ok(out)
}

/// `det(1 + εw)` on the root span from the characteristic polynomial.
fn det_one_plus(cover: &SpinCover, x: usize, eps: i64) -> Rational {
    // det(xI − w) at x = −ε, times (−ε)^r
    let poly = cover.weyl.element(cover.base(x)).char_poly();
    let at = int(-eps);
    let mut v = Rational::zero();
    let mut p = Rational::one();
    for c in &poly {
        v += c * &p;
        p *= &at;
    }
    let r = cover.rs.rank as i32;
    v * at.pow(r)
}

/// The tensor-square identity for the spin modules on every class, and the
/// nonvanishing criteria for spin traces.
pub fn spin_square_identities(rs: &RootSystem, bound: u128) -> Result<Report> {
    let cover = build_spin_cover(rs, bound)?;
    let cl = Classes::new(&cover);
    let r = rs.rank;
    let refl = cover.reflection_character(&cl);
    let wedges: Vec<Character> = (0..=r).map(|k| wedge_character(&cover, &cl, &refl, k)).collect();
    let spins = cover.spin_characters(&cl)?;
    let mut report = Report::new(format!("{} spin traces", rs.label()));
    let vol_sq = if (r * (r + 1) / 2) % 2 == 0 { 1 } else { -1 };
    let mut stens_bad = Vec::new();
    let mut wedge_bad = Vec::new();
    let mut vanish_bad = Vec::new();
    for (c, &x) in cl.reps.iter().enumerate() {
        let det = cover.weyl.det(cover.base(x));
        let plus = det_one_plus(&cover, x, 1);
        let minus = det_one_plus(&cover, x, -1);
        let alt = |sign: i64| -> Cyclotomic {
            wedges.iter().enumerate().fold(Cyclotomic::zero(), |acc, (k, w)| {
                let t = if sign < 0 && k % 2 == 1 { -&w[c] } else { w[c].clone() };
                &acc + &t
            })
        };
        let sum_plus = alt(1);
        let sum_minus = alt(-1);
        if sum_plus != Cyclotomic::from_rational(plus.clone()) || sum_minus != Cyclotomic::from_rational(minus.clone()) {
            wedge_bad.push(c);
        }
        if r % 2 == 0 {
            let s = &spins[0][c];
            if &(s * s) != &sum_plus {
                stens_bad.push(c);
            }
            if s.is_zero() != plus.is_zero() {
                vanish_bad.push(c);
            }
        } else {
            let (a, b) = (&spins[0][c], &spins[1][c]);
            let ok = if det == 1 {
                &(&(a * a) + &(b * b)) == &sum_plus
            } else {
                let d = a - b;
                (&d * &d) == sum_minus.scale(&int(2 * vol_sq))
            };
            if !ok {
                stens_bad.push(c);
            }
            if !minus.is_zero() && (a.is_zero() || b.is_zero()) {
                vanish_bad.push(c);
            }
        }
    }
    let fmt = |v: &[usize]| if v.is_empty() { "none".to_string() } else { format!("{v:?}") };
    report.record("Σ±tr ∧^k V equals det(1±w) on every class", wedge_bad.is_empty(), "none", fmt(&wedge_bad));
    report.record("spin tensor-square identity on every class", stens_bad.is_empty(), "none", fmt(&stens_bad));
    let crit = if r % 2 == 0 { "tr_S ≠ 0 iff det(1+w) ≠ 0" } else { "det(1−w) ≠ 0 implies tr_S± ≠ 0" };
    report.record(crit, vanish_bad.is_empty(), "no exceptions", fmt(&vanish_bad));
    Ok(report)
}

/// Number of partitions of `n` with an even number of parts.
fn even_length_partitions(n: usize) -> usize {
    partitions(n).iter().filter(|p| p.len() % 2 == 0).count()
}

/// Elliptic classes of W(B_n) or W(D_n) by signed cycle type: a class for
/// each pair (positive cycles, negative cycles), with an even number of
/// negative cycles in type D; each representative is tested through
/// `det(1 − w)` of its signed permutation matrix. Split D-classes have only
/// positive cycles and are never elliptic.
fn elliptic_count_by_cycle_types(family: Family, n: usize) -> usize {
    let mut count = 0;
    for k in 0..=n {
        for pos in partitions(n - k) {
            for neg in partitions(k) {
                if family == Family::D && neg.len() % 2 == 1 {
                    continue;
                }
                let mut m: linalg::RMatrix = vec![vec![Rational::zero(); n]; n];
                let mut start = 0;
                let cycles = pos.parts().iter().map(|&l| (l, 1)).chain(neg.parts().iter().map(|&l| (l, -1)));
                for (len, sign) in cycles {
                    for j in 0..len {
                        // e_{start+j} ↦ e_{start+j+1}, closing the cycle with the sign
                        let (to, s) = if j + 1 == len { (start, sign) } else { (start + j + 1, 1) };
                        m[to][start + j] = int(s);
                    }
                    start += len;
                }
                let one_minus: linalg::RMatrix =
                    (0..n).map(|i| (0..n).map(|j| if i == j { int(1) - &m[i][j] } else { -m[i][j].clone() }).collect()).collect();
                if !linalg::det(&one_minus).is_zero() {
                    count += 1;
                }
            }
        }
    }
    count
}

fn elliptic_count(family: Family, n: usize, bound: u128) -> Result<(usize, bool)> {
    if weyl_group_order(family, n) <= bound {
        let g = generate_weyl_group(&rs(family, n)?, bound)?;
        return Ok((conjugacy_classes(&g).iter().filter(|c| c.elliptic).count(), true));
    }
    if matches!(family, Family::B | Family::D) {
        return Ok((elliptic_count_by_cycle_types(family, n), false));
    }
    Err(Error::BoundExceeded { order: weyl_group_order(family, n), bound })
}

/// Whether `σ ↦ σ⊗S` reaches every genuine character, as stated: only in
/// types B, D, G2, F4 and E8.
pub const SURJECTIVITY_CASES: &[(Family, usize, bool)] = &[
    (Family::A, 2, false),
    (Family::A, 3, false),
    (Family::A, 4, false),
    (Family::A, 5, false),
    (Family::B, 2, true),
    (Family::B, 3, true),
    (Family::B, 4, true),
    (Family::D, 4, true),
    (Family::D, 5, true),
    (Family::G, 2, true),
    (Family::F, 4, true),
];

pub fn counting(opts: &Options) -> Result<Vec<Report>> {
    let mut ell = Report::new("elliptic classes of W");
    let mut cases: Vec<(Family, usize, usize)> = (1..=7).map(|n| (Family::A, n, 1)).collect();
    cases.extend((2..=8).map(|n| (Family::B, n, partition_count(n) as usize)));
    cases.extend((4..=8).map(|n| (Family::D, n, even_length_partitions(n))));
    cases.extend([(Family::G, 2, 3), (Family::F, 4, 9), (Family::E, 6, 5)]);
    for (f, n, want) in cases {
        let (got, enumerated) = elliptic_count(f, n, opts.bound)?;
        ell.compare(format!("{f:?}{n}"), &want, &got);
        if !enumerated {
            ell.note(format!("{f:?}{n}: counted over signed cycle types"));
        }
    }
    let mut out = vec![ell];

    let mut red = Report::new("genuine types up to association");
    let mut cases: Vec<(Family, usize, usize)> = (1..=5).map(|n| (Family::A, n, distinct_partitions(n + 1).len())).collect();
    cases.extend((2..=5).map(|n| (Family::B, n, partition_count(n) as usize)));
    cases.extend([(Family::D, 4, 3), (Family::G, 2, 3), (Family::F, 4, 9)]);
    if opts.long {
        cases.push((Family::E, 6, 6));
    }
    for (f, n, want) in cases {
        let data = CoverData::new(&rs(f, n)?, opts.bound)?;
        let genuine = data.genuine();
        let mut classes = BTreeSet::new();
        let mut self_assoc = 0;
        for &i in &genuine {
            let j = data.associate(i)?;
            classes.insert(i.min(j));
            if i == j {
                self_assoc += 1;
            }
        }
        let label = format!("{f:?}{n}");
        red.compare(format!("{label}: |genuine/∼|"), &want, &classes.len());
        if f == Family::B && n % 2 == 1 {
            red.compare(format!("{label}: self-associate types"), &0, &self_assoc);
        }
        if f == Family::A && n % 2 == 1 {
            let odd = distinct_partitions(n + 1).iter().filter(|p| p.len() % 2 == 1).count();
            red.compare(format!("{label}: self-associate types"), &odd, &self_assoc);
        }
    }
    out.push(red);

    for (f, n) in [(Family::B, 4), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
        out.push(split_elliptic(&rs(f, n)?, opts.bound)?);
    }
    let mut surj = Report::new("σ ↦ σ⊗S onto the genuine characters");
    for (f, n, want) in SURJECTIVITY_CASES.iter().copied() {
        let cover = build_spin_cover(&rs(f, n)?, opts.bound)?;
        let cl = Classes::new(&cover);
        let spin = &cover.spin_characters(&cl)?[0];
        surj.compare(format!("{f:?}{n}"), &want, &iota_s_surjectivity(&cover, &cl, cover.z(), spin));
    }
    out.push(surj);
    let mut bar = Report::new("map on elliptic spaces");
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::B, 4), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
        elliptic_iota_bar(&rs(f, n)?, opts.bound, &mut bar)?;
    }
    out.push(bar);
    Ok(out)
}

/// Elliptic classes of W that split in W̃, against the explicit lists: even
/// parts only in B_{2n}; even parts only or distinct odd parts in D_{2n};
/// in G2 and F4 the classes are named by characteristic polynomial, which
/// separates the split ones from the rest.
pub fn split_elliptic(rs: &RootSystem, bound: u128) -> Result<Report> {
    let cover = build_spin_cover(rs, bound)?;
    let cl = Classes::new(&cover);
    let spin = &cover.spin_characters(&cl)?[0];
    let wcl = conjugacy_classes(&cover.weyl);
    let mut report = Report::new(format!("{} split elliptic classes", rs.label()));
    let perms = matches!(rs.family, Family::B | Family::D).then(|| signed_permutations(rs, &cover.weyl)).transpose()?;
    let mut got = BTreeSet::new();
    let mut want = BTreeSet::new();
    let mut spin_bad = Vec::new();
    for c in wcl.iter().filter(|c| c.elliptic) {
        let w = c.rep_index;
        let name = match &perms {
            Some(p) => Partition::new(p[w].cycle_type())?.to_string(),
            None => poly_name(&c.char_poly),
        };
        let splits = cover.class_splits(&cl, w);
        if splits {
            got.insert(name.clone());
        }
        let listed = match &perms {
            Some(p) => {
                let parts = p[w].cycle_type();
                let even = parts.iter().all(|l| l % 2 == 0);
                let odd_distinct = parts.iter().all(|l| l % 2 == 1) && parts.windows(2).all(|x| x[0] != x[1]);
                even || (rs.family == Family::D && odd_distinct)
            }
            None => listed_polys(rs.family).contains(&name.as_str()),
        };
        if listed {
            want.insert(name.clone());
        }
        if spin[cl.class_of(2 * w)].is_zero() == splits {
            spin_bad.push(name);
        }
    }
    let show = |s: &BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(" ");
    report.record("split elliptic classes", got == want, show(&want), show(&got));
    report.record("tr_S vanishes exactly off the split elliptic classes", spin_bad.is_empty(), "none", spin_bad.join(" "));
    Ok(report)
}

/// Characteristic polynomial as space-separated coefficients, constant term
/// first.
fn poly_name(p: &[Rational]) -> String {
    p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn listed_polys(family: Family) -> &'static [&'static str] {
    match family {
        // x²+x+1, x²−x+1
        Family::G => &["1 1 1", "1 -1 1"],
        // (x²+x+1)², (x²+1)², x⁴+1, x⁴−x²+1, (x²−x+1)²
        Family::F => &["1 2 3 2 1", "1 0 2 0 1", "1 0 0 0 1", "1 0 -1 0 1", "1 -2 3 -2 1"],
        _ => &[],
    }
}

/// `ῑ_S` is onto the genuine elliptic space, and injective exactly in odd
/// rank or type A.
fn elliptic_iota_bar(rs: &RootSystem, bound: u128, report: &mut Report) -> Result<()> {
    let cover = build_spin_cover(rs, bound)?;
    let cl = Classes::new(&cover);
    let spin = &cover.spin_characters(&cl)?[0];
    let wtable = character_table(&cover.weyl, usize::try_from(bound).unwrap_or(usize::MAX))?;
    let wchars: Vec<Character> = wtable.irreducibles.iter().map(|i| lift_to_cover(&cover, &cl, &wtable.classes, &i.values)).collect();
    let elliptic: Vec<bool> = cl.reps.iter().map(|&x| !det_one_plus(&cover, x, -1).is_zero()).collect();
    let split = split_classes(&cover, &cl, cover.z());
    // classes of W: each pair {C, zC} or unsplit class counted once
    let mut seen = BTreeSet::new();
    let (mut ell_w, mut ell_gen) = (0, 0);
    for c in 0..cl.len() {
        let zc = cl.class_of(cover.mul(cover.z(), cl.reps[c]));
        if !elliptic[c] || !seen.insert(c.min(zc)) {
            continue;
        }
        ell_w += 1;
        if split[c] {
            ell_gen += 1;
        }
    }
    let rank = iota_bar_rank(&cover, &cl, cover.z(), &elliptic, spin, &wchars);
    let label = rs.label();
    report.compare(format!("{label}: rank of the image equals dim of the genuine elliptic space"), &ell_gen, &rank);
    let iso = rs.rank % 2 == 1 || rs.family == Family::A;
    report.compare(format!("{label}: isomorphism"), &iso, &(ell_w == ell_gen));
    Ok(())
}

pub fn generalized(opts: &Options) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for f in [CuspidalFamily::G2InE6, CuspidalFamily::F4InE7] {
        out.push(verify_generalized(&cuspidal_case(f, 0, 0)?, opts.bound)?);
    }
    for f in [CuspidalFamily::BSp, CuspidalFamily::BSoOdd, CuspidalFamily::CLike4nA, CuspidalFamily::CLike4nB] {
        for n in 2..=3 {
            out.push(verify_generalized(&cuspidal_case(f, n, 1)?, opts.bound)?);
        }
    }
    Ok(out)
}
