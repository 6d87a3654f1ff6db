mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::Zero;

use common::*;
use spinweyl::combinat::{distinct_partitions, partition_count, verify_identity_eq_iden, Partition};
use spinweyl::grouprep::{character_table, Classes, FiniteGroup};
use spinweyl::nilpotent::{cuspidal_case, CuspidalFamily};
use spinweyl::num::{int, rat, QuadValue, Rational};
use spinweyl::psi::{self, reference, CoverData};
use spinweyl::rootsys::{build_root_system, conjugacy_classes, elliptic_class_count, generate_weyl_group, Family, RootSystem};
use spinweyl::spincover::{build_spin_cover, casimir_element, casimir_scalar, SpinCover};
use spinweyl::suites::{self, Options};

const BOUND: u128 = 200_000;

fn rs(f: Family, n: usize) -> RootSystem {
    build_root_system(f, n).unwrap()
}

#[derive(Clone, Copy, PartialEq)]
enum Pair {
    A2(Option<bool>),
    B2,
    G2,
}

/// `s̃_α s̃_β` for the first obtuse positive pair of the given shape;
/// `A2(Some(true))` asks for short roots (long coroots).
fn pair_element(c: &SpinCover, kind: Pair) -> usize {
    let rs = &c.rs;
    let np = rs.num_positive();
    let longest = (0..np).map(|a| rs.inner(&rs.positive_roots[a], &rs.positive_roots[a])).max().unwrap();
    for a in 0..np {
        for b in 0..np {
            let (ra, rb) = (&rs.positive_roots[a], &rs.positive_roots[b]);
            let (na, nb, ip) = (rs.inner(ra, ra), rs.inner(rb, rb), rs.inner(ra, rb));
            if ip >= Rational::zero() {
                continue;
            }
            let ok = match kind {
                Pair::A2(short) => {
                    na == nb && &ip * int(-2) == na && short.map_or(true, |s| s == (na < longest))
                }
                Pair::B2 => &ip * &ip * int(2) == &na * &nb,
                Pair::G2 => &ip * &ip * int(4) == &na * &nb * int(3),
            };
            if ok {
                return c.mul(c.root_element(a), c.root_element(b));
            }
        }
    }
    panic!("no pair")
}

/// One `(degree, traces)` entry per association class of genuine types.
fn genuine_traces(data: &CoverData, kinds: &[Pair]) -> Vec<(u64, Vec<String>)> {
    let cl = data.classes();
    let cols: Vec<usize> = kinds.iter().map(|&k| cl.class_of(pair_element(&data.cover, k))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in data.genuine() {
        if seen.contains(&i) {
            continue;
        }
        let j = data.associate(i).unwrap();
        seen.insert(i);
        seen.insert(j);
        let tr = cols.iter().map(|&c| data.table.irreducibles[i].values[c].to_quad().unwrap().render()).collect();
        out.push((data.degree(i), tr));
    }
    out.sort();
    out
}

fn expected(rows: &[(u64, &[(i64, i64, i64)])]) -> Vec<(u64, Vec<String>)> {
    let mut v: Vec<_> = rows.iter().map(|(d, t)| (*d, t.iter().map(|&(a, b, c)| quad(a, b, c).render()).collect())).collect();
    v.sort();
    v
}

fn genuine_classes(data: &CoverData) -> usize {
    let g = data.genuine();
    let mut seen = BTreeSet::new();
    let mut k = 0;
    for &i in &g {
        if seen.insert(i) {
            seen.insert(data.associate(i).unwrap());
            k += 1;
        }
    }
    k
}

fn scalars_match_diagrams(table: &reference::ReferenceTable, root: &RootSystem, diagrams: &[(&str, &[i64])]) -> bool {
    let rows = psi::psi_exceptional(table, BOUND).unwrap();
    rows.iter().all(|r| {
        let w = diagrams.iter().find(|(o, _)| *o == r.orbit).unwrap().1;
        r.casimir_scalar == QuadValue::from_rational(diagram_norm(root, w))
    })
}

const G2_DIAGRAMS: &[(&str, &[i64])] = &[("G2", &[2, 2]), ("G2(a1)", &[0, 2])];
const F4_DIAGRAMS: &[(&str, &[i64])] =
    &[("F4", &[2, 2, 2, 2]), ("F4(a1)", &[2, 2, 0, 2]), ("F4(a2)", &[0, 2, 0, 2]), ("F4(a3)", &[0, 2, 0, 0])];

#[test]
fn criterion_1_g2_table() {
    let t = Instant::now();
    let root = rs(Family::G, 2);
    let data = CoverData::new(&root, BOUND).unwrap();
    let g = data.genuine();
    let all_two = g.len() == 3 && g.iter().all(|&i| data.degree(i) == 2);
    let want = expected(&[(2, &[(1, 0, 0), (0, 0, 1)]), (2, &[(-2, 0, 0), (0, 0, 0)]), (2, &[(1, 0, 0), (0, 0, -1)])]);
    let short = genuine_traces(&data, &[Pair::A2(Some(true)), Pair::G2]);
    let long = genuine_traces(&data, &[Pair::A2(Some(false)), Pair::G2]);
    let scalars = scalars_match_diagrams(&reference::G2, &root, G2_DIAGRAMS);
    let secs = t.elapsed().as_secs_f64();
    let pass = all_two && short == want && long == want && scalars;
    line(1, pass, &format!("three 2-dim genuine types, traces and <h,h> exact, {secs:.2}s"));
    assert!(all_two);
    assert_eq!(short, want);
    assert_eq!(long, want);
    assert!(scalars);
}

const F4_KINDS: &[Pair] = &[Pair::A2(Some(true)), Pair::A2(Some(false)), Pair::B2];

fn f4_rows(printed: bool) -> Vec<(u64, Vec<String>)> {
    let (r8, r12): (&[(i64, i64, i64)], &[(i64, i64, i64)]) = if printed {
        (&[(0, 0, 0), (0, 0, 0), (0, -2, 0)], &[(-2, 0, 0), (-2, 0, 0), (0, 0, 0)])
    } else {
        (&[(-2, 0, 0), (-2, 0, 0), (0, 0, 0)], &[(0, 0, 0), (0, 0, 0), (0, -2, 0)])
    };
    expected(&[
        (4, &[(2, 0, 0), (2, 0, 0), (0, 2, 0)]),
        (12, &[(0, 0, 0), (0, 0, 0), (0, 2, 0)]),
        (8, &[(4, 0, 0), (-2, 0, 0), (0, 0, 0)]),
        (24, &[(0, 0, 0), (0, 0, 0), (0, 0, 0)]),
        (8, &[(-2, 0, 0), (4, 0, 0), (0, 0, 0)]),
        (8, r8),
        (12, r12),
        (8, &[(-2, 0, 0), (-2, 0, 0), (0, 0, 0)]),
        (4, &[(2, 0, 0), (2, 0, 0), (0, -2, 0)]),
    ])
}

#[test]
fn criterion_2_f4_table() {
    let t = Instant::now();
    let root = rs(Family::F, 4);
    let data = CoverData::new(&root, BOUND).unwrap();
    let got = genuine_traces(&data, F4_KINDS);
    let corrected = got == f4_rows(false);
    let verbatim = got == f4_rows(true);
    let scalars = scalars_match_diagrams(&reference::F4, &root, F4_DIAGRAMS);
    let secs = t.elapsed().as_secs_f64();
    let pass = corrected && scalars && secs < 60.0;
    line(
        2,
        pass && verbatim,
        &format!(
            "{} association classes, scalars exact, {secs:.1}s; traces match only after exchanging the 8_ss and 12_ss triples",
            got.len()
        ),
    );
    assert!(corrected, "{got:?}");
    assert!(!verbatim);
    assert!(scalars);
}

#[test]
#[ignore = "the printed F4(a3) traces of 8_ss and 12_ss are exchanged"]
fn f4_table_as_printed() {
    let data = CoverData::new(&rs(Family::F, 4), BOUND).unwrap();
    assert_eq!(genuine_traces(&data, F4_KINDS), f4_rows(true));
}

const ANCHORS: &[(Family, usize)] = &[
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

#[test]
fn criterion_3_spin_anchor() {
    let mut bad = Vec::new();
    for &(f, n) in ANCHORS {
        let root = rs(f, n);
        let cover = build_spin_cover(&root, BOUND).unwrap();
        let cl = Classes::new(&cover);
        let omega = casimir_element(&cover, &cl).unwrap();
        let want = QuadValue::from_rational(two_rho_check_norm(&root));
        for s in cover.spin_characters(&cl).unwrap() {
            if casimir_scalar(&cl, &omega, &s).unwrap() != want {
                bad.push(root.label());
            }
        }
    }
    line(3, bad.is_empty(), &format!("{} types, spin scalar = <2ρ̌,2ρ̌>; failures {bad:?}", ANCHORS.len()));
    assert!(bad.is_empty());
}

/// `χ(s̃₁s̃₂)/χ(1)` for `λ ∈ DP(n)`.
fn three_cycle_ratio(l: &[usize]) -> Rational {
    let n = l.iter().sum::<usize>() as i64;
    let s: Rational = l.iter().map(|&x| int(x as i64 * (x as i64 * x as i64 - 1))).sum::<Rational>() / int(6);
    (s - int(n * (n - 1) / 2)) / int(n * (n - 1) * (n - 2) / 3)
}

#[test]
fn criterion_4_type_a() {
    let mut checked = 0;
    for n in 2..=6 {
        let root = rs(Family::A, n - 1);
        let rows = psi::psi_classical(Family::A, n - 1, &[], BOUND).unwrap();
        let data = CoverData::new(&root, BOUND).unwrap();
        let c = &data.cover;
        let x = c.mul_gen(c.mul_gen(0, 0), 1.min(n - 2));
        let cl = data.classes();
        let want: BTreeSet<Vec<usize>> = strict_partitions(n).into_iter().collect();
        let got: BTreeSet<Vec<usize>> = rows.iter().map(|r| r.lambda.parts().to_vec()).collect();
        assert_eq!(got, want, "DP({n})");
        for r in &rows {
            let l = r.lambda.parts();
            let law: Rational = l.iter().map(|&x| int(x as i64 * (x as i64 * x as i64 - 1))).sum::<Rational>() / int(3);
            assert_eq!(r.casimir_scalar, Some(QuadValue::from_rational(law.clone())), "{l:?}");
            assert_eq!(partition_norm(l, None), law, "{l:?}");
            assert_eq!(r.orbit.as_ref().unwrap().h_norm_sq, law);
            for (&i, &d) in r.genuine.iter().zip(&r.dims) {
                assert_eq!(int(d as i64), schur_degree(l), "{l:?}");
                assert_eq!(data.degree(i), d);
                if n >= 3 {
                    let v = data.table.irreducibles[i].values[cl.class_of(x)].to_quad().unwrap();
                    assert_eq!(v, QuadValue::from_rational(three_cycle_ratio(l) * int(d as i64)), "{l:?}");
                }
            }
            checked += 1;
        }
    }
    line(4, true, &format!("{checked} strict partitions, n ≤ 6: scalar, <h,h>, Schur degree, 3-cycle trace"));
}

#[test]
fn criterion_5_bc() {
    let t = Instant::now();
    let mut checked = 0;
    let mut converse = Vec::new();
    for (f, eps) in [(Family::B, int(1)), (Family::C, rat(1, 2))] {
        for n in 2..=5 {
            for r in psi::psi_classical(f, n, &[], BOUND).unwrap() {
                let l = r.lambda.parts().to_vec();
                let lt = &r.lambda;
                let boxes: Vec<Rational> = l
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &p)| (0..p).map(move |j| int(j as i64 - i as i64)))
                    .map(|c| (c + &eps) * int(2))
                    .collect();
                let law: Rational = boxes.iter().map(|x| x * x).sum();
                assert_eq!(r.casimir_scalar, Some(QuadValue::from_rational(law.clone())), "{f:?}{n} {l:?}");
                assert_eq!(r.formula_scalar, law);
                let orbit = r.orbit.as_ref().unwrap();
                let parts = orbit.partition.parts();
                assert_eq!(partition_norm(parts, Some(n)), law, "{f:?}{n} {l:?}");
                let mut eig: Vec<Rational> = boxes.iter().map(abs).collect();
                eig.sort_by(|a, b| b.cmp(a));
                let half: Vec<Rational> = h_eigenvalues(parts)[..n].iter().map(|&x| int(x)).collect();
                assert_eq!(eig, half, "{f:?}{n} {l:?}");
                let distinct = parts.windows(2).all(|w| w[0] != w[1]);
                let k = r.springer.len();
                assert!(k.is_power_of_two(), "{f:?}{n} {l:?}");
                assert!(!distinct || k == 1, "{f:?}{n} {l:?}");
                if k == 1 && !distinct {
                    converse.push(format!("{f:?}{n} {lt}->{}", orbit.partition));
                }
                assert_eq!(orbit.distinguished, distinct);
                for s in &r.springer {
                    let w = r.tensor_witness.iter().find(|w| w.springer.to_string() == s.to_string());
                    assert!(w.is_some_and(|w| !w.multiplicity.is_zero()), "{f:?}{n} {l:?} {s}");
                }
                checked += 1;
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    line(
        5,
        secs < 300.0 && converse.is_empty(),
        &format!(
            "{checked} rows in B2–B5, C2–C5: 4p2, orbit, tensor witnesses, {secs:.1}s; singleton Slooten output on non-distinguished orbits {converse:?}"
        ),
    );
}

#[test]
#[ignore = "B_n, λ = (n−1,1) gives one Slooten output on the non-distinguished orbit (2n−1,1,1)"]
fn slooten_singletons_exactly_distinguished() {
    for f in [Family::B, Family::C] {
        for n in 2..=5 {
            for r in psi::psi_classical(f, n, &[], BOUND).unwrap() {
                let parts = r.orbit.as_ref().unwrap().partition.parts().to_vec();
                let distinct = parts.windows(2).all(|w| w[0] != w[1]);
                assert_eq!(r.springer.len() == 1, distinct, "{f:?}{n} {}", r.lambda);
            }
        }
    }
}

fn det_values(c: &SpinCover, x: usize) -> (Rational, Rational, Rational) {
    let n = c.rs.rank;
    let cp = char_poly(&c.weyl.matrix(c.base(x)), n);
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    // det(1 − w), det(1 + w), det w
    (eval(&cp, 1), &sign * eval(&cp, -1), &sign * &cp[0])
}

const COVERS: &[(Family, usize)] = &[
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

#[test]
fn criterion_6_identities() {
    let mut iden = 0;
    for n in 2..=12 {
        for l in strict_partitions(n) {
            let lhs = iden_lhs(&l);
            assert_eq!(lhs, iden_rhs(&l), "{l:?}");
            assert_eq!(laurent_coefficient(&l), &lhs * int(-2), "{l:?}");
            assert!(verify_identity_eq_iden(&Partition::new(l.clone()).unwrap()));
            iden += 1;
        }
    }
    let mut classes = 0;
    for &(f, n) in COVERS {
        let cover = build_spin_cover(&rs(f, n), BOUND).unwrap();
        let cl = Classes::new(&cover);
        let spins = cover.spin_characters(&cl).unwrap();
        for c in 0..cl.len() {
            let x = cl.reps[c];
            let (dm, dp, det) = det_values(&cover, x);
            let sq: Vec<f64> = spins.iter().map(|s| s[c].to_complex().norm_sqr()).collect();
            if n % 2 == 0 {
                assert_eq!(spins.len(), 1);
                assert!((sq[0] - rat_f(&dp)).abs() < 1e-9, "{f:?}{n} class {c}");
                assert_eq!(spins[0][c].is_zero(), dp.is_zero());
            } else {
                if det == int(1) {
                    let total: f64 = sq.iter().sum();
                    assert!((total - rat_f(&dp)).abs() < 1e-9, "{f:?}{n} class {c}");
                }
                if !dm.is_zero() {
                    assert!(spins.iter().all(|s| !s[c].is_zero()), "{f:?}{n} class {c}");
                }
            }
            classes += 1;
        }
    }
    let opts = Options { long: false, bound: BOUND };
    let lib = suites::identities(&opts).unwrap().iter().all(|r| r.passed());
    line(6, lib, &format!("{iden} strict partitions n ≤ 12; tensor-square and nonvanishing on {classes} classes of {} covers", COVERS.len()));
    assert!(lib);
}

fn rat_f(r: &Rational) -> f64 {
    spinweyl::num::rat_to_f64(r)
}

fn even_length_partitions(n: usize) -> usize {
    partitions(n).iter().filter(|p| p.len() % 2 == 0).count()
}

/// Elliptic classes by brute force: `det(1 − w)` on each class representative.
fn elliptic_by_classes(root: &RootSystem) -> usize {
    let g = generate_weyl_group(root, BOUND).unwrap();
    let wcl = conjugacy_classes(&g);
    let k = wcl.iter().filter(|c| !eval(&char_poly(&g.matrix(c.rep_index), root.rank), 1).is_zero()).count();
    assert_eq!(k, elliptic_class_count(&wcl), "{}", root.label());
    k
}

/// `x` and `zx` lie in different classes.
fn splits<G: FiniteGroup>(g: &G, x: usize, z: usize) -> bool {
    let zx = g.mul(z, x);
    (0..g.order()).all(|h| g.mul(g.mul(h, x), g.inv(h)) != zx)
}

fn split_elliptic_polys(root: &RootSystem) -> BTreeSet<Vec<Rational>> {
    let cover = build_spin_cover(root, BOUND).unwrap();
    let wcl = conjugacy_classes(&cover.weyl);
    wcl.iter()
        .filter_map(|c| {
            let cp = char_poly(&cover.weyl.matrix(c.rep_index), root.rank);
            (!eval(&cp, 1).is_zero() && splits(&cover, 2 * c.rep_index, cover.z())).then_some(cp)
        })
        .collect()
}

fn listed_split(f: Family, n: usize) -> BTreeSet<Vec<Rational>> {
    let poly = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
    match f {
        Family::B | Family::D => partitions(n)
            .into_iter()
            .filter(|p| f == Family::B || p.len() % 2 == 0)
            .filter(|p| p.iter().all(|k| k % 2 == 0) || (f == Family::D && p.iter().all(|k| k % 2 == 1) && p.windows(2).all(|w| w[0] != w[1])))
            .map(|p| negative_cycles_poly(&p))
            .collect(),
        Family::G => [poly(&[1, 1, 1]), poly(&[1, -1, 1])].into_iter().collect(),
        Family::F => [[1, 2, 3, 2, 1], [1, 0, 2, 0, 1], [1, 0, 0, 0, 1], [1, 0, -1, 0, 1], [1, -2, 3, -2, 1]]
            .iter()
            .map(|v| poly(v))
            .collect(),
        _ => unreachable!(),
    }
}

/// `tr_S` is nonzero on every class `x` with `x ≁ zx`.
fn iota_s_onto(root: &RootSystem) -> bool {
    let cover = build_spin_cover(root, BOUND).unwrap();
    let cl = Classes::new(&cover);
    let spin = &cover.spin_characters(&cl).unwrap()[0];
    let brute = brute_classes(&cover);
    brute.iter().all(|c| !splits(&cover, c[0], cover.z()) || !spin[cl.class_of(c[0])].is_zero())
}

/// Surjectivity as computed, where it differs from the stated rule.
const SURJECTIVITY_COMPUTED: &[(Family, usize, bool, bool)] = &[
    (Family::A, 3, false, true),
    (Family::B, 3, true, true),
    (Family::B, 4, true, true),
    (Family::D, 4, true, false),
    (Family::G, 2, true, true),
    (Family::F, 4, true, true),
];

#[test]
fn criterion_7_counting() {
    // elliptic classes
    for n in 1..=7 {
        assert_eq!(elliptic_by_classes(&rs(Family::A, n)), 1, "A{n}");
    }
    for n in 2..=8 {
        let p = partition_count(n) as usize;
        assert_eq!(elliptic_by_signed_cycles(n, false), p, "B{n}");
        if n <= 6 {
            assert_eq!(elliptic_by_classes(&rs(Family::B, n)), p, "B{n}");
        }
    }
    for n in 4..=8 {
        let e = even_length_partitions(n);
        assert_eq!(elliptic_by_signed_cycles(n, true), e, "D{n}");
        if n <= 6 {
            assert_eq!(elliptic_by_classes(&rs(Family::D, n)), e, "D{n}");
        }
    }
    assert_eq!(elliptic_by_classes(&rs(Family::G, 2)), 3);
    assert_eq!(elliptic_by_classes(&rs(Family::F, 4)), 9);

    // genuine types up to association
    for n in 1..=5 {
        let data = CoverData::new(&rs(Family::A, n), BOUND).unwrap();
        assert_eq!(genuine_classes(&data), distinct_partitions(n + 1).len(), "A{n}");
    }
    for n in 2..=4 {
        let data = CoverData::new(&rs(Family::B, n), BOUND).unwrap();
        assert_eq!(genuine_classes(&data), partition_count(n) as usize, "B{n}");
    }
    assert_eq!(genuine_classes(&CoverData::new(&rs(Family::G, 2), BOUND).unwrap()), 3);
    assert_eq!(genuine_classes(&CoverData::new(&rs(Family::F, 4), BOUND).unwrap()), 9);

    // split elliptic classes
    for (f, n) in [(Family::B, 4), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
        assert_eq!(split_elliptic_polys(&rs(f, n)), listed_split(f, n), "{f:?}{n}");
    }

    // ι_S
    let mut differ = Vec::new();
    for &(f, n, stated, computed) in SURJECTIVITY_COMPUTED {
        assert_eq!(iota_s_onto(&rs(f, n)), computed, "{f:?}{n}");
        if stated != computed {
            differ.push(format!("{f:?}{n}"));
        }
    }
    line(
        7,
        differ.is_empty(),
        &format!("elliptic counts, genuine counts and split sets as listed; ι_S surjectivity differs from the stated rule on {differ:?}"),
    );
}

#[test]
#[ignore = "ι_S is onto for A3 and not onto for D4"]
fn surjectivity_as_stated() {
    for &(f, n, stated, _) in SURJECTIVITY_COMPUTED {
        assert_eq!(iota_s_onto(&rs(f, n)), stated, "{f:?}{n}");
    }
}

#[test]
fn criterion_8_generalized() {
    let t = Instant::now();
    let mut rows = 0;
    for f in [CuspidalFamily::G2InE6, CuspidalFamily::F4InE7] {
        let case = cuspidal_case(f, 0, 0).unwrap();
        let report = psi::verify_generalized(&case, BOUND).unwrap();
        assert!(report.passed(), "{}", report.subject);
        let root = build_root_system(case.root_family, case.rank).unwrap().with_params(&case.params).unwrap();
        let data = CoverData::new(&root, BOUND).unwrap();
        for r in psi::psi_cuspidal(&case, BOUND).unwrap() {
            for &m in &r.members {
                let v = casimir_oracle(&data, m);
                assert!((v.re - r.casimir_scalar.to_f64()).abs() < 1e-9 && v.im.abs() < 1e-9, "{} {}", r.genuine, v);
            }
            rows += 1;
        }
    }
    for n in 2..=3 {
        let case = cuspidal_case(CuspidalFamily::BSp, n, 1).unwrap();
        for r in psi::psi_classical(Family::B, n, &case.params, BOUND).unwrap() {
            let law: Rational = r
                .lambda
                .parts()
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| (0..p).map(move |j| int(2) * int(j as i64 - i as i64) + int(3)))
                .map(|x| &x * &x * int(4))
                .sum();
            assert_eq!(r.casimir_scalar, Some(QuadValue::from_rational(law)), "B{n} {}", r.lambda);
            rows += 1;
        }
    }
    let secs = t.elapsed().as_secs_f64();
    line(8, secs < 60.0, &format!("{rows} rows: cuspidal tables and 4p2(λ,2,3) for n = 2, 3, {secs:.1}s"));
}

#[test]
#[ignore = "long-running E6 suite"]
fn criterion_9_e6() {
    let t = Instant::now();
    let bound = 2_000_000;
    let reports = suites::e6_suite(bound).unwrap();
    let pass = reports.iter().all(|r| r.passed());
    let e6 = build_root_system(Family::E, 6).unwrap();
    let g = generate_weyl_group(&e6, bound).unwrap();
    let wcl = conjugacy_classes(&g);
    let ell = wcl.iter().filter(|c| !eval(&char_poly(&g.matrix(c.rep_index), 6), 1).is_zero()).count();
    line(9, pass && ell == 5, &format!("E6 table, tensor facts, {ell} elliptic classes, {:.1}s", t.elapsed().as_secs_f64()));
    assert!(pass);
    assert_eq!(ell, 5);
}

#[test]
fn criterion_10_oracle_tables() {
    let mut names = Vec::new();
    let weyl = [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::A, 4), (Family::B, 2), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2)];
    for (f, n) in weyl {
        let g = generate_weyl_group(&rs(f, n), BOUND).unwrap();
        let classes = brute_classes(&g);
        let t = character_table(&g, BOUND as usize).unwrap();
        assert!(tables_agree(&t, &classes, &burnside_table(&g, &classes)), "W({f:?}{n})");
        names.push(format!("W({f:?}{n})"));
    }
    let covers = [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 3), (Family::G, 2)];
    for (f, n) in covers {
        let g = build_spin_cover(&rs(f, n), BOUND).unwrap();
        assert!(g.order() <= 200);
        let classes = brute_classes(&g);
        let t = character_table(&g, BOUND as usize).unwrap();
        assert!(tables_agree(&t, &classes, &burnside_table(&g, &classes)), "W~({f:?}{n})");
        names.push(format!("W~({f:?}{n})"));
    }
    let consistency = suites::run(suites::Suite::PaperTables, &Options { long: false, bound: BOUND }).unwrap();
    let e78: Vec<String> = consistency.iter().filter(|r| r.subject.contains("E7") || r.subject.contains("E8")).map(|r| r.subject.clone()).collect();
    line(10, true, &format!("{} groups agree with the class-algebra tables; E7/E8 covered by bookkeeping only ({})", names.len(), e78.join(", ")));
}
