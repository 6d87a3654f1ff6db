use serde::Serialize;

use super::classical::rows_for;
use super::exceptional::{fingerprint_class, match_rows};
use super::reference::{parse_springer, CuspidalTable, ReferenceTable, F4_IN_E7, G2_IN_E6};
use super::{CoverData, Report};
use crate::combinat::{content_power_sum, partitions, slooten};
use crate::error::{Error, Result};
use crate::nilpotent::{CuspidalCase, CuspidalFamily};
use crate::num::{int, parse_rational, rat, QuadValue, Rational};
use crate::rootsys::{build_root_system, Family, RootSystem};

#[derive(Clone, Debug, Serialize)]
pub struct CuspidalPsiRow {
    pub orbit: &'static str,
    pub springer: &'static str,
    pub genuine: &'static str,
    pub members: Vec<usize>,
    pub casimir_scalar: QuadValue,
}

fn cuspidal_table(case: &CuspidalCase) -> Option<&'static CuspidalTable> {
    match case.family {
        CuspidalFamily::G2InE6 => Some(&G2_IN_E6),
        CuspidalFamily::F4InE7 => Some(&F4_IN_E7),
        _ => None,
    }
}

fn case_root_system(case: &CuspidalCase) -> Result<RootSystem> {
    build_root_system(case.root_family, case.rank)?.with_params(&case.params)
}

/// `⟨pr(h), pr(h)⟩` per orbit of the exceptional cuspidal tables, standard
/// form. These are the recomputed Casimir scalars, kept as derived data.
pub const DERIVED_NORMS: &[(&str, &str, &str)] = &[
    ("G2", "E6", "296/3"),
    ("G2", "E6(a1)", "152/3"),
    ("G2", "E6(a3)", "56/3"),
    ("F4", "E7", "792"),
    ("F4", "E7(a1)", "456"),
    ("F4", "E7(a2)", "312"),
    ("F4", "E7(a3)", "216"),
    ("F4", "E7(a4)", "120"),
    ("F4", "E7(a5)", "72"),
];

fn cuspidal_rows(table: &CuspidalTable, data: &CoverData, report: &mut Report) -> Result<Vec<CuspidalPsiRow>> {
    let mut scratch = Report::new("");
    let matching = match_rows(data, table.base, &mut scratch)?;
    if !scratch.passed() {
        let f: Vec<String> = scratch.failures().map(|c| c.name.clone()).collect();
        return Err(Error::Mismatch(format!("genuine labels of {} not recovered: {}", table.base.name, f.join("; "))));
    }
    let mut out = Vec::new();
    for r in table.rows {
        let pos = table.base.rows.iter().position(|b| b.genuine == r.genuine).ok_or_else(|| {
            Error::Usage(format!("{} is not a row of {}", r.genuine, table.base.name))
        })?;
        let members = matching.members[pos].clone();
        let casimir_scalar = data.scalar(members[0])?;
        for &m in &members[1..] {
            report.compare(format!("{}: associates share the scalar", r.genuine), &casimir_scalar, &data.scalar(m)?);
        }
        out.push(CuspidalPsiRow { orbit: r.orbit, springer: r.springer, genuine: r.genuine, members, casimir_scalar });
    }
    Ok(out)
}

/// Table rows of an exceptional cuspidal case with their recomputed
/// scalars.
pub fn psi_cuspidal(case: &CuspidalCase, bound: u128) -> Result<Vec<CuspidalPsiRow>> {
    let table = cuspidal_table(case).ok_or_else(|| Error::Usage("classical cuspidal cases give partition rows".into()))?;
    let data = CoverData::new(&case_root_system(case)?, bound)?;
    let mut report = Report::new("");
    let rows = cuspidal_rows(table, &data, &mut report)?;
    if !report.passed() {
        return Err(Error::Mismatch("associate types with different scalars".into()));
    }
    Ok(rows)
}

/// The two-term trace expansion of `¼σ̃(Ω)` for G2 (`α` long, `β` short,
/// `⟨α̌,α̌⟩ = 2`) and F4 (`α` short, `β` long, `⟨α̌,α̌⟩ = 2`, `⟨β̌,β̌⟩ = 1`).
fn trace_expansion(base: &ReferenceTable, c_long: &Rational, c_short: &Rational, dim: u64, tr: &[QuadValue]) -> QuadValue {
    let d = int(dim as i64);
    let r = |x: Rational| QuadValue::from_rational(x);
    match base.family {
        Family::G => {
            let (ca, cb) = (c_long, c_short);
            let k = ca * ca + int(3) * cb * cb;
            let (a2, g2) = (&tr[0], &tr[1]);
            let t1 = r(rat(3, 2) * &k);
            let t2 = (&QuadValue::sqrt3().scale(&(int(4) * ca * cb / &d))) * g2;
            let t3 = a2.scale(&(&k / &d));
            &(&t1 + &t2) + &t3
        }
        Family::F => {
            let (ca, cb) = (c_short, c_long);
            let (a2l, a2s, b2) = (&tr[0], &tr[1], &tr[2]);
            let t1 = r(int(3) * (int(2) * ca * ca + cb * cb));
            let t2 = a2l.scale(&(int(16) * ca * ca / &d));
            let t3 = a2s.scale(&(int(8) * cb * cb / &d));
            let t4 = &QuadValue::sqrt2().scale(&(int(18) * ca * cb / &d)) * b2;
            &(&(&t1 + &t2) + &t3) + &t4
        }
        _ => unreachable!("G2 or F4"),
    }
}

/// Form scale putting the coroots in the normalization of the expansion.
fn expansion_scale(family: Family) -> Rational {
    match family {
        Family::G => rat(1, 3),
        _ => int(2),
    }
}

/// `(c_long, c_short)` from the orbit parameters of G2 (short first) or F4
/// (long first).
fn long_short(rs: &RootSystem) -> (Rational, Rational) {
    match rs.family {
        Family::G => (rs.param_c[1].clone(), rs.param_c[0].clone()),
        _ => (rs.param_c[0].clone(), rs.param_c[1].clone()),
    }
}

fn check_expansion(base: &ReferenceTable, rs: &RootSystem, data: CoverData, report: &mut Report) -> Result<CoverData> {
    let scaled = rs.clone().with_gram_scale(expansion_scale(base.family))?;
    let data = data.reparametrize(&scaled)?;
    let cols: Vec<usize> = base.columns.iter().map(|&k| fingerprint_class(&data, k)).collect::<Result<_>>()?;
    let (cl, cs) = long_short(rs);
    for i in data.genuine() {
        let tr: Vec<QuadValue> = cols
            .iter()
            .map(|&c| data.table.irreducibles[i].values[c].to_quad().expect("real quadratic trace"))
            .collect();
        let expect = trace_expansion(base, &cl, &cs, data.degree(i), &tr).scale(&int(4));
        report.compare(format!("type {i}: two-term trace expansion (c_long={cl}, c_short={cs})"), &expect, &data.scalar(i)?);
    }
    data.reparametrize(rs)
}

/// Checks a cuspidal case: for the classical families, the scalars of the
/// B_n table at the case's parameters against `4p₂(λ, c₁, c₂)` and the
/// sizes of the Slooten outputs; for G2 and F4, the table rows, the order
/// of the scalars along the table, the embedded derived norms, and the
/// two-term trace expansion at both `c ≡ 1` and the case's parameters.
pub fn verify_generalized(case: &CuspidalCase, bound: u128) -> Result<Report> {
    let rs = case_root_system(case)?;
    let mut report = Report::new(format!("{} {}", case.family.id(), rs.label()));
    if let Some(table) = cuspidal_table(case) {
        let data = CoverData::new(&rs, bound)?;
        let rows = cuspidal_rows(table, &data, &mut report)?;
        let orbits = table.orbits();
        let mut previous: Option<QuadValue> = None;
        for o in &orbits {
            let s: Vec<&QuadValue> = rows.iter().filter(|r| r.orbit == *o).map(|r| &r.casimir_scalar).collect();
            for x in &s[1..] {
                report.compare(format!("{o}: one scalar on the fiber"), s[0], *x);
            }
            if let Some(p) = &previous {
                let dec = (p - s[0]).signum() > 0;
                report.record(format!("{o}: scalar below the previous orbit"), dec, format!("< {p}"), s[0]);
            }
            previous = Some(s[0].clone());
            if let Some((_, _, v)) = DERIVED_NORMS.iter().find(|(b, orb, _)| *b == table.base.name && orb == o) {
                let v = parse_rational(v).expect("derived norm");
                report.compare(format!("{o}: derived <pr h, pr h>"), &QuadValue::from_rational(v), s[0]);
            }
        }
        for r in &rows {
            report.record(format!("{}: Springer label {} parses", r.genuine, r.springer), parse_springer(r.springer).is_some(), true, true);
        }
        let plain = build_root_system(case.root_family, case.rank)?;
        let data = check_expansion(table.base, &plain, data.reparametrize(&plain)?, &mut report)?;
        check_expansion(table.base, &rs, data.reparametrize(&rs)?, &mut report)?;
        return Ok(report);
    }
    let (c1, c2) = case.content_params.clone().ok_or_else(|| Error::Usage("missing content parameters".into()))?;
    let data = CoverData::new(&rs, bound)?;
    for row in rows_for(&rs, Some(&data))? {
        let closed = content_power_sum(&row.lambda, 2, &c1, &c2) * int(4);
        report.compare(format!("{}: 4p2(λ,{c1},{c2}) is the closed form", row.lambda), &closed, &row.formula_scalar);
        for &i in &row.genuine {
            report.compare(format!("{}: scalar of type {i}", row.lambda), &QuadValue::from_rational(closed.clone()), &data.scalar(i)?);
        }
    }
    for l in partitions(case.rank) {
        let k = slooten(&l, &c1, &c2).len();
        report.record(format!("{l}: Slooten output size {k} is a power of two"), k.is_power_of_two(), "2^j", k);
    }
    Ok(report)
}
