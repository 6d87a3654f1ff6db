use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use super::reference::{parse_springer, trace_value, PairType, ReferenceTable, E6};
use super::{CoverData, Report};
use crate::error::{Error, Result};
use crate::grouprep::FiniteGroup;
use crate::linalg;
use crate::num::{int, QuadValue, Rational};
use crate::rootsys::{build_root_system, RootSystem};

fn pair_matches(rs: &RootSystem, a: usize, b: usize, kind: PairType) -> bool {
    let na = rs.root_norm_sq(a);
    let nb = rs.root_norm_sq(b);
    let ip = rs.inner(&rs.positive_roots[a], &rs.positive_roots[b]);
    if ip >= Rational::zero() {
        return false;
    }
    let longest = (0..rs.num_positive()).map(|r| rs.root_norm_sq(r)).max().unwrap();
    let prod = &na * &nb;
    let ip2 = &ip * &ip;
    let (lo, hi) = if na <= nb { (&na, &nb) } else { (&nb, &na) };
    match kind {
        PairType::A2 | PairType::A2Long | PairType::A2Short => {
            let a2 = na == nb && ip2 * int(4) == prod;
            a2 && match kind {
                // long coroots come from short roots
                PairType::A2Long => na < longest,
                PairType::A2Short => na == longest,
                _ => true,
            }
        }
        PairType::B2 => hi == &(lo * int(2)) && ip2 * int(2) == prod,
        PairType::G2 => hi == &(lo * int(3)) && ip2 * int(4) == prod * int(3),
    }
}

/// Class of `s̃_α s̃_β` for the first positive pair of the given type, taken
/// with the lift whose trace on the spin module is positive.
pub fn fingerprint_class(data: &CoverData, kind: PairType) -> Result<usize> {
    let rs = &data.cover.rs;
    let np = rs.num_positive();
    let (a, b) = (0..np)
        .flat_map(|a| (0..np).map(move |b| (a, b)))
        .find(|&(a, b)| a != b && pair_matches(rs, a, b, kind))
        .ok_or_else(|| Error::Usage(format!("{} has no {} pair", rs.label(), kind.name())))?;
    let c = &data.cover;
    let x = c.mul(c.root_element(a), c.root_element(b));
    let cl = data.classes();
    let v = data.spins[0][cl.class_of(x)]
        .to_quad()
        .ok_or_else(|| Error::Mismatch("spin trace outside Q(√2,√3)".into()))?;
    match v.signum() {
        1 => Ok(cl.class_of(x)),
        -1 => Ok(cl.class_of(c.mul(c.z(), x))),
        _ => Err(Error::Mismatch(format!("spin trace vanishes on the {} class", kind.name()))),
    }
}

/// `⟨h,h⟩ = wᵀ G⁻¹ w` for the weighted diagram `w` (values `α_i(h)`), with
/// `G` the Gram matrix of the simple roots.
pub fn weighted_norm(rs: &RootSystem, w: &[i64]) -> Result<Rational> {
    let g = linalg::inverse(&rs.simple_gram()).ok_or_else(|| Error::Mismatch("singular Gram matrix".into()))?;
    let w: Vec<Rational> = w.iter().map(|&x| int(x)).collect();
    Ok(linalg::dot(&w, &linalg::mat_vec(&g, &w)))
}

/// `dim g₀ = dim g₂` in the grading defined by the weighted diagram.
fn is_distinguished_diagram(rs: &RootSystem, w: &[i64]) -> bool {
    let mut zero = 0;
    let mut two = 0;
    for coords in &rs.positive_coords {
        let v: i64 = coords.iter().zip(w).map(|(k, x)| k * x).sum();
        match v {
            0 => zero += 1,
            2 => two += 1,
            _ => {}
        }
    }
    rs.rank + 2 * zero == two
}

/// `(index, d, b)` for each irreducible of W (non-genuine type of W̃): `b`
/// is the lowest degree of the coinvariants containing it, from the Molien
/// series.
pub fn fake_degree_labels(data: &CoverData) -> Result<Vec<(usize, u64, usize)>> {
    let cl = data.classes();
    let rs = &data.cover.rs;
    let r = rs.rank;
    let top = rs.num_positive();
    let series: Vec<Vec<Rational>> = cl
        .reps
        .iter()
        .map(|&x| {
            let p = data.cover.weyl.element(data.cover.base(x)).char_poly();
            // det(1 − qw) = Σ p_i q^{r−i}
            let d: Vec<Rational> = (0..=r).map(|k| p[r - k].clone()).collect();
            let mut inv = vec![Rational::zero(); top + 1];
            inv[0] = Rational::one() / &d[0];
            for k in 1..=top {
                let mut s = Rational::zero();
                for j in 1..=k.min(r) {
                    s += &d[j] * &inv[k - j];
                }
                inv[k] = -s / &d[0];
            }
            inv
        })
        .collect();
    let mut out = Vec::new();
    for (i, irr) in data.table.irreducibles.iter().enumerate() {
        if irr.genuine {
            continue;
        }
        let vals: Vec<Rational> = irr
            .values
            .iter()
            .map(|v| v.as_rational().cloned().ok_or_else(|| Error::Mismatch("irrational Weyl group character".into())))
            .collect::<Result<_>>()?;
        let b = (0..=top)
            .find(|&k| {
                let s: Rational =
                    (0..cl.len()).map(|c| &vals[c] * &series[c][k] * Rational::from_integer(cl.sizes[c].into())).sum();
                !s.is_zero()
            })
            .ok_or_else(|| Error::Mismatch(format!("irreducible {i} missing from the coinvariants")))?;
        out.push((i, irr.degree, b));
    }
    Ok(out)
}

/// Genuine types of each reference row, matched on degree and traces.
pub(crate) struct Matching {
    pub members: Vec<Vec<usize>>,
}

pub(crate) fn match_rows(data: &CoverData, table: &ReferenceTable, report: &mut Report) -> Result<Matching> {
    let cols: Vec<usize> = table.columns.iter().map(|&k| fingerprint_class(data, k)).collect::<Result<_>>()?;
    let genuine = data.genuine();
    let traces: Vec<Vec<QuadValue>> = genuine
        .iter()
        .map(|&i| {
            cols.iter()
                .map(|&c| {
                    data.table.irreducibles[i].values[c]
                        .to_quad()
                        .ok_or_else(|| Error::Mismatch("trace outside Q(√2,√3)".into()))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let rows = table.corrected_rows();
    let expected: usize = rows.iter().map(|r| if r.associate { 2 } else { 1 }).sum();
    report.compare("number of genuine types", &expected, &genuine.len());
    let sums = ReferenceTable::column_sums(&rows);
    report.record("column sums of the table vanish", sums.iter().all(QuadValue::is_zero), "0", sums.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    let mut members = Vec::new();
    let mut seen = BTreeSet::new();
    for row in &rows {
        let want: Vec<QuadValue> = row.traces.iter().map(trace_value).collect();
        let m: Vec<usize> = genuine
            .iter()
            .zip(&traces)
            .filter(|(&i, t)| data.degree(i) == row.dim && **t == want)
            .map(|(&i, _)| i)
            .collect();
        // rows sharing degree and traces are matched as one block
        let block: usize = rows
            .iter()
            .filter(|r| r.dim == row.dim && r.traces == row.traces)
            .map(|r| if r.associate { 2 } else { 1 })
            .sum();
        let count = if row.associate { 2 } else { 1 };
        let shown: Vec<String> = want.iter().map(|v| v.to_string()).collect();
        report.compare(format!("{} (dim {}, traces {}) matches", row.genuine, row.dim, shown.join(", ")), &block, &m.len());
        if block > count {
            report.note(format!("{} shares its degree and traces with another row", row.genuine));
        } else if m.len() == 2 {
            report.compare(format!("{}: the two matches are associate", row.genuine), &m[1], &data.associate(m[0])?);
        } else if m.len() == 1 {
            let own = data.associate(m[0])? == m[0];
            report.compare(format!("{}: self-associate", row.genuine), &!row.associate, &own);
        }
        for &i in &m {
            seen.insert(i);
        }
        members.push(m);
    }
    report.compare("rows exhaust the genuine types", &genuine.len(), &seen.len());
    for (g, _) in table.errata {
        report.note(format!("{g}: traces taken from the errata"));
    }
    Ok(Matching { members })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalPsiRow {
    pub orbit: &'static str,
    pub springer: &'static [&'static str],
    pub genuine: &'static str,
    pub dim: u64,
    pub associate: bool,
    /// Indices in the computed table.
    pub members: Vec<usize>,
    pub casimir_scalar: QuadValue,
}

/// Rows of an exceptional table attached to the recomputed genuine types,
/// with their Casimir scalars.
pub fn psi_exceptional(table: &ReferenceTable, bound: u128) -> Result<Vec<ExceptionalPsiRow>> {
    let data = CoverData::new(&build_root_system(table.family, table.rank)?, bound)?;
    let mut scratch = Report::new("");
    let matching = match_rows(&data, table, &mut scratch)?;
    if !scratch.passed() {
        let f: Vec<String> = scratch.failures().map(|c| c.name.clone()).collect();
        return Err(Error::Mismatch(format!("rows of {} not recovered: {}", table.name, f.join("; "))));
    }
    table
        .rows
        .iter()
        .zip(matching.members)
        .map(|(r, members)| {
            Ok(ExceptionalPsiRow {
                orbit: r.orbit,
                springer: r.springer,
                genuine: r.genuine,
                dim: r.dim,
                associate: r.associate,
                casimir_scalar: data.scalar(members[0])?,
                members,
            })
        })
        .collect()
}

/// Table rows against the recomputed W̃: degrees, associates and traces on
/// the fingerprint classes; Casimir scalars against `⟨h,h⟩` from the weighted
/// diagrams; tensor containment with the Springer types, and the count of
/// Springer types on distinguished orbits.
pub fn verify_exceptional(table: &ReferenceTable, bound: u128) -> Result<Report> {
    let rs = build_root_system(table.family, table.rank)?;
    let data = CoverData::new(&rs, bound)?;
    verify_exceptional_on(table, &data)
}

pub fn verify_exceptional_on(table: &ReferenceTable, data: &CoverData) -> Result<Report> {
    let rs = &data.cover.rs;
    let mut report = Report::new(format!("table {}", table.name));
    let matching = match_rows(data, table, &mut report)?;
    let w_types = fake_degree_labels(data)?;
    let mut tensor: Vec<Option<Vec<Vec<Rational>>>> = vec![None; data.table.len()];
    for orbit in table.orbits() {
        let rows: Vec<usize> = (0..table.rows.len()).filter(|&r| table.rows[r].orbit == orbit).collect();
        let fiber: Vec<usize> = rows.iter().flat_map(|&r| matching.members[r].iter().copied()).collect();
        if fiber.is_empty() {
            continue;
        }
        let scalars: Vec<QuadValue> = fiber.iter().map(|&i| data.scalar(i)).collect::<Result<_>>()?;
        let w = table.diagram(orbit).ok_or_else(|| Error::Usage(format!("no diagram for {orbit}")))?;
        let h = QuadValue::from_rational(weighted_norm(rs, w)?);
        for (&i, s) in fiber.iter().zip(&scalars) {
            report.compare(format!("{orbit}: scalar of type {i} equals <h,h>"), &h, s);
        }

        let labels: BTreeSet<&str> = rows.iter().flat_map(|&r| table.rows[r].springer.iter().copied()).collect();
        let mut candidates = Vec::new();
        for l in &labels {
            let (d, b, _) = parse_springer(l).ok_or_else(|| Error::Usage(format!("bad label {l}")))?;
            let c: Vec<usize> = w_types.iter().filter(|t| t.1 == d && t.2 == b).map(|t| t.0).collect();
            report.record(format!("{orbit}: W-type {l} exists"), !c.is_empty(), "1 or 2 candidates", c.len());
            for &j in &c {
                if tensor[j].is_none() {
                    tensor[j] = Some(data.tensor_with_spins(&data.table.irreducibles[j].values)?);
                }
            }
            candidates.push((*l, c));
        }
        let mult = |j: usize, k: usize, i: usize| -> bool { !tensor[j].as_ref().unwrap()[k][i].is_zero() };
        for (l, c) in &candidates {
            for k in 0..data.spins.len() {
                let hit = c.iter().any(|&j| fiber.iter().any(|&i| mult(j, k, i)));
                report.record(format!("{orbit}: {l} ⊗ S{k} meets the fiber"), hit, true, hit);
            }
            if c.len() > 1 {
                let good: Vec<usize> = c.iter().copied().filter(|&j| fiber.iter().any(|&i| mult(j, 0, i))).collect();
                report.note(format!("{orbit}: label {l} has {} candidates; tensor containment holds for {}", c.len(), good.len()));
            }
        }
        for &i in &fiber {
            let hit = candidates.iter().any(|(_, c)| c.iter().any(|&j| (0..data.spins.len()).any(|k| mult(j, k, i))));
            report.record(format!("{orbit}: type {i} lies in some Springer type ⊗ S"), hit, true, hit);
        }
        if is_distinguished_diagram(rs, w) {
            report.compare(format!("{orbit}: |fiber/~| = |Springer types| (distinguished)"), &labels.len(), &rows.len());
        }
    }
    Ok(report)
}

/// `σ̃(Ω) = 2N + 2M·tr(A₂)/dim` for simply laced `E_n` with the standard
/// form, `N` positive roots and `M` ordered pairs with `s_α(β) < 0`.
fn simply_laced_affine(rs: &RootSystem) -> (Rational, Rational) {
    let np = rs.num_positive();
    let mut m = 0i64;
    for a in 0..np {
        for b in 0..np {
            let k = rs.inner(&rs.positive_roots[a], &rs.positive_roots[b]) * int(2) / rs.root_norm_sq(a);
            if a == b || k != int(1) {
                continue;
            }
            if rs.positive_coords[b].iter().zip(&rs.positive_coords[a]).any(|(x, y)| x - y < 0) {
                m += 1;
            }
        }
    }
    (int(2 * np as i64), int(2 * m))
}

/// Bookkeeping checks for a table whose group is not recomputed: squared
/// dimensions add up to `|W|`, associate marks fit the rank parity, and the
/// spin row has scalar `⟨2ρ̌,2ρ̌⟩` under the trace formula. Orbits whose rows
/// give different scalars under that formula are listed as notes.
pub fn simply_laced_consistency(table: &ReferenceTable) -> Result<Report> {
    let rs = build_root_system(table.family, table.rank)?;
    let mut report = Report::new(format!("table {} (consistency only)", table.name));
    let order = crate::rootsys::weyl_group_order(table.family, table.rank);
    let sq: u128 = table.rows.iter().map(|r| (r.dim as u128).pow(2) * if r.associate { 2 } else { 1 }).sum();
    report.compare("sum of squared genuine dimensions equals |W|", &order, &sq);
    if table.rank % 2 == 1 {
        let all = table.rows.iter().all(|r| r.associate);
        report.record("odd rank: every genuine type has a distinct associate", all, true, all);
    }
    let (a, b) = simply_laced_affine(&rs);
    let scalar = |r: &super::reference::ReferenceRow| -> Rational {
        let t = trace_value(&r.traces[0]).q[0].clone();
        &a + &b * t / int(r.dim as i64)
    };
    report.compare("spin row scalar equals <2ρ̌,2ρ̌>", &rs.two_rho_check_norm(), &scalar(&table.rows[0]));
    for orbit in table.orbits() {
        let vals: BTreeSet<Rational> = table.rows.iter().filter(|r| r.orbit == orbit).map(scalar).collect();
        if vals.len() > 1 {
            let v: Vec<String> = vals.iter().map(crate::num::rat_to_string).collect();
            report.note(format!("{orbit}: rows give different scalars {}", v.join(", ")));
        }
    }
    let sum = &ReferenceTable::column_sums(table.rows)[0];
    if !sum.is_zero() {
        report.note(format!("column sum of dim·tr is {sum}, not 0"));
    }
    Ok(report)
}

/// The `D₄(a₁)` fiber of E6: one type of dimension 40 whose tensor with `S`
/// contains all three Springer types, and an associate pair of dimension 20
/// meeting only `(90,8)`.
pub fn verify_counterexample_e6(bound: u128) -> Result<Report> {
    let rs = build_root_system(E6.family, E6.rank)?;
    let data = CoverData::new(&rs, bound)?;
    verify_counterexample_on(&data)
}

pub fn verify_counterexample_on(data: &CoverData) -> Result<Report> {
    let mut report = Report::new("E6 D4(a1) fiber");
    let mut scratch = Report::new("");
    let matching = match_rows(data, &E6, &mut scratch)?;
    let idx = |g: &str| E6.rows.iter().position(|r| r.genuine == g).unwrap();
    let big = matching.members[idx("40_ss")].clone();
    let small = matching.members[idx("20_s")].clone();
    let mut dims: Vec<u64> = big.iter().chain(&small).map(|&i| data.degree(i)).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    report.record("fiber dimensions", dims == [40, 20, 20], "[40, 20, 20]", format!("{dims:?}"));
    if big.len() != 1 || small.len() != 2 {
        return Ok(report);
    }
    report.compare("the two 20-dimensional types are associate", &small[1], &data.associate(small[0])?);
    let w_types = fake_degree_labels(data)?;
    let find = |d: u64, b: usize| -> Result<usize> {
        let c: Vec<usize> = w_types.iter().filter(|t| t.1 == d && t.2 == b).map(|t| t.0).collect();
        match c.as_slice() {
            [j] => Ok(*j),
            _ => Err(Error::Table(format!("({d},{b}) is not a unique W-type"))),
        }
    };
    for (label, d, b, in_small) in [("(80,7)", 80, 7, false), ("(90,8)", 90, 8, true), ("(20,10)", 20, 10, false)] {
        let j = find(d, b)?;
        let t = data.tensor_with_spins(&data.table.irreducibles[j].values)?;
        let hit_big = !t[0][big[0]].is_zero();
        report.record(format!("40 ⊗ S contains {label}"), hit_big, true, hit_big);
        for &s in &small {
            let hit = !t[0][s].is_zero();
            report.record(format!("type {s} (dim 20) ⊗ S contains {label}"), hit == in_small, in_small, hit);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::reference::{E7, E8, F4, G2};
    use super::*;

    fn show(rep: &Report) {
        for c in rep.failures() {
            eprintln!("{}: {} expected {} got {}", rep.subject, c.name, c.expected, c.actual);
        }
        for n in &rep.notes {
            eprintln!("{}: {n}", rep.subject);
        }
    }

    #[test]
    fn g2_table() {
        let rep = verify_exceptional(&G2, 1_000_000).unwrap();
        show(&rep);
        assert!(rep.passed());
    }

    #[test]
    fn f4_table() {
        let rep = verify_exceptional(&F4, 1_000_000).unwrap();
        show(&rep);
        assert!(rep.passed());
    }

    #[test]
    fn g2_fake_degrees() {
        let rs = build_root_system(crate::rootsys::Family::G, 2).unwrap();
        let data = CoverData::new(&rs, 1000).unwrap();
        let mut db: Vec<(u64, usize)> = fake_degree_labels(&data).unwrap().into_iter().map(|t| (t.1, t.2)).collect();
        db.sort_unstable();
        assert_eq!(db, [(1, 0), (1, 3), (1, 3), (1, 6), (2, 1), (2, 2)]);
    }

    #[test]
    fn affine_trace_formula_on_a_computed_table() {
        // D4: every genuine scalar is 2N + 2M·tr/dim on the A₂ class
        let rs = build_root_system(crate::rootsys::Family::D, 4).unwrap();
        let data = CoverData::new(&rs, 1_000_000).unwrap();
        let c = fingerprint_class(&data, PairType::A2).unwrap();
        let (a, b) = simply_laced_affine(&rs);
        for i in data.genuine() {
            let t = data.table.irreducibles[i].values[c].as_rational().unwrap().clone();
            let s = &a + &b * t / int(data.degree(i) as i64);
            assert_eq!(data.scalar(i).unwrap(), QuadValue::from_rational(s));
        }
    }

    #[test]
    fn e7_e8_bookkeeping() {
        for t in [&E6, &E7, &E8] {
            let rep = simply_laced_consistency(t).unwrap();
            show(&rep);
            assert!(rep.passed(), "{}", t.name);
        }
    }

    #[test]
    fn e6_weighted_diagrams() {
        let rs = build_root_system(crate::rootsys::Family::E, 6).unwrap();
        assert_eq!(weighted_norm(&rs, &[2; 6]).unwrap(), rs.two_rho_check_norm());
        let dist: Vec<&str> = E6.diagrams.iter().filter(|(_, w)| is_distinguished_diagram(&rs, w)).map(|(o, _)| *o).collect();
        assert_eq!(dist, ["E6", "E6(a1)", "E6(a3)"]);
        // scalars from the trace formula agree with <h,h>
        let (a, b) = simply_laced_affine(&rs);
        for r in E6.rows {
            let s = &a + &b * trace_value(&r.traces[0]).q[0].clone() / int(r.dim as i64);
            assert_eq!(s, weighted_norm(&rs, E6.diagram(r.orbit).unwrap()).unwrap(), "{}", r.genuine);
        }
    }
}
