//! Exceptional tables: genuine types grouped by nilpotent orbit, with their
//! Springer labels and traces on `s̃_α s̃_β` for root pairs of a given type.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::num::{int, QuadValue};
use crate::rootsys::Family;

/// Root pair type naming a trace column. Long and short refer to the
/// coroots, which is how the F4 columns are labelled: `A2Long` is spanned by
/// short roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairType {
    /// Simply laced `A₂`.
    A2,
    A2Long,
    A2Short,
    B2,
    G2,
}

impl PairType {
    pub fn name(&self) -> &'static str {
        match self {
            PairType::A2 => "A2",
            PairType::A2Long => "A2l",
            PairType::A2Short => "A2s",
            PairType::B2 => "B2",
            PairType::G2 => "G2",
        }
    }
}

/// `a + b√2 + c√3`
pub type Trace = [i64; 3];

pub fn trace_value(t: &Trace) -> QuadValue {
    &(&QuadValue::from_rational(int(t[0])) + &QuadValue::sqrt2().scale(&int(t[1])))
        + &QuadValue::sqrt3().scale(&int(t[2]))
}

fn serialize_traces<S: Serializer>(v: &&'static [Trace], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for t in v.iter() {
        seq.serialize_element(&trace_value(t))?;
    }
    seq.end()
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceRow {
    pub orbit: &'static str,
    /// Springer W-types as `(d,b)` with optional primes.
    pub springer: &'static [&'static str],
    pub genuine: &'static str,
    pub dim: u64,
    /// Has a distinct associate type (marked `*`).
    pub associate: bool,
    #[serde(serialize_with = "serialize_traces")]
    pub traces: &'static [Trace],
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceTable {
    pub name: &'static str,
    pub family: Family,
    pub rank: usize,
    pub columns: &'static [PairType],
    pub rows: &'static [ReferenceRow],
    /// Weighted Dynkin diagrams of the orbits, in simple-root order.
    pub diagrams: &'static [(&'static str, &'static [i64])],
    /// Replacement traces for rows whose printed traces break column
    /// orthogonality.
    pub errata: &'static [(&'static str, &'static [Trace])],
}

impl ReferenceTable {
    /// Orbits in table order.
    pub fn orbits(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for r in self.rows {
            if !out.contains(&r.orbit) {
                out.push(r.orbit);
            }
        }
        out
    }

    pub fn diagram(&self, orbit: &str) -> Option<&'static [i64]> {
        self.diagrams.iter().find(|(o, _)| *o == orbit).map(|(_, d)| *d)
    }

    pub fn row(&self, genuine: &str) -> Option<&'static ReferenceRow> {
        self.rows.iter().find(|r| r.genuine == genuine)
    }

    /// Rows with the errata applied.
    pub fn corrected_rows(&self) -> Vec<ReferenceRow> {
        self.rows
            .iter()
            .map(|r| match self.errata.iter().find(|(g, _)| *g == r.genuine) {
                Some((_, t)) => ReferenceRow { traces: t, ..r.clone() },
                None => r.clone(),
            })
            .collect()
    }

    /// `Σ dim·tr` over all genuine types for each column; zero for a
    /// consistent table, since the genuine types span the functions on
    /// W̃ that are odd under `z`.
    pub fn column_sums(rows: &[ReferenceRow]) -> Vec<QuadValue> {
        let k = rows.first().map_or(0, |r| r.traces.len());
        (0..k)
            .map(|c| {
                rows.iter()
                    .map(|r| trace_value(&r.traces[c]).scale(&int(r.dim as i64 * if r.associate { 2 } else { 1 })))
                    .sum()
            })
            .collect()
    }
}

const fn row(
    orbit: &'static str,
    springer: &'static [&'static str],
    genuine: &'static str,
    dim: u64,
    associate: bool,
    traces: &'static [Trace],
) -> ReferenceRow {
    ReferenceRow { orbit, springer, genuine, dim, associate, traces }
}

// G2 simple roots: α₁ short, α₂ long.
pub static G2: ReferenceTable = ReferenceTable {
    name: "G2",
    family: Family::G,
    rank: 2,
    columns: &[PairType::A2, PairType::G2],
    rows: &[
        row("G2", &["(1,0)"], "2_s", 2, false, &[[1, 0, 0], [0, 0, 1]]),
        row("G2(a1)", &["(2,1)"], "2_sss", 2, false, &[[-2, 0, 0], [0, 0, 0]]),
        row("G2(a1)", &["(1,3)'"], "2_ss", 2, false, &[[1, 0, 0], [0, 0, -1]]),
    ],
    diagrams: &[("G2", &[2, 2]), ("G2(a1)", &[0, 2])],
    errata: &[],
};

// F4 simple roots: α₁, α₂ long, α₃, α₄ short.
pub static F4: ReferenceTable = ReferenceTable {
    name: "F4",
    family: Family::F,
    rank: 4,
    columns: &[PairType::A2Long, PairType::A2Short, PairType::B2],
    rows: &[
        row("F4", &["(1,0)"], "4_s", 4, false, &[[2, 0, 0], [2, 0, 0], [0, 2, 0]]),
        row("F4(a1)", &["(4,1)"], "12_s", 12, false, &[[0, 0, 0], [0, 0, 0], [0, 2, 0]]),
        row("F4(a1)", &["(2,4)''"], "8_sss", 8, false, &[[4, 0, 0], [-2, 0, 0], [0, 0, 0]]),
        row("F4(a2)", &["(9,2)"], "24_s", 24, false, &[[0, 0, 0], [0, 0, 0], [0, 0, 0]]),
        row("F4(a2)", &["(2,4)'"], "8_ssss", 8, false, &[[-2, 0, 0], [4, 0, 0], [0, 0, 0]]),
        row("F4(a3)", &["(12,4)"], "8_ss", 8, false, &[[0, 0, 0], [0, 0, 0], [0, -2, 0]]),
        row("F4(a3)", &["(9,6)'"], "12_ss", 12, false, &[[-2, 0, 0], [-2, 0, 0], [0, 0, 0]]),
        row("F4(a3)", &["(6,6)''"], "8_s", 8, false, &[[-2, 0, 0], [-2, 0, 0], [0, 0, 0]]),
        row("F4(a3)", &["(1,12)'"], "4_ss", 4, false, &[[2, 0, 0], [2, 0, 0], [0, -2, 0]]),
    ],
    diagrams: &[
        ("F4", &[2, 2, 2, 2]),
        ("F4(a1)", &[2, 2, 0, 2]),
        ("F4(a2)", &[0, 2, 0, 2]),
        ("F4(a3)", &[0, 2, 0, 0]),
    ],
    // As printed, the F4(a3) rows give nonzero column sums; exchanging
    // these two trace triples restores them and matches the computed table.
    errata: &[("8_ss", &[[-2, 0, 0], [-2, 0, 0], [0, 0, 0]]), ("12_ss", &[[0, 0, 0], [0, 0, 0], [0, -2, 0]])],
};

// E6 in Bourbaki order: α₂ is attached to α₄.
pub static E6: ReferenceTable = ReferenceTable {
    name: "E6",
    family: Family::E,
    rank: 6,
    columns: &[PairType::A2],
    rows: &[
        row("E6", &["(1,0)"], "8_s", 8, false, &[[4, 0, 0]]),
        row("E6(a1)", &["(6,1)"], "40_s", 40, false, &[[8, 0, 0]]),
        row("E6(a3)", &["(30,3)"], "120_s", 120, false, &[[0, 0, 0]]),
        row("E6(a3)", &["(15,5)"], "72_s", 72, false, &[[0, 0, 0]]),
        row("D5", &["(20,2)"], "60_s", 60, true, &[[6, 0, 0]]),
        row("D5(a1)", &["(64,4)"], "80_s", 80, true, &[[-2, 0, 0]]),
        row("A4+A1", &["(60,5)"], "64_s", 64, true, &[[-4, 0, 0]]),
        row("D4(a1)", &["(80,7)", "(90,8)", "(20,10)"], "40_ss", 40, false, &[[-4, 0, 0]]),
        row("D4(a1)", &["(90,8)"], "20_s", 20, true, &[[-2, 0, 0]]),
    ],
    diagrams: &[
        ("E6", &[2, 2, 2, 2, 2, 2]),
        ("E6(a1)", &[2, 2, 2, 0, 2, 2]),
        ("E6(a3)", &[2, 0, 0, 2, 0, 2]),
        ("D5", &[2, 2, 0, 2, 0, 2]),
        ("D5(a1)", &[1, 2, 1, 0, 1, 1]),
        ("A4+A1", &[1, 1, 1, 0, 1, 1]),
        ("D4(a1)", &[0, 0, 0, 2, 0, 0]),
    ],
    errata: &[],
};

pub static E7: ReferenceTable = ReferenceTable {
    name: "E7",
    family: Family::E,
    rank: 7,
    columns: &[PairType::A2],
    rows: &[
        row("E7", &["(1,0)"], "8_s", 8, true, &[[4, 0, 0]]),
        row("E7(a1)", &["(7,1)"], "48_s", 48, true, &[[12, 0, 0]]),
        row("E7(a2)", &["(27,2)"], "168_s", 168, true, &[[24, 0, 0]]),
        row("E7(a3)", &["(56,3)"], "280_s", 280, true, &[[20, 0, 0]]),
        row("E7(a3)", &["(21,6)"], "112_s", 112, true, &[[8, 0, 0]]),
        row("E7(a4)", &["(189,5)"], "720_s", 720, true, &[[0, 0, 0]]),
        row("E7(a4)", &["(15,7)"], "120_s", 120, true, &[[0, 0, 0]]),
        row("E7(a5)", &["(315,7)"], "448_s", 448, true, &[[-4, 0, 0]]),
        row("E7(a5)", &["(280,9)"], "560_s", 560, true, &[[-20, 0, 0]]),
        row("E7(a5)", &["(35,13)"], "112_ss", 112, true, &[[-16, 0, 0]]),
        row("E6(a1)", &["(120,4)", "(105,5)"], "512_s", 512, true, &[[16, 0, 0]]),
        row("A4+A1", &["(512,11)", "(512,12)"], "64_s", 64, true, &[[-4, 0, 0]]),
        row("A4+A1", &["(512,11)", "(512,12)"], "64_ss", 64, true, &[[-4, 0, 0]]),
    ],
    diagrams: &[],
    errata: &[],
};

pub static E8: ReferenceTable = ReferenceTable {
    name: "E8",
    family: Family::E,
    rank: 8,
    columns: &[PairType::A2],
    rows: &[
        row("E8", &["(1,0)"], "16_s", 16, false, &[[8, 0, 0]]),
        row("E8(a1)", &["(8,1)"], "112_s", 112, false, &[[32, 0, 0]]),
        row("E8(a2)", &["(35,2)"], "448_ss", 448, false, &[[80, 0, 0]]),
        row("E8(a3)", &["(112,3)"], "1344_ss", 1344, false, &[[168, 0, 0]]),
        row("E8(a3)", &["(28,8)"], "320_s", 320, false, &[[40, 0, 0]]),
        row("E8(a4)", &["(210,4)"], "2016_s", 2016, false, &[[144, 0, 0]]),
        row("E8(a4)", &["(160,7)"], "1680_s", 1680, false, &[[120, 0, 0]]),
        row("E8(a5)", &["(700,6)"], "5600_sss", 5600, false, &[[160, 0, 0]]),
        row("E8(a5)", &["(300,8)"], "2800_s", 2800, false, &[[80, 0, 0]]),
        row("E8(a6)", &["(1400,8)"], "6480_s", 6480, false, &[[0, 0, 0]]),
        row("E8(a6)", &["(1575,10)"], "9072_s", 9072, false, &[[0, 0, 0]]),
        row("E8(a6)", &["(350,14)"], "2592_s", 2592, false, &[[0, 0, 0]]),
        row("E8(a7)", &["(4480,16)"], "896_s", 896, false, &[[-72, 0, 0]]),
        row("E8(a7)", &["(5670,18)"], "2016_sss", 2016, false, &[[-72, 0, 0]]),
        row("E8(a7)", &["(4536,18)"], "2016_ss", 2016, false, &[[-48, 0, 0]]),
        row("E8(a7)", &["(1680,22)"], "1344_s", 1344, false, &[[-40, 0, 0]]),
        row("E8(a7)", &["(1400,20)"], "1120_s", 1120, false, &[[-32, 0, 0]]),
        row("E8(a7)", &["(70,32)"], "224_s", 224, false, &[[-8, 0, 0]]),
        row("E8(b4)", &["(560,5)"], "5600_ss", 5600, false, &[[280, 0, 0]]),
        row("E8(b4)", &["(50,8)"], "800_s", 800, false, &[[40, 0, 0]]),
        row("E8(b5)", &["(1400,7)"], "6720_s", 6720, false, &[[128, 0, 0]]),
        row("E8(b5)", &["(1008,9)"], "7168_s", 7168, false, &[[120, 0, 0]]),
        row("E8(b5)", &["(56,19)"], "448_s", 448, false, &[[8, 0, 0]]),
        row("E8(b6)", &["(2240,10)"], "8400_s", 8400, false, &[[-120, 0, 0]]),
        row("E8(b6)", &["(840,13)"], "5600_s", 5600, false, &[[-80, 0, 0]]),
        row("E8(b6)", &["(175,12)"], "2800_ss", 2800, false, &[[-40, 0, 0]]),
        row("D5+A2", &["(4536,13)", "(840,13)"], "4800_s", 4800, false, &[[-120, 0, 0]]),
        row("D7(a1)", &["(3240,9)", "(1050,10)"], "11200_s", 11200, false, &[[-40, 0, 0]]),
        row("D7(a2)", &["(4200,12)", "(3360,13)"], "7168_ss", 7168, false, &[[-160, 0, 0]]),
        row("E6(a1)+A1", &["(4096,11)", "(4096,12)"], "8192_s", 8192, false, &[[-128, 0, 0]]),
    ],
    diagrams: &[],
    errata: &[],
};

/// Rows of a cuspidal table: orbit, Springer label, genuine label of the
/// underlying `W̃` (traces come from the matching unparametrized table).
#[derive(Clone, Debug, Serialize)]
pub struct CuspidalRow {
    pub orbit: &'static str,
    pub springer: &'static str,
    pub genuine: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct CuspidalTable {
    pub name: &'static str,
    /// Table carrying the trace fingerprints of the genuine labels.
    #[serde(skip)]
    pub base: &'static ReferenceTable,
    pub rows: &'static [CuspidalRow],
}

const fn crow(orbit: &'static str, springer: &'static str, genuine: &'static str) -> CuspidalRow {
    CuspidalRow { orbit, springer, genuine }
}

pub static G2_IN_E6: CuspidalTable = CuspidalTable {
    name: "2A2 in E6",
    base: &G2,
    rows: &[crow("E6", "(1,0)", "2_s"), crow("E6(a1)", "(1,3)'", "2_ss"), crow("E6(a3)", "(2,1)", "2_sss")],
};

pub static F4_IN_E7: CuspidalTable = CuspidalTable {
    name: "(3A1)' in E7",
    base: &F4,
    rows: &[
        crow("E7", "(1,0)", "4_s"),
        crow("E7(a1)", "(2,4)''", "8_sss"),
        crow("E7(a2)", "(4,1)", "12_s"),
        crow("E7(a3)", "(8,3)'", "24_s"),
        crow("E7(a3)", "(1,12)'", "4_ss"),
        crow("E7(a4)", "(2,4)'", "8_ssss"),
        crow("E7(a4)", "(4,7)'", "12_ss"),
        crow("E7(a5)", "(12,4)", "8_ss"),
        crow("E7(a5)", "(6,6)''", "8_s"),
    ],
};

impl CuspidalTable {
    pub fn orbits(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for r in self.rows {
            if !out.contains(&r.orbit) {
                out.push(r.orbit);
            }
        }
        out
    }
}

pub fn reference_table(name: &str) -> Option<&'static ReferenceTable> {
    [&G2, &F4, &E6, &E7, &E8].into_iter().find(|t| t.name.eq_ignore_ascii_case(name))
}

/// A Springer label `(d,b)` with its number of primes.
pub fn parse_springer(label: &str) -> Option<(u64, usize, usize)> {
    let primes = label.chars().rev().take_while(|&c| c == '\'').count();
    let core = label[..label.len() - primes].strip_prefix('(')?.strip_suffix(')')?;
    let (d, b) = core.split_once(',')?;
    Some((d.trim().parse().ok()?, b.trim().parse().ok()?, primes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn squared_dimensions_fill_the_weyl_group() {
        for (t, order) in [(&G2, 12u64), (&F4, 1152), (&E6, 51_840), (&E7, 2_903_040)] {
            let s: u64 = t.rows.iter().map(|r| r.dim * r.dim * if r.associate { 2 } else { 1 }).sum();
            assert_eq!(s, order, "{}", t.name);
        }
    }

    #[test]
    fn springer_labels_parse() {
        assert_eq!(parse_springer("(2,4)''"), Some((2, 4, 2)));
        assert_eq!(parse_springer("(1,0)"), Some((1, 0, 0)));
        for t in [&G2, &F4, &E6, &E7, &E8] {
            for r in t.rows {
                assert!(r.springer.iter().all(|s| parse_springer(s).is_some()));
                assert_eq!(r.traces.len(), t.columns.len());
                assert!(r.genuine.starts_with(&r.dim.to_string()));
            }
        }
        assert_eq!(trace_value(&[0, 2, 0]), QuadValue::sqrt2().scale(&int(2)));
    }

    #[test]
    fn column_sums_of_computed_tables_vanish() {
        assert!(ReferenceTable::column_sums(G2.rows).iter().all(QuadValue::is_zero));
        assert!(ReferenceTable::column_sums(E6.rows).iter().all(QuadValue::is_zero));
        assert!(!ReferenceTable::column_sums(F4.rows).iter().all(QuadValue::is_zero));
        assert!(ReferenceTable::column_sums(&F4.corrected_rows()).iter().all(QuadValue::is_zero));
    }

    // E7 and E8 are too large to recompute. A constant tr/dim on E7(a5)
    // forces tr/dim = -1/28 there, which exchanges the traces of 448_s and
    // 112_ss; no constant value on E8(a7) balances E8.
    #[test]
    fn e7_balances_with_a_constant_ratio_on_e7a5() {
        let rows = E7.corrected_rows();
        let (inside, outside): (Vec<_>, Vec<_>) = rows.iter().partition(|r| r.orbit == "E7(a5)");
        let rest: i64 = outside.iter().map(|r| r.dim as i64 * r.traces[0][0]).sum();
        let sq: i64 = inside.iter().map(|r| (r.dim as i64).pow(2)).sum();
        assert_eq!(rat(-rest, sq), rat(-1, 28));
        let mut printed: Vec<i64> = inside.iter().map(|r| r.traces[0][0]).collect();
        let mut forced: Vec<i64> = inside.iter().map(|r| -(r.dim as i64) / 28).collect();
        printed.sort_unstable();
        forced.sort_unstable();
        assert_eq!(printed, forced);
        assert!(!ReferenceTable::column_sums(E7.rows)[0].is_zero());
        assert!(!ReferenceTable::column_sums(E8.rows)[0].is_zero());
    }
}
