//! Nilpotent orbits of the classical Lie algebras as partitions, their
//! middle elements, and the cuspidal data used for the parametrized
//! Casimir checks.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{box_content, partitions, Partition};
use crate::error::{Error, Result};
use crate::num::{int, Rational};
use crate::rootsys::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Algebra {
    /// `sl(n)`
    Sl(usize),
    /// `so(m)`
    So(usize),
    /// `sp(2n)`, stored with the matrix size `2n`
    Sp(usize),
}

impl Algebra {
    pub fn size(&self) -> usize {
        match *self {
            Algebra::Sl(n) | Algebra::So(n) | Algebra::Sp(n) => n,
        }
    }

    /// Host algebra whose Weyl group is that of `family` with the given rank.
    pub fn for_type(family: Family, rank: usize) -> Result<Algebra> {
        Ok(match family {
            Family::A => Algebra::Sl(rank + 1),
            Family::B => Algebra::So(2 * rank + 1),
            Family::C => Algebra::Sp(2 * rank),
            Family::D => Algebra::So(2 * rank),
            _ => return Err(Error::Usage(format!("no classical algebra for type {family}"))),
        })
    }

    /// Parity rule on Jordan types.
    pub fn admits(&self, lambda: &Partition) -> bool {
        if lambda.n() != self.size() {
            return false;
        }
        let bad_parity = match self {
            Algebra::Sl(_) => return true,
            Algebra::So(_) => 0,
            Algebra::Sp(_) => 1,
        };
        lambda.parts().iter().filter(|&&p| p % 2 == bad_parity).all(|&p| lambda.multiplicity(p) % 2 == 0)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Sl(n) => write!(f, "sl({n})"),
            Algebra::So(m) => write!(f, "so({m})"),
            Algebra::Sp(m) => write!(f, "sp({m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentOrbitClass {
    pub algebra: Algebra,
    pub partition: Partition,
    pub in_n0: bool,
    pub distinguished: bool,
    /// Cartan coordinates of the middle element: all weights for `sl`,
    /// the non-negative half for `so`/`sp`.
    pub h_coords: Vec<i64>,
    #[serde(serialize_with = "crate::num::serialize_rational")]
    pub h_norm_sq: Rational,
}

impl fmt::Display for NilpotentOrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.algebra, self.partition)
    }
}

/// Solvable centralizer: distinct blocks in `sl`, otherwise parts of the
/// allowed parity with multiplicity at most two.
pub fn in_n0(algebra: Algebra, lambda: &Partition) -> bool {
    let parity = match algebra {
        Algebra::Sl(_) => return lambda.is_distinct(),
        Algebra::So(_) => 1,
        Algebra::Sp(_) => 0,
    };
    lambda.parts().iter().all(|&p| p % 2 == parity && lambda.multiplicity(p) <= 2)
}

pub fn is_distinguished(algebra: Algebra, lambda: &Partition) -> bool {
    let parity = match algebra {
        Algebra::Sl(n) => return lambda.parts() == [n],
        Algebra::So(_) => 1,
        Algebra::Sp(_) => 0,
    };
    lambda.is_distinct() && lambda.parts().iter().all(|&p| p % 2 == parity)
}

/// All weights of the middle element, sorted decreasingly.
fn weights(lambda: &Partition) -> Vec<i64> {
    let mut w: Vec<i64> =
        lambda.parts().iter().flat_map(|&p| (0..p).map(move |k| p as i64 - 1 - 2 * k as i64)).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

pub fn middle_element(algebra: Algebra, lambda: &Partition) -> (Vec<i64>, Rational) {
    let w = weights(lambda);
    let coords = match algebra {
        Algebra::Sl(_) => w,
        Algebra::So(m) | Algebra::Sp(m) => w[..m / 2].to_vec(),
    };
    let norm = coords.iter().map(|&c| int(c * c)).sum();
    (coords, norm)
}

pub fn orbit(algebra: Algebra, lambda: Partition) -> Result<NilpotentOrbitClass> {
    if !algebra.admits(&lambda) {
        return Err(Error::Usage(format!("{lambda} is not a nilpotent orbit of {algebra}")));
    }
    let (h_coords, h_norm_sq) = middle_element(algebra, &lambda);
    Ok(NilpotentOrbitClass {
        algebra,
        in_n0: in_n0(algebra, &lambda),
        distinguished: is_distinguished(algebra, &lambda),
        partition: lambda,
        h_coords,
        h_norm_sq,
    })
}

pub fn classify_orbits(algebra: Algebra) -> Vec<NilpotentOrbitClass> {
    partitions(algebra.size())
        .into_iter()
        .filter(|l| algebra.admits(l))
        .map(|l| orbit(algebra, l).expect("admissible"))
        .collect()
}

/// Splits a weight multiset into sl₂-strings, largest first.
fn strings_of(mut weights: Vec<i64>) -> Option<Partition> {
    weights.sort_unstable();
    let mut parts = Vec::new();
    while let Some(&top) = weights.last() {
        if top < 0 {
            return None;
        }
        let mut k = top;
        while k >= -top {
            let pos = weights.binary_search(&k).ok()?;
            weights.remove(pos);
            k -= 2;
        }
        parts.push(top as usize + 1);
    }
    Partition::new(parts).ok()
}

/// The orbit whose middle element has half-coordinates equal to the
/// `ε`-contents of `λ` (types B, C, D), or the orbit `λ` itself in type A.
pub fn orbit_from_contents(lambda: &Partition, family: Family) -> Result<NilpotentOrbitClass> {
    let n = lambda.n();
    let eps = match family {
        Family::A => return orbit(Algebra::Sl(n), lambda.clone()),
        Family::B => int(1),
        Family::C => Rational::new(1.into(), 2.into()),
        Family::D => Rational::zero(),
        _ => return Err(Error::Usage(format!("no content rule for type {family}"))),
    };
    let algebra = Algebra::for_type(family, n)?;
    let mut w = Vec::new();
    for (i, j) in lambda.boxes() {
        let h = box_content(i, j, &Rational::one(), &eps) * int(2);
        if !h.is_integer() {
            return Err(Error::Mismatch(format!("{lambda}: non-integral weight {h}")));
        }
        let h: i64 = h.to_integer().try_into().map_err(|_| Error::Mismatch("weight overflow".into()))?;
        w.push(h);
        w.push(-h);
    }
    if algebra.size() % 2 == 1 {
        w.push(0);
    }
    let part = strings_of(w).ok_or_else(|| Error::Mismatch(format!("{lambda}: contents are not sl₂ strings")))?;
    orbit(algebra, part)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CuspidalFamily {
    BSp,
    BSoOdd,
    CLike4nA,
    CLike4nB,
    G2InE6,
    F4InE7,
}

impl CuspidalFamily {
    pub fn id(&self) -> &'static str {
        match self {
            CuspidalFamily::BSp => "B-sp",
            CuspidalFamily::BSoOdd => "B-so-odd",
            CuspidalFamily::CLike4nA => "C-like-4n-a",
            CuspidalFamily::CLike4nB => "C-like-4n-b",
            CuspidalFamily::G2InE6 => "G2-in-E6",
            CuspidalFamily::F4InE7 => "F4-in-E7",
        }
    }

    pub fn parse(s: &str) -> Option<CuspidalFamily> {
        [
            CuspidalFamily::BSp,
            CuspidalFamily::BSoOdd,
            CuspidalFamily::CLike4nA,
            CuspidalFamily::CLike4nB,
            CuspidalFamily::G2InE6,
            CuspidalFamily::F4InE7,
        ]
        .into_iter()
        .find(|f| f.id().eq_ignore_ascii_case(s))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CuspidalCase {
    pub family: CuspidalFamily,
    pub host: String,
    /// Levi subalgebra and its cuspidal orbit, as text.
    pub levi: String,
    pub cuspidal: String,
    pub root_family: Family,
    pub rank: usize,
    /// `c` on each W-orbit of roots, in the orbit order of the root system.
    #[serde(serialize_with = "crate::num::serialize_rationals")]
    pub params: Vec<Rational>,
    /// `(c₁, c₂)` for the B_n families: `c(ε₁−ε₂)` and `c(ε_n)`.
    #[serde(skip)]
    pub content_params: Option<(Rational, Rational)>,
}

fn parts_text(parts: impl Iterator<Item = usize>) -> String {
    let v: Vec<String> = parts.map(|p| p.to_string()).collect();
    format!("({})", v.join(","))
}

/// A classical cuspidal case of rank `n ≥ 2` with index `p ≥ 1`, or one of
/// the two exceptional ones (`n`, `p` ignored).
pub fn cuspidal_case(family: CuspidalFamily, n: usize, p: usize) -> Result<CuspidalCase> {
    let classical = |host: String, levi: String, cusp: String, c1: i64, c2: i64| -> Result<CuspidalCase> {
        if n < 2 || p < 1 {
            return Err(Error::Usage("classical cuspidal families need n ≥ 2 and p ≥ 1".into()));
        }
        Ok(CuspidalCase {
            family,
            host,
            levi,
            cuspidal: cusp,
            root_family: Family::B,
            rank: n,
            // B_n orbits: long roots first, then short
            params: vec![int(c1), int(c2)],
            content_params: Some((int(c1), int(c2))),
        })
    };
    let pi = p as i64;
    match family {
        CuspidalFamily::BSp => {
            let k = p * (p + 1) / 2;
            classical(
                format!("sp({})", 2 * k + 2 * n),
                format!("sp({})+C^{n}", 2 * k),
                parts_text((1..=p).map(|i| 2 * i)),
                2,
                2 * pi + 1,
            )
        }
        CuspidalFamily::BSoOdd => {
            let k = p * p;
            classical(
                format!("so({})", k + 2 * n),
                format!("so({k})+C^{n}"),
                parts_text((0..p).map(|i| 2 * i + 1)),
                2,
                2 * pi + 2,
            )
        }
        CuspidalFamily::CLike4nA => {
            let k = (p + 1) * (2 * p + 1);
            classical(
                format!("so({})", k + 4 * n),
                format!("so({k})+sl(2)^{n}+C^{n}"),
                format!("{}+(2)^{n}", parts_text((0..=p).map(|i| 4 * i + 1))),
                4,
                4 * pi + 3,
            )
        }
        CuspidalFamily::CLike4nB => {
            let k = (p + 1) * (2 * p + 3);
            classical(
                format!("so({})", k + 4 * n),
                format!("so({k})+sl(2)^{n}+C^{n}"),
                format!("{}+(2)^{n}", parts_text((0..=p).map(|i| 4 * i + 3))),
                4,
                4 * pi + 5,
            )
        }
        CuspidalFamily::G2InE6 => Ok(CuspidalCase {
            family,
            host: "E6".into(),
            levi: "2A2".into(),
            cuspidal: "regular".into(),
            root_family: Family::G,
            rank: 2,
            // orbit 0 holds the short simple root, orbit 1 the long one
            params: vec![int(3), int(1)],
            content_params: None,
        }),
        CuspidalFamily::F4InE7 => Ok(CuspidalCase {
            family,
            host: "E7".into(),
            levi: "(3A1)'".into(),
            cuspidal: "regular".into(),
            root_family: Family::F,
            rank: 4,
            // orbit 0 holds the long simple roots, orbit 1 the short ones
            params: vec![int(1), int(2)],
            content_params: None,
        }),
    }
}

/// The four classical families at `(n, p)` followed by the two exceptional
/// cases.
pub fn cuspidal_cases(n: usize, p: usize) -> Result<Vec<CuspidalCase>> {
    [
        CuspidalFamily::BSp,
        CuspidalFamily::BSoOdd,
        CuspidalFamily::CLike4nA,
        CuspidalFamily::CLike4nB,
        CuspidalFamily::G2InE6,
        CuspidalFamily::F4InE7,
    ]
    .into_iter()
    .map(|f| cuspidal_case(f, n, p))
    .collect()
}
