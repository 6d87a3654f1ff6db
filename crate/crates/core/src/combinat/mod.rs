//! Partition combinatorics for the classical types: Schur and Read
//! parameterizations, contents, Slooten's peeling algorithm and the
//! closed formulas used to cross-check character tables.

mod characters;

pub use characters::{
    bn_character, dn_restriction, lift_to_cover, read_parameterization, signed_permutations, sn_character,
    sn_pullback, DnRestriction, ReadEntry, SignedPerm,
};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::num::{int, Rational};

/// A partition, parts weakly decreasing and positive. The empty partition
/// is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Usage("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses "3,2,1" (or "" for the empty partition).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Usage(format!("bad partition part '{p}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (0..first).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `n − ℓ(λ)` even.
    pub fn is_even(&self) -> bool {
        (self.n() - self.len()) % 2 == 0
    }

    /// Boxes `(i, j)`, 0-indexed row and column.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Multiplicity of each part value.
    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn n(&self) -> usize {
        self.left.n() + self.right.n()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into distinct parts.
pub fn distinct_partitions(n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(Partition::is_distinct).collect()
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p[n]
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// Dimension of the genuine `S̃_n`-type(s) attached to a strict partition.
pub fn schur_dimension(lambda: &Partition) -> Result<BigInt> {
    if !lambda.is_distinct() {
        return Err(Error::Usage(format!("{lambda} has repeated parts")));
    }
    let n = lambda.n();
    let m = lambda.len();
    let mut r = Rational::from_integer(factorial(n));
    for &p in lambda.parts() {
        r /= Rational::from_integer(factorial(p));
    }
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (lambda.parts[i] as i64, lambda.parts[j] as i64);
            r *= Rational::new((a - b).into(), (a + b).into());
        }
    }
    r *= Rational::from_integer(BigInt::from(2).pow(((n - m) / 2) as u32));
    debug_assert!(r.is_integer());
    Ok(r.to_integer())
}

fn binom2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// `tr/dim` of a genuine `S̃_n`-type on `s̃₁s̃₂`, the lift of a 3-cycle with
/// `(s̃₁s̃₂)³ = z`.
pub fn spin_char_on_3cycle(lambda: &Partition) -> Result<Rational> {
    let n = lambda.n();
    if n < 3 {
        return Err(Error::Usage("need n ≥ 3 for a 3-cycle".into()));
    }
    if !lambda.is_distinct() {
        return Err(Error::Usage(format!("{lambda} has repeated parts")));
    }
    let s: i64 = lambda.parts().iter().map(|&l| (l * (l * l - 1) / 6) as i64).sum();
    let class_size = (n * (n - 1) * (n - 2) / 3) as i64;
    Ok(Rational::new((s - binom2(n)).into(), class_size.into()))
}

/// Checks the rational identity behind the 3-cycle formula.
pub fn verify_identity_eq_iden(lambda: &Partition) -> bool {
    let l: Vec<Rational> = lambda.parts().iter().map(|&p| int(p as i64)).collect();
    let one = Rational::one();
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for (i, li) in l.iter().enumerate() {
        let base = li * li * (li - &one);
        let mut prod = Rational::one();
        for (j, lj) in l.iter().enumerate() {
            if i != j {
                let num = (li - lj - &one) * (li + lj);
                let den = (li - lj) * (li + lj - &one);
                prod *= num / den;
            }
        }
        lhs += &base * prod;
        rhs += base;
        for (j, lj) in l.iter().enumerate() {
            if i != j {
                rhs -= li * lj;
            }
        }
    }
    lhs == rhs
}

/// Content `c₁(j−i)+c₂` of box `(i, j)`.
pub fn box_content(i: usize, j: usize, c1: &Rational, c2: &Rational) -> Rational {
    c1 * int(j as i64 - i as i64) + c2
}

/// `Σ_boxes content^k`.
pub fn content_power_sum(lambda: &Partition, k: u32, c1: &Rational, c2: &Rational) -> Rational {
    lambda.boxes().map(|(i, j)| num_traits::pow(box_content(i, j, c1, c2), k as usize)).sum()
}

/// Slooten's peeling: repeatedly remove the first row or first column of
/// what is left, whichever ends in the content of largest absolute value,
/// branching on ties. Rows go to the left partition, columns to the right.
pub fn slooten(lambda: &Partition, c1: &Rational, c2: &Rational) -> BTreeSet<Bipartition> {
    let lt = lambda.transpose();
    let mut out = BTreeSet::new();
    let mut stack: Vec<(usize, usize, Vec<usize>, Vec<usize>)> = vec![(0, 0, Vec::new(), Vec::new())];
    while let Some((r0, c0, rows, cols)) = stack.pop() {
        let row_len = lambda.parts.get(r0).map_or(0, |&p| p.saturating_sub(c0));
        let col_len = lt.parts.get(c0).map_or(0, |&p| p.saturating_sub(r0));
        if row_len == 0 || col_len == 0 {
            let left = Partition::new(rows).expect("positive parts");
            let right = Partition::new(cols).expect("positive parts");
            out.insert(Bipartition::new(left, right));
            continue;
        }
        let remaining: usize = (r0..lambda.len()).map(|i| lambda.parts[i].saturating_sub(c0)).sum();
        if remaining == 1 {
            let c = box_content(r0, c0, c1, c2);
            let (mut rows, mut cols) = (rows, cols);
            if c.is_negative() {
                cols.push(1);
            } else {
                rows.push(1);
            }
            stack.push((r0 + 1, c0 + 1, rows, cols));
            continue;
        }
        let row_end = box_content(r0, c0 + row_len - 1, c1, c2).abs();
        let col_end = box_content(r0 + col_len - 1, c0, c1, c2).abs();
        if row_end >= col_end {
            let mut rows = rows.clone();
            rows.push(row_len);
            stack.push((r0 + 1, c0, rows, cols.clone()));
        }
        if col_end >= row_end {
            let mut cols = cols;
            cols.push(col_len);
            stack.push((r0, c0 + 1, rows, cols));
        }
    }
    out
}
