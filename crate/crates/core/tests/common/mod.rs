//! Oracles used by the integration tests. Nothing here calls the routines
//! under test beyond group multiplication and root data.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use spinweyl::grouprep::{CharacterTable, FiniteGroup};
use spinweyl::num::{int, Rational};
use spinweyl::rootsys::RootSystem;

/// Written to stderr directly so the line shows without `--nocapture`.
pub fn line(criterion: u32, pass: bool, detail: &str) {
    use std::io::Write;
    let text = format!("criterion {criterion}: {} ({detail})\n", if pass { "pass" } else { "FAIL" });
    let _ = std::io::stderr().write_all(text.as_bytes());
}

pub fn coroot(rs: &RootSystem, a: &[Rational]) -> Vec<Rational> {
    let n = rs.inner(a, a);
    a.iter().map(|x| x * int(2) / &n).collect()
}

fn add(a: &mut [Rational], b: &[Rational], k: &Rational) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y * k;
    }
}

/// Solves `m x = b` over the rationals; `m` square and invertible.
pub fn solve(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Vec<Rational> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible");
        m.swap(col, p);
        b.swap(col, p);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                let row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&row) {
                    *x -= y * &f;
                }
                let bc = b[col].clone();
                b[r] -= bc * f;
            }
        }
    }
    (0..n).map(|i| &b[i] / &m[i][i]).collect()
}

/// `⟨h,h⟩` for the element `h` of the coroot span with `α_i(h) = w_i` on the
/// simple roots.
pub fn diagram_norm(rs: &RootSystem, w: &[i64]) -> Rational {
    let r = rs.rank;
    let cor: Vec<Vec<Rational>> = rs.simple_roots.iter().map(|a| coroot(rs, a)).collect();
    let m: Vec<Vec<Rational>> = (0..r).map(|j| (0..r).map(|i| rs.inner(&rs.simple_roots[j], &cor[i])).collect()).collect();
    let c = solve(m, w.iter().map(|&x| int(x)).collect());
    let mut h = vec![Rational::zero(); rs.simple_roots[0].len()];
    for i in 0..r {
        add(&mut h, &cor[i], &c[i]);
    }
    rs.inner(&h, &h)
}

/// `⟨2ρ̌, 2ρ̌⟩` as the norm of the sum of the positive coroots.
pub fn two_rho_check_norm(rs: &RootSystem) -> Rational {
    let mut h = vec![Rational::zero(); rs.simple_roots[0].len()];
    for a in &rs.positive_roots {
        add(&mut h, &coroot(rs, a), &Rational::one());
    }
    rs.inner(&h, &h)
}

/// Eigenvalues of the middle element for a partition: the strings
/// `l−1, l−3, …, 1−l`.
pub fn h_eigenvalues(parts: &[usize]) -> Vec<i64> {
    let mut v: Vec<i64> = parts.iter().flat_map(|&l| (0..l).map(move |j| l as i64 - 1 - 2 * j as i64)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `Σ hᵢ²` over the non-negative half (orthogonal and symplectic) or all
/// eigenvalues (`sl`).
pub fn partition_norm(parts: &[usize], half: Option<usize>) -> Rational {
    let v = h_eigenvalues(parts);
    let take = half.unwrap_or(v.len());
    int(v[..take].iter().map(|x| x * x).sum())
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: usize) -> Vec<Vec<usize>> {
    partitions(n).into_iter().filter(|p| p.windows(2).all(|w| w[0] > w[1])).collect()
}

/// Schur's degree `2^⌊(n−ℓ)/2⌋ n!/∏λᵢ! ∏_{i<j}(λᵢ−λⱼ)/(λᵢ+λⱼ)`.
pub fn schur_degree(l: &[usize]) -> Rational {
    let n: usize = l.iter().sum();
    let fact = |k: usize| (1..=k).fold(Rational::one(), |a, i| a * int(i as i64));
    let mut d = fact(n) * int(1 << ((n - l.len()) / 2));
    for &x in l {
        d /= fact(x);
    }
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            d *= Rational::new(((l[i] - l[j]) as i64).into(), ((l[i] + l[j]) as i64).into());
        }
    }
    d
}

/// Left side of the strict-partition identity, read directly.
pub fn iden_lhs(l: &[usize]) -> Rational {
    let l: Vec<Rational> = l.iter().map(|&x| int(x as i64)).collect();
    let one = Rational::one();
    let mut s = Rational::zero();
    for i in 0..l.len() {
        let mut p = &l[i] * &l[i] * (&l[i] - &one);
        for j in 0..l.len() {
            if i != j {
                p *= (&l[i] - &l[j] - &one) * (&l[i] + &l[j]) / ((&l[i] - &l[j]) * (&l[i] + &l[j] - &one));
            }
        }
        s += p;
    }
    s
}

pub fn iden_rhs(l: &[usize]) -> Rational {
    let l: Vec<i64> = l.iter().map(|&x| x as i64).collect();
    let mut s: i64 = l.iter().map(|x| x * x * (x - 1)).sum();
    for i in 0..l.len() {
        for j in 0..l.len() {
            if i != j {
                s -= l[i] * l[j];
            }
        }
    }
    int(s)
}

fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    (0..n).map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum()).collect()
}

/// `1/(1 − t u)` truncated.
fn geometric(t: &Rational, n: usize) -> Vec<Rational> {
    (0..n).map(|k| num_traits::pow(t.clone(), k)).collect()
}

/// Coefficient of `x⁻²` in `(x²−x) ∏ (x−λᵢ−1)(x+λᵢ)/((x−λᵢ)(x+λᵢ−1))`,
/// expanded in `u = 1/x`.
pub fn laurent_coefficient(l: &[usize]) -> Rational {
    let n = 5;
    let mut p = vec![Rational::zero(); n];
    p[0] = Rational::one();
    for &a in l {
        let a = int(a as i64);
        let mut num = vec![Rational::zero(); n];
        // (1 − (a+1)u)(1 + a u)
        num[0] = Rational::one();
        num[1] = &a - (&a + int(1));
        num[2] = -(&a + int(1)) * &a;
        let den = series_mul(&geometric(&a, n), &geometric(&(int(1) - &a), n));
        p = series_mul(&series_mul(&p, &num), &den);
    }
    // (x² − x) = u⁻²(1 − u); x⁻² is u², so read u⁴ of (1 − u)p
    &p[4] - &p[3]
}

pub fn is_power_of_two(k: usize) -> bool {
    k.is_power_of_two()
}

/// Conjugacy classes by direct conjugation.
pub fn brute_classes<G: FiniteGroup>(g: &G) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut c: Vec<usize> = (0..n).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        c.sort_unstable();
        c.dedup();
        for &y in &c {
            seen[y] = true;
        }
        out.push(c);
    }
    out
}

/// Burnside's method: the central characters are the common eigenvectors
/// of the class multiplication matrices, found as the null vectors of one
/// generic combination. Rows are `χ` on `classes` (in that order).
pub fn burnside_table<G: FiniteGroup>(g: &G, classes: &[Vec<usize>]) -> Vec<Vec<Complex64>> {
    let n = g.order();
    let r = classes.len();
    let mut class_of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    // a[j][i][k] = #{x ∈ C_j : x⁻¹ g_k ∈ C_i}
    let mut a = vec![vec![vec![0.0f64; r]; r]; r];
    for k in 0..r {
        let gk = classes[k][0];
        for j in 0..r {
            for &x in &classes[j] {
                a[j][class_of[g.mul(g.inv(x), gk)]][k] += 1.0;
            }
        }
    }
    for attempt in 0..8u64 {
        let coeff: Vec<f64> = (0..r).map(|j| ((j + 1) as f64 * 0.618_033_988_75 + attempt as f64 * 0.414_213_562).fract() + 0.5).collect();
        let m = DMatrix::from_fn(r, r, |i, k| (0..r).map(|j| coeff[j] * a[j][i][k]).sum::<f64>());
        let eig = m.complex_eigenvalues();
        let mut sorted: Vec<Complex64> = eig.iter().copied().collect();
        sorted.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap().then(x.im.partial_cmp(&y.im).unwrap()));
        let separated = sorted.windows(2).all(|w| (w[0] - w[1]).norm() > 1e-6);
        if !separated {
            continue;
        }
        let mc = m.map(|x| Complex64::new(x, 0.0));
        let mut rows = Vec::new();
        for lam in sorted {
            let shifted = &mc - DMatrix::from_diagonal_element(r, r, lam);
            let svd = shifted.svd(false, true);
            let vt = svd.v_t.expect("v_t");
            let (imin, _) = svd.singular_values.iter().enumerate().fold((0, f64::MAX), |b, (i, &s)| if s < b.1 { (i, s) } else { b });
            let mut w: Vec<Complex64> = (0..r).map(|k| vt[(imin, k)].conj()).collect();
            let id = class_of[g.identity()];
            let s = w[id];
            for x in w.iter_mut() {
                *x /= s;
            }
            let norm: f64 = (0..r).map(|k| w[k].norm_sqr() / classes[k].len() as f64).sum();
            let deg = (n as f64 / norm).sqrt();
            rows.push((0..r).map(|k| w[k] * deg / classes[k].len() as f64).collect());
        }
        return rows;
    }
    panic!("no generic combination separated the eigenvalues");
}

/// Whether the computed table equals the oracle table up to row order.
pub fn tables_agree(t: &CharacterTable, classes: &[Vec<usize>], oracle: &[Vec<Complex64>]) -> bool {
    if t.irreducibles.len() != oracle.len() || t.classes.len() != classes.len() {
        return false;
    }
    let cols: Vec<usize> = classes.iter().map(|c| t.classes.class_of(c[0])).collect();
    let mut used = vec![false; oracle.len()];
    for irr in &t.irreducibles {
        let vals: Vec<Complex64> = cols.iter().map(|&c| irr.values[c].to_complex()).collect();
        let hit = (0..oracle.len()).find(|&o| !used[o] && oracle[o].iter().zip(&vals).all(|(x, y)| (x - y).norm() < 1e-6));
        match hit {
            Some(o) => used[o] = true,
            None => return false,
        }
    }
    true
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// `det(xI − M)` by Faddeev–LeVerrier, constant term first.
pub fn char_poly(m: &[i64], n: usize) -> Vec<Rational> {
    let a: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| int(m[i * n + j])).collect()).collect();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k−1} + c_{n−k+1} I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s: Rational = (0..n).map(|l| &a[i][l] * &mk[l][j]).sum();
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let tr: Rational = (0..n).map(|i| (0..n).map(|l| &a[i][l] * &mk[l][i]).sum::<Rational>()).sum();
        c[n - k] = -tr / int(k as i64);
    }
    c
}

pub fn eval(p: &[Rational], x: i64) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * int(x) + c)
}

/// Product of `x^k + 1` over the parts, constant term first.
pub fn negative_cycles_poly(parts: &[usize]) -> Vec<Rational> {
    let mut p = vec![Rational::one()];
    for &k in parts {
        let mut q = vec![Rational::zero(); p.len() + k];
        for (i, c) in p.iter().enumerate() {
            q[i] += c;
            q[i + k] += c;
        }
        p = q;
    }
    p
}

/// Signed permutation matrix with positive cycles `pos` and negative cycles
/// `neg`.
pub fn signed_cycle_matrix(pos: &[usize], neg: &[usize]) -> Vec<i64> {
    let n: usize = pos.iter().chain(neg).sum();
    let mut m = vec![0; n * n];
    let mut start = 0;
    for (k, sign) in pos.iter().map(|&k| (k, 1)).chain(neg.iter().map(|&k| (k, -1))) {
        for j in 0..k {
            let from = start + j;
            let to = start + (j + 1) % k;
            m[to * n + from] = if j + 1 == k { sign } else { 1 };
        }
        start += k;
    }
    m
}

/// Elliptic classes of `W(B_n)` (or `W(D_n)`) counted over signed cycle
/// types, testing `det(1 − w)` on a representative.
pub fn elliptic_by_signed_cycles(n: usize, type_d: bool) -> usize {
    let mut count = 0;
    for k in 0..=n {
        for pos in partitions(k) {
            for neg in partitions(n - k) {
                if type_d && neg.len() % 2 == 1 {
                    continue;
                }
                let cp = char_poly(&signed_cycle_matrix(&pos, &neg), n);
                if !eval(&cp, 1).is_zero() {
                    count += 1;
                }
            }
        }
    }
    count
}

/// `σ̃(Ω)` in floating point, summing `c(α)c(β)|α̌||β̌| χ(z s̃_α s̃_β)` over
/// the pairs with `s_α(β) < 0`, the negativity tested on ambient vectors.
pub fn casimir_oracle(data: &spinweyl::psi::CoverData, chi: usize) -> Complex64 {
    let c = &data.cover;
    let rs = &c.rs;
    let np = rs.num_positive();
    let cl = data.classes();
    let vals = &data.table.irreducibles[chi].values;
    let f = |r: &Rational| spinweyl::num::rat_to_f64(r);
    let mut s = Complex64::new(0.0, 0.0);
    for a in 0..np {
        let ra = &rs.positive_roots[a];
        let na = rs.inner(ra, ra);
        for b in 0..np {
            let rb = &rs.positive_roots[b];
            let k = rs.inner(ra, rb) * int(2) / &na;
            let img: Vec<Rational> = rb.iter().zip(ra).map(|(y, x)| y - &k * x).collect();
            if rs.positive_roots.contains(&img) {
                continue;
            }
            let nb = rs.inner(rb, rb);
            let len = (4.0 / f(&na) * 4.0 / f(&nb)).sqrt();
            let coef = f(rs.c(a)) * f(rs.c(b)) * len;
            let x = c.mul(c.mul(c.z(), c.root_element(a)), c.root_element(b));
            s += vals[cl.class_of(x)].to_complex() * coef;
        }
    }
    s / data.degree(chi) as f64
}

pub fn quad(q0: i64, sqrt2: i64, sqrt3: i64) -> spinweyl::num::QuadValue {
    use spinweyl::num::QuadValue;
    &(&QuadValue::from_rational(int(q0)) + &QuadValue::sqrt2().scale(&int(sqrt2))) + &QuadValue::sqrt3().scale(&int(sqrt3))
}
