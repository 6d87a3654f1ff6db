//! Dixon–Schneider: simultaneous eigenvectors of the class-multiplication
//! matrices over F_p, lifted to cyclotomic values through the multiplicities
//! of eigenvalues on each cyclic subgroup.

use crate::error::{Error, Result};
use crate::num::{Cyclotomic, Rational};

use super::{CharacterTable, Classes, FiniteGroup, Irreducible};

pub fn default_table_bound() -> usize {
    std::env::var("SPINWEYL_MAX_GROUP_ORDER")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(200_000)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    let fs = prime_factors(p - 1);
    (2..p).find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap()
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√n`.
fn choose_prime(e: u64, n: u64) -> u64 {
    let lower = 2.0 * (n as f64).sqrt();
    let mut p = e + 1;
    while (p as f64) <= lower || !is_prime(p) {
        p += e;
    }
    p
}

/// Reduced row-echelon basis of a subspace of F_p^r.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn echelon(mut rows: Vec<Vec<u64>>, p: u64) -> Space {
    let r = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut k = 0;
    for c in 0..r {
        let Some(i) = (k..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(k, i);
        let inv = inv_mod(rows[k][c], p);
        for x in rows[k].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != k && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..r {
                    rows[i][j] = (rows[i][j] + p - f * rows[k][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        k += 1;
    }
    rows.truncate(k);
    Space { rows, pivots }
}

/// Null space of a square matrix over F_p.
fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let e = echelon(m.to_vec(), p);
    let free: Vec<usize> = (0..n).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in e.rows.iter().zip(&e.pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Coefficients of `det(xI − T)` over F_p, via Hessenberg reduction.
fn char_poly_mod(t: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = t.len();
    let mut h: Vec<Vec<u64>> = t.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&i| h[i][c] != 0) else { continue };
        if piv != c + 1 {
            h.swap(piv, c + 1);
            for row in h.iter_mut() {
                row.swap(piv, c + 1);
            }
        }
        let inv = inv_mod(h[c + 1][c], p);
        for i in c + 2..n {
            if h[i][c] == 0 {
                continue;
            }
            let f = h[i][c] * inv % p;
            for j in 0..n {
                h[i][j] = (h[i][j] + p - f * h[c + 1][j] % p) % p;
            }
            for row in h.iter_mut() {
                row[c + 1] = (row[c + 1] + f * row[i]) % p;
            }
        }
    }
    // recurrence on leading principal submatrices of the Hessenberg form
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let mut next = vec![0u64; k + 2];
        // (x − h_kk)·P_k
        for (i, &c) in polys[k].iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - c * h[k][k] % p) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = prod * h[i + 1][i] % p;
            let coef = prod * h[i][k] % p;
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = (next[j] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval_poly(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| (acc * x + a) % p)
}

/// Class matrix `A_j` with `A_j[k][l] = #{x ∈ C_j : x⁻¹ g_l ∈ C_k}`, so that
/// the central characters are right eigenvectors with eigenvalue `ω(C_j)`.
fn class_matrix<G: FiniteGroup + ?Sized>(g: &G, cl: &Classes, j: usize, p: u64) -> Vec<Vec<u64>> {
    let r = cl.len();
    let mut a = vec![vec![0u64; r]; r];
    for &x in &cl.members[j] {
        let xi = g.inv(x as usize);
        for l in 0..r {
            let k = cl.class_of(g.mul(xi, cl.reps[l]));
            a[k][l] += 1;
        }
    }
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    a
}

pub fn character_table<G: FiniteGroup + ?Sized>(g: &G, bound: usize) -> Result<CharacterTable> {
    let order = g.order();
    if order > bound {
        return Err(Error::BoundExceeded { order: order as u128, bound: bound as u128 });
    }
    let cl = Classes::new(g);
    let r = cl.len();
    let e = cl.exponent();
    let p = choose_prime(e, order as u64);
    let ident = cl.class_of(g.identity());

    // split F_p^r into common eigenspaces
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Space> = vec![echelon(
        (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect(),
        p,
    )];
    let mut class_order: Vec<usize> = (0..r).filter(|&j| j != ident).collect();
    class_order.sort_by_key(|&j| (cl.sizes[j], j));
    for &j in &class_order {
        pending.retain(|s| {
            if s.rows.len() == 1 {
                done.push(s.rows[0].clone());
                false
            } else {
                true
            }
        });
        if pending.is_empty() {
            break;
        }
        let a = class_matrix(g, &cl, j, p);
        let mut next = Vec::new();
        for space in pending.drain(..) {
            let d = space.rows.len();
            let images: Vec<Vec<u64>> = space
                .rows
                .iter()
                .map(|v| a.iter().map(|row| row.iter().zip(v).fold(0, |s, (x, y)| (s + x * y) % p)).collect())
                .collect();
            // T[i][k]: coefficient of basis vector i in A·b_k
            let t: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|k| images[k][space.pivots[i]]).collect()).collect();
            let cp = char_poly_mod(&t, p);
            let roots: Vec<u64> = (0..p).filter(|&x| eval_poly(&cp, x, p) == 0).collect();
            let mut total = 0;
            let mut parts = Vec::new();
            for lam in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| (0..d).map(|k| if i == k { (t[i][k] + p - lam) % p } else { t[i][k] }).collect())
                    .collect();
                let ns = nullspace(&shifted, p);
                total += ns.len();
                let vecs: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|col| (0..d).fold(0, |s, i| (s + c[i] * space.rows[i][col]) % p))
                            .collect()
                    })
                    .collect();
                parts.push(echelon(vecs, p));
            }
            if total != d {
                return Err(Error::Table(format!("class matrix not diagonalizable mod {}", p)));
            }
            next.extend(parts);
        }
        pending = next;
    }
    for s in pending {
        if s.rows.len() != 1 {
            return Err(Error::Table("eigenspaces did not split".into()));
        }
        done.push(s.rows[0].clone());
    }
    if done.len() != r {
        return Err(Error::Table(format!("found {} characters for {} classes", done.len(), r)));
    }

    let z = pow_mod(primitive_root(p), (p - 1) / e, p);
    let isqrt = (order as f64).sqrt().floor() as u64 + 1;
    let mut irreducibles = Vec::new();
    for v in done {
        // central character normalized at the identity class
        let inv0 = inv_mod(v[ident], p);
        let omega: Vec<u64> = v.iter().map(|x| x * inv0 % p).collect();
        let mut s = 0u64;
        for l in 0..r {
            let t = omega[l] * omega[cl.inverse_class[l]] % p * inv_mod(cl.sizes[l] as u64 % p, p) % p;
            s = (s + t) % p;
        }
        let deg_sq = (order as u64 % p) * inv_mod(s, p) % p;
        let degree = (1..=isqrt)
            .find(|&d| d * d % p == deg_sq)
            .ok_or_else(|| Error::Table("no degree candidate".into()))?;
        let chi_mod: Vec<u64> =
            (0..r).map(|l| omega[l] * (degree % p) % p * inv_mod(cl.sizes[l] as u64 % p, p) % p).collect();
        let mut values = Vec::with_capacity(r);
        for l in 0..r {
            let o = cl.element_orders[l] as u64;
            let step = e / o;
            let powers: Vec<usize> = (0..o as i64).map(|j| cl.power_class(g, l, j)).collect();
            let inv_o = inv_mod(o % p, p);
            let mut terms = Vec::new();
            for k in 0..o {
                let mut m = 0u64;
                for (j, &pc) in powers.iter().enumerate() {
                    let expo = (e - (step * j as u64 * k) % e) % e;
                    m = (m + chi_mod[pc] * pow_mod(z, expo, p)) % p;
                }
                let m = m * inv_o % p;
                if m > degree {
                    return Err(Error::Table(format!("eigenvalue multiplicity {} exceeds degree {}", m, degree)));
                }
                if m != 0 {
                    terms.push((k as i64, Rational::from_integer((m as i64).into())));
                }
            }
            values.push(Cyclotomic::from_exponents(o, &terms));
        }
        irreducibles.push(Irreducible { degree, values, genuine: false, self_associate: false });
    }
    let sum_sq: u64 = irreducibles.iter().map(|c| c.degree * c.degree).sum();
    if sum_sq != order as u64 {
        return Err(Error::Table(format!("Σ χ(1)² = {} ≠ {}", sum_sq, order)));
    }
    let key = |c: &Irreducible| {
        c.values
            .iter()
            .map(|v| {
                let z = v.to_complex();
                ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64)
            })
            .collect::<Vec<_>>()
    };
    irreducibles.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| key(b).cmp(&key(a))));
    Ok(CharacterTable { classes: cl, irreducibles })
}
