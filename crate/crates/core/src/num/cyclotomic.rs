use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{int, rat_to_f64, rat_to_string, QuadValue, Rational};

thread_local! {
    static CYCLOTOMIC_POLYS: RefCell<HashMap<u64, Vec<BigInt>>> = RefCell::new(HashMap::new());
}

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
pub(crate) fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    if let Some(p) = CYCLOTOMIC_POLYS.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    CYCLOTOMIC_POLYS.with(|c| c.borrow_mut().insert(n, num.clone()));
    num
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = &den[dn];
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / lead;
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// A number `Σ q_k ζ_n^k` in the cyclotomic field Q(ζ_n), stored in the power
/// basis `1, ζ, …, ζ^{φ(n)-1}` (reduced modulo Φ_n). Equality compares
/// coefficients after lifting both sides to a common modulus.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    modulus: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self { modulus: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        Self::from_exponents(n, &[(k, Rational::one())])
    }

    /// Builds `Σ q·ζ_n^k` from (exponent, coefficient) pairs.
    pub fn from_exponents(n: u64, terms: &[(i64, Rational)]) -> Self {
        let n = n.max(1);
        let mut dense = vec![Rational::zero(); n as usize];
        for (k, q) in terms {
            dense[k.rem_euclid(n as i64) as usize] += q;
        }
        Self::reduce(n, dense).normalized()
    }

    fn reduce(n: u64, mut dense: Vec<Rational>) -> Self {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        for k in (deg..dense.len()).rev() {
            let c = std::mem::take(&mut dense[k]);
            if c.is_zero() {
                continue;
            }
            // Φ is monic: x^k ≡ x^k - x^{k-deg}Φ
            for (i, p) in phi.iter().enumerate().take(deg) {
                let t = &c * Rational::from_integer(p.clone());
                dense[k - deg + i] -= t;
            }
        }
        dense.truncate(deg);
        Self { modulus: n, coeffs: dense }
    }

    /// Collapses to modulus 1 when the value is rational.
    fn normalized(self) -> Self {
        if self.modulus != 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            return Self::from_rational(self.coeffs[0].clone());
        }
        self
    }

    /// The same number expressed over modulus `m` (requires `self.modulus | m`).
    fn lift_raw(&self, m: u64) -> Self {
        assert!(m % self.modulus == 0, "modulus {} does not divide {}", self.modulus, m);
        if m == self.modulus {
            return self.clone();
        }
        let step = (m / self.modulus) as usize;
        let mut dense = vec![Rational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            dense[(k * step) % m as usize] += c;
        }
        Self::reduce(m, dense)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.modulus == 1).then(|| &self.coeffs[0])
    }

    /// Complex conjugate (ζ ↦ ζ⁻¹).
    pub fn conj(&self) -> Self {
        let n = self.modulus as i64;
        let terms: Vec<(i64, Rational)> =
            self.coeffs.iter().enumerate().map(|(k, c)| (-(k as i64) % n.max(1), c.clone())).collect();
        Self::from_exponents(self.modulus, &terms)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| c * r).collect() }.normalized()
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.modulus as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(rat_to_f64(c), 2.0 * std::f64::consts::PI * k as f64 / n))
            .sum()
    }

    /// Exact conversion to Q(√2,√3), if the value lies there.
    pub fn to_quad(&self) -> Option<QuadValue> {
        if let Some(r) = self.as_rational() {
            return Some(QuadValue::from_rational(r.clone()));
        }
        let m = self.modulus.lcm(&24);
        let target = self.lift_raw(m);
        let basis = [
            Self::one(),
            Self::sqrt2(),
            Self::sqrt3(),
            &Self::sqrt2() * &Self::sqrt3(),
        ];
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.lift_raw(m).coeffs).collect();
        let sol = solve_exact(&cols, &target.coeffs)?;
        Some(QuadValue::new(sol[0].clone(), sol[1].clone(), sol[2].clone(), sol[3].clone()))
    }

    pub fn from_quad(q: &QuadValue) -> Self {
        let parts = [Self::one(), Self::sqrt2(), Self::sqrt3(), &Self::sqrt2() * &Self::sqrt3()];
        let mut acc = Self::zero();
        for (c, b) in q.q.iter().zip(parts.iter()) {
            if !c.is_zero() {
                acc = &acc + &b.scale(c);
            }
        }
        acc
    }

    /// √2 = ζ₈ + ζ₈⁻¹.
    pub fn sqrt2() -> Self {
        Self::from_exponents(8, &[(1, Rational::one()), (-1, Rational::one())])
    }

    /// √3 = ζ₁₂ + ζ₁₂⁻¹.
    pub fn sqrt3() -> Self {
        Self::from_exponents(12, &[(1, Rational::one()), (-1, Rational::one())])
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.modulus == b.modulus {
            return (a.clone(), b.clone());
        }
        let m = a.modulus.lcm(&b.modulus);
        (a.lift_raw(m), b.lift_raw(m))
    }

    /// Renders as a sum of `q*E(n)^k` terms, GAP style.
    pub fn render(&self) -> String {
        if let Some(r) = self.as_rational() {
            return rat_to_string(r);
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if k == 0 { rat_to_string(c) } else { format!("{}*E({})^{}", rat_to_string(c), self.modulus, k) };
            parts.push(term);
        }
        parts.join("+").replace("+-", "-")
    }
}

/// Solves `Σ x_j cols[j] = rhs` exactly; `None` if inconsistent.
pub(crate) fn solve_exact(cols: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][ncols].clone();
    }
    Some(sol)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, o);
        let coeffs = a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic { modulus: a.modulus, coeffs }.normalized()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &(-o)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        if let Some(r) = self.as_rational() {
            return o.scale(r);
        }
        if let Some(r) = o.as_rational() {
            return self.scale(r);
        }
        let (a, b) = Cyclotomic::common(self, o);
        let n = a.modulus as usize;
        let mut dense = vec![Rational::zero(); 2 * n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        // fold ζ^n = 1 before reducing
        let (lo, hi) = dense.split_at_mut(n);
        for (l, h) in lo.iter_mut().zip(hi.iter_mut()) {
            *l += std::mem::take(h);
        }
        dense.truncate(n);
        Cyclotomic::reduce(a.modulus, dense).normalized()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
