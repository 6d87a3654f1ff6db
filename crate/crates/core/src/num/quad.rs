use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{int, rat_to_f64, rat_to_string, rational_sqrt, Rational};

/// An element `q0 + q1·√2 + q2·√3 + q3·√6` of the real field Q(√2, √3).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadValue {
    pub q: [Rational; 4],
}

impl QuadValue {
    pub fn new(q0: Rational, q1: Rational, q2: Rational, q3: Rational) -> Self {
        Self { q: [q0, q1, q2, q3] }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt3() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn sqrt6() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    /// The positive square root of a non-negative rational, when it lies in
    /// Q(√2, √3), i.e. when `r = s²·k` with `s` rational and `k ∈ {1,2,3,6}`.
    pub fn sqrt_of_rational(r: &Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Self::zero());
        }
        for (k, slot) in [(1, 0usize), (2, 1), (3, 2), (6, 3)] {
            if let Some(s) = rational_sqrt(&(r / int(k))) {
                let mut q = Self::zero();
                q.q[slot] = s;
                return Some(q);
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.q.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.q[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.q[0])
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.q[0])
            + rat_to_f64(&self.q[1]) * 2f64.sqrt()
            + rat_to_f64(&self.q[2]) * 3f64.sqrt()
            + rat_to_f64(&self.q[3]) * 6f64.sqrt()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { q: [&self.q[0] * r, &self.q[1] * r, &self.q[2] * r, &self.q[3] * r] }
    }

    /// Galois conjugate sending √2 ↦ −√2.
    fn flip2(&self) -> Self {
        Self::new(self.q[0].clone(), -&self.q[1], self.q[2].clone(), -&self.q[3])
    }

    /// Galois conjugate sending √3 ↦ −√3.
    fn flip3(&self) -> Self {
        Self::new(self.q[0].clone(), self.q[1].clone(), -&self.q[2], -&self.q[3])
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let a = self.flip2();
        let b = self.flip3();
        let c = self.flip2().flip3();
        let cof = &(&a * &b) * &c;
        let norm = self * &cof;
        let n = norm.as_rational().expect("field norm is rational").clone();
        Some(cof.scale(&(Rational::one() / n)))
    }

    /// Sign of the real number (exact for all values of the tower).
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        // x ≠ 0 in a field of characteristic zero; the float is accurate
        // unless the value is tiny, in which case refine through x·x̄ products.
        let f = self.to_f64();
        if f.abs() > 1e-9 {
            return if f > 0.0 { 1 } else { -1 };
        }
        let scaled = self.scale(&Rational::from_integer(num_bigint::BigInt::from(10).pow(12)));
        scaled.signum()
    }

    pub fn render(&self) -> String {
        let names = ["", "√2", "√3", "√6"];
        let mut out = String::new();
        for (i, c) in self.q.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = rat_to_string(c);
            if !out.is_empty() && !s.starts_with('-') {
                out.push('+');
            }
            if i == 0 {
                out.push_str(&s);
            } else if c.is_one() {
                out.push_str(names[i]);
            } else if (-c).is_one() {
                out.push('-');
                out.push_str(names[i]);
            } else {
                out.push_str(&s);
                out.push_str(names[i]);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for QuadValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = serializer.serialize_map(Some(4))?;
        for (k, v) in ["q0", "q1", "q2", "q3"].iter().zip(self.q.iter()) {
            m.serialize_entry(k, &rat_to_string(v))?;
        }
        m.end()
    }
}

impl<'a> Add<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;
    fn add(self, o: &QuadValue) -> QuadValue {
        QuadValue {
            q: [&self.q[0] + &o.q[0], &self.q[1] + &o.q[1], &self.q[2] + &o.q[2], &self.q[3] + &o.q[3]],
        }
    }
}

impl Add for QuadValue {
    type Output = QuadValue;
    fn add(self, o: QuadValue) -> QuadValue {
        &self + &o
    }
}

impl AddAssign<&QuadValue> for QuadValue {
    fn add_assign(&mut self, o: &QuadValue) {
        for i in 0..4 {
            self.q[i] += &o.q[i];
        }
    }
}

impl<'a> Sub<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;
    fn sub(self, o: &QuadValue) -> QuadValue {
        self + &(-o)
    }
}

impl Sub for QuadValue {
    type Output = QuadValue;
    fn sub(self, o: QuadValue) -> QuadValue {
        &self - &o
    }
}

impl Neg for &QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        QuadValue { q: [-&self.q[0], -&self.q[1], -&self.q[2], -&self.q[3]] }
    }
}

impl Neg for QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        -&self
    }
}

impl<'a> Mul<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;
    fn mul(self, o: &QuadValue) -> QuadValue {
        let [a0, a1, a2, a3] = &self.q;
        let [b0, b1, b2, b3] = &o.q;
        let two = int(2);
        let three = int(3);
        let six = int(6);
        // basis products: √2√2=2, √3√3=3, √6√6=6, √2√3=√6, √2√6=2√3, √3√6=3√2
        let c0 = a0 * b0 + &two * a1 * b1 + &three * a2 * b2 + &six * a3 * b3;
        let c1 = a0 * b1 + a1 * b0 + &three * (a2 * b3 + a3 * b2);
        let c2 = a0 * b2 + a2 * b0 + &two * (a1 * b3 + a3 * b1);
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        QuadValue::new(c0, c1, c2, c3)
    }
}

impl Mul for QuadValue {
    type Output = QuadValue;
    fn mul(self, o: QuadValue) -> QuadValue {
        &self * &o
    }
}

impl<'a> Div<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;
    fn div(self, o: &QuadValue) -> QuadValue {
        self * &o.inverse().expect("division by zero in Q(√2,√3)")
    }
}

impl std::iter::Sum for QuadValue {
    fn sum<I: Iterator<Item = QuadValue>>(iter: I) -> Self {
        iter.fold(QuadValue::zero(), |a, b| a + b)
    }
}
