use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use super::{CliffordElement, OrthoBasis};
use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{int, rat_to_f64, Cyclotomic, QuadValue, Rational};

/// A spin-module trace: `value` if real, `i·value` if `imaginary`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpinCharacterValue {
    pub value: QuadValue,
    pub imaginary: bool,
    #[serde(skip)]
    pub float_hint: f64,
}

impl SpinCharacterValue {
    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let v = Cyclotomic::from_quad(&self.value);
        if self.imaginary {
            &v * &Cyclotomic::root_of_unity(4, 1)
        } else {
            v
        }
    }
}

type CMat = Vec<Complex64>;

fn cmul(d: usize, a: &CMat, b: &CMat) -> CMat {
    let mut c = vec![Complex64::zero(); d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == Complex64::zero() {
                continue;
            }
            for j in 0..d {
                c[i * d + j] += x * b[k * d + j];
            }
        }
    }
    c
}

fn kron(da: usize, a: &CMat, db: usize, b: &CMat) -> CMat {
    let d = da * db;
    let mut c = vec![Complex64::zero(); d * d];
    for i in 0..da {
        for j in 0..da {
            for k in 0..db {
                for l in 0..db {
                    c[(i * db + k) * d + j * db + l] = a[i * da + j] * b[k * db + l];
                }
            }
        }
    }
    c
}

/// Anticommuting Hermitian involutions `Γ_1..Γ_r` on a space of dimension
/// `2^⌊r/2⌋`; for odd `r` the last one is `chirality·sign`.
fn clifford_generators(r: usize, sign: f64) -> (usize, Vec<CMat>) {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let id2 = vec![c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.)];
    let x = vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)];
    let y = vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)];
    let z = vec![c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)];
    let m = r / 2;
    let d = 1usize << m;
    let mut gens = Vec::new();
    for k in 0..m {
        for p in [&x, &y] {
            let mut mat = vec![c(1., 0.)];
            let mut dim = 1;
            for slot in 0..m {
                let f = if slot < k {
                    &z
                } else if slot == k {
                    p
                } else {
                    &id2
                };
                mat = kron(dim, &mat, 2, f);
                dim *= 2;
            }
            gens.push(mat);
        }
    }
    if r % 2 == 1 {
        // chirality (−i)^m Γ_1⋯Γ_{2m}
        let mut ch: CMat = (0..d * d).map(|i| if i % (d + 1) == 0 { c(1., 0.) } else { c(0., 0.) }).collect();
        for g in &gens {
            ch = cmul(d, &ch, g);
        }
        let phase = c(0., -1.).powu(m as u32) * sign;
        gens.push(ch.into_iter().map(|v| v * phase).collect());
    }
    (d, gens)
}

fn numeric_trace(basis: &OrthoBasis, a: &CliffordElement, norm: &Rational, sign: f64) -> Complex64 {
    let r = basis.dim();
    let (d, gammas) = clifford_generators(r, sign);
    let gammas: Vec<CMat> = gammas.into_iter().map(|g| g.into_iter().map(|v| v * Complex64::i()).collect()).collect();
    let mut total = Complex64::zero();
    for (&mask, coef) in &a.coeffs {
        let mut mat: CMat = (0..d * d).map(|i| if i % (d + 1) == 0 { Complex64::new(1., 0.) } else { Complex64::zero() }).collect();
        let mut f = rat_to_f64(coef);
        for i in 0..r {
            if mask >> i & 1 == 1 {
                mat = cmul(d, &mat, &gammas[i]);
                f *= rat_to_f64(&basis.sq_norms[i]).sqrt();
            }
        }
        let tr: Complex64 = (0..d).map(|i| mat[i * d + i]).sum();
        total += tr * f;
    }
    total / rat_to_f64(norm).sqrt()
}

fn snap(square: &Rational, numeric: f64, imaginary: bool) -> Result<SpinCharacterValue> {
    let root = QuadValue::sqrt_of_rational(square)
        .ok_or_else(|| Error::Snap(format!("{} is not a square in Q(√2,√3)", square)))?;
    let value = if numeric < 0.0 { -root } else { root };
    if (value.to_f64() - numeric).abs() > 1e-6 {
        return Err(Error::Snap(format!("numeric trace {} vs exact {}", numeric, value)));
    }
    Ok(SpinCharacterValue { value, imaginary, float_hint: numeric })
}

/// Trace of a Pin element on the spin module(s): one value for even rank,
/// `[S⁺, S⁻]` for odd rank. The modulus comes from exact determinant
/// identities for `w = p(a)`, the sign from a floating gamma-matrix model.
pub fn spin_character(basis: &OrthoBasis, a: &CliffordElement) -> Result<Vec<SpinCharacterValue>> {
    let r = basis.dim();
    let norm = basis.spinor_norm(a)?;
    let w = basis.pin_project(a)?;
    let id = linalg::identity(r);
    let plus: linalg::RMatrix = (0..r).map(|i| (0..r).map(|j| &id[i][j] + &w[i][j]).collect()).collect();
    let minus: linalg::RMatrix = (0..r).map(|i| (0..r).map(|j| &id[i][j] - &w[i][j]).collect()).collect();
    let det_plus = linalg::det(&plus);
    let det_minus = linalg::det(&minus);
    if r % 2 == 0 {
        // tr_S(a)² = det(1 + w)
        let t = numeric_trace(basis, a, &norm, 1.0);
        if t.im.abs() > 1e-6 {
            return Err(Error::Snap(format!("non-real trace {}", t)));
        }
        return Ok(vec![snap(&det_plus, t.re, false)?]);
    }
    // odd rank: the volume element is central with square (−1)^{r(r+1)/2};
    // tr_{S±}(a)² = vol²^{[a odd]} · Σ_{i even} tr ∧^i(±w) = ± (det(1+w)+det(1−w))/2
    let half = (&det_plus + &det_minus) / int(2);
    let vol_sq_negative = (r * (r + 1) / 2) % 2 == 1;
    let square = if a.is_odd() && vol_sq_negative { -half } else { half };
    let mut out = Vec::new();
    for sign in [1.0, -1.0] {
        let t = numeric_trace(basis, a, &norm, sign);
        let imaginary = square < Rational::zero();
        let (part, other) = if imaginary { (t.im, t.re) } else { (t.re, t.im) };
        if other.abs() > 1e-6 {
            return Err(Error::Snap(format!("trace {} not on the expected axis", t)));
        }
        let abs_square = if imaginary { -square.clone() } else { square.clone() };
        out.push(snap(&abs_square, part, imaginary)?);
    }
    Ok(out)
}
