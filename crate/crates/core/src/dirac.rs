//! Plane-wave phase `D = RE(P R*)` in the split algebra and the
//! quaternion-valued exponential solution form. Floating point lives here only.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::Quaternion;
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::split::{table, SplitOctonion};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum {
    pub e: f64,
    pub p: [f64; 3],
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FourInterval {
    pub t: f64,
    pub r: [f64; 3],
}

impl FourMomentum {
    pub fn new(e: f64, p: [f64; 3]) -> Self {
        Self { e, p }
    }

    fn components(&self) -> [f64; 4] {
        [self.e, self.p[0], self.p[1], self.p[2]]
    }
}

impl FourInterval {
    pub fn new(t: f64, r: [f64; 3]) -> Self {
        Self { t, r }
    }

    fn components(&self) -> [f64; 4] {
        [self.t, self.r[0], self.r[1], self.r[2]]
    }
}

/// Amplitudes `a0..a3`, phases `S1..S3`, and `ħ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionParams {
    pub a: [f64; 4],
    pub s: [f64; 3],
    pub hbar: f64,
}

impl Default for SolutionParams {
    fn default() -> Self {
        Self { a: [0.0; 4], s: [0.0; 3], hbar: 1.0 }
    }
}

impl SolutionParams {
    pub fn new(a: [f64; 4], s: [f64; 3]) -> Self {
        Self { a, s, ..Self::default() }
    }

    pub fn with_hbar(mut self, hbar: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidArgument(format!("hbar must be positive, got {hbar}")));
        }
        self.hbar = hbar;
        Ok(self)
    }
}

/// `w + x i + y j + z k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuaternionValue {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl QuaternionValue {
    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

impl From<Quaternion<f64>> for QuaternionValue {
    fn from(q: Quaternion<f64>) -> Self {
        let [w, x, y, z] = q.coeffs;
        Self { w, x, y, z }
    }
}

impl From<QuaternionValue> for Quaternion<f64> {
    fn from(q: QuaternionValue) -> Self {
        Quaternion::new(q.w, q.x, q.y, q.z)
    }
}

/// `RE(P R*)` with `P = E + Σ p_k u_k`, `R = t + Σ r_k u_k`, expanded
/// term by term over the split multiplication table.
pub fn phase_d(p: &FourMomentum, r: &FourInterval) -> f64 {
    let t = table();
    let (pc, rc) = (p.components(), r.components());
    let mut d = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            let prod = t[a][b];
            if prod.index != 0 {
                continue;
            }
            // R* negates u_1..u_3; only the real part of the coefficient counts.
            let conj = if b == 0 { 1.0 } else { -1.0 };
            let coeff = prod.coeff.to_gaussian().re.to_f64().unwrap_or(0.0);
            d += pc[a] * rc[b] * conj * coeff;
        }
    }
    d
}

/// Exact `RE(P R*)` through [`SplitOctonion`] arithmetic.
pub fn phase_d_exact(p: &[Rational; 4], r: &[Rational; 4]) -> Rational {
    let embed = |v: &[Rational; 4]| {
        SplitOctonion::from_real(std::array::from_fn(|k| v.get(k).cloned().unwrap_or_default()))
    };
    (&embed(p) * &embed(r).conj()).coeffs[0].re.clone()
}

/// `e^{a0}(cos S + i sin S)`.
pub fn plane_wave(a0: f64, s: f64) -> Complex64 {
    Complex64::from_polar(a0.exp(), s)
}

/// `S = −D/ħ`.
pub fn phase_from(p: &FourMomentum, r: &FourInterval, hbar: f64) -> f64 {
    -phase_d(p, r) / hbar
}

/// `exp(a0 + i a1 S1 + j a2 S2 + k a3 S3)` in closed form.
pub fn quaternion_solution(params: &SolutionParams) -> QuaternionValue {
    let [a0, a1, a2, a3] = params.a;
    let v = [a1 * params.s[0], a2 * params.s[1], a3 * params.s[2]];
    let theta = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let scale = a0.exp();
    if theta == 0.0 {
        return QuaternionValue { w: scale, x: 0.0, y: 0.0, z: 0.0 };
    }
    let k = scale * theta.sin() / theta;
    QuaternionValue { w: scale * theta.cos(), x: k * v[0], y: k * v[1], z: k * v[2] }
}

/// Truncated power series `Σ_{n<terms} q^n / n!`.
pub fn quaternion_exp_series(q: &Quaternion<f64>, terms: usize) -> Quaternion<f64> {
    let mut sum = Quaternion::<f64>::zero();
    let mut term = Quaternion::<f64>::one();
    for n in 0..terms {
        sum = sum + term.clone();
        term = (&term * q).scale(&(1.0 / (n + 1) as f64));
    }
    sum
}

/// With `a2 = a3 = 0` the solution lies in the complex plane `{1, i}`.
pub fn reduce_to_complex(params: &SolutionParams) -> Result<Complex64> {
    if params.a[2] != 0.0 || params.a[3] != 0.0 {
        return Err(Error::NotReducible);
    }
    let q = quaternion_solution(params);
    Ok(Complex64::new(q.w, q.x))
}
