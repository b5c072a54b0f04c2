use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{octonion_basis_product, quaternion_basis_product, Quaternion};
use crate::scalar::Rational;

/// Element of quaternion ⊗ octonion: coefficients over `i_q ⊗ e_b`,
/// `q ∈ 0..4` (with `i_0 = 1`), `b ∈ 0..8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorHO {
    pub coeffs: [[Rational; 8]; 4],
}

impl TensorHO {
    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())) }
    }

    pub fn one() -> Self {
        Self::basis(0, 0)
    }

    pub fn basis(q: usize, b: usize) -> Self {
        let mut t = Self::zero();
        t.coeffs[q][b] = Rational::one();
        t
    }

    /// `q ⊗ e_0`.
    pub fn from_quaternion(q: &Quaternion<Rational>) -> Self {
        let mut t = Self::zero();
        for k in 0..4 {
            t.coeffs[k][0] = q.coeffs[k].clone();
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { coeffs: self.coeffs.clone().map(|row| row.map(|c| c * s)) }
    }

    /// Factorwise conjugate: `(i_q ⊗ e_b)* = i_q* ⊗ e_b*`.
    pub fn conj(&self) -> Self {
        let mut t = self.clone();
        for q in 0..4 {
            for b in 0..8 {
                if (q > 0) != (b > 0) {
                    t.coeffs[q][b] = -t.coeffs[q][b].clone();
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    /// Nonzero terms as `(coefficient, q, b)` in index order.
    pub fn terms(&self) -> Vec<(Rational, usize, usize)> {
        let mut out = Vec::new();
        for q in 0..4 {
            for b in 0..8 {
                if !self.coeffs[q][b].is_zero() {
                    out.push((self.coeffs[q][b].clone(), q, b));
                }
            }
        }
        out
    }
}

impl Mul for &TensorHO {
    type Output = TensorHO;

    fn mul(self, rhs: &TensorHO) -> TensorHO {
        let mut out = TensorHO::zero();
        for (ca, qa, xa) in self.terms() {
            for (cb, qb, xb) in rhs.terms() {
                let pq = quaternion_basis_product(qa, qb);
                let po = octonion_basis_product(xa, xb);
                let term = &ca * &cb;
                let slot = &mut out.coeffs[pq.index][po.index];
                if pq.sign * po.sign > 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
        }
        out
    }
}

impl Mul for TensorHO {
    type Output = TensorHO;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Add for TensorHO {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for q in 0..4 {
            for b in 0..8 {
                self.coeffs[q][b] += rhs.coeffs[q][b].clone();
            }
        }
        self
    }
}

impl Sub for TensorHO {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for TensorHO {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|row| row.map(|c| -c)) }
    }
}
