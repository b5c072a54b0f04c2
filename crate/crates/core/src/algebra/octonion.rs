use std::ops::{Add, Mul, Neg, Sub};

use super::{octonion_basis_product, Scalar};

/// Real octonion over `e_0..e_7`.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<T> {
    pub coeffs: [T; 8],
}

impl<T: Scalar> Octonion<T> {
    pub fn new(coeffs: [T; 8]) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| T::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(k: usize) -> Self {
        let mut o = Self::zero();
        o.coeffs[k] = T::one();
        o
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k].clone() * s.clone()) }
    }

    /// Negates the coefficients of `e_1..e_7`.
    pub fn conj(&self) -> Self {
        Self {
            coeffs: std::array::from_fn(|k| {
                if k == 0 {
                    self.coeffs[0].clone()
                } else {
                    -self.coeffs[k].clone()
                }
            }),
        }
    }

    /// Squared norm, the `e_0` coefficient of `a a*`.
    pub fn norm_sq(&self) -> T {
        let p = self * &self.conj();
        p.coeffs[0].clone()
    }
}

impl<T: Scalar> Mul for &Octonion<T> {
    type Output = Octonion<T>;

    fn mul(self, rhs: &Octonion<T>) -> Octonion<T> {
        let mut out = Octonion::<T>::zero();
        for a in 0..8 {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if rhs.coeffs[b].is_zero() {
                    continue;
                }
                let p = octonion_basis_product(a, b);
                let term = self.coeffs[a].clone() * rhs.coeffs[b].clone();
                let slot = &mut out.coeffs[p.index];
                *slot = if p.sign > 0 {
                    slot.clone() + term
                } else {
                    slot.clone() - term
                };
            }
        }
        out
    }
}

impl<T: Scalar> Mul for Octonion<T> {
    type Output = Octonion<T>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Add for Octonion<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()) }
    }
}

impl<T: Scalar> Sub for Octonion<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone()) }
    }
}

impl<T: Scalar> Neg for Octonion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|c| -c) }
    }
}
