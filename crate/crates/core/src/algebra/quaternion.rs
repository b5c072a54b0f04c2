use std::ops::{Add, Mul, Neg, Sub};

use super::{quaternion_basis_product, Scalar};

/// `c0 + c1 i_1 + c2 i_2 + c3 i_3`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quaternion<T> {
    pub coeffs: [T; 4],
}

impl<T: Scalar> Quaternion<T> {
    pub fn new(c0: T, c1: T, c2: T, c3: T) -> Self {
        Self { coeffs: [c0, c1, c2, c3] }
    }

    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| T::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// `1, i_1, i_2, i_3` for `k = 0..4`.
    pub fn basis(k: usize) -> Self {
        let mut q = Self::zero();
        q.coeffs[k] = T::one();
        q
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k].clone() * s.clone()) }
    }

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

    pub fn real(&self) -> &T {
        &self.coeffs[0]
    }

    /// `c0² + c1² + c2² + c3²`.
    pub fn norm_sq(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.clone() * c.clone())
    }
}

impl<T: Scalar> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;

    fn mul(self, rhs: &Quaternion<T>) -> Quaternion<T> {
        let mut out = Quaternion::<T>::zero();
        for a in 0..4 {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..4 {
                let p = quaternion_basis_product(a, b);
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

impl<T: Scalar> Mul for Quaternion<T> {
    type Output = Quaternion<T>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Add for Quaternion<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()) }
    }
}

impl<T: Scalar> Sub for Quaternion<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone()) }
    }
}

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|c| -c) }
    }
}
