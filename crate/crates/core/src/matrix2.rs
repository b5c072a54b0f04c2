use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{format_gaussian, gauss, parse_gaussian, Gaussian};
use crate::split::Unit;

/// 2×2 matrix over the Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub m: [[Gaussian; 2]; 2],
}

impl Matrix2 {
    pub fn new(m: [[Gaussian; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn from_ints(re: [[i64; 2]; 2], im: [[i64; 2]; 2]) -> Self {
        Self { m: std::array::from_fn(|r| std::array::from_fn(|c| gauss(re[r][c], im[r][c]))) }
    }

    pub fn real(re: [[i64; 2]; 2]) -> Self {
        Self::from_ints(re, [[0; 2]; 2])
    }

    pub fn zero() -> Self {
        Self::real([[0, 0], [0, 0]])
    }

    pub fn identity() -> Self {
        Self::real([[1, 0], [0, 1]])
    }

    /// `σ_0..σ_3`.
    pub fn pauli(k: usize) -> Self {
        match k {
            0 => Self::identity(),
            1 => Self::real([[0, 1], [1, 0]]),
            2 => Self::from_ints([[0, 0], [0, 0]], [[0, -1], [1, 0]]),
            3 => Self::real([[1, 0], [0, -1]]),
            _ => panic!("no Pauli matrix σ_{k}"),
        }
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        Self { m: std::array::from_fn(|r| std::array::from_fn(|c| &self.m[r][c] * s)) }
    }

    pub fn scale_unit(&self, u: Unit) -> Self {
        self.scale(&u.to_gaussian())
    }

    pub fn transpose(&self) -> Self {
        Self { m: std::array::from_fn(|r| std::array::from_fn(|c| self.m[c][r].clone())) }
    }

    pub fn det(&self) -> Gaussian {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let inv = Gaussian::one() / d;
        let adj = Self::new([
            [self.m[1][1].clone(), -self.m[0][1].clone()],
            [-self.m[1][0].clone(), self.m[0][0].clone()],
        ]);
        Some(adj.scale(&inv))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Zero::is_zero)
    }

    /// Sum of all four entries.
    pub fn total(&self) -> Gaussian {
        self.m.iter().flatten().fold(Gaussian::zero(), |acc, z| acc + z)
    }

    /// Exactly one nonzero per row and column, each in `{±1, ±i}`.
    pub fn is_signed_generalized_permutation(&self) -> bool {
        let unit = |z: &Gaussian| Unit::from_gaussian(z).is_some();
        let diag = unit(&self.m[0][0]) && unit(&self.m[1][1]) && self.m[0][1].is_zero() && self.m[1][0].is_zero();
        let anti = unit(&self.m[0][1]) && unit(&self.m[1][0]) && self.m[0][0].is_zero() && self.m[1][1].is_zero();
        diag || anti
    }

    pub fn to_strings(&self) -> [[String; 2]; 2] {
        std::array::from_fn(|r| std::array::from_fn(|c| format_gaussian(&self.m[r][c])))
    }

    pub fn from_strings(s: &[[String; 2]; 2]) -> crate::Result<Self> {
        let mut out = Self::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.m[r][c] = parse_gaussian(&s[r][c])?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_strings();
        write!(f, "[[{}, {}], [{}, {}]]", s[0][0], s[0][1], s[1][0], s[1][1])
    }
}

impl Serialize for Matrix2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = <[[String; 2]; 2]>::deserialize(deserializer)?;
        Matrix2::from_strings(&s).map_err(D::Error::custom)
    }
}

impl Mul for &Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: &Matrix2) -> Matrix2 {
        Matrix2 {
            m: std::array::from_fn(|r| {
                std::array::from_fn(|c| &self.m[r][0] * &rhs.m[0][c] + &self.m[r][1] * &rhs.m[1][c])
            }),
        }
    }
}

impl Add for &Matrix2 {
    type Output = Matrix2;

    fn add(self, rhs: &Matrix2) -> Matrix2 {
        Matrix2 { m: std::array::from_fn(|r| std::array::from_fn(|c| &self.m[r][c] + &rhs.m[r][c])) }
    }
}

impl Sub for &Matrix2 {
    type Output = Matrix2;

    fn sub(self, rhs: &Matrix2) -> Matrix2 {
        Matrix2 { m: std::array::from_fn(|r| std::array::from_fn(|c| &self.m[r][c] - &rhs.m[r][c])) }
    }
}

impl Neg for Matrix2 {
    type Output = Matrix2;

    fn neg(self) -> Matrix2 {
        Matrix2 { m: self.m.map(|row| row.map(|z| -z)) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::imag_unit;

    #[test]
    fn pauli_algebra() {
        let s = Matrix2::pauli;
        let i = imag_unit();
        assert_eq!(&s(1) * &s(2), s(3).scale(&i));
        assert_eq!(&s(2) * &s(3), s(1).scale(&i));
        assert_eq!(&s(3) * &s(1), s(2).scale(&i));
        for k in 0..4 {
            assert_eq!(&s(k) * &s(k), Matrix2::identity());
            assert!(s(k).is_signed_generalized_permutation());
        }
    }

    #[test]
    fn inverse() {
        let a = Matrix2::from_ints([[0, 2], [1, 0]], [[0, 0], [0, 1]]);
        assert_eq!(&a * &a.inverse().unwrap(), Matrix2::identity());
        assert!(Matrix2::real([[1, 1], [1, 1]]).inverse().is_none());
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix2::pauli(2);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["0","-i"],["i","0"]]"#);
        assert_eq!(serde_json::from_str::<Matrix2>(&s).unwrap(), m);
    }
}
