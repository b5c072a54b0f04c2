//! Exact-arithmetic kernel: quaternions, octonions and their tensor product.
//!
//! Octonion units multiply along seven oriented triples,
//! `e_a e_b = ε_abc e_c − δ_ab e_0`, with `ε` totally antisymmetric and
//! `e_0` a two-sided unit. The quaternion ⊗ octonion tensor algebra is the
//! independent oracle the split-octonion table is checked against.

mod octonion;
mod quaternion;
mod tensor;

use std::ops::{Mul, Neg, Sub};

use num_traits::Num;

pub use octonion::Octonion;
pub use quaternion::Quaternion;
pub use tensor::TensorHO;

/// Coefficient ring for the generic algebras.
pub trait Scalar: Clone + PartialEq + Num + Neg<Output = Self> {}

impl<T: Clone + PartialEq + Num + Neg<Output = T>> Scalar for T {}

/// Oriented octonion triples: `e_a e_b = e_c` for each `[a, b, c]` and its
/// cyclic rotations.
pub const FANO_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [2, 4, 6],
    [3, 4, 7],
    [1, 7, 6],
    [5, 7, 2],
    [5, 3, 6],
];

/// A signed basis element: `sign · basis[index]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: usize,
}

const fn build_octonion_table() -> [[SignedUnit; 8]; 8] {
    let mut t = [[SignedUnit { sign: 0, index: 0 }; 8]; 8];
    let mut a = 0;
    while a < 8 {
        t[0][a] = SignedUnit { sign: 1, index: a };
        t[a][0] = SignedUnit { sign: 1, index: a };
        if a > 0 {
            t[a][a] = SignedUnit { sign: -1, index: 0 };
        }
        a += 1;
    }
    let mut k = 0;
    while k < 7 {
        let [x, y, z] = FANO_TRIPLES[k];
        let cyc = [[x, y, z], [y, z, x], [z, x, y]];
        let mut r = 0;
        while r < 3 {
            let [p, q, s] = cyc[r];
            t[p][q] = SignedUnit { sign: 1, index: s };
            t[q][p] = SignedUnit { sign: -1, index: s };
            r += 1;
        }
        k += 1;
    }
    t
}

const fn build_quaternion_table() -> [[SignedUnit; 4]; 4] {
    let mut t = [[SignedUnit { sign: 0, index: 0 }; 4]; 4];
    let mut a = 0;
    while a < 4 {
        t[0][a] = SignedUnit { sign: 1, index: a };
        t[a][0] = SignedUnit { sign: 1, index: a };
        if a > 0 {
            t[a][a] = SignedUnit { sign: -1, index: 0 };
        }
        a += 1;
    }
    let cyc = [[1, 2, 3], [2, 3, 1], [3, 1, 2]];
    let mut r = 0;
    while r < 3 {
        let [p, q, s] = cyc[r];
        t[p][q] = SignedUnit { sign: 1, index: s };
        t[q][p] = SignedUnit { sign: -1, index: s };
        r += 1;
    }
    t
}

static OCTONION_TABLE: [[SignedUnit; 8]; 8] = build_octonion_table();
static QUATERNION_TABLE: [[SignedUnit; 4]; 4] = build_quaternion_table();

/// `e_a e_b` for basis indices `a, b ∈ 0..8`.
pub fn octonion_basis_product(a: usize, b: usize) -> SignedUnit {
    OCTONION_TABLE[a][b]
}

/// `i_a i_b` with `i_0 = 1`.
pub fn quaternion_basis_product(a: usize, b: usize) -> SignedUnit {
    QUATERNION_TABLE[a][b]
}

/// Structure constant `ε_abc` over imaginary indices 1..=7.
pub fn epsilon(a: usize, b: usize, c: usize) -> i8 {
    if a == 0 || b == 0 || c == 0 || a == b {
        return 0;
    }
    let p = octonion_basis_product(a, b);
    if p.index == c {
        p.sign
    } else {
        0
    }
}

/// `(ab)c − a(bc)`.
pub fn associator<A>(a: &A, b: &A, c: &A) -> A
where
    for<'x> &'x A: Mul<&'x A, Output = A>,
    A: Sub<Output = A>,
{
    let left = &(a * b) * c;
    let right = a * &(b * c);
    left - right
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_is_totally_antisymmetric() {
        for a in 1..8 {
            for b in 1..8 {
                for c in 1..8 {
                    let e = epsilon(a, b, c);
                    assert_eq!(e, -epsilon(b, a, c));
                    assert_eq!(e, -epsilon(a, c, b));
                    assert_eq!(e, epsilon(b, c, a));
                }
            }
        }
    }

    #[test]
    fn each_imaginary_pair_lies_on_exactly_one_triple() {
        for a in 1..8 {
            for b in (a + 1)..8 {
                let n = FANO_TRIPLES
                    .iter()
                    .filter(|t| t.contains(&a) && t.contains(&b))
                    .count();
                assert_eq!(n, 1, "pair ({a},{b})");
            }
        }
    }

    #[test]
    fn listed_orientations() {
        for [a, b, c] in FANO_TRIPLES {
            assert_eq!(epsilon(a, b, c), 1);
        }
        assert_eq!(octonion_basis_product(2, 1), SignedUnit { sign: -1, index: 3 });
    }
}
