//! Small Gaussian-integer matrices for the exhaustive searches.

use num_traits::ToPrimitive;

use crate::matrix2::Matrix2;
use crate::scalar::{gauss, Gaussian};
use crate::split::Unit;

use super::cube::PlaneMap;

pub(crate) type GInt = (i64, i64);

pub(crate) fn gmul(a: GInt, b: GInt) -> GInt {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub(crate) fn gadd(a: GInt, b: GInt) -> GInt {
    (a.0 + b.0, a.1 + b.1)
}

pub(crate) fn unit_gint(u: Unit) -> GInt {
    match u {
        Unit::One => (1, 0),
        Unit::MinusOne => (-1, 0),
        Unit::I => (0, 1),
        Unit::MinusI => (0, -1),
    }
}

pub(crate) fn to_gint(z: &Gaussian) -> Option<GInt> {
    if !z.re.is_integer() || !z.im.is_integer() {
        return None;
    }
    Some((z.re.to_integer().to_i64()?, z.im.to_integer().to_i64()?))
}

pub(crate) fn from_gint(z: GInt) -> Gaussian {
    gauss(z.0, z.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct GMat(pub [[GInt; 2]; 2]);

impl GMat {
    pub fn from_matrix(m: &Matrix2) -> Option<Self> {
        let mut out = [[(0, 0); 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = to_gint(&m.m[r][c])?;
            }
        }
        Some(GMat(out))
    }

    pub fn to_matrix(self) -> Matrix2 {
        Matrix2::new(self.0.map(|row| row.map(from_gint)))
    }

    pub fn mul(&self, o: &GMat) -> GMat {
        let a = &self.0;
        let b = &o.0;
        GMat(std::array::from_fn(|r| {
            std::array::from_fn(|c| gadd(gmul(a[r][0], b[0][c]), gmul(a[r][1], b[1][c])))
        }))
    }

    pub fn scale(&self, s: GInt) -> GMat {
        GMat(self.0.map(|row| row.map(|z| gmul(z, s))))
    }

    pub fn map(&self, p: PlaneMap) -> GMat {
        if p == PlaneMap::Identity {
            return *self;
        }
        let m = self.to_matrix();
        GMat::from_matrix(&p.apply(&m)).expect("plane maps permute entries")
    }
}

/// The 32 signed generalized permutation matrices over `{±1, ±i}`, ordered
/// by (pattern: diagonal before anti-diagonal, first phase, second phase).
pub(crate) fn candidates() -> Vec<GMat> {
    let mut out = Vec::with_capacity(32);
    for anti in [false, true] {
        for a in Unit::ALL {
            for b in Unit::ALL {
                let (a, b) = (unit_gint(a), unit_gint(b));
                let z = (0, 0);
                out.push(if anti { GMat([[z, a], [b, z]]) } else { GMat([[a, z], [z, b]]) });
            }
        }
    }
    out
}
