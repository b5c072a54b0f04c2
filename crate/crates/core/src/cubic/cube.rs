use std::fmt;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix2::Matrix2;
use crate::scalar::{format_gaussian, parse_gaussian, Gaussian};

/// Projection direction. Axis I beams along the third cube index, II along
/// the second, III along the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjectionAxis {
    I,
    II,
    III,
}

impl ProjectionAxis {
    pub const ALL: [ProjectionAxis; 3] = [ProjectionAxis::I, ProjectionAxis::II, ProjectionAxis::III];

    /// Cube coordinate summed away.
    pub fn beam(self) -> usize {
        match self {
            ProjectionAxis::I => 2,
            ProjectionAxis::II => 1,
            ProjectionAxis::III => 0,
        }
    }

    /// Cube coordinates used as (row, column) of the projection.
    pub fn plane(self) -> (usize, usize) {
        match self {
            ProjectionAxis::I => (0, 1),
            ProjectionAxis::II => (0, 2),
            ProjectionAxis::III => (1, 2),
        }
    }

    pub fn roman(self) -> &'static str {
        match self {
            ProjectionAxis::I => "I",
            ProjectionAxis::II => "II",
            ProjectionAxis::III => "III",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(ProjectionAxis::I),
            "II" => Ok(ProjectionAxis::II),
            "III" => Ok(ProjectionAxis::III),
            other => Err(Error::Parse(format!("unknown projection axis {other:?}"))),
        }
    }
}

impl fmt::Display for ProjectionAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

impl Serialize for ProjectionAxis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.roman())
    }
}

impl<'de> Deserialize<'de> for ProjectionAxis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ProjectionAxis::parse(&s).map_err(D::Error::custom)
    }
}

/// Axis of a 180° turn, numbered 1..=3 after the cube coordinate it fixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TurnAxis {
    First,
    Second,
    Third,
}

impl TurnAxis {
    pub const ALL: [TurnAxis; 3] = [TurnAxis::First, TurnAxis::Second, TurnAxis::Third];

    pub fn coord(self) -> usize {
        match self {
            TurnAxis::First => 0,
            TurnAxis::Second => 1,
            TurnAxis::Third => 2,
        }
    }

    pub fn number(self) -> u8 {
        self.coord() as u8 + 1
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(TurnAxis::First),
            2 => Ok(TurnAxis::Second),
            3 => Ok(TurnAxis::Third),
            _ => Err(Error::InvalidArgument(format!("turn axis {n} not in 1..=3"))),
        }
    }
}

/// 2×2×2 array `entries[x][y][z]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicMatrix {
    pub entries: [[[Gaussian; 2]; 2]; 2],
}

impl CubicMatrix {
    pub fn zero() -> Self {
        Self { entries: std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| Gaussian::zero()))) }
    }

    pub fn from_entries(list: &[([usize; 3], Gaussian)]) -> Self {
        let mut c = Self::zero();
        for ([x, y, z], v) in list {
            c.entries[*x][*y][*z] += v.clone();
        }
        c
    }

    pub fn get(&self, p: [usize; 3]) -> &Gaussian {
        &self.entries[p[0]][p[1]][p[2]]
    }

    fn get_mut(&mut self, p: [usize; 3]) -> &mut Gaussian {
        &mut self.entries[p[0]][p[1]][p[2]]
    }

    pub fn positions() -> impl Iterator<Item = [usize; 3]> {
        (0..8).map(|k| [k >> 2 & 1, k >> 1 & 1, k & 1])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for p in Self::positions() {
            *out.get_mut(p) += other.get(p).clone();
        }
        out
    }

    /// Sums entries along the beam of `axis`.
    pub fn project(&self, axis: ProjectionAxis) -> Matrix2 {
        let (rc, cc) = axis.plane();
        let mut out = Matrix2::zero();
        for p in Self::positions() {
            out.m[p[rc]][p[cc]] += self.get(p).clone();
        }
        out
    }

    /// Flips the two coordinates orthogonal to `axis`.
    pub fn rotate180(&self, axis: TurnAxis) -> Self {
        let mut out = Self::zero();
        for p in Self::positions() {
            let mut q = p;
            for (k, v) in q.iter_mut().enumerate() {
                if k != axis.coord() {
                    *v = 1 - *v;
                }
            }
            *out.get_mut(q) = self.get(p).clone();
        }
        out
    }

    pub fn total(&self) -> Gaussian {
        Self::positions().fold(Gaussian::zero(), |acc, p| acc + self.get(p))
    }

    /// Every axis-parallel line holds at most one nonzero entry.
    pub fn satisfies_beam_condition(&self) -> bool {
        let nz: Vec<[usize; 3]> = Self::positions().filter(|&p| !self.get(p).is_zero()).collect();
        nz.iter().enumerate().all(|(n, p)| {
            nz[..n].iter().all(|q| (0..3).filter(|&k| p[k] != q[k]).count() != 1)
        })
    }

    pub fn to_strings(&self) -> [[[String; 2]; 2]; 2] {
        std::array::from_fn(|x| {
            std::array::from_fn(|y| std::array::from_fn(|z| format_gaussian(&self.entries[x][y][z])))
        })
    }

    pub fn from_strings(s: &[[[String; 2]; 2]; 2]) -> Result<Self> {
        let mut c = Self::zero();
        for p in Self::positions() {
            *c.get_mut(p) = parse_gaussian(&s[p[0]][p[1]][p[2]])?;
        }
        Ok(c)
    }
}

impl Serialize for CubicMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CubicMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = <[[[String; 2]; 2]; 2]>::deserialize(d)?;
        CubicMatrix::from_strings(&s).map_err(D::Error::custom)
    }
}

/// Symmetries of the square acting on a 2×2 matrix by moving entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaneMap {
    Identity,
    RowFlip,
    ColFlip,
    BothFlip,
    Transpose,
    AntiTranspose,
    RotateCw,
    RotateCcw,
}

impl PlaneMap {
    pub const ALL: [PlaneMap; 8] = [
        PlaneMap::Identity,
        PlaneMap::RowFlip,
        PlaneMap::ColFlip,
        PlaneMap::BothFlip,
        PlaneMap::Transpose,
        PlaneMap::AntiTranspose,
        PlaneMap::RotateCw,
        PlaneMap::RotateCcw,
    ];

    /// Entry of the input that lands at `(r, c)`.
    fn source(self, r: usize, c: usize) -> (usize, usize) {
        match self {
            PlaneMap::Identity => (r, c),
            PlaneMap::RowFlip => (1 - r, c),
            PlaneMap::ColFlip => (r, 1 - c),
            PlaneMap::BothFlip => (1 - r, 1 - c),
            PlaneMap::Transpose => (c, r),
            PlaneMap::AntiTranspose => (1 - c, 1 - r),
            PlaneMap::RotateCw => (1 - c, r),
            PlaneMap::RotateCcw => (c, 1 - r),
        }
    }

    pub fn apply(self, m: &Matrix2) -> Matrix2 {
        Matrix2::new(std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let (sr, sc) = self.source(r, c);
                m.m[sr][sc].clone()
            })
        }))
    }

    pub fn inverse(self) -> PlaneMap {
        match self {
            PlaneMap::RotateCw => PlaneMap::RotateCcw,
            PlaneMap::RotateCcw => PlaneMap::RotateCw,
            other => other,
        }
    }

    /// Map a turn about `turn` induces on the `axis` projection.
    pub fn induced(turn: TurnAxis, axis: ProjectionAxis) -> PlaneMap {
        let (rc, cc) = axis.plane();
        match (rc != turn.coord(), cc != turn.coord()) {
            (true, true) => PlaneMap::BothFlip,
            (true, false) => PlaneMap::RowFlip,
            (false, true) => PlaneMap::ColFlip,
            (false, false) => PlaneMap::Identity,
        }
    }
}

/// How a tilde acts on a bare projection, per (turn axis, projection axis).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeRule {
    pub maps: [[PlaneMap; 3]; 3],
}

impl TildeRule {
    /// The maps induced by [`CubicMatrix::rotate180`] under summation.
    pub fn geometric() -> Self {
        Self {
            maps: std::array::from_fn(|t| {
                std::array::from_fn(|a| PlaneMap::induced(TurnAxis::ALL[t], ProjectionAxis::ALL[a]))
            }),
        }
    }

    pub fn map(&self, turn: TurnAxis, axis: ProjectionAxis) -> PlaneMap {
        self.maps[turn.coord()][axis as usize]
    }

    pub fn with(mut self, turn: TurnAxis, axis: ProjectionAxis, map: PlaneMap) -> Self {
        self.maps[turn.coord()][axis as usize] = map;
        self
    }

    pub fn is_geometric(&self) -> bool {
        *self == Self::geometric()
    }
}

impl Default for TildeRule {
    fn default() -> Self {
        Self::geometric()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gauss;
    use crate::split::Unit;

    fn single(p: [usize; 3], u: Unit) -> CubicMatrix {
        CubicMatrix::from_entries(&[(p, u.to_gaussian())])
    }

    #[test]
    fn identity_preimage() {
        let c = CubicMatrix::from_entries(&[([0, 0, 0], gauss(1, 0)), ([1, 1, 0], gauss(1, 0))]);
        assert_eq!(c.project(ProjectionAxis::I), Matrix2::identity());
        assert!(c.satisfies_beam_condition());
    }

    #[test]
    fn zero_cube_projects_to_zero() {
        for a in ProjectionAxis::ALL {
            assert!(CubicMatrix::zero().project(a).is_zero());
        }
    }

    #[test]
    fn rotation_is_an_involution() {
        let c = CubicMatrix::from_entries(&[([0, 1, 0], gauss(2, -1)), ([1, 1, 1], gauss(0, 3))]);
        for t in TurnAxis::ALL {
            assert_eq!(c.rotate180(t).rotate180(t), c);
        }
    }

    #[test]
    fn turn_about_first_axis_on_second_projection() {
        let sigma3_ii = Matrix2::real([[0, -1], [1, 0]]);
        let mapped = TildeRule::geometric()
            .map(TurnAxis::First, ProjectionAxis::II)
            .apply(&sigma3_ii);
        assert_eq!(mapped, Matrix2::real([[-1, 0], [0, 1]]));
    }

    #[test]
    fn projection_of_turned_cube_uses_induced_map() {
        for p in CubicMatrix::positions() {
            for u in Unit::ALL {
                let c = single(p, u);
                for t in TurnAxis::ALL {
                    for a in ProjectionAxis::ALL {
                        let lhs = c.rotate180(t).project(a);
                        let rhs = PlaneMap::induced(t, a).apply(&c.project(a));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn beam_condition() {
        let on_line = CubicMatrix::from_entries(&[([0, 0, 0], gauss(1, 0)), ([0, 0, 1], gauss(1, 0))]);
        assert!(!on_line.satisfies_beam_condition());
        let tetra = CubicMatrix::from_entries(&[
            ([0, 0, 0], gauss(1, 0)),
            ([0, 1, 1], gauss(1, 0)),
            ([1, 0, 1], gauss(1, 0)),
            ([1, 1, 0], gauss(1, 0)),
        ]);
        assert!(tetra.satisfies_beam_condition());
    }

    #[test]
    fn plane_maps_invert() {
        let m = Matrix2::from_ints([[1, 2], [3, 4]], [[0, 1], [0, 0]]);
        for p in PlaneMap::ALL {
            assert_eq!(p.inverse().apply(&p.apply(&m)), m, "{p:?}");
        }
    }

    proptest::proptest! {
        #[test]
        fn grand_total_is_axis_independent(v in proptest::collection::vec(-3i64..4, 16)) {
            let c = CubicMatrix::from_entries(
                &CubicMatrix::positions().enumerate().map(|(k, p)| (p, gauss(v[2 * k], v[2 * k + 1]))).collect::<Vec<_>>(),
            );
            let totals: Vec<Gaussian> = ProjectionAxis::ALL.iter().map(|&a| c.project(a).total()).collect();
            proptest::prop_assert_eq!(&totals[0], &c.total());
            proptest::prop_assert_eq!(&totals[1], &c.total());
            proptest::prop_assert_eq!(&totals[2], &c.total());
        }

        #[test]
        fn projection_and_rotation_are_linear(v in proptest::collection::vec(-3i64..4, 32)) {
            let mk = |o: usize| CubicMatrix::from_entries(
                &CubicMatrix::positions().enumerate().map(|(k, p)| (p, gauss(v[o + 2 * k], v[o + 2 * k + 1]))).collect::<Vec<_>>(),
            );
            let (m, n) = (mk(0), mk(16));
            for a in ProjectionAxis::ALL {
                proptest::prop_assert_eq!(m.add(&n).project(a), &m.project(a) + &n.project(a));
            }
            for t in TurnAxis::ALL {
                proptest::prop_assert_eq!(m.add(&n).rotate180(t), m.rotate180(t).add(&n.rotate180(t)));
            }
        }
    }
}
