//! Kronecker-product gamma families built from sigma projections, and the
//! anticommutator report that measures what they produce.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cubic::{CubicMatrix, ProjectionAxis, SigmaAssignment, SigmaRef, DISTRIBUTION};
use crate::error::{Error, Result};
use crate::matrix2::Matrix2;
use crate::scalar::{format_gaussian, gauss, parse_gaussian, Gaussian};
use crate::split::Unit;

/// n×n matrix over the Gaussian rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<Gaussian>,
}

impl SquareMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, data: vec![Gaussian::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for k in 0..n {
            m.data[k * n + k] = Gaussian::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Gaussian>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix rows must all have length n".into()));
        }
        Ok(Self { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Gaussian {
        &self.data[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<Gaussian>> {
        self.data.chunks(self.n.max(1)).map(<[Gaussian]>::to_vec).collect()
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        Self { n: self.n, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `Some(c)` when the matrix equals `c·I`.
    pub fn scalar_multiple(&self) -> Option<Gaussian> {
        let c = self.get(0, 0).clone();
        (0..self.n)
            .all(|r| (0..self.n).all(|k| *self.get(r, k) == if r == k { c.clone() } else { Gaussian::zero() }))
            .then_some(c)
    }

    /// Exactly one nonzero per row and column, each in `{±1, ±i}`.
    pub fn is_signed_generalized_permutation(&self) -> bool {
        let line_ok = |cells: &mut dyn Iterator<Item = &Gaussian>| {
            let nz: Vec<&Gaussian> = cells.filter(|z| !z.is_zero()).collect();
            nz.len() == 1 && Unit::from_gaussian(nz[0]).is_some()
        };
        (0..self.n).all(|r| line_ok(&mut (0..self.n).map(|c| self.get(r, c))))
            && (0..self.n).all(|c| line_ok(&mut (0..self.n).map(|r| self.get(r, c))))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows().iter().map(|r| r.iter().map(format_gaussian).collect()).collect()
    }

    pub fn from_strings(s: &[Vec<String>]) -> Result<Self> {
        let rows = s.iter().map(|r| r.iter().map(|z| parse_gaussian(z)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        Self::from_rows(rows)
    }
}

impl From<&Matrix2> for SquareMatrix {
    fn from(m: &Matrix2) -> Self {
        Self { n: 2, data: m.m.iter().flatten().cloned().collect() }
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_strings();
        let width = s.iter().flatten().map(|z| z.chars().count()).max().unwrap_or(1);
        for row in &s {
            let cells: Vec<String> = row.iter().map(|z| format!("{z:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SquareMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = Vec::<Vec<String>>::deserialize(deserializer)?;
        SquareMatrix::from_strings(&s).map_err(D::Error::custom)
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = SquareMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * rhs.get(k, c);
                }
            }
        }
        out
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;

    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        SquareMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Neg for SquareMatrix {
    type Output = SquareMatrix;

    fn neg(self) -> SquareMatrix {
        SquareMatrix { n: self.n, data: self.data.into_iter().map(|z| -z).collect() }
    }
}

/// Kronecker product: block `(i, j)` is `a[i][j]·b`.
pub fn kron(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    let n = a.n * b.n;
    let mut out = SquareMatrix::zero(n);
    for (r, c) in (0..n).flat_map(|r| (0..n).map(move |c| (r, c))) {
        out.data[r * n + c] = a.get(r / b.n, c / b.n) * b.get(r % b.n, c % b.n);
    }
    out
}

pub fn anticommutator(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    &(a * b) + &(b * a)
}

/// n×n×n array, indexed like [`CubicMatrix`] (`x`, `y`, `z`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumetricMatrix {
    n: usize,
    data: Vec<Gaussian>,
}

impl VolumetricMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, data: vec![Gaussian::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: [usize; 3]) -> &Gaussian {
        &self.data[(p[0] * self.n + p[1]) * self.n + p[2]]
    }

    fn positions(&self) -> impl Iterator<Item = [usize; 3]> {
        let n = self.n;
        (0..n * n * n).map(move |k| [k / (n * n), k / n % n, k % n])
    }

    /// Same beam convention as [`CubicMatrix::project`].
    pub fn project(&self, axis: ProjectionAxis) -> SquareMatrix {
        let (rc, cc) = axis.plane();
        let mut out = SquareMatrix::zero(self.n);
        for p in self.positions() {
            out.data[p[rc] * self.n + p[cc]] += self.get(p).clone();
        }
        out
    }

    pub fn total(&self) -> Gaussian {
        self.data.iter().fold(Gaussian::zero(), |acc, z| acc + z)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl From<&CubicMatrix> for VolumetricMatrix {
    fn from(c: &CubicMatrix) -> Self {
        Self { n: 2, data: CubicMatrix::positions().map(|p| c.get(p).clone()).collect() }
    }
}

/// Axis-wise Kronecker product: entry `((x₁x₂),(y₁y₂),(z₁z₂)) = a(x₁,y₁,z₁)·b(x₂,y₂,z₂)`.
pub fn kron_cubic(a: &VolumetricMatrix, b: &VolumetricMatrix) -> VolumetricMatrix {
    let n = a.n * b.n;
    let mut out = VolumetricMatrix::zero(n);
    for p in out.positions().collect::<Vec<_>>() {
        let pa = p.map(|k| k / b.n);
        let pb = p.map(|k| k % b.n);
        out.data[(p[0] * n + p[1]) * n + p[2]] = a.get(pa) * b.get(pb);
    }
    out
}

/// Which projection each `Σ` factor contributes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProjectionPolicy {
    /// Axis I everywhere.
    #[default]
    AxisI,
    /// For `Γ_m`, factor `Σ_k` takes the projection that the ternary holding
    /// both `k` and `m` assigns to `k`; axis I when `k ∈ {0, m}` or `m = 0`.
    Distribution,
    /// One axis per factor slot.
    Explicit([ProjectionAxis; 3]),
}

impl ProjectionPolicy {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "axis-I" | "I" => Ok(Self::AxisI),
            "distribution" => Ok(Self::Distribution),
            _ => {
                let axes = s
                    .strip_prefix("explicit:")
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown projection policy {s:?}")))?
                    .split(',')
                    .map(|a| ProjectionAxis::parse(a.trim()))
                    .collect::<Result<Vec<_>>>()?;
                let axes: [ProjectionAxis; 3] = axes
                    .try_into()
                    .map_err(|_| Error::InvalidArgument("explicit policy needs three axes".into()))?;
                Ok(Self::Explicit(axes))
            }
        }
    }

    pub fn axis_for(self, gamma: usize, slot: usize, sigma: usize) -> ProjectionAxis {
        match self {
            Self::AxisI => ProjectionAxis::I,
            Self::Explicit(axes) => axes[slot],
            Self::Distribution => {
                if sigma == 0 || gamma == 0 || sigma == gamma {
                    return ProjectionAxis::I;
                }
                DISTRIBUTION
                    .iter()
                    .find(|t| t.iter().any(|r| r.sigma == gamma) && t.iter().any(|r| r.sigma == sigma))
                    .and_then(|t| t.iter().find(|r| r.sigma == sigma))
                    .map_or(ProjectionAxis::I, |r| r.axis)
            }
        }
    }
}

impl fmt::Display for ProjectionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AxisI => f.write_str("axis-I"),
            Self::Distribution => f.write_str("distribution"),
            Self::Explicit([a, b, c]) => write!(f, "explicit:{a},{b},{c}"),
        }
    }
}

/// Which printed family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaCase {
    /// `Γ_k = −Σ_a ⊗ Σ_b ⊗ Σ_c`, `Γ_0 = 1`.
    One,
    /// `Γ_0 = Σ_0 ⊗ Σ_1 ⊗ Σ_0`, `Γ_k = i Σ_a ⊗ Σ_b ⊗ Σ_c`.
    Two,
}

impl GammaCase {
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            _ => Err(Error::InvalidArgument(format!("gamma case must be 1 or 2, got {n}"))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
        }
    }

    /// Leading scalar and `Σ` indices of `Γ_k`; `None` for the bare identity.
    pub fn factors(self, k: usize) -> Option<(Unit, [usize; 3])> {
        const CASE1: [[usize; 3]; 7] = [[1, 1, 2], [1, 2, 2], [1, 3, 2], [2, 4, 2], [3, 5, 2], [2, 6, 2], [3, 7, 2]];
        const CASE2: [[usize; 3]; 7] = [[1, 2, 1], [1, 2, 2], [1, 2, 3], [2, 2, 4], [3, 2, 5], [2, 2, 6], [3, 2, 7]];
        match (self, k) {
            (Self::One, 0) => None,
            (Self::One, k) => Some((Unit::MinusOne, CASE1[k - 1])),
            (Self::Two, 0) => Some((Unit::One, [0, 1, 0])),
            (Self::Two, k) => Some((Unit::I, CASE2[k - 1])),
        }
    }
}

impl Serialize for GammaCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

impl<'de> Deserialize<'de> for GammaCase {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        GammaCase::from_number(u8::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gamma {
    pub index: usize,
    pub present: bool,
    /// e.g. `-Σ1^I ⊗ Σ1^I ⊗ Σ2^I`; `1` for the bare identity.
    pub formula: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matrix: Option<SquareMatrix>,
    /// Projections that were unavailable.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub missing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSet {
    pub case: GammaCase,
    pub policy: ProjectionPolicy,
    pub gammas: Vec<Gamma>,
}

impl GammaSet {
    pub fn get(&self, k: usize) -> Option<&SquareMatrix> {
        self.gammas.get(k).and_then(|g| g.matrix.as_ref())
    }

    pub fn present(&self) -> Vec<usize> {
        self.gammas.iter().filter(|g| g.present).map(|g| g.index).collect()
    }

    /// Keeps only the listed indices (others become absent).
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut out = self.clone();
        for g in &mut out.gammas {
            if !keep.contains(&g.index) {
                g.present = false;
                g.matrix = None;
            }
        }
        out
    }
}

fn build(case: GammaCase, policy: ProjectionPolicy, a: &SigmaAssignment) -> GammaSet {
    let gammas = (0..8)
        .map(|k| match case.factors(k) {
            None => Gamma { index: k, present: true, formula: "1".into(), matrix: Some(SquareMatrix::identity(8)), missing: vec![] },
            Some((coeff, idx)) => {
                let refs: Vec<SigmaRef> =
                    idx.iter().enumerate().map(|(slot, &s)| SigmaRef::new(s, policy.axis_for(k, slot, s))).collect();
                let body = refs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ⊗ ");
                let formula = match coeff {
                    Unit::One => body,
                    Unit::MinusOne => format!("-{body}"),
                    Unit::I => format!("i{body}"),
                    Unit::MinusI => format!("-i{body}"),
                };
                let projections: Vec<Option<Matrix2>> = refs.iter().map(|&r| a.projection(r)).collect();
                let mut missing: Vec<String> = Vec::new();
                for (r, p) in refs.iter().zip(&projections) {
                    if p.is_none() && !missing.contains(&r.to_string()) {
                        missing.push(r.to_string());
                    }
                }
                let matrix = missing.is_empty().then(|| {
                    let m: Vec<SquareMatrix> = projections.iter().flatten().map(SquareMatrix::from).collect();
                    kron(&kron(&m[0], &m[1]), &m[2]).scale(&coeff.to_gaussian())
                });
                Gamma { index: k, present: matrix.is_some(), formula, matrix, missing }
            }
        })
        .collect();
    GammaSet { case, policy, gammas }
}

/// The first family; gammas whose projections are missing are marked absent.
pub fn build_case1(policy: ProjectionPolicy, a: &SigmaAssignment) -> GammaSet {
    build(GammaCase::One, policy, a)
}

/// The second family; gammas whose projections are missing are marked absent.
pub fn build_case2(policy: ProjectionPolicy, a: &SigmaAssignment) -> GammaSet {
    build(GammaCase::Two, policy, a)
}

pub fn build_case(case: GammaCase, policy: ProjectionPolicy, a: &SigmaAssignment) -> GammaSet {
    build(case, policy, a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub a: usize,
    pub b: usize,
    pub anticommutator: SquareMatrix,
    pub is_zero: bool,
    /// `c` when the anticommutator is `c·I`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scalar: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareReport {
    pub index: usize,
    /// `c` when `Γ² = c·I`.
    pub scalar: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub index: usize,
    pub sign: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordReport {
    pub pairs: Vec<PairReport>,
    pub squares: Vec<SquareReport>,
    /// Largest index set with `Γ² = ±I` and pairwise vanishing anticommutators.
    pub signature: Vec<SignatureEntry>,
}

impl CliffordReport {
    pub fn signature_string(&self) -> String {
        let s: Vec<&str> = self.signature.iter().map(|e| e.sign.as_str()).collect();
        format!("({})", s.join(","))
    }

    pub fn pair(&self, a: usize, b: usize) -> Option<&PairReport> {
        let (a, b) = (a.min(b), a.max(b));
        self.pairs.iter().find(|p| p.a == a && p.b == b)
    }
}

pub fn clifford_report(g: &GammaSet) -> Result<CliffordReport> {
    let present: Vec<(usize, &SquareMatrix)> =
        g.gammas.iter().filter_map(|x| x.matrix.as_ref().map(|m| (x.index, m))).collect();
    if present.len() < 2 {
        return Err(Error::TooFewGammas(present.len()));
    }
    let squares: Vec<(usize, Option<Gaussian>)> =
        present.iter().map(|&(k, m)| (k, (m * m).scalar_multiple())).collect();
    let mut pairs = Vec::new();
    for (n, &(a, ma)) in present.iter().enumerate() {
        for &(b, mb) in &present[n + 1..] {
            let ac = anticommutator(ma, mb);
            let scalar = ac.scalar_multiple().map(|c| format_gaussian(&c));
            pairs.push(PairReport { a, b, is_zero: ac.is_zero(), anticommutator: ac, scalar });
        }
    }
    // Largest index set with Γ² = ±I and pairwise vanishing anticommutators;
    // ties go to the lexicographically smallest set.
    let signs: Vec<Option<&str>> = squares
        .iter()
        .map(|(_, sq)| match sq {
            Some(c) if *c == gauss(1, 0) => Some("+"),
            Some(c) if *c == gauss(-1, 0) => Some("-"),
            _ => None,
        })
        .collect();
    let zero_pair = |i: usize, j: usize| {
        let (a, b) = (squares[i].0, squares[j].0);
        pairs.iter().any(|p| p.a == a.min(b) && p.b == a.max(b) && p.is_zero)
    };
    let n = squares.len();
    let mut best: Vec<usize> = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).collect();
        let valid = set.iter().all(|&k| signs[k].is_some())
            && set.iter().enumerate().all(|(x, &i)| set[x + 1..].iter().all(|&j| zero_pair(i, j)));
        if valid && (set.len() > best.len() || (set.len() == best.len() && set < best)) {
            best = set;
        }
    }
    let signature = best
        .into_iter()
        .map(|k| SignatureEntry { index: squares[k].0, sign: signs[k].unwrap_or_default().into() })
        .collect();
    let squares =
        squares.into_iter().map(|(index, c)| SquareReport { index, scalar: c.map(|c| format_gaussian(&c)) }).collect();
    Ok(CliffordReport { pairs, squares, signature })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::{lift_to_cubes, reconstruct, TildeRule};
    use std::collections::BTreeSet;

    fn pauli(k: usize) -> SquareMatrix {
        SquareMatrix::from(&Matrix2::pauli(k))
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&pauli(0), &pauli(0)), SquareMatrix::identity(4));
        let d = kron(&pauli(3), &pauli(0));
        let expected: Vec<i64> = vec![1, 1, -1, -1];
        for r in 0..4 {
            for c in 0..4 {
                let want = if r == c { gauss(expected[r], 0) } else { Gaussian::zero() };
                assert_eq!(*d.get(r, c), want);
            }
        }
    }

    #[test]
    fn kron_associative_and_mixed_product_on_paulis() {
        for (a, b, c, d) in (0..4).flat_map(|a| (0..4).flat_map(move |b| (0..4).map(move |c| (a, b, c, (a + b + c) % 4)))) {
            let (a, b, c, d) = (pauli(a), pauli(b), pauli(c), pauli(d));
            assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
            assert_eq!(&kron(&a, &b) * &kron(&c, &d), kron(&(&a * &c), &(&b * &d)));
        }
    }

    #[test]
    fn case1_identity_and_first_gamma() {
        let g = build_case1(ProjectionPolicy::AxisI, &SigmaAssignment::pauli_anchors());
        assert_eq!(g.get(0), Some(&SquareMatrix::identity(8)));
        let g1 = g.get(1).unwrap();
        assert_eq!(*g1, -kron(&kron(&pauli(1), &pauli(1)), &pauli(2)));
        assert_eq!(&(g1 * g1), &SquareMatrix::identity(8));
        assert_eq!(g.present(), vec![0, 1, 2, 3]);
        assert_eq!(g.gammas[4].missing, vec!["Σ4^I".to_string()]);
    }

    #[test]
    fn case2_first_four_have_minkowski_signature() {
        let g = build_case2(ProjectionPolicy::AxisI, &SigmaAssignment::pauli_anchors());
        let r = clifford_report(&g.restrict(&[0, 1, 2, 3])).unwrap();
        assert_eq!(r.signature_string(), "(+,-,-,-)");
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(r.pair(a, b).unwrap().is_zero);
            }
        }
        let eye = SquareMatrix::identity(8);
        assert_eq!(g.get(0).map(|m| m * m), Some(eye.clone()));
        for l in 1..4 {
            assert_eq!(g.get(l).map(|m| m * m), Some(-eye.clone()));
        }
    }

    #[test]
    fn equal_gammas_report_twice_the_square() {
        let mut g = build_case2(ProjectionPolicy::AxisI, &SigmaAssignment::pauli_anchors());
        g.gammas[1].matrix = g.gammas[0].matrix.clone();
        let r = clifford_report(&g.restrict(&[0, 1])).unwrap();
        assert_eq!(r.signature.len(), 1);
        let p = r.pair(0, 1).unwrap();
        assert!(!p.is_zero);
        assert_eq!(p.scalar.as_deref(), Some("2"));
    }

    #[test]
    fn case1_signature_prefers_the_larger_anticommuting_set() {
        let g = build_case1(ProjectionPolicy::AxisI, &SigmaAssignment::pauli_anchors());
        let r = clifford_report(&g).unwrap();
        assert_eq!(r.signature.iter().map(|e| e.index).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(r.signature_string(), "(+,+,+)");
    }

    #[test]
    fn lone_gamma_is_an_error() {
        let g = build_case1(ProjectionPolicy::AxisI, &SigmaAssignment::pauli_anchors()).restrict(&[0]);
        assert!(matches!(clifford_report(&g), Err(Error::TooFewGammas(1))));
    }

    #[test]
    fn built_gammas_are_signed_generalized_permutations() {
        for g in [
            build_case1(ProjectionPolicy::AxisI, &SigmaAssignment::pauli_anchors()),
            build_case2(ProjectionPolicy::AxisI, &SigmaAssignment::pauli_anchors()),
        ] {
            for k in g.present() {
                assert!(g.get(k).unwrap().is_signed_generalized_permutation());
            }
        }
    }

    #[test]
    fn distribution_policy_picks_shared_ternary() {
        let p = ProjectionPolicy::Distribution;
        assert_eq!(p.axis_for(4, 0, 2), ProjectionAxis::II);
        assert_eq!(p.axis_for(4, 1, 4), ProjectionAxis::I);
        assert_eq!(p.axis_for(5, 0, 3), ProjectionAxis::III);
        assert_eq!(ProjectionPolicy::parse("explicit:I,II,III").unwrap().to_string(), "explicit:I,II,III");
    }

    #[test]
    fn cubic_kron_projects_to_kron_of_projections() {
        // Solver outputs lifted where all three projections are known, plus
        // every single-entry cube and a few mixed ones.
        let anchors = SigmaAssignment::pauli_anchors();
        let mut cubes: Vec<CubicMatrix> = Vec::new();
        for scope in [5u8, 6] {
            let r = reconstruct(&anchors, &BTreeSet::from([scope]), &TildeRule::geometric()).unwrap();
            for sol in &r.solutions {
                for lift in lift_to_cubes(sol, None).per_sigma {
                    cubes.extend(lift.cubes);
                }
            }
        }
        for (n, p) in CubicMatrix::positions().enumerate() {
            cubes.push(CubicMatrix::from_entries(&[(p, gauss(1, 0))]));
            let q = [1 - p[0], p[1], 1 - p[2]];
            cubes.push(CubicMatrix::from_entries(&[(p, gauss(0, 1)), (q, gauss(n as i64 - 3, 2))]));
        }
        assert!(!cubes.is_empty());
        for a in &cubes {
            for b in cubes.iter().take(6) {
                let (va, vb) = (VolumetricMatrix::from(a), VolumetricMatrix::from(b));
                let k = kron_cubic(&va, &vb);
                assert_eq!(k.total(), va.total() * vb.total());
                for axis in ProjectionAxis::ALL {
                    assert_eq!(k.project(axis), kron(&va.project(axis), &vb.project(axis)));
                }
            }
        }
        let z = VolumetricMatrix::from(&CubicMatrix::zero());
        assert!(kron_cubic(&z, &VolumetricMatrix::from(&cubes[0])).is_zero());
    }
}
