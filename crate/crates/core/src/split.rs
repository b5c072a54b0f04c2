//! Split octonions `u_0..u_7` with Gaussian-rational coefficients.
//!
//! The multiplication table is the printed one: 21 products `u_a u_b`
//! (`a < b`), `u_a² = u_0`, the unit row, and reverse orders filled in from
//! the anticommutation markings. The embedding `u_k = i_q ⊗ e_k` into
//! [`TensorHO`] is used to check every entry independently.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{associator, quaternion_basis_product, TensorHO, FANO_TRIPLES};
use crate::error::{Error, Result};
use crate::scalar::{format_gaussian, gauss, Gaussian, Rational};

/// One of `+1, −1, +i, −i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Unit {
    #[serde(rename = "+1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "+i")]
    I,
    #[serde(rename = "-i")]
    MinusI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::MinusOne, Unit::I, Unit::MinusI];

    pub fn to_gaussian(self) -> Gaussian {
        match self {
            Unit::One => gauss(1, 0),
            Unit::MinusOne => gauss(-1, 0),
            Unit::I => gauss(0, 1),
            Unit::MinusI => gauss(0, -1),
        }
    }

    pub fn from_gaussian(z: &Gaussian) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| &u.to_gaussian() == z)
    }

    pub fn is_imaginary(self) -> bool {
        matches!(self, Unit::I | Unit::MinusI)
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Unit::MinusOne | Unit::MinusI)
    }

    pub fn neg(self) -> Unit {
        match self {
            Unit::One => Unit::MinusOne,
            Unit::MinusOne => Unit::One,
            Unit::I => Unit::MinusI,
            Unit::MinusI => Unit::I,
        }
    }

    pub fn mul(self, other: Unit) -> Unit {
        Unit::from_gaussian(&(self.to_gaussian() * other.to_gaussian())).expect("units are closed")
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Unit::One => "+1",
            Unit::MinusOne => "-1",
            Unit::I => "+i",
            Unit::MinusI => "-i",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `u_a u_b = coeff · u_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisProduct {
    pub coeff: Unit,
    pub index: usize,
}

impl BasisProduct {
    pub const fn new(coeff: Unit, index: usize) -> Self {
        Self { coeff, index }
    }
}

impl fmt::Display for BasisProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.coeff {
            Unit::One => "",
            Unit::MinusOne => "-",
            Unit::I => "i·",
            Unit::MinusI => "-i·",
        };
        write!(f, "{c}u{}", self.index)
    }
}

/// A printed table entry `u_a u_b = coeff · u_k`, with its underline marking.
#[derive(Clone, Copy, Debug)]
pub struct PrintedEntry {
    pub left: usize,
    pub right: usize,
    pub product: BasisProduct,
    pub anticommutative: bool,
}

const fn entry(left: usize, right: usize, coeff: Unit, index: usize, anti: bool) -> PrintedEntry {
    PrintedEntry { left, right, product: BasisProduct::new(coeff, index), anticommutative: anti }
}

/// The 21 printed products with `left < right`.
pub const PRINTED_TABLE: [PrintedEntry; 21] = [
    entry(1, 2, Unit::I, 3, true),
    entry(1, 3, Unit::MinusI, 2, true),
    entry(1, 4, Unit::One, 5, false),
    entry(1, 5, Unit::One, 4, false),
    entry(1, 6, Unit::MinusOne, 7, false),
    entry(1, 7, Unit::MinusOne, 6, false),
    entry(2, 3, Unit::I, 1, true),
    entry(2, 4, Unit::I, 6, false),
    entry(2, 5, Unit::I, 7, false),
    entry(2, 6, Unit::MinusI, 4, false),
    entry(2, 7, Unit::I, 5, false),
    entry(3, 4, Unit::One, 7, false),
    entry(3, 5, Unit::One, 6, false),
    entry(3, 6, Unit::One, 5, false),
    entry(3, 7, Unit::One, 4, false),
    entry(4, 5, Unit::One, 1, false),
    entry(4, 6, Unit::I, 2, true),
    entry(4, 7, Unit::One, 3, false),
    entry(5, 6, Unit::One, 3, false),
    entry(5, 7, Unit::I, 2, true),
    entry(6, 7, Unit::MinusOne, 1, false),
];

/// `u_k = i_q ⊗ e_k`: the quaternion generator attached to each split unit.
pub const SPLIT_EMBEDDING: [usize; 8] = [0, 1, 1, 1, 2, 3, 2, 3];

fn build_table() -> [[BasisProduct; 8]; 8] {
    let mut t = [[BasisProduct::new(Unit::One, 0); 8]; 8];
    for k in 0..8 {
        t[0][k] = BasisProduct::new(Unit::One, k);
        t[k][0] = BasisProduct::new(Unit::One, k);
    }
    for e in PRINTED_TABLE {
        t[e.left][e.right] = e.product;
        let rev = if e.anticommutative { e.product.coeff.neg() } else { e.product.coeff };
        t[e.right][e.left] = BasisProduct::new(rev, e.product.index);
    }
    t
}

/// The full 8×8 table generated from the printed entries.
pub fn table() -> &'static [[BasisProduct; 8]; 8] {
    static TABLE: OnceLock<[[BasisProduct; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(build_table)
}

fn check_index(k: usize) -> Result<()> {
    if k < 8 {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(k))
    }
}

pub fn split_mul_basis(a: usize, b: usize) -> Result<BasisProduct> {
    check_index(a)?;
    check_index(b)?;
    Ok(table()[a][b])
}

/// Split octonion over `u_0..u_7`; the scalar `i` is central here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitOctonion {
    pub coeffs: [Gaussian; 8],
}

impl SplitOctonion {
    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| Gaussian::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(k: usize) -> Self {
        let mut s = Self::zero();
        s.coeffs[k] = Gaussian::one();
        s
    }

    pub fn from_real(coeffs: [Rational; 8]) -> Self {
        Self { coeffs: coeffs.map(|c| Complex::new(c, Rational::zero())) }
    }

    pub fn term(coeff: Gaussian, k: usize) -> Self {
        let mut s = Self::zero();
        s.coeffs[k] = coeff;
        s
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        Self { coeffs: std::array::from_fn(|k| &self.coeffs[k] * s) }
    }

    /// Negates the coefficients of `u_1..u_7`.
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

    /// `RE(u u*)`: real part of the `u_0` coefficient. May be negative.
    pub fn norm_sq(&self) -> Rational {
        (self * &self.conj()).coeffs[0].re.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// If this is `c · u_k` for a unit `c`, returns that product.
    pub fn as_basis_product(&self) -> Option<BasisProduct> {
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (k, c) = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        Unit::from_gaussian(c).map(|u| BasisProduct::new(u, k))
    }
}

/// Renders like `u0 - i·u2 + (1/2+i)·u5`.
impl fmt::Display for SplitOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (neg, term) = match Unit::from_gaussian(c) {
                Some(u) => (u.is_negative(), BasisProduct::new(if u.is_negative() { u.neg() } else { u }, k).to_string()),
                None if c.im.is_zero() && c.re.is_negative() => (true, format!("{}·u{k}", format_gaussian(&-c))),
                None => (false, format!("({})·u{k}", format_gaussian(c))),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => f.write_str(&term)?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Mul for &SplitOctonion {
    type Output = SplitOctonion;

    fn mul(self, rhs: &SplitOctonion) -> SplitOctonion {
        let t = table();
        let mut out = SplitOctonion::zero();
        for a in 0..8 {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if rhs.coeffs[b].is_zero() {
                    continue;
                }
                let p = t[a][b];
                out.coeffs[p.index] += &self.coeffs[a] * &rhs.coeffs[b] * p.coeff.to_gaussian();
            }
        }
        out
    }
}

impl Mul for SplitOctonion {
    type Output = SplitOctonion;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Add for SplitOctonion {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for k in 0..8 {
            self.coeffs[k] += rhs.coeffs[k].clone();
        }
        self
    }
}

impl Sub for SplitOctonion {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for SplitOctonion {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|c| -c) }
    }
}

pub fn split_mul(a: &SplitOctonion, b: &SplitOctonion) -> SplitOctonion {
    a * b
}

/// Image of `u_k` in the tensor oracle.
pub fn embed_basis(k: usize) -> TensorHO {
    TensorHO::basis(SPLIT_EMBEDDING[k], k)
}

/// Image of `coeff · u_k`, reading `i` as left multiplication by `i_1`.
pub fn embed_basis_product(p: BasisProduct) -> TensorHO {
    let base = embed_basis(p.index);
    let rotated = if p.coeff.is_imaginary() { &TensorHO::basis(1, 0) * &base } else { base };
    if p.coeff.is_negative() {
        -rotated
    } else {
        rotated
    }
}

/// Reads a single oracle term `s · (i_q ⊗ e_k)` back as `c · u_k`, if possible.
fn oracle_to_basis_product(t: &TensorHO) -> Option<BasisProduct> {
    let terms = t.terms();
    let [(c, q, k)] = terms.as_slice() else {
        return None;
    };
    let sign = if c.is_one() {
        1
    } else if (-c).is_one() {
        -1
    } else {
        return None;
    };
    let home = SPLIT_EMBEDDING[*k];
    let coeff = if *q == home {
        Unit::One
    } else {
        // i_1 · i_home = σ i_q  =>  i_q ⊗ e_k = σ · (i · u_k)
        let p = quaternion_basis_product(1, home);
        if p.index != *q {
            return None;
        }
        if p.sign > 0 {
            Unit::I
        } else {
            Unit::MinusI
        }
    };
    Some(BasisProduct::new(if sign > 0 { coeff } else { coeff.neg() }, *k))
}

fn describe_tensor(t: &TensorHO) -> String {
    let parts: Vec<String> = t
        .terms()
        .into_iter()
        .map(|(c, q, b)| {
            let g = crate::scalar::format_rational(&c);
            let q = if q == 0 { "1".to_string() } else { format!("i{q}") };
            format!("{g}·{q}⊗e{b}")
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDiffEntry {
    pub pair: [usize; 2],
    pub expected: BasisProduct,
    pub computed: Option<BasisProduct>,
    pub oracle: String,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Table-vs-oracle comparison over all 64 ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDiff {
    pub entries: Vec<TableDiffEntry>,
}

impl TableDiff {
    pub fn mismatches(&self) -> impl Iterator<Item = &TableDiffEntry> {
        self.entries.iter().filter(|e| !e.matched)
    }

    pub fn get(&self, a: usize, b: usize) -> &TableDiffEntry {
        &self.entries[8 * a + b]
    }
}

pub fn verify_table_against_oracle() -> TableDiff {
    let t = table();
    let mut entries = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let expected = t[a][b];
            let product = &embed_basis(a) * &embed_basis(b);
            let matched = product == embed_basis_product(expected);
            entries.push(TableDiffEntry {
                pair: [a, b],
                expected,
                computed: oracle_to_basis_product(&product),
                oracle: describe_tensor(&product),
                matched,
            });
        }
    }
    TableDiff { entries }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Commutation {
    Commutative,
    Anticommutative,
}

pub fn commutation_class(a: usize, b: usize) -> Result<Commutation> {
    check_index(a)?;
    check_index(b)?;
    if a == b || a == 0 || b == 0 {
        return Err(Error::ClassificationUndefined(a, b));
    }
    let (ab, ba) = (table()[a][b], table()[b][a]);
    Ok(if ab.index == ba.index && ab.coeff == ba.coeff.neg() {
        Commutation::Anticommutative
    } else {
        Commutation::Commutative
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientClass {
    Real,
    Imaginary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryInfo {
    pub triple: [usize; 3],
    pub coefficient_class: CoefficientClass,
    pub contains_peculiar: bool,
}

/// `u_a u_b = c u_g` together with `u_a u_g = −c u_b` on commutative pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignBreak {
    pub multiplier: usize,
    pub first: BasisProduct,
    pub second: BasisProduct,
    pub pair: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeculiarReport {
    pub peculiar: BTreeSet<usize>,
    pub semi_peculiar: BTreeSet<usize>,
    pub ternaries: Vec<TernaryInfo>,
    pub sign_breaks: Vec<SignBreak>,
}

/// Peculiar: common to every imaginary-coefficient ternary. Semi-peculiar:
/// in each sign break `u_a u_b = c u_g, u_a u_g = −c u_b`, the partner whose
/// product with `u_a` carries the minus sign.
pub fn classify_peculiar() -> PeculiarReport {
    let t = table();
    let imaginary: Vec<[usize; 3]> = FANO_TRIPLES
        .iter()
        .copied()
        .filter(|tri| {
            tri.iter()
                .flat_map(|&a| tri.iter().map(move |&b| (a, b)))
                .any(|(a, b)| a != b && t[a][b].coeff.is_imaginary())
        })
        .collect();
    let peculiar: BTreeSet<usize> = (1..8)
        .filter(|k| !imaginary.is_empty() && imaginary.iter().all(|tri| tri.contains(k)))
        .collect();

    let ternaries = FANO_TRIPLES
        .iter()
        .map(|tri| TernaryInfo {
            triple: *tri,
            coefficient_class: if imaginary.contains(tri) {
                CoefficientClass::Imaginary
            } else {
                CoefficientClass::Real
            },
            contains_peculiar: tri.iter().any(|k| peculiar.contains(k)),
        })
        .collect();

    let commutes = |a, b| commutation_class(a, b).ok() == Some(Commutation::Commutative);
    let mut sign_breaks = Vec::new();
    let mut semi_peculiar = BTreeSet::new();
    for tri in FANO_TRIPLES {
        for &a in &tri {
            let mut rest: Vec<usize> = tri.iter().copied().filter(|&k| k != a).collect();
            rest.sort_unstable();
            let (b, g) = (rest[0], rest[1]);
            if !(commutes(a, b) && commutes(a, g)) {
                continue;
            }
            let (first, second) = (t[a][b], t[a][g]);
            if second.coeff == first.coeff.neg() {
                for (partner, p) in [(b, first), (g, second)] {
                    if p.coeff.is_negative() && !peculiar.contains(&partner) {
                        semi_peculiar.insert(partner);
                    }
                }
                sign_breaks.push(SignBreak { multiplier: a, first, second, pair: [b, g] });
            }
        }
    }
    PeculiarReport { peculiar, semi_peculiar, ternaries, sign_breaks }
}

/// `u_i ⊙ u_j = u_ijk u_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstant {
    pub ijk: [usize; 3],
    pub value: Unit,
}

/// Constants as printed in the remark on the ⊙ operator, in print order.
pub const PRINTED_CONSTANTS: [([usize; 3], Unit); 21] = [
    ([1, 4, 5], Unit::One),
    ([1, 5, 4], Unit::One),
    ([3, 4, 7], Unit::One),
    ([3, 5, 6], Unit::One),
    ([3, 6, 5], Unit::One),
    ([3, 7, 4], Unit::One),
    ([4, 5, 1], Unit::One),
    ([4, 7, 3], Unit::One),
    ([5, 6, 3], Unit::One),
    ([1, 6, 7], Unit::MinusOne),
    ([1, 7, 6], Unit::MinusOne),
    ([6, 7, 1], Unit::MinusOne),
    ([1, 2, 3], Unit::I),
    ([2, 3, 1], Unit::I),
    ([2, 4, 6], Unit::I),
    ([2, 5, 7], Unit::I),
    ([2, 7, 5], Unit::I),
    ([3, 1, 2], Unit::I),
    ([4, 6, 2], Unit::I),
    ([5, 7, 2], Unit::I),
    ([2, 4, 6], Unit::MinusI),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AuditStatus {
    Match,
    Contradiction { generated: BasisProduct },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub ijk: [usize; 3],
    pub printed: Unit,
    #[serde(flatten)]
    pub status: AuditStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsAudit {
    pub entries: Vec<AuditEntry>,
    /// Index strings printed with more than one value.
    pub conflicting_listings: Vec<[usize; 3]>,
    /// Generated off-diagonal constants not printed anywhere.
    pub omissions: Vec<StructureConstant>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub table: Vec<StructureConstant>,
    pub audit: ConstantsAudit,
}

impl StructureConstants {
    pub fn value(&self, i: usize, j: usize, k: usize) -> Option<Unit> {
        self.table.iter().find(|c| c.ijk == [i, j, k]).map(|c| c.value)
    }

    pub fn matched(&self) -> impl Iterator<Item = &AuditEntry> {
        self.audit.entries.iter().filter(|e| e.status == AuditStatus::Match)
    }
}

pub fn structure_constants() -> StructureConstants {
    let t = table();
    let mut table_out = Vec::new();
    for i in 1..8 {
        for j in 1..8 {
            let p = t[i][j];
            table_out.push(StructureConstant { ijk: [i, j, p.index], value: p.coeff });
        }
    }

    let entries: Vec<AuditEntry> = PRINTED_CONSTANTS
        .iter()
        .map(|&(ijk, printed)| {
            let generated = t[ijk[0]][ijk[1]];
            let status = if generated == BasisProduct::new(printed, ijk[2]) {
                AuditStatus::Match
            } else {
                AuditStatus::Contradiction { generated }
            };
            AuditEntry { ijk, printed, status }
        })
        .collect();

    let mut conflicting_listings = Vec::new();
    for (n, &(ijk, v)) in PRINTED_CONSTANTS.iter().enumerate() {
        let clash = PRINTED_CONSTANTS[..n].iter().any(|&(other, w)| other == ijk && w != v);
        if clash && !conflicting_listings.contains(&ijk) {
            conflicting_listings.push(ijk);
        }
    }

    let omissions = table_out
        .iter()
        .filter(|c| c.ijk[0] != c.ijk[1])
        .filter(|c| !PRINTED_CONSTANTS.iter().any(|&(ijk, _)| ijk == c.ijk))
        .cloned()
        .collect();

    StructureConstants {
        table: table_out,
        audit: ConstantsAudit { entries, conflicting_listings, omissions },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonassocWitness {
    pub factors: [usize; 3],
    pub left_bracketed: SplitOctonion,
    pub right_bracketed: SplitOctonion,
    pub associator: SplitOctonion,
}

/// Both bracketings of `u_1 u_2 u_6`.
pub fn nonassociativity_witness() -> NonassocWitness {
    let [a, b, c] = [1, 2, 6].map(SplitOctonion::basis);
    NonassocWitness {
        factors: [1, 2, 6],
        left_bracketed: &(&a * &b) * &c,
        right_bracketed: &a * &(&b * &c),
        associator: associator(&a, &b, &c),
    }
}

/// Basis pairs `(a, b)` with `(u_a u_a) u_b ≠ u_a (u_a u_b)` when `i` is central.
pub fn split_alternativity_failures() -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for a in 0..8 {
        for b in 0..8 {
            let (x, y) = (SplitOctonion::basis(a), SplitOctonion::basis(b));
            if !associator(&x, &x, &y).is_zero() {
                out.push([a, b]);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormCounterexample {
    pub a: SplitOctonion,
    pub b: SplitOctonion,
    pub norm_of_product: Rational,
    pub product_of_norms: Rational,
    /// Number of `(a, b)` pairs examined up to and including the witness.
    pub examined: u64,
}

/// First pair (lexicographic over coefficients in `{−1, 0, 1}`, `a` major)
/// of real split octonions with `N²(ab) ≠ N²(a) N²(b)`.
pub fn split_norm_counterexample() -> Result<NormCounterexample> {
    const SIZE: u32 = 6561; // 3^8
    let decode = |mut code: u32| -> SplitOctonion {
        let mut c = [0i64; 8];
        for k in (0..8).rev() {
            c[k] = i64::from(code % 3) - 1;
            code /= 3;
        }
        SplitOctonion::from_real(c.map(crate::scalar::rat))
    };
    let all: Vec<(SplitOctonion, Rational)> = (0..SIZE)
        .map(|code| {
            let x = decode(code);
            let n = x.norm_sq();
            (x, n)
        })
        .collect();
    let mut examined = 0u64;
    for (a, na) in &all {
        for (b, nb) in &all {
            examined += 1;
            let nab = (a * b).norm_sq();
            let prod = na * nb;
            if nab != prod {
                return Ok(NormCounterexample {
                    a: a.clone(),
                    b: b.clone(),
                    norm_of_product: nab,
                    product_of_norms: prod,
                    examined,
                });
            }
        }
    }
    Err(Error::NoCounterexample)
}
