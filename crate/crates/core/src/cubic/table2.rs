use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::cube::{CubicMatrix, ProjectionAxis, TildeRule, TurnAxis};
use crate::error::{Error, Result};
use crate::matrix2::Matrix2;
use crate::split::{split_mul_basis, BasisProduct, Unit};

use ProjectionAxis::{I, II, III};

/// A projection `Σ_k^A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SigmaRef {
    pub sigma: usize,
    pub axis: ProjectionAxis,
}

impl SigmaRef {
    pub const fn new(sigma: usize, axis: ProjectionAxis) -> Self {
        Self { sigma, axis }
    }
}

impl fmt::Display for SigmaRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ{}^{}", self.sigma, self.axis)
    }
}

/// Which projections of which elements each ternary carries.
pub const DISTRIBUTION: [[SigmaRef; 3]; 7] = [
    [SigmaRef::new(1, I), SigmaRef::new(2, I), SigmaRef::new(3, I)],
    [SigmaRef::new(1, II), SigmaRef::new(4, I), SigmaRef::new(5, I)],
    [SigmaRef::new(2, II), SigmaRef::new(4, II), SigmaRef::new(6, I)],
    [SigmaRef::new(3, II), SigmaRef::new(4, III), SigmaRef::new(7, I)],
    [SigmaRef::new(1, III), SigmaRef::new(7, II), SigmaRef::new(6, II)],
    [SigmaRef::new(5, II), SigmaRef::new(7, III), SigmaRef::new(2, III)],
    [SigmaRef::new(5, III), SigmaRef::new(3, III), SigmaRef::new(6, III)],
];

/// Ternary id (1..=7) → its three `(element, projection)` slots.
pub fn ternary_distribution() -> BTreeMap<u8, [SigmaRef; 3]> {
    DISTRIBUTION.iter().enumerate().map(|(k, t)| (k as u8 + 1, *t)).collect()
}

/// `Σ_i ⊙ Σ_j`; the split table is the single source.
pub fn sigma_mul(i: usize, j: usize) -> Result<BasisProduct> {
    split_mul_basis(i, j)
}

/// A factor `ⁿ~Σ_k^A` (turn optional).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub sigma: SigmaRef,
    pub turn: Option<TurnAxis>,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.turn {
            Some(t) => write!(f, "{}~{}", t.number(), self.sigma),
            None => write!(f, "{}", self.sigma),
        }
    }
}

/// One printed line `left · right = coeff · result`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableIIIdentity {
    pub block: u8,
    pub position: u8,
    pub left: Factor,
    pub right: Factor,
    pub coeff: Unit,
    pub result: SigmaRef,
}

impl fmt::Display for TableIIIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.coeff {
            Unit::One => "",
            Unit::MinusOne => "-",
            Unit::I => "i",
            Unit::MinusI => "-i",
        };
        write!(f, "{} {} = {c}{}", self.left, self.right, self.result)
    }
}

const fn p(sigma: usize, axis: ProjectionAxis) -> Factor {
    Factor { sigma: SigmaRef::new(sigma, axis), turn: None }
}

const fn t(turn: u8, sigma: usize, axis: ProjectionAxis) -> Factor {
    let turn = match turn {
        1 => TurnAxis::First,
        2 => TurnAxis::Second,
        _ => TurnAxis::Third,
    };
    Factor { sigma: SigmaRef::new(sigma, axis), turn: Some(turn) }
}

const fn id(block: u8, position: u8, left: Factor, right: Factor, coeff: Unit, result: (usize, ProjectionAxis)) -> TableIIIdentity {
    TableIIIdentity { block, position, left, right, coeff, result: SigmaRef::new(result.0, result.1) }
}

use Unit::{MinusI as NI, MinusOne as N1, One as P1, I as PI};

/// All 42 printed identities with their turning marks, in print order.
pub const TABLE_II: [TableIIIdentity; 42] = [
    id(1, 1, p(1, I), p(2, I), PI, (3, I)),
    id(1, 2, t(2, 2, I), p(1, I), NI, (3, I)),
    id(1, 3, p(2, I), p(3, I), PI, (1, I)),
    id(1, 4, t(2, 3, I), p(2, I), NI, (1, I)),
    id(1, 5, p(3, I), p(1, I), PI, (2, I)),
    id(1, 6, t(3, 1, I), p(3, I), NI, (2, I)),
    id(2, 1, p(1, II), p(4, I), P1, (5, I)),
    id(2, 2, t(3, 4, I), t(3, 1, II), P1, (5, I)),
    id(2, 3, p(4, I), p(5, I), P1, (1, II)),
    id(2, 4, t(3, 5, I), t(3, 4, I), P1, (1, II)),
    id(2, 5, p(1, II), p(5, I), P1, (4, I)),
    id(2, 6, t(3, 5, I), t(3, 1, II), P1, (4, I)),
    id(3, 1, p(2, II), p(4, II), PI, (6, I)),
    id(3, 2, t(3, 4, II), t(3, 2, II), PI, (6, I)),
    id(3, 3, t(1, 4, II), t(2, 6, I), PI, (2, II)),
    id(3, 4, p(6, I), p(4, II), NI, (2, II)),
    id(3, 5, t(1, 2, II), t(2, 6, I), NI, (4, II)),
    id(3, 6, t(3, 6, I), t(3, 2, II), NI, (4, II)),
    id(4, 1, p(3, II), p(4, III), P1, (7, I)),
    id(4, 2, t(1, 4, III), t(1, 3, II), P1, (7, I)),
    id(4, 3, t(2, 4, III), t(2, 7, I), P1, (3, II)),
    id(4, 4, p(7, I), p(4, III), P1, (3, II)),
    id(4, 5, p(7, I), p(3, II), P1, (4, III)),
    id(4, 6, t(1, 3, II), t(2, 7, I), P1, (4, III)),
    id(5, 1, p(1, III), p(6, II), N1, (7, II)),
    id(5, 2, t(3, 6, II), t(2, 1, III), N1, (7, II)),
    id(5, 3, t(3, 6, II), t(3, 7, II), N1, (1, III)),
    id(5, 4, p(7, II), p(6, II), N1, (1, III)),
    id(5, 5, p(1, III), p(7, II), N1, (6, II)),
    id(5, 6, t(3, 7, II), t(2, 1, III), N1, (6, II)),
    id(6, 1, p(5, II), p(2, III), PI, (7, III)),
    id(6, 2, t(2, 2, III), t(3, 5, II), PI, (7, III)),
    id(6, 3, p(2, III), p(7, III), PI, (5, II)),
    id(6, 4, t(2, 7, III), t(2, 2, III), PI, (5, II)),
    id(6, 5, t(3, 5, II), t(3, 7, III), PI, (2, III)),
    id(6, 6, p(7, III), p(5, II), NI, (2, III)),
    id(7, 1, p(5, III), p(6, III), P1, (3, III)),
    id(7, 2, t(2, 6, III), t(2, 5, III), P1, (3, III)),
    id(7, 3, p(6, III), p(3, III), P1, (5, III)),
    id(7, 4, t(1, 3, III), t(2, 6, III), P1, (5, III)),
    id(7, 5, p(5, III), p(3, III), P1, (6, III)),
    id(7, 6, t(2, 3, III), t(2, 5, III), P1, (6, III)),
];

/// Projection references used by the identities of `blocks`.
pub fn referenced(blocks: &BTreeSet<u8>) -> BTreeSet<SigmaRef> {
    TABLE_II
        .iter()
        .filter(|e| blocks.contains(&e.block))
        .flat_map(|e| [e.left.sigma, e.right.sigma, e.result])
        .collect()
}

pub fn validate_scope(scope: &BTreeSet<u8>) -> Result<()> {
    match scope.iter().find(|&&b| !(1..=7).contains(&b)) {
        Some(&b) => Err(Error::InvalidTernary(b)),
        None => Ok(()),
    }
}

/// The worked turning example: `¹~Σ_3^II = [[−1,0],[0,1]]` with
/// `Σ_3^II = [[0,−1],[1,0]]`.
pub fn definition_example() -> (SigmaRef, TurnAxis, Matrix2, Matrix2) {
    (
        SigmaRef::new(3, II),
        TurnAxis::First,
        Matrix2::real([[0, -1], [1, 0]]),
        Matrix2::real([[-1, 0], [0, 1]]),
    )
}

#[derive(Serialize, Deserialize)]
struct ProjectionRecord {
    sigma: usize,
    axis: ProjectionAxis,
    matrix: Matrix2,
}

#[derive(Serialize, Deserialize)]
struct CubeRecord {
    sigma: usize,
    entries: CubicMatrix,
}

#[derive(Serialize, Deserialize)]
struct AssignmentRecord {
    projections: Vec<ProjectionRecord>,
    #[serde(default)]
    cubes: Vec<CubeRecord>,
}

/// Projection (and optionally cube) values for some Σ elements.
///
/// Serialized as `{projections: [{sigma, axis, matrix}], cubes: [{sigma, entries}]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "AssignmentRecord", try_from = "AssignmentRecord")]
pub struct SigmaAssignment {
    pub projections: BTreeMap<SigmaRef, Matrix2>,
    pub cubes: BTreeMap<usize, CubicMatrix>,
}

impl From<SigmaAssignment> for AssignmentRecord {
    fn from(a: SigmaAssignment) -> Self {
        AssignmentRecord {
            projections: a
                .projections
                .into_iter()
                .map(|(r, matrix)| ProjectionRecord { sigma: r.sigma, axis: r.axis, matrix })
                .collect(),
            cubes: a.cubes.into_iter().map(|(sigma, entries)| CubeRecord { sigma, entries }).collect(),
        }
    }
}

impl TryFrom<AssignmentRecord> for SigmaAssignment {
    type Error = Error;

    fn try_from(r: AssignmentRecord) -> Result<Self> {
        let mut a = SigmaAssignment::new();
        for p in r.projections {
            if p.sigma > 7 {
                return Err(Error::IndexOutOfRange(p.sigma));
            }
            a.set(SigmaRef::new(p.sigma, p.axis), p.matrix);
        }
        for c in r.cubes {
            if c.sigma > 7 {
                return Err(Error::IndexOutOfRange(c.sigma));
            }
            a.cubes.insert(c.sigma, c.entries);
        }
        if !a.is_consistent() {
            return Err(Error::Parse("cube projections disagree with listed projections".into()));
        }
        Ok(a)
    }
}

impl SigmaAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Σ_0^I..Σ_3^I` = Pauli matrices and `Σ_3^II = [[0,−1],[1,0]]`.
    pub fn pauli_anchors() -> Self {
        let mut a = Self::pauli_first_projections();
        let (r, _, m, _) = definition_example();
        a.set(r, m);
        a
    }

    pub fn pauli_first_projections() -> Self {
        let mut a = Self::new();
        for k in 0..4 {
            a.set(SigmaRef::new(k, I), Matrix2::pauli(k));
        }
        a
    }

    pub fn set(&mut self, r: SigmaRef, m: Matrix2) {
        self.projections.insert(r, m);
    }

    /// Attaches a cube; its projections overwrite any listed values.
    pub fn set_cube(&mut self, sigma: usize, cube: CubicMatrix) {
        for a in ProjectionAxis::ALL {
            self.projections.insert(SigmaRef::new(sigma, a), cube.project(a));
        }
        self.cubes.insert(sigma, cube);
    }

    pub fn projection(&self, r: SigmaRef) -> Option<Matrix2> {
        match self.cubes.get(&r.sigma) {
            Some(c) => Some(c.project(r.axis)),
            None => self.projections.get(&r).cloned(),
        }
    }

    /// Cubes agree with the listed projections.
    pub fn is_consistent(&self) -> bool {
        self.cubes.iter().all(|(&k, c)| {
            ProjectionAxis::ALL.iter().all(|&a| {
                self.projections.get(&SigmaRef::new(k, a)).is_none_or(|m| *m == c.project(a))
            })
        })
    }

    fn require(&self, r: SigmaRef) -> Result<Matrix2> {
        self.projection(r)
            .ok_or(Error::MissingProjection { sigma: r.sigma, axis: r.axis.to_string() })
    }

    /// Value of a (possibly turned) factor.
    pub fn evaluate(&self, f: &Factor, rule: &TildeRule) -> Result<Matrix2> {
        match f.turn {
            None => self.require(f.sigma),
            Some(turn) => match self.cubes.get(&f.sigma.sigma) {
                Some(c) => Ok(c.rotate180(turn).project(f.sigma.axis)),
                None => Ok(rule.map(turn, f.sigma.axis).apply(&self.require(f.sigma)?)),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub block: u8,
    pub position: u8,
    pub identity: String,
    pub lhs: Matrix2,
    pub rhs: Matrix2,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableIICheck {
    pub checks: Vec<IdentityCheck>,
}

impl TableIICheck {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.matched)
    }

    pub fn pass_vector(&self) -> Vec<bool> {
        self.checks.iter().map(|c| c.matched).collect()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.matched)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut block = 0;
        for c in &self.checks {
            if c.block != block {
                block = c.block;
                out.push_str(&format!("{block})\n"));
            }
            let mark = if c.matched { "match" } else { "MISMATCH" };
            out.push_str(&format!("  {:<28} lhs={} rhs={} {mark}\n", c.identity, c.lhs, c.rhs));
        }
        out
    }
}

pub fn check_identity(e: &TableIIIdentity, a: &SigmaAssignment, rule: &TildeRule) -> Result<IdentityCheck> {
    let lhs = &a.evaluate(&e.left, rule)? * &a.evaluate(&e.right, rule)?;
    let rhs = a.require(e.result)?.scale_unit(e.coeff);
    Ok(IdentityCheck {
        block: e.block,
        position: e.position,
        identity: e.to_string(),
        matched: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Evaluates the identities of the listed blocks.
pub fn check_table_ii_blocks(a: &SigmaAssignment, rule: &TildeRule, blocks: &BTreeSet<u8>) -> Result<TableIICheck> {
    validate_scope(blocks)?;
    let checks = TABLE_II
        .iter()
        .filter(|e| blocks.contains(&e.block))
        .map(|e| check_identity(e, a, rule))
        .collect::<Result<_>>()?;
    Ok(TableIICheck { checks })
}

pub fn check_table_ii(a: &SigmaAssignment, rule: &TildeRule) -> Result<TableIICheck> {
    check_table_ii_blocks(a, rule, &(1..=7).collect())
}
