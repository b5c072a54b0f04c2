use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::cube::{CubicMatrix, ProjectionAxis};
use super::gint::{from_gint, gadd, unit_gint, GInt, GMat};
use super::table2::{SigmaAssignment, SigmaRef};
use crate::split::Unit;

/// Beam-condition cube over `{0, ±1, ±i}` as entry codes
/// (0 = zero, 1..=4 = `+1, −1, +i, −i`) in position order.
type CubeCode = [u8; 8];

fn code_value(c: u8) -> GInt {
    if c == 0 {
        (0, 0)
    } else {
        unit_gint(Unit::ALL[c as usize - 1])
    }
}

fn position(k: usize) -> [usize; 3] {
    [k >> 2 & 1, k >> 1 & 1, k & 1]
}

fn beam_ok(code: &CubeCode) -> bool {
    let nz: Vec<[usize; 3]> = (0..8).filter(|&k| code[k] != 0).map(position).collect();
    nz.iter()
        .enumerate()
        .all(|(n, p)| nz[..n].iter().all(|q| (0..3).filter(|&k| p[k] != q[k]).count() != 1))
}

/// All beam-condition cube codes, lexicographic.
fn codes() -> &'static [CubeCode] {
    static CODES: OnceLock<Vec<CubeCode>> = OnceLock::new();
    CODES.get_or_init(|| {
        let mut out = Vec::new();
        for support in 0u32..256 {
            let sites: Vec<usize> = (0..8).filter(|k| support & (1 << (7 - k)) != 0).collect();
            let mut probe = [0u8; 8];
            for &s in &sites {
                probe[s] = 1;
            }
            if !beam_ok(&probe) {
                continue;
            }
            let n = sites.len() as u32;
            for mut phase in 0..4u32.pow(n) {
                let mut code = [0u8; 8];
                for &s in sites.iter().rev() {
                    code[s] = (phase % 4) as u8 + 1;
                    phase /= 4;
                }
                out.push(code);
            }
        }
        out.sort_unstable();
        out
    })
}

fn project_code(code: &CubeCode, axis: ProjectionAxis) -> GMat {
    let (rc, cc) = axis.plane();
    let mut m = [[(0, 0); 2]; 2];
    for k in 0..8 {
        let p = position(k);
        m[p[rc]][p[cc]] = gadd(m[p[rc]][p[cc]], code_value(code[k]));
    }
    GMat(m)
}

fn code_to_cube(code: &CubeCode) -> CubicMatrix {
    let entries: Vec<([usize; 3], _)> =
        (0..8).filter(|&k| code[k] != 0).map(|k| (position(k), from_gint(code_value(code[k])))).collect();
    CubicMatrix::from_entries(&entries)
}

/// Number of beam-condition cubes over `{0, ±1, ±i}`.
pub fn beam_cube_count() -> usize {
    codes().len()
}

/// Every beam-condition cube whose three projections are `projs` (I, II, III).
pub fn lift_projections(projs: [&crate::matrix2::Matrix2; 3]) -> Vec<CubicMatrix> {
    let Some(target) = projs
        .iter()
        .map(|m| GMat::from_matrix(m))
        .collect::<Option<Vec<GMat>>>()
    else {
        return Vec::new();
    };
    codes()
        .iter()
        .filter(|code| ProjectionAxis::ALL.iter().zip(&target).all(|(&a, t)| project_code(code, a) == *t))
        .map(code_to_cube)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeLift {
    pub sigma: usize,
    pub cubes: Vec<CubicMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftOutcome {
    pub per_sigma: Vec<CubeLift>,
    /// Elements lacking one of their three projections.
    pub incomplete: Vec<usize>,
    /// Elements whose projections no beam-condition cube reproduces.
    pub inconsistent: Vec<usize>,
    pub assignments: Vec<SigmaAssignment>,
}

/// Lifts every element of `targets` (all fully projected elements when
/// `None`) to cubes; `assignments` is the ordered cartesian product.
pub fn lift_to_cubes(a: &SigmaAssignment, targets: Option<&BTreeSet<usize>>) -> LiftOutcome {
    let mut sigmas: BTreeSet<usize> = a.projections.keys().map(|r| r.sigma).collect();
    if let Some(t) = targets {
        sigmas = t.clone();
    }
    let mut per_sigma = Vec::new();
    let mut incomplete = Vec::new();
    let mut inconsistent = Vec::new();
    for k in sigmas {
        let projs: Option<Vec<_>> =
            ProjectionAxis::ALL.iter().map(|&ax| a.projection(SigmaRef::new(k, ax))).collect();
        let Some(projs) = projs else {
            incomplete.push(k);
            continue;
        };
        let cubes = lift_projections([&projs[0], &projs[1], &projs[2]]);
        if cubes.is_empty() {
            inconsistent.push(k);
        }
        per_sigma.push(CubeLift { sigma: k, cubes });
    }

    let mut assignments = vec![a.clone()];
    if inconsistent.is_empty() {
        for lift in &per_sigma {
            let mut next = Vec::with_capacity(assignments.len() * lift.cubes.len());
            for base in &assignments {
                for c in &lift.cubes {
                    let mut x = base.clone();
                    x.set_cube(lift.sigma, c.clone());
                    next.push(x);
                }
            }
            assignments = next;
        }
    } else {
        assignments.clear();
    }
    LiftOutcome { per_sigma, incomplete, inconsistent, assignments }
}

/// Per-element cube counts keyed by σ index.
pub fn lift_counts(o: &LiftOutcome) -> BTreeMap<usize, usize> {
    o.per_sigma.iter().map(|l| (l.sigma, l.cubes.len())).collect()
}
