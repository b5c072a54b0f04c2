use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::cube::{PlaneMap, TildeRule};
use super::gint::{candidates, unit_gint, GInt, GMat};
use super::table2::{
    definition_example, referenced, validate_scope, Factor, SigmaAssignment, SigmaRef, TABLE_II,
};
use crate::error::{Error, Result};
use crate::matrix2::Matrix2;

/// Outcome of a reconstruction run. An empty solution list means the scope
/// is unsatisfiable within the candidate space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub scope: BTreeSet<u8>,
    pub unknowns: Vec<SigmaRef>,
    pub solutions: Vec<SigmaAssignment>,
}

impl Reconstruction {
    pub fn is_unsatisfiable(&self) -> bool {
        self.solutions.is_empty()
    }
}

#[derive(Clone, Debug)]
enum Slot {
    Known(GMat),
    Var(usize, PlaneMap),
}

#[derive(Clone, Debug)]
enum Constraint {
    /// left · right = coeff · result
    Product { left: Slot, right: Slot, coeff: GInt, result: Slot },
    /// slot = value
    Fixed { slot: Slot, value: GMat },
}

impl Constraint {
    fn vars(&self) -> Vec<usize> {
        let slots: Vec<&Slot> = match self {
            Constraint::Product { left, right, result, .. } => vec![left, right, result],
            Constraint::Fixed { slot, .. } => vec![slot],
        };
        let mut v: Vec<usize> = slots
            .into_iter()
            .filter_map(|s| match s {
                Slot::Var(k, _) => Some(*k),
                Slot::Known(_) => None,
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn holds(&self, values: &[Option<GMat>]) -> bool {
        let get = |s: &Slot| match s {
            Slot::Known(m) => *m,
            Slot::Var(k, p) => values[*k].expect("assigned").map(*p),
        };
        match self {
            Constraint::Product { left, right, coeff, result } => {
                get(left).mul(&get(right)) == get(result).scale(*coeff)
            }
            Constraint::Fixed { slot, value } => get(slot) == *value,
        }
    }
}

struct Search<'a> {
    cands: &'a [GMat],
    constraints: &'a [Constraint],
    by_var: Vec<Vec<usize>>,
    found: Vec<Vec<usize>>,
    limit: Option<usize>,
}

impl Search<'_> {
    /// Filters domains through constraints with one open variable; returns
    /// false on a dead end.
    fn propagate(&self, domains: &mut [u32]) -> bool {
        loop {
            let mut changed = false;
            for c in self.constraints {
                let open: Vec<usize> = c.vars().into_iter().filter(|&v| domains[v].count_ones() != 1).collect();
                let mut values: Vec<Option<GMat>> = domains
                    .iter()
                    .map(|d| (d.count_ones() == 1).then(|| self.cands[d.trailing_zeros() as usize]))
                    .collect();
                match open.as_slice() {
                    [] => {
                        if !c.holds(&values) {
                            return false;
                        }
                    }
                    [v] => {
                        let mut keep = 0u32;
                        for k in 0..self.cands.len() {
                            if domains[*v] & (1 << k) == 0 {
                                continue;
                            }
                            values[*v] = Some(self.cands[k]);
                            if c.holds(&values) {
                                keep |= 1 << k;
                            }
                        }
                        if keep == 0 {
                            return false;
                        }
                        if keep != domains[*v] {
                            domains[*v] = keep;
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, mut domains: Vec<u32>) {
        if self.limit.is_some_and(|n| self.found.len() >= n) || !self.propagate(&mut domains) {
            return;
        }
        let open = (0..domains.len())
            .filter(|&v| domains[v].count_ones() > 1)
            .min_by_key(|&v| (domains[v].count_ones(), usize::MAX - self.by_var[v].len()));
        match open {
            None => self.found.push(domains.iter().map(|d| d.trailing_zeros() as usize).collect()),
            Some(v) => {
                for k in 0..self.cands.len() {
                    if domains[v] & (1 << k) != 0 {
                        let mut next = domains.clone();
                        next[v] = 1 << k;
                        self.run(next);
                    }
                }
            }
        }
    }
}

fn known(a: &SigmaAssignment, f: &Factor, rule: &TildeRule) -> Result<GMat> {
    let m = a.evaluate(f, rule)?;
    GMat::from_matrix(&m)
        .ok_or_else(|| Error::InvalidArgument(format!("anchor {} has non-integer entries", f.sigma)))
}

/// Exhaustive search over signed generalized permutation matrices for the
/// projections referenced by `scope` that `anchors` leave open. Solutions
/// satisfy every identity of the scope and the worked turning example, and
/// come back in lexicographic candidate order.
pub fn reconstruct(anchors: &SigmaAssignment, scope: &BTreeSet<u8>, rule: &TildeRule) -> Result<Reconstruction> {
    reconstruct_limited(anchors, scope, rule, None)
}

/// As [`reconstruct`], stopping after `limit` solutions (which are then the
/// first ones found, not necessarily the lexicographically first).
pub fn reconstruct_limited(
    anchors: &SigmaAssignment,
    scope: &BTreeSet<u8>,
    rule: &TildeRule,
    limit: Option<usize>,
) -> Result<Reconstruction> {
    validate_scope(scope)?;
    if scope.is_empty() {
        return Err(Error::InvalidArgument("empty reconstruction scope".into()));
    }
    let refs = referenced(scope);
    let unknowns: Vec<SigmaRef> = refs.iter().copied().filter(|r| anchors.projection(*r).is_none()).collect();
    let index: BTreeMap<SigmaRef, usize> = unknowns.iter().enumerate().map(|(k, r)| (*r, k)).collect();

    let slot = |f: &Factor| -> Result<Slot> {
        Ok(match index.get(&f.sigma) {
            Some(&v) => Slot::Var(v, f.turn.map_or(PlaneMap::Identity, |t| rule.map(t, f.sigma.axis))),
            None => Slot::Known(known(anchors, f, rule)?),
        })
    };

    let mut constraints = Vec::new();
    for e in TABLE_II.iter().filter(|e| scope.contains(&e.block)) {
        constraints.push(Constraint::Product {
            left: slot(&e.left)?,
            right: slot(&e.right)?,
            coeff: unit_gint(e.coeff),
            result: slot(&Factor { sigma: e.result, turn: None })?,
        });
    }
    let (ex_ref, ex_turn, _, ex_value) = definition_example();
    if refs.contains(&ex_ref) || anchors.projection(ex_ref).is_some() {
        let f = Factor { sigma: ex_ref, turn: Some(ex_turn) };
        constraints.push(Constraint::Fixed {
            slot: slot(&f)?,
            value: GMat::from_matrix(&ex_value).expect("integer example"),
        });
    }

    let cands = candidates();
    let mut by_var = vec![Vec::new(); unknowns.len()];
    for (n, c) in constraints.iter().enumerate() {
        for v in c.vars() {
            by_var[v].push(n);
        }
    }
    let mut search = Search { cands: &cands, constraints: &constraints, by_var, found: Vec::new(), limit };
    search.run(vec![u32::MAX; unknowns.len()]);
    let mut found = search.found;
    found.sort();

    let solutions = found
        .into_iter()
        .map(|choice| {
            let mut a = anchors.clone();
            for (r, k) in unknowns.iter().zip(choice) {
                a.set(*r, cands[k].to_matrix());
            }
            a
        })
        .collect();
    Ok(Reconstruction { scope: scope.clone(), unknowns, solutions })
}

/// The 32-element candidate space, in search order.
pub fn candidate_matrices() -> Vec<Matrix2> {
    candidates().into_iter().map(GMat::to_matrix).collect()
}

/// Tilde maps for turn axes 2 and 3 on projection I, from the full square
/// symmetry group, under which all six block-1 lines hold for the Pauli
/// anchors. Used to probe which turning conventions the printed block admits.
pub fn block_one_admissible_maps(base: &TildeRule) -> Vec<(PlaneMap, PlaneMap)> {
    use super::cube::{ProjectionAxis, TurnAxis};
    let a = SigmaAssignment::pauli_first_projections();
    let scope = BTreeSet::from([1u8]);
    let mut out = Vec::new();
    for m2 in PlaneMap::ALL {
        for m3 in PlaneMap::ALL {
            let rule = base
                .clone()
                .with(TurnAxis::Second, ProjectionAxis::I, m2)
                .with(TurnAxis::Third, ProjectionAxis::I, m3);
            let ok = super::table2::check_table_ii_blocks(&a, &rule, &scope)
                .map(|c| c.all_match())
                .unwrap_or(false);
            if ok {
                out.push((m2, m3));
            }
        }
    }
    out
}

/// Candidate tilde maps a rule search may use per (turn, projection) slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapFamily {
    /// Row, column or both flips (what a 180° turn can induce).
    Flips,
    /// Flips plus the identity.
    FlipsOrIdentity,
    /// All eight symmetries of the square.
    Dihedral,
}

impl MapFamily {
    pub fn maps(self) -> &'static [PlaneMap] {
        match self {
            MapFamily::Flips => &[PlaneMap::RowFlip, PlaneMap::ColFlip, PlaneMap::BothFlip],
            MapFamily::FlipsOrIdentity => {
                &[PlaneMap::Identity, PlaneMap::RowFlip, PlaneMap::ColFlip, PlaneMap::BothFlip]
            }
            MapFamily::Dihedral => &PlaneMap::ALL,
        }
    }
}

/// Tilde slot `(turn axis 1..=3, projection axis)` and the map chosen for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotChoice {
    pub turn: u8,
    pub axis: super::cube::ProjectionAxis,
    pub map: PlaneMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleSearch {
    pub family: MapFamily,
    pub scope: BTreeSet<u8>,
    /// Rules (restricted to the slots the scope uses) admitting at least one
    /// reconstruction, in enumeration order.
    pub rules: Vec<Vec<SlotChoice>>,
    /// Longest block prefix of the scope satisfiable under some rule.
    pub satisfiable_prefix: Vec<u8>,
}

/// Backtracking search for tilde conventions: slots are fixed block by block
/// and a partial rule survives only while the blocks so far reconstruct.
pub fn search_tilde_rules(anchors: &SigmaAssignment, scope: &BTreeSet<u8>, family: MapFamily) -> Result<RuleSearch> {
    use super::cube::{ProjectionAxis, TurnAxis};
    validate_scope(scope)?;
    let blocks: Vec<u8> = scope.iter().copied().collect();
    let slots_of = |b: u8| -> Vec<(TurnAxis, ProjectionAxis)> {
        let mut v: Vec<_> = TABLE_II
            .iter()
            .filter(|e| e.block == b)
            .flat_map(|e| [e.left, e.right])
            .filter_map(|f| f.turn.map(|t| (t, f.sigma.axis)))
            .collect();
        v.sort();
        v.dedup();
        v
    };

    struct Ctx<'a> {
        anchors: &'a SigmaAssignment,
        blocks: Vec<u8>,
        slots: Vec<Vec<(TurnAxis, ProjectionAxis)>>,
        maps: &'static [PlaneMap],
        rules: Vec<Vec<SlotChoice>>,
        best: usize,
    }

    fn go(cx: &mut Ctx, depth: usize, fixed: &mut BTreeMap<(TurnAxis, ProjectionAxis), PlaneMap>) -> Result<()> {
        if depth == cx.blocks.len() {
            cx.rules.push(
                fixed
                    .iter()
                    .map(|(&(t, a), &map)| SlotChoice { turn: t.number(), axis: a, map })
                    .collect(),
            );
            return Ok(());
        }
        let open: Vec<_> = cx.slots[depth].iter().copied().filter(|s| !fixed.contains_key(s)).collect();
        let n = cx.maps.len();
        for code in 0..n.pow(open.len() as u32) {
            let mut c = code;
            for s in &open {
                fixed.insert(*s, cx.maps[c % n]);
                c /= n;
            }
            let mut rule = TildeRule::geometric();
            for (&(t, a), &m) in fixed.iter() {
                rule = rule.with(t, a, m);
            }
            let prefix: BTreeSet<u8> = cx.blocks[..=depth].iter().copied().collect();
            if !reconstruct_limited(cx.anchors, &prefix, &rule, Some(1))?.solutions.is_empty() {
                cx.best = cx.best.max(depth + 1);
                go(cx, depth + 1, fixed)?;
            }
            for s in &open {
                fixed.remove(s);
            }
        }
        Ok(())
    }

    let slots = blocks.iter().map(|&b| slots_of(b)).collect();
    let mut cx = Ctx { anchors, blocks: blocks.clone(), slots, maps: family.maps(), rules: Vec::new(), best: 0 };
    go(&mut cx, 0, &mut BTreeMap::new())?;
    Ok(RuleSearch {
        family,
        scope: scope.clone(),
        rules: cx.rules,
        satisfiable_prefix: blocks[..cx.best].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::check_table_ii_blocks;

    fn anchors() -> SigmaAssignment {
        SigmaAssignment::pauli_anchors()
    }

    #[test]
    fn candidate_space() {
        let c = candidate_matrices();
        assert_eq!(c.len(), 32);
        assert!(c.iter().all(Matrix2::is_signed_generalized_permutation));
        assert_eq!(c.iter().collect::<std::collections::HashSet<_>>().len(), 32);
    }

    #[test]
    fn frozen_counts_under_geometric_rule() {
        let rule = TildeRule::geometric();
        for (scope, n) in [(1u8, 0usize), (2, 0), (4, 0), (5, 24), (6, 8), (7, 0)] {
            let r = reconstruct(&anchors(), &BTreeSet::from([scope]), &rule).unwrap();
            assert_eq!(r.solutions.len(), n, "scope {scope}");
            assert_eq!(r.is_unsatisfiable(), n == 0);
        }
    }

    #[test]
    fn solutions_satisfy_their_scope_and_are_sorted() {
        let rule = TildeRule::geometric();
        for scope in [5u8, 6] {
            let scope = BTreeSet::from([scope]);
            let r = reconstruct(&anchors(), &scope, &rule).unwrap();
            for s in &r.solutions {
                assert!(check_table_ii_blocks(s, &rule, &scope).unwrap().all_match());
                assert!(r.unknowns.iter().all(|u| s.projection(*u).is_some()));
            }
            assert_eq!(r, reconstruct(&anchors(), &scope, &rule).unwrap());
        }
    }

    #[test]
    fn limit_stops_early() {
        let r = reconstruct_limited(&anchors(), &BTreeSet::from([5]), &TildeRule::geometric(), Some(1)).unwrap();
        assert_eq!(r.solutions.len(), 1);
    }

    #[test]
    fn scope_errors() {
        let rule = TildeRule::geometric();
        assert!(reconstruct(&anchors(), &BTreeSet::new(), &rule).is_err());
        assert!(matches!(reconstruct(&anchors(), &BTreeSet::from([9]), &rule), Err(Error::InvalidTernary(9))));
    }

    #[test]
    fn block_one_needs_a_non_flip_tilde() {
        let maps = block_one_admissible_maps(&TildeRule::geometric());
        assert!(!maps.is_empty());
        assert!(maps.iter().all(|(m2, _)| *m2 == PlaneMap::Identity));
        let flips = search_tilde_rules(&anchors(), &BTreeSet::from([1]), MapFamily::Flips).unwrap();
        assert!(flips.rules.is_empty() && flips.satisfiable_prefix.is_empty());
        let any = search_tilde_rules(&anchors(), &BTreeSet::from([1]), MapFamily::Dihedral).unwrap();
        assert_eq!(any.satisfiable_prefix, vec![1]);
    }
}
