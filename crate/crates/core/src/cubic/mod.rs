//! Cubic (2×2×2) sigma-matrices: projections, 180° turns, the ternary
//! distribution, the printed product identities, and the search that
//! reconstructs projections and cubes from them.

mod cube;
mod gint;
mod lift;
mod solver;
mod table2;

pub use cube::{CubicMatrix, PlaneMap, ProjectionAxis, TildeRule, TurnAxis};
pub use lift::{beam_cube_count, lift_counts, lift_projections, lift_to_cubes, CubeLift, LiftOutcome};
pub use solver::{
    block_one_admissible_maps, candidate_matrices, reconstruct, reconstruct_limited, search_tilde_rules, MapFamily, Reconstruction, RuleSearch,
    SlotChoice,
};
pub use table2::{
    check_identity, check_table_ii, check_table_ii_blocks, definition_example, referenced, sigma_mul,
    ternary_distribution, validate_scope, Factor, IdentityCheck, SigmaAssignment, SigmaRef, TableIICheck,
    TableIIIdentity, DISTRIBUTION, TABLE_II,
};

/// Project then sum, equivalently `project(m, axis)`.
pub fn project(m: &CubicMatrix, axis: ProjectionAxis) -> crate::matrix2::Matrix2 {
    m.project(axis)
}

pub fn rotate180(m: &CubicMatrix, axis: TurnAxis) -> CubicMatrix {
    m.rotate180(axis)
}
