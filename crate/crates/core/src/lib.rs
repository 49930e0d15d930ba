//! Periodic tilings of `Z^3` and `Z^4` by the punctured interval
//! `{0, .., 2k} \ {k}`.
//!
//! Every construction is emitted as a concrete [`PeriodicTiling`]: a torus
//! shape and a list of axis-parallel tile copies. [`verify_exact_cover`]
//! checks that the copies cover each torus cell exactly once, which certifies
//! a tiling of the whole lattice by periodicity. The [`solver`] module is an
//! independent exact-cover search for small instances.

pub mod checks;
pub mod construct;
mod error;
pub mod schedule;
pub mod solver;
pub mod strings;
mod tile;
mod torus;
mod verify;

pub use construct::{construct_general, construct_mod8, construct_odd, mod8_membership, Construction};
pub use error::{Error, Result};
pub use schedule::{
    b_schedule_placements, rep_sequence, triple_placements, triple_slice, window, RepSequence,
    TripleSchedule,
};
pub use solver::{build_tile_instance, count_solutions, solve, ExactCoverInstance, Region, Solution, SolveOutcome};
pub use strings::{is_hole, sdr_hole_cover, tile_torus_minus_point, HoleSpec, Point2, StringPlacement};
pub use tile::{tile_cells, PuncturedTile};
pub use torus::{placement_cells, string_line_placements, Placement, TorusShape};
pub use verify::{verify_exact_cover, CoverReport, Overlap, PeriodicTiling};
