//! End-to-end tilings, each emitted as an explicit placement list on a torus
//! and checked by the exact-cover verifier before it is returned.

mod general;
mod mod8;
mod odd;

use std::fmt;
use std::str::FromStr;

pub use self::general::{construct_general, general_layer_hole, GeneralCaseSets};
pub use self::mod8::{construct_mod8, mod8_membership, Mod8Set, Mod8Sets};
pub use self::odd::{construct_odd, odd_case_hole, odd_case_triples};

use crate::error::{invalid, Error, Result};
use crate::torus::TorusShape;
use crate::verify::{verify_exact_cover, PeriodicTiling};

/// The three constructions, named by the lattice they tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `Z^3`, odd `k >= 3`.
    OddZ3,
    /// `Z^4`, any `k >= 3`.
    GeneralZ4,
    /// `Z^3`, `k = 4 (mod 8)`.
    Mod8Z3,
}

impl Construction {
    pub const ALL: [Construction; 3] =
        [Construction::OddZ3, Construction::GeneralZ4, Construction::Mod8Z3];

    pub fn name(self) -> &'static str {
        match self {
            Construction::OddZ3 => "z3-odd",
            Construction::GeneralZ4 => "z4",
            Construction::Mod8Z3 => "z3-mod8",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Construction::GeneralZ4 => 4,
            _ => 3,
        }
    }

    pub fn admits(self, k: usize) -> bool {
        match self {
            Construction::OddZ3 => k >= 3 && k % 2 == 1,
            Construction::GeneralZ4 => k >= 3,
            Construction::Mod8Z3 => k % 8 == 4,
        }
    }

    /// Torus on which the construction is certified.
    pub fn shape(self, k: usize) -> Result<TorusShape> {
        let side = k + 1;
        match self {
            Construction::OddZ3 => TorusShape::new(vec![2 * side, 2 * side, 3 * k]),
            Construction::GeneralZ4 => TorusShape::new(vec![2 * side, 2 * side, 6 * k, 3 * k]),
            Construction::Mod8Z3 => TorusShape::new(vec![8 * side, 8 * side, 3 * k]),
        }
    }

    pub fn build(self, k: usize) -> Result<PeriodicTiling> {
        match self {
            Construction::OddZ3 => construct_odd(k),
            Construction::GeneralZ4 => construct_general(k),
            Construction::Mod8Z3 => construct_mod8(k),
        }
    }

    /// Lowest-dimensional construction admitting `k`, if any.
    pub fn auto(k: usize) -> Option<Construction> {
        [Construction::OddZ3, Construction::Mod8Z3, Construction::GeneralZ4]
            .into_iter()
            .find(|c| c.admits(k))
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown construction {s:?}")))
    }
}

/// Translates `(x, y)` by every multiple of `side` inside a square of
/// `copies * side`.
fn lifts(side: usize, copies: usize) -> Vec<[i64; 2]> {
    let mut out = Vec::with_capacity(copies * copies);
    for a in 0..copies {
        for b in 0..copies {
            out.push([(a * side) as i64, (b * side) as i64]);
        }
    }
    out
}

fn finish(tiling: PeriodicTiling) -> Result<PeriodicTiling> {
    let mut tiling = tiling;
    tiling.sort();
    let report = verify_exact_cover(&tiling);
    if !report.is_ok() {
        return Err(Error::NotACover(format!(
            "{} uncovered and {} overlapping cells on {}",
            report.uncovered.len(),
            report.overlaps.len(),
            tiling.shape
        )));
    }
    Ok(tiling)
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        invalid(msg())
    }
}
