//! Strings on the discrete torus `Z_{k+1}^2` and holes they leave behind.
//!
//! The first coordinate is horizontal and the second vertical: a *row* fixes
//! `y`, a *column* fixes `x`. A torus string is a row or column minus one
//! point; it lifts to a string of `Z^2` (a line with every `(k+1)`th point
//! removed), which in turn splits into copies of the tile.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::solver;
use crate::torus::{string_line_placements, Placement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: usize,
    pub y: usize,
}

impl Point2 {
    pub const fn new(x: usize, y: usize) -> Self {
        Point2 { x, y }
    }
}

impl From<(usize, usize)> for Point2 {
    fn from((x, y): (usize, usize)) -> Self {
        Point2 { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Row,
    Column,
}

/// A row or column of `Z_{k+1}^2` with one point removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringPlacement {
    pub direction: Direction,
    pub line_index: usize,
    pub removed: Point2,
}

impl StringPlacement {
    pub fn row(removed: Point2) -> Self {
        StringPlacement { direction: Direction::Row, line_index: removed.y, removed }
    }

    pub fn column(removed: Point2) -> Self {
        StringPlacement { direction: Direction::Column, line_index: removed.x, removed }
    }

    /// The `k` covered points.
    pub fn cells(&self, k: usize) -> Vec<Point2> {
        (0..=k)
            .map(|t| match self.direction {
                Direction::Row => Point2::new(t, self.line_index),
                Direction::Column => Point2::new(self.line_index, t),
            })
            .filter(|&p| p != self.removed)
            .collect()
    }

    fn check(&self, k: usize) -> Result<()> {
        let on_line = match self.direction {
            Direction::Row => self.removed.y == self.line_index,
            Direction::Column => self.removed.x == self.line_index,
        };
        if !on_line || self.removed.x > k || self.removed.y > k {
            return invalid(format!("{self:?} is not a string of Z_{}^2", k + 1));
        }
        Ok(())
    }
}

/// A candidate hole: a point set in `Z_{k+1}^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HoleSpec {
    pub k: usize,
    pub points: BTreeSet<Point2>,
}

impl HoleSpec {
    pub fn new(k: usize, points: impl IntoIterator<Item = Point2>) -> Result<Self> {
        if k < 1 {
            return invalid("k must be at least 1");
        }
        let points: BTreeSet<Point2> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.x > k || p.y > k) {
            return invalid(format!("{p:?} lies outside Z_{}^2", k + 1));
        }
        Ok(HoleSpec { k, points })
    }

    /// True when `strings` cover the complement of the hole exactly once.
    pub fn certify(&self, strings: &[StringPlacement]) -> bool {
        let side = self.k + 1;
        let mut seen = vec![0u32; side * side];
        for s in strings {
            if s.check(self.k).is_err() {
                return false;
            }
            for p in s.cells(self.k) {
                seen[p.y * side + p.x] += 1;
            }
        }
        (0..side).all(|y| {
            (0..side).all(|x| {
                let want = u32::from(!self.points.contains(&Point2::new(x, y)));
                seen[y * side + x] == want
            })
        })
    }

    fn one_per_column(&self) -> bool {
        self.points.len() == self.k + 1
            && (0..=self.k).all(|c| self.points.iter().filter(|p| p.x == c).count() == 1)
    }

    fn one_per_row(&self) -> bool {
        self.points.len() == self.k + 1
            && (0..=self.k).all(|r| self.points.iter().filter(|p| p.y == r).count() == 1)
    }
}

/// Tiles `Z_{k+1}^2 \ {x}` with `k+2` strings: every column minus its point
/// on the row of `x`, then that row minus `x`.
pub fn tile_torus_minus_point(k: usize, x: Point2) -> Result<Vec<StringPlacement>> {
    HoleSpec::new(k, [x])?;
    let mut out: Vec<StringPlacement> = (0..=k)
        .map(|n| StringPlacement::column(Point2::new(n, x.y)))
        .collect();
    out.push(StringPlacement::row(x));
    Ok(out)
}

/// Covers the complement of a hole that has one point in every column (or,
/// failing that, one point in every row) with one string per line.
pub fn sdr_hole_cover(k: usize, hole: &HoleSpec) -> Result<Vec<StringPlacement>> {
    if hole.k != k {
        return invalid(format!("hole is for k = {}, asked for k = {k}", hole.k));
    }
    if hole.one_per_column() {
        let mut out: Vec<_> = hole.points.iter().map(|&p| StringPlacement::column(p)).collect();
        out.sort_by_key(|s| s.line_index);
        Ok(out)
    } else if hole.one_per_row() {
        let mut out: Vec<_> = hole.points.iter().map(|&p| StringPlacement::row(p)).collect();
        out.sort_by_key(|s| s.line_index);
        Ok(out)
    } else {
        Err(Error::NotAnSdrHole)
    }
}

/// Decides whether the complement of `points` can be tiled by strings,
/// returning a witness tiling when it can.
pub fn is_hole(k: usize, points: &BTreeSet<Point2>) -> Result<Option<Vec<StringPlacement>>> {
    let hole = HoleSpec::new(k, points.iter().copied())?;
    let side = k + 1;
    if !(side * side - hole.points.len()).is_multiple_of(k) {
        return Ok(None);
    }
    let removed: Vec<Vec<i64>> = hole
        .points
        .iter()
        .map(|p| vec![p.x as i64, p.y as i64])
        .collect();
    let shape = crate::torus::TorusShape::new(vec![side, side])?;
    let inst = solver::build_string_instance(k, &shape)?.without_cells(&removed);
    match solver::solve(&inst, None) {
        solver::SolveOutcome::Found(sol) => Ok(solver::torus_strings(&inst, &sol)),
        _ => Ok(None),
    }
}

/// Lifts a torus string to tile copies on a `Z^2` torus of extents
/// `(extent_x, extent_y)`, both multiples of `2(k+1)`.
pub fn lift_string(
    k: usize,
    s: &StringPlacement,
    extent_x: usize,
    extent_y: usize,
) -> Result<Vec<Placement>> {
    s.check(k)?;
    let side = k + 1;
    if !extent_x.is_multiple_of(side) || !extent_y.is_multiple_of(side) {
        return invalid("lift extents must be multiples of k+1");
    }
    let mut out = Vec::new();
    match s.direction {
        Direction::Row => {
            for y in (s.line_index..extent_y).step_by(side) {
                out.extend(string_line_placements(0, &[y as i64], s.removed.x, extent_x, k)?);
            }
        }
        Direction::Column => {
            for x in (s.line_index..extent_x).step_by(side) {
                out.extend(string_line_placements(1, &[x as i64], s.removed.y, extent_y, k)?);
            }
        }
    }
    Ok(out)
}

/// Lifts every string, see [`lift_string`].
pub fn lift_strings(
    k: usize,
    strings: &[StringPlacement],
    extent_x: usize,
    extent_y: usize,
) -> Result<Vec<Placement>> {
    let mut out = Vec::new();
    for s in strings {
        out.extend(lift_string(k, s, extent_x, extent_y)?);
    }
    Ok(out)
}
