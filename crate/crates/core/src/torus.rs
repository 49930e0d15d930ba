use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::tile::PuncturedTile;

/// Extents of a finite quotient `Z_{p_0} x .. x Z_{p_{d-1}}`.
///
/// Cells are linearised row-major: the last axis varies fastest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusShape {
    dims: Vec<usize>,
}

impl TorusShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return invalid("torus must have at least one axis");
        }
        if dims.contains(&0) {
            return invalid(format!("torus extents must be positive, got {dims:?}"));
        }
        Ok(TorusShape { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn extent(&self, axis: usize) -> usize {
        self.dims[axis]
    }

    pub fn cell_count(&self) -> usize {
        self.dims.iter().product()
    }

    /// Linear index of `coords`, reducing every coordinate into `[0, p_i)`.
    pub fn index(&self, coords: &[i64]) -> usize {
        debug_assert_eq!(coords.len(), self.dims.len());
        coords
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&c, &p)| acc * p + c.rem_euclid(p as i64) as usize)
    }

    pub fn coords(&self, mut index: usize) -> Vec<i64> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &p) in out.iter_mut().zip(&self.dims).rev() {
            *slot = (index % p) as i64;
            index /= p;
        }
        out
    }

    pub fn normalise(&self, coords: &mut [i64]) {
        for (c, &p) in coords.iter_mut().zip(&self.dims) {
            *c = c.rem_euclid(p as i64);
        }
    }

    /// Shape with every extent multiplied by the matching factor.
    pub fn inflate(&self, factors: &[usize]) -> Result<Self> {
        if factors.len() != self.dims.len() {
            return invalid("inflation factors must match the torus dimension");
        }
        TorusShape::new(self.dims.iter().zip(factors).map(|(p, f)| p * f).collect())
    }
}

impl fmt::Display for TorusShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// One axis-parallel copy of the tile: it covers `origin + t * e_axis` for
/// every tile offset `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    pub axis: usize,
    pub origin: Vec<i64>,
}

impl Placement {
    pub fn new(axis: usize, origin: Vec<i64>) -> Self {
        Placement { axis, origin }
    }

    pub fn dim(&self) -> usize {
        self.origin.len()
    }

    /// Cells of the copy in `Z^d`, before any wrapping.
    pub fn cells(&self, tile: PuncturedTile) -> impl Iterator<Item = Vec<i64>> + '_ {
        tile.offsets().map(move |t| {
            let mut c = self.origin.clone();
            c[self.axis] += t as i64;
            c
        })
    }

    /// Inserts a new coordinate at position `pos`, lifting the placement into
    /// one more dimension. The tile axis shifts up when it sits at or after `pos`.
    pub fn insert_axis(mut self, pos: usize, value: i64) -> Self {
        self.origin.insert(pos, value);
        if self.axis >= pos {
            self.axis += 1;
        }
        self
    }

    pub fn translated(mut self, offset: &[i64]) -> Self {
        for (c, o) in self.origin.iter_mut().zip(offset) {
            *c += o;
        }
        self
    }

    pub fn normalised(mut self, shape: &TorusShape) -> Self {
        shape.normalise(&mut self.origin);
        self
    }

    pub fn covers_unwrapped(&self, tile: PuncturedTile, point: &[i64]) -> bool {
        if point.len() != self.origin.len() {
            return false;
        }
        for (i, (&p, &o)) in point.iter().zip(&self.origin).enumerate() {
            if i != self.axis && p != o {
                return false;
            }
        }
        let t = point[self.axis] - self.origin[self.axis];
        (0..=2 * tile.k() as i64).contains(&t) && t != tile.k() as i64
    }
}

/// Linear indices of the `2k` wrapped cells of `p` on `shape`, in tile order.
///
/// Fails when two offsets land on the same torus cell, which happens when
/// the torus is too short along the tile axis.
pub fn placement_cells(p: &Placement, shape: &TorusShape, k: usize) -> Result<Vec<usize>> {
    let tile = PuncturedTile::new(k)?;
    if p.dim() != shape.dim() {
        return invalid(format!(
            "placement has dimension {}, torus has dimension {}",
            p.dim(),
            shape.dim()
        ));
    }
    if p.axis >= shape.dim() {
        return invalid(format!("axis {} out of range for dimension {}", p.axis, shape.dim()));
    }
    let cells: Vec<usize> = p.cells(tile).map(|c| shape.index(&c)).collect();
    let mut sorted = cells.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DegeneratePlacement {
            axis: p.axis,
            origin: p.origin.clone(),
            extent: shape.extent(p.axis),
        });
    }
    Ok(cells)
}

/// Decomposes one string (a line with every `(k+1)`th point removed, the
/// removed points being `= r (mod k+1)`) of length `extent` into copies of the
/// tile.
///
/// `fixed` holds the coordinates of the line on the other axes; the line
/// coordinate is inserted at position `axis`. Copies start at
/// `r + 1 + 2j(k+1)` so each puncture lands on a removed point.
pub fn string_line_placements(
    axis: usize,
    fixed: &[i64],
    removal_phase: usize,
    extent: usize,
    k: usize,
) -> Result<Vec<Placement>> {
    PuncturedTile::new(k)?;
    let period = 2 * (k + 1);
    if extent == 0 || !extent.is_multiple_of(period) {
        return invalid(format!(
            "line length {extent} is not a positive multiple of 2(k+1) = {period}"
        ));
    }
    if removal_phase > k {
        return invalid(format!("removal phase {removal_phase} must be below k+1 = {}", k + 1));
    }
    if axis > fixed.len() {
        return invalid(format!("axis {axis} out of range for a line in dimension {}", fixed.len() + 1));
    }
    Ok((0..extent / period)
        .map(|j| {
            let start = ((removal_phase + 1 + j * period) % extent) as i64;
            let mut origin = fixed.to_vec();
            origin.insert(axis, start);
            Placement::new(axis, origin)
        })
        .collect())
}
