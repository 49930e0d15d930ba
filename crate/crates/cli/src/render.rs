//! ASCII rendering of one 2-D slice of a tiling.

use punctile_core::{placement_cells, TorusShape};
use thiserror::Error;

use crate::document::TilingDocument;

const GLYPHS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("a {dim}-dimensional document needs {need} fixed axes, got {got}")]
    FixedAxes { dim: usize, need: usize, got: usize },
    #[error("axis {axis} is out of range or fixed twice")]
    BadAxis { axis: usize },
    #[error("slice index {index} is out of range for axis {axis} (period {period})")]
    SliceOutOfRange { axis: usize, index: usize, period: usize },
    #[error("invalid document: {0}")]
    Document(String),
}

/// Glyph for placement `id`; the alphabet repeats every 62 placements.
pub fn glyph(id: usize) -> char {
    GLYPHS[id % GLYPHS.len()] as char
}

/// Draws the slice with every axis in `fixed` held at its index. The two
/// remaining axes run left to right (lower axis) and top to bottom (higher
/// axis). Uncovered cells are `.` and cells covered more than once are `#`.
pub fn render_slice(doc: &TilingDocument, fixed: &[(usize, usize)]) -> Result<String, RenderError> {
    let dim = doc.dim();
    if dim < 2 || fixed.len() != dim - 2 {
        return Err(RenderError::FixedAxes { dim, need: dim.saturating_sub(2), got: fixed.len() });
    }
    let mut pinned = vec![None; dim];
    for &(axis, index) in fixed {
        if axis >= dim || pinned[axis].is_some() {
            return Err(RenderError::BadAxis { axis });
        }
        if index >= doc.periods[axis] {
            return Err(RenderError::SliceOutOfRange { axis, index, period: doc.periods[axis] });
        }
        pinned[axis] = Some(index as i64);
    }
    let free: Vec<usize> = (0..dim).filter(|&a| pinned[a].is_none()).collect();
    let (u, v) = (free[0], free[1]);
    let (width, height) = (doc.periods[u], doc.periods[v]);

    let shape = TorusShape::new(doc.periods.clone()).map_err(|e| RenderError::Document(e.to_string()))?;
    let mut grid = vec![vec!['.'; width]; height];
    for (id, p) in doc.placements.iter().enumerate() {
        let Ok(cells) = placement_cells(p, &shape, doc.k) else { continue };
        for c in cells {
            let coords = shape.coords(c);
            if pinned.iter().zip(&coords).all(|(pin, &x)| pin.is_none_or(|q| q == x)) {
                let slot = &mut grid[coords[v] as usize][coords[u] as usize];
                *slot = if *slot == '.' { glyph(id) } else { '#' };
            }
        }
    }
    let mut out = String::with_capacity((width + 1) * height);
    for row in grid {
        out.extend(row);
        out.push('\n');
    }
    Ok(out)
}
