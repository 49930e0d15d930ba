use crate::error::{invalid, Result};

/// The punctured interval: `2k+1` consecutive cells with the centre removed.
///
/// Offsets are relative to the first cell, so a copy beginning at `p` covers
/// `p, .., p+2k` except `p+k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PuncturedTile {
    k: usize,
}

impl PuncturedTile {
    pub fn new(k: usize) -> Result<Self> {
        if k < 1 {
            return invalid("k must be at least 1");
        }
        Ok(PuncturedTile { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of cells, always `2k`.
    pub fn len(&self) -> usize {
        2 * self.k
    }

    /// Never true; present for symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distance from the first to the last cell plus one (`2k+1`).
    pub fn span(&self) -> usize {
        2 * self.k + 1
    }

    pub fn offsets(self) -> impl Iterator<Item = usize> {
        let k = self.k;
        (0..=2 * k).filter(move |&t| t != k)
    }
}

/// Offsets `{0, .., 2k} \ {k}` in increasing order.
pub fn tile_cells(k: usize) -> Result<Vec<usize>> {
    Ok(PuncturedTile::new(k)?.offsets().collect())
}
