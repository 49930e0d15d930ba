use crate::error::{invalid, Result};
use crate::tile::PuncturedTile;
use crate::torus::{placement_cells, Placement, TorusShape};

/// A finite list of tile copies on a torus. When it is an exact cover of the
/// torus, repeating it periodically tiles all of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicTiling {
    pub k: usize,
    pub shape: TorusShape,
    pub placements: Vec<Placement>,
}

impl PeriodicTiling {
    /// Builds a tiling, reducing every origin into the fundamental domain.
    pub fn new(k: usize, shape: TorusShape, placements: Vec<Placement>) -> Result<Self> {
        PuncturedTile::new(k)?;
        let mut out = Vec::with_capacity(placements.len());
        for p in placements {
            if p.dim() != shape.dim() || p.axis >= shape.dim() {
                return invalid(format!(
                    "placement {p:?} does not fit a torus of dimension {}",
                    shape.dim()
                ));
            }
            out.push(p.normalised(&shape));
        }
        Ok(PeriodicTiling { k, shape, placements: out })
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    /// Sorts placements so that serialised output is reproducible.
    pub fn sort(&mut self) {
        self.placements.sort();
    }

    /// The same tiling viewed on a torus `factors[i]` times larger along each
    /// axis, with every placement replicated into each copy of the domain.
    pub fn inflate(&self, factors: &[usize]) -> Result<Self> {
        let shape = self.shape.inflate(factors)?;
        let copies = TorusShape::new(factors.to_vec())?;
        let mut placements = Vec::with_capacity(self.placements.len() * copies.cell_count());
        for c in 0..copies.cell_count() {
            let offset: Vec<i64> = copies
                .coords(c)
                .iter()
                .zip(self.shape.dims())
                .map(|(&q, &p)| q * p as i64)
                .collect();
            placements.extend(self.placements.iter().map(|p| p.clone().translated(&offset)));
        }
        PeriodicTiling::new(self.k, shape, placements)
    }
}

/// A torus cell covered more than once, with the ids of the placements
/// involved (indices into the tiling's placement list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub cell: Vec<i64>,
    pub multiplicity: usize,
    pub placements: Vec<usize>,
}

/// Outcome of [`verify_exact_cover`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoverReport {
    pub cell_count: usize,
    pub placement_count: usize,
    /// Cells with multiplicity 0, in linear order.
    pub uncovered: Vec<Vec<i64>>,
    /// Cells with multiplicity at least 2, in linear order.
    pub overlaps: Vec<Overlap>,
    /// Placements whose own cells collide under wrapping.
    pub degenerate: Vec<usize>,
    /// Placements that cannot be laid on the torus at all (bad axis or dimension).
    pub malformed: Vec<usize>,
}

impl CoverReport {
    pub fn is_ok(&self) -> bool {
        self.uncovered.is_empty()
            && self.overlaps.is_empty()
            && self.degenerate.is_empty()
            && self.malformed.is_empty()
    }
}

/// Checks that every torus cell is covered by exactly one placement.
pub fn verify_exact_cover(t: &PeriodicTiling) -> CoverReport {
    let shape = &t.shape;
    let mut report = CoverReport {
        cell_count: shape.cell_count(),
        placement_count: t.placements.len(),
        ..CoverReport::default()
    };
    let Ok(tile) = PuncturedTile::new(t.k) else {
        report.malformed = (0..t.placements.len()).collect();
        return report;
    };

    let mut multiplicity = vec![0u32; shape.cell_count()];
    let mut wrapped: Vec<Option<Vec<usize>>> = Vec::with_capacity(t.placements.len());
    for (id, p) in t.placements.iter().enumerate() {
        let cells = match placement_cells(p, shape, t.k) {
            Ok(cells) => cells,
            Err(crate::Error::DegeneratePlacement { .. }) => {
                report.degenerate.push(id);
                p.cells(tile).map(|c| shape.index(&c)).collect()
            }
            Err(_) => {
                report.malformed.push(id);
                wrapped.push(None);
                continue;
            }
        };
        for &c in &cells {
            multiplicity[c] += 1;
        }
        wrapped.push(Some(cells));
    }

    let mut owners: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    if multiplicity.iter().any(|&m| m > 1) {
        for (id, cells) in wrapped.iter().enumerate() {
            for &c in cells.iter().flatten() {
                if multiplicity[c] > 1 {
                    owners.entry(c).or_default().push(id);
                }
            }
        }
    }
    for (c, &m) in multiplicity.iter().enumerate() {
        if m == 0 {
            report.uncovered.push(shape.coords(c));
        }
    }
    report.overlaps = owners
        .into_iter()
        .map(|(c, mut ids)| {
            let multiplicity = ids.len();
            ids.dedup();
            Overlap { cell: shape.coords(c), multiplicity, placements: ids }
        })
        .collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_dim(k: usize, extent: usize, origins: &[i64]) -> PeriodicTiling {
        PeriodicTiling::new(
            k,
            TorusShape::new(vec![extent]).unwrap(),
            origins.iter().map(|&o| Placement::new(0, vec![o])).collect(),
        )
        .unwrap()
    }

    #[test]
    fn x_dot_x_tiles_a_four_cycle() {
        let report = verify_exact_cover(&one_dim(1, 4, &[0, 1]));
        assert!(report.is_ok(), "{report:?}");
    }

    #[test]
    fn gaps_and_overlaps_are_reported() {
        let report = verify_exact_cover(&one_dim(1, 4, &[0]));
        assert_eq!(report.uncovered, vec![vec![1], vec![3]]);
        assert!(report.overlaps.is_empty());

        let report = verify_exact_cover(&one_dim(1, 4, &[0, 1, 2]));
        assert!(report.uncovered.is_empty());
        assert_eq!(report.overlaps.len(), 2);
        assert_eq!(report.overlaps[0].placements, vec![0, 2]);
    }

    #[test]
    fn degenerate_placements_are_flagged() {
        let report = verify_exact_cover(&one_dim(3, 6, &[0]));
        assert_eq!(report.degenerate, vec![0]);
        assert!(!report.is_ok());
    }

    #[test]
    fn origins_are_normalised() {
        let t = one_dim(1, 4, &[-3, 5]);
        assert_eq!(t.placements[0].origin, vec![1]);
        assert_eq!(t.placements[1].origin, vec![1]);
    }

    #[test]
    fn inflation_preserves_cover() {
        let t = one_dim(1, 4, &[0, 1]).inflate(&[3]).unwrap();
        assert_eq!(t.shape.dims(), &[12]);
        assert_eq!(t.placements.len(), 6);
        assert!(verify_exact_cover(&t).is_ok());
    }
}
