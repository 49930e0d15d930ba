//! Exact-cover search used as an independent oracle for small instances.
//!
//! Instances are built from tile copies (every axis, every origin) or from
//! strings on a torus. The search is Algorithm X on dancing links with a
//! minimum-remaining-candidates column rule, so results are deterministic.

mod dlx;

use std::collections::{BTreeSet, HashMap};

use crate::error::{invalid, Result};
use crate::strings::{Direction, Point2, StringPlacement};
use crate::tile::PuncturedTile;
use crate::torus::{placement_cells, Placement, TorusShape};

use self::dlx::{Dlx, Stop, Walk};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A finite region to be tiled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    /// No wraparound; copies must fit inside.
    Box(Vec<usize>),
    Torus(TorusShape),
}

impl Region {
    fn dims(&self) -> &[usize] {
        match self {
            Region::Box(d) => d,
            Region::Torus(s) => s.dims(),
        }
    }
}

/// What a piece stands for, so solutions can be mapped back.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PieceLabel {
    Tile(Placement),
    /// A line along `axis` through `fixed` (the other coordinates) with every
    /// point `= phase (mod k+1)` removed.
    String { axis: usize, fixed: Vec<i64>, phase: usize },
}

impl PieceLabel {
    /// Reads a string piece of a `Z_{k+1}^2` instance back as a torus string.
    pub fn as_torus_string(&self) -> Option<StringPlacement> {
        match self {
            PieceLabel::String { axis: 0, fixed, phase } if fixed.len() == 1 => {
                Some(StringPlacement::row(Point2::new(*phase, fixed[0] as usize)))
            }
            PieceLabel::String { axis: 1, fixed, phase } if fixed.len() == 1 => {
                Some(StringPlacement::column(Point2::new(fixed[0] as usize, *phase)))
            }
            _ => None,
        }
    }

    pub fn as_placement(&self) -> Option<&Placement> {
        match self {
            PieceLabel::Tile(p) => Some(p),
            PieceLabel::String { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCoverInstance {
    pub universe: Vec<Vec<i64>>,
    /// Each piece as sorted indices into `universe`.
    pub pieces: Vec<Vec<usize>>,
    pub labels: Vec<PieceLabel>,
}

impl ExactCoverInstance {
    pub fn new(
        universe: Vec<Vec<i64>>,
        pieces: Vec<Vec<usize>>,
        labels: Vec<PieceLabel>,
    ) -> Result<Self> {
        if pieces.len() != labels.len() {
            return invalid("every piece needs a label");
        }
        for (i, piece) in pieces.iter().enumerate() {
            if piece.is_empty() {
                return invalid(format!("piece {i} is empty"));
            }
            if piece.iter().any(|&c| c >= universe.len()) {
                return invalid(format!("piece {i} leaves the universe"));
            }
        }
        let pieces = pieces
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(ExactCoverInstance { universe, pieces, labels })
    }

    /// Drops `cells` from the universe together with every piece touching them.
    pub fn without_cells(&self, cells: &[Vec<i64>]) -> Self {
        let drop: BTreeSet<&Vec<i64>> = cells.iter().collect();
        let mut remap = vec![usize::MAX; self.universe.len()];
        let mut universe = Vec::new();
        for (i, c) in self.universe.iter().enumerate() {
            if !drop.contains(c) {
                remap[i] = universe.len();
                universe.push(c.clone());
            }
        }
        let mut pieces = Vec::new();
        let mut labels = Vec::new();
        for (p, l) in self.pieces.iter().zip(&self.labels) {
            if p.iter().all(|&c| remap[c] != usize::MAX) {
                pieces.push(p.iter().map(|&c| remap[c]).collect());
                labels.push(l.clone());
            }
        }
        ExactCoverInstance { universe, pieces, labels }
    }

    /// Non-fatal observations that rule out any cover: no pieces at all, or a
    /// universe size that is not a multiple of the gcd of the piece sizes.
    pub fn warnings(&self) -> Vec<String> {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        let cells = self.universe.len();
        let g = self.pieces.iter().fold(0, |g, p| gcd(g, p.len()));
        if cells == 0 {
            Vec::new()
        } else if g == 0 {
            vec![format!("no piece fits the {cells}-cell region; no cover exists")]
        } else if !cells.is_multiple_of(g) {
            vec![format!("region has {cells} cells, not a multiple of the piece size {g}; no cover exists")]
        } else {
            Vec::new()
        }
    }

    /// Index of the piece with this label, if any.
    pub fn find(&self, label: &PieceLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// True when the selected pieces partition the universe.
    pub fn is_solution(&self, sol: &Solution) -> bool {
        let mut seen = vec![false; self.universe.len()];
        for &i in &sol.pieces {
            let Some(piece) = self.pieces.get(i) else { return false };
            for &c in piece {
                if std::mem::replace(&mut seen[c], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Selected piece indices, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub pieces: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(Solution),
    /// The whole search space was exhausted: no exact cover exists.
    NoSolution,
    /// The node budget ran out first; nothing is proved.
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("node budget of {budget} exhausted after {count} solutions")]
pub struct BudgetExhausted {
    pub budget: u64,
    pub count: u64,
}

fn all_cells(dims: &[usize]) -> Vec<Vec<i64>> {
    let shape = TorusShape::new(dims.to_vec()).expect("non-empty region");
    (0..shape.cell_count()).map(|i| shape.coords(i)).collect()
}

/// One piece per (axis, origin) whose copy fits the region: inside a box, or
/// non-degenerate after wrapping on a torus.
pub fn build_tile_instance(k: usize, region: &Region) -> Result<ExactCoverInstance> {
    let tile = PuncturedTile::new(k)?;
    let dims = region.dims();
    if dims.is_empty() || dims.contains(&0) {
        return invalid(format!("region {dims:?} is empty"));
    }
    let universe = all_cells(dims);
    let index_shape = TorusShape::new(dims.to_vec())?;
    let mut pieces = Vec::new();
    let mut labels = Vec::new();
    for axis in 0..dims.len() {
        for origin in &universe {
            let p = Placement::new(axis, origin.clone());
            let cells = match region {
                Region::Box(_) => {
                    if origin[axis] as usize + tile.span() > dims[axis] {
                        continue;
                    }
                    p.cells(tile).map(|c| index_shape.index(&c)).collect()
                }
                Region::Torus(shape) => match placement_cells(&p, shape, k) {
                    Ok(cells) => cells,
                    Err(_) => continue,
                },
            };
            pieces.push(cells);
            labels.push(PieceLabel::Tile(p));
        }
    }
    ExactCoverInstance::new(universe, pieces, labels)
}

/// String pieces on a torus: for every axis whose extent is a multiple of
/// `k+1`, every line along it minus the points of one residue class mod `k+1`.
/// On `Z_{k+1}^d` these are exactly the lines with one point removed.
pub fn build_string_instance(k: usize, shape: &TorusShape) -> Result<ExactCoverInstance> {
    PuncturedTile::new(k)?;
    let side = k + 1;
    let dims = shape.dims();
    let universe = all_cells(dims);
    let mut pieces = Vec::new();
    let mut labels = Vec::new();
    for axis in 0..dims.len() {
        if !dims[axis].is_multiple_of(side) {
            continue;
        }
        let mut others = dims.to_vec();
        others.remove(axis);
        let lines: Vec<Vec<i64>> =
            if others.is_empty() { vec![vec![]] } else { all_cells(&others) };
        for fixed in lines {
            for phase in 0..side {
                let cells = (0..dims[axis])
                    .filter(|t| t % side != phase)
                    .map(|t| {
                        let mut c = fixed.clone();
                        c.insert(axis, t as i64);
                        shape.index(&c)
                    })
                    .collect();
                pieces.push(cells);
                labels.push(PieceLabel::String { axis, fixed: fixed.clone(), phase });
            }
        }
    }
    ExactCoverInstance::new(universe, pieces, labels)
}

/// Configurable search over one instance.
pub struct Search<'a> {
    inst: &'a ExactCoverInstance,
    budget: u64,
    progress: Option<&'a mut dyn FnMut(u64)>,
}

impl<'a> Search<'a> {
    pub fn new(inst: &'a ExactCoverInstance) -> Self {
        Search { inst, budget: DEFAULT_NODE_BUDGET, progress: None }
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// Called with the running node count every few million nodes.
    pub fn progress(mut self, cb: &'a mut dyn FnMut(u64)) -> Self {
        self.progress = Some(cb);
        self
    }

    /// Pieces with identical cell sets collapse onto the first of them.
    fn matrix(&self) -> (Dlx, Vec<usize>) {
        let mut seen: HashMap<&[usize], ()> = HashMap::new();
        let mut rows = Vec::new();
        let mut representative = Vec::new();
        for (i, p) in self.inst.pieces.iter().enumerate() {
            if seen.insert(p.as_slice(), ()).is_none() {
                rows.push(p.clone());
                representative.push(i);
            }
        }
        (Dlx::new(self.inst.universe.len(), &rows), representative)
    }

    pub fn first(self) -> SolveOutcome {
        let (mut dlx, rep) = self.matrix();
        debug_assert_eq!(dlx.columns(), self.inst.universe.len());
        let mut found = None;
        let mut walk = Walk {
            budget: self.budget,
            nodes: 0,
            progress: self.progress,
            on_solution: |rows: &[usize]| {
                let mut pieces: Vec<usize> = rows.iter().map(|&r| rep[r]).collect();
                pieces.sort_unstable();
                found = Some(Solution { pieces });
                false
            },
        };
        let stop = walk.run(&mut dlx);
        match (found, stop) {
            (Some(sol), _) => SolveOutcome::Found(sol),
            (None, Err(Stop::Budget)) => SolveOutcome::BudgetExhausted,
            (None, _) => SolveOutcome::NoSolution,
        }
    }

    /// Number of distinct exact covers, stopping once `cap` are found.
    pub fn count(self, cap: u64) -> std::result::Result<u64, BudgetExhausted> {
        let budget = self.budget;
        let (mut dlx, _) = self.matrix();
        let mut count = 0u64;
        let mut walk = Walk {
            budget,
            nodes: 0,
            progress: self.progress,
            on_solution: |_: &[usize]| {
                count += 1;
                count < cap
            },
        };
        let stop = walk.run(&mut dlx);
        match stop {
            Err(Stop::Budget) => Err(BudgetExhausted { budget, count }),
            _ => Ok(count),
        }
    }
}

/// First exact cover within `budget` search nodes.
pub fn solve(inst: &ExactCoverInstance, budget: Option<u64>) -> SolveOutcome {
    Search::new(inst).budget(budget.unwrap_or(DEFAULT_NODE_BUDGET)).first()
}

/// Number of exact covers, truncated at `cap` (which must be at least 1).
/// The search runs without a node budget.
pub fn count_solutions(inst: &ExactCoverInstance, cap: u64) -> u64 {
    Search::new(inst)
        .budget(u64::MAX)
        .count(cap.max(1))
        .expect("unbounded search cannot exhaust its budget")
}

/// Converts a solved string instance on `Z_{k+1}^2` back to torus strings.
pub fn torus_strings(inst: &ExactCoverInstance, sol: &Solution) -> Option<Vec<StringPlacement>> {
    let mut out: Vec<StringPlacement> = sol
        .pieces
        .iter()
        .map(|&i| inst.labels[i].as_torus_string())
        .collect::<Option<_>>()?;
    out.sort_by_key(|s| (s.direction == Direction::Row, s.line_index));
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(dims: &[usize]) -> Region {
        Region::Torus(TorusShape::new(dims.to_vec()).unwrap())
    }

    #[test]
    fn instance_sizes() {
        let inst = build_tile_instance(1, &torus(&[4])).unwrap();
        assert_eq!(inst.universe.len(), 4);
        assert_eq!(inst.pieces.len(), 4);
        let inst = build_tile_instance(2, &torus(&[6, 6])).unwrap();
        assert_eq!(inst.universe.len(), 36);
        assert_eq!(inst.pieces.len(), 72);
        let inst = build_tile_instance(3, &Region::Box(vec![6])).unwrap();
        assert!(inst.pieces.is_empty());
        assert_eq!(solve(&inst, None), SolveOutcome::NoSolution);
    }

    #[test]
    fn warns_on_indivisible_regions() {
        let inst = build_tile_instance(2, &torus(&[5, 5])).unwrap();
        assert_eq!(inst.warnings().len(), 1);
        assert!(build_tile_instance(2, &torus(&[6, 6])).unwrap().warnings().is_empty());
        assert_eq!(build_tile_instance(3, &Region::Box(vec![6])).unwrap().warnings().len(), 1);
        let strings = build_string_instance(3, &TorusShape::new(vec![4, 4]).unwrap()).unwrap();
        assert_eq!(strings.warnings().len(), 1);
        assert!(strings.without_cells(&[vec![0, 0]]).warnings().is_empty());
    }

    #[test]
    fn box_pieces_do_not_wrap() {
        let inst = build_tile_instance(1, &Region::Box(vec![4])).unwrap();
        let origins: Vec<_> = inst.labels.iter().map(|l| l.as_placement().unwrap().origin[0]).collect();
        assert_eq!(origins, vec![0, 1]);
        assert!(matches!(solve(&inst, None), SolveOutcome::Found(_)));
    }

    #[test]
    fn solves_k1_cycle() {
        let inst = build_tile_instance(1, &torus(&[4])).unwrap();
        let SolveOutcome::Found(sol) = solve(&inst, None) else { panic!("expected a cover") };
        assert_eq!(sol.pieces.len(), 2);
        assert!(inst.is_solution(&sol));
        // origins 0 and 2 (and 1 and 3) are the same cell set: two distinct covers
        assert_eq!(count_solutions(&inst, 100), 1);
    }

    #[test]
    fn empty_universe_has_one_cover() {
        let inst = ExactCoverInstance::new(vec![], vec![], vec![]).unwrap();
        assert_eq!(count_solutions(&inst, 10), 1);
        assert_eq!(solve(&inst, None), SolveOutcome::Found(Solution { pieces: vec![] }));
    }

    #[test]
    fn string_instances() {
        let shape = TorusShape::new(vec![4, 4]).unwrap();
        let full = build_string_instance(3, &shape).unwrap();
        assert_eq!(full.pieces.len(), 32);
        assert_eq!(count_solutions(&full, 10), 0);

        let punctured = full.without_cells(&[vec![1, 2]]);
        let SolveOutcome::Found(sol) = solve(&punctured, None) else { panic!("expected a cover") };
        assert_eq!(sol.pieces.len(), 5);
        let strings = torus_strings(&punctured, &sol).unwrap();
        let hole = crate::HoleSpec::new(3, [Point2::new(1, 2)]).unwrap();
        assert!(hole.certify(&strings));
    }

    #[test]
    fn budget_is_reported_distinctly() {
        let inst = build_tile_instance(2, &torus(&[8, 8])).unwrap();
        assert_eq!(Search::new(&inst).budget(1).first(), SolveOutcome::BudgetExhausted);
        assert!(Search::new(&inst).budget(1).count(5).is_err());
    }

    #[test]
    fn deterministic() {
        let inst = build_tile_instance(2, &torus(&[8, 8])).unwrap();
        assert_eq!(solve(&inst, None), solve(&inst, None));
    }

    #[test]
    fn rejects_malformed_instances() {
        assert!(ExactCoverInstance::new(vec![vec![0]], vec![vec![]], vec![PieceLabel::Tile(Placement::new(0, vec![0]))]).is_err());
        assert!(ExactCoverInstance::new(vec![vec![0]], vec![vec![3]], vec![PieceLabel::Tile(Placement::new(0, vec![0]))]).is_err());
    }
}
