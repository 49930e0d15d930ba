//! Command implementations behind the `punctile` binary.
//!
//! Every command returns its exit status and text instead of printing, so the
//! binary stays a thin shell and tests can drive commands directly.

pub mod document;
pub mod render;

use std::fmt::Write as _;
use std::str::FromStr;

use punctile_core::checks;
use punctile_core::solver::{build_string_instance, torus_strings, Search, DEFAULT_NODE_BUDGET};
use punctile_core::{
    build_tile_instance, verify_exact_cover, Construction, CoverReport, PeriodicTiling, Region,
    SolveOutcome, TorusShape,
};
use thiserror::Error;

use crate::document::{ParseError, TilingDocument};
use crate::render::RenderError;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// Verification failed or the instance has no solution.
    Failed = 1,
    Usage = 2,
    BudgetExhausted = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Render(#[from] RenderError),
    #[error("{0}")]
    Core(#[from] punctile_core::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Core(_) => Exit::Failed,
            _ => Exit::Usage,
        }
    }
}

/// `--target` of the construct command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Auto,
    Named(Construction),
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Target::Auto);
        }
        s.parse().map(Target::Named).map_err(|_| {
            format!("unknown target {s:?}; expected one of auto, z3-odd, z4, z3-mod8")
        })
    }
}

fn admissible_targets(k: usize) -> String {
    let mut names = vec!["auto"];
    names.extend(Construction::ALL.iter().filter(|c| c.admits(k)).map(|c| c.name()));
    names.join(", ")
}

/// Largest torus side tried when a tiling for `k < 3` is found by search.
pub const SOLVER_MAX_SIDE: usize = 12;

/// Smallest cube torus (dimension 1, then 2) that the solver can tile.
pub fn solver_tiling(k: usize, max_side: usize) -> Result<Option<PeriodicTiling>, CliError> {
    for dim in 1..=2 {
        for side in 1..=max_side {
            let shape = TorusShape::new(vec![side; dim])?;
            if shape.cell_count() % (2 * k) != 0 {
                continue;
            }
            let inst = build_tile_instance(k, &Region::Torus(shape.clone()))?;
            if let SolveOutcome::Found(sol) = Search::new(&inst).budget(DEFAULT_NODE_BUDGET).first() {
                let placements = sol
                    .pieces
                    .iter()
                    .filter_map(|&i| inst.labels[i].as_placement().cloned())
                    .collect();
                let mut t = PeriodicTiling::new(k, shape, placements)?;
                t.sort();
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// Builds the tiling for `k` and `target`, then re-verifies it.
pub fn construct(k: usize, target: Target) -> Result<(TilingDocument, CoverReport), CliError> {
    if k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let (tiling, name) = match target {
        Target::Named(c) if !c.admits(k) => {
            return Err(CliError::Usage(format!(
                "target {c} does not apply to k = {k}; admissible targets: {}",
                admissible_targets(k)
            )))
        }
        Target::Named(c) => (c.build(k)?, c.name()),
        Target::Auto => match Construction::auto(k) {
            Some(c) => (c.build(k)?, c.name()),
            None => match solver_tiling(k, SOLVER_MAX_SIDE)? {
                Some(t) => (t, "solver"),
                None => {
                    return Err(CliError::Core(punctile_core::Error::NotACover(format!(
                        "no torus of side <= {SOLVER_MAX_SIDE} admits a cover for k = {k}"
                    ))))
                }
            },
        },
    };
    let report = verify_exact_cover(&tiling);
    Ok((TilingDocument::from_tiling(&tiling, Some(name)), report))
}

/// Human-readable verification report.
pub fn describe_report(doc: &TilingDocument, report: &CoverReport) -> String {
    let shape = doc.periods.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("x");
    let fmt_cell = |c: &[i64]| {
        format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    };
    let mut out = String::new();
    if report.is_ok() {
        writeln!(
            out,
            "ok: {} placements exactly cover {} cells of torus {shape} (k = {})",
            report.placement_count, report.cell_count, doc.k
        )
        .unwrap();
        return out;
    }
    writeln!(
        out,
        "FAILED: {} uncovered, {} overlapping cells on torus {shape} ({} placements, k = {})",
        report.uncovered.len(),
        report.overlaps.len(),
        report.placement_count,
        doc.k
    )
    .unwrap();
    for c in &report.uncovered {
        writeln!(out, "uncovered {}", fmt_cell(c)).unwrap();
    }
    for o in &report.overlaps {
        let ids: Vec<String> = o.placements.iter().map(|i| i.to_string()).collect();
        writeln!(out, "overlap {} x{} placements {}", fmt_cell(&o.cell), o.multiplicity, ids.join(",")).unwrap();
    }
    for id in &report.degenerate {
        writeln!(out, "degenerate placement {id}").unwrap();
    }
    for id in &report.malformed {
        writeln!(out, "malformed placement {id}").unwrap();
    }
    out
}

/// Parses and verifies a document.
pub fn verify_document(text: &str) -> Result<(Exit, CoverReport, String), CliError> {
    let doc = TilingDocument::parse(text)?;
    let report = verify_exact_cover(&doc.to_tiling()?);
    let exit = if report.is_ok() { Exit::Ok } else { Exit::Failed };
    let text = describe_report(&doc, &report);
    Ok((exit, report, text))
}

/// Renders one slice of a document; see [`render::render_slice`].
pub fn render_document(text: &str, fixed: &[(usize, usize)]) -> Result<String, CliError> {
    let doc = TilingDocument::parse(text)?;
    Ok(render::render_slice(&doc, fixed)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    Tile,
    String,
}

impl FromStr for PieceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tile" => Ok(PieceKind::Tile),
            "string" => Ok(PieceKind::String),
            _ => Err(format!("unknown piece kind {s:?}; expected tile or string")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveRequest {
    pub k: usize,
    pub region: Region,
    pub pieces: PieceKind,
    pub removed: Vec<Vec<i64>>,
    pub budget: u64,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub exit: Exit,
    pub text: String,
    /// Set for tile covers of a whole torus.
    pub document: Option<TilingDocument>,
}

/// Parses `6x6` or `4` into extents.
pub fn parse_dims(s: &str) -> Result<Vec<usize>, String> {
    s.split('x')
        .map(|w| match w.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("invalid extent {w:?} in {s:?}")),
            Ok(n) => Ok(n),
        })
        .collect()
}

/// Parses `1,2` into a cell.
pub fn parse_cell(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|w| w.trim().parse::<i64>().map_err(|e| format!("invalid coordinate {w:?}: {e}")))
        .collect()
}

pub fn solve(req: &SolveRequest) -> Result<SolveResult, CliError> {
    let dims = match &req.region {
        Region::Box(d) => d.clone(),
        Region::Torus(s) => s.dims().to_vec(),
    };
    if let Some(c) = req.removed.iter().find(|c| {
        c.len() != dims.len() || c.iter().zip(&dims).any(|(&x, &p)| x < 0 || x as usize >= p)
    }) {
        return Err(CliError::Usage(format!("removed cell {c:?} lies outside the region")));
    }
    let inst = match (req.pieces, &req.region) {
        (PieceKind::Tile, region) => build_tile_instance(req.k, region)?,
        (PieceKind::String, Region::Torus(shape)) => build_string_instance(req.k, shape)?,
        (PieceKind::String, Region::Box(_)) => {
            return Err(CliError::Usage("string pieces need a torus region".into()))
        }
    };
    let inst = inst.without_cells(&req.removed);

    let mut text = String::new();
    for w in inst.warnings() {
        writeln!(text, "warning: {w}").unwrap();
    }
    let outcome = Search::new(&inst).budget(req.budget).first();
    let (exit, document) = match &outcome {
        SolveOutcome::Found(sol) => {
            writeln!(text, "found: {} pieces cover {} cells", sol.pieces.len(), inst.universe.len()).unwrap();
            let mut document = None;
            match req.pieces {
                PieceKind::String => {
                    for &i in &sol.pieces {
                        writeln!(text, "piece {:?}", inst.labels[i]).unwrap();
                    }
                    if let Some(strings) = torus_strings(&inst, sol) {
                        for s in strings {
                            writeln!(
                                text,
                                "string {:?} {} minus ({},{})",
                                s.direction, s.line_index, s.removed.x, s.removed.y
                            )
                            .unwrap();
                        }
                    }
                }
                PieceKind::Tile => {
                    let placements: Vec<_> = sol
                        .pieces
                        .iter()
                        .filter_map(|&i| inst.labels[i].as_placement().cloned())
                        .collect();
                    for p in &placements {
                        writeln!(text, "placement axis {} origin {:?}", p.axis, p.origin).unwrap();
                    }
                    if let (Region::Torus(shape), true) = (&req.region, req.removed.is_empty()) {
                        let mut t = PeriodicTiling::new(req.k, shape.clone(), placements)?;
                        t.sort();
                        document = Some(TilingDocument::from_tiling(&t, Some("solver")));
                    }
                }
            }
            (Exit::Ok, document)
        }
        SolveOutcome::NoSolution => {
            writeln!(text, "none: search space exhausted, no exact cover exists").unwrap();
            (Exit::Failed, None)
        }
        SolveOutcome::BudgetExhausted => {
            writeln!(text, "budget-exhausted: no cover found within {} nodes; nothing proved", req.budget).unwrap();
            (Exit::BudgetExhausted, None)
        }
    };
    Ok(SolveResult { exit, text, document })
}

/// Runs every property suite.
pub fn props(seed: u64, max_k_3d: usize, max_k_4d: usize) -> (Exit, String) {
    let suites = vec![
        checks::triple_schedule_suite(1000, seed),
        checks::b_schedule_suite(3..=10),
        checks::rep_sequence_suite(3..=12),
        checks::one_point_suite(1..=5),
        checks::construction_suite(max_k_3d, max_k_4d),
    ];
    let mut text = String::new();
    for s in &suites {
        writeln!(text, "{s}").unwrap();
    }
    let exit = if suites.iter().all(|s| s.passed()) { Exit::Ok } else { Exit::Failed };
    (exit, text)
}
