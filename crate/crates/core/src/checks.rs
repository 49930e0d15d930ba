//! Property suites over the schedules, holes and constructions.
//!
//! Each suite enumerates (or samples, with a fixed seed) its cases and
//! returns a [`SuiteReport`]; the CLI's `props` command prints them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::Construction;
use crate::schedule::{b_schedule_placements, b_slice, b_slice_size, rep_sequence, triple_slice, TripleSchedule};
use crate::strings::{is_hole, sdr_hole_cover, tile_torus_minus_point, HoleSpec, Point2};
use crate::tile::PuncturedTile;
use crate::torus::Placement;
use crate::verify::verify_exact_cover;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases, {} failures)", self.name, self.cases, self.failures.len())?;
        for failure in self.failures.iter().take(5) {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}

/// Base points of every copy covering slice `n` of the schedule axis.
fn slice_members(ps: &[Placement], k: usize, axis: usize, n: usize, extent: usize) -> Vec<Vec<i64>> {
    let tile = PuncturedTile::new(k).expect("k >= 1");
    let mut out = Vec::new();
    for p in ps {
        for c in p.cells(tile) {
            if c[axis].rem_euclid(extent as i64) == n as i64 {
                let mut base = c;
                base.remove(axis);
                out.push(base);
            }
        }
    }
    out.sort();
    out
}

/// Random triples: every slice of the schedule keeps exactly two points, the
/// ones named by the residue table.
pub fn triple_schedule_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("triple schedule: two of three points per slice");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let k = rng.gen_range(3..=10);
        let d = rng.gen_range(1..=3);
        let points = loop {
            let mut draw = || (0..d).map(|_| rng.gen_range(-20..=20)).collect::<Vec<i64>>();
            let pts = [draw(), draw(), draw()];
            if pts[0] != pts[1] && pts[0] != pts[2] && pts[1] != pts[2] {
                break pts;
            }
        };
        let axis = rng.gen_range(0..=d);
        let extent = 3 * k * rng.gen_range(1..=3);
        let s = TripleSchedule::new(k, points).expect("distinct points");
        let ps = s.placements(axis, extent).expect("valid extent");
        let mut ok = true;
        for n in 0..extent {
            let got = slice_members(&ps, k, axis, n, extent);
            let mut want: Vec<Vec<i64>> = triple_slice(k, n as i64)
                .iter()
                .map(|&i| s.points[i - 1].clone())
                .collect();
            want.sort();
            if got.len() != 2 || got != want {
                ok = false;
                break;
            }
        }
        report.check(ok, || format!("k={k} points={:?} axis={axis} extent={extent}", s.points));
    }
    report
}

/// The B-schedule slices match their closed forms and sizes `k+1` / `k-1`.
pub fn b_schedule_suite(ks: impl IntoIterator<Item = usize>) -> SuiteReport {
    let mut report = SuiteReport::new("B-schedule: k+1 / k-1 slice pattern");
    for k in ks {
        let a = rep_sequence(k).expect("k >= 3");
        let extent = 6 * k;
        let ps = b_schedule_placements(&a, 2, extent).expect("valid extent");
        let index: HashMap<Vec<i64>, usize> = (1..=3 * k)
            .map(|i| {
                let p = a.get(i as i64);
                (vec![p.x as i64, p.y as i64], i)
            })
            .collect();
        for n in 0..extent {
            let members = slice_members(&ps, k, 2, n, extent);
            let got: BTreeSet<usize> = members.iter().map(|b| index[b]).collect();
            let ok = members.len() == got.len()
                && got.len() == b_slice_size(k, n as i64)
                && got == b_slice(k, n as i64);
            report.check(ok, || format!("k={k} n={n}: got {got:?}"));
        }
    }
    report
}

/// Every window of `k+1` consecutive representatives has one point per row
/// or one per column, and is accepted by [`sdr_hole_cover`].
pub fn rep_sequence_suite(ks: impl IntoIterator<Item = usize>) -> SuiteReport {
    let mut report = SuiteReport::new("representative sequence: windows are SDR holes");
    for k in ks {
        let a = rep_sequence(k).expect("k >= 3");
        let distinct: BTreeSet<Point2> = a.points().iter().copied().collect();
        report.check(distinct.len() == 3 * k, || format!("k={k}: points not distinct"));
        for r in 1..=3 * k as i64 {
            let w = a.window(r);
            let per = |f: fn(&Point2) -> usize| {
                let mut counts = vec![0; k + 1];
                for p in &w {
                    counts[f(p)] += 1;
                }
                counts.iter().all(|&c| c == 1)
            };
            let sdr = per(|p| p.x) || per(|p| p.y);
            let hole = HoleSpec::new(k, w.iter().copied()).expect("points in range");
            let covered = sdr_hole_cover(k, &hole).map(|s| hole.certify(&s)).unwrap_or(false);
            report.check(w.len() == k + 1 && sdr && covered, || format!("k={k} window {r}: {w:?}"));
        }
    }
    report
}

/// The explicit one-point tiling agrees with the search-based hole decision.
pub fn one_point_suite(ks: impl IntoIterator<Item = usize>) -> SuiteReport {
    let mut report = SuiteReport::new("torus minus a point: explicit tiling and search agree");
    for k in ks {
        for x in 0..=k {
            for y in 0..=k {
                let p = Point2::new(x, y);
                let hole = HoleSpec::new(k, [p]).expect("point in range");
                let explicit = tile_torus_minus_point(k, p).map(|s| hole.certify(&s)).unwrap_or(false);
                let searched = matches!(is_hole(k, &hole.points), Ok(Some(s)) if hole.certify(&s));
                report.check(explicit && searched, || format!("k={k} point ({x},{y})"));
            }
        }
    }
    report
}

/// Every admissible construction up to the bounds verifies, with
/// `cells / 2k` placements.
pub fn construction_suite(max_k_3d: usize, max_k_4d: usize) -> SuiteReport {
    let mut report = SuiteReport::new("constructions verify as exact covers");
    for c in Construction::ALL {
        let max = if c.dim() == 4 { max_k_4d } else { max_k_3d };
        for k in (3..=max).filter(|&k| c.admits(k)) {
            let outcome = c.build(k).map(|t| {
                let cells = t.shape.cell_count();
                verify_exact_cover(&t).is_ok() && t.placements.len() * 2 * k == cells
            });
            report.check(matches!(outcome, Ok(true)), || format!("{c} k={k}: {outcome:?}"));
        }
    }
    report
}

/// All suites with their default ranges.
pub fn default_suites(seed: u64) -> Vec<SuiteReport> {
    vec![
        triple_schedule_suite(1000, seed),
        b_schedule_suite(3..=10),
        rep_sequence_suite(3..=12),
        one_point_suite(1..=5),
        construction_suite(15, 10),
    ]
}
