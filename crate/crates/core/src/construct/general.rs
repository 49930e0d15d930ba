use std::collections::BTreeSet;

use super::{finish, lifts, require};
use crate::error::Result;
use crate::schedule::{b_schedule_placements, b_slice, rep_sequence, triple_missing, RepSequence, TripleSchedule};
use crate::strings::{lift_strings, sdr_hole_cover, tile_torus_minus_point, HoleSpec, Point2};
use crate::verify::PeriodicTiling;

/// The `3k` triples of `Z_{k+1}^2 x Z_{6k}`, each with one point in a
/// singleton layer and two points in a pair layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCaseSets {
    pub k: usize,
    pub a: RepSequence,
    /// `triples[n-1] = [x_{n,1}, x_{n,2}, x_{n,3}]` as (point, layer).
    pub triples: Vec<[(Point2, usize); 3]>,
}

impl GeneralCaseSets {
    pub fn new(k: usize) -> Result<Self> {
        let a = rep_sequence(k)?;
        let origin = Point2::new(0, 0);
        let triples = (1..=3 * k)
            .map(|n| {
                let (single, pair, partner) = if n <= k {
                    (n, n + k, k + 1)
                } else if n <= 2 * k {
                    (n + k, n + 2 * k, 2 * k + 1)
                } else {
                    (n + 2 * k, n + 3 * k, 1)
                };
                let pair = pair % (6 * k);
                [
                    (origin, single),
                    (a.get(n as i64), pair),
                    (a.get(partner as i64), pair),
                ]
            })
            .collect();
        Ok(GeneralCaseSets { k, a, triples })
    }

    /// Points of the triple schedules present in slice `m` of the fourth axis,
    /// as (point, layer).
    pub fn present(&self, m: i64) -> Vec<(Point2, usize)> {
        let missing = triple_missing(self.k, m);
        self.triples
            .iter()
            .flat_map(|t| {
                t.iter()
                    .enumerate()
                    .filter(move |(i, _)| i + 1 != missing)
                    .map(|(_, &p)| p)
            })
            .collect()
    }
}

/// Points of `Z_{k+1}^2` left for strings to avoid in layer `z` of slice `m`:
/// the schedule points, plus the B-schedule points when the slice keeps only
/// pairs.
pub fn general_layer_hole(sets: &GeneralCaseSets, m: i64, z: usize) -> BTreeSet<Point2> {
    let mut out: BTreeSet<Point2> = sets
        .present(m)
        .into_iter()
        .filter(|&(_, layer)| layer == z)
        .map(|(p, _)| p)
        .collect();
    if triple_missing(sets.k, m) == 1 {
        out.extend(b_slice(sets.k, z as i64).into_iter().map(|i| sets.a.get(i as i64)));
    }
    out
}

/// Tiles `Z^4` for any `k >= 3`, certified on `(2(k+1), 2(k+1), 6k, 3k)`.
///
/// Triple schedules run along the fourth axis. Slices where every layer keeps
/// one schedule point are tiled by strings around that point; slices keeping
/// pairs get the B-schedule along the third axis and strings around the
/// resulting window of the representative sequence.
pub fn construct_general(k: usize) -> Result<PeriodicTiling> {
    require(k >= 3, || format!("general construction needs k >= 3, got {k}"))?;
    let shape = super::Construction::GeneralZ4.shape(k)?;
    let sets = GeneralCaseSets::new(k)?;
    let side = k + 1;
    let extent = 2 * side;
    let layers = 6 * k;
    let depth = 3 * k;
    let offsets = lifts(side, 2);

    let mut placements = Vec::with_capacity(shape.cell_count() / (2 * k));
    for triple in &sets.triples {
        for offset in &offsets {
            let points = triple.map(|(p, z)| {
                vec![p.x as i64 + offset[0], p.y as i64 + offset[1], z as i64]
            });
            placements.extend(TripleSchedule::new(k, points)?.placements(3, depth)?);
        }
    }

    let b_copies = b_schedule_placements(&sets.a, 2, layers)?;
    for m in 0..depth as i64 {
        let pairs_only = triple_missing(k, m) == 1;
        if pairs_only {
            for offset in &offsets {
                let shift = [offset[0], offset[1], 0];
                placements.extend(
                    b_copies.iter().map(|p| p.clone().translated(&shift).insert_axis(3, m)),
                );
            }
        }
        for z in 0..layers {
            let hole = general_layer_hole(&sets, m, z);
            let strings = if pairs_only {
                sdr_hole_cover(k, &HoleSpec::new(k, hole)?)?
            } else {
                let [p] = <[Point2; 1]>::try_from(hole.into_iter().collect::<Vec<_>>())
                    .map_err(|h| crate::Error::NotACover(format!("layer {z} of slice {m} holds {h:?}")))?;
                tile_torus_minus_point(k, p)?
            };
            placements.extend(
                lift_strings(k, &strings, extent, extent)?
                    .into_iter()
                    .map(|p| p.insert_axis(2, z as i64).insert_axis(3, m)),
            );
        }
    }
    finish(PeriodicTiling::new(k, shape, placements)?)
}
