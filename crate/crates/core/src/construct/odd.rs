use super::{finish, lifts, require};
use crate::error::Result;
use crate::schedule::TripleSchedule;
use crate::strings::{lift_strings, sdr_hole_cover, HoleSpec, Point2};
use crate::verify::PeriodicTiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OddClass {
    Diagonal,
    ColumnPairs,
    RowPairs,
}

fn odd_class(k: usize, n: i64) -> OddClass {
    let r = n.rem_euclid(3 * k as i64) as usize;
    if r == 0 || (k + 1..=2 * k - 1).contains(&r) {
        OddClass::Diagonal
    } else if r == k || (2 * k + 1..=3 * k - 1).contains(&r) {
        OddClass::ColumnPairs
    } else {
        OddClass::RowPairs
    }
}

/// The hole left in slice `n` of `Z_{k+1}^2 x Z`: the diagonal, the pairs
/// `(2i,2i),(2i,2i+1)`, or the pairs `(2i,2i+1),(2i+1,2i+1)`, by residue of
/// `n` mod `3k`.
pub fn odd_case_hole(k: usize, n: i64) -> Result<HoleSpec> {
    require(k >= 3 && k % 2 == 1, || format!("odd construction needs odd k >= 3, got {k}"))?;
    let pairs = 0..k.div_ceil(2);
    let points: Vec<Point2> = match odd_class(k, n) {
        OddClass::Diagonal => (0..=k).map(|i| Point2::new(i, i)).collect(),
        OddClass::ColumnPairs => pairs
            .flat_map(|i| [Point2::new(2 * i, 2 * i), Point2::new(2 * i, 2 * i + 1)])
            .collect(),
        OddClass::RowPairs => pairs
            .flat_map(|i| [Point2::new(2 * i, 2 * i + 1), Point2::new(2 * i + 1, 2 * i + 1)])
            .collect(),
    };
    HoleSpec::new(k, points)
}

/// `S_i = ((2i,2i), (2i,2i+1), (2i+1,2i+1))` for `0 <= i <= (k-1)/2`.
pub fn odd_case_triples(k: usize) -> Result<Vec<TripleSchedule>> {
    (0..k.div_ceil(2))
        .map(|i| {
            let (a, b) = (2 * i as i64, 2 * i as i64 + 1);
            TripleSchedule::new(k, [vec![a, a], vec![a, b], vec![b, b]])
        })
        .collect()
}

/// Tiles `Z^3` for odd `k`, certified on the torus `(2(k+1), 2(k+1), 3k)`.
///
/// Each slice `Z_{k+1}^2 x {n}` is tiled by strings around its hole; the
/// holes stack into one triple schedule per `S_i`, filled along the third axis.
pub fn construct_odd(k: usize) -> Result<PeriodicTiling> {
    require(k >= 3 && k % 2 == 1, || format!("odd construction needs odd k >= 3, got {k}"))?;
    let shape = super::Construction::OddZ3.shape(k)?;
    let side = k + 1;
    let extent = 2 * side;
    let depth = 3 * k;

    let mut placements = Vec::with_capacity(shape.cell_count() / (2 * k));
    for s in odd_case_triples(k)? {
        for offset in lifts(side, 2) {
            let lifted = TripleSchedule::new(
                k,
                s.points.clone().map(|p| vec![p[0] + offset[0], p[1] + offset[1]]),
            )?;
            placements.extend(lifted.placements(2, depth)?);
        }
    }
    for n in 0..depth {
        let hole = odd_case_hole(k, n as i64)?;
        let strings = sdr_hole_cover(k, &hole)?;
        placements.extend(
            lift_strings(k, &strings, extent, extent)?
                .into_iter()
                .map(|p| p.insert_axis(2, n as i64)),
        );
    }
    finish(PeriodicTiling::new(k, shape, placements)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::triple_slice;
    use std::collections::BTreeSet;

    #[test]
    fn k3_counts() {
        let t = construct_odd(3).unwrap();
        assert_eq!(t.shape.dims(), &[8, 8, 9]);
        assert_eq!(t.shape.cell_count(), 576);
        assert_eq!(t.placements.len(), 96);
    }

    #[test]
    fn k5_counts() {
        let t = construct_odd(5).unwrap();
        assert_eq!(t.shape.dims(), &[12, 12, 15]);
        assert_eq!(t.shape.cell_count(), 2160);
        assert_eq!(t.placements.len(), 216);
    }

    #[test]
    fn even_k_rejected() {
        assert!(construct_odd(4).is_err());
        assert!(construct_odd(1).is_err());
    }

    #[test]
    fn holes_are_unions_of_triple_slices() {
        for k in (3..=15).step_by(2) {
            let triples = odd_case_triples(k).unwrap();
            for n in 0..3 * k as i64 {
                let from_triples: BTreeSet<Point2> = triples
                    .iter()
                    .flat_map(|s| {
                        triple_slice(k, n).map(|i| {
                            let p = &s.points[i - 1];
                            Point2::new(p[0] as usize, p[1] as usize)
                        })
                    })
                    .collect();
                let hole = odd_case_hole(k, n).unwrap();
                assert_eq!(hole.points, from_triples, "k={k} n={n}");
                assert!(sdr_hole_cover(k, &hole).is_ok());
            }
        }
    }
}
