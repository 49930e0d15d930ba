//! Interleaving schedules along one axis.
//!
//! A [`TripleSchedule`] stacks copies of the tile over three base points so
//! that every slice keeps exactly two of them. A [`RepSequence`] is a cycle of
//! `3k` points of `Z_{k+1}^2` whose every `k+1` consecutive points form an
//! SDR hole; [`b_schedule_placements`] stacks copies over it with period `6k`.

use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::strings::Point2;
use crate::tile::PuncturedTile;
use crate::torus::Placement;

/// Three distinct base points of some `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSchedule {
    pub k: usize,
    pub points: [Vec<i64>; 3],
}

impl TripleSchedule {
    pub fn new(k: usize, points: [Vec<i64>; 3]) -> Result<Self> {
        PuncturedTile::new(k)?;
        let d = points[0].len();
        if points.iter().any(|p| p.len() != d) {
            return invalid("triple points must share a dimension");
        }
        if points[0] == points[1] || points[0] == points[2] || points[1] == points[2] {
            return invalid(format!("triple points must be distinct, got {points:?}"));
        }
        Ok(TripleSchedule { k, points })
    }

    /// Copies over `x_i` at every position `= ik (mod 3k)` in `[0, extent)`,
    /// with the schedule coordinate inserted at `axis`.
    pub fn placements(&self, axis: usize, extent: usize) -> Result<Vec<Placement>> {
        let period = 3 * self.k;
        if extent == 0 || !extent.is_multiple_of(period) {
            return invalid(format!("schedule length {extent} is not a positive multiple of 3k = {period}"));
        }
        if axis > self.points[0].len() {
            return invalid(format!("axis {axis} out of range"));
        }
        let mut out = Vec::with_capacity(3 * extent / period);
        for (i, x) in self.points.iter().enumerate() {
            let start = ((i + 1) * self.k) % period;
            for n in (start..extent).step_by(period) {
                let mut origin = x.clone();
                origin.insert(axis, n as i64);
                out.push(Placement::new(axis, origin));
            }
        }
        Ok(out)
    }

    /// The two base points present in slice `n`.
    pub fn slice(&self, n: i64) -> [&[i64]; 2] {
        let [a, b] = triple_slice(self.k, n);
        [&self.points[a - 1], &self.points[b - 1]]
    }
}

/// Shorthand for [`TripleSchedule::placements`].
pub fn triple_placements(s: &TripleSchedule, axis: usize, extent: usize) -> Result<Vec<Placement>> {
    s.placements(axis, extent)
}

/// Which of `x_1, x_2, x_3` (1-based) is absent from slice `n`.
///
/// Residues `{0} u [k+1, 2k-1]` drop `x_2`, `{k} u [2k+1, 3k-1]` drop `x_3`
/// and `{2k} u [1, k-1]` drop `x_1`.
pub fn triple_missing(k: usize, n: i64) -> usize {
    let period = 3 * k as i64;
    let r = n.rem_euclid(period) as usize;
    if r == 0 || (k + 1..2 * k).contains(&r) {
        2
    } else if r == k || (2 * k + 1..3 * k).contains(&r) {
        3
    } else {
        debug_assert!(r == 2 * k || (1..k).contains(&r));
        1
    }
}

/// 1-based indices of the two points present in slice `n`, in increasing order.
pub fn triple_slice(k: usize, n: i64) -> [usize; 2] {
    match triple_missing(k, n) {
        1 => [2, 3],
        2 => [1, 3],
        _ => [1, 2],
    }
}

/// The points `a_1, .., a_{3k}` of `Z_{k+1}^2`. Indices are 1-based and cyclic
/// modulo `3k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSequence {
    k: usize,
    points: Vec<Point2>,
}

impl RepSequence {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `a_n`, with `n` taken mod `3k`.
    pub fn get(&self, n: i64) -> Point2 {
        let len = self.points.len() as i64;
        self.points[((n - 1).rem_euclid(len)) as usize]
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// `{a_r, .., a_{r+k}}`.
    pub fn window(&self, r: i64) -> Vec<Point2> {
        (r..=r + self.k as i64).map(|n| self.get(n)).collect()
    }

    /// Every `r` in `1..=3k` whose window equals `set`.
    pub fn windows_matching(&self, set: &BTreeSet<Point2>) -> Vec<usize> {
        (1..=self.points.len())
            .filter(|&r| {
                let w: BTreeSet<Point2> = self.window(r as i64).into_iter().collect();
                &w == set
            })
            .collect()
    }
}

/// Builds `a_1, .., a_{3k}` from the four closed-form ranges.
pub fn rep_sequence(k: usize) -> Result<RepSequence> {
    if k < 3 {
        return invalid(format!("the representative sequence needs k >= 3, got {k}"));
    }
    let points = (1..=3 * k)
        .map(|n| {
            if n <= k + 1 {
                Point2::new(n - 1, n - 1)
            } else if n < 2 * k {
                Point2::new(n - k - 2, n - k - 1)
            } else if n <= 2 * k + 2 {
                Point2::new(n - k - 2, n - 2 * k)
            } else {
                Point2::new(n - 2 * k - 3, n - 2 * k)
            }
        })
        .collect();
    Ok(RepSequence { k, points })
}

/// Shorthand for [`RepSequence::window`].
pub fn window(a: &RepSequence, r: i64) -> Vec<Point2> {
    a.window(r)
}

/// Start (mod `6k`) of the copies stacked over `a_i`.
fn b_start(k: usize, i: usize) -> usize {
    if i <= k {
        i
    } else if i <= 2 * k {
        i + k
    } else {
        i + 2 * k
    }
}

/// Copies over every `a_i` with period `6k` along `axis`. Base points are
/// `[x, y]`; the schedule coordinate is inserted at `axis`.
pub fn b_schedule_placements(a: &RepSequence, axis: usize, extent: usize) -> Result<Vec<Placement>> {
    let k = a.k;
    let period = 6 * k;
    if extent == 0 || !extent.is_multiple_of(period) {
        return invalid(format!("schedule length {extent} is not a positive multiple of 6k = {period}"));
    }
    if axis > 2 {
        return invalid(format!("axis {axis} out of range"));
    }
    let mut out = Vec::with_capacity(3 * k * extent / period);
    for i in 1..=3 * k {
        let p = a.get(i as i64);
        let start = b_start(k, i) % period;
        for n in (start..extent).step_by(period) {
            let mut origin = vec![p.x as i64, p.y as i64];
            origin.insert(axis, n as i64);
            out.push(Placement::new(axis, origin));
        }
    }
    Ok(out)
}

/// 1-based indices `i` with `a_i` covered in slice `n` of the B-schedule.
pub fn b_slice(k: usize, n: i64) -> BTreeSet<usize> {
    let period = 6 * k as i64;
    let r = match n.rem_euclid(period) {
        0 => 6 * k,
        r => r as usize,
    };
    let block = (r - 1) / k;
    match block {
        0 => (2 * k + r..=3 * k).chain(1..=r).collect(),
        1 => (1..=k).filter(|&i| i != r - k).collect(),
        2 => (r - 2 * k..=r - k).collect(),
        3 => (k + 1..=2 * k).filter(|&i| i != r - 2 * k).collect(),
        4 => (r - 3 * k..=r - 2 * k).collect(),
        _ => (2 * k + 1..=3 * k).filter(|&i| i != r - 3 * k).collect(),
    }
}

/// Slice sizes follow `k+1` for `n = 1..k (mod 2k)` and `k-1` otherwise.
pub fn b_slice_size(k: usize, n: i64) -> usize {
    let r = n.rem_euclid(2 * k as i64);
    if (1..=k as i64).contains(&r) {
        k + 1
    } else {
        k - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn membership(ps: &[Placement], k: usize, axis: usize, n: i64, extent: usize) -> Vec<Vec<i64>> {
        let tile = PuncturedTile::new(k).unwrap();
        let mut out = Vec::new();
        for p in ps {
            for c in p.cells(tile) {
                if c[axis].rem_euclid(extent as i64) == n.rem_euclid(extent as i64) {
                    let mut base = c.clone();
                    base.remove(axis);
                    out.push(base);
                }
            }
        }
        out.sort();
        out
    }

    fn triple(k: usize) -> TripleSchedule {
        TripleSchedule::new(k, [vec![0, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn slice_table_examples() {
        assert_eq!(triple_slice(3, 5), [1, 3]);
        assert_eq!(triple_slice(3, 2), [2, 3]);
        assert_eq!(triple_slice(4, 8), [2, 3]);
        for k in 1..10 {
            assert_eq!(triple_slice(k, 0), [1, 3]);
            assert_eq!(triple_slice(k, k as i64), [1, 2]);
            assert_eq!(triple_slice(k, 2 * k as i64), [2, 3]);
        }
    }

    #[test]
    fn slice_table_matches_placements() {
        for k in 1..=10 {
            let s = triple(k);
            let extent = 6 * k;
            let ps = s.placements(2, extent).unwrap();
            assert_eq!(ps.len(), 6);
            for n in 0..extent as i64 {
                let mut expected: Vec<Vec<i64>> = s.slice(n).iter().map(|p| p.to_vec()).collect();
                expected.sort();
                assert_eq!(membership(&ps, k, 2, n, extent), expected, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn triple_rejects_bad_input() {
        assert!(TripleSchedule::new(3, [vec![0], vec![0], vec![1]]).is_err());
        assert!(triple(3).placements(0, 10).is_err());
    }

    #[test]
    fn rep_sequence_k4() {
        let a = rep_sequence(4).unwrap();
        let expected = [
            (0, 0), (1, 1), (2, 2), (3, 3), (4, 4),
            (0, 1), (1, 2),
            (2, 0), (3, 1), (4, 2),
            (0, 3), (1, 4),
        ];
        let expected: Vec<Point2> = expected.iter().map(|&p| p.into()).collect();
        assert_eq!(a.points(), expected.as_slice());
        assert_eq!(a.get(13), a.get(1));
        assert_eq!(a.get(0), a.get(12));
    }

    #[test]
    fn rep_sequence_needs_k3() {
        assert!(rep_sequence(2).is_err());
        assert!(rep_sequence(3).is_ok());
    }

    #[test]
    fn windows_k4() {
        let a = rep_sequence(4).unwrap();
        let w1 = a.window(1);
        let mut cols: Vec<usize> = w1.iter().map(|p| p.x).collect();
        cols.sort_unstable();
        assert_eq!(cols, vec![0, 1, 2, 3, 4]);
        let w9 = a.window(9);
        let mut rows: Vec<usize> = w9.iter().map(|p| p.y).collect();
        rows.sort_unstable();
        assert_eq!(rows, vec![0, 1, 2, 3, 4]);
        let w10: BTreeSet<Point2> = a.window(10).into_iter().collect();
        assert_eq!(w10, [a.get(10), a.get(11), a.get(12), a.get(1), a.get(2)].into_iter().collect());
    }

    #[test]
    fn b_slice_examples() {
        assert_eq!(b_slice(3, 1), [7, 8, 9, 1].into_iter().collect());
        assert_eq!(b_slice(3, 4), [2, 3].into_iter().collect());
        assert_eq!(b_slice(3, 8), [2, 3, 4, 5].into_iter().collect());
    }

    #[test]
    fn b_slice_matches_placements() {
        for k in 3..=10 {
            let a = rep_sequence(k).unwrap();
            let extent = 6 * k;
            let ps = b_schedule_placements(&a, 2, extent).unwrap();
            let index: HashMap<Vec<i64>, usize> = (1..=3 * k)
                .map(|i| {
                    let p = a.get(i as i64);
                    (vec![p.x as i64, p.y as i64], i)
                })
                .collect();
            for n in 0..extent as i64 {
                let got: BTreeSet<usize> =
                    membership(&ps, k, 2, n, extent).iter().map(|b| index[b]).collect();
                assert_eq!(got, b_slice(k, n), "k={k} n={n}");
                assert_eq!(got.len(), b_slice_size(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn b_schedule_rejects_bad_length() {
        let a = rep_sequence(3).unwrap();
        assert!(b_schedule_placements(&a, 2, 9).is_err());
    }
}
