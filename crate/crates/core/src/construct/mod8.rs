use super::{finish, require};
use crate::error::Result;
use crate::schedule::{triple_missing, TripleSchedule};
use crate::torus::{string_line_placements, Placement};
use crate::verify::PeriodicTiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mod8Set {
    S1,
    S2,
    S3,
}

/// Membership in the three diagonal families of `Z^2` used for
/// `k = 4 (mod 8)`:
///
/// * `S1`: `(x, x + n(k+1))` with `x = 2n, .., 2n+3 (mod 8)`
/// * `S2`: `(x, x + n(k+1))` with `x = 2n+4, .., 2n+7 (mod 8)`
/// * `S3`: `(x, x + n(k+1) + 1)` with `x = 2n+2, .., 2n+5 (mod 8)`
pub fn mod8_membership(k: usize, point: (i64, i64), which: Mod8Set) -> bool {
    let side = k as i64 + 1;
    let (x, y) = point;
    let diff = match which {
        Mod8Set::S3 => y - x - 1,
        _ => y - x,
    };
    if diff.rem_euclid(side) != 0 {
        return false;
    }
    let n = diff.div_euclid(side);
    let r = (x - 2 * n).rem_euclid(8);
    match which {
        Mod8Set::S1 => r < 4,
        Mod8Set::S2 => r >= 4,
        Mod8Set::S3 => (2..6).contains(&r),
    }
}

/// The sets `S1, S2, S3` and the three regions `X_i = Z^2 \ (S_j u S_l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mod8Sets {
    pub k: usize,
}

impl Mod8Sets {
    pub fn new(k: usize) -> Result<Self> {
        require(k % 8 == 4, || format!("mod-8 construction needs k = 4 (mod 8), got {k}"))?;
        Ok(Mod8Sets { k })
    }

    /// Side of the square on which all three sets are periodic.
    pub fn period(&self) -> usize {
        8 * (self.k + 1)
    }

    pub fn contains(&self, which: Mod8Set, point: (i64, i64)) -> bool {
        mod8_membership(self.k, point, which)
    }

    /// Membership in `X_i` (`i` in `1..=3`).
    pub fn in_region(&self, i: usize, point: (i64, i64)) -> bool {
        let excluded = match i {
            1 => [Mod8Set::S2, Mod8Set::S3],
            2 => [Mod8Set::S1, Mod8Set::S3],
            _ => [Mod8Set::S1, Mod8Set::S2],
        };
        !excluded.iter().any(|&s| self.contains(s, point))
    }

    /// Vertical copies tiling `X_1`. Columns 0 and 1 start at `1, 2(k+1)+2`
    /// and `2, 2(k+1)+3` (mod `4(k+1)`); column `2j+p` is column `p` moved up
    /// by `j(k+3)`.
    pub fn region1_copies(&self) -> Vec<Placement> {
        let k = self.k as i64;
        let side = k + 1;
        let period = self.period() as i64;
        let mut out = Vec::new();
        for x in 0..period {
            let (j, parity) = (x / 2, x % 2);
            for base in [1, 2 * side + 2] {
                for lap in [0, 4 * side] {
                    let y = (base + parity + j * (k + 3) + lap).rem_euclid(period);
                    out.push(Placement::new(1, vec![x, y]));
                }
            }
        }
        out
    }

    /// Horizontal copies tiling `X_2`. Row 0 starts at `k+1, 3(k+1),
    /// 5(k+1)+1, 7(k+1)+1` (mod `8(k+1)`); row `y` is row 0 moved right by
    /// `y(k+2)`.
    pub fn region2_copies(&self) -> Vec<Placement> {
        let k = self.k as i64;
        let side = k + 1;
        let period = self.period() as i64;
        let mut out = Vec::new();
        for y in 0..period {
            for base in [side, 3 * side, 5 * side + 1, 7 * side + 1] {
                let x = (base + y * (k + 2)).rem_euclid(period);
                out.push(Placement::new(0, vec![x, y]));
            }
        }
        out
    }

    /// `X_3` is the plane minus every `(k+1)`th diagonal: each row is a string.
    pub fn region3_copies(&self) -> Result<Vec<Placement>> {
        let side = self.k + 1;
        let period = self.period();
        let mut out = Vec::new();
        for y in 0..period {
            out.extend(string_line_placements(0, &[y as i64], y % side, period, self.k)?);
        }
        Ok(out)
    }

    /// `(x1, x1 + (4,4), x1 + (2,3))` for every `x1` of `S1` in the square.
    pub fn triples(&self) -> Vec<[(i64, i64); 3]> {
        let period = self.period() as i64;
        let mut out = Vec::new();
        for x in 0..period {
            for y in 0..period {
                if self.contains(Mod8Set::S1, (x, y)) {
                    out.push([(x, y), (x + 4, y + 4), (x + 2, y + 3)]);
                }
            }
        }
        out
    }
}

/// Tiles `Z^3` for `k = 4 (mod 8)`, certified on `(8(k+1), 8(k+1), 3k)`.
///
/// Triple schedules over `S1 u S2 u S3` run along the third axis; in each
/// slice the point dropped by the schedule selects which region `X_i` the
/// remaining plane is tiled with.
pub fn construct_mod8(k: usize) -> Result<PeriodicTiling> {
    let sets = Mod8Sets::new(k)?;
    let shape = super::Construction::Mod8Z3.shape(k)?;
    let depth = 3 * k;

    let mut placements = Vec::with_capacity(shape.cell_count() / (2 * k));
    for triple in sets.triples() {
        let points = triple.map(|(x, y)| vec![x, y]);
        placements.extend(TripleSchedule::new(k, points)?.placements(2, depth)?);
    }
    let regions = [sets.region1_copies(), sets.region2_copies(), sets.region3_copies()?];
    for m in 0..depth as i64 {
        let i = triple_missing(k, m);
        placements.extend(regions[i - 1].iter().map(|p| p.clone().insert_axis(2, m)));
    }
    finish(PeriodicTiling::new(k, shape, placements)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tile::PuncturedTile;

    #[test]
    fn membership_examples() {
        assert!(mod8_membership(4, (0, 0), Mod8Set::S1));
        assert!(mod8_membership(4, (4, 4), Mod8Set::S2));
        assert!(mod8_membership(4, (2, 3), Mod8Set::S3));
        assert!(!mod8_membership(4, (4, 4), Mod8Set::S1));
        assert!(!mod8_membership(4, (0, 1), Mod8Set::S1));
    }

    #[test]
    fn region1_column_zero_holes() {
        let sets = Mod8Sets::new(4).unwrap();
        let holes: Vec<i64> = (0..20).filter(|&y| !sets.in_region(1, (0, y))).collect();
        assert_eq!(holes, vec![5, 10, 11, 16]);
    }

    #[test]
    fn rejects_other_residues() {
        for k in [3, 5, 6, 8, 10] {
            assert!(construct_mod8(k).is_err());
        }
    }

    #[test]
    fn k4_counts() {
        let t = construct_mod8(4).unwrap();
        assert_eq!(t.shape.dims(), &[40, 40, 12]);
        assert_eq!(t.placements.len(), 2400);
    }

    fn coverage(ps: &[Placement], k: usize, period: usize) -> Vec<u32> {
        let tile = PuncturedTile::new(k).unwrap();
        let mut seen = vec![0; period * period];
        for p in ps {
            for c in p.cells(tile) {
                let x = c[0].rem_euclid(period as i64) as usize;
                let y = c[1].rem_euclid(period as i64) as usize;
                seen[y * period + x] += 1;
            }
        }
        seen
    }

    #[test]
    fn region_copies_tile_their_regions() {
        for k in [4, 12] {
            let sets = Mod8Sets::new(k).unwrap();
            let period = sets.period();
            let all = [sets.region1_copies(), sets.region2_copies(), sets.region3_copies().unwrap()];
            for (i, copies) in all.iter().enumerate() {
                let seen = coverage(copies, k, period);
                for y in 0..period {
                    for x in 0..period {
                        let want = u32::from(sets.in_region(i + 1, (x as i64, y as i64)));
                        assert_eq!(seen[y * period + x], want, "k={k} X_{} at ({x},{y})", i + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_and_invariances() {
        let k = 4;
        let sets = Mod8Sets::new(k).unwrap();
        let p = sets.period() as i64;
        let shifts = [(2, k as i64 + 3), (k as i64 + 2, 1), (1, 1)];
        for x in 0..p {
            for y in 0..p {
                let member = [Mod8Set::S1, Mod8Set::S2, Mod8Set::S3].map(|s| sets.contains(s, (x, y)));
                assert!(member.iter().filter(|&&b| b).count() <= 1, "({x},{y}) in two sets");
                for i in 1..=3 {
                    let others = (0..3).filter(|&j| j != i - 1 && member[j]).count();
                    assert_eq!(usize::from(sets.in_region(i, (x, y))) + others, 1);
                    let (dx, dy) = shifts[i - 1];
                    assert_eq!(
                        sets.in_region(i, (x, y)),
                        sets.in_region(i, ((x + dx).rem_euclid(p), (y + dy).rem_euclid(p))),
                        "X_{i} not invariant at ({x},{y})"
                    );
                }
                if member[0] {
                    assert!(sets.contains(Mod8Set::S2, (x + 4, y + 4)));
                    assert!(sets.contains(Mod8Set::S3, (x + 2, y + 3)));
                }
                let diagonal = (y - x).rem_euclid(k as i64 + 1) == 0;
                assert_eq!(member[0] || member[1], diagonal);
            }
        }
        let count = |s| (0..p).flat_map(|x| (0..p).map(move |y| (x, y))).filter(|&q| sets.contains(s, q)).count();
        assert_eq!(count(Mod8Set::S1), count(Mod8Set::S2));
        assert_eq!(count(Mod8Set::S1), count(Mod8Set::S3));
    }
}
