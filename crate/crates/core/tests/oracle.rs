//! The exact-cover solver as an independent check on the constructions.

use std::collections::BTreeSet;

use punctile_core::solver::{build_string_instance, torus_strings, PieceLabel};
use punctile_core::{
    build_tile_instance, count_solutions, placement_cells, solve, Construction, HoleSpec, Point2,
    Region, Solution, SolveOutcome, TorusShape,
};

#[test]
fn construction_is_a_solution_of_the_tile_instance() {
    for (c, k) in [(Construction::OddZ3, 3), (Construction::Mod8Z3, 4)] {
        let t = c.build(k).unwrap();
        let inst = build_tile_instance(k, &Region::Torus(t.shape.clone())).unwrap();
        let mut pieces: Vec<usize> = t
            .placements
            .iter()
            .map(|p| inst.find(&PieceLabel::Tile(p.clone())).expect("placement is a piece"))
            .collect();
        pieces.sort_unstable();
        assert!(inst.is_solution(&Solution { pieces }), "{c} k={k}");
    }
}

/// Frees every cell of the placements meeting one slice and asks the solver to
/// refill the freed cells from scratch.
#[test]
fn solver_refills_a_freed_slice() {
    let k = 3;
    let t = Construction::OddZ3.build(k).unwrap();
    let shape = &t.shape;
    let touches_slice =
        |cells: &[usize]| cells.iter().any(|&c| shape.coords(c)[2] == 0);
    let mut kept = Vec::new();
    let mut freed: BTreeSet<usize> = BTreeSet::new();
    for p in &t.placements {
        let cells = placement_cells(p, shape, k).unwrap();
        if touches_slice(&cells) {
            freed.extend(cells);
        } else {
            kept.push(p.clone());
        }
    }
    assert!(!freed.is_empty());
    let full = build_tile_instance(k, &Region::Torus(shape.clone())).unwrap();
    let taken: Vec<Vec<i64>> = (0..shape.cell_count())
        .filter(|c| !freed.contains(c))
        .map(|c| shape.coords(c))
        .collect();
    let sub = full.without_cells(&taken);
    assert_eq!(sub.universe.len(), freed.len());
    match solve(&sub, None) {
        SolveOutcome::Found(sol) => assert!(sub.is_solution(&sol)),
        other => panic!("solver could not refill the slice: {other:?}"),
    }
}

#[test]
fn torus_minus_each_point_needs_five_strings() {
    let shape = TorusShape::new(vec![4, 4]).unwrap();
    let full = build_string_instance(3, &shape).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            let inst = full.without_cells(&[vec![x, y]]);
            let SolveOutcome::Found(sol) = solve(&inst, None) else {
                panic!("no string cover for ({x},{y})")
            };
            assert_eq!(sol.pieces.len(), 5);
            let strings = torus_strings(&inst, &sol).unwrap();
            let hole = HoleSpec::new(3, [Point2::new(x as usize, y as usize)]).unwrap();
            assert!(hole.certify(&strings));
        }
    }
}

#[test]
fn k2_tiles_a_small_square_torus() {
    let found = (5..=12).find_map(|side| {
        let inst = build_tile_instance(2, &Region::Torus(TorusShape::new(vec![side, side]).unwrap())).unwrap();
        match solve(&inst, None) {
            SolveOutcome::Found(sol) => Some((side, inst.is_solution(&sol))),
            _ => None,
        }
    });
    let (side, valid) = found.expect("some square torus of side <= 12 admits a cover");
    assert!(valid);
    assert_eq!(side * side % 4, 0);
}

#[test]
fn no_k3_cover_of_small_square_tori() {
    for side in 1..=8usize {
        if side * side % 6 != 0 {
            continue;
        }
        let inst = build_tile_instance(3, &Region::Torus(TorusShape::new(vec![side, side]).unwrap())).unwrap();
        assert_eq!(count_solutions(&inst, 1), 0, "side {side}");
    }
}
