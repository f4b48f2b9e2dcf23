mod common;

use shtab::bk::{bk, q, q_interval};
use shtab::jdt::{evacuation, rectify};
use shtab::standard::standardize;
use shtab::{enumerate, ShiftedSkewShape, ShiftedTableau};

fn standard_fillings(shape: &ShiftedSkewShape) -> Vec<ShiftedTableau> {
    let n = shape.num_cells() as u8;
    enumerate(shape, n)
        .into_members()
        .into_iter()
        .filter(common::is_standard)
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for shape in ShiftedSkewShape::all_in_staircase(4, 8, false) {
        for n in 1..=4 {
            let mut fast = enumerate(&shape, n).into_members();
            fast.sort();
            let slow = common::brute_force(&shape, n);
            assert_eq!(fast, slow, "shape {shape}, n = {n}");
        }
    }
}

#[test]
fn bk_on_standard_fillings_is_the_classical_move() {
    for shape in ShiftedSkewShape::all_in_staircase(5, 6, false) {
        for t in standard_fillings(&shape) {
            for i in 1..t.n() {
                assert_eq!(
                    bk(&t, i).unwrap(),
                    common::bk_standard(&t, i),
                    "{t}, i = {i}"
                );
            }
        }
    }
}

#[test]
fn q_operators_on_standard_fillings() {
    for shape in ShiftedSkewShape::all_in_staircase(4, 5, false) {
        for t in standard_fillings(&shape) {
            let n = t.n();
            for i in 1..n {
                assert_eq!(q(&t, i).unwrap(), common::q_standard(&t, i));
            }
            for j in 2..=n {
                for i in 1..j {
                    assert_eq!(
                        q_interval(&t, i, j).unwrap(),
                        common::q_interval_standard(&t, i, j),
                        "{t}, q{{{i},{j}}}"
                    );
                }
            }
        }
    }
}

#[test]
fn rectification_matches_standard_slides() {
    for shape in ShiftedSkewShape::all_in_staircase(4, 7, true) {
        for t in enumerate(&shape, 3).iter() {
            let (rect, _) = rectify(t);
            let ours = common::grid_of(&standardize(&rect));
            assert_eq!(ours, common::rectify_standard(&standardize(t)), "{t}");
        }
    }
}

#[test]
fn evacuation_matches_deletion_algorithm() {
    for shape in ShiftedSkewShape::all_in_staircase(4, 10, false) {
        if !shape.is_straight() || shape.num_cells() > 8 {
            continue;
        }
        for t in standard_fillings(&shape) {
            let e = evacuation(&t).unwrap();
            assert_eq!(common::grid_of(&e), common::evacuate_standard(&t), "{t}");
        }
    }
}
