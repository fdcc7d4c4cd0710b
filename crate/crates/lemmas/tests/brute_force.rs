//! The plan search against an edge-labeling brute force on the 3×3 quadrant.

mod common;

use common::{labeling_exists, Demand};
use gridlink_core::{v, Adjustment, EdgeSet, GridGraph, Quadrant, Vertex};
use gridlink_lemmas::*;

const NW: Orientation = Orientation { quadrant: Quadrant::NW, transpose: false };

fn cells() -> Vec<Vertex> {
    Quadrant::NW.vertices()
}

fn c1_edges(g: &GridGraph) -> EdgeSet {
    [(v(2, 2), v(2, 3)), (v(2, 2), v(3, 2))].iter().map(|&(a, b)| g.edge_index(a, b).unwrap()).collect()
}

fn demand(from: Vertex, targets: &[Vertex]) -> Demand {
    Demand { from, targets: targets.to_vec(), group: None, avoid: EdgeSet::default() }
}

#[test]
fn cycle_mating_agrees() {
    let g = GridGraph::new(3, 3).unwrap();
    let c1 = c1_edges(&g);
    let on = |c: CycleId| if c == CycleId::C0 { vec![v(3, 3)] } else { vec![v(2, 2), v(2, 3), v(3, 2)] };
    for &a in &cells() {
        for &b in &cells() {
            for ga in CycleId::BOTH {
                for gb in CycleId::BOTH {
                    let found = mate_to_cycles(Quadrant::NW, [a, b], [ga, gb], &Restrictions::NONE).is_ok();
                    let demands = [
                        Demand { avoid: c1, ..demand(a, &on(ga)) },
                        Demand { avoid: c1, ..demand(b, &on(gb)) },
                    ];
                    assert_eq!(found, labeling_exists(&g, &demands), "{a} {b} {ga} {gb}");
                }
            }
        }
    }
}

#[test]
fn exit_variant_two_agrees() {
    let q0 = Adjustment::Q0.graph();
    let a_line = [v(3, 1), v(3, 2), v(3, 3)];
    for &s1 in &cells() {
        for &t1 in &cells() {
            for &s2 in &cells() {
                let req = ExitRequest::LinkAndMate { s1, t1, s2 };
                let found = exit_mating(NW, Adjustment::Q0, &req, &Restrictions::NONE).is_ok();
                let demands = [demand(s1, &[t1]), demand(s2, &a_line)];
                assert_eq!(found, labeling_exists(&q0, &demands), "{s1} {t1} {s2}");
                assert!(found);
            }
        }
    }
}

#[test]
fn exit_variant_three_agrees() {
    let q0 = Adjustment::Q0.graph();
    let a_line = [v(3, 1), v(3, 2), v(3, 3)];
    let cs = cells();
    for i in 0..9 {
        for j in i + 1..9 {
            for k in j + 1..9 {
                let s = [cs[i], cs[j], cs[k]];
                let found = exit_mating(NW, Adjustment::Q0, &ExitRequest::Distinct(s), &Restrictions::NONE).is_ok();
                let demands: Vec<Demand> =
                    s.iter().map(|&x| Demand { group: Some(0), ..demand(x, &a_line) }).collect();
                assert_eq!(found, labeling_exists(&q0, &demands), "{s:?}");
            }
        }
    }
}

#[test]
fn projection_exceptions_agree() {
    let q0 = Adjustment::Q0.graph();
    let a_line = [v(3, 1), v(3, 2), v(3, 3)];
    let t1 = [v(1, 1), v(2, 1), v(3, 1)];
    let t2 = [v(2, 3), v(1, 3), v(1, 2), v(1, 1)];
    let others = [v(1, 2), v(2, 2), v(3, 3)];
    for t in [&t1[..], &t2[..], &others[..]] {
        for &s in t {
            let found = project_to_a(NW, t, s, &Restrictions::NONE).is_ok();
            let mut demands = vec![demand(s, &[v(2, 3)])];
            demands.extend(t.iter().filter(|&&x| x != s).map(|&x| demand(x, &a_line)));
            assert_eq!(found, labeling_exists(&q0, &demands), "{t:?} {s}");
        }
    }
}

#[test]
fn framing_plus_one_gap_is_real() {
    // s_r at the far corner with the other two on the top side: no α works.
    let g = GridGraph::new(3, 3).unwrap();
    let c1 = c1_edges(&g);
    let (sp, sq, sr) = (v(1, 2), v(1, 3), v(1, 1));
    let mut any = false;
    for (apexes, other) in [(vec![v(3, 3)], vec![v(2, 2), v(2, 3), v(3, 2)]), (vec![v(2, 2), v(2, 3), v(3, 2)], vec![v(3, 3)])] {
        for w in apexes {
            let demands = [
                Demand { avoid: c1, ..demand(sp, &[w]) },
                Demand { avoid: c1, ..demand(sq, &[w]) },
                Demand { avoid: c1, ..demand(sr, &other) },
            ];
            any |= labeling_exists(&g, &demands);
        }
    }
    assert!(!any);
    assert!(matches!(
        framing_two_plus_one(Quadrant::NW, [sp, sq, sr], &Restrictions::NONE),
        Err(LemmaError::Violation { .. })
    ));
    // Moving the corner out of the s_r role fixes it.
    assert!(framing_two_plus_one(Quadrant::NW, [sr, sp, sq], &Restrictions::NONE).is_ok());
}
