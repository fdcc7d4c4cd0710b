use gridlink_core::{v, Adjustment, EdgeSet, GridGraph, Path, Quadrant, Vertex, VertexSet};
use gridlink_lemmas::*;

const NW: Orientation = Orientation { quadrant: Quadrant::NW, transpose: false };

fn g6() -> GridGraph {
    GridGraph::new(6, 6).unwrap()
}

fn edge_set(paths: &[&Path]) -> EdgeSet {
    let g = g6();
    let mut all = EdgeSet::default();
    for p in paths {
        for e in p.edge_indices(&g).expect("grid walk") {
            assert!(all.insert(e), "shared edge in {p}");
        }
    }
    all
}

#[test]
fn designated_pair_with_three_escapes() {
    let plan = escape_designated(NW, (v(1, 1), v(3, 3)), [v(1, 2), v(2, 1), v(2, 2)], &Restrictions::NONE).unwrap();
    assert_eq!(plan.linked.len(), 1);
    let p1 = &plan.linked[0].1;
    assert_eq!((p1.first(), p1.last()), (Some(v(1, 1)), Some(v(3, 3))));
    assert_eq!(plan.exits.len(), 3);
    let b_only = plan.exits.iter().filter(|x| x.col == 3 && x.row < 3).count();
    assert!(b_only <= 1);
    let mut paths = vec![p1];
    paths.extend(plan.mating.iter().map(|(_, p)| p));
    edge_set(&paths);
}

#[test]
fn eight_terminals_link_two_pairs() {
    let q = CrowdedQuadrant {
        pairs: vec![(v(1, 1), v(2, 2)), (v(1, 2), v(2, 1)), (v(1, 3), v(3, 1)), (v(2, 3), v(3, 2))],
        singles: vec![],
    };
    let plan = escape_crowded(NW, &q, &Restrictions::NONE).unwrap();
    assert!(plan.linked.len() >= 2);
    assert_eq!(plan.mating.len(), 8 - 2 * plan.linked.len());
    let mut exits = plan.exits.clone();
    exits.sort();
    exits.dedup();
    assert_eq!(exits.len(), plan.exits.len());
}

#[test]
fn crowded_preconditions() {
    let q = CrowdedQuadrant { pairs: vec![(v(1, 1), v(2, 2))], singles: vec![v(1, 2), v(1, 3)] };
    assert!(matches!(escape_crowded(NW, &q, &Restrictions::NONE), Err(LemmaError::Precondition(_))));
    let outside = CrowdedQuadrant {
        pairs: vec![(v(1, 1), v(2, 2)), (v(1, 2), v(2, 1)), (v(1, 3), v(4, 4))],
        singles: vec![],
    };
    assert!(matches!(escape_crowded(NW, &outside, &Restrictions::NONE), Err(LemmaError::Precondition(_))));
}

#[test]
fn crowded_in_south_east_exits_toward_the_centre() {
    let q = CrowdedQuadrant {
        pairs: vec![(v(6, 6), v(5, 5)), (v(6, 5), v(5, 6)), (v(6, 4), v(4, 6))],
        singles: vec![],
    };
    let plan = escape_crowded(Orientation::horizontal(Quadrant::SE), &q, &Restrictions::NONE).unwrap();
    assert!(!plan.linked.is_empty());
    assert!(plan.exits.iter().all(|x| x.row == 4 || x.col == 4));
}

#[test]
fn coincident_cycle_mating() {
    let [a, b] = mate_to_cycles(Quadrant::NW, [v(1, 1), v(1, 1)], [CycleId::C0, CycleId::C0], &Restrictions::NONE).unwrap();
    assert_eq!(a.last(), Some(v(3, 3)));
    assert_eq!(b.last(), Some(v(3, 3)));
    edge_set(&[&a, &b]);
    let [x, _] = mate_to_cycles(Quadrant::NW, [v(3, 3), v(1, 1)], [CycleId::C0, CycleId::C1], &Restrictions::NONE).unwrap();
    assert_eq!(x, Path::trivial(v(3, 3)));
}

#[test]
fn framing_apexes_in_north_east() {
    let f = build_framing(Quadrant::NE, [v(1, 4), v(1, 6)], CycleId::C0, &Restrictions::NONE).unwrap();
    assert_eq!(f.apex, v(3, 4));
    let f1 = build_framing(Quadrant::NE, [v(1, 5), v(1, 5)], CycleId::C1, &Restrictions::NONE).unwrap();
    assert_eq!(f1.apex, v(2, 5));
    edge_set(&[&f1.feeders[0], &f1.feeders[1]]);
}

#[test]
fn framing_plus_one_on_the_top_row() {
    let r = framing_two_plus_one(Quadrant::NW, [v(1, 1), v(1, 2), v(1, 3)], &Restrictions::NONE).unwrap();
    assert_eq!(r.third.first(), Some(v(1, 3)));
    let beta = r.frame.cycle.other();
    let end = r.third.last().unwrap();
    assert_eq!(beta == CycleId::C0, end == v(3, 3));
    // With s_r = x0 the third path is empty and must end on C0, so α = 1.
    let r = framing_two_plus_one(Quadrant::NW, [v(1, 1), v(1, 2), v(3, 3)], &Restrictions::NONE).unwrap();
    assert_eq!(r.frame.cycle, CycleId::C1);
    assert_eq!(r.third, Path::trivial(v(3, 3)));
}

#[test]
fn framing_choice_variants() {
    let s = [v(1, 1), v(2, 2), v(3, 3)];
    let r = framing_choose_pq(Quadrant::NW, s, ChoiceTarget::FourCycle, &Restrictions::NONE).unwrap();
    assert!(r.chosen.0 < r.chosen.1);
    assert_eq!(r.frame.apex, v(3, 3));
    let r = framing_choose_pq(Quadrant::NW, s, ChoiceTarget::TwelveCycle(v(1, 3)), &Restrictions::NONE).unwrap();
    assert_eq!(r.third.last(), Some(v(1, 3)));
    let bad = framing_choose_pq(Quadrant::NW, s, ChoiceTarget::TwelveCycle(v(1, 1)), &Restrictions::NONE);
    assert!(matches!(bad, Err(LemmaError::Precondition(_))));
}

#[test]
fn exit_mating_shapes() {
    let paths = exit_mating(NW, Adjustment::Q0, &ExitRequest::Distinct([v(1, 1), v(1, 2), v(1, 3)]), &Restrictions::NONE)
        .unwrap();
    let mut ends: Vec<Vertex> = paths.iter().map(|p| p.last().unwrap()).collect();
    ends.sort();
    assert_eq!(ends, vec![v(3, 1), v(3, 2), v(3, 3)]);
    let req = ExitRequest::LinkAndMate { s1: v(2, 2), t1: v(2, 2), s2: v(1, 1) };
    let paths = exit_mating(NW, Adjustment::Q0, &req, &Restrictions::NONE).unwrap();
    assert!(paths[0].is_empty());
    assert_eq!(paths[1].last().unwrap().row, 3);
    // Q0 has no edges along A.
    for p in &paths {
        assert!(p.vertices().windows(2).all(|w| !(w[0].row == 3 && w[1].row == 3)));
    }
    let removed = ExitRequest::Spread([v(1, 1), v(2, 2), v(3, 3)]);
    assert!(matches!(exit_mating(NW, Adjustment::Q1, &removed, &Restrictions::NONE), Err(LemmaError::Precondition(_))));
    let on_a = ExitRequest::Distinct([v(3, 1), v(3, 1), v(2, 2)]);
    assert!(matches!(exit_mating(NW, Adjustment::Q0, &on_a, &Restrictions::NONE), Err(LemmaError::Precondition(_))));
    let off_a = ExitRequest::Distinct([v(1, 1), v(1, 1), v(2, 2)]);
    assert!(exit_mating(NW, Adjustment::Q0, &off_a, &Restrictions::NONE).is_ok());
}

#[test]
fn projection_refusals_and_guarantees() {
    let t1 = [v(1, 1), v(2, 1), v(3, 1)];
    assert!(matches!(project_to_a(NW, &t1, v(3, 1), &Restrictions::NONE), Err(LemmaError::Refused { .. })));
    assert_eq!(projection_guarantee(NW, &t1).unwrap(), Guarantee::Only(vec![v(1, 1), v(2, 1)]));
    let t2 = [v(1, 3), v(2, 3), v(1, 1), v(1, 2)];
    assert_eq!(projection_guarantee(NW, &t2).unwrap(), Guarantee::Only(vec![v(2, 3), v(1, 3)]));
    let mut ok = projection_choices(NW, &t2, &Restrictions::NONE).unwrap();
    ok.sort();
    assert_eq!(ok, vec![v(1, 3), v(2, 3)]);
    let plan = project_to_a(NW, &t2, v(2, 3), &Restrictions::NONE).unwrap();
    assert!(plan.link.is_empty());
    assert_eq!(plan.mating.len(), 3);
    assert_eq!(projection_guarantee(NW, &[v(1, 2), v(2, 2)]).unwrap(), Guarantee::Every);
    assert_eq!(projection_guarantee(NW, &[v(1, 1), v(2, 2)]).unwrap(), Guarantee::AtLeast(2));
}

#[test]
fn boundary_linkage_trivial_cases() {
    let r = boundary_linkage(NW, [v(2, 2), v(2, 2), v(3, 1), v(1, 1)], [Side::A, Side::B], &Restrictions::NONE).unwrap();
    assert!(r.link.is_empty());
    assert!(r.mating[0].is_empty());
    assert_eq!(r.mating[1].last().unwrap().col, 3);
}

#[test]
fn restrictions_are_respected() {
    let g = g6();
    let blocked: EdgeSet = [g.edge_index(v(1, 1), v(1, 2)).unwrap()].into_iter().collect();
    let r = Restrictions { edges: blocked, ends: VertexSet::default() };
    let [a, _] = mate_to_cycles(Quadrant::NW, [v(1, 1), v(2, 2)], [CycleId::C1, CycleId::C1], &r).unwrap();
    assert_eq!(a.vertices(), &[v(1, 1), v(2, 1), v(2, 2)]);
    // Cutting (1,1) off entirely is the caller's doing, not a violation.
    let cut: EdgeSet = [g.edge_index(v(1, 1), v(1, 2)).unwrap(), g.edge_index(v(1, 1), v(2, 1)).unwrap()]
        .into_iter()
        .collect();
    let r = Restrictions { edges: cut, ends: VertexSet::default() };
    let out = mate_to_cycles(Quadrant::NW, [v(1, 1), v(2, 2)], [CycleId::C1, CycleId::C1], &r);
    assert_eq!(out, Err(LemmaError::Restricted { lemma: LemmaId::Framing }));
    let ends = Restrictions { edges: EdgeSet::default(), ends: [g.index(v(3, 3))].into_iter().collect() };
    let paths =
        exit_mating(NW, Adjustment::Q0, &ExitRequest::Distinct([v(1, 1), v(1, 2), v(2, 2)]), &ends);
    assert_eq!(paths, Err(LemmaError::Restricted { lemma: LemmaId::BoundaryExit }));
}

#[test]
fn transposed_frame_swaps_the_lines() {
    let o = Orientation::new(Quadrant::NW, true);
    assert_eq!(side_vertices(o, Side::A), vec![v(1, 3), v(2, 3), v(3, 3)]);
    assert_eq!(b_middle(o), v(3, 2));
    assert_eq!(far_corner(o), v(1, 1));
    let t1 = [v(1, 1), v(1, 2), v(1, 3)];
    assert_eq!(projection_guarantee(o, &t1).unwrap(), Guarantee::Only(vec![v(1, 1), v(1, 2)]));
}

#[test]
fn answers_are_deterministic() {
    let q = CrowdedQuadrant { pairs: vec![(v(1, 1), v(3, 3)), (v(1, 3), v(3, 1)), (v(2, 2), v(1, 2))], singles: vec![] };
    let a = escape_crowded(NW, &q, &Restrictions::NONE).unwrap();
    let b = escape_crowded(NW, &q, &Restrictions::NONE).unwrap();
    assert_eq!(a, b);
    let json = serde_json::to_string(&a).unwrap();
    assert_eq!(serde_json::from_str::<EscapePlan>(&json).unwrap(), a);
}
