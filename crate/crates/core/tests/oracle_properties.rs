mod common;

use common::brute_force;
use gridlink_core::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn solve(g: &GridGraph, p: &Pairing, prune: PruneConfig) -> SolveReport {
    let opts = SolveOptions { prune, allow_coincident: true, ..SolveOptions::default() };
    let r = find_weak_linkage(g, p, &opts).unwrap();
    if let Status::Sat(l) = &r.status {
        assert_eq!(validate_linkage(g, p, l), Ok(()), "{p:?}");
    }
    r
}

#[test]
fn agrees_with_brute_force_on_tiny_grids() {
    for (r, c, kmax) in [(2, 2, 2), (2, 3, 3), (3, 3, 2)] {
        let g = GridGraph::new(r, c).unwrap();
        for k in 1..=kmax {
            for p in PairingSpace::new(&g, k).unwrap().iter() {
                let expected = brute_force(&g, &p);
                assert_eq!(solve(&g, &p, PruneConfig::default()).status.is_sat(), expected, "{p:?}");
            }
        }
    }
}

#[test]
fn pruning_is_sound_on_g33() {
    let g = GridGraph::new(3, 3).unwrap();
    for k in 1..=3 {
        for p in PairingSpace::new(&g, k).unwrap().iter() {
            let pruned = solve(&g, &p, PruneConfig::default());
            let plain = solve(&g, &p, PruneConfig::NONE);
            assert_eq!(pruned.status.is_sat(), plain.status.is_sat(), "{p:?}");
            assert_ne!(pruned.status, Status::Timeout);
            assert_ne!(plain.status, Status::Timeout);
        }
    }
}

#[test]
fn pruning_is_sound_on_g44_sample() {
    let g = GridGraph::new(4, 4).unwrap();
    let vs = g.vertices();
    let configs = [
        PruneConfig { reachability: true, cuts: false },
        PruneConfig { reachability: false, cuts: true },
    ];
    for i in 0..10_000u64 {
        let k = 1 + (i % 3) as usize;
        let p = seeded_sample(&vs, k, 2024, i);
        let reference = solve(&g, &p, PruneConfig::NONE);
        assert_ne!(reference.status, Status::Timeout);
        let full = solve(&g, &p, PruneConfig::default());
        assert_eq!(full.status.is_sat(), reference.status.is_sat(), "{p:?}");
        let partial = solve(&g, &p, configs[(i % 2) as usize]);
        assert_eq!(partial.status.is_sat(), reference.status.is_sat(), "{p:?}");
    }
}

#[test]
fn status_is_invariant_under_symmetry_and_relabeling() {
    let g = GridGraph::new(6, 6).unwrap();
    let vs = g.vertices();
    let oracle = Oracle::new(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for i in 0..1000u64 {
        // Mix 4- and 5-pair instances so both outcomes occur.
        let k = if i % 4 == 0 { 5 } else { 4 };
        let p = seeded_sample(&vs, k, 31, i);
        let base = oracle.solve(&p, &SolveOptions::default()).unwrap();
        let sym = Symmetry::ALL[(i % 8) as usize];
        let mapped = sym.apply_pairing(&g, &p).unwrap();
        let r = oracle.solve(&mapped, &SolveOptions::default()).unwrap();
        assert_eq!(base.status.is_sat(), r.status.is_sat(), "{p:?} under {sym}");
        let mut order: Vec<usize> = (0..k).collect();
        order.shuffle(&mut rng);
        let flips: Vec<bool> = (0..k).map(|j| (i >> j) & 1 == 1).collect();
        let relabeled = p.permuted(&order).oriented(&flips);
        let r = oracle.solve(&relabeled, &SolveOptions::default()).unwrap();
        assert_eq!(base.status.is_sat(), r.status.is_sat(), "{p:?} relabeled");
        if let Status::Sat(l) = &base.status {
            let ml = sym.apply_linkage(&g, l).unwrap();
            assert_eq!(validate_linkage(&g, &mapped, &ml), Ok(()));
        }
    }
}

#[test]
fn sat_on_subgrid_stays_sat_on_supergrid() {
    let small = GridGraph::new(4, 4).unwrap();
    let big = GridGraph::new(6, 6).unwrap();
    let vs = small.vertices();
    for i in 0..300 {
        let p = seeded_sample(&vs, 3, 8, i);
        let on_small = find_weak_linkage(&small, &p, &SolveOptions::default()).unwrap();
        let lifted = Pairing::new(&big, p.pairs().to_vec()).unwrap();
        let on_big = find_weak_linkage(&big, &lifted, &SolveOptions::default()).unwrap();
        if on_small.status.is_sat() {
            assert!(on_big.status.is_sat());
        }
    }
}

#[test]
fn five_crowded_pairs_are_refuted() {
    let g = GridGraph::new(6, 6).unwrap();
    for (t1, t5) in [(v(6, 1), v(6, 6)), (v(4, 4), v(5, 5))] {
        let p = Pairing::new(
            &g,
            vec![(v(1, 1), t1), (v(2, 1), v(1, 3)), (v(3, 1), v(1, 2)), (v(3, 2), v(2, 3)), (v(2, 2), t5)],
        )
        .unwrap();
        let r = find_weak_linkage(&g, &p, &SolveOptions::default()).unwrap();
        assert_eq!(r.status, Status::Unsat);
        // Exhaustion, not a budget cut-off.
        assert!(r.nodes_expanded < r.limits.max_nodes);
    }
}

#[test]
fn adjusted_graphs_are_searched_correctly() {
    // Merged vertices: contracting (1,2) into (2,2) on a 3x3 grid makes
    // (1,1)-(2,2) an edge.
    let g = GridGraph::new(3, 3).unwrap().contract(v(1, 2), v(2, 2)).unwrap();
    let p = Pairing::new(&g, vec![(v(1, 1), v(2, 2))]).unwrap();
    match find_weak_linkage(&g, &p, &SolveOptions::default()).unwrap().status {
        Status::Sat(l) => {
            assert_eq!(l.paths()[0].len(), 1);
            assert_eq!(validate_linkage(&g, &p, &l), Ok(()));
        }
        other => panic!("{other:?}"),
    }
    for k in 1..=2 {
        for p in PairingSpace::new(&g, k).unwrap().iter() {
            assert_eq!(solve(&g, &p, PruneConfig::default()).status.is_sat(), brute_force(&g, &p), "{p:?}");
        }
    }
}
