use gridlink_construct::{route_in_subgrid_3pp, Block, SubgridError};
use gridlink_core::{v, validate_linkage, GridGraph, Pairing};

#[test]
fn nested_corner_pairs_on_four_by_four() {
    let block = Block { top: 2, left: 2, rows: 4, cols: 4 };
    let pairs = [(v(2, 2), v(5, 5)), (v(2, 5), v(5, 2)), (v(3, 3), v(4, 4))];
    let l = route_in_subgrid_3pp(block, &pairs).unwrap();
    let g = GridGraph::new(6, 6).unwrap();
    let p = Pairing::new(&g, pairs.to_vec()).unwrap();
    assert_eq!(validate_linkage(&g, &p, &l), Ok(()));
    assert!(l.paths().iter().flat_map(|q| q.vertices()).all(|&x| block.contains(x)));
}

#[test]
fn tall_blocks_are_accepted() {
    let block = Block { top: 1, left: 3, rows: 6, cols: 4 };
    let pairs = [(v(1, 3), v(6, 6)), (v(1, 6), v(6, 3)), (v(3, 4), v(4, 5))];
    assert!(route_in_subgrid_3pp(block, &pairs).is_ok());
}

#[test]
fn preconditions_are_enforced() {
    let block = Block { top: 1, left: 1, rows: 4, cols: 4 };
    let shared = [(v(1, 1), v(2, 2)), (v(2, 2), v(3, 3)), (v(4, 4), v(1, 4))];
    assert_eq!(route_in_subgrid_3pp(block, &shared), Err(SubgridError::Duplicate(v(2, 2))));
    let outside = [(v(1, 1), v(5, 5)), (v(2, 2), v(3, 3)), (v(4, 4), v(1, 4))];
    assert_eq!(route_in_subgrid_3pp(block, &outside), Err(SubgridError::Outside(v(5, 5))));
    let two = [(v(1, 1), v(2, 2)), (v(3, 3), v(4, 4))];
    assert_eq!(route_in_subgrid_3pp(block, &two), Err(SubgridError::PairCount(2)));
    let narrow = Block { top: 1, left: 1, rows: 3, cols: 5 };
    assert!(matches!(route_in_subgrid_3pp(narrow, &shared), Err(SubgridError::Shape(3, 5))));
}
