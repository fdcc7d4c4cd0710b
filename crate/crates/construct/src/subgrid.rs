//! Three pairs in a 4×k block of the grid.

use gridlink_core::{validate_linkage, GridGraph, Linkage, Oracle, Pairing, Path, SolveOptions, Status, Vertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubgridError {
    #[error("block must be 4 x k or k x 4 with k >= 4, got {0} x {1}")]
    Shape(u8, u8),
    #[error("expected three pairs, got {0}")]
    PairCount(usize),
    #[error("terminal {0} lies outside the block")]
    Outside(Vertex),
    #[error("terminal {0} is used more than once")]
    Duplicate(Vertex),
    #[error("no linkage inside the block: 3-path-pairability of P4 x Pk violated")]
    Violation,
    #[error("search budget exhausted")]
    Timeout,
}

/// A rectangular block of the host grid, by its inclusive corner rows and columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub top: u8,
    pub left: u8,
    pub rows: u8,
    pub cols: u8,
}

impl Block {
    pub fn contains(self, x: Vertex) -> bool {
        (self.top..self.top + self.rows).contains(&x.row) && (self.left..self.left + self.cols).contains(&x.col)
    }

    fn to_local(self, x: Vertex) -> Vertex {
        Vertex::new(x.row - self.top + 1, x.col - self.left + 1)
    }

    fn to_host(self, x: Vertex) -> Vertex {
        Vertex::new(x.row + self.top - 1, x.col + self.left - 1)
    }
}

/// Link three pairs of distinct terminals inside `block` using only its
/// edges. Returned paths are in host coordinates.
pub fn route_in_subgrid_3pp(block: Block, pairs: &[(Vertex, Vertex)]) -> Result<Linkage, SubgridError> {
    let (r, c) = (block.rows, block.cols);
    if r.min(c) != 4 || r.max(c) < 4 {
        return Err(SubgridError::Shape(r, c));
    }
    if pairs.len() != 3 {
        return Err(SubgridError::PairCount(pairs.len()));
    }
    let mut seen = Vec::new();
    for &x in pairs.iter().flat_map(|(s, t)| [s, t]) {
        if !block.contains(x) {
            return Err(SubgridError::Outside(x));
        }
        if seen.contains(&x) {
            return Err(SubgridError::Duplicate(x));
        }
        seen.push(x);
    }
    let g = GridGraph::new(r as i64, c as i64).expect("block dimensions are valid");
    let local: Vec<_> = pairs.iter().map(|&(s, t)| (block.to_local(s), block.to_local(t))).collect();
    let p = Pairing::new(&g, local).expect("terminals checked above");
    let report = Oracle::new(&g).solve(&p, &SolveOptions::default()).expect("terminals checked above");
    match report.status {
        Status::Sat(l) => {
            debug_assert!(validate_linkage(&g, &p, &l).is_ok());
            let paths = l
                .paths()
                .iter()
                .map(|q| Path::new(q.vertices().iter().map(|&x| block.to_host(x)).collect()))
                .collect();
            Ok(Linkage::new(paths))
        }
        Status::Unsat => {
            log::error!("lemma alarm: no linkage for {pairs:?} in {block:?}");
            Err(SubgridError::Violation)
        }
        Status::Timeout => Err(SubgridError::Timeout),
    }
}
