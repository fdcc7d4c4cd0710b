//! Local coordinates of a quadrant.
//!
//! Every lemma is stated and searched on a standalone 3×3 grid in the
//! orientation of the north-west quadrant: the boundary line `A` is row 3,
//! `B` is column 3, and they meet at `x0 = (3,3)`, the quadrant's vertex on
//! the central 4-cycle. An [`Orientation`] places that local grid onto one
//! of the four quadrants of the 6×6 grid, optionally transposed first so
//! that `A` becomes the vertical boundary line.

use gridlink_core::{v, EdgeSet, GridGraph, Path, Quadrant, Vertex, VertexSet};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Local `x0`: the corner shared by `A` and `B`, on the central 4-cycle.
pub const X0: Vertex = v(3, 3);
/// Local `x1`: middle vertex of the quadrant's part of the 12-cycle.
pub const X1: Vertex = v(2, 2);
/// Local corner not on `A ∪ B`.
pub const FAR_CORNER: Vertex = v(1, 1);
/// Local middle vertex of `B`.
pub const B_MIDDLE: Vertex = v(2, 3);
/// The two local corners of degree three in the 6×6 grid.
pub const Y0_ON_B: Vertex = v(1, 3);
pub const Y0_ON_A: Vertex = v(3, 1);

/// Which standard cycle a mate or frame refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CycleId {
    C0,
    C1,
}

impl CycleId {
    pub const BOTH: [CycleId; 2] = [CycleId::C0, CycleId::C1];

    pub fn other(self) -> CycleId {
        match self {
            CycleId::C0 => CycleId::C1,
            CycleId::C1 => CycleId::C0,
        }
    }

    /// Local vertices of the cycle inside the quadrant.
    pub fn local_vertices(self) -> Vec<Vertex> {
        match self {
            CycleId::C0 => vec![X0],
            CycleId::C1 => vec![v(2, 2), v(2, 3), v(3, 2)],
        }
    }

    /// Local apex `x_α`.
    pub fn local_apex(self) -> Vertex {
        match self {
            CycleId::C0 => X0,
            CycleId::C1 => X1,
        }
    }
}

impl fmt::Display for CycleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleId::C0 => "C0",
            CycleId::C1 => "C1",
        })
    }
}

/// Which boundary line a mate must reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn local_vertices(self) -> Vec<Vertex> {
        match self {
            Side::A => vec![v(3, 1), v(3, 2), v(3, 3)],
            Side::B => vec![v(1, 3), v(2, 3), v(3, 3)],
        }
    }
}

/// The standalone local 3×3 grid.
pub fn local_grid() -> GridGraph {
    GridGraph::new(3, 3).expect("3x3 grid")
}

/// Local vertex set of a list of local vertices.
pub fn local_set(vs: &[Vertex]) -> VertexSet {
    let g = local_grid();
    vs.iter().map(|&x| g.index(x)).collect()
}

/// Local edges of the 12-cycle inside the quadrant.
pub fn local_c1_edges() -> EdgeSet {
    let g = local_grid();
    [v(2, 3), v(3, 2)]
        .into_iter()
        .map(|w| g.edge_index(X1, w).expect("adjacent"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    pub quadrant: Quadrant,
    /// Transpose the local grid before placing it, so `A` is vertical.
    pub transpose: bool,
}

impl Orientation {
    pub const fn new(quadrant: Quadrant, transpose: bool) -> Orientation {
        Orientation { quadrant, transpose }
    }

    pub const fn horizontal(quadrant: Quadrant) -> Orientation {
        Orientation { quadrant, transpose: false }
    }

    pub fn all() -> Vec<Orientation> {
        Quadrant::ALL
            .into_iter()
            .flat_map(|q| [Orientation::new(q, false), Orientation::new(q, true)])
            .collect()
    }

    fn flips(self) -> (bool, bool) {
        match self.quadrant {
            Quadrant::NW => (false, false),
            Quadrant::NE => (false, true),
            Quadrant::SW => (true, false),
            Quadrant::SE => (true, true),
        }
    }

    /// Local vertex to its 6×6 position.
    pub fn to_global(self, x: Vertex) -> Vertex {
        let (r, c) = if self.transpose { (x.col, x.row) } else { (x.row, x.col) };
        let (fr, fc) = self.flips();
        Vertex::new(if fr { 7 - r } else { r }, if fc { 7 - c } else { c })
    }

    /// 6×6 vertex to local coordinates, `None` outside the quadrant.
    pub fn to_local(self, x: Vertex) -> Option<Vertex> {
        if !self.quadrant.contains(x) {
            return None;
        }
        let (fr, fc) = self.flips();
        let (r, c) = (if fr { 7 - x.row } else { x.row }, if fc { 7 - x.col } else { x.col });
        Some(if self.transpose { Vertex::new(c, r) } else { Vertex::new(r, c) })
    }

    pub fn path_to_global(self, p: &Path) -> Path {
        Path::new(p.vertices().iter().map(|&x| self.to_global(x)).collect())
    }

    pub fn vertices_to_global(self, vs: &[Vertex]) -> Vec<Vertex> {
        vs.iter().map(|&x| self.to_global(x)).collect()
    }

    /// Local edge set of the 3×3 grid to canonical 6×6 edge indices.
    pub fn edges_to_global(self, local: EdgeSet) -> EdgeSet {
        let lg = local_grid();
        let g = GridGraph::new(6, 6).expect("6x6 grid");
        local
            .iter()
            .map(|i| {
                let (a, b) = lg.edge_at(i).endpoints();
                g.edge_index(self.to_global(a), self.to_global(b)).expect("image of a grid edge")
            })
            .collect()
    }

    /// 6×6 edge set to local edge indices, dropping edges outside the quadrant.
    pub fn edges_to_local(self, global: EdgeSet) -> EdgeSet {
        let lg = local_grid();
        let g = GridGraph::new(6, 6).expect("6x6 grid");
        global
            .iter()
            .filter_map(|i| {
                let (a, b) = g.edge_at(i).endpoints();
                let (la, lb) = (self.to_local(a)?, self.to_local(b)?);
                lg.edge_index(la, lb)
            })
            .collect()
    }

    pub fn vertices_to_local(self, global: VertexSet) -> VertexSet {
        let lg = local_grid();
        let g = GridGraph::new(6, 6).expect("6x6 grid");
        global
            .iter()
            .filter_map(|i| self.to_local(g.vertex_at(i)).map(|x| lg.index(x)))
            .collect()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.quadrant, if self.transpose { " (A vertical)" } else { "" })
    }
}
