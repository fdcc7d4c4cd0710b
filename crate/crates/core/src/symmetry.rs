//! Dihedral symmetries of a rectangular grid.

use crate::bitset::{EdgeSet, VertexSet};
use crate::grid::{GridError, GridGraph, Vertex};
use crate::linkage::{Linkage, Pairing, Path};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of the dihedral group of the square, acting on an `a × b`
/// grid. Written as: optionally transpose, then optionally reflect rows
/// (`r ↦ a'+1−r`) and columns (`c ↦ b'+1−c`), where `a' × b'` are the
/// dimensions after the transpose.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symmetry {
    pub transpose: bool,
    pub flip_rows: bool,
    pub flip_cols: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::new(false, false, false);
    pub const ROT180: Symmetry = Symmetry::new(false, true, true);
    pub const FLIP_ROWS: Symmetry = Symmetry::new(false, true, false);
    pub const FLIP_COLS: Symmetry = Symmetry::new(false, false, true);
    pub const TRANSPOSE: Symmetry = Symmetry::new(true, false, false);
    /// Clockwise quarter turn.
    pub const ROT90: Symmetry = Symmetry::new(true, false, true);
    pub const ROT270: Symmetry = Symmetry::new(true, true, false);
    pub const ANTI_TRANSPOSE: Symmetry = Symmetry::new(true, true, true);

    pub const ALL: [Symmetry; 8] = [
        Symmetry::IDENTITY,
        Symmetry::ROT90,
        Symmetry::ROT180,
        Symmetry::ROT270,
        Symmetry::FLIP_ROWS,
        Symmetry::FLIP_COLS,
        Symmetry::TRANSPOSE,
        Symmetry::ANTI_TRANSPOSE,
    ];

    pub const fn new(transpose: bool, flip_rows: bool, flip_cols: bool) -> Symmetry {
        Symmetry { transpose, flip_rows, flip_cols }
    }

    /// Symmetries valid for an `rows × cols` grid: all eight when square,
    /// otherwise the four that do not transpose.
    pub fn group(rows: u8, cols: u8) -> Vec<Symmetry> {
        Symmetry::ALL
            .into_iter()
            .filter(|s| rows == cols || !s.transpose)
            .collect()
    }

    pub fn is_valid_for(self, rows: u8, cols: u8) -> bool {
        rows == cols || !self.transpose
    }

    /// Image of `x` in an `rows × cols` grid.
    #[inline]
    pub fn map_vertex(self, rows: u8, cols: u8, x: Vertex) -> Vertex {
        let (mut r, mut c, a, b) = if self.transpose {
            (x.col, x.row, cols, rows)
        } else {
            (x.row, x.col, rows, cols)
        };
        if self.flip_rows {
            r = a + 1 - r;
        }
        if self.flip_cols {
            c = b + 1 - c;
        }
        Vertex::new(r, c)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Symmetry) -> Symmetry {
        // The action on a 3×3 square is faithful, so two probe points decide.
        let probe = [Vertex::new(1, 1), Vertex::new(1, 2)];
        let want: Vec<_> = probe
            .iter()
            .map(|&p| self.map_vertex(3, 3, other.map_vertex(3, 3, p)))
            .collect();
        Symmetry::ALL
            .into_iter()
            .find(|s| probe.iter().zip(&want).all(|(&p, &w)| s.map_vertex(3, 3, p) == w))
            .expect("dihedral group is closed")
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|s| s.compose(self) == Symmetry::IDENTITY)
            .expect("every element has an inverse")
    }

    fn check(self, g: &GridGraph) -> Result<(), GridError> {
        if self.is_valid_for(g.rows(), g.cols()) {
            Ok(())
        } else {
            Err(GridError::InvalidSymmetry(self.to_string()))
        }
    }

    pub fn apply_vertex(self, g: &GridGraph, x: Vertex) -> Result<Vertex, GridError> {
        self.check(g)?;
        Ok(self.map_vertex(g.rows(), g.cols(), x))
    }

    pub fn apply_edge_set(self, g: &GridGraph, edges: EdgeSet) -> Result<EdgeSet, GridError> {
        self.check(g)?;
        Ok(edges
            .iter()
            .map(|i| {
                let (a, b) = g.edge_at(i).endpoints();
                let (a, b) = (self.map_vertex(g.rows(), g.cols(), a), self.map_vertex(g.rows(), g.cols(), b));
                g.edge_index(a, b).expect("symmetries preserve adjacency")
            })
            .collect())
    }

    pub fn apply_vertex_set(self, g: &GridGraph, vs: VertexSet) -> Result<VertexSet, GridError> {
        self.check(g)?;
        Ok(vs
            .iter()
            .map(|i| g.index(self.map_vertex(g.rows(), g.cols(), g.vertex_at(i))))
            .collect())
    }

    pub fn apply_pairing(self, g: &GridGraph, p: &Pairing) -> Result<Pairing, GridError> {
        self.check(g)?;
        let (a, b) = (g.rows(), g.cols());
        Ok(Pairing::new_unchecked(
            p.pairs()
                .iter()
                .map(|&(s, t)| (self.map_vertex(a, b, s), self.map_vertex(a, b, t)))
                .collect(),
        ))
    }

    pub fn apply_path(self, g: &GridGraph, path: &Path) -> Result<Path, GridError> {
        self.check(g)?;
        Ok(Path::new(
            path.vertices()
                .iter()
                .map(|&x| self.map_vertex(g.rows(), g.cols(), x))
                .collect(),
        ))
    }

    pub fn apply_linkage(self, g: &GridGraph, l: &Linkage) -> Result<Linkage, GridError> {
        Ok(Linkage::new(
            l.paths()
                .iter()
                .map(|p| self.apply_path(g, p))
                .collect::<Result<_, _>>()?,
        ))
    }

    /// Image of a modified grid. Merge records are mapped pointwise.
    pub fn apply_graph(self, g: &GridGraph) -> Result<GridGraph, GridError> {
        self.check(g)?;
        let mut h = GridGraph::new(g.rows() as i64, g.cols() as i64)?
            .without_vertices(self.apply_vertex_set(g, g.removed_vertices())?)
            .without_edges(self.apply_edge_set(g, g.deleted_edges())?);
        for m in g.merges() {
            let from = self.map_vertex(g.rows(), g.cols(), m.from);
            let into = self.map_vertex(g.rows(), g.cols(), m.into);
            // The contracted edge is already among the deleted ones.
            h = h.with_merge(from, into);
        }
        Ok(h)
    }
}

impl GridGraph {
    pub(crate) fn with_merge(&self, from: Vertex, into: Vertex) -> GridGraph {
        let mut g = self.clone();
        g.push_merge(from, into);
        g
    }

    /// Dihedral symmetries that map this graph onto itself.
    pub fn dihedral_automorphisms(&self) -> Vec<Symmetry> {
        Symmetry::group(self.rows(), self.cols())
            .into_iter()
            .filter(|s| {
                let h = s.apply_graph(self).expect("valid by construction");
                h.vertex_set() == self.vertex_set() && h.edge_set() == self.edge_set() && {
                    let mut a: Vec<_> = self.edges().into_iter().map(|(_, x, y)| (x.min(y), x.max(y))).collect();
                    let mut b: Vec<_> = h.edges().into_iter().map(|(_, x, y)| (x.min(y), x.max(y))).collect();
                    a.sort();
                    b.sort();
                    a == b
                }
            })
            .collect()
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match (self.transpose, self.flip_rows, self.flip_cols) {
            (false, false, false) => "id",
            (false, true, true) => "rot180",
            (false, true, false) => "flip-rows",
            (false, false, true) => "flip-cols",
            (true, false, false) => "transpose",
            (true, false, true) => "rot90",
            (true, true, false) => "rot270",
            (true, true, true) => "anti-transpose",
        };
        f.write_str(name)
    }
}

impl fmt::Debug for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::v;

    #[test]
    fn rotation_of_corner() {
        let g = GridGraph::new(6, 6).unwrap();
        assert_eq!(Symmetry::ROT180.apply_vertex(&g, v(1, 1)).unwrap(), v(6, 6));
        assert_eq!(Symmetry::ROT90.apply_vertex(&g, v(1, 1)).unwrap(), v(1, 6));
        assert_eq!(Symmetry::ROT270.apply_vertex(&g, v(1, 1)).unwrap(), v(6, 1));
    }

    #[test]
    fn group_laws() {
        for a in Symmetry::ALL {
            assert_eq!(a.compose(Symmetry::IDENTITY), a);
            assert_eq!(a.compose(a.inverse()), Symmetry::IDENTITY);
            for b in Symmetry::ALL {
                for c in Symmetry::ALL {
                    assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
                }
                for x in [v(1, 1), v(2, 3), v(5, 4)] {
                    assert_eq!(
                        a.compose(b).map_vertex(6, 6, x),
                        a.map_vertex(6, 6, b.map_vertex(6, 6, x))
                    );
                }
            }
        }
        for s in [Symmetry::ROT180, Symmetry::FLIP_ROWS, Symmetry::FLIP_COLS, Symmetry::TRANSPOSE] {
            assert_eq!(s.compose(s), Symmetry::IDENTITY);
        }
        assert_eq!(Symmetry::ROT90.compose(Symmetry::ROT90), Symmetry::ROT180);
    }

    #[test]
    fn rectangular_grids_reject_transposes() {
        let g = GridGraph::new(3, 5).unwrap();
        assert_eq!(Symmetry::group(3, 5).len(), 4);
        assert!(Symmetry::ROT90.apply_vertex(&g, v(1, 1)).is_err());
        assert_eq!(Symmetry::ROT180.apply_vertex(&g, v(1, 1)).unwrap(), v(3, 5));
        assert_eq!(g.dihedral_automorphisms().len(), 4);
        assert_eq!(GridGraph::new(4, 4).unwrap().dihedral_automorphisms().len(), 8);
    }

    #[test]
    fn edge_sets_map_consistently() {
        let g = GridGraph::new(5, 5).unwrap();
        for s in Symmetry::ALL {
            assert_eq!(s.apply_edge_set(&g, g.edge_set()).unwrap(), g.edge_set());
            let one = EdgeSet::singleton(g.edge_index(v(1, 1), v(1, 2)).unwrap());
            let img = s.apply_edge_set(&g, one).unwrap();
            let e = g.edge_at(img.iter().next().unwrap());
            let (a, b) = e.endpoints();
            let mut want = [s.map_vertex(5, 5, v(1, 1)), s.map_vertex(5, 5, v(1, 2))];
            want.sort();
            assert_eq!([a, b], want);
        }
    }
}
