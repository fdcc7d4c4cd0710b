//! Grid graphs `P_a □ P_b` and the modified subgraphs built from them.
//!
//! Vertices are `(row, col)`, 1-based, row 1 on top. A [`GridGraph`] is always
//! a host rectangle plus three kinds of modification: removed vertices,
//! deleted edges, and vertex merges (edge contractions). Edge identity is the
//! canonical index of the underlying host edge, so edge sets stay comparable
//! between a graph and any of its subgraphs.

use crate::bitset::{EdgeSet, VertexSet, CAPACITY};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("grid dimensions must be positive, got {rows}x{cols}")]
    EmptyDimension { rows: i64, cols: i64 },
    #[error("grid {rows}x{cols} exceeds the 128-edge capacity")]
    TooLarge { rows: i64, cols: i64 },
    #[error("vertex {0} is not in the graph")]
    VertexOutside(Vertex),
    #[error("vertices {0} and {1} are not joined by an edge")]
    NotAdjacent(Vertex, Vertex),
    #[error("expected a {expected_rows}x{expected_cols} grid, got {rows}x{cols}")]
    WrongDimensions {
        expected_rows: u8,
        expected_cols: u8,
        rows: u8,
        cols: u8,
    },
    #[error("symmetry {0} is not an automorphism of a non-square grid")]
    InvalidSymmetry(String),
    #[error("{0}")]
    Malformed(String),
}

/// A grid position. Ordering is row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub row: u8,
    pub col: u8,
}

impl Vertex {
    pub const fn new(row: u8, col: u8) -> Self {
        Vertex { row, col }
    }

    pub fn is_adjacent(self, other: Vertex) -> bool {
        self.row.abs_diff(other.row) as u16 + self.col.abs_diff(other.col) as u16 == 1
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience constructor used heavily in tests and fixed instances.
pub const fn v(row: u8, col: u8) -> Vertex {
    Vertex::new(row, col)
}

/// Unordered pair of unit-adjacent vertices, stored with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Edge {
    a: Vertex,
    b: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, w: Vertex) -> Result<Edge, GridError> {
        if !u.is_adjacent(w) {
            return Err(GridError::NotAdjacent(u, w));
        }
        Ok(if u < w { Edge { a: u, b: w } } else { Edge { a: w, b: u } })
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    pub fn is_horizontal(self) -> bool {
        self.a.row == self.b.row
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Record of an edge contraction: `from` is identified with `into`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Merge {
    pub from: Vertex,
    pub into: Vertex,
}

/// Number of edges of the full `rows × cols` grid.
pub fn grid_edge_count(rows: usize, cols: usize) -> usize {
    rows * cols.saturating_sub(1) + rows.saturating_sub(1) * cols
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GridGraph {
    rows: u8,
    cols: u8,
    removed: VertexSet,
    deleted: EdgeSet,
    merges: Vec<Merge>,
}

impl GridGraph {
    /// The full grid `P_rows □ P_cols`.
    pub fn new(rows: i64, cols: i64) -> Result<GridGraph, GridError> {
        if rows < 1 || cols < 1 {
            return Err(GridError::EmptyDimension { rows, cols });
        }
        if rows > 64
            || cols > 64
            || (rows * cols) as usize > CAPACITY
            || grid_edge_count(rows as usize, cols as usize) > CAPACITY
        {
            return Err(GridError::TooLarge { rows, cols });
        }
        Ok(GridGraph {
            rows: rows as u8,
            cols: cols as u8,
            removed: VertexSet::EMPTY,
            deleted: EdgeSet::EMPTY,
            merges: Vec::new(),
        })
    }

    pub fn rows(&self) -> u8 {
        self.rows
    }

    pub fn cols(&self) -> u8 {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// True when no vertex, edge or merge modification has been applied.
    pub fn is_plain(&self) -> bool {
        self.removed.is_empty() && self.deleted.is_empty() && self.merges.is_empty()
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    pub fn deleted_edges(&self) -> EdgeSet {
        self.deleted
    }

    pub fn removed_vertices(&self) -> VertexSet {
        self.removed
    }

    pub fn host_vertex_count(&self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub fn host_edge_count(&self) -> usize {
        grid_edge_count(self.rows as usize, self.cols as usize)
    }

    pub fn in_bounds(&self, v: Vertex) -> bool {
        v.row >= 1 && v.col >= 1 && v.row <= self.rows && v.col <= self.cols
    }

    /// Row-major index of a host vertex.
    #[inline]
    pub fn index(&self, v: Vertex) -> usize {
        (v.row as usize - 1) * self.cols as usize + (v.col as usize - 1)
    }

    #[inline]
    pub fn vertex_at(&self, i: usize) -> Vertex {
        let c = self.cols as usize;
        Vertex::new((i / c + 1) as u8, (i % c + 1) as u8)
    }

    /// Canonical index of the host edge `u-w`, independent of modifications.
    pub fn edge_index(&self, u: Vertex, w: Vertex) -> Option<usize> {
        if !self.in_bounds(u) || !self.in_bounds(w) || !u.is_adjacent(w) {
            return None;
        }
        let (a, b) = if u < w { (u, w) } else { (w, u) };
        let (rows, cols) = (self.rows as usize, self.cols as usize);
        let (i, j) = (a.row as usize, a.col as usize);
        Some(if a.row == b.row {
            (i - 1) * (cols - 1) + (j - 1)
        } else {
            rows * (cols - 1) + (i - 1) * cols + (j - 1)
        })
    }

    /// Inverse of [`GridGraph::edge_index`].
    pub fn edge_at(&self, idx: usize) -> Edge {
        let (rows, cols) = (self.rows as usize, self.cols as usize);
        let horizontal = rows * (cols - 1);
        if idx < horizontal {
            let (i, j) = (idx / (cols - 1) + 1, idx % (cols - 1) + 1);
            Edge {
                a: Vertex::new(i as u8, j as u8),
                b: Vertex::new(i as u8, j as u8 + 1),
            }
        } else {
            let k = idx - horizontal;
            let (i, j) = (k / cols + 1, k % cols + 1);
            Edge {
                a: Vertex::new(i as u8, j as u8),
                b: Vertex::new(i as u8 + 1, j as u8),
            }
        }
    }

    /// Representative of `v` after all merges.
    pub fn rep(&self, v: Vertex) -> Vertex {
        let mut cur = v;
        // Merge chains are short (at most one link in every constructible shape).
        for _ in 0..=self.merges.len() {
            match self.merges.iter().find(|m| m.from == cur) {
                Some(m) => cur = m.into,
                None => break,
            }
        }
        cur
    }

    fn is_merged_away(&self, v: Vertex) -> bool {
        self.merges.iter().any(|m| m.from == v)
    }

    /// Whether `v` is a vertex of this graph (present and not merged away).
    pub fn contains(&self, v: Vertex) -> bool {
        self.in_bounds(v) && !self.removed.contains(self.index(v)) && !self.is_merged_away(v)
    }

    fn host_present(&self, v: Vertex) -> bool {
        self.in_bounds(v) && !self.removed.contains(self.index(v))
    }

    /// Vertices of the graph in row-major order.
    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.host_vertex_count())
            .map(|i| self.vertex_at(i))
            .filter(|&x| self.contains(x))
            .collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().into_iter().map(|x| self.index(x)).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Effective edges as `(canonical index, endpoint, endpoint)` with
    /// endpoints already mapped through merges.
    pub fn edges(&self) -> Vec<(usize, Vertex, Vertex)> {
        (0..self.host_edge_count())
            .filter_map(|idx| self.resolve_edge(idx).map(|(a, b)| (idx, a, b)))
            .collect()
    }

    /// Endpoints of host edge `idx` in this graph, or `None` if it is absent.
    pub fn resolve_edge(&self, idx: usize) -> Option<(Vertex, Vertex)> {
        if idx >= self.host_edge_count() || self.deleted.contains(idx) {
            return None;
        }
        let (a, b) = self.edge_at(idx).endpoints();
        if !self.host_present(a) || !self.host_present(b) {
            return None;
        }
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra == rb {
            return None;
        }
        Some((ra, rb))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().into_iter().map(|(i, _, _)| i).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Neighbours of `v` with the canonical index of the joining edge.
    pub fn neighbors(&self, v: Vertex) -> Vec<(Vertex, usize)> {
        self.edges()
            .into_iter()
            .filter_map(|(i, a, b)| {
                if a == v {
                    Some((b, i))
                } else if b == v {
                    Some((a, i))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Canonical index of an edge joining `u` and `w` in this graph. With
    /// parallel edges (possible only after contraction) the smallest index wins.
    pub fn edge_between(&self, u: Vertex, w: Vertex) -> Option<usize> {
        if self.merges.is_empty() {
            if !self.contains(u) || !self.contains(w) {
                return None;
            }
            return self.edge_index(u, w).filter(|&i| !self.deleted.contains(i));
        }
        self.edges()
            .into_iter()
            .find(|&(_, a, b)| (a == u && b == w) || (a == w && b == u))
            .map(|(i, _, _)| i)
    }

    pub fn without_edges(&self, edges: EdgeSet) -> GridGraph {
        let mut g = self.clone();
        g.deleted = g.deleted | (edges & EdgeSet::full(self.host_edge_count()));
        g
    }

    /// Keep only the given host edges.
    pub fn only_edges(&self, edges: EdgeSet) -> GridGraph {
        self.without_edges(EdgeSet::full(self.host_edge_count()) - edges)
    }

    pub fn without_vertices(&self, vertices: VertexSet) -> GridGraph {
        let mut g = self.clone();
        g.removed = g.removed | (vertices & VertexSet::full(self.host_vertex_count()));
        g
    }

    /// Subgraph induced by `vertices` (all other host vertices removed).
    pub fn induced(&self, vertices: VertexSet) -> GridGraph {
        self.without_vertices(VertexSet::full(self.host_vertex_count()) - vertices)
    }

    /// `G − (A(r₁) ∪ A(r₂) ∪ …)`: remove whole rows.
    pub fn without_rows(&self, rows: &[u8]) -> GridGraph {
        let set = rows.iter().map(|&r| self.row_set(r)).fold(VertexSet::EMPTY, |a, b| a | b);
        self.without_vertices(set)
    }

    /// `G − (B(c₁) ∪ …)`: remove whole columns.
    pub fn without_cols(&self, cols: &[u8]) -> GridGraph {
        let set = cols.iter().map(|&c| self.col_set(c)).fold(VertexSet::EMPTY, |a, b| a | b);
        self.without_vertices(set)
    }

    /// Contract the edge `from-into`, identifying `from` with `into`.
    pub fn contract(&self, from: Vertex, into: Vertex) -> Result<GridGraph, GridError> {
        let idx = self
            .edge_between(from, into)
            .ok_or(GridError::NotAdjacent(from, into))?;
        let mut g = self.clone();
        g.deleted.insert(idx);
        g.merges.push(Merge { from, into });
        Ok(g)
    }

    /// Host vertices of row `A(r)`.
    pub fn row_set(&self, r: u8) -> VertexSet {
        (1..=self.cols).map(|c| self.index(Vertex::new(r, c))).collect()
    }

    /// Host vertices of column `B(c)`.
    pub fn col_set(&self, c: u8) -> VertexSet {
        (1..=self.rows).map(|r| self.index(Vertex::new(r, c))).collect()
    }

    /// Host vertices of the closed rectangle `[r0, r1] × [c0, c1]`.
    pub fn rect_set(&self, r0: u8, r1: u8, c0: u8, c1: u8) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for r in r0..=r1 {
            for c in c0..=c1 {
                let x = Vertex::new(r, c);
                if self.in_bounds(x) {
                    s.insert(self.index(x));
                }
            }
        }
        s
    }

    /// Host edges with both endpoints inside `vertices`.
    pub fn induced_edges(&self, vertices: VertexSet) -> EdgeSet {
        (0..self.host_edge_count())
            .filter(|&i| {
                let (a, b) = self.edge_at(i).endpoints();
                vertices.contains(self.index(a)) && vertices.contains(self.index(b))
            })
            .collect()
    }

    /// If this graph is a complete axis-aligned sub-rectangle of its host with
    /// every induced edge present, its dimensions.
    pub fn as_standalone_grid(&self) -> Option<(u8, u8)> {
        if !self.merges.is_empty() {
            return None;
        }
        let vs = self.vertices();
        let (r0, r1) = (vs.iter().map(|x| x.row).min()?, vs.iter().map(|x| x.row).max()?);
        let (c0, c1) = (vs.iter().map(|x| x.col).min()?, vs.iter().map(|x| x.col).max()?);
        let rect = self.rect_set(r0, r1, c0, c1);
        if self.vertex_set() != rect || self.edge_set() != self.induced_edges(rect) {
            return None;
        }
        Some((r1 - r0 + 1, c1 - c0 + 1))
    }

    pub(crate) fn push_merge(&mut self, from: Vertex, into: Vertex) {
        self.merges.push(Merge { from, into });
    }

    /// Parses `r,c` and checks the vertex belongs to the graph.
    pub fn vertex(&self, row: u8, col: u8) -> Result<Vertex, GridError> {
        let x = Vertex::new(row, col);
        if self.contains(x) {
            Ok(x)
        } else {
            Err(GridError::VertexOutside(x))
        }
    }
}

/// One of the four 3×3 quadrants of the 6×6 grid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Quadrant {
    NW,
    NE,
    SW,
    SE,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::NW, Quadrant::NE, Quadrant::SW, Quadrant::SE];

    /// Quadrant of a vertex of the 6×6 grid.
    pub fn of(x: Vertex) -> Quadrant {
        match (x.row <= 3, x.col <= 3) {
            (true, true) => Quadrant::NW,
            (true, false) => Quadrant::NE,
            (false, true) => Quadrant::SW,
            (false, false) => Quadrant::SE,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Top-left corner of the quadrant in 6×6 coordinates.
    pub fn origin(self) -> Vertex {
        match self {
            Quadrant::NW => v(1, 1),
            Quadrant::NE => v(1, 4),
            Quadrant::SW => v(4, 1),
            Quadrant::SE => v(4, 4),
        }
    }

    pub fn vertices(self) -> Vec<Vertex> {
        let o = self.origin();
        (0..3)
            .flat_map(|dr| (0..3).map(move |dc| v(o.row + dr, o.col + dc)))
            .collect()
    }

    pub fn vertex_set(self, g: &GridGraph) -> VertexSet {
        self.vertices().into_iter().map(|x| g.index(x)).collect()
    }

    pub fn contains(self, x: Vertex) -> bool {
        Quadrant::of(x) == self
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A cycle given by its vertices in cyclic order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.vertices.contains(&x)
    }

    pub fn position(&self, x: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&y| y == x)
    }

    pub fn edge_set(&self, g: &GridGraph) -> EdgeSet {
        let n = self.vertices.len();
        (0..n)
            .filter_map(|i| g.edge_index(self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }

    /// Walk from `from` to `to` in increasing (`forward`) or decreasing
    /// position order. Both endpoints must lie on the cycle.
    pub fn arc(&self, from: Vertex, to: Vertex, forward: bool) -> Option<Vec<Vertex>> {
        let n = self.vertices.len();
        let (mut i, j) = (self.position(from)?, self.position(to)?);
        let mut out = vec![self.vertices[i]];
        while i != j {
            i = if forward { (i + 1) % n } else { (i + n - 1) % n };
            out.push(self.vertices[i]);
        }
        Some(out)
    }
}

/// The two central cycles of the 6×6 grid and their per-quadrant anchors.
#[derive(Clone, Debug)]
pub struct CentralCycles {
    /// Innermost 4-cycle on rows/columns 3–4.
    pub c0: Cycle,
    /// 12-cycle on the boundary of the middle 4×4 square.
    pub c1: Cycle,
}

impl CentralCycles {
    /// `x₀ = Q ∩ C₀`.
    pub fn x0(&self, q: Quadrant) -> Vertex {
        *self.c0.vertices.iter().find(|&&x| q.contains(x)).expect("C0 meets every quadrant")
    }

    /// `x₁`, the middle vertex of the 3-vertex path `Q ∩ C₁` (the diagonal
    /// corner of the middle square).
    pub fn x1(&self, q: Quadrant) -> Vertex {
        match q {
            Quadrant::NW => v(2, 2),
            Quadrant::NE => v(2, 5),
            Quadrant::SW => v(5, 2),
            Quadrant::SE => v(5, 5),
        }
    }
}

/// `C₀` and `C₁` of the unmodified 6×6 grid.
pub fn central_cycles(g: &GridGraph) -> Result<CentralCycles, GridError> {
    if g.rows != 6 || g.cols != 6 || !g.is_plain() {
        return Err(GridError::WrongDimensions {
            expected_rows: 6,
            expected_cols: 6,
            rows: g.rows,
            cols: g.cols,
        });
    }
    Ok(standard_cycles())
}

pub(crate) fn standard_cycles() -> CentralCycles {
    CentralCycles {
        c0: Cycle { vertices: vec![v(3, 3), v(3, 4), v(4, 4), v(4, 3)] },
        c1: Cycle {
            vertices: vec![
                v(2, 2),
                v(2, 3),
                v(2, 4),
                v(2, 5),
                v(3, 5),
                v(4, 5),
                v(5, 5),
                v(5, 4),
                v(5, 3),
                v(5, 2),
                v(4, 2),
                v(3, 2),
            ],
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_grid_counts() {
        let g = GridGraph::new(6, 6).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (36, 60));
        let g = GridGraph::new(1, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let g = GridGraph::new(3, 6).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (18, 27));
    }

    #[test]
    fn make_grid_rejects_bad_dimensions() {
        assert!(matches!(GridGraph::new(0, 3), Err(GridError::EmptyDimension { .. })));
        assert!(matches!(GridGraph::new(3, -1), Err(GridError::EmptyDimension { .. })));
        assert!(matches!(GridGraph::new(9, 9), Err(GridError::TooLarge { .. })));
        assert!(GridGraph::new(8, 8).is_ok());
    }

    #[test]
    fn degree_spectrum() {
        for (a, b) in [(3, 3), (4, 6), (6, 6), (5, 3)] {
            let g = GridGraph::new(a, b).unwrap();
            for x in g.vertices() {
                let border = (x.row == 1 || x.row == a as u8) as usize
                    + (x.col == 1 || x.col == b as u8) as usize;
                assert_eq!(g.degree(x), 4 - border, "{x} in {a}x{b}");
            }
        }
    }

    proptest! {
        #[test]
        fn edge_index_is_a_bijection(a in 1i64..=8, b in 1i64..=8) {
            let g = GridGraph::new(a, b).unwrap();
            let m = g.host_edge_count();
            let mut seen = vec![false; m];
            for (idx, x, y) in g.edges() {
                prop_assert_eq!(g.edge_index(x, y), Some(idx));
                prop_assert_eq!(g.edge_at(idx), Edge::new(x, y).unwrap());
                prop_assert!(!seen[idx]);
                seen[idx] = true;
            }
            prop_assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn edge_index_layout() {
        let g = GridGraph::new(6, 6).unwrap();
        assert_eq!(g.edge_index(v(1, 1), v(1, 2)), Some(0));
        assert_eq!(g.edge_index(v(6, 5), v(6, 6)), Some(29));
        assert_eq!(g.edge_index(v(1, 1), v(2, 1)), Some(30));
        assert_eq!(g.edge_index(v(5, 6), v(6, 6)), Some(59));
        assert_eq!(g.edge_index(v(1, 1), v(2, 2)), None);
    }

    #[test]
    fn quadrant_membership() {
        assert_eq!(Quadrant::of(v(1, 1)), Quadrant::NW);
        assert_eq!(Quadrant::of(v(3, 4)), Quadrant::NE);
        assert_eq!(Quadrant::of(v(4, 3)), Quadrant::SW);
        assert_eq!(Quadrant::of(v(6, 6)), Quadrant::SE);
        let g = GridGraph::new(6, 6).unwrap();
        let total = Quadrant::ALL
            .iter()
            .map(|q| q.vertex_set(&g))
            .fold(VertexSet::EMPTY, |a, b| {
                assert!(a.is_disjoint(b));
                a | b
            });
        assert_eq!(total, g.vertex_set());
        for q in Quadrant::ALL {
            assert_eq!(g.induced(q.vertex_set(&g)).as_standalone_grid(), Some((3, 3)));
        }
    }

    #[test]
    fn central_cycles_match_definition() {
        let g = GridGraph::new(6, 6).unwrap();
        let cc = central_cycles(&g).unwrap();
        assert_eq!(cc.c0.edge_set(&g).len(), 4);
        assert_eq!(cc.c1.edge_set(&g).len(), 12);
        assert!(cc.c0.vertices.iter().all(|&x| !cc.c1.contains(x)));
        assert_eq!(cc.x0(Quadrant::NE), v(3, 4));
        assert_eq!(cc.x1(Quadrant::NE), v(2, 5));
        assert_eq!(cc.x0(Quadrant::NW), v(3, 3));
        // C1 is exactly the set of C0's neighbours plus the four diagonal corners.
        for x in &cc.c0.vertices {
            for (y, _) in g.neighbors(*x) {
                assert!(cc.c0.contains(y) || cc.c1.contains(y));
            }
        }
        for q in Quadrant::ALL {
            let on: Vec<_> = cc.c1.vertices.iter().filter(|x| q.contains(**x)).collect();
            assert_eq!(on.len(), 3);
            assert!(on.contains(&&cc.x1(q)));
        }
        assert!(central_cycles(&GridGraph::new(5, 6).unwrap()).is_err());
    }

    #[test]
    fn removing_rows_leaves_a_grid() {
        let g = GridGraph::new(6, 6).unwrap();
        assert_eq!(g.without_rows(&[1, 2]).as_standalone_grid(), Some((4, 6)));
        assert_eq!(g.without_rows(&[1, 2]).without_cols(&[1, 2]).as_standalone_grid(), Some((4, 4)));
        assert_eq!(g.without_rows(&[2]).as_standalone_grid(), None);
    }

    #[test]
    fn contraction_relabels_edges() {
        let g = GridGraph::new(3, 3).unwrap();
        let h = g.contract(v(2, 1), v(1, 1)).unwrap();
        assert!(!h.contains(v(2, 1)));
        assert_eq!(h.vertex_count(), 8);
        assert_eq!(h.edge_count(), 11);
        assert!(h.edge_between(v(1, 1), v(3, 1)).is_some());
        assert!(h.edge_between(v(1, 1), v(2, 2)).is_some());
        assert!(g.contract(v(1, 1), v(2, 2)).is_err());
    }

    #[test]
    fn arcs_walk_the_cycle() {
        let cc = standard_cycles();
        assert_eq!(
            cc.c0.arc(v(3, 3), v(4, 4), true).unwrap(),
            vec![v(3, 3), v(3, 4), v(4, 4)]
        );
        assert_eq!(
            cc.c0.arc(v(3, 3), v(4, 4), false).unwrap(),
            vec![v(3, 3), v(4, 3), v(4, 4)]
        );
        assert_eq!(cc.c0.arc(v(3, 3), v(3, 3), true).unwrap(), vec![v(3, 3)]);
    }
}
