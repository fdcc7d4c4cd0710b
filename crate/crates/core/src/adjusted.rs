//! The adjusted 3×3 quadrants used when mating terminals into a boundary line.
//!
//! All shapes live on a standalone 3×3 grid whose boundary line `A` is row 3.
//! `Q0` is the grid without the two edges of `A`; `Q1`–`Q4` are obtained from
//! `Q0` by deleting and contracting edges near the far side:
//!
//! ```text
//!   Q0       Q1       Q2       Q3       Q4
//! +-+-+      + +    +   +    +-+-+    +-+-+
//! | | |      | |    |\  |    | | |    | | |
//! +-+-+    +-+-+    +-+-+      + +    +   +
//! | | |    | | |    | | |    | | |    | | |
//! + + +    + + +    + + +    + + +    + + +
//! ```
//!
//! In `Q2` the top middle vertex is contracted into the centre, in `Q3` the
//! left middle vertex into the top left corner, in `Q4` the centre into the
//! top middle vertex.

use crate::bitset::{EdgeSet, VertexSet};
use crate::grid::{v, GridGraph};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Adjustment {
    Q0,
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Adjustment {
    pub const ALL: [Adjustment; 5] = [Adjustment::Q0, Adjustment::Q1, Adjustment::Q2, Adjustment::Q3, Adjustment::Q4];

    /// The adjusted quadrant as a graph on a 3×3 host.
    pub fn graph(self) -> GridGraph {
        let g = GridGraph::new(3, 3).expect("3x3 grid");
        let edge = |a, b| g.edge_index(a, b).expect("grid edge");
        let row3: EdgeSet = [edge(v(3, 1), v(3, 2)), edge(v(3, 2), v(3, 3))].into_iter().collect();
        let q0 = g.without_edges(row3);
        let row2: EdgeSet = [edge(v(2, 1), v(2, 2)), edge(v(2, 2), v(2, 3))].into_iter().collect();
        match self {
            Adjustment::Q0 => q0,
            Adjustment::Q1 => q0
                .without_edges([edge(v(1, 1), v(1, 2)), edge(v(1, 1), v(2, 1)), edge(v(1, 2), v(1, 3))].into_iter().collect())
                .without_vertices(VertexSet::singleton(g.index(v(1, 1)))),
            Adjustment::Q2 => q0
                .without_edges(EdgeSet::singleton(edge(v(1, 2), v(1, 3))))
                .contract(v(1, 2), v(2, 2))
                .expect("adjacent"),
            Adjustment::Q3 => q0.without_edges(row2).contract(v(2, 1), v(1, 1)).expect("adjacent"),
            Adjustment::Q4 => q0.without_edges(row2).contract(v(2, 2), v(1, 2)).expect("adjacent"),
        }
    }
}

impl fmt::Display for Adjustment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        write!(f, "Q{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Vertex;

    fn adjacency(g: &GridGraph) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<_> = g.edges().into_iter().map(|(_, a, b)| (a.min(b), a.max(b))).collect();
        out.sort();
        out
    }

    #[test]
    fn q0_drops_the_boundary_edges() {
        let g = Adjustment::Q0.graph();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.degree(v(3, 2)), 1);
    }

    #[test]
    fn shapes_match_their_drawings() {
        let q1 = Adjustment::Q1.graph();
        assert!(!q1.contains(v(1, 1)));
        assert_eq!(
            adjacency(&q1),
            vec![
                (v(1, 2), v(2, 2)),
                (v(1, 3), v(2, 3)),
                (v(2, 1), v(2, 2)),
                (v(2, 1), v(3, 1)),
                (v(2, 2), v(2, 3)),
                (v(2, 2), v(3, 2)),
                (v(2, 3), v(3, 3)),
            ]
        );
        let q2 = Adjustment::Q2.graph();
        assert!(!q2.contains(v(1, 2)));
        assert_eq!(
            adjacency(&q2),
            vec![
                (v(1, 1), v(2, 1)),
                (v(1, 1), v(2, 2)),
                (v(1, 3), v(2, 3)),
                (v(2, 1), v(2, 2)),
                (v(2, 1), v(3, 1)),
                (v(2, 2), v(2, 3)),
                (v(2, 2), v(3, 2)),
                (v(2, 3), v(3, 3)),
            ]
        );
        let q3 = Adjustment::Q3.graph();
        assert!(!q3.contains(v(2, 1)));
        assert_eq!(
            adjacency(&q3),
            vec![
                (v(1, 1), v(1, 2)),
                (v(1, 1), v(3, 1)),
                (v(1, 2), v(1, 3)),
                (v(1, 2), v(2, 2)),
                (v(1, 3), v(2, 3)),
                (v(2, 2), v(3, 2)),
                (v(2, 3), v(3, 3)),
            ]
        );
        let q4 = Adjustment::Q4.graph();
        assert!(!q4.contains(v(2, 2)));
        assert_eq!(
            adjacency(&q4),
            vec![
                (v(1, 1), v(1, 2)),
                (v(1, 1), v(2, 1)),
                (v(1, 2), v(1, 3)),
                (v(1, 2), v(3, 2)),
                (v(1, 3), v(2, 3)),
                (v(2, 1), v(3, 1)),
                (v(2, 3), v(3, 3)),
            ]
        );
    }
}
