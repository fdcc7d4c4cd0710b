//! Quadrant multigraph of a 6×6 pairing.

use crate::grid::Quadrant;
use crate::linkage::Pairing;
use serde::{Deserialize, Serialize};

/// One edge `Q_a Q_b` per pair, with `s_i ∈ Q_a` and `t_i ∈ Q_b`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QDiagram {
    edges: Vec<(Quadrant, Quadrant)>,
}

impl QDiagram {
    pub fn build(p: &Pairing) -> QDiagram {
        QDiagram {
            edges: p.pairs().iter().map(|&(s, t)| (Quadrant::of(s), Quadrant::of(t))).collect(),
        }
    }

    pub fn edges(&self) -> &[(Quadrant, Quadrant)] {
        &self.edges
    }

    /// Number of terminals in `q`; a loop counts twice.
    pub fn degree(&self, q: Quadrant) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == q) as usize + (b == q) as usize)
            .sum()
    }

    pub fn degrees(&self) -> [usize; 4] {
        Quadrant::ALL.map(|q| self.degree(q))
    }

    pub fn loops(&self, q: Quadrant) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == q && b == q).count()
    }

    pub fn is_loopless(&self) -> bool {
        self.edges.iter().all(|(a, b)| a != b)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Number of parallel edges between `a` and `b` (loops when `a == b`).
    pub fn multiplicity(&self, a: Quadrant, b: Quadrant) -> usize {
        self.edges
            .iter()
            .filter(|&&(x, y)| (x == a && y == b) || (x == b && y == a))
            .count()
    }
}
