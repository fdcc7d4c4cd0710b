//! Terminal pairings, paths and linkages.

use crate::grid::{GridGraph, Vertex};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error("terminal {0} is not a vertex of the grid")]
    OffGrid(Vertex),
    #[error("terminal {0} is used more than once")]
    Duplicate(Vertex),
    #[error("a pairing needs at least one pair")]
    Empty,
}

/// An ordered list of terminal pairs `π_i = {s_i, t_i}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Pairing {
    pairs: Vec<(Vertex, Vertex)>,
}

impl Pairing {
    /// Pairing with all `2k` terminals distinct and inside `g`.
    pub fn new(g: &GridGraph, pairs: Vec<(Vertex, Vertex)>) -> Result<Pairing, PairingError> {
        Self::build(g, pairs, false)
    }

    /// Pairing whose terminals may coincide, as in weak 2-linkage queries.
    pub fn new_coincident(g: &GridGraph, pairs: Vec<(Vertex, Vertex)>) -> Result<Pairing, PairingError> {
        Self::build(g, pairs, true)
    }

    fn build(g: &GridGraph, pairs: Vec<(Vertex, Vertex)>, coincident: bool) -> Result<Pairing, PairingError> {
        if pairs.is_empty() {
            return Err(PairingError::Empty);
        }
        let mut seen: Vec<Vertex> = Vec::with_capacity(pairs.len() * 2);
        for &(s, t) in &pairs {
            for x in [s, t] {
                if !g.contains(x) {
                    return Err(PairingError::OffGrid(x));
                }
                if !coincident && seen.contains(&x) {
                    return Err(PairingError::Duplicate(x));
                }
                seen.push(x);
            }
        }
        Ok(Pairing { pairs })
    }

    pub(crate) fn new_unchecked(pairs: Vec<(Vertex, Vertex)>) -> Pairing {
        Pairing { pairs }
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn terminals(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.pairs.iter().flat_map(|&(s, t)| [s, t])
    }

    /// Whether any two terminals coincide.
    pub fn has_coincidences(&self) -> bool {
        let mut ts: Vec<_> = self.terminals().collect();
        ts.sort();
        ts.windows(2).any(|w| w[0] == w[1])
    }

    /// Normal form: each pair as `(min, max)`, pairs sorted.
    pub fn normalized(&self) -> Pairing {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect();
        pairs.sort();
        Pairing { pairs }
    }

    /// Same pairs in a different order: `order[i]` is the old index of new pair `i`.
    pub fn permuted(&self, order: &[usize]) -> Pairing {
        Pairing { pairs: order.iter().map(|&i| self.pairs[i]).collect() }
    }

    /// Swap `s` and `t` of the pairs flagged in `flip`.
    pub fn oriented(&self, flip: &[bool]) -> Pairing {
        Pairing {
            pairs: self
                .pairs
                .iter()
                .zip(flip)
                .map(|(&(s, t), &f)| if f { (t, s) } else { (s, t) })
                .collect(),
        }
    }
}

/// A walk given by its vertex sequence. Consecutive vertices must be
/// adjacent and no edge may repeat; vertices may repeat.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Path {
        Path { vertices }
    }

    /// The length-zero path at `x`.
    pub fn trivial(x: Vertex) -> Path {
        Path { vertices: vec![x] }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    /// Append `other`, which must start where `self` ends.
    pub fn join(&self, other: &Path) -> Option<Path> {
        if self.vertices.is_empty() {
            return Some(other.clone());
        }
        if other.vertices.is_empty() {
            return Some(self.clone());
        }
        if self.last() != other.first() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Some(Path { vertices })
    }

    /// Canonical edge indices of the steps, in order. `None` if some step is
    /// not an edge of `g`.
    pub fn edge_indices(&self, g: &GridGraph) -> Option<Vec<usize>> {
        self.vertices
            .windows(2)
            .map(|w| g.edge_between(w[0], w[1]))
            .collect()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// One path per pair; path `i` joins `s_i` to `t_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Linkage {
    paths: Vec<Path>,
}

impl Linkage {
    pub fn new(paths: Vec<Path>) -> Linkage {
        Linkage { paths }
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    pub fn permuted(&self, order: &[usize]) -> Linkage {
        // New pair `i` was old pair `order[i]`; undo that.
        let mut paths = vec![Path::default(); self.paths.len()];
        for (new, &old) in order.iter().enumerate() {
            paths[old] = self.paths[new].clone();
        }
        Linkage { paths }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::v;

    #[test]
    fn pairing_validation() {
        let g = GridGraph::new(3, 3).unwrap();
        assert!(Pairing::new(&g, vec![(v(1, 1), v(3, 3))]).is_ok());
        assert_eq!(
            Pairing::new(&g, vec![(v(1, 1), v(3, 3)), (v(3, 3), v(2, 2))]),
            Err(PairingError::Duplicate(v(3, 3)))
        );
        assert_eq!(Pairing::new(&g, vec![(v(1, 1), v(4, 3))]), Err(PairingError::OffGrid(v(4, 3))));
        assert_eq!(Pairing::new(&g, vec![]), Err(PairingError::Empty));
        let p = Pairing::new_coincident(&g, vec![(v(1, 1), v(1, 1)), (v(1, 1), v(2, 2))]).unwrap();
        assert!(p.has_coincidences());
    }

    #[test]
    fn paths_join_and_reverse() {
        let a = Path::new(vec![v(1, 1), v(1, 2)]);
        let b = Path::new(vec![v(1, 2), v(2, 2)]);
        let ab = a.join(&b).unwrap();
        assert_eq!(ab.vertices(), &[v(1, 1), v(1, 2), v(2, 2)]);
        assert_eq!(ab.len(), 2);
        assert_eq!(ab.reversed().first(), Some(v(2, 2)));
        assert!(b.join(&a).is_none());
        assert!(Path::trivial(v(1, 1)).is_empty());
    }

    #[test]
    fn permutation_round_trip() {
        let l = Linkage::new(vec![Path::trivial(v(1, 1)), Path::trivial(v(2, 2)), Path::trivial(v(3, 3))]);
        let order = [2, 0, 1];
        let permuted = Linkage::new(order.iter().map(|&i| l.paths()[i].clone()).collect());
        assert_eq!(permuted.permuted(&order), l);
    }
}
