//! Independent check of a claimed weak linkage.
//!
//! This module deliberately shares nothing with the solvers beyond the graph
//! model: every step is re-derived from [`GridGraph::edge_between`].

use crate::grid::{GridGraph, Vertex};
use crate::linkage::{Linkage, Pairing};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Violation {
    PathCount { expected: usize, found: usize },
    EmptyPath { pair: usize },
    WrongEndpoints { pair: usize, start: Vertex, end: Vertex },
    NotAnEdge { pair: usize, step: usize, from: Vertex, to: Vertex },
    RepeatedEdge { pair: usize, from: Vertex, to: Vertex },
    SharedEdge { pairs: (usize, usize), from: Vertex, to: Vertex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PathCount { expected, found } => write!(f, "expected {expected} paths, found {found}"),
            Violation::EmptyPath { pair } => write!(f, "pair {} has no vertices", pair + 1),
            Violation::WrongEndpoints { pair, start, end } => {
                write!(f, "pair {} path runs {start}..{end}, not between its terminals", pair + 1)
            }
            Violation::NotAnEdge { pair, step, from, to } => {
                write!(f, "pair {} step {step}: {from}-{to} is not an edge of the graph", pair + 1)
            }
            Violation::RepeatedEdge { pair, from, to } => write!(f, "pair {} uses {from}-{to} twice", pair + 1),
            Violation::SharedEdge { pairs, from, to } => {
                write!(f, "pairs {} and {} share edge {from}-{to}", pairs.0 + 1, pairs.1 + 1)
            }
        }
    }
}

/// `Ok(())` when `l` is a weak linkage for `p` in `g`; otherwise every violation found.
pub fn validate_linkage(g: &GridGraph, p: &Pairing, l: &Linkage) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if l.len() != p.len() {
        out.push(Violation::PathCount { expected: p.len(), found: l.len() });
        return Err(out);
    }
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (i, (path, &(s, t))) in l.paths().iter().zip(p.pairs()).enumerate() {
        let vs = path.vertices();
        let (Some(&start), Some(&end)) = (vs.first(), vs.last()) else {
            out.push(Violation::EmptyPath { pair: i });
            continue;
        };
        if !((start == s && end == t) || (start == t && end == s)) {
            out.push(Violation::WrongEndpoints { pair: i, start, end });
        }
        for (step, w) in vs.windows(2).enumerate() {
            let Some(e) = g.edge_between(w[0], w[1]) else {
                out.push(Violation::NotAnEdge { pair: i, step, from: w[0], to: w[1] });
                continue;
            };
            match owner.get(&e) {
                Some(&j) if j == i => out.push(Violation::RepeatedEdge { pair: i, from: w[0], to: w[1] }),
                Some(&j) => out.push(Violation::SharedEdge { pairs: (j, i), from: w[0], to: w[1] }),
                None => {
                    owner.insert(e, i);
                }
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::v;
    use crate::linkage::Path;

    fn g6() -> GridGraph {
        GridGraph::new(6, 6).unwrap()
    }

    #[test]
    fn single_edge_path() {
        let g = g6();
        let p = Pairing::new(&g, vec![(v(1, 1), v(2, 1))]).unwrap();
        let l = Linkage::new(vec![Path::new(vec![v(1, 1), v(2, 1)])]);
        assert_eq!(validate_linkage(&g, &p, &l), Ok(()));
        // Orientation does not matter.
        let l = Linkage::new(vec![Path::new(vec![v(2, 1), v(1, 1)])]);
        assert_eq!(validate_linkage(&g, &p, &l), Ok(()));
    }

    #[test]
    fn shared_edge_is_reported() {
        let g = g6();
        let p = Pairing::new(&g, vec![(v(3, 2), v(3, 4)), (v(2, 3), v(3, 5))]).unwrap();
        let l = Linkage::new(vec![
            Path::new(vec![v(3, 2), v(3, 3), v(3, 4)]),
            Path::new(vec![v(2, 3), v(3, 3), v(3, 4), v(3, 5)]),
        ]);
        let errs = validate_linkage(&g, &p, &l).unwrap_err();
        assert_eq!(errs, vec![Violation::SharedEdge { pairs: (0, 1), from: v(3, 3), to: v(3, 4) }]);
    }

    #[test]
    fn crossing_at_a_vertex_is_fine() {
        let g = g6();
        let p = Pairing::new(&g, vec![(v(3, 2), v(3, 4)), (v(2, 3), v(4, 3))]).unwrap();
        let l = Linkage::new(vec![
            Path::new(vec![v(3, 2), v(3, 3), v(3, 4)]),
            Path::new(vec![v(2, 3), v(3, 3), v(4, 3)]),
        ]);
        assert_eq!(validate_linkage(&g, &p, &l), Ok(()));
    }

    #[test]
    fn structural_violations() {
        let g = g6();
        let p = Pairing::new(&g, vec![(v(1, 1), v(1, 3))]).unwrap();
        let jump = Linkage::new(vec![Path::new(vec![v(1, 1), v(1, 3)])]);
        assert!(matches!(validate_linkage(&g, &p, &jump).unwrap_err()[0], Violation::NotAnEdge { .. }));
        let wrong_end = Linkage::new(vec![Path::new(vec![v(1, 1), v(1, 2)])]);
        assert!(matches!(validate_linkage(&g, &p, &wrong_end).unwrap_err()[0], Violation::WrongEndpoints { .. }));
        let repeat = Linkage::new(vec![Path::new(vec![v(1, 1), v(1, 2), v(1, 1), v(1, 2), v(1, 3)])]);
        assert!(matches!(validate_linkage(&g, &p, &repeat).unwrap_err()[0], Violation::RepeatedEdge { .. }));
        let missing = Linkage::new(vec![]);
        assert!(matches!(validate_linkage(&g, &p, &missing).unwrap_err()[0], Violation::PathCount { .. }));
        let deleted = g.without_edges(crate::bitset::EdgeSet::singleton(g.edge_index(v(1, 1), v(1, 2)).unwrap()));
        let ok = Linkage::new(vec![Path::new(vec![v(1, 1), v(1, 2), v(1, 3)])]);
        assert_eq!(validate_linkage(&g, &p, &ok), Ok(()));
        assert!(validate_linkage(&deleted, &p, &ok).is_err());
    }
}
