//! Exhaustive search for small families of edge-disjoint paths.
//!
//! A plan is a list of requests, each asking for a path from a fixed vertex
//! to any vertex of a target set while avoiding some edges. Requests sharing
//! a `group` must end at pairwise distinct vertices. The search returns the
//! lexicographically smallest plan, comparing paths in request order by
//! (length, vertex sequence), so answers are reproducible.

use gridlink_core::{EdgeSet, GridGraph, Path, Vertex, VertexSet};

#[derive(Clone, Debug)]
pub(crate) struct Request {
    pub from: Vertex,
    pub targets: VertexSet,
    pub avoid: EdgeSet,
    pub group: Option<u8>,
}

impl Request {
    pub fn new(from: Vertex, targets: VertexSet) -> Request {
        Request { from, targets, avoid: EdgeSet::default(), group: None }
    }

    pub fn avoiding(mut self, edges: EdgeSet) -> Request {
        self.avoid = self.avoid | edges;
        self
    }

    pub fn in_group(mut self, group: u8) -> Request {
        self.group = Some(group);
        self
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub vertices: Vec<Vertex>,
    pub edges: EdgeSet,
}

impl Candidate {
    pub fn end(&self) -> Vertex {
        *self.vertices.last().expect("non-empty path")
    }

    pub fn to_path(&self) -> Path {
        Path::new(self.vertices.clone())
    }
}

/// Adjacency of a (possibly modified) grid, built once per search.
pub(crate) struct Adjacency<'g> {
    graph: &'g GridGraph,
    lists: Vec<Vec<(Vertex, usize)>>,
}

impl<'g> Adjacency<'g> {
    pub fn new(graph: &'g GridGraph) -> Adjacency<'g> {
        let mut lists = vec![Vec::new(); graph.host_vertex_count()];
        for (i, a, b) in graph.edges() {
            lists[graph.index(a)].push((b, i));
            lists[graph.index(b)].push((a, i));
        }
        for l in &mut lists {
            l.sort();
        }
        Adjacency { graph, lists }
    }

    pub fn graph(&self) -> &GridGraph {
        self.graph
    }

    /// All vertex-simple paths from `from` to a target, avoiding `avoid`,
    /// sorted by length then vertex sequence. Paths may pass through other
    /// targets. The empty path is included when `from` is a target.
    pub fn candidates(&self, from: Vertex, targets: VertexSet, avoid: EdgeSet) -> Vec<Candidate> {
        let g = self.graph;
        let mut out = Vec::new();
        if !g.contains(from) {
            return out;
        }
        let mut stack = vec![from];
        let mut seen = VertexSet::singleton(g.index(from));
        self.walk(&mut stack, &mut seen, EdgeSet::default(), targets, avoid, &mut out);
        out.sort_by(|a, b| a.vertices.len().cmp(&b.vertices.len()).then_with(|| a.vertices.cmp(&b.vertices)));
        out
    }

    fn walk(
        &self,
        stack: &mut Vec<Vertex>,
        seen: &mut VertexSet,
        edges: EdgeSet,
        targets: VertexSet,
        avoid: EdgeSet,
        out: &mut Vec<Candidate>,
    ) {
        let here = *stack.last().expect("non-empty");
        let hi = self.graph.index(here);
        if targets.contains(hi) {
            out.push(Candidate { vertices: stack.clone(), edges });
        }
        for &(w, e) in &self.lists[hi] {
            let wi = self.graph.index(w);
            if avoid.contains(e) || seen.contains(wi) {
                continue;
            }
            seen.insert(wi);
            stack.push(w);
            let mut next = edges;
            next.insert(e);
            self.walk(stack, seen, next, targets, avoid, out);
            stack.pop();
            seen.remove(wi);
        }
    }
}

/// Smallest plan meeting every request, edge-disjoint overall, with distinct
/// ends inside each group, and accepted by `accept`.
pub(crate) fn search(
    adj: &Adjacency<'_>,
    requests: &[Request],
    accept: &dyn Fn(&[&Candidate]) -> bool,
) -> Option<Vec<Candidate>> {
    let tables: Vec<Vec<Candidate>> =
        requests.iter().map(|r| adj.candidates(r.from, r.targets, r.avoid)).collect();
    if tables.iter().any(|t| t.is_empty()) {
        return None;
    }
    let mut chosen: Vec<&Candidate> = Vec::with_capacity(requests.len());
    if descend(requests, &tables, &mut chosen, EdgeSet::default(), accept) {
        Some(chosen.into_iter().cloned().collect())
    } else {
        None
    }
}

fn descend<'a>(
    requests: &[Request],
    tables: &'a [Vec<Candidate>],
    chosen: &mut Vec<&'a Candidate>,
    used: EdgeSet,
    accept: &dyn Fn(&[&Candidate]) -> bool,
) -> bool {
    let depth = chosen.len();
    if depth == requests.len() {
        return accept(chosen);
    }
    for cand in &tables[depth] {
        if !cand.edges.is_disjoint(used) {
            continue;
        }
        if let Some(grp) = requests[depth].group {
            let end = cand.end();
            let clash = chosen
                .iter()
                .zip(requests)
                .any(|(c, r)| r.group == Some(grp) && c.end() == end);
            if clash {
                continue;
            }
        }
        let used_next = used | cand.edges;
        // Forward check: every later request still has an unblocked candidate.
        let alive = tables[depth + 1..]
            .iter()
            .all(|t| t.iter().any(|c| c.edges.is_disjoint(used_next)));
        if !alive {
            continue;
        }
        chosen.push(cand);
        if descend(requests, tables, chosen, used_next, accept) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use gridlink_core::v;

    fn set(g: &GridGraph, vs: &[Vertex]) -> VertexSet {
        vs.iter().map(|&x| g.index(x)).collect()
    }

    #[test]
    fn candidates_are_sorted() {
        let g = GridGraph::new(3, 3).unwrap();
        let adj = Adjacency::new(&g);
        let c = adj.candidates(v(1, 1), set(&g, &[v(1, 2), v(2, 1)]), EdgeSet::default());
        assert_eq!(c[0].vertices, vec![v(1, 1), v(1, 2)]);
        assert_eq!(c[1].vertices, vec![v(1, 1), v(2, 1)]);
        assert!(c.windows(2).all(|w| w[0].vertices.len() <= w[1].vertices.len()));
        assert!(c.iter().any(|p| p.vertices.len() > 2 && p.vertices[1] == v(1, 2) && p.end() == v(2, 1)));
        let empty = adj.candidates(v(1, 1), set(&g, &[v(1, 1)]), EdgeSet::default());
        assert_eq!(empty[0].vertices, vec![v(1, 1)]);
    }

    #[test]
    fn distinct_ends_and_disjointness() {
        let g = GridGraph::new(3, 3).unwrap();
        let adj = Adjacency::new(&g);
        let row3 = g.row_set(3);
        let reqs = vec![
            Request::new(v(1, 1), row3).in_group(0),
            Request::new(v(1, 2), row3).in_group(0),
            Request::new(v(1, 3), row3).in_group(0),
        ];
        let plan = search(&adj, &reqs, &|_| true).unwrap();
        let mut ends: Vec<Vertex> = plan.iter().map(|c| c.end()).collect();
        ends.sort();
        ends.dedup();
        assert_eq!(ends.len(), 3);
        let total: usize = plan.iter().map(|c| c.edges.len()).sum();
        let union = plan.iter().fold(EdgeSet::default(), |acc, c| acc | c.edges);
        assert_eq!(total, union.len());
        // Four distinct ends do not fit in a three-vertex row.
        let reqs4 = vec![
            Request::new(v(1, 1), row3).in_group(0),
            Request::new(v(1, 2), row3).in_group(0),
            Request::new(v(1, 3), row3).in_group(0),
            Request::new(v(2, 2), row3).in_group(0),
        ];
        assert!(search(&adj, &reqs4, &|_| true).is_none());
    }
}
