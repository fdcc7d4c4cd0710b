//! Incremental assembly of a linkage from partial paths.
//!
//! Every pair grows from both terminals: mating paths extend the current
//! end on the `s` side or the `t` side, and a final connecting path joins
//! the two ends. All pieces are kept edge-disjoint as they are added, so a
//! finished builder always yields a weak linkage.

use gridlink_core::{
    central_cycles, v, CentralCycles, EdgeSet, GridGraph, Limits, Oracle, Pairing, Path, SolveOptions, Status, Vertex,
    VertexSet,
};
use gridlink_lemmas::{LemmaError, LemmaId, Restrictions};
use std::collections::VecDeque;
use std::sync::OnceLock;

pub(crate) type Attempt<T> = Result<T, String>;

pub(crate) fn grid() -> &'static GridGraph {
    static G: OnceLock<GridGraph> = OnceLock::new();
    G.get_or_init(|| GridGraph::new(6, 6).expect("6x6 grid"))
}

pub(crate) fn oracle() -> &'static Oracle {
    static O: OnceLock<Oracle> = OnceLock::new();
    O.get_or_init(|| Oracle::new(grid()))
}

pub(crate) fn cycles() -> &'static CentralCycles {
    static C: OnceLock<CentralCycles> = OnceLock::new();
    C.get_or_init(|| central_cycles(grid()).expect("6x6 grid"))
}

/// Node budget for the completion searches inside small subgrids.
const COMPLETION_NODES: u64 = 2_000_000;

pub(crate) fn lemma<T>(r: Result<T, LemmaError>) -> Attempt<T> {
    r.map_err(|e| {
        if matches!(e, LemmaError::Violation { .. }) {
            log::warn!("lemma alarm: {e}");
        }
        e.to_string()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    S,
    T,
}

/// A routing request: close a pair, or bring one of its ends to a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Goal {
    Link(usize),
    Reach(usize, End, Vertex),
}

#[derive(Clone, Debug)]
pub(crate) enum Move {
    Extend(usize, End, Path),
    Connect(usize, Path),
}

/// One recorded construction step, in normalized coordinates.
#[derive(Clone, Debug)]
pub(crate) struct RawStep {
    pub what: String,
    pub lemma: Option<LemmaId>,
    pub paths: Vec<(usize, Path)>,
}

#[derive(Clone, Debug)]
pub(crate) struct Builder {
    pairs: Vec<(Vertex, Vertex)>,
    s_chain: Vec<Vec<Vertex>>,
    t_chain: Vec<Vec<Vertex>>,
    middle: Vec<Option<Vec<Vertex>>>,
    used: EdgeSet,
    pub steps: Vec<RawStep>,
}

impl Builder {
    pub fn new(pairs: Vec<(Vertex, Vertex)>) -> Builder {
        Builder {
            s_chain: pairs.iter().map(|&(s, _)| vec![s]).collect(),
            t_chain: pairs.iter().map(|&(_, t)| vec![t]).collect(),
            middle: vec![None; pairs.len()],
            pairs,
            used: EdgeSet::EMPTY,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Original terminals of pair `i`.
    pub fn terminals(&self, i: usize) -> (Vertex, Vertex) {
        self.pairs[i]
    }

    /// Current end of the `s` side of pair `i`.
    pub fn s(&self, i: usize) -> Vertex {
        *self.s_chain[i].last().expect("non-empty")
    }

    pub fn t(&self, i: usize) -> Vertex {
        *self.t_chain[i].last().expect("non-empty")
    }

    pub fn end(&self, i: usize, e: End) -> Vertex {
        match e {
            End::S => self.s(i),
            End::T => self.t(i),
        }
    }

    pub fn is_done(&self, i: usize) -> bool {
        self.middle[i].is_some()
    }

    pub fn open(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_done(i)).collect()
    }

    /// Restrictions for a lemma call: every edge placed so far is taken.
    pub fn restr(&self) -> Restrictions {
        Restrictions { edges: self.used, ends: VertexSet::EMPTY }
    }

    pub fn restr_plus(&self, extra: EdgeSet) -> Restrictions {
        Restrictions { edges: self.used | extra, ends: VertexSet::EMPTY }
    }

    /// Current open ends lying in `region`, as `(pair, side, vertex)`.
    pub fn ends_in(&self, region: impl Fn(Vertex) -> bool) -> Vec<(usize, End, Vertex)> {
        let mut out = Vec::new();
        for i in self.open() {
            for e in [End::S, End::T] {
                let x = self.end(i, e);
                if region(x) {
                    out.push((i, e, x));
                }
            }
        }
        out
    }

    fn path_edges(&self, p: &Path, taken: EdgeSet) -> Attempt<EdgeSet> {
        let g = grid();
        let mut edges = EdgeSet::EMPTY;
        for w in p.vertices().windows(2) {
            let e = g
                .edge_between(w[0], w[1])
                .ok_or_else(|| format!("{} and {} are not adjacent", w[0], w[1]))?;
            if edges.contains(e) || taken.contains(e) || self.used.contains(e) {
                return Err(format!("edge {}-{} is already used", w[0], w[1]));
            }
            edges.insert(e);
        }
        Ok(edges)
    }

    /// Apply a batch of moves atomically.
    pub fn apply(&mut self, what: impl Into<String>, lemma: Option<LemmaId>, moves: Vec<Move>) -> Attempt<()> {
        let what = what.into();
        let mut taken = EdgeSet::EMPTY;
        let mut next = self.clone();
        let mut recorded = Vec::new();
        for m in moves {
            match m {
                Move::Extend(i, e, p) => {
                    if next.is_done(i) {
                        return Err(format!("{what}: pair {i} is already linked"));
                    }
                    if p.first() != Some(next.end(i, e)) {
                        return Err(format!("{what}: path {p} does not start at the current end of pair {i}"));
                    }
                    taken = taken | self.path_edges(&p, taken)?;
                    let chain = match e {
                        End::S => &mut next.s_chain[i],
                        End::T => &mut next.t_chain[i],
                    };
                    chain.extend_from_slice(&p.vertices()[1..]);
                    recorded.push((i, p));
                }
                Move::Connect(i, p) => {
                    if next.is_done(i) {
                        return Err(format!("{what}: pair {i} is already linked"));
                    }
                    if p.first() != Some(next.s(i)) || p.last() != Some(next.t(i)) {
                        return Err(format!("{what}: path {p} does not join the ends of pair {i}"));
                    }
                    taken = taken | self.path_edges(&p, taken)?;
                    next.middle[i] = Some(p.vertices().to_vec());
                    recorded.push((i, p));
                }
            }
        }
        next.used = self.used | taken;
        next.steps.push(RawStep { what, lemma, paths: recorded });
        *self = next;
        Ok(())
    }

    pub fn extend(&mut self, what: &str, lemma: Option<LemmaId>, i: usize, e: End, p: Path) -> Attempt<()> {
        self.apply(what, lemma, vec![Move::Extend(i, e, p)])
    }

    pub fn connect(&mut self, what: &str, lemma: Option<LemmaId>, i: usize, p: Path) -> Attempt<()> {
        self.apply(what, lemma, vec![Move::Connect(i, p)])
    }

    /// Extend the open end at `x` along a straight segment to `to`.
    pub fn push_end(&mut self, what: &str, i: usize, e: End, to: Vertex) -> Attempt<()> {
        let from = self.end(i, e);
        if from == to {
            return Ok(());
        }
        self.extend(what, None, i, e, line(from, to))
    }

    /// Route `goals` by edge-disjoint paths inside `region`, avoiding every
    /// used edge and everything in `blocked`. Pairs whose ends already meet
    /// are closed with the trivial path.
    pub fn route(
        &mut self,
        what: &str,
        lemma: Option<LemmaId>,
        region: VertexSet,
        blocked: EdgeSet,
        goals: &[Goal],
    ) -> Attempt<()> {
        let g = grid();
        let mut moves = Vec::new();
        let mut todo: Vec<(Goal, Vertex, Vertex)> = Vec::new();
        for &goal in goals {
            let (from, to) = match goal {
                Goal::Link(i) => {
                    if self.is_done(i) {
                        continue;
                    }
                    (self.s(i), self.t(i))
                }
                Goal::Reach(i, e, x) => (self.end(i, e), x),
            };
            if from == to {
                if let Goal::Link(i) = goal {
                    moves.push(Move::Connect(i, Path::trivial(from)));
                }
                continue;
            }
            for x in [from, to] {
                if !region.contains(g.index(x)) {
                    return Err(format!("{what}: {x} lies outside the region"));
                }
            }
            todo.push((goal, from, to));
        }
        if !todo.is_empty() {
            let p = Pairing::new_coincident(g, todo.iter().map(|&(_, a, b)| (a, b)).collect())
                .map_err(|e| e.to_string())?;
            let opts = SolveOptions {
                limits: Limits::nodes(COMPLETION_NODES),
                allow_coincident: true,
                blocked: (g.edge_set() - g.induced_edges(region)) | self.used | blocked,
                ..SolveOptions::default()
            };
            let report = oracle().solve(&p, &opts).map_err(|e| e.to_string())?;
            match report.status {
                Status::Sat(l) => {
                    for (&(goal, _, _), path) in todo.iter().zip(l.paths()) {
                        moves.push(match goal {
                            Goal::Link(i) => Move::Connect(i, path.clone()),
                            Goal::Reach(i, e, _) => Move::Extend(i, e, path.clone()),
                        });
                    }
                }
                other => return Err(format!("{what}: routing {}", other.label())),
            }
        }
        if moves.is_empty() {
            return Ok(());
        }
        self.apply(what, lemma, moves)
    }

    pub fn complete_avoiding(
        &mut self,
        what: &str,
        lemma: Option<LemmaId>,
        region: VertexSet,
        blocked: EdgeSet,
        pairs: &[usize],
    ) -> Attempt<()> {
        let goals: Vec<Goal> = pairs.iter().map(|&i| Goal::Link(i)).collect();
        self.route(what, lemma, region, blocked, &goals)
    }

    pub fn complete(&mut self, what: &str, lemma: Option<LemmaId>, region: VertexSet, pairs: &[usize]) -> Attempt<()> {
        self.complete_avoiding(what, lemma, region, EdgeSet::EMPTY, pairs)
    }

    /// Shortest path from `from` to `to` inside `region` on unused edges.
    pub fn path_in(&self, region: VertexSet, from: Vertex, to: Vertex) -> Option<Path> {
        self.path_avoiding(region, EdgeSet::EMPTY, from, to)
    }

    pub fn path_avoiding(&self, region: VertexSet, blocked: EdgeSet, from: Vertex, to: Vertex) -> Option<Path> {
        let g = grid();
        let (fi, ti) = (g.index(from), g.index(to));
        if !region.contains(fi) || !region.contains(ti) {
            return None;
        }
        let mut prev: Vec<Option<usize>> = vec![None; g.host_vertex_count()];
        let mut seen = VertexSet::singleton(fi);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut out = vec![to];
                let mut cur = g.index(to);
                while let Some(p) = prev[cur] {
                    out.push(g.vertex_at(p));
                    cur = p;
                }
                out.reverse();
                return Some(Path::new(out));
            }
            for (y, e) in g.neighbors(x) {
                let yi = g.index(y);
                if seen.contains(yi) || !region.contains(yi) || self.used.contains(e) || blocked.contains(e) {
                    continue;
                }
                seen.insert(yi);
                prev[yi] = Some(g.index(x));
                queue.push_back(y);
            }
        }
        None
    }

    /// Close `pairs`, whose current ends all lie on `cycle`, by arcs of the
    /// cycle that are pairwise edge-disjoint and unused.
    pub fn connect_on_cycle(&mut self, what: &str, lemma: Option<LemmaId>, cycle: &[Vertex], pairs: &[usize]) -> Attempt<()> {
        let g = grid();
        let c = gridlink_core::Cycle { vertices: cycle.to_vec() };
        let n = pairs.len();
        let mut options: Vec<(usize, Vec<Path>)> = Vec::new();
        for mask in 0u32..(1 << n) {
            let mut paths = Vec::with_capacity(n);
            for (k, &i) in pairs.iter().enumerate() {
                let (s, t) = (self.s(i), self.t(i));
                let arc = c
                    .arc(s, t, mask >> k & 1 == 1)
                    .ok_or_else(|| format!("{what}: ends of pair {i} are not on the cycle"))?;
                paths.push(Path::new(arc));
            }
            let total = paths.iter().map(Path::len).sum();
            options.push((total, paths));
        }
        options.sort_by_key(|(len, _)| *len);
        for (_, paths) in options {
            let mut taken = EdgeSet::EMPTY;
            let ok = paths.iter().all(|p| match p.edge_indices(g) {
                Some(es) => es.into_iter().all(|e| !self.used.contains(e) && taken.insert(e)),
                None => false,
            });
            if ok {
                let moves = pairs.iter().zip(paths).map(|(&i, p)| Move::Connect(i, p)).collect();
                return self.apply(what, lemma, moves);
            }
        }
        Err(format!("{what}: no disjoint arcs"))
    }

    /// The finished paths, `s` chain then connecting path then reversed `t` chain.
    pub fn finish(&self) -> Attempt<Vec<Path>> {
        (0..self.len())
            .map(|i| {
                let mid = self.middle[i].as_ref().ok_or_else(|| format!("pair {i} is not linked"))?;
                let mut out = self.s_chain[i].clone();
                out.extend_from_slice(&mid[1..]);
                out.extend(self.t_chain[i].iter().rev().skip(1));
                Ok(Path::new(out))
            })
            .collect()
    }
}

/// Straight segment between two vertices of a common row or column.
pub(crate) fn line(a: Vertex, b: Vertex) -> Path {
    assert!(a.row == b.row || a.col == b.col, "{a} and {b} are not aligned");
    let mut out = vec![a];
    let mut cur = a;
    while cur != b {
        cur = Vertex::new(step(cur.row, b.row), step(cur.col, b.col));
        out.push(cur);
    }
    Path::new(out)
}

fn step(x: u8, to: u8) -> u8 {
    match x.cmp(&to) {
        std::cmp::Ordering::Less => x + 1,
        std::cmp::Ordering::Greater => x - 1,
        std::cmp::Ordering::Equal => x,
    }
}

/// Straight segments through consecutive corner points.
pub(crate) fn polyline(points: &[Vertex]) -> Path {
    let mut out = vec![points[0]];
    for w in points.windows(2) {
        out.extend_from_slice(&line(w[0], w[1]).vertices()[1..]);
    }
    Path::new(out)
}

pub(crate) fn rect(r0: u8, r1: u8, c0: u8, c1: u8) -> VertexSet {
    grid().rect_set(r0, r1, c0, c1)
}

pub(crate) fn set_of(vs: &[Vertex]) -> VertexSet {
    vs.iter().map(|&x| grid().index(x)).collect()
}

pub(crate) fn all_vertices() -> VertexSet {
    grid().vertex_set()
}

/// The 8-cycle through the neighbours of `(3,3)`.
pub(crate) fn ring_around_33() -> Vec<Vertex> {
    vec![v(2, 2), v(2, 3), v(2, 4), v(3, 4), v(4, 4), v(4, 3), v(4, 2), v(3, 2)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_and_polylines() {
        assert_eq!(line(v(1, 1), v(1, 3)).vertices(), &[v(1, 1), v(1, 2), v(1, 3)]);
        assert_eq!(line(v(3, 2), v(1, 2)).len(), 2);
        let p = polyline(&[v(1, 1), v(3, 1), v(3, 2)]);
        assert_eq!(p.vertices(), &[v(1, 1), v(2, 1), v(3, 1), v(3, 2)]);
    }

    #[test]
    fn moves_are_checked_and_atomic() {
        let mut b = Builder::new(vec![(v(1, 1), v(1, 3)), (v(2, 1), v(2, 3))]);
        b.connect("row", None, 0, line(v(1, 1), v(1, 3))).unwrap();
        let before = b.restr().edges;
        let bad = b.apply(
            "clash",
            None,
            vec![
                Move::Extend(1, End::S, line(v(2, 1), v(2, 2))),
                Move::Extend(1, End::T, polyline(&[v(2, 3), v(1, 3), v(1, 2)])),
            ],
        );
        assert!(bad.is_err());
        assert_eq!(b.restr().edges, before);
        assert_eq!(b.s(1), v(2, 1));
        b.extend("down", None, 1, End::S, line(v(2, 1), v(3, 1))).unwrap();
        b.complete("rest", None, rect(2, 3, 1, 3), &[1]).unwrap();
        let paths = b.finish().unwrap();
        assert_eq!(paths[1].first(), Some(v(2, 1)));
        assert_eq!(paths[1].last(), Some(v(2, 3)));
    }

    #[test]
    fn cycle_arcs_avoid_each_other() {
        let c0 = cycles().c0.vertices.clone();
        let mut b = Builder::new(vec![(v(3, 3), v(3, 4)), (v(3, 3), v(4, 3))]);
        b.connect_on_cycle("frame", None, &c0, &[0, 1]).unwrap();
        let paths = b.finish().unwrap();
        assert_eq!(paths[0].len() + paths[1].len(), 2);
    }
}
