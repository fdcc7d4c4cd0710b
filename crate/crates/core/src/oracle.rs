//! Complete backtracking decision procedure for weak linkage.
//!
//! Every pair's path is grown from `s_i` one edge at a time. At each search
//! node the unfinished pair with the fewest residual shortest paths from its
//! current head to `t_i` is extended (ties go to the lower pair index), trying
//! neighbours in order of residual distance to `t_i`, then row-major order.
//!
//! Paths are kept vertex-simple. That loses nothing: any weak linkage can be
//! shortcut to one made of simple paths using a subset of its edges.
//!
//! Pruning, checked at every node:
//! * reachability: every unfinished head still reaches its target through
//!   unused edges without revisiting its own path;
//! * cuts: for each set `S` of a fixed family (all axis-aligned rectangles
//!   and all closed vertex neighbourhoods), the number of unfinished pairs
//!   separated by `S` is at most the number of unused edges leaving `S`.
//!   Each such pair needs its own edge of `δ(S)`, so the bound is sound.

use crate::bitset::{EdgeSet, VertexSet};
use crate::grid::{GridGraph, Vertex};
use crate::linkage::{Linkage, Pairing, Path};
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("terminal {0} is not a vertex of the graph")]
    OffGrid(Vertex),
    #[error("terminal {0} appears twice; coincident terminals need the coincidence flag")]
    Duplicate(Vertex),
}

/// Search budgets. Hitting either yields [`Status::Timeout`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_nodes: 100_000_000, max_time: Duration::from_secs(300) }
    }
}

impl Limits {
    pub fn nodes(max_nodes: u64) -> Limits {
        Limits { max_nodes, ..Limits::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneConfig {
    pub reachability: bool,
    pub cuts: bool,
}

impl Default for PruneConfig {
    fn default() -> Self {
        PruneConfig { reachability: true, cuts: true }
    }
}

impl PruneConfig {
    pub const NONE: PruneConfig = PruneConfig { reachability: false, cuts: false };
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub limits: Limits,
    pub prune: PruneConfig,
    /// Permit terminals to coincide (weak 2-linkage queries only).
    pub allow_coincident: bool,
    /// Edges that may not be used.
    pub blocked: EdgeSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Sat(Linkage),
    Unsat,
    Timeout,
}

impl Status {
    pub fn is_sat(&self) -> bool {
        matches!(self, Status::Sat(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Sat(_) => "SAT",
            Status::Unsat => "UNSAT",
            Status::Timeout => "TIMEOUT",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub status: Status,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
    pub limits: Limits,
}

/// Compiled adjacency of a [`GridGraph`], reusable across many solves.
#[derive(Clone, Debug)]
pub struct Oracle {
    graph: GridGraph,
    present: VertexSet,
    /// Per host vertex index: `(neighbour index, edge index)`, neighbours ascending.
    adj: Vec<Vec<(u8, u8)>>,
    cuts: Vec<(VertexSet, EdgeSet)>,
}

const INF: u8 = u8::MAX;

impl Oracle {
    pub fn new(g: &GridGraph) -> Oracle {
        let n = g.host_vertex_count();
        let mut adj = vec![Vec::new(); n];
        for (e, a, b) in g.edges() {
            let (ia, ib) = (g.index(a), g.index(b));
            adj[ia].push((ib as u8, e as u8));
            adj[ib].push((ia as u8, e as u8));
        }
        for list in &mut adj {
            list.sort();
        }
        let present = g.vertex_set();
        let mut oracle = Oracle { graph: g.clone(), present, adj, cuts: Vec::new() };
        oracle.cuts = oracle.cut_family();
        oracle
    }

    pub fn graph(&self) -> &GridGraph {
        &self.graph
    }

    fn boundary(&self, s: VertexSet) -> EdgeSet {
        let mut out = EdgeSet::EMPTY;
        for i in s.iter() {
            for &(j, e) in &self.adj[i] {
                if !s.contains(j as usize) {
                    out.insert(e as usize);
                }
            }
        }
        out
    }

    fn cut_family(&self) -> Vec<(VertexSet, EdgeSet)> {
        let g = &self.graph;
        let mut sets: Vec<VertexSet> = Vec::new();
        for r0 in 1..=g.rows() {
            for r1 in r0..=g.rows() {
                for c0 in 1..=g.cols() {
                    for c1 in c0..=g.cols() {
                        sets.push(g.rect_set(r0, r1, c0, c1) & self.present);
                    }
                }
            }
        }
        for i in self.present.iter() {
            let mut s = VertexSet::singleton(i);
            for &(j, _) in &self.adj[i] {
                s.insert(j as usize);
            }
            sets.push(s);
        }
        sets.sort();
        sets.dedup();
        sets.into_iter()
            .filter(|s| !s.is_empty() && *s != self.present)
            .map(|s| (s, self.boundary(s)))
            .filter(|(_, b)| b.len() < 8)
            .collect()
    }

    /// Decide whether `p` has a weak linkage in the graph.
    pub fn solve(&self, p: &Pairing, opts: &SolveOptions) -> Result<SolveReport, OracleError> {
        let g = &self.graph;
        let mut seen: Vec<Vertex> = Vec::new();
        for x in p.terminals() {
            if !g.contains(x) {
                return Err(OracleError::OffGrid(x));
            }
            if !opts.allow_coincident && seen.contains(&x) {
                return Err(OracleError::Duplicate(x));
            }
            seen.push(x);
        }
        let start = Instant::now();
        let pairs: Vec<(u8, u8)> = p
            .pairs()
            .iter()
            .map(|&(s, t)| (g.index(s) as u8, g.index(t) as u8))
            .collect();
        let k = pairs.len();
        let mut search = Search {
            oracle: self,
            pairs: pairs.clone(),
            used: opts.blocked,
            stacks: pairs.iter().map(|&(s, _)| vec![s]).collect(),
            visited: pairs.iter().map(|&(s, _)| VertexSet::singleton(s as usize)).collect(),
            done: pairs.iter().map(|&(s, t)| s == t).collect(),
            nodes: 0,
            limits: opts.limits,
            prune: opts.prune,
            start,
            aborted: false,
            dist: vec![[INF; 128]; k],
            count: vec![[0u64; 128]; k],
        };
        let found = search.all_done() || search.dfs();
        let status = if found {
            let paths = search
                .stacks
                .iter()
                .map(|st| Path::new(st.iter().map(|&i| g.vertex_at(i as usize)).collect()))
                .collect();
            Status::Sat(Linkage::new(paths))
        } else if search.aborted {
            Status::Timeout
        } else {
            Status::Unsat
        };
        Ok(SolveReport {
            status,
            nodes_expanded: search.nodes,
            elapsed: start.elapsed(),
            limits: opts.limits,
        })
    }
}

/// One-shot convenience wrapper around [`Oracle::solve`].
pub fn find_weak_linkage(g: &GridGraph, p: &Pairing, opts: &SolveOptions) -> Result<SolveReport, OracleError> {
    Oracle::new(g).solve(p, opts)
}

struct Search<'a> {
    oracle: &'a Oracle,
    pairs: Vec<(u8, u8)>,
    used: EdgeSet,
    stacks: Vec<Vec<u8>>,
    visited: Vec<VertexSet>,
    done: Vec<bool>,
    nodes: u64,
    limits: Limits,
    prune: PruneConfig,
    start: Instant,
    aborted: bool,
    // Per-pair BFS scratch: distance to target and number of shortest paths.
    dist: Vec<[u8; 128]>,
    count: Vec<[u64; 128]>,
}

impl Search<'_> {
    fn all_done(&self) -> bool {
        self.done.iter().all(|&d| d)
    }

    fn head(&self, i: usize) -> u8 {
        *self.stacks[i].last().expect("stacks start non-empty")
    }

    /// BFS from pair `i`'s target over unused edges, avoiding the pair's own
    /// path except its head.
    fn bfs(&mut self, i: usize) {
        let adj = &self.oracle.adj;
        let head = self.head(i);
        let blocked = self.visited[i].difference(VertexSet::singleton(head as usize));
        let target = self.pairs[i].1;
        let dist = &mut self.dist[i];
        let count = &mut self.count[i];
        dist.fill(INF);
        count.fill(0);
        let mut queue = [0u8; 128];
        let (mut lo, mut hi) = (0usize, 1usize);
        queue[0] = target;
        dist[target as usize] = 0;
        count[target as usize] = 1;
        while lo < hi {
            let u = queue[lo] as usize;
            lo += 1;
            let du = dist[u];
            for &(w, e) in &adj[u] {
                if self.used.contains(e as usize) || blocked.contains(w as usize) {
                    continue;
                }
                let w = w as usize;
                if dist[w] == INF {
                    dist[w] = du + 1;
                    queue[hi] = w as u8;
                    hi += 1;
                }
                if dist[w] == du + 1 {
                    count[w] = count[w].saturating_add(count[u]);
                }
            }
        }
    }

    fn cuts_violated(&self) -> bool {
        for (s, delta) in &self.oracle.cuts {
            let mut demand = 0u32;
            for (i, &(_, t)) in self.pairs.iter().enumerate() {
                if !self.done[i] && s.contains(self.head(i) as usize) != s.contains(t as usize) {
                    demand += 1;
                }
            }
            if demand > 0 && demand > delta.difference(self.used).len() as u32 {
                return true;
            }
        }
        false
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.limits.max_nodes || (self.nodes & 1023 == 0 && self.start.elapsed() >= self.limits.max_time) {
            self.aborted = true;
        }
        self.aborted
    }

    fn dfs(&mut self) -> bool {
        self.nodes += 1;
        if self.out_of_budget() {
            return false;
        }
        let k = self.pairs.len();
        let mut best: Option<(u64, usize)> = None;
        for i in 0..k {
            if self.done[i] {
                continue;
            }
            if self.prune.reachability {
                self.bfs(i);
                let h = self.head(i) as usize;
                if self.dist[i][h] == INF {
                    return false;
                }
                let c = self.count[i][h];
                if best.is_none_or(|(bc, _)| c < bc) {
                    best = Some((c, i));
                }
            } else if best.is_none() {
                best = Some((0, i));
            }
        }
        if self.prune.cuts && self.cuts_violated() {
            return false;
        }
        let Some((_, i)) = best else {
            return true;
        };
        let head = self.head(i) as usize;
        let target = self.pairs[i].1;
        let mut moves: Vec<(u8, u8, u8)> = self.oracle.adj[head]
            .iter()
            .filter(|&&(w, e)| !self.used.contains(e as usize) && !self.visited[i].contains(w as usize))
            .map(|&(w, e)| {
                let d = if self.prune.reachability { self.dist[i][w as usize] } else { 0 };
                (d, w, e)
            })
            .filter(|&(d, _, _)| d != INF)
            .collect();
        moves.sort_unstable();
        for (_, w, e) in moves {
            self.used.insert(e as usize);
            self.stacks[i].push(w);
            self.visited[i].insert(w as usize);
            if w == target {
                self.done[i] = true;
            }
            if self.all_done() || self.dfs() {
                return true;
            }
            self.done[i] = false;
            self.visited[i].remove(w as usize);
            self.stacks[i].pop();
            self.used.remove(e as usize);
            if self.aborted {
                return false;
            }
        }
        false
    }
}
