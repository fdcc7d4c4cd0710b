//! Regions, cycles and small routing helpers shared by the case handlers.

use crate::builder::{cycles, grid, lemma, rect, Attempt, Builder, End, Move};
use gridlink_core::{EdgeSet, Path, Quadrant, Vertex, VertexSet};
use gridlink_lemmas::{route_in_quadrant, CycleId, LemmaId, Leg, Orientation};

pub(crate) const NW: Quadrant = Quadrant::NW;
pub(crate) const NE: Quadrant = Quadrant::NE;
pub(crate) const SW: Quadrant = Quadrant::SW;
pub(crate) const SE: Quadrant = Quadrant::SE;

pub(crate) fn quad(q: Quadrant) -> VertexSet {
    q.vertex_set(grid())
}

pub(crate) fn rows(r0: u8, r1: u8) -> VertexSet {
    rect(r0, r1, 1, 6)
}

pub(crate) fn cycle_vertices(c: CycleId) -> &'static [Vertex] {
    match c {
        CycleId::C0 => &cycles().c0.vertices,
        CycleId::C1 => &cycles().c1.vertices,
    }
}

pub(crate) fn c1_edges() -> EdgeSet {
    cycles().c1.edge_set(grid())
}

/// Vertices of cycle `c` inside quadrant `q`.
pub(crate) fn cycle_in(c: CycleId, q: Quadrant) -> Vec<Vertex> {
    cycle_vertices(c).iter().copied().filter(|&x| q.contains(x)).collect()
}

/// Open ends in quadrant `q`.
pub(crate) fn ends_in_quad(b: &Builder, q: Quadrant) -> Vec<(usize, End, Vertex)> {
    b.ends_in(|x| q.contains(x))
}

/// Route legs inside a quadrant and apply them as extensions.
pub(crate) fn quadrant_legs(
    b: &mut Builder,
    what: &str,
    lemma_id: Option<LemmaId>,
    orient: Orientation,
    legs: &[(usize, End, Leg)],
    without_a: bool,
    extra: EdgeSet,
) -> Attempt<()> {
    if legs.is_empty() {
        return Ok(());
    }
    let ls: Vec<Leg> = legs.iter().map(|(_, _, l)| l.clone()).collect();
    let paths = lemma(route_in_quadrant(orient, &ls, without_a, &b.restr_plus(extra)))?
        .ok_or_else(|| format!("{what}: no routing inside {}", orient.quadrant))?;
    let moves = legs.iter().zip(paths).map(|(&(i, e, _), p)| Move::Extend(i, e, p)).collect();
    b.apply(what, lemma_id, moves)
}

/// Extend ends by paths returned from a lemma, matching each path to the
/// end at its first vertex.
pub(crate) fn extend_from(
    b: &mut Builder,
    what: &str,
    lemma_id: Option<LemmaId>,
    ends: &[(usize, End)],
    paths: Vec<Path>,
) -> Attempt<()> {
    let moves = ends.iter().zip(paths).map(|(&(i, e), p)| Move::Extend(i, e, p)).collect();
    b.apply(what, lemma_id, moves)
}

/// Find which listed end sits at `x`.
pub(crate) fn owner(ends: &[(usize, End, Vertex)], x: Vertex) -> Attempt<(usize, End)> {
    ends.iter()
        .find(|&&(_, _, y)| y == x)
        .map(|&(i, e, _)| (i, e))
        .ok_or_else(|| format!("no end at {x}"))
}

/// One straight step from each listed end to the given neighbour.
pub(crate) fn step_all(b: &mut Builder, what: &str, moves: &[(usize, End, Vertex)]) -> Attempt<()> {
    let mv = moves
        .iter()
        .filter(|&&(i, e, to)| b.end(i, e) != to)
        .map(|&(i, e, to)| Move::Extend(i, e, crate::builder::line(b.end(i, e), to)))
        .collect();
    b.apply(what, None, mv)
}

/// Vertex one step down, up, right or left.
pub(crate) fn down(x: Vertex) -> Vertex {
    Vertex::new(x.row + 1, x.col)
}

pub(crate) fn up(x: Vertex) -> Vertex {
    Vertex::new(x.row - 1, x.col)
}

pub(crate) fn right(x: Vertex) -> Vertex {
    Vertex::new(x.row, x.col + 1)
}

pub(crate) fn left(x: Vertex) -> Vertex {
    Vertex::new(x.row, x.col - 1)
}

pub(crate) fn all_distinct(xs: &[Vertex]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}
