//! The local routing operations, in 6×6 coordinates.
//!
//! Each operation converts its inputs into the local frame of the quadrant,
//! runs the plan search there and maps the answer back. A failed search is a
//! [`LemmaError::Violation`]: the certified statements say it cannot happen.
//! Callers may pass [`Restrictions`] (edges already used elsewhere, vertices
//! that must not serve as mates); a failure caused only by those is reported
//! as [`LemmaError::Restricted`] instead.

use crate::error::{LemmaError, LemmaId};
use crate::frame::{
    local_c1_edges, local_grid, local_set, CycleId, Orientation, Side, B_MIDDLE, FAR_CORNER, X0, Y0_ON_A,
    Y0_ON_B,
};
use crate::search::{search, Adjacency, Candidate, Request};
use gridlink_core::{v, Adjustment, EdgeSet, GridGraph, Path, Quadrant, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

/// Extra constraints from the surrounding construction, in 6×6 indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Restrictions {
    /// Edges the plan must not use.
    pub edges: EdgeSet,
    /// Vertices that must not be chosen as mates or exits.
    pub ends: VertexSet,
}

impl Restrictions {
    pub const NONE: Restrictions = Restrictions { edges: EdgeSet(0), ends: VertexSet(0) };

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty() && self.ends.is_empty()
    }
}

/// Terminals placed in a crowded quadrant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrowdedQuadrant {
    /// Pairs with both terminals in the quadrant.
    pub pairs: Vec<(Vertex, Vertex)>,
    /// Terminals whose partner lies outside.
    pub singles: Vec<Vertex>,
}

impl CrowdedQuadrant {
    pub fn terminal_count(&self) -> usize {
        2 * self.pairs.len() + self.singles.len()
    }

    fn terminals(&self) -> Vec<Vertex> {
        self.pairs.iter().flat_map(|&(a, b)| [a, b]).chain(self.singles.iter().copied()).collect()
    }
}

/// Linked pairs plus escape paths of the remaining terminals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscapePlan {
    /// Index into the input pairs and the linking path.
    pub linked: Vec<(usize, Path)>,
    /// Escaping terminal and its path; the path ends at the exit.
    pub mating: Vec<(Vertex, Path)>,
    pub exits: Vec<Vertex>,
}

/// Two feeder paths meeting at an apex of a central cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub cycle: CycleId,
    pub apex: Vertex,
    pub feeders: [Path; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramePlusOne {
    pub frame: Frame,
    /// Mating path of the third terminal onto the other cycle.
    pub third: Path,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChosenFrame {
    /// Positions (in input order, `p < q`) of the two framed terminals.
    pub chosen: (usize, usize),
    pub frame: Frame,
    pub third: Path,
}

/// Where the unframed terminal goes in [`framing_choose_pq`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChoiceTarget {
    /// Frame onto `C0`; the third terminal mates onto `C1`.
    FourCycle,
    /// Frame onto `C1`; the third terminal reaches the given corner.
    TwelveCycle(Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExitRequest {
    /// Three distinct vertices of an adjusted quadrant mate into `A`.
    Spread([Vertex; 3]),
    /// Link `s1` to `t1` and mate `s2` into `A`; coincidences allowed.
    LinkAndMate { s1: Vertex, t1: Vertex, s2: Vertex },
    /// Three terminals mate into three distinct vertices of `A`.
    Distinct([Vertex; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Projection {
    /// Path from the chosen terminal to the middle vertex of `B`.
    pub link: Path,
    /// The other terminals and their paths into `A`.
    pub mating: Vec<(Vertex, Path)>,
}

/// Which choices of the linked terminal the projection statement covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Guarantee {
    Every,
    AtLeast(usize),
    Only(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryPlan {
    pub link: Path,
    pub mating: [Path; 2],
}

/// Local-frame context of one search.
struct Ctx {
    banned_edges: EdgeSet,
    banned_ends: VertexSet,
}

impl Ctx {
    fn open() -> Ctx {
        Ctx { banned_edges: EdgeSet::default(), banned_ends: VertexSet::default() }
    }

    fn new(orient: Orientation, r: &Restrictions) -> Ctx {
        Ctx { banned_edges: orient.edges_to_local(r.edges), banned_ends: orient.vertices_to_local(r.ends) }
    }

    fn to(&self, from: Vertex, targets: &[Vertex]) -> Request {
        Request::new(from, local_set(targets) - self.banned_ends).avoiding(self.banned_edges)
    }

    fn link(&self, from: Vertex, to: Vertex) -> Request {
        Request::new(from, local_set(&[to])).avoiding(self.banned_edges)
    }
}

enum Outcome<T> {
    Found(T),
    Restricted,
    Missing,
}

fn attempt<T>(host: &GridGraph, orient: Orientation, r: &Restrictions, plan: impl Fn(&Adjacency<'_>, &Ctx) -> Option<T>) -> Outcome<T> {
    let adj = Adjacency::new(host);
    if let Some(t) = plan(&adj, &Ctx::new(orient, r)) {
        return Outcome::Found(t);
    }
    if !r.is_empty() && plan(&adj, &Ctx::open()).is_some() {
        return Outcome::Restricted;
    }
    Outcome::Missing
}

fn settle<T>(lemma: LemmaId, outcome: Outcome<T>, describe: impl FnOnce() -> String) -> Result<T, LemmaError> {
    match outcome {
        Outcome::Found(t) => Ok(t),
        Outcome::Restricted => Err(LemmaError::Restricted { lemma }),
        Outcome::Missing => Err(LemmaError::Violation { lemma, config: describe() }),
    }
}

fn localize(orient: Orientation, xs: &[Vertex]) -> Result<Vec<Vertex>, LemmaError> {
    xs.iter()
        .map(|&x| {
            orient
                .to_local(x)
                .ok_or_else(|| LemmaError::Precondition(format!("{x} is not in quadrant {}", orient.quadrant)))
        })
        .collect()
}

fn distinct(xs: &[Vertex]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

fn global(orient: Orientation, c: &Candidate) -> Path {
    orient.path_to_global(&c.to_path())
}

fn boundary_local() -> Vec<Vertex> {
    let mut out = Side::A.local_vertices();
    out.extend(Side::B.local_vertices());
    out.sort();
    out.dedup();
    out
}

/// Vertices of `B` other than the corner `x0`.
fn b_without_a() -> [Vertex; 2] {
    [Y0_ON_B, B_MIDDLE]
}

fn subsets_by_size(n: usize, min: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize >= min)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn crowded_local(
    adj: &Adjacency<'_>,
    ctx: &Ctx,
    pairs: &[(Vertex, Vertex)],
    singles: &[Vertex],
    choices: &[Vec<usize>],
    limit_b: bool,
) -> Option<(Vec<usize>, Vec<Candidate>)> {
    let exits = boundary_local();
    let avoid_b = local_set(&b_without_a());
    for linked in choices {
        let mut requests: Vec<Request> = linked.iter().map(|&i| ctx.link(pairs[i].0, pairs[i].1)).collect();
        let mut escaping: Vec<Vertex> = (0..pairs.len())
            .filter(|i| !linked.contains(i))
            .flat_map(|i| [pairs[i].0, pairs[i].1])
            .chain(singles.iter().copied())
            .collect();
        escaping.sort();
        requests.extend(escaping.iter().map(|&x| ctx.to(x, &exits).in_group(0)));
        let n_linked = linked.len();
        let accept = |plan: &[&Candidate]| {
            !limit_b
                || plan[n_linked..].iter().filter(|c| avoid_b.contains(adj.graph().index(c.end()))).count() <= 1
        };
        if let Some(plan) = search(adj, &requests, &accept) {
            return Some((linked.clone(), plan));
        }
    }
    None
}

fn escape_plan(orient: Orientation, linked: Vec<usize>, plan: Vec<Candidate>) -> EscapePlan {
    let (links, escapes) = plan.split_at(linked.len());
    let mating: Vec<(Vertex, Path)> =
        escapes.iter().map(|c| (orient.to_global(c.vertices[0]), global(orient, c))).collect();
    EscapePlan {
        linked: linked.into_iter().zip(links).map(|(i, c)| (i, global(orient, c))).collect(),
        exits: mating.iter().map(|(_, p)| p.last().expect("non-empty")).collect(),
        mating,
    }
}

/// Link pairs inside a quadrant holding six, seven or eight terminals and
/// send every other terminal to its own exit on `A ∪ B`. With seven or eight
/// terminals at least two pairs are linked; with six at least one, and at
/// most one exit lies on `B` away from the corner.
pub fn escape_crowded(orient: Orientation, q: &CrowdedQuadrant, r: &Restrictions) -> Result<EscapePlan, LemmaError> {
    let all = q.terminals();
    if !distinct(&all) {
        return Err(LemmaError::Precondition("terminals must be distinct".into()));
    }
    let (lemma, min_linked, limit_b) = match q.terminal_count() {
        7 | 8 => (LemmaId::Crowded78, 2, false),
        6 => (LemmaId::Crowded6, 1, true),
        n => return Err(LemmaError::Precondition(format!("{n} terminals; expected 6, 7 or 8"))),
    };
    if q.pairs.len() < min_linked {
        return Err(LemmaError::Precondition(format!("only {} pairs inside the quadrant", q.pairs.len())));
    }
    let local = localize(orient, &all)?;
    let pairs: Vec<(Vertex, Vertex)> = local.chunks(2).take(q.pairs.len()).map(|c| (c[0], c[1])).collect();
    let singles = &local[2 * q.pairs.len()..];
    let choices = subsets_by_size(pairs.len(), min_linked);
    let host = local_grid();
    let outcome = attempt(&host, orient, r, |adj, ctx| crowded_local(adj, ctx, &pairs, singles, &choices, limit_b));
    let (linked, plan) = settle(lemma, outcome, || format!("{orient}: {q:?}"))?;
    Ok(escape_plan(orient, linked, plan))
}

/// Link the designated pair inside a quadrant holding five terminals and
/// send the other three to distinct exits on `A ∪ B`, at most one of them on
/// `B` away from the corner, all avoiding the linking path.
pub fn escape_designated(
    orient: Orientation,
    designated: (Vertex, Vertex),
    others: [Vertex; 3],
    r: &Restrictions,
) -> Result<EscapePlan, LemmaError> {
    let all = [designated.0, designated.1, others[0], others[1], others[2]];
    if !distinct(&all) {
        return Err(LemmaError::Precondition("terminals must be distinct".into()));
    }
    let local = localize(orient, &all)?;
    let host = local_grid();
    let outcome = attempt(&host, orient, r, |adj, ctx| {
        crowded_local(adj, ctx, &[(local[0], local[1])], &local[2..], &[vec![0]], true)
    });
    let (linked, plan) =
        settle(LemmaId::Crowded5, outcome, || format!("{orient}: designated {designated:?}, others {others:?}"))?;
    Ok(escape_plan(orient, linked, plan))
}

/// Mate `s[j]` onto `gamma[j]` inside the quadrant without using edges of
/// the 12-cycle. The two vertices may coincide.
pub fn mate_to_cycles(
    q: Quadrant,
    s: [Vertex; 2],
    gamma: [CycleId; 2],
    r: &Restrictions,
) -> Result<[Path; 2], LemmaError> {
    let orient = Orientation::horizontal(q);
    let local = localize(orient, &s)?;
    let c1 = local_c1_edges();
    let host = local_grid();
    let outcome = attempt(&host, orient, r, |adj, ctx| {
        let reqs = [0, 1].map(|j| ctx.to(local[j], &gamma[j].local_vertices()).avoiding(c1));
        search(adj, &reqs, &|_| true)
    });
    let plan = settle(LemmaId::Framing, outcome, || format!("{q}: mate {s:?} onto {gamma:?}"))?;
    Ok([global(orient, &plan[0]), global(orient, &plan[1])])
}

fn frame_requests(ctx: &Ctx, a: Vertex, b: Vertex, apex: Vertex) -> [Request; 2] {
    let c1 = local_c1_edges();
    [ctx.to(a, &[apex]).avoiding(c1), ctx.to(b, &[apex]).avoiding(c1)]
}

fn make_frame(orient: Orientation, cycle: CycleId, apex: Vertex, a: &Candidate, b: &Candidate) -> Frame {
    Frame { cycle, apex: orient.to_global(apex), feeders: [global(orient, a), global(orient, b)] }
}

/// Framing `[C_α, x_α]`: feeders from both vertices to the quadrant's apex
/// of `C_α`, inside the quadrant and off the 12-cycle's edges.
pub fn build_framing(q: Quadrant, s: [Vertex; 2], alpha: CycleId, r: &Restrictions) -> Result<Frame, LemmaError> {
    let orient = Orientation::horizontal(q);
    let local = localize(orient, &s)?;
    let apex = alpha.local_apex();
    let host = local_grid();
    let outcome = attempt(&host, orient, r, |adj, ctx| search(adj, &frame_requests(ctx, local[0], local[1], apex), &|_| true));
    let plan = settle(LemmaId::Framing, outcome, || format!("{q}: frame {s:?} at {alpha}"))?;
    Ok(make_frame(orient, alpha, apex, &plan[0], &plan[1]))
}

/// Frame the first two terminals onto some `C_α` (at any of its vertices in
/// the quadrant) and mate the third onto the other cycle, all off the
/// 12-cycle's edges. `C0` is tried before `C1`.
pub fn framing_two_plus_one(q: Quadrant, s: [Vertex; 3], r: &Restrictions) -> Result<FramePlusOne, LemmaError> {
    if !distinct(&s) {
        return Err(LemmaError::Precondition("terminals must be distinct".into()));
    }
    let orient = Orientation::horizontal(q);
    let local = localize(orient, &s)?;
    let c1 = local_c1_edges();
    let host = local_grid();
    let outcome = attempt(&host, orient, r, |adj, ctx| {
        for alpha in CycleId::BOTH {
            let mut apexes = alpha.local_vertices();
            apexes.sort();
            for w in apexes {
                let [a, b] = frame_requests(ctx, local[0], local[1], w);
                let third = ctx.to(local[2], &alpha.other().local_vertices()).avoiding(c1);
                if let Some(plan) = search(adj, &[a, b, third], &|_| true) {
                    return Some((alpha, w, plan));
                }
            }
        }
        None
    });
    let (alpha, w, plan) = settle(LemmaId::FramingPlusOne, outcome, || format!("{q}: {s:?}"))?;
    Ok(FramePlusOne { frame: make_frame(orient, alpha, w, &plan[0], &plan[1]), third: global(orient, &plan[2]) })
}

/// Pick two of three terminals to frame and route the remaining one:
/// onto `C1` after framing at `x0`, or to the corner `z` after framing onto
/// `C1`. Here `z` is `x0` or a corner of degree three in the 6×6 grid. The
/// third path may use 12-cycle edges.
pub fn framing_choose_pq(
    q: Quadrant,
    s: [Vertex; 3],
    target: ChoiceTarget,
    r: &Restrictions,
) -> Result<ChosenFrame, LemmaError> {
    if !distinct(&s) {
        return Err(LemmaError::Precondition("terminals must be distinct".into()));
    }
    let orient = Orientation::horizontal(q);
    let local = localize(orient, &s)?;
    let (alpha, third_targets) = match target {
        ChoiceTarget::FourCycle => (CycleId::C0, CycleId::C1.local_vertices()),
        ChoiceTarget::TwelveCycle(z) => {
            let zl = localize(orient, &[z])?[0];
            if ![X0, Y0_ON_A, Y0_ON_B].contains(&zl) {
                return Err(LemmaError::Precondition(format!("{z} is neither x0 nor a degree-3 corner")));
            }
            (CycleId::C1, vec![zl])
        }
    };
    let host = local_grid();
    let outcome = attempt(&host, orient, r, |adj, ctx| {
        for (p, qq, t) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let mut apexes = alpha.local_vertices();
            apexes.sort();
            for w in apexes {
                let [a, b] = frame_requests(ctx, local[p], local[qq], w);
                let third = ctx.to(local[t], &third_targets);
                if let Some(plan) = search(adj, &[a, b, third], &|_| true) {
                    return Some(((p, qq), w, plan));
                }
            }
        }
        None
    });
    let (chosen, w, plan) = settle(LemmaId::FramingChoice, outcome, || format!("{q}: {s:?} with {target:?}"))?;
    Ok(ChosenFrame { chosen, frame: make_frame(orient, alpha, w, &plan[0], &plan[1]), third: global(orient, &plan[2]) })
}

/// Mate terminals into the boundary line `A` of `Q0` (the quadrant without
/// `A`'s edges) or of an adjusted quadrant. Paths on adjusted quadrants are
/// given by their vertices; a step between merged vertices crosses the
/// contracted edge.
pub fn exit_mating(
    orient: Orientation,
    h: Adjustment,
    req: &ExitRequest,
    r: &Restrictions,
) -> Result<Vec<Path>, LemmaError> {
    let host = h.graph();
    let a_line = Side::A.local_vertices();
    let (terminals, shape): (Vec<Vertex>, u8) = match *req {
        ExitRequest::Spread(t) => (t.to_vec(), 0),
        ExitRequest::LinkAndMate { s1, t1, s2 } => (vec![s1, t1, s2], 1),
        ExitRequest::Distinct(t) => (t.to_vec(), 2),
    };
    let local = localize(orient, &terminals)?;
    if let Some(x) = local.iter().find(|&&x| !host.contains(x)) {
        return Err(LemmaError::Precondition(format!("{} is not a vertex of {h}", orient.to_global(*x))));
    }
    match shape {
        0 if h == Adjustment::Q0 => return Err(LemmaError::Precondition("spread mating needs Q1..Q4".into())),
        0 if !distinct(&local) => return Err(LemmaError::Precondition("terminals must be distinct".into())),
        1 | 2 if h != Adjustment::Q0 => return Err(LemmaError::Precondition("variant needs Q0".into())),
        2 if !distinct(&local) => {
            let coincide_off_a =
                local.iter().enumerate().all(|(i, x)| local[..i].iter().all(|y| y != x || !a_line.contains(x)));
            let pairs = (0..3).filter(|&i| local[..i].contains(&local[i])).count();
            if !coincide_off_a || pairs != 1 {
                return Err(LemmaError::Precondition("only two terminals off A may coincide".into()));
            }
        }
        _ => {}
    }
    let outcome = attempt(&host, orient, r, |adj, ctx| {
        let reqs: Vec<Request> = match shape {
            0 => local.iter().map(|&x| ctx.to(x, &a_line)).collect(),
            1 => vec![ctx.link(local[0], local[1]), ctx.to(local[2], &a_line)],
            _ => local.iter().map(|&x| ctx.to(x, &a_line).in_group(0)).collect(),
        };
        search(adj, &reqs, &|_| true)
    });
    let plan = settle(LemmaId::BoundaryExit, outcome, || format!("{orient} {h}: {req:?}"))?;
    Ok(plan.iter().map(|c| global(orient, c)).collect())
}

/// Local `T1` and `T2`, listed from `s1`.
fn exceptional_sets() -> [Vec<Vertex>; 2] {
    [vec![v(1, 1), v(2, 1), v(3, 1)], vec![B_MIDDLE, v(1, 3), v(1, 2), v(1, 1)]]
}

fn local_guarantee(t: &[Vertex]) -> Guarantee {
    let inner = [v(1, 2), v(1, 3), v(2, 1), v(2, 2), v(2, 3)];
    if t.iter().all(|x| inner.contains(x)) {
        return Guarantee::Every;
    }
    let mut sorted = t.to_vec();
    sorted.sort();
    for e in exceptional_sets() {
        let mut es = e.clone();
        es.sort();
        if es == sorted {
            return Guarantee::Only(e[..2].to_vec());
        }
    }
    Guarantee::AtLeast(t.len().min(3))
}

fn check_projection_input(orient: Orientation, t: &[Vertex]) -> Result<Vec<Vertex>, LemmaError> {
    if t.is_empty() || t.len() > 4 || !distinct(t) {
        return Err(LemmaError::Precondition("between one and four distinct terminals".into()));
    }
    localize(orient, t)
}

/// What the projection statement promises for the terminal set `t`.
pub fn projection_guarantee(orient: Orientation, t: &[Vertex]) -> Result<Guarantee, LemmaError> {
    let local = check_projection_input(orient, t)?;
    Ok(match local_guarantee(&local) {
        Guarantee::Only(xs) => Guarantee::Only(orient.vertices_to_global(&xs)),
        g => g,
    })
}

fn projection_local(adj: &Adjacency<'_>, ctx: &Ctx, t: &[Vertex], s: Vertex) -> Option<Vec<Candidate>> {
    let a_line = Side::A.local_vertices();
    let mut rest: Vec<Vertex> = t.iter().copied().filter(|&x| x != s).collect();
    rest.sort();
    let mut reqs = vec![ctx.link(s, B_MIDDLE)];
    reqs.extend(rest.iter().map(|&x| ctx.to(x, &a_line)));
    search(adj, &reqs, &|_| true)
}

/// In `Q0`, link `s` to the middle vertex of `B` and mate the other
/// terminals of `t` into `A`. A failure for a choice of `s` that the
/// statement does not cover is a [`LemmaError::Refused`].
pub fn project_to_a(orient: Orientation, t: &[Vertex], s: Vertex, r: &Restrictions) -> Result<Projection, LemmaError> {
    let local = check_projection_input(orient, t)?;
    if !t.contains(&s) {
        return Err(LemmaError::Precondition(format!("{s} is not in the terminal set")));
    }
    let sl = orient.to_local(s).expect("checked");
    let host = Adjustment::Q0.graph();
    match attempt(&host, orient, r, |adj, ctx| projection_local(adj, ctx, &local, sl)) {
        Outcome::Found(plan) => {
            let mut rest: Vec<Vertex> = local.iter().copied().filter(|&x| x != sl).collect();
            rest.sort();
            Ok(Projection {
                link: global(orient, &plan[0]),
                mating: rest.iter().zip(&plan[1..]).map(|(&x, c)| (orient.to_global(x), global(orient, c))).collect(),
            })
        }
        Outcome::Restricted => Err(LemmaError::Restricted { lemma: LemmaId::Projection }),
        Outcome::Missing => {
            let guaranteed = match local_guarantee(&local) {
                Guarantee::Every => true,
                Guarantee::Only(xs) => xs.contains(&sl),
                Guarantee::AtLeast(_) => false,
            };
            if guaranteed {
                Err(LemmaError::Violation {
                    lemma: LemmaId::Projection,
                    config: format!("{orient}: T {t:?}, s {s}"),
                })
            } else {
                Err(LemmaError::Refused { terminals: t.to_vec(), s })
            }
        }
    }
}

/// Every `s ∈ t` for which [`project_to_a`] succeeds, in input order.
pub fn projection_choices(orient: Orientation, t: &[Vertex], r: &Restrictions) -> Result<Vec<Vertex>, LemmaError> {
    let local = check_projection_input(orient, t)?;
    let host = Adjustment::Q0.graph();
    let adj = Adjacency::new(&host);
    let ctx = Ctx::new(orient, r);
    Ok(t.iter()
        .zip(&local)
        .filter(|(_, &sl)| projection_local(&adj, &ctx, &local, sl).is_some())
        .map(|(&s, _)| s)
        .collect())
}

/// Link `s1` to `t1` inside the quadrant and mate `s2`, `s3` to distinct
/// vertices of the lines `psi[0]`, `psi[1]`.
pub fn boundary_linkage(
    orient: Orientation,
    [s1, t1, s2, s3]: [Vertex; 4],
    psi: [Side; 2],
    r: &Restrictions,
) -> Result<BoundaryPlan, LemmaError> {
    let local = localize(orient, &[s1, t1, s2, s3])?;
    let host = local_grid();
    let outcome = attempt(&host, orient, r, |adj, ctx| {
        let reqs = [
            ctx.link(local[0], local[1]),
            ctx.to(local[2], &psi[0].local_vertices()).in_group(0),
            ctx.to(local[3], &psi[1].local_vertices()).in_group(0),
        ];
        search(adj, &reqs, &|_| true)
    });
    let plan = settle(LemmaId::BoundaryLinkage, outcome, || {
        format!("{orient}: pair {s1}-{t1}, {s2} to {:?}, {s3} to {:?}", psi[0], psi[1])
    })?;
    Ok(BoundaryPlan { link: global(orient, &plan[0]), mating: [global(orient, &plan[1]), global(orient, &plan[2])] })
}

/// One path request of [`route_in_quadrant`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub from: Vertex,
    pub targets: Vec<Vertex>,
    /// Must end at a vertex no other `distinct` leg ends at.
    pub distinct: bool,
}

impl Leg {
    pub fn to(from: Vertex, targets: Vec<Vertex>) -> Leg {
        Leg { from, targets, distinct: false }
    }

    pub fn link(from: Vertex, to: Vertex) -> Leg {
        Leg { from, targets: vec![to], distinct: false }
    }

    pub fn distinct(mut self) -> Leg {
        self.distinct = true;
        self
    }
}

/// Edge-disjoint paths inside the quadrant, one per leg, optionally without
/// the edges of `A`. This is a plain search used to glue certified steps
/// together, not one of the certified statements, so a miss is `Ok(None)`.
pub fn route_in_quadrant(
    orient: Orientation,
    legs: &[Leg],
    without_a: bool,
    r: &Restrictions,
) -> Result<Option<Vec<Path>>, LemmaError> {
    let froms: Vec<Vertex> = legs.iter().map(|l| l.from).collect();
    let local_from = localize(orient, &froms)?;
    let local_targets: Vec<Vec<Vertex>> =
        legs.iter().map(|l| localize(orient, &l.targets)).collect::<Result<_, _>>()?;
    let host = if without_a { Adjustment::Q0.graph() } else { local_grid() };
    let adj = Adjacency::new(&host);
    let ctx = Ctx::new(orient, r);
    let reqs: Vec<Request> = local_from
        .iter()
        .zip(&local_targets)
        .zip(legs)
        .map(|((&f, ts), l)| {
            let req = ctx.to(f, ts);
            if l.distinct {
                req.in_group(0)
            } else {
                req
            }
        })
        .collect();
    Ok(search(&adj, &reqs, &|_| true).map(|plan| plan.iter().map(|c| global(orient, c)).collect()))
}

/// The corner of the quadrant not on `A ∪ B`, in 6×6 coordinates.
pub fn far_corner(orient: Orientation) -> Vertex {
    orient.to_global(FAR_CORNER)
}

/// The middle vertex of `B`, in 6×6 coordinates.
pub fn b_middle(orient: Orientation) -> Vertex {
    orient.to_global(B_MIDDLE)
}

/// The boundary line `A` or `B` of the quadrant, in 6×6 coordinates.
pub fn side_vertices(orient: Orientation, side: Side) -> Vec<Vertex> {
    orient.vertices_to_global(&side.local_vertices())
}
