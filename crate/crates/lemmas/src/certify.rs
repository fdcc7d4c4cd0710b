//! Exhaustive certification of the local statements.
//!
//! Every configuration a statement covers is fed to its operation and the
//! returned plan is re-checked here against the statement's predicates,
//! using the grid, cycles and boundary lines as defined in `gridlink-core`
//! rather than the tables the search itself uses.

use crate::error::{LemmaError, LemmaId};
use crate::frame::{CycleId, Orientation, Side};
use crate::ops::*;
use gridlink_core::{
    central_cycles, check_weakly_2_linked, is_k_path_pairable, Adjustment, CampaignConfig, CentralCycles, EdgeSet,
    GridGraph, Limits, Mode, Path, Quadrant, Verdict, Vertex,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Run the boundary-line statements in all eight placements of the local
    /// frame; otherwise only in the north-west one.
    pub all_orientations: bool,
    /// Largest `k` for the weakly 2-linked families.
    pub w2_max: u8,
    /// Largest number of columns for the four-row pairability check.
    pub four_row_max_cols: u8,
    pub limits: Limits,
    /// Worker threads; `0` uses the ambient rayon pool.
    pub jobs: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { all_orientations: true, w2_max: 6, four_row_max_cols: 5, limits: Limits::default(), jobs: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCertificate {
    pub lemma: LemmaId,
    pub name: String,
    pub statement: String,
    pub configurations: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
    /// Configuration counts per part of the statement.
    pub parts: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    pub complete: bool,
    pub wall_time_ms: u64,
}

impl LemmaCertificate {
    pub fn passed(&self) -> bool {
        self.complete && self.violations == 0
    }
}

#[derive(Default)]
struct Tally {
    configurations: u64,
    violations: u64,
    first: Option<String>,
    parts: BTreeMap<String, u64>,
    notes: Vec<String>,
    complete: bool,
}

impl Tally {
    fn new() -> Tally {
        Tally { complete: true, ..Tally::default() }
    }

    fn absorb(&mut self, part: &str, results: Vec<Result<(), String>>) {
        *self.parts.entry(part.to_string()).or_default() += results.len() as u64;
        self.configurations += results.len() as u64;
        for r in results {
            if let Err(msg) = r {
                self.fail(format!("{part}: {msg}"));
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.violations += 1;
        if self.first.is_none() {
            self.first = Some(msg);
        }
    }
}

/// Run one statement's certification.
pub fn certify(lemma: LemmaId, opts: &CertifyOptions) -> LemmaCertificate {
    let start = Instant::now();
    let run = || {
        let mut t = Tally::new();
        match lemma {
            LemmaId::Crowded78 => crowded(&mut t, opts, &[8, 7]),
            LemmaId::Crowded6 => crowded(&mut t, opts, &[6]),
            LemmaId::Crowded5 => crowded5(&mut t, opts),
            LemmaId::WeaklyTwoLinked => weakly_two_linked(&mut t, opts),
            LemmaId::FourRowPairable => four_row(&mut t, opts),
            LemmaId::Framing => framing(&mut t),
            LemmaId::FramingPlusOne => framing_plus_one(&mut t),
            LemmaId::FramingChoice => framing_choice(&mut t),
            LemmaId::BoundaryExit => boundary_exit(&mut t, opts),
            LemmaId::Projection => projection(&mut t, opts),
            LemmaId::BoundaryLinkage => boundary(&mut t, opts),
        }
        t
    };
    let t = if opts.jobs > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    } else {
        run()
    };
    LemmaCertificate {
        lemma,
        name: lemma.name().to_string(),
        statement: lemma.statement().to_string(),
        configurations: t.configurations,
        violations: t.violations,
        first_violation: t.first,
        parts: t.parts,
        notes: t.notes,
        complete: t.complete,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

fn orientations(opts: &CertifyOptions) -> Vec<Orientation> {
    if opts.all_orientations {
        Orientation::all()
    } else {
        vec![Orientation::horizontal(Quadrant::NW)]
    }
}

fn check_all<C: Sync>(configs: &[C], f: impl Fn(&C) -> Result<(), String> + Sync + Send) -> Vec<Result<(), String>> {
    configs.par_iter().map(f).collect()
}

fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out: Vec<Vec<T>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, items[0]);
            c
        })
        .collect();
    out.extend(combinations(&items[1..], k));
    out
}

fn matchings(items: &[Vertex]) -> Vec<Vec<(Vertex, Vertex)>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for j in 1..items.len() {
        let rest: Vec<Vertex> = items[1..].iter().enumerate().filter(|&(i, _)| i + 1 != j).map(|(_, &x)| x).collect();
        for mut m in matchings(&rest) {
            m.insert(0, (items[0], items[j]));
            out.push(m);
        }
    }
    out
}

/// Validates plans against a host graph given in local coordinates.
struct Checker {
    orient: Orientation,
    host: GridGraph,
    g6: GridGraph,
    cycles: CentralCycles,
}

impl Checker {
    fn new(orient: Orientation, host: GridGraph) -> Checker {
        let g6 = GridGraph::new(6, 6).expect("6x6 grid");
        let cycles = central_cycles(&g6).expect("standard cycles");
        Checker { orient, host, g6, cycles }
    }

    fn quadrant(q: Quadrant) -> Checker {
        Checker::new(Orientation::horizontal(q), GridGraph::new(3, 3).expect("3x3 grid"))
    }

    /// 6×6 edge indices of a path inside the host, or a reason it is not one.
    fn edges(&self, p: &Path) -> Result<Vec<usize>, String> {
        let vs = p.vertices();
        if vs.is_empty() {
            return Err("empty vertex sequence".into());
        }
        let mut out = Vec::new();
        for w in vs.windows(2) {
            let (a, b) = (self.orient.to_local(w[0]), self.orient.to_local(w[1]));
            let (Some(a), Some(b)) = (a, b) else {
                return Err(format!("{p} leaves quadrant {}", self.orient.quadrant));
            };
            let e = self.host.edge_between(a, b).ok_or_else(|| format!("{p}: {}-{} is not an edge", w[0], w[1]))?;
            let (x, y) = self.host.edge_at(e).endpoints();
            out.push(self.g6.edge_index(self.orient.to_global(x), self.orient.to_global(y)).expect("grid edge"));
        }
        let mut sorted = out.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != out.len() {
            return Err(format!("{p} repeats an edge"));
        }
        Ok(out)
    }

    fn disjoint(&self, paths: &[&Path]) -> Result<EdgeSet, String> {
        let mut seen: Vec<usize> = Vec::new();
        for p in paths {
            for e in self.edges(p)? {
                if seen.contains(&e) {
                    return Err(format!("paths share an edge ({p})"));
                }
                seen.push(e);
            }
        }
        Ok(seen.into_iter().collect())
    }

    fn c1_edges(&self) -> EdgeSet {
        self.cycles.c1.edge_set(&self.g6)
    }

    fn on_cycle(&self, c: CycleId, x: Vertex) -> bool {
        match c {
            CycleId::C0 => self.cycles.c0.contains(x),
            CycleId::C1 => self.cycles.c1.contains(x),
        }
    }

    fn apex(&self, c: CycleId) -> Vertex {
        match c {
            CycleId::C0 => self.cycles.x0(self.orient.quadrant),
            CycleId::C1 => self.cycles.x1(self.orient.quadrant),
        }
    }

    /// The boundary lines, from the 6×6 geometry: `A` is the quadrant's
    /// row (or, transposed, column) next to the centre, `B` the other one.
    fn line(&self, side: Side) -> Vec<Vertex> {
        let q = self.orient.quadrant;
        let inner_row = if q.origin().row == 1 { 3 } else { 4 };
        let inner_col = if q.origin().col == 1 { 3 } else { 4 };
        let horizontal = (side == Side::A) != self.orient.transpose;
        q.vertices()
            .into_iter()
            .filter(|x| if horizontal { x.row == inner_row } else { x.col == inner_col })
            .collect()
    }
}

fn starts_at(p: &Path, x: Vertex) -> Result<(), String> {
    if p.first() == Some(x) {
        Ok(())
    } else {
        Err(format!("{p} does not start at {x}"))
    }
}

fn ends_in(p: &Path, targets: &[Vertex], what: &str) -> Result<Vertex, String> {
    let end = p.last().ok_or("empty path")?;
    if targets.contains(&end) {
        Ok(end)
    } else {
        Err(format!("{p} does not end in {what}"))
    }
}

fn all_distinct(xs: &[Vertex]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

fn describe(e: LemmaError) -> String {
    e.to_string()
}

fn check_escape(
    ch: &Checker,
    pairs: &[(Vertex, Vertex)],
    singles: &[Vertex],
    plan: &EscapePlan,
    min_linked: usize,
    limit_b: bool,
) -> Result<(), String> {
    if plan.linked.len() < min_linked {
        return Err(format!("only {} pairs linked", plan.linked.len()));
    }
    let mut escaping: Vec<Vertex> = singles.to_vec();
    for (i, (s, t)) in pairs.iter().enumerate() {
        match plan.linked.iter().find(|(j, _)| *j == i) {
            Some((_, p)) => {
                starts_at(p, *s)?;
                ends_in(p, &[*t], "its partner")?;
            }
            None => escaping.extend([*s, *t]),
        }
    }
    let mut from: Vec<Vertex> = plan.mating.iter().map(|(x, _)| *x).collect();
    from.sort();
    escaping.sort();
    if from != escaping {
        return Err(format!("escaping terminals {from:?}, expected {escaping:?}"));
    }
    let mut boundary = ch.line(Side::A);
    boundary.extend(ch.line(Side::B));
    let mut exits = Vec::new();
    for (x, p) in &plan.mating {
        starts_at(p, *x)?;
        exits.push(ends_in(p, &boundary, "A ∪ B")?);
    }
    if exits != plan.exits {
        return Err("reported exits differ from path ends".into());
    }
    if !all_distinct(&exits) {
        return Err(format!("exits {exits:?} not distinct"));
    }
    if limit_b {
        let a = ch.line(Side::A);
        let on_b_only = exits.iter().filter(|x| ch.line(Side::B).contains(x) && !a.contains(x)).count();
        if on_b_only > 1 {
            return Err(format!("{on_b_only} exits on B away from A"));
        }
    }
    let paths: Vec<&Path> = plan.linked.iter().map(|(_, p)| p).chain(plan.mating.iter().map(|(_, p)| p)).collect();
    ch.disjoint(&paths).map(|_| ())
}

fn crowded(t: &mut Tally, opts: &CertifyOptions, sizes: &[usize]) {
    for orient in orientations(opts) {
        let ch = Checker::new(orient, GridGraph::new(3, 3).expect("3x3 grid"));
        let cells = orient.quadrant.vertices();
        for &n in sizes {
            let mut configs: Vec<CrowdedQuadrant> = Vec::new();
            for chosen in combinations(&cells, n) {
                match n {
                    8 => configs.extend(matchings(&chosen).into_iter().map(|pairs| CrowdedQuadrant { pairs, singles: vec![] })),
                    7 => {
                        for (i, &lone) in chosen.iter().enumerate() {
                            let rest: Vec<Vertex> =
                                chosen.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                            configs.extend(
                                matchings(&rest).into_iter().map(|pairs| CrowdedQuadrant { pairs, singles: vec![lone] }),
                            );
                        }
                    }
                    _ => {
                        configs.extend(matchings(&chosen).into_iter().map(|pairs| CrowdedQuadrant { pairs, singles: vec![] }));
                        for singles in combinations(&chosen, 2) {
                            let rest: Vec<Vertex> = chosen.iter().copied().filter(|x| !singles.contains(x)).collect();
                            configs.extend(
                                matchings(&rest)
                                    .into_iter()
                                    .map(|pairs| CrowdedQuadrant { pairs, singles: singles.clone() }),
                            );
                        }
                    }
                }
            }
            let (min_linked, limit_b) = if n >= 7 { (2, false) } else { (1, true) };
            let results = check_all(&configs, |c| {
                let plan = escape_crowded(orient, c, &Restrictions::NONE).map_err(describe)?;
                check_escape(&ch, &c.pairs, &c.singles, &plan, min_linked, limit_b)
                    .map_err(|e| format!("{orient} {c:?}: {e}"))
            });
            t.absorb(&format!("{n} terminals"), results);
        }
    }
}

fn crowded5(t: &mut Tally, opts: &CertifyOptions) {
    for orient in orientations(opts) {
        let ch = Checker::new(orient, GridGraph::new(3, 3).expect("3x3 grid"));
        let cells = orient.quadrant.vertices();
        let mut configs = Vec::new();
        for d in combinations(&cells, 2) {
            let rest: Vec<Vertex> = cells.iter().copied().filter(|x| !d.contains(x)).collect();
            for o in combinations(&rest, 3) {
                configs.push(((d[0], d[1]), [o[0], o[1], o[2]]));
            }
        }
        let results = check_all(&configs, |&(d, others)| {
            let plan = escape_designated(orient, d, others, &Restrictions::NONE).map_err(describe)?;
            if plan.linked.first().map(|(i, _)| *i) != Some(0) || plan.linked.len() != 1 {
                return Err("designated pair not linked".into());
            }
            check_escape(&ch, &[d], &others, &plan, 1, true).map_err(|e| format!("{orient} {d:?} {others:?}: {e}"))
        });
        t.absorb("5 terminals", results);
    }
}

fn weakly_two_linked(t: &mut Tally, opts: &CertifyOptions) {
    for k in 3..=opts.w2_max {
        let band = GridGraph::new(3, k as i64).expect("grid");
        let square = GridGraph::new(k as i64, k as i64).expect("grid");
        let frame = square.induced(square.row_set(1) | square.row_set(2) | square.col_set(1) | square.col_set(2));
        for (label, g) in [(format!("P3xP{k}"), band), (format!("frame of P{k}xP{k}"), frame)] {
            let r = check_weakly_2_linked(&g, opts.limits);
            *t.parts.entry(label.clone()).or_default() += r.quadruples;
            t.configurations += r.quadruples;
            t.complete &= r.complete;
            if !r.linked {
                t.fail(format!("{label}: fails for {:?}", r.first_failure));
            }
        }
    }
}

fn four_row(t: &mut Tally, opts: &CertifyOptions) {
    let config = CampaignConfig { limits: opts.limits, jobs: opts.jobs, ..CampaignConfig::default() };
    for k in 4..=opts.four_row_max_cols {
        let g = GridGraph::new(4, k as i64).expect("grid");
        let label = format!("P4xP{k}");
        match is_k_path_pairable(&g, 3, Mode::Exhaustive, &config) {
            Ok(r) => {
                *t.parts.entry(label.clone()).or_default() += r.total_pairings;
                t.configurations += r.total_pairings;
                t.notes.push(format!("{label}: {} pairings, {} canonical solved", r.total_pairings, r.examined));
                match r.verdict {
                    Verdict::Pairable => {}
                    Verdict::NotPairable => t.fail(format!("{label}: {:?}", r.first_unsat.map(|w| w.instance))),
                    _ => t.complete = false,
                }
            }
            Err(e) => {
                t.complete = false;
                t.notes.push(format!("{label}: {e}"));
            }
        }
    }
}

fn framing(t: &mut Tally) {
    let gammas = [[CycleId::C0, CycleId::C0], [CycleId::C0, CycleId::C1], [CycleId::C1, CycleId::C0], [CycleId::C1, CycleId::C1]];
    for q in Quadrant::ALL {
        let ch = Checker::quadrant(q);
        let cells = q.vertices();
        let pairs: Vec<(Vertex, Vertex)> = cells.iter().flat_map(|&a| cells.iter().map(move |&b| (a, b))).collect();
        let mating: Vec<((Vertex, Vertex), [CycleId; 2])> =
            pairs.iter().flat_map(|&p| gammas.iter().map(move |&g| (p, g))).collect();
        let results = check_all(&mating, |&((a, b), gamma)| {
            let paths = mate_to_cycles(q, [a, b], gamma, &Restrictions::NONE).map_err(describe)?;
            for (j, (p, s)) in paths.iter().zip([a, b]).enumerate() {
                starts_at(p, s)?;
                let end = p.last().ok_or("empty path")?;
                if !ch.on_cycle(gamma[j], end) {
                    return Err(format!("{p} does not end on {}", gamma[j]));
                }
            }
            let used = ch.disjoint(&[&paths[0], &paths[1]])?;
            if !used.is_disjoint(ch.c1_edges()) {
                return Err(format!("{q} {a} {b}: uses an edge of C1"));
            }
            Ok(())
        });
        t.absorb("cycle mating", results);
        let framed: Vec<((Vertex, Vertex), CycleId)> =
            pairs.iter().flat_map(|&p| CycleId::BOTH.map(|c| (p, c))).collect();
        let results = check_all(&framed, |&((a, b), alpha)| {
            let f = build_framing(q, [a, b], alpha, &Restrictions::NONE).map_err(describe)?;
            check_frame(&ch, &f, alpha, [a, b], Some(ch.apex(alpha))).map(|_| ())
        });
        t.absorb("framing at apex", results);
    }
}

fn check_frame(ch: &Checker, f: &Frame, alpha: CycleId, s: [Vertex; 2], apex: Option<Vertex>) -> Result<EdgeSet, String> {
    if f.cycle != alpha {
        return Err(format!("frame on {} instead of {alpha}", f.cycle));
    }
    if !ch.on_cycle(alpha, f.apex) || !ch.orient.quadrant.contains(f.apex) {
        return Err(format!("apex {} not on {alpha} in the quadrant", f.apex));
    }
    if apex.is_some_and(|x| x != f.apex) {
        return Err(format!("apex {} is not x_{alpha}", f.apex));
    }
    for (p, x) in f.feeders.iter().zip(s) {
        starts_at(p, x)?;
        ends_in(p, &[f.apex], "the apex")?;
    }
    let used = ch.disjoint(&[&f.feeders[0], &f.feeders[1]])?;
    if !used.is_disjoint(ch.c1_edges()) {
        return Err("feeder uses an edge of C1".into());
    }
    Ok(used)
}

fn ordered_triples(cells: &[Vertex]) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for &a in cells {
        for &b in cells {
            for &c in cells {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn framing_plus_one(t: &mut Tally) {
    for q in Quadrant::ALL {
        let ch = Checker::quadrant(q);
        let configs = ordered_triples(&q.vertices());
        let results = check_all(&configs, |&s| {
            let r = framing_two_plus_one(q, s, &Restrictions::NONE).map_err(describe)?;
            let alpha = r.frame.cycle;
            let used = check_frame(&ch, &r.frame, alpha, [s[0], s[1]], None)?;
            starts_at(&r.third, s[2])?;
            let end = r.third.last().ok_or("empty path")?;
            if !ch.on_cycle(alpha.other(), end) {
                return Err(format!("third path {} misses {}", r.third, alpha.other()));
            }
            let third = ch.disjoint(&[&r.third])?;
            if !third.is_disjoint(used | ch.c1_edges()) {
                return Err(format!("{q} {s:?}: third path overlaps the frame or C1"));
            }
            Ok(())
        });
        let failing: Vec<[Vertex; 3]> =
            configs.iter().zip(&results).filter(|(_, r)| r.is_err()).map(|(c, _)| *c).collect();
        if !failing.is_empty() {
            t.notes.push(format!("{q}: no plan for (s_p, s_q, s_r) = {failing:?}"));
        }
        // Same triples with the roles free: some terminal can play s_r.
        let unordered = combinations(&q.vertices(), 3);
        let free = unordered
            .iter()
            .filter(|s| {
                (0..3).any(|r| {
                    let others: Vec<Vertex> = (0..3).filter(|&i| i != r).map(|i| s[i]).collect();
                    !failing.contains(&[others[0], others[1], s[r]])
                })
            })
            .count();
        t.notes.push(format!("{q}: {free} of {} unordered triples work for some choice of s_r", unordered.len()));
        t.absorb("ordered triples", results);
    }
}

fn framing_choice(t: &mut Tally) {
    let g6 = GridGraph::new(6, 6).expect("6x6 grid");
    for q in Quadrant::ALL {
        let ch = Checker::quadrant(q);
        let cells = q.vertices();
        let o = q.origin();
        let corners = [o, gridlink_core::v(o.row, o.col + 2), gridlink_core::v(o.row + 2, o.col), gridlink_core::v(o.row + 2, o.col + 2)];
        let y0s: Vec<Vertex> = corners.into_iter().filter(|&x| g6.degree(x) == 3).collect();
        let mut targets = vec![ChoiceTarget::FourCycle, ChoiceTarget::TwelveCycle(ch.apex(CycleId::C0))];
        targets.extend(y0s.iter().map(|&y| ChoiceTarget::TwelveCycle(y)));
        let configs: Vec<(Vec<Vertex>, ChoiceTarget)> =
            combinations(&cells, 3).into_iter().flat_map(|s| targets.iter().map(move |&z| (s.clone(), z))).collect();
        let results = check_all(&configs, |(s, target)| {
            let s3 = [s[0], s[1], s[2]];
            let r = framing_choose_pq(q, s3, *target, &Restrictions::NONE).map_err(describe)?;
            let (p, pq) = r.chosen;
            if p >= pq || pq > 2 {
                return Err(format!("bad choice {:?}", r.chosen));
            }
            let third_ix = 3 - p - pq;
            let (alpha, ends): (CycleId, Vec<Vertex>) = match *target {
                ChoiceTarget::FourCycle => (CycleId::C0, cells.iter().copied().filter(|&x| ch.on_cycle(CycleId::C1, x)).collect()),
                ChoiceTarget::TwelveCycle(z) => (CycleId::C1, vec![z]),
            };
            let used = check_frame(&ch, &r.frame, alpha, [s3[p], s3[pq]], None)?;
            starts_at(&r.third, s3[third_ix])?;
            ends_in(&r.third, &ends, "its target")?;
            if !ch.disjoint(&[&r.third])?.is_disjoint(used) {
                return Err(format!("{q} {s:?}: third path overlaps the frame"));
            }
            Ok(())
        });
        t.absorb(&format!("{} targets per triple", targets.len()), results);
    }
}

fn boundary_exit(t: &mut Tally, opts: &CertifyOptions) {
    for orient in orientations(opts) {
        for h in Adjustment::ALL.into_iter().skip(1) {
            let ch = Checker::new(orient, h.graph());
            let a = ch.line(Side::A);
            let cells: Vec<Vertex> = h.graph().vertices().into_iter().map(|x| orient.to_global(x)).collect();
            let configs = combinations(&cells, 3);
            let results = check_all(&configs, |s| {
                let paths = exit_mating(orient, h, &ExitRequest::Spread([s[0], s[1], s[2]]), &Restrictions::NONE)
                    .map_err(describe)?;
                for (p, &x) in paths.iter().zip(s) {
                    starts_at(p, x)?;
                    ends_in(p, &a, "A")?;
                }
                ch.disjoint(&paths.iter().collect::<Vec<_>>()).map(|_| ())
            });
            t.absorb(&format!("(i) {h}"), results);
        }
        let ch = Checker::new(orient, Adjustment::Q0.graph());
        let a = ch.line(Side::A);
        let cells = orient.quadrant.vertices();
        let mut triples: Vec<[Vertex; 3]> = Vec::new();
        for &x in &cells {
            for &y in &cells {
                for &z in &cells {
                    triples.push([x, y, z]);
                }
            }
        }
        let results = check_all(&triples, |&[s1, t1, s2]| {
            let paths = exit_mating(orient, Adjustment::Q0, &ExitRequest::LinkAndMate { s1, t1, s2 }, &Restrictions::NONE)
                .map_err(describe)?;
            starts_at(&paths[0], s1)?;
            ends_in(&paths[0], &[t1], "t1")?;
            starts_at(&paths[1], s2)?;
            ends_in(&paths[1], &a, "A")?;
            ch.disjoint(&[&paths[0], &paths[1]]).map(|_| ())
        });
        t.absorb("(ii) Q0", results);
        let mut distinct: Vec<[Vertex; 3]> = combinations(&cells, 3).into_iter().map(|s| [s[0], s[1], s[2]]).collect();
        let plain = distinct.len() as u64;
        for &u in cells.iter().filter(|x| !a.contains(x)) {
            for &w in cells.iter().filter(|&&w| w != u) {
                distinct.push([u, u, w]);
            }
        }
        let results = check_all(&distinct, |s| {
            let paths =
                exit_mating(orient, Adjustment::Q0, &ExitRequest::Distinct(*s), &Restrictions::NONE).map_err(describe)?;
            let mut ends = Vec::new();
            for (p, &x) in paths.iter().zip(s) {
                starts_at(p, x)?;
                ends.push(ends_in(p, &a, "A")?);
            }
            if !all_distinct(&ends) {
                return Err(format!("{s:?}: exits {ends:?} not distinct"));
            }
            ch.disjoint(&paths.iter().collect::<Vec<_>>()).map(|_| ())
        });
        t.absorb("(iii) Q0", results);
        t.notes.push(format!("{orient}: (iii) covers {plain} distinct triples and {} with a coincidence", distinct.len() as u64 - plain));
    }
}

fn projection(t: &mut Tally, opts: &CertifyOptions) {
    for orient in orientations(opts) {
        let ch = Checker::new(orient, Adjustment::Q0.graph());
        let a = ch.line(Side::A);
        let b = ch.line(Side::B);
        let bm = b[1];
        let cells = orient.quadrant.vertices();
        let sets: Vec<Vec<Vertex>> = (1..=4).flat_map(|n| combinations(&cells, n)).collect();
        let outcomes: Vec<(Vec<Vertex>, Vec<Vertex>, Vec<String>)> = sets
            .par_iter()
            .map(|ts| {
                let mut ok = Vec::new();
                let mut bad = Vec::new();
                for &s in ts {
                    match project_to_a(orient, ts, s, &Restrictions::NONE) {
                        Ok(plan) => {
                            let check = (|| {
                                starts_at(&plan.link, s)?;
                                ends_in(&plan.link, &[bm], "b")?;
                                let mut paths = vec![&plan.link];
                                for (x, p) in &plan.mating {
                                    starts_at(p, *x)?;
                                    ends_in(p, &a, "A")?;
                                    paths.push(p);
                                }
                                if plan.mating.len() + 1 != ts.len() {
                                    return Err("missing mating paths".to_string());
                                }
                                ch.disjoint(&paths).map(|_| ())
                            })();
                            match check {
                                Ok(()) => ok.push(s),
                                Err(e) => bad.push(format!("{ts:?}, s {s}: {e}")),
                            }
                        }
                        Err(LemmaError::Refused { .. }) => {}
                        Err(e) => bad.push(e.to_string()),
                    }
                }
                (ts.clone(), ok, bad)
            })
            .collect();
        let mut exceptional = Vec::new();
        let mut configs = 0u64;
        for (ts, ok, bad) in outcomes {
            configs += ts.len() as u64;
            for msg in bad {
                t.fail(msg);
            }
            if ok.len() < ts.len().min(3) {
                exceptional.push((ts.clone(), ok.clone()));
            }
            let guarantee = projection_guarantee(orient, &ts).expect("valid set");
            let holds = match &guarantee {
                Guarantee::Every => ok.len() == ts.len(),
                Guarantee::AtLeast(n) => ok.len() >= *n,
                Guarantee::Only(xs) => {
                    let mut want = xs.clone();
                    want.sort();
                    let mut got = ok.clone();
                    got.sort();
                    want == got
                }
            };
            if !holds {
                t.fail(format!("{orient} {ts:?}: succeeded for {ok:?}, promised {guarantee:?}"));
            }
        }
        *t.parts.entry("terminal sets".into()).or_default() += sets.len() as u64;
        *t.parts.entry("(set, choice) pairs".into()).or_default() += configs;
        t.configurations += configs;
        t.notes.push(format!(
            "{orient}: sets with fewer than min(3,|T|) working choices: {}",
            exceptional.iter().map(|(ts, ok)| format!("{ts:?} (only {ok:?})")).collect::<Vec<_>>().join("; ")
        ));
        // T1: the line parallel to B farthest from it. T2: the line parallel
        // to A farthest from it, plus the middle of B.
        let dist = |x: Vertex, line: &[Vertex]| {
            line.iter().map(|y| x.row.abs_diff(y.row) + x.col.abs_diff(y.col)).min().unwrap_or(0)
        };
        let mut t1: Vec<Vertex> = cells.iter().copied().filter(|&x| dist(x, &b) == 2).collect();
        let mut t2: Vec<Vertex> = cells.iter().copied().filter(|&x| dist(x, &a) == 2).collect();
        t2.push(bm);
        t1.sort();
        t2.sort();
        let mut found: Vec<Vec<Vertex>> = exceptional
            .into_iter()
            .map(|(mut ts, _)| {
                ts.sort();
                ts
            })
            .collect();
        found.sort();
        let mut expected = vec![t1, t2];
        expected.sort();
        if found != expected {
            t.fail(format!("{orient}: exceptional sets {found:?}, expected {expected:?}"));
        }
    }
}

fn boundary(t: &mut Tally, opts: &CertifyOptions) {
    let psis = [[Side::A, Side::A], [Side::A, Side::B], [Side::B, Side::A], [Side::B, Side::B]];
    for orient in orientations(opts) {
        let ch = Checker::new(orient, GridGraph::new(3, 3).expect("3x3 grid"));
        let cells = orient.quadrant.vertices();
        let mut configs = Vec::new();
        let mut coincident = Vec::new();
        for &s1 in &cells {
            for &t1 in &cells {
                for &s2 in &cells {
                    for &s3 in &cells {
                        for psi in psis {
                            if s2 == s3 {
                                coincident.push(([s1, t1, s2, s3], psi));
                            } else {
                                configs.push(([s1, t1, s2, s3], psi));
                            }
                        }
                    }
                }
            }
        }
        let check = |&(s, psi): &([Vertex; 4], [Side; 2])| {
            let plan = boundary_linkage(orient, s, psi, &Restrictions::NONE).map_err(describe)?;
            starts_at(&plan.link, s[0])?;
            ends_in(&plan.link, &[s[1]], "t1")?;
            let mut ends = Vec::new();
            for j in 0..2 {
                starts_at(&plan.mating[j], s[2 + j])?;
                ends.push(ends_in(&plan.mating[j], &ch.line(psi[j]), "its line")?);
            }
            if ends[0] == ends[1] {
                return Err(format!("{s:?}: mates coincide"));
            }
            ch.disjoint(&[&plan.link, &plan.mating[0], &plan.mating[1]]).map(|_| ())
        };
        let results = check_all(&configs, check);
        t.absorb("placements x maps", results);
        let outside = check_all(&coincident, check).iter().filter(|r| r.is_err()).count();
        t.notes.push(format!(
            "{orient}: outside the domain, {outside} of {} placements with s2 = s3 have no plan",
            coincident.len()
        ));
    }
}
