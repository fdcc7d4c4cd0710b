//! Handlers for pairings without a pair inside one quadrant.

use crate::builder::{all_vertices, grid, lemma, line, polyline, rect, ring_around_33, set_of, Attempt, Builder, End, Move};
use crate::geom::*;
use crate::label::A3Type;
use gridlink_core::{v, Adjustment, Quadrant, Vertex};
use gridlink_lemmas::{
    build_framing, exit_mating, framing_choose_pq, framing_two_plus_one, mate_to_cycles, project_to_a,
    projection_choices, route_in_quadrant, ChoiceTarget, CycleId, ExitRequest, LemmaId, Leg, Orientation,
};

use End::{S, T};

/// Mate each listed end onto its cycle inside its own quadrant, off the
/// 12-cycle's edges.
fn mate_onto(b: &mut Builder, items: &[(usize, End, CycleId)]) -> Attempt<()> {
    for q in Quadrant::ALL {
        let here: Vec<(usize, End, CycleId)> =
            items.iter().copied().filter(|&(i, e, _)| q.contains(b.end(i, e))).collect();
        match here.as_slice() {
            [] => {}
            [(i, e, c), (j, f, d)] => {
                let paths = lemma(mate_to_cycles(q, [b.end(*i, *e), b.end(*j, *f)], [*c, *d], &b.restr()))?;
                extend_from(b, &format!("mate two ends onto the central cycles in {q}"), Some(LemmaId::Framing), &[(*i, *e), (*j, *f)], paths.to_vec())?;
            }
            _ => {
                let legs: Vec<(usize, End, Leg)> =
                    here.iter().map(|&(i, e, c)| (i, e, Leg::to(b.end(i, e), cycle_in(c, q)))).collect();
                quadrant_legs(b, &format!("mate onto the central cycles in {q}"), None, Orientation::horizontal(q), &legs, false, c1_edges())?;
            }
        }
    }
    Ok(())
}

pub(crate) fn a1(b: &mut Builder) -> Attempt<()> {
    let q = Quadrant::of(b.s(2));
    let f0 = lemma(build_framing(NW, [b.s(0), b.s(1)], CycleId::C0, &b.restr()))?;
    extend_from(b, "frame two pairs at the C0 apex of NW", Some(LemmaId::Framing), &[(0, S), (1, S)], f0.feeders.to_vec())?;
    let f1 = lemma(build_framing(q, [b.s(2), b.s(3)], CycleId::C1, &b.restr()))?;
    extend_from(b, &format!("frame two pairs at the C1 apex of {q}"), Some(LemmaId::Framing), &[(2, S), (3, S)], f1.feeders.to_vec())?;
    mate_onto(b, &[(0, T, CycleId::C0), (1, T, CycleId::C0), (2, T, CycleId::C1), (3, T, CycleId::C1)])?;
    b.connect_on_cycle("close two pairs along C0", None, cycle_vertices(CycleId::C0), &[0, 1])?;
    b.connect_on_cycle("close two pairs along C1", None, cycle_vertices(CycleId::C1), &[2, 3])
}

pub(crate) fn a2(b: &mut Builder) -> Attempt<()> {
    let fp = lemma(framing_two_plus_one(NW, [b.s(0), b.s(1), b.s(2)], &b.restr()))?;
    let alpha = fp.frame.cycle;
    let beta = alpha.other();
    let [f0, f1] = fp.frame.feeders;
    b.apply(
        format!("frame two pairs on {alpha} in NW, third terminal onto {beta}"),
        Some(LemmaId::FramingPlusOne),
        vec![Move::Extend(0, S, f0), Move::Extend(1, S, f1), Move::Extend(2, S, fp.third)],
    )?;
    let q = Quadrant::of(b.t(2));
    let fq = lemma(build_framing(q, [b.t(2), b.s(3)], beta, &b.restr()))?;
    extend_from(b, &format!("frame two ends at the {beta} apex of {q}"), Some(LemmaId::Framing), &[(2, T), (3, S)], fq.feeders.to_vec())?;
    mate_onto(b, &[(0, T, alpha), (1, T, alpha), (3, T, beta)])?;
    b.connect_on_cycle(&format!("close two pairs along {alpha}"), None, cycle_vertices(alpha), &[0, 1])?;
    b.connect_on_cycle(&format!("close two pairs along {beta}"), None, cycle_vertices(beta), &[2, 3])
}

pub(crate) fn a3(ty: A3Type, b: &mut Builder) -> Attempt<()> {
    match ty {
        A3Type::I => a3_i(b),
        A3Type::II => a3_ii(b),
        A3Type::III => a3_iii(b),
        A3Type::IV | A3Type::V => a3_iv(b),
        A3Type::VI => a3_vi(b),
        A3Type::VII => a3_vii(b),
    }
}

fn a3_i(b: &mut Builder) -> Attempt<()> {
    let moves: Vec<(usize, End, Vertex)> =
        [S, T].into_iter().filter(|&e| b.end(3, e).row == 4).map(|e| (3, e, down(b.end(3, e)))).collect();
    step_all(b, "move the bottom pair's ends off row 4", &moves)?;
    b.complete("link three pairs in rows 1-4", Some(LemmaId::FourRowPairable), rows(1, 4), &[0, 1, 2])?;
    b.complete("link the last pair in rows 5-6", None, rows(5, 6), &[3])
}

/// Three terminals of a quadrant mated to distinct vertices of its line `A`
/// in the quadrant without `A`'s edges.
fn exit_distinct(b: &mut Builder, orient: Orientation, ends: [(usize, End); 3]) -> Attempt<()> {
    let ts = ends.map(|(i, e)| b.end(i, e));
    let paths = lemma(exit_mating(orient, Adjustment::Q0, &ExitRequest::Distinct(ts), &b.restr()))?;
    extend_from(b, &format!("mate three terminals into distinct vertices of A in {}", orient.quadrant), Some(LemmaId::BoundaryExit), &ends, paths)
}

fn a3_ii(b: &mut Builder) -> Attempt<()> {
    exit_distinct(b, Orientation::horizontal(NW), [(0, S), (1, S), (2, S)])?;
    exit_distinct(b, Orientation::horizontal(NE), [(0, T), (1, T), (3, T)])?;
    step_all(b, "move two mates down to row 4", &[(2, S, down(b.s(2))), (3, T, down(b.t(3)))])?;
    try_each(b, &[(0, 1), (1, 0)], |b, &(a, c)| {
        b.connect("link along row 3", None, a, line(b.s(a), b.t(a)))?;
        let p = polyline(&[b.s(c), down(b.s(c)), down(b.t(c)), b.t(c)]);
        b.connect("link through row 4", None, c, p)?;
        b.complete("link inside SW", None, quad(SW), &[2])?;
        b.complete("link inside SE", None, quad(SE), &[3])
    })
}

fn a3_iii(b: &mut Builder) -> Attempt<()> {
    exit_distinct(b, Orientation::horizontal(NW), [(0, S), (1, S), (2, S)])?;
    exit_distinct(b, Orientation::horizontal(SE), [(0, T), (1, T), (3, T)])?;
    step_all(b, "move two mates across the middle line", &[(2, S, down(b.s(2))), (3, T, up(b.t(3)))])?;
    try_each(b, &[(0, 1), (1, 0)], |b, &(a, c)| {
        let pa = polyline(&[b.s(a), v(3, b.t(a).col), b.t(a)]);
        b.connect("link along row 3", None, a, pa)?;
        let pc = polyline(&[b.s(c), v(4, b.s(c).col), b.t(c)]);
        b.connect("link along row 4", None, c, pc)?;
        b.complete("link inside SW", None, quad(SW), &[2])?;
        b.complete("link inside NE", None, quad(NE), &[3])
    })
}

/// Apply the projection step: `chosen` goes to the middle of `B`, the other
/// listed ends into `A`.
pub(crate) fn project(b: &mut Builder, orient: Orientation, ends: &[(usize, End)], chosen: (usize, End)) -> Attempt<()> {
    let ts: Vec<Vertex> = ends.iter().map(|&(i, e)| b.end(i, e)).collect();
    let pr = lemma(project_to_a(orient, &ts, b.end(chosen.0, chosen.1), &b.restr()))?;
    let listed: Vec<(usize, End, Vertex)> = ends.iter().map(|&(i, e)| (i, e, b.end(i, e))).collect();
    let mut moves = vec![Move::Extend(chosen.0, chosen.1, pr.link)];
    for (x, p) in pr.mating {
        let (i, e) = owner(&listed, x)?;
        moves.push(Move::Extend(i, e, p));
    }
    b.apply(format!("project one terminal onto B and the rest into A in {}", orient.quadrant), Some(LemmaId::Projection), moves)
}

pub(crate) fn choices(b: &Builder, orient: Orientation, ends: &[(usize, End)]) -> Attempt<Vec<Vertex>> {
    let ts: Vec<Vertex> = ends.iter().map(|&(i, e)| b.end(i, e)).collect();
    lemma(projection_choices(orient, &ts, &b.restr()))
}

/// Run `f` on a copy of the builder for each option; keep the first success.
pub(crate) fn try_each<O>(b: &mut Builder, options: &[O], f: impl Fn(&mut Builder, &O) -> Attempt<()>) -> Attempt<()> {
    let mut last = String::from("no options");
    for o in options {
        let mut c = b.clone();
        match f(&mut c, o) {
            Ok(()) => {
                *b = c;
                return Ok(());
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn a3_iv(b: &mut Builder) -> Attempt<()> {
    let nw = Orientation::horizontal(NW);
    let ne = Orientation::horizontal(NE);
    let en = [(0, S), (1, S), (2, S)];
    let ee = [(0, T), (1, T), (3, T)];
    let cn = choices(b, nw, &en)?;
    let ce = choices(b, ne, &ee)?;
    let ls: Vec<usize> = [0, 1].into_iter().filter(|&l| cn.contains(&b.s(l)) && ce.contains(&b.t(l))).collect();
    let main = try_each(b, &ls, |b, &l| {
        project(b, nw, &en, (l, S))?;
        project(b, ne, &ee, (l, T))?;
        b.connect("link across the middle of row 2", None, l, line(v(2, 3), v(2, 4)))?;
        let m = 1 - l;
        b.connect("link along row 3", None, m, line(b.s(m), b.t(m)))?;
        step_all(b, "move two mates down to row 4", &[(2, S, down(b.s(2))), (3, T, down(b.t(3)))])?;
        b.complete("link two pairs in rows 4-6", Some(LemmaId::WeaklyTwoLinked), rows(4, 6), &[2, 3])
    });
    if main.is_ok() {
        return main;
    }
    let column_nw = en.iter().all(|&(i, e)| b.end(i, e).col == 1);
    let column_ne = ee.iter().all(|&(i, e)| b.end(i, e).col == 6);
    if !(column_nw && column_ne) {
        return main;
    }
    step_all(
        b,
        "shift the outer columns inward",
        &[
            (0, S, right(b.s(0))),
            (1, S, right(b.s(1))),
            (0, T, left(b.t(0))),
            (1, T, left(b.t(1))),
        ],
    )?;
    b.push_end("move a terminal down column 1", 2, S, v(4, 1))?;
    b.push_end("move a terminal down column 6", 3, T, v(4, 6))?;
    b.complete("link two pairs in rows 1-3, columns 2-5", Some(LemmaId::WeaklyTwoLinked), rect(1, 3, 2, 5), &[0, 1])?;
    b.complete("link two pairs in rows 4-6", Some(LemmaId::WeaklyTwoLinked), rows(4, 6), &[2, 3])
}

fn a3_vi(b: &mut Builder) -> Attempt<()> {
    let nw = Orientation::new(NW, true);
    let se = Orientation::horizontal(SE);
    let en = [(0, S), (1, S), (2, S)];
    let es = [(0, T), (1, T), (3, T)];
    let cn = choices(b, nw, &en)?;
    let cs = choices(b, se, &es)?;
    let ls: Vec<usize> = [0, 1].into_iter().filter(|&l| cn.contains(&b.s(l)) && cs.contains(&b.t(l))).collect();
    let main = try_each(b, &ls, |b, &l| {
        project(b, nw, &en, (l, S))?;
        project(b, se, &es, (l, T))?;
        let m = 1 - l;
        b.connect("link down column 3 and along row 4", None, m, polyline(&[b.s(m), v(4, 3), b.t(m)]))?;
        let region = quad(SW) | set_of(&[v(3, 2), v(5, 4)]);
        let p = b.path_in(region, b.s(l), b.t(l)).ok_or("no path through SW")?;
        b.connect("link through SW", None, l, p)?;
        step_all(b, "move two mates into NE", &[(2, S, right(b.s(2))), (3, T, up(b.t(3)))])?;
        b.complete("link two pairs inside NE", Some(LemmaId::WeaklyTwoLinked), quad(NE), &[2, 3])
    });
    if main.is_ok() {
        return main;
    }
    let row_nw = en.iter().all(|&(i, e)| b.end(i, e).row == 1);
    let column_se = es.iter().all(|&(i, e)| b.end(i, e).col == 6);
    if !(row_nw && column_se) {
        return main;
    }
    b.push_end("run along row 1 into NE", 2, S, v(1, 4))?;
    b.push_end("run up column 6 into NE", 3, T, v(3, 6))?;
    for i in [0, 1] {
        let p = polyline(&[b.s(i), v(b.t(i).row, b.s(i).col), b.t(i)]);
        b.connect("link down a column and along a row", None, i, p)?;
    }
    b.complete("link two pairs inside NE", Some(LemmaId::WeaklyTwoLinked), quad(NE), &[2, 3])
}

fn a3_vii(b: &mut Builder) -> Attempt<()> {
    let r = b.restr_plus(c1_edges());
    let cf = lemma(framing_choose_pq(NW, [b.s(0), b.s(1), b.s(2)], ChoiceTarget::TwelveCycle(v(1, 3)), &r))?;
    let (p, q) = cf.chosen;
    let c = 3 - p - q;
    let [fp, fq] = cf.frame.feeders;
    b.apply(
        "frame two pairs on C1 in NW, third terminal to the corner (1,3)",
        Some(LemmaId::FramingChoice),
        vec![Move::Extend(p, S, fp), Move::Extend(q, S, fq), Move::Extend(c, S, cf.third)],
    )?;
    b.push_end("step into NE along row 1", c, S, v(1, 4))?;
    let fs = lemma(framing_two_plus_one(SE, [b.t(p), b.t(q), b.t(c)], &b.restr()))?;
    let alpha = fs.frame.cycle;
    let [gp, gq] = fs.frame.feeders;
    b.apply(
        format!("frame two pairs on {alpha} in SE, third terminal onto {}", alpha.other()),
        Some(LemmaId::FramingPlusOne),
        vec![Move::Extend(p, T, gp), Move::Extend(q, T, gq), Move::Extend(c, T, fs.third)],
    )?;
    if alpha == CycleId::C1 {
        b.connect_on_cycle("close two pairs along C1", None, cycle_vertices(CycleId::C1), &[p, q])?;
        let f = lemma(build_framing(NE, [b.s(c), b.s(3)], CycleId::C0, &b.restr()))?;
        extend_from(b, "frame two ends at the C0 apex of NE", Some(LemmaId::Framing), &[(c, S), (3, S)], f.feeders.to_vec())?;
        mate_onto(b, &[(3, T, CycleId::C0)])?;
        b.connect_on_cycle("close two pairs along C0", None, cycle_vertices(CycleId::C0), &[c, 3])
    } else {
        b.connect_on_cycle("close two pairs along the 8-cycle around (3,3)", None, &ring_around_33(), &[p, q])?;
        let region = rows(1, 1) | rect(1, 6, 5, 5) | set_of(&cycle_in(CycleId::C1, SE));
        let pc = b.path_in(region, b.s(c), b.t(c)).ok_or("no path along row 1 and column 5")?;
        b.connect("link along row 1 and column 5", None, c, pc)?;
        let p3 = b.path_in(all_vertices(), b.s(3), b.t(3)).ok_or("no residual path")?;
        b.connect("link the last pair in the residual graph", None, 3, p3)
    }
}

fn count_t(b: &Builder, q: Quadrant) -> Vec<usize> {
    (0..4).filter(|&i| q.contains(b.t(i))).collect()
}

pub(crate) fn a4_1(b: &mut Builder) -> Attempt<()> {
    let on_ne = count_t(b, NE).len() >= 3;
    let (qq, qo) = if on_ne { (NE, Orientation::horizontal(NE)) } else { (SE, Orientation::new(SE, true)) };
    let nw = Orientation::horizontal(NW);
    let en: Vec<(usize, End)> = (0..4).map(|i| (i, S)).collect();
    let eq: Vec<(usize, End)> = count_t(b, qq).into_iter().map(|i| (i, T)).collect();
    let cn = choices(b, nw, &en)?;
    let cq = choices(b, qo, &eq)?;
    let ls: Vec<usize> = eq.iter().map(|&(i, _)| i).filter(|&l| cn.contains(&b.s(l)) && cq.contains(&b.t(l))).collect();
    try_each(b, &ls, |b, &l| {
        project(b, nw, &en, (l, S))?;
        project(b, qo, &eq, (l, T))?;
        if on_ne {
            b.connect("link across the middle of row 2", None, l, line(v(2, 3), v(2, 4)))?;
        } else {
            let direct = polyline(&[v(2, 3), v(2, 5), v(4, 5)]);
            let p = if b.clone().connect("", None, l, direct.clone()).is_ok() {
                direct
            } else {
                b.path_in(quad(NE) | set_of(&[v(2, 3), v(4, 5)]), v(2, 3), v(4, 5)).ok_or("no path through NE")?
            };
            b.connect("link through NE", None, l, p)?;
        }
        let others: Vec<usize> = (0..4).filter(|&i| i != l).collect();
        let in_q: Vec<usize> = others.iter().copied().filter(|&i| qq.contains(b.t(i))).collect();
        let js: Vec<usize> = in_q
            .iter()
            .copied()
            .filter(|&j| {
                let ns: Vec<Vertex> = others.iter().filter(|&&i| i != j).map(|&i| b.s(i)).collect();
                let ts: Vec<Vertex> = in_q.iter().filter(|&&i| i != j).map(|&i| b.t(i)).collect();
                all_distinct(&ns) && all_distinct(&ts)
            })
            .collect();
        try_each(b, &js, |b, &j| {
            if on_ne {
                b.connect("link along row 3", None, j, line(b.s(j), b.t(j)))?;
            } else {
                b.connect("link along row 3 and down column 4", None, j, polyline(&[b.s(j), v(3, 4), b.t(j)]))?;
            }
            let mut moves: Vec<(usize, End, Vertex)> = Vec::new();
            for &i in others.iter().filter(|&&i| i != j) {
                moves.push((i, S, down(b.s(i))));
                if in_q.contains(&i) {
                    moves.push((i, T, if on_ne { down(b.t(i)) } else { left(b.t(i)) }));
                }
            }
            step_all(b, "move the remaining mates out of the top rows", &moves)?;
            let region = if on_ne { rows(4, 6) } else { quad(SW) };
            let rest: Vec<usize> = others.iter().copied().filter(|&i| i != j).collect();
            let inside = rest.iter().all(|&i| {
                let g = grid();
                region.contains(g.index(b.s(i))) && region.contains(g.index(b.t(i)))
            });
            if inside {
                b.complete("link the remaining pairs", Some(LemmaId::WeaklyTwoLinked), region, &rest)
            } else {
                b.complete("link the remaining pairs in the residual graph", None, all_vertices(), &rest)
            }
        })
    })
}

/// Pairs whose NW mates share a vertex, if any.
fn sharers(b: &Builder, pairs: &[usize]) -> Option<Vec<usize>> {
    for &i in pairs {
        let same: Vec<usize> = pairs.iter().copied().filter(|&j| b.s(j) == b.s(i)).collect();
        if same.len() > 1 {
            return Some(same);
        }
    }
    None
}

pub(crate) fn a4_2(b: &mut Builder) -> Attempt<()> {
    let nw = Orientation::horizontal(NW);
    let en: Vec<(usize, End)> = (0..4).map(|i| (i, S)).collect();
    let cn = choices(b, nw, &en)?;
    let mut ls: Vec<usize> = (0..4).filter(|&l| cn.contains(&b.s(l)) && NE.contains(b.t(l))).collect();
    ls.extend((0..4).filter(|&l| cn.contains(&b.s(l)) && SE.contains(b.t(l))));
    try_each(b, &ls, |b, &l| {
        project(b, nw, &en, (l, S))?;
        let others: Vec<usize> = (0..4).filter(|&i| i != l).collect();
        if NE.contains(b.t(l)) {
            let blocked = grid().induced_edges(rows(3, 6));
            let p = b.path_avoiding(all_vertices(), blocked, b.s(l), b.t(l)).ok_or("no path above row 3")?;
            b.connect("link above row 3", None, l, p)?;
            match sharers(b, &others) {
                None => b.complete("link three pairs in rows 3-6", Some(LemmaId::FourRowPairable), rows(3, 6), &others),
                Some(sh) => {
                    let cands: Vec<usize> = sh.iter().copied().filter(|&i| SE.contains(b.t(i))).collect();
                    try_each(b, &cands, |b, &i| {
                        let top = v(3, b.t(i).col);
                        b.push_end("run up a column to row 3", i, T, top)?;
                        b.connect("link along row 3", None, i, line(b.s(i), top))?;
                        let rest: Vec<usize> = others.iter().copied().filter(|&j| j != i).collect();
                        let mut moves = Vec::new();
                        for &j in &rest {
                            moves.push((j, S, down(b.s(j))));
                        }
                        step_all(b, "move the remaining mates down", &moves)?;
                        for &j in &rest {
                            if SE.contains(b.t(j)) {
                                b.push_end("run along a row into SW", j, T, v(b.t(j).row, 3))?;
                            }
                        }
                        b.complete("link two pairs inside SW", Some(LemmaId::WeaklyTwoLinked), quad(SW), &rest)
                    })
                }
            }
        } else {
            a4_2_se(b, l, &others)
        }
    })
}

fn a4_2_se(b: &mut Builder, l: usize, others: &[usize]) -> Attempt<()> {
    let n = *others.iter().find(|&&i| NE.contains(b.t(i))).ok_or("no NE terminal")?;
    let u = *others.iter().find(|&&i| SE.contains(b.t(i))).ok_or("no second SE terminal")?;
    let xy = lemma(route_in_quadrant(
        Orientation::horizontal(NE),
        &[Leg::link(v(2, 4), v(3, 5)), Leg::link(b.t(n), v(3, 4))],
        true,
        &b.restr(),
    ))?
    .ok_or("no auxiliary routing in NE")?;
    let (x, y) = (xy[0].clone(), xy[1].clone());
    let se = Orientation::horizontal(SE);
    let options: [(Vec<Vertex>, Option<Vertex>); 2] = [(vec![v(4, 6)], None), (vec![v(6, 4)], Some(v(6, 3)))];
    try_each(b, &options, |b, (target, then)| {
        let legs = [(l, T, Leg::link(b.t(l), v(4, 5))), (u, T, Leg::to(b.t(u), target.clone()))];
        quadrant_legs(b, "send two SE terminals to the auxiliary vertices", None, se, &legs, false, gridlink_core::EdgeSet::EMPTY)?;
        if let Some(w) = then {
            b.push_end("step into SW", u, T, *w)?;
        }
        let head = line(v(2, 3), v(2, 4)).join(&x).ok_or("bad join")?;
        let pl = head.join(&line(v(3, 5), v(4, 5))).ok_or("bad join")?;
        b.apply("link through the auxiliary vertices", None, vec![Move::Connect(l, pl), Move::Extend(n, T, y.clone())])?;
        let is: Vec<usize> = match sharers(b, others) {
            Some(sh) => sh,
            None => vec![n, u],
        };
        try_each(b, &is, |b, &i| {
            if i == n {
                b.connect("link along row 3", None, n, line(b.s(n), v(3, 4)))?;
            } else if i == u && b.t(u) == v(4, 6) {
                b.connect("link along row 3 and down", None, u, polyline(&[b.s(u), v(3, 6), v(4, 6)]))?;
                b.extend("continue into SW", None, n, T, polyline(&[v(3, 4), v(4, 4), v(4, 3)]))?;
            } else {
                return Err("no row-3 route for this pair".into());
            }
            let rest: Vec<usize> = others.iter().copied().filter(|&j| j != i).collect();
            let moves: Vec<(usize, End, Vertex)> = rest.iter().map(|&j| (j, S, down(b.s(j)))).collect();
            step_all(b, "move the remaining mates down", &moves)?;
            b.complete("link the remaining pairs in rows 4-6", Some(LemmaId::WeaklyTwoLinked), rows(4, 6), &rest)
        })
    })
}

pub(crate) fn a4_3(b: &mut Builder) -> Attempt<()> {
    let generic = a4_3_generic(b);
    if generic.is_ok() {
        return generic;
    }
    let ks: Vec<usize> = (0..4).filter(|&k| b.s(k).row == 1 && NE.contains(b.t(k))).collect();
    try_each(b, &ks, |b, &k| {
        b.push_end("run along row 1 into NE", k, S, v(1, 4))?;
        let ne = Orientation::horizontal(NE);
        let mut legs = vec![(k, S, Leg::link(b.s(k), b.t(k)))];
        for i in count_t(b, NE).into_iter().filter(|&i| i != k) {
            legs.push((i, T, Leg::to(b.t(i), vec![v(3, 4), v(3, 5), v(3, 6)]).distinct()));
        }
        quadrant_legs(b, "link inside NE and mate the other terminal into row 3", None, ne, &legs, true, gridlink_core::EdgeSet::EMPTY)?;
        b.connect("close the pair", None, k, gridlink_core::Path::trivial(b.s(k)))?;
        let others: Vec<usize> = (0..4).filter(|&i| i != k).collect();
        let legs: Vec<(usize, End, Leg)> =
            others.iter().map(|&i| (i, S, Leg::to(b.s(i), vec![v(3, 1), v(3, 2), v(3, 3)]).distinct())).collect();
        quadrant_legs(b, "mate three terminals to distinct vertices of row 3", None, Orientation::horizontal(NW), &legs, true, gridlink_core::EdgeSet::EMPTY)?;
        b.complete("link three pairs in rows 3-6", Some(LemmaId::FourRowPairable), rows(3, 6), &others)
    })
    .map_err(|e| format!("{}; {e}", generic.unwrap_err()))
}

fn a4_3_generic(b: &mut Builder) -> Attempt<()> {
    let nw = Orientation::horizontal(NW);
    let en: Vec<(usize, End)> = (0..4).map(|i| (i, S)).collect();
    let cn = choices(b, nw, &en)?;
    let ls: Vec<usize> = (0..4).filter(|&l| cn.contains(&b.s(l)) && NE.contains(b.t(l))).collect();
    try_each(b, &ls, |b, &l| {
        project(b, nw, &en, (l, S))?;
        b.push_end("cross into NE along row 2", l, S, v(2, 4))?;
        let k = *count_t(b, NE).iter().find(|&&i| i != l).ok_or("one NE terminal only")?;
        let paths = lemma(exit_mating(
            Orientation::horizontal(NE),
            Adjustment::Q0,
            &ExitRequest::LinkAndMate { s1: b.s(l), t1: b.t(l), s2: b.t(k) },
            &b.restr(),
        ))?;
        b.apply(
            "link inside NE and mate the other terminal into A",
            Some(LemmaId::BoundaryExit),
            vec![Move::Connect(l, paths[0].clone()), Move::Extend(k, T, paths[1].clone())],
        )?;
        let others: Vec<usize> = (0..4).filter(|&i| i != l).collect();
        match sharers(b, &others) {
            None => b.complete("link three pairs in rows 3-6", Some(LemmaId::FourRowPairable), rows(3, 6), &others),
            Some(sh) => {
                let cands: Vec<usize> = sh.iter().copied().filter(|&j| !SW.contains(b.t(j))).collect();
                try_each(b, &cands, |b, &j| {
                    let top = v(3, b.t(j).col);
                    if SE.contains(b.t(j)) {
                        b.push_end("run up a column to row 3", j, T, top)?;
                    }
                    b.connect("link along row 3", None, j, line(b.s(j), top))?;
                    let rest: Vec<usize> = others.iter().copied().filter(|&i| i != j).collect();
                    let mut moves = Vec::new();
                    for &i in &rest {
                        moves.push((i, S, down(b.s(i))));
                        if b.t(i).row == 3 {
                            moves.push((i, T, down(b.t(i))));
                        }
                    }
                    step_all(b, "move the remaining mates down", &moves)?;
                    b.complete("link two pairs in rows 4-6", Some(LemmaId::WeaklyTwoLinked), rows(4, 6), &rest)
                })
            }
        }
    })
}
