//! Handlers for pairings with a pair inside one quadrant.

use crate::builder::{all_vertices, grid, lemma, rect, Attempt, Builder, End, Goal, Move};
use crate::cases_a::try_each;
use crate::geom::*;
use gridlink_core::{v, Adjustment, EdgeSet, Quadrant, Vertex};
use gridlink_lemmas::{
    boundary_linkage, escape_crowded, escape_designated, exit_mating, route_in_quadrant, CrowdedQuadrant,
    EscapePlan, ExitRequest, LemmaId, Leg, Orientation, Side,
};

use End::{S, T};

fn looped(b: &Builder, q: Quadrant) -> Vec<usize> {
    b.open().into_iter().filter(|&i| q.contains(b.s(i)) && q.contains(b.t(i))).collect()
}

fn row3_ne() -> Vec<Vertex> {
    vec![v(3, 4), v(3, 5), v(3, 6)]
}

fn col3_sw() -> Vec<Vertex> {
    vec![v(4, 3), v(5, 3), v(6, 3)]
}

/// Apply an escape plan from NW.
fn apply_escape(b: &mut Builder, what: &str, lemma_id: LemmaId, loops: &[usize], plan: EscapePlan) -> Attempt<()> {
    let ends = ends_in_quad(b, NW);
    let mut moves: Vec<Move> = plan.linked.into_iter().map(|(k, p)| Move::Connect(loops[k], p)).collect();
    for (x, p) in plan.mating {
        let (i, e) = owner(&ends, x)?;
        moves.push(Move::Extend(i, e, p));
    }
    b.apply(what, Some(lemma_id), moves)
}

/// Exits of NW on the boundary lines, pushed out of the quadrant: down from
/// row 3, right from column 3. The corner `(3,3)` goes either way, or stays
/// when `keep_corner` is set.
fn push_exits(b: &mut Builder, keep_corner: bool) -> Vec<Vec<(usize, End, Vertex)>> {
    let ends = ends_in_quad(b, NW);
    let mut fixed = Vec::new();
    let mut corner = None;
    for &(i, e, x) in &ends {
        if x == v(3, 3) {
            corner = Some((i, e));
        } else if x.row == 3 {
            fixed.push((i, e, down(x)));
        } else if x.col == 3 {
            fixed.push((i, e, right(x)));
        }
    }
    match corner {
        Some((i, e)) if !keep_corner => [v(4, 3), v(3, 4)]
            .into_iter()
            .map(|to| {
                let mut m = fixed.clone();
                m.push((i, e, to));
                m
            })
            .collect(),
        _ => vec![fixed],
    }
}

/// Mate the open ends of NE into distinct vertices of row 3 and those of SW
/// into distinct vertices of column 3, in the quadrants without `A`'s edges.
fn spread_to_a(b: &mut Builder) -> Attempt<()> {
    for (q, orient, line) in [
        (NE, Orientation::horizontal(NE), row3_ne()),
        (SW, Orientation::new(SW, true), col3_sw()),
    ] {
        let ends = ends_in_quad(b, q);
        if ends.len() > 3 {
            return Err(format!("{} open ends in {q}", ends.len()));
        }
        if ends.len() == 3 {
            let ts = [ends[0].2, ends[1].2, ends[2].2];
            if let Ok(paths) = lemma(exit_mating(orient, Adjustment::Q0, &ExitRequest::Distinct(ts), &b.restr())) {
                let listed: Vec<(usize, End)> = ends.iter().map(|&(i, e, _)| (i, e)).collect();
                extend_from(b, &format!("mate three ends into distinct vertices of A in {q}"), Some(LemmaId::BoundaryExit), &listed, paths)?;
                continue;
            }
        }
        let legs: Vec<(usize, End, Leg)> = ends.iter().map(|&(i, e, x)| (i, e, Leg::to(x, line.clone()).distinct())).collect();
        quadrant_legs(b, &format!("mate the ends of {q} into distinct vertices of A"), None, orient, &legs, true, EdgeSet::EMPTY)?;
    }
    Ok(())
}

fn g_star() -> gridlink_core::VertexSet {
    rect(3, 6, 3, 6)
}

/// After an escape from NW: push exits out, spread the NE and SW ends onto
/// their lines and link everything in rows 3-6, columns 3-6.
fn finish_through_g_star(b: &mut Builder) -> Attempt<()> {
    let options = push_exits(b, true);
    try_each(b, &options, |b, moves| {
        step_all(b, "push the exits out of NW", moves)?;
        spread_to_a(b)?;
        let open = b.open();
        b.complete("link the remaining pairs in rows 3-6, columns 3-6", Some(LemmaId::FourRowPairable), g_star(), &open)
    })
}

pub(crate) fn b1(b: &mut Builder) -> Attempt<()> {
    let loops = looped(b, NW);
    let singles: Vec<Vertex> = ends_in_quad(b, NW)
        .into_iter()
        .filter(|(i, _, _)| !loops.contains(i))
        .map(|(_, _, x)| x)
        .collect();
    let cq = CrowdedQuadrant { pairs: loops.iter().map(|&i| b.terminals(i)).collect(), singles };
    let plan = lemma(escape_crowded(Orientation::horizontal(NW), &cq, &b.restr()))?;
    apply_escape(b, "link pairs inside NW and escape the rest", LemmaId::Crowded78, &loops, plan)?;
    let options = push_exits(b, false);
    let outside = all_vertices() - quad(NW);
    try_each(b, &options, |b, moves| {
        step_all(b, "push the exits out of NW", moves)?;
        let open = b.open();
        b.complete("link the remaining pairs outside NW", None, outside, &open)
    })
}

pub(crate) fn b2(b: &mut Builder) -> Attempt<()> {
    let loops = looped(b, NW);
    if loops.len() == 3 {
        let h = rect(1, 4, 1, 4);
        b.complete("link three pairs in rows 1-4, columns 1-4", Some(LemmaId::FourRowPairable), h, &loops)?;
        let rest = b.open();
        return b.complete_avoiding("link the last pair off that square", None, all_vertices(), grid().induced_edges(h), &rest);
    }
    let singles: Vec<Vertex> = ends_in_quad(b, NW)
        .into_iter()
        .filter(|(i, _, _)| !loops.contains(i))
        .map(|(_, _, x)| x)
        .collect();
    let cq = CrowdedQuadrant { pairs: loops.iter().map(|&i| b.terminals(i)).collect(), singles };
    let plan = lemma(escape_crowded(Orientation::horizontal(NW), &cq, &b.restr()))?;
    apply_escape(b, "link a pair inside NW and escape the rest", LemmaId::Crowded6, &loops, plan)?;
    finish_through_g_star(b)
}

const L_SHAPE: [Vertex; 7] = [v(1, 4), v(2, 4), v(3, 4), v(4, 4), v(4, 3), v(4, 2), v(4, 1)];

pub(crate) fn b3(b: &mut Builder) -> Attempt<()> {
    let loops = looped(b, NW);
    if loops.len() >= 2 {
        return b3_two_pairs(b);
    }
    let d = loops[0];
    let others: Vec<(usize, End, Vertex)> = ends_in_quad(b, NW).into_iter().filter(|&(i, _, _)| i != d).collect();
    if others.len() != 3 {
        return Err(format!("{} single terminals in NW", others.len()));
    }
    let plan = lemma(escape_designated(
        Orientation::horizontal(NW),
        b.terminals(d),
        [others[0].2, others[1].2, others[2].2],
        &b.restr(),
    ))?;
    apply_escape(b, "link the designated pair inside NW and escape the rest", LemmaId::Crowded5, &[d], plan)?;
    if ends_in_quad(b, NE).len() <= 2 {
        return finish_through_g_star(b);
    }
    let exits = ends_in_quad(b, NW);
    let on_b = exits.iter().copied().find(|&(_, _, x)| x.col == 3 && x.row < 3);
    let across = on_b.or_else(|| exits.iter().copied().find(|&(_, _, x)| x == v(3, 3))).ok_or("no exit on B")?;
    let mut moves = vec![(across.0, across.1, right(across.2))];
    for &(i, e, x) in &exits {
        if (i, e) != (across.0, across.1) {
            if x.row != 3 {
                return Err("second exit off row 3".into());
            }
            moves.push((i, e, down(x)));
        }
    }
    step_all(b, "push the exits out of NW", &moves)?;
    let q = across.0;
    if !NE.contains(b.t(q)) {
        return Err("the crossing pair does not end in NE".into());
    }
    let rest: Vec<usize> = b.open().into_iter().filter(|&i| i != q && NE.contains(b.t(i))).collect();
    if rest.len() != 2 {
        return Err("expected two more NE terminals".into());
    }
    let plan = lemma(boundary_linkage(
        Orientation::horizontal(NE),
        [b.s(q), b.t(q), b.t(rest[0]), b.t(rest[1])],
        [Side::A, Side::A],
        &b.restr(),
    ))?;
    let [m0, m1] = plan.mating;
    b.apply(
        "link inside NE and mate two terminals into row 3",
        Some(LemmaId::BoundaryLinkage),
        vec![Move::Connect(q, plan.link), Move::Extend(rest[0], T, m0), Move::Extend(rest[1], T, m1)],
    )?;
    step_all(b, "move the mates down to row 4", &[(rest[0], T, down(b.t(rest[0]))), (rest[1], T, down(b.t(rest[1])))])?;
    let open = b.open();
    b.complete("link two pairs in rows 4-6", Some(LemmaId::WeaklyTwoLinked), rows(4, 6), &open)
}

fn b3_two_pairs(b: &mut Builder) -> Attempt<()> {
    let loops = looped(b, NW);
    let (a, c) = (loops[0], loops[1]);
    let (k, ke) = ends_in_quad(b, NW)
        .into_iter()
        .find(|&(i, _, _)| i != a && i != c)
        .map(|(i, e, _)| (i, e))
        .ok_or("no fifth terminal in NW")?;
    let taken: Vec<Vertex> = b.open().into_iter().flat_map(|i| [b.s(i), b.t(i)]).collect();
    let zs: Vec<Vertex> = L_SHAPE.iter().copied().filter(|z| !taken.contains(z)).collect();
    let h = rect(1, 4, 1, 4);
    let outer = rows(5, 6) | rect(1, 6, 5, 6);
    try_each(b, &zs, |b, &z| {
        b.route(
            "link two pairs and bring the fifth terminal to the L in rows 1-4, columns 1-4",
            Some(LemmaId::FourRowPairable),
            h,
            EdgeSet::EMPTY,
            &[Goal::Link(a), Goal::Link(c), Goal::Reach(k, ke, z)],
        )?;
        let on_l = b.ends_in(|x| L_SHAPE.contains(&x));
        let mut fixed = Vec::new();
        let mut corner = None;
        for (i, e, x) in on_l {
            if x == v(4, 4) {
                corner = Some((i, e));
            } else if x.col == 4 {
                fixed.push((i, e, right(x)));
            } else {
                fixed.push((i, e, down(x)));
            }
        }
        let options: Vec<Vec<(usize, End, Vertex)>> = match corner {
            None => vec![fixed],
            Some((i, e)) => [v(4, 5), v(5, 4)]
                .into_iter()
                .map(|to| {
                    let mut m = fixed.clone();
                    m.push((i, e, to));
                    m
                })
                .collect(),
        };
        try_each(b, &options, |b, moves| {
            step_all(b, "push the ends off the L", moves)?;
            let open = b.open();
            b.complete("link the remaining pairs in rows 5-6 and columns 5-6", None, outer, &open)
        })
    })
}

pub(crate) fn b4_1(b: &mut Builder) -> Attempt<()> {
    let nw = Orientation::horizontal(NW);
    let ends = ends_in_quad(b, NW);
    if ends.len() == 3 {
        let (k, ke, x) = *ends.iter().find(|&&(i, _, _)| i != 0).ok_or("no third terminal")?;
        let paths = lemma(exit_mating(nw, Adjustment::Q0, &ExitRequest::LinkAndMate { s1: b.s(0), t1: b.t(0), s2: x }, &b.restr()))?;
        b.apply(
            "link inside NW and mate the third terminal into row 3",
            Some(LemmaId::BoundaryExit),
            vec![Move::Connect(0, paths[0].clone()), Move::Extend(k, ke, paths[1].clone())],
        )?;
    } else {
        let p = lemma(route_in_quadrant(nw, &[Leg::link(b.s(0), b.t(0))], true, &b.restr()))?.ok_or("no link inside NW")?;
        b.connect("link inside NW off row 3", None, 0, p[0].clone())?;
    }
    let legs: Vec<(usize, End, Leg)> =
        ends_in_quad(b, NE).into_iter().map(|(i, e, x)| (i, e, Leg::to(x, row3_ne()).distinct())).collect();
    quadrant_legs(b, "mate the NE terminals to distinct vertices of row 3", None, Orientation::horizontal(NE), &legs, true, EdgeSet::EMPTY)?;
    let open = b.open();
    b.complete("link three pairs in rows 3-6", Some(LemmaId::FourRowPairable), rows(3, 6), &open)
}

fn side_line(q: Quadrant, side: Side) -> Vec<Vertex> {
    gridlink_lemmas::side_vertices(Orientation::horizontal(q), side)
}

/// NW boundary step for pair 0 linked and pairs 1, 2 mated onto `psi`.
fn nw_boundary(b: &mut Builder, psi: [Side; 2]) -> Attempt<()> {
    let plan = lemma(boundary_linkage(Orientation::horizontal(NW), [b.s(0), b.t(0), b.s(1), b.s(2)], psi, &b.restr()))?;
    let [m1, m2] = plan.mating;
    b.apply(
        "link inside NW and mate two terminals onto the boundary lines",
        Some(LemmaId::BoundaryLinkage),
        vec![Move::Connect(0, plan.link), Move::Extend(1, S, m1), Move::Extend(2, S, m2)],
    )
}

/// Push the NW mates of pairs 1, 2 across: `A` mates down, `B` mates right.
fn cross_nw(b: &mut Builder, psi: [Side; 2]) -> Attempt<()> {
    let moves: Vec<(usize, End, Vertex)> = [1, 2]
        .into_iter()
        .zip(psi)
        .map(|(i, s)| (i, S, if s == Side::A { down(b.s(i)) } else { right(b.s(i)) }))
        .collect();
    step_all(b, "push the mates out of NW", &moves)
}

pub(crate) fn b4_2(b: &mut Builder) -> Attempt<()> {
    let loops = looped(b, NW);
    if loops.len() >= 2 {
        b.complete("link two pairs inside NW", Some(LemmaId::WeaklyTwoLinked), quad(NW), &loops[..2])?;
        let rest = b.open();
        return b.complete("link two pairs outside NW", None, all_vertices() - quad(NW), &rest);
    }
    let (s3, t3) = (Quadrant::of(b.s(3)), Quadrant::of(b.t(3)));
    match (s3, t3) {
        (NE, NE) => b4_2_ne(b),
        (SE, SE) => b4_2_se(b),
        _ => b4_2_split(b),
    }
}

fn b4_2_ne(b: &mut Builder) -> Attempt<()> {
    nw_boundary(b, [Side::A, Side::A])?;
    let ne = Orientation::horizontal(NE);
    let ts: Vec<usize> = [1, 2].into_iter().filter(|&i| NE.contains(b.t(i))).collect();
    if ts.len() == 2 {
        let plan = lemma(boundary_linkage(ne, [b.s(3), b.t(3), b.t(1), b.t(2)], [Side::A, Side::A], &b.restr()))?;
        let [m1, m2] = plan.mating;
        b.apply(
            "link inside NE and mate two terminals into row 3",
            Some(LemmaId::BoundaryLinkage),
            vec![Move::Connect(3, plan.link), Move::Extend(1, T, m1), Move::Extend(2, T, m2)],
        )?;
    } else {
        let mut legs = vec![(3, S, Leg::link(b.s(3), b.t(3)))];
        legs.extend(ts.iter().map(|&i| (i, T, Leg::to(b.t(i), row3_ne()).distinct())));
        quadrant_legs(b, "link inside NE and mate into row 3", None, ne, &legs, false, EdgeSet::EMPTY)?;
        b.connect("close the pair", None, 3, gridlink_core::Path::trivial(b.t(3)))?;
    }
    let moves: Vec<(usize, End, Vertex)> = b.ends_in(|x| x.row == 3).into_iter().map(|(i, e, x)| (i, e, down(x))).collect();
    step_all(b, "move the mates down to row 4", &moves)?;
    b.complete("link two pairs in rows 4-6", Some(LemmaId::WeaklyTwoLinked), rows(4, 6), &[1, 2])
}

fn psi_options(b: &Builder) -> Vec<[Side; 2]> {
    let opts = |i: usize| -> Vec<Side> {
        match Quadrant::of(b.t(i)) {
            SW => vec![Side::A],
            NE => vec![Side::B],
            _ => vec![Side::A, Side::B],
        }
    };
    let mut out = Vec::new();
    for a in opts(1) {
        for c in opts(2) {
            out.push([a, c]);
        }
    }
    out
}

fn b4_2_se(b: &mut Builder) -> Attempt<()> {
    let options = psi_options(b);
    try_each(b, &options, |b, &psi| {
        nw_boundary(b, psi)?;
        cross_nw(b, psi)?;
        let mut legs = vec![(3, S, Leg::link(b.s(3), b.t(3)))];
        for (i, side) in [1, 2].into_iter().zip(psi) {
            if SE.contains(b.t(i)) {
                let line = if side == Side::A { side_line(SE, Side::B) } else { side_line(SE, Side::A) };
                legs.push((i, T, Leg::to(b.t(i), line).distinct()));
            }
        }
        quadrant_legs(b, "link inside SE and mate toward the crossing lines", None, Orientation::horizontal(SE), &legs, false, EdgeSet::EMPTY)?;
        b.connect("close the pair", None, 3, gridlink_core::Path::trivial(b.t(3)))?;
        let mut moves = Vec::new();
        for (i, side) in [1, 2].into_iter().zip(psi) {
            if SE.contains(b.t(i)) {
                let x = b.t(i);
                moves.push((i, T, if side == Side::A { left(x) } else { up(x) }));
            }
        }
        step_all(b, "push the SE mates out", &moves)?;
        for q in [SW, NE] {
            let here: Vec<usize> = [1, 2].into_iter().filter(|&i| q.contains(b.s(i)) && q.contains(b.t(i))).collect();
            b.complete(&format!("link inside {q}"), Some(LemmaId::WeaklyTwoLinked), quad(q), &here)?;
        }
        if b.open().is_empty() {
            Ok(())
        } else {
            Err("pairs left across quadrants".into())
        }
    })
}

fn b4_2_split(b: &mut Builder) -> Attempt<()> {
    let mut errors = Vec::new();
    if [1, 2, 3].into_iter().all(|i| SE.contains(b.t(i))) {
        let mut c = b.clone();
        match b4_2_type_i(&mut c) {
            Ok(()) => {
                *b = c;
                return Ok(());
            }
            Err(e) => errors.push(e),
        }
    }
    for a in [1, 2] {
        if NE.contains(b.t(a)) {
            let mut c = b.clone();
            match b4_2_type_ii(&mut c, a) {
                Ok(()) => {
                    *b = c;
                    return Ok(());
                }
                Err(e) => errors.push(e),
            }
        }
    }
    let psis = [[Side::A, Side::A], [Side::A, Side::B], [Side::B, Side::A], [Side::B, Side::B]];
    try_each(b, &psis, |b, &psi| {
        nw_boundary(b, psi)?;
        let moves: Vec<(usize, End, Vertex)> = [1, 2]
            .into_iter()
            .zip(psi)
            .filter(|&(i, _)| b.s(i) != v(3, 3))
            .map(|(i, s)| (i, S, if s == Side::A { down(b.s(i)) } else { right(b.s(i)) }))
            .collect();
        step_all(b, "push the mates out of NW", &moves)?;
        spread_to_a(b)?;
        let open = b.open();
        b.complete("link three pairs in rows 3-6, columns 3-6", Some(LemmaId::FourRowPairable), g_star(), &open)
    })
    .map_err(|e| {
        errors.push(e);
        errors.join("; ")
    })
}

fn b4_2_type_i(b: &mut Builder) -> Attempt<()> {
    nw_boundary(b, [Side::A, Side::A])?;
    cross_nw(b, [Side::A, Side::A])?;
    let legs = [
        (1, T, Leg::to(b.t(1), side_line(SE, Side::B)).distinct()),
        (2, T, Leg::to(b.t(2), side_line(SE, Side::B)).distinct()),
        (3, T, Leg::to(b.t(3), side_line(SE, Side::A))),
    ];
    quadrant_legs(b, "mate the SE terminals toward SW and NE", None, Orientation::horizontal(SE), &legs, false, EdgeSet::EMPTY)?;
    step_all(b, "push the SE mates out", &[(1, T, left(b.t(1))), (2, T, left(b.t(2))), (3, T, up(b.t(3)))])?;
    b.complete("link two pairs inside SW", Some(LemmaId::WeaklyTwoLinked), quad(SW), &[1, 2])?;
    b.complete("link inside NE", None, quad(NE), &[3])
}

fn b4_2_type_ii(b: &mut Builder, a: usize) -> Attempt<()> {
    let o = 3 - a;
    let psi = if a == 1 { [Side::B, Side::A] } else { [Side::A, Side::B] };
    nw_boundary(b, psi)?;
    cross_nw(b, psi)?;
    let paths = lemma(exit_mating(
        Orientation::horizontal(NE),
        Adjustment::Q0,
        &ExitRequest::LinkAndMate { s1: b.s(a), t1: b.t(a), s2: b.s(3) },
        &b.restr(),
    ))?;
    b.apply(
        "link inside NE and mate the split pair into row 3",
        Some(LemmaId::BoundaryExit),
        vec![Move::Connect(a, paths[0].clone()), Move::Extend(3, S, paths[1].clone())],
    )?;
    step_all(b, "move the mate down to row 4", &[(3, S, down(b.s(3)))])?;
    b.complete("link two pairs in rows 4-6", Some(LemmaId::WeaklyTwoLinked), rows(4, 6), &[o, 3])
}
