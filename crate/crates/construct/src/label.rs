//! Case labels read off the quadrant diagram.

use crate::normalize::{variants, Variant};
use gridlink_core::{Pairing, QDiagram, Quadrant, Symmetry, Vertex};
use serde::{Deserialize, Serialize};
use std::fmt;

use Quadrant::{NE, NW, SE, SW};

/// Subtypes of the case with two quadrants of three terminals each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum A3Type {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    A1,
    A2,
    A3(A3Type),
    A4_1,
    A4_2,
    A4_3,
    B1,
    B2,
    B3,
    B4_1,
    B4_2,
}

impl Case {
    pub const ALL: [Case; 17] = [
        Case::A1,
        Case::A2,
        Case::A3(A3Type::I),
        Case::A3(A3Type::II),
        Case::A3(A3Type::III),
        Case::A3(A3Type::IV),
        Case::A3(A3Type::V),
        Case::A3(A3Type::VI),
        Case::A3(A3Type::VII),
        Case::A4_1,
        Case::A4_2,
        Case::A4_3,
        Case::B1,
        Case::B2,
        Case::B3,
        Case::B4_1,
        Case::B4_2,
    ];

    pub fn name(self) -> String {
        match self {
            Case::A3(t) => format!("A3({t:?})"),
            other => format!("{other:?}"),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A case together with the symmetry that puts the instance into the
/// case's normal position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseLabel {
    pub case: Case,
    pub symmetry: Symmetry,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} via {}", self.case, self.symmetry)
    }
}

fn adjacent(a: Quadrant, b: Quadrant) -> bool {
    a != b && (a.index() ^ b.index()) != 3
}

fn opposite(q: Quadrant) -> Quadrant {
    Quadrant::ALL[q.index() ^ 3]
}

/// The case of a 4-pair pairing of the 6×6 grid. Depends only on the
/// quadrant diagram, so it is invariant under the grid's symmetries.
pub fn case_of(p: &Pairing) -> Case {
    let d = QDiagram::build(p);
    let deg = d.degrees();
    if !d.is_loopless() {
        let nw = Quadrant::ALL
            .into_iter()
            .filter(|&q| d.loops(q) > 0)
            .max_by_key(|&q| (deg[q.index()], std::cmp::Reverse(q.index())))
            .expect("some loop");
        return match deg[nw.index()] {
            7 | 8 => Case::B1,
            6 => Case::B2,
            5 => Case::B3,
            4 => Case::B4_2,
            _ => Case::B4_1,
        };
    }
    match d.max_degree() {
        0..=2 => Case::A1,
        3 => {
            let heavy: Vec<Quadrant> = Quadrant::ALL.into_iter().filter(|&q| deg[q.index()] == 3).collect();
            if heavy.len() == 1 {
                return Case::A2;
            }
            let (p, q) = (heavy[0], heavy[1]);
            let m = d.multiplicity(p, q);
            let beside = adjacent(p, q);
            if m == 3 {
                return Case::A3(if beside { A3Type::I } else { A3Type::VII });
            }
            let other = |a: Quadrant, b: Quadrant| {
                d.edges()
                    .iter()
                    .find_map(|&(x, y)| match (x == a, y == a) {
                        (true, false) if y != b => Some(y),
                        (false, true) if x != b => Some(x),
                        _ => None,
                    })
                    .expect("degree three with multiplicity two")
            };
            let (x, y) = (other(p, q), other(q, p));
            Case::A3(match (beside, x == y) {
                (true, true) => A3Type::IV,
                (true, false) if adjacent(x, p) => A3Type::II,
                (true, false) => A3Type::V,
                (false, true) => A3Type::VI,
                (false, false) => A3Type::III,
            })
        }
        _ => {
            let heavy = Quadrant::ALL.into_iter().find(|&q| deg[q.index()] == 4).expect("degree four");
            let rest: Vec<Quadrant> = Quadrant::ALL.into_iter().filter(|&q| q != heavy).collect();
            if rest.iter().any(|&q| deg[q.index()] >= 3) {
                Case::A4_1
            } else if rest.iter().all(|&q| deg[q.index()] == if q == opposite(heavy) { 2 } else { 1 }) {
                Case::A4_2
            } else {
                Case::A4_3
            }
        }
    }
}

fn q(x: Vertex) -> Quadrant {
    Quadrant::of(x)
}

fn count(pairs: &[(Vertex, Vertex)], quad: Quadrant) -> usize {
    pairs.iter().map(|&(s, t)| (q(s) == quad) as usize + (q(t) == quad) as usize).sum()
}

fn inside(pair: (Vertex, Vertex), quad: Quadrant) -> bool {
    q(pair.0) == quad && q(pair.1) == quad
}

/// Whether a normalized pairing is in the normal position the handler of
/// `case` expects.
pub fn fits(case: Case, pairs: &[(Vertex, Vertex)]) -> bool {
    let s = |i: usize| q(pairs[i].0);
    let t = |i: usize| q(pairs[i].1);
    let n = |quad| count(pairs, quad);
    let looped = |quad| pairs.iter().any(|&pr| inside(pr, quad));
    match case {
        Case::A1 => s(0) == NW && s(1) == NW && s(2) == s(3) && s(2) != NW,
        Case::A2 => {
            s(0) == NW && s(1) == NW && s(2) == NW && t(2) == s(3) && matches!(t(2), NE | SE) && n(t(2)) == 2
        }
        Case::A3(ty) => {
            if !(s(0) == NW && s(1) == NW && s(2) == NW) {
                return false;
            }
            match ty {
                A3Type::I => t(0) == NE && t(1) == NE && t(2) == NE,
                A3Type::II => t(0) == NE && t(1) == NE && t(3) == NE && t(2) == SW && s(3) == SE,
                A3Type::III => t(0) == SE && t(1) == SE && t(3) == SE && t(2) == SW && s(3) == NE,
                A3Type::IV | A3Type::V => {
                    t(0) == NE && t(1) == NE && t(3) == NE && matches!(t(2), SW | SE) && matches!(s(3), SW | SE)
                }
                A3Type::VI => t(0) == SE && t(1) == SE && t(3) == SE && t(2) == NE && s(3) == NE,
                A3Type::VII => t(0) == SE && t(1) == SE && t(2) == SE && s(3) == NE && t(3) == SW,
            }
        }
        Case::A4_1 | Case::A4_2 | Case::A4_3 => (0..4).all(|i| s(i) == NW) && n(NE) >= n(SW),
        Case::B1 | Case::B2 | Case::B3 | Case::B4_1 | Case::B4_2 => {
            if !looped(NW) || Quadrant::ALL.into_iter().any(|quad| looped(quad) && n(quad) > n(NW)) {
                return false;
            }
            b_fits(case, pairs)
        }
    }
}

fn b_fits(case: Case, pairs: &[(Vertex, Vertex)]) -> bool {
    let s = |i: usize| q(pairs[i].0);
    let t = |i: usize| q(pairs[i].1);
    let loop_at = |i: usize| inside(pairs[i], NW);
    let n = |quad| count(pairs, quad);
    match case {
        Case::B1 => loop_at(0),
        Case::B2 => {
            (loop_at(0) && loop_at(1) && loop_at(2))
                || (loop_at(0) && loop_at(1) && s(2) == NW && s(3) == NW && n(NE) >= n(SW))
        }
        Case::B3 => {
            (loop_at(0) && loop_at(1) && s(2) == NW)
                || (loop_at(0) && !loop_at(1) && (1..4).all(|i| s(i) == NW) && n(NE) >= n(SW))
        }
        Case::B4_1 => loop_at(0) && (n(NW) != 3 || s(1) == NW) && n(NE) <= 3,
        Case::B4_2 => {
            let base = (loop_at(0) && loop_at(1)) || (loop_at(0) && s(1) == NW && s(2) == NW);
            if !base {
                return false;
            }
            if loop_at(1) {
                return true;
            }
            if s(3) == t(3) {
                matches!(s(3), NE | SE)
            } else {
                s(3) == NE
            }
        }
        _ => false,
    }
}

/// The case and the first symmetry under which some relabelling of the
/// pairs fits the case's normal position.
pub fn classify(p: &Pairing) -> CaseLabel {
    let case = case_of(p);
    let symmetry = variants(p)
        .find(|(_, np)| fits(case, np.pairs()))
        .map(|(var, _)| var.sym)
        .unwrap_or_else(|| {
            log::warn!("no normal position found for {case} on {p:?}");
            Symmetry::IDENTITY
        });
    CaseLabel { case, symmetry }
}

/// Every variant whose normalized pairing fits `case`, in search order.
pub(crate) fn fitting(case: Case, p: &Pairing) -> Vec<(Variant, Pairing)> {
    variants(p).filter(|(_, np)| fits(case, np.pairs())).collect()
}
