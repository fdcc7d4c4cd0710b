//! ASCII and SVG drawings of a linkage.
//!
//! In ASCII, vertices are `+` and edges `-` or `|`; an edge used by a path
//! shows the pair's id instead (`1`..`9`, then `a`, `b`, ...).

use gridlink_core::{validate_linkage, GridGraph, Linkage, Pairing, Violation};
use std::fmt::Write as _;

/// Id character for 0-based pair `i`.
pub fn pair_mark(i: usize) -> char {
    match i {
        0..=8 => char::from(b'1' + i as u8),
        _ => char::from_u32('a' as u32 + (i - 9) as u32).unwrap_or('?'),
    }
}

/// Pair using each edge index, or `None`.
fn owners(g: &GridGraph, l: &Linkage) -> Vec<Option<usize>> {
    let mut out = vec![None; g.host_edge_count()];
    for (i, p) in l.paths().iter().enumerate() {
        for e in p.edge_indices(g).unwrap_or_default() {
            out[e] = Some(i);
        }
    }
    out
}

/// Refuses linkages that do not validate.
pub fn ascii(g: &GridGraph, p: &Pairing, l: &Linkage) -> Result<String, Vec<Violation>> {
    validate_linkage(g, p, l)?;
    let own = owners(g, l);
    let mark = |a, b, plain| {
        g.edge_between(a, b).map_or(' ', |e| own[e].map_or(plain, pair_mark))
    };
    let mut out = String::new();
    for r in 1..=g.rows() {
        for c in 1..=g.cols() {
            out.push('+');
            if c < g.cols() {
                out.push(mark(gridlink_core::v(r, c), gridlink_core::v(r, c + 1), '-'));
            }
        }
        out.push('\n');
        if r < g.rows() {
            for c in 1..=g.cols() {
                out.push(mark(gridlink_core::v(r, c), gridlink_core::v(r + 1, c), '|'));
                if c < g.cols() {
                    out.push(' ');
                }
            }
            out.push('\n');
        }
    }
    Ok(out)
}

const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];
const STEP: u32 = 60;
const MARGIN: u32 = 30;

/// Refuses linkages that do not validate.
pub fn svg(g: &GridGraph, p: &Pairing, l: &Linkage) -> Result<String, Vec<Violation>> {
    validate_linkage(g, p, l)?;
    let own = owners(g, l);
    let xy = |x: gridlink_core::Vertex| (MARGIN + (x.col as u32 - 1) * STEP, MARGIN + (x.row as u32 - 1) * STEP);
    let w = 2 * MARGIN + (g.cols() as u32 - 1) * STEP;
    let h = 2 * MARGIN + (g.rows() as u32 - 1) * STEP;
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    for (e, a, b) in g.edges() {
        let ((x1, y1), (x2, y2)) = (xy(a), xy(b));
        let style = match own[e] {
            Some(i) => format!(r#"stroke="{}" stroke-width="5""#, PALETTE[i % PALETTE.len()]),
            None => r##"stroke="#cccccc" stroke-width="1""##.to_string(),
        };
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>"#);
    }
    for x in g.vertices() {
        let (cx, cy) = xy(x);
        let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="3" fill="black"/>"#);
    }
    for (i, &(s, t)) in p.pairs().iter().enumerate() {
        for (name, x) in [("s", s), ("t", t)] {
            let (cx, cy) = xy(x);
            let color = PALETTE[i % PALETTE.len()];
            let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="9" fill="white" stroke="{color}" stroke-width="2"/>"#);
            let _ = writeln!(
                out,
                r#"<text x="{cx}" y="{}" font-family="monospace" font-size="10" text-anchor="middle">{name}{}</text>"#,
                cy + 4,
                i + 1
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gridlink_core::{v, Path};

    #[test]
    fn marks_run_past_nine() {
        assert_eq!(pair_mark(0), '1');
        assert_eq!(pair_mark(8), '9');
        assert_eq!(pair_mark(9), 'a');
    }

    #[test]
    fn straight_path_on_row_one() {
        let g = GridGraph::new(2, 3).unwrap();
        let p = Pairing::new(&g, vec![(v(1, 1), v(1, 3))]).unwrap();
        let l = Linkage::new(vec![Path::new(vec![v(1, 1), v(1, 2), v(1, 3)])]);
        assert_eq!(ascii(&g, &p, &l).unwrap(), "+1+1+\n| | |\n+-+-+\n");
    }

    #[test]
    fn invalid_linkages_are_refused() {
        let g = GridGraph::new(2, 2).unwrap();
        let p = Pairing::new(&g, vec![(v(1, 1), v(2, 2))]).unwrap();
        let l = Linkage::new(vec![Path::new(vec![v(1, 1), v(2, 2)])]);
        assert!(ascii(&g, &p, &l).is_err());
        assert!(svg(&g, &p, &l).is_err());
    }
}
