//! Plain-text instance format.
//!
//! ```text
//! # comment
//! grid 6 6
//! pair (1,1) (6,6)
//! pair (1,6) (6,1)
//! path 1 (1,1) (1,2) ...     # optional, one per pair
//! ```
//!
//! Keywords and coordinates are whitespace-insensitive: `pair ( 1 , 1 )(6,6)`
//! is the same line as above.

use crate::grid::{GridGraph, Vertex};
use crate::linkage::{Linkage, Pairing, PairingError, Path};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub grid: GridGraph,
    pub pairing: Pairing,
    pub linkage: Option<Linkage>,
}

fn parse_vertices(rest: &str, line: usize) -> Result<Vec<(i64, i64)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = rest.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        if ch.is_whitespace() {
            continue;
        }
        if ch != '(' {
            return Err(err(line, format!("expected '(' at column {}, found '{ch}'", i + 1)));
        }
        let start = i + 1;
        let end = loop {
            match chars.next() {
                Some((j, ')')) => break j,
                Some(_) => {}
                None => return Err(err(line, "unterminated vertex, missing ')'")),
            }
        };
        let inner: String = rest[start..end].chars().filter(|c| !c.is_whitespace()).collect();
        let (r, c) = inner
            .split_once(',')
            .ok_or_else(|| err(line, format!("vertex '({inner})' must be (row,col)")))?;
        let parse = |s: &str| {
            s.parse::<i64>()
                .map_err(|_| err(line, format!("'{s}' is not an integer coordinate")))
        };
        out.push((parse(r)?, parse(c)?));
    }
    Ok(out)
}

fn to_vertex(g: &GridGraph, (r, c): (i64, i64), line: usize) -> Result<Vertex, ParseError> {
    if r < 1 || c < 1 || r > g.rows() as i64 || c > g.cols() as i64 {
        return Err(err(
            line,
            format!("vertex ({r},{c}) is outside the {}x{} grid", g.rows(), g.cols()),
        ));
    }
    Ok(Vertex::new(r as u8, c as u8))
}

/// Parse an instance. Terminals must be distinct.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut grid: Option<GridGraph> = None;
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut paths: Vec<(usize, Path)> = Vec::new();
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content
            .split_once(|c: char| c.is_whitespace() || c == '(')
            .map(|(k, _)| (k, &content[k.len()..]))
            .unwrap_or((content, ""));
        match keyword {
            "grid" => {
                if grid.is_some() {
                    return Err(err(line, "duplicate 'grid' line"));
                }
                let dims: Vec<_> = rest.split_whitespace().collect();
                if dims.len() != 2 {
                    return Err(err(line, "expected 'grid ROWS COLS'"));
                }
                let parse = |s: &str| {
                    s.parse::<i64>()
                        .map_err(|_| err(line, format!("'{s}' is not an integer dimension")))
                };
                let g = GridGraph::new(parse(dims[0])?, parse(dims[1])?)
                    .map_err(|e| err(line, e.to_string()))?;
                grid = Some(g);
            }
            "pair" => {
                let g = grid.as_ref().ok_or_else(|| err(line, "'pair' before 'grid'"))?;
                let vs = parse_vertices(rest, line)?;
                if vs.len() != 2 {
                    return Err(err(line, format!("a pair needs 2 vertices, found {}", vs.len())));
                }
                pairs.push((to_vertex(g, vs[0], line)?, to_vertex(g, vs[1], line)?));
                let p = Pairing::new(g, pairs.clone());
                if let Err(PairingError::Duplicate(x)) = p {
                    return Err(err(line, format!("terminal {x} is used more than once")));
                }
            }
            "path" => {
                let g = grid.as_ref().ok_or_else(|| err(line, "'path' before 'grid'"))?;
                let rest = rest.trim_start();
                let (id, tail) = rest
                    .split_once(|c: char| c.is_whitespace() || c == '(')
                    .map(|(k, _)| (k, &rest[k.len()..]))
                    .ok_or_else(|| err(line, "expected 'path INDEX (r,c) ...'"))?;
                let id: usize = id
                    .parse()
                    .map_err(|_| err(line, format!("'{id}' is not a pair index")))?;
                if id == 0 {
                    return Err(err(line, "pair indices start at 1"));
                }
                let vs = parse_vertices(tail, line)?
                    .into_iter()
                    .map(|x| to_vertex(g, x, line))
                    .collect::<Result<Vec<_>, _>>()?;
                if vs.is_empty() {
                    return Err(err(line, "a path needs at least one vertex"));
                }
                paths.push((id, Path::new(vs)));
            }
            other => return Err(err(line, format!("unknown keyword '{other}'"))),
        }
    }
    let grid = grid.ok_or_else(|| err(last_line.max(1), "missing 'grid' line"))?;
    let pairing = Pairing::new(&grid, pairs).map_err(|e| err(last_line.max(1), e.to_string()))?;
    let linkage = if paths.is_empty() {
        None
    } else {
        let mut slots: Vec<Option<Path>> = vec![None; pairing.len()];
        for (id, p) in paths {
            let slot = slots
                .get_mut(id - 1)
                .ok_or_else(|| err(last_line, format!("path for pair {id}, but only {} pairs", pairing.len())))?;
            if slot.is_some() {
                return Err(err(last_line, format!("pair {id} has two paths")));
            }
            *slot = Some(p);
        }
        let paths = slots
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| err(last_line, format!("pair {} has no path", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        Some(Linkage::new(paths))
    };
    Ok(Instance { grid, pairing, linkage })
}

/// Render the `grid` and `pair` lines.
pub fn format_instance(g: &GridGraph, p: &Pairing) -> String {
    let mut out = format!("grid {} {}\n", g.rows(), g.cols());
    for &(s, t) in p.pairs() {
        let _ = writeln!(out, "pair {s} {t}");
    }
    out
}

/// Render `path` lines for a linkage.
pub fn format_linkage(l: &Linkage) -> String {
    let mut out = String::new();
    for (i, path) in l.paths().iter().enumerate() {
        let _ = writeln!(out, "path {} {path}", i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::v;

    #[test]
    fn parses_with_comments_and_spacing() {
        let text = "# demo\n  grid 6 6 \npair ( 1 , 1 )(6,6) # corner\n\npair (1,6) (6,1)\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.grid.rows(), 6);
        assert_eq!(inst.pairing.pairs(), &[(v(1, 1), v(6, 6)), (v(1, 6), v(6, 1))]);
        assert!(inst.linkage.is_none());
        let again = parse_instance(&format_instance(&inst.grid, &inst.pairing)).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_instance("grid 6 6\npair (0,1) (2,2)\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("(0,1)"));
        let e = parse_instance("grid 6 6\npair (1,1) (2,2)\npair (2,2) (3,3)\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_instance("pair (1,1) (2,2)\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_instance("grid 6\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_instance("grid 3 3\nfoo\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_instance("grid 3 3\npair (1,1) (1,x)\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn parses_paths() {
        let text = "grid 2 2\npair (1,1) (1,2)\npath 1 (1,1) (1,2)\n";
        let inst = parse_instance(text).unwrap();
        let l = inst.linkage.unwrap();
        assert_eq!(l.paths()[0].vertices(), &[v(1, 1), v(1, 2)]);
        assert_eq!(format_linkage(&l), "path 1 (1,1) (1,2)\n");
        assert!(parse_instance("grid 2 2\npair (1,1) (1,2)\npath 2 (1,1)\n").is_err());
    }
}
