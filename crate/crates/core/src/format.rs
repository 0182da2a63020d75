//! Plain-text file formats.
//!
//! Plane graphs (`.pg`):
//!
//! ```text
//! pg <V> <E>
//! outer <dart>
//! rot <v>: <dart> <dart> ...        # counterclockwise, one line per vertex
//! edge <e> <dart-a> <dart-b> <u> <v>
//! pos <v> <x> <y>                   # optional drawing coordinates
//! ```
//!
//! Center-tail systems (`.cts`) name faces by id and the outer face by `O`:
//!
//! ```text
//! center <f> <f> ...
//! tail <i>: <f> <f> ... O
//! assign <edge> <tail>
//! ```
//!
//! Tree files list one edge id per line. Everywhere `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::congestion::{verify_tree, SpanningTree, TreeError};
use crate::dual_bounds::CenterTailSystem;
use crate::plane_graph::{Dart, EdgeId, FaceId, GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number<T: std::str::FromStr>(
    token: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

fn no_trailing<'a>(
    mut tokens: impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<(), ParseError> {
    match tokens.next() {
        Some(t) => Err(syntax(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

type EdgeLine = (usize, [Dart; 2], usize, usize);

pub fn parse_plane_graph(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut header = None;
    let mut outer = None;
    let mut rotation: Vec<Option<Vec<Dart>>> = Vec::new();
    // Per edge: source line, darts, claimed tails.
    let mut edges: Vec<Option<EdgeLine>> = Vec::new();
    let mut coords: Vec<Option<[f64; 2]>> = Vec::new();
    let mut any_pos = false;

    for (n, line) in lines(text) {
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("line is non-empty");
        if header.is_none() && keyword != "pg" {
            return Err(syntax(n, "expected `pg <V> <E>` header first"));
        }
        match keyword {
            "pg" => {
                if header.is_some() {
                    return Err(syntax(n, "repeated header"));
                }
                let v: usize = number(tokens.next(), n, "vertex count")?;
                let e: usize = number(tokens.next(), n, "edge count")?;
                no_trailing(tokens, n)?;
                header = Some((v, e));
                rotation = vec![None; v];
                edges = vec![None; e];
                coords = vec![None; v];
            }
            "outer" => {
                if outer.is_some() {
                    return Err(syntax(n, "repeated outer line"));
                }
                outer = Some(Dart(number(tokens.next(), n, "dart")?));
                no_trailing(tokens, n)?;
            }
            "rot" => {
                let label = tokens.next().ok_or_else(|| syntax(n, "missing vertex"))?;
                let label = label
                    .strip_suffix(':')
                    .ok_or_else(|| syntax(n, "expected `rot <v>: ...`"))?;
                let v: usize = number(Some(label), n, "vertex")?;
                let slot = rotation
                    .get_mut(v)
                    .ok_or_else(|| syntax(n, format!("vertex {v} out of range")))?;
                if slot.is_some() {
                    return Err(syntax(n, format!("second rotation for vertex {v}")));
                }
                let darts = tokens
                    .map(|t| number(Some(t), n, "dart").map(Dart))
                    .collect::<Result<Vec<_>, _>>()?;
                *slot = Some(darts);
            }
            "edge" => {
                let e: usize = number(tokens.next(), n, "edge id")?;
                let a: usize = number(tokens.next(), n, "dart")?;
                let b: usize = number(tokens.next(), n, "dart")?;
                let u: usize = number(tokens.next(), n, "vertex")?;
                let v: usize = number(tokens.next(), n, "vertex")?;
                no_trailing(tokens, n)?;
                let slot = edges
                    .get_mut(e)
                    .ok_or_else(|| syntax(n, format!("edge {e} out of range")))?;
                if slot.is_some() {
                    return Err(syntax(n, format!("edge {e} defined twice")));
                }
                *slot = Some((n, [Dart(a), Dart(b)], u, v));
            }
            "pos" => {
                let v: usize = number(tokens.next(), n, "vertex")?;
                let x: f64 = number(tokens.next(), n, "coordinate")?;
                let y: f64 = number(tokens.next(), n, "coordinate")?;
                no_trailing(tokens, n)?;
                let slot = coords
                    .get_mut(v)
                    .ok_or_else(|| syntax(n, format!("vertex {v} out of range")))?;
                *slot = Some([x, y]);
                any_pos = true;
            }
            other => return Err(syntax(n, format!("unknown keyword `{other}`"))),
        }
    }

    let (vertex_count, _) = header.ok_or(ParseError::Missing("pg"))?;
    let outer = outer.ok_or(ParseError::Missing("outer"))?;
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(0, format!("no rotation for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut tail_of = BTreeMap::new();
    for (v, darts) in rotation.iter().enumerate() {
        for &d in darts {
            if tail_of.insert(d, v).is_some() {
                return Err(syntax(
                    0,
                    format!("dart {d} appears twice in the rotation system"),
                ));
            }
        }
    }
    let mut edge_darts = Vec::with_capacity(edges.len());
    for (e, entry) in edges.into_iter().enumerate() {
        let (n, [a, b], u, v) = entry.ok_or_else(|| syntax(0, format!("no line for edge {e}")))?;
        for (d, end) in [(a, u), (b, v)] {
            match tail_of.get(&d) {
                None => return Err(syntax(n, format!("dart {d} is not in any rotation"))),
                Some(&t) if t != end => {
                    return Err(syntax(n, format!("dart {d} leaves vertex {t}, not {end}")))
                }
                _ => {}
            }
        }
        edge_darts.push([a, b]);
    }
    let graph = PlaneGraph::new(vertex_count, edge_darts, rotation, outer)?;
    if !any_pos {
        return Ok(graph);
    }
    let coords = coords
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| syntax(0, format!("no position for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(graph.with_coords(coords)?)
}

pub fn write_plane_graph(g: &PlaneGraph) -> String {
    let mut out = String::new();
    writeln!(out, "pg {} {}", g.vertex_count(), g.edge_count()).unwrap();
    writeln!(out, "outer {}", g.outer_dart()).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "rot {v}:").unwrap();
        for d in g.rotation(crate::plane_graph::VertexId(v)) {
            write!(out, " {d}").unwrap();
        }
        out.push('\n');
    }
    for e in g.edges() {
        let [a, b] = g.darts(e);
        writeln!(out, "edge {e} {a} {b} {} {}", g.tail(a), g.tail(b)).unwrap();
    }
    if let Some(coords) = g.coords() {
        for (v, [x, y]) in coords.iter().enumerate() {
            writeln!(out, "pos {v} {x} {y}").unwrap();
        }
    }
    out
}

fn parse_face(token: &str, line: usize, outer: FaceId) -> Result<FaceId, ParseError> {
    if token == "O" {
        Ok(outer)
    } else {
        number(Some(token), line, "face").map(FaceId)
    }
}

/// Parses a center-tail system; `outer` is the face that `O` stands for.
/// Structural checks against a graph are left to
/// [`validate_cts`](crate::dual_bounds::validate_cts).
pub fn parse_cts(text: &str, outer: FaceId) -> Result<CenterTailSystem, ParseError> {
    let mut center = None;
    let mut tails: BTreeMap<usize, Vec<FaceId>> = BTreeMap::new();
    let mut assignment = BTreeMap::new();
    for (n, line) in lines(text) {
        let mut tokens = line.split_whitespace();
        match tokens.next().expect("line is non-empty") {
            "center" => {
                if center.is_some() {
                    return Err(syntax(n, "repeated center line"));
                }
                center = Some(
                    tokens
                        .map(|t| parse_face(t, n, outer))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            "tail" => {
                let label = tokens
                    .next()
                    .ok_or_else(|| syntax(n, "missing tail index"))?;
                let label = label
                    .strip_suffix(':')
                    .ok_or_else(|| syntax(n, "expected `tail <i>: ...`"))?;
                let i: usize = number(Some(label), n, "tail index")?;
                let path = tokens
                    .map(|t| parse_face(t, n, outer))
                    .collect::<Result<Vec<_>, _>>()?;
                if tails.insert(i, path).is_some() {
                    return Err(syntax(n, format!("tail {i} defined twice")));
                }
            }
            "assign" => {
                let e: usize = number(tokens.next(), n, "edge")?;
                let t: usize = number(tokens.next(), n, "tail index")?;
                no_trailing(tokens, n)?;
                if assignment.insert(EdgeId(e), t).is_some() {
                    return Err(syntax(n, format!("edge {e} assigned twice")));
                }
            }
            other => return Err(syntax(n, format!("unknown keyword `{other}`"))),
        }
    }
    let center = center.ok_or(ParseError::Missing("center"))?;
    let count = tails.len();
    let tails = tails
        .into_iter()
        .enumerate()
        .map(|(expected, (i, path))| {
            if i == expected {
                Ok(path)
            } else {
                Err(syntax(
                    0,
                    format!("tail indices must be 0..{count}, found {i}"),
                ))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CenterTailSystem {
        center,
        tails,
        assignment,
    })
}

pub fn write_cts(s: &CenterTailSystem, outer: FaceId) -> String {
    let face = |f: &FaceId| {
        if *f == outer {
            "O".to_string()
        } else {
            f.to_string()
        }
    };
    let mut out = String::from("center");
    for f in &s.center {
        write!(out, " {}", face(f)).unwrap();
    }
    out.push('\n');
    for (i, tail) in s.tails.iter().enumerate() {
        write!(out, "tail {i}:").unwrap();
        for f in tail {
            write!(out, " {}", face(f)).unwrap();
        }
        out.push('\n');
    }
    for (e, t) in &s.assignment {
        writeln!(out, "assign {e} {t}").unwrap();
    }
    out
}

pub fn parse_tree(text: &str, g: &PlaneGraph) -> Result<SpanningTree, ParseError> {
    let edges = lines(text)
        .map(|(n, line)| {
            let mut tokens = line.split_whitespace();
            let e: usize = number(tokens.next(), n, "edge id")?;
            no_trailing(tokens, n)?;
            Ok(EdgeId(e))
        })
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(verify_tree(g, edges)?)
}

pub fn write_tree(t: &SpanningTree) -> String {
    t.edges().iter().map(|e| format!("{e}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::{canonical_cts, spiderweb};

    #[test]
    fn graph_round_trip() {
        let (grid, s) = canonical_cts(6).unwrap();
        let text = write_plane_graph(&grid.graph);
        let back = parse_plane_graph(&text).unwrap();
        assert_eq!(back, grid.graph);
        assert_eq!(write_plane_graph(&back), text);

        let outer = grid.graph.outer_face();
        let cts = write_cts(&s, outer);
        assert!(cts.contains(" O\n"));
        assert_eq!(parse_cts(&cts, outer).unwrap(), s);
    }

    #[test]
    fn tree_round_trip() {
        let web = spiderweb(3, 5).unwrap();
        let t = web.balanced_tree();
        assert_eq!(parse_tree(&write_tree(&t), &web.graph).unwrap(), t);
    }

    const TRIANGLE: &str = "\
# a triangle
pg 3 3
outer 1
rot 0: 0 5
rot 1: 2 1
rot 2: 4 3
edge 0 0 1 0 1
edge 1 2 3 1 2
edge 2 4 5 2 0
";

    #[test]
    fn parses_hand_written_triangle() {
        let g = parse_plane_graph(TRIANGLE).unwrap();
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.outer_edges().len(), 3);
        assert!(g.coords().is_none());
    }

    #[test]
    fn rejects_duplicate_dart() {
        let bad = TRIANGLE.replace("rot 2: 4 3", "rot 2: 4 0");
        assert!(matches!(
            parse_plane_graph(&bad),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn rejects_dangling_twin() {
        let bad = TRIANGLE.replace("rot 2: 4 3", "rot 2: 4");
        assert!(parse_plane_graph(&bad).is_err());
        let bad = TRIANGLE.replace("edge 2 4 5 2 0", "edge 2 4 9 2 0");
        assert!(matches!(
            parse_plane_graph(&bad),
            Err(ParseError::Syntax { line: 9, .. })
        ));
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(parse_plane_graph("rot 0: 1").is_err());
        assert!(parse_plane_graph(&TRIANGLE.replace("outer 1", "outer x")).is_err());
        assert!(parse_plane_graph(&TRIANGLE.replace("outer 1", "")).is_err());
        assert!(parse_cts("center 1\ntail 1: 2 O\n", FaceId(0)).is_err());
        assert!(parse_cts("tail 0: 2 O\n", FaceId(0)).is_err());
    }
}
