//! DOT and SVG drawings with face or edge labels.
//!
//! Output depends only on the graph and the labels, so repeated renders of
//! the same input are byte-identical.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::congestion::{edge_congestion_cuts, SpanningTree, TreeError};
use crate::dual_bounds::{absolute_index, restricted_index, BoundsError};
use crate::plane_graph::{EdgeId, FaceId, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("SVG output needs vertex coordinates")]
    MissingCoordinates,
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone)]
pub enum LabelMode {
    None,
    /// Distance of every interior face from the exterior face in the dual.
    AbsoluteIndex,
    /// Minimum index over the given outer edges.
    RestrictedIndex(Vec<EdgeId>),
    /// Per-edge congestion of the tree; tree edges are drawn bold.
    Congestion(SpanningTree),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labels {
    pub faces: BTreeMap<FaceId, String>,
    pub edges: BTreeMap<EdgeId, String>,
    pub highlighted: BTreeSet<EdgeId>,
}

pub fn labels(g: &PlaneGraph, mode: &LabelMode) -> Result<Labels, RenderError> {
    let mut out = Labels::default();
    let outer = g.outer_face();
    let face_values = |values: Vec<Option<usize>>| -> BTreeMap<FaceId, String> {
        values
            .into_iter()
            .enumerate()
            .filter(|&(f, _)| FaceId(f) != outer)
            .filter_map(|(f, v)| v.map(|v| (FaceId(f), v.to_string())))
            .collect()
    };
    match mode {
        LabelMode::None => {}
        LabelMode::AbsoluteIndex => {
            let table = absolute_index(g)?;
            out.faces = face_values(g.faces().iter().map(|f| table.get(f.id)).collect());
        }
        LabelMode::RestrictedIndex(edges) => {
            let table = restricted_index(g, edges)?;
            out.faces = face_values(g.faces().iter().map(|f| table.get(f.id)).collect());
        }
        LabelMode::Congestion(t) => {
            let report = edge_congestion_cuts(g, t)?;
            out.edges = report
                .per_edge
                .iter()
                .map(|(&e, c)| (e, c.to_string()))
                .collect();
            out.highlighted = t.edges().iter().copied().collect();
        }
    }
    Ok(out)
}

/// Average of the distinct boundary vertices of a face.
fn face_anchor(g: &PlaneGraph, coords: &[[f64; 2]], f: FaceId) -> [f64; 2] {
    let mut vs = g.face_vertices(f);
    vs.sort();
    vs.dedup();
    let n = vs.len() as f64;
    let sx: f64 = vs.iter().map(|v| coords[v.0][0]).sum();
    let sy: f64 = vs.iter().map(|v| coords[v.0][1]).sum();
    [sx / n, sy / n]
}

pub fn to_dot(g: &PlaneGraph, labels: &Labels) -> String {
    let coords = g.coords();
    let mut out = String::from("graph G {\n  node [shape=point];\n");
    for v in 0..g.vertex_count() {
        write!(out, "  v{v}").unwrap();
        if let Some(c) = coords {
            write!(out, " [pos=\"{:.3},{:.3}!\"]", c[v][0], c[v][1]).unwrap();
        }
        out.push_str(";\n");
    }
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let mut attrs = Vec::new();
        if let Some(l) = labels.edges.get(&e) {
            attrs.push(format!("label=\"{l}\""));
        }
        if labels.highlighted.contains(&e) {
            attrs.push("penwidth=3".to_string());
        }
        write!(out, "  v{u} -- v{v}").unwrap();
        if !attrs.is_empty() {
            write!(out, " [{}]", attrs.join(", ")).unwrap();
        }
        writeln!(out, "; // e{e}").unwrap();
    }
    for (f, label) in &labels.faces {
        write!(out, "  f{f} [shape=plaintext, label=\"{label}\"").unwrap();
        if let Some(c) = coords {
            let [x, y] = face_anchor(g, c, *f);
            write!(out, ", pos=\"{x:.3},{y:.3}!\"").unwrap();
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    out
}

pub fn to_svg(g: &PlaneGraph, labels: &Labels) -> Result<String, RenderError> {
    const SCALE: f64 = 60.0;
    const MARGIN: f64 = 30.0;
    let coords = g.coords().ok_or(RenderError::MissingCoordinates)?;
    let min_x = coords.iter().map(|c| c[0]).fold(f64::INFINITY, f64::min);
    let max_x = coords
        .iter()
        .map(|c| c[0])
        .fold(f64::NEG_INFINITY, f64::max);
    let min_y = coords.iter().map(|c| c[1]).fold(f64::INFINITY, f64::min);
    let max_y = coords
        .iter()
        .map(|c| c[1])
        .fold(f64::NEG_INFINITY, f64::max);
    // SVG's y axis points down.
    let px = |p: [f64; 2]| {
        (
            MARGIN + (p[0] - min_x) * SCALE,
            MARGIN + (max_y - p[1]) * SCALE,
        )
    };
    let width = 2.0 * MARGIN + (max_x - min_x) * SCALE;
    let height = 2.0 * MARGIN + (max_y - min_y) * SCALE;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    )
    .unwrap();
    out.push_str("<g stroke=\"black\" stroke-width=\"1\">\n");
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let ((x1, y1), (x2, y2)) = (px(coords[u.0]), px(coords[v.0]));
        let width = if labels.highlighted.contains(&e) {
            3
        } else {
            1
        };
        writeln!(
            out,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke-width=\"{width}\"/>"
        )
        .unwrap();
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for c in coords {
        let (x, y) = px(*c);
        writeln!(out, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\"/>").unwrap();
    }
    out.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n");
    for (f, label) in &labels.faces {
        let (x, y) = px(face_anchor(g, coords, *f));
        writeln!(out, "<text x=\"{x:.2}\" y=\"{y:.2}\">{label}</text>").unwrap();
    }
    for (e, label) in &labels.edges {
        let (u, v) = g.endpoints(*e);
        let ((x1, y1), (x2, y2)) = (px(coords[u.0]), px(coords[v.0]));
        writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" fill=\"firebrick\">{label}</text>",
            (x1 + x2) / 2.0,
            (y1 + y2) / 2.0
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::triangular_grid;

    #[test]
    fn absolute_index_labels_every_interior_face() {
        let grid = triangular_grid(5).unwrap();
        let l = labels(&grid.graph, &LabelMode::AbsoluteIndex).unwrap();
        assert_eq!(l.faces.len(), 16);
        assert_eq!(l.faces[&grid.face(3, 3)], "3");
        let dot = to_dot(&grid.graph, &l);
        assert_eq!(dot, to_dot(&grid.graph, &l));
        assert!(dot.contains("label=\"3\""));
        let svg = to_svg(&grid.graph, &l).unwrap();
        assert!(svg.starts_with("<svg"));
    }

    #[test]
    fn svg_needs_coordinates() {
        let g = triangular_grid(3).unwrap().graph;
        let text = crate::format::write_plane_graph(&g);
        let stripped: String = text
            .lines()
            .filter(|l| !l.starts_with("pos"))
            .map(|l| format!("{l}\n"))
            .collect();
        let bare = crate::format::parse_plane_graph(&stripped).unwrap();
        assert_eq!(
            to_svg(&bare, &Labels::default()),
            Err(RenderError::MissingCoordinates)
        );
        assert!(to_dot(&bare, &Labels::default()).starts_with("graph G"));
    }
}
