//! Generators for triangular, rectangular and hexagonal grids and for the
//! spiderweb graph, plus the canonical center-tail systems of triangular
//! grids.
//!
//! Every generator produces a straight-line drawing, so face ids follow
//! dart-scan order and the drawing coordinates travel with the graph.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::congestion::{verify_tree, SpanningTree};
use crate::dual_bounds::CenterTailSystem;
use crate::plane_graph::{EdgeId, FaceId, GraphError, PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("parameter {name} = {value} is below the minimum {min}")]
    TooSmall {
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), GridError> {
    if value < min {
        return Err(GridError::TooSmall { name, value, min });
    }
    Ok(())
}

/// A side of a triangular grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Bottom,
    Right,
    Left,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Bottom => "bottom",
            Side::Right => "right",
            Side::Left => "left",
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "bottom" => Some(Side::Bottom),
            "right" => Some(Side::Right),
            "left" => Some(Side::Left),
            _ => None,
        }
    }
}

/// The triangular grid `T_k`: a triangle whose sides are cut into `k - 1`
/// equal pieces, with corresponding subdivision points joined.
///
/// Vertex `(r, j)` sits in row `r` from the apex (`0 <= j <= r < k`). Face
/// `(row, pos)` lies between vertex rows `row - 1` and `row`; odd positions
/// are upward triangles and even positions downward ones.
#[derive(Debug, Clone)]
pub struct TriangularGrid {
    pub k: usize,
    pub graph: PlaneGraph,
    cells: Vec<Option<(usize, usize)>>,
    by_cell: HashMap<(usize, usize), FaceId>,
}

fn vertex_index(r: usize, j: usize) -> usize {
    r * (r + 1) / 2 + j
}

fn vertex_coords(index: usize) -> (usize, usize) {
    let mut r = 0;
    while vertex_index(r + 1, 0) <= index {
        r += 1;
    }
    (r, index - vertex_index(r, 0))
}

pub fn triangular_grid(k: usize) -> Result<TriangularGrid, GridError> {
    at_least("k", k, 2)?;
    let h = 3f64.sqrt() / 2.0;
    let mut coords = Vec::new();
    for r in 0..k {
        for j in 0..=r {
            coords.push([j as f64 - r as f64 / 2.0, -(r as f64) * h]);
        }
    }
    let mut edges = Vec::new();
    for r in 0..k {
        for j in 0..=r {
            if j < r {
                edges.push((vertex_index(r, j), vertex_index(r, j + 1)));
            }
            if r + 1 < k {
                edges.push((vertex_index(r, j), vertex_index(r + 1, j)));
                edges.push((vertex_index(r, j), vertex_index(r + 1, j + 1)));
            }
        }
    }
    let graph = PlaneGraph::from_straight_line(coords, &edges)?;

    let mut cells = vec![None; graph.face_count()];
    let mut by_cell = HashMap::new();
    for f in graph.interior_faces() {
        let mut vs: Vec<(usize, usize)> = graph
            .face_vertices(f)
            .into_iter()
            .map(|v| vertex_coords(v.0))
            .collect();
        vs.sort();
        // Sorted by (row, column): an upward face has one vertex above,
        // a downward face two.
        let cell = if vs[0].0 < vs[1].0 {
            (vs[1].0, 2 * vs[0].1 + 1)
        } else {
            (vs[2].0, 2 * vs[2].1)
        };
        cells[f.0] = Some(cell);
        by_cell.insert(cell, f);
    }
    Ok(TriangularGrid {
        k,
        graph,
        cells,
        by_cell,
    })
}

impl TriangularGrid {
    /// Face at `(row, pos)` with `1 <= row < k` and `1 <= pos < 2 row`.
    pub fn face(&self, row: usize, pos: usize) -> FaceId {
        self.by_cell[&(row, pos)]
    }

    pub fn try_face(&self, row: usize, pos: usize) -> Option<FaceId> {
        self.by_cell.get(&(row, pos)).copied()
    }

    pub fn cell(&self, f: FaceId) -> Option<(usize, usize)> {
        self.cells[f.0]
    }

    pub fn vertex(&self, r: usize, j: usize) -> VertexId {
        VertexId(vertex_index(r, j))
    }

    pub fn vertex_position(&self, v: VertexId) -> (usize, usize) {
        vertex_coords(v.0)
    }

    pub fn side(&self, e: EdgeId) -> Option<Side> {
        let (u, v) = self.graph.endpoints(e);
        let (a, b) = (vertex_coords(u.0), vertex_coords(v.0));
        let last = self.k - 1;
        if a.0 == last && b.0 == last {
            Some(Side::Bottom)
        } else if a.1 == 0 && b.1 == 0 {
            Some(Side::Left)
        } else if a.1 == a.0 && b.1 == b.0 {
            Some(Side::Right)
        } else {
            None
        }
    }

    pub fn side_edges(&self, side: Side) -> Vec<EdgeId> {
        self.graph
            .edges()
            .filter(|&e| self.side(e) == Some(side))
            .collect()
    }

    /// Rotation by 120 degrees counterclockwise about the center: the bottom
    /// side goes to the right side, the right side to the left side.
    pub fn rotate_vertex(&self, v: VertexId) -> VertexId {
        let (r, j) = vertex_coords(v.0);
        let from_left = j;
        let from_right = r - j;
        VertexId(vertex_index(self.k - 1 - from_left, from_right))
    }

    pub fn rotate_edge(&self, e: EdgeId) -> EdgeId {
        let (u, v) = self.graph.endpoints(e);
        let (a, b) = (self.rotate_vertex(u), self.rotate_vertex(v));
        self.graph
            .neighbors(a)
            .find(|&(w, _)| w == b)
            .map(|(_, e)| e)
            .expect("rotation is an automorphism")
    }

    pub fn rotate_face(&self, f: FaceId) -> FaceId {
        if f == self.graph.outer_face() {
            return f;
        }
        let mut image: Vec<VertexId> = self
            .graph
            .face_vertices(f)
            .into_iter()
            .map(|v| self.rotate_vertex(v))
            .collect();
        image.sort();
        self.graph
            .interior_faces()
            .find(|&h| {
                let mut vs = self.graph.face_vertices(h);
                vs.sort();
                vs == image
            })
            .expect("rotation is an automorphism")
    }

    /// Neighbor of a face in one of the three tail directions.
    fn step(&self, f: FaceId, direction: TailDirection) -> FaceId {
        let (row, pos) = self.cell(f).expect("interior face");
        let up = pos % 2 == 1;
        let next = match (direction, up) {
            (TailDirection::West, _) => (row, pos - 1),
            (TailDirection::NorthEast, true) => (row, pos + 1),
            (TailDirection::NorthEast, false) => (row - 1, pos - 1),
            (TailDirection::SouthEast, true) => (row + 1, pos + 1),
            (TailDirection::SouthEast, false) => (row, pos + 1),
        };
        self.face(next.0, next.1)
    }

    fn borders_exterior(&self, f: FaceId) -> bool {
        let (row, pos) = self.cell(f).expect("interior face");
        pos % 2 == 1 && (pos == 1 || pos == 2 * row - 1 || row == self.k - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TailDirection {
    West,
    NorthEast,
    SouthEast,
}

/// Closed-form `s(T_k)`: `4n` for `k = 3n` and `k = 3n + 1`, `4n + 2` for
/// `k = 3n + 2`.
pub fn closed_form(k: usize) -> usize {
    let n = k / 3;
    match k % 3 {
        2 => 4 * n + 2,
        _ => 4 * n,
    }
}

/// The older closed form `2 (floor((m - 1) / 3) + floor(m / 3))`. It agrees
/// with [`closed_form`] only for `m = 3n + 1`: it is 2 too small for
/// `m = 3n` and `m = 3n + 2`.
pub fn floor_sum_formula(m: usize) -> usize {
    2 * ((m - 1) / 3 + m / 3)
}

/// Canonical center-tail system on `T_k`, `k >= 5`.
///
/// * `k = 3n + 2`: the center is the central upward face `(2n+1, 2n+1)`.
/// * `k = 3n`: the center is the downward face `(2n, 2n)` containing the
///   centroid.
/// * `k = 3n + 1`: the center is the six faces around the central vertex.
///
/// Three tails leave the center: due west, north-east and south-east, each a
/// zigzag of dual steps that stops at the first face touching the boundary.
/// Tail 0 exits through the left side, tail 1 through the right side and
/// tail 2 through the bottom. Bottom edges take tail 1, right edges tail 0
/// and left edges tail 2, which makes the system invariant under rotation by
/// 120 degrees.
pub fn canonical_cts(k: usize) -> Result<(TriangularGrid, CenterTailSystem), GridError> {
    at_least("k", k, 5)?;
    let grid = triangular_grid(k)?;
    let n = k / 3;
    let (center, starts) = match k % 3 {
        2 => {
            let c = grid.face(2 * n + 1, 2 * n + 1);
            (vec![c], [c, c, c])
        }
        0 => {
            let c = grid.face(2 * n, 2 * n);
            (vec![c], [c, c, c])
        }
        _ => {
            let cells = [
                (2 * n, 2 * n - 1),
                (2 * n, 2 * n),
                (2 * n, 2 * n + 1),
                (2 * n + 1, 2 * n),
                (2 * n + 1, 2 * n + 1),
                (2 * n + 1, 2 * n + 2),
            ];
            let center = cells.iter().map(|&(r, p)| grid.face(r, p)).collect();
            let starts = [
                grid.face(2 * n + 1, 2 * n),
                grid.face(2 * n, 2 * n),
                grid.face(2 * n + 1, 2 * n + 2),
            ];
            (center, starts)
        }
    };
    let directions = [
        TailDirection::West,
        TailDirection::NorthEast,
        TailDirection::SouthEast,
    ];
    let tails = starts
        .iter()
        .zip(directions)
        .map(|(&start, dir)| {
            let mut tail = vec![start];
            let mut f = start;
            while !grid.borders_exterior(f) {
                f = grid.step(f, dir);
                tail.push(f);
            }
            tail.push(grid.graph.outer_face());
            tail
        })
        .collect();
    let assignment: BTreeMap<EdgeId, usize> = grid
        .graph
        .outer_edges()
        .into_iter()
        .map(|e| {
            let tail = match grid.side(e).expect("outer edges lie on a side") {
                Side::Bottom => 1,
                Side::Right => 0,
                Side::Left => 2,
            };
            (e, tail)
        })
        .collect();
    let system = CenterTailSystem {
        center,
        tails,
        assignment,
    };
    Ok((grid, system))
}

/// Recognizes a plane graph as some `T_k` (up to relabelling and rotation of
/// the drawing) and returns the grid with the element maps from the grid to
/// `g`.
pub fn recognize_triangular(
    g: &PlaneGraph,
) -> Option<(TriangularGrid, crate::plane_graph::Isomorphism)> {
    let v = g.vertex_count();
    let mut k = 2;
    while k * (k + 1) / 2 < v {
        k += 1;
    }
    if k * (k + 1) / 2 != v {
        return None;
    }
    let grid = triangular_grid(k).ok()?;
    let iso = grid.graph.embedded_isomorphism(g)?;
    Some((grid, iso))
}

/// Carries a center-tail system along an isomorphism.
pub fn transport_cts(
    s: &CenterTailSystem,
    iso: &crate::plane_graph::Isomorphism,
) -> CenterTailSystem {
    let face = |f: &FaceId| iso.faces[f.0];
    CenterTailSystem {
        center: s.center.iter().map(face).collect(),
        tails: s
            .tails
            .iter()
            .map(|t| t.iter().map(face).collect())
            .collect(),
        assignment: s
            .assignment
            .iter()
            .map(|(e, &t)| (iso.edges[e.0], t))
            .collect(),
    }
}

/// The `m x n` grid graph (`m` rows, `n` columns of vertices).
pub fn rectangular_grid(m: usize, n: usize) -> Result<PlaneGraph, GridError> {
    at_least("m", m, 2)?;
    at_least("n", n, 2)?;
    let id = |r: usize, c: usize| r * n + c;
    let coords = (0..m)
        .flat_map(|r| (0..n).map(move |c| [c as f64, -(r as f64)]))
        .collect();
    let mut edges = Vec::new();
    for r in 0..m {
        for c in 0..n {
            if c + 1 < n {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < m {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(PlaneGraph::from_straight_line(coords, &edges)?)
}

/// Hexagonal grid of radius `r`: a central hexagonal cell surrounded by
/// `r - 1` rings of cells.
pub fn hexagonal_grid(r: usize) -> Result<PlaneGraph, GridError> {
    at_least("r", r, 1)?;
    // Corners live on the triangular lattice {a (1, 0) + b (1/2, sqrt3/2)};
    // cell centers on the sublattice spanned by (1, 1) and (-1, 2).
    const CORNERS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    let radius = r as i64 - 1;
    let mut vertex_of: HashMap<(i64, i64), usize> = HashMap::new();
    let mut points = Vec::new();
    let mut edges = Vec::new();
    let mut edge_set = std::collections::HashSet::new();
    for q in -radius..=radius {
        for s in -radius..=radius {
            if (q + s).abs() > radius {
                continue;
            }
            let center = (q - s, q + 2 * s);
            let ring: Vec<usize> = CORNERS
                .iter()
                .map(|&(da, db)| {
                    let p = (center.0 + da, center.1 + db);
                    *vertex_of.entry(p).or_insert_with(|| {
                        points.push(p);
                        points.len() - 1
                    })
                })
                .collect();
            for i in 0..6 {
                let (a, b) = (ring[i], ring[(i + 1) % 6]);
                if edge_set.insert((a.min(b), a.max(b))) {
                    edges.push((a, b));
                }
            }
        }
    }
    let h = 3f64.sqrt() / 2.0;
    let coords = points
        .iter()
        .map(|&(a, b)| [a as f64 + b as f64 / 2.0, b as f64 * h])
        .collect();
    Ok(PlaneGraph::from_straight_line(coords, &edges)?)
}

/// `n` concentric `k`-cycles around a central vertex, joined by `k` spokes.
#[derive(Debug, Clone)]
pub struct Spiderweb {
    pub rings: usize,
    pub spokes: usize,
    pub graph: PlaneGraph,
    ring_edges: Vec<Vec<EdgeId>>,
    spoke_edges: Vec<Vec<EdgeId>>,
}

impl Spiderweb {
    pub fn hub(&self) -> VertexId {
        VertexId(0)
    }

    /// Vertex `j` of ring `i` (rings are numbered from 1).
    pub fn vertex(&self, ring: usize, j: usize) -> VertexId {
        VertexId(1 + (ring - 1) * self.spokes + j)
    }

    /// Edge of ring `i` in sector `j`, i.e. between spokes `j` and `j + 1`.
    pub fn ring_edge(&self, ring: usize, sector: usize) -> EdgeId {
        self.ring_edges[ring - 1][sector]
    }

    /// Segment of spoke `j` between ring `i - 1` (the hub for `i = 1`) and
    /// ring `i`.
    pub fn spoke_edge(&self, spoke: usize, ring: usize) -> EdgeId {
        self.spoke_edges[spoke][ring - 1]
    }

    /// The `k` triangular faces around the hub.
    pub fn innermost_faces(&self) -> Vec<FaceId> {
        let hub = self.hub();
        self.graph
            .interior_faces()
            .filter(|&f| self.graph.face_vertices(f).contains(&hub))
            .collect()
    }

    /// Spoke 0 in full plus every ring minus its edge in `cuts[i - 1]`.
    pub fn tree_with_cuts(&self, cuts: &[usize]) -> SpanningTree {
        assert_eq!(cuts.len(), self.rings);
        let mut edges: Vec<EdgeId> = (1..=self.rings).map(|i| self.spoke_edge(0, i)).collect();
        for (i, &cut) in cuts.iter().enumerate() {
            for sector in (0..self.spokes).filter(|&s| s != cut % self.spokes) {
                edges.push(self.ring_edge(i + 1, sector));
            }
        }
        verify_tree(&self.graph, edges).expect("spoke plus cut rings is a spanning tree")
    }

    /// Every ring cut in the sector farthest from the kept spoke; congestion
    /// at most `k + 2`.
    pub fn balanced_tree(&self) -> SpanningTree {
        let middle = (self.spokes - 1) / 2;
        self.tree_with_cuts(&vec![middle; self.rings])
    }

    /// Every ring cut next to the kept spoke; congestion `2k`.
    pub fn aligned_tree(&self) -> SpanningTree {
        self.tree_with_cuts(&vec![0; self.rings])
    }
}

pub fn spiderweb(rings: usize, spokes: usize) -> Result<Spiderweb, GridError> {
    at_least("rings", rings, 1)?;
    at_least("spokes", spokes, 3)?;
    let mut coords = vec![[0.0, 0.0]];
    for i in 1..=rings {
        for j in 0..spokes {
            let a = std::f64::consts::TAU * j as f64 / spokes as f64;
            coords.push([i as f64 * a.cos(), i as f64 * a.sin()]);
        }
    }
    let vid = |i: usize, j: usize| if i == 0 { 0 } else { 1 + (i - 1) * spokes + j };
    let mut edges = Vec::new();
    let mut spoke_edges = vec![Vec::new(); spokes];
    let mut ring_edges = Vec::new();
    for i in 1..=rings {
        for (j, spoke) in spoke_edges.iter_mut().enumerate() {
            spoke.push(EdgeId(edges.len()));
            edges.push((vid(i - 1, j), vid(i, j)));
        }
        let mut ring = Vec::new();
        for j in 0..spokes {
            ring.push(EdgeId(edges.len()));
            edges.push((vid(i, j), vid(i, (j + 1) % spokes)));
        }
        ring_edges.push(ring);
    }
    let graph = PlaneGraph::from_straight_line(coords, &edges)?;
    Ok(Spiderweb {
        rings,
        spokes,
        graph,
        ring_edges,
        spoke_edges,
    })
}
