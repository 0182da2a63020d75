//! Plane multigraphs given by a rotation system.
//!
//! Every edge contributes two darts (directed half-edges) that are each
//! other's twin. The rotation at a vertex lists its outgoing darts in
//! counterclockwise order. Faces are traced with the rule
//! `next(d) = successor of twin(d) in the rotation at head(d)`, so a traced
//! walk keeps its face on the right-hand side. For straight-line drawings
//! this means bounded faces are walked clockwise and the unbounded face
//! counterclockwise.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        #[serde(transparent)]
        pub struct $name(pub usize);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

id_type!(
    /// A vertex of the primal graph.
    VertexId
);
id_type!(
    /// An edge of the primal graph. The dual edge `e*` carries the same id.
    EdgeId
);
id_type!(
    /// A directed half-edge.
    Dart
);
id_type!(
    /// A face of the primal graph, equivalently a vertex of the dual.
    FaceId
);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no edges")]
    Empty,
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("rotation system is not a planar embedding: V - E + F = {vertices} - {edges} + {faces} != 2")]
    NotPlanarEmbedding {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("coordinate list has {found} entries, expected {expected}")]
    Coordinates { expected: usize, found: usize },
}

/// A face together with its boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub boundary_walk: Vec<Dart>,
    pub is_outer: bool,
}

/// A connected multigraph with a fixed embedding in the plane.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    vertex_count: usize,
    edge_darts: Vec<[Dart; 2]>,
    dart_tail: Vec<VertexId>,
    dart_edge: Vec<EdgeId>,
    twin: Vec<Dart>,
    rotation: Vec<Vec<Dart>>,
    rotation_pos: Vec<usize>,
    outer_dart: Dart,
    coords: Option<Vec<[f64; 2]>>,
    faces: Vec<Face>,
    dart_face: Vec<FaceId>,
    outer_face: FaceId,
}

impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        // Faces are derived data.
        self.vertex_count == other.vertex_count
            && self.edge_darts == other.edge_darts
            && self.rotation == other.rotation
            && self.outer_dart == other.outer_dart
            && self.coords == other.coords
    }
}

impl PlaneGraph {
    /// Builds and validates a plane graph.
    ///
    /// `edges[e]` holds the two darts of edge `e`; dart ids must cover
    /// `0..2E` exactly once. The tail of each dart is the vertex whose
    /// rotation lists it.
    pub fn new(
        vertex_count: usize,
        edges: Vec<[Dart; 2]>,
        rotation: Vec<Vec<Dart>>,
        outer_dart: Dart,
    ) -> Result<Self, GraphError> {
        let edge_count = edges.len();
        if edge_count == 0 {
            return Err(GraphError::Empty);
        }
        let dart_count = 2 * edge_count;
        if rotation.len() != vertex_count {
            return Err(GraphError::InvalidRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                vertex_count
            )));
        }

        let mut dart_edge = vec![None; dart_count];
        let mut twin = vec![Dart(0); dart_count];
        for (e, &[a, b]) in edges.iter().enumerate() {
            for d in [a, b] {
                if d.0 >= dart_count {
                    return Err(GraphError::InvalidRotation(format!(
                        "dart {d} out of range 0..{dart_count}"
                    )));
                }
                if dart_edge[d.0].is_some() {
                    return Err(GraphError::InvalidRotation(format!(
                        "dart {d} belongs to more than one edge"
                    )));
                }
                dart_edge[d.0] = Some(EdgeId(e));
            }
            twin[a.0] = b;
            twin[b.0] = a;
        }
        let dart_edge: Vec<EdgeId> = dart_edge.into_iter().map(|e| e.unwrap()).collect();

        let mut dart_tail = vec![None; dart_count];
        let mut rotation_pos = vec![0; dart_count];
        for (v, darts) in rotation.iter().enumerate() {
            for (pos, &d) in darts.iter().enumerate() {
                if d.0 >= dart_count {
                    return Err(GraphError::InvalidRotation(format!(
                        "dart {d} at vertex {v} out of range"
                    )));
                }
                if dart_tail[d.0].is_some() {
                    return Err(GraphError::InvalidRotation(format!(
                        "dart {d} appears twice in the rotation system"
                    )));
                }
                dart_tail[d.0] = Some(VertexId(v));
                rotation_pos[d.0] = pos;
            }
        }
        let mut tails = Vec::with_capacity(dart_count);
        for (d, t) in dart_tail.into_iter().enumerate() {
            match t {
                Some(v) => tails.push(v),
                None => {
                    return Err(GraphError::InvalidRotation(format!(
                        "dart {d} is missing from every rotation list"
                    )))
                }
            }
        }
        if outer_dart.0 >= dart_count {
            return Err(GraphError::InvalidRotation(format!(
                "outer dart {outer_dart} out of range"
            )));
        }

        // Connectivity over vertices.
        let mut seen = vec![false; vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &d in &rotation[v] {
                let w = tails[twin[d.0].0].0;
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != vertex_count {
            return Err(GraphError::NotConnected);
        }

        let mut graph = PlaneGraph {
            vertex_count,
            edge_darts: edges,
            dart_tail: tails,
            dart_edge,
            twin,
            rotation,
            rotation_pos,
            outer_dart,
            coords: None,
            faces: Vec::new(),
            dart_face: Vec::new(),
            outer_face: FaceId(0),
        };
        graph.trace();

        let faces = graph.faces.len();
        if vertex_count + faces != edge_count + 2 {
            return Err(GraphError::NotPlanarEmbedding {
                vertices: vertex_count,
                edges: edge_count,
                faces,
            });
        }
        Ok(graph)
    }

    /// Embeds a straight-line drawing: rotations come from sorting each
    /// vertex's darts by angle, and the unbounded face is the one whose walk
    /// has positive signed area. Edge `i` gets darts `2i` (u to v) and
    /// `2i + 1`.
    pub fn from_straight_line(
        coords: Vec<[f64; 2]>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let vertex_count = coords.len();
        let mut rotation: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); vertex_count];
        let mut darts = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count || u == v {
                return Err(GraphError::InvalidRotation(format!(
                    "segment {i} has invalid endpoints ({u}, {v})"
                )));
            }
            let (a, b) = (Dart(2 * i), Dart(2 * i + 1));
            let angle = |from: usize, to: usize| {
                (coords[to][1] - coords[from][1]).atan2(coords[to][0] - coords[from][0])
            };
            rotation[u].push((angle(u, v), a));
            rotation[v].push((angle(v, u), b));
            darts.push([a, b]);
        }
        let rotation: Vec<Vec<Dart>> = rotation
            .into_iter()
            .map(|mut r| {
                r.sort_by(|x, y| x.0.total_cmp(&y.0));
                r.into_iter().map(|(_, d)| d).collect()
            })
            .collect();

        let provisional = PlaneGraph::new(vertex_count, darts.clone(), rotation.clone(), Dart(0))?;
        let area = |face: &Face| -> f64 {
            face.boundary_walk
                .iter()
                .map(|&d| {
                    let p = coords[provisional.tail(d).0];
                    let q = coords[provisional.head(d).0];
                    p[0] * q[1] - q[0] * p[1]
                })
                .sum::<f64>()
        };
        let outer = provisional
            .faces
            .iter()
            .max_by(|x, y| area(x).total_cmp(&area(y)))
            .expect("at least one face");
        let outer_dart = outer.boundary_walk[0];
        let mut graph = PlaneGraph::new(vertex_count, darts, rotation, outer_dart)?;
        graph.coords = Some(coords);
        Ok(graph)
    }

    /// Attaches drawing coordinates (used only for rendering).
    pub fn with_coords(mut self, coords: Vec<[f64; 2]>) -> Result<Self, GraphError> {
        if coords.len() != self.vertex_count {
            return Err(GraphError::Coordinates {
                expected: self.vertex_count,
                found: coords.len(),
            });
        }
        self.coords = Some(coords);
        Ok(self)
    }

    fn trace(&mut self) {
        let dart_count = self.twin.len();
        let mut dart_face = vec![usize::MAX; dart_count];
        let mut faces = Vec::new();
        for start in 0..dart_count {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = Dart(start);
            loop {
                dart_face[d.0] = id;
                walk.push(d);
                d = self.next_in_face(d);
                if d.0 == start {
                    break;
                }
            }
            faces.push(Face {
                id: FaceId(id),
                boundary_walk: walk,
                is_outer: false,
            });
        }
        let outer = dart_face[self.outer_dart.0];
        faces[outer].is_outer = true;
        self.outer_face = FaceId(outer);
        self.dart_face = dart_face.into_iter().map(FaceId).collect();
        self.faces = faces;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_count()).map(EdgeId)
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d.0]
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        self.dart_tail[d.0]
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.dart_tail[self.twin[d.0].0]
    }

    pub fn edge_of(&self, d: Dart) -> EdgeId {
        self.dart_edge[d.0]
    }

    pub fn darts(&self, e: EdgeId) -> [Dart; 2] {
        self.edge_darts[e.0]
    }

    /// Endpoints of `e` in the order of its two darts' tails.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, b] = self.edge_darts[e.0];
        (self.tail(a), self.tail(b))
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v.0]
    }

    pub fn rotation_successor(&self, d: Dart) -> Dart {
        let ring = &self.rotation[self.tail(d).0];
        ring[(self.rotation_pos[d.0] + 1) % ring.len()]
    }

    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.rotation_successor(self.twin(d))
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer_dart
    }

    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    /// Faces in dart-scan order: face ids are assigned by the smallest dart
    /// on each walk.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        self.dart_face[d.0]
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    /// Ids of the bounded faces, ascending.
    pub fn interior_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len())
            .map(FaceId)
            .filter(move |&f| f != self.outer_face)
    }

    /// The faces on the two sides of `e` (equal for a bridge).
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        let [a, b] = self.edge_darts[e.0];
        (self.face_of(a), self.face_of(b))
    }

    /// Vertices of a face's boundary walk, in walk order.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f.0]
            .boundary_walk
            .iter()
            .map(|&d| self.tail(d))
            .collect()
    }

    /// Edges that separate the exterior face from a bounded face.
    pub fn outer_edges(&self) -> Vec<EdgeId> {
        self.edges()
            .filter(|&e| {
                let (x, y) = self.edge_faces(e);
                x != y && (x == self.outer_face || y == self.outer_face)
            })
            .collect()
    }

    pub fn is_outer_edge(&self, e: EdgeId) -> bool {
        let (x, y) = self.edge_faces(e);
        x != y && (x == self.outer_face || y == self.outer_face)
    }

    /// One `(face, face, edge)` triple per edge.
    pub fn face_adjacency(&self) -> Vec<(FaceId, FaceId, EdgeId)> {
        self.edges()
            .map(|e| {
                let (x, y) = self.edge_faces(e);
                (x, y, e)
            })
            .collect()
    }

    /// Incident `(neighbor, edge)` pairs of `v` in rotation order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.rotation[v.0]
            .iter()
            .map(move |&d| (self.head(d), self.edge_of(d)))
    }

    pub fn dual(&self) -> DualGraph {
        let face_count = self.faces.len();
        let mut adjacency = vec![Vec::new(); face_count];
        let mut ends = Vec::with_capacity(self.edge_count());
        for e in self.edges() {
            let (x, y) = self.edge_faces(e);
            ends.push((x, y));
            adjacency[x.0].push((y, e));
            if x != y {
                adjacency[y.0].push((x, e));
            }
        }
        DualGraph {
            outer: self.outer_face,
            ends,
            adjacency,
        }
    }

    /// Finds an orientation-preserving isomorphism of embedded graphs that
    /// carries `self` onto `other`, outer face to outer face.
    pub fn embedded_isomorphism(&self, other: &PlaneGraph) -> Option<Isomorphism> {
        if self.vertex_count != other.vertex_count
            || self.edge_count() != other.edge_count()
            || self.face_count() != other.face_count()
        {
            return None;
        }
        let start = self.outer_dart;
        let targets: Vec<Dart> = other.faces[other.outer_face.0].boundary_walk.clone();
        targets
            .into_iter()
            .find_map(|image| self.try_extend(other, start, image))
    }

    fn try_extend(&self, other: &PlaneGraph, start: Dart, image: Dart) -> Option<Isomorphism> {
        let n = self.dart_count();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut queue = VecDeque::new();
        map[start.0] = image.0;
        used[image.0] = true;
        queue.push_back(start);
        while let Some(d) = queue.pop_front() {
            let md = Dart(map[d.0]);
            for (x, y) in [
                (self.twin(d), other.twin(md)),
                (self.rotation_successor(d), other.rotation_successor(md)),
            ] {
                if map[x.0] == usize::MAX {
                    if used[y.0] {
                        return None;
                    }
                    map[x.0] = y.0;
                    used[y.0] = true;
                    queue.push_back(x);
                } else if map[x.0] != y.0 {
                    return None;
                }
            }
        }
        let mut vertices = vec![usize::MAX; self.vertex_count];
        for (d, &image) in map.iter().enumerate() {
            let v = self.dart_tail[d].0;
            let w = other.dart_tail[image].0;
            if vertices[v] == usize::MAX {
                vertices[v] = w;
            } else if vertices[v] != w {
                return None;
            }
        }
        if other.face_of(Dart(map[self.outer_dart.0])) != other.outer_face {
            return None;
        }
        let darts: Vec<Dart> = map.into_iter().map(Dart).collect();
        let edges = self
            .edges()
            .map(|e| other.edge_of(darts[self.edge_darts[e.0][0].0]))
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|f| other.face_of(darts[f.boundary_walk[0].0]))
            .collect();
        Some(Isomorphism {
            vertices: vertices.into_iter().map(VertexId).collect(),
            darts,
            edges,
            faces,
        })
    }
}

/// Element maps of an embedded-graph isomorphism, indexed by source id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: Vec<VertexId>,
    pub darts: Vec<Dart>,
    pub edges: Vec<EdgeId>,
    pub faces: Vec<FaceId>,
}

/// The dual multigraph. Its vertices are the faces of the primal graph and
/// the dual edge `e*` shares the id of the primal edge `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    outer: FaceId,
    ends: Vec<(FaceId, FaceId)>,
    adjacency: Vec<Vec<(FaceId, EdgeId)>>,
}

impl DualGraph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    /// The dual vertex of the exterior face.
    pub fn outer(&self) -> FaceId {
        self.outer
    }

    /// Faces joined by `e*`; equal when `e` is a bridge.
    pub fn endpoints(&self, e: EdgeId) -> (FaceId, FaceId) {
        self.ends[e.0]
    }

    /// `(neighbor, dual edge)` pairs in ascending edge order. A loop is
    /// listed once.
    pub fn neighbors(&self, f: FaceId) -> &[(FaceId, EdgeId)] {
        &self.adjacency[f.0]
    }

    pub fn are_adjacent(&self, f: FaceId, h: FaceId) -> bool {
        f != h && self.adjacency[f.0].iter().any(|&(x, _)| x == h)
    }

    /// Breadth-first distances from `source`, skipping `blocked` faces.
    pub fn distances_avoiding(
        &self,
        source: FaceId,
        blocked: Option<FaceId>,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source.0] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(f) = queue.pop_front() {
            let next = dist[f.0].unwrap() + 1;
            for &(h, _) in &self.adjacency[f.0] {
                if Some(h) == blocked || dist[h.0].is_some() {
                    continue;
                }
                dist[h.0] = Some(next);
                queue.push_back(h);
            }
        }
        dist
    }

    pub fn distances(&self, source: FaceId) -> Vec<Option<usize>> {
        self.distances_avoiding(source, None)
    }

    pub fn is_connected(&self) -> bool {
        self.distances(self.outer).iter().all(Option::is_some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        PlaneGraph::from_straight_line(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            &[(0, 1), (1, 2), (2, 0)],
        )
        .unwrap()
    }

    fn path3() -> PlaneGraph {
        PlaneGraph::from_straight_line(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]], &[(0, 1), (1, 2)])
            .unwrap()
    }

    #[test]
    fn triangle_has_two_faces_of_length_three() {
        let g = triangle();
        assert_eq!(g.face_count(), 2);
        assert!(g.faces().iter().all(|f| f.boundary_walk.len() == 3));
        assert_eq!(g.faces().iter().filter(|f| f.is_outer).count(), 1);
        assert_eq!(g.outer_edges().len(), 3);
    }

    #[test]
    fn outer_walk_is_counterclockwise() {
        let g = triangle();
        let outer = g.face(g.outer_face());
        // 0 -> 1 -> 2 is counterclockwise for this drawing.
        let verts = g.face_vertices(outer.id);
        let i = verts.iter().position(|&v| v == VertexId(0)).unwrap();
        assert_eq!(verts[(i + 1) % 3], VertexId(1));
    }

    #[test]
    fn path_has_one_face_and_no_outer_edges() {
        let g = path3();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face(FaceId(0)).boundary_walk.len(), 4);
        assert!(g.outer_edges().is_empty());
        let dual = g.dual();
        assert_eq!(dual.vertex_count(), 1);
        assert_eq!(dual.edge_count(), 2);
        assert!(g.face_adjacency().iter().all(|&(x, y, _)| x == y));
    }

    #[test]
    fn triangle_dual_is_a_triple_edge() {
        let g = triangle();
        let dual = g.dual();
        assert_eq!(dual.vertex_count(), 2);
        assert_eq!(dual.edge_count(), 3);
        for e in g.edges() {
            let (x, y) = dual.endpoints(e);
            assert_ne!(x, y);
        }
        let inner = g.interior_faces().next().unwrap();
        assert_eq!(dual.neighbors(inner).len(), 3);
    }

    #[test]
    fn duplicate_dart_is_rejected() {
        let edges = vec![[Dart(0), Dart(1)], [Dart(2), Dart(3)], [Dart(4), Dart(5)]];
        let rotation = vec![
            vec![Dart(0), Dart(5)],
            vec![Dart(1), Dart(2), Dart(0)],
            vec![Dart(3), Dart(4)],
        ];
        let err = PlaneGraph::new(3, edges, rotation, Dart(0)).unwrap_err();
        assert!(matches!(err, GraphError::InvalidRotation(_)), "{err}");
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let edges = vec![[Dart(0), Dart(1)]];
        let rotation = vec![vec![Dart(0)], vec![Dart(1)], vec![]];
        assert_eq!(
            PlaneGraph::new(3, edges, rotation, Dart(0)).unwrap_err(),
            GraphError::NotConnected
        );
    }

    #[test]
    fn non_planar_rotation_fails_euler() {
        // K4 drawn planarly, then two darts swapped at one vertex so the
        // traced surface has genus one.
        let g = PlaneGraph::from_straight_line(
            vec![[0.0, 0.0], [4.0, 0.0], [2.0, 4.0], [2.0, 1.0]],
            &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(g.face_count(), 4);
        let mut rotation: Vec<Vec<Dart>> =
            (0..4).map(|v| g.rotation(VertexId(v)).to_vec()).collect();
        rotation[3].swap(0, 1);
        let edges = g.edges().map(|e| g.darts(e)).collect();
        let err = PlaneGraph::new(4, edges, rotation, Dart(0)).unwrap_err();
        assert!(
            matches!(err, GraphError::NotPlanarEmbedding { .. }),
            "{err}"
        );
    }

    #[test]
    fn loops_and_parallel_edges_are_supported() {
        // Two vertices joined by two parallel edges, plus a loop at vertex 0
        // sitting inside the outer face.
        let edges = vec![[Dart(0), Dart(1)], [Dart(2), Dart(3)], [Dart(4), Dart(5)]];
        let rotation = vec![
            vec![Dart(0), Dart(4), Dart(5), Dart(2)],
            vec![Dart(3), Dart(1)],
        ];
        let g = PlaneGraph::new(2, edges, rotation, Dart(0)).unwrap();
        assert_eq!(g.face_count(), 3);
        assert_eq!(g.dual().edge_count(), 3);
    }

    #[test]
    fn isomorphism_finds_relabelled_copy() {
        let g = triangle();
        let h = PlaneGraph::from_straight_line(
            vec![[0.0, 1.0], [0.0, 0.0], [1.0, 0.0]],
            &[(2, 0), (1, 2), (0, 1)],
        )
        .unwrap();
        let iso = g.embedded_isomorphism(&h).unwrap();
        for e in g.edges() {
            let (u, v) = g.endpoints(e);
            let (x, y) = h.endpoints(iso.edges[e.0]);
            let mapped = (iso.vertices[u.0], iso.vertices[v.0]);
            assert!(mapped == (x, y) || mapped == (y, x));
        }
        assert_eq!(iso.faces[g.outer_face().0], h.outer_face());
    }
}
