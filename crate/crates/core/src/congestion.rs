//! Edge congestion of a spanning tree, dual trees and branch decompositions.
//!
//! For a tree edge `e`, its congestion is the number of graph edges joining
//! the two components of `T - e`. Two independent routes compute it:
//! [`edge_congestion_cuts`] charges every non-tree edge to the tree path
//! between its endpoints, and [`edge_congestion_dual`] measures the
//! fundamental cycle of `e*` in the dual tree.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{EdgeId, FaceId, PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("a spanning tree needs {expected} edges, got {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("edge {0} closes a cycle")]
    ContainsCycle(EdgeId),
    #[error("tree does not span the graph")]
    NotSpanning,
}

/// A spanning tree, rooted at vertex 0 for path queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<EdgeId>,
    in_tree: Vec<bool>,
    parent: Vec<Option<(VertexId, EdgeId)>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    /// Tree edges in ascending id order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.in_tree.get(e.0).copied().unwrap_or(false)
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Parent of `v` towards vertex 0 and the connecting edge.
    pub fn parent(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        self.parent[v.0]
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v.0]
    }

    /// Tree edges on the path between `u` and `v`.
    pub fn path_edges(&self, mut u: VertexId, mut v: VertexId) -> Vec<EdgeId> {
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[u.0] > self.depth[v.0] {
            let (p, e) = self.parent[u.0].unwrap();
            up.push(e);
            u = p;
        }
        while self.depth[v.0] > self.depth[u.0] {
            let (p, e) = self.parent[v.0].unwrap();
            down.push(e);
            v = p;
        }
        while u != v {
            let (pu, eu) = self.parent[u.0].unwrap();
            let (pv, ev) = self.parent[v.0].unwrap();
            up.push(eu);
            down.push(ev);
            u = pu;
            v = pv;
        }
        up.extend(down.into_iter().rev());
        up
    }

    fn belongs_to(&self, g: &PlaneGraph) -> Result<(), TreeError> {
        if self.parent.len() != g.vertex_count() || self.in_tree.len() != g.edge_count() {
            return Err(TreeError::NotSpanning);
        }
        Ok(())
    }
}

/// Validates an edge set as a spanning tree of `g`. Duplicate ids are
/// counted once.
pub fn verify_tree(
    g: &PlaneGraph,
    edges: impl IntoIterator<Item = EdgeId>,
) -> Result<SpanningTree, TreeError> {
    let mut in_tree = vec![false; g.edge_count()];
    for e in edges {
        if e.0 >= g.edge_count() {
            return Err(TreeError::UnknownEdge(e));
        }
        in_tree[e.0] = true;
    }
    let chosen: Vec<EdgeId> = (0..in_tree.len())
        .filter(|&i| in_tree[i])
        .map(EdgeId)
        .collect();
    let n = g.vertex_count();
    if chosen.len() != n - 1 {
        return Err(TreeError::WrongCardinality {
            expected: n - 1,
            found: chosen.len(),
        });
    }
    let mut sets = DisjointSets::new(n);
    for &e in &chosen {
        let (u, v) = g.endpoints(e);
        if !sets.union(u.0, v.0) {
            return Err(TreeError::ContainsCycle(e));
        }
    }

    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([VertexId(0)]);
    while let Some(v) = queue.pop_front() {
        for (w, e) in g.neighbors(v) {
            if in_tree[e.0] && depth[w.0] == usize::MAX {
                depth[w.0] = depth[v.0] + 1;
                parent[w.0] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    if depth.contains(&usize::MAX) {
        return Err(TreeError::NotSpanning);
    }
    Ok(SpanningTree {
        edges: chosen,
        in_tree,
        parent,
        depth,
    })
}

/// The dual tree `T♯`: duals of the edges not in `T`, rooted at the outer
/// face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    edges: Vec<EdgeId>,
    parent: Vec<Option<(FaceId, EdgeId)>>,
    depth: Vec<usize>,
    root: FaceId,
}

impl DualTree {
    /// Dual edges in ascending id order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn root(&self) -> FaceId {
        self.root
    }

    pub fn parent(&self, f: FaceId) -> Option<(FaceId, EdgeId)> {
        self.parent[f.0]
    }

    pub fn depth(&self, f: FaceId) -> usize {
        self.depth[f.0]
    }

    /// Number of edges on the tree path between two faces.
    pub fn distance(&self, mut a: FaceId, mut b: FaceId) -> usize {
        let mut steps = 0;
        while self.depth[a.0] > self.depth[b.0] {
            a = self.parent[a.0].unwrap().0;
            steps += 1;
        }
        while self.depth[b.0] > self.depth[a.0] {
            b = self.parent[b.0].unwrap().0;
            steps += 1;
        }
        while a != b {
            a = self.parent[a.0].unwrap().0;
            b = self.parent[b.0].unwrap().0;
            steps += 2;
        }
        steps
    }
}

pub fn dual_tree(g: &PlaneGraph, t: &SpanningTree) -> Result<DualTree, TreeError> {
    t.belongs_to(g)?;
    let dual = g.dual();
    let edges: Vec<EdgeId> = g.edges().filter(|&e| !t.contains(e)).collect();
    let faces = g.face_count();
    let root = g.outer_face();
    let mut parent = vec![None; faces];
    let mut depth = vec![usize::MAX; faces];
    depth[root.0] = 0;
    let mut queue = VecDeque::from([root]);
    let mut reached = 1;
    while let Some(f) = queue.pop_front() {
        for &(h, e) in dual.neighbors(f) {
            if t.contains(e) || h == f {
                continue;
            }
            if depth[h.0] == usize::MAX {
                depth[h.0] = depth[f.0] + 1;
                parent[h.0] = Some((f, e));
                reached += 1;
                queue.push_back(h);
            }
        }
    }
    // Complementation yields F - 1 edges; spanning with that count means
    // acyclic. Both hold for every valid embedding.
    if reached != faces || edges.len() != faces - 1 {
        return Err(TreeError::NotSpanning);
    }
    Ok(DualTree {
        edges,
        parent,
        depth,
        root,
    })
}

/// Per-edge congestion of a spanning tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongestionReport {
    #[serde(rename = "max")]
    pub max_congestion: usize,
    pub argmax_edge: Option<EdgeId>,
    pub per_edge: BTreeMap<EdgeId, usize>,
}

impl CongestionReport {
    fn from_counts(t: &SpanningTree, counts: &[usize]) -> Self {
        let per_edge: BTreeMap<EdgeId, usize> =
            t.edges().iter().map(|&e| (e, counts[e.0])).collect();
        let mut best: Option<(EdgeId, usize)> = None;
        for (&e, &c) in &per_edge {
            if best.is_none_or(|(_, b)| c > b) {
                best = Some((e, c));
            }
        }
        CongestionReport {
            max_congestion: best.map_or(0, |(_, c)| c),
            argmax_edge: best.map(|(e, _)| e),
            per_edge,
        }
    }
}

/// Congestion through fundamental cycles in the primal graph.
pub fn edge_congestion_cuts(
    g: &PlaneGraph,
    t: &SpanningTree,
) -> Result<CongestionReport, TreeError> {
    t.belongs_to(g)?;
    let mut counts = vec![0usize; g.edge_count()];
    for &e in t.edges() {
        counts[e.0] = 1;
    }
    for e in g.edges().filter(|&e| !t.contains(e)) {
        let (u, v) = g.endpoints(e);
        for f in t.path_edges(u, v) {
            counts[f.0] += 1;
        }
    }
    Ok(CongestionReport::from_counts(t, &counts))
}

/// Congestion as the length of the cycle closed by `f*` in the dual tree.
pub fn edge_congestion_dual(
    g: &PlaneGraph,
    t: &SpanningTree,
) -> Result<CongestionReport, TreeError> {
    let tree = dual_tree(g, t)?;
    let mut counts = vec![0usize; g.edge_count()];
    for &f in t.edges() {
        let (a, b) = g.edge_faces(f);
        counts[f.0] = tree.distance(a, b) + 1;
    }
    Ok(CongestionReport::from_counts(t, &counts))
}

pub fn edge_congestion(g: &PlaneGraph, t: &SpanningTree) -> Result<usize, TreeError> {
    edge_congestion_cuts(g, t).map(|r| r.max_congestion)
}

/// Interior faces grouped by the outer edge through which their dual-tree
/// path leaves the exterior face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchDecomposition {
    pub assignment: BTreeMap<FaceId, EdgeId>,
    /// One entry per outer edge; empty when `e*` is not in the dual tree.
    pub branches: BTreeMap<EdgeId, Vec<FaceId>>,
}

impl BranchDecomposition {
    pub fn entrance(&self, f: FaceId) -> Option<EdgeId> {
        self.assignment.get(&f).copied()
    }
}

pub fn branch_decomposition(
    g: &PlaneGraph,
    t: &SpanningTree,
) -> Result<BranchDecomposition, TreeError> {
    let tree = dual_tree(g, t)?;
    let mut branches: BTreeMap<EdgeId, Vec<FaceId>> = g
        .outer_edges()
        .into_iter()
        .map(|e| (e, Vec::new()))
        .collect();
    let mut assignment = BTreeMap::new();
    for f in g.interior_faces() {
        let mut cur = f;
        let entrance = loop {
            let (p, e) = tree.parent(cur).expect("interior face below the root");
            if p == tree.root() {
                break e;
            }
            cur = p;
        };
        assignment.insert(f, entrance);
        branches.entry(entrance).or_default().push(f);
    }
    Ok(BranchDecomposition {
        assignment,
        branches,
    })
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PlaneGraph {
        let coords = (0..n)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / n as f64;
                [a.cos(), a.sin()]
            })
            .collect();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        PlaneGraph::from_straight_line(coords, &edges).unwrap()
    }

    fn ids(v: &[usize]) -> Vec<EdgeId> {
        v.iter().copied().map(EdgeId).collect()
    }

    #[test]
    fn c4_path_tree_has_congestion_two_everywhere() {
        let g = cycle(4);
        let t = verify_tree(&g, ids(&[0, 1, 2])).unwrap();
        let cuts = edge_congestion_cuts(&g, &t).unwrap();
        assert!(cuts.per_edge.values().all(|&c| c == 2));
        assert_eq!(cuts.max_congestion, 2);
        assert_eq!(cuts, edge_congestion_dual(&g, &t).unwrap());
    }

    #[test]
    fn triangle_tree_duals() {
        let g = cycle(3);
        let t = verify_tree(&g, ids(&[0, 1])).unwrap();
        let dt = dual_tree(&g, &t).unwrap();
        assert_eq!(dt.edges(), &[EdgeId(2)]);
        let (x, y) = g.edge_faces(EdgeId(2));
        assert!(x == g.outer_face() || y == g.outer_face());
        let report = edge_congestion_dual(&g, &t).unwrap();
        assert_eq!(
            report.per_edge.values().copied().collect::<Vec<_>>(),
            vec![2, 2]
        );

        let branches = branch_decomposition(&g, &t).unwrap();
        let inner = g.interior_faces().next().unwrap();
        assert_eq!(branches.entrance(inner), Some(EdgeId(2)));
        assert!(branches.branches[&EdgeId(0)].is_empty());
    }

    #[test]
    fn tree_graph_is_its_own_spanning_tree() {
        let g = PlaneGraph::from_straight_line(
            vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [1.0, 1.0]],
            &[(0, 1), (1, 2), (1, 3)],
        )
        .unwrap();
        let t = verify_tree(&g, g.edges()).unwrap();
        let report = edge_congestion_cuts(&g, &t).unwrap();
        assert_eq!(report.max_congestion, 1);
        assert_eq!(report, edge_congestion_dual(&g, &t).unwrap());
        assert!(dual_tree(&g, &t).unwrap().edges().is_empty());
        let branches = branch_decomposition(&g, &t).unwrap();
        assert!(branches.assignment.is_empty() && branches.branches.is_empty());
    }

    #[test]
    fn verify_tree_errors() {
        let g = cycle(4);
        assert_eq!(
            verify_tree(&g, ids(&[0, 1])).unwrap_err(),
            TreeError::WrongCardinality {
                expected: 3,
                found: 2
            }
        );
        assert_eq!(
            verify_tree(&g, ids(&[0, 9])).unwrap_err(),
            TreeError::UnknownEdge(EdgeId(9))
        );
        // Triangle plus pendant edge: three edges with a cycle.
        let h = PlaneGraph::from_straight_line(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [2.0, 0.0]],
            &[(0, 1), (1, 2), (2, 0), (1, 3)],
        )
        .unwrap();
        assert!(matches!(
            verify_tree(&h, ids(&[0, 1, 2])).unwrap_err(),
            TreeError::ContainsCycle(_)
        ));
        assert!(verify_tree(&h, ids(&[0, 1, 3])).is_ok());
    }

    #[test]
    fn tree_from_another_graph_is_rejected() {
        let t = verify_tree(&cycle(4), ids(&[0, 1, 2])).unwrap();
        assert_eq!(
            edge_congestion_cuts(&cycle(5), &t).unwrap_err(),
            TreeError::NotSpanning
        );
    }

    #[test]
    fn results_do_not_depend_on_root() {
        // The parent structure is rooted at 0; relabelling the cycle so a
        // different vertex is 0 must give the same per-edge congestion.
        let g = cycle(6);
        let t = verify_tree(&g, ids(&[0, 1, 2, 4, 5])).unwrap();
        let coords: Vec<[f64; 2]> = (0..6)
            .map(|i| {
                let a = std::f64::consts::TAU * ((i + 3) % 6) as f64 / 6.0;
                [a.cos(), a.sin()]
            })
            .collect();
        let edges: Vec<_> = (0..6).map(|i| ((i + 3) % 6, (i + 4) % 6)).collect();
        let h = PlaneGraph::from_straight_line(coords, &edges).unwrap();
        let s = verify_tree(&h, ids(&[0, 1, 2, 4, 5])).unwrap();
        assert_eq!(
            edge_congestion_cuts(&g, &t).unwrap(),
            edge_congestion_cuts(&h, &s).unwrap()
        );
    }
}
