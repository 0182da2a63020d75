//! Index tables, center-tail systems and the two dual bounds on `s(G)`.
//!
//! For an outer edge `e`, the index `i(F, e)` is the length of a shortest
//! path in the dual from the exterior face `O` to `F` whose first edge is
//! `e*`. Because such a path is simple it never returns to `O`, so it is one
//! step into the face `F_e` bordering `e` followed by a breadth-first search
//! in `G* - O`.
//!
//! A center-tail system yields the lower bound `CI(S) <= s(G)`; a
//! breadth-first tree of the dual rooted at `O` yields a spanning tree whose
//! congestion is at most `max(i(F) + i(F')) + 1` over adjacent faces.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::congestion::{edge_congestion_cuts, verify_tree, CongestionReport, SpanningTree};
use crate::plane_graph::{DualGraph, EdgeId, FaceId, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("edge {0} is not an outer edge")]
    NotOuterEdge(EdgeId),
    #[error("graph has no outer edges")]
    NoOuterEdges,
    #[error("no center-tail systems supplied")]
    EmptySystemList,
    #[error(transparent)]
    InvalidSystem(#[from] CtsError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CtsError {
    #[error("center is empty or does not span a connected subgraph of the dual")]
    CenterDisconnected,
    #[error("face {0} cannot be used here (unknown, duplicated or the exterior face)")]
    InvalidFace(FaceId),
    #[error("tail {0} is not a simple dual path starting in the center")]
    TailNotPath(usize),
    #[error("tail {0} does not end at the exterior face")]
    TailNotReachingO(usize),
    #[error("outer edge {0} has no opposite tail")]
    AssignmentIncomplete(EdgeId),
    #[error("edge {edge} is assigned tail {tail}, which is not an outer edge or not a tail")]
    InvalidAssignment { edge: EdgeId, tail: usize },
}

/// `i(F, e)` for one outer edge `e`; `None` marks faces that cannot be
/// reached (and the exterior face itself).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexTable {
    pub edge: EdgeId,
    pub values: Vec<Option<usize>>,
}

impl IndexTable {
    pub fn get(&self, f: FaceId) -> Option<usize> {
        self.values[f.0]
    }

    /// Finite values keyed by face id.
    pub fn to_map(&self) -> BTreeMap<FaceId, usize> {
        finite_map(&self.values)
    }
}

/// `i(F)`: the minimum of `i(F, e)` over outer edges. The exterior face has
/// value 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsoluteIndexTable {
    pub values: Vec<Option<usize>>,
}

impl AbsoluteIndexTable {
    pub fn get(&self, f: FaceId) -> Option<usize> {
        self.values[f.0]
    }

    pub fn to_map(&self) -> BTreeMap<FaceId, usize> {
        finite_map(&self.values)
    }
}

fn finite_map(values: &[Option<usize>]) -> BTreeMap<FaceId, usize> {
    values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (FaceId(i), v)))
        .collect()
}

/// Index table for a single outer edge.
pub fn index_table(g: &PlaneGraph, e: EdgeId) -> Result<IndexTable, BoundsError> {
    if e.0 >= g.edge_count() || !g.is_outer_edge(e) {
        return Err(BoundsError::NotOuterEdge(e));
    }
    Ok(index_table_in(g, &g.dual(), e))
}

fn index_table_in(g: &PlaneGraph, dual: &DualGraph, e: EdgeId) -> IndexTable {
    let (x, y) = g.edge_faces(e);
    let first = if x == g.outer_face() { y } else { x };
    let values = dual
        .distances_avoiding(first, Some(g.outer_face()))
        .into_iter()
        .map(|d| d.map(|d| d + 1))
        .collect();
    IndexTable { edge: e, values }
}

/// Index tables for every outer edge, keyed by edge.
pub fn index_tables(g: &PlaneGraph) -> BTreeMap<EdgeId, IndexTable> {
    let dual = g.dual();
    g.outer_edges()
        .into_iter()
        .map(|e| (e, index_table_in(g, &dual, e)))
        .collect()
}

pub fn absolute_index(g: &PlaneGraph) -> Result<AbsoluteIndexTable, BoundsError> {
    let tables = index_tables(g);
    if tables.is_empty() {
        return Err(BoundsError::NoOuterEdges);
    }
    let mut values: Vec<Option<usize>> = vec![None; g.face_count()];
    for table in tables.values() {
        for (slot, v) in values.iter_mut().zip(&table.values) {
            *slot = match (*slot, *v) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
    }
    values[g.outer_face().0] = Some(0);
    debug_assert_eq!(values, g.dual().distances(g.outer_face()));
    Ok(AbsoluteIndexTable { values })
}

/// Minimum of `i(F, e)` over a chosen subset of outer edges, for instance one
/// side of a triangular grid.
pub fn restricted_index(
    g: &PlaneGraph,
    edges: &[EdgeId],
) -> Result<AbsoluteIndexTable, BoundsError> {
    let dual = g.dual();
    let mut values: Vec<Option<usize>> = vec![None; g.face_count()];
    for &e in edges {
        if e.0 >= g.edge_count() || !g.is_outer_edge(e) {
            return Err(BoundsError::NotOuterEdge(e));
        }
        let table = index_table_in(g, &dual, e);
        for (slot, v) in values.iter_mut().zip(&table.values) {
            *slot = match (*slot, *v) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
    }
    Ok(AbsoluteIndexTable { values })
}

/// A center, tails running from the center to the exterior face, and an
/// opposite tail for every outer edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterTailSystem {
    pub center: Vec<FaceId>,
    /// Face sequences; each starts in the center and ends with the exterior
    /// face.
    pub tails: Vec<Vec<FaceId>>,
    /// Outer edge to index into `tails`.
    pub assignment: BTreeMap<EdgeId, usize>,
}

impl CenterTailSystem {
    /// The last face of a tail before the exterior face.
    pub fn tip(&self, tail: usize) -> FaceId {
        let t = &self.tails[tail];
        t[t.len() - 2]
    }

    pub fn opposite_tail(&self, e: EdgeId) -> Option<&[FaceId]> {
        self.assignment.get(&e).map(|&i| self.tails[i].as_slice())
    }

    pub fn validate(&self, g: &PlaneGraph) -> Result<(), CtsError> {
        validate_cts(g, self)
    }
}

pub fn validate_cts(g: &PlaneGraph, s: &CenterTailSystem) -> Result<(), CtsError> {
    let dual = g.dual();
    let outer = g.outer_face();
    let faces = g.face_count();

    if s.center.is_empty() {
        return Err(CtsError::CenterDisconnected);
    }
    let mut in_center = vec![false; faces];
    for &f in &s.center {
        if f.0 >= faces || f == outer || in_center[f.0] {
            return Err(CtsError::InvalidFace(f));
        }
        in_center[f.0] = true;
    }
    let mut reached = vec![false; faces];
    reached[s.center[0].0] = true;
    let mut queue = VecDeque::from([s.center[0]]);
    let mut count = 1;
    while let Some(f) = queue.pop_front() {
        for &(h, _) in dual.neighbors(f) {
            if in_center[h.0] && !reached[h.0] {
                reached[h.0] = true;
                count += 1;
                queue.push_back(h);
            }
        }
    }
    if count != s.center.len() {
        return Err(CtsError::CenterDisconnected);
    }

    for (i, tail) in s.tails.iter().enumerate() {
        if tail.last() != Some(&outer) {
            return Err(CtsError::TailNotReachingO(i));
        }
        if tail.len() < 2 || !in_center[tail[0].0] {
            return Err(CtsError::TailNotPath(i));
        }
        let mut seen = BTreeSet::new();
        for (j, &f) in tail.iter().enumerate() {
            if f.0 >= faces {
                return Err(CtsError::InvalidFace(f));
            }
            if f == outer && j + 1 != tail.len() {
                return Err(CtsError::TailNotReachingO(i));
            }
            if !seen.insert(f) {
                return Err(CtsError::TailNotPath(i));
            }
        }
        if tail.windows(2).any(|w| !dual.are_adjacent(w[0], w[1])) {
            return Err(CtsError::TailNotPath(i));
        }
    }

    for (&e, &tail) in &s.assignment {
        if e.0 >= g.edge_count() || !g.is_outer_edge(e) || tail >= s.tails.len() {
            return Err(CtsError::InvalidAssignment { edge: e, tail });
        }
    }
    if let Some(e) = g
        .outer_edges()
        .into_iter()
        .find(|e| !s.assignment.contains_key(e))
    {
        return Err(CtsError::AssignmentIncomplete(e));
    }
    Ok(())
}

/// Which of the three minima realized the indicator, with its arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "term", rename_all = "snake_case")]
pub enum IndicatorWitness {
    /// `i(F, f) + i(H, h) + 1` for adjacent center faces.
    CenterPair {
        face: FaceId,
        other: FaceId,
        edge: EdgeId,
        other_edge: EdgeId,
    },
    /// `i(t(e), e) + 1`.
    Tip { edge: EdgeId, tip: FaceId },
    /// `i(F, e) + i(F', e') + 1` for consecutive faces on `N(e)`.
    TailStep {
        edge: EdgeId,
        face: FaceId,
        next: FaceId,
        other_edge: EdgeId,
    },
}

impl IndicatorWitness {
    pub fn term(&self) -> u8 {
        match self {
            IndicatorWitness::CenterPair { .. } => 1,
            IndicatorWitness::Tip { .. } => 2,
            IndicatorWitness::TailStep { .. } => 3,
        }
    }
}

/// `CI(S)` together with the value of each of its three minima (`None` is
/// infinity).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongestionIndicator {
    pub value: Option<usize>,
    pub minima: [Option<usize>; 3],
    pub witness: Option<IndicatorWitness>,
}

impl CongestionIndicator {
    /// 1, 2 or 3: the first minimum attaining the value.
    pub fn binding_term(&self) -> Option<u8> {
        self.witness.map(|w| w.term())
    }
}

fn sum(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    Some(a? + b? + 1)
}

fn improve<W>(best: &mut Option<(usize, W)>, value: Option<usize>, witness: impl FnOnce() -> W) {
    if let Some(v) = value {
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            *best = Some((v, witness()));
        }
    }
}

pub fn congestion_indicator(
    g: &PlaneGraph,
    s: &CenterTailSystem,
) -> Result<CongestionIndicator, CtsError> {
    validate_cts(g, s)?;
    let dual = g.dual();
    let tables = index_tables(g);
    let outer_edges: Vec<EdgeId> = tables.keys().copied().collect();
    let i = |f: FaceId, e: EdgeId| tables[&e].get(f);

    // (1) adjacent center faces, distinct outer edges.
    let mut first: Option<(usize, IndicatorWitness)> = None;
    if s.center.len() > 1 {
        for &face in &s.center {
            for &other in &s.center {
                if !dual.are_adjacent(face, other) {
                    continue;
                }
                for &edge in &outer_edges {
                    for &other_edge in &outer_edges {
                        if edge == other_edge {
                            continue;
                        }
                        improve(&mut first, sum(i(face, edge), i(other, other_edge)), || {
                            IndicatorWitness::CenterPair {
                                face,
                                other,
                                edge,
                                other_edge,
                            }
                        });
                    }
                }
            }
        }
    }

    // (2) tips of opposite tails.
    let mut second: Option<(usize, IndicatorWitness)> = None;
    for (&edge, &tail) in &s.assignment {
        let tip = s.tip(tail);
        improve(&mut second, i(tip, edge).map(|v| v + 1), || {
            IndicatorWitness::Tip { edge, tip }
        });
    }

    // (3) consecutive faces along the opposite tail, from the center towards
    // the tip.
    let mut third: Option<(usize, IndicatorWitness)> = None;
    for (&edge, &tail) in &s.assignment {
        let faces = &s.tails[tail];
        let interior = &faces[..faces.len() - 1];
        for w in interior.windows(2) {
            let (face, next) = (w[0], w[1]);
            for &other_edge in &outer_edges {
                if other_edge == edge {
                    continue;
                }
                improve(&mut third, sum(i(face, edge), i(next, other_edge)), || {
                    IndicatorWitness::TailStep {
                        edge,
                        face,
                        next,
                        other_edge,
                    }
                });
            }
        }
    }

    let minima = [
        first.as_ref().map(|x| x.0),
        second.as_ref().map(|x| x.0),
        third.as_ref().map(|x| x.0),
    ];
    let mut best: Option<(usize, IndicatorWitness)> = None;
    for candidate in [first, second, third].into_iter().flatten() {
        if best.as_ref().is_none_or(|(b, _)| candidate.0 < *b) {
            best = Some(candidate);
        }
    }
    Ok(CongestionIndicator {
        value: best.map(|b| b.0),
        minima,
        witness: best.map(|b| b.1),
    })
}

/// The largest indicator over several systems. Infinite indicators are
/// skipped; the result is a certified lower bound on `s(G)`.
pub fn best_lower_bound(
    g: &PlaneGraph,
    systems: &[CenterTailSystem],
) -> Result<usize, BoundsError> {
    if systems.is_empty() {
        return Err(BoundsError::EmptySystemList);
    }
    let mut best = 0;
    for s in systems {
        if let Some(v) = congestion_indicator(g, s)?.value {
            best = best.max(v);
        }
    }
    Ok(best)
}

/// The spanning tree complementary to a breadth-first dual tree, with its
/// congestion and the adjacent-face bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsUpperBound {
    pub tree: SpanningTree,
    /// Dual edges of the breadth-first tree.
    pub dual_edges: Vec<EdgeId>,
    pub report: CongestionReport,
    pub ec: usize,
    pub bound: usize,
}

/// Breadth-first search over the dual from the exterior face. A face takes
/// its parent among the previous level with the smallest face id, through
/// the smallest connecting edge id.
pub fn bfs_dual_tree(g: &PlaneGraph) -> Vec<EdgeId> {
    let dual = g.dual();
    let dist = dual.distances(g.outer_face());
    let mut edges = Vec::new();
    for f in g.interior_faces() {
        let level = dist[f.0].expect("dual of a connected plane graph is connected");
        let parent = dual
            .neighbors(f)
            .iter()
            .filter(|&&(h, _)| dist[h.0] == Some(level - 1))
            .min_by_key(|&&(h, e)| (h, e))
            .expect("a face at positive level has a parent");
        edges.push(parent.1);
    }
    edges.sort();
    edges
}

pub fn bfs_upper_bound(g: &PlaneGraph) -> BfsUpperBound {
    let dual_edges = bfs_dual_tree(g);
    let tree = verify_tree(
        g,
        g.edges().filter(|e| dual_edges.binary_search(e).is_err()),
    )
    .expect("complement of a dual spanning tree is a spanning tree");
    let report = edge_congestion_cuts(g, &tree).expect("tree belongs to the graph");
    let index = g.dual().distances(g.outer_face());
    let bound = g
        .edges()
        .filter_map(|e| {
            let (a, b) = g.edge_faces(e);
            (a != b).then(|| index[a.0].unwrap() + index[b.0].unwrap() + 1)
        })
        .max()
        .unwrap_or(1);
    BfsUpperBound {
        ec: report.max_congestion,
        tree,
        dual_edges,
        report,
        bound,
    }
}
