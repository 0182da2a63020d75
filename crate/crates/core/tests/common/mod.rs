//! Reference implementations used as oracles. They share nothing with the
//! library beyond reading the graph's endpoints and face incidences.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use planar_stc::{EdgeId, FaceId, PlaneGraph};

/// Per-edge congestion by 2-colouring: drop the tree edge, colour the two
/// halves of the tree, count bichromatic graph edges.
pub fn cut_oracle(g: &PlaneGraph, tree: &[EdgeId]) -> BTreeMap<EdgeId, usize> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &e in tree {
        let (u, v) = g.endpoints(e);
        adj[u.0].push((v.0, e));
        adj[v.0].push((u.0, e));
    }
    let mut out = BTreeMap::new();
    for &cut in tree {
        let mut colour = vec![false; n];
        let start = g.endpoints(cut).0 .0;
        colour[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, e) in &adj[v] {
                if e != cut && !colour[w] {
                    colour[w] = true;
                    stack.push(w);
                }
            }
        }
        let crossing = g
            .edges()
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                colour[u.0] != colour[v.0]
            })
            .count();
        out.insert(cut, crossing);
    }
    out
}

pub fn max_congestion(g: &PlaneGraph, tree: &[EdgeId]) -> usize {
    cut_oracle(g, tree).values().copied().max().unwrap_or(0)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// `s(G)` by trying every set of `V - 1` edges.
pub fn brute_force_stc(g: &PlaneGraph) -> usize {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut best = usize::MAX;
    let mut chosen = Vec::with_capacity(n - 1);
    fn go(
        g: &PlaneGraph,
        next: usize,
        m: usize,
        need: usize,
        chosen: &mut Vec<EdgeId>,
        best: &mut usize,
    ) {
        if chosen.len() == need {
            let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
            for &e in chosen.iter() {
                let (u, v) = g.endpoints(e);
                let (a, b) = (find(&mut parent, u.0), find(&mut parent, v.0));
                if a == b {
                    return;
                }
                parent[a] = b;
            }
            *best = (*best).min(max_congestion(g, chosen));
            return;
        }
        if m - next < need - chosen.len() {
            return;
        }
        chosen.push(EdgeId(next));
        go(g, next + 1, m, need, chosen, best);
        chosen.pop();
        go(g, next + 1, m, need, chosen, best);
    }
    go(g, 0, m, n - 1, &mut chosen, &mut best);
    best
}

/// Face adjacency through the edges of `g`.
fn face_neighbours(g: &PlaneGraph) -> Vec<Vec<FaceId>> {
    let mut adj = vec![Vec::new(); g.face_count()];
    for e in g.edges() {
        let (a, b) = g.edge_faces(e);
        if a != b {
            adj[a.0].push(b);
            adj[b.0].push(a);
        }
    }
    adj
}

fn bfs(adj: &[Vec<FaceId>], source: FaceId, blocked: Option<FaceId>) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source.0] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(f) = queue.pop_front() {
        for &h in &adj[f.0] {
            if Some(h) != blocked && dist[h.0].is_none() {
                dist[h.0] = Some(dist[f.0].unwrap() + 1);
                queue.push_back(h);
            }
        }
    }
    dist
}

/// Distance of every face from the exterior face in the dual graph.
pub fn dual_distance_from_outer(g: &PlaneGraph) -> Vec<usize> {
    bfs(&face_neighbours(g), g.outer_face(), None)
        .into_iter()
        .map(|d| d.expect("dual graph is connected"))
        .collect()
}

/// `i(F, e)`: one plus the distance from the interior face at `e` without
/// passing through the exterior face.
pub fn index_oracle(g: &PlaneGraph, e: EdgeId) -> Vec<Option<usize>> {
    let (a, b) = g.edge_faces(e);
    let first = if a == g.outer_face() { b } else { a };
    bfs(&face_neighbours(g), first, Some(g.outer_face()))
        .into_iter()
        .map(|d| d.map(|d| d + 1))
        .collect()
}

/// `max (i(F) + i(F~)) + 1` over edges separating two different faces.
pub fn absolute_index_bound(g: &PlaneGraph) -> usize {
    let dist = dual_distance_from_outer(g);
    g.edges()
        .filter_map(|e| {
            let (a, b) = g.edge_faces(e);
            (a != b).then(|| dist[a.0] + dist[b.0] + 1)
        })
        .max()
        .unwrap_or(1)
}
