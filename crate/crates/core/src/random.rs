//! Random instances for property tests and benchmarks.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::congestion::{verify_tree, DisjointSets, SpanningTree};
use crate::dual_bounds::CenterTailSystem;
use crate::plane_graph::{EdgeId, FaceId, PlaneGraph};

type Point = (i64, i64);

fn orient(a: Point, b: Point, c: Point) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// Whether segments `ab` and `cd` meet anywhere except at a shared endpoint.
fn conflict(a: Point, b: Point, c: Point, d: Point) -> bool {
    let shared = [a, b].iter().filter(|p| **p == c || **p == d).count();
    if shared == 2 {
        return true;
    }
    if shared == 1 {
        // Overlap only if collinear and pointing the same way.
        let (s, x, y) = if a == c || a == d {
            (a, b, if a == c { d } else { c })
        } else {
            (b, a, if b == c { d } else { c })
        };
        return orient(s, x, y) == 0 && (x.0 - s.0) * (y.0 - s.0) + (x.1 - s.1) * (y.1 - s.1) > 0;
    }
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0);
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

/// A random connected straight-line plane graph on `vertices` points.
///
/// Points are distinct lattice points; segments are inserted in random order
/// whenever they cross nothing and pass through no other point, which gives
/// a maximal plane graph. A random spanning tree of it is kept, and each
/// remaining segment survives with probability `density`.
pub fn random_plane_graph<R: Rng>(rng: &mut R, vertices: usize, density: f64) -> PlaneGraph {
    assert!(vertices >= 2, "need at least two vertices");
    let side = 3 * vertices as i64;
    let mut used = HashSet::new();
    let mut points: Vec<Point> = Vec::with_capacity(vertices);
    while points.len() < vertices {
        let p = (rng.random_range(0..side), rng.random_range(0..side));
        if used.insert(p) {
            points.push(p);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut segments: Vec<(usize, usize)> = Vec::new();
    for (u, v) in pairs {
        let (a, b) = (points[u], points[v]);
        let blocked = points
            .iter()
            .enumerate()
            .any(|(w, &p)| w != u && w != v && on_segment(a, b, p))
            || segments
                .iter()
                .any(|&(x, y)| conflict(a, b, points[x], points[y]));
        if !blocked {
            segments.push((u, v));
        }
    }
    // Random spanning tree first, then the optional extras.
    segments.shuffle(rng);
    let mut sets = DisjointSets::new(vertices);
    let mut kept = Vec::new();
    let mut extra = Vec::new();
    for (u, v) in segments {
        if sets.union(u, v) {
            kept.push((u, v));
        } else {
            extra.push((u, v));
        }
    }
    kept.extend(extra.into_iter().filter(|_| rng.random_bool(density)));
    kept.shuffle(rng);
    let coords = points.iter().map(|&(x, y)| [x as f64, y as f64]).collect();
    PlaneGraph::from_straight_line(coords, &kept).expect("non-crossing segments form a plane graph")
}

/// A uniformly shuffled Kruskal spanning tree.
pub fn random_spanning_tree<R: Rng>(rng: &mut R, g: &PlaneGraph) -> SpanningTree {
    let mut order: Vec<EdgeId> = g.edges().collect();
    order.shuffle(rng);
    let mut sets = DisjointSets::new(g.vertex_count());
    let edges: Vec<EdgeId> = order
        .into_iter()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            sets.union(u.0, v.0)
        })
        .collect();
    verify_tree(g, edges).expect("Kruskal yields a spanning tree")
}

/// A random valid center-tail system, or `None` when `g` has no interior
/// face or no outer edge.
///
/// The center grows from a random interior face by up to three random
/// neighbours; each of one to three tails is a randomized depth-first
/// simple path from a center face to the exterior face; outer edges pick
/// their opposite tail at random.
pub fn random_cts<R: Rng>(rng: &mut R, g: &PlaneGraph) -> Option<CenterTailSystem> {
    let outer = g.outer_face();
    let interior: Vec<FaceId> = g.interior_faces().collect();
    let outer_edges = g.outer_edges();
    if interior.is_empty() || outer_edges.is_empty() {
        return None;
    }
    let dual = g.dual();

    let mut center = vec![*interior.choose(rng)?];
    let mut in_center: BTreeSet<FaceId> = center.iter().copied().collect();
    let target = rng.random_range(1..=4);
    while center.len() < target {
        let options: Vec<FaceId> = center
            .iter()
            .flat_map(|&f| dual.neighbors(f).iter().map(|&(h, _)| h))
            .filter(|h| *h != outer && !in_center.contains(h))
            .collect();
        let Some(&h) = options.choose(rng) else { break };
        center.push(h);
        in_center.insert(h);
    }

    let tail_count = rng.random_range(1..=3);
    let mut tails = Vec::with_capacity(tail_count);
    for _ in 0..tail_count {
        let start = *center.choose(rng)?;
        tails.push(random_path_to(rng, &dual, start, outer));
    }
    let assignment: BTreeMap<EdgeId, usize> = outer_edges
        .into_iter()
        .map(|e| (e, rng.random_range(0..tail_count)))
        .collect();
    Some(CenterTailSystem {
        center,
        tails,
        assignment,
    })
}

fn random_path_to<R: Rng>(
    rng: &mut R,
    dual: &crate::plane_graph::DualGraph,
    start: FaceId,
    target: FaceId,
) -> Vec<FaceId> {
    let mut path = vec![start];
    let mut visited = vec![false; dual.vertex_count()];
    visited[start.0] = true;
    let mut choices: Vec<Vec<FaceId>> = vec![shuffled_neighbors(rng, dual, start)];
    while let Some(options) = choices.last_mut() {
        match options.pop() {
            Some(h) if h == target => {
                path.push(h);
                return path;
            }
            Some(h) if !visited[h.0] => {
                visited[h.0] = true;
                path.push(h);
                let next = shuffled_neighbors(rng, dual, h);
                choices.push(next);
            }
            Some(_) => {}
            None => {
                choices.pop();
                path.pop();
            }
        }
    }
    unreachable!("the dual graph is connected")
}

fn shuffled_neighbors<R: Rng>(
    rng: &mut R,
    dual: &crate::plane_graph::DualGraph,
    f: FaceId,
) -> Vec<FaceId> {
    let mut hs: Vec<FaceId> = dual.neighbors(f).iter().map(|&(h, _)| h).collect();
    hs.sort();
    hs.dedup();
    hs.shuffle(rng);
    hs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual_bounds::validate_cts;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_objects_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let v = rng.random_range(2..=12);
            let g = random_plane_graph(&mut rng, v, 0.6);
            assert_eq!(g.vertex_count(), v);
            let t = random_spanning_tree(&mut rng, &g);
            assert_eq!(t.edges().len(), v - 1);
            if let Some(s) = random_cts(&mut rng, &g) {
                validate_cts(&g, &s).unwrap();
            }
        }
    }

    #[test]
    fn segment_conflicts() {
        assert!(conflict((0, 0), (2, 2), (0, 2), (2, 0)));
        assert!(!conflict((0, 0), (1, 0), (1, 0), (1, 1)));
        assert!(conflict((0, 0), (2, 0), (0, 0), (1, 0)));
        assert!(!conflict((0, 0), (1, 0), (0, 0), (-1, 0)));
        assert!(conflict((0, 0), (2, 0), (1, 0), (1, 1)));
    }
}
