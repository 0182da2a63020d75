//! Exact spanning tree congestion by branch and bound.
//!
//! Both strategies branch on single edges (include, then exclude) over a
//! partial forest and prune with the same bound. For an included edge `e`
//! whose forest component `K` splits into `D` and `K - D` when `e` is
//! removed, every final tree keeps `D` and `K - D` on opposite sides of
//! `e`, and every other forest component ends up wholly on one side. So the
//! congestion of `e` is at least the number of graph edges between `D` and
//! `K - D` plus, for each other component `L`, the smaller of its edge counts
//! into `D` and into `K - D`. At a leaf the bound is exact.
//!
//! * [`Strategy::Enumeration`] walks edges in id order and keeps an
//!   incumbent. It is used for graphs with at most 12 vertices.
//! * [`Strategy::Decision`] asks, for `c` increasing from 2, whether some
//!   tree has congestion at most `c`, growing one tree from vertex 0 and
//!   branching on the frontier edge whose outside endpoint has the most
//!   edges into the tree. The witness is then fixed greedily: each edge in
//!   id order is kept if a tree within `c` still exists with it.
//!
//! Both return the optimal tree whose sorted edge-id list is
//! lexicographically smallest, independent of the number of workers.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::congestion::{edge_congestion, verify_tree, DisjointSets, SpanningTree};
use crate::dual_bounds::bfs_upper_bound;
use crate::plane_graph::{EdgeId, PlaneGraph};

/// Graphs up to this many vertices use [`Strategy::Enumeration`] under
/// [`Strategy::Auto`].
pub const ENUMERATION_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    #[default]
    Auto,
    Enumeration,
    Decision,
}

#[derive(Debug, Clone, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Worker threads for the decision search; 0 and 1 both mean sequential.
    pub workers: usize,
    pub strategy: Strategy,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    pub value: usize,
    pub witness: SpanningTree,
    pub nodes: u64,
    pub strategy: Strategy,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// The search stopped early. `lower` is proven, `upper` is the
    /// congestion of `witness`.
    #[error("search budget exhausted after {nodes} nodes; s(G) lies in [{lower}, {upper}]")]
    BudgetExceeded {
        lower: usize,
        upper: usize,
        witness: SpanningTree,
        nodes: u64,
    },
}

/// `s(G)` with a witness tree.
pub fn exact_stc(g: &PlaneGraph, budget: &Budget) -> Result<ExactOutcome, ExactError> {
    let problem = Problem::new(g);
    let limits = Limits {
        max_nodes: budget.max_nodes,
        deadline: budget.time_limit.map(|d| Instant::now() + d),
        nodes: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    };
    let bfs = bfs_upper_bound(g);

    if g.edge_count() == g.vertex_count() - 1 {
        let witness = verify_tree(g, g.edges()).expect("a tree is its own spanning tree");
        let value = edge_congestion(g, &witness).expect("tree belongs to graph");
        return Ok(ExactOutcome {
            value,
            witness,
            nodes: 0,
            strategy: budget.strategy,
        });
    }

    let strategy = match budget.strategy {
        Strategy::Auto if g.vertex_count() <= ENUMERATION_MAX_VERTICES => Strategy::Enumeration,
        Strategy::Auto => Strategy::Decision,
        s => s,
    };
    let tree_of = |edges: &[usize]| {
        verify_tree(g, edges.iter().copied().map(EdgeId)).expect("search yields spanning trees")
    };

    match strategy {
        Strategy::Enumeration => {
            let mut search = Searcher::new(&problem, &limits, Constraints::none(g.edge_count()));
            let mut best = Incumbent {
                value: bfs.ec + 1,
                edges: None,
            };
            search.enumerate(0, &mut best);
            let nodes = limits.nodes.load(Ordering::Relaxed);
            if limits.exhausted.load(Ordering::Relaxed) {
                let (upper, witness) = match best.edges {
                    Some(edges) => (best.value, tree_of(&edges)),
                    None => (bfs.ec, bfs.tree),
                };
                return Err(ExactError::BudgetExceeded {
                    lower: 2,
                    upper,
                    witness,
                    nodes,
                });
            }
            let edges = best
                .edges
                .expect("the breadth-first tree bounds the optimum");
            Ok(ExactOutcome {
                value: best.value,
                witness: tree_of(&edges),
                nodes,
                strategy,
            })
        }
        _ => {
            let workers = budget.workers.max(1);
            let mut value = bfs.ec;
            let mut witness_edges: Vec<usize> = bfs.tree.edges().iter().map(|e| e.0).collect();
            for c in 2..bfs.ec {
                match decide(
                    &problem,
                    &limits,
                    c,
                    Constraints::none(g.edge_count()),
                    workers,
                ) {
                    Decision::Feasible(edges) => {
                        value = c;
                        witness_edges = edges;
                        break;
                    }
                    Decision::Infeasible => {}
                    Decision::Aborted => {
                        return Err(ExactError::BudgetExceeded {
                            lower: c,
                            upper: bfs.ec,
                            witness: bfs.tree,
                            nodes: limits.nodes.load(Ordering::Relaxed),
                        })
                    }
                }
            }
            match lexicographic_witness(&problem, &limits, value, witness_edges, workers) {
                Ok(edges) => Ok(ExactOutcome {
                    value,
                    witness: tree_of(&edges),
                    nodes: limits.nodes.load(Ordering::Relaxed),
                    strategy,
                }),
                Err(found) => Err(ExactError::BudgetExceeded {
                    lower: value,
                    upper: value,
                    witness: tree_of(&found),
                    nodes: limits.nodes.load(Ordering::Relaxed),
                }),
            }
        }
    }
}

/// Fixes edges in id order, keeping an edge whenever a tree of congestion at
/// most `c` still exists with it. `known` is any such tree.
fn lexicographic_witness(
    problem: &Problem,
    limits: &Limits,
    c: usize,
    mut known: Vec<usize>,
    workers: usize,
) -> Result<Vec<usize>, Vec<usize>> {
    let m = problem.ends.len();
    let mut constraints = Constraints::none(m);
    for e in 0..m {
        if known.contains(&e) {
            constraints.status[e] = Status::In;
            continue;
        }
        let mut trial = constraints.clone();
        trial.status[e] = Status::In;
        match decide(problem, limits, c, trial.clone(), workers) {
            Decision::Feasible(edges) => {
                known = edges;
                constraints = trial;
            }
            Decision::Infeasible => constraints.status[e] = Status::Out,
            Decision::Aborted => return Err(known),
        }
    }
    known.sort_unstable();
    Ok(known)
}

enum Decision {
    Feasible(Vec<usize>),
    Infeasible,
    Aborted,
}

fn decide(
    problem: &Problem,
    limits: &Limits,
    c: usize,
    constraints: Constraints,
    workers: usize,
) -> Decision {
    let found = AtomicBool::new(false);
    let result = if workers <= 1 {
        let mut s = Searcher::new(problem, limits, constraints);
        s.decide(c, &found)
    } else {
        // Split the top of the search tree into independent subproblems.
        let mut frontier = vec![constraints];
        let target = workers * 8;
        let mut settled = None;
        while frontier.len() < target {
            let mut next = Vec::new();
            let mut expanded = false;
            for state in frontier {
                let mut s = Searcher::new(problem, limits, state);
                match s.split(c) {
                    Split::Done(edges) => {
                        settled = Some(edges);
                        break;
                    }
                    Split::Dead => {}
                    Split::Children(children) => {
                        expanded = true;
                        next.extend(children);
                    }
                }
            }
            frontier = next;
            if settled.is_some() || !expanded {
                break;
            }
        }
        if let Some(edges) = settled {
            Some(edges)
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool");
            pool.install(|| {
                frontier.into_par_iter().find_map_any(|state| {
                    let mut s = Searcher::new(problem, limits, state);
                    s.decide(c, &found)
                })
            })
        }
    };
    match result {
        Some(edges) => Decision::Feasible(edges),
        None if limits.exhausted.load(Ordering::Relaxed) => Decision::Aborted,
        None => Decision::Infeasible,
    }
}

struct Problem {
    n: usize,
    ends: Vec<(usize, usize)>,
}

impl Problem {
    fn new(g: &PlaneGraph) -> Self {
        Problem {
            n: g.vertex_count(),
            ends: g
                .edges()
                .map(|e| {
                    let (u, v) = g.endpoints(e);
                    (u.0, v.0)
                })
                .collect(),
        }
    }
}

struct Limits {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl Limits {
    /// Counts a node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|m| count > m);
        let over_time =
            count.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Free,
    In,
    Out,
}

#[derive(Debug, Clone)]
struct Constraints {
    status: Vec<Status>,
}

impl Constraints {
    fn none(m: usize) -> Self {
        Constraints {
            status: vec![Status::Free; m],
        }
    }
}

struct Incumbent {
    value: usize,
    edges: Option<Vec<usize>>,
}

enum Split {
    Done(Vec<usize>),
    Dead,
    Children(Vec<Constraints>),
}

struct Searcher<'a> {
    problem: &'a Problem,
    limits: &'a Limits,
    status: Vec<Status>,
    // Scratch space for the bound.
    comp: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
    child_of_edge: Vec<usize>,
    forest: Vec<Vec<(usize, usize)>>,
    count_inside: Vec<usize>,
    count_outside: Vec<usize>,
    stack: Vec<(usize, usize, bool)>,
}

impl<'a> Searcher<'a> {
    fn new(problem: &'a Problem, limits: &'a Limits, constraints: Constraints) -> Self {
        let n = problem.n;
        Searcher {
            problem,
            limits,
            status: constraints.status,
            comp: vec![0; n],
            tin: vec![0; n],
            tout: vec![0; n],
            child_of_edge: vec![usize::MAX; problem.ends.len()],
            forest: vec![Vec::new(); n],
            count_inside: vec![0; n],
            count_outside: vec![0; n],
            stack: Vec::new(),
        }
    }

    fn included(&self) -> usize {
        self.status.iter().filter(|&&s| s == Status::In).count()
    }

    /// Whether the included edges are acyclic and, together with the free
    /// edges, still connect the graph.
    fn consistent(&self) -> bool {
        let n = self.problem.n;
        let mut forest = DisjointSets::new(n);
        for (e, &(u, v)) in self.problem.ends.iter().enumerate() {
            if self.status[e] == Status::In && !forest.union(u, v) {
                return false;
            }
        }
        let mut reach = DisjointSets::new(n);
        let mut parts = n;
        for (e, &(u, v)) in self.problem.ends.iter().enumerate() {
            if self.status[e] != Status::Out && reach.union(u, v) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Largest congestion lower bound over included edges. Stops early once
    /// the value exceeds `cap`.
    fn bound(&mut self, cap: usize) -> usize {
        let n = self.problem.n;
        let ends = &self.problem.ends;
        for list in &mut self.forest {
            list.clear();
        }
        for (e, &(u, v)) in ends.iter().enumerate() {
            if self.status[e] == Status::In {
                self.forest[u].push((v, e));
                self.forest[v].push((u, e));
            }
        }
        // Components and preorder intervals of each forest tree.
        self.comp.fill(usize::MAX);
        let mut clock = 0;
        for root in 0..n {
            if self.comp[root] != usize::MAX {
                continue;
            }
            self.stack.clear();
            self.stack.push((root, usize::MAX, false));
            while let Some((v, via, done)) = self.stack.pop() {
                if done {
                    self.tout[v] = clock;
                    continue;
                }
                self.comp[v] = root;
                self.tin[v] = clock;
                clock += 1;
                self.stack.push((v, via, true));
                for &(w, e) in &self.forest[v] {
                    if e != via {
                        self.child_of_edge[e] = w;
                        self.stack.push((w, e, false));
                    }
                }
            }
        }

        let mut worst = 0;
        for (e, _) in ends.iter().enumerate() {
            if self.status[e] != Status::In {
                continue;
            }
            let x = self.child_of_edge[e];
            let k = self.comp[x];
            let (lo, hi) = (self.tin[x], self.tout[x]);
            // 0 = below e, 1 = rest of the component, 2 = elsewhere.
            let side = |v: usize, comp: &[usize], tin: &[usize]| {
                if comp[v] != k {
                    2
                } else if tin[v] >= lo && tin[v] < hi {
                    0
                } else {
                    1
                }
            };
            let mut load = 0;
            let mut touched: Vec<usize> = Vec::new();
            for &(a, b) in ends.iter() {
                let (sa, sb) = (
                    side(a, &self.comp, &self.tin),
                    side(b, &self.comp, &self.tin),
                );
                match (sa, sb) {
                    (0, 1) | (1, 0) => load += 1,
                    (0, 2) | (2, 0) | (1, 2) | (2, 1) => {
                        let (inner, outside) = if sa == 2 { (sb, a) } else { (sa, b) };
                        let l = self.comp[outside];
                        if self.count_inside[l] == 0 && self.count_outside[l] == 0 {
                            touched.push(l);
                        }
                        if inner == 0 {
                            self.count_inside[l] += 1;
                        } else {
                            self.count_outside[l] += 1;
                        }
                    }
                    _ => {}
                }
            }
            for &l in &touched {
                load += self.count_inside[l].min(self.count_outside[l]);
                self.count_inside[l] = 0;
                self.count_outside[l] = 0;
            }
            worst = worst.max(load);
            if worst > cap {
                return worst;
            }
        }
        worst
    }

    fn tree_edges(&self) -> Vec<usize> {
        (0..self.status.len())
            .filter(|&e| self.status[e] == Status::In)
            .collect()
    }

    /// Smallest-id free edge joining two components.
    fn next_in_id_order(&self, from: usize) -> Option<usize> {
        (from..self.status.len()).find(|&e| {
            let (u, v) = self.problem.ends[e];
            self.status[e] == Status::Free && self.comp[u] != self.comp[v]
        })
    }

    /// Free frontier edge of the component of vertex 0 whose far endpoint
    /// has the most edges into that component. Relies on `comp` from the
    /// last call to `bound`.
    fn next_frontier_edge(&self) -> Option<usize> {
        let root = self.comp[0];
        let mut pull = vec![0usize; self.problem.n];
        for &(u, v) in &self.problem.ends {
            if self.comp[u] == root && self.comp[v] != root {
                pull[v] += 1;
            } else if self.comp[v] == root && self.comp[u] != root {
                pull[u] += 1;
            }
        }
        let mut best: Option<(usize, usize)> = None;
        for (e, &(u, v)) in self.problem.ends.iter().enumerate() {
            if self.status[e] != Status::Free || (self.comp[u] == root) == (self.comp[v] == root) {
                continue;
            }
            let w = if self.comp[u] == root { v } else { u };
            if best.is_none_or(|(p, _)| pull[w] > p) {
                best = Some((pull[w], e));
            }
        }
        best.map(|(_, e)| e)
    }

    fn enumerate(&mut self, from: usize, best: &mut Incumbent) {
        if !self.limits.tick() {
            return;
        }
        let lb = self.bound(usize::MAX);
        if lb >= best.value {
            return;
        }
        if self.included() == self.problem.n - 1 {
            best.value = lb;
            best.edges = Some(self.tree_edges());
            return;
        }
        let Some(e) = self.next_in_id_order(from) else {
            return;
        };
        self.status[e] = Status::In;
        self.enumerate(e + 1, best);
        self.status[e] = Status::Out;
        if self.consistent() {
            self.enumerate(e + 1, best);
        }
        self.status[e] = Status::Free;
    }

    fn decide(&mut self, c: usize, found: &AtomicBool) -> Option<Vec<usize>> {
        if found.load(Ordering::Relaxed) || !self.consistent() {
            return None;
        }
        let result = self.decide_rec(c, found);
        if result.is_some() {
            found.store(true, Ordering::Relaxed);
        }
        result
    }

    fn decide_rec(&mut self, c: usize, found: &AtomicBool) -> Option<Vec<usize>> {
        if found.load(Ordering::Relaxed) || !self.limits.tick() {
            return None;
        }
        if self.bound(c) > c {
            return None;
        }
        if self.included() == self.problem.n - 1 {
            return Some(self.tree_edges());
        }
        let e = self.next_frontier_edge()?;
        self.status[e] = Status::In;
        if self.consistent() {
            if let Some(t) = self.decide_rec(c, found) {
                return Some(t);
            }
        }
        self.status[e] = Status::Out;
        if self.consistent() {
            if let Some(t) = self.decide_rec(c, found) {
                return Some(t);
            }
        }
        self.status[e] = Status::Free;
        None
    }

    /// One expansion step of the decision search, for work splitting.
    fn split(&mut self, c: usize) -> Split {
        if !self.consistent() || self.bound(c) > c {
            return Split::Dead;
        }
        if self.included() == self.problem.n - 1 {
            return Split::Done(self.tree_edges());
        }
        let Some(e) = self.next_frontier_edge() else {
            return Split::Dead;
        };
        let mut children = Vec::new();
        for s in [Status::In, Status::Out] {
            let mut status = self.status.clone();
            status[e] = s;
            children.push(Constraints { status });
        }
        Split::Children(children)
    }
}
