use crate::error::ForestError;
use crate::graph::{BasepointedGraph, EdgeId, VertexId};

/// A validated subforest of a fixed graph: a set of non-loop edges spanning
/// no cycle. The owning graph is not stored; operations take it again and
/// trust the caller to pass the same one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Forest {
    edges: Vec<EdgeId>,
}

/// Result of collapsing each forest component to a single vertex.
#[derive(Debug, Clone)]
pub struct CollapseResult {
    pub graph: BasepointedGraph,
    /// Old vertex id to new vertex id.
    pub vertex_map: Vec<VertexId>,
    /// Old edge id to surviving edge id; `None` for collapsed forest edges.
    pub edge_map: Vec<Option<EdgeId>>,
}

impl Forest {
    /// Validates that `edges` (in any order, duplicates rejected) form a
    /// forest in `g`. The empty forest is allowed here; operations that
    /// need a level reject it themselves.
    pub fn new(g: &BasepointedGraph, edges: &[EdgeId]) -> Result<Self, ForestError> {
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != edges.len() {
            return Err(ForestError::NotAForest { reason: "duplicate edge".into() });
        }
        let mut uf = UnionFind::new(g.vertex_count());
        for &e in &sorted {
            if e >= g.edge_count() {
                return Err(ForestError::Graph(crate::error::GraphError::NoSuchEdge {
                    edge: e,
                    edge_count: g.edge_count(),
                }));
            }
            let (u, v) = g.edge_endpoints(e);
            if !uf.union(u, v) {
                let reason = if u == v {
                    format!("edge {e} is a loop")
                } else {
                    format!("edge {e} closes a cycle")
                };
                return Err(ForestError::NotAForest { reason });
            }
        }
        Ok(Self { edges: sorted })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Vertices touched by some forest edge, ascending.
    pub fn support(&self, g: &BasepointedGraph) -> Vec<VertexId> {
        let mut seen = vec![false; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.edge_endpoints(e);
            seen[u] = true;
            seen[v] = true;
        }
        (0..g.vertex_count()).filter(|&v| seen[v]).collect()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// Smallest level met by the forest's vertices.
pub fn forest_level(g: &BasepointedGraph, f: &Forest) -> Result<usize, ForestError> {
    if f.is_empty() {
        return Err(ForestError::EmptyForest);
    }
    Ok(f.support(g).iter().map(|&v| g.level(v)).min().expect("nonempty support"))
}

/// A forest is descending when no component of it contains two distinct
/// vertices on the forest's own smallest level.
pub fn is_descending_forest(g: &BasepointedGraph, f: &Forest) -> Result<bool, ForestError> {
    let level = forest_level(g, f)?;
    let mut uf = UnionFind::new(g.vertex_count());
    for &e in f.edges() {
        let (u, v) = g.edge_endpoints(e);
        uf.union(u, v);
    }
    let mut seen_root: Vec<Option<VertexId>> = vec![None; g.vertex_count()];
    for v in f.support(g) {
        if g.level(v) == level {
            let root = uf.find(v);
            if seen_root[root].is_some() {
                return Ok(false);
            }
            seen_root[root] = Some(v);
        }
    }
    Ok(true)
}

/// Collapses every component of the forest to a point. New vertex ids order
/// components by their smallest original member, so a basepoint numbered 0
/// stays 0; surviving edges keep their relative order.
pub fn collapse_forest(g: &BasepointedGraph, f: &Forest) -> Result<CollapseResult, ForestError> {
    let mut uf = UnionFind::new(g.vertex_count());
    for &e in f.edges() {
        let (u, v) = g.edge_endpoints(e);
        uf.union(u, v);
    }
    let mut smallest_member = vec![usize::MAX; g.vertex_count()];
    for v in 0..g.vertex_count() {
        let root = uf.find(v);
        smallest_member[root] = smallest_member[root].min(v);
    }
    let mut representatives: Vec<usize> =
        smallest_member.iter().copied().filter(|&m| m != usize::MAX).collect();
    representatives.sort_unstable();
    let mut vertex_map = vec![0usize; g.vertex_count()];
    for v in 0..g.vertex_count() {
        let m = smallest_member[uf.find(v)];
        vertex_map[v] = representatives.binary_search(&m).expect("member present");
    }

    let mut edges = Vec::with_capacity(g.edge_count() - f.len());
    let mut edge_map = vec![None; g.edge_count()];
    for e in 0..g.edge_count() {
        if f.contains(e) {
            continue;
        }
        let (u, v) = g.edge_endpoints(e);
        edge_map[e] = Some(edges.len());
        edges.push((vertex_map[u], vertex_map[v]));
    }

    let graph =
        BasepointedGraph::from_edges(representatives.len(), vertex_map[g.basepoint()], &edges)?;
    Ok(CollapseResult { graph, vertex_map, edge_map })
}

/// All nonempty forests of `g`, ordered by their sorted edge lists.
pub fn enumerate_forests(g: &BasepointedGraph) -> Vec<Forest> {
    let candidates: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !g.is_loop(e)).collect();
    let mut out = Vec::new();
    // Desk-scale graphs keep the candidate count small; subsets are cheap.
    for mask in 1u64..(1 << candidates.len()) {
        let subset: Vec<EdgeId> = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        if let Ok(f) = Forest::new(g, &subset) {
            out.push(f);
        }
    }
    out.sort();
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false when `x` and `y` were already joined.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }
}
