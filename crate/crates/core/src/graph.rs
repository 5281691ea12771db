use std::collections::VecDeque;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;
/// Half-edge `2*e` sits at the first endpoint of edge `e`, half-edge `2*e + 1`
/// at the second; the involution is `h ^ 1`.
pub type HalfEdgeId = usize;

/// How an edge sits relative to the level function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    /// Both endpoints on the same level (loops included).
    Horizontal,
    /// Endpoints on distinct levels; `from` is the higher one.
    VerticalDescending { from: VertexId, to: VertexId },
}

/// A finite connected multigraph with a distinguished basepoint, every
/// non-basepoint vertex of degree at least three, loops and parallel edges
/// allowed.
///
/// Construction validates the graph and precomputes the data everything else
/// leans on: vertex levels (edge distance from the basepoint), degrees, and a
/// labelling of the half-edges at each vertex that lists descending
/// half-edges first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasepointedGraph {
    vertex_count: usize,
    basepoint: VertexId,
    /// Owner vertex of each half-edge; length is twice the edge count.
    half_owner: Vec<VertexId>,
    levels: Vec<usize>,
    degrees: Vec<usize>,
    /// Per-vertex half-edge labelling. `labels[v][l - 1]` is the half-edge
    /// carrying label `l` at `v`. Descending half-edges come first, then the
    /// rest, each group ordered by half-edge id.
    labels: Vec<Vec<HalfEdgeId>>,
    /// Number of labels at each vertex whose partner lies on a lower level.
    descending_counts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct GraphFile {
    rank: i64,
    basepoint: usize,
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl BasepointedGraph {
    /// Builds and validates a graph from an edge list.
    pub fn from_edges(
        vertex_count: usize,
        basepoint: VertexId,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        if basepoint >= vertex_count {
            return Err(GraphError::BadBasepoint { basepoint, vertex_count });
        }
        let mut half_owner = Vec::with_capacity(2 * edges.len());
        for (e, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::BadEndpoint { edge: e, vertex: w, vertex_count });
                }
            }
            half_owner.push(u);
            half_owner.push(v);
        }

        let mut degrees = vec![0usize; vertex_count];
        for &v in &half_owner {
            degrees[v] += 1;
        }

        let levels = bfs_levels(vertex_count, basepoint, &half_owner)
            .ok_or(GraphError::Disconnected)?;

        for v in 0..vertex_count {
            if v != basepoint && degrees[v] < 3 {
                return Err(GraphError::NonBasepointDegree { vertex: v, degree: degrees[v] });
            }
        }

        let mut labels: Vec<Vec<HalfEdgeId>> = vec![Vec::new(); vertex_count];
        for v in 0..vertex_count {
            // Descending halves first, then the rest; ids ascend within a group.
            for descending in [true, false] {
                for h in 0..half_owner.len() {
                    if half_owner[h] == v
                        && (levels[half_owner[h ^ 1]] < levels[v]) == descending
                    {
                        labels[v].push(h);
                    }
                }
            }
        }
        let descending_counts = (0..vertex_count)
            .map(|v| {
                labels[v]
                    .iter()
                    .filter(|&&h| levels[half_owner[h ^ 1]] < levels[v])
                    .count()
            })
            .collect();

        Ok(Self { vertex_count, basepoint, half_owner, levels, degrees, labels, descending_counts })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn basepoint(&self) -> VertexId {
        self.basepoint
    }

    pub fn edge_count(&self) -> usize {
        self.half_owner.len() / 2
    }

    /// First Betti number of the underlying graph.
    pub fn rank(&self) -> i64 {
        self.edge_count() as i64 - self.vertex_count as i64 + 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degrees[v]
    }

    pub fn total_degree(&self) -> usize {
        self.half_owner.len()
    }

    /// Edge distance from the basepoint.
    pub fn level(&self, v: VertexId) -> usize {
        self.levels[v]
    }

    pub fn max_level(&self) -> usize {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    pub fn vertices_at_level(&self, level: usize) -> Vec<VertexId> {
        (0..self.vertex_count).filter(|&v| self.levels[v] == level).collect()
    }

    pub fn half_owner(&self, h: HalfEdgeId) -> VertexId {
        self.half_owner[h]
    }

    pub fn partner(&self, h: HalfEdgeId) -> HalfEdgeId {
        h ^ 1
    }

    pub fn edge_of_half(&self, h: HalfEdgeId) -> EdgeId {
        h / 2
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.half_owner[2 * e], self.half_owner[2 * e + 1])
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.half_owner[2 * e] == self.half_owner[2 * e + 1]
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.edge_count()).map(|e| self.edge_endpoints(e)).collect()
    }

    /// Half-edge carrying 1-based label `l` at `v`.
    pub fn half_with_label(&self, v: VertexId, l: usize) -> HalfEdgeId {
        self.labels[v][l - 1]
    }

    /// 1-based label of half-edge `h` at its owner vertex.
    pub fn label_of_half(&self, h: HalfEdgeId) -> usize {
        let v = self.half_owner[h];
        1 + self.labels[v].iter().position(|&x| x == h).expect("half-edge owned by v")
    }

    /// Number of descending half-edges at `v`; these carry labels `1..=d`.
    pub fn descending_count(&self, v: VertexId) -> usize {
        self.descending_counts[v]
    }

    pub fn classify_edge(&self, e: EdgeId) -> Result<EdgeClass, GraphError> {
        if e >= self.edge_count() {
            return Err(GraphError::NoSuchEdge { edge: e, edge_count: self.edge_count() });
        }
        let (u, v) = self.edge_endpoints(e);
        Ok(match self.levels[u].cmp(&self.levels[v]) {
            std::cmp::Ordering::Equal => EdgeClass::Horizontal,
            std::cmp::Ordering::Greater => EdgeClass::VerticalDescending { from: u, to: v },
            std::cmp::Ordering::Less => EdgeClass::VerticalDescending { from: v, to: u },
        })
    }

    /// Non-basepoint vertices with exactly one descending edge.
    pub fn unique_descending_edge_vertices(&self) -> Vec<VertexId> {
        (0..self.vertex_count)
            .filter(|&v| v != self.basepoint && self.descending_counts[v] == 1)
            .collect()
    }

    /// Edge list relabelled so the basepoint is vertex 0, minimized over all
    /// basepoint-fixing relabellings. Two graphs are isomorphic as
    /// basepointed graphs iff their canonical edge lists agree.
    pub fn canonical_edge_list(&self) -> Vec<(VertexId, VertexId)> {
        let others: Vec<VertexId> =
            (0..self.vertex_count).filter(|&v| v != self.basepoint).collect();
        let mut best: Option<Vec<(VertexId, VertexId)>> = None;
        for perm in others.iter().permutations(others.len()) {
            let mut map = vec![0usize; self.vertex_count];
            map[self.basepoint] = 0;
            for (i, &&v) in perm.iter().enumerate() {
                map[v] = i + 1;
            }
            let mut relabelled: Vec<(VertexId, VertexId)> = self
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (map[u], map[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            relabelled.sort_unstable();
            if best.as_ref().is_none_or(|b| relabelled < *b) {
                best = Some(relabelled);
            }
        }
        best.expect("at least the identity relabelling")
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edge_count() == other.edge_count()
            && self.canonical_edge_list() == other.canonical_edge_list()
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            rank: self.rank(),
            basepoint: self.basepoint,
            vertex_count: self.vertex_count,
            edges: self.edges(),
        };
        serde_json::to_string_pretty(&file).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        let g = Self::from_edges(file.vertex_count, file.basepoint, &file.edges)?;
        if g.rank() != file.rank {
            return Err(GraphError::RankMismatch { declared: file.rank, actual: g.rank() });
        }
        Ok(g)
    }
}

fn bfs_levels(
    vertex_count: usize,
    basepoint: VertexId,
    half_owner: &[VertexId],
) -> Option<Vec<usize>> {
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); vertex_count];
    for e in 0..half_owner.len() / 2 {
        let (u, v) = (half_owner[2 * e], half_owner[2 * e + 1]);
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut levels = vec![usize::MAX; vertex_count];
    levels[basepoint] = 0;
    let mut queue = VecDeque::from([basepoint]);
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if levels[v] == usize::MAX {
                levels[v] = levels[u] + 1;
                queue.push_back(v);
            }
        }
    }
    if levels.contains(&usize::MAX) {
        None
    } else {
        Some(levels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> BasepointedGraph {
        BasepointedGraph::from_edges(2, 0, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn rose2() -> BasepointedGraph {
        BasepointedGraph::from_edges(1, 0, &[(0, 0), (0, 0)]).unwrap()
    }

    #[test]
    fn rose_basics() {
        let g = rose2();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.max_level(), 0);
        assert_eq!(g.descending_count(0), 0);
    }

    #[test]
    fn theta_basics() {
        let g = theta();
        assert_eq!(g.rank(), 2);
        assert_eq!((g.degree(0), g.degree(1)), (3, 3));
        assert_eq!(g.level(1), 1);
        assert_eq!(g.descending_count(1), 3);
        assert_eq!(g.descending_count(0), 0);
        assert_eq!(g.classify_edge(0).unwrap(), EdgeClass::VerticalDescending { from: 1, to: 0 });
    }

    #[test]
    fn validation_rejects_low_degree_and_disconnection() {
        assert_eq!(
            BasepointedGraph::from_edges(2, 0, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::NonBasepointDegree { vertex: 1, degree: 2 }
        );
        assert_eq!(
            BasepointedGraph::from_edges(2, 0, &[(0, 0), (1, 1), (1, 1)]).unwrap_err(),
            GraphError::Disconnected
        );
        assert_eq!(
            BasepointedGraph::from_edges(0, 0, &[]).unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn isolated_basepoint_is_the_only_trivial_graph() {
        let g = BasepointedGraph::from_edges(1, 0, &[]).unwrap();
        assert_eq!(g.rank(), 0);
        assert_eq!(g.degree(0), 0);
    }

    #[test]
    fn labels_put_descending_halves_first() {
        // p -- v (two edges), loop at v: descending labels 1,2 then the loop 3,4.
        let g = BasepointedGraph::from_edges(2, 0, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(g.descending_count(1), 2);
        assert_eq!(g.half_with_label(1, 1), 1);
        assert_eq!(g.half_with_label(1, 2), 3);
        assert_eq!(g.half_with_label(1, 3), 4);
        assert_eq!(g.half_with_label(1, 4), 5);
        assert_eq!(g.label_of_half(3), 2);
    }

    #[test]
    fn deeper_levels_and_descent_counts() {
        // p - v, v - w twice, loop at w.
        let g = BasepointedGraph::from_edges(3, 0, &[(0, 1), (1, 2), (1, 2), (2, 2)]).unwrap();
        assert_eq!(g.levels, vec![0, 1, 2]);
        assert_eq!(g.descending_count(2), 2);
        assert_eq!(g.unique_descending_edge_vertices(), vec![1]);
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        let a = BasepointedGraph::from_edges(3, 0, &[(0, 1), (1, 2), (1, 2), (2, 2)]).unwrap();
        let b = BasepointedGraph::from_edges(3, 0, &[(0, 2), (2, 1), (1, 2), (1, 1)]).unwrap();
        assert!(a.is_isomorphic(&b));
        let c = BasepointedGraph::from_edges(3, 0, &[(0, 1), (0, 2), (1, 2), (1, 2)]).unwrap();
        assert!(!a.is_isomorphic(&c));
    }

    #[test]
    fn json_roundtrip() {
        let g = theta();
        let text = g.to_json();
        assert!(text.contains("\"vertexCount\": 2"));
        let back = BasepointedGraph::from_json(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn json_rejects_rank_mismatch() {
        let text = r#"{"rank": 3, "basepoint": 0, "vertexCount": 2,
                       "edges": [[0,1],[0,1],[0,1]]}"#;
        assert_eq!(
            BasepointedGraph::from_json(text).unwrap_err(),
            GraphError::RankMismatch { declared: 3, actual: 2 }
        );
    }
}
