use itertools::Itertools;

use crate::config::{BlowUpCaps, CompatMode};
use crate::error::PartitionError;
use crate::graph::{BasepointedGraph, EdgeId, VertexId};
use crate::partition::{is_compatible, TwoBlockPartition};

/// A nonempty nested chain of partitions of the half-edge labels at one
/// non-basepoint vertex, stored with 1-blocks ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexBlowUp {
    vertex: VertexId,
    partitions: Vec<TwoBlockPartition>,
}

impl VertexBlowUp {
    pub fn new(
        g: &BasepointedGraph,
        vertex: VertexId,
        partitions: &[TwoBlockPartition],
    ) -> Result<Self, PartitionError> {
        if vertex >= g.vertex_count() {
            return Err(crate::error::GraphError::NoSuchVertex {
                vertex,
                vertex_count: g.vertex_count(),
            }
            .into());
        }
        if vertex == g.basepoint() {
            return Err(crate::error::GraphError::BasepointNotAllowed.into());
        }
        if partitions.is_empty() {
            return Err(PartitionError::EmptyBlowUp);
        }
        for p in partitions {
            if p.ground_size() != g.degree(vertex) {
                return Err(PartitionError::WrongArity {
                    partition_ground: p.ground_size(),
                    degree: g.degree(vertex),
                });
            }
        }
        for (a, b) in partitions.iter().tuple_combinations() {
            match is_compatible(a, b, CompatMode::Nested) {
                Ok(true) => {}
                _ => return Err(PartitionError::IncompatiblePartitions),
            }
        }
        let mut sorted = partitions.to_vec();
        sorted.sort_by_key(|p| p.side_mask().count_ones());
        Ok(Self { vertex, partitions: sorted })
    }

    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    /// The chain, 1-blocks strictly ascending.
    pub fn partitions(&self) -> &[TwoBlockPartition] {
        &self.partitions
    }

    /// Does some partition of the chain split the labels `1..=d`?
    pub fn splits_prefix(&self, d: usize) -> bool {
        self.partitions.iter().any(|p| p.splits_prefix(d))
    }
}

/// A blow-up of a graph: one chain per affected vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphBlowUp {
    entries: Vec<VertexBlowUp>,
}

impl GraphBlowUp {
    /// Validates the per-vertex chains; entries are stored by ascending
    /// vertex and must name distinct vertices. At least one entry required.
    pub fn new(g: &BasepointedGraph, entries: &[VertexBlowUp]) -> Result<Self, PartitionError> {
        if entries.is_empty() {
            return Err(PartitionError::EmptyBlowUp);
        }
        let mut sorted = entries.to_vec();
        sorted.sort_by_key(|e| e.vertex);
        if sorted.iter().tuple_windows().any(|(a, b)| a.vertex == b.vertex) {
            return Err(PartitionError::BadBlocks {
                reason: "two chains at the same vertex".into(),
            });
        }
        for e in &sorted {
            // Re-validate against this graph; entries may come from another.
            VertexBlowUp::new(g, e.vertex, &e.partitions)?;
        }
        Ok(Self { entries: sorted })
    }

    pub fn entries(&self) -> &[VertexBlowUp] {
        &self.entries
    }

    pub fn at_vertex(&self, v: VertexId) -> Option<&VertexBlowUp> {
        self.entries.iter().find(|e| e.vertex == v)
    }
}

/// Result of blowing up: the new graph plus enough bookkeeping to follow
/// half-edges and see the inserted path edges.
#[derive(Debug, Clone)]
pub struct BlowUpResult {
    pub graph: BasepointedGraph,
    /// For each original half-edge, the vertex of the new graph holding it.
    pub half_home: Vec<VertexId>,
    /// Path edges added at each blown-up vertex, in path order.
    pub new_edges: Vec<(VertexId, Vec<EdgeId>)>,
}

/// Replaces each blown-up vertex by a path: the chain
/// `a_1 < a_2 < ... < a_r` yields path vertices `w_0, ..., w_r` where `w_0`
/// keeps the old vertex id and carries the labels of `a_1`, `w_i` carries
/// `a_{i+1} - a_i`, and `w_r` the complement of `a_r`. Original edges keep
/// their ids with endpoints rerouted; the `r` path edges per vertex are
/// appended afterwards, vertices in ascending order.
pub fn blow_up(g: &BasepointedGraph, b: &GraphBlowUp) -> Result<BlowUpResult, PartitionError> {
    let b = GraphBlowUp::new(g, b.entries())?;
    let mut half_home: Vec<VertexId> = (0..g.total_degree()).map(|h| g.half_owner(h)).collect();
    let mut next_vertex = g.vertex_count();
    let mut paths: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    for e in b.entries() {
        let v = e.vertex();
        let chain = e.partitions();
        let mut path = vec![v];
        for _ in 0..chain.len() {
            path.push(next_vertex);
            next_vertex += 1;
        }
        // Label l sits at the first path vertex whose accumulated 1-block
        // contains it, else at the far end.
        for l in 1..=g.degree(v) {
            let slot = chain
                .iter()
                .position(|p| p.side_mask() & (1 << (l - 1)) != 0)
                .unwrap_or(chain.len());
            half_home[g.half_with_label(v, l)] = path[slot];
        }
        paths.push((v, path));
    }

    let mut edges: Vec<(VertexId, VertexId)> = (0..g.edge_count())
        .map(|e| (half_home[2 * e], half_home[2 * e + 1]))
        .collect();
    let mut new_edges = Vec::new();
    for (v, path) in &paths {
        let mut ids = Vec::new();
        for pair in path.windows(2) {
            ids.push(edges.len());
            edges.push((pair[0], pair[1]));
        }
        new_edges.push((*v, ids));
    }

    let graph = BasepointedGraph::from_edges(next_vertex, g.basepoint(), &edges)?;
    Ok(BlowUpResult { graph, half_home, new_edges })
}

/// Smallest level among the blown-up vertices.
pub fn blow_up_level(g: &BasepointedGraph, b: &GraphBlowUp) -> usize {
    b.entries().iter().map(|e| g.level(e.vertex())).min().expect("blow-up is nonempty")
}

/// Does the chain at `v` tear the descending labels apart, i.e. leave two
/// descending half-edges of `v` on distinct path vertices?
pub fn separates_at(g: &BasepointedGraph, b: &GraphBlowUp, v: VertexId) -> bool {
    b.at_vertex(v).is_some_and(|e| e.splits_prefix(g.descending_count(v)))
}

/// A blow-up is descending when it separates at some vertex on its own
/// smallest affected level.
pub fn is_descending_blow_up(g: &BasepointedGraph, b: &GraphBlowUp) -> bool {
    let level = blow_up_level(g, b);
    b.entries()
        .iter()
        .any(|e| g.level(e.vertex()) == level && separates_at(g, b, e.vertex()))
}

/// All nested chains of length `1..=max_len` of partitions of `{1..n}`,
/// deterministic order.
pub fn enumerate_chains(n: usize, max_len: usize) -> Vec<Vec<TwoBlockPartition>> {
    let all = TwoBlockPartition::all(n);
    let mut out: Vec<Vec<TwoBlockPartition>> = Vec::new();
    // Chains ordered by (length, lex on masks); extend recursively.
    let mut grow: Vec<Vec<TwoBlockPartition>> = all.iter().map(|&p| vec![p]).collect();
    for _ in 1..max_len.max(1) {
        let mut longer = Vec::new();
        for chain in &grow {
            let last = *chain.last().expect("nonempty chain");
            for &p in &all {
                let nests = p.side_mask() & last.side_mask() == last.side_mask()
                    && p.side_mask() != last.side_mask();
                if nests {
                    let mut c = chain.clone();
                    c.push(p);
                    longer.push(c);
                }
            }
        }
        out.append(&mut grow);
        grow = longer;
        if grow.is_empty() {
            break;
        }
    }
    out.append(&mut grow);
    out
}

/// All blow-ups of `g` within the caps: per non-basepoint vertex of degree
/// at least 4 and at most `caps.max_vertex_degree`, chains up to
/// `caps.max_partitions_per_vertex`; every nonempty assignment across
/// vertices, truncated after `caps.max_tuples_per_graph` tuples.
pub fn enumerate_blow_ups(g: &BasepointedGraph, caps: &BlowUpCaps) -> Vec<GraphBlowUp> {
    let mut per_vertex: Vec<(VertexId, Vec<Vec<TwoBlockPartition>>)> = Vec::new();
    for v in 0..g.vertex_count() {
        if v == g.basepoint() || g.degree(v) < 4 || g.degree(v) > caps.max_vertex_degree {
            continue;
        }
        let chains = enumerate_chains(g.degree(v), caps.max_partitions_per_vertex);
        if !chains.is_empty() {
            per_vertex.push((v, chains));
        }
    }
    let mut out = Vec::new();
    let mut stack: Vec<VertexBlowUp> = Vec::new();
    assign(g, &per_vertex, 0, &mut stack, &mut out, caps.max_tuples_per_graph);
    out
}

fn assign(
    g: &BasepointedGraph,
    per_vertex: &[(VertexId, Vec<Vec<TwoBlockPartition>>)],
    i: usize,
    stack: &mut Vec<VertexBlowUp>,
    out: &mut Vec<GraphBlowUp>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    if i == per_vertex.len() {
        if !stack.is_empty() {
            out.push(GraphBlowUp { entries: stack.clone() });
        }
        return;
    }
    assign(g, per_vertex, i + 1, stack, out, cap);
    let (v, chains) = &per_vertex[i];
    for chain in chains {
        let entry = VertexBlowUp::new(g, *v, chain).expect("enumerated chain is valid");
        stack.push(entry);
        assign(g, per_vertex, i + 1, stack, out, cap);
        stack.pop();
        if out.len() >= cap {
            return;
        }
    }
}
