use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::HarnessError;
use crate::graph::BasepointedGraph;

/// Enumerates one representative per isomorphism class of valid basepointed
/// graphs with the given rank (first Betti number) and at most
/// `max_vertices` vertices. The basepoint is vertex 0 and must have degree
/// at least `min_basepoint_degree`; representatives are canonical and the
/// output order is deterministic.
///
/// `hard_bound` caps `max_vertices`: canonicalization is brute force over
/// basepoint-fixing relabellings, so the bound keeps requests honest.
pub fn enumerate_graphs(
    rank: i64,
    max_vertices: usize,
    min_basepoint_degree: usize,
    hard_bound: usize,
) -> Result<Vec<BasepointedGraph>, HarnessError> {
    if max_vertices > hard_bound {
        return Err(HarnessError::BoundExceeded {
            what: "graph enumeration vertex bound".into(),
            requested: max_vertices,
            bound: hard_bound,
        });
    }
    let mut canonical_lists: BTreeSet<(usize, Vec<(usize, usize)>)> = BTreeSet::new();
    for v_count in 1..=max_vertices {
        let edge_count = v_count as i64 + rank - 1;
        if edge_count < 0 {
            continue;
        }
        let edge_count = edge_count as usize;
        let types: Vec<(usize, usize)> = (0..v_count)
            .flat_map(|u| (u..v_count).map(move |w| (u, w)))
            .collect();
        for pick in (0..types.len()).combinations_with_replacement(edge_count) {
            let edges: Vec<(usize, usize)> = pick.iter().map(|&t| types[t]).collect();
            let mut degrees = vec![0usize; v_count];
            for &(a, b) in &edges {
                degrees[a] += 1;
                degrees[b] += 1;
            }
            if degrees[0] < min_basepoint_degree {
                continue;
            }
            if degrees.iter().skip(1).any(|&d| d < 3) {
                continue;
            }
            let Ok(g) = BasepointedGraph::from_edges(v_count, 0, &edges) else {
                continue;
            };
            canonical_lists.insert((v_count, g.canonical_edge_list()));
        }
    }
    Ok(canonical_lists
        .into_iter()
        .map(|(v_count, edges)| {
            BasepointedGraph::from_edges(v_count, 0, &edges)
                .expect("canonical form of a valid graph is valid")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_small_families() {
        let one = enumerate_graphs(2, 1, 1, 6).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].edges(), vec![(0, 0), (0, 0)]);

        let two = enumerate_graphs(2, 2, 1, 6).unwrap();
        assert_eq!(two.len(), 5);
        let two_vertex: Vec<_> = two.iter().filter(|g| g.vertex_count() == 2).collect();
        assert_eq!(two_vertex.len(), 4);
        let edge_lists: BTreeSet<Vec<(usize, usize)>> =
            two_vertex.iter().map(|g| g.canonical_edge_list()).collect();
        let expected: BTreeSet<Vec<(usize, usize)>> = [
            vec![(0, 1), (0, 1), (0, 1)],
            vec![(0, 1), (0, 1), (1, 1)],
            vec![(0, 0), (0, 1), (1, 1)],
            vec![(0, 1), (1, 1), (1, 1)],
        ]
        .into_iter()
        .collect();
        assert_eq!(edge_lists, expected);
    }

    #[test]
    fn representatives_are_valid_and_distinct() {
        let graphs = enumerate_graphs(3, 4, 1, 6).unwrap();
        assert!(!graphs.is_empty());
        for g in &graphs {
            assert_eq!(g.rank(), 3);
            assert!(g.vertex_count() <= 4);
        }
        let canon: BTreeSet<Vec<(usize, usize)>> =
            graphs.iter().map(|g| g.canonical_edge_list()).collect();
        assert_eq!(canon.len(), graphs.len());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_graphs(2, 7, 1, 6),
            Err(HarnessError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn basepoint_degree_floor() {
        let graphs = enumerate_graphs(2, 2, 3, 6).unwrap();
        assert!(graphs.iter().all(|g| g.degree(g.basepoint()) >= 3));
        assert!(graphs.iter().any(|g| g.vertex_count() == 2));
    }
}
