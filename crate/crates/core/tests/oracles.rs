//! Cross-checks of the computational engines against independent
//! reimplementations and against spaces with textbook answers.

use auterlab_core::{
    classify, collapse_forest, descending_forest_poset, enumerate_graphs, is_collapsible,
    is_compatible, reduced_homology, BasepointedGraph, CompatMode, Forest, HomotopyClass, Poset,
    SimplicialComplex, TwoBlockPartition,
};
use itertools::Itertools;
use num_bigint::BigInt;

fn family() -> Vec<BasepointedGraph> {
    let mut out = Vec::new();
    for rank in 2..=3 {
        out.extend(enumerate_graphs(rank, 5, 1, 6).expect("bounds are modest"));
    }
    out
}

/// Vertex levels are defined by breadth-first search; recompute them with
/// Floyd-Warshall over the underlying simple distances and compare.
#[test]
fn vertex_levels_match_floyd_warshall() {
    let graphs = family();
    assert!(graphs.len() > 100, "family unexpectedly small: {}", graphs.len());
    for g in graphs {
        let n = g.vertex_count();
        let inf = usize::MAX / 2;
        let mut dist = vec![vec![inf; n]; n];
        for (v, row) in dist.iter_mut().enumerate() {
            row[v] = 0;
        }
        for e in 0..g.edge_count() {
            let (u, v) = g.edge_endpoints(e);
            if u != v {
                dist[u][v] = 1;
                dist[v][u] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    dist[i][j] = dist[i][j].min(dist[i][k] + dist[k][j]);
                }
            }
        }
        for v in 0..n {
            assert_eq!(g.level(v), dist[g.basepoint()][v], "level of {v} in {}", g.to_json());
        }
    }
}

#[test]
fn textbook_spaces_have_textbook_homology() {
    for k in 2..=5 {
        let sphere = SimplicialComplex::boundary_of_simplex(k);
        assert_eq!(
            classify(&reduced_homology(&sphere)),
            HomotopyClass::Wedge { dim: k - 1, count: 1 },
            "boundary of the {k}-simplex"
        );
        let solid =
            SimplicialComplex::from_maximal(k + 1, &[(0..=k as u32).collect()]).unwrap();
        assert_eq!(classify(&reduced_homology(&solid)), HomotopyClass::Acyclic);
        assert!(is_collapsible(&solid), "solid simplices collapse");
    }

    let square = SimplicialComplex::from_maximal(
        4,
        &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
    )
    .unwrap();
    assert_eq!(
        classify(&reduced_homology(&square)),
        HomotopyClass::Wedge { dim: 1, count: 1 }
    );
}

/// The 6-vertex triangulation of the projective plane: every pair of
/// vertices an edge, ten triangles, and 2-torsion in degree one. This drives
/// the Smith normal form through a case with a non-unit invariant factor.
#[test]
fn minimal_projective_plane_has_two_torsion() {
    let facets: Vec<Vec<u32>> = vec![
        vec![0, 1, 2],
        vec![0, 1, 3],
        vec![0, 2, 4],
        vec![0, 3, 5],
        vec![0, 4, 5],
        vec![1, 2, 5],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![2, 3, 4],
        vec![2, 3, 5],
    ];
    let rp2 = SimplicialComplex::from_maximal(6, &facets).unwrap();
    assert_eq!(rp2.f_vector(), vec![6, 15, 10]);
    let h = reduced_homology(&rp2);
    for d in -1..=2 {
        assert_eq!(h.rank(d), 0, "free rank in degree {d}");
    }
    assert_eq!(h.torsion(1), &[BigInt::from(2)]);
    assert!(h.torsion(0).is_empty() && h.torsion(2).is_empty());
    assert_eq!(classify(&h), HomotopyClass::Other);
}

fn posets_isomorphic(a: &Poset, b: &Poset) -> bool {
    a.len() == b.len()
        && (0..a.len()).permutations(a.len()).any(|map| a.is_isomorphism(b, &map))
}

fn strict_link(p: &Poset, at: usize) -> Poset {
    let members: Vec<usize> =
        (0..p.len()).filter(|&i| i != at && p.comparable(i, at)).collect();
    let mut relations = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            if p.less(a, b) {
                relations.push((i, j));
            }
        }
    }
    Poset::new(members.len(), &relations).expect("restriction of a partial order")
}

/// Contracting a deepest descending edge matches taking the link of that
/// edge in the descending-forest poset: forests through the edge correspond
/// to forests of the contracted graph.
#[test]
fn forest_poset_link_matches_contraction() {
    // Three parallel edges: each edge is its own maximal forest, so every
    // link is empty, as is the forest poset of the contraction (a rose).
    let theta = BasepointedGraph::from_edges(2, 0, &[(0, 1), (0, 1), (0, 1)]).unwrap();
    let (poset, forests) = descending_forest_poset(&theta);
    assert_eq!(poset.len(), 3);
    for a in 0..3 {
        for b in 0..3 {
            assert!(a == b || !poset.comparable(a, b));
        }
    }
    let eps = forests.iter().position(|f| f.edges() == [0]).unwrap();
    let link = strict_link(&poset, eps);
    let contracted = collapse_forest(&theta, &Forest::new(&theta, &[0]).unwrap()).unwrap().graph;
    let (rose_poset, _) = descending_forest_poset(&contracted);
    assert_eq!(link.len(), 0);
    assert!(posets_isomorphic(&link, &rose_poset));

    // Two levels: p = v twice, v = w three times. Eleven descending forests;
    // the link of a deepest edge has two incomparable members, matching the
    // two forests of the contraction.
    let g = BasepointedGraph::from_edges(
        3,
        0,
        &[(0, 1), (0, 1), (1, 2), (1, 2), (1, 2)],
    )
    .unwrap();
    let (poset, forests) = descending_forest_poset(&g);
    assert_eq!(poset.len(), 11);
    let eps = forests.iter().position(|f| f.edges() == [2]).unwrap();
    let link = strict_link(&poset, eps);
    let contracted = collapse_forest(&g, &Forest::new(&g, &[2]).unwrap()).unwrap().graph;
    let (q, _) = descending_forest_poset(&contracted);
    assert_eq!(link.len(), 2);
    assert!(posets_isomorphic(&link, &q));
}

/// At each filtration stage the incoming vertices (prefix split falls at the
/// last label, co-block of the stage's exact size) are pairwise
/// incompatible, in both compatibility modes: their co-blocks share the last
/// prefix label, which rules the classical extra case out as well.
#[test]
fn distinct_stage_vertices_are_never_compatible() {
    for n in 4..=6 {
        for k in 2..=n {
            for m in 2..=(n - 2) {
                let fresh: Vec<TwoBlockPartition> = TwoBlockPartition::all(n)
                    .into_iter()
                    .filter(|p| {
                        p.splits_prefix(k) && !p.splits_prefix(k - 1) && p.size() == m
                    })
                    .collect();
                for i in 0..fresh.len() {
                    for j in i + 1..fresh.len() {
                        for mode in [CompatMode::Nested, CompatMode::Classical] {
                            assert!(
                                !is_compatible(&fresh[i], &fresh[j], mode).unwrap(),
                                "{} and {} at n={n}, k={k}, m={m}",
                                fresh[i],
                                fresh[j]
                            );
                        }
                    }
                }
            }
        }
    }
}
