use std::fmt;
use std::str::FromStr;

use crate::complex::SimplicialComplex;
use crate::config::CompatMode;
use crate::error::{GraphError, SigmaError};
use crate::graph::{BasepointedGraph, VertexId};
use crate::partition::{is_compatible, TwoBlockPartition};
use crate::poset::Poset;

/// Names one member of the family of partition complexes on ground set
/// `{1, ..., n}`:
///
/// - `n` alone: every two-block partition is a vertex;
/// - with `k`: only partitions separating `1..=k`;
/// - with `k` and `m`: partitions separating `1..=k-1`, plus those
///   separating `1..=k` whose size is below `m`.
///
/// Simplices are sets of pairwise-compatible partitions, so each member is
/// a flag complex and vertex subsets induce subcomplexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionComplexSpec {
    n: usize,
    k: Option<usize>,
    m: Option<usize>,
}

impl PartitionComplexSpec {
    pub fn new(n: usize, k: Option<usize>, m: Option<usize>) -> Result<Self, SigmaError> {
        if !(4..=32).contains(&n) {
            return Err(SigmaError::BadRange {
                reason: format!("ground set size {n} outside 4..=32"),
            });
        }
        if let Some(k) = k {
            if !(2..=n).contains(&k) {
                return Err(SigmaError::BadRange {
                    reason: format!("separated prefix length {k} outside 2..={n}"),
                });
            }
        }
        if let Some(m) = m {
            if k.is_none() {
                return Err(SigmaError::BadRange {
                    reason: "size bound m needs a prefix length k".into(),
                });
            }
            if !(2..=n).contains(&m) {
                return Err(SigmaError::BadRange {
                    reason: format!("size bound {m} outside 2..={n}"),
                });
            }
        }
        Ok(Self { n, k, m })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn prefix(&self) -> Option<usize> {
        self.k
    }

    pub fn size_bound(&self) -> Option<usize> {
        self.m
    }

    /// Is the partition a vertex of this complex?
    pub fn allows(&self, p: &TwoBlockPartition) -> bool {
        if p.ground_size() != self.n {
            return false;
        }
        match (self.k, self.m) {
            (None, _) => true,
            (Some(k), None) => p.splits_prefix(k),
            (Some(k), Some(m)) => {
                p.splits_prefix(k - 1) || (p.splits_prefix(k) && p.size() < m)
            }
        }
    }
}

impl fmt::Display for PartitionComplexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma:n={}", self.n)?;
        if let Some(k) = self.k {
            write!(f, ",k={k}")?;
        }
        if let Some(m) = self.m {
            write!(f, ",m={m}")?;
        }
        Ok(())
    }
}

impl FromStr for PartitionComplexSpec {
    type Err = SigmaError;

    /// Accepts the `Display` shape: `sigma:n=6,k=3,m=4` with `k` and `m`
    /// optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| SigmaError::BadSpec {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim().strip_prefix("sigma:").ok_or_else(|| bad("missing sigma: prefix"))?;
        let (mut n, mut k, mut m) = (None, None, None);
        for field in body.split(',') {
            let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let value: usize =
                value.trim().parse().map_err(|_| bad(&format!("bad number {value:?}")))?;
            let slot = match key.trim() {
                "n" => &mut n,
                "k" => &mut k,
                "m" => &mut m,
                other => return Err(bad(&format!("unknown key {other:?}"))),
            };
            if slot.replace(value).is_some() {
                return Err(bad(&format!("repeated key {:?}", key.trim())));
            }
        }
        let n = n.ok_or_else(|| bad("missing n"))?;
        Self::new(n, k, m)
    }
}

/// Builds the named partition complex. Vertex `i` of the result stands for
/// `TwoBlockPartition::all(n)[i]`, so every member of the family for a fixed
/// `n` lives on the same label range and stage inclusions are literal.
pub fn sigma(spec: &PartitionComplexSpec, mode: CompatMode) -> SimplicialComplex {
    let all = TwoBlockPartition::all(spec.ground_size());
    let allowed: Vec<u32> =
        (0..all.len()).filter(|&i| spec.allows(&all[i])).map(|i| i as u32).collect();
    flag_complex(&all, &allowed, mode)
}

/// Flag complex on the given partition vertices: cliques of the pairwise
/// compatibility graph. `allowed` must be ascending indices into `all`.
fn flag_complex(
    all: &[TwoBlockPartition],
    allowed: &[u32],
    mode: CompatMode,
) -> SimplicialComplex {
    let rows = allowed.len();
    let mut adj = vec![vec![false; rows]; rows];
    for i in 0..rows {
        for j in i + 1..rows {
            let ok = is_compatible(&all[allowed[i] as usize], &all[allowed[j] as usize], mode)
                .expect("distinct partitions on one ground set");
            adj[i][j] = ok;
            adj[j][i] = ok;
        }
    }
    let mut set = std::collections::BTreeSet::new();
    let mut clique: Vec<usize> = Vec::new();
    grow_cliques(&adj, allowed, 0, &mut clique, &mut set);
    SimplicialComplex::from_closed_set(all.len(), set)
}

fn grow_cliques(
    adj: &[Vec<bool>],
    allowed: &[u32],
    start: usize,
    clique: &mut Vec<usize>,
    set: &mut std::collections::BTreeSet<Vec<u32>>,
) {
    for next in start..allowed.len() {
        if clique.iter().all(|&c| adj[c][next]) {
            clique.push(next);
            set.insert(clique.iter().map(|&c| allowed[c]).collect());
            grow_cliques(adj, allowed, next + 1, clique, set);
            clique.pop();
        }
    }
}

/// The full stage list for ground set size `n`, ascending by inclusion:
/// the prefix-2 complex, then for each prefix length `k` every size-bounded
/// stage followed by the unbounded one, and finally the unrestricted
/// complex.
pub fn sigma_filtration(n: usize) -> Result<Vec<PartitionComplexSpec>, SigmaError> {
    let mut stages = vec![PartitionComplexSpec::new(n, Some(2), None)?];
    for k in 3..n {
        for m in 2..=n {
            stages.push(PartitionComplexSpec::new(n, Some(k), Some(m))?);
        }
        stages.push(PartitionComplexSpec::new(n, Some(k), None)?);
    }
    stages.push(PartitionComplexSpec::new(n, None, None)?);
    Ok(stages)
}

/// How a size-`m` partition vertex meets the stage below it, split by which
/// side of the compatibility each neighbour sits on.
#[derive(Debug, Clone)]
pub struct RelativeLinkParts {
    /// The stage the vertex attaches to.
    pub stage: PartitionComplexSpec,
    /// All stage vertices compatible with the new vertex, as an induced
    /// subcomplex of the stage.
    pub relative_link: SimplicialComplex,
    /// Neighbours whose label-1 block strictly contains the vertex's.
    pub outer: SimplicialComplex,
    /// The remaining neighbours: label-1 block strictly inside the
    /// vertex's, or (in the extended mode) complementary block disjoint
    /// from the vertex's.
    pub inner: SimplicialComplex,
}

/// Computes the link of a size-`m` vertex relative to the size-bounded stage
/// it attaches to, together with the two halves whose join it is. The two
/// compatibility modes give genuinely different inner halves, so the mode is
/// explicit.
///
/// The vertex must separate `1..=k` but not `1..=k-1` and have size exactly
/// `m`; equivalently its label-1 block contains `1..=k-1` and misses `k`.
pub fn relative_link_decomposition(
    n: usize,
    k: usize,
    m: usize,
    v: &TwoBlockPartition,
    mode: CompatMode,
) -> Result<RelativeLinkParts, SigmaError> {
    if k < 3 {
        return Err(SigmaError::BadRange {
            reason: format!("relative links need prefix length >= 3, got {k}"),
        });
    }
    let spec = PartitionComplexSpec::new(n, Some(k), Some(m))?;
    let not_size_m = |reason: String| SigmaError::NotASizeMVertex { m, reason };
    if v.ground_size() != n {
        return Err(not_size_m(format!("ground set {} is not {n}", v.ground_size())));
    }
    if v.size() != m {
        return Err(not_size_m(format!("size is {}", v.size())));
    }
    if !v.splits_prefix(k) {
        return Err(not_size_m(format!("does not separate 1..={k}")));
    }
    if v.splits_prefix(k - 1) {
        return Err(not_size_m(format!("already separates 1..={}", k - 1)));
    }
    let stage_complex = sigma(&spec, mode);
    let all = TwoBlockPartition::all(n);
    let mut neighbours = Vec::new();
    let mut outer_ids = Vec::new();
    let mut inner_ids = Vec::new();
    for (i, p) in all.iter().enumerate() {
        if !spec.allows(p) || !is_compatible(p, v, mode).expect("v is not a stage vertex") {
            continue;
        }
        neighbours.push(i as u32);
        if p.side_mask() & v.side_mask() == v.side_mask() {
            outer_ids.push(i as u32);
        } else {
            inner_ids.push(i as u32);
        }
    }
    Ok(RelativeLinkParts {
        stage: spec,
        relative_link: stage_complex.induced(&neighbours),
        outer: stage_complex.induced(&outer_ids),
        inner: stage_complex.induced(&inner_ids),
    })
}

/// The complex of single-vertex blow-up moves at `v` that lower the graph:
/// two-block partitions of the labels at `v` separating its descending
/// labels, with nested chains as simplices. Void when the degree is below
/// four or fewer than two labels descend.
pub fn descending_split_complex(
    g: &BasepointedGraph,
    v: VertexId,
) -> Result<SimplicialComplex, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::NoSuchVertex { vertex: v, vertex_count: g.vertex_count() });
    }
    let all = TwoBlockPartition::all(g.degree(v));
    let d = g.descending_count(v);
    let allowed: Vec<u32> =
        (0..all.len()).filter(|&i| all[i].splits_prefix(d)).map(|i| i as u32).collect();
    Ok(flag_complex(&all, &allowed, CompatMode::Nested))
}

/// The poset of all single-vertex blow-ups at `v`: nonempty nested chains of
/// label partitions, ordered by inclusion. Returns the poset together with
/// the chain each element stands for.
pub fn blow_up_poset(
    g: &BasepointedGraph,
    v: VertexId,
) -> Result<(Poset, Vec<Vec<TwoBlockPartition>>), GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::NoSuchVertex { vertex: v, vertex_count: g.vertex_count() });
    }
    let deg = g.degree(v);
    let chains = crate::blowup::enumerate_chains(deg, deg.max(1));
    let sets: Vec<std::collections::BTreeSet<u32>> = chains
        .iter()
        .map(|c| c.iter().map(|p| p.side_mask()).collect())
        .collect();
    let mut relations = Vec::new();
    for a in 0..sets.len() {
        for b in 0..sets.len() {
            if a != b && sets[a].is_subset(&sets[b]) {
                relations.push((a, b));
            }
        }
    }
    let poset = Poset::new(chains.len(), &relations).expect("inclusion order is acyclic");
    Ok((poset, chains))
}
