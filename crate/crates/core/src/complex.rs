use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::ComplexError;

/// A finite abstract simplicial complex on vertex labels `0..vertex_count`.
/// Simplices are stored per dimension as sorted vertex lists, each
/// dimension sorted lexicographically; labels may go unused. The complex
/// with no simplices at all (the void complex) is allowed and matters: it
/// is the identity for joins and carries homology in degree -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    dims: Vec<Vec<Vec<u32>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    vertices: usize,
    facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// The complex with no simplices and no ambient labels.
    pub fn void() -> Self {
        Self { vertex_count: 0, dims: Vec::new() }
    }

    /// A single labelled point.
    pub fn point() -> Self {
        Self::from_maximal(1, &[vec![0]]).expect("point is well formed")
    }

    /// Builds the downward closure of the given generating simplices.
    pub fn from_maximal(vertex_count: usize, generators: &[Vec<u32>]) -> Result<Self, ComplexError> {
        let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
        for gen in generators {
            let mut simplex = gen.clone();
            simplex.sort_unstable();
            let before = simplex.len();
            simplex.dedup();
            if simplex.len() != before {
                return Err(ComplexError::DuplicateVertex { simplex: gen.clone() });
            }
            if simplex.iter().any(|&v| v as usize >= vertex_count) {
                return Err(ComplexError::VertexOutOfRange { simplex: gen.clone(), vertex_count });
            }
            for mask in 1u64..(1 << simplex.len()) {
                let face: Vec<u32> = simplex
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                set.insert(face);
            }
        }
        Ok(Self::from_closed_set(vertex_count, set))
    }

    /// Wraps an already face-closed set of nonempty simplices.
    pub(crate) fn from_closed_set(vertex_count: usize, set: BTreeSet<Vec<u32>>) -> Self {
        let top = set.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut dims: Vec<Vec<Vec<u32>>> = vec![Vec::new(); top];
        for simplex in set {
            let d = simplex.len() - 1;
            dims[d].push(simplex);
        }
        for level in &mut dims {
            level.sort();
        }
        Self { vertex_count, dims }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.dims.is_empty()
    }

    /// Top dimension, `None` for the void complex.
    pub fn dimension(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    /// Sorted `d`-simplices; empty slice above the top dimension.
    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.dims.get(d).map_or(&[], |v| v.as_slice())
    }

    /// Number of simplices per dimension, empty for the void complex.
    pub fn f_vector(&self) -> Vec<usize> {
        self.dims.iter().map(|level| level.len()).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.dims.iter().map(|level| level.len()).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(d, level)| if d % 2 == 0 { level.len() as i64 } else { -(level.len() as i64) })
            .sum()
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        if simplex.is_empty() {
            return !self.is_void();
        }
        let mut sorted = simplex.to_vec();
        sorted.sort_unstable();
        self.simplices(sorted.len() - 1).binary_search(&sorted).is_ok()
    }

    /// Maximal simplices, ordered by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for d in 0..self.dims.len() {
            let covered: BTreeSet<Vec<u32>> = self
                .simplices(d + 1)
                .iter()
                .flat_map(|s| faces_of(s))
                .collect();
            for s in &self.dims[d] {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Join of two complexes on the disjoint union of their label sets;
    /// labels of `other` are shifted up by `self.vertex_count`. The void
    /// complex is a two-sided identity.
    pub fn join(&self, other: &Self) -> Self {
        let shift = self.vertex_count as u32;
        let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mine: Vec<Vec<u32>> = self.all_simplices().cloned().collect();
        let theirs: Vec<Vec<u32>> = other
            .all_simplices()
            .map(|s| s.iter().map(|&v| v + shift).collect())
            .collect();
        for s in &mine {
            set.insert(s.clone());
        }
        for t in &theirs {
            set.insert(t.clone());
        }
        for s in &mine {
            for t in &theirs {
                let mut joined = s.clone();
                joined.extend_from_slice(t);
                set.insert(joined);
            }
        }
        Self::from_closed_set(self.vertex_count + other.vertex_count, set)
    }

    /// Simplices disjoint from `simplex` whose union with it is in the
    /// complex.
    pub fn link(&self, simplex: &[u32]) -> Result<Self, ComplexError> {
        self.around(simplex, false)
    }

    /// The closed star: all simplices whose union with `simplex` is in the
    /// complex. Always a cone over `simplex`'s vertices, hence collapsible.
    pub fn star(&self, simplex: &[u32]) -> Result<Self, ComplexError> {
        self.around(simplex, true)
    }

    fn around(&self, simplex: &[u32], keep_overlap: bool) -> Result<Self, ComplexError> {
        if !self.contains(simplex) {
            return Err(ComplexError::SimplexAbsent { simplex: simplex.to_vec() });
        }
        let base: BTreeSet<u32> = simplex.iter().copied().collect();
        let mut set = BTreeSet::new();
        for s in self.all_simplices() {
            if !keep_overlap && s.iter().any(|v| base.contains(v)) {
                continue;
            }
            let mut union: Vec<u32> = s.iter().copied().chain(base.iter().copied()).collect();
            union.sort_unstable();
            union.dedup();
            if self.contains(&union) {
                set.insert(s.clone());
            }
        }
        Ok(Self::from_closed_set(self.vertex_count, set))
    }

    /// Full subcomplex on the simplices using only the given vertices.
    pub fn induced(&self, keep: &[u32]) -> Self {
        let keep: BTreeSet<u32> = keep.iter().copied().collect();
        let set: BTreeSet<Vec<u32>> = self
            .all_simplices()
            .filter(|s| s.iter().all(|v| keep.contains(v)))
            .cloned()
            .collect();
        Self::from_closed_set(self.vertex_count, set)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.dims.iter().flatten()
    }

    /// Boundary of the standard `d`-simplex, a triangulated `(d-1)`-sphere;
    /// `d = 0` gives the void complex.
    pub fn boundary_of_simplex(d: usize) -> Self {
        if d == 0 {
            return Self::void();
        }
        let vertices: Vec<u32> = (0..=d as u32).collect();
        let generators: Vec<Vec<u32>> = (0..=d)
            .map(|skip| {
                vertices.iter().copied().filter(|&v| v != skip as u32).collect()
            })
            .collect();
        Self::from_maximal(d + 1, &generators).expect("boundary faces are well formed")
    }

    pub fn to_json(&self) -> String {
        let file = ComplexFile { vertices: self.vertex_count, facets: self.facets() };
        serde_json::to_string_pretty(&file).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ComplexError> {
        let file: ComplexFile =
            serde_json::from_str(text).map_err(|e| ComplexError::Parse(e.to_string()))?;
        Self::from_maximal(file.vertices, &file.facets)
    }
}

/// All codimension-1 faces of a sorted simplex.
pub(crate) fn faces_of(simplex: &[u32]) -> Vec<Vec<u32>> {
    (0..simplex.len())
        .map(|skip| {
            simplex
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_f_vector() {
        let x = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
        assert_eq!(x.euler_characteristic(), 1);
        assert!(x.contains(&[2, 0]));
        assert_eq!(x.facets(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn void_complex() {
        let v = SimplicialComplex::void();
        assert!(v.is_void());
        assert_eq!(v.dimension(), None);
        assert_eq!(v.f_vector(), Vec::<usize>::new());
        assert_eq!(v.euler_characteristic(), 0);
        assert!(!v.contains(&[]));
    }

    #[test]
    fn join_identity_and_suspension() {
        let s0 = SimplicialComplex::from_maximal(2, &[vec![0], vec![1]]).unwrap();
        let joined = s0.join(&s0);
        // S^0 * S^0 is a 4-cycle.
        assert_eq!(joined.f_vector(), vec![4, 4]);
        assert_eq!(joined.euler_characteristic(), 0);
        let with_void = s0.join(&SimplicialComplex::void());
        assert_eq!(with_void, s0);
        let other_side = SimplicialComplex::void().join(&s0);
        assert_eq!(other_side, s0);
    }

    #[test]
    fn link_and_star() {
        let x = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let link = x.link(&[1]).unwrap();
        assert_eq!(link.facets(), vec![vec![0, 2], vec![2, 3]]);
        let star = x.star(&[3]).unwrap();
        assert_eq!(star.facets(), vec![vec![1, 2, 3]]);
        let edge_link = x.link(&[1, 2]).unwrap();
        assert_eq!(edge_link.f_vector(), vec![2]);
        assert!(matches!(
            x.link(&[0, 3]),
            Err(ComplexError::SimplexAbsent { .. })
        ));
    }

    #[test]
    fn boundary_spheres() {
        let circle = SimplicialComplex::boundary_of_simplex(2);
        assert_eq!(circle.f_vector(), vec![3, 3]);
        let s0 = SimplicialComplex::boundary_of_simplex(1);
        assert_eq!(s0.f_vector(), vec![2]);
        assert!(SimplicialComplex::boundary_of_simplex(0).is_void());
    }

    #[test]
    fn induced_subcomplex() {
        let x = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let y = x.induced(&[0, 1, 3]);
        assert_eq!(y.facets(), vec![vec![0, 1], vec![1, 3]]);
    }

    #[test]
    fn rejects_bad_simplices() {
        assert!(SimplicialComplex::from_maximal(2, &[vec![0, 2]]).is_err());
        assert!(SimplicialComplex::from_maximal(2, &[vec![1, 1]]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let x = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let back = SimplicialComplex::from_json(&x.to_json()).unwrap();
        assert_eq!(x, back);
    }
}
