use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{faces_of, SimplicialComplex};

/// Outcome of greedy free-face collapsing. `collapsed_to_point` is a
/// certificate of contractibility (never a refutation: greedy collapsing
/// can strand contractible complexes).
#[derive(Debug, Clone)]
pub struct CollapseCertificate {
    pub collapsed_to_point: bool,
    pub steps: usize,
    pub remaining: SimplicialComplex,
}

/// Repeatedly removes the lexicographically least free pair: a simplex with
/// exactly one immediate coface, together with that coface (which the count
/// forces to be maximal). Deterministic; homotopy type is preserved at
/// every step.
pub fn free_face_collapse(x: &SimplicialComplex) -> CollapseCertificate {
    let mut present: BTreeSet<Vec<u32>> = x.all_simplices().cloned().collect();
    let mut coface_count: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for s in &present {
        coface_count.entry(s.clone()).or_insert(0);
        if s.len() >= 2 {
            for face in faces_of(s) {
                *coface_count.entry(face).or_insert(0) += 1;
            }
        }
    }
    let mut candidates: BTreeSet<(usize, Vec<u32>)> = coface_count
        .iter()
        .filter(|&(_, &c)| c == 1)
        .map(|(s, _)| (s.len(), s.clone()))
        .collect();

    let mut steps = 0usize;
    while let Some((_, free)) = candidates.pop_first() {
        if !present.contains(&free) || coface_count[&free] != 1 {
            continue;
        }
        let coface = unique_coface(x.vertex_count(), &present, &free)
            .expect("count says one coface exists");
        present.remove(&free);
        present.remove(&coface);
        coface_count.remove(&free);
        coface_count.remove(&coface);
        steps += 1;
        for removed in [&free, &coface] {
            if removed.len() < 2 {
                continue;
            }
            for face in faces_of(removed) {
                if let Some(c) = coface_count.get_mut(&face) {
                    *c -= 1;
                    if *c == 1 {
                        candidates.insert((face.len(), face));
                    }
                }
            }
        }
    }

    let remaining = SimplicialComplex::from_closed_set(x.vertex_count(), present);
    let collapsed_to_point = remaining.total_simplices() == 1;
    CollapseCertificate { collapsed_to_point, steps, remaining }
}

/// Certifies contractibility by collapsing; `false` only means the greedy
/// strategy got stuck.
pub fn is_collapsible(x: &SimplicialComplex) -> bool {
    free_face_collapse(x).collapsed_to_point
}

fn unique_coface(
    vertex_count: usize,
    present: &BTreeSet<Vec<u32>>,
    simplex: &[u32],
) -> Option<Vec<u32>> {
    for v in 0..vertex_count as u32 {
        if simplex.contains(&v) {
            continue;
        }
        let mut bigger = simplex.to_vec();
        bigger.push(v);
        bigger.sort_unstable();
        if present.contains(&bigger) {
            return Some(bigger);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{classify, reduced_homology, HomotopyClass};

    #[test]
    fn solid_simplex_collapses() {
        let x = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2, 3]]).unwrap();
        let out = free_face_collapse(&x);
        assert!(out.collapsed_to_point);
        assert_eq!(out.steps, 7);
    }

    #[test]
    fn sphere_has_no_free_faces()  {
        let circle = SimplicialComplex::boundary_of_simplex(2);
        let out = free_face_collapse(&circle);
        assert!(!out.collapsed_to_point);
        assert_eq!(out.steps, 0);
        assert_eq!(out.remaining, circle);
    }

    #[test]
    fn glued_triangles_collapse() {
        let x = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(is_collapsible(&x));
    }

    #[test]
    fn point_and_void() {
        assert!(is_collapsible(&SimplicialComplex::point()));
        assert!(!is_collapsible(&SimplicialComplex::void()));
    }

    #[test]
    fn collapsing_preserves_homology() {
        // Stop-start shapes: a disk with a flap and a two-component complex.
        let x = SimplicialComplex::from_maximal(
            5,
            &[vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![2, 4]],
        )
        .unwrap();
        let out = free_face_collapse(&x);
        assert_eq!(reduced_homology(&out.remaining), reduced_homology(&x));
        assert_eq!(classify(&reduced_homology(&x)), HomotopyClass::Wedge { dim: 1, count: 1 });
    }
}
