use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::PosetError;

/// A finite strict partial order on elements `0..len`, stored as the full
/// transitive closure of the relations given at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the poset generated by `relations` (each `(a, b)` meaning
    /// `a < b`), closing transitively and rejecting cycles.
    pub fn new(len: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut less = vec![vec![false; len]; len];
        for &(a, b) in relations {
            for x in [a, b] {
                if x >= len {
                    return Err(PosetError::BadElement { element: x, element_count: len });
                }
            }
            less[a][b] = true;
        }
        // Floyd-Warshall closure.
        for k in 0..len {
            for i in 0..len {
                if less[i][k] {
                    for j in 0..len {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, row) in less.iter().enumerate() {
            if row[i] {
                return Err(PosetError::Cycle { element: i });
            }
        }
        Ok(Self { less })
    }

    pub fn len(&self) -> usize {
        self.less.len()
    }

    pub fn is_empty(&self) -> bool {
        self.less.is_empty()
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a != b && (self.less[a][b] || self.less[b][a])
    }

    /// Does `map` carry this poset isomorphically onto `other`? `map` must
    /// be a bijection of element ranges.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        if self.len() != other.len() || map.len() != self.len() {
            return false;
        }
        let mut seen = vec![false; self.len()];
        for &m in map {
            if m >= self.len() || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| self.less[a][b] == other.less[map[a]][map[b]])
        })
    }

    /// The order complex: one vertex per element, one simplex per chain.
    /// Chains are face-closed by construction.
    pub fn order_complex(&self) -> SimplicialComplex {
        let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut chain: Vec<usize> = Vec::new();
        for start in 0..self.len() {
            self.grow_chains(start, &mut chain, &mut set);
        }
        SimplicialComplex::from_closed_set(self.len(), set)
    }

    fn grow_chains(&self, next: usize, chain: &mut Vec<usize>, set: &mut BTreeSet<Vec<u32>>) {
        chain.push(next);
        let mut simplex: Vec<u32> = chain.iter().map(|&x| x as u32).collect();
        simplex.sort_unstable();
        set.insert(simplex);
        for above in 0..self.len() {
            if self.less[next][above] {
                self.grow_chains(above, chain, set);
            }
        }
        chain.pop();
    }
}
