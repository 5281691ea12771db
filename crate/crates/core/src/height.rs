use std::cmp::Ordering;
use std::fmt;

use crate::graph::BasepointedGraph;

/// The height of a basepointed graph: the tuple
/// `(d_0, n_1, d_1, n_2, d_2, ...)` truncated after the last populated
/// level, together with the eventual tail values `(n_i, d_i)` for levels
/// beyond the deepest one.
///
/// For a graph with basepoint `p` and `E` edges:
/// `d_0` is the sum of `degree(v) - 2` over non-basepoint vertices,
/// `n_i` is minus the number of level-`i` vertices, and `d_i` for `i >= 1`
/// is the total degree of the vertices *outside* level `i`, which equals
/// `2E` minus the degree sum of level `i`. Past the deepest level the
/// entries are constantly `(0, 2E)`, recorded here as the tail.
#[derive(Debug, Clone)]
pub struct HeightVector {
    head: Vec<i64>,
    tail: (i64, i64),
}

impl HeightVector {
    pub fn new(head: Vec<i64>, tail: (i64, i64)) -> Self {
        assert!(!head.is_empty(), "height vector needs at least the d_0 entry");
        Self { head, tail }
    }

    pub fn of_graph(g: &BasepointedGraph) -> Self {
        let two_e = g.total_degree() as i64;
        let mut head = Vec::with_capacity(2 * g.max_level() + 1);
        let d0 = (0..g.vertex_count())
            .filter(|&v| v != g.basepoint())
            .map(|v| g.degree(v) as i64 - 2)
            .sum();
        head.push(d0);
        for level in 1..=g.max_level() {
            let at_level = g.vertices_at_level(level);
            let level_degree: i64 = at_level.iter().map(|&v| g.degree(v) as i64).sum();
            head.push(-(at_level.len() as i64));
            head.push(two_e - level_degree);
        }
        Self { head, tail: (0, two_e) }
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    pub fn tail(&self) -> (i64, i64) {
        self.tail
    }

    /// Entry at position `j` of the infinite tuple, tail-extended.
    fn entry(&self, j: usize) -> i64 {
        if j < self.head.len() {
            self.head[j]
        } else if j % 2 == 1 {
            self.tail.0
        } else {
            self.tail.1
        }
    }

    /// Entry rebased for comparison. The `d_i` entries with `i >= 1` grow
    /// with the edge count, so across graphs of different sizes they are
    /// only meaningful relative to their own eventual tail value; comparing
    /// `d_i - tail` is what makes collapse strictly decrease height exactly
    /// on descending forests (and dually for blow-ups). `d_0` and the `n_i`
    /// entries compare as they stand.
    fn rebased(&self, j: usize) -> i64 {
        let value = self.entry(j);
        if j >= 2 && j % 2 == 0 {
            value - self.tail.1
        } else {
            value
        }
    }
}

/// Total order on heights: positionwise on the rebased entries, ties broken
/// by the tail pair.
pub fn compare_heights(a: &HeightVector, b: &HeightVector) -> Ordering {
    let len = a.head.len().max(b.head.len());
    for j in 0..len {
        match a.rebased(j).cmp(&b.rebased(j)) {
            Ordering::Equal => {}
            decided => return decided,
        }
    }
    a.tail.cmp(&b.tail)
}

impl PartialEq for HeightVector {
    fn eq(&self, other: &Self) -> bool {
        compare_heights(self, other) == Ordering::Equal
    }
}

impl Eq for HeightVector {}

impl PartialOrd for HeightVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(compare_heights(self, other))
    }
}

impl Ord for HeightVector {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_heights(self, other)
    }
}

impl fmt::Display for HeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.head.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ") tail ({},{})", self.tail.0, self.tail.1)
    }
}

pub fn height(g: &BasepointedGraph) -> HeightVector {
    HeightVector::of_graph(g)
}
