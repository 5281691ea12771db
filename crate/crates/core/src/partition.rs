use std::fmt;
use std::str::FromStr;

use crate::config::CompatMode;
use crate::error::PartitionError;

/// An unordered partition of the label set `{1, ..., n}` into two blocks of
/// size at least two, normalized so the stored block is the one containing
/// label 1. Stored as a bitmask with bit `l - 1` for label `l`; `n <= 32`
/// covers every degree this crate meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoBlockPartition {
    n: usize,
    side: u32,
}

impl TwoBlockPartition {
    pub fn new(n: usize, side_labels: &[usize]) -> Result<Self, PartitionError> {
        let mut side = 0u32;
        for &l in side_labels {
            if l == 0 || l > n {
                return Err(PartitionError::BadBlocks {
                    reason: format!("label {l} outside 1..={n}"),
                });
            }
            side |= 1 << (l - 1);
        }
        if side.count_ones() as usize != side_labels.len() {
            return Err(PartitionError::BadBlocks { reason: "repeated label".into() });
        }
        Self::from_mask(n, side)
    }

    pub fn from_mask(n: usize, side: u32) -> Result<Self, PartitionError> {
        if n < 4 || n > 32 {
            return Err(PartitionError::BadBlocks {
                reason: format!("ground set size {n} outside 4..=32"),
            });
        }
        if side & 1 == 0 {
            return Err(PartitionError::BadBlocks {
                reason: "block must contain label 1".into(),
            });
        }
        if side >> n != 0 {
            return Err(PartitionError::BadBlocks { reason: "label beyond ground set".into() });
        }
        let size_a = side.count_ones() as usize;
        if size_a < 2 || n - size_a < 2 {
            return Err(PartitionError::BadBlocks {
                reason: format!("block sizes {size_a} and {} (need both >= 2)", n - size_a),
            });
        }
        Ok(Self { n, side })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Mask of the block containing label 1.
    pub fn side_mask(&self) -> u32 {
        self.side
    }

    /// Mask of the complementary block.
    pub fn co_mask(&self) -> u32 {
        !self.side & ((1u32 << self.n) - 1)
    }

    /// The partition's size: the number of labels in the block *not*
    /// containing label 1.
    pub fn size(&self) -> usize {
        self.co_mask().count_ones() as usize
    }

    pub fn side_labels(&self) -> Vec<usize> {
        mask_labels(self.side)
    }

    pub fn co_labels(&self) -> Vec<usize> {
        mask_labels(self.co_mask())
    }

    /// Does the partition separate the given label set (nonempty meet with
    /// both blocks)?
    pub fn splits_mask(&self, set: u32) -> bool {
        set & self.side != 0 && set & self.co_mask() != 0
    }

    /// Does the partition separate the labels `1..=d`?
    pub fn splits_prefix(&self, d: usize) -> bool {
        if d == 0 {
            return false;
        }
        self.splits_mask((1u32 << d) - 1)
    }

    /// All two-block partitions of `{1, ..., n}`, ascending by mask.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        if !(4..=32).contains(&n) {
            return out;
        }
        for side in 0..(1u32 << (n - 1)) {
            if let Ok(p) = Self::from_mask(n, side << 1 | 1) {
                out.push(p);
            }
        }
        out
    }
}

/// Whether two distinct partitions of the same ground set can appear
/// together. In `Nested` mode one 1-block must properly contain the other;
/// `Classical` mode also accepts disjoint complements.
pub fn is_compatible(
    u: &TwoBlockPartition,
    v: &TwoBlockPartition,
    mode: CompatMode,
) -> Result<bool, PartitionError> {
    if u.ground_size() != v.ground_size() {
        return Err(PartitionError::BadBlocks {
            reason: format!("ground sets differ: {} vs {}", u.ground_size(), v.ground_size()),
        });
    }
    if u == v {
        return Err(PartitionError::SamePartition);
    }
    let nested = (u.side & v.side == u.side) || (u.side & v.side == v.side);
    Ok(match mode {
        CompatMode::Nested => nested,
        CompatMode::Classical => nested || u.co_mask() & v.co_mask() == 0,
    })
}

fn mask_labels(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

impl fmt::Display for TwoBlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, labels: Vec<usize>| -> fmt::Result {
            for (i, l) in labels.into_iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{l}")?;
            }
            Ok(())
        };
        write!(f, "(")?;
        side(f, self.side_labels())?;
        write!(f, " | ")?;
        side(f, self.co_labels())?;
        write!(f, ")")
    }
}

impl FromStr for TwoBlockPartition {
    type Err = PartitionError;

    /// Accepts `{1,3|2,4}` or `(1, 3 | 2, 4)`; both blocks must be listed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| PartitionError::BadBlocks { reason: reason.to_string() };
        let inner = s
            .trim()
            .strip_prefix(['{', '('])
            .and_then(|t| t.strip_suffix(['}', ')']))
            .ok_or_else(|| bad("expected {...|...} or (...|...)"))?;
        let (left, right) = inner.split_once('|').ok_or_else(|| bad("missing block bar"))?;
        let parse_side = |part: &str| -> Result<Vec<usize>, PartitionError> {
            part.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|e| bad(&e.to_string())))
                .collect()
        };
        let mut first = parse_side(left)?;
        let second = parse_side(right)?;
        let n = first.len() + second.len();
        if !first.contains(&1) {
            if !second.contains(&1) {
                return Err(bad("no block contains label 1"));
            }
            first = second;
        }
        Self::new(n, &first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, side: &[usize]) -> TwoBlockPartition {
        TwoBlockPartition::new(n, side).unwrap()
    }

    #[test]
    fn normalization_and_size() {
        let a = p(4, &[1, 3]);
        assert_eq!(a.side_labels(), vec![1, 3]);
        assert_eq!(a.co_labels(), vec![2, 4]);
        assert_eq!(a.size(), 2);
        assert_eq!(a.to_string(), "(1, 3 | 2, 4)");
    }

    #[test]
    fn block_size_invariants() {
        assert!(TwoBlockPartition::new(4, &[1]).is_err());
        assert!(TwoBlockPartition::new(4, &[1, 2, 3]).is_err());
        assert!(TwoBlockPartition::new(3, &[1, 2]).is_err());
        assert!(TwoBlockPartition::new(4, &[2, 3]).is_err());
        assert!(TwoBlockPartition::new(4, &[1, 1]).is_err());
        assert!(TwoBlockPartition::new(4, &[1, 5]).is_err());
    }

    #[test]
    fn splitting_prefixes() {
        let a = p(5, &[1, 4]);
        assert!(a.splits_prefix(3));
        assert!(a.splits_prefix(2));
        assert!(!p(4, &[1, 2]).splits_prefix(2));
        assert!(p(4, &[1, 3]).splits_prefix(2));
        assert!(!a.splits_prefix(0));
    }

    #[test]
    fn counts_of_all_partitions() {
        assert_eq!(TwoBlockPartition::all(4).len(), 3);
        assert_eq!(TwoBlockPartition::all(5).len(), 10);
        assert_eq!(TwoBlockPartition::all(6).len(), 25);
        assert!(TwoBlockPartition::all(3).is_empty());
    }

    #[test]
    fn nested_compatibility_is_containment() {
        let small = p(5, &[1, 2]);
        let big = p(5, &[1, 2, 3]);
        let other = p(5, &[1, 4]);
        assert!(is_compatible(&small, &big, CompatMode::Nested).unwrap());
        assert!(is_compatible(&big, &small, CompatMode::Nested).unwrap());
        assert!(!is_compatible(&small, &other, CompatMode::Nested).unwrap());
        assert_eq!(
            is_compatible(&small, &small, CompatMode::Nested),
            Err(PartitionError::SamePartition)
        );
    }

    #[test]
    fn classical_mode_adds_disjoint_complements() {
        // Complements {3} x {2}? Use n = 6: a = (1,2,3 | 4,5,6), b = (1,4,5,6 | 2,3).
        let a = p(6, &[1, 2, 3]);
        let b = p(6, &[1, 4, 5, 6]);
        assert!(!is_compatible(&a, &b, CompatMode::Nested).unwrap());
        assert!(is_compatible(&a, &b, CompatMode::Classical).unwrap());
        // Overlapping complements stay incompatible in both modes.
        let c = p(6, &[1, 2, 4]);
        assert!(!is_compatible(&a, &c, CompatMode::Classical).unwrap());
    }

    #[test]
    fn parse_both_shapes() {
        let a: TwoBlockPartition = "{1,3|2,4}".parse().unwrap();
        assert_eq!(a, p(4, &[1, 3]));
        let b: TwoBlockPartition = "(2, 4 | 1, 3)".parse().unwrap();
        assert_eq!(b, a);
        assert!("{1,3|}".parse::<TwoBlockPartition>().is_err());
        assert!("{2,3|4,5}".parse::<TwoBlockPartition>().is_err());
        assert!("1,3|2,4".parse::<TwoBlockPartition>().is_err());
    }

    #[test]
    fn display_parse_roundtrip() {
        for q in TwoBlockPartition::all(6) {
            let back: TwoBlockPartition = q.to_string().parse().unwrap();
            assert_eq!(back, q);
        }
    }
}
