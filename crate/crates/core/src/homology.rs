use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{faces_of, SimplicialComplex};
use crate::snf::{smith_normal_form, SmithResult};

/// Reduced integral homology of a finite simplicial complex, one entry per
/// degree starting at degree -1. Trailing trivial degrees are trimmed, so
/// equality of values is equality of homology profiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    /// `ranks[d + 1]` is the free rank in degree `d`.
    ranks: Vec<usize>,
    /// `torsions[d + 1]` lists the torsion orders (> 1) in degree `d`.
    torsions: Vec<Vec<BigInt>>,
}

/// Shape of a homology profile, as far as homology can tell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyClass {
    /// The complex with no simplices: one unit of homology in degree -1.
    Void,
    /// Every reduced group vanishes.
    Acyclic,
    /// The profile of a wedge of `count` spheres of dimension `dim`.
    Wedge { dim: usize, count: usize },
    Other,
}

impl ReducedHomology {
    /// Rank in degree `d` (degree -1 allowed).
    pub fn rank(&self, d: i64) -> usize {
        usize::try_from(d + 1).ok().and_then(|i| self.ranks.get(i)).copied().unwrap_or(0)
    }

    /// Torsion orders in degree `d`, in divisibility order.
    pub fn torsion(&self, d: i64) -> &[BigInt] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.torsions.get(i))
            .map_or(&[], |v| v.as_slice())
    }

    /// All stored degrees as `(degree, rank, torsion)`, ascending from -1.
    pub fn degrees(&self) -> impl Iterator<Item = (i64, usize, &[BigInt])> {
        self.ranks
            .iter()
            .zip(&self.torsions)
            .enumerate()
            .map(|(i, (&r, t))| (i as i64 - 1, r, t.as_slice()))
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.is_empty()
    }

    fn trimmed(mut ranks: Vec<usize>, mut torsions: Vec<Vec<BigInt>>) -> Self {
        while ranks.last() == Some(&0) && torsions.last().is_some_and(|t| t.is_empty()) {
            ranks.pop();
            torsions.pop();
        }
        Self { ranks, torsions }
    }
}

/// Computes reduced integral homology exactly, degree -1 included, via
/// Smith normal forms of the augmented boundary matrices. The ranks are
/// checked against the Euler characteristic before returning.
pub fn reduced_homology(x: &SimplicialComplex) -> ReducedHomology {
    if x.is_void() {
        return ReducedHomology { ranks: vec![1], torsions: vec![Vec::new()] };
    }
    let f = x.f_vector();
    let top = f.len() - 1;
    // snf[d] describes the boundary map out of degree d; degree 0 maps onto
    // the augmentation.
    let mut snf: Vec<SmithResult> = Vec::with_capacity(top + 1);
    let augmentation: Vec<(usize, usize, i64)> =
        (0..f[0]).map(|j| (0, j, 1)).collect();
    snf.push(smith_normal_form(1, f[0], &augmentation));
    for d in 1..=top {
        let mut entries = Vec::with_capacity((d + 1) * f[d]);
        let below = x.simplices(d - 1);
        for (j, simplex) in x.simplices(d).iter().enumerate() {
            for (skip, face) in faces_of(simplex).into_iter().enumerate() {
                let i = below.binary_search(&face).expect("complex is face closed");
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                entries.push((i, j, sign));
            }
        }
        snf.push(smith_normal_form(f[d - 1], f[d], &entries));
    }

    let out_rank = |d: usize| snf.get(d).map_or(0, |s| s.rank);
    let mut ranks = Vec::with_capacity(top + 2);
    let mut torsions = Vec::with_capacity(top + 2);
    ranks.push(1 - out_rank(0));
    torsions.push(Vec::new());
    for d in 0..=top {
        ranks.push(f[d] - out_rank(d) - out_rank(d + 1));
        let torsion: Vec<BigInt> = snf
            .get(d + 1)
            .map(|s| s.factors.iter().filter(|t| !t.is_one()).cloned().collect())
            .unwrap_or_default();
        torsions.push(torsion);
    }

    let reduced_euler = x.euler_characteristic() - 1;
    let homology_euler: i64 = ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| if i % 2 == 0 { -(r as i64) } else { r as i64 })
        .sum();
    assert_eq!(
        reduced_euler, homology_euler,
        "homology ranks disagree with the Euler characteristic"
    );

    ReducedHomology::trimmed(ranks, torsions)
}

/// Reads the homotopy class off a homology profile.
pub fn classify(h: &ReducedHomology) -> HomotopyClass {
    if h.torsions.iter().any(|t| !t.is_empty()) {
        return HomotopyClass::Other;
    }
    let nonzero: Vec<(usize, usize)> = h
        .ranks
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r > 0)
        .map(|(i, &r)| (i, r))
        .collect();
    match nonzero.as_slice() {
        [] => HomotopyClass::Acyclic,
        [(0, 1)] => HomotopyClass::Void,
        [(i, r)] if *i >= 1 => HomotopyClass::Wedge { dim: i - 1, count: *r },
        _ => HomotopyClass::Other,
    }
}

impl fmt::Display for HomotopyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyClass::Void => write!(f, "Void"),
            HomotopyClass::Acyclic => write!(f, "Acyclic"),
            HomotopyClass::Wedge { dim, count } => write!(f, "Wedge({dim},{count})"),
            HomotopyClass::Other => write!(f, "Other"),
        }
    }
}

impl fmt::Display for ReducedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, rank, torsion) in self.degrees() {
            if rank == 0 && torsion.is_empty() {
                continue;
            }
            if wrote {
                write!(f, ", ")?;
            }
            write!(f, "H~({d})=")?;
            match rank {
                0 => {}
                1 => write!(f, "Z")?,
                r => write!(f, "Z^{r}")?,
            }
            for (i, t) in torsion.iter().enumerate() {
                if rank > 0 || i > 0 {
                    write!(f, "+")?;
                }
                write!(f, "Z/{t}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "trivial")?;
        }
        Ok(())
    }
}
