use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Invariant factors of an integer matrix: `factors[0] | factors[1] | ...`,
/// all positive, one per unit of rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithResult {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

/// Computes the Smith normal form of a sparse integer matrix given as
/// `(row, col, value)` triples (zero values allowed and ignored, duplicate
/// positions summed).
///
/// Unit entries are eliminated first with sparsity-aware pivoting and pure
/// row operations, which keeps boundary matrices (entries all `+-1`) out of
/// the dense path entirely; whatever remains is finished densely over
/// arbitrary-precision integers. The fast phase uses checked 64-bit
/// arithmetic and restarts the whole computation densely on overflow, so
/// results are exact.
pub fn smith_normal_form(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SmithResult {
    match sparse_phase(rows, cols, entries) {
        Some((unit_count, remainder)) => {
            let dense = dense_snf(remainder);
            let mut factors: Vec<BigInt> = vec![BigInt::one(); unit_count];
            factors.extend(dense);
            SmithResult { rank: factors.len(), factors }
        }
        None => {
            // Overflow: redo everything in big integers.
            let mut m = vec![vec![BigInt::zero(); cols]; rows];
            for &(r, c, v) in entries {
                m[r][c] += BigInt::from(v);
            }
            let factors = dense_snf(m);
            SmithResult { rank: factors.len(), factors }
        }
    }
}

/// Eliminates `+-1` pivots; returns the number eliminated and the dense
/// leftover, or `None` on 64-bit overflow.
fn sparse_phase(
    rows: usize,
    cols: usize,
    entries: &[(usize, usize, i64)],
) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut row_data: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); rows];
    for &(r, c, v) in entries {
        let cell = row_data[r].entry(c).or_insert(0);
        *cell = cell.checked_add(v)?;
        if *cell == 0 {
            row_data[r].remove(&c);
        }
    }
    let mut col_nnz = vec![0usize; cols];
    for row in &row_data {
        for (&c, _) in row {
            col_nnz[c] += 1;
        }
    }
    let mut live_row = vec![true; rows];
    let mut unit_count = 0usize;

    loop {
        // Cheapest unit pivot by fill-in estimate, ties to smallest (col, row).
        let mut best: Option<(usize, usize, usize)> = None;
        for r in 0..rows {
            if !live_row[r] {
                continue;
            }
            for (&c, &v) in &row_data[r] {
                if v != 1 && v != -1 {
                    continue;
                }
                let score = (row_data[r].len() - 1) * (col_nnz[c] - 1);
                if best.is_none_or(|(s, bc, br)| (score, c, r) < (s, bc, br)) {
                    best = Some((score, c, r));
                }
            }
        }
        let Some((_, c, p)) = best else { break };
        let sign = row_data[p][&c];
        let pivot_row: Vec<(usize, i64)> = row_data[p].iter().map(|(&j, &v)| (j, v)).collect();
        for r in 0..rows {
            if r == p || !live_row[r] {
                continue;
            }
            let Some(&coef) = row_data[r].get(&c) else { continue };
            let scale = coef.checked_mul(sign)?;
            for &(j, v) in &pivot_row {
                let delta = scale.checked_mul(v)?;
                let cell = row_data[r].entry(j).or_insert(0);
                let had = *cell != 0;
                *cell = cell.checked_sub(delta)?;
                let has = *cell != 0;
                if !had && has {
                    col_nnz[j] += 1;
                } else if had && !has {
                    row_data[r].remove(&j);
                    col_nnz[j] -= 1;
                }
            }
        }
        for (&j, _) in &row_data[p] {
            col_nnz[j] -= 1;
        }
        live_row[p] = false;
        row_data[p].clear();
        unit_count += 1;
    }

    let live: Vec<usize> = (0..rows).filter(|&r| live_row[r] && !row_data[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols).filter(|&c| col_nnz[c] > 0).collect();
    let col_index: BTreeMap<usize, usize> =
        live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut remainder = vec![vec![BigInt::zero(); live_cols.len()]; live.len()];
    for (i, &r) in live.iter().enumerate() {
        for (&c, &v) in &row_data[r] {
            remainder[i][col_index[&c]] = BigInt::from(v);
        }
    }
    Some((unit_count, remainder))
}

/// Dense Smith normal form over big integers; returns positive invariant
/// factors in divisibility order.
///
/// Clearing uses 2x2 unimodular transforms built from extended gcds, so a
/// pivot absorbs the gcd of its row and column in one sweep. Iterated
/// quotient-subtraction would square entry sizes on every pass; here entry
/// growth stays polynomial and each re-sweep strictly divides the pivot
/// down, so at most log2(pivot) sweeps run per step.
fn dense_snf(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut factors = Vec::new();
    let mut t = 0;
    'step: while t < rows.min(cols) {
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => m[i][j].abs() < m[pi][pj].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        swap_cols(&mut m, t, pj);

        loop {
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                if (&m[i][t] % &m[t][t]).is_zero() {
                    let q = &m[i][t] / &m[t][t];
                    for j in t..cols {
                        let delta = &q * &m[t][j];
                        m[i][j] -= delta;
                    }
                } else {
                    let (g, s, u) = bezout(&m[t][t], &m[i][t]);
                    let ct = &m[t][t] / &g;
                    let ci = &m[i][t] / &g;
                    for j in t..cols {
                        let x = m[t][j].clone();
                        let y = m[i][j].clone();
                        m[t][j] = &s * &x + &u * &y;
                        m[i][j] = &ct * &y - &ci * &x;
                    }
                }
            }
            // A gcd step on columns rewrites column t below the pivot, but it
            // also shrinks the pivot to a proper divisor, so re-sweeping
            // terminates quickly. Exact quotients leave column t alone.
            let mut disturbed = false;
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                if (&m[t][j] % &m[t][t]).is_zero() {
                    let q = &m[t][j] / &m[t][t];
                    for row in m.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                } else {
                    let (g, s, u) = bezout(&m[t][t], &m[t][j]);
                    let ct = &m[t][t] / &g;
                    let cj = &m[t][j] / &g;
                    for row in m.iter_mut().skip(t) {
                        let x = row[t].clone();
                        let y = row[j].clone();
                        row[t] = &s * &x + &u * &y;
                        row[j] = &ct * &y - &cj * &x;
                    }
                    disturbed = true;
                }
            }
            if !disturbed {
                break;
            }
        }

        // The pivot must divide the rest of the submatrix; fold an offending
        // row in and redo this step until it does. Each redo replaces the
        // pivot by a proper divisor of itself.
        for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    for j2 in t..cols {
                        let add = m[i][j2].clone();
                        m[t][j2] += add;
                    }
                    continue 'step;
                }
            }
        }
        factors.push(m[t][t].abs());
        t += 1;
    }
    factors
}

/// `(g, x, y)` with `g = gcd(a, b) > 0` and `g = x*a + y*b`.
fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m {
        row.swap(a, b);
    }
}
