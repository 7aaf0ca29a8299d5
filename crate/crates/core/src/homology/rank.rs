//! Matrix ranks. The sparse routines reduce columns left to right and accept a set of columns
//! known to reduce to zero (clearing); the dense routines serve small matrices and cross-checks.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};

/// Result of a sparse column reduction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Reduction {
    pub rank: usize,
    /// Rows that ended up as the lowest entry of some nonzero reduced column.
    pub pivot_rows: HashSet<u32>,
}

fn xor_into(target: &mut Vec<u32>, other: &[u32]) {
    let mut out = Vec::with_capacity(target.len() + other.len());
    let (mut x, mut y) = (0, 0);
    while x < target.len() && y < other.len() {
        match target[x].cmp(&other[y]) {
            std::cmp::Ordering::Less => {
                out.push(target[x]);
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(other[y]);
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                x += 1;
                y += 1;
            }
        }
    }
    out.extend_from_slice(&target[x..]);
    out.extend_from_slice(&other[y..]);
    *target = out;
}

/// Rank over GF(2) of a matrix given by sorted column supports. Columns listed in `cleared` are
/// skipped.
pub fn sparse_rank_gf2(columns: Vec<Vec<u32>>, cleared: &HashSet<u32>) -> Reduction {
    let mut pivots: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(columns.len());
    let mut out = Reduction::default();
    for (j, mut col) in columns.into_iter().enumerate() {
        if cleared.contains(&(j as u32)) {
            reduced.push(Vec::new());
            continue;
        }
        while let Some(&low) = col.last() {
            match pivots.get(&low) {
                Some(&p) => xor_into(&mut col, &reduced[p]),
                None => break,
            }
        }
        if let Some(&low) = col.last() {
            pivots.insert(low, j);
            out.pivot_rows.insert(low);
            out.rank += 1;
        }
        reduced.push(col);
    }
    out
}

/// Integer types usable in fraction-free elimination.
pub trait ExactInt: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i8> {}
impl ExactInt for i64 {}
impl ExactInt for i128 {}
impl ExactInt for BigInt {}

/// `col <- (p/g)·col - (c/g)·piv` where `c` and `p` are the entries at the shared lowest row.
/// Returns `None` on overflow.
fn eliminate<T: ExactInt>(col: &[(u32, T)], piv: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let c = &col.last()?.1;
    let p = &piv.last()?.1;
    let g = c.gcd(p);
    let (cm, pm) = (p.div_floor(&g), c.div_floor(&g));
    let mut out: Vec<(u32, T)> = Vec::with_capacity(col.len() + piv.len());
    let (mut x, mut y) = (0, 0);
    while x < col.len() || y < piv.len() {
        let take_x = y >= piv.len() || (x < col.len() && col[x].0 < piv[y].0);
        let take_y = x >= col.len() || (y < piv.len() && piv[y].0 < col[x].0);
        let (row, v) = if take_x {
            let v = col[x].1.checked_mul(&cm)?;
            x += 1;
            (col[x - 1].0, v)
        } else if take_y {
            let v = T::zero().checked_sub(&piv[y].1.checked_mul(&pm)?)?;
            y += 1;
            (piv[y - 1].0, v)
        } else {
            let v = col[x].1.checked_mul(&cm)?.checked_sub(&piv[y].1.checked_mul(&pm)?)?;
            let row = col[x].0;
            x += 1;
            y += 1;
            (row, v)
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    let content = out.iter().fold(T::zero(), |acc, (_, v)| acc.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in &mut out {
            *v = v.div_floor(&content);
        }
    }
    Some(out)
}

fn sparse_rank_exact<T: ExactInt>(
    columns: &[Vec<(u32, i8)>],
    cleared: &HashSet<u32>,
) -> Option<Reduction> {
    let mut pivots: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(u32, T)>> = Vec::with_capacity(columns.len());
    let mut out = Reduction::default();
    for (j, raw) in columns.iter().enumerate() {
        if cleared.contains(&(j as u32)) {
            reduced.push(Vec::new());
            continue;
        }
        let mut col: Vec<(u32, T)> = raw.iter().map(|&(r, v)| (r, T::from(v))).collect();
        while let Some(low) = col.last().map(|e| e.0) {
            match pivots.get(&low) {
                Some(&p) => col = eliminate(&col, &reduced[p])?,
                None => break,
            }
        }
        if let Some(low) = col.last().map(|e| e.0) {
            pivots.insert(low, j);
            out.pivot_rows.insert(low);
            out.rank += 1;
        }
        reduced.push(col);
    }
    Some(out)
}

/// Rank over the rationals of an integer matrix given by sorted sparse columns. Runs in `i128`
/// and redoes the reduction with big integers if an entry overflows.
pub fn sparse_rank_rational(columns: &[Vec<(u32, i8)>], cleared: &HashSet<u32>) -> Reduction {
    sparse_rank_exact::<i128>(columns, cleared)
        .unwrap_or_else(|| sparse_rank_exact::<BigInt>(columns, cleared).expect("big integers do not overflow"))
}

/// Rank over GF(2) by Gaussian elimination on bit-packed rows.
pub fn dense_rank_gf2(rows: &[Vec<bool>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else { return 0 };
    let words = width.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut packed = vec![0u64; words];
            for (c, &bit) in row.iter().enumerate() {
                if bit {
                    packed[c / 64] |= 1 << (c % 64);
                }
            }
            packed
        })
        .collect();
    let mut rank = 0;
    for c in 0..width {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..m.len()).find(|&r| m[r][w] & bit != 0) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the rationals by Bareiss fraction-free elimination on big integers.
pub fn dense_rank_rational(rows: &[Vec<i64>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else { return 0 };
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for k in c + 1..width {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}
