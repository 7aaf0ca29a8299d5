use std::collections::HashMap;

use crate::complex::{bits, Mask, SimplicialComplex};

/// The boundary map from `k`-faces to `(k-1)`-faces, including `k = 0` onto the empty face.
///
/// Rows and columns follow the canonical face order. Each column lists `(row, ±1)` entries in
/// increasing row order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub k: isize,
    pub rows: usize,
    pub columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Support of each column, which is the matrix over GF(2).
    pub fn gf2_columns(&self) -> Vec<Vec<u32>> {
        self.columns.iter().map(|c| c.iter().map(|&(r, _)| r).collect()).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r as usize][j] = v as i64;
            }
        }
        out
    }
}

/// Faces grouped by dimension, `-1` first, each group canonically sorted.
pub(crate) struct Graded {
    pub levels: Vec<Vec<Mask>>,
}

impl Graded {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let top = complex.dim();
        let levels = (-1..=top).map(|k| complex.masks_of_dim(k)).collect();
        Self { levels }
    }

    /// `levels[k + 1]` holds the `k`-faces.
    pub fn faces(&self, k: isize) -> &[Mask] {
        usize::try_from(k + 1).ok().and_then(|t| self.levels.get(t)).map_or(&[], Vec::as_slice)
    }

    pub fn top(&self) -> isize {
        self.levels.len() as isize - 2
    }

    pub fn boundary(&self, k: isize) -> BoundaryMatrix {
        let rows = self.faces(k - 1);
        let index: HashMap<Mask, u32> =
            rows.iter().enumerate().map(|(n, m)| (*m, n as u32)).collect();
        let columns = self
            .faces(k)
            .iter()
            .map(|&m| {
                let mut col: Vec<(u32, i8)> = bits(m)
                    .enumerate()
                    .map(|(l, t)| {
                        let sign = if l % 2 == 0 { 1 } else { -1 };
                        (index[&(m & !(1 << t))], sign)
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        BoundaryMatrix { k, rows: rows.len(), columns }
    }
}

/// Checks that consecutive boundary maps compose to zero, over the integers and over GF(2).
pub fn boundary_squared_is_zero(complex: &SimplicialComplex) -> bool {
    let graded = Graded::new(complex);
    (1..=graded.top()).all(|k| {
        let outer = graded.boundary(k - 1);
        let inner = graded.boundary(k);
        inner.columns.iter().all(|col| {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            let mut parity: HashMap<u32, u8> = HashMap::new();
            for &(r, v) in col {
                for &(s, w) in &outer.columns[r as usize] {
                    *acc.entry(s).or_default() += v as i64 * w as i64;
                    *parity.entry(s).or_default() ^= 1;
                }
            }
            acc.values().all(|&x| x == 0) && parity.values().all(|&x| x == 0)
        })
    })
}
