//! Reduced simplicial homology by boundary ranks, plus the wedge-of-spheres and duality checks.
//!
//! Every report here is about ranks of homology groups. Equal Betti numbers over GF(2) and over
//! the rationals rule out torsion in the checked range, but they do not establish a homotopy type
//! or a deformation retraction.

mod boundary;
pub mod rank;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use boundary::{boundary_squared_is_zero, BoundaryMatrix};

use crate::complex::counts::sphere_count;
use crate::complex::{build_ass_with, Caps, SimplicialComplex};
use crate::polygon::{all_admissible_diagonals, Diagonal};
use crate::{CoprimePair, Error, Result};
use boundary::Graded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    #[serde(rename = "q")]
    Rational,
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" => Ok(Field::Gf2),
            "q" | "rational" | "rationals" => Ok(Field::Rational),
            other => Err(Error::Parse(format!("unknown field {other:?}"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Gf2 => "gf2",
            Field::Rational => "q",
        })
    }
}

/// Reduced Betti numbers from dimension `-1` up to the top dimension of the complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub field: Field,
    /// `reduced[k + 1]` is the reduced Betti number in dimension `k`.
    pub reduced: Vec<u64>,
}

impl BettiVector {
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k + 1).ok().and_then(|t| self.reduced.get(t)).copied().unwrap_or(0)
    }

    /// Dimensions with a nonzero Betti number, paired with the number.
    pub fn nonzero(&self) -> Vec<(isize, u64)> {
        (0..self.reduced.len())
            .filter(|&t| self.reduced[t] != 0)
            .map(|t| (t as isize - 1, self.reduced[t]))
            .collect()
    }

    /// Same numbers, ignoring the field tag.
    pub fn same_numbers(&self, other: &BettiVector) -> bool {
        let n = self.reduced.len().max(other.reduced.len()) as isize;
        (-1..n).all(|k| self.get(k) == other.get(k))
    }
}

/// Which elimination to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Sparse column reduction, top dimension first, skipping columns that are known to vanish.
    #[default]
    Sparse,
    /// Dense elimination on full matrices. Only sensible for small complexes.
    Dense,
}

pub fn betti_numbers(complex: &SimplicialComplex, field: Field) -> Result<BettiVector> {
    betti_numbers_with(complex, field, Method::Sparse, &Caps::default())
}

pub fn betti_numbers_with(
    complex: &SimplicialComplex,
    field: Field,
    method: Method,
    caps: &Caps,
) -> Result<BettiVector> {
    if complex.len() > caps.max_faces {
        return Err(Error::CapExceeded {
            what: "faces",
            count: complex.len() as u128,
            cap: caps.max_faces as u128,
        });
    }
    if complex.is_empty() {
        return Ok(BettiVector { field, reduced: Vec::new() });
    }
    let graded = Graded::new(complex);
    let top = graded.top();
    // ranks[k] = rank of the boundary from k-faces, for k = 0..=top.
    let mut ranks = vec![0usize; (top + 2).max(0) as usize];
    let mut cleared: HashSet<u32> = HashSet::new();
    for k in (0..=top).rev() {
        let matrix = graded.boundary(k);
        ranks[k as usize] = match method {
            Method::Sparse => {
                let red = match field {
                    Field::Gf2 => rank::sparse_rank_gf2(matrix.gf2_columns(), &cleared),
                    Field::Rational => rank::sparse_rank_rational(&matrix.columns, &cleared),
                };
                cleared = red.pivot_rows;
                red.rank
            }
            Method::Dense => {
                let dense = matrix.to_dense();
                match field {
                    Field::Gf2 => {
                        let bits: Vec<Vec<bool>> =
                            dense.iter().map(|r| r.iter().map(|v| v % 2 != 0).collect()).collect();
                        rank::dense_rank_gf2(&bits)
                    }
                    Field::Rational => rank::dense_rank_rational(&dense),
                }
            }
        };
    }
    let mut reduced = Vec::with_capacity(graded.levels.len());
    for k in -1..=top {
        let faces = graded.faces(k).len();
        let out = if k >= 0 { ranks[k as usize] } else { 0 };
        let inc = if k < top { ranks[(k + 1) as usize] } else { 0 };
        let b = faces.checked_sub(out + inc).ok_or_else(|| {
            Error::PropertyViolated(format!("negative Betti number in dimension {k}"))
        })?;
        reduced.push(b as u64);
    }

    let euler_betti: i128 = reduced
        .iter()
        .enumerate()
        .map(|(t, &b)| if t % 2 == 1 { b as i128 } else { -(b as i128) })
        .sum();
    let euler_faces: i128 = complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(t, &f)| if t % 2 == 1 { f as i128 } else { -(f as i128) })
        .sum();
    if euler_betti != euler_faces {
        return Err(Error::PropertyViolated(format!(
            "Euler characteristic {euler_betti} from Betti numbers, {euler_faces} from faces"
        )));
    }
    Ok(BettiVector { field, reduced })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WedgeReport {
    pub a: u32,
    pub b: u32,
    pub sphere_dim: isize,
    pub expected_spheres: u128,
    pub gf2: BettiVector,
    pub rational: BettiVector,
    pub holds: bool,
}

/// Compares the reduced homology of the lattice-path model with a wedge of `C(b,a)/b` spheres of
/// dimension `a - 2`, over both fields.
pub fn check_wedge(pair: CoprimePair) -> Result<WedgeReport> {
    check_wedge_with(pair, &Caps::default())
}

pub fn check_wedge_with(pair: CoprimePair, caps: &Caps) -> Result<WedgeReport> {
    let ass = build_ass_with(pair, caps)?;
    let gf2 = betti_numbers_with(&ass, Field::Gf2, Method::Sparse, caps)?;
    let rational = betti_numbers_with(&ass, Field::Rational, Method::Sparse, caps)?;
    Ok(wedge_report(pair, gf2, rational))
}

/// Builds the report from already computed Betti vectors.
pub fn wedge_report(pair: CoprimePair, gf2: BettiVector, rational: BettiVector) -> WedgeReport {
    let sphere_dim = pair.a() as isize - 2;
    let expected = sphere_count(pair).expect("C(b,a)/b is an integer for coprime a, b");
    let matches = |v: &BettiVector| {
        v.get(sphere_dim) as u128 == expected
            && v.nonzero().iter().all(|&(k, _)| k == sphere_dim)
    };
    let holds = matches(&gf2) && matches(&rational) && gf2.same_numbers(&rational);
    WedgeReport {
        a: pair.a(),
        b: pair.b(),
        sphere_dim,
        expected_spheres: expected,
        gf2,
        rational,
        holds,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionEntry {
    pub a: u32,
    pub admissible: usize,
    pub complementary: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub b: u32,
    pub diagonals: usize,
    pub entries: Vec<PartitionEntry>,
    pub holds: bool,
}

/// For each `a` coprime to `b`, the admissible diagonals of `(a, b)` and `(b - a, b)` are disjoint
/// and together give every diagonal.
pub fn alexander_partition_check(b: u32) -> Result<PartitionReport> {
    if b < 2 {
        return Err(Error::BadOrder { a: 1, b });
    }
    let all: HashSet<Diagonal> = Diagonal::all(b as usize).into_iter().collect();
    let mut entries = Vec::new();
    let mut holds = true;
    for a in 1..b {
        let Ok(pair) = CoprimePair::new(a, b) else { continue };
        let mine: HashSet<Diagonal> = all_admissible_diagonals(pair).into_iter().collect();
        let theirs: HashSet<Diagonal> = all_admissible_diagonals(pair.dual()).into_iter().collect();
        holds &= mine.is_disjoint(&theirs) && &mine | &theirs == all;
        entries.push(PartitionEntry { a, admissible: mine.len(), complementary: theirs.len() });
    }
    Ok(PartitionReport { b, diagonals: all.len(), entries, holds })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub a: u32,
    pub b: u32,
    pub dual_a: u32,
    /// Reduced Betti number of the lattice-path model of `(a, b)` in dimension `a - 2`.
    pub rank: u64,
    /// Reduced Betti number of the lattice-path model of `(b - a, b)` in dimension `b - a - 2`.
    pub dual_rank: u64,
    /// Whether `b̃_i` on one side equals `b̃_{b-4-i}` on the other for every `i` (only meaningful
    /// for `b >= 3`, where the ambient sphere has dimension `b - 3 >= 0`).
    pub all_degrees_pair: bool,
    pub holds: bool,
    pub note: &'static str,
}

const DUALITY_NOTE: &str = "rank-level check only: compares reduced Betti numbers in complementary \
degrees inside the (b-3)-sphere; the topological duality statement is not verified";

pub fn alexander_duality_check(pair: CoprimePair) -> Result<DualityReport> {
    let caps = Caps::default();
    let field = Field::Rational;
    let mine = betti_numbers_with(&build_ass_with(pair, &caps)?, field, Method::Sparse, &caps)?;
    let theirs =
        betti_numbers_with(&build_ass_with(pair.dual(), &caps)?, field, Method::Sparse, &caps)?;
    Ok(duality_report(pair, &mine, &theirs))
}

/// Builds the duality report from the Betti vectors of `(a, b)` and `(b - a, b)`.
pub fn duality_report(pair: CoprimePair, mine: &BettiVector, theirs: &BettiVector) -> DualityReport {
    let (a, b) = (pair.a() as isize, pair.b() as isize);
    let rank = mine.get(a - 2);
    let dual_rank = theirs.get(b - a - 2);
    let span = mine.reduced.len().max(theirs.reduced.len()) as isize + 1;
    let all_degrees_pair = b >= 3 && (-1..span).all(|i| mine.get(i) == theirs.get(b - 4 - i));
    DualityReport {
        a: pair.a(),
        b: pair.b(),
        dual_a: pair.dual().a(),
        rank,
        dual_rank,
        all_degrees_pair,
        holds: rank == dual_rank,
        note: DUALITY_NOTE,
    }
}
