//! Explicit simplicial complexes whose vertices are polygon diagonals.
//!
//! Faces are stored as bitmasks over the ground set (at most 128 elements), with bit `t` standing
//! for the `t`-th ground diagonal in canonical order. The public surface speaks [`Face`]s; the
//! masks stay inside the crate.

pub mod builders;
pub mod counts;

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::polygon::Diagonal;
use crate::{Error, Result};

pub use builders::{build_ass, build_ass_with, build_hat_ass, build_hat_ass_with, Caps};

/// A set of diagonals in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<Diagonal>);

impl Face {
    pub fn new(mut diagonals: Vec<Diagonal>) -> Self {
        diagonals.sort();
        diagonals.dedup();
        Self(diagonals)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Parses `"5-7,2-4,0-5"`; an empty string is the empty face.
    pub fn parse(text: &str, b: usize) -> Result<Self> {
        let diagonals = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Diagonal::parse(s, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(diagonals))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.0.iter().copied()
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.0
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.0.binary_search(&d).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|d| other.contains(*d))
    }

    pub fn with(&self, d: Diagonal) -> Face {
        let mut v = self.0.clone();
        v.push(d);
        Face::new(v)
    }

    pub fn without(&self, d: Diagonal) -> Face {
        Face(self.0.iter().copied().filter(|x| *x != d).collect())
    }

    pub fn is_noncrossing(&self) -> bool {
        self.0.iter().enumerate().all(|(t, x)| self.0[t + 1..].iter().all(|y| !x.crosses(*y)))
    }
}

impl FromIterator<Diagonal> for Face {
    fn from_iter<T: IntoIterator<Item = Diagonal>>(iter: T) -> Self {
        Face::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (t, d) in self.0.iter().enumerate() {
            if t > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// `f` holds `f_{-1}, f_0, ..., f_{dim}`; `h` holds `h_0, ..., h_{dim+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FHVector {
    pub f: Vec<u128>,
    pub h: Vec<i128>,
}

impl FHVector {
    /// `h_k = Σ_{i ≤ k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` with `d = dim + 1`.
    pub fn from_f(f: Vec<u128>) -> Self {
        let d = f.len() - 1;
        let h = (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let term = counts::binomial((d - i) as u64, (k - i) as u64) as i128
                            * f[i] as i128;
                        if (k - i) % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum()
            })
            .collect();
        Self { f, h }
    }
}

/// Outcome of the empty-face search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagCheck {
    Flag,
    /// A set of at least two vertices, pairwise joined by edges, that is not a face.
    EmptyFace(Face),
}

impl FlagCheck {
    pub fn is_flag(&self) -> bool {
        matches!(self, FlagCheck::Flag)
    }
}

pub(crate) type Mask = u128;

pub(crate) fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let t = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(t)
    })
}

/// A downward-closed family of faces over an ordered ground set of diagonals.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    ground: Vec<Diagonal>,
    index: HashMap<Diagonal, usize>,
    faces: HashSet<Mask>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    fn with_ground(mut ground: Vec<Diagonal>) -> Result<Self> {
        ground.sort();
        ground.dedup();
        if ground.len() > Mask::BITS as usize {
            return Err(Error::GroundTooLarge(ground.len()));
        }
        let index = ground.iter().enumerate().map(|(t, d)| (*d, t)).collect();
        Ok(Self { ground, index, faces: HashSet::new() })
    }

    /// The downward closure of `facets`. Every facet diagonal must be in `ground`.
    pub fn from_facets(
        ground: Vec<Diagonal>,
        facets: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        let mut complex = Self::with_ground(ground)?;
        complex.faces.insert(0);
        for facet in facets {
            let mask = complex.mask_of(&facet).ok_or_else(|| {
                Error::NotAFace(format!("{facet} uses diagonals outside the ground set"))
            })?;
            complex.insert_closure(mask);
        }
        Ok(complex)
    }

    pub(crate) fn from_masks(ground: Vec<Diagonal>, faces: HashSet<Mask>) -> Result<Self> {
        let mut complex = Self::with_ground(ground)?;
        complex.faces = faces;
        Ok(complex)
    }

    pub(crate) fn insert_closure(&mut self, mask: Mask) {
        if !self.faces.insert(mask) {
            return;
        }
        for t in bits(mask) {
            self.insert_closure(mask & !(1 << t));
        }
    }

    pub fn ground(&self) -> &[Diagonal] {
        &self.ground
    }

    /// Number of faces, the empty face included.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.mask_of(face).is_some_and(|m| self.faces.contains(&m))
    }

    pub(crate) fn masks(&self) -> &HashSet<Mask> {
        &self.faces
    }

    pub(crate) fn masks_mut(&mut self) -> &mut HashSet<Mask> {
        &mut self.faces
    }

    pub(crate) fn has(&self, mask: Mask) -> bool {
        self.faces.contains(&mask)
    }

    pub(crate) fn index_of(&self, d: Diagonal) -> Option<usize> {
        self.index.get(&d).copied()
    }

    pub(crate) fn mask_of(&self, face: &Face) -> Option<Mask> {
        face.iter().try_fold(0, |m, d| self.index_of(d).map(|t| m | (1 << t)))
    }

    pub(crate) fn face_of(&self, mask: Mask) -> Face {
        // Ground is sorted, so bit order is canonical order.
        Face(bits(mask).map(|t| self.ground[t]).collect())
    }

    /// Lexicographic key on canonical encodings, used for deterministic orderings.
    pub(crate) fn lex_key(mask: Mask) -> Vec<u8> {
        bits(mask).map(|t| t as u8).collect()
    }

    /// Faces sorted by size, then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut masks: Vec<Mask> = self.faces.iter().copied().collect();
        sort_canonical(&mut masks);
        masks.into_iter().map(|m| self.face_of(m)).collect()
    }

    /// Masks of the faces with `k + 1` diagonals, canonically sorted.
    pub(crate) fn masks_of_dim(&self, k: isize) -> Vec<Mask> {
        let mut masks: Vec<Mask> = self
            .faces
            .iter()
            .copied()
            .filter(|m| m.count_ones() as isize == k + 1)
            .collect();
        sort_canonical(&mut masks);
        masks
    }

    fn is_facet_mask(&self, mask: Mask) -> bool {
        (0..self.ground.len()).all(|t| mask & (1 << t) != 0 || !self.faces.contains(&(mask | (1 << t))))
    }

    /// Inclusion-maximal faces, canonically sorted.
    pub fn facets(&self) -> Vec<Face> {
        let mut masks: Vec<Mask> =
            self.faces.iter().copied().filter(|m| self.is_facet_mask(*m)).collect();
        sort_canonical(&mut masks);
        masks.into_iter().map(|m| self.face_of(m)).collect()
    }

    pub fn dim(&self) -> isize {
        self.faces.iter().map(|m| m.count_ones() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn f_vector(&self) -> Vec<u128> {
        let mut f = vec![0u128; (self.dim() + 2).max(1) as usize];
        for m in &self.faces {
            f[m.count_ones() as usize] += 1;
        }
        f
    }

    pub fn h_vector(&self) -> Vec<i128> {
        self.fh_vector().h
    }

    pub fn fh_vector(&self) -> FHVector {
        FHVector::from_f(self.f_vector())
    }

    /// Searches the cliques of the 1-skeleton for one that is not a face.
    pub fn flag_check(&self) -> FlagCheck {
        let n = self.ground.len();
        let mut adjacency = vec![0 as Mask; n];
        for &m in &self.faces {
            if m.count_ones() == 2 {
                let (x, y) = (m.trailing_zeros() as usize, 127 - m.leading_zeros() as usize);
                adjacency[x] |= 1 << y;
                adjacency[y] |= 1 << x;
            }
        }
        let mut stack: Vec<(Mask, Mask)> = (0..n)
            .filter(|&v| self.faces.contains(&(1 << v)))
            .map(|v| (1 << v, adjacency[v] & higher_than(v)))
            .collect();
        while let Some((clique, candidates)) = stack.pop() {
            for v in bits(candidates) {
                let bigger = clique | (1 << v);
                if !self.faces.contains(&bigger) {
                    return FlagCheck::EmptyFace(self.face_of(bigger));
                }
                stack.push((bigger, candidates & adjacency[v] & higher_than(v)));
            }
        }
        FlagCheck::Flag
    }

    pub fn is_flag(&self) -> bool {
        self.flag_check().is_flag()
    }

    /// Faces containing none of the members of `sigma`.
    pub fn deletion(&self, sigma: &[Face]) -> Result<SimplicialComplex> {
        let removed = sigma
            .iter()
            .map(|f| {
                self.mask_of(f)
                    .filter(|m| self.faces.contains(m))
                    .ok_or_else(|| Error::NotAFace(f.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.deletion_masks(&removed))
    }

    pub(crate) fn deletion_masks(&self, removed: &[Mask]) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|m| removed.iter().all(|r| m & r != *r))
            .collect();
        SimplicialComplex { ground: self.ground.clone(), index: self.index.clone(), faces }
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.ground == other.ground && self.faces.is_subset(&other.faces)
    }

    /// Faces of `self` not in `other` (same ground set assumed), canonically sorted.
    pub fn difference(&self, other: &SimplicialComplex) -> Vec<Face> {
        let mut masks: Vec<Mask> = self.faces.difference(&other.faces).copied().collect();
        sort_canonical(&mut masks);
        masks.into_iter().map(|m| self.face_of(m)).collect()
    }

    /// Closed under subsets.
    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&m| bits(m).all(|t| self.faces.contains(&(m & !(1 << t)))))
    }
}

/// Bits strictly above position `t`.
pub(crate) fn higher_than(t: usize) -> Mask {
    if t + 1 >= Mask::BITS as usize {
        0
    } else {
        !((1 << (t + 1)) - 1)
    }
}

pub(crate) fn sort_canonical(masks: &mut [Mask]) {
    masks.sort_by_cached_key(|m| (m.count_ones(), SimplicialComplex::lex_key(*m)));
}
