//! Rational Dyck paths and the lasers fired from them.
//!
//! All geometry is exact: a point `(x, y)` lies weakly above the line `y = (a/b)·x` iff
//! `y·b ≥ x·a`, and a laser of slope `a/b` from `(x0, y0)` reaches height `y` at
//! `x = x0 + (y - y0)·b/a`, which is compared against step endpoints after multiplying through
//! by `a`. No floating point is used.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::Face;
use crate::polygon::{Diagonal, RemainderSet};
use crate::{CoprimePair, Error, Result};

/// Default cap on `C(a+b, a)` before path enumeration is refused.
pub const DEFAULT_MAX_PATHS: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: usize,
    pub y: usize,
}

impl LatticePoint {
    pub const fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Where a laser stops: inside the east step ending at `x = hit_step_right_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LaserHit {
    pub source: LatticePoint,
    pub hit_step_right_x: usize,
}

/// Weakly decreasing row lengths, top row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Containment of Ferrers diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(x, y)| x <= y)
    }
}

/// `y·b ≥ x·a`.
pub(crate) fn weakly_above(pair: CoprimePair, x: i64, y: i64) -> bool {
    y * pair.b() as i64 >= x * pair.a() as i64
}

/// An `(a, b)` Dyck path from `(0, 0)` to `(b, a)` that never goes below `y = (a/b)·x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    pair: CoprimePair,
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(pair: CoprimePair, steps: Vec<Step>) -> Result<Self> {
        let (a, b) = (pair.a() as usize, pair.b() as usize);
        let norths = steps.iter().filter(|s| **s == Step::N).count();
        if norths != a || steps.len() != a + b {
            return Err(Error::InvalidPath(format!(
                "need {a} north and {b} east steps, got {norths} and {}",
                steps.len() - norths
            )));
        }
        let (mut x, mut y) = (0i64, 0i64);
        for step in &steps {
            match step {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if !weakly_above(pair, x, y) {
                return Err(Error::InvalidPath(format!("({x}, {y}) lies below the diagonal")));
            }
        }
        Ok(Self { pair, steps })
    }

    /// Parses a step word such as `"NNENNEEENEEEE"`.
    pub fn from_word(pair: CoprimePair, word: &str) -> Result<Self> {
        let steps = word
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => Err(Error::Parse(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(pair, steps)
    }

    /// Builds a path from run lengths, e.g. `[(N, 2), (E, 1), ...]`.
    pub fn from_runs(pair: CoprimePair, runs: &[(Step, usize)]) -> Result<Self> {
        let steps = runs.iter().flat_map(|&(s, n)| std::iter::repeat_n(s, n)).collect();
        Self::new(pair, steps)
    }

    /// `N^a E^b`.
    pub fn highest(pair: CoprimePair) -> Self {
        Self::from_runs(pair, &[(Step::N, pair.a() as usize), (Step::E, pair.b() as usize)])
            .expect("N^a E^b is always a Dyck path")
    }

    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    pub fn runs(&self) -> Vec<(Step, usize)> {
        let mut runs: Vec<(Step, usize)> = Vec::new();
        for &s in &self.steps {
            match runs.last_mut() {
                Some((last, n)) if *last == s => *n += 1,
                _ => runs.push((s, 1)),
            }
        }
        runs
    }

    /// Lattice points visited, `(0, 0)` first.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut p = LatticePoint::new(0, 0);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::N => p.y += 1,
                Step::E => p.x += 1,
            }
            out.push(p);
        }
        out
    }

    /// Bottoms of north steps, excluding the origin: the laser sources.
    pub fn laser_sources(&self) -> Vec<LatticePoint> {
        self.points()
            .into_iter()
            .zip(&self.steps)
            .filter(|(p, s)| **s == Step::N && (p.x, p.y) != (0, 0))
            .map(|(p, _)| p)
            .collect()
    }

    pub fn partition(&self) -> Partition {
        let a = self.pair.a() as usize;
        let mut rows = vec![0; a];
        let mut x = 0;
        let mut y = 0;
        for s in &self.steps {
            match s {
                Step::N => {
                    // The north step from y to y+1 bounds row `a - 1 - y` counted from the top.
                    rows[a - 1 - y] = x;
                    y += 1;
                }
                Step::E => x += 1,
            }
        }
        Partition(rows)
    }

    pub fn valleys(&self) -> Vec<LatticePoint> {
        let points = self.points();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::E && w[1] == Step::N)
            .map(|(t, _)| points[t + 1])
            .collect()
    }

    pub fn fire_laser(&self, source: LatticePoint) -> Result<LaserHit> {
        let points = self.points();
        let start = points
            .iter()
            .zip(&self.steps)
            .position(|(p, s)| *p == source && *s == Step::N)
            .filter(|_| (source.x, source.y) != (0, 0))
            .ok_or(Error::InvalidSource { x: source.x, y: source.y })?;
        let hit = trace_laser(self.pair, source, &self.steps[start..]).ok_or_else(|| {
            Error::PropertyViolated(format!("laser from {source} never meets the path"))
        })?;
        Ok(LaserHit { source, hit_step_right_x: hit })
    }

    pub fn laser_diagonal(&self, source: LatticePoint) -> Result<Diagonal> {
        let hit = self.fire_laser(source)?;
        let d = Diagonal::new(source.x, hit.hit_step_right_x, self.pair.b() as usize)?;
        if !RemainderSet::new(self.pair).admits(d) {
            return Err(Error::AdmissibilityViolated(d.to_string()));
        }
        Ok(d)
    }

    /// The facet: laser diagonals of every north-step bottom except the origin.
    pub fn facet(&self) -> Result<Face> {
        let diagonals = self
            .laser_sources()
            .into_iter()
            .map(|p| self.laser_diagonal(p))
            .collect::<Result<Vec<_>>>()?;
        let face = Face::new(diagonals);
        if face.len() != self.pair.a() as usize - 1 {
            return Err(Error::PropertyViolated(format!(
                "lasers of {} produced repeated diagonals",
                self.word()
            )));
        }
        Ok(face)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.word())
    }
}

/// Walks `steps` starting at `source` (the bottom of the first step, which must be north) and
/// returns the right `x` of the first east step whose interior the laser of slope `a/b` meets.
///
/// The path strictly above the laser can only come back down onto it along an east step, and by
/// coprimality never at a lattice point, so the first east step with
/// `a·(x-1) < a·x0 + (y - y0)·b < a·x` is the hit.
pub(crate) fn trace_laser(
    pair: CoprimePair,
    source: LatticePoint,
    steps: &[Step],
) -> Option<usize> {
    let (a, b) = (pair.a() as i64, pair.b() as i64);
    let (x0, y0) = (source.x as i64, source.y as i64);
    let (mut x, mut y) = (x0, y0);
    for s in steps {
        match s {
            Step::N => y += 1,
            Step::E => {
                let crossing = a * x0 + (y - y0) * b;
                if y > y0 && a * x < crossing && crossing < a * (x + 1) {
                    return Some((x + 1) as usize);
                }
                debug_assert!(y == y0 || crossing != a * x, "laser met a lattice point");
                x += 1;
            }
        }
    }
    None
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) / (t + 1))
}

/// All Dyck paths, lexicographic on step words with `N < E`.
pub fn enumerate_dyck_paths(pair: CoprimePair) -> Result<Vec<DyckPath>> {
    enumerate_dyck_paths_capped(pair, DEFAULT_MAX_PATHS)
}

pub fn enumerate_dyck_paths_capped(pair: CoprimePair, cap: u128) -> Result<Vec<DyckPath>> {
    let (a, b) = (pair.a() as usize, pair.b() as usize);
    let count = binomial_u128((a + b) as u128, a as u128);
    if count > cap {
        return Err(Error::CapExceeded { what: "lattice path", count, cap });
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(a + b);
    extend_paths(pair, &mut word, 0, 0, &mut out);
    Ok(out)
}

fn extend_paths(
    pair: CoprimePair,
    word: &mut Vec<Step>,
    x: usize,
    y: usize,
    out: &mut Vec<DyckPath>,
) {
    let (a, b) = (pair.a() as usize, pair.b() as usize);
    if x == b && y == a {
        out.push(DyckPath { pair, steps: word.clone() });
        return;
    }
    if y < a {
        word.push(Step::N);
        extend_paths(pair, word, x, y + 1, out);
        word.pop();
    }
    if x < b && weakly_above(pair, x as i64 + 1, y as i64) {
        word.push(Step::E);
        extend_paths(pair, word, x + 1, y, out);
        word.pop();
    }
}
