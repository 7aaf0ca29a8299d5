//! Diagonals of the polygon with boundary points `0..=b` and the admissibility rule attached to a
//! coprime pair `(a, b)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::{CoprimePair, Error, Result};

/// A chord `i-j` of the polygon whose boundary points are labeled `0..=b` clockwise.
///
/// Diagonals are ordered by their larger endpoint first, then by the smaller one. This is the
/// order used for ground sets, canonical faces and the obstruction-edge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Diagonal {
    i: usize,
    j: usize,
    b: usize,
}

impl Diagonal {
    pub fn new(i: usize, j: usize, b: usize) -> Result<Self> {
        if i >= j || j > b || j - i < 2 || (i == 0 && j == b) {
            return Err(Error::InvalidDiagonal { i, j, b });
        }
        Ok(Self { i, j, b })
    }

    /// Smaller endpoint.
    pub const fn i(self) -> usize {
        self.i
    }

    /// Larger endpoint.
    pub const fn j(self) -> usize {
        self.j
    }

    pub const fn b(self) -> usize {
        self.b
    }

    /// Sizes of the two boundary arcs (points strictly on each side).
    pub const fn arc_sizes(self) -> (usize, usize) {
        let inner = self.j - self.i - 1;
        (inner, self.b - 1 - inner)
    }

    /// Strict interleaving of endpoints. Diagonals sharing an endpoint never cross.
    pub fn crosses(self, other: Diagonal) -> bool {
        debug_assert_eq!(self.b, other.b);
        let (i, j, k, m) = (self.i, self.j, other.i, other.j);
        (i < k && k < j && j < m) || (k < i && i < m && m < j)
    }

    /// The diagonal `(i-k)-(j-k)`, if both endpoints stay inside `0..=b`. Negative `k` shifts up.
    pub fn translate(self, k: isize) -> Option<Diagonal> {
        let i = self.i as isize - k;
        let j = self.j as isize - k;
        if i < 0 || j > self.b as isize {
            return None;
        }
        Diagonal::new(i as usize, j as usize, self.b).ok()
    }

    /// Every diagonal of the polygon, in canonical order.
    pub fn all(b: usize) -> Vec<Diagonal> {
        let mut out = Vec::new();
        for j in 2..=b {
            for i in 0..=j - 2 {
                if let Ok(d) = Diagonal::new(i, j, b) {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Parses `"i-j"`.
    pub fn parse(text: &str, b: usize) -> Result<Self> {
        let (i, j) = text
            .trim()
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected i-j, got {text:?}")))?;
        let parse = |s: &str| {
            usize::from_str(s.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
        };
        let (i, j) = (parse(i)?, parse(j)?);
        Diagonal::new(i.min(j), i.max(j), b)
    }
}

impl Ord for Diagonal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.b, self.j, self.i).cmp(&(other.b, other.j, other.i))
    }
}

impl PartialOrd for Diagonal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

impl Serialize for Diagonal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(serializer)
    }
}

/// The bare `[i, j]` wire form. The polygon size comes from context (the enclosing document's
/// `b`), so this is what gets deserialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoints(pub usize, pub usize);

impl Endpoints {
    pub fn into_diagonal(self, b: usize) -> Result<Diagonal> {
        Diagonal::new(self.0, self.1, b)
    }
}

/// The set `{⌊ib/a⌋ : 1 ≤ i < a}` of allowed arc sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderSet {
    pair: CoprimePair,
    members: BTreeSet<usize>,
}

impl RemainderSet {
    pub fn new(pair: CoprimePair) -> Self {
        let (a, b) = (pair.a() as usize, pair.b() as usize);
        let members: BTreeSet<usize> = (1..a).map(|i| i * b / a).collect();
        debug_assert_eq!(members.len(), a - 1);
        Self { pair, members }
    }

    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    pub fn contains(&self, n: usize) -> bool {
        self.members.contains(&n)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Both arcs of `d` have sizes in the set.
    pub fn admits(&self, d: Diagonal) -> bool {
        let (x, y) = d.arc_sizes();
        self.contains(x) && self.contains(y)
    }
}

pub fn remainder_set(a: u32, b: u32) -> Result<RemainderSet> {
    Ok(RemainderSet::new(CoprimePair::new(a, b)?))
}

pub fn is_admissible(d: Diagonal, pair: CoprimePair) -> bool {
    d.b() == pair.b() as usize && RemainderSet::new(pair).admits(d)
}

/// All admissible diagonals in canonical `(j, i)` order.
pub fn all_admissible_diagonals(pair: CoprimePair) -> Vec<Diagonal> {
    let set = RemainderSet::new(pair);
    Diagonal::all(pair.b() as usize).into_iter().filter(|d| set.admits(*d)).collect()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn pair(a: u32, b: u32) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    fn d(i: usize, j: usize, b: usize) -> Diagonal {
        Diagonal::new(i, j, b).unwrap()
    }

    #[test]
    fn remainder_sets() {
        let members = |a, b| remainder_set(a, b).unwrap().members().collect::<Vec<_>>();
        assert_eq!(members(3, 5), vec![1, 3]);
        assert_eq!(members(5, 8), vec![1, 3, 4, 6]);
        for a in 2..6u32 {
            for k in 1..5usize {
                let b = k as u32 * a + 1;
                let expected: Vec<usize> = (1..a as usize).map(|t| t * k).collect();
                assert_eq!(members(a, b), expected, "S({a},{b})");
            }
        }
        assert_eq!(remainder_set(2, 4), Err(Error::NotCoprime { a: 2, b: 4 }));
        assert_eq!(remainder_set(4, 3), Err(Error::BadOrder { a: 4, b: 3 }));
    }

    #[test]
    fn diagonal_validity() {
        assert!(Diagonal::new(0, 1, 5).is_err());
        assert!(Diagonal::new(0, 5, 5).is_err());
        assert!(Diagonal::new(2, 6, 5).is_err());
        assert!(Diagonal::new(3, 3, 5).is_err());
        assert!(Diagonal::new(0, 4, 5).is_ok());
        assert_eq!(Diagonal::all(5).len(), 9);
        assert_eq!(Diagonal::parse(" 5-7", 8).unwrap(), d(5, 7, 8));
        assert_eq!(Diagonal::parse("7-5", 8).unwrap(), d(5, 7, 8));
        assert!(Diagonal::parse("57", 8).is_err());
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(d(0, 2, 5), pair(3, 5)));
        assert!(!is_admissible(d(0, 3, 5), pair(3, 5)));
        assert!(is_admissible(d(0, 3, 5), pair(2, 5)));
    }

    #[test]
    fn admissible_lists() {
        let show = |a, b| {
            all_admissible_diagonals(pair(a, b)).iter().map(|d| d.to_string()).collect::<Vec<_>>()
        };
        assert_eq!(show(3, 5), vec!["0-2", "1-3", "0-4", "2-4", "1-5", "3-5"]);
        assert_eq!(show(2, 5), vec!["0-3", "1-4", "2-5"]);
        for b in 3..12u32 {
            let all = Diagonal::all(b as usize);
            assert_eq!(all.len(), (b as usize + 1) * b as usize / 2 - (b as usize + 1));
            assert_eq!(all_admissible_diagonals(pair(b - 1, b)), all);
        }
    }

    #[test]
    fn crossing_examples() {
        assert!(d(0, 4, 5).crosses(d(1, 5, 5)));
        assert!(!d(0, 4, 5).crosses(d(2, 4, 5)));
        assert!(!d(1, 3, 5).crosses(d(0, 4, 5)));
    }

    #[test]
    fn translation_examples() {
        assert_eq!(d(4, 8, 8).translate(2), Some(d(2, 6, 8)));
        assert_eq!(d(0, 4, 8).translate(1), None);
        assert_eq!(d(1, 3, 8).translate(0), Some(d(1, 3, 8)));
        assert_eq!(d(1, 3, 8).translate(-5), Some(d(6, 8, 8)));
        assert_eq!(d(1, 3, 8).translate(-6), None);
    }

    #[test]
    fn complementary_pairs_partition_all_diagonals() {
        for b in 3..=16u32 {
            let all: BTreeSet<Diagonal> = Diagonal::all(b as usize).into_iter().collect();
            for a in 1..b {
                let Ok(p) = CoprimePair::new(a, b) else { continue };
                let mine: BTreeSet<_> = all_admissible_diagonals(p).into_iter().collect();
                let theirs: BTreeSet<_> = all_admissible_diagonals(p.dual()).into_iter().collect();
                assert!(mine.is_disjoint(&theirs), "{p}");
                assert_eq!(&mine | &theirs, all, "{p}");
            }
        }
    }

    #[test]
    fn admissible_sets_are_rotation_invariant() {
        for b in 3..=14u32 {
            for a in 1..b {
                let Ok(p) = CoprimePair::new(a, b) else { continue };
                let set = RemainderSet::new(p);
                // Rotation i -> i+1 mod (b+1) preserves arc sizes.
                for dg in Diagonal::all(b as usize) {
                    let (i, j) = ((dg.i() + 1) % (b as usize + 1), (dg.j() + 1) % (b as usize + 1));
                    let rotated = d(i.min(j), i.max(j), b as usize);
                    assert_eq!(set.admits(dg), set.admits(rotated));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn crossing_is_symmetric_and_irreflexive(b in 4usize..20, seed in any::<u64>()) {
            let all = Diagonal::all(b);
            let x = all[(seed % all.len() as u64) as usize];
            let y = all[((seed >> 20) % all.len() as u64) as usize];
            prop_assert_eq!(x.crosses(y), y.crosses(x));
            prop_assert!(!x.crosses(x));
            if x.i() == y.i() || x.j() == y.j() || x.i() == y.j() || x.j() == y.i() {
                prop_assert!(!x.crosses(y));
            }
        }
    }
}
