//! Membership in the lattice-path model, decided by building the valley path backwards from
//! `(b, a)`.
//!
//! Starting at `(b, a)` the path walks west until it reaches an `x` that is the smaller endpoint
//! of some diagonal of the face, then south until every such diagonal has been produced by a
//! laser fired from the new north-step bottoms. If that forces the path below `y = (a/b)·x`, the
//! face is rejected at that `x`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::Face;
use crate::lattice::{trace_laser, weakly_above, DyckPath, LatticePoint, Step};
use crate::polygon::RemainderSet;
use crate::{CoprimePair, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipResult {
    /// The face lies in the facet of this path, and every valley laser is a diagonal of the face.
    Member(DyckPath),
    /// The construction dropped below the diagonal while working on the vertical line `x = break_x`.
    NonMember { break_x: usize },
}

impl MembershipResult {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipResult::Member(_))
    }

    pub fn valley_path(&self) -> Option<&DyckPath> {
        match self {
            MembershipResult::Member(p) => Some(p),
            MembershipResult::NonMember { .. } => None,
        }
    }
}

/// Wire form: `{member, valley_path?, break_x?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valley_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub break_x: Option<usize>,
}

impl From<&MembershipResult> for MembershipReport {
    fn from(r: &MembershipResult) -> Self {
        match r {
            MembershipResult::Member(p) => {
                Self { member: true, valley_path: Some(p.word()), break_x: None }
            }
            MembershipResult::NonMember { break_x } => {
                Self { member: false, valley_path: None, break_x: Some(*break_x) }
            }
        }
    }
}

/// A path under construction, stored as the steps from its south-west end to `(b, a)`, reversed.
struct PartialPath {
    pair: CoprimePair,
    reversed: Vec<Step>,
    x: usize,
    y: usize,
}

impl PartialPath {
    fn new(pair: CoprimePair) -> Self {
        Self { pair, reversed: Vec::new(), x: pair.b() as usize, y: pair.a() as usize }
    }

    fn west(&mut self) {
        self.reversed.push(Step::E);
        self.x -= 1;
    }

    /// One step south. Returns false if the new corner is strictly below the diagonal (the
    /// corner is then not recorded).
    fn south(&mut self) -> bool {
        if self.y == 0 || !weakly_above(self.pair, self.x as i64, self.y as i64 - 1) {
            return false;
        }
        self.reversed.push(Step::N);
        self.y -= 1;
        true
    }

    /// Right endpoint of the east step hit by the laser from the current corner.
    fn laser_from_corner(&self) -> Option<usize> {
        let forward: Vec<Step> = self.reversed.iter().rev().copied().collect();
        trace_laser(self.pair, LatticePoint::new(self.x, self.y), &forward)
    }

    fn finish(self) -> Result<DyckPath> {
        let steps = self.reversed.into_iter().rev().collect();
        DyckPath::new(self.pair, steps)
    }
}

/// Runs the path-building construction on a face of the noncrossing model.
pub fn valley_path(face: &Face, pair: CoprimePair) -> Result<MembershipResult> {
    check_hat_face(face, pair)?;
    let b = pair.b() as usize;
    let mut path = PartialPath::new(pair);

    for i in (0..=b).rev() {
        let targets: BTreeSet<usize> = face.iter().filter(|d| d.i() == i).map(|d| d.j()).collect();
        if targets.is_empty() {
            if i > 0 {
                path.west();
            } else {
                while path.y > 0 {
                    path.south();
                }
            }
            continue;
        }

        let mut missing = targets;
        while !missing.is_empty() {
            if !path.south() {
                return Ok(MembershipResult::NonMember { break_x: i });
            }
            if path.y == 0 && path.x == 0 {
                // The origin fires no laser; the next step south would cross the diagonal.
                continue;
            }
            let hit = path.laser_from_corner().ok_or_else(|| {
                Error::PropertyViolated(format!("laser from ({i}, {}) is undefined", path.y))
            })?;
            missing.remove(&hit);
        }
        if i > 0 {
            path.west();
        } else {
            while path.y > 0 {
                path.south();
            }
        }
    }
    Ok(MembershipResult::Member(path.finish()?))
}

pub fn is_face_of_ass(face: &Face, pair: CoprimePair) -> Result<bool> {
    Ok(valley_path(face, pair)?.is_member())
}

fn check_hat_face(face: &Face, pair: CoprimePair) -> Result<()> {
    let set = RemainderSet::new(pair);
    if let Some(d) = face.iter().find(|d| d.b() != pair.b() as usize || !set.admits(*d)) {
        return Err(Error::NotAFaceOfHat(format!("{d} is not admissible for {pair}")));
    }
    if !face.is_noncrossing() {
        return Err(Error::NotAFaceOfHat(format!("{face} has crossing diagonals")));
    }
    Ok(())
}
