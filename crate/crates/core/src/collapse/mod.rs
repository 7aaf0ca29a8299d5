//! Elementary collapses, cone-vertex batches, the edge-by-edge schedule from the noncrossing
//! model onto the lattice-path model, and an independent replay of the resulting certificate.

mod schedule;
mod verify;

pub use schedule::{collapse_schedule, collapse_schedule_with, CertStep, CollapseCertificate, Stage};
pub use verify::{extract_morse_matching, verify_certificate, VerificationFailure, VerificationReport};

use serde::Serialize;

use crate::complex::{sort_canonical, Face, Mask, SimplicialComplex};
use crate::polygon::Diagonal;
use crate::{Error, Result};

/// `facet` is the only face properly containing `subface` at the moment the pair is removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreePair {
    pub facet: Face,
    pub subface: Face,
}

/// Collapses every face containing `face` by pairing `G` with `G ∪ {cone}`. The result is the
/// deletion of `face`.
///
/// The cone condition is checked before anything is removed, and each pair is checked for
/// freeness when its turn comes. Pairs are removed largest first, ties broken lexicographically
/// on the larger member.
pub fn cone_vertex_collapse(
    complex: &SimplicialComplex,
    face: &Face,
    cone: Diagonal,
) -> Result<(Vec<FreePair>, SimplicialComplex)> {
    let f = complex
        .mask_of(face)
        .filter(|m| complex.has(*m))
        .ok_or_else(|| Error::NotAFace(face.to_string()))?;
    let c = complex
        .index_of(cone)
        .ok_or_else(|| Error::NotAFace(format!("{{{cone}}}")))?;
    let mut out = complex.clone();
    let pairs = collapse_cone_masks(&mut out, f, c)?;
    let pairs = pairs
        .into_iter()
        .map(|(big, small)| FreePair { facet: out.face_of(big), subface: out.face_of(small) })
        .collect();
    Ok((pairs, out))
}

/// In-place version over masks. Returns `(facet, subface)` pairs in removal order.
pub(crate) fn collapse_cone_masks(
    complex: &mut SimplicialComplex,
    f: Mask,
    c: usize,
) -> Result<Vec<(Mask, Mask)>> {
    let cbit: Mask = 1 << c;
    if f & cbit != 0 {
        return Err(Error::NotConeVertex {
            cone: complex.ground()[c].to_string(),
            witness: complex.face_of(f).to_string(),
        });
    }
    let mut bases: Vec<Mask> =
        complex.masks().iter().copied().filter(|m| m & f == f && m & cbit == 0).collect();
    if let Some(&w) = bases.iter().find(|&&m| !complex.has(m | cbit)) {
        return Err(Error::NotConeVertex {
            cone: complex.ground()[c].to_string(),
            witness: complex.face_of(w).to_string(),
        });
    }
    let mut larger: Vec<Mask> = bases.drain(..).map(|m| m | cbit).collect();
    sort_canonical(&mut larger);
    larger.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));

    let mut pairs = Vec::with_capacity(larger.len());
    for big in larger {
        let small = big & !cbit;
        if !is_free(complex, big, small) {
            return Err(Error::NotFree {
                facet: complex.face_of(big).to_string(),
                subface: complex.face_of(small).to_string(),
            });
        }
        complex.masks_mut().remove(&big);
        complex.masks_mut().remove(&small);
        pairs.push((big, small));
    }
    Ok(pairs)
}

/// `big` is the unique face strictly containing `small`. Checking cofacets suffices: any larger
/// superface would contain a second cofacet of `small` or a cofacet of `big`.
fn is_free(complex: &SimplicialComplex, big: Mask, small: Mask) -> bool {
    if !complex.has(big) || !complex.has(small) || big & small != small {
        return false;
    }
    if big.count_ones() != small.count_ones() + 1 {
        return false;
    }
    let n = complex.ground().len();
    let cofacets = |m: Mask| (0..n).filter(move |&t| m & (1 << t) == 0).map(move |t| m | (1 << t));
    cofacets(big).all(|g| !complex.has(g)) && cofacets(small).filter(|g| complex.has(*g)).count() == 1
}
