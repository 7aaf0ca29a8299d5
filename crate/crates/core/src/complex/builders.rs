//! Builders for the two models: all noncrossing sets of admissible diagonals, and the complex
//! generated by Dyck-path facets.

use std::collections::HashSet;

use super::{higher_than, Mask, SimplicialComplex};
use crate::lattice::{enumerate_dyck_paths_capped, DEFAULT_MAX_PATHS};
use crate::polygon::all_admissible_diagonals;
use crate::{CoprimePair, Error, Result};

/// Enumeration guards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Upper bound on `C(a+b, a)`.
    pub max_paths: u128,
    /// Upper bound on the number of faces of any materialized complex.
    pub max_faces: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { max_paths: DEFAULT_MAX_PATHS, max_faces: 10_000_000 }
    }
}

pub fn build_hat_ass(pair: CoprimePair) -> Result<SimplicialComplex> {
    build_hat_ass_with(pair, &Caps::default())
}

/// Every set of pairwise noncrossing admissible diagonals.
pub fn build_hat_ass_with(pair: CoprimePair, caps: &Caps) -> Result<SimplicialComplex> {
    let ground = all_admissible_diagonals(pair);
    let mut complex = SimplicialComplex::from_masks(ground, HashSet::new())?;
    let ground = complex.ground().to_vec();
    let n = ground.len();
    let compatible: Vec<Mask> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x && !ground[x].crosses(ground[y]))
                .fold(0, |m, y| m | (1 << y))
        })
        .collect();

    let mut faces = HashSet::new();
    let mut stack: Vec<(Mask, Mask)> = vec![(0, if n == 0 { 0 } else { Mask::MAX >> (128 - n) })];
    while let Some((face, candidates)) = stack.pop() {
        faces.insert(face);
        if faces.len() > caps.max_faces {
            return Err(Error::CapExceeded {
                what: "face",
                count: faces.len() as u128,
                cap: caps.max_faces as u128,
            });
        }
        for v in super::bits(candidates) {
            stack.push((face | (1 << v), candidates & compatible[v] & higher_than(v)));
        }
    }
    *complex.masks_mut() = faces;
    Ok(complex)
}

pub fn build_ass(pair: CoprimePair) -> Result<SimplicialComplex> {
    build_ass_with(pair, &Caps::default())
}

/// The complex whose facets are the laser facets of all Dyck paths.
pub fn build_ass_with(pair: CoprimePair, caps: &Caps) -> Result<SimplicialComplex> {
    let paths = enumerate_dyck_paths_capped(pair, caps.max_paths)?;
    let mut complex = SimplicialComplex::from_facets(all_admissible_diagonals(pair), [])?;
    for path in &paths {
        let facet = path.facet()?;
        let mask = complex
            .mask_of(&facet)
            .ok_or_else(|| Error::AdmissibilityViolated(facet.to_string()))?;
        complex.insert_closure(mask);
        if complex.len() > caps.max_faces {
            return Err(Error::CapExceeded {
                what: "face",
                count: complex.len() as u128,
                cap: caps.max_faces as u128,
            });
        }
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::counts::{rational_catalan, rational_kirkman, rational_narayana};
    use crate::complex::Face;
    use crate::polygon::Diagonal;

    fn pair(a: u32, b: u32) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    /// Brute force over every subset of the admissible diagonals.
    fn noncrossing_subsets(p: CoprimePair) -> usize {
        let ground = all_admissible_diagonals(p);
        (0u64..1 << ground.len())
            .filter(|m| {
                let f: Face = (0..ground.len()).filter(|t| m >> t & 1 == 1).map(|t| ground[t]).collect();
                f.is_noncrossing()
            })
            .count()
    }

    #[test]
    fn hat_ass_small_cases() {
        let hat = build_hat_ass(pair(3, 5)).unwrap();
        assert_eq!(hat.ground().len(), 6);
        let d = |i, j| Diagonal::new(i, j, 5).unwrap();
        let facets = hat.facets();
        assert!(facets.contains(&Face::new(vec![d(0, 2), d(0, 4), d(2, 4)])));
        assert!(facets.contains(&Face::new(vec![d(1, 3), d(1, 5), d(3, 5)])));
        assert!(!hat.is_pure());

        let tiny = build_hat_ass(pair(2, 3)).unwrap();
        let names: Vec<String> = tiny.faces().iter().map(|f| f.to_string()).collect();
        assert_eq!(names, vec!["{}", "{0-2}", "{1-3}"]);
    }

    #[test]
    fn hat_ass_matches_subset_brute_force() {
        for p in CoprimePair::all_up_to(9, |_, _| true) {
            if all_admissible_diagonals(p).len() > 18 {
                continue;
            }
            assert_eq!(build_hat_ass(p).unwrap().len(), noncrossing_subsets(p), "{p}");
        }
    }

    #[test]
    fn ass_small_cases() {
        let ass = build_ass(pair(3, 5)).unwrap();
        assert_eq!(ass.facets().len(), 7);
        assert_eq!(ass.f_vector(), vec![1, 6, 7]);
        assert_eq!(ass.h_vector(), vec![1, 4, 2]);
        assert_eq!(build_ass(pair(5, 8)).unwrap().facets().len(), 99);
    }

    #[test]
    fn ass_counts_match_formulas() {
        for p in CoprimePair::all_up_to(11, |a, b| a + b <= 14) {
            let ass = build_ass(p).unwrap();
            let a = p.a() as usize;
            assert!(ass.is_pure());
            assert_eq!(ass.facets().len() as u128, rational_catalan(p).unwrap());
            let f = ass.f_vector();
            let h = ass.h_vector();
            assert_eq!(f.len(), a);
            for i in 1..=a {
                assert_eq!(f[i - 1], rational_kirkman(p, i).unwrap(), "{p} f");
                assert_eq!(h[i - 1], rational_narayana(p, i).unwrap() as i128, "{p} h");
            }
        }
    }

    #[test]
    fn models_agree_on_fuss_pairs_and_nest_otherwise() {
        for p in CoprimePair::all_up_to(10, |_, _| true) {
            let ass = build_ass(p).unwrap();
            let hat = build_hat_ass(p).unwrap();
            assert!(ass.is_subcomplex_of(&hat), "{p}");
            assert_eq!(p.is_fuss(), ass == hat, "{p}");
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps { max_paths: 10, ..Caps::default() };
        assert!(matches!(build_ass_with(pair(3, 5), &caps), Err(Error::CapExceeded { .. })));
        let caps = Caps { max_faces: 20, ..Caps::default() };
        assert!(matches!(build_hat_ass_with(pair(4, 7), &caps), Err(Error::CapExceeded { .. })));
        assert!(matches!(build_ass_with(pair(4, 7), &caps), Err(Error::CapExceeded { .. })));
    }
}
