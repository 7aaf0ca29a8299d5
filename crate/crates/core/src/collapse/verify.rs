//! Replay of a certificate on plain face sets. Nothing here depends on the schedule's bitmasks.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::CollapseCertificate;
use crate::complex::{Face, SimplicialComplex};
use crate::polygon::Diagonal;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationFailure {
    /// 1-based step number, or 0 for a failure that is not tied to a step.
    pub step: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub steps_checked: usize,
    pub terminal_faces: usize,
    pub failure: Option<VerificationFailure>,
}

/// Replays `cert` on a copy of `start`. Each step must remove a face together with its only
/// proper superface, and the faces left at the end must be exactly those of `target`.
pub fn verify_certificate(
    start: &SimplicialComplex,
    target: &SimplicialComplex,
    cert: &CollapseCertificate,
) -> VerificationReport {
    let ground: Vec<Diagonal> = start.ground().to_vec();
    let mut faces: HashSet<Face> = start.faces().into_iter().collect();
    let fail = |step: usize, reason: String, faces: &HashSet<Face>| VerificationReport {
        valid: false,
        steps_checked: step.saturating_sub(1),
        terminal_faces: faces.len(),
        failure: Some(VerificationFailure { step, reason }),
    };

    for (n, step) in cert.steps.iter().enumerate() {
        let at = n + 1;
        let (big, small) = (&step.facet, &step.subface);
        if big.len() != small.len() + 1 || !small.is_subset(big) {
            return fail(at, format!("{small} is not a codimension-one face of {big}"), &faces);
        }
        if !faces.contains(big) || !faces.contains(small) {
            return fail(at, format!("{small} or {big} is not in the current complex"), &faces);
        }
        let above = |f: &Face| {
            ground
                .iter()
                .filter(|d| !f.contains(**d))
                .map(|d| f.with(*d))
                .filter(|g| faces.contains(g))
                .collect::<Vec<_>>()
        };
        if !above(big).is_empty() {
            return fail(at, format!("{big} is not maximal"), &faces);
        }
        if above(small).len() != 1 {
            return fail(at, format!("{small} is not free"), &faces);
        }
        faces.remove(big);
        faces.remove(small);
    }

    let wanted: HashSet<Face> = target.faces().into_iter().collect();
    if faces != wanted {
        let extra = faces.difference(&wanted).min().map(|f| format!("extra face {f}"));
        let missing = wanted.difference(&faces).min().map(|f| format!("missing face {f}"));
        let reason = extra.or(missing).unwrap_or_default();
        return VerificationReport {
            valid: false,
            steps_checked: cert.steps.len(),
            terminal_faces: faces.len(),
            failure: Some(VerificationFailure { step: 0, reason: format!("terminal complex: {reason}") }),
        };
    }
    VerificationReport {
        valid: true,
        steps_checked: cert.steps.len(),
        terminal_faces: faces.len(),
        failure: None,
    }
}

/// The certificate's pairs as `(subface, facet)`, checked to cover every face of `start` not in
/// `target` exactly once.
pub fn extract_morse_matching(
    start: &SimplicialComplex,
    target: &SimplicialComplex,
    cert: &CollapseCertificate,
) -> Result<Vec<(Face, Face)>> {
    let mut unmatched: BTreeSet<Face> = start.difference(target).into_iter().collect();
    let mut pairs = Vec::with_capacity(cert.steps.len());
    for step in &cert.steps {
        if step.facet.len() != step.subface.len() + 1 || !step.subface.is_subset(&step.facet) {
            return Err(Error::NotPerfect(format!("{} and {} differ by more than one diagonal", step.subface, step.facet)));
        }
        for f in [&step.subface, &step.facet] {
            if !unmatched.remove(f) {
                return Err(Error::NotPerfect(format!("{f} is matched twice or lies in the target")));
            }
        }
        pairs.push((step.subface.clone(), step.facet.clone()));
    }
    match unmatched.first() {
        Some(f) => Err(Error::NotPerfect(format!("{f} is unmatched"))),
        None => Ok(pairs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::collapse_schedule;
    use crate::complex::{build_ass, build_hat_ass};
    use crate::CoprimePair;

    fn setup(a: u32, b: u32) -> (SimplicialComplex, SimplicialComplex, CollapseCertificate) {
        let p = CoprimePair::new(a, b).unwrap();
        (build_hat_ass(p).unwrap(), build_ass(p).unwrap(), collapse_schedule(p).unwrap())
    }

    #[test]
    fn schedules_replay() {
        for (a, b) in [(3, 5), (2, 5), (5, 8), (3, 8), (4, 7)] {
            let (hat, ass, cert) = setup(a, b);
            let report = verify_certificate(&hat, &ass, &cert);
            assert!(report.valid, "({a},{b}) {:?}", report.failure);
            assert_eq!(report.terminal_faces, ass.len());
            let matching = extract_morse_matching(&hat, &ass, &cert).unwrap();
            assert_eq!(matching.len() * 2, hat.difference(&ass).len());
        }
    }

    #[test]
    fn reversed_steps_fail_at_first_step() {
        let (hat, ass, mut cert) = setup(5, 8);
        cert.steps.reverse();
        let report = verify_certificate(&hat, &ass, &cert);
        assert!(!report.valid);
        assert_eq!(report.failure.unwrap().step, 1);

        let (hat, ass, mut cert) = setup(3, 5);
        cert.steps.reverse();
        // Both triangles are independent here, so the reversed order is still valid.
        assert!(verify_certificate(&hat, &ass, &cert).valid);
    }

    #[test]
    fn wrong_targets_and_truncations_are_reported() {
        let (hat, ass, mut cert) = setup(3, 5);
        let report = verify_certificate(&hat, &hat, &cert);
        assert_eq!(report.failure.unwrap().step, 0);
        cert.steps.pop();
        assert!(!verify_certificate(&hat, &ass, &cert).valid);
        assert!(matches!(extract_morse_matching(&hat, &ass, &cert), Err(Error::NotPerfect(_))));
        let dup = cert.steps[0].clone();
        cert.steps.push(dup);
        let report = verify_certificate(&hat, &ass, &cert);
        assert_eq!(report.failure.unwrap().step, 2);
    }

    #[test]
    fn non_maximal_facet_is_rejected() {
        let (hat, ass, mut cert) = setup(5, 8);
        let mut step = cert.steps[0].clone();
        let d = step.facet.diagonals()[0];
        step.facet = step.facet.without(d);
        step.subface = step.subface.without(d);
        cert.steps.insert(0, step);
        let report = verify_certificate(&hat, &ass, &cert);
        assert_eq!(report.failure.unwrap().step, 1);
    }
}
