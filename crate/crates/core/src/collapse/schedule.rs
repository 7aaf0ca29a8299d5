use serde::{Deserialize, Serialize};

use super::collapse_cone_masks;
use crate::complex::{build_ass_with, build_hat_ass_with, Caps, Face, Mask, SimplicialComplex};
use crate::obstruction::{build_obstruction_graph, wedge_completion, ObstructionEdge};
use crate::polygon::{Diagonal, Endpoints};
use crate::{CoprimePair, Error, Result};

/// Where a step comes from: edge `r` (1-based in increasing edge order), batch `q` (crossing
/// faces are `1..=p`, the final batch for the edge itself is `p + 1`), and the cone vertex used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub r: usize,
    pub q: usize,
    pub cone: Diagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertStep {
    pub facet: Face,
    pub subface: Face,
    pub stage: Stage,
}

/// An ordered list of elementary collapses from the noncrossing model onto the lattice-path model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseCertificate {
    pub schema: u32,
    pub a: u32,
    pub b: u32,
    pub steps: Vec<CertStep>,
}

#[derive(Deserialize)]
struct RawStage {
    r: usize,
    q: usize,
    cone: Endpoints,
}

#[derive(Deserialize)]
struct RawStep {
    facet: Vec<Endpoints>,
    subface: Vec<Endpoints>,
    stage: RawStage,
}

#[derive(Deserialize)]
struct RawCertificate {
    schema: u32,
    a: u32,
    b: u32,
    steps: Vec<RawStep>,
}

impl CollapseCertificate {
    pub fn pair(&self) -> Result<CoprimePair> {
        CoprimePair::new(self.a, self.b)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawCertificate =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.schema != 1 {
            return Err(Error::Parse(format!("unsupported certificate schema {}", raw.schema)));
        }
        let pair = CoprimePair::new(raw.a, raw.b)?;
        let b = pair.b() as usize;
        let face = |list: Vec<Endpoints>| -> Result<Face> {
            list.into_iter().map(|e| e.into_diagonal(b)).collect()
        };
        let steps = raw
            .steps
            .into_iter()
            .map(|s| {
                Ok(CertStep {
                    facet: face(s.facet)?,
                    subface: face(s.subface)?,
                    stage: Stage { r: s.stage.r, q: s.stage.q, cone: s.stage.cone.into_diagonal(b)? },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { schema: 1, a: raw.a, b: raw.b, steps })
    }
}

pub fn collapse_schedule(pair: CoprimePair) -> Result<CollapseCertificate> {
    collapse_schedule_with(pair, &Caps::default())
}

/// Processes obstruction edges from the largest down. For an edge `{ik, jk}` the crossing faces
/// `{ik, s k, jk}` are collapsed first with cone vertex `i s`, then the edge itself with cone
/// vertex `ij`. After each edge the complex must equal the noncrossing model with every edge
/// processed so far deleted, and at the end it must equal the lattice-path model.
pub fn collapse_schedule_with(pair: CoprimePair, caps: &Caps) -> Result<CollapseCertificate> {
    let hat = build_hat_ass_with(pair, caps)?;
    let graph = build_obstruction_graph(pair)?;
    let mut current = hat.clone();
    let mut expected = hat.clone();
    let mut steps = Vec::new();

    for (r0, &edge) in graph.edges().iter().enumerate().rev() {
        let r = r0 + 1;
        let fail = |q: usize| move |e: Error| Error::ScheduleFailed { r, q, reason: e.to_string() };
        let crossing = graph.crossing_indices(edge);
        for (q0, &s) in crossing.iter().enumerate() {
            let q = q0 + 1;
            let cone = graph.half_wedge_completion(edge, s).map_err(fail(q))?;
            let sk = Diagonal::new(s, edge.apex(), pair.b() as usize).map_err(fail(q))?;
            let face = Face::new(vec![edge.lesser(), sk, edge.greater()]);
            batch(&mut current, &face, cone, Stage { r, q, cone }, &mut steps).map_err(fail(q))?;
        }
        let q = crossing.len() + 1;
        let cone = wedge_completion(edge, pair).map_err(fail(q))?;
        batch(&mut current, &edge.face(), cone, Stage { r, q, cone }, &mut steps)
            .map_err(fail(q))?;

        expected = expected.deletion_masks(&[edge_mask(&hat, edge)]);
        if current != expected {
            return Err(Error::ScheduleFailed {
                r,
                q,
                reason: "complex after this edge is not the expected deletion".into(),
            });
        }
    }

    if current != build_ass_with(pair, caps)? {
        return Err(Error::ScheduleFailed {
            r: 0,
            q: 0,
            reason: "terminal complex differs from the lattice-path model".into(),
        });
    }
    Ok(CollapseCertificate { schema: 1, a: pair.a(), b: pair.b(), steps })
}

fn edge_mask(complex: &SimplicialComplex, edge: ObstructionEdge) -> Mask {
    complex.mask_of(&edge.face()).expect("edge diagonals are admissible")
}

fn batch(
    current: &mut SimplicialComplex,
    face: &Face,
    cone: Diagonal,
    stage: Stage,
    steps: &mut Vec<CertStep>,
) -> Result<()> {
    let f = current
        .mask_of(face)
        .filter(|m| current.has(*m))
        .ok_or_else(|| Error::NotAFace(face.to_string()))?;
    let c = current.index_of(cone).ok_or_else(|| Error::NotAFace(format!("{{{cone}}}")))?;
    for (big, small) in collapse_cone_masks(current, f, c)? {
        steps.push(CertStep { facet: current.face_of(big), subface: current.face_of(small), stage });
    }
    Ok(())
}
