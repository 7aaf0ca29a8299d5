use std::fs;
use std::io::Read;
use std::path::Path;

use ratassoc::collapse::{collapse_schedule_with, verify_certificate, CollapseCertificate};
use ratassoc::complex::counts::{rational_kirkman, rational_narayana};
use ratassoc::complex::{build_ass_with, build_hat_ass_with, Caps, Face, SimplicialComplex};
use ratassoc::export::{render_svg, ComplexDocument, Model, Panel};
use ratassoc::homology::{
    alexander_partition_check, betti_numbers_with, duality_report, wedge_report, BettiVector,
    DualityReport, Field, Method, PartitionReport,
};
use ratassoc::membership::{valley_path, MembershipReport, MembershipResult};
use ratassoc::obstruction::{build_obstruction_graph, wedge_completion, ObstructionEdge};
use ratassoc::polygon::all_admissible_diagonals;
use ratassoc::CoprimePair;
use serde::Serialize;

use crate::{Command, Failure, Format, ModelArg};

type Outcome = Result<String, (Option<String>, Failure)>;

fn fail<E: Into<Failure>>(e: E) -> (Option<String>, Failure) {
    (None, e.into())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn unsupported(command: &str, format: Format) -> (Option<String>, Failure) {
    (None, Failure::Usage(format!("{command} does not support --format {format:?}")))
}

fn model(m: ModelArg) -> Model {
    match m {
        ModelArg::Ass => Model::Ass,
        ModelArg::Hat => Model::Hat,
    }
}

fn build(pair: CoprimePair, m: ModelArg, caps: &Caps) -> Result<SimplicialComplex, Failure> {
    Ok(match m {
        ModelArg::Ass => build_ass_with(pair, caps)?,
        ModelArg::Hat => build_hat_ass_with(pair, caps)?,
    })
}

pub fn run(command: Command, caps: &Caps) -> Outcome {
    match command {
        Command::Build { pair, model: m, faces, format } => {
            let pair = pair.pair().map_err(fail)?;
            let complex = build(pair, m, caps).map_err(fail)?;
            let doc = ComplexDocument::new(pair, model(m), &complex, faces);
            match format {
                Format::Json => Ok(json(&doc)),
                Format::Text => Ok(doc.to_text()),
                Format::Svg => {
                    let shown = doc.faces.as_ref().unwrap_or(&doc.facets);
                    let panels: Vec<Panel> = shown
                        .iter()
                        .map(|f| Panel { solid: f.diagonals().to_vec(), dashed: vec![], caption: f.to_string() })
                        .collect();
                    Ok(render_svg(pair.b() as usize, &panels))
                }
                Format::Dot => Err(unsupported("build", format)),
            }
        }
        Command::Fvector { pair, model: m, format } => fvector(pair.pair().map_err(fail)?, m, format, caps),
        Command::Membership { pair, face, format } => {
            let pair = pair.pair().map_err(fail)?;
            let face = Face::parse(&face, pair.b() as usize).map_err(fail)?;
            let result = valley_path(&face, pair).map_err(fail)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Doc {
                        schema: u32,
                        a: u32,
                        b: u32,
                        face: Face,
                        #[serde(flatten)]
                        report: MembershipReport,
                    }
                    let report = MembershipReport::from(&result);
                    Ok(json(&Doc { schema: 1, a: pair.a(), b: pair.b(), face, report }))
                }
                Format::Text => Ok(match &result {
                    MembershipResult::Member(p) => format!("member valley_path={}\n", p.word()),
                    MembershipResult::NonMember { break_x } => format!("not a member break_x={break_x}\n"),
                }),
                Format::Svg => {
                    let dashed = match &result {
                        MembershipResult::Member(p) => p.facet().map_err(fail)?.diagonals().to_vec(),
                        MembershipResult::NonMember { .. } => vec![],
                    };
                    let caption = match &result {
                        MembershipResult::Member(p) => format!("{face} in facet of {}", p.word()),
                        MembershipResult::NonMember { break_x } => format!("{face}: breaks at x = {break_x}"),
                    };
                    let panel = Panel { solid: face.diagonals().to_vec(), dashed, caption };
                    Ok(render_svg(pair.b() as usize, &[panel]))
                }
                Format::Dot => Err(unsupported("membership", format)),
            }
        }
        Command::Obstruction { pair, component, format } => {
            let pair = pair.pair().map_err(fail)?;
            if let Some(m) = component.filter(|&m| m > pair.b() as usize) {
                return Err(fail(Failure::Usage(format!("component {m} is outside 0..={}", pair.b()))));
            }
            let graph = build_obstruction_graph(pair).map_err(fail)?;
            let edges: Vec<ObstructionEdge> = match component {
                Some(m) => graph.component(m).edges,
                None => graph.edges().to_vec(),
            };
            match format {
                Format::Json => {
                    let mut doc = graph.document();
                    doc.edges = edges;
                    Ok(json(&doc))
                }
                Format::Text => Ok(edges.iter().map(|e| format!("{e}\n")).collect()),
                Format::Dot if component.is_none() => Ok(graph.to_dot()),
                Format::Dot => {
                    let mut out = format!("graph \"OG({},{})_{}\" {{\n", pair.a(), pair.b(), component.unwrap_or(0));
                    for e in &edges {
                        out.push_str(&format!("  \"{}\" -- \"{}\";\n", e.lesser(), e.greater()));
                    }
                    out.push_str("}\n");
                    Ok(out)
                }
                Format::Svg => {
                    let panels = edges
                        .iter()
                        .map(|e| {
                            let dashed = wedge_completion(*e, pair).map(|d| vec![d]).unwrap_or_default();
                            Panel { solid: vec![e.lesser(), e.greater()], dashed, caption: format!("{{{e}}}") }
                        })
                        .collect::<Vec<_>>();
                    Ok(render_svg(pair.b() as usize, &panels))
                }
            }
        }
        Command::Collapse { pair, emit } => {
            let pair = pair.pair().map_err(fail)?;
            let cert = collapse_schedule_with(pair, caps).map_err(fail)?;
            let mut text = cert.to_json();
            text.push('\n');
            if emit == Path::new("-") {
                Ok(text)
            } else {
                fs::write(&emit, text).map_err(fail)?;
                eprintln!("wrote {} steps to {}", cert.len(), emit.display());
                Ok(String::new())
            }
        }
        Command::Verify { cert } => {
            let text = if cert == Path::new("-") {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(fail)?;
                s
            } else {
                fs::read_to_string(&cert).map_err(fail)?
            };
            let cert = CollapseCertificate::from_json(&text).map_err(fail)?;
            let pair = cert.pair().map_err(fail)?;
            let start = build_hat_ass_with(pair, caps).map_err(fail)?;
            let target = build_ass_with(pair, caps).map_err(fail)?;
            let report = verify_certificate(&start, &target, &cert);
            let out = json(&report);
            if report.valid {
                Ok(out)
            } else {
                let reason = report.failure.as_ref().map_or(String::new(), |f| format!("step {}: {}", f.step, f.reason));
                Err((Some(out), Failure::Verification(format!("certificate rejected at {reason}"))))
            }
        }
        Command::Homology { pair, field, model: m, format } => {
            let pair = pair.pair().map_err(fail)?;
            let complex = build(pair, m, caps).map_err(fail)?;
            let field = Field::from(field);
            let betti = betti_numbers_with(&complex, field, Method::Sparse, caps).map_err(fail)?;
            homology(pair, m, betti, format)
        }
        Command::Duality { b, format } => duality(b, format, caps),
        Command::Render { pair, face } => {
            let pair = pair.pair().map_err(fail)?;
            let b = pair.b() as usize;
            let panel = match face {
                Some(text) => {
                    let face = Face::parse(&text, b).map_err(fail)?;
                    Panel { solid: face.diagonals().to_vec(), dashed: vec![], caption: face.to_string() }
                }
                None => Panel {
                    solid: vec![],
                    dashed: all_admissible_diagonals(pair),
                    caption: format!("admissible diagonals for {pair}"),
                },
            };
            Ok(render_svg(b, &[panel]))
        }
    }
}

fn fvector(pair: CoprimePair, m: ModelArg, format: Format, caps: &Caps) -> Outcome {
    let complex = build(pair, m, caps).map_err(fail)?;
    let fh = complex.fh_vector();
    let formulas = match m {
        ModelArg::Ass => {
            let a = pair.a() as usize;
            let kirkman: Vec<u128> = (1..=a).map(|i| rational_kirkman(pair, i)).collect::<Result<_, _>>().map_err(fail)?;
            let narayana: Vec<u128> = (1..=a).map(|i| rational_narayana(pair, i)).collect::<Result<_, _>>().map_err(fail)?;
            Some((kirkman, narayana))
        }
        ModelArg::Hat => None,
    };
    let matches = formulas.as_ref().map(|(k, n)| {
        fh.f.len() == k.len()
            && fh.f == *k
            && fh.h.len() == n.len()
            && fh.h.iter().zip(n).all(|(x, y)| *x == *y as i128)
    });

    #[derive(Serialize)]
    struct Doc {
        schema: u32,
        a: u32,
        b: u32,
        model: Model,
        f: Vec<u128>,
        h: Vec<i128>,
        #[serde(skip_serializing_if = "Option::is_none")]
        kirkman: Option<Vec<u128>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        narayana: Option<Vec<u128>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        formulas_match: Option<bool>,
    }
    let (kirkman, narayana) = formulas.unzip();
    let doc = Doc {
        schema: 1,
        a: pair.a(),
        b: pair.b(),
        model: model(m),
        f: fh.f.clone(),
        h: fh.h.clone(),
        kirkman,
        narayana,
        formulas_match: matches,
    };
    let out = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let join = |v: Vec<String>| v.join(", ");
            let mut s = format!(
                "f = ({})\nh = ({})\n",
                join(fh.f.iter().map(|x| x.to_string()).collect()),
                join(fh.h.iter().map(|x| x.to_string()).collect())
            );
            if let Some(ok) = matches {
                s.push_str(&format!("formulas {}\n", if ok { "match" } else { "DIFFER" }));
            }
            s
        }
        _ => return Err(unsupported("fvector", format)),
    };
    match matches {
        Some(false) => Err((Some(out), Failure::Verification("f/h-vector differs from the formulas".into()))),
        _ => Ok(out),
    }
}

fn homology(pair: CoprimePair, m: ModelArg, betti: BettiVector, format: Format) -> Outcome {
    #[derive(Serialize)]
    struct Doc {
        schema: u32,
        a: u32,
        b: u32,
        model: Model,
        field: Field,
        /// Reduced Betti numbers from dimension -1 upwards.
        reduced_betti: Vec<u64>,
        sphere_dim: isize,
        expected_spheres: u128,
        wedge_holds: bool,
    }
    let report = wedge_report(pair, betti.clone(), betti.clone());
    let doc = Doc {
        schema: 1,
        a: pair.a(),
        b: pair.b(),
        model: model(m),
        field: betti.field,
        reduced_betti: betti.reduced.clone(),
        sphere_dim: report.sphere_dim,
        expected_spheres: report.expected_spheres,
        wedge_holds: report.holds,
    };
    let out = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = String::new();
            for (k, b) in betti.nonzero() {
                s.push_str(&format!("b~{k} = {b}\n"));
            }
            s.push_str(&format!(
                "expected: {} spheres of dimension {} ({})\n",
                report.expected_spheres,
                report.sphere_dim,
                if report.holds { "holds" } else { "FAILS" }
            ));
            s
        }
        _ => return Err(unsupported("homology", format)),
    };
    if report.holds {
        Ok(out)
    } else {
        Err((Some(out), Failure::Verification(format!("reduced homology of {pair} is not the predicted wedge"))))
    }
}

fn duality(b: u32, format: Format, caps: &Caps) -> Outcome {
    let partition: PartitionReport = alexander_partition_check(b).map_err(fail)?;
    let mut pairs: Vec<DualityReport> = Vec::new();
    for a in 1..b {
        let Ok(pair) = CoprimePair::new(a, b) else { continue };
        let mine = betti_numbers_with(&build_ass_with(pair, caps).map_err(fail)?, Field::Rational, Method::Sparse, caps)
            .map_err(fail)?;
        let theirs = betti_numbers_with(&build_ass_with(pair.dual(), caps).map_err(fail)?, Field::Rational, Method::Sparse, caps)
            .map_err(fail)?;
        pairs.push(duality_report(pair, &mine, &theirs));
    }
    let holds = partition.holds && pairs.iter().all(|p| p.holds);

    #[derive(Serialize)]
    struct Doc {
        schema: u32,
        b: u32,
        partition: PartitionReport,
        pairs: Vec<DualityReport>,
        holds: bool,
    }
    let doc = Doc { schema: 1, b, partition, pairs, holds };
    let out = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = format!(
                "b = {b}: {} diagonals, partition {}\n",
                doc.partition.diagonals,
                if doc.partition.holds { "holds" } else { "FAILS" }
            );
            for p in &doc.pairs {
                s.push_str(&format!(
                    "({},{}) rank {} <-> ({},{}) rank {}: {}\n",
                    p.a, p.b, p.rank, p.dual_a, p.b, p.dual_rank,
                    if p.holds { "equal" } else { "DIFFER" }
                ));
            }
            s
        }
        _ => return Err(unsupported("duality", format)),
    };
    if holds {
        Ok(out)
    } else {
        Err((Some(out), Failure::Verification(format!("duality check failed for b = {b}"))))
    }
}
