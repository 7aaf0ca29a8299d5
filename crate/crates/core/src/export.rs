//! Serializable documents for complexes and an SVG renderer for chord diagrams.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::polygon::Diagonal;
use crate::{CoprimePair, Error, Result};

/// Which of the two complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Generated by the laser facets of Dyck paths.
    Ass,
    /// Every noncrossing set of admissible diagonals.
    Hat,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ass" => Ok(Model::Ass),
            "hat" | "hat-ass" | "noncrossing" => Ok(Model::Hat),
            other => Err(Error::Parse(format!("unknown model {other:?}"))),
        }
    }
}

/// Wire form: `{schema, a, b, model, ground, facets, faces?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexDocument {
    pub schema: u32,
    pub a: u32,
    pub b: u32,
    pub model: Model,
    pub ground: Vec<Diagonal>,
    pub facets: Vec<Face>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Face>>,
}

impl ComplexDocument {
    pub fn new(pair: CoprimePair, model: Model, complex: &SimplicialComplex, all_faces: bool) -> Self {
        Self {
            schema: 1,
            a: pair.a(),
            b: pair.b(),
            model,
            ground: complex.ground().to_vec(),
            facets: complex.facets(),
            faces: all_faces.then(|| complex.faces()),
        }
    }

    /// One facet per line, diagonals separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in self.faces.as_ref().unwrap_or(&self.facets) {
            let line: Vec<String> = f.iter().map(|d| d.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// One chord diagram: solid chords, dashed chords and a caption.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Panel {
    pub solid: Vec<Diagonal>,
    pub dashed: Vec<Diagonal>,
    pub caption: String,
}

const RADIUS: f64 = 80.0;
const CELL: f64 = 220.0;

/// Points `0..=b` sit on a circle, clockwise from the top. Panels are laid out in rows of four.
pub fn render_svg(b: usize, panels: &[Panel]) -> String {
    let columns = panels.len().clamp(1, 4);
    let rows = panels.len().div_ceil(4).max(1);
    let (w, h) = (columns as f64 * CELL, rows as f64 * CELL);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (n, panel) in panels.iter().enumerate() {
        let cx = (n % 4) as f64 * CELL + CELL / 2.0;
        let cy = (n / 4) as f64 * CELL + CELL / 2.0 - 10.0;
        let point = |k: usize| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / (b + 1) as f64;
            (cx + RADIUS * theta.sin(), cy - RADIUS * theta.cos())
        };
        let mut outline = String::new();
        for k in 0..=b {
            let (x, y) = point(k);
            let _ = write!(outline, "{x:.3},{y:.3} ");
        }
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="none" stroke="#888" stroke-width="1"/>"##,
            outline.trim_end()
        );
        for (chords, style) in [
            (&panel.dashed, r##"stroke="#c33" stroke-width="1.5" stroke-dasharray="4 3""##),
            (&panel.solid, r##"stroke="#000" stroke-width="2""##),
        ] {
            for d in chords {
                let ((x1, y1), (x2, y2)) = (point(d.i()), point(d.j()));
                let _ = writeln!(
                    out,
                    r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" {style}/>"#
                );
            }
        }
        for k in 0..=b {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / (b + 1) as f64;
            let (x, y) = (cx + (RADIUS + 12.0) * theta.sin(), cy - (RADIUS + 12.0) * theta.cos());
            let _ = writeln!(
                out,
                r#"<text x="{x:.3}" y="{y:.3}" font-family="sans-serif" font-size="11" text-anchor="middle" dominant-baseline="middle">{k}</text>"#
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{cx:.3}" y="{:.3}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            cy + RADIUS + 32.0,
            escape(&panel.caption)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
