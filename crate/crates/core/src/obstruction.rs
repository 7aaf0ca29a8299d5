//! The obstruction graph: admissible diagonals joined when they are noncrossing but never appear
//! together in a laser facet.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::complex::Face;
use crate::membership::is_face_of_ass;
use crate::polygon::{all_admissible_diagonals, Diagonal, RemainderSet};
use crate::{CoprimePair, Error, Result};

/// An edge `{ik, jk}` with `i < j < k`. The derived order compares `lesser` first, then `greater`,
/// which is the total edge order used by the collapse schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObstructionEdge {
    lesser: Diagonal,
    greater: Diagonal,
}

impl ObstructionEdge {
    /// Orders the two diagonals and checks that they share their larger endpoint.
    fn new(d: Diagonal, e: Diagonal) -> Result<Self> {
        let (lesser, greater) = if d < e { (d, e) } else { (e, d) };
        if lesser.j() != greater.j() || lesser == greater {
            return Err(Error::PropertyViolated(format!(
                "obstruction pair {{{lesser}, {greater}}} does not share its larger endpoint"
            )));
        }
        Ok(Self { lesser, greater })
    }

    pub fn lesser(&self) -> Diagonal {
        self.lesser
    }

    pub fn greater(&self) -> Diagonal {
        self.greater
    }

    /// The shared larger endpoint `k`.
    pub fn apex(&self) -> usize {
        self.lesser.j()
    }

    pub fn face(&self) -> Face {
        Face::new(vec![self.lesser, self.greater])
    }
}

impl fmt::Display for ObstructionEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lesser, self.greater)
    }
}

impl Serialize for ObstructionEdge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lesser, self.greater].serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionGraph {
    pair: CoprimePair,
    vertices: Vec<Diagonal>,
    edges: Vec<ObstructionEdge>,
    lookup: HashSet<(Diagonal, Diagonal)>,
}

/// Vertices and edges whose diagonals all end at a fixed larger endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub apex: usize,
    pub vertices: Vec<Diagonal>,
    pub edges: Vec<ObstructionEdge>,
}

impl Component {
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else { return true };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                let next = if e.lesser == v {
                    e.greater
                } else if e.greater == v {
                    e.lesser
                } else {
                    continue;
                };
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// Outcome of comparing each component with the translate of the top component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslationReport {
    pub a: u32,
    pub b: u32,
    pub holds: bool,
    /// Components where the translated vertex or edge set differs from the computed one.
    pub mismatched_components: Vec<usize>,
}

/// Every noncrossing pair of admissible diagonals is tested for membership; the pairs that fail
/// are the edges.
pub fn build_obstruction_graph(pair: CoprimePair) -> Result<ObstructionGraph> {
    let vertices = all_admissible_diagonals(pair);
    let mut edges = Vec::new();
    for (n, &d) in vertices.iter().enumerate() {
        for &e in &vertices[n + 1..] {
            if d.crosses(e) {
                continue;
            }
            if !is_face_of_ass(&Face::new(vec![d, e]), pair)? {
                edges.push(ObstructionEdge::new(d, e)?);
            }
        }
    }
    edges.sort();
    let lookup = edges.iter().map(|e| (e.lesser, e.greater)).collect();
    Ok(ObstructionGraph { pair, vertices, edges, lookup })
}

impl ObstructionGraph {
    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    pub fn vertices(&self) -> &[Diagonal] {
        &self.vertices
    }

    /// Edges in increasing edge order.
    pub fn edges(&self) -> &[ObstructionEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_edge(&self, d: Diagonal, e: Diagonal) -> bool {
        let key = if d < e { (d, e) } else { (e, d) };
        self.lookup.contains(&key)
    }

    pub fn edge(&self, d: Diagonal, e: Diagonal) -> Option<ObstructionEdge> {
        self.is_edge(d, e).then(|| ObstructionEdge::new(d, e).expect("stored edges are valid"))
    }

    pub fn component(&self, m: usize) -> Component {
        Component {
            apex: m,
            vertices: self.vertices.iter().copied().filter(|d| d.j() == m).collect(),
            edges: self.edges.iter().copied().filter(|e| e.apex() == m).collect(),
        }
    }

    pub fn components(&self) -> Vec<Component> {
        (0..=self.pair.b() as usize).map(|m| self.component(m)).collect()
    }

    /// The indices `s` with `i < s < j`, `sk` admissible and `{sk, jk}` not an edge.
    pub fn crossing_indices(&self, e: ObstructionEdge) -> Vec<usize> {
        let set = RemainderSet::new(self.pair);
        let (i, j, k, b) = (e.lesser.i(), e.greater.i(), e.apex(), self.pair.b() as usize);
        (i + 1..j)
            .filter(|&s| {
                Diagonal::new(s, k, b)
                    .is_ok_and(|sk| set.admits(sk) && !self.is_edge(sk, e.greater))
            })
            .collect()
    }

    /// The diagonal `i s` for a crossing index `s` of `e = {ik, jk}`. Also confirms that `{ik, sk}`
    /// is an edge.
    pub fn half_wedge_completion(&self, e: ObstructionEdge, s: usize) -> Result<Diagonal> {
        let (i, j, k, b) = (e.lesser.i(), e.greater.i(), e.apex(), self.pair.b() as usize);
        if s <= i || s >= j {
            return Err(Error::PropertyViolated(format!("{s} is not strictly between {i} and {j}")));
        }
        let set = RemainderSet::new(self.pair);
        let is = Diagonal::new(i, s, b)
            .ok()
            .filter(|d| set.admits(*d))
            .ok_or_else(|| Error::AdmissibilityViolated(format!("{i}-{s} for wedge {{{e}}}")))?;
        let sk = Diagonal::new(s, k, b)?;
        if !set.admits(sk) || self.is_edge(sk, e.greater) {
            return Err(Error::PropertyViolated(format!("{s} is not a crossing index of {{{e}}}")));
        }
        if !self.is_edge(e.lesser, sk) {
            return Err(Error::PropertyViolated(format!(
                "{{{}, {sk}}} is not an obstruction edge",
                e.lesser
            )));
        }
        Ok(is)
    }

    /// Rebuilds every component from the top one by shifting diagonals down and compares.
    pub fn translation_check(&self) -> TranslationReport {
        let b = self.pair.b() as usize;
        let top = self.component(b);
        let mut mismatched = Vec::new();
        for m in 0..=b {
            let k = (b - m) as isize;
            let vertices: BTreeSet<Diagonal> =
                top.vertices.iter().filter_map(|d| d.translate(k)).collect();
            let edges: BTreeSet<ObstructionEdge> = top
                .edges
                .iter()
                .filter_map(|e| {
                    let (d, f) = (e.lesser.translate(k)?, e.greater.translate(k)?);
                    ObstructionEdge::new(d, f).ok()
                })
                .collect();
            let actual = self.component(m);
            if vertices != actual.vertices.iter().copied().collect()
                || edges != actual.edges.iter().copied().collect()
            {
                mismatched.push(m);
            }
        }
        TranslationReport {
            a: self.pair.a(),
            b: self.pair.b(),
            holds: mismatched.is_empty(),
            mismatched_components: mismatched,
        }
    }

    /// One edge per line, `"0-4 2-4"`, in edge order.
    pub fn to_text(&self) -> String {
        self.edges.iter().map(|e| format!("{e}\n")).collect()
    }

    /// Graphviz source with one cluster per nonempty component.
    pub fn to_dot(&self) -> String {
        let mut by_apex: BTreeMap<usize, Vec<ObstructionEdge>> = BTreeMap::new();
        for e in &self.edges {
            by_apex.entry(e.apex()).or_default().push(*e);
        }
        let mut out = format!("graph \"OG({},{})\" {{\n", self.pair.a(), self.pair.b());
        for (apex, edges) in by_apex {
            out.push_str(&format!("  subgraph cluster_{apex} {{\n    label=\"apex {apex}\";\n"));
            for e in edges {
                out.push_str(&format!("    \"{}\" -- \"{}\";\n", e.lesser, e.greater));
            }
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }

    pub fn document(&self) -> ObstructionDocument {
        ObstructionDocument {
            schema: 1,
            a: self.pair.a(),
            b: self.pair.b(),
            edges: self.edges.clone(),
        }
    }
}

/// Wire form: `{schema, a, b, edges: [[[i,j],[k,m]], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionDocument {
    pub schema: u32,
    pub a: u32,
    pub b: u32,
    pub edges: Vec<ObstructionEdge>,
}

/// The diagonal `ij` closing the wedge `{ik, jk}`.
pub fn wedge_completion(e: ObstructionEdge, pair: CoprimePair) -> Result<Diagonal> {
    Diagonal::new(e.lesser.i(), e.greater.i(), pair.b() as usize)
        .ok()
        .filter(|d| RemainderSet::new(pair).admits(*d))
        .ok_or_else(|| {
            Error::AdmissibilityViolated(format!(
                "{}-{} for wedge {{{e}}}",
                e.lesser.i(),
                e.greater.i()
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_ass, build_hat_ass};

    fn pair(a: u32, b: u32) -> CoprimePair {
        CoprimePair::new(a, b).unwrap()
    }

    fn d(i: usize, j: usize, b: usize) -> Diagonal {
        Diagonal::new(i, j, b).unwrap()
    }

    fn edge(g: &ObstructionGraph, x: (usize, usize), y: (usize, usize)) -> ObstructionEdge {
        let b = g.pair().b() as usize;
        g.edge(d(x.0, x.1, b), d(y.0, y.1, b)).expect("edge present")
    }

    #[test]
    fn small_graphs() {
        let g = build_obstruction_graph(pair(3, 5)).unwrap();
        assert_eq!(g.to_text(), "0-4 2-4\n1-5 3-5\n");
        for a in 1..6 {
            for k in 1..4 {
                assert!(build_obstruction_graph(pair(a, k * a + 1)).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn five_eight_edges_in_order() {
        let g = build_obstruction_graph(pair(5, 8)).unwrap();
        let shown: Vec<String> = g.edges().iter().map(|e| e.to_string()).collect();
        assert_eq!(
            shown,
            [
                "0-4 2-4", "1-5 3-5", "2-6 4-6", "0-7 2-7", "0-7 5-7", "3-7 5-7", "1-8 3-8",
                "1-8 6-8", "4-8 6-8"
            ]
        );
        assert!(edge(&g, (0, 4), (2, 4)) < edge(&g, (1, 5), (3, 5)));
    }

    #[test]
    fn components_of_five_eight() {
        let g = build_obstruction_graph(pair(5, 8)).unwrap();
        let top: Vec<String> = g.component(8).edges.iter().map(|e| e.to_string()).collect();
        assert_eq!(top, ["1-8 3-8", "1-8 6-8", "4-8 6-8"]);
        assert!(g.component(0).edges.is_empty());
        assert!(g.component(1).edges.is_empty());
        let six = g.component(6);
        assert_eq!(six.vertices, vec![d(1, 6, 8), d(2, 6, 8), d(4, 6, 8)]);
        assert!(!six.is_connected());
        assert!(g.component(8).is_connected());
    }

    #[test]
    fn wedge_completions() {
        let g = build_obstruction_graph(pair(5, 8)).unwrap();
        let p = g.pair();
        assert_eq!(wedge_completion(edge(&g, (4, 8), (6, 8)), p).unwrap(), d(4, 6, 8));
        assert_eq!(wedge_completion(edge(&g, (1, 8), (3, 8)), p).unwrap(), d(1, 3, 8));
        let h = build_obstruction_graph(pair(3, 5)).unwrap();
        assert_eq!(wedge_completion(edge(&h, (0, 4), (2, 4)), h.pair()).unwrap(), d(0, 2, 5));
    }

    #[test]
    fn crossing_indices_and_half_wedges() {
        let g = build_obstruction_graph(pair(5, 8)).unwrap();
        let wide = edge(&g, (1, 8), (6, 8));
        assert_eq!(g.crossing_indices(wide), vec![3]);
        assert_eq!(g.half_wedge_completion(wide, 3).unwrap(), d(1, 3, 8));
        assert!(g.is_edge(d(1, 8, 8), d(3, 8, 8)));
        assert_eq!(g.crossing_indices(edge(&g, (1, 8), (3, 8))), Vec::<usize>::new());

        let seven = edge(&g, (0, 7), (5, 7));
        assert_eq!(g.crossing_indices(seven), vec![2]);
        assert_eq!(g.half_wedge_completion(seven, 2).unwrap(), d(0, 2, 8));
        assert!(g.is_edge(d(0, 7, 8), d(2, 7, 8)));
        // {3-7, 5-7} is itself an edge and 0-3 is not admissible, so 3 is not a crossing index.
        assert!(g.half_wedge_completion(seven, 3).is_err());

        let h = build_obstruction_graph(pair(3, 5)).unwrap();
        assert!(h.crossing_indices(edge(&h, (0, 4), (2, 4))).is_empty());
    }

    #[test]
    fn edges_are_exactly_the_missing_two_faces() {
        for p in CoprimePair::all_up_to(11, |a, b| a + b <= 14) {
            let g = build_obstruction_graph(p).unwrap();
            let (hat, ass) = (build_hat_ass(p).unwrap(), build_ass(p).unwrap());
            let missing: Vec<Face> =
                hat.difference(&ass).into_iter().filter(|f| f.len() == 2).collect();
            let edges: Vec<Face> = g.edges().iter().map(|e| e.face()).collect();
            assert_eq!(hat.deletion(&edges).unwrap(), ass, "{p}");
            let mut sorted = edges.clone();
            sorted.sort();
            let mut expected = missing;
            expected.sort();
            assert_eq!(sorted, expected, "{p}");
        }
    }

    #[test]
    fn lemma_statements_hold() {
        for p in CoprimePair::all_up_to(15, |a, b| a + b <= 16) {
            let g = build_obstruction_graph(p).unwrap();
            for &e in g.edges() {
                wedge_completion(e, p).unwrap();
                for s in g.crossing_indices(e) {
                    g.half_wedge_completion(e, s).unwrap();
                }
            }
            assert!(g.translation_check().holds, "{p}");
        }
    }

    #[test]
    fn dot_and_json_exports() {
        let g = build_obstruction_graph(pair(3, 5)).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph \"OG(3,5)\" {\n  subgraph cluster_4 {\n    label=\"apex 4\";\n    \"0-4\" -- \"2-4\";\n  }\n  subgraph cluster_5 {\n    label=\"apex 5\";\n    \"1-5\" -- \"3-5\";\n  }\n}\n"
        );
        assert_eq!(
            serde_json::to_string(&g.document()).unwrap(),
            r#"{"schema":1,"a":3,"b":5,"edges":[[[0,4],[2,4]],[[1,5],[3,5]]]}"#
        );
    }
}
