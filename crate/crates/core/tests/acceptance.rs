//! Acceptance suite. Each criterion prints one PASS/FAIL line with its wall time; the test fails
//! if any criterion fails or overruns its time budget. Criteria run one after another so the
//! timings are not distorted by each other.

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use ratassoc::collapse::{collapse_schedule, verify_certificate};
use ratassoc::complex::{build_ass, build_hat_ass, Face};
use ratassoc::homology::{betti_numbers, BettiVector, Field};
use ratassoc::lattice::enumerate_dyck_paths;
use ratassoc::membership::{is_face_of_ass, valley_path, MembershipResult};
use ratassoc::obstruction::build_obstruction_graph;
use ratassoc::polygon::{all_admissible_diagonals, Diagonal};
use ratassoc::CoprimePair;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Exact binomial coefficient by the multiplicative formula.
fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn gcd(x: u32, y: u32) -> u32 {
    if y == 0 { x } else { gcd(y, x % y) }
}

fn pairs(keep: impl Fn(u32, u32) -> bool) -> Vec<CoprimePair> {
    let mut out = Vec::new();
    for b in 2..=16u32 {
        for a in 1..b {
            if gcd(a, b) == 1 && keep(a, b) {
                out.push(CoprimePair::new(a, b).unwrap());
            }
        }
    }
    out
}

fn sum_at_most_16() -> Vec<CoprimePair> {
    pairs(|a, b| a + b <= 16)
}

fn b_at_most_11_and_5_8() -> Vec<CoprimePair> {
    let mut v = pairs(|_, b| b <= 11);
    let extra = CoprimePair::new(5, 8).unwrap();
    if !v.contains(&extra) {
        v.push(extra);
    }
    v
}

fn parse_face(text: &str, b: usize) -> Face {
    Face::parse(text, b).unwrap()
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for p in sum_at_most_16() {
        let (a, b) = (p.a() as u128, p.b() as u128);
        let expected = choose(a + b, a) / (a + b);
        ensure!(expected * (a + b) == choose(a + b, a), "{p}: catalan not integral");
        let got = build_ass(p).map_err(|e| e.to_string())?.facets().len() as u128;
        ensure!(got == expected, "{p}: {got} facets, expected {expected}");
        checked += 1;
    }
    let count = |a, b| build_ass(CoprimePair::new(a, b).unwrap()).unwrap().facets().len();
    ensure!(count(3, 5) == 7 && count(5, 8) == 99, "(3,5) or (5,8) facet count differs");
    Ok(format!("{checked} pairs"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for p in sum_at_most_16() {
        let (a, b) = (p.a() as u128, p.b() as u128);
        let fh = build_ass(p).map_err(|e| e.to_string())?.fh_vector();
        // f_{i-2} against Kirkman, h_{i-1} against Narayana, for i = 1..=a.
        let kirkman: Vec<u128> =
            (1..=a).map(|i| choose(a, i) * choose(b + i - 1, i - 1) / a).collect();
        let narayana: Vec<i128> =
            (1..=a).map(|i| (choose(a, i) * choose(b - 1, i - 1) / a) as i128).collect();
        ensure!(fh.f == kirkman, "{p}: f = {:?}, Kirkman {kirkman:?}", fh.f);
        ensure!(fh.h == narayana, "{p}: h = {:?}, Narayana {narayana:?}", fh.h);
        checked += 1;
    }
    let fh = build_ass(CoprimePair::new(3, 5).unwrap()).unwrap().fh_vector();
    ensure!(fh.f == vec![1, 6, 7] && fh.h == vec![1, 4, 2], "(3,5): {fh:?}");
    Ok(format!("{checked} pairs"))
}

fn criterion_3() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (a, b, file) in [(3, 5, "og_3_5.txt"), (5, 8, "og_5_8.txt")] {
        let want = std::fs::read_to_string(dir.join(file)).map_err(|e| e.to_string())?;
        let graph = build_obstruction_graph(CoprimePair::new(a, b).unwrap()).map_err(|e| e.to_string())?;
        let got = graph.to_text();
        ensure!(got == want, "({a},{b}) edges:\n{got}expected:\n{want}");
        let mut sorted = graph.edges().to_vec();
        sorted.sort();
        ensure!(sorted == graph.edges(), "({a},{b}) edges are not in increasing order");
    }
    Ok("(3,5) and (5,8) byte-exact".into())
}

fn criterion_4() -> Outcome {
    let p = CoprimePair::new(5, 8).unwrap();
    for text in ["5-7,2-4,0-5,0-4", "5-7,4-8,2-4,0-4"] {
        let r = valley_path(&parse_face(text, 8), p).map_err(|e| e.to_string())?;
        ensure!(r == MembershipResult::NonMember { break_x: 0 }, "{{{text}}}: {r:?}, expected a break at x = 0");
    }
    let mut facets = 0;
    for p in sum_at_most_16() {
        for d in enumerate_dyck_paths(p).map_err(|e| e.to_string())? {
            let f = d.facet().map_err(|e| e.to_string())?;
            ensure!(is_face_of_ass(&f, p).map_err(|e| e.to_string())?, "{p}: facet of {d} rejected");
            facets += 1;
        }
    }
    Ok(format!("2 rejections, {facets} facets accepted"))
}

fn criterion_5() -> Outcome {
    let mut total_steps = 0;
    let list = b_at_most_11_and_5_8();
    for &p in &list {
        let cert = collapse_schedule(p).map_err(|e| format!("{p}: {e}"))?;
        let hat = build_hat_ass(p).map_err(|e| e.to_string())?;
        let ass = build_ass(p).map_err(|e| e.to_string())?;
        let report = verify_certificate(&hat, &ass, &cert);
        ensure!(report.valid, "{p}: certificate rejected: {:?}", report.failure);
        ensure!(report.terminal_faces == ass.len(), "{p}: terminal size {}", report.terminal_faces);
        ensure!(2 * cert.len() == hat.len() - ass.len(), "{p}: step count does not match difference");
        if p.b() % p.a() == 1 % p.a() {
            ensure!(cert.is_empty(), "{p}: Fuss pair with {} steps", cert.len());
        }
        total_steps += cert.len();
    }
    Ok(format!("{} pairs, {total_steps} elementary collapses replayed", list.len()))
}

fn criterion_6() -> Outcome {
    let mut faces = 0;
    for p in pairs(|a, b| a + b <= 13) {
        let facets: Vec<BTreeSet<Diagonal>> = enumerate_dyck_paths(p)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|d| d.facet().unwrap().iter().collect())
            .collect();
        for f in build_hat_ass(p).map_err(|e| e.to_string())?.faces() {
            let set: BTreeSet<Diagonal> = f.iter().collect();
            let oracle = facets.iter().any(|g| set.is_subset(g));
            let got = is_face_of_ass(&f, p).map_err(|e| e.to_string())?;
            ensure!(got == oracle, "{p}: {f} decided {got}, oracle {oracle}");
            faces += 1;
        }
    }
    Ok(format!("{faces} faces"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for p in sum_at_most_16() {
        for (name, c) in [("Ass", build_ass(p)), ("hat", build_hat_ass(p))] {
            let c = c.map_err(|e| e.to_string())?;
            let check = c.flag_check();
            ensure!(check.is_flag(), "{p} {name}: {check:?}");
            checked += 1;
        }
    }
    Ok(format!("{checked} complexes"))
}

fn criterion_8(cache: &mut HashMap<CoprimePair, BettiVector>) -> Outcome {
    let list = b_at_most_11_and_5_8();
    for &p in &list {
        let ass = build_ass(p).map_err(|e| e.to_string())?;
        let gf2 = betti_numbers(&ass, Field::Gf2).map_err(|e| e.to_string())?;
        let q = betti_numbers(&ass, Field::Rational).map_err(|e| e.to_string())?;
        let (a, b) = (p.a() as u128, p.b() as u128);
        let spheres = choose(b, a) / b;
        let dim = p.a() as isize - 2;
        for v in [&gf2, &q] {
            let expected: Vec<u64> = (-1..=dim).map(|k| if k == dim { spheres as u64 } else { 0 }).collect();
            ensure!(v.reduced == expected, "{p} {:?}: {:?}, expected {expected:?}", v.field, v.reduced);
        }
        cache.insert(p, q);
    }
    let two = cache[&CoprimePair::new(3, 5).unwrap()].get(1);
    let seven = cache[&CoprimePair::new(5, 8).unwrap()].get(3);
    ensure!(two == 2 && seven == 7, "(3,5) -> {two}, (5,8) -> {seven}");
    Ok(format!("{} pairs, both fields", list.len()))
}

fn criterion_9(cache: &mut HashMap<CoprimePair, BettiVector>) -> Outcome {
    let mut checked = 0;
    let reused = cache.len();
    for b in 2..=11u32 {
        let all: BTreeSet<(usize, usize)> = (2..=b as usize)
            .flat_map(|j| (0..j - 1).map(move |i| (i, j)))
            .filter(|&(i, j)| (i, j) != (0, b as usize))
            .collect();
        for a in (1..b).filter(|&a| gcd(a, b) == 1) {
            let p = CoprimePair::new(a, b).unwrap();
            // Independent admissibility: both arcs are floor(t b / a) for some 1 <= t < a.
            let s: BTreeSet<usize> = (1..a).map(|t| (t * b / a) as usize).collect();
            let s_dual: BTreeSet<usize> = (1..b - a).map(|t| (t * b / (b - a)) as usize).collect();
            let admissible = |set: &BTreeSet<usize>| -> BTreeSet<(usize, usize)> {
                all.iter()
                    .copied()
                    .filter(|&(i, j)| set.contains(&(j - i - 1)) && set.contains(&(b as usize - (j - i))))
                    .collect()
            };
            let (mine, theirs) = (admissible(&s), admissible(&s_dual));
            ensure!(mine.is_disjoint(&theirs), "b = {b}, a = {a}: overlap");
            ensure!(&mine | &theirs == all, "b = {b}, a = {a}: not a cover");
            let library: BTreeSet<(usize, usize)> =
                all_admissible_diagonals(p).iter().map(|d| (d.i(), d.j())).collect();
            ensure!(library == mine, "b = {b}, a = {a}: library admissible set differs");

            let mut betti = |q: CoprimePair| -> Result<BettiVector, String> {
                if let Some(v) = cache.get(&q) {
                    return Ok(v.clone());
                }
                let v = betti_numbers(&build_ass(q).map_err(|e| e.to_string())?, Field::Rational)
                    .map_err(|e| e.to_string())?;
                cache.insert(q, v.clone());
                Ok(v)
            };
            let left = betti(p)?.get(a as isize - 2);
            let right = betti(p.dual())?.get((b - a) as isize - 2);
            ensure!(left == right, "({a},{b}) rank {left} vs ({},{b}) rank {right}", b - a);
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs, {reused} Betti vectors reused from the wedge check"))
}

fn criterion_10() -> Outcome {
    let mut checked = 0;
    for p in sum_at_most_16() {
        let graph = build_obstruction_graph(p).map_err(|e| e.to_string())?;
        let report = graph.translation_check();
        ensure!(report.holds, "{p}: components {:?} differ", report.mismatched_components);
        checked += 1;
    }
    Ok(format!("{checked} pairs, every component"))
}

type Criterion = (u32, &'static str, u64, Box<dyn FnMut() -> Outcome>);

#[test]
fn acceptance() {
    let mut cache = HashMap::new();
    let criteria: Vec<Criterion> = vec![
        (1, "facet counts", 10, Box::new(criterion_1)),
        (2, "f/h-vectors vs Kirkman/Narayana", 30, Box::new(criterion_2)),
        (3, "obstruction graph golden", 5, Box::new(criterion_3)),
        (4, "membership golden", 10, Box::new(criterion_4)),
        (5, "collapse certificates", 120, Box::new(criterion_5)),
        (6, "membership vs exhaustive oracle", 120, Box::new(criterion_6)),
        (7, "flagness", 60, Box::new(criterion_7)),
    ];
    let mut failures = Vec::new();
    let mut report = |n: u32, name: &str, limit: u64, outcome: Outcome, elapsed: Duration| {
        let over = elapsed > Duration::from_secs(limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {limit} s")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        println!("criterion {n:>2} [{status}] {name} ({:.2} s, limit {limit} s): {detail}", elapsed.as_secs_f64());
        if status == "FAIL" {
            failures.push(n);
        }
    };
    for (n, name, limit, mut run) in criteria {
        let start = Instant::now();
        let outcome = run();
        report(n, name, limit, outcome, start.elapsed());
    }
    let start = Instant::now();
    let outcome = criterion_8(&mut cache);
    report(8, "wedge of spheres", 120, outcome, start.elapsed());
    let start = Instant::now();
    let outcome = criterion_9(&mut cache);
    report(9, "Alexander partition and rank duality", 60, outcome, start.elapsed());
    let start = Instant::now();
    let outcome = criterion_10();
    report(10, "translation structure", 60, outcome, start.elapsed());
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
