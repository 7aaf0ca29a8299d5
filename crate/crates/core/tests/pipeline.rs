use ratassoc::collapse::{collapse_schedule, extract_morse_matching, verify_certificate, CollapseCertificate};
use ratassoc::complex::{build_ass, build_hat_ass, Face};
use ratassoc::homology::{betti_numbers, check_wedge, Field};
use ratassoc::membership::is_face_of_ass;
use ratassoc::obstruction::build_obstruction_graph;
use ratassoc::{CoprimePair, Error};

#[test]
fn four_seven_end_to_end() {
    let p = CoprimePair::new(4, 7).unwrap();
    let hat = build_hat_ass(p).unwrap();
    let ass = build_ass(p).unwrap();
    assert!(ass.is_subcomplex_of(&hat));

    let graph = build_obstruction_graph(p).unwrap();
    for e in graph.edges() {
        assert!(hat.contains(&e.face()));
        assert!(!is_face_of_ass(&e.face(), p).unwrap());
    }
    let missing_edges = hat.difference(&ass).into_iter().filter(|f| f.len() == 2).count();
    assert_eq!(missing_edges, graph.len());

    let cert = collapse_schedule(p).unwrap();
    let reparsed = CollapseCertificate::from_json(&cert.to_json()).unwrap();
    assert!(verify_certificate(&hat, &ass, &reparsed).valid);
    let matching = extract_morse_matching(&hat, &ass, &reparsed).unwrap();
    assert_eq!(matching.len(), cert.len());

    let wedge = check_wedge(p).unwrap();
    assert!(wedge.holds);
    assert_eq!(wedge.rational.nonzero(), vec![(2, 5)]);
    let hat_betti = betti_numbers(&hat, Field::Gf2).unwrap();
    assert!(hat_betti.same_numbers(&wedge.gf2));
}

#[test]
fn errors_surface_at_the_boundary() {
    assert_eq!(CoprimePair::new(4, 6), Err(Error::NotCoprime { a: 4, b: 6 }));
    assert_eq!(CoprimePair::new(0, 5), Err(Error::BadOrder { a: 0, b: 5 }));
    let p = CoprimePair::new(3, 5).unwrap();
    let crossing = Face::parse("0-4,1-5", 5).unwrap();
    assert!(matches!(is_face_of_ass(&crossing, p), Err(Error::NotAFaceOfHat(_))));
}
