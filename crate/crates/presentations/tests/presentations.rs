use exactlin::Scalar;
use hopf_core::verify_hopf;
use presentations::*;
use proptest::prelude::*;

fn h_presented() -> PresentedHopf {
    PresentedHopf::new(parse(H_PRESENTATION).unwrap()).unwrap()
}

fn word(p: &PresentedHopf, s: &str) -> Word {
    s.split_whitespace().map(|n| p.rs.alphabet.index(n).unwrap()).collect()
}

#[test]
fn h_is_confluent_with_16_monomials() {
    let p = h_presented();
    assert!(p.confluence.is_confluent(), "{:?}", p.confluence.unresolved);
    assert_eq!(p.dim(), 16);
    let labels: Vec<String> = (0..16).map(|i| p.label(i)).collect();
    assert_eq!(&labels[..5], &["1", "x", "x^2", "x^3", "y"]);
    assert_eq!(labels[15], "x^3yt");
}

#[test]
fn h_reductions() {
    let p = h_presented();
    let a = &p.rs.alphabet;
    let nf = |s: &str| p.rs.normal_form(&NcPoly::word(word(&p, s))).unwrap().show(a);
    assert_eq!(nf("x x x x x"), "x");
    assert_eq!(nf("t x"), "x^3t");
    assert_eq!(nf("t t"), "x^2y");
    assert_eq!(nf("t y x"), "x^3yt");
}

#[test]
fn h_matches_the_hand_built_algebra() {
    let p = h_presented();
    let h = build_hopf(&p).unwrap();
    let kh = kashina::kashina_h();
    assert!(h.same_bialgebra(&kh.hopf));
    assert_eq!(h.antipode, kh.hopf.antipode);
    assert!(verify_hopf(&h).pass());
}

#[test]
fn parse_errors_carry_lines() {
    let bad = "generators x\n[relations]\nx^4 = 1\nx^2 = z\n";
    match parse(bad) {
        Err(PresentationError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse("generators x\n[stuff]\n"), Err(PresentationError::Parse { .. })));
    assert!(matches!(parse("generators x\nparam a\n[relations]\n"), Err(PresentationError::Parse { .. })));
}

#[test]
fn names_split_and_powers_bind_to_the_last_letter() {
    let text = "generators x y\nbraided p1 p2\n[relations]\nx^2y = p1p2\n";
    let pres = parse(text).unwrap();
    let a = &pres.alphabet;
    let r = &pres.relations[0];
    assert_eq!(r.lhs.show(a), "x^2y");
    assert_eq!(r.rhs.show(a), "p1p2");
}

#[test]
fn parameters_and_overrides() {
    let text = "generators x\nbraided p\nparam lambda = 1/2\n[relations]\nx^2 = 1\np^2 = lambda (1 - x)\n";
    let pres = parse(text).unwrap();
    assert_eq!(pres.param("lambda"), Some(&Scalar::half()));
    let pres = parse_with(text, &[("lambda", Scalar::xi())]).unwrap();
    assert_eq!(pres.relations[1].rhs.coeff(&[]), Scalar::xi());
}

#[test]
fn wrong_coproduct_is_rejected() {
    let text = H_PRESENTATION.replace("t = 1/2 (1 + y)t @ t + 1/2 (1 - y)t @ x^2 t", "t = t @ t + t @ 1");
    let p = PresentedHopf::new(parse(&text).unwrap()).unwrap();
    assert!(matches!(build_hopf(&p), Err(PresentationError::CoproductNotWellDefined { .. })));
}

#[test]
fn non_confluent_system_is_reported() {
    // Nilpotent letters keep it finite. The overlap a·x·b reduces to x·b = b one way and a·b = 0 the other.
    let text = "generators a x b\n[relations]\na^2 = 0\nx^2 = 0\nb^2 = 0\nax = x\nxb = b\nab = 0\n";
    let p = PresentedHopf::new(parse(text).unwrap()).unwrap();
    assert!(!p.confluence.is_confluent());
    assert!(matches!(build_hopf(&p), Err(PresentationError::NonConfluent { .. })));
}

#[test]
fn h_presentation_json_roundtrip() {
    let pres = parse(H_PRESENTATION).unwrap();
    let s = serde_json::to_string(&pres).unwrap();
    let back: Presentation = serde_json::from_str(&s).unwrap();
    assert_eq!(back, pres);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(w in proptest::collection::vec(0u8..3, 0..10)) {
        let p = h_presented();
        let once = p.rs.normal_form(&NcPoly::word(w)).unwrap();
        let twice = p.rs.normal_form(&once).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn normal_form_is_multiplicative(u in proptest::collection::vec(0u8..3, 0..6), v in proptest::collection::vec(0u8..3, 0..6)) {
        let p = h_presented();
        let h = build_hopf(&p).unwrap();
        let mut uv = u.clone();
        uv.extend_from_slice(&v);
        let lhs = p.coords(&NcPoly::word(uv)).unwrap();
        let rhs = h.mul(&p.coords(&NcPoly::word(u)).unwrap(), &p.coords(&NcPoly::word(v)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
