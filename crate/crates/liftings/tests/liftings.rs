use exactlin::Scalar;
use hopf_core::verify_hopf;
use liftings::{
    bosonize, braided_nichols_hopf, compare_zero_parameter, family, flip_sign, lifting_presentation, lifting_report,
    seeded_flip, LiftingParams, Variant,
};
use ydcat::module_by_name;

fn nichols_of(name: &str) -> liftings::BraidedHopf {
    let m = module_by_name(name).unwrap();
    let letters: Vec<String> = (0..m.dim).map(|i| format!("v{i}")).collect();
    braided_nichols_hopf(&m, &letters, 8).unwrap()
}

#[test]
fn nichols_dimensions_of_small_modules() {
    assert_eq!(nichols_of("V1").dim, 2);
    assert_eq!(nichols_of("M1").dim, 4);
}

#[test]
fn bosonization_of_v1_is_a_32_dimensional_hopf_algebra() {
    let b = bosonize(&nichols_of("V1")).unwrap();
    assert_eq!(b.hopf.dim, 32);
    assert!(b.pi_iota_is_identity());
    assert!(verify_hopf(&b.hopf).pass());
}

#[test]
fn u1_1_at_zero_is_the_bosonization() {
    let z = compare_zero_parameter("U1_1", Variant::AsWritten).unwrap();
    assert_eq!(z.summands, vec![Some("V1".to_string()), Some("V1".to_string())]);
    assert_eq!(z.lifting_dim, Some(64));
    assert_eq!(z.basis_permutation, Some(true));
    assert!(z.pass(), "{}", z.summary());
}

#[test]
fn corrected_four_generator_family_at_zero_is_the_bosonization() {
    let z = compare_zero_parameter("U19", Variant::Corrected).unwrap();
    assert_eq!(z.lifting_dim, Some(256));
    assert!(z.pass(), "{}", z.summary());
}

#[test]
fn u1_1_with_nonzero_lambda_is_not_confluent() {
    let r = lifting_report(&LiftingParams::new("U1_1", &[("lambda", Scalar::one())])).unwrap();
    assert!(!r.build.confluent);
    assert!(!r.pass());
}

#[test]
fn completion_combines_the_product_relations() {
    let p = LiftingParams::new("U1_5", &[("mu", Scalar::one())]).with_variant(Variant::Completed);
    let (_, c) = lifting_presentation(&p).unwrap();
    let c = c.unwrap();
    assert!(!c.dropped.is_empty());
    assert!(!c.combined.is_empty());
    let r = lifting_report(&p).unwrap();
    assert!(r.pass(), "{}", r.summary());
}

#[test]
fn as_written_product_relations_break_the_coproduct() {
    let r = lifting_report(&LiftingParams::zero("U1_2")).unwrap();
    assert_eq!(r.build.coproduct_ok, Some(false));
}

#[test]
fn flipping_a_sign_in_u1_1_is_detected() {
    let pres = family("U1_1").unwrap().presentation(&[], false).unwrap();
    let rel = pres.relations.iter().position(|r| r.text.starts_with("pq + qp")).unwrap();
    let m = flip_sign(&pres, rel, 1).unwrap();
    assert!(m.detected(), "{:?}", m.build);
    assert!(m.mutated.contains("pq") && m.mutated.contains("qp"));
}

#[test]
fn seeded_flips_are_reproducible() {
    let pres = family("U1_1").unwrap().presentation(&[], false).unwrap();
    let a = seeded_flip(&pres, 7).unwrap();
    let b = seeded_flip(&pres, 7).unwrap();
    assert_eq!(a, b);
}

#[test]
fn unknown_family_and_parameter_are_errors() {
    assert!(family("U99").is_err());
    assert!(LiftingParams::new("U1_1", &[("alpha", Scalar::one())]).validate().is_err());
}
