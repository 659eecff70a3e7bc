use exactlin::Scalar;
use liftings::{verify_parameter_isomorphism, LiftingParams, ParamMap, VarSystem, Variant};

fn s(n: i64) -> Scalar {
    Scalar::int(n)
}

#[test]
fn u6_diagonal_scaling_at_zero_is_an_isomorphism() {
    let p = LiftingParams::zero("U6").with_variant(Variant::Completed);
    let map = ParamMap::diagonal(1, s(2), s(3), s(1), VarSystem::Diagonal2);
    let r = verify_parameter_isomorphism(&p, &p, &map).unwrap();
    println!("{}", r.summary());
    assert!(r.var_holds);
    assert!(r.is_isomorphism());
    assert!(r.consistent());
}

#[test]
fn u6_mismatched_lambda_is_not_an_algebra_map() {
    let src = LiftingParams::new("U6", &[("lambda", s(1))]).with_variant(Variant::Completed);
    let tgt = LiftingParams::zero("U6").with_variant(Variant::Completed);
    let map = ParamMap::diagonal(1, s(1), s(1), s(1), VarSystem::Diagonal2);
    let r = verify_parameter_isomorphism(&src, &tgt, &map).unwrap();
    println!("{}", r.summary());
    assert!(!r.var_holds);
    assert!(!r.algebra_map);
    assert!(r.consistent());
}

#[test]
fn u13_diagonal_with_sign_at_zero_is_an_isomorphism() {
    let p = LiftingParams::zero("U13").with_variant(Variant::Corrected);
    let map = ParamMap::diagonal(13, s(2), s(-1), s(-1), VarSystem::Diagonal3);
    let r = verify_parameter_isomorphism(&p, &p, &map).unwrap();
    println!("{}", r.summary());
    assert!(r.var_holds);
    assert!(r.is_isomorphism());
}

#[test]
fn u13_mismatched_alpha_is_not_an_algebra_map() {
    let src = LiftingParams::new("U13", &[("alpha", s(1))]).with_variant(Variant::Corrected);
    let tgt = LiftingParams::zero("U13").with_variant(Variant::Corrected);
    let map = ParamMap::diagonal(1, s(1), s(1), s(-1), VarSystem::Diagonal3);
    let r = verify_parameter_isomorphism(&src, &tgt, &map).unwrap();
    println!("{}", r.summary());
    assert!(!r.var_holds);
    assert!(!r.algebra_map);
    assert!(r.consistent());
}
