use exactlin::{s, xi, Mat, Scalar};
use simples::*;

#[test]
fn character_values() {
    let c = character_module(0, 1, 1, 0).unwrap();
    assert_eq!(c.mat('t').get(0, 0), &xi());
    assert_eq!(c.mat('c').get(0, 0), &xi());
    assert_eq!(c.mat('a').get(0, 0), &s(-1));
    assert!(c.satisfies_relations());
}

#[test]
fn m1_and_m9_matrices() {
    let v = two_dim_module(Family::V, &[0, 1, 2, 0]).unwrap();
    assert_eq!(v.mat('a'), &Mat::diag(&[s(-1), s(-1)]));
    assert_eq!(v.mat('t'), &Mat::diag(&[xi(), -xi()]));
    assert!(v.satisfies_relations() && v.is_simple());
    let u = two_dim_module(Family::U, &[1, 0, 0, 2]).unwrap();
    assert_eq!(u.mat('x'), &Mat::diag(&[xi(), -xi()]));
    assert_eq!(u.mat('c'), &Mat::diag(&[s(-1), s(1)]));
    assert!(u.satisfies_relations() && u.is_simple());
}

#[test]
fn invalid_index_rejected() {
    assert!(matches!(two_dim_module(Family::V, &[0, 0, 0, 0]), Err(SimplesError::InvalidIndex { .. })));
    assert!(matches!(two_dim_module(Family::W3, &[1, 0, 0]), Err(SimplesError::InvalidIndex { .. })));
    assert!(matches!(character_module(2, 0, 0, 0), Err(SimplesError::InvalidIndex { .. })));
}

#[test]
fn schur_and_hom_vanishing() {
    let v0 = two_dim_module(Family::V, &[0, 1, 1, 0]).unwrap();
    let v1 = two_dim_module(Family::V, &[0, 1, 1, 1]).unwrap();
    assert_eq!(intertwiners(&v0, &v0).len(), 1);
    assert!(intertwiners(&v0, &v1).is_empty());
    let ch = character_module(0, 0, 0, 0).unwrap();
    assert!(intertwiners(&ch, &v0).is_empty());
    assert!(intertwiners(&v0, &ch).is_empty());
    let id = &intertwiners(&v0, &v0)[0];
    assert!(id.get(0, 1).is_zero() && id.get(1, 0).is_zero() && id.get(0, 0) == id.get(1, 1));
    let _ = Scalar::one();
}

#[test]
fn census_counts() {
    let r = census();
    assert_eq!((r.one_dim, r.two_dim), (32, 56));
    assert!(r.relations_ok && r.all_simple);
    assert!(r.iso_pairs.is_empty(), "{:?}", r.iso_pairs);
    assert_eq!(r.sum_of_squares, 256);
    assert!(r.full_characters_separate);
    let js = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<CensusReport>(&js).unwrap(), r);
    eprintln!("generator traces separate: {}", r.generator_traces_separate);
    for w in &r.w_pairings {
        eprintln!("{w:?}");
    }
}
