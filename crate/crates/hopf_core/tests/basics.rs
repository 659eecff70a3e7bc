use exactlin::{Mat, Scalar, SparseVec};
use hopf_core::examples::{cyclic, group_algebra};
use hopf_core::*;

#[test]
fn z2_passes_all_axioms() {
    let h = cyclic(2);
    let r = verify_hopf(&h);
    assert!(r.pass(), "{:?}", r.failures());
}

#[test]
fn identity_antipode_fails_for_z3() {
    let h = cyclic(3);
    let id: Vec<SparseVec> = (0..3).map(SparseVec::unit).collect();
    let bad = h.clone().with_antipode(id);
    let r = verify_hopf(&bad);
    assert!(!r.get("antipode").unwrap().pass);
    assert!(r.get("associativity").unwrap().pass);
}

#[test]
fn z4_antipode_is_inverse_permutation() {
    let h = cyclic(4);
    let s = solve_antipode_dense(&h).unwrap();
    for i in 0..4 {
        assert_eq!(s[i], SparseVec::unit((4 - i) % 4));
    }
    let g = solve_antipode_by_generators(&h).unwrap();
    assert_eq!(s, g);
}

#[test]
fn double_dual_and_double_cop_are_identity() {
    let h = cyclic(3);
    assert!(dual(&dual(&h)).same_bialgebra(&h));
    assert!(cop(&cop(&h)).same_bialgebra(&h));
    assert!(op(&op(&h)).same_bialgebra(&h));
    let d = dual(&h);
    assert!(verify_hopf(&d).pass());
    assert!(d.is_commutative() && d.is_cocommutative());
}

#[test]
fn dual_of_nonabelian_group_is_commutative_not_cocommutative() {
    // S3 as permutations of {0,1,2}
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> =
        perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
    let h = group_algebra(&table, 0);
    assert!(verify_hopf(&h).pass());
    assert!(!h.is_commutative());
    let d = with_solved_antipode(dual(&h)).unwrap();
    assert!(verify_hopf(&d).pass());
    assert!(d.is_commutative() && !d.is_cocommutative());
    assert_eq!(grouplike_basis_elements(&h).len(), 6);
}

#[test]
fn convolution_of_antipode_and_identity_is_unit_counit() {
    let h = cyclic(5);
    let s = h.antipode_matrix().unwrap();
    let c = convolution(&h, &s, &Mat::identity(5));
    let expect = Mat::from_fn(5, 5, |i, _| if i == 0 { Scalar::one() } else { Scalar::zero() });
    assert_eq!(c, expect);
}

#[test]
fn automorphism_of_z5_is_a_hopf_map() {
    let h = cyclic(5);
    let phi: Vec<SparseVec> = (0..5).map(|i| SparseVec::unit((2 * i) % 5)).collect();
    let r = verify_hopf_map(&h, &h, &phi);
    assert!(r.is_isomorphism());
    let bad: Vec<SparseVec> = (0..5).map(|i| SparseVec::unit((i + 1) % 5)).collect();
    assert!(!verify_hopf_map(&h, &h, &bad).is_hopf_map());
}

#[test]
fn skew_primitives_absent_in_group_algebra() {
    let h = cyclic(3);
    assert!(pairwise_primitives(&h).is_empty());
}
