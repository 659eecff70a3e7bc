use exactlin::{Scalar, SparseVec};
use hopf_core::{cop, grouplike_basis_elements, pairwise_primitive_space, verify_hopf, verify_hopf_with, VerifyMode};
use kashina::*;

#[test]
fn h_is_a_sixteen_dimensional_hopf_algebra() {
    let kh = kashina_h();
    assert_eq!(kh.hopf.dim, 16);
    let r = verify_hopf_with(&kh.hopf, VerifyMode::Exhaustive);
    assert!(r.pass(), "{:?}", r.failures());
    assert!(antipode_matches_closed_form(kh));
}

#[test]
fn identity_antipode_fails_at_t() {
    let kh = kashina_h();
    let id: Vec<SparseVec> = (0..16).map(SparseVec::unit).collect();
    let bad = kh.hopf.clone().with_antipode(id);
    let r = verify_hopf(&bad);
    assert!(!r.get("antipode").unwrap().pass);
    // t itself violates S(t1)t2 = ε(t)1 under S = id
    let t = h_index(0, 0, 1);
    let mut lhs = SparseVec::zero();
    for (p, c) in bad.delta_basis(t).iter() {
        lhs = lhs.add_scaled(&bad.mul(&SparseVec::unit(p / 16), &SparseVec::unit(p % 16)), c);
    }
    assert_ne!(lhs, bad.one());
}

#[test]
fn defining_products() {
    let h = &kashina_h().hopf;
    let (x, t) = (mono(1, 0, 0), mono(0, 0, 1));
    assert_eq!(h.mul(&t, &t), mono(2, 1, 0));
    assert_eq!(h.mul(&t, &x), h.mul(&h.pow(&x, 3), &t));
    // Δ(t)Δ(t) = Δ(x^2 y), expanded in H ⊗ H
    let dt = h.delta(&t);
    assert_eq!(h.tensor_mul(&dt, &dt), h.delta(&mono(2, 1, 0)));
}

#[test]
fn grouplikes_and_skew_primitives() {
    let h = &kashina_h().hopf;
    assert_eq!(grouplike_basis_elements(h), (0..8).collect::<Vec<_>>());
    for g in 1..8 {
        let sp = pairwise_primitive_space(h, &SparseVec::unit(0), &SparseVec::unit(g));
        assert_eq!(sp.len(), 1, "P_1,g for g = {}", h_label(g));
    }
}

#[test]
fn h_is_not_cocommutative() {
    let h = &kashina_h().hopf;
    assert!(!h.is_cocommutative());
    assert!(!cop(h).same_bialgebra(h));
    assert!(verify_hopf(&cop(h)).pass());
}

#[test]
fn dual_generator_relations() {
    let dg = dual_generators(kashina_h());
    for (name, ok) in &dg.checks {
        assert!(ok, "{name}");
    }
    assert!(verify_hopf(&dg.dual).pass());
}

#[test]
fn table_entries_are_hopf_automorphisms() {
    let kh = kashina_h();
    let reps = verify_automorphism_table(kh);
    assert_eq!(reps.len(), 64);
    for (i, r) in reps {
        assert!(r.is_isomorphism(), "tau_{i}: {r:?}");
    }
    assert_eq!(automorphism_table()[0].images, (0..16).map(SparseVec::unit).collect::<Vec<_>>());
    let t17 = &automorphism_table()[16];
    assert_eq!((t17.fx, t17.fy), (h_index(3, 0, 0), h_index(0, 1, 0)));
}

#[test]
fn automorphisms_commute_with_antipode() {
    let h = &kashina_h().hopf;
    for a in automorphism_table() {
        for m in 0..16 {
            let lhs = a.apply(&h.antipode_of(&SparseVec::unit(m)).unwrap());
            let rhs = h.antipode_of(&a.images[m]).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn closure_is_deterministic() {
    let o = closure_order(&[2, 5, 13, 17, 33]);
    assert_eq!(o, closure_order(&[2, 5, 13, 17, 33]));
    assert!(o <= 64, "closure stays inside the table set");
}

#[test]
fn exhaustive_search_reproduces_table() {
    let kh = kashina_h();
    let rep = exhaustive_automorphism_search(kh, false).unwrap();
    assert_eq!(rep.total, 64);
    assert!(rep.pairs.iter().all(|p| p.solutions == 8));
    assert!(rep.matches_table);
}

#[test]
fn f_t_solutions_for_identity_pair() {
    let kh = kashina_h();
    let sols = auts::solve_t_images(kh, h_index(1, 0, 0), h_index(0, 1, 0), false).unwrap();
    let mut labels: Vec<String> = sols.iter().map(|v| kh.hopf.show(v)).collect();
    labels.sort();
    let mut expect: Vec<String> =
        ["t", "xt", "x2t", "x3t", "yt", "xyt", "x2yt", "x3yt"].iter().map(|s| s.to_string()).collect();
    expect.sort();
    assert_eq!(labels, expect);
    let tw = auts::solve_t_images(kh, h_index(1, 0, 0), h_index(2, 1, 0), false).unwrap();
    assert_eq!(tw.len(), 8);
    let target = h_elem(&[
        ("1/2+1/2*xi".parse::<Scalar>().unwrap(), h_index(0, 0, 1)),
        ("1/2-1/2*xi".parse::<Scalar>().unwrap(), h_index(2, 0, 1)),
    ]);
    assert!(tw.contains(&target));
}

#[test]
fn general_ansatz_agrees_on_one_pair() {
    let kh = kashina_h();
    let a = auts::solve_t_images(kh, h_index(3, 1, 0), h_index(2, 1, 0), true).unwrap();
    let b = auts::solve_t_images(kh, h_index(3, 1, 0), h_index(2, 1, 0), false).unwrap();
    assert_eq!(a.len(), 8);
    for v in &a {
        assert!(b.contains(v));
    }
}
