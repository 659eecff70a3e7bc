use exactlin::{Scalar, SparseVec};
use hopf_core::examples::cyclic;
use hopf_core::{cop, dual, op, verify_hopf, verify_hopf_with, HopfData, VerifyMode};
use kashina::dualgen::{functional_a, functional_b, functional_c};
use kashina::{kashina_h, mono};

use drinfeld::*;

#[test]
fn double_of_z2_is_commutative_four_dim() {
    let d = drinfeld_double(&cyclic(2)).unwrap();
    assert_eq!(d.hopf.dim, 4);
    assert!(d.hopf.is_commutative());
    assert!(verify_hopf_with(&d.hopf, VerifyMode::Exhaustive).pass());
}

#[test]
fn double_of_z4_passes() {
    let d = drinfeld_double(&cyclic(4)).unwrap();
    assert_eq!(d.hopf.dim, 16);
    let r = verify_hopf_with(&d.hopf, VerifyMode::Exhaustive);
    assert!(r.pass(), "{:?}", r.failures());
}

#[test]
fn double_of_h_cop() {
    let d = double_h();
    assert_eq!(d.hopf.dim, 256);
    let r = verify_hopf(&d.hopf);
    assert!(r.pass(), "{:?}", r.failures());
    let p = verify_double_presentation(d);
    assert!(p.pass(), "{:?}", p.failures());
}

#[test]
fn embeddings_are_multiplicative() {
    let d = double_h();
    let (x, t) = (mono(1, 0, 0), mono(0, 0, 1));
    let k = &d.k;
    assert_eq!(d.mul(&d.embed_k(&x), &d.embed_k(&t)), d.embed_k(&k.mul(&x, &t)));
    // the dual factor multiplies as H*^op
    let hs = dual(&kashina_h().hopf);
    let (a, c) = (functional_a(), functional_c());
    assert_eq!(d.mul(&d.embed_dual(&a), &d.embed_dual(&c)), d.embed_dual(&hs.mul(&c, &a)));
}

#[test]
fn t_a_minus_a_x2_t_vanishes() {
    let d = double_h();
    let v = word(d, "ta").sub(&word(d, "axxt"));
    assert!(v.is_zero());
}

fn add(a: &SparseVec, b: &SparseVec) -> SparseVec {
    a.add(b)
}

#[test]
fn double_coproduct_of_t_in_h_cop() {
    let k = cop(&kashina_h().hopf);
    let q = Scalar::frac(1, 4);
    let m = |i, j, l| mono(i, j, l);
    let (t, x2t, yt, x2yt) = (m(0, 0, 1), m(2, 0, 1), m(0, 1, 1), m(2, 1, 1));
    let n = 16;
    let expect = tensor3(&add(&t, &x2t), &t, &add(&t, &yt), n)
        .add(&tensor3(&add(&t, &x2t), &x2t, &t.sub(&yt), n))
        .add(&tensor3(&t.sub(&x2t), &yt, &add(&t, &yt), n))
        .add(&tensor3(&t.sub(&x2t), &x2yt, &yt.sub(&t), n))
        .scale(&q);
    assert_eq!(delta2_of(&k, &t), expect);
}

fn hstar_bop() -> HopfData {
    cop(&op(&dual(&kashina_h().hopf)))
}

/// The displayed `Δ²(c)` is the double coproduct of `H*`; in `H*^bop` the
/// tensor legs come out reversed.
#[test]
fn double_coproduct_of_c_in_dual() {
    let hb = hstar_bop();
    let (a, b, c) = (functional_a(), functional_b(), functional_c());
    let mm = |xs: &[&SparseVec]| hb.mul_many(xs);
    let a2c = mm(&[&a, &a, &c]);
    let a2bc = mm(&[&a, &a, &b, &c]);
    let bc = mm(&[&b, &c]);
    let n = 16;
    let expect = tensor3(&c.add(&a2c), &c, &c.add(&a2bc), n)
        .add(&tensor3(&c.sub(&a2c), &a2bc, &c.add(&a2bc), n))
        .add(&tensor3(&c.add(&a2c), &a2c, &c.sub(&a2bc), n))
        .add(&tensor3(&a2c.sub(&c), &bc, &c.sub(&a2bc), n))
        .scale(&Scalar::frac(1, 4));
    assert_eq!(delta2_of(&dual(&kashina_h().hopf), &c), expect);
    let rev = expect.map_indices(|p| {
        let (i, j, k) = (p / 256, (p / 16) % 16, p % 16);
        (k * 16 + j) * 16 + i
    });
    assert_eq!(delta2_of(&hb, &c), rev);
}
