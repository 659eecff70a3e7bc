//! The 16-dimensional Hopf algebra H generated by group-likes `x`, `y` and
//! a non-group-like `t`, with `x^4 = y^2 = 1`, `t^2 = x^2 y`, `xy = yx`,
//! `tx = x^3 t`, `ty = yt`, and
//! `Δ(t) = ½((1+y)t ⊗ t + (1-y)t ⊗ x^2 t)`.
//!
//! Basis element `x^i y^j t^k` has index `i + 4j + 8k`.

pub mod auts;
pub mod dualgen;
pub mod polysys;

use std::sync::OnceLock;

use exactlin::{Scalar, SparseVec};
use hopf_core::{with_solved_antipode, Generator, HopfData};

pub use auts::{
    automorphism_table, closure_order, exhaustive_automorphism_search, extend_generator_images,
    verify_automorphism_table, Automorphism, SearchReport,
};
pub use dualgen::{dual_generators, DualGenerators};

pub const DIM: usize = 16;

pub fn h_index(i: usize, j: usize, k: usize) -> usize {
    (i % 4) + 4 * (j % 2) + 8 * (k % 2)
}

pub fn h_unindex(n: usize) -> (usize, usize, usize) {
    (n % 4, (n / 4) % 2, n / 8)
}

/// `e_a e_b` as a basis index (H is monomial in this basis).
pub fn h_mul_basis(a: usize, b: usize) -> usize {
    let (i, j, k) = h_unindex(a);
    let (i2, j2, k2) = h_unindex(b);
    let mut ii = if k == 0 { i + i2 } else { i + 4 - i2 };
    let mut jj = j + j2;
    let kk = if k == 1 && k2 == 1 {
        ii += 2;
        jj += 1;
        0
    } else {
        k + k2
    };
    h_index(ii, jj, kk)
}

/// `1`, `x`, `x2`, `x3y`, `xyt`, ...
pub fn h_label(n: usize) -> String {
    let (i, j, k) = h_unindex(n);
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push('x'),
        _ => s.push_str(&format!("x{i}")),
    }
    if j == 1 {
        s.push('y');
    }
    if k == 1 {
        s.push('t');
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

pub fn parse_monomial(s: &str) -> Option<usize> {
    (0..DIM).find(|&n| h_label(n) == s)
}

/// Element from `(coefficient, basis index)` pairs.
pub fn h_elem(terms: &[(Scalar, usize)]) -> SparseVec {
    SparseVec::from_pairs(terms.iter().map(|(c, i)| (*i, c.clone())).collect())
}

pub fn mono(i: usize, j: usize, k: usize) -> SparseVec {
    SparseVec::unit(h_index(i, j, k))
}

#[derive(Clone, Debug)]
pub struct KashinaH {
    pub hopf: HopfData,
    pub x: usize,
    pub y: usize,
    pub t: usize,
    /// The 8 group-likes `x^i y^j`.
    pub grouplikes: Vec<usize>,
}

/// `Δ(t)` as a vector of `H ⊗ H`.
pub fn delta_t() -> SparseVec {
    let h = Scalar::half();
    let n = DIM;
    let t = h_index(0, 0, 1);
    let yt = h_index(0, 1, 1);
    let x2t = h_index(2, 0, 1);
    SparseVec::from_pairs(vec![
        (t * n + t, h.clone()),
        (yt * n + t, h.clone()),
        (t * n + x2t, h.clone()),
        (yt * n + x2t, -&h),
    ])
}

fn tensor_mul_mono(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let n = DIM;
    let mut pairs = Vec::new();
    for (p, c) in a.iter() {
        for (q, d) in b.iter() {
            let l = h_mul_basis(p / n, q / n);
            let r = h_mul_basis(p % n, q % n);
            pairs.push((l * n + r, c * d));
        }
    }
    SparseVec::from_pairs(pairs)
}

/// Builds H, solving its antipode from the convolution system.
pub fn build_h() -> KashinaH {
    let n = DIM;
    let mult = (0..n * n).map(|p| SparseVec::unit(h_mul_basis(p / n, p % n))).collect();
    let dx = SparseVec::unit(h_index(1, 0, 0) * n + h_index(1, 0, 0));
    let dy = SparseVec::unit(h_index(0, 1, 0) * n + h_index(0, 1, 0));
    let dt = delta_t();
    let comult = (0..n)
        .map(|m| {
            let (i, j, k) = h_unindex(m);
            let mut d = SparseVec::unit(0);
            for _ in 0..i {
                d = tensor_mul_mono(&d, &dx);
            }
            for _ in 0..j {
                d = tensor_mul_mono(&d, &dy);
            }
            for _ in 0..k {
                d = tensor_mul_mono(&d, &dt);
            }
            d
        })
        .collect();
    let labels = (0..n).map(h_label).collect();
    let words = (0..n)
        .map(|m| {
            let (i, j, k) = h_unindex(m);
            let mut w = vec![0; i];
            w.extend(std::iter::repeat(1).take(j));
            w.extend(std::iter::repeat(2).take(k));
            w
        })
        .collect();
    let gens = vec![
        Generator { name: "x".into(), vec: mono(1, 0, 0) },
        Generator { name: "y".into(), vec: mono(0, 1, 0) },
        Generator { name: "t".into(), vec: mono(0, 0, 1) },
    ];
    let hopf = HopfData::new(n, mult, SparseVec::unit(0), comult, vec![Scalar::one(); n], labels)
        .expect("H shapes")
        .with_generators(gens)
        .with_basis_words(words);
    let hopf = with_solved_antipode(hopf).expect("H has an antipode");
    KashinaH { hopf, x: h_index(1, 0, 0), y: h_index(0, 1, 0), t: h_index(0, 0, 1), grouplikes: (0..8).collect() }
}

/// Shared instance.
pub fn kashina_h() -> &'static KashinaH {
    static H: OnceLock<KashinaH> = OnceLock::new();
    H.get_or_init(build_h)
}

/// Closed forms `S(x) = x^3`, `S(y) = y`, `S(t) = ½((1+y)x^2 t - (1-y)t)`.
pub fn antipode_closed_forms() -> [(usize, SparseVec); 3] {
    let h = Scalar::half();
    let st = h_elem(&[
        (h.clone(), h_index(2, 0, 1)),
        (h.clone(), h_index(2, 1, 1)),
        (-&h, h_index(0, 0, 1)),
        (h.clone(), h_index(0, 1, 1)),
    ]);
    [(h_index(1, 0, 0), mono(3, 0, 0)), (h_index(0, 1, 0), mono(0, 1, 0)), (h_index(0, 0, 1), st)]
}

/// True iff the solved antipode agrees with the closed forms on generators.
pub fn antipode_matches_closed_form(kh: &KashinaH) -> bool {
    antipode_closed_forms().iter().all(|(g, v)| kh.hopf.antipode_of(&SparseVec::unit(*g)).as_ref() == Some(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_on_basis() {
        let (x, y, t) = (h_index(1, 0, 0), h_index(0, 1, 0), h_index(0, 0, 1));
        assert_eq!(h_mul_basis(t, t), h_index(2, 1, 0));
        assert_eq!(h_mul_basis(t, x), h_index(3, 0, 1));
        assert_eq!(h_mul_basis(t, y), h_mul_basis(y, t));
        assert_eq!(h_mul_basis(x, y), h_mul_basis(y, x));
    }

    #[test]
    fn labels_roundtrip() {
        for n in 0..DIM {
            assert_eq!(parse_monomial(&h_label(n)), Some(n));
        }
        assert_eq!(h_label(h_index(3, 1, 1)), "x3yt");
    }
}
