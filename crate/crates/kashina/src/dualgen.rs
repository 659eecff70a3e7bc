//! The distinguished functionals `a, b, c` of `H*`.

use exactlin::{Scalar, SparseVec};
use hopf_core::{dual, HopfData};

use crate::{h_unindex, KashinaH, DIM};

#[derive(Clone, Debug)]
pub struct DualGenerators {
    /// `H*` in the dual basis of the monomial basis of H.
    pub dual: HopfData,
    pub a: SparseVec,
    pub b: SparseVec,
    pub c: SparseVec,
    /// Named relation checks, e.g. `a^4 = ε`.
    pub checks: Vec<(String, bool)>,
}

/// Coefficient vector of `(Σ c_i h_i)^* = Σ c_i h_i^*` where the sum is the
/// product `u(x) · v(y) · w(t)` of polynomials in single generators.
fn starred(ux: [Scalar; 4], vy: [Scalar; 2], wt: [Scalar; 2]) -> SparseVec {
    SparseVec::from_pairs(
        (0..DIM)
            .map(|n| {
                let (i, j, k) = h_unindex(n);
                (n, &(&ux[i] * &vy[j]) * &wt[k])
            })
            .collect(),
    )
}

pub fn functional_a() -> SparseVec {
    let s = Scalar::int;
    starred([s(1), s(1), s(1), s(1)], [s(1), s(-1)], [s(1), Scalar::xi()])
}

pub fn functional_b() -> SparseVec {
    let s = Scalar::int;
    starred([s(1), s(-1), s(1), s(-1)], [s(1), s(1)], [s(1), s(-1)])
}

pub fn functional_c() -> SparseVec {
    let s = Scalar::int;
    let xi = Scalar::xi();
    starred([s(1), xi.clone(), s(-1), -&xi], [s(1), s(-1)], [s(1), s(1)])
}

/// `⟨f, h⟩` for `f` in the dual basis.
pub fn pair(f: &SparseVec, h: &SparseVec) -> Scalar {
    let mut s = Scalar::zero();
    for (i, c) in f.iter() {
        s += &(c * &h.get(i));
    }
    s
}

pub fn dual_generators(kh: &KashinaH) -> DualGenerators {
    let d = dual(&kh.hopf);
    let (a, b, c) = (functional_a(), functional_b(), functional_c());
    let eps = d.one();
    let m = |u: &SparseVec, v: &SparseVec| d.mul(u, v);
    let a2 = m(&a, &a);
    let a3 = m(&a2, &a);
    let mut checks = vec![
        ("a^4 = ε".to_string(), m(&a2, &a2) == eps),
        ("b^2 = ε".into(), m(&b, &b) == eps),
        ("c^2 = b".into(), m(&c, &c) == b),
        ("ab = ba".into(), m(&a, &b) == m(&b, &a)),
        ("ca = a^3 c".into(), m(&c, &a) == m(&a3, &c)),
        ("cb = bc".into(), m(&c, &b) == m(&b, &c)),
        ("Δ(a) = a ⊗ a".into(), d.delta(&a) == d.tensor(&a, &a)),
        ("Δ(b) = b ⊗ b".into(), d.delta(&b) == d.tensor(&b, &b)),
    ];
    let half = Scalar::half();
    let a2c = m(&a2, &c);
    let a2bc = m(&m(&a2, &b), &c);
    let dc = d.tensor(&c.add(&a2c).scale(&half), &c).add(&d.tensor(&c.sub(&a2c).scale(&half), &a2bc));
    checks.push(("Δ(c) = ½(c+a²c)⊗c + ½(c−a²c)⊗a²bc".into(), d.delta(&c) == dc));
    DualGenerators { dual: d, a, b, c, checks }
}

/// `a(x^i y^j t^k) = (-1)^j ξ^k`, independent of `i`.
pub fn a_closed(j: usize, k: usize) -> Scalar {
    &Scalar::sign_pow(j as i64) * &Scalar::xi_pow(k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::h_index;

    #[test]
    fn a_matches_direct_expansion() {
        let a = functional_a();
        for n in 0..DIM {
            let (_, j, k) = h_unindex(n);
            assert_eq!(pair(&a, &SparseVec::unit(n)), a_closed(j, k));
        }
        assert_eq!(pair(&a, &SparseVec::unit(h_index(1, 0, 0))), Scalar::one());
    }
}
