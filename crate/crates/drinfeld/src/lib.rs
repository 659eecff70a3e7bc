//! Drinfeld double `D(K) = K*^cop ⊗ K` of a finite-dimensional Hopf algebra.
//!
//! Basis element `f_p ⊗ e_a` has index `p * n + a`. Multiplication:
//! `(p ⊗ a)(q ⊗ b) = p q₂ ⟨q₃, a₁⟩⟨q₁, S⁻¹(a₃)⟩ ⊗ a₂ b`, where `q₁ ⊗ q₂ ⊗ q₃`
//! is the double coproduct of `q` in `K*` and `a₁ ⊗ a₂ ⊗ a₃` that of `a` in `K`.

use std::sync::OnceLock;

use exactlin::{Scalar, SparseVec};
use hopf_core::{cop, AxiomCheck, AxiomReport, Generator, HopfData, HopfError};
use kashina::dualgen::{functional_a, functional_b, functional_c};
use kashina::{kashina_h, mono};
use rayon::prelude::*;

pub struct DoubleData {
    pub hopf: HopfData,
    /// The input algebra K.
    pub k: HopfData,
    pub n: usize,
}

impl DoubleData {
    /// `ε ⊗ h`.
    pub fn embed_k(&self, h: &SparseVec) -> SparseVec {
        let eps = SparseVec::from_dense(&self.k.counit);
        eps.tensor(h, self.n)
    }

    /// `f ⊗ 1`.
    pub fn embed_dual(&self, f: &SparseVec) -> SparseVec {
        f.tensor(&self.k.unit, self.n)
    }

    pub fn gen(&self, name: &str) -> &SparseVec {
        self.hopf.generator(name).unwrap_or_else(|| panic!("no generator {name}"))
    }

    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        self.hopf.mul(u, v)
    }

    pub fn prod(&self, xs: &[&SparseVec]) -> SparseVec {
        self.hopf.mul_many(xs)
    }
}

/// Triple coproduct of a basis element, as `(i, j, k, coef)`.
fn delta2(k: &HopfData, a: usize) -> Vec<(usize, usize, usize, Scalar)> {
    let n = k.dim;
    let mut out: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (p, c) in k.delta_basis(a).iter() {
        for (q, d) in k.delta_basis(p % n).iter() {
            out.push((p / n, q / n, q % n, c * d));
        }
    }
    // merge duplicates
    out.sort_by_key(|t| (t.0, t.1, t.2));
    let mut merged: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for t in out {
        match merged.last_mut() {
            Some(l) if (l.0, l.1, l.2) == (t.0, t.1, t.2) => l.3 += &t.3,
            _ => merged.push(t),
        }
    }
    merged.retain(|t| !t.3.is_zero());
    merged
}

pub fn drinfeld_double(k: &HopfData) -> Result<DoubleData, HopfError> {
    let n = k.dim;
    let s = k.antipode_matrix().ok_or(HopfError::MissingAntipode)?;
    let sinv = s.inverse().ok_or(HopfError::AntipodeNotInvertible)?;
    // Δ² in K*: coefficient of f_j ⊗ f_k ⊗ f_l in Δ²(f_q) is (e_j e_k e_l)[q];
    // indexed by (q, l) for the pairing ⟨q₃, a₁⟩.
    let mut d2dual: Vec<Vec<Vec<(usize, usize, Scalar)>>> = vec![vec![Vec::new(); n]; n];
    for j in 0..n {
        for kk in 0..n {
            let jk = k.mul_basis(j, kk).clone();
            for l in 0..n {
                let jkl = k.mul(&jk, &SparseVec::unit(l));
                for (q, c) in jkl.iter() {
                    d2dual[q][l].push((j, kk, c.clone()));
                }
            }
        }
    }
    let d2k: Vec<Vec<(usize, usize, usize, Scalar)>> = (0..n).map(|a| delta2(k, a)).collect();
    // product in K*: (f_p f_q)(e_h) = Δ_K(e_h)[(p, q)]
    let mut kstar: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
    for h in 0..n {
        for (pq, c) in k.delta_basis(h).iter() {
            kstar[pq].push((h, c.clone()));
        }
    }
    let nn = n * n;
    let mult: Vec<SparseVec> = (0..nn * nn)
        .into_par_iter()
        .map(|idx| {
            let (u, v) = (idx / nn, idx % nn);
            let (p, a) = (u / n, u % n);
            let (q, b) = (v / n, v % n);
            let mut pairs: Vec<(usize, Scalar)> = Vec::new();
            for (a1, a2, a3, ca) in &d2k[a] {
                for (j, q2, cq) in &d2dual[q][*a1] {
                    let sj = sinv.get(*j, *a3);
                    if sj.is_zero() {
                        continue;
                    }
                    let coef = &(ca * cq) * sj;
                    let right = k.mul_basis(*a2, b);
                    for (h, w) in &kstar[p * n + q2] {
                        let cw = &coef * w;
                        for (m, z) in right.iter() {
                            pairs.push((h * n + m, &cw * z));
                        }
                    }
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    let unit = SparseVec::from_dense(&k.counit).tensor(&k.unit, n);
    // Δ(f ⊗ h) = (f₂ ⊗ h₁) ⊗ (f₁ ⊗ h₂), Δ_{K*}(f_p) = Σ (e_j e_k)[p] f_j ⊗ f_k
    let mut dstar: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for j in 0..n {
        for kk in 0..n {
            for (p, c) in k.mul_basis(j, kk).iter() {
                dstar[p].push((j, kk, c.clone()));
            }
        }
    }
    let comult: Vec<SparseVec> = (0..nn)
        .map(|u| {
            let (p, a) = (u / n, u % n);
            let mut pairs = Vec::new();
            for (f1, f2, c) in &dstar[p] {
                for (hh, d) in k.delta_basis(a).iter() {
                    let (h1, h2) = (hh / n, hh % n);
                    let left = f2 * n + h1;
                    let right = f1 * n + h2;
                    pairs.push((left * nn + right, c * d));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    let counit: Vec<Scalar> = (0..nn).map(|u| &k.unit.get(u / n) * &k.counit[u % n]).collect();
    let labels = (0..nn).map(|u| format!("{}*⊗{}", k.labels[u / n], k.labels[u % n])).collect();
    let hopf = HopfData::new(nn, mult, unit, comult, counit, labels)?;
    let mut dd = DoubleData { hopf, k: k.clone(), n };
    // S_D(f ⊗ h) = (ε ⊗ S_K(h)) (S_{K*cop}(f) ⊗ 1); S_{K*cop} = (S_K^{-1})^T
    let sdual = sinv.transpose();
    let ante: Vec<SparseVec> = (0..nn)
        .into_par_iter()
        .map(|u| {
            let (p, a) = (u / n, u % n);
            let sh = dd.embed_k(&SparseVec::from_dense(&s.col(a)));
            let sf = dd.embed_dual(&SparseVec::from_dense(&sdual.col(p)));
            dd.hopf.mul(&sh, &sf)
        })
        .collect();
    dd.hopf.antipode = Some(ante);
    Ok(dd)
}

/// `D(H^cop)` with generators `x, y, t` (from `H^cop`) and `a, b, c` (from the dual).
pub fn build_d() -> DoubleData {
    let kh = kashina_h();
    let k = cop(&kh.hopf);
    let mut dd = drinfeld_double(&k).expect("H^cop is a Hopf algebra");
    let gens = vec![
        Generator { name: "x".into(), vec: dd.embed_k(&mono(1, 0, 0)) },
        Generator { name: "y".into(), vec: dd.embed_k(&mono(0, 1, 0)) },
        Generator { name: "t".into(), vec: dd.embed_k(&mono(0, 0, 1)) },
        Generator { name: "a".into(), vec: dd.embed_dual(&functional_a()) },
        Generator { name: "b".into(), vec: dd.embed_dual(&functional_b()) },
        Generator { name: "c".into(), vec: dd.embed_dual(&functional_c()) },
    ];
    dd.hopf.generators = gens;
    dd
}

/// Shared instance of `D(H^cop)`.
pub fn double_h() -> &'static DoubleData {
    static D: OnceLock<DoubleData> = OnceLock::new();
    D.get_or_init(build_d)
}

/// Relation given as two words in the generator names, e.g. `("tc", "aabcxxyt")`.
pub fn word(d: &DoubleData, w: &str) -> SparseVec {
    let mut v = d.hopf.one();
    for ch in w.chars() {
        v = d.mul(&v, d.gen(&ch.to_string()));
    }
    v
}

pub const CROSS_RELATIONS: [(&str, &str); 9] = [
    ("xa", "ax"),
    ("xb", "bx"),
    ("xc", "aacx"),
    ("ya", "ay"),
    ("yb", "by"),
    ("yc", "cy"),
    ("ta", "axxt"),
    ("tb", "bt"),
    ("tc", "aabcxxyt"),
];

/// Relations of `H^cop` and of the dual factor (an `H*^op` subalgebra, so
/// `ca = a^3 c` in `H*` reads `ac = c a^3` here).
pub const INTERNAL_RELATIONS: [(&str, &str); 12] = [
    ("xxxx", ""),
    ("yy", ""),
    ("tt", "xxy"),
    ("xy", "yx"),
    ("tx", "xxxt"),
    ("ty", "yt"),
    ("aaaa", ""),
    ("bb", ""),
    ("cc", "b"),
    ("ab", "ba"),
    ("ac", "caaa"),
    ("cb", "bc"),
];

pub fn verify_double_presentation(d: &DoubleData) -> AxiomReport {
    let checks = CROSS_RELATIONS
        .iter()
        .chain(INTERNAL_RELATIONS.iter())
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(l, r)| {
            let pass = word(d, l) == word(d, r);
            let rhs = if r.is_empty() { "1" } else { r };
            AxiomCheck { name: format!("{l} = {rhs}"), pass, witness: None, method: "exact".into() }
        })
        .collect();
    AxiomReport { checks }
}

/// `Δ²` of an element of a Hopf algebra, as a vector over the triple tensor
/// power (index `(i * n + j) * n + k`).
pub fn delta2_of(h: &HopfData, v: &SparseVec) -> SparseVec {
    let n = h.dim;
    let mut pairs = Vec::new();
    for (i, c) in v.iter() {
        for (a, b, cc, d) in delta2(h, i) {
            pairs.push(((a * n + b) * n + cc, c * &d));
        }
    }
    SparseVec::from_pairs(pairs)
}

/// `u ⊗ v ⊗ w`.
pub fn tensor3(u: &SparseVec, v: &SparseVec, w: &SparseVec, n: usize) -> SparseVec {
    u.tensor(v, n).tensor(w, n)
}
