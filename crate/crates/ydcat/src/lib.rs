//! Yetter–Drinfeld modules over H, obtained from modules over the double.
//!
//! A coaction is stored as sixteen `d × d` matrices `C_h`, one per basis
//! monomial `h` of H, with `δ(v) = Σ_h h ⊗ C_h v`.

mod catalog;
mod closed;

use std::sync::OnceLock;

use exactlin::{Mat, Scalar, SparseVec};
use kashina::{h_unindex, kashina_h, Automorphism, DIM};
use serde::{Deserialize, Serialize};
use simples::Rep;
use thiserror::Error;

pub use catalog::{catalog, module_by_name, rep_by_name, twist_claims, verify_twist_claims, TwistCheck};
pub use closed::{closed_form, compare_closed_form, ClosedFormCheck};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YdError {
    #[error("YD compatibility fails for generator {generator}, basis vector {vector}")]
    CompatibilityFailed { generator: String, vector: usize },
    #[error("coaction is not coassociative/counital")]
    NotComodule,
    #[error("unknown module name {0}")]
    UnknownModule(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YDModule {
    pub name: String,
    pub dim: usize,
    /// Matrices of `x, y, t`.
    pub action: Vec<Mat>,
    /// `C_h` for each basis monomial of H.
    pub coaction: Vec<Mat>,
}

/// Monomials `a^m b^n c^r` in the order used for the dual basis.
fn dual_monomials() -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for m in 0..4 {
        for n in 0..2 {
            for r in 0..2 {
                v.push((m, n, r));
            }
        }
    }
    v
}

fn dense_functional(f: &SparseVec) -> Vec<Scalar> {
    f.to_dense(DIM)
}

/// Product in the dual of `H^cop`: `(fg)(h) = Σ f(h₂) g(h₁)`.
fn kprod(f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    let h = &kashina_h().hopf;
    (0..DIM)
        .map(|e| {
            let mut s = Scalar::zero();
            for (p, c) in h.delta_basis(e).iter() {
                s += &(&(c * &f[p % DIM]) * &g[p / DIM]);
            }
            s
        })
        .collect()
}

/// `Finv[h][mono]`: coordinates of the dual basis element `h*` in the monomials.
fn dual_basis_coords() -> &'static Mat {
    static F: OnceLock<Mat> = OnceLock::new();
    F.get_or_init(|| {
        let a = dense_functional(&kashina::dualgen::functional_a());
        let b = dense_functional(&kashina::dualgen::functional_b());
        let c = dense_functional(&kashina::dualgen::functional_c());
        let eps = vec![Scalar::one(); DIM];
        let pow = |f: &[Scalar], k: usize| (0..k).fold(eps.clone(), |acc, _| kprod(&acc, f));
        let rows: Vec<Vec<Scalar>> = dual_monomials()
            .into_iter()
            .map(|(m, n, r)| kprod(&kprod(&pow(&a, m), &pow(&b, n)), &pow(&c, r)))
            .collect();
        Mat::from_rows(rows).inverse().expect("a^m b^n c^r form a basis of the dual")
    })
}

/// Action matrix of a basis monomial `x^i y^j t^k` given the generator matrices.
pub fn basis_action(action: &[Mat], h: usize) -> Mat {
    let (i, j, k) = h_unindex(h);
    action[0].pow(i as u32).matmul(&action[1].pow(j as u32)).matmul(&action[2].pow(k as u32))
}

/// Action matrix of an arbitrary element of H.
pub fn element_action(action: &[Mat], v: &SparseVec) -> Mat {
    let d = action[0].rows();
    let mut m = Mat::zeros(d, d);
    for (h, c) in v.iter() {
        m = &m + &basis_action(action, h).scale(c);
    }
    m
}

fn delta2(v: &SparseVec) -> Vec<((usize, usize, usize), Scalar)> {
    let h = &kashina_h().hopf;
    let mut out: Vec<((usize, usize, usize), Scalar)> = Vec::new();
    for (p, c) in h.delta(v).iter() {
        let (a, b) = (p / DIM, p % DIM);
        for (q, e) in h.delta_basis(a).iter() {
            out.push(((q / DIM, q % DIM, b), c * e));
        }
    }
    out
}

impl YDModule {
    /// Converts a module over the double via `δ(v) = Σ_h h ⊗ h*·v`.
    pub fn from_rep(r: &Rep) -> Result<YDModule, YdError> {
        let m = YDModule::from_rep_unchecked(r);
        m.verify()?;
        Ok(m)
    }

    pub fn from_rep_unchecked(r: &Rep) -> YDModule {
        let finv = dual_basis_coords();
        let monos = dual_monomials();
        let acts: Vec<Mat> = monos
            .iter()
            .map(|&(m, n, c)| r.word(&format!("{}{}{}", "a".repeat(m), "b".repeat(n), "c".repeat(c))))
            .collect();
        let coaction = (0..DIM)
            .map(|h| {
                let mut s = Mat::zeros(r.dim, r.dim);
                for (mi, a) in acts.iter().enumerate() {
                    let u = finv.get(h, mi);
                    if !u.is_zero() {
                        s = &s + &a.scale(u);
                    }
                }
                s
            })
            .collect();
        YDModule {
            name: r.name(),
            dim: r.dim,
            action: vec![r.mat('x').clone(), r.mat('y').clone(), r.mat('t').clone()],
            coaction,
        }
    }

    pub fn act(&self, h: usize) -> Mat {
        basis_action(&self.action, h)
    }

    /// Action satisfies `x⁴ = y² = 1, t² = x²y, xy = yx, tx = x³t, ty = yt`.
    pub fn action_ok(&self) -> bool {
        let [x, y, t] = [&self.action[0], &self.action[1], &self.action[2]];
        let id = Mat::identity(self.dim);
        x.pow(4) == id
            && y.pow(2) == id
            && t.matmul(t) == x.matmul(x).matmul(y)
            && x.matmul(y) == y.matmul(x)
            && t.matmul(x) == x.pow(3).matmul(t)
            && t.matmul(y) == y.matmul(t)
    }

    /// `Σ_h Δ(h)[p,q] C_h = C_q C_p` and `Σ_h ε(h) C_h = 1`.
    pub fn comodule_ok(&self) -> bool {
        let h = &kashina_h().hopf;
        let d = self.dim;
        let mut lhs = vec![Mat::zeros(d, d); DIM * DIM];
        let mut counit = Mat::zeros(d, d);
        for e in 0..DIM {
            for (p, c) in h.delta_basis(e).iter() {
                lhs[p] = &lhs[p] + &self.coaction[e].scale(c);
            }
            counit = &counit + &self.coaction[e].scale(&h.counit[e]);
        }
        counit.is_identity() && (0..DIM * DIM).all(|p| lhs[p] == self.coaction[p % DIM].matmul(&self.coaction[p / DIM]))
    }

    /// First generator failing `δ(g·v) = g₁v₋₁S(g₃) ⊗ g₂·v₀`, checked on all basis vectors at once.
    pub fn compatibility_failure(&self) -> Option<(String, usize)> {
        let kh = kashina_h();
        let h = &kh.hopf;
        let d = self.dim;
        for (gname, g) in [("x", kh.x), ("y", kh.y), ("t", kh.t)] {
            let ag = self.act(g);
            let mut rhs = vec![Mat::zeros(d, d); DIM];
            for ((g1, g2, g3), c) in delta2(&SparseVec::unit(g)) {
                let sg3 = h.antipode_of(&SparseVec::unit(g3)).expect("H has an antipode");
                let a2 = self.act(g2);
                for (e, ce) in self.coaction.iter().enumerate() {
                    if ce.is_zero() {
                        continue;
                    }
                    let prod = h.mul(&h.mul(&SparseVec::unit(g1), &SparseVec::unit(e)), &sg3);
                    let m = a2.matmul(ce);
                    for (k, w) in prod.iter() {
                        rhs[k] = &rhs[k] + &m.scale(&(&c * w));
                    }
                }
            }
            for (k, r) in rhs.iter().enumerate() {
                let l = self.coaction[k].matmul(&ag);
                if &l != r {
                    let col = (0..d).find(|&c| (0..d).any(|o| l.get(o, c) != r.get(o, c))).unwrap_or(0);
                    return Some((gname.to_string(), col));
                }
            }
        }
        None
    }

    pub fn verify(&self) -> Result<(), YdError> {
        if !self.comodule_ok() {
            return Err(YdError::NotComodule);
        }
        match self.compatibility_failure() {
            Some((generator, vector)) => Err(YdError::CompatibilityFailed { generator, vector }),
            None => Ok(()),
        }
    }

    /// `δ(v_i)` rendered as `Σ coeff*h ⊗ v_o`.
    pub fn show_coaction(&self, i: usize) -> String {
        let mut parts = Vec::new();
        for o in 0..self.dim {
            let v = SparseVec::from_pairs((0..DIM).map(|h| (h, self.coaction[h].get(o, i).clone())).collect());
            if !v.is_zero() {
                parts.push(format!("({}) ⊗ v{}", kashina_h().hopf.show(&v), o + 1));
            }
        }
        parts.join(" + ")
    }

    /// Coaction as a map `V → H ⊗ V`, i.e. element of H per (output, input).
    pub fn coaction_entry(&self, o: usize, i: usize) -> SparseVec {
        SparseVec::from_pairs((0..DIM).map(|h| (h, self.coaction[h].get(o, i).clone())).collect())
    }
}

/// Braiding `c(v ⊗ w) = v₋₁·w ⊗ v₀` as a matrix from `V ⊗ W` (index `i·dim W + j`)
/// to `W ⊗ V` (index `j·dim V + o`).
pub fn braiding(v: &YDModule, w: &YDModule) -> Mat {
    let (n, m) = (v.dim, w.dim);
    let mut c = Mat::zeros(n * m, n * m);
    for h in 0..DIM {
        let cv = &v.coaction[h];
        if cv.is_zero() {
            continue;
        }
        let aw = w.act(h);
        for i in 0..n {
            for o in 0..n {
                let d = cv.get(o, i);
                if d.is_zero() {
                    continue;
                }
                for j in 0..m {
                    for jj in 0..m {
                        let a = aw.get(jj, j);
                        if !a.is_zero() {
                            *c.entry_mut(jj * n + o, i * m + j) += &(d * a);
                        }
                    }
                }
            }
        }
    }
    c
}

/// `(c⊗1)(1⊗c)(c⊗1) = (1⊗c)(c⊗1)(1⊗c)` for a braiding on a `d`-dimensional space.
pub fn braid_equation(c: &Mat, d: usize) -> bool {
    let id = Mat::identity(d);
    let c1 = c.kron(&id);
    let c2 = id.kron(c);
    c1.matmul(&c2).matmul(&c1) == c2.matmul(&c1).matmul(&c2)
}

/// `V^ψ`: action `h·v = ψ(h)v`, coaction `(ψ⁻¹ ⊗ id)δ`.
pub fn twist(v: &YDModule, tau: &Automorphism) -> YDModule {
    let kh = kashina_h();
    let action = [kh.x, kh.y, kh.t].iter().map(|&g| element_action(&v.action, &tau.images[g])).collect();
    let psi = Mat::from_cols(&tau.images.iter().map(|s| s.to_dense(DIM)).collect::<Vec<_>>());
    let inv = psi.inverse().expect("automorphism is invertible");
    let d = v.dim;
    let mut coaction = vec![Mat::zeros(d, d); DIM];
    for h in 0..DIM {
        for k in 0..DIM {
            let c = inv.get(k, h);
            if !c.is_zero() {
                coaction[k] = &coaction[k] + &v.coaction[h].scale(c);
            }
        }
    }
    YDModule { name: format!("{}^τ{}", v.name, tau.index), dim: d, action, coaction }
}

fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.rows(), b.rows());
    Mat::from_fn(n + m, n + m, |r, c| {
        if r < n && c < n {
            a.get(r, c).clone()
        } else if r >= n && c >= n {
            b.get(r - n, c - n).clone()
        } else {
            Scalar::zero()
        }
    })
}

pub fn direct_sum(ms: &[&YDModule]) -> YDModule {
    let mut it = ms.iter();
    let first = (*it.next().expect("non-empty sum")).clone();
    it.fold(first, |acc, m| YDModule {
        name: format!("{}⊕{}", acc.name, m.name),
        dim: acc.dim + m.dim,
        action: (0..3).map(|g| block_diag(&acc.action[g], &m.action[g])).collect(),
        coaction: (0..DIM).map(|h| block_diag(&acc.coaction[h], &m.coaction[h])).collect(),
    })
}

/// Basis of maps `Φ : V → W` with `B Φ = Φ A` for every pair `(A, B)`.
pub fn hom_space(pairs: &[(&Mat, &Mat)], d1: usize, d2: usize) -> Vec<Mat> {
    let nv = d1 * d2;
    let mut rows = Vec::new();
    for (a, b) in pairs {
        for r in 0..d2 {
            for c in 0..d1 {
                let mut row = vec![Scalar::zero(); nv];
                for s in 0..d2 {
                    row[s * d1 + c] += b.get(r, s);
                }
                for s in 0..d1 {
                    row[r * d1 + s] -= a.get(s, c);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Scalar::zero(); nv]);
    }
    Mat::from_rows(rows)
        .kernel_basis()
        .into_iter()
        .map(|v| Mat::from_fn(d2, d1, |r, c| v[r * d1 + c].clone()))
        .collect()
}

/// Maps that are both H-linear and H-colinear.
pub fn yd_morphisms(v: &YDModule, w: &YDModule) -> Vec<Mat> {
    let mut pairs: Vec<(&Mat, &Mat)> = v.action.iter().zip(w.action.iter()).collect();
    pairs.extend(v.coaction.iter().zip(w.coaction.iter()));
    hom_space(&pairs, v.dim, w.dim)
}

/// An invertible YD morphism, if one exists among deterministic integer
/// combinations of the morphism basis.
pub fn yd_isomorphic(v: &YDModule, w: &YDModule) -> Option<Mat> {
    if v.dim != w.dim {
        return None;
    }
    let basis = yd_morphisms(v, w);
    for b in &basis {
        if b.rank() == v.dim {
            return Some(b.clone());
        }
    }
    let mut st: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..32 {
        let mut m = Mat::zeros(v.dim, v.dim);
        for b in &basis {
            st ^= st << 13;
            st ^= st >> 7;
            st ^= st << 17;
            m = &m + &b.scale(&Scalar::int((st % 11) as i64 - 5));
        }
        if m.rank() == v.dim {
            return Some(m);
        }
    }
    None
}

/// Braiding scalar `(−1)^{ij+jk}` for the character `(i,j,k,l)`.
pub fn character_braiding_scalar(i: i64, j: i64, k: i64) -> Scalar {
    Scalar::sign_pow(i * j + j * k)
}

/// Expected group-like `x^{j+2k+2l} y^k` for the character `(i,j,k,l)`.
pub fn character_coaction_index(j: i64, k: i64, l: i64) -> usize {
    kashina::h_index(((j + 2 * k + 2 * l).rem_euclid(4)) as usize, (k % 2) as usize, 0)
}
