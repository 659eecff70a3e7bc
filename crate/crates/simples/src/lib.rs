//! Simple modules of the double `D = D(H^cop)`, given by the matrices of the
//! six generators `x, y, t, a, b, c`.

mod census;
mod index;

use exactlin::{Mat, Scalar};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use census::{all_simples, census, w_pairing_sweep, CensusReport, WPairing};
pub use index::{gamma, in_gamma, in_lambda1, in_lambda2, in_omega, lambda1, lambda2, omega, omega1, omega2};

pub const GENERATORS: [char; 6] = ['x', 'y', 't', 'a', 'b', 'c'];

/// Defining relations of D as word pairs (an empty word is the identity):
/// those of `H^cop`, those of the dual factor, and the nine cross relations.
pub const D_RELATIONS: [(&str, &str); 21] = [
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

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplesError {
    #[error("index {index:?} outside {set}")]
    InvalidIndex { index: Vec<i64>, set: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Character,
    V,
    W1,
    W2,
    W3,
    W4,
    U,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Character => "chi",
            Family::V => "V",
            Family::W1 => "W1",
            Family::W2 => "W2",
            Family::W3 => "W3",
            Family::W4 => "W4",
            Family::U => "U",
        }
    }

    pub fn w(p: u8) -> Family {
        match p {
            1 => Family::W1,
            2 => Family::W2,
            3 => Family::W3,
            _ => Family::W4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rep {
    pub family: Family,
    pub index: Vec<i64>,
    pub dim: usize,
    /// Matrices of `x, y, t, a, b, c`, in that order.
    pub mats: Vec<Mat>,
}

fn gen_pos(g: char) -> usize {
    GENERATORS.iter().position(|&c| c == g).unwrap_or_else(|| panic!("unknown generator {g}"))
}

impl Rep {
    pub fn name(&self) -> String {
        let idx: Vec<String> = self.index.iter().map(|i| i.to_string()).collect();
        format!("{}({})", self.family.name(), idx.join(","))
    }

    pub fn mat(&self, g: char) -> &Mat {
        &self.mats[gen_pos(g)]
    }

    /// Matrix of a word acting on the left (`"tc"` acts as `t·(c·v)`).
    pub fn word(&self, w: &str) -> Mat {
        let mut m = Mat::identity(self.dim);
        for g in w.chars() {
            m = m.matmul(self.mat(g));
        }
        m
    }

    /// Traces of the six generator matrices.
    pub fn character(&self) -> Vec<Scalar> {
        self.mats.iter().map(|m| m.trace()).collect()
    }

    pub fn relation_checks(&self) -> Vec<(String, bool)> {
        D_RELATIONS
            .iter()
            .map(|(l, r)| (format!("{l} = {}", if r.is_empty() { "1" } else { r }), self.word(l) == self.word(r)))
            .collect()
    }

    pub fn satisfies_relations(&self) -> bool {
        D_RELATIONS.iter().all(|(l, r)| self.word(l) == self.word(r))
    }

    /// Simple iff the commutant is one-dimensional (D is semisimple).
    pub fn is_simple(&self) -> bool {
        intertwiners(self, self).len() == 1
    }
}

fn sp(k: i64) -> Scalar {
    Scalar::sign_pow(k)
}

fn xp(k: i64) -> Scalar {
    Scalar::xi_pow(k)
}

/// `(-ξ)^k`.
fn mxp(k: i64) -> Scalar {
    &sp(k) * &xp(k)
}

fn d2(a: Scalar, b: Scalar) -> Mat {
    Mat::diag(&[a, b])
}

fn anti(a: Scalar, b: Scalar) -> Mat {
    Mat::from_rows(vec![vec![Scalar::zero(), a], vec![b, Scalar::zero()]])
}

/// One-dimensional module `χ_{i,j,k,l}`.
pub fn character_module(i: i64, j: i64, k: i64, l: i64) -> Result<Rep, SimplesError> {
    if !(0..2).contains(&i) || !(0..4).contains(&j) || !(0..2).contains(&k) || !(0..2).contains(&l) {
        return Err(SimplesError::InvalidIndex { index: vec![i, j, k, l], set: "0≤i,k,l<2, 0≤j<4".into() });
    }
    let one = |s: Scalar| Mat::diag(&[s]);
    Ok(Rep {
        family: Family::Character,
        index: vec![i, j, k, l],
        dim: 1,
        mats: vec![one(sp(i)), one(sp(j)), one(xp(j)), one(sp(k)), one(sp(j)), one(&sp(l) * &xp(j))],
    })
}

/// `V_{i,j,k,l}` without the index-set gate.
pub fn v_matrices(i: i64, j: i64, k: i64, l: i64) -> Vec<Mat> {
    vec![
        d2(sp(i), sp(i + k)),
        d2(sp(j), sp(j)),
        d2(xp(j), &sp(j + k + l) * &xp(j)),
        d2(xp(k), mxp(k)),
        d2(sp(l), sp(l)),
        anti(Scalar::one(), sp(l)),
    ]
}

/// `W^p_{i,j,k}` without the index-set gate.
pub fn w_matrices(p: u8, i: i64, j: i64, k: i64) -> Vec<Mat> {
    let t = if p <= 2 { anti(xp(i), &sp(j) * &xp(i)) } else { anti(mxp(i), &sp(i + j) * &xp(i)) };
    let a = if p % 2 == 1 { d2(xp(i), mxp(i)) } else { d2(mxp(i), xp(i)) };
    vec![d2(xp(i), mxp(i)), d2(sp(j), sp(j)), t, a, d2(sp(k), sp(k)), anti(Scalar::one(), sp(k))]
}

/// `U_{i,j,k,l}` without the index-set gate.
pub fn u_matrices(i: i64, j: i64, k: i64, l: i64) -> Vec<Mat> {
    vec![
        d2(xp(i), mxp(i)),
        d2(sp(j), sp(j)),
        anti(Scalar::one(), sp(i + j)),
        d2(sp(k), sp(i + k)),
        d2(sp(l), sp(l)),
        d2(xp(l), &sp(i + j + l) * &xp(l)),
    ]
}

/// Two-dimensional module from a family and index, gated by its index set:
/// `V` on Ω, `W1`/`W2` on Λ¹, `W3`/`W4` on Λ², `U` on Γ.
pub fn two_dim_module(family: Family, index: &[i64]) -> Result<Rep, SimplesError> {
    let bad = |set: &str| SimplesError::InvalidIndex { index: index.to_vec(), set: set.into() };
    let mats = match family {
        Family::V => {
            let [i, j, k, l] = <[i64; 4]>::try_from(index).map_err(|_| bad("Ω"))?;
            if !in_omega(i, j, k, l) {
                return Err(bad("Ω"));
            }
            v_matrices(i, j, k, l)
        }
        Family::W1 | Family::W2 | Family::W3 | Family::W4 => {
            let p = match family {
                Family::W1 => 1,
                Family::W2 => 2,
                Family::W3 => 3,
                _ => 4,
            };
            let set = if p <= 2 { "Λ¹" } else { "Λ²" };
            let [i, j, k] = <[i64; 3]>::try_from(index).map_err(|_| bad(set))?;
            let ok = if p <= 2 { in_lambda1(i, j, k) } else { in_lambda2(i, j, k) };
            if !ok {
                return Err(bad(set));
            }
            w_matrices(p, i, j, k)
        }
        Family::U => {
            let [i, j, k, l] = <[i64; 4]>::try_from(index).map_err(|_| bad("Γ"))?;
            if !in_gamma(i, j, k, l) {
                return Err(bad("Γ"));
            }
            u_matrices(i, j, k, l)
        }
        Family::Character => {
            let [i, j, k, l] = <[i64; 4]>::try_from(index).map_err(|_| bad("characters"))?;
            return character_module(i, j, k, l);
        }
    };
    Ok(Rep { family, index: index.to_vec(), dim: 2, mats })
}

/// Basis of `Hom_D(r1, r2)`: matrices `Φ` (dim r2 × dim r1) with
/// `M₂(g) Φ = Φ M₁(g)` for all six generators.
pub fn intertwiners(r1: &Rep, r2: &Rep) -> Vec<Mat> {
    let (d1, d2) = (r1.dim, r2.dim);
    let nv = d1 * d2;
    // unknown Φ[r][c] at r * d1 + c
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in 0..6 {
        let (m1, m2) = (&r1.mats[g], &r2.mats[g]);
        for r in 0..d2 {
            for c in 0..d1 {
                // (M2 Φ - Φ M1)[r][c]
                let mut row = vec![Scalar::zero(); nv];
                for s in 0..d2 {
                    row[s * d1 + c] += m2.get(r, s);
                }
                for s in 0..d1 {
                    row[r * d1 + s] -= m1.get(s, c);
                }
                rows.push(row);
            }
        }
    }
    let a = Mat::from_rows(rows);
    a.kernel_basis().into_iter().map(|v| Mat::from_fn(d2, d1, |r, c| v[r * d1 + c].clone())).collect()
}

pub fn isomorphic(r1: &Rep, r2: &Rep) -> bool {
    r1.dim == r2.dim && intertwiners(r1, r2).iter().any(|m| m.rank() == r1.dim)
}
