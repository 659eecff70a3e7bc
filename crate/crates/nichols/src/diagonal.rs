//! Diagonal-type detection and the eigenvalue-one infinitude test.

use exactlin::{Mat, Scalar};
use serde::{Deserialize, Serialize};

use crate::BraidedSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalData {
    /// `c(e_i ⊗ e_j) = q[i][j] e_j ⊗ e_i`.
    pub q: Vec<Vec<Scalar>>,
    /// `q_ii`.
    pub vertices: Vec<Scalar>,
    /// `(i, j, q_ij q_ji)` for `i < j` with label different from 1.
    pub edges: Vec<(usize, usize, Scalar)>,
}

pub fn diagonal_data(bs: &BraidedSpace) -> Option<DiagonalData> {
    let d = bs.dim;
    let mut q = vec![vec![Scalar::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            for r in 0..d * d {
                if r != j * d + i && !bs.c.get(r, col).is_zero() {
                    return None;
                }
            }
            q[i][j] = bs.c.get(j * d + i, col).clone();
        }
    }
    let vertices = (0..d).map(|i| q[i][i].clone()).collect();
    let mut edges = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let l = &q[i][j] * &q[j][i];
            if !l.is_one() {
                edges.push((i, j, l));
            }
        }
    }
    Some(DiagonalData { q, vertices, edges })
}

/// Braiding in the basis given by the columns of `p`.
pub fn conjugate(bs: &BraidedSpace, p: &Mat) -> BraidedSpace {
    let pp = p.kron(p);
    let inv = pp.inverse().expect("change of basis is invertible");
    BraidedSpace { name: bs.name.clone(), dim: bs.dim, c: inv.matmul(&bs.c).matmul(&pp) }
}

fn candidate_vectors(d: usize) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for i in 0..d {
        let mut v = vec![Scalar::zero(); d];
        v[i] = Scalar::one();
        out.push(v);
    }
    let coeffs = [Scalar::one(), Scalar::int(-1), Scalar::xi(), -&Scalar::xi(), Scalar::int(2), Scalar::int(-2)];
    for i in 0..d {
        for j in i + 1..d {
            for s in &coeffs {
                let mut v = vec![Scalar::zero(); d];
                v[i] = Scalar::one();
                v[j] = s.clone();
                out.push(v);
            }
        }
    }
    out
}

/// Searches bases built from unit vectors and `e_i + s e_j` (`s ∈ {±1, ±ξ, ±2}`)
/// for one in which the braiding is diagonal. Only two-dimensional spaces are
/// searched beyond the given basis.
pub fn find_diagonal_basis(bs: &BraidedSpace) -> Option<(Mat, DiagonalData)> {
    if let Some(dd) = diagonal_data(bs) {
        return Some((Mat::identity(bs.dim), dd));
    }
    if bs.dim != 2 {
        return None;
    }
    let cands = candidate_vectors(2);
    for u in &cands {
        for v in &cands {
            let p = Mat::from_cols(&[u.clone(), v.clone()]);
            if p.rank() < 2 {
                continue;
            }
            if let Some(dd) = diagonal_data(&conjugate(bs, &p)) {
                return Some((p, dd));
            }
        }
    }
    None
}

/// A vector with `c(v ⊗ v) = v ⊗ v`, searched among unit vectors and
/// `e_i + s e_j` with `s ∈ {±1, ±ξ}`.
pub fn eigen_one_infinite(bs: &BraidedSpace) -> Option<Vec<Scalar>> {
    let d = bs.dim;
    let mut cands = Vec::new();
    for i in 0..d {
        let mut v = vec![Scalar::zero(); d];
        v[i] = Scalar::one();
        cands.push(v);
    }
    for i in 0..d {
        for j in i + 1..d {
            for s in [Scalar::one(), Scalar::int(-1), Scalar::xi(), -&Scalar::xi()] {
                let mut v = vec![Scalar::zero(); d];
                v[i] = Scalar::one();
                v[j] = s;
                cands.push(v);
            }
        }
    }
    cands.into_iter().find(|v| {
        let vv: Vec<Scalar> = (0..d * d).map(|k| &v[k / d] * &v[k % d]).collect();
        bs.c.mul_vec(&vv) == vv
    })
}
