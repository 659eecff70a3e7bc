//! Group-likes and skew-primitives.

use exactlin::{Mat, SparseVec};

use crate::HopfData;

pub fn is_grouplike(h: &HopfData, v: &SparseVec) -> bool {
    !v.is_zero() && h.delta(v) == h.tensor(v, v) && h.counit_of(v).is_one()
}

/// Basis elements that are group-like.
pub fn grouplike_basis_elements(h: &HopfData) -> Vec<usize> {
    (0..h.dim).filter(|&i| is_grouplike(h, &SparseVec::unit(i))).collect()
}

/// Basis of `{v : Δ(v) = g ⊗ v + v ⊗ k}` for group-likes `g, k`.
pub fn pairwise_primitive_space(h: &HopfData, g: &SparseVec, k: &SparseVec) -> Vec<SparseVec> {
    let n = h.dim;
    let cols: Vec<SparseVec> = (0..n)
        .map(|m| {
            let e = SparseVec::unit(m);
            h.delta(&e).sub(&h.tensor(g, &e)).sub(&h.tensor(&e, k))
        })
        .collect();
    let mut rows: Vec<usize> = cols.iter().flat_map(|c| c.iter().map(|(i, _)| i)).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut a = Mat::zeros(rows.len(), n);
    for (m, c) in cols.iter().enumerate() {
        for (i, z) in c.iter() {
            let r = rows.binary_search(&i).unwrap();
            a.set(r, m, z.clone());
        }
    }
    if rows.is_empty() {
        return (0..n).map(SparseVec::unit).collect();
    }
    a.kernel_basis().iter().map(|v| SparseVec::from_dense(v)).collect()
}

/// Nontrivial skew-primitives between basis group-likes: for each pair
/// `(g, k)`, the dimension of the skew-primitive space beyond `span(g - k)`.
pub fn pairwise_primitives(h: &HopfData) -> Vec<(usize, usize, usize)> {
    let gl = grouplike_basis_elements(h);
    let mut out = Vec::new();
    for &g in &gl {
        for &k in &gl {
            let sp = pairwise_primitive_space(h, &SparseVec::unit(g), &SparseVec::unit(k));
            let trivial = usize::from(g != k);
            if sp.len() > trivial {
                out.push((g, k, sp.len() - trivial));
            }
        }
    }
    out
}
