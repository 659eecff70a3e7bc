//! Dual, opposite, co-opposite and convolution.

use exactlin::{Acc, MapAcc, Mat, SparseVec};

use crate::HopfData;

fn inverse_antipode(h: &HopfData) -> Option<Vec<SparseVec>> {
    let m = h.antipode_matrix()?.inverse()?;
    Some((0..h.dim).map(|i| SparseVec::from_dense(&m.col(i))).collect())
}

/// Linear dual in the dual basis `f_i(e_j) = δ_ij`.
pub fn dual(h: &HopfData) -> HopfData {
    let n = h.dim;
    let mut mult: Vec<MapAcc> = (0..n * n).map(|_| MapAcc::new()).collect();
    for k in 0..n {
        for (p, c) in h.delta_basis(k).iter() {
            mult[p].add(k as u64, c);
        }
    }
    let mult: Vec<SparseVec> = mult
        .into_iter()
        .map(|m| SparseVec::from_pairs(m.into_sorted().into_iter().map(|(i, c)| (i as usize, c)).collect()))
        .collect();
    let unit = SparseVec::from_dense(&h.counit);
    let mut comult: Vec<Vec<(usize, exactlin::Scalar)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j).iter() {
                comult[k].push((i * n + j, c.clone()));
            }
        }
    }
    let comult = comult.into_iter().map(SparseVec::from_pairs).collect();
    let counit = h.unit.to_dense(n);
    let labels = h.labels.iter().map(|l| format!("{l}*")).collect();
    let mut d = HopfData::new(n, mult, unit, comult, counit, labels).expect("dual shapes");
    if let Some(s) = h.antipode_matrix() {
        let t = s.transpose();
        d.antipode = Some((0..n).map(|i| SparseVec::from_dense(&t.col(i))).collect());
    }
    d
}

/// Opposite algebra; antipode becomes `S^{-1}`.
pub fn op(h: &HopfData) -> HopfData {
    let n = h.dim;
    let mult = (0..n * n).map(|p| h.mul_basis(p % n, p / n).clone()).collect();
    let comult = h.comult_table().to_vec();
    let mut o = HopfData::new(n, mult, h.unit.clone(), comult, h.counit.clone(), h.labels.clone()).expect("op shapes");
    o.antipode = inverse_antipode(h);
    o.generators = h.generators.clone();
    o
}

/// Co-opposite coalgebra; antipode becomes `S^{-1}`.
pub fn cop(h: &HopfData) -> HopfData {
    let n = h.dim;
    let comult = h.comult_table().iter().map(|v| v.map_indices(|p| (p % n) * n + p / n)).collect();
    let mut o = HopfData::new(n, h.mult_table().to_vec(), h.unit.clone(), comult, h.counit.clone(), h.labels.clone())
        .expect("cop shapes");
    o.antipode = inverse_antipode(h);
    o.generators = h.generators.clone();
    o.basis_words = h.basis_words.clone();
    o
}

/// Convolution `f * g = μ (f ⊗ g) Δ` of two linear endomorphisms (column convention).
pub fn convolution(h: &HopfData, f: &Mat, g: &Mat) -> Mat {
    let n = h.dim;
    let fc: Vec<SparseVec> = (0..n).map(|i| SparseVec::from_dense(&f.col(i))).collect();
    let gc: Vec<SparseVec> = (0..n).map(|i| SparseVec::from_dense(&g.col(i))).collect();
    let cols: Vec<Vec<exactlin::Scalar>> = (0..n)
        .map(|i| {
            let mut acc = Acc::new(n);
            for (p, c) in h.delta_basis(i).iter() {
                h.mul_into(&fc[p / n], &gc[p % n], c, &mut acc);
            }
            acc.take().to_dense(n)
        })
        .collect();
    Mat::from_cols(&cols)
}
