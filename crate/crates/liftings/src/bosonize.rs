//! Radford biproduct `R # H` of a braided Hopf algebra in the
//! Yetter-Drinfeld category of H.

use exactlin::{Acc, Mat, Scalar, SparseVec};
use hopf_core::{with_solved_antipode, Generator, HopfData};
use kashina::{h_label, h_unindex, kashina_h};
use rayon::prelude::*;

use crate::braided::BraidedHopf;
use crate::LiftingError;

const H_DIM: usize = 16;

#[derive(Clone, Debug)]
pub struct BosonizationData {
    pub hopf: HopfData,
    /// `π : R # H → H`, `r # g ↦ ε(r) g`, as a `16 × dim` matrix.
    pub pi: Mat,
    /// `ι : H → R # H`, `g ↦ 1 # g`, as a `dim × 16` matrix.
    pub iota: Mat,
    pub r_dim: usize,
}

impl BosonizationData {
    /// Index of `r_i # e_h`.
    pub fn index(&self, i: usize, h: usize) -> usize {
        i * H_DIM + h
    }

    pub fn pi_iota_is_identity(&self) -> bool {
        self.pi.matmul(&self.iota).is_identity()
    }
}

fn label(r: &BraidedHopf, i: usize, h: usize) -> String {
    let (a, b) = (r.label(i), h_label(h));
    match (a.as_str(), b.as_str()) {
        ("1", _) => b,
        (_, "1") => a,
        _ => format!("{a}{b}"),
    }
}

/// `(r # g)(s # h) = r (g₁ · s) # g₂ h`, `Δ(r # g) = r¹ # (r²)₋₁ g₁ ⊗ (r²)₀ # g₂`.
pub fn bosonize(r: &BraidedHopf) -> Result<BosonizationData, LiftingError> {
    let kh = &kashina_h().hopf;
    let n = r.dim;
    let dim = n * H_DIM;
    let mult: Vec<SparseVec> = (0..dim * dim)
        .into_par_iter()
        .map(|p| {
            let (a, b) = (p / dim, p % dim);
            let (i, g) = (a / H_DIM, a % H_DIM);
            let (j, h) = (b / H_DIM, b % H_DIM);
            let mut acc = Acc::new(dim);
            for (q, c) in kh.delta_basis(g).iter() {
                let (g1, g2) = (q / H_DIM, q % H_DIM);
                let rs = r.mul(&SparseVec::unit(i), r.act_basis(g1, j));
                if rs.is_zero() {
                    continue;
                }
                let gh = kh.mul_basis(g2, h);
                for (k, x) in rs.iter() {
                    for (l, y) in gh.iter() {
                        acc.add(k * H_DIM + l, &(c * &(x * y)));
                    }
                }
            }
            acc.take()
        })
        .collect();
    let comult: Vec<SparseVec> = (0..dim)
        .into_par_iter()
        .map(|a| {
            let (i, g) = (a / H_DIM, a % H_DIM);
            let mut acc = Acc::new(dim * dim);
            for (p, c) in r.comult_basis(i).iter() {
                let (r1, r2) = (p / n, p % n);
                for (q, d) in r.coact_basis(r2).iter() {
                    let (hm, r0) = (q / n, q % n);
                    for (s, e) in kh.delta_basis(g).iter() {
                        let (g1, g2) = (s / H_DIM, s % H_DIM);
                        let cde = &(c * d) * e;
                        for (k, f) in kh.mul_basis(hm, g1).iter() {
                            acc.add((r1 * H_DIM + k) * dim + r0 * H_DIM + g2, &(&cde * f));
                        }
                    }
                }
            }
            acc.take()
        })
        .collect();
    let counit: Vec<Scalar> = (0..dim).map(|a| &r.counit(a / H_DIM) * &kh.counit[a % H_DIM]).collect();
    let unit = SparseVec::unit(r.unit * H_DIM + kh.unit.first_index().expect("unit of H"));
    let labels: Vec<String> = (0..dim).map(|a| label(r, a / H_DIM, a % H_DIM)).collect();
    let nl = r.letters.len();
    let mut gens: Vec<Generator> =
        (0..nl).map(|k| Generator { name: r.letters[k].clone(), vec: SparseVec::unit(r.letter(k) * H_DIM) }).collect();
    for (name, h) in [("x", 1usize), ("y", 4), ("t", 8)] {
        gens.push(Generator { name: name.into(), vec: SparseVec::unit(r.unit * H_DIM + h) });
    }
    let words: Vec<Vec<usize>> = (0..dim)
        .map(|a| {
            let (i, h) = (a / H_DIM, a % H_DIM);
            let (x, y, t) = h_unindex(h);
            let mut w: Vec<usize> = r.presented.basis[i].iter().map(|&l| l as usize).collect();
            w.extend(std::iter::repeat_n(nl, x));
            w.extend(std::iter::repeat_n(nl + 1, y));
            w.extend(std::iter::repeat_n(nl + 2, t));
            w
        })
        .collect();
    let h = HopfData::new(dim, mult, unit, comult, counit, labels)?.with_generators(gens).with_basis_words(words);
    let hopf = with_solved_antipode(h)?;
    let pi = Mat::from_fn(H_DIM, dim, |g, a| if a % H_DIM == g { r.counit(a / H_DIM) } else { Scalar::zero() });
    let iota = Mat::from_fn(dim, H_DIM, |a, g| if a == r.unit * H_DIM + g { Scalar::one() } else { Scalar::zero() });
    Ok(BosonizationData { hopf, pi, iota, r_dim: n })
}
