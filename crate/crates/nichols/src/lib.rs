//! Nichols algebras of braided vector spaces via quantum symmetrizers.

mod diagonal;
mod table;

use std::collections::HashMap;

use exactlin::{Echelon, Mat, Scalar, SparseVec};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use ydcat::{braiding, direct_sum, module_by_name, YDModule, YdError};

pub use diagonal::{conjugate, diagonal_data, eigen_one_infinite, find_diagonal_basis, DiagonalData};
pub use table::{claimed_pairs, pair_factorizes, pair_table_sweep, PairTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NicholsError {
    #[error("tensor power of dimension {0} exceeds the cap {1}")]
    CapExceeded(usize, usize),
    #[error(transparent)]
    Yd(#[from] YdError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedSpace {
    pub name: String,
    pub dim: usize,
    /// `c` on `V ⊗ V`, basis index `a·dim + b`.
    pub c: Mat,
}

impl BraidedSpace {
    pub fn new(name: &str, dim: usize, c: Mat) -> BraidedSpace {
        BraidedSpace { name: name.to_string(), dim, c }
    }

    pub fn from_yd(m: &YDModule) -> BraidedSpace {
        BraidedSpace { name: m.name.clone(), dim: m.dim, c: braiding(m, m) }
    }

    /// `"M1"`, `"W1_100"`, or sums such as `"M1+V1"`.
    pub fn by_name(name: &str) -> Result<BraidedSpace, NicholsError> {
        let parts: Vec<YDModule> = name.split('+').map(module_by_name).collect::<Result<_, _>>()?;
        let refs: Vec<&YDModule> = parts.iter().collect();
        let mut m = direct_sum(&refs);
        m.name = name.to_string();
        Ok(BraidedSpace::from_yd(&m))
    }

    pub fn braid_equation(&self) -> bool {
        ydcat::braid_equation(&self.c, self.dim)
    }

    /// `c_i` (0-based, acting on tensor slots `i, i+1`) applied to a vector of `V^{⊗n}`.
    pub fn apply_c(&self, v: &SparseVec, n: usize, i: usize) -> SparseVec {
        let d = self.dim;
        let right = d.pow((n - i - 2) as u32);
        let mid = d * d;
        let mut pairs = Vec::new();
        for (ix, val) in v.iter() {
            let lo = ix % right;
            let pair = (ix / right) % mid;
            let hi = ix / right / mid;
            for r in 0..mid {
                let cv = self.c.get(r, pair);
                if !cv.is_zero() {
                    pairs.push(((hi * mid + r) * right + lo, cv * val));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordChoice {
    /// Peel off the smallest descent first.
    Lowest,
    /// Peel off the largest descent first.
    Highest,
}

/// Columns of the `dⁿ × dⁿ` quantum symmetrizer `Σ_σ T_σ`, where `T_σ` is the
/// product of braid operators along a reduced word of `σ`.
pub fn symmetrizer_columns(
    bs: &BraidedSpace,
    n: usize,
    choice: WordChoice,
    cap: usize,
) -> Result<Vec<SparseVec>, NicholsError> {
    let size = bs.dim.pow(n as u32);
    if size > cap {
        return Err(NicholsError::CapExceeded(size, cap));
    }
    let id: Vec<SparseVec> = (0..size).map(SparseVec::unit).collect();
    if n < 2 {
        return Ok(id);
    }
    // permutations as value arrays; left multiplication by s_i swaps values i, i+1
    let start: Vec<u8> = (0..n as u8).collect();
    let mut memo: HashMap<Vec<u8>, Vec<SparseVec>> = HashMap::new();
    memo.insert(start.clone(), id);
    let mut layer = vec![start];
    let mut total: Vec<SparseVec> = memo[&layer[0]].clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for sigma in &layer {
            for i in 0..n - 1 {
                let mut tau = sigma.clone();
                let (pa, pb) = (
                    tau.iter().position(|&v| v == i as u8).unwrap(),
                    tau.iter().position(|&v| v == i as u8 + 1).unwrap(),
                );
                if pa > pb {
                    continue; // length would drop
                }
                tau.swap(pa, pb);
                if memo.contains_key(&tau) {
                    continue;
                }
                // the chosen descent of tau decides its reduced word
                let descents: Vec<usize> = (0..n - 1)
                    .filter(|&k| {
                        let a = tau.iter().position(|&v| v == k as u8).unwrap();
                        let b = tau.iter().position(|&v| v == k as u8 + 1).unwrap();
                        a > b
                    })
                    .collect();
                let k = match choice {
                    WordChoice::Lowest => descents[0],
                    WordChoice::Highest => *descents.last().unwrap(),
                };
                let mut prev = tau.clone();
                let (a, b) = (
                    prev.iter().position(|&v| v == k as u8).unwrap(),
                    prev.iter().position(|&v| v == k as u8 + 1).unwrap(),
                );
                prev.swap(a, b);
                let cols: Vec<SparseVec> = memo[&prev].iter().map(|col| bs.apply_c(col, n, k)).collect();
                for (t, c) in total.iter_mut().zip(cols.iter()) {
                    *t = t.add(c);
                }
                memo.insert(tau.clone(), cols);
                next.push(tau);
            }
        }
        layer = next;
    }
    Ok(total)
}

pub fn columns_to_mat(cols: &[SparseVec], rows: usize) -> Mat {
    Mat::from_cols(&cols.iter().map(|c| c.to_dense(rows)).collect::<Vec<_>>())
}

/// Dense quantum symmetrizer of degree `n` (default word choice).
pub fn quantum_symmetrizer(bs: &BraidedSpace, n: usize, cap: usize) -> Result<Mat, NicholsError> {
    let cols = symmetrizer_columns(bs, n, WordChoice::Lowest, cap)?;
    Ok(columns_to_mat(&cols, bs.dim.pow(n as u32)))
}

/// `Σ_k c_k c_{k+1} ⋯ c_{n-2}` applied to `w` (the shuffle factor with
/// `S_n = T_n (S_{n-1} ⊗ 1)`).
pub fn shuffle_factor(bs: &BraidedSpace, w: &SparseVec, n: usize) -> SparseVec {
    let mut tot = w.clone();
    let mut cur = w.clone();
    for i in (0..n - 1).rev() {
        cur = bs.apply_c(&cur, n, i);
        tot = tot.add(&cur);
    }
    tot
}

/// Ranks of the symmetrizers in degrees `1..=cap`, stopping at the first zero.
pub fn nichols_ranks(bs: &BraidedSpace, cap: usize) -> Vec<usize> {
    let d = bs.dim;
    let mut image: Vec<SparseVec> = (0..d).map(SparseVec::unit).collect();
    let mut ranks = vec![d];
    for n in 2..=cap {
        if image.is_empty() {
            break;
        }
        let mut ech = Echelon::new();
        for u in &image {
            for a in 0..d {
                let w = u.map_indices(|k| k * d + a);
                ech.insert(&shuffle_factor(bs, &w, n));
            }
        }
        image = ech.basis();
        ranks.push(image.len());
    }
    ranks
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Finite { total: usize },
    InfiniteByEigenOne { witness: Vec<Scalar> },
    Undetermined { cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NicholsReport {
    pub module: String,
    pub dim: usize,
    pub braid_equation: bool,
    /// Ranks in degrees `1, 2, …`.
    pub ranks: Vec<usize>,
    pub verdict: Verdict,
    /// Basis of `ker(1 + c)`.
    pub quadratic_relations: Vec<Vec<Scalar>>,
}

pub fn quadratic_relations(bs: &BraidedSpace) -> Vec<Vec<Scalar>> {
    let n = bs.dim * bs.dim;
    (&Mat::identity(n) + &bs.c).kernel_basis()
}

pub fn nichols_dim(bs: &BraidedSpace, cap: usize) -> NicholsReport {
    let witness = eigen_one_infinite(bs);
    let ranks = nichols_ranks(bs, cap);
    let verdict = match (witness, ranks.last()) {
        (Some(w), _) => Verdict::InfiniteByEigenOne { witness: w },
        (None, Some(0)) => Verdict::Finite { total: 1 + ranks.iter().sum::<usize>() },
        _ => Verdict::Undetermined { cap },
    };
    NicholsReport {
        module: bs.name.clone(),
        dim: bs.dim,
        braid_equation: bs.braid_equation(),
        ranks,
        verdict,
        quadratic_relations: quadratic_relations(bs),
    }
}

impl NicholsReport {
    pub fn total(&self) -> Option<usize> {
        match self.verdict {
            Verdict::Finite { total } => Some(total),
            _ => None,
        }
    }
}
