//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Multiplication and comultiplication are stored sparsely: one sparse
//! vector per basis pair for `mult`, one sparse vector over `A ⊗ A`
//! (index `a * dim + b`) per basis element for `comult`.

mod antipode;
pub mod examples;
mod grouplike;
mod maps;
mod ops;
mod verify;

use exactlin::{Acc, Mat, Scalar, SparseVec, Tensor3};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use antipode::{solve_antipode, solve_antipode_by_generators, solve_antipode_dense, with_solved_antipode};
pub use grouplike::{grouplike_basis_elements, is_grouplike, pairwise_primitive_space, pairwise_primitives};
pub use maps::{verify_hopf_map, MapReport};
pub use ops::{convolution, cop, dual, op};
pub use verify::{span_certificate, verify_hopf, verify_hopf_with, AxiomCheck, AxiomReport, VerifyMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("structure constants have inconsistent sizes: {0}")]
    Shape(String),
    #[error("no antipode: the convolution system is inconsistent ({0})")]
    NoAntipode(String),
    #[error("antipode could not be solved: {0}")]
    Unsolvable(String),
    #[error("antipode is missing")]
    MissingAntipode,
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
}

/// A named algebra generator given as a vector in the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub vec: SparseVec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfData {
    pub dim: usize,
    mult: Vec<SparseVec>,
    pub unit: SparseVec,
    comult: Vec<SparseVec>,
    pub counit: Vec<Scalar>,
    pub antipode: Option<Vec<SparseVec>>,
    pub labels: Vec<String>,
    /// Optional algebra generators, used for generator-reduced certificates.
    pub generators: Vec<Generator>,
    /// When present, basis element `i` equals the product of generators
    /// `basis_words[i]` (in order), coefficient one.
    pub basis_words: Option<Vec<Vec<usize>>>,
}

impl HopfData {
    /// Assembles Hopf data; `mult[i * dim + j]` is `e_i e_j`, `comult[i]`
    /// is `Δ(e_i)` over `A ⊗ A`.
    pub fn new(
        dim: usize,
        mult: Vec<SparseVec>,
        unit: SparseVec,
        comult: Vec<SparseVec>,
        counit: Vec<Scalar>,
        labels: Vec<String>,
    ) -> Result<HopfData, HopfError> {
        if mult.len() != dim * dim {
            return Err(HopfError::Shape(format!("mult has {} entries, expected {}", mult.len(), dim * dim)));
        }
        if comult.len() != dim || counit.len() != dim {
            return Err(HopfError::Shape("comult/counit length".into()));
        }
        let labels = if labels.len() == dim { labels } else { (0..dim).map(|i| format!("e{i}")).collect() };
        let bad = |v: &SparseVec, n: usize| v.iter().any(|(i, _)| i >= n);
        if mult.iter().any(|v| bad(v, dim)) || bad(&unit, dim) || comult.iter().any(|v| bad(v, dim * dim)) {
            return Err(HopfError::Shape("index out of range".into()));
        }
        Ok(HopfData {
            dim,
            mult,
            unit,
            comult,
            counit,
            antipode: None,
            labels,
            generators: Vec::new(),
            basis_words: None,
        })
    }

    pub fn with_antipode(mut self, s: Vec<SparseVec>) -> HopfData {
        assert_eq!(s.len(), self.dim);
        self.antipode = Some(s);
        self
    }

    pub fn with_generators(mut self, gens: Vec<Generator>) -> HopfData {
        self.generators = gens;
        self
    }

    pub fn with_basis_words(mut self, words: Vec<Vec<usize>>) -> HopfData {
        assert_eq!(words.len(), self.dim);
        self.basis_words = Some(words);
        self
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn delta_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(i)
    }

    pub fn one(&self) -> SparseVec {
        self.unit.clone()
    }

    pub fn generator(&self, name: &str) -> Option<&SparseVec> {
        self.generators.iter().find(|g| g.name == name).map(|g| &g.vec)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let c = x * y;
                for (k, z) in self.mul_basis(i, j).iter() {
                    pairs.push((k, &c * z));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub(crate) fn mul_into(&self, a: &SparseVec, b: &SparseVec, c: &Scalar, acc: &mut Acc) {
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let coef = &(x * y) * c;
                acc.add_vec(self.mul_basis(i, j), &coef);
            }
        }
    }

    /// Product of a list of elements, left to right.
    pub fn mul_many(&self, xs: &[&SparseVec]) -> SparseVec {
        let mut r = self.one();
        for x in xs {
            r = self.mul(&r, x);
        }
        r
    }

    pub fn pow(&self, a: &SparseVec, k: u32) -> SparseVec {
        let mut r = self.one();
        for _ in 0..k {
            r = self.mul(&r, a);
        }
        r
    }

    pub fn delta(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Acc::new(self.dim * self.dim);
        for (i, c) in v.iter() {
            acc.add_vec(&self.comult[i], c);
        }
        acc.take()
    }

    pub fn counit_of(&self, v: &SparseVec) -> Scalar {
        v.dot(&self.counit)
    }

    pub fn antipode_of(&self, v: &SparseVec) -> Option<SparseVec> {
        let s = self.antipode.as_ref()?;
        let mut acc = Acc::new(self.dim);
        for (i, c) in v.iter() {
            acc.add_vec(&s[i], c);
        }
        Some(acc.take())
    }

    /// Product in `A ⊗ A` (componentwise).
    pub fn tensor_mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim;
        let mut acc = Acc::new(n * n);
        for (p, a) in x.iter() {
            let (a1, a2) = (p / n, p % n);
            for (q, b) in y.iter() {
                let (b1, b2) = (q / n, q % n);
                let c = a * b;
                for (l, u) in self.mul_basis(a1, b1).iter() {
                    let cu = &c * u;
                    for (r, w) in self.mul_basis(a2, b2).iter() {
                        acc.add(l * n + r, &(&cu * w));
                    }
                }
            }
        }
        acc.take()
    }

    /// `a ⊗ b` as a vector of `A ⊗ A`.
    pub fn tensor(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        a.tensor(b, self.dim)
    }

    pub fn antipode_matrix(&self) -> Option<Mat> {
        let s = self.antipode.as_ref()?;
        Some(Mat::from_cols(&s.iter().map(|v| v.to_dense(self.dim)).collect::<Vec<_>>()))
    }

    /// Dense multiplication tensor `μ[i][j][k]`; intended for small algebras.
    pub fn mult_tensor(&self) -> Tensor3 {
        let n = self.dim;
        let mut t = Tensor3::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j).iter() {
                    t.set(i, j, k, c.clone());
                }
            }
        }
        t
    }

    /// Dense comultiplication tensor `Δ[i][a][b]`.
    pub fn comult_tensor(&self) -> Tensor3 {
        let n = self.dim;
        let mut t = Tensor3::zeros(n, n, n);
        for i in 0..n {
            for (p, c) in self.comult[i].iter() {
                t.set(i, p / n, p % n, c.clone());
            }
        }
        t
    }

    /// Structure constants equal (ignores labels, generators and antipode).
    pub fn same_bialgebra(&self, o: &HopfData) -> bool {
        self.dim == o.dim
            && self.mult == o.mult
            && self.unit == o.unit
            && self.comult == o.comult
            && self.counit == o.counit
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| self.comult[i] == self.comult[i].map_indices(|p| (p % n) * n + p / n))
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mul_matrix(&self, a: &SparseVec) -> Mat {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.mul(a, &SparseVec::unit(j)).to_dense(self.dim)).collect();
        Mat::from_cols(&cols)
    }

    pub(crate) fn mult_table(&self) -> &[SparseVec] {
        &self.mult
    }

    pub(crate) fn comult_table(&self) -> &[SparseVec] {
        &self.comult
    }

    /// Renders a vector with basis labels, e.g. `1/2*t + xi*x2t`.
    pub fn show(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = v
            .iter()
            .map(|(i, c)| if c.is_one() { self.labels[i].clone() } else { format!("({c})*{}", self.labels[i]) })
            .collect();
        parts.join(" + ")
    }
}
