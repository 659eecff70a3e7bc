//! Dense three-index arrays for structure constants of small algebras.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Entry `(i, j, k)` lives at `(i * n2 + j) * n3 + k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Tensor3 {
    shape: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(n1: usize, n2: usize, n3: usize) -> Tensor3 {
        Tensor3 { shape: (n1, n2, n3), data: vec![Scalar::zero(); n1 * n2 * n3] }
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        self.shape
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let (n1, n2, n3) = self.shape;
        assert!(i < n1 && j < n2 && k < n3, "Tensor3 index out of bounds");
        (i * n2 + j) * n3 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let p = self.idx(i, j, k);
        self.data[p] = v;
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get() {
        let mut t = Tensor3::zeros(2, 3, 4);
        t.set(1, 2, 3, Scalar::xi());
        assert_eq!(t.get(1, 2, 3), &Scalar::xi());
        assert_eq!(t.nonzeros(), 1);
    }

    #[test]
    #[should_panic]
    fn bounds() {
        let t = Tensor3::zeros(1, 1, 1);
        let _ = t.get(0, 1, 0);
    }
}
