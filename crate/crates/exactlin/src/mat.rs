//! Dense matrices over Q(xi) with exact Gaussian elimination.
//!
//! Index convention for tensor products (used project-wide): in `V ⊗ W`
//! the basis vector `v_i ⊗ w_j` has index `i * dim(W) + j`, i.e. the
//! leftmost factor is the most significant digit. `kron` follows it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Convenience for tests: integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| Scalar::int(v)).collect()).collect())
    }

    pub fn from_cols(cols: &[Vec<Scalar>]) -> Mat {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        Mat::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn diag(d: &[Scalar]) -> Mat {
        let n = d.len();
        let mut m = Mat::zeros(n, n);
        for (i, v) in d.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn scalar(n: usize, s: &Scalar) -> Mat {
        Mat::diag(&vec![s.clone(); n])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// True when the only nonzero entries are on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matmul");
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = a * b;
                        *out.entry_mut(i, j) += v;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.rows);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Kronecker product, row-major block convention.
    pub fn kron(&self, o: &Mat) -> Mat {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Mat::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows);
        Mat::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Mat { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            let prow: Vec<Scalar> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if !prow[j].is_zero() {
                        let v = m.get(i, j) - &(&f * &prow[j]);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (m, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in piv.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve_linear(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let aug = self.hstack(&Mat::from_cols(&[b.to_vec()]));
        let (m, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in piv.iter().enumerate() {
            x[p] = m.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (m, piv) = self.hstack(&Mat::identity(n)).rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| m.get(i, n + j).clone()))
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pv = m.get(c, c).clone();
            det = &det * &pv;
            let inv = pv.inv();
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul<&Mat> for &Mat {
    type Output = Mat;
    fn mul(self, o: &Mat) -> Mat {
        self.matmul(o)
    }
}

impl Mul for Mat {
    type Output = Mat;
    fn mul(self, o: Mat) -> Mat {
        self.matmul(&o)
    }
}

impl Add<&Mat> for &Mat {
    type Output = Mat;
    fn add(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&Mat> for &Mat {
    type Output = Mat;
    fn sub(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(&Scalar::int(-1))
    }
}

/// Free functions mirroring the method API.
pub fn rank(m: &Mat) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Mat) -> Vec<Vec<Scalar>> {
    m.kernel_basis()
}

pub fn solve_linear(a: &Mat, b: &[Scalar]) -> Option<Vec<Scalar>> {
    a.solve_linear(b)
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    a.kron(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi() -> Scalar {
        Scalar::xi()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::identity(2).rank(), 2);
        assert_eq!(Mat::zeros(3, 3).rank(), 0);
        let m = Mat::from_rows(vec![vec![Scalar::one(), xi()], vec![xi(), Scalar::int(-1)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(3).kernel_basis().is_empty());
        assert_eq!(Mat::zeros(2, 2).kernel_basis().len(), 2);
        let m = Mat::from_rows(vec![vec![Scalar::one(), xi()]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![-xi(), Scalar::one()]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![Scalar::int(3), Scalar::gauss(1, 2)];
        assert_eq!(Mat::identity(2).solve_linear(&b), Some(b.clone()));
        assert_eq!(Mat::from_ints(&[&[0]]).solve_linear(&[Scalar::one()]), None);
        let a = Mat::from_rows(vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::zero(), xi()]]);
        let x = a.solve_linear(&[Scalar::zero(), Scalar::one()]).unwrap();
        assert_eq!(x, vec![xi(), -xi()]);
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Mat::identity(2).kron(&Mat::identity(2)), Mat::identity(4));
        let d = Mat::diag(&[xi()]);
        assert_eq!(d.kron(&d), Mat::diag(&[Scalar::int(-1)]));
        let swap = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        let s4 = swap.kron(&swap);
        let s16 = s4.kron(&s4);
        assert_eq!(s16.matmul(&s16), Mat::identity(16));
    }

    #[test]
    fn inverse_and_det() {
        let a = Mat::from_rows(vec![vec![Scalar::one(), xi()], vec![Scalar::int(2), Scalar::int(3)]]);
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).is_identity());
        assert_eq!(a.det(), Scalar::gauss(3, -2));
        let sing = Mat::from_rows(vec![vec![Scalar::one(), xi()], vec![xi(), Scalar::int(-1)]]);
        assert!(sing.inverse().is_none());
        assert!(sing.det().is_zero());
    }
}
