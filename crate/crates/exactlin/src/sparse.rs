//! Sparse vectors (sorted index/value pairs) and accumulation helpers.
//!
//! Structure constants of the larger algebras are stored one sparse vector
//! per basis pair instead of as a dense cube.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug, Serialize, Deserialize)]
pub struct SparseVec {
    entries: Vec<(u32, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> SparseVec {
        SparseVec::default()
    }

    pub fn unit(i: usize) -> SparseVec {
        SparseVec { entries: vec![(i as u32, Scalar::one())] }
    }

    pub fn single(i: usize, c: Scalar) -> SparseVec {
        if c.is_zero() {
            SparseVec::zero()
        } else {
            SparseVec { entries: vec![(i as u32, c)] }
        }
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> SparseVec {
        pairs.sort_by_key(|p| p.0);
        let mut entries: Vec<(u32, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match entries.last_mut() {
                Some((j, v)) if *j as usize == i => *v += &c,
                _ => entries.push((i as u32, c)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Scalar]) -> SparseVec {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as u32, c.clone())).collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in &self.entries {
            out[*i as usize] = c.clone();
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i as usize, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&(i as u32), |p| p.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn first_index(&self) -> Option<usize> {
        self.entries.first().map(|p| p.0 as usize)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    /// `self + c * o`.
    pub fn add_scaled(&self, o: &SparseVec, c: &Scalar) -> SparseVec {
        if c.is_zero() || o.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + o.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < o.entries.len() {
            let ia = self.entries.get(a).map(|p| p.0);
            let ib = o.entries.get(b).map(|p| p.0);
            match (ia, ib) {
                (Some(x), Some(y)) if x == y => {
                    let v = &self.entries[a].1 + &(&o.entries[b].1 * c);
                    if !v.is_zero() {
                        out.push((x, v));
                    }
                    a += 1;
                    b += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (Some(_), None) => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (_, Some(y)) => {
                    out.push((y, &o.entries[b].1 * c));
                    b += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, o: &SparseVec) -> SparseVec {
        self.add_scaled(o, &Scalar::one())
    }

    pub fn sub(&self, o: &SparseVec) -> SparseVec {
        self.add_scaled(o, &Scalar::int(-1))
    }

    pub fn neg(&self) -> SparseVec {
        self.scale(&Scalar::int(-1))
    }

    pub fn dot(&self, dense: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in self.iter() {
            if !dense[i].is_zero() {
                acc += c * &dense[i];
            }
        }
        acc
    }

    /// Reindexes every entry; `f` must be injective on the support.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.iter().map(|(i, c)| (f(i), c.clone())).collect())
    }

    /// Tensor product `self ⊗ o` with `o` living in a space of dimension `n_right`.
    pub fn tensor(&self, o: &SparseVec, n_right: usize) -> SparseVec {
        let mut entries = Vec::with_capacity(self.len() * o.len());
        for (i, a) in self.iter() {
            for (j, b) in o.iter() {
                entries.push(((i * n_right + j) as u32, a * b));
            }
        }
        SparseVec { entries }
    }
}

/// Dense accumulator for sums of many sparse contributions.
pub struct Acc {
    vals: Vec<Scalar>,
    touched: Vec<u32>,
    mark: Vec<bool>,
}

impl Acc {
    pub fn new(n: usize) -> Acc {
        Acc { vals: vec![Scalar::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i as u32);
        }
        self.vals[i] += c;
    }

    pub fn add_vec(&mut self, v: &SparseVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(i, &(x * c));
        }
    }

    /// Extracts the accumulated vector and resets the accumulator.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = std::mem::take(&mut self.vals[i as usize]);
            self.mark[i as usize] = false;
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        self.touched.clear();
        SparseVec { entries }
    }
}

/// Hash-map accumulator for index spaces too large for a dense buffer.
#[derive(Default)]
pub struct MapAcc {
    vals: HashMap<u64, Scalar>,
}

impl MapAcc {
    pub fn new() -> MapAcc {
        MapAcc::default()
    }

    pub fn add(&mut self, i: u64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.vals.entry(i).or_default();
        *e += c;
    }

    pub fn into_sorted(self) -> Vec<(u64, Scalar)> {
        let mut v: Vec<(u64, Scalar)> = self.vals.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|p| p.0);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.vals.values().all(|c| c.is_zero())
    }
}

/// Incremental row-echelon basis for independence tests on sparse vectors.
#[derive(Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, SparseVec)>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (p, r) in &self.rows {
            let c = v.get(*p);
            if !c.is_zero() {
                v = v.add_scaled(r, &(-c));
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first_index() {
            None => false,
            Some(p) => {
                let inv = r.get(p).inv();
                self.rows.push((p, r.scale(&inv)));
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.iter().map(|r| r.1.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_scaled_merges() {
        let a = SparseVec::from_pairs(vec![(0, Scalar::one()), (3, Scalar::int(2))]);
        let b = SparseVec::from_pairs(vec![(3, Scalar::int(1)), (5, Scalar::xi())]);
        let c = a.add_scaled(&b, &Scalar::int(-2));
        assert_eq!(c, SparseVec::from_pairs(vec![(0, Scalar::one()), (5, Scalar::gauss(0, -2))]));
    }

    #[test]
    fn acc_roundtrip() {
        let mut acc = Acc::new(10);
        acc.add(4, &Scalar::one());
        acc.add(2, &Scalar::xi());
        acc.add(4, &Scalar::int(-1));
        assert_eq!(acc.take(), SparseVec::single(2, Scalar::xi()));
        assert!(acc.take().is_zero());
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new();
        assert!(e.insert(&SparseVec::from_pairs(vec![(0, Scalar::one()), (1, Scalar::one())])));
        assert!(e.insert(&SparseVec::from_pairs(vec![(1, Scalar::one())])));
        assert!(!e.insert(&SparseVec::from_pairs(vec![(0, Scalar::int(3))])));
        assert_eq!(e.rank(), 2);
    }
}
