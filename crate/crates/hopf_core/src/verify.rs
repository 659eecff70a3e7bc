//! Axiom verification.

use exactlin::{Acc, Echelon, MapAcc, SparseVec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::HopfData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    /// First failing basis tuple (indices), if any.
    pub witness: Option<Vec<usize>>,
    /// `exhaustive` or `generator-certificate`.
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every basis tuple.
    Exhaustive,
    /// Associativity and the bialgebra axiom are checked with one factor
    /// ranging over algebra generators, plus a certificate that words in
    /// the generators span the algebra. All other axioms stay exhaustive.
    GeneratorCertificate,
    /// Exhaustive up to dimension 64, certificate above when generators exist.
    Auto,
}

fn check(name: &str, witness: Option<Vec<usize>>, method: &str) -> AxiomCheck {
    AxiomCheck { name: name.into(), pass: witness.is_none(), witness, method: method.into() }
}

/// Smallest failing index among `0..n` for a parallel predicate.
fn first_failure<F>(n: usize, f: F) -> Option<Vec<usize>>
where
    F: Fn(usize) -> Option<Vec<usize>> + Sync + Send,
{
    (0..n).into_par_iter().filter_map(f).min()
}

pub fn verify_hopf(h: &HopfData) -> AxiomReport {
    verify_hopf_with(h, VerifyMode::Auto)
}

pub fn verify_hopf_with(h: &HopfData, mode: VerifyMode) -> AxiomReport {
    let use_cert = match mode {
        VerifyMode::Exhaustive => false,
        VerifyMode::GeneratorCertificate => true,
        VerifyMode::Auto => h.dim > 64 && !h.generators.is_empty(),
    };
    let mut checks = Vec::new();
    checks.push(check("unit", unit_failure(h), "exhaustive"));
    if use_cert {
        let span = span_certificate(h);
        let gens: Vec<SparseVec> = h.generators.iter().map(|g| g.vec.clone()).collect();
        let span_w = if span { None } else { Some(vec![]) };
        checks.push(check("generators-span", span_w, "generator-certificate"));
        checks.push(check("associativity", assoc_generators(h, &gens), "generator-certificate"));
    } else {
        checks.push(check("associativity", assoc_exhaustive(h), "exhaustive"));
    }
    checks.push(check("coassociativity", coassoc(h), "exhaustive"));
    checks.push(check("counit", counit(h), "exhaustive"));
    if use_cert {
        let gens: Vec<SparseVec> = h.generators.iter().map(|g| g.vec.clone()).collect();
        checks.push(check("bialgebra", bialg_generators(h, &gens), "generator-certificate"));
    } else {
        checks.push(check("bialgebra", bialg_exhaustive(h), "exhaustive"));
    }
    if h.antipode.is_some() {
        checks.push(check("antipode", antipode_failure(h), "exhaustive"));
    } else {
        checks.push(AxiomCheck { name: "antipode".into(), pass: false, witness: None, method: "missing".into() });
    }
    AxiomReport { checks }
}

fn unit_failure(h: &HopfData) -> Option<Vec<usize>> {
    let one = h.one();
    (0..h.dim)
        .find(|&i| {
            let e = SparseVec::unit(i);
            h.mul(&one, &e) != e || h.mul(&e, &one) != e
        })
        .map(|i| vec![i])
}

fn assoc_exhaustive(h: &HopfData) -> Option<Vec<usize>> {
    let n = h.dim;
    first_failure(n, |i| {
        let mut acc = Acc::new(n);
        for j in 0..n {
            let ij = h.mul_basis(i, j);
            for k in 0..n {
                for (l, c) in ij.iter() {
                    acc.add_vec(h.mul_basis(l, k), c);
                }
                let lhs = acc.take();
                for (l, c) in h.mul_basis(j, k).iter() {
                    acc.add_vec(h.mul_basis(i, l), c);
                }
                let rhs = acc.take();
                if lhs != rhs {
                    return Some(vec![i, j, k]);
                }
            }
        }
        None
    })
}

/// `(g u) v = g (u v)` for generators `g` and basis `u, v`.
fn assoc_generators(h: &HopfData, gens: &[SparseVec]) -> Option<Vec<usize>> {
    let n = h.dim;
    let tasks: Vec<(usize, usize)> = (0..gens.len()).flat_map(|g| (0..n).map(move |u| (g, u))).collect();
    tasks
        .par_iter()
        .filter_map(|&(g, u)| {
            let gu = h.mul(&gens[g], &SparseVec::unit(u));
            for v in 0..n {
                let ev = SparseVec::unit(v);
                if h.mul(&gu, &ev) != h.mul(&gens[g], h.mul_basis(u, v)) {
                    return Some(vec![g, u, v]);
                }
            }
            None
        })
        .min()
}

/// True iff words in the generators span the algebra.
pub fn span_certificate(h: &HopfData) -> bool {
    let mut ech = Echelon::new();
    let mut frontier = vec![h.one()];
    ech.insert(&h.one());
    while let Some(v) = frontier.pop() {
        for g in &h.generators {
            let w = h.mul(&g.vec, &v);
            if ech.insert(&w) {
                frontier.push(w);
            }
        }
        if ech.rank() == h.dim {
            return true;
        }
    }
    ech.rank() == h.dim
}

fn coassoc(h: &HopfData) -> Option<Vec<usize>> {
    let n = h.dim;
    let nn = (n * n) as u64;
    first_failure(n, |i| {
        let d = h.delta_basis(i);
        let mut l = MapAcc::new();
        let mut r = MapAcc::new();
        for (p, c) in d.iter() {
            let (a, b) = (p / n, p % n);
            for (q, e) in h.delta_basis(a).iter() {
                l.add(q as u64 * n as u64 + b as u64, &(c * e));
            }
            for (q, e) in h.delta_basis(b).iter() {
                r.add(a as u64 * nn + q as u64, &(c * e));
            }
        }
        if l.into_sorted() != r.into_sorted() {
            Some(vec![i])
        } else {
            None
        }
    })
}

fn counit(h: &HopfData) -> Option<Vec<usize>> {
    let n = h.dim;
    first_failure(n, |i| {
        let d = h.delta_basis(i);
        let mut l = Acc::new(n);
        let mut r = Acc::new(n);
        for (p, c) in d.iter() {
            let (a, b) = (p / n, p % n);
            l.add(b, &(c * &h.counit[a]));
            r.add(a, &(c * &h.counit[b]));
        }
        let e = SparseVec::unit(i);
        if l.take() != e || r.take() != e {
            Some(vec![i])
        } else {
            None
        }
    })
}

fn bialg_unit_failure(h: &HopfData) -> bool {
    let one = h.one();
    h.delta(&one) != h.tensor(&one, &one) || !h.counit_of(&one).is_one()
}

fn bialg_pair(h: &HopfData, a: &SparseVec, b: &SparseVec) -> bool {
    let ab = h.mul(a, b);
    h.delta(&ab) == h.tensor_mul(&h.delta(a), &h.delta(b)) && h.counit_of(&ab) == &h.counit_of(a) * &h.counit_of(b)
}

fn bialg_exhaustive(h: &HopfData) -> Option<Vec<usize>> {
    if bialg_unit_failure(h) {
        return Some(vec![]);
    }
    let n = h.dim;
    first_failure(n, |i| {
        let ei = SparseVec::unit(i);
        (0..n).find(|&j| !bialg_pair(h, &ei, &SparseVec::unit(j))).map(|j| vec![i, j])
    })
}

fn bialg_generators(h: &HopfData, gens: &[SparseVec]) -> Option<Vec<usize>> {
    if bialg_unit_failure(h) {
        return Some(vec![]);
    }
    let n = h.dim;
    let tasks: Vec<(usize, usize)> = (0..gens.len()).flat_map(|g| (0..n).map(move |u| (g, u))).collect();
    tasks.par_iter().filter(|&&(g, u)| !bialg_pair(h, &gens[g], &SparseVec::unit(u))).map(|&(g, u)| vec![g, u]).min()
}

fn antipode_failure(h: &HopfData) -> Option<Vec<usize>> {
    let n = h.dim;
    let s = h.antipode.as_ref().expect("antipode present");
    first_failure(n, |i| {
        let mut l = Acc::new(n);
        let mut r = Acc::new(n);
        for (p, c) in h.delta_basis(i).iter() {
            let (a, b) = (p / n, p % n);
            h.mul_into(&s[a], &SparseVec::unit(b), c, &mut l);
            h.mul_into(&SparseVec::unit(a), &s[b], c, &mut r);
        }
        let target = h.unit.scale(&h.counit[i]);
        if l.take() != target || r.take() != target {
            Some(vec![i])
        } else {
            None
        }
    })
}
