//! Hopf automorphisms of H: the stored table, its verification, closure,
//! and an exhaustive re-derivation by solving the polynomial constraints.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use exactlin::{Scalar, SparseVec};
use hopf_core::{verify_hopf_map, MapReport};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::polysys::{solve, Poly, SolveError};
use crate::{h_index, h_label, h_mul_basis, h_unindex, parse_monomial, KashinaH, DIM};

const TABLE: &str = include_str!("../data/automorphisms.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    /// 1-based table index.
    pub index: usize,
    pub fx: usize,
    pub fy: usize,
    pub ft: SparseVec,
    /// Image of every basis element.
    pub images: Vec<SparseVec>,
}

impl Automorphism {
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        apply(&self.images, v)
    }
}

pub fn apply(images: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::zero();
    for (i, c) in v.iter() {
        out = out.add_scaled(&images[i], c);
    }
    out
}

/// Extends generator images multiplicatively: `x^i y^j t^k ↦ f(x)^i f(y)^j f(t)^k`.
pub fn extend_generator_images(kh: &KashinaH, fx: &SparseVec, fy: &SparseVec, ft: &SparseVec) -> Vec<SparseVec> {
    let h = &kh.hopf;
    (0..DIM)
        .map(|m| {
            let (i, j, k) = h_unindex(m);
            let mut v = h.one();
            for _ in 0..i {
                v = h.mul(&v, fx);
            }
            for _ in 0..j {
                v = h.mul(&v, fy);
            }
            for _ in 0..k {
                v = h.mul(&v, ft);
            }
            v
        })
        .collect()
}

fn parse_row(kh: &KashinaH, line: &str) -> Automorphism {
    let mut f = line.split_whitespace();
    let index: usize = f.next().unwrap().parse().unwrap();
    let fx = parse_monomial(f.next().unwrap()).unwrap();
    let fy = parse_monomial(f.next().unwrap()).unwrap();
    let ft = SparseVec::from_pairs(
        f.map(|term| {
            let (c, m) = term.split_once(':').unwrap();
            (parse_monomial(m).unwrap(), c.parse::<Scalar>().unwrap())
        })
        .collect(),
    );
    let images = extend_generator_images(kh, &SparseVec::unit(fx), &SparseVec::unit(fy), &ft);
    Automorphism { index, fx, fy, ft, images }
}

/// The 64 stored automorphisms `τ_1 … τ_64` (for the shared H instance).
pub fn automorphism_table() -> &'static [Automorphism] {
    static T: OnceLock<Vec<Automorphism>> = OnceLock::new();
    T.get_or_init(|| {
        let kh = crate::kashina_h();
        TABLE.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).map(|l| parse_row(kh, l)).collect()
    })
}

pub fn tau(i: usize) -> &'static Automorphism {
    &automorphism_table()[i - 1]
}

/// Hopf-map report for every table entry.
pub fn verify_automorphism_table(kh: &KashinaH) -> Vec<(usize, MapReport)> {
    automorphism_table().par_iter().map(|a| (a.index, verify_hopf_map(&kh.hopf, &kh.hopf, &a.images))).collect()
}

fn key(images: &[SparseVec]) -> String {
    format!("{images:?}")
}

/// Table index of an automorphism given by basis images, if present.
pub fn find_in_table(images: &[SparseVec]) -> Option<usize> {
    static K: OnceLock<HashMap<String, usize>> = OnceLock::new();
    let m = K.get_or_init(|| automorphism_table().iter().map(|a| (key(&a.images), a.index)).collect());
    m.get(&key(images)).copied()
}

/// `(f ∘ g)` on basis images.
pub fn compose(f: &[SparseVec], g: &[SparseVec]) -> Vec<SparseVec> {
    g.iter().map(|v| apply(f, v)).collect()
}

/// Order of the group generated by the given table entries (BFS closure).
pub fn closure_order(generators: &[usize]) -> usize {
    let gens: Vec<&[SparseVec]> = generators.iter().map(|&i| tau(i).images.as_slice()).collect();
    let id: Vec<SparseVec> = (0..DIM).map(SparseVec::unit).collect();
    let mut seen: HashMap<String, ()> = HashMap::new();
    seen.insert(key(&id), ());
    let mut q = VecDeque::from([id]);
    while let Some(e) = q.pop_front() {
        for g in &gens {
            let n = compose(g, &e);
            let k = key(&n);
            if seen.insert(k, ()).is_none() {
                q.push_back(n);
            }
        }
    }
    seen.len()
}

/// Elementwise order of a table entry.
pub fn element_order(i: usize) -> usize {
    let g = &tau(i).images;
    let id: Vec<SparseVec> = (0..DIM).map(SparseVec::unit).collect();
    let mut e = g.clone();
    let mut n = 1;
    while e != id {
        e = compose(g, &e);
        n += 1;
    }
    n
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairResult {
    pub fx: String,
    pub fy: String,
    pub solutions: usize,
    /// Table indices of the solutions, in solver order.
    pub table_indices: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub general_ansatz: bool,
    pub pairs: Vec<PairResult>,
    pub total: usize,
    /// Solution set equals the stored table as a set of basis-image matrices.
    pub matches_table: bool,
}

type PElem = Vec<Poly>;

fn pmul(a: &PElem, b: &PElem, nv: usize) -> PElem {
    let mut r = vec![Poly::zero(nv); DIM];
    for i in 0..DIM {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..DIM {
            if !b[j].is_zero() {
                let k = h_mul_basis(i, j);
                r[k] = r[k].add(&a[i].mul(&b[j]));
            }
        }
    }
    r
}

fn pconst(v: &SparseVec, nv: usize) -> PElem {
    (0..DIM).map(|i| Poly::constant(nv, v.get(i))).collect()
}

fn ptensor(a: &PElem, b: &PElem, nv: usize) -> PElem {
    let mut r = vec![Poly::zero(nv); DIM * DIM];
    for i in 0..DIM {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..DIM {
            if !b[j].is_zero() {
                r[i * DIM + j] = a[i].mul(&b[j]);
            }
        }
    }
    r
}

fn eqs_from(lhs: &[Poly], rhs: &[Poly], out: &mut Vec<Poly>) {
    for (l, r) in lhs.iter().zip(rhs) {
        let d = l.sub(r);
        if !d.is_zero() && !out.contains(&d) {
            out.push(d);
        }
    }
}

/// Solutions `f(t)` for fixed group-like images `f(x) = fx`, `f(y) = fy`.
/// The ansatz is `f(t) = Σ_g k_g g t` over the 8 group-likes, or an
/// arbitrary element of H when `general` is set.
pub fn solve_t_images(kh: &KashinaH, fx: usize, fy: usize, general: bool) -> Result<Vec<SparseVec>, SolveError> {
    let support: Vec<usize> =
        if general { (0..DIM).collect() } else { (0..8).map(|g| h_mul_basis(g, h_index(0, 0, 1))).collect() };
    let nv = support.len();
    let mut ft = vec![Poly::zero(nv); DIM];
    for (v, &m) in support.iter().enumerate() {
        ft[m] = Poly::var(nv, v);
    }
    let x = pconst(&SparseVec::unit(fx), nv);
    let y = pconst(&SparseVec::unit(fy), nv);
    let one = pconst(&SparseVec::unit(0), nv);
    let mut eqs = Vec::new();
    // f(t)^2 = f(x)^2 f(y), f(t)f(x) = f(x)^3 f(t), f(t)f(y) = f(y)f(t)
    let x2 = pmul(&x, &x, nv);
    eqs_from(&pmul(&ft, &ft, nv), &pmul(&x2, &y, nv), &mut eqs);
    eqs_from(&pmul(&ft, &x, nv), &pmul(&pmul(&x2, &x, nv), &ft, nv), &mut eqs);
    eqs_from(&pmul(&ft, &y, nv), &pmul(&y, &ft, nv), &mut eqs);
    // Δ(f(t)) = ½((1+f(y))f(t) ⊗ f(t) + (1-f(y))f(t) ⊗ f(x)^2 f(t))
    let mut dft = vec![Poly::zero(nv); DIM * DIM];
    for m in 0..DIM {
        if ft[m].is_zero() {
            continue;
        }
        for (p, c) in kh.hopf.delta_basis(m).iter() {
            dft[p] = dft[p].add(&ft[m].scale(c));
        }
    }
    let half = Scalar::half();
    let onep: PElem = one.iter().zip(&y).map(|(a, b)| a.add(b)).collect();
    let onem: PElem = one.iter().zip(&y).map(|(a, b)| a.sub(b)).collect();
    let r1 = ptensor(&pmul(&onep, &ft, nv), &ft, nv);
    let r2 = ptensor(&pmul(&onem, &ft, nv), &pmul(&x2, &ft, nv), nv);
    let rhs: PElem = r1.iter().zip(&r2).map(|(a, b)| a.add(b).scale(&half)).collect();
    eqs_from(&dft, &rhs, &mut eqs);
    // ε(f(t)) = 1
    let mut ep = Poly::constant(nv, -Scalar::one());
    for m in 0..DIM {
        ep = ep.add(&ft[m].scale(&kh.hopf.counit[m]));
    }
    eqs_from(&[ep], &[Poly::zero(nv)], &mut eqs);
    let sols = solve(&eqs)?;
    Ok(sols.into_iter().map(|s| SparseVec::from_pairs(support.iter().zip(s).map(|(&m, c)| (m, c)).collect())).collect())
}

/// Sweeps `f(x) ∈ {x, x^3, xy, x^3y}`, `f(y) ∈ {y, x^2 y}`, solves for `f(t)`,
/// keeps bijective Hopf maps, and compares the result with the table.
pub fn exhaustive_automorphism_search(kh: &KashinaH, general: bool) -> Result<SearchReport, SolveError> {
    let fxs = [h_index(1, 0, 0), h_index(3, 0, 0), h_index(1, 1, 0), h_index(3, 1, 0)];
    let fys = [h_index(0, 1, 0), h_index(2, 1, 0)];
    let combos: Vec<(usize, usize)> = fxs.iter().flat_map(|&a| fys.iter().map(move |&b| (a, b))).collect();
    let results: Vec<Result<(PairResult, Vec<String>), SolveError>> = combos
        .par_iter()
        .map(|&(fx, fy)| {
            let mut idx = Vec::new();
            let mut keys = Vec::new();
            for ft in solve_t_images(kh, fx, fy, general)? {
                let images = extend_generator_images(kh, &SparseVec::unit(fx), &SparseVec::unit(fy), &ft);
                if verify_hopf_map(&kh.hopf, &kh.hopf, &images).is_isomorphism() {
                    idx.push(find_in_table(&images));
                    keys.push(key(&images));
                }
            }
            Ok((PairResult { fx: h_label(fx), fy: h_label(fy), solutions: idx.len(), table_indices: idx }, keys))
        })
        .collect();
    let mut pairs = Vec::new();
    let mut found: Vec<String> = Vec::new();
    for r in results {
        let (p, k) = r?;
        pairs.push(p);
        found.extend(k);
    }
    found.sort();
    found.dedup();
    let mut table: Vec<String> = automorphism_table().iter().map(|a| key(&a.images)).collect();
    table.sort();
    let total = pairs.iter().map(|p| p.solutions).sum();
    Ok(SearchReport { general_ansatz: general, pairs, total, matches_table: found == table && total == table.len() })
}
