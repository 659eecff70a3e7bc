//! The Nichols algebra of a Yetter-Drinfeld module as a braided Hopf
//! algebra: quotient by symmetrizer kernels, induced action and coaction,
//! braided coproduct.

use exactlin::{Acc, Echelon, Scalar, SparseVec};
use kashina::kashina_h;
use nichols::{nichols_dim, quantum_symmetrizer, BraidedSpace, Verdict};
use presentations::{Alphabet, NcPoly, Presentation, PresentedHopf, Relation, RewriteSystem, TermOrder, Word};
use ydcat::{basis_action, YDModule};

use crate::LiftingError;

const H_DIM: usize = 16;

#[derive(Clone, Debug)]
pub struct BraidedHopf {
    pub module: YDModule,
    pub letters: Vec<String>,
    pub presented: PresentedHopf,
    /// Defining relations, by increasing degree.
    pub relations: Vec<NcPoly>,
    pub dim: usize,
    mult: Vec<SparseVec>,
    /// `act[h][i]`: `e_h · r_i`.
    act: Vec<Vec<SparseVec>>,
    /// `coact[i]`: `δ(r_i)` with index `h · dim + j` for `e_h ⊗ r_j`.
    coact: Vec<SparseVec>,
    /// `Δ(r_i)` with index `a · dim + b`.
    comult: Vec<SparseVec>,
    pub unit: usize,
}

fn word_of(index: usize, n: usize, d: usize) -> Word {
    let mut w = vec![0u8; d];
    let mut k = index;
    for slot in (0..d).rev() {
        w[slot] = (k % n) as u8;
        k /= n;
    }
    w
}

/// Irreducible-word counts by degree equal the symmetrizer ranks.
fn hilbert_matches(rs: &RewriteSystem, ranks: &[usize]) -> bool {
    let Ok(words) = rs.irreducible_words() else { return false };
    let mut counts = vec![0usize; ranks.len() + 1];
    for w in &words {
        if w.is_empty() {
            continue;
        }
        if w.len() > ranks.len() {
            return false;
        }
        counts[w.len() - 1] += 1;
    }
    counts[..ranks.len()] == *ranks
}

pub fn braided_nichols_hopf(m: &YDModule, letters: &[String], cap: usize) -> Result<BraidedHopf, LiftingError> {
    let n = m.dim;
    let bs = BraidedSpace::from_yd(m);
    let rep = nichols_dim(&bs, cap);
    if !matches!(rep.verdict, Verdict::Finite { .. }) {
        return Err(LiftingError::Nichols(format!("{}: {:?}", m.name, rep.verdict)));
    }
    let ranks = rep.ranks.clone();
    let names: Vec<&str> = letters.iter().map(|s| s.as_str()).collect();
    let alphabet = Alphabet::new(&[], &names);
    let order = TermOrder::Segmented;
    let rcap = ranks.len() + 2;
    let mut relations: Vec<NcPoly> = Vec::new();
    let mut rs = RewriteSystem::from_relations(alphabet.clone(), order, rcap, &relations)?;
    for d in 2..=ranks.len() {
        if hilbert_matches(&rs, &ranks) {
            break;
        }
        let size = n.pow(d as u32);
        let sym = quantum_symmetrizer(&bs, d, size).map_err(|e| LiftingError::Nichols(e.to_string()))?;
        for k in sym.kernel_basis() {
            let mut p = NcPoly::zero();
            for (idx, c) in k.iter().enumerate() {
                p.add_term(word_of(idx, n, d), c);
            }
            if !rs.normal_form(&p)?.is_zero() {
                relations.push(p);
                rs = RewriteSystem::from_relations(alphabet.clone(), order, rcap, &relations)?;
            }
        }
    }
    if !hilbert_matches(&rs, &ranks) {
        return Err(LiftingError::Nichols(format!(
            "{}: relations up to degree {} do not cut out the Nichols algebra",
            m.name,
            ranks.len()
        )));
    }
    let pres = Presentation {
        name: format!("B({})", m.name),
        alphabet: alphabet.clone(),
        order,
        cap: rcap,
        params: Vec::new(),
        relations: relations
            .iter()
            .map(|p| Relation {
                lhs: p.clone(),
                rhs: NcPoly::zero(),
                text: format!("{} = 0", p.show(&alphabet)),
                line: 0,
            })
            .collect(),
        coproduct: vec![None; n],
        counit: vec![Scalar::zero(); n],
    };
    let presented = PresentedHopf::new(pres)?;
    let mult = presented.multiplication()?;
    let dim = presented.dim();
    let unit = presented.index_of(&[]).expect("1 is a basis word");
    let mut b = BraidedHopf {
        module: m.clone(),
        letters: letters.to_vec(),
        presented,
        relations,
        dim,
        mult,
        act: Vec::new(),
        coact: Vec::new(),
        comult: Vec::new(),
        unit,
    };
    b.fill_structure();
    Ok(b)
}

impl BraidedHopf {
    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Acc::new(self.dim);
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_vec(&self.mult[i * self.dim + j], &(x * y));
            }
        }
        acc.take()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    /// `e_h · v`.
    pub fn act(&self, h: usize, v: &SparseVec) -> SparseVec {
        let mut acc = Acc::new(self.dim);
        for (i, c) in v.iter() {
            acc.add_vec(&self.act[h][i], c);
        }
        acc.take()
    }

    pub fn act_basis(&self, h: usize, i: usize) -> &SparseVec {
        &self.act[h][i]
    }

    pub fn coact_basis(&self, i: usize) -> &SparseVec {
        &self.coact[i]
    }

    pub fn comult_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    pub fn counit(&self, i: usize) -> Scalar {
        if i == self.unit {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    pub fn letter(&self, k: usize) -> usize {
        self.presented.index_of(&[k as u8]).expect("letters are basis words")
    }

    pub fn label(&self, i: usize) -> String {
        self.presented.label(i)
    }

    fn letter_vec(&self, coeffs: impl Iterator<Item = (usize, Scalar)>) -> SparseVec {
        SparseVec::from_pairs(coeffs.map(|(k, c)| (self.letter(k), c)).collect())
    }

    /// `(a ⊗ b)(c ⊗ d) = a (b₋₁ · c) ⊗ b₀ d`.
    pub fn braided_tensor_mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim;
        let mut acc = Acc::new(n * n);
        for (p, u) in x.iter() {
            let (a, b) = (p / n, p % n);
            for (q, v) in y.iter() {
                let (c, d) = (q / n, q % n);
                let uv = u * v;
                for (hj, e) in self.coact[b].iter() {
                    let (h, b0) = (hj / n, hj % n);
                    let left = self.mul(&SparseVec::unit(a), &self.act[h][c]);
                    if left.is_zero() {
                        continue;
                    }
                    let right = self.mul_basis(b0, d);
                    let k = &uv * e;
                    for (l, s) in left.iter() {
                        for (r, t) in right.iter() {
                            acc.add(l * n + r, &(&k * &(s * t)));
                        }
                    }
                }
            }
        }
        acc.take()
    }

    fn fill_structure(&mut self) {
        let n = self.dim;
        let kh = &kashina_h().hopf;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.presented.basis[i].len());
        let split = |s: &Self, i: usize| -> Option<(usize, usize)> {
            let w = &s.presented.basis[i];
            (!w.is_empty()).then(|| (w[0] as usize, s.presented.index_of(&w[1..]).expect("suffix of a basis word")))
        };
        // action of every H basis element
        let mats: Vec<exactlin::Mat> = (0..H_DIM).map(|h| basis_action(&self.module.action, h)).collect();
        self.act = vec![vec![SparseVec::zero(); n]; H_DIM];
        for &i in &order {
            for h in 0..H_DIM {
                let v = match split(self, i) {
                    None => SparseVec::single(self.unit, kh.counit[h].clone()),
                    Some((l, rest)) => {
                        let mut acc = Acc::new(n);
                        for (p, c) in kh.delta_basis(h).iter() {
                            let (h1, h2) = (p / H_DIM, p % H_DIM);
                            let hv = self.letter_vec((0..self.module.dim).map(|k| (k, mats[h1].get(k, l).clone())));
                            let prod = self.mul(&hv, &self.act[h2][rest]);
                            acc.add_vec(&prod, c);
                        }
                        acc.take()
                    }
                };
                self.act[h][i] = v;
            }
        }
        // coaction, multiplicative
        self.coact = vec![SparseVec::zero(); n];
        for &i in &order {
            let v = match split(self, i) {
                None => SparseVec::unit(self.unit),
                Some((l, rest)) => {
                    let mut acc = Acc::new(H_DIM * n);
                    for (h1, c1) in (0..H_DIM).map(|h| (h, &self.module.coaction[h])) {
                        for k in 0..self.module.dim {
                            let a = c1.get(k, l);
                            if a.is_zero() {
                                continue;
                            }
                            for (q, b) in self.coact[rest].iter() {
                                let (h2, j) = (q / n, q % n);
                                let hh = kh.mul_basis(h1, h2);
                                let rr = self.mul_basis(self.letter(k), j);
                                let ab = a * b;
                                for (g, s) in hh.iter() {
                                    for (r, t) in rr.iter() {
                                        acc.add(g * n + r, &(&ab * &(s * t)));
                                    }
                                }
                            }
                        }
                    }
                    acc.take()
                }
            };
            self.coact[i] = v;
        }
        // braided coproduct from primitive letters
        self.comult = vec![SparseVec::zero(); n];
        for &i in &order {
            let v = match split(self, i) {
                None => SparseVec::unit(self.unit * n + self.unit),
                Some((l, rest)) => {
                    let li = self.letter(l);
                    let dl = SparseVec::from_pairs(vec![
                        (li * n + self.unit, Scalar::one()),
                        (self.unit * n + li, Scalar::one()),
                    ]);
                    self.braided_tensor_mul(&dl, &self.comult[rest])
                }
            };
            self.comult[i] = v;
        }
    }

    /// Relations whose degree is at least `d`.
    pub fn relations_of_degree_at_least(&self, d: usize) -> Vec<NcPoly> {
        self.relations.iter().filter(|p| p.terms().all(|(w, _)| w.len() >= d)).cloned().collect()
    }

    /// Degree-two relation space `ker(1 + c)` as vectors over `V ⊗ V`.
    pub fn quadratic_space(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new();
        for v in nichols::quadratic_relations(&BraidedSpace::from_yd(&self.module)) {
            e.insert(&SparseVec::from_dense(&v));
        }
        e.basis()
    }
}
