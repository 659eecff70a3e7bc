//! Hopf data on the irreducible-monomial basis of a presented algebra.

use std::collections::HashMap;

use exactlin::{Acc, Scalar, SparseVec};
use hopf_core::{with_solved_antipode, Generator, HopfData};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::parse::Presentation;
use crate::poly::{NcPoly, TPoly};
use crate::rewrite::{confluence_check, ConfluenceReport, RewriteSystem};
use crate::word::Word;
use crate::PresentationError;

#[derive(Clone, Debug)]
pub struct PresentedHopf {
    pub presentation: Presentation,
    pub rs: RewriteSystem,
    pub confluence: ConfluenceReport,
    /// Irreducible monomials, in basis order.
    pub basis: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl PresentedHopf {
    /// Orients the relations, checks confluence and enumerates the
    /// irreducible monomials. Does not fail on unresolved overlaps; those
    /// are recorded and stop `build_hopf`.
    pub fn new(presentation: Presentation) -> Result<PresentedHopf, PresentationError> {
        let rs = RewriteSystem::from_relations(
            presentation.alphabet.clone(),
            presentation.order,
            presentation.cap,
            &presentation.relation_polys(),
        )?;
        let confluence = confluence_check(&rs)?;
        let basis = rs.irreducible_words()?;
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(PresentedHopf { presentation, rs, confluence, basis, index })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn label(&self, i: usize) -> String {
        self.rs.alphabet.show(&self.basis[i])
    }

    /// Normal form as a coordinate vector.
    pub fn coords(&self, p: &NcPoly) -> Result<SparseVec, PresentationError> {
        let r = self.rs.normal_form(p)?;
        self.to_sparse(&r)
    }

    fn to_sparse(&self, r: &NcPoly) -> Result<SparseVec, PresentationError> {
        let pairs = r
            .terms()
            .map(|(w, c)| {
                self.index_of(w).map(|i| (i, c.clone())).ok_or_else(|| PresentationError::NonConfluent {
                    unresolved: vec![format!("normal form {} is not a basis word", self.rs.alphabet.show(w))],
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseVec::from_pairs(pairs))
    }

    fn tensor_coords(&self, t: &TPoly) -> Result<SparseVec, PresentationError> {
        let n = self.dim();
        let mut red = self.rs.reducer();
        let mut acc = Acc::new(n * n);
        for ((u, v), c) in t.terms() {
            let a = self.to_sparse(&red.reduce_word(u)?)?;
            let b = self.to_sparse(&red.reduce_word(v)?)?;
            for (i, x) in a.iter() {
                for (j, y) in b.iter() {
                    acc.add(i * n + j, &(&(x * y) * c));
                }
            }
        }
        Ok(acc.take())
    }

    /// Multiplication table via left multiplication by letters.
    fn algebra(&self) -> Result<Vec<SparseVec>, PresentationError> {
        let n = self.dim();
        let nl = self.rs.alphabet.len();
        let left: Vec<Vec<SparseVec>> = (0..nl as u8)
            .into_par_iter()
            .map_init(
                || self.rs.reducer(),
                |red, g| {
                    self.basis
                        .iter()
                        .map(|w| {
                            let mut gw = vec![g];
                            gw.extend_from_slice(w);
                            self.to_sparse(&red.reduce_word(&gw)?)
                        })
                        .collect::<Result<Vec<_>, _>>()
                },
            )
            .collect::<Result<_, _>>()?;
        let mult: Vec<SparseVec> = (0..n * n)
            .into_par_iter()
            .map(|p| {
                let (i, j) = (p / n, p % n);
                let mut v = SparseVec::unit(j);
                for &g in self.basis[i].iter().rev() {
                    let mut acc = Acc::new(n);
                    for (k, c) in v.iter() {
                        acc.add_vec(&left[g as usize][k], c);
                    }
                    v = acc.take();
                }
                v
            })
            .collect();
        Ok(mult)
    }

    /// Algebra-only structure constants (no coproduct needed).
    pub fn multiplication(&self) -> Result<Vec<SparseVec>, PresentationError> {
        if !self.confluence.is_confluent() {
            return Err(self.non_confluent());
        }
        self.algebra()
    }

    fn non_confluent(&self) -> PresentationError {
        PresentationError::NonConfluent {
            unresolved: self
                .confluence
                .unresolved
                .iter()
                .map(|a| format!("{} ({}): {}", a.word, a.kind, a.residue))
                .collect(),
        }
    }

    /// Images of the basis words of letters under an algebra map given on
    /// letters by `images` (vectors of a target algebra `tgt`), extended
    /// along basis words.
    pub fn extend_to_basis(&self, tgt: &HopfData, images: &[SparseVec]) -> Vec<SparseVec> {
        self.basis
            .iter()
            .map(|w| {
                let mut v = tgt.one();
                for &g in w {
                    v = tgt.mul(&v, &images[g as usize]);
                }
                v
            })
            .collect()
    }
}

/// Outcome of the staged build.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub name: String,
    pub rules: Vec<String>,
    pub implied_relations: Vec<String>,
    pub confluent: bool,
    pub unresolved: Vec<String>,
    pub dim: Option<usize>,
    pub coproduct_ok: Option<bool>,
    pub counit_ok: Option<bool>,
    /// First relation whose coproduct image does not vanish.
    pub failing_relation: Option<String>,
    pub antipode_solved: Option<bool>,
    pub error: Option<String>,
}

/// Structure constants on the irreducible-monomial basis, `Δ` extended
/// multiplicatively and checked on every relation, antipode solved.
pub fn build_hopf(p: &PresentedHopf) -> Result<HopfData, PresentationError> {
    let h = bialgebra(p)?;
    with_solved_antipode(h).map_err(PresentationError::Hopf)
}

/// Everything except the antipode.
pub fn bialgebra(p: &PresentedHopf) -> Result<HopfData, PresentationError> {
    if !p.confluence.is_confluent() {
        return Err(p.non_confluent());
    }
    let pres = &p.presentation;
    let a = &pres.alphabet;
    let n = p.dim();
    let mult = p.algebra()?;
    let mut dgen = Vec::new();
    for (g, d) in pres.coproduct.iter().enumerate() {
        let d = d.as_ref().ok_or_else(|| PresentationError::MissingCoproduct(a.names[g].clone()))?;
        dgen.push(p.tensor_coords(d)?);
    }
    let unit = p.coords(&NcPoly::one())?;
    let counit: Vec<Scalar> =
        p.basis.iter().map(|w| w.iter().fold(Scalar::one(), |acc, &g| &acc * &pres.counit[g as usize])).collect();
    let labels: Vec<String> = (0..n).map(|i| p.label(i)).collect();
    // Δ on basis words, shortest first: a suffix of an irreducible word is irreducible.
    let pre = HopfData::new(n, mult.clone(), unit.clone(), vec![SparseVec::zero(); n], counit.clone(), labels.clone())
        .map_err(PresentationError::Hopf)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| p.basis[i].len());
    let mut comult: Vec<Option<SparseVec>> = vec![None; n];
    let one_one = SparseVec::unit(p.index_of(&[]).expect("1 is a basis word") * n + p.index_of(&[]).unwrap());
    for &i in &order {
        let w = &p.basis[i];
        let d = if w.is_empty() {
            one_one.clone()
        } else {
            let rest = p.index_of(&w[1..]).expect("suffix of an irreducible word");
            let dr = comult[rest].as_ref().expect("shorter words first");
            pre.tensor_mul(&dgen[w[0] as usize], dr)
        };
        comult[i] = Some(d);
    }
    let comult: Vec<SparseVec> = comult.into_iter().map(|d| d.unwrap()).collect();
    let gens: Vec<Generator> = (0..a.len())
        .map(|g| Generator {
            name: a.names[g].clone(),
            vec: SparseVec::unit(p.index_of(&[g as u8]).expect("letters are irreducible")),
        })
        .collect();
    let words: Vec<Vec<usize>> = p.basis.iter().map(|w| w.iter().map(|&g| g as usize).collect()).collect();
    let h = HopfData::new(n, mult, unit, comult, counit, labels)
        .map_err(PresentationError::Hopf)?
        .with_generators(gens)
        .with_basis_words(words);
    // Δ and ε must kill every relation.
    for r in &pres.relations {
        let rel = r.poly();
        let mut acc = Acc::new(n * n);
        let mut eps = Scalar::zero();
        for (w, c) in rel.terms() {
            let mut d = one_one.clone();
            let mut e = Scalar::one();
            for &g in w {
                d = h.tensor_mul(&d, &dgen[g as usize]);
                e = &e * &pres.counit[g as usize];
            }
            acc.add_vec(&d, c);
            eps += &(&e * c);
        }
        let res = acc.take();
        if !res.is_zero() {
            return Err(PresentationError::CoproductNotWellDefined {
                relation: r.text.clone(),
                residue: show_tensor(&h, &res),
            });
        }
        if !eps.is_zero() {
            return Err(PresentationError::CounitNotWellDefined { relation: r.text.clone() });
        }
    }
    Ok(h)
}

fn show_tensor(h: &HopfData, v: &SparseVec) -> String {
    let n = h.dim;
    let parts: Vec<String> =
        v.iter().take(6).map(|(p, c)| format!("({c})*{}@{}", h.labels[p / n], h.labels[p % n])).collect();
    let more = if v.len() > 6 { format!(" + … ({} terms)", v.len()) } else { String::new() };
    format!("{}{more}", parts.join(" + "))
}

/// Staged build that records where it stops.
pub fn build_report(pres: Presentation) -> (BuildReport, Option<HopfData>) {
    let mut rep = BuildReport {
        name: pres.name.clone(),
        rules: Vec::new(),
        implied_relations: Vec::new(),
        confluent: false,
        unresolved: Vec::new(),
        dim: None,
        coproduct_ok: None,
        counit_ok: None,
        failing_relation: None,
        antipode_solved: None,
        error: None,
    };
    let p = match PresentedHopf::new(pres) {
        Ok(p) => p,
        Err(e) => {
            rep.error = Some(e.to_string());
            return (rep, None);
        }
    };
    rep.rules = p.rs.show_rules();
    rep.implied_relations = p.rs.implied.iter().map(|&i| p.presentation.relations[i].text.clone()).collect();
    rep.confluent = p.confluence.is_confluent();
    rep.unresolved =
        p.confluence.unresolved.iter().map(|a| format!("{} ({}): {}", a.word, a.kind, a.residue)).collect();
    rep.dim = Some(p.dim());
    if !rep.confluent {
        rep.error = Some(p.non_confluent().to_string());
        return (rep, None);
    }
    let h = match bialgebra(&p) {
        Ok(h) => {
            rep.coproduct_ok = Some(true);
            rep.counit_ok = Some(true);
            h
        }
        Err(e) => {
            match &e {
                PresentationError::CoproductNotWellDefined { relation, .. } => {
                    rep.coproduct_ok = Some(false);
                    rep.failing_relation = Some(relation.clone());
                }
                PresentationError::CounitNotWellDefined { relation } => {
                    rep.coproduct_ok = Some(true);
                    rep.counit_ok = Some(false);
                    rep.failing_relation = Some(relation.clone());
                }
                _ => {}
            }
            rep.error = Some(e.to_string());
            return (rep, None);
        }
    };
    match with_solved_antipode(h) {
        Ok(h) => {
            rep.antipode_solved = Some(true);
            (rep, Some(h))
        }
        Err(e) => {
            rep.antipode_solved = Some(false);
            rep.error = Some(e.to_string());
            (rep, None)
        }
    }
}
