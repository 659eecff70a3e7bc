//! The infinitesimal braiding of a presented lifting: the Yetter-Drinfeld
//! module spanned by the braided letters, with action by the adjoint
//! action and coaction read off the coproduct.

use exactlin::{Mat, Scalar};
use kashina::{h_index, kashina_h};
use presentations::{NcPoly, Presentation, RewriteSystem, Word};
use serde::{Deserialize, Serialize};
use ydcat::{module_by_name, yd_isomorphic, YDModule};

use crate::LiftingError;

const H_DIM: usize = 16;

/// Letters of the presentation viewed as pieces of `T(V) # H`.
pub struct SmashView {
    /// Alphabet positions of the braided letters, in order.
    pub braided: Vec<u8>,
    /// Alphabet positions of `x, y, t`.
    pub group: [u8; 3],
    /// Rewriting system of the relations of braided degree at most one.
    pub rs: RewriteSystem,
}

impl SmashView {
    pub fn new(pres: &Presentation) -> Result<SmashView, LiftingError> {
        let a = &pres.alphabet;
        let braided: Vec<u8> = (0..a.len() as u8).filter(|&l| a.is_braided(l)).collect();
        let find = |n: &str| a.index(n).ok_or_else(|| LiftingError::Module(format!("group letter {n} missing")));
        let group = [find("x")?, find("y")?, find("t")?];
        let low: Vec<NcPoly> = pres
            .relations
            .iter()
            .map(|r| r.poly())
            .filter(|p| p.terms().all(|(w, _)| a.braided_degree(w) <= 1))
            .collect();
        let rs = RewriteSystem::from_relations(a.clone(), pres.order, pres.cap, &low)?;
        Ok(SmashView { braided, group, rs })
    }

    /// The word `x^i y^j t^k` of an H basis index.
    pub fn h_word(&self, h: usize) -> Word {
        let (i, j, k) = kashina::h_unindex(h);
        let mut w = vec![self.group[0]; i];
        w.extend(std::iter::repeat_n(self.group[1], j));
        w.extend(std::iter::repeat_n(self.group[2], k));
        w
    }

    /// H basis index of a group word already in normal form.
    pub fn h_of_word(&self, w: &[u8]) -> Option<usize> {
        let count = |g: u8| w.iter().filter(|&&l| l == g).count();
        let (i, j, k) = (count(self.group[0]), count(self.group[1]), count(self.group[2]));
        if i + j + k != w.len() || i > 3 || j > 1 || k > 1 {
            return None;
        }
        let idx = h_index(i, j, k);
        (self.h_word(idx) == w).then_some(idx)
    }

    /// An element of H as a polynomial in the group letters.
    pub fn h_poly(&self, v: &exactlin::SparseVec) -> NcPoly {
        let mut p = NcPoly::zero();
        for (h, c) in v.iter() {
            p.add_term(self.h_word(h), c);
        }
        p
    }

    /// Coordinates over H of a polynomial in the group letters.
    pub fn h_coords(&self, p: &NcPoly) -> Result<Vec<(usize, Scalar)>, LiftingError> {
        let r = self.rs.normal_form(p)?;
        r.terms()
            .map(|(w, c)| {
                self.h_of_word(w)
                    .map(|h| (h, c.clone()))
                    .ok_or_else(|| LiftingError::Module(format!("{} is not an element of H", self.rs.alphabet.show(w))))
            })
            .collect()
    }

    fn braided_pos(&self, l: u8) -> Option<usize> {
        self.braided.iter().position(|&b| b == l)
    }
}

/// Module read off a presentation, together with the letter names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractedModule {
    pub module: YDModule,
    pub letters: Vec<String>,
    /// Failed Yetter-Drinfeld axiom, if any.
    pub yd_failure: Option<String>,
}

/// `h · v = h₁ v S(h₂)` for the generators of H, and `δ(v)` from
/// `Δ(v) = v ⊗ 1 + v₋₁ ⊗ v₀`.
pub fn infinitesimal_braiding(pres: &Presentation) -> Result<ExtractedModule, LiftingError> {
    let view = SmashView::new(pres)?;
    let a = &pres.alphabet;
    let n = view.braided.len();
    if n == 0 {
        return Err(LiftingError::Module("no braided letters".into()));
    }
    let kh = kashina_h();
    let antipode = kh.hopf.antipode.as_ref().expect("H has its antipode");
    let mut action = Vec::new();
    for &g in &view.group {
        let dg = pres.coproduct[g as usize]
            .as_ref()
            .ok_or_else(|| LiftingError::Module(format!("no coproduct for {}", a.names[g as usize])))?;
        let mut m = Mat::zeros(n, n);
        for (j, &v) in view.braided.iter().enumerate() {
            let mut total = NcPoly::zero();
            for ((u, w), c) in dg.terms() {
                let mut s = NcPoly::zero();
                for (h, d) in view.h_coords(&NcPoly::word(w.clone()))? {
                    s.add_scaled(&view.h_poly(&antipode[h]), &d);
                }
                let term = NcPoly::word(u.clone()).mul(&NcPoly::word(vec![v])).mul(&s);
                total.add_scaled(&term, c);
            }
            let nf = view.rs.normal_form(&total)?;
            for (w, c) in nf.terms() {
                let k = match w.as_slice() {
                    [l] => view.braided_pos(*l),
                    _ => None,
                }
                .ok_or_else(|| {
                    LiftingError::Module(format!(
                        "{}·{} = {} is not in V",
                        a.names[g as usize],
                        a.names[v as usize],
                        nf.show(a)
                    ))
                })?;
                m.set(k, j, c.clone());
            }
        }
        action.push(m);
    }
    let mut coaction = vec![Mat::zeros(n, n); H_DIM];
    for (i, &v) in view.braided.iter().enumerate() {
        let dv = pres.coproduct[v as usize]
            .as_ref()
            .ok_or_else(|| LiftingError::Module(format!("no coproduct for {}", a.names[v as usize])))?;
        let mut seen_primitive = false;
        for ((u, w), c) in dv.terms() {
            if u == &vec![v] && w.is_empty() && c.is_one() {
                seen_primitive = true;
                continue;
            }
            let j = match w.as_slice() {
                [l] => view.braided_pos(*l),
                _ => None,
            }
            .filter(|_| a.braided_degree(u) == 0)
            .ok_or_else(|| {
                LiftingError::Module(format!(
                    "term {} @ {} of Δ({}) is not of the form g ⊗ v",
                    a.show(u),
                    a.show(w),
                    a.names[v as usize]
                ))
            })?;
            for (h, d) in view.h_coords(&NcPoly::word(u.clone()))? {
                *coaction[h].entry_mut(j, i) += &(c * &d);
            }
        }
        if !seen_primitive {
            return Err(LiftingError::Module(format!(
                "Δ({}) lacks the term {} ⊗ 1",
                a.names[v as usize], a.names[v as usize]
            )));
        }
    }
    let letters: Vec<String> = view.braided.iter().map(|&l| a.names[l as usize].clone()).collect();
    let module = YDModule { name: format!("N({})", pres.name), dim: n, action, coaction };
    let yd_failure = module.verify().err().map(|e| e.to_string());
    Ok(ExtractedModule { module, letters, yd_failure })
}

/// Braided letters grouped by name stem (`p1, p2 | q1, q2` or `p | q`).
pub fn letter_blocks(letters: &[String]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<(String, Vec<usize>)> = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        let stem: String = l.trim_end_matches(|c: char| c.is_ascii_digit()).to_string();
        match blocks.iter_mut().find(|(s, _)| *s == stem) {
            Some((_, v)) => v.push(i),
            None => blocks.push((stem, vec![i])),
        }
    }
    blocks.into_iter().map(|(_, v)| v).collect()
}

/// Restriction to a block of basis vectors, if the block is a subobject.
pub fn restrict(m: &YDModule, block: &[usize]) -> Option<YDModule> {
    let off = |mat: &Mat| (0..m.dim).any(|r| !block.contains(&r) && block.iter().any(|&c| !mat.get(r, c).is_zero()));
    if m.action.iter().chain(m.coaction.iter()).any(off) {
        return None;
    }
    let sub = |mat: &Mat| Mat::from_fn(block.len(), block.len(), |r, c| mat.get(block[r], block[c]).clone());
    Some(YDModule {
        name: format!("{}|{:?}", m.name, block),
        dim: block.len(),
        action: m.action.iter().map(sub).collect(),
        coaction: m.coaction.iter().map(sub).collect(),
    })
}

/// Names `V1…V8, M1…M12`.
pub fn simple_names() -> Vec<String> {
    (1..=8).map(|i| format!("V{i}")).chain((1..=12).map(|i| format!("M{i}"))).collect()
}

/// The catalog module isomorphic to `m`, if any.
pub fn identify(m: &YDModule) -> Option<String> {
    simple_names().into_iter().find(|n| {
        let c = module_by_name(n).expect("catalog name");
        c.dim == m.dim && yd_isomorphic(&c, m).is_some()
    })
}

/// Catalog names of the summands given by the letter blocks.
pub fn identify_summands(e: &ExtractedModule) -> Vec<Option<String>> {
    letter_blocks(&e.letters)
        .iter()
        .map(|b| restrict(&e.module, b).and_then(|s| if s.verify().is_ok() { identify(&s) } else { None }))
        .collect()
}
