//! Oriented rewriting systems, normal forms and overlap resolution.

use std::collections::HashMap;

use exactlin::Scalar;
use serde::{Deserialize, Serialize};

use crate::poly::NcPoly;
use crate::word::{basis_cmp, Alphabet, TermOrder, Word};
use crate::PresentationError;

pub const DEFAULT_CAP: usize = 12;

/// `lhs → rhs`, with `rhs` strictly smaller than `lhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
    /// Index of the relation the rule came from.
    pub source: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteSystem {
    pub alphabet: Alphabet,
    pub order: TermOrder,
    pub rules: Vec<Rule>,
    /// Bound on the length of irreducible words; reductions abort once an
    /// intermediate word is longer than the input plus four times the cap.
    pub cap: usize,
    /// Relations that reduced to zero against the earlier ones.
    pub implied: Vec<usize>,
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, order: TermOrder, cap: usize) -> RewriteSystem {
        RewriteSystem { alphabet, order, rules: Vec::new(), cap, implied: Vec::new() }
    }

    /// Orients and inter-reduces relations `r = 0`. A relation is first
    /// reduced by the rules present; a new leading word evicts every rule
    /// whose leading word contains it, and those are re-queued.
    pub fn from_relations(
        alphabet: Alphabet,
        order: TermOrder,
        cap: usize,
        relations: &[NcPoly],
    ) -> Result<RewriteSystem, PresentationError> {
        let mut rs = RewriteSystem::new(alphabet, order, cap);
        let mut queue: std::collections::VecDeque<(NcPoly, usize)> =
            relations.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut guard = 0usize;
        while let Some((p, src)) = queue.pop_front() {
            guard += 1;
            if guard > 100_000 {
                return Err(PresentationError::DegreeCapExceeded {
                    cap,
                    word: "inter-reduction did not settle".into(),
                });
            }
            let r = rs.normal_form(&p)?;
            let Some((lw, lc)) = r.leading(&rs.alphabet, rs.order) else {
                if !rs.implied.contains(&src) && !rs.rules.iter().any(|x| x.source == src) {
                    rs.implied.push(src);
                }
                continue;
            };
            let lw = lw.clone();
            let inv = lc.inv();
            let mut rhs = r.scale(&-inv.clone());
            rhs.add_term(lw.clone(), &Scalar::one());
            let mut keep = Vec::new();
            for rule in rs.rules.drain(..) {
                if contains(&rule.lhs, &lw) {
                    let mut back = rule.rhs.clone();
                    back.add_term(rule.lhs.clone(), &-Scalar::one());
                    queue.push_back((back, rule.source));
                } else {
                    keep.push(rule);
                }
            }
            rs.rules = keep;
            rs.implied.retain(|&i| i != src);
            rs.rules.push(Rule { lhs: lw, rhs, source: src });
        }
        Ok(rs)
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer { rs: self, memo: HashMap::new() }
    }

    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly, PresentationError> {
        self.reducer().reduce(p)
    }

    /// First (leftmost, then lowest rule index) occurrence of a leading word.
    pub fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (ri, r) in self.rules.iter().enumerate() {
                if w[pos..].starts_with(&r.lhs) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_none()
    }

    /// One rewriting step at `pos` with rule `ri`.
    pub fn step(&self, w: &[u8], pos: usize, ri: usize) -> NcPoly {
        let r = &self.rules[ri];
        let mut out = NcPoly::zero();
        for (m, c) in r.rhs.terms() {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(m);
            nw.extend_from_slice(&w[pos + r.lhs.len()..]);
            out.add_term(nw, c);
        }
        out
    }

    /// Irreducible words, sorted by `basis_cmp`. Errors when irreducible
    /// words of length `cap` exist.
    pub fn irreducible_words(&self) -> Result<Vec<Word>, PresentationError> {
        let n = self.alphabet.len() as u8;
        let mut all = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _len in 1..=self.cap {
            let mut next = Vec::new();
            for w in &layer {
                for l in 0..n {
                    let mut nw = w.clone();
                    nw.push(l);
                    if !self.rules.iter().any(|r| nw.ends_with(&r.lhs)) {
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                let a = &self.alphabet;
                all.sort_by(|u, v| basis_cmp(a, self.order, u, v));
                return Ok(all);
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        Err(PresentationError::DegreeCapExceeded { cap: self.cap, word: self.alphabet.show(&layer[0]) })
    }

    pub fn show_rules(&self) -> Vec<String> {
        self.rules.iter().map(|r| format!("{} -> {}", self.alphabet.show(&r.lhs), r.rhs.show(&self.alphabet))).collect()
    }
}

fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Memoizing normal-form evaluator.
pub struct Reducer<'a> {
    rs: &'a RewriteSystem,
    memo: HashMap<Word, NcPoly>,
}

impl Reducer<'_> {
    pub fn reduce(&mut self, p: &NcPoly) -> Result<NcPoly, PresentationError> {
        let limit = p.max_len() + 4 * self.rs.cap;
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let r = self.word(w, limit)?;
            out.add_scaled(&r, c);
        }
        Ok(out)
    }

    pub fn reduce_word(&mut self, w: &[u8]) -> Result<NcPoly, PresentationError> {
        self.word(w, w.len() + 4 * self.rs.cap)
    }

    fn word(&mut self, w: &[u8], limit: usize) -> Result<NcPoly, PresentationError> {
        if let Some(r) = self.memo.get(w) {
            return Ok(r.clone());
        }
        if w.len() > limit {
            return Err(PresentationError::DegreeCapExceeded { cap: self.rs.cap, word: self.rs.alphabet.show(w) });
        }
        let r = match self.rs.find_redex(w) {
            None => NcPoly::word(w.to_vec()),
            Some((pos, ri)) => {
                let s = self.rs.step(w, pos, ri);
                let mut out = NcPoly::zero();
                for (m, c) in s.terms() {
                    let r = self.word(m, limit)?;
                    out.add_scaled(&r, c);
                }
                out
            }
        };
        self.memo.insert(w.to_vec(), r.clone());
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ambiguity {
    pub word: String,
    pub rules: (usize, usize),
    /// `overlap` or `inclusion`.
    pub kind: String,
    /// Normal form of the difference of the two one-step reductions.
    pub residue: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfluenceReport {
    pub rules: usize,
    pub ambiguities_checked: usize,
    pub unresolved: Vec<Ambiguity>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// Resolves every overlap and inclusion ambiguity between leading words.
pub fn confluence_check(rs: &RewriteSystem) -> Result<ConfluenceReport, PresentationError> {
    let mut cases: Vec<(Word, usize, usize, usize, usize, &'static str)> = Vec::new();
    for (i, a) in rs.rules.iter().enumerate() {
        for (j, b) in rs.rules.iter().enumerate() {
            // suffix of a = prefix of b
            for k in 1..a.lhs.len().min(b.lhs.len()) {
                if a.lhs[a.lhs.len() - k..] == b.lhs[..k] {
                    let mut w = a.lhs.clone();
                    w.extend_from_slice(&b.lhs[k..]);
                    cases.push((w, 0, i, a.lhs.len() - k, j, "overlap"));
                }
            }
            if i != j && b.lhs.len() <= a.lhs.len() {
                for pos in 0..=a.lhs.len() - b.lhs.len() {
                    if a.lhs[pos..pos + b.lhs.len()] == b.lhs[..] {
                        cases.push((a.lhs.clone(), 0, i, pos, j, "inclusion"));
                    }
                }
            }
        }
    }
    let mut red = rs.reducer();
    let mut unresolved = Vec::new();
    for (w, p1, i, p2, j, kind) in &cases {
        let d = rs.step(w, *p1, *i).sub(&rs.step(w, *p2, *j));
        let r = red.reduce(&d)?;
        if !r.is_zero() {
            unresolved.push(Ambiguity {
                word: rs.alphabet.show(w),
                rules: (*i, *j),
                kind: kind.to_string(),
                residue: r.show(&rs.alphabet),
            });
        }
    }
    Ok(ConfluenceReport { rules: rs.rules.len(), ambiguities_checked: cases.len(), unresolved })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs_x4() -> RewriteSystem {
        let a = Alphabet::new(&["x"], &[]);
        let x4 = NcPoly::word(vec![0; 4]).sub(&NcPoly::one());
        RewriteSystem::from_relations(a, TermOrder::Segmented, DEFAULT_CAP, &[x4]).unwrap()
    }

    #[test]
    fn x5_reduces_to_x() {
        let rs = rs_x4();
        assert_eq!(rs.normal_form(&NcPoly::word(vec![0; 5])).unwrap(), NcPoly::word(vec![0]));
        assert!(confluence_check(&rs).unwrap().is_confluent());
        assert_eq!(rs.irreducible_words().unwrap().len(), 4);
    }

    #[test]
    fn free_algebra_exceeds_cap() {
        let rs = RewriteSystem::new(Alphabet::new(&["x"], &[]), TermOrder::Segmented, 5);
        assert!(matches!(rs.irreducible_words(), Err(PresentationError::DegreeCapExceeded { .. })));
    }
}
