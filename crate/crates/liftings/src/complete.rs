//! Completion of a presentation by the relations of the Nichols algebra of
//! its infinitesimal braiding.
//!
//! Quadratic relations (braided part in `V ⊗ V`, the rest in H) are sorted
//! against `K = ker(1 + c)`: those with braided part in `K` are kept,
//! combinations of the others landing in `K` replace them, missing
//! directions of `K` are added with right-hand side zero, and so are the
//! Nichols relations of degree at least three.

use exactlin::{Echelon, Mat, Scalar, SparseVec};
use nichols::BraidedSpace;
use presentations::{NcPoly, Presentation, Relation, RewriteSystem, TPoly};
use serde::{Deserialize, Serialize};
use ydcat::module_by_name;

use crate::braided::braided_nichols_hopf;
use crate::module::{identify, infinitesimal_braiding, letter_blocks, restrict, SmashView};
use crate::LiftingError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Completion {
    pub kept: Vec<String>,
    /// Quadratic relations whose braided part is not a Nichols relation.
    pub dropped: Vec<String>,
    /// Combinations of dropped relations that are.
    pub combined: Vec<String>,
    /// Nichols relations added with right-hand side zero.
    pub added: Vec<String>,
    /// Coproducts replaced by the catalog coaction of the expected summand.
    pub aligned: Vec<String>,
}

impl Completion {
    pub fn is_trivial(&self) -> bool {
        self.dropped.is_empty() && self.added.is_empty()
    }
}

/// Braided part in `V ⊗ V`, if `p` is quadratic.
fn quadratic_part(view: &SmashView, pres: &Presentation, p: &NcPoly) -> Option<SparseVec> {
    let a = &pres.alphabet;
    let n = view.braided.len();
    let mut pairs = Vec::new();
    let mut top = false;
    for (w, c) in p.terms() {
        match a.braided_degree(w) {
            0 => {}
            2 if w.len() == 2 => {
                let i = view.braided.iter().position(|&b| b == w[0])?;
                let j = view.braided.iter().position(|&b| b == w[1])?;
                pairs.push((i * n + j, c.clone()));
                top = true;
            }
            _ => return None,
        }
    }
    top.then(|| SparseVec::from_pairs(pairs))
}

fn poly_of(view: &SmashView, v: &SparseVec) -> NcPoly {
    let n = view.braided.len();
    let mut p = NcPoly::zero();
    for (k, c) in v.iter() {
        p.add_term(vec![view.braided[k / n], view.braided[k % n]], c);
    }
    p
}

fn apply(m: &Mat, v: &SparseVec) -> SparseVec {
    SparseVec::from_dense(&m.mul_vec(&v.to_dense(m.cols())))
}

fn zero_relation(p: NcPoly, pres: &Presentation) -> Relation {
    let text = format!("{} = 0", p.show(&pres.alphabet));
    Relation { lhs: p, rhs: NcPoly::zero(), text, line: 0 }
}

/// Returns the completed presentation and what changed.
pub fn complete(pres: &Presentation) -> Result<(Presentation, Completion), LiftingError> {
    let ext = infinitesimal_braiding(pres)?;
    if let Some(f) = &ext.yd_failure {
        return Err(LiftingError::Module(format!("not a Yetter-Drinfeld module: {f}")));
    }
    let view = SmashView::new(pres)?;
    let n = view.braided.len();
    let bs = BraidedSpace::from_yd(&ext.module);
    let one_c = &Mat::identity(n * n) + &bs.c;

    let mut out = pres.clone();
    out.relations.clear();
    let mut report = Completion { kept: vec![], dropped: vec![], combined: vec![], added: vec![], aligned: vec![] };
    let mut span = Echelon::new();
    let mut others: Vec<(Relation, SparseVec)> = Vec::new();
    for r in &pres.relations {
        match quadratic_part(&view, pres, &r.poly()) {
            Some(q) if !apply(&one_c, &q).is_zero() => others.push((r.clone(), q)),
            Some(q) => {
                span.insert(&q);
                report.kept.push(r.text.clone());
                out.relations.push(r.clone());
            }
            None => out.relations.push(r.clone()),
        }
    }
    if !others.is_empty() {
        let cols: Vec<Vec<Scalar>> = others.iter().map(|(_, q)| apply(&one_c, q).to_dense(n * n)).collect();
        for a in Mat::from_cols(&cols).kernel_basis() {
            let mut p = NcPoly::zero();
            let mut q = SparseVec::zero();
            for ((r, qr), c) in others.iter().zip(&a) {
                p.add_scaled(&r.poly(), c);
                q = q.add_scaled(qr, c);
            }
            span.insert(&q);
            let rel = zero_relation(p, pres);
            report.combined.push(rel.text.clone());
            out.relations.push(rel);
        }
        report.dropped = others.iter().map(|(r, _)| r.text.clone()).collect();
    }
    for k in nichols::quadratic_relations(&bs) {
        let v = SparseVec::from_dense(&k);
        if span.insert(&v) {
            let rel = zero_relation(poly_of(&view, &v), pres);
            report.added.push(rel.text.clone());
            out.relations.push(rel);
        }
    }
    let bh = braided_nichols_hopf(&ext.module, &ext.letters, 8)?;
    for r in bh.relations_of_degree_at_least(3) {
        let mut p = NcPoly::zero();
        for (w, c) in r.terms() {
            p.add_term(w.iter().map(|&l| view.braided[l as usize]).collect(), c);
        }
        let polys = out.relation_polys();
        let implied = RewriteSystem::from_relations(out.alphabet.clone(), out.order, out.cap, &polys)
            .and_then(|rs| rs.normal_form(&p))
            .map(|nf| nf.is_zero())
            .unwrap_or(false);
        if !implied {
            let rel = zero_relation(p, pres);
            report.added.push(rel.text.clone());
            out.relations.push(rel);
        }
    }
    Ok((out, report))
}

/// For each letter block whose coaction is not that of the expected catalog
/// module but whose action is, replaces the block's coproducts by
/// `v ⊗ 1 + v₋₁ ⊗ v₀` for the catalog coaction. Returns the new coproduct lines.
pub fn align_coproducts(pres: &mut Presentation, expected: &[&str]) -> Result<Vec<String>, LiftingError> {
    let ext = infinitesimal_braiding(pres)?;
    let view = SmashView::new(pres)?;
    let blocks = letter_blocks(&ext.letters);
    let mut lines = Vec::new();
    for (b, name) in blocks.iter().zip(expected) {
        let Some(sub) = restrict(&ext.module, b) else { continue };
        if sub.verify().is_ok() && identify(&sub).as_deref() == Some(*name) {
            continue;
        }
        let cat = module_by_name(name).map_err(|e| LiftingError::Module(e.to_string()))?;
        if cat.dim != sub.dim || cat.action != sub.action {
            continue;
        }
        for (i, &k) in b.iter().enumerate() {
            let v = view.braided[k];
            let mut d = TPoly::zero();
            d.add_term(vec![v], vec![], &Scalar::one());
            for (j, &kj) in b.iter().enumerate() {
                for h in 0..16 {
                    let c = cat.coaction[h].get(j, i);
                    if !c.is_zero() {
                        d.add_term(view.h_word(h), vec![view.braided[kj]], c);
                    }
                }
            }
            lines.push(format!("{} = {}", pres.alphabet.names[v as usize], d.show(&pres.alphabet)));
            pres.coproduct[v as usize] = Some(d);
        }
    }
    Ok(lines)
}
