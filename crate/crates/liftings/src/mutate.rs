//! Sign mutations of presentations.

use presentations::{build_report, BuildReport, Presentation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::LiftingError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    pub relation: String,
    pub mutated: String,
    pub build: BuildReport,
}

impl Mutation {
    /// Confluence or well-definedness of `Δ` broke.
    pub fn detected(&self) -> bool {
        !self.build.confluent || self.build.coproduct_ok == Some(false)
    }
}

/// Negates term `term` of `lhs - rhs` in relation `rel` (lhs terms first).
pub fn flip_sign(pres: &Presentation, rel: usize, term: usize) -> Result<Mutation, LiftingError> {
    let mut p = pres.clone();
    let r = p.relations.get_mut(rel).ok_or_else(|| LiftingError::Mutation(format!("no relation {rel}")))?;
    let nl = r.lhs.len();
    let side = if term < nl { &mut r.lhs } else { &mut r.rhs };
    let k = if term < nl { term } else { term - nl };
    let (w, c) = side
        .terms()
        .nth(k)
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or_else(|| LiftingError::Mutation(format!("relation {rel} has no term {term}")))?;
    side.add_term(w, &(-&(&c + &c)));
    let before = pres.relations[rel].text.clone();
    r.text = format!("{} = {}", r.lhs.show(&p.alphabet), r.rhs.show(&p.alphabet));
    let mutated = r.text.clone();
    let (build, _) = build_report(p);
    Ok(Mutation { relation: before, mutated, build })
}

/// A seeded flip of one term in a relation that involves braided letters.
pub fn seeded_flip(pres: &Presentation, seed: u64) -> Result<Mutation, LiftingError> {
    let a = &pres.alphabet;
    let candidates: Vec<usize> = (0..pres.relations.len())
        .filter(|&i| {
            let r = &pres.relations[i];
            r.lhs.len() + r.rhs.len() >= 2 && r.poly().terms().any(|(w, _)| a.braided_degree(w) > 0)
        })
        .collect();
    if candidates.is_empty() {
        return Err(LiftingError::Mutation("no relation with braided letters".into()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let rel = candidates[rng.random_range(0..candidates.len())];
    let r = &pres.relations[rel];
    let term = rng.random_range(0..r.lhs.len() + r.rhs.len());
    flip_sign(pres, rel, term)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn seeded_flip_changes_exactly_one_relation_text(seed in any::<u64>()) {
            let pres = crate::family("U1_1").unwrap().presentation(&[], false).unwrap();
            let m = seeded_flip(&pres, seed).unwrap();
            prop_assert_ne!(&m.relation, &m.mutated);
            prop_assert!(pres.relations.iter().any(|r| r.text == m.relation));
        }
    }
}
