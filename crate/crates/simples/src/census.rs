//! Census of simple D-modules.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{
    character_module, gamma, intertwiners, isomorphic, lambda1, lambda2, omega, two_dim_module, w_matrices, Family, Rep,
};

/// All 88 simples: 32 characters, then V on Ω, W¹/W² on Λ¹, W³/W⁴ on Λ², U on Γ.
pub fn all_simples() -> Vec<Rep> {
    let mut v = Vec::new();
    for i in 0..2 {
        for j in 0..4 {
            for k in 0..2 {
                for l in 0..2 {
                    v.push(character_module(i, j, k, l).unwrap());
                }
            }
        }
    }
    for q in omega() {
        v.push(two_dim_module(Family::V, &q).unwrap());
    }
    for f in [Family::W1, Family::W2] {
        for q in lambda1() {
            v.push(two_dim_module(f, &q).unwrap());
        }
    }
    for f in [Family::W3, Family::W4] {
        for q in lambda2() {
            v.push(two_dim_module(f, &q).unwrap());
        }
    }
    for q in gamma() {
        v.push(two_dim_module(Family::U, &q).unwrap());
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WPairing {
    pub family: String,
    pub set: String,
    pub members: usize,
    /// All members satisfy the relations of D.
    pub relations_ok: bool,
    pub all_simple: bool,
    /// Members isomorphic to a module of another W family/set pairing or to a V/U module.
    pub clashes: usize,
    /// Other W pairings sharing an isomorphism class with this one.
    pub overlaps: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub names: Vec<String>,
    pub dims: Vec<usize>,
    pub per_family: Vec<(String, usize)>,
    pub one_dim: usize,
    pub two_dim: usize,
    pub relations_ok: bool,
    pub all_simple: bool,
    /// Distinct modules found isomorphic by the intertwiner sweep.
    pub iso_pairs: Vec<(String, String)>,
    /// `dim Hom(r_i, r_j)` for every ordered pair.
    pub hom_dims: Vec<Vec<usize>>,
    pub sum_of_squares: usize,
    /// Traces of the six generators distinguish all classes.
    pub generator_traces_separate: bool,
    /// Traces of all 256 words `a^m b^n c^r x^i y^j t^k` distinguish all classes.
    pub full_characters_separate: bool,
    pub w_pairings: Vec<WPairing>,
}

fn word_basis() -> Vec<String> {
    let mut v = Vec::new();
    for m in 0..4 {
        for n in 0..2 {
            for r in 0..2 {
                for i in 0..4 {
                    for j in 0..2 {
                        for k in 0..2 {
                            v.push(format!(
                                "{}{}{}{}{}{}",
                                "a".repeat(m),
                                "b".repeat(n),
                                "c".repeat(r),
                                "x".repeat(i),
                                "y".repeat(j),
                                "t".repeat(k)
                            ));
                        }
                    }
                }
            }
        }
    }
    v
}

fn all_distinct<T: PartialEq>(v: &[T]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

/// Tries every W family against both Λ sets.
pub fn w_pairing_sweep(others: &[Rep]) -> Vec<WPairing> {
    let mut out: Vec<WPairing> = Vec::new();
    let mut built: Vec<Vec<Rep>> = Vec::new();
    let cands: Vec<(u8, &str, Vec<[i64; 3]>)> =
        (1..=4u8).flat_map(|p| [(p, "Λ¹", lambda1()), (p, "Λ²", lambda2())]).collect();
    for (p, set, idx) in &cands {
        let reps: Vec<Rep> = idx
            .iter()
            .map(|q| Rep { family: Family::w(*p), index: q.to_vec(), dim: 2, mats: w_matrices(*p, q[0], q[1], q[2]) })
            .collect();
        let relations_ok = reps.iter().all(|r| r.satisfies_relations());
        let all_simple = relations_ok && reps.iter().all(|r| r.is_simple());
        let clashes = reps
            .iter()
            .filter(|r| others.iter().any(|o| !(o.family == r.family && o.index == r.index) && isomorphic(r, o)))
            .count();
        out.push(WPairing {
            family: format!("W{p}"),
            set: set.to_string(),
            members: reps.len(),
            relations_ok,
            all_simple,
            clashes,
            overlaps: Vec::new(),
        });
        built.push(reps);
    }
    for a in 0..out.len() {
        for b in 0..out.len() {
            if a != b && built[a].iter().any(|r| built[b].iter().any(|o| isomorphic(r, o))) {
                let label = format!("{}/{}", out[b].family, out[b].set);
                out[a].overlaps.push(label);
            }
        }
    }
    out
}

pub fn census() -> CensusReport {
    let reps = all_simples();
    let n = reps.len();
    let names: Vec<String> = reps.iter().map(|r| r.name()).collect();
    let dims: Vec<usize> = reps.iter().map(|r| r.dim).collect();
    let relations_ok = reps.par_iter().all(|r| r.satisfies_relations());
    let hom_dims: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|j| if dims[i] == dims[j] { intertwiners(&reps[i], &reps[j]).len() } else { 0 }).collect())
        .collect();
    let all_simple = (0..n).all(|i| hom_dims[i][i] == 1);
    let mut iso_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if dims[i] == dims[j] && isomorphic(&reps[i], &reps[j]) {
                iso_pairs.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    let mut per_family: Vec<(String, usize)> = Vec::new();
    for r in &reps {
        match per_family.iter_mut().find(|(f, _)| f == r.family.name()) {
            Some(e) => e.1 += 1,
            None => per_family.push((r.family.name().to_string(), 1)),
        }
    }
    let traces: Vec<_> = reps.iter().map(|r| r.character()).collect();
    let words = word_basis();
    let full: Vec<Vec<_>> = reps.par_iter().map(|r| words.iter().map(|w| r.word(w).trace()).collect()).collect();
    let others: Vec<Rep> = reps
        .iter()
        .filter(|r| !matches!(r.family, Family::W1 | Family::W2 | Family::W3 | Family::W4))
        .cloned()
        .collect();
    let w_pairings = w_pairing_sweep(&others);
    CensusReport {
        one_dim: dims.iter().filter(|&&d| d == 1).count(),
        two_dim: dims.iter().filter(|&&d| d == 2).count(),
        sum_of_squares: dims.iter().map(|d| d * d).sum(),
        names,
        dims,
        per_family,
        relations_ok,
        all_simple,
        iso_pairs,
        hom_dims,
        generator_traces_separate: all_distinct(&traces),
        full_characters_separate: all_distinct(&full),
        w_pairings,
    }
}
