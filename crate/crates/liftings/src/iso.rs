//! Isomorphisms between members of one family for different parameters.

use exactlin::{Acc, Scalar, SparseVec};
use hopf_core::{verify_hopf_map, HopfData, MapReport};
use kashina::auts::tau;
use presentations::{build_hopf, NcPoly, Presentation, PresentedHopf};
use serde::{Deserialize, Serialize};

use crate::family::LiftingParams;
use crate::lifting::lifting_presentation;
use crate::LiftingError;

/// Parameter equations an isomorphism must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VarSystem {
    /// `a₁²λ' = λ, a₂²μ' = μ`.
    Diagonal2,
    /// `a₁²λ' = λ, a₂²μ' = μ, a₂²α' = α`.
    Diagonal3,
    /// Mixing `p ↦ a₁p' + a₂q'`, `q ↦ b₁p' + b₂q'` for six parameters
    /// `λ, μ, α, β, γ, η`.
    Mixing6,
}

/// `Φ` on generators: `Φ|_H = τ`, braided letters to combinations of braided letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamMap {
    pub tau: usize,
    pub images: Vec<(String, Vec<(String, Scalar)>)>,
    /// `a₁, a₂, b₁, b₂` (unused ones zero).
    pub coeffs: [Scalar; 4],
    pub system: VarSystem,
}

impl ParamMap {
    /// `p_i ↦ a₁p_i'` (with `p₂ ↦ sign·a₁p₂'`), `q_i ↦ a₂q_i'`.
    pub fn diagonal(tau: usize, a1: Scalar, a2: Scalar, p2_sign: Scalar, system: VarSystem) -> ParamMap {
        let one = |l: &str, c: Scalar| vec![(l.to_string(), c)];
        ParamMap {
            tau,
            images: vec![
                ("p1".into(), one("p1", a1.clone())),
                ("p2".into(), one("p2", &p2_sign * &a1)),
                ("q1".into(), one("q1", a2.clone())),
                ("q2".into(), one("q2", a2.clone())),
            ],
            coeffs: [a1, a2, Scalar::zero(), Scalar::zero()],
            system,
        }
    }

    /// `p_i ↦ a₁p_i' + a₂q_i'`, `q_i ↦ b₁p_i' + b₂q_i'`.
    pub fn mixing(tau: usize, a1: Scalar, a2: Scalar, b1: Scalar, b2: Scalar) -> ParamMap {
        let two = |i: usize, c: &Scalar, d: &Scalar| vec![(format!("p{i}"), c.clone()), (format!("q{i}"), d.clone())];
        ParamMap {
            tau,
            images: vec![
                ("p1".into(), two(1, &a1, &a2)),
                ("p2".into(), two(2, &a1, &a2)),
                ("q1".into(), two(1, &b1, &b2)),
                ("q2".into(), two(2, &b1, &b2)),
            ],
            coeffs: [a1, a2, b1, b2],
            system: VarSystem::Mixing6,
        }
    }
}

fn param(p: &LiftingParams, n: &str) -> Scalar {
    p.values.iter().find(|(m, _)| m == n).map(|(_, v)| v.clone()).unwrap_or_else(Scalar::zero)
}

impl VarSystem {
    /// Whether the equations hold for `Φ : U(src) → U(tgt)`.
    pub fn holds(&self, src: &LiftingParams, tgt: &LiftingParams, c: &[Scalar; 4]) -> bool {
        let s = |n: &str| param(src, n);
        let t = |n: &str| param(tgt, n);
        let [a1, a2, b1, b2] = c;
        let sq = |x: &Scalar| x * x;
        let nonzero = match self {
            VarSystem::Mixing6 => c.iter().all(|x| !x.is_zero()),
            _ => !a1.is_zero() && !a2.is_zero(),
        };
        let eqs: Vec<(Scalar, Scalar)> = match self {
            VarSystem::Diagonal2 => vec![(&sq(a1) * &t("lambda"), s("lambda")), (&sq(a2) * &t("mu"), s("mu"))],
            VarSystem::Diagonal3 => vec![
                (&sq(a1) * &t("lambda"), s("lambda")),
                (&sq(a2) * &t("mu"), s("mu")),
                (&sq(a2) * &t("alpha"), s("alpha")),
            ],
            VarSystem::Mixing6 => {
                let quad = |u: &Scalar, v: &Scalar, l: &str, g: &str, a: &str| {
                    &(&(&sq(u) * &t(l)) + &(&(u * v) * &t(g))) + &(&sq(v) * &t(a))
                };
                let mixed = |l: &str, g: &str, a: &str| {
                    let two = Scalar::int(2);
                    &(&(&(&two * &(a1 * b1)) * &t(l)) + &(&(&(a1 * b2) + &(a2 * b1)) * &t(g)))
                        + &(&(&two * &(a2 * b2)) * &t(a))
                };
                vec![
                    (quad(a1, a2, "lambda", "gamma", "alpha"), s("lambda")),
                    (quad(a1, a2, "mu", "eta", "beta"), s("mu")),
                    (quad(b1, b2, "lambda", "gamma", "alpha"), s("alpha")),
                    (quad(b1, b2, "mu", "eta", "beta"), s("beta")),
                    (mixed("lambda", "gamma", "alpha"), s("gamma")),
                    (mixed("mu", "eta", "beta"), s("eta")),
                ]
            }
        };
        nonzero && eqs.iter().all(|(l, r)| l == r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub source: String,
    pub target: String,
    pub tau: usize,
    /// Every source relation maps to zero.
    pub algebra_map: bool,
    pub failing_relation: Option<String>,
    /// `Δ ∘ Φ = (Φ ⊗ Φ) ∘ Δ` on generators.
    pub coalgebra_on_generators: Option<bool>,
    /// Full check, when the source builds.
    pub map: Option<MapReport>,
    pub var_holds: bool,
    pub error: Option<String>,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.algebra_map
            && self.coalgebra_on_generators == Some(true)
            && self.map.as_ref().is_some_and(|m| m.is_isomorphism())
    }

    /// Machine verdict agrees with the parameter equations.
    pub fn consistent(&self) -> bool {
        self.error.is_none() && self.is_isomorphism() == self.var_holds
    }

    pub fn summary(&self) -> String {
        let verdict = if self.is_isomorphism() {
            "Hopf isomorphism".to_string()
        } else if let Some(e) = &self.error {
            e.clone()
        } else if !self.algebra_map {
            format!("not an algebra map: {}", self.failing_relation.clone().unwrap_or_default())
        } else {
            "not a Hopf isomorphism".into()
        };
        format!(
            "{} -> {} (tau{}): {verdict}; equations {}",
            self.source,
            self.target,
            self.tau,
            if self.var_holds { "hold" } else { "fail" }
        )
    }
}

/// Generator images of `Φ` in the target algebra, indexed like the source alphabet.
fn generator_images(src: &Presentation, tgt: &HopfData, map: &ParamMap) -> Result<Vec<SparseVec>, LiftingError> {
    let t = &tau(map.tau).images;
    let a = &src.alphabet;
    let h_of = |v: &SparseVec| -> Result<SparseVec, LiftingError> {
        // H basis element e_h sits in the target as the word x^i y^j t^k
        let x = tgt.generator("x").ok_or_else(|| LiftingError::Module("target lacks x".into()))?;
        let y = tgt.generator("y").ok_or_else(|| LiftingError::Module("target lacks y".into()))?;
        let tt = tgt.generator("t").ok_or_else(|| LiftingError::Module("target lacks t".into()))?;
        let mut acc = Acc::new(tgt.dim);
        for (h, c) in v.iter() {
            let (i, j, k) = kashina::h_unindex(h);
            let w = tgt.mul(&tgt.mul(&tgt.pow(x, i as u32), &tgt.pow(y, j as u32)), &tgt.pow(tt, k as u32));
            acc.add_vec(&w, c);
        }
        Ok(acc.take())
    };
    let mut out = Vec::new();
    for (l, name) in a.names.iter().enumerate() {
        let img = match name.as_str() {
            "x" => h_of(&t[1])?,
            "y" => h_of(&t[4])?,
            "t" => h_of(&t[8])?,
            _ => {
                let (_, combo) = map
                    .images
                    .iter()
                    .find(|(n, _)| n == name)
                    .ok_or_else(|| LiftingError::Module(format!("no image for {name}")))?;
                let mut acc = Acc::new(tgt.dim);
                for (m, c) in combo {
                    let g = tgt.generator(m).ok_or_else(|| LiftingError::Module(format!("target lacks {m}")))?;
                    acc.add_vec(g, c);
                }
                acc.take()
            }
        };
        debug_assert_eq!(out.len(), l);
        out.push(img);
    }
    Ok(out)
}

fn eval(tgt: &HopfData, images: &[SparseVec], p: &NcPoly) -> SparseVec {
    let mut acc = Acc::new(tgt.dim);
    for (w, c) in p.terms() {
        let v = w.iter().fold(tgt.one(), |v, &g| tgt.mul(&v, &images[g as usize]));
        acc.add_vec(&v, c);
    }
    acc.take()
}

/// Checks `Φ : U(src) → U(tgt)` given on generators. Both sides use the
/// variant recorded in their parameters; the target must build.
pub fn verify_parameter_isomorphism(
    src: &LiftingParams,
    tgt: &LiftingParams,
    map: &ParamMap,
) -> Result<IsoReport, LiftingError> {
    let var_holds = map.system.holds(src, tgt, &map.coeffs);
    let mut rep = IsoReport {
        source: src.show(),
        target: tgt.show(),
        tau: map.tau,
        algebra_map: false,
        failing_relation: None,
        coalgebra_on_generators: None,
        map: None,
        var_holds,
        error: None,
    };
    let (tp, _) = lifting_presentation(tgt)?;
    let target = match build_hopf(&PresentedHopf::new(tp)?) {
        Ok(h) => h,
        Err(e) => {
            rep.error = Some(format!("target does not build: {e}"));
            return Ok(rep);
        }
    };
    let (sp, _) = lifting_presentation(src)?;
    let images = generator_images(&sp, &target, map)?;
    rep.failing_relation =
        sp.relations.iter().find(|r| !eval(&target, &images, &r.poly()).is_zero()).map(|r| r.text.clone());
    rep.algebra_map = rep.failing_relation.is_none();
    if !rep.algebra_map {
        return Ok(rep);
    }
    let co_ok = sp.coproduct.iter().enumerate().all(|(g, d)| {
        let Some(d) = d else { return false };
        let mut acc = Acc::new(target.dim * target.dim);
        for ((u, w), c) in d.terms() {
            let l = eval(&target, &images, &NcPoly::word(u.clone()));
            let r = eval(&target, &images, &NcPoly::word(w.clone()));
            acc.add_vec(&target.tensor(&l, &r), c);
        }
        acc.take() == target.delta(&images[g])
    });
    rep.coalgebra_on_generators = Some(co_ok);
    let presented = PresentedHopf::new(sp)?;
    match build_hopf(&presented) {
        Ok(source) => {
            let phi = presented.extend_to_basis(&target, &images);
            rep.map = Some(verify_hopf_map(&source, &target, &phi));
        }
        Err(e) => rep.error = Some(format!("source does not build: {e}")),
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(f: &str, vals: &[(&str, i64)]) -> LiftingParams {
        let v: Vec<(&str, Scalar)> = vals.iter().map(|(n, x)| (*n, Scalar::int(*x))).collect();
        LiftingParams::new(f, &v)
    }

    proptest! {
        #[test]
        fn diagonal_equations_hold_for_rescaled_parameters(a1 in 1i64..6, a2 in -5i64..-1, l in -4i64..5, m in -4i64..5, d in 1i64..3) {
            let tgt = lp("U6", &[("lambda", l), ("mu", m)]);
            let src = lp("U6", &[("lambda", a1 * a1 * l), ("mu", a2 * a2 * m)]);
            let c = [Scalar::int(a1), Scalar::int(a2), Scalar::zero(), Scalar::zero()];
            prop_assert!(VarSystem::Diagonal2.holds(&src, &tgt, &c));
            let off = lp("U6", &[("lambda", a1 * a1 * l + d), ("mu", a2 * a2 * m)]);
            prop_assert!(!VarSystem::Diagonal2.holds(&off, &tgt, &c));
        }

        #[test]
        fn mixing_requires_nonzero_entries(v in proptest::collection::vec(-3i64..4, 6)) {
            let names = ["lambda", "mu", "alpha", "beta", "gamma", "eta"];
            let vals: Vec<(&str, i64)> = names.iter().copied().zip(v.iter().copied()).collect();
            let p = lp("U2", &vals);
            let one = Scalar::one();
            // the identity matrix has zero off-diagonal entries, which the system excludes
            prop_assert!(!VarSystem::Mixing6.holds(&p, &p, &[one.clone(), Scalar::zero(), Scalar::zero(), one]));
        }
    }
}
