//! Building liftings and comparing them with bosonizations.

use std::time::Instant;

use exactlin::SparseVec;
use hopf_core::{verify_hopf, verify_hopf_map, AxiomReport, HopfData, MapReport};
use presentations::{build_hopf, build_report, BuildReport, Presentation, PresentedHopf};
use serde::{Deserialize, Serialize};

use crate::bosonize::bosonize;
use crate::braided::braided_nichols_hopf;
use crate::complete::{align_coproducts, complete, Completion};
use crate::family::{LiftingParams, Variant};
use crate::module::{identify_summands, infinitesimal_braiding, SmashView};
use crate::LiftingError;

const NICHOLS_CAP: usize = 8;

/// Printed presentation; for the corrected variant with the reviewed text
/// corrections and coproducts aligned to the expected summands.
fn base_presentation(p: &LiftingParams) -> Result<(Presentation, Vec<String>), LiftingError> {
    let f = p.validate()?;
    let mut pres = f.presentation(&p.values, p.variant == Variant::Corrected)?;
    let aligned = if p.variant == Variant::Corrected { align_coproducts(&mut pres, f.braiding)? } else { Vec::new() };
    Ok((pres, aligned))
}

/// Presentation for the given parameters and variant.
pub fn lifting_presentation(p: &LiftingParams) -> Result<(Presentation, Option<Completion>), LiftingError> {
    let (pres, aligned) = base_presentation(p)?;
    match p.variant {
        Variant::AsWritten => Ok((pres, None)),
        _ => {
            let (c, mut rep) = complete(&pres)?;
            rep.aligned = aligned;
            Ok((c, Some(rep)))
        }
    }
}

/// The lifting as a Hopf algebra of the family's dimension.
pub fn build_lifting(p: &LiftingParams) -> Result<HopfData, LiftingError> {
    let f = p.validate()?;
    let (pres, _) = lifting_presentation(p)?;
    let h = build_hopf(&PresentedHopf::new(pres)?)?;
    if h.dim != f.dim {
        return Err(LiftingError::DimensionMismatch { expected: f.dim, got: h.dim });
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftingReport {
    pub params: String,
    pub variant: Variant,
    pub expected_dim: usize,
    pub build: BuildReport,
    pub completion: Option<Completion>,
    pub axioms: Option<AxiomReport>,
    pub seconds: f64,
}

impl LiftingReport {
    /// Confluent, Hopf, antipode solved, axioms pass, expected dimension.
    pub fn pass(&self) -> bool {
        self.build.confluent
            && self.build.dim == Some(self.expected_dim)
            && self.build.coproduct_ok == Some(true)
            && self.build.antipode_solved == Some(true)
            && self.axioms.as_ref().is_some_and(|a| a.pass())
    }

    pub fn summary(&self) -> String {
        if self.pass() {
            return format!("{} [{}]: dim {}, Hopf", self.params, self.variant.name(), self.expected_dim);
        }
        let why = self.build.error.clone().unwrap_or_else(|| match &self.axioms {
            Some(a) if !a.pass() => {
                format!("axioms fail: {}", a.failures().iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(", "))
            }
            _ => format!("dim {:?}, expected {}", self.build.dim, self.expected_dim),
        });
        format!("{} [{}]: {}", self.params, self.variant.name(), why)
    }
}

pub fn lifting_report(p: &LiftingParams) -> Result<LiftingReport, LiftingError> {
    let start = Instant::now();
    let f = p.validate()?;
    let (pres, completion) = match lifting_presentation(p) {
        Ok(x) => x,
        Err(e) => {
            // completion itself failed: report against the uncompleted presentation
            let (pres, _) = base_presentation(p)?;
            let (mut b, _) = build_report(pres);
            b.error = Some(format!("completion failed: {e}"));
            return Ok(LiftingReport {
                params: p.show(),
                variant: p.variant,
                expected_dim: f.dim,
                build: b,
                completion: None,
                axioms: None,
                seconds: start.elapsed().as_secs_f64(),
            });
        }
    };
    let (build, h) = build_report(pres);
    let axioms = h.as_ref().map(verify_hopf);
    Ok(LiftingReport {
        params: p.show(),
        variant: p.variant,
        expected_dim: f.dim,
        build,
        completion,
        axioms,
        seconds: start.elapsed().as_secs_f64(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroCompare {
    pub family: String,
    pub variant: Variant,
    /// Catalog names of the extracted summands, per letter block.
    pub summands: Vec<Option<String>>,
    /// Summands named by the classification.
    pub expected: Vec<String>,
    pub summands_match: bool,
    pub nichols_dim: Option<usize>,
    pub bosonization_dim: Option<usize>,
    pub bosonization_axioms: Option<bool>,
    pub lifting_dim: Option<usize>,
    /// `Φ` sends basis words to basis words.
    pub basis_permutation: Option<bool>,
    pub map: Option<MapReport>,
    pub error: Option<String>,
}

impl ZeroCompare {
    pub fn pass(&self) -> bool {
        self.summands_match && self.map.as_ref().is_some_and(|m| m.is_isomorphism())
    }

    pub fn summary(&self) -> String {
        let names: Vec<String> = self.summands.iter().map(|s| s.clone().unwrap_or_else(|| "?".into())).collect();
        let iso = self.map.as_ref().is_some_and(|m| m.is_isomorphism());
        let state = if self.pass() {
            "gr-isomorphic to B(N)#H".to_string()
        } else if iso {
            "isomorphic to B(N)#H, but N is not the expected module".to_string()
        } else if let Some(e) = &self.error {
            e.clone()
        } else if let Some(m) = &self.map {
            format!("map fails at {:?}", m.witness)
        } else {
            "no comparison".into()
        };
        format!(
            "{} [{}]: N = {} (expected {}): {}",
            self.family,
            self.variant.name(),
            names.join("+"),
            self.expected.join("+"),
            state
        )
    }
}

/// Builds the zero-parameter lifting and `B(N) # H` for the extracted `N`,
/// and checks that letters to letters is a Hopf isomorphism.
pub fn compare_zero_parameter(family: &str, variant: Variant) -> Result<ZeroCompare, LiftingError> {
    let p = LiftingParams::zero(family).with_variant(variant);
    let f = p.validate()?;
    let (base, _) = base_presentation(&p)?;
    let ext = infinitesimal_braiding(&base)?;
    let summands = identify_summands(&ext);
    let expected: Vec<String> = f.braiding.iter().map(|s| s.to_string()).collect();
    let summands_match = summands.iter().map(|s| s.as_deref()).eq(f.braiding.iter().map(|s| Some(*s)));
    let mut out = ZeroCompare {
        family: f.id.to_string(),
        variant,
        summands,
        expected,
        summands_match,
        nichols_dim: None,
        bosonization_dim: None,
        bosonization_axioms: None,
        lifting_dim: None,
        basis_permutation: None,
        map: None,
        error: None,
    };
    if let Some(e) = &ext.yd_failure {
        out.error = Some(format!("N is not Yetter-Drinfeld: {e}"));
        return Ok(out);
    }
    let bh = match braided_nichols_hopf(&ext.module, &ext.letters, NICHOLS_CAP) {
        Ok(b) => b,
        Err(e) => {
            out.error = Some(e.to_string());
            return Ok(out);
        }
    };
    out.nichols_dim = Some(bh.dim);
    let bos = bosonize(&bh)?;
    out.bosonization_dim = Some(bos.hopf.dim);
    out.bosonization_axioms = Some(verify_hopf(&bos.hopf).pass());
    let (pres, _) = match lifting_presentation(&p) {
        Ok(x) => x,
        Err(e) => {
            out.error = Some(e.to_string());
            return Ok(out);
        }
    };
    let view = SmashView::new(&pres)?;
    let presented = PresentedHopf::new(pres)?;
    let lifting = match build_hopf(&presented) {
        Ok(h) => h,
        Err(e) => {
            out.error = Some(format!("lifting does not build: {e}"));
            return Ok(out);
        }
    };
    out.lifting_dim = Some(lifting.dim);
    let h_unit = kashina::kashina_h().hopf.unit.first_index().expect("unit of H");
    let mut images = vec![SparseVec::zero(); presented.presentation.alphabet.len()];
    for (k, &l) in view.braided.iter().enumerate() {
        images[l as usize] = SparseVec::unit(bh.letter(k) * 16 + h_unit);
    }
    for (g, h) in view.group.iter().zip([1usize, 4, 8]) {
        images[*g as usize] = SparseVec::unit(bh.unit * 16 + h);
    }
    let phi = presented.extend_to_basis(&bos.hopf, &images);
    out.basis_permutation = Some(is_permutation(&phi));
    if lifting.dim != bos.hopf.dim {
        out.error = Some(format!("dimensions differ: lifting {}, B(N)#H {}", lifting.dim, bos.hopf.dim));
        return Ok(out);
    }
    out.map = Some(verify_hopf_map(&lifting, &bos.hopf, &phi));
    Ok(out)
}

fn is_permutation(phi: &[SparseVec]) -> bool {
    let mut seen = std::collections::HashSet::new();
    phi.iter().all(|v| v.len() == 1 && v.iter().all(|(i, c)| c.is_one() && seen.insert(i)))
}
