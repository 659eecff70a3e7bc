//! The lifting families, their parameters and reviewed metadata.

use exactlin::Scalar;
use presentations::{parse_with, Presentation};
use serde::{Deserialize, Serialize};

use crate::LiftingError;

/// A family as stored: presentation text plus reviewed data.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub id: &'static str,
    pub text: &'static str,
    pub params: &'static [&'static str],
    /// Dimension claimed by the PBW basis.
    pub dim: usize,
    /// Infinitesimal braiding named by the classification, summand by summand.
    pub braiding: &'static [&'static str],
    /// Reviewed corrections of apparent misprints: `(printed, corrected, note)`.
    pub corrections: &'static [(&'static str, &'static str, &'static str)],
}

macro_rules! fam {
    ($id:literal, $params:expr, $dim:expr, $braiding:expr, $corr:expr) => {
        Family {
            id: $id,
            text: include_str!(concat!("../families/", $id, ".pres")),
            params: $params,
            dim: $dim,
            braiding: $braiding,
            corrections: $corr,
        }
    };
}

const LM: &[&str] = &["lambda", "mu"];
const L: &[&str] = &["lambda"];
const I: &[&str] = &["lambda", "mu", "alpha"];

pub static FAMILIES: &[Family] = &[
    fam!("U1_1", LM, 64, &["V1", "V1"], &[]),
    fam!("U1_2", L, 64, &["V1", "V2"], &[]),
    fam!("U1_3", L, 64, &["V1", "V3"], &[]),
    fam!("U1_4", LM, 64, &["V1", "V4"], &[]),
    fam!("U1_5", LM, 64, &["V1", "V5"], &[]),
    fam!("U1_6", LM, 64, &["V1", "V6"], &[]),
    fam!("U1_7", LM, 64, &["V1", "V7"], &[]),
    fam!("U1_8", LM, 64, &["V1", "V8"], &[]),
    fam!("U1", LM, 256, &["M1", "M1"], &[]),
    fam!("U2", &["lambda", "mu", "alpha", "beta", "gamma", "eta"], 256, &["M2", "M2"], &[]),
    fam!("U3", I, 256, &["M3", "M3"], &[]),
    fam!("U6", I, 256, &["M6", "M6"], &[]),
    fam!("U9", I, 256, &["M9", "M9"], &[("tq2 = q2t", "tq2 = q1t", "t-relation of q2 copied from p2")]),
    fam!(
        "U10",
        I,
        256,
        &["M10", "M10"],
        &[
            ("tp2 = -p1t", "tp2 = p1t", "t-relation sign of p2 contradicts t^2 = x^2y"),
            ("tq2 = -q1t", "tq2 = q1t", "t-relation sign of q2 contradicts t^2 = x^2y"),
        ]
    ),
    fam!(
        "U13",
        I,
        256,
        &["M1", "M6"],
        &[("(1 - x^2)yx @ p2", "(1 - x^2)y @ p2", "stray factor x in the coproduct of p1")]
    ),
    fam!("U14", LM, 256, &["M1", "M8"], &[]),
    fam!("U15", I, 256, &["M2", "M4"], &[]),
    fam!("U16", LM, 256, &["M3", "M5"], &[]),
    fam!(
        "U17",
        &["lambda", "mu", "alpha", "beta"],
        256,
        &["M6", "M7"],
        &[("tp2 = -p2x^2t", "tp2 = -p2t", "stray x^2 in the t-relation of p2")]
    ),
    fam!("U19", I, 256, &["M9", "M10"], &[]),
];

pub fn family(id: &str) -> Result<&'static Family, LiftingError> {
    let norm = id.replace(',', "_");
    FAMILIES.iter().find(|f| f.id == norm).ok_or_else(|| LiftingError::UnknownFamily(id.to_string()))
}

pub fn family_ids() -> Vec<&'static str> {
    FAMILIES.iter().map(|f| f.id).collect()
}

/// How the presentation is assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// Relations and coproducts exactly as printed.
    AsWritten,
    /// As printed, plus the Nichols relations of the infinitesimal braiding
    /// that the printed relations do not already give.
    Completed,
    /// Reviewed misprint corrections applied, coproducts of letter blocks
    /// aligned with the expected summands where the action already agrees,
    /// then completed.
    Corrected,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::AsWritten => "as-written",
            Variant::Completed => "completed",
            Variant::Corrected => "corrected",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftingParams {
    pub family: String,
    /// Only parameters the family declares; the rest default to zero.
    pub values: Vec<(String, Scalar)>,
    pub variant: Variant,
}

impl LiftingParams {
    pub fn new(family: &str, values: &[(&str, Scalar)]) -> LiftingParams {
        LiftingParams {
            family: family.to_string(),
            values: values.iter().map(|(n, v)| (n.to_string(), v.clone())).collect(),
            variant: Variant::AsWritten,
        }
    }

    pub fn zero(family: &str) -> LiftingParams {
        LiftingParams::new(family, &[])
    }

    /// Every declared parameter set to `v`.
    pub fn all(family: &str, v: Scalar) -> Result<LiftingParams, LiftingError> {
        let f = self::family(family)?;
        let vals: Vec<(&str, Scalar)> = f.params.iter().map(|&n| (n, v.clone())).collect();
        Ok(LiftingParams::new(f.id, &vals))
    }

    /// Declared parameters alternate `1, 0, 1, …`.
    pub fn mixed(family: &str) -> Result<LiftingParams, LiftingError> {
        let f = self::family(family)?;
        let vals: Vec<(&str, Scalar)> =
            f.params.iter().enumerate().map(|(i, &n)| (n, Scalar::int(if i % 2 == 0 { 1 } else { 0 }))).collect();
        Ok(LiftingParams::new(f.id, &vals))
    }

    pub fn with_variant(mut self, v: Variant) -> LiftingParams {
        self.variant = v;
        self
    }

    pub fn validate(&self) -> Result<&'static Family, LiftingError> {
        let f = family(&self.family)?;
        for (n, _) in &self.values {
            if !f.params.contains(&n.as_str()) {
                return Err(LiftingError::UnknownParameter { family: f.id.to_string(), name: n.clone() });
            }
        }
        Ok(f)
    }

    pub fn show(&self) -> String {
        let f = family(&self.family).map(|f| f.params).unwrap_or(&[]);
        let vals: Vec<String> = f
            .iter()
            .map(|&n| {
                let v = self.values.iter().find(|(m, _)| m == n).map(|(_, v)| v.clone()).unwrap_or_else(Scalar::zero);
                format!("{n}={v}")
            })
            .collect();
        format!("{}({})", self.family, vals.join(", "))
    }
}

impl Family {
    /// Text with the reviewed corrections applied.
    pub fn corrected_text(&self) -> String {
        let mut t = self.text.to_string();
        for (from, to, _) in self.corrections {
            t = t.replace(from, to);
        }
        t
    }

    /// Parsed presentation; `corrected` applies the reviewed corrections.
    pub fn presentation(&self, values: &[(String, Scalar)], corrected: bool) -> Result<Presentation, LiftingError> {
        let ov: Vec<(&str, Scalar)> = values.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        let text = if corrected { self.corrected_text() } else { self.text.to_string() };
        Ok(parse_with(&text, &ov)?)
    }

    pub fn two_generator(&self) -> bool {
        self.dim == 64
    }
}
