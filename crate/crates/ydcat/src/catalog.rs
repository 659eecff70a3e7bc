//! Named modules `V1…V8`, `M1…M12` and the twist isomorphisms among them.

use exactlin::Mat;
use kashina::auts::tau;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use simples::{character_module, two_dim_module, Family, Rep};

use crate::{twist, yd_isomorphic, YDModule, YdError};

const CHARS: [[i64; 4]; 8] =
    [[0, 1, 1, 0], [0, 1, 1, 1], [0, 3, 1, 0], [0, 3, 1, 1], [1, 1, 0, 0], [1, 1, 0, 1], [1, 3, 0, 0], [1, 3, 0, 1]];

const MS: [(Family, [i64; 4]); 12] = [
    (Family::V, [0, 1, 2, 0]),
    (Family::V, [0, 2, 1, 0]),
    (Family::V, [0, 2, 1, 1]),
    (Family::V, [0, 2, 3, 0]),
    (Family::V, [0, 2, 3, 1]),
    (Family::V, [1, 0, 0, 1]),
    (Family::V, [1, 0, 2, 1]),
    (Family::V, [1, 1, 2, 0]),
    (Family::U, [1, 0, 0, 2]),
    (Family::U, [1, 0, 1, 0]),
    (Family::U, [1, 1, 0, 2]),
    (Family::U, [1, 1, 1, 2]),
];

fn digits(s: &str) -> Option<Vec<i64>> {
    s.chars().map(|c| c.to_digit(10).map(|d| d as i64)).collect()
}

/// Accepts `V1…V8`, `M1…M12`, `W1_100` (family `W¹`, index `(1,0,0)`),
/// and `chi_0110`, `V_0120`, `U_1002`.
pub fn rep_by_name(name: &str) -> Result<Rep, YdError> {
    let unknown = || YdError::UnknownModule(name.to_string());
    let invalid = |e: simples::SimplesError| YdError::InvalidIndex(e.to_string());
    if let Some((fam, idx)) = name.split_once('_') {
        let q = digits(idx).ok_or_else(unknown)?;
        let family = match fam {
            "chi" => {
                let [i, j, k, l] = <[i64; 4]>::try_from(q.as_slice()).map_err(|_| unknown())?;
                return character_module(i, j, k, l).map_err(invalid);
            }
            "V" => Family::V,
            "U" => Family::U,
            "W1" => Family::W1,
            "W2" => Family::W2,
            "W3" => Family::W3,
            "W4" => Family::W4,
            _ => return Err(unknown()),
        };
        return two_dim_module(family, &q).map_err(invalid);
    }
    let (p, n) = name.split_at(1);
    let n: usize = n.parse().map_err(|_| unknown())?;
    match p {
        "V" if (1..=8).contains(&n) => {
            let [i, j, k, l] = CHARS[n - 1];
            character_module(i, j, k, l).map_err(invalid)
        }
        "M" if (1..=12).contains(&n) => {
            let (f, q) = &MS[n - 1];
            two_dim_module(*f, q).map_err(invalid)
        }
        _ => Err(unknown()),
    }
}

pub fn module_by_name(name: &str) -> Result<YDModule, YdError> {
    let r = rep_by_name(name)?;
    let mut m = YDModule::from_rep(&r)?;
    m.name = name.to_string();
    Ok(m)
}

/// `V1…V8, M1…M12`, each verified.
pub fn catalog() -> Vec<YDModule> {
    let names: Vec<String> = (1..=8).map(|i| format!("V{i}")).chain((1..=12).map(|i| format!("M{i}"))).collect();
    names.par_iter().map(|n| module_by_name(n).expect("catalog modules are YD modules")).collect()
}

/// `(group, source, τ index, target)`.
pub fn twist_claims() -> Vec<(u8, &'static str, usize, &'static str)> {
    vec![
        (1, "V1", 17, "V2"),
        (1, "V3", 17, "V4"),
        (2, "V1", 49, "V5"),
        (2, "V2", 49, "V6"),
        (2, "V3", 49, "V7"),
        (2, "V4", 49, "V8"),
        (3, "V2", 33, "V5"),
        (3, "V4", 33, "V4"),
        (4, "M1", 49, "M8"),
        (4, "M2", 49, "M4"),
        (4, "M3", 55, "M5"),
        (5, "M6", 49, "M7"),
        (5, "M9", 12, "M11"),
        (5, "M10", 12, "M12"),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistCheck {
    pub group: u8,
    pub source: String,
    pub tau: usize,
    pub target: String,
    pub holds: bool,
    pub witness: Option<Mat>,
    /// Catalog modules actually isomorphic to the twist.
    pub isomorphic_to: Vec<String>,
    /// Braiding of the twist equals the braiding of the source.
    pub braiding_preserved: bool,
    pub twist_is_yd: bool,
}

pub fn verify_twist_claims() -> Vec<TwistCheck> {
    let cat = catalog();
    let get = |n: &str| cat.iter().find(|m| m.name == n).expect("catalog name");
    twist_claims()
        .par_iter()
        .map(|&(group, s, t, d)| {
            let src = get(s);
            let tw = twist(src, tau(t));
            let witness = yd_isomorphic(&tw, get(d));
            let isomorphic_to = cat
                .iter()
                .filter(|m| m.dim == tw.dim && yd_isomorphic(&tw, m).is_some())
                .map(|m| m.name.clone())
                .collect();
            TwistCheck {
                group,
                source: s.into(),
                tau: t,
                target: d.into(),
                holds: witness.is_some(),
                witness,
                isomorphic_to,
                braiding_preserved: crate::braiding(&tw, &tw) == crate::braiding(src, src),
                twist_is_yd: tw.verify().is_ok(),
            }
        })
        .collect()
}
