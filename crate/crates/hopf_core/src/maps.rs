//! Checking that a linear map between Hopf algebras is a Hopf map.

use exactlin::{Acc, Mat, SparseVec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{span_certificate, HopfData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    pub unit: bool,
    pub multiplicative: bool,
    pub counit: bool,
    pub comultiplicative: bool,
    pub bijective: bool,
    pub antipode: bool,
    /// First failing basis tuple of the first failing check.
    pub witness: Option<(String, Vec<usize>)>,
    pub method: String,
}

impl MapReport {
    pub fn is_hopf_map(&self) -> bool {
        self.unit && self.multiplicative && self.counit && self.comultiplicative && self.antipode
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_hopf_map() && self.bijective
    }
}

fn apply(phi: &[SparseVec], v: &SparseVec, n: usize) -> SparseVec {
    let mut acc = Acc::new(n);
    for (i, c) in v.iter() {
        acc.add_vec(&phi[i], c);
    }
    acc.take()
}

fn apply2(phi: &[SparseVec], v: &SparseVec, n1: usize, n2: usize) -> SparseVec {
    let mut acc = Acc::new(n2 * n2);
    for (p, c) in v.iter() {
        acc.add_vec(&phi[p / n1].tensor(&phi[p % n1], n2), c);
    }
    acc.take()
}

/// `phi[i]` is the image of basis element `i` of `a` in `b`. Multiplicativity
/// is checked on generator × basis pairs (plus a span certificate) when `a`
/// has generators and dimension above 64.
pub fn verify_hopf_map(a: &HopfData, b: &HopfData, phi: &[SparseVec]) -> MapReport {
    let (n1, n2) = (a.dim, b.dim);
    assert_eq!(phi.len(), n1);
    let mut witness: Option<(String, Vec<usize>)> = None;
    let mut note = |name: &str, w: Option<Vec<usize>>| {
        if let Some(w) = w.clone() {
            witness.get_or_insert((name.to_string(), w));
        }
        w.is_none()
    };
    let unit = note("unit", (apply(phi, &a.unit, n2) != b.unit).then(Vec::new));
    let cert = n1 > 64 && !a.generators.is_empty();
    let multiplicative = if cert {
        let span = span_certificate(a);
        let gens: Vec<SparseVec> = a.generators.iter().map(|g| g.vec.clone()).collect();
        let gimg: Vec<SparseVec> = gens.iter().map(|g| apply(phi, g, n2)).collect();
        let w = (0..gens.len() * n1)
            .into_par_iter()
            .find_first(|&t| {
                let (g, u) = (t / n1, t % n1);
                let lhs = apply(phi, &a.mul(&gens[g], &SparseVec::unit(u)), n2);
                lhs != b.mul(&gimg[g], &phi[u])
            })
            .map(|t| vec![t / n1, t % n1]);
        note("multiplicative", if span { w } else { Some(vec![]) })
    } else {
        let w = (0..n1 * n1)
            .into_par_iter()
            .find_first(|&t| {
                let (i, j) = (t / n1, t % n1);
                apply(phi, a.mul_basis(i, j), n2) != b.mul(&phi[i], &phi[j])
            })
            .map(|t| vec![t / n1, t % n1]);
        note("multiplicative", w)
    };
    let counit = note("counit", (0..n1).find(|&i| b.counit_of(&phi[i]) != a.counit[i]).map(|i| vec![i]));
    let comultiplicative = note(
        "comultiplicative",
        (0..n1)
            .into_par_iter()
            .find_first(|&i| apply2(phi, a.delta_basis(i), n1, n2) != b.delta(&phi[i]))
            .map(|i| vec![i]),
    );
    let antipode = match (&a.antipode, &b.antipode) {
        (Some(sa), Some(_)) => note(
            "antipode",
            (0..n1).find(|&i| apply(phi, &sa[i], n2) != b.antipode_of(&phi[i]).unwrap()).map(|i| vec![i]),
        ),
        // A bialgebra map between Hopf algebras commutes with antipodes.
        _ => true,
    };
    let bijective = n1 == n2 && {
        let m = Mat::from_cols(&phi.iter().map(|v| v.to_dense(n2)).collect::<Vec<_>>());
        m.rank() == n1
    };
    MapReport {
        unit,
        multiplicative,
        counit,
        comultiplicative,
        bijective,
        antipode,
        witness,
        method: if cert { "generator-certificate".into() } else { "exhaustive".into() },
    }
}
