//! Noncommutative polynomials and their tensor squares.

use std::collections::BTreeMap;

use exactlin::Scalar;
use serde::{Deserialize, Serialize};

use crate::word::{Alphabet, TermOrder, Word};

/// Finite sum of scalar multiples of words; zero coefficients are pruned.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<(Word, Scalar)>", into = "Vec<(Word, Scalar)>")]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    pub fn constant(c: Scalar) -> NcPoly {
        NcPoly::monomial(Vec::new(), c)
    }

    pub fn one() -> NcPoly {
        NcPoly::constant(Scalar::one())
    }

    pub fn monomial(w: Word, c: Scalar) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_term(w, &c);
        p
    }

    pub fn word(w: Word) -> NcPoly {
        NcPoly::monomial(w, Scalar::one())
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NcPoly, c: &Scalar) {
        for (w, d) in &o.terms {
            self.add_term(w.clone(), &(d * c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[u8]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The scalar value when the polynomial is a constant.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_scaled(self, c);
        p
    }

    pub fn add(&self, o: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        p.add_scaled(o, &Scalar::one());
        p
    }

    pub fn sub(&self, o: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        p.add_scaled(o, &-Scalar::one());
        p
    }

    pub fn mul(&self, o: &NcPoly) -> NcPoly {
        let mut p = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                p.add_term(w, &(a * b));
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> NcPoly {
        let mut p = NcPoly::one();
        for _ in 0..k {
            p = p.mul(self);
        }
        p
    }

    /// Largest word and its coefficient.
    pub fn leading(&self, a: &Alphabet, order: TermOrder) -> Option<(&Word, &Scalar)> {
        self.terms.iter().max_by(|x, y| order.cmp(a, x.0, y.0))
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn show(&self, a: &Alphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| show_term(c, &a.show(w), w.is_empty())).collect();
        parts.join(" + ")
    }
}

fn show_term(c: &Scalar, w: &str, constant: bool) -> String {
    if constant {
        format!("{c}")
    } else if c.is_one() {
        w.to_string()
    } else {
        format!("({c})*{w}")
    }
}

/// Element of the tensor square of the free algebra: sum of `c · u ⊗ v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<(Word, Word, Scalar)>", into = "Vec<(Word, Word, Scalar)>")]
pub struct TPoly {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TPoly {
    pub fn zero() -> TPoly {
        TPoly::default()
    }

    pub fn tensor(a: &NcPoly, b: &NcPoly) -> TPoly {
        let mut t = TPoly::zero();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                t.add_term(u.clone(), v.clone(), &(x * y));
            }
        }
        t
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let k = (u, v);
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &TPoly, c: &Scalar) {
        for ((u, v), d) in &o.terms {
            self.add_term(u.clone(), v.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> TPoly {
        let mut t = TPoly::zero();
        t.add_scaled(self, c);
        t
    }

    /// Componentwise product in the tensor square.
    pub fn mul(&self, o: &TPoly) -> TPoly {
        let mut t = TPoly::zero();
        for ((u1, v1), a) in &self.terms {
            for ((u2, v2), b) in &o.terms {
                let mut u = u1.clone();
                u.extend_from_slice(u2);
                let mut v = v1.clone();
                v.extend_from_slice(v2);
                t.add_term(u, v, &(a * b));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn show(&self, a: &Alphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((u, v), c)| {
                let w = format!("{} @ {}", a.show(u), a.show(v));
                if c.is_one() {
                    w
                } else {
                    format!("({c})*{w}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl From<Vec<(Word, Scalar)>> for NcPoly {
    fn from(v: Vec<(Word, Scalar)>) -> NcPoly {
        let mut p = NcPoly::zero();
        for (w, c) in v {
            p.add_term(w, &c);
        }
        p
    }
}

impl From<NcPoly> for Vec<(Word, Scalar)> {
    fn from(p: NcPoly) -> Self {
        p.terms.into_iter().collect()
    }
}

impl From<Vec<(Word, Word, Scalar)>> for TPoly {
    fn from(v: Vec<(Word, Word, Scalar)>) -> TPoly {
        let mut t = TPoly::zero();
        for (u, w, c) in v {
            t.add_term(u, w, &c);
        }
        t
    }
}

impl From<TPoly> for Vec<(Word, Word, Scalar)> {
    fn from(t: TPoly) -> Self {
        t.terms.into_iter().map(|((u, v), c)| (u, v, c)).collect()
    }
}
