//! Elements of Q(xi) with xi^2 = -1.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rat::Rat;

/// `re + im*xi`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Rat,
    pub im: Rat,
}

impl Scalar {
    pub fn new(re: Rat, im: Rat) -> Scalar {
        Scalar { re, im }
    }

    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::int(1)
    }

    pub fn int(n: i64) -> Scalar {
        Scalar { re: Rat::int(n), im: Rat::ZERO }
    }

    pub fn frac(n: i64, d: i64) -> Scalar {
        Scalar { re: Rat::new(n, d), im: Rat::ZERO }
    }

    /// Gaussian integer `a + b*xi`.
    pub fn gauss(a: i64, b: i64) -> Scalar {
        Scalar { re: Rat::int(a), im: Rat::int(b) }
    }

    pub fn xi() -> Scalar {
        Scalar::gauss(0, 1)
    }

    pub fn half() -> Scalar {
        Scalar::frac(1, 2)
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar { re: r, im: Rat::ZERO }
    }

    /// `xi^k` for any integer `k`.
    pub fn xi_pow(k: i64) -> Scalar {
        match k.rem_euclid(4) {
            0 => Scalar::int(1),
            1 => Scalar::gauss(0, 1),
            2 => Scalar::int(-1),
            _ => Scalar::gauss(0, -1),
        }
    }

    /// `(-1)^k`.
    pub fn sign_pow(k: i64) -> Scalar {
        if k.rem_euclid(2) == 0 {
            Scalar::int(1)
        } else {
            Scalar::int(-1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm();
        Scalar { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn pow(&self, k: i64) -> Scalar {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub_ref(&self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar { re: &self.re * &o.re, im: Rat::ZERO };
        }
        Scalar { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

macro_rules! sc_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                $body(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                $body(&self, &o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                $body(&self, o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                $body(self, &o)
            }
        }
    };
}

sc_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_ref(b));
sc_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.sub_ref(b));
sc_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_ref(b));
sc_binop!(Div, div, |a: &Scalar, b: &Scalar| a.mul_ref(&b.inv()));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = self.add_ref(o);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = self.add_ref(&o);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = self.sub_ref(o);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_ref(o);
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::from_rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |leading: bool| -> String {
            let s = self.im.signum();
            let a = self.im.abs();
            let sign = if s < 0 {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            if a.is_one() {
                format!("{sign}xi")
            } else {
                format!("{sign}{a}*xi")
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", im_part(true))
        } else {
            write!(f, "{}{}", self.re, im_part(false))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse scalar from {:?}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

fn parse_term(t: &str) -> Option<Scalar> {
    let t = t.trim();
    if let Some(c) = t.strip_suffix("xi") {
        let c = c.trim_end_matches('*').trim();
        let coef: Rat = match c {
            "" | "+" => Rat::ONE,
            "-" => -Rat::ONE,
            _ => c.trim_start_matches('+').parse().ok()?,
        };
        Some(Scalar::new(Rat::ZERO, coef))
    } else {
        let r: Rat = t.trim_start_matches('+').parse().ok()?;
        Some(Scalar::from_rat(r))
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;
    /// Accepts the `Display` format: `a`, `b*xi`, `xi`, `a+b*xi`, `a-xi`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let bytes = s.as_bytes();
        let split = (1..bytes.len()).find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/');
        match split {
            None => parse_term(&s).ok_or_else(err),
            Some(i) => {
                let a = parse_term(&s[..i]).ok_or_else(err)?;
                let b = parse_term(&s[i..]).ok_or_else(err)?;
                Ok(a + b)
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_identities() {
        let xi = Scalar::xi();
        assert_eq!(&xi * &xi, Scalar::int(-1));
        assert_eq!(xi.pow(4), Scalar::one());
        assert_eq!(xi.pow(-1), Scalar::gauss(0, -1));
        for k in -8..8 {
            assert_eq!(Scalar::xi_pow(k), xi.pow(k));
        }
    }

    #[test]
    fn inverse() {
        let a = Scalar::new(Rat::new(1, 2), Rat::new(-3, 4));
        assert_eq!(&a * &a.inv(), Scalar::one());
    }

    #[test]
    fn display_parse_roundtrip() {
        let cases = [
            Scalar::zero(),
            Scalar::int(-3),
            Scalar::xi(),
            -Scalar::xi(),
            Scalar::new(Rat::new(1, 2), Rat::new(1, 2)),
            Scalar::new(Rat::new(-1, 2), Rat::new(-7, 3)),
            Scalar::new(Rat::ZERO, Rat::new(5, 2)),
        ];
        for c in cases {
            let s = c.to_string();
            assert_eq!(s.parse::<Scalar>().unwrap(), c, "{s}");
        }
        assert_eq!("1/2*xi".parse::<Scalar>().unwrap(), Scalar::new(Rat::ZERO, Rat::new(1, 2)));
    }
}
