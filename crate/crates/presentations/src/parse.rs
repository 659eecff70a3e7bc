//! Recursive-descent parser for the presentation text format (see
//! `GRAMMAR.md` in this crate).

use exactlin::Scalar;
use serde::{Deserialize, Serialize};

use crate::poly::{NcPoly, TPoly};
use crate::rewrite::DEFAULT_CAP;
use crate::word::{Alphabet, Kind, TermOrder};
use crate::PresentationError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: NcPoly,
    pub rhs: NcPoly,
    /// Source text, e.g. `p^2 = lambda (1 - x^2)`.
    pub text: String,
    pub line: usize,
}

impl Relation {
    /// `lhs - rhs`.
    pub fn poly(&self) -> NcPoly {
        self.lhs.sub(&self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub name: String,
    pub alphabet: Alphabet,
    pub order: TermOrder,
    pub cap: usize,
    pub params: Vec<(String, Scalar)>,
    pub relations: Vec<Relation>,
    /// `Δ` of each letter, indexed like the alphabet.
    pub coproduct: Vec<Option<TPoly>>,
    pub counit: Vec<Scalar>,
}

impl Presentation {
    pub fn param(&self, name: &str) -> Option<&Scalar> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn relation_polys(&self) -> Vec<NcPoly> {
        self.relations.iter().map(|r| r.poly()).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Name(String),
    Sym(char),
}

fn lex(line: &str, ln: usize) -> Result<Vec<Tok>, PresentationError> {
    let mut out = Vec::new();
    let cs: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < cs.len() && cs[j].is_ascii_digit() {
                j += 1;
            }
            let s: String = cs[i..j].iter().collect();
            let v = s.parse::<i64>().map_err(|_| perr(ln, format!("integer {s} out of range")))?;
            out.push(Tok::Num(v));
            i = j;
        } else if c == 'ξ' {
            out.push(Tok::Name("xi".into()));
            i += 1;
        } else if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < cs.len() && (cs[j].is_alphanumeric() || cs[j] == '_') && cs[j] != 'ξ' {
                j += 1;
            }
            out.push(Tok::Name(cs[i..j].iter().collect()));
            i = j;
        } else {
            let s = match c {
                '⊗' => '@',
                '−' => '-',
                '·' => '*',
                '+' | '-' | '*' | '^' | '/' | '(' | ')' | '@' | '=' | '[' | ']' | ',' => c,
                _ => return Err(perr(ln, format!("unexpected character {c:?}"))),
            };
            out.push(Tok::Sym(s));
            i += 1;
        }
    }
    Ok(out)
}

fn perr(line: usize, msg: String) -> PresentationError {
    PresentationError::Parse { line, msg }
}

#[derive(Clone, Debug)]
enum Val {
    P(NcPoly),
    T(TPoly),
}

#[derive(Clone, Debug)]
enum Atom {
    Gen(u8),
    Const(Scalar),
}

struct Env<'a> {
    alphabet: &'a Alphabet,
    params: &'a [(String, Scalar)],
}

impl Env<'_> {
    fn exact(&self, s: &str) -> Option<Atom> {
        if s == "xi" {
            return Some(Atom::Const(Scalar::xi()));
        }
        if let Some((_, v)) = self.params.iter().find(|(n, _)| n == s) {
            return Some(Atom::Const(v.clone()));
        }
        self.alphabet.index(s).map(Atom::Gen)
    }

    /// Exact name, or a greedy longest-prefix split into known names
    /// (`tx` is `t x`, `p1p2` is `p1 p2`).
    fn resolve(&self, s: &str) -> Option<Vec<Atom>> {
        if let Some(a) = self.exact(s) {
            return Some(vec![a]);
        }
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let mut best = None;
            for (k, _) in rest.char_indices().skip(1).chain(std::iter::once((rest.len(), ' '))) {
                if let Some(a) = self.exact(&rest[..k]) {
                    best = Some((k, a));
                }
            }
            let (k, a) = best?;
            out.push(a);
            rest = &rest[k..];
        }
        Some(out)
    }
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    line: usize,
    env: Env<'a>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> PresentationError {
        perr(self.line, msg.into())
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// sum := ['+'|'-'] tensor (('+'|'-') tensor)*
    fn sum(&mut self) -> Result<Val, PresentationError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.tensor()?;
        if neg {
            acc = scale(acc, &-Scalar::one());
        }
        loop {
            if self.eat('+') {
                let t = self.tensor()?;
                acc = self.add(acc, t, Scalar::one())?;
            } else if self.eat('-') {
                let t = self.tensor()?;
                acc = self.add(acc, t, -Scalar::one())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn add(&self, a: Val, b: Val, c: Scalar) -> Result<Val, PresentationError> {
        match (a, b) {
            (Val::P(mut x), Val::P(y)) => {
                x.add_scaled(&y, &c);
                Ok(Val::P(x))
            }
            (Val::T(mut x), Val::T(y)) => {
                x.add_scaled(&y, &c);
                Ok(Val::T(x))
            }
            (Val::T(x), Val::P(y)) | (Val::P(y), Val::T(x)) if y.is_zero() => Ok(Val::T(x)),
            _ => Err(self.err("cannot add a polynomial to a tensor")),
        }
    }

    /// tensor := product (('@'|'⊗') product)?
    fn tensor(&mut self) -> Result<Val, PresentationError> {
        let a = self.product()?;
        if self.eat('@') {
            let b = self.product()?;
            match (a, b) {
                (Val::P(x), Val::P(y)) => Ok(Val::T(TPoly::tensor(&x, &y))),
                _ => Err(self.err("nested tensor product")),
            }
        } else {
            Ok(a)
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::Sym('(')))
    }

    /// product := power (['*'] power)*
    fn product(&mut self) -> Result<Val, PresentationError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                let b = self.power()?;
                acc = self.mul(acc, b)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn mul(&self, a: Val, b: Val) -> Result<Val, PresentationError> {
        match (a, b) {
            (Val::P(x), Val::P(y)) => Ok(Val::P(x.mul(&y))),
            (Val::T(x), Val::T(y)) => Ok(Val::T(x.mul(&y))),
            (Val::P(x), Val::T(y)) | (Val::T(y), Val::P(x)) => match x.as_scalar() {
                Some(c) => Ok(Val::T(y.scale(&c))),
                None => Err(self.err("a tensor can only be scaled by a constant")),
            },
        }
    }

    /// power := primary ('^' INT)?
    fn power(&mut self) -> Result<Val, PresentationError> {
        let base = self.primary()?;
        if self.eat('^') {
            let k = match self.peek() {
                Some(Tok::Num(k)) => *k,
                _ => return Err(self.err("expected an exponent")),
            };
            self.pos += 1;
            if !(0..=64).contains(&k) {
                return Err(self.err("exponent out of range"));
            }
            return Ok(match base {
                Val::P(p) => Val::P(p.pow(k as u32)),
                Val::T(t) => {
                    let mut r = TPoly::tensor(&NcPoly::one(), &NcPoly::one());
                    for _ in 0..k {
                        r = r.mul(&t);
                    }
                    Val::T(r)
                }
            });
        }
        Ok(base)
    }

    /// primary := INT ['/' INT] | NAME | '(' sum ')'
    /// A NAME that splits into several letters binds only its last letter
    /// to a following exponent, so `x^2y` and `xy^2` read as expected.
    fn primary(&mut self) -> Result<Val, PresentationError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.peek() {
                        Some(Tok::Num(d)) if *d != 0 => {
                            let d = *d;
                            self.pos += 1;
                            Ok(Val::P(NcPoly::constant(Scalar::frac(n, d))))
                        }
                        _ => Err(self.err("expected a nonzero denominator")),
                    }
                } else {
                    Ok(Val::P(NcPoly::constant(Scalar::int(n))))
                }
            }
            Some(Tok::Name(s)) => {
                self.pos += 1;
                let atoms = self.env.resolve(&s).ok_or_else(|| self.err(format!("unknown name {s}")))?;
                let mut p = NcPoly::one();
                let n = atoms.len();
                for (i, a) in atoms.into_iter().enumerate() {
                    let f = match a {
                        Atom::Gen(g) => NcPoly::word(vec![g]),
                        Atom::Const(c) => NcPoly::constant(c),
                    };
                    if i + 1 < n {
                        p = p.mul(&f);
                    } else {
                        // Leave the last atom to `power` by pushing back.
                        return self.finish_name(p, f);
                    }
                }
                Ok(Val::P(p))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of line")),
        }
    }

    fn finish_name(&mut self, prefix: NcPoly, last: NcPoly) -> Result<Val, PresentationError> {
        let last = if self.eat('^') {
            let k = match self.peek() {
                Some(Tok::Num(k)) if (0..=64).contains(k) => *k,
                _ => return Err(self.err("expected an exponent")),
            };
            self.pos += 1;
            last.pow(k as u32)
        } else {
            last
        };
        Ok(Val::P(prefix.mul(&last)))
    }
}

fn scale(v: Val, c: &Scalar) -> Val {
    match v {
        Val::P(p) => Val::P(p.scale(c)),
        Val::T(t) => Val::T(t.scale(c)),
    }
}

#[derive(PartialEq)]
enum Section {
    Header,
    Relations,
    Coproduct,
    Counit,
}

/// Joins backslash continuations and strips `#` comments; keeps the first
/// physical line number of each logical line.
fn logical_lines(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    for (i, raw) in text.lines().enumerate() {
        let l = raw.split('#').next().unwrap_or("");
        if cur.is_empty() {
            start = i + 1;
        }
        let t = l.trim_end();
        if let Some(s) = t.strip_suffix('\\') {
            cur.push_str(s);
            cur.push(' ');
            continue;
        }
        cur.push_str(t);
        if !cur.trim().is_empty() {
            out.push((start, cur.trim().to_string()));
        }
        cur.clear();
    }
    if !cur.trim().is_empty() {
        out.push((start, cur.trim().to_string()));
    }
    out
}

pub fn parse(text: &str) -> Result<Presentation, PresentationError> {
    parse_with(text, &[])
}

/// Parses a presentation; `overrides` replace declared parameter values.
pub fn parse_with(text: &str, overrides: &[(&str, Scalar)]) -> Result<Presentation, PresentationError> {
    let mut name = String::from("unnamed");
    let mut group: Vec<String> = Vec::new();
    let mut braided: Vec<String> = Vec::new();
    let mut params: Vec<(String, Scalar)> = Vec::new();
    let mut order = TermOrder::Segmented;
    let mut cap = DEFAULT_CAP;
    let mut section = Section::Header;
    let mut alphabet: Option<Alphabet> = None;
    let mut relations = Vec::new();
    let mut coproduct: Vec<Option<TPoly>> = Vec::new();
    let mut counit: Vec<Option<Scalar>> = Vec::new();

    for (ln, line) in logical_lines(text) {
        if line.starts_with('[') {
            section = match line.as_str() {
                "[relations]" => Section::Relations,
                "[coproduct]" => Section::Coproduct,
                "[counit]" => Section::Counit,
                _ => return Err(perr(ln, format!("unknown section {line}"))),
            };
            if alphabet.is_none() {
                let g: Vec<&str> = group.iter().map(|s| s.as_str()).collect();
                let b: Vec<&str> = braided.iter().map(|s| s.as_str()).collect();
                if g.is_empty() && b.is_empty() {
                    return Err(perr(ln, "no generators declared".into()));
                }
                let a = Alphabet::new(&g, &b);
                coproduct = vec![None; a.len()];
                counit = vec![None; a.len()];
                alphabet = Some(a);
            }
            continue;
        }
        let toks = lex(&line, ln)?;
        if section == Section::Header {
            let Some(Tok::Name(kw)) = toks.first() else {
                return Err(perr(ln, "expected a header keyword".into()));
            };
            let names = || -> Result<Vec<String>, PresentationError> {
                toks[1..]
                    .iter()
                    .filter(|t| **t != Tok::Sym(','))
                    .map(|t| match t {
                        Tok::Name(n) => Ok(n.clone()),
                        _ => Err(perr(ln, "expected names".into())),
                    })
                    .collect()
            };
            match kw.as_str() {
                "name" => name = line["name".len()..].trim().to_string(),
                "generators" => group = names()?,
                "braided" => braided = names()?,
                "order" => {
                    order = match names()?.first().map(|s| s.as_str()) {
                        Some("segmented") => TermOrder::Segmented,
                        Some("deglex") => TermOrder::Deglex,
                        _ => return Err(perr(ln, "order must be segmented or deglex".into())),
                    }
                }
                "cap" => match toks.get(1) {
                    Some(Tok::Num(k)) if *k > 0 => cap = *k as usize,
                    _ => return Err(perr(ln, "cap must be a positive integer".into())),
                },
                "param" => {
                    let Some(Tok::Name(pn)) = toks.get(1) else {
                        return Err(perr(ln, "expected a parameter name".into()));
                    };
                    let value = if let Some((_, v)) = overrides.iter().find(|(n, _)| n == pn) {
                        v.clone()
                    } else if toks.get(2) == Some(&Tok::Sym('=')) {
                        let empty = Alphabet::new(&[], &[]);
                        let mut p = Parser {
                            toks: toks[3..].to_vec(),
                            pos: 0,
                            line: ln,
                            env: Env { alphabet: &empty, params: &params },
                        };
                        let v = p.sum()?;
                        if !p.at_end() {
                            return Err(p.err("trailing tokens"));
                        }
                        match v {
                            Val::P(q) => {
                                q.as_scalar().ok_or_else(|| perr(ln, "parameter must be a constant".into()))?
                            }
                            Val::T(_) => return Err(perr(ln, "parameter must be a constant".into())),
                        }
                    } else {
                        return Err(perr(ln, format!("parameter {pn} has no value")));
                    };
                    params.retain(|(n, _)| n != pn);
                    params.push((pn.clone(), value));
                }
                _ => return Err(perr(ln, format!("unknown header keyword {kw}"))),
            }
            continue;
        }
        let a = alphabet.as_ref().expect("set on first section");
        let mut p = Parser { toks, pos: 0, line: ln, env: Env { alphabet: a, params: &params } };
        match section {
            Section::Relations => {
                let mut sides = vec![p.sum()?];
                while p.eat('=') {
                    sides.push(p.sum()?);
                }
                if !p.at_end() {
                    return Err(p.err("trailing tokens"));
                }
                if sides.len() < 2 {
                    return Err(p.err("a relation needs '='"));
                }
                let polys: Vec<NcPoly> = sides
                    .into_iter()
                    .map(|v| match v {
                        Val::P(q) => Ok(q),
                        Val::T(_) => Err(perr(ln, "tensor in a relation".into())),
                    })
                    .collect::<Result<_, _>>()?;
                // `a = b = c` contributes `a = c` and `b = c`.
                let last = polys.last().unwrap().clone();
                for q in &polys[..polys.len() - 1] {
                    relations.push(Relation { lhs: q.clone(), rhs: last.clone(), text: line.clone(), line: ln });
                }
            }
            Section::Coproduct | Section::Counit => {
                let g = match p.peek() {
                    Some(Tok::Name(n)) => a.index(n).ok_or_else(|| p.err(format!("unknown generator {n}")))?,
                    _ => return Err(p.err("expected a generator name")),
                };
                p.pos += 1;
                if !p.eat('=') {
                    return Err(p.err("expected '='"));
                }
                let v = p.sum()?;
                if !p.at_end() {
                    return Err(p.err("trailing tokens"));
                }
                if section == Section::Coproduct {
                    match v {
                        Val::T(t) => coproduct[g as usize] = Some(t),
                        Val::P(_) => return Err(p.err("coproduct must be a tensor")),
                    }
                } else {
                    match v {
                        Val::P(q) => {
                            counit[g as usize] = Some(q.as_scalar().ok_or_else(|| p.err("counit must be a constant"))?)
                        }
                        Val::T(_) => return Err(p.err("counit must be a constant")),
                    }
                }
            }
            Section::Header => unreachable!(),
        }
    }
    let alphabet = alphabet.ok_or_else(|| perr(0, "no sections".into()))?;
    let counit = counit
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.unwrap_or_else(|| if alphabet.kinds[i] == Kind::Group { Scalar::one() } else { Scalar::zero() })
        })
        .collect();
    Ok(Presentation { name, alphabet, order, cap, params, relations, coproduct, counit })
}
