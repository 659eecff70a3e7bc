//! Commutative polynomial systems over Q(ξ): lex Gröbner bases and exact
//! solution of zero-dimensional systems whose solutions lie in Q(ξ).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use exactlin::{Rat, Scalar};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("system is not zero-dimensional")]
    NotZeroDimensional,
    #[error("univariate factor of degree {degree} has only {found} roots in Q(xi)")]
    RootsOutsideField { degree: usize, found: usize },
}

/// Polynomial in `nvars` commuting variables; terms keyed by exponent vector.
/// Lex order with variable 0 largest, which is the natural order on `Vec<u16>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Scalar::one());
        p
    }

    pub fn add_term(&mut self, e: Vec<u16>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Scalar)> {
        self.terms.iter()
    }

    pub fn lead(&self) -> Option<(&Vec<u16>, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.lead().map_or(true, |(e, _)| e.iter().all(|&d| d == 0))
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c);
        }
        r
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c * s);
        }
        r
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        r
    }

    fn mul_term(&self, e: &[u16], c: &Scalar) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            r.terms.insert(e1.iter().zip(e).map(|(a, b)| a + b).collect(), c1 * c);
        }
        r
    }

    fn monic(&self) -> Poly {
        match self.lead() {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Value at a full assignment.
    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &d) in e.iter().enumerate() {
                if d > 0 {
                    t = &t * &x[i].pow(d as i64);
                }
            }
            s += &t;
        }
        s
    }
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full reduction of `p` modulo `g` (monic leading coefficients assumed).
pub fn reduce(p: &Poly, g: &[Poly]) -> Poly {
    let mut p = p.clone();
    let mut rem = Poly::zero(p.nvars);
    while let Some((e, c)) = p.lead().map(|(e, c)| (e.clone(), c.clone())) {
        let div = g.iter().find(|q| divides(q.lead().unwrap().0, &e));
        match div {
            Some(q) => {
                let qe = q.lead().unwrap().0;
                let shift: Vec<u16> = e.iter().zip(qe).map(|(a, b)| a - b).collect();
                p = p.sub(&q.mul_term(&shift, &c));
            }
            None => {
                p.terms.remove(&e);
                rem.terms.insert(e, c);
            }
        }
    }
    rem
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let (ef, _) = f.lead().unwrap();
    let (eg, _) = g.lead().unwrap();
    let l = lcm(ef, eg);
    let sf: Vec<u16> = l.iter().zip(ef).map(|(a, b)| a - b).collect();
    let sg: Vec<u16> = l.iter().zip(eg).map(|(a, b)| a - b).collect();
    f.mul_term(&sf, &Scalar::one()).sub(&g.mul_term(&sg, &Scalar::one()))
}

/// Reduced lex Gröbner basis.
pub fn groebner(input: &[Poly]) -> Vec<Poly> {
    let nvars = input.first().map_or(0, |p| p.nvars);
    let mut basis: Vec<Poly> = Vec::new();
    for p in input {
        let r = reduce(p, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis.iter().any(|p| p.is_constant()) {
        return vec![Poly::constant(nvars, Scalar::one())];
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let deg = |e: &[u16]| e.iter().map(|&d| d as u32).sum::<u32>();
    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree first
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = deg(&lcm(basis[a.0].lead().unwrap().0, basis[a.1].lead().unwrap().0));
                let lb = deg(&lcm(basis[b.0].lead().unwrap().0, basis[b.1].lead().unwrap().0));
                la.cmp(&lb).then(Ordering::Equal)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(k);
        let (ei, ej) = (basis[i].lead().unwrap().0, basis[j].lead().unwrap().0);
        if ei.iter().zip(ej).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let r = reduce(&s_poly(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.is_constant() {
            return vec![Poly::constant(nvars, Scalar::one())];
        }
        let n = basis.len();
        for i in 0..n {
            pairs.push((i, n));
        }
        basis.push(r);
    }
    // minimalize
    let mut min: Vec<Poly> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let e = p.lead().unwrap().0;
        let dominated = basis.iter().enumerate().any(|(j, q)| {
            let f = q.lead().unwrap().0;
            j != i && divides(f, e) && (f != e || j < i)
        });
        if !dominated {
            min.push(p.clone());
        }
    }
    // interreduce
    let mut out = Vec::with_capacity(min.len());
    for i in 0..min.len() {
        let others: Vec<Poly> = min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        let (e, c) = min[i].lead().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut tail = min[i].clone();
        tail.terms.remove(&e);
        let mut r = reduce(&tail, &others);
        r.terms.insert(e, c);
        out.push(r.monic());
    }
    out.sort_by(|a, b| a.lead().unwrap().0.cmp(b.lead().unwrap().0));
    out
}

// ---- univariate helpers (coefficients low degree first) ----

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn uni_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].inv();
    while r.len() > db && !r.is_empty() {
        let c = &r[r.len() - 1] * &lb;
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &(&c * bi);
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn uni_div(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].inv();
    let mut q = vec![Scalar::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let c = &r[r.len() - 1] * &lb;
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &(&c * bi);
        }
        q[shift] = c;
        r.pop();
    }
    q
}

fn uni_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn uni_eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut s = Scalar::zero();
    for c in p.iter().rev() {
        s = &(&s * x) + c;
    }
    s
}

fn rationalize(v: f64) -> Rat {
    // continued fractions with a denominator bound
    let sign = if v < 0.0 { -1 } else { 1 };
    let mut x = v.abs();
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    for _ in 0..40 {
        let a = x.floor();
        if a > 1e9 {
            break;
        }
        let a = a as i64;
        let (h2, k2) = (a * h1 + h0, a * k1 + k0);
        if k2 > 100_000 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let f = x - a as f64;
        if f < 1e-10 {
            break;
        }
        x = 1.0 / f;
    }
    Rat::new(sign * h1, k1)
}

/// Roots in Q(ξ) of a univariate polynomial, certified complete: the number
/// of distinct exact roots found must equal the squarefree degree.
pub fn univariate_roots(p: &[Scalar]) -> Result<Vec<Scalar>, SolveError> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return if p.is_empty() { Err(SolveError::NotZeroDimensional) } else { Ok(vec![]) };
    }
    let dp: Vec<Scalar> = (1..p.len()).map(|i| &p[i] * &Scalar::int(i as i64)).collect();
    let g = uni_gcd(&p, &dp);
    let sf = if g.len() > 1 { uni_div(&p, &g) } else { p.clone() };
    let deg = sf.len() - 1;
    if deg == 1 {
        return Ok(vec![-&(&sf[0] * &sf[1].inv())]);
    }
    let lead = sf[deg].inv();
    let monic: Vec<Complex64> = sf
        .iter()
        .map(|c| {
            let (re, im) = (c * &lead).to_c64();
            Complex64::new(re, im)
        })
        .collect();
    let approx = durand_kerner(&monic);
    let mut roots: Vec<Scalar> = Vec::new();
    for z in approx {
        let cand = Scalar::new(rationalize(z.re), rationalize(z.im));
        if uni_eval(&sf, &cand).is_zero() && !roots.contains(&cand) {
            roots.push(cand);
        }
    }
    if roots.len() != deg {
        return Err(SolveError::RootsOutsideField { degree: deg, found: roots.len() });
    }
    Ok(roots)
}

fn durand_kerner(monic: &[Complex64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |s, c| s * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    z
}

/// Substitutes every assigned variable except `var`; the result is a
/// univariate polynomial in `var`.
fn specialize(p: &Poly, var: usize, vals: &[Option<Scalar>]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for (e, c) in p.terms() {
        let mut t = c.clone();
        for (i, &d) in e.iter().enumerate() {
            if i != var && d > 0 {
                t = &t * &vals[i].as_ref().expect("assigned").pow(d as i64);
            }
        }
        let k = e[var] as usize;
        if out.len() <= k {
            out.resize(k + 1, Scalar::zero());
        }
        out[k] += &t;
    }
    trim(out)
}

/// All solutions in Q(ξ)^n of a zero-dimensional system.
pub fn solve(system: &[Poly]) -> Result<Vec<Vec<Scalar>>, SolveError> {
    let Some(n) = system.first().map(|p| p.nvars) else { return Ok(vec![vec![]]) };
    let g = groebner(system);
    if g.len() == 1 && g[0].is_constant() && !g[0].is_zero() {
        return Ok(vec![]);
    }
    for v in 0..n {
        let has_pure = g.iter().any(|p| {
            let e = p.lead().unwrap().0;
            e[v] > 0 && e.iter().enumerate().all(|(i, &d)| i == v || d == 0)
        });
        if !has_pure {
            return Err(SolveError::NotZeroDimensional);
        }
    }
    // elimination layers: polys whose lead uses only variables >= v
    let layer =
        |v: usize| -> Vec<&Poly> { g.iter().filter(|p| p.lead().unwrap().0[..v].iter().all(|&d| d == 0)).collect() };
    let mut partial: Vec<Vec<Option<Scalar>>> = vec![vec![None; n]];
    for v in (0..n).rev() {
        let polys = layer(v);
        let mut next = Vec::new();
        for a in partial {
            let mut gcd: Vec<Scalar> = Vec::new();
            for p in &polys {
                let u = specialize(p, v, &a);
                gcd = if gcd.is_empty() { u } else { uni_gcd(&gcd, &u) };
            }
            if gcd.is_empty() {
                return Err(SolveError::NotZeroDimensional);
            }
            for r in univariate_roots(&gcd)? {
                let mut b = a.clone();
                b[v] = Some(r);
                next.push(b);
            }
        }
        partial = next;
    }
    let sols: Vec<Vec<Scalar>> = partial.into_iter().map(|a| a.into_iter().map(|x| x.unwrap()).collect()).collect();
    debug_assert!(sols.iter().all(|s| system.iter().all(|p| p.eval(s).is_zero())));
    Ok(sols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_with_line() {
        // x^2 + y^2 = 1, x = y  over Q(xi): x = ±1/√2 not in Q(xi)
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let one = Poly::constant(2, Scalar::one());
        let sys = vec![x.mul(&x).add(&y.mul(&y)).sub(&one), x.sub(&y)];
        assert!(matches!(solve(&sys), Err(SolveError::RootsOutsideField { .. })));
    }

    #[test]
    fn gaussian_roots() {
        // x^2 + 1 = 0, y = x + 1
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let one = Poly::constant(2, Scalar::one());
        let sys = vec![x.mul(&x).add(&one), y.sub(&x).sub(&one)];
        let mut s = solve(&sys).unwrap();
        s.sort_by_key(|v| v[0].to_string());
        assert_eq!(s.len(), 2);
        for v in &s {
            assert!(sys.iter().all(|p| p.eval(v).is_zero()));
        }
    }

    #[test]
    fn inconsistent_system_has_no_solutions() {
        let x = Poly::var(1, 0);
        let one = Poly::constant(1, Scalar::one());
        assert!(solve(&[x.clone(), x.sub(&one)]).unwrap().is_empty());
    }

    #[test]
    fn half_xi_root() {
        // 2x^2 - 2x + 1 = 0 has roots (1 ± xi)/2
        let p = vec![Scalar::int(1), Scalar::int(-2), Scalar::int(2)];
        let r = univariate_roots(&p).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&"1/2+1/2*xi".parse().unwrap()));
    }
}
