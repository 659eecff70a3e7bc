//! Solving for the antipode as the convolution inverse of the identity.

use std::collections::HashMap;

use exactlin::{Mat, Scalar, SparseVec};

use crate::{HopfData, HopfError};

/// Dense solve of `S * id = η ε`; `n²` unknowns, so only for small algebras.
pub fn solve_antipode_dense(h: &HopfData) -> Result<Vec<SparseVec>, HopfError> {
    let n = h.dim;
    // Unknown S[m][a] (coefficient of e_m in S(e_a)) at column m * n + a.
    let mut a = Mat::zeros(n * n, n * n);
    let mut rhs = vec![Scalar::zero(); n * n];
    for i in 0..n {
        for (p, c) in h.delta_basis(i).iter() {
            let (x, b) = (p / n, p % n);
            for m in 0..n {
                for (k, z) in h.mul_basis(m, b).iter() {
                    let e = a.entry_mut(i * n + k, m * n + x);
                    *e += c * z;
                }
            }
        }
        for (k, u) in h.unit.iter() {
            rhs[i * n + k] = &h.counit[i] * u;
        }
    }
    let sol = a.solve_linear(&rhs).ok_or_else(|| HopfError::NoAntipode("S * id = 1ε inconsistent".into()))?;
    Ok((0..n).map(|x| SparseVec::from_dense(&(0..n).map(|m| sol[m * n + x].clone()).collect::<Vec<_>>())).collect())
}

/// Solves `S(g)` generator by generator, then extends anti-multiplicatively
/// along `basis_words`. Each generator's equations must involve first tensor
/// legs whose words contain that generator at most once, with all other
/// letters already solved.
pub fn solve_antipode_by_generators(h: &HopfData) -> Result<Vec<SparseVec>, HopfError> {
    let n = h.dim;
    let words = h.basis_words.as_ref().ok_or_else(|| HopfError::Unsolvable("no basis words".into()))?;
    let ng = h.generators.len();
    let gen_basis: Vec<usize> = h
        .generators
        .iter()
        .map(|g| {
            let mut it = g.vec.iter();
            match (it.next(), it.next()) {
                (Some((i, c)), None) if c.is_one() => Ok(i),
                _ => Err(HopfError::Unsolvable(format!("generator {} is not a basis element", g.name))),
            }
        })
        .collect::<Result<_, _>>()?;
    let mut solved: Vec<Option<SparseVec>> = vec![None; ng];
    let mut progress = true;
    while progress && solved.iter().any(|s| s.is_none()) {
        progress = false;
        for g in 0..ng {
            if solved[g].is_some() {
                continue;
            }
            if let Some(sg) = try_generator(h, words, &gen_basis, &solved, g)? {
                solved[g] = Some(sg);
                progress = true;
            }
        }
    }
    if let Some(g) = solved.iter().position(|s| s.is_none()) {
        return Err(HopfError::Unsolvable(format!("no solving order reaches generator {}", h.generators[g].name)));
    }
    let sg: Vec<SparseVec> = solved.into_iter().map(|s| s.unwrap()).collect();
    let mut memo: HashMap<Vec<usize>, SparseVec> = HashMap::new();
    let mut out = Vec::with_capacity(n);
    for w in words {
        out.push(word_antipode(h, &sg, w, &mut memo));
    }
    Ok(out)
}

fn word_antipode(h: &HopfData, sg: &[SparseVec], w: &[usize], memo: &mut HashMap<Vec<usize>, SparseVec>) -> SparseVec {
    if w.is_empty() {
        return h.one();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let rest = word_antipode(h, sg, &w[1..], memo);
    let v = h.mul(&rest, &sg[w[0]]);
    memo.insert(w.to_vec(), v.clone());
    v
}

/// Linear system for `S(g)` from both antipode identities applied to `g`.
fn try_generator(
    h: &HopfData,
    words: &[Vec<usize>],
    gen_basis: &[usize],
    solved: &[Option<SparseVec>],
    g: usize,
) -> Result<Option<SparseVec>, HopfError> {
    let n = h.dim;
    let d = h.delta_basis(gen_basis[g]);
    // Express S(e_a) for a first (resp. second) leg as constant + linear map of S(g).
    // Linear part stored as (left, right) factors: S(e_a) = L * S(g) * R.
    enum Leg {
        Const(SparseVec),
        Lin(SparseVec, SparseVec),
    }
    let leg = |a: usize| -> Option<Leg> {
        let w = &words[a];
        let cnt = w.iter().filter(|&&l| l == g).count();
        if cnt > 1 || w.iter().any(|&l| l != g && solved[l].is_none()) {
            return None;
        }
        let s = |l: usize| solved[l].clone().unwrap();
        // S(w_0 ... w_k) = S(w_k) ... S(w_0)
        if cnt == 0 {
            let mut r = h.one();
            for &l in w.iter().rev() {
                r = h.mul(&r, &s(l));
            }
            return Some(Leg::Const(r));
        }
        let pos = w.iter().position(|&l| l == g).unwrap();
        let mut left = h.one();
        for &l in w[pos + 1..].iter().rev() {
            left = h.mul(&left, &s(l));
        }
        let mut right = h.one();
        for &l in w[..pos].iter().rev() {
            right = h.mul(&right, &s(l));
        }
        Some(Leg::Lin(left, right))
    };
    // Columns: unknown coefficient u_m of e_m in S(g). Rows: two identities × n.
    // An identity whose legs involve another unsolved generator is left out;
    // either one alone determines S(g) when it exists.
    let mut a = Mat::zeros(2 * n, n);
    let mut rhs = vec![Scalar::zero(); 2 * n];
    for (k, u) in h.unit.iter() {
        rhs[k] = &h.counit[gen_basis[g]] * u;
        rhs[n + k] = rhs[k].clone();
    }
    let (mut use_left, mut use_right) = (true, true);
    for (p, c) in d.iter() {
        let (x, y) = (p / n, p % n);
        // S(e_x) e_y
        match leg(x) {
            None => use_left = false,
            Some(_) if !use_left => {}
            Some(Leg::Const(v)) => {
                for (k, z) in h.mul(&v, &SparseVec::unit(y)).iter() {
                    rhs[k] -= &(c * z);
                }
            }
            Some(Leg::Lin(l, r)) => {
                let rr = h.mul(&r, &SparseVec::unit(y));
                for m in 0..n {
                    let t = h.mul(&h.mul(&l, &SparseVec::unit(m)), &rr);
                    for (k, z) in t.iter() {
                        *a.entry_mut(k, m) += c * z;
                    }
                }
            }
        }
        // e_x S(e_y)
        match leg(y) {
            None => use_right = false,
            Some(_) if !use_right => {}
            Some(Leg::Const(v)) => {
                for (k, z) in h.mul(&SparseVec::unit(x), &v).iter() {
                    rhs[n + k] -= &(c * z);
                }
            }
            Some(Leg::Lin(l, r)) => {
                let ll = h.mul(&SparseVec::unit(x), &l);
                for m in 0..n {
                    let t = h.mul(&h.mul(&ll, &SparseVec::unit(m)), &r);
                    for (k, z) in t.iter() {
                        *a.entry_mut(n + k, m) += c * z;
                    }
                }
            }
        }
    }
    if !use_left && !use_right {
        return Ok(None);
    }
    let rows: Vec<usize> = (0..2 * n).filter(|&r| if r < n { use_left } else { use_right }).collect();
    let a = Mat::from_fn(rows.len(), n, |i, m| a.get(rows[i], m).clone());
    let rhs: Vec<Scalar> = rows.iter().map(|&r| rhs[r].clone()).collect();
    match a.solve_linear(&rhs) {
        Some(sol) => Ok(Some(SparseVec::from_dense(&sol))),
        None => Err(HopfError::NoAntipode(format!("generator {}", h.generators[g].name))),
    }
}

/// Dense for small dimension, generator method when basis words are known.
pub fn solve_antipode(h: &HopfData) -> Result<Vec<SparseVec>, HopfError> {
    if h.dim > 16 && h.basis_words.is_some() && !h.generators.is_empty() {
        solve_antipode_by_generators(h)
    } else {
        solve_antipode_dense(h)
    }
}

pub fn with_solved_antipode(h: HopfData) -> Result<HopfData, HopfError> {
    let s = solve_antipode(&h)?;
    Ok(h.with_antipode(s))
}
