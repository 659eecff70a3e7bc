//! Closed-form coactions of the simple YD modules, compared with the
//! coactions computed from the dual basis.

use exactlin::{Scalar, SparseVec};
use kashina::{h_index, kashina_h};
use serde::{Deserialize, Serialize};
use simples::{Family, Rep};

use crate::YDModule;

fn mono(x: i64, y: i64, t: i64) -> SparseVec {
    SparseVec::unit(h_index(x.rem_euclid(4) as usize, y.rem_euclid(2) as usize, t.rem_euclid(2) as usize))
}

/// `½(x^e y^b t^s ± x^{e+2} y^b t^s)`.
fn half_pair(e: i64, b: i64, s: i64, sign: i64) -> SparseVec {
    mono(e, b, s).add_scaled(&mono(e + 2, b, s), &Scalar::int(sign)).scale(&Scalar::half())
}

fn sp(k: i64) -> Scalar {
    Scalar::sign_pow(k)
}

fn xp(k: i64) -> Scalar {
    Scalar::xi_pow(k)
}

fn mxp(k: i64) -> Scalar {
    (-&Scalar::xi()).pow(k)
}

fn fl(a: i64) -> i64 {
    a.div_euclid(2)
}

/// Entries `[i][o]` of the closed form: `δ(v_i) = Σ_o e[i][o] ⊗ v_o`.
pub fn closed_form(r: &Rep) -> Option<Vec<Vec<SparseVec>>> {
    let q = &r.index;
    Some(match r.family {
        Family::Character => {
            let (j, k, l) = (q[1], q[2], q[3]);
            vec![vec![mono(j + 2 * k + 2 * l, k, 0)]]
        }
        Family::V => {
            let (k, l) = (q[2], q[3]);
            let (e, s) = (k + l, k % 2);
            let (y0, y1) = (fl(k), fl(k + 1));
            vec![
                vec![half_pair(e, y0, s, 1), half_pair(e, y1, s, -1).scale(&(&sp(fl(k)) * &xp(k + l)))],
                vec![half_pair(e, y1, s, -1).scale(&(&sp(fl(k)) * &xp(k - l))), half_pair(e, y1, s, 1)],
            ]
        }
        Family::W1 => {
            let (i, k) = (q[0], q[2]);
            let e = i + k;
            let y = fl(i);
            vec![
                vec![half_pair(e, y, 1, 1), half_pair(e, y + 1, 1, -1).scale(&(&sp(y) * &xp(e)))],
                vec![half_pair(e, y, 1, -1).scale(&(&sp(y) * &mxp(e))), half_pair(e, y + 1, 1, 1)],
            ]
        }
        Family::W2 => {
            let (i, k) = (q[0], q[2]);
            let e = i + k;
            let y = fl(i);
            vec![
                vec![half_pair(e, y + 1, 1, 1), half_pair(e, y, 1, -1).scale(&(&sp(y + 1) * &xp(e)))],
                vec![half_pair(e, y + 1, 1, -1).scale(&(&sp(fl(e)) * &xp(e))), half_pair(e, y, 1, 1)],
            ]
        }
        Family::W3 => {
            let (i, k) = (q[0], q[2]);
            let e = i + k;
            vec![
                vec![half_pair(e, 0, 1, 1), half_pair(e, 1, 1, -1).scale(&xp(e))],
                vec![half_pair(e, 0, 1, -1).scale(&mxp(e)), half_pair(e, 1, 1, 1)],
            ]
        }
        Family::W4 => {
            let (i, k) = (q[0], q[2]);
            let e = i + k;
            vec![
                vec![half_pair(e, 1, 1, 1), half_pair(e, 0, 1, -1).scale(&(-&xp(e)))],
                vec![half_pair(e, 1, 1, -1).scale(&(&sp(k) * &xp(e))), half_pair(e, 0, 1, 1)],
            ]
        }
        Family::U => {
            let (j, k, l) = (q[1], q[2], q[3]);
            vec![
                vec![mono(l + if j % 2 == 0 { 2 * k } else { -2 * k }, k, 0), SparseVec::zero()],
                vec![SparseVec::zero(), mono(2 * (j - k).abs() - l + 4, k + 1, 0)],
            ]
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub module: String,
    pub matches: bool,
    /// Entries `(i, o)` of `δ(v_i)`'s `v_o` component that differ.
    pub differing: Vec<(usize, usize)>,
    pub computed: Vec<String>,
    pub closed_form: Vec<String>,
}

pub fn compare_closed_form(r: &Rep, m: &YDModule) -> Option<ClosedFormCheck> {
    let cf = closed_form(r)?;
    let h = &kashina_h().hopf;
    let mut differing = Vec::new();
    let mut computed = Vec::new();
    let mut closed = Vec::new();
    for (i, row) in cf.iter().enumerate() {
        let mut cparts = Vec::new();
        let mut fparts = Vec::new();
        for (o, f) in row.iter().enumerate() {
            let c = m.coaction_entry(o, i);
            if &c != f {
                differing.push((i, o));
            }
            if !c.is_zero() {
                cparts.push(format!("({}) ⊗ v{}", h.show(&c), o + 1));
            }
            if !f.is_zero() {
                fparts.push(format!("({}) ⊗ v{}", h.show(f), o + 1));
            }
        }
        computed.push(cparts.join(" + "));
        closed.push(fparts.join(" + "));
    }
    Some(ClosedFormCheck { module: r.name(), matches: differing.is_empty(), differing, computed, closed_form: closed })
}
