//! Alphabets, words and term orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

pub type Word = Vec<u8>;

/// Group-side letters generate the coradical; braided letters are the
/// skew-primitive generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Group,
    Braided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    pub names: Vec<String>,
    pub kinds: Vec<Kind>,
}

impl Alphabet {
    /// Letters in ascending precedence within each kind.
    pub fn new(group: &[&str], braided: &[&str]) -> Alphabet {
        let mut names = Vec::new();
        let mut kinds = Vec::new();
        for g in braided {
            names.push(g.to_string());
            kinds.push(Kind::Braided);
        }
        for g in group {
            names.push(g.to_string());
            kinds.push(Kind::Group);
        }
        Alphabet { names, kinds }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn is_braided(&self, l: u8) -> bool {
        self.kinds[l as usize] == Kind::Braided
    }

    fn desc(&self, kind: Kind) -> Vec<u8> {
        (0..self.len() as u8).rev().filter(|&l| self.kinds[l as usize] == kind).collect()
    }

    /// Renders a word, collapsing runs into powers: `p1p2x^3yt`.
    pub fn show(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            out.push_str(&self.names[w[i] as usize]);
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }

    pub fn braided_degree(&self, w: &[u8]) -> usize {
        w.iter().filter(|&&l| self.is_braided(l)).count()
    }
}

/// Term orders on words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TermOrder {
    /// Braided degree first, then the group-letter segments between braided
    /// letters from the left, then the braided letters alone. Segments and
    /// braided subwords are compared by a wreath order: occurrences of the
    /// highest letter, then the pieces between them from the rightmost piece
    /// on, recursively. Group letters therefore move right past braided
    /// letters and `tx → x^3 t`, `x^4 → 1` are decreasing.
    Segmented,
    /// Length, then lexicographic by precedence (braided letters below
    /// group letters).
    Deglex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Alphabet, u: &[u8], v: &[u8]) -> Ordering {
        match self {
            TermOrder::Deglex => u.len().cmp(&v.len()).then_with(|| u.cmp(v)),
            TermOrder::Segmented => segmented(a, u, v),
        }
    }
}

fn wreath(u: &[u8], v: &[u8], desc: &[u8]) -> Ordering {
    let Some((&top, rest)) = desc.split_first() else {
        return Ordering::Equal;
    };
    let cu = u.iter().filter(|&&l| l == top).count();
    let cv = v.iter().filter(|&&l| l == top).count();
    if cu != cv {
        return cu.cmp(&cv);
    }
    let su: Vec<&[u8]> = u.split(|&l| l == top).collect();
    let sv: Vec<&[u8]> = v.split(|&l| l == top).collect();
    for (a, b) in su.iter().rev().zip(sv.iter().rev()) {
        let o = wreath(a, b, rest);
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

fn segmented(a: &Alphabet, u: &[u8], v: &[u8]) -> Ordering {
    let ku = a.braided_degree(u);
    let kv = a.braided_degree(v);
    if ku != kv {
        return ku.cmp(&kv);
    }
    let gdesc = a.desc(Kind::Group);
    let su: Vec<&[u8]> = u.split(|&l| a.is_braided(l)).collect();
    let sv: Vec<&[u8]> = v.split(|&l| a.is_braided(l)).collect();
    for (x, y) in su.iter().zip(sv.iter()) {
        let o = wreath(x, y, &gdesc);
        if o != Ordering::Equal {
            return o;
        }
    }
    let bu: Vec<u8> = u.iter().copied().filter(|&l| a.is_braided(l)).collect();
    let bv: Vec<u8> = v.iter().copied().filter(|&l| a.is_braided(l)).collect();
    wreath(&bu, &bv, &a.desc(Kind::Braided))
}

/// Basis display order: braided subword first, then the term order.
pub fn basis_cmp(a: &Alphabet, order: TermOrder, u: &[u8], v: &[u8]) -> Ordering {
    let bu: Vec<u8> = u.iter().copied().filter(|&l| a.is_braided(l)).collect();
    let bv: Vec<u8> = v.iter().copied().filter(|&l| a.is_braided(l)).collect();
    order.cmp(a, &bu, &bv).then_with(|| order.cmp(a, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: &Alphabet, s: &str) -> Word {
        s.split_whitespace().map(|n| a.index(n).unwrap()).collect()
    }

    #[test]
    fn h_orientations() {
        let a = Alphabet::new(&["x", "y", "t"], &["p", "q"]);
        let o = TermOrder::Segmented;
        let gt = |l: &str, r: &str| o.cmp(&a, &w(&a, l), &w(&a, r)) == Ordering::Greater;
        assert!(gt("t x", "x x x t"));
        assert!(gt("t y", "y t"));
        assert!(gt("y x", "x y"));
        assert!(gt("x x x x", ""));
        assert!(gt("t t", "x x y"));
        assert!(gt("t p", "p x x t"));
        assert!(gt("q p", "p q"));
        assert!(gt("p p", "x x"));
        assert!(gt("y p", "p y"));
    }

    #[test]
    fn deglex_misorients_tx() {
        let a = Alphabet::new(&["x", "y", "t"], &[]);
        let o = TermOrder::Deglex;
        assert_eq!(o.cmp(&a, &w(&a, "t x"), &w(&a, "x x x t")), Ordering::Less);
    }
}
