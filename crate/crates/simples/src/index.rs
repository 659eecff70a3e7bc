//! Index sets Ω = Ω¹ ∪ Ω², Λ¹, Λ², Γ.

pub fn in_omega(i: i64, j: i64, k: i64, l: i64) -> bool {
    let o1 = i == 0 && (0..4).contains(&j) && (k == 1 || k == 3) && (0..2).contains(&l);
    let o2 =
        (0..2).contains(&i) && (0..2).contains(&j) && (k == 0 || k == 2) && (0..2).contains(&l) && (j + l) % 2 == 1;
    o1 || o2
}

pub fn in_lambda1(i: i64, j: i64, k: i64) -> bool {
    let bits = (0..2).contains(&j) && (0..2).contains(&k);
    bits && (i == 1 || (i == 3 && (j + k) % 2 == 0))
}

pub fn in_lambda2(i: i64, j: i64, k: i64) -> bool {
    i == 1 && (0..2).contains(&j) && (0..2).contains(&k) && (j + k) % 2 == 1
}

pub fn in_gamma(i: i64, j: i64, k: i64, l: i64) -> bool {
    i == 1 && (0..2).contains(&j) && (0..2).contains(&k) && (0..4).contains(&l)
}

fn quads(pred: impl Fn(i64, i64, i64, i64) -> bool) -> Vec<[i64; 4]> {
    let mut v = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    if pred(i, j, k, l) {
                        v.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    v
}

fn triples(pred: impl Fn(i64, i64, i64) -> bool) -> Vec<[i64; 3]> {
    quads(|i, j, k, l| l == 0 && pred(i, j, k)).into_iter().map(|q| [q[0], q[1], q[2]]).collect()
}

pub fn omega1() -> Vec<[i64; 4]> {
    quads(|i, j, k, l| i == 0 && in_omega(i, j, k, l) && k % 2 == 1)
}

pub fn omega2() -> Vec<[i64; 4]> {
    quads(|i, j, k, l| in_omega(i, j, k, l) && k % 2 == 0)
}

pub fn omega() -> Vec<[i64; 4]> {
    quads(in_omega)
}

pub fn lambda1() -> Vec<[i64; 3]> {
    triples(in_lambda1)
}

pub fn lambda2() -> Vec<[i64; 3]> {
    triples(in_lambda2)
}

pub fn gamma() -> Vec<[i64; 4]> {
    quads(in_gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities() {
        assert_eq!(omega1().len(), 16);
        assert_eq!(omega2().len(), 8);
        assert_eq!(omega().len(), 24);
        assert_eq!(lambda1().len(), 6);
        assert_eq!(lambda2().len(), 2);
        assert_eq!(gamma().len(), 16);
    }
}
