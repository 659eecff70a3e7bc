//! Small reference Hopf algebras.

use exactlin::{Scalar, SparseVec};

use crate::{Generator, HopfData};

/// Group algebra from a multiplication table on `0..n`, identity `e`.
pub fn group_algebra(table: &[Vec<usize>], e: usize) -> HopfData {
    let n = table.len();
    let mult = (0..n * n).map(|p| SparseVec::unit(table[p / n][p % n])).collect();
    let comult = (0..n).map(|i| SparseVec::unit(i * n + i)).collect();
    let inv: Vec<SparseVec> =
        (0..n).map(|i| SparseVec::unit((0..n).find(|&j| table[i][j] == e).expect("group table"))).collect();
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    HopfData::new(n, mult, SparseVec::unit(e), comult, vec![Scalar::one(); n], labels)
        .expect("group algebra")
        .with_antipode(inv)
}

/// `k[Z_n]` with generator `g = g1`.
pub fn cyclic(n: usize) -> HopfData {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let h = group_algebra(&table, 0);
    let words = (0..n).map(|i| vec![0; i]).collect();
    h.with_generators(vec![Generator { name: "g".into(), vec: SparseVec::unit(1 % n) }]).with_basis_words(words)
}
