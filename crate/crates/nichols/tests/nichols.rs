use exactlin::{Mat, Scalar, SparseVec};
use nichols::*;
use proptest::prelude::*;
use ydcat::module_by_name;

fn bs(name: &str) -> BraidedSpace {
    BraidedSpace::by_name(name).unwrap()
}

#[test]
fn rank_one_examples() {
    let r = nichols_dim(&bs("V1"), 6);
    assert_eq!(r.ranks, vec![1, 0]);
    assert_eq!(r.total(), Some(2));
    let flip = BraidedSpace::new("flip", 1, Mat::identity(1));
    assert_eq!(nichols_ranks(&flip, 6), vec![1; 6]);
    assert_eq!(eigen_one_infinite(&flip), Some(vec![Scalar::one()]));
    assert!(eigen_one_infinite(&bs("V1")).is_none());
    assert!(matches!(nichols_dim(&bs("chi_0000"), 4).verdict, Verdict::InfiniteByEigenOne { .. }));
}

#[test]
fn m_modules_have_dimension_four() {
    for i in 1..=12 {
        let b = bs(&format!("M{i}"));
        assert!(b.braid_equation());
        let r = nichols_dim(&b, 6);
        assert_eq!(r.ranks, vec![2, 1, 0], "M{i}");
        assert_eq!(r.total(), Some(4));
        assert_eq!(r.quadratic_relations.len(), 3);
        let (p, dd) = find_diagonal_basis(&b).expect("diagonal type");
        assert!(dd.vertices.iter().all(|v| *v == Scalar::int(-1)) && dd.edges.is_empty(), "M{i}");
        // in the diagonal basis with q12 = q21 = -1, ker(1 + c) = span{v1v1, v2v2, v1v2 + v2v1}
        let c = conjugate(&b, &p);
        let k = &Mat::identity(4) + &c.c;
        let s = |v: &[i64]| v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>();
        for v in [s(&[1, 0, 0, 0]), s(&[0, 0, 0, 1]), s(&[0, 1, 1, 0])] {
            assert!(k.mul_vec(&v).iter().all(|x| x.is_zero()), "M{i}");
        }
    }
}

#[test]
fn w_family_ranks_stay_positive() {
    for name in [
        "W1_100", "W1_101", "W1_110", "W1_111", "W1_300", "W1_311", "W2_100", "W2_311", "W3_101", "W3_110", "W4_101",
        "W4_110",
    ] {
        let b = bs(name);
        assert!(b.braid_equation());
        let r = nichols_dim(&b, 6);
        assert_eq!(r.ranks.len(), 6, "{name}");
        assert!(r.ranks.iter().all(|&x| x > 0), "{name}");
        assert_eq!(r.verdict, Verdict::Undetermined { cap: 6 });
    }
}

#[test]
fn diagonal_detection() {
    let w = bs("W1_100");
    assert!(diagonal_data(&w).is_none());
    let (_, dd) = find_diagonal_basis(&w).unwrap();
    assert_eq!(dd.vertices, vec![-Scalar::xi(), -Scalar::xi()]);
    assert_eq!(dd.edges, vec![(0, 1, Scalar::int(-1))]);
}

#[test]
fn word_choice_and_factorization_agree() {
    for (name, n) in [("M1", 4), ("W1_100", 4), ("M1+V1", 3), ("M2", 3)] {
        let b = bs(name);
        let lo = symmetrizer_columns(&b, n, WordChoice::Lowest, 1 << 12).unwrap();
        let hi = symmetrizer_columns(&b, n, WordChoice::Highest, 1 << 12).unwrap();
        assert_eq!(lo, hi, "{name}");
        // S_n = T_n (S_{n-1} ⊗ 1)
        let prev = symmetrizer_columns(&b, n - 1, WordChoice::Lowest, 1 << 12).unwrap();
        let d = b.dim;
        for (col, v) in lo.iter().enumerate() {
            let (u, a) = (col / d, col % d);
            let w = prev[u].map_indices(|k| k * d + a);
            assert_eq!(&shuffle_factor(&b, &w, n), v, "{name}");
        }
        let m = columns_to_mat(&lo, d.pow(n as u32));
        let ranks = nichols_ranks(&b, n);
        assert_eq!(m.rank(), *ranks.get(n - 1).unwrap_or(&0), "{name}");
    }
    assert!(matches!(
        symmetrizer_columns(&bs("M1"), 6, WordChoice::Lowest, 32),
        Err(NicholsError::CapExceeded(64, 32))
    ));
}

#[test]
fn grana_product_rule() {
    let m1 = module_by_name("M1").unwrap();
    let v1 = module_by_name("V1").unwrap();
    let v5 = module_by_name("V5").unwrap();
    assert!(pair_factorizes(&m1, &v1));
    assert!(!pair_factorizes(&m1, &v5));
    assert!(pair_factorizes(&v1, &v1));
    assert_eq!(nichols_dim(&bs("M1+V1"), 6).total(), Some(8));
    assert_eq!(nichols_dim(&bs("M1+M1"), 6).total(), Some(16));
    assert_eq!(nichols_dim(&bs("M1+M1"), 6).quadratic_relations.len(), 10);
    assert_ne!(nichols_dim(&bs("M1+V5"), 5).total(), Some(8));
}

#[test]
fn pair_table() {
    let t = pair_table_sweep();
    assert_eq!(t.admissible_ordered.len(), 124);
    let has = |a: &str, b: &str| t.admissible_ordered.iter().any(|(x, y)| x == a && y == b);
    assert!(has("M2", "M4") && has("M6", "M7"));
    assert!(!has("M1", "M2"));
    // the sweep disagrees with the listed cases
    assert!(!t.matches_claim);
    assert_eq!(t.claimed_rejected.len(), 8);
    assert!(t.claimed_rejected.iter().all(|(m, _)| m == "M9" || m == "M10"));
    assert!(t.unlisted_admissible.contains(&("V1".to_string(), "V2".to_string())));
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<PairTable>(&s).unwrap(), t);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn ranks_are_basis_independent(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, e in -3i64..=3, which in 0usize..3) {
        let p = Mat::from_rows(vec![vec![Scalar::int(a), Scalar::gauss(b, 1)], vec![Scalar::int(c), Scalar::int(e)]]);
        prop_assume!(p.rank() == 2);
        let b0 = bs(["M1", "W1_100", "M10"][which]);
        let b1 = conjugate(&b0, &p);
        prop_assert!(b1.braid_equation());
        prop_assert_eq!(nichols_ranks(&b0, 5), nichols_ranks(&b1, 5));
    }
}

#[test]
fn apply_c_matches_kron() {
    let b = bs("M3");
    let id = Mat::identity(2);
    let c1 = id.kron(&b.c);
    for col in 0..8 {
        let v = b.apply_c(&SparseVec::unit(col), 3, 1);
        assert_eq!(v.to_dense(8), c1.col(col));
    }
}
