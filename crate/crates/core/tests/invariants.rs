use std::collections::HashSet;

use proptest::prelude::*;

use lrc_core::bounds::{ball, johnson_classical_max_k, johnson_like_improved_max_k, omega};
use lrc_core::galois::{big_g_inverse, big_g_map, g_map, l_matrix};
use lrc_core::lrc::DEFAULT_MAX_SUBSETS;
use lrc_core::macwilliams::macwilliams;
use lrc_core::{concatenate, FieldMatrix, FiniteField, Gf2, Gf4, LinearCode};

fn gf4() -> impl Strategy<Value = Gf4> {
    (0u8..4).prop_map(Gf4::from_bits)
}

fn gf4_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = FieldMatrix<Gf4>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(gf4(), r * c)
            .prop_map(move |v| FieldMatrix::from_fn(r, c, |i, j| v[i * c + j]))
    })
}

fn gf2_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = FieldMatrix<Gf2>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c)
            .prop_map(move |v| FieldMatrix::from_fn(r, c, |i, j| Gf2::new(v[i * c + j])))
    })
}

/// Full-rank `k1 × n1` generator over GF(4), `n1 ≤ 7`, `k1 ≤ 4`.
fn outer_code() -> impl Strategy<Value = LinearCode<Gf4>> {
    gf4_matrix(4, 7)
        .prop_filter("needs k1 <= n1 and full rank", |g| {
            g.rows() <= g.cols() && g.rank() == g.rows()
        })
        .prop_map(|g| LinearCode::from_generator(g).unwrap())
}

fn span_size(m: &FieldMatrix<Gf4>) -> usize {
    let mut seen = HashSet::new();
    for idx in 0..4usize.pow(m.rows() as u32) {
        let mut t = idx;
        let coeffs: Vec<Gf4> = (0..m.rows())
            .map(|_| {
                let a = Gf4::from_bits((t % 4) as u8);
                t /= 4;
                a
            })
            .collect();
        let v: Vec<u8> = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .fold(Gf4::ZERO, |s, i| s + coeffs[i] * m.get(i, j))
                    .to_bits()
            })
            .collect();
        seen.insert(v);
    }
    seen.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_counts_the_row_span(m in gf4_matrix(4, 5)) {
        prop_assert_eq!(4usize.pow(m.rank() as u32), span_size(&m));
    }

    #[test]
    fn nullspace_is_orthogonal_and_complementary(m in gf4_matrix(5, 6)) {
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.rows(), m.cols());
        prop_assert_eq!(ns.rank(), ns.rows());
        for i in 0..ns.rows() {
            prop_assert!(m.mul_vec(ns.row(i)).iter().all(|x| x.to_bits() == 0));
        }
    }

    #[test]
    fn binary_nullspace_is_orthogonal(m in gf2_matrix(6, 8)) {
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.rows(), m.cols());
        for i in 0..ns.rows() {
            prop_assert!(m.mul_vec(ns.row(i)).iter().all(|x| x.to_bits() == 0));
        }
    }

    #[test]
    fn big_g_is_an_additive_bijection(
        pair in (1usize..=8).prop_flat_map(|m| {
            (proptest::collection::vec(gf4(), m), proptest::collection::vec(gf4(), m))
        })
    ) {
        let (x, y) = pair;
        let sum: Vec<Gf4> = x.iter().zip(&y).map(|(a, b)| *a + *b).collect();
        let gx = big_g_map(&x);
        let gy = big_g_map(&y);
        let gsum: Vec<Gf2> = gx.iter().zip(&gy).map(|(a, b)| *a + *b).collect();
        prop_assert_eq!(big_g_map(&sum), gsum);
        prop_assert_eq!(big_g_inverse(&gx), x);
    }

    #[test]
    fn l_matrix_represents_multiplication(a in gf4(), b in gf4()) {
        prop_assert_eq!(l_matrix(a).apply(g_map(b)), g_map(a * b));
        prop_assert_eq!(l_matrix(a) * l_matrix(b), l_matrix(a * b));
        prop_assert_eq!(l_matrix(a) + l_matrix(b), l_matrix(a + b));
    }

    #[test]
    fn certifier_agrees_with_enumeration(outer in outer_code()) {
        let lrc = concatenate(&outer).unwrap();
        let cert = lrc.distance_via_subspaces(DEFAULT_MAX_SUBSETS).unwrap();
        let ex = lrc.code().min_distance_exhaustive();
        prop_assert_eq!(cert.d, ex.d);
        prop_assert_eq!(cert.d, 2 * outer.min_distance_exhaustive().d);
    }

    #[test]
    fn macwilliams_inverts_on_binary_codes(g in gf2_matrix(5, 9)) {
        prop_assume!(g.rank() == g.rows() && g.rows() < g.cols());
        let code = LinearCode::from_generator(g).unwrap();
        let dual = code.dual();
        let via = macwilliams(
            &dual.weight_distribution_exhaustive(),
            dual.size(),
            code.n(),
            2,
        )
        .unwrap();
        prop_assert_eq!(via.counts, code.weight_distribution_exhaustive().counts);
    }

    #[test]
    fn outer_and_lrc_sphere_counts_coincide(n1 in 1usize..40, d1 in 1usize..12) {
        prop_assume!(d1 <= n1);
        prop_assert_eq!(ball(n1, d1, 4), omega(n1, 2 * d1));
    }

    #[test]
    fn outer_and_lrc_johnson_denominators_coincide(n1 in 2usize..40, h in 1usize..8) {
        let d1 = 2 * h;
        prop_assume!(d1 <= n1);
        let classical = johnson_classical_max_k(n1, d1, 4).unwrap();
        let like = johnson_like_improved_max_k(3 * n1, 2 * d1).unwrap();
        prop_assert_eq!(classical.denominator, like.improved.denominator);
    }
}
