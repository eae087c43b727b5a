use std::collections::BTreeMap;

use conley_core::dynamics::{
    count_periodic, enumerate_periodic_oracle, lefschetz_series, zeta_basic_set, zeta_from_index,
    conley_index, BasicSetSpec, EnumerationCaps, VertexShiftSpec,
};
use conley_core::linalg::{char_poly, char_reversed, rank};
use conley_core::spectral::{
    generalized_image, generalized_kernel, is_similar, jordan_profile, kernel_chain,
    nonnilpotent_part,
};
use conley_core::{BigInt, IntMatrix, IntPolynomial, RationalMatrix};
use proptest::prelude::*;

/// det(I - A t) by the Leibniz expansion, on plain integers.
fn leibniz_reversed_char(a: &[Vec<i64>]) -> Vec<i128> {
    let n = a.len();
    let mut total = vec![0i128; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let sign: i128 = if inversions % 2 == 0 { 1 } else { -1 };
        let mut term = vec![sign];
        for i in 0..n {
            let c0 = i128::from(i == p[i]);
            let c1 = -i128::from(a[i][p[i]]);
            let mut next = vec![0i128; term.len() + 1];
            for (d, t) in term.iter().enumerate() {
                next[d] += t * c0;
                next[d + 1] += t * c1;
            }
            term = next;
        }
        for (d, t) in term.iter().enumerate() {
            total[d] += t;
        }
    });
    while total.last() == Some(&0) {
        total.pop();
    }
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

fn square(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n))
}

fn q(rows: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_i64_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reversed_char_poly_matches_leibniz(a in square(5)) {
        let p = char_reversed(&q(&a)).unwrap();
        let expected: Vec<BigInt> = leibniz_reversed_char(&a).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(p.coeffs(), expected.as_slice());
        prop_assert_eq!(p.coeff(0), BigInt::from(1));
        let n = a.len();
        let zero_mult = char_poly(&q(&a)).unwrap().t_adic_valuation().unwrap();
        prop_assert_eq!(p.degree().unwrap_or(0), n - zero_mult);
    }

    #[test]
    fn generalized_split(a in square(5)) {
        let m = q(&a);
        let n = a.len();
        let chain = kernel_chain(&m, 2 * n + 2).unwrap();
        prop_assert!(chain[n..].iter().all(|&d| d == chain[n]));
        let gk = generalized_kernel(&m).unwrap();
        let gi = generalized_image(&m).unwrap();
        prop_assert_eq!(gk.dim(), chain[n]);
        prop_assert_eq!(gk.dim() + gi.dim(), n);
        let plus = nonnilpotent_part(&m).unwrap();
        prop_assert_eq!(rank(&plus.matrix), plus.dim());
        prop_assert_eq!(char_reversed(&m).unwrap().to_rational(),
            conley_core::linalg::reversed_char_poly(&plus.matrix).unwrap());
    }

    #[test]
    fn zeta_routes_agree(a in square(4), u in 0usize..=3) {
        let b = BasicSetSpec::from_matrix("x", IntMatrix::from_i64_rows(&a).unwrap(), u).unwrap();
        let idx = conley_index(&b, 3).unwrap();
        prop_assert_eq!(zeta_from_index(&idx).unwrap(), zeta_basic_set(&b, 3).unwrap());
        for e in idx.graded.values() {
            prop_assert_eq!(rank(&e.chi), e.dim);
        }
    }

    #[test]
    fn traces_eventually_agree(a in square(5)) {
        let m = q(&a);
        let plus = nonnilpotent_part(&m).unwrap();
        let n = a.len();
        let b = BasicSetSpec::from_matrix("x", IntMatrix::from_i64_rows(&a).unwrap(), 0).unwrap();
        let series = lefschetz_series(&b, 10).unwrap();
        for k in n.max(1)..=10 {
            let t = plus.matrix.pow(k as u32).unwrap().trace().unwrap();
            prop_assert_eq!(t, num_rational::BigRational::from_integer(series[k - 1].clone()));
        }
    }

    #[test]
    fn profile_of_nonnilpotent_part_drops_zero(a in square(4)) {
        let m = q(&a);
        let plus = nonnilpotent_part(&m).unwrap();
        prop_assert_eq!(jordan_profile(&plus.matrix).unwrap(), jordan_profile(&m).unwrap().without_zero());
    }

    #[test]
    fn periodic_counts_match_enumeration(
        g in (1usize..=4).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(0i64..=1, n), n)),
        n in 1usize..=6,
    ) {
        let s = VertexShiftSpec::unsigned(&g).unwrap();
        let brute = enumerate_periodic_oracle(&s, n, EnumerationCaps::default()).unwrap();
        prop_assert_eq!(count_periodic(&s, n).unwrap(), BigInt::from(brute));
    }
}

#[test]
fn nilpotent_matrices_have_trivial_plus() {
    let strictly_upper = q(&[vec![0, 2, -1], vec![0, 0, 3], vec![0, 0, 0]]);
    for a in [strictly_upper, q(&[vec![1, -1], vec![1, -1]])] {
        assert!(nonnilpotent_part(&a).unwrap().is_empty());
        let prof = jordan_profile(&a).unwrap();
        assert_eq!(prof.entries.len(), 1);
        assert_eq!(prof.entries[0].factor, IntPolynomial::from_i64(&[0, 1]));
    }
}

#[test]
fn invertible_matrices_are_their_own_plus() {
    for a in [
        q(&[vec![0, 1], vec![-1, 1]]),
        q(&[vec![2, 1], vec![1, 1]]),
        q(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, -1]]),
    ] {
        let plus = nonnilpotent_part(&a).unwrap();
        assert!(is_similar(&plus.matrix, &a));
    }
}

#[test]
fn morse_smale_companion_is_invertible() {
    // Sub-diagonal ones with a +-1 corner: a signed cyclic permutation.
    for m in 1..=6 {
        for corner in [1i64, -1] {
            let mut rows = vec![vec![0i64; m]; m];
            for i in 0..m - 1 {
                rows[i][i + 1] = 1;
            }
            rows[m - 1][0] = corner;
            let a = q(&rows);
            let plus = nonnilpotent_part(&a).unwrap();
            assert_eq!(plus.dim(), m);
            assert!(is_similar(&plus.matrix, &a));
        }
    }
}

#[test]
fn jordan_profile_weights_sum_to_dimension() {
    let a = q(&[
        vec![2, 1, 0, 0, 0],
        vec![0, 2, 0, 0, 0],
        vec![0, 0, 0, 1, 0],
        vec![0, 0, -1, 1, 0],
        vec![0, 0, 0, 0, 0],
    ]);
    let prof = jordan_profile(&a).unwrap();
    let by_factor: BTreeMap<Vec<BigInt>, Vec<usize>> = prof
        .entries
        .iter()
        .map(|c| (c.factor.coeffs().to_vec(), c.block_sizes.clone()))
        .collect();
    assert_eq!(by_factor[&IntPolynomial::from_i64(&[-2, 1]).coeffs().to_vec()], vec![2]);
    assert_eq!(by_factor[&IntPolynomial::from_i64(&[1, -1, 1]).coeffs().to_vec()], vec![1]);
    assert_eq!(by_factor[&IntPolynomial::from_i64(&[0, 1]).coeffs().to_vec()], vec![1]);
    assert_eq!(prof.dimension(), 5);
}
