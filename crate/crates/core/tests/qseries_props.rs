//! Algebraic properties of the exact power-series layer: inversion is a true
//! inverse, truncation is stable (longer runs extend shorter ones verbatim),
//! Gaussian binomials satisfy the Pascal recurrence and symmetry, the
//! distinct-odd generating product counts the enumerated class, and the
//! hook-count series agree with brute force on random spot checks.

use hookbias::partitions::{a_star_brute, b_star_brute, enumerate, PartitionClass};
use hookbias::qseries::{gen_a, gen_b, q_binomial, xi_series, IntSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

/// A series with unit constant term and small random integer coefficients.
fn arb_unit_series() -> impl Strategy<Value = IntSeries> {
    (
        prop::bool::ANY,
        prop::collection::vec(-9i64..=9, 0..=24),
    )
        .prop_map(|(neg, tail)| {
            let mut coeffs = vec![BigInt::from(if neg { -1 } else { 1 })];
            coeffs.extend(tail.into_iter().map(BigInt::from));
            IntSeries::from_coeffs(coeffs)
        })
}

proptest! {
    #[test]
    fn inversion_is_a_two_sided_inverse(s in arb_unit_series()) {
        let inv = s.invert().expect("unit constant term");
        let order = s.order();
        prop_assert_eq!(s.mul(&inv), IntSeries::one(order));
        prop_assert_eq!(inv.mul(&s), IntSeries::one(order));
    }

    #[test]
    fn series_multiplication_commutes(a in arb_unit_series(), b in arb_unit_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn truncation_of_longer_run_reproduces_shorter(
        t in 1usize..=10,
        short in 0usize..=40,
        extra in 1usize..=20,
    ) {
        let long_order = short + extra;
        prop_assert_eq!(gen_a(t, long_order).truncate(short), gen_a(t, short));
        prop_assert_eq!(gen_b(t, long_order).truncate(short), gen_b(t, short));
        prop_assert_eq!(xi_series(long_order).truncate(short), xi_series(short));
    }

    #[test]
    fn gaussian_binomial_pascal_recurrence(n in 1i64..=12, k in 1i64..=12) {
        prop_assume!(k <= n);
        let order = (n * k) as usize + 1;
        let left = q_binomial(n, k, order);
        let a = q_binomial(n - 1, k - 1, order);
        let b = q_binomial(n - 1, k, order);
        // [n,k] = [n−1,k−1] + q^k·[n−1,k]
        let shifted = b.mul(&IntSeries::monomial(k as usize, 1u64, order));
        prop_assert_eq!(left, a.add(&shifted));
    }

    #[test]
    fn gaussian_binomial_symmetry(n in 0i64..=12, k in 0i64..=12) {
        prop_assume!(k <= n);
        let order = (n * n) as usize + 1;
        prop_assert_eq!(q_binomial(n, k, order), q_binomial(n, n - k, order));
    }

    #[test]
    fn hook_series_spot_check_against_brute_force(t in 1usize..=6, n in 0usize..=40) {
        let a = gen_a(t, n);
        let b = gen_b(t, n);
        prop_assert_eq!(a.coeff(n), &BigInt::from(a_star_brute(t, n)));
        prop_assert_eq!(b.coeff(n), &BigInt::from(b_star_brute(t, n)));
    }
}

/// The coefficient of `q^n` in `Π(1 + q^{2j+1})` counts partitions of `n`
/// into distinct odd parts.
#[test]
fn distinct_odd_product_counts_the_class() {
    let xi = xi_series(40);
    for n in 0..=40usize {
        let count = enumerate(PartitionClass::DistinctOdd, n).len() as u64;
        assert_eq!(xi.coeff_u64(n), count, "n = {n}");
    }
}

/// Gaussian binomials specialize to ordinary binomials at `q = 1` —
/// checked by summing coefficients.
#[test]
fn gaussian_binomial_sums_to_binomial() {
    fn binom(n: u64, k: u64) -> u64 {
        let mut r = 1u64;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }
    for n in 0..=10i64 {
        for k in 0..=n {
            let g = q_binomial(n, k, (n * k) as usize + 1);
            let total: BigInt = (0..=g.order()).map(|i| g.coeff(i).clone()).sum();
            assert_eq!(total, BigInt::from(binom(n as u64, k as u64)), "n = {n}, k = {k}");
        }
    }
}

/// Degenerate Gaussian binomials: `k = 0` gives 1 for every `n` (including
/// negative), and out-of-range indices give 0.
#[test]
fn gaussian_binomial_degenerate_cases() {
    for n in [-3i64, -1, 0, 1, 5] {
        assert_eq!(q_binomial(n, 0, 8), IntSeries::one(8), "n = {n}");
    }
    assert_eq!(q_binomial(3, 4, 8), IntSeries::zero(8));
    assert_eq!(q_binomial(-2, 1, 8), IntSeries::zero(8));
    assert_eq!(q_binomial(3, -1, 8), IntSeries::zero(8));
}
