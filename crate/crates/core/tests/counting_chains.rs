use num_bigint::BigUint;
use proptest::prelude::*;
use reis::counting::*;
use reis::BigCount;

fn sum_over_k(n: u64, f: impl Fn(u64) -> BigCount) -> BigCount {
    (1..=n).map(f).sum()
}

// the gap operations take 1 <= k <= n/(m+1)
fn sum_over_gap_k(n: u64, m: u64, f: impl Fn(u64) -> BigCount) -> BigCount {
    (1..=n / (m + 1)).map(f).sum()
}

#[test]
fn zero_gap_chains() {
    for n in 1..=60u64 {
        let lambda = lambda_total(n).unwrap();
        assert_eq!(sum_over_k(n, |k| gupta_r(n, k).unwrap()), lambda);
        let alpha = alpha_total(n).unwrap();
        assert_eq!(&alpha - &DyadicRational::from(1), DyadicRational::from_integer(lambda));
        let beta = beta_refl(n).unwrap();
        let refl = sum_over_k(n, |k| reflective_r1(n, k).unwrap());
        assert_eq!(&beta - &DyadicRational::from(1), DyadicRational::from_integer(refl));
    }
    for n in 1..=48u64 {
        assert_eq!(sum_over_k(n, |k| count_rotsym_k(n, k).unwrap()), count_rotsym(n).unwrap());
        assert_eq!(sum_over_k(n, |k| count_rotsym_refl_k(n, k).unwrap()), count_rotsym_refl(n).unwrap());
    }
}

#[test]
fn gap_chains() {
    for n in 1..=36u64 {
        for m in 1..=3u64 {
            assert_eq!(sum_over_gap_k(n, m, |k| count_gap_k(n, m, k).unwrap()), count_gap_total(n, m).unwrap());
            assert_eq!(sum_over_gap_k(n, m, |k| count_gap_refl_k(n, m, k).unwrap()), gap_refl_total(n, m).unwrap());
            assert_eq!(
                sum_over_gap_k(n, m, |k| count_rotsym_gap_k(n, m, k).unwrap()),
                count_rotsym_gap(n, m).unwrap(),
                "n={n} m={m}"
            );
            assert_eq!(
                sum_over_gap_k(n, m, |k| count_rotsym_refl_gap_k(n, m, k).unwrap()),
                count_rotsym_refl_gap(n, m).unwrap(),
                "n={n} m={m}"
            );
        }
    }
}

#[test]
fn integrality_never_fires() {
    for n in 2..=200u64 {
        count_rotsym(n).unwrap();
        count_rotsym_refl(n).unwrap();
        for m in 1..=5u64 {
            count_gap_total(n, m).unwrap();
            gap_refl_total(n, m).unwrap();
            count_rotsym_gap(n, m).unwrap();
            count_rotsym_refl_gap(n, m).unwrap();
        }
        for k in 1..=n {
            gupta_r(n, k).unwrap();
            reflective_r1(n, k).unwrap();
            count_rotsym_k(n, k).unwrap();
            count_rotsym_refl_k(n, k).unwrap();
            for m in (1..=5u64).filter(|m| k <= n / (m + 1)) {
                count_gap_k(n, m, k).unwrap();
                count_gap_refl_k(n, m, k).unwrap();
                count_rotsym_gap_k(n, m, k).unwrap();
                count_rotsym_refl_gap_k(n, m, k).unwrap();
            }
        }
    }
}

#[test]
fn known_values() {
    let v = |x: u32| BigUint::from(x);
    assert_eq!(count_rotsym_gap(24, 1).unwrap(), v(30));
    assert_eq!(count_rotsym_refl_gap(24, 1).unwrap(), v(25));
    assert_eq!(count_rotsym_gap_k(24, 1, 6).unwrap(), v(9));
    assert_eq!(count_rotsym_refl_gap_k(24, 1, 6).unwrap(), v(6));
    assert_eq!(count_rotsym_gap_k(24, 1, 8).unwrap(), v(8));
    assert_eq!(count_rotsym_refl_gap_k(24, 1, 8).unwrap(), v(6));
    assert_eq!(count_rotsym_refl_gap(6, 1).unwrap(), v(2));
    assert_eq!(count_rotsym(1).unwrap(), v(0));
}

proptest! {
    #[test]
    fn reflective_counts_bounded(n in 1u64..=120, m in 0u64..=6) {
        prop_assert!(count_rotsym_refl_gap(n, m).unwrap() <= count_rotsym_gap(n, m).unwrap());
        prop_assert!(count_rotsym_refl(n).unwrap() <= count_rotsym(n).unwrap());
    }

    #[test]
    fn gap_counts_nonincreasing(n in 1u64..=120, m in 1u64..=6) {
        prop_assert!(count_gap_total(n, m + 1).unwrap() <= count_gap_total(n, m).unwrap());
        prop_assert!(gap_refl_total(n, m + 1).unwrap() <= gap_refl_total(n, m).unwrap());
        prop_assert!(count_rotsym_gap(n, m + 1).unwrap() <= count_rotsym_gap(n, m).unwrap());
        prop_assert!(count_rotsym_refl_gap(n, m + 1).unwrap() <= count_rotsym_refl_gap(n, m).unwrap());
    }

    #[test]
    fn zero_gap_routes_to_plain_counts(n in 1u64..=200) {
        prop_assert_eq!(count_rotsym_gap(n, 0).unwrap(), count_rotsym(n).unwrap());
        prop_assert_eq!(count_rotsym_refl_gap(n, 0).unwrap(), count_rotsym_refl(n).unwrap());
    }
}
