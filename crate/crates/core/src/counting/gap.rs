//! Counts under a minimum circular gap: between any two cyclically adjacent
//! nonzero symbols there are at least `m` zeros.
//!
//! Contracting every one together with the `m` zeros that follow it maps the
//! gap-`m` words with `k` ones on `n` points bijectively onto unrestricted words
//! with `k` ones on `n - m k` points, compatibly with rotations and
//! reflections. So every per-`k` count is a zero-gap count at a shorter length,
//! and `k` ranges over `1..=n/(m+1)`.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{exact_div, gupta_r, mobius_tail, reflective_r1, signed, to_count, DyadicRational};
use crate::error::{Error, Result};
use crate::fib;
use crate::numtheory::{divisors, euler_phi, gcd, BigCount};

/// `(m - 1) mod 2`.
pub fn gamma_parity(m: u64) -> u64 {
    (m + 1) % 2
}

/// Largest number of ones a gap-`m` word on `n` points can carry.
pub fn max_ones_with_gap(n: u64, m: u64) -> u64 {
    n / (m + 1)
}

fn check(n: u64, m: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if m == 0 {
        return Err(Error::domain("m", "gap closed forms need m >= 1"));
    }
    Ok(())
}

fn check_k(n: u64, m: u64, k: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let bound = max_ones_with_gap(n, m);
    if k == 0 || k > bound {
        return Err(Error::domain(
            "k",
            format!("need 1 <= k <= n/(m+1) = {bound}, got n = {n}, m = {m}, k = {k}"),
        ));
    }
    Ok(())
}

/// One plus the number of reflective gap-`m` classes on `n` points.
///
/// This is term `floor(n/2)` of the `m`-step recurrence whose initial block is
/// 1 through index `floor((m - (n mod 2)) / 2)` and 2 after. For odd `m`, or
/// odd `n`, that is the type-2 number `f^(m)_{floor((n - gamma)/2)}`. For even
/// `m` and even `n` the block switches one index later, and the type-2 value
/// would undercount (e.g. `n = 6, m = 2` has two reflective classes, not one).
pub fn reflective_gap_seed(n: u64, m: u64) -> Result<BigCount> {
    check(n, m)?;
    fib::recurrence(m, (m - n % 2) / 2, (n / 2) as i64)
}

/// Number of gap-`m` classes on `n` points plus one half, in closed form:
///
/// `(1/2n) sum_{d | n, d <= n/(m+1)} phi(d) ((m+1) F_{n/d} - m F_{n/d - 1} - 1)
///  + (1/2) reflective_gap_seed(n, m)`
///
/// with `F = F^(m)` the type-1 numbers. The divisor sum is empty when no
/// divisor meets the bound. The value is cross-checked against the direct sum
/// of per-`k` class counts.
pub fn alpha_gap(n: u64, m: u64) -> Result<DyadicRational> {
    check(n, m)?;
    let bound = max_ones_with_gap(n, m);
    let fib1 = fib::recurrence_terms(m, m, n as usize + 1)?;
    let mut rotations = BigUint::zero();
    for d in divisors(n)?.into_iter().filter(|&d| d <= bound) {
        let h = (n / d) as usize;
        // h >= m + 1, so h - 1 is a valid index and the bracket is positive.
        let bracket = &fib1[h] * (m + 1) - &fib1[h - 1] * m - 1u32;
        rotations += bracket * euler_phi(d)?;
    }
    let rotations = exact_div(rotations, n, "gap necklace total")?;
    let closed = &DyadicRational::from(rotations).shl(-1)
        + &DyadicRational::from(reflective_gap_seed(n, m)?).shl(-1);

    let direct: BigCount = (1..=bound)
        .map(|k| gupta_r(n - m * k, k))
        .sum::<Result<BigCount>>()?;
    let direct = &DyadicRational::from(direct) + &DyadicRational::half();
    if direct != closed {
        return Err(Error::Inconsistent {
            context: format!("gap total n = {n}, m = {m}"),
            left: closed.to_string(),
            right: direct.to_string(),
        });
    }
    Ok(closed)
}

/// Number of gap-`m` classes (any symmetry) on `n` points.
pub fn count_gap_total(n: u64, m: u64) -> Result<BigCount> {
    (&alpha_gap(n, m)? - &DyadicRational::half()).to_count("gap total")
}

/// Number of reflective gap-`m` classes on `n` points.
pub fn gap_refl_total(n: u64, m: u64) -> Result<BigCount> {
    Ok(reflective_gap_seed(n, m)? - 1u32)
}

/// Gap-`m` classes with exactly `k` ones.
pub fn count_gap_k(n: u64, m: u64, k: u64) -> Result<BigCount> {
    check_k(n, m, k)?;
    gupta_r(n - m * k, k)
}

/// Reflective gap-`m` classes with exactly `k` ones.
pub fn count_gap_refl_k(n: u64, m: u64, k: u64) -> Result<BigCount> {
    check_k(n, m, k)?;
    reflective_r1(n - m * k, k)
}

/// Rotation-symmetric gap-`m` classes on `n` points. `m = 0` is the
/// unrestricted count.
pub fn count_rotsym_gap(n: u64, m: u64) -> Result<BigCount> {
    if m == 0 {
        return super::count_rotsym(n);
    }
    check(n, m)?;
    if n == 1 {
        return Ok(BigCount::zero());
    }
    let tail = mobius_tail(n, |d| alpha_gap(n / d, m))?;
    (&tail - &DyadicRational::half()).to_count("rotation-symmetric gap total")
}

/// Rotation-symmetric gap-`m` classes that have a diameter of symmetry.
pub fn count_rotsym_refl_gap(n: u64, m: u64) -> Result<BigCount> {
    if m == 0 {
        return super::count_rotsym_refl(n);
    }
    check(n, m)?;
    if n == 1 {
        return Ok(BigCount::zero());
    }
    let tail = mobius_tail(n, |d| reflective_gap_seed(n / d, m).map(signed))?;
    to_count(tail - 1, "reflective rotation-symmetric gap total")
}

/// Rotation-symmetric gap-`m` classes with exactly `k` ones.
pub fn count_rotsym_gap_k(n: u64, m: u64, k: u64) -> Result<BigCount> {
    if m == 0 {
        return super::count_rotsym_k(n, k);
    }
    check_k(n, m, k)?;
    let free = n - m * k;
    let tail = mobius_tail(gcd(n, k), |d| gupta_r(free / d, k / d).map(signed))?;
    to_count(tail, "rotation-symmetric gap count with k ones")
}

/// Rotation-symmetric, reflective gap-`m` classes with exactly `k` ones.
pub fn count_rotsym_refl_gap_k(n: u64, m: u64, k: u64) -> Result<BigCount> {
    if m == 0 {
        return super::count_rotsym_refl_k(n, k);
    }
    check_k(n, m, k)?;
    let free = n - m * k;
    let tail = mobius_tail(gcd(n, k), |d| reflective_r1(free / d, k / d).map(signed))?;
    to_count(tail, "reflective rotation-symmetric gap count with k ones")
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::numtheory::mobius;

    fn c(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn alpha_gap_examples() {
        assert_eq!(alpha_gap(12, 1).unwrap(), DyadicRational::new(51, -1));
        assert_eq!(alpha_gap(8, 1).unwrap(), DyadicRational::new(15, -1));
        assert_eq!(alpha_gap(4, 1).unwrap(), DyadicRational::new(5, -1));
        assert_eq!(alpha_gap(6, 1).unwrap(), DyadicRational::new(9, -1));
        // No divisor of 3 is <= 3/4 = 0: the rotation part is empty.
        assert_eq!(alpha_gap(3, 3).unwrap(), DyadicRational::half());
        assert!(alpha_gap(5, 0).is_err());
    }

    #[test]
    fn reflective_gap_totals() {
        assert_eq!(gap_refl_total(24, 1).unwrap(), c(376));
        assert_eq!(gap_refl_total(6, 1).unwrap(), c(4));
        assert_eq!(gap_refl_total(3, 1).unwrap(), c(1));
        // The m = 1 inputs used for n = 24: f_6 = 21, f_4 = 8, f_2 = 3.
        assert_eq!(reflective_gap_seed(12, 1).unwrap(), c(21));
        assert_eq!(reflective_gap_seed(8, 1).unwrap(), c(8));
        assert_eq!(reflective_gap_seed(4, 1).unwrap(), c(3));
    }

    #[test]
    fn seed_agrees_with_type2_except_even_m_even_n() {
        for m in 1..=8u64 {
            let g = gamma_parity(m);
            for n in 1..=120u64 {
                let type2 = fib::fib_type2(m, ((n - g) / 2) as i64).unwrap();
                let seed = reflective_gap_seed(n, m).unwrap();
                if m % 2 == 1 || n % 2 == 1 {
                    assert_eq!(seed, type2, "m={m} n={n}");
                }
            }
        }
        assert_eq!(reflective_gap_seed(6, 2).unwrap(), c(3));
        assert_eq!(fib::fib_type2(2, 2).unwrap(), c(2));
    }

    #[test]
    fn rotsym_gap_examples() {
        assert_eq!(count_rotsym_gap(24, 1).unwrap(), c(30));
        assert_eq!(count_rotsym_gap(6, 1).unwrap(), c(2));
        assert_eq!(count_rotsym_gap(12, 1).unwrap(), c(5));
        assert_eq!(count_rotsym_refl_gap(24, 1).unwrap(), c(25));
        assert_eq!(count_rotsym_refl_gap(6, 1).unwrap(), c(2));
        assert_eq!(count_rotsym_refl_gap(12, 1).unwrap(), c(5));
        assert_eq!(count_rotsym_gap(1, 2).unwrap(), c(0));
        assert_eq!(count_rotsym_gap(12, 0).unwrap(), super::super::count_rotsym(12).unwrap());
    }

    #[test]
    fn reflective_total_minus_one_form_undercounts_at_six() {
        // Using (seed - 1) inside the Möbius sum instead of the seed itself.
        let n = 6u64;
        let mut acc = BigInt::from(-1);
        for d in divisors(n).unwrap().into_iter().skip(1) {
            acc -= BigInt::from(mobius(d).unwrap()) * BigInt::from(gap_refl_total(n / d, 1).unwrap());
        }
        assert_eq!(acc, BigInt::from(1));
        assert_eq!(count_rotsym_refl_gap(6, 1).unwrap(), c(2));
    }

    #[test]
    fn rotsym_gap_k_examples() {
        assert_eq!(count_rotsym_gap_k(24, 1, 6).unwrap(), c(9));
        assert_eq!(count_rotsym_gap_k(24, 1, 8).unwrap(), c(8));
        assert_eq!(count_rotsym_gap_k(24, 1, 7).unwrap(), c(0));
        assert_eq!(count_rotsym_refl_gap_k(24, 1, 6).unwrap(), c(6));
        assert_eq!(count_rotsym_refl_gap_k(24, 1, 8).unwrap(), c(6));
        assert_eq!(count_rotsym_refl_gap_k(12, 1, 4).unwrap(), c(2));
        assert!(count_rotsym_gap_k(24, 1, 13).is_err());
        assert!(count_rotsym_refl_gap_k(10, 2, 4).is_err());
    }

    #[test]
    fn k_sums_match_totals() {
        for m in 1..=3u64 {
            for n in 1..=36u64 {
                let ks = 1..=max_ones_with_gap(n, m);
                let all: BigCount = ks.clone().map(|k| count_gap_k(n, m, k).unwrap()).sum();
                assert_eq!(all, count_gap_total(n, m).unwrap(), "n={n} m={m}");
                let refl: BigCount = ks.clone().map(|k| count_gap_refl_k(n, m, k).unwrap()).sum();
                assert_eq!(refl, gap_refl_total(n, m).unwrap(), "n={n} m={m}");
                let rot: BigCount = ks.clone().map(|k| count_rotsym_gap_k(n, m, k).unwrap()).sum();
                assert_eq!(rot, count_rotsym_gap(n, m).unwrap(), "n={n} m={m}");
                let rot_refl: BigCount = ks.map(|k| count_rotsym_refl_gap_k(n, m, k).unwrap()).sum();
                assert_eq!(rot_refl, count_rotsym_refl_gap(n, m).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn integrality_and_ordering_on_grid() {
        for n in 2..=200u64 {
            let mut prev: Option<(BigCount, BigCount)> = None;
            for m in 1..=5u64 {
                let rot = count_rotsym_gap(n, m).unwrap();
                let rot_refl = count_rotsym_refl_gap(n, m).unwrap();
                assert!(rot_refl <= rot, "n={n} m={m}");
                if let Some((p_rot, p_refl)) = &prev {
                    assert!(&rot <= p_rot && &rot_refl <= p_refl, "n={n} m={m}");
                }
                for k in 1..=max_ones_with_gap(n, m) {
                    count_rotsym_gap_k(n, m, k).unwrap();
                    count_rotsym_refl_gap_k(n, m, k).unwrap();
                }
                prev = Some((rot, rot_refl));
            }
        }
    }
}
