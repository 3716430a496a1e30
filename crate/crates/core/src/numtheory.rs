//! Arithmetic-function primitives: divisors, Euler's totient, the Möbius
//! function and exact binomial coefficients.
//!
//! Every argument used by the counting formulas is small (well below `10^6`),
//! so plain trial division is enough and nothing is cached.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Exact nonnegative count.
pub type BigCount = BigUint;

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroArgument)
    } else {
        Ok(())
    }
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    require_positive(n)?;
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(factors)
}

/// Distinct prime divisors of `n`, increasing.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.into_iter().map(|(p, _)| p).collect())
}

/// All divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Euler's totient: the number of `1 <= i <= n` coprime to `n`.
pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Möbius function, in `{-1, 0, 1}`.
pub fn mobius(n: u64) -> Result<i8> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Binomial coefficient `C(a, b)`, total over all integers: any pair outside
/// `0 <= b <= a` evaluates to zero.
pub fn binomial(a: i64, b: i64) -> BigCount {
    if a < 0 || b < 0 || b > a {
        return BigCount::default();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigCount::one();
    for i in 0..b {
        // Each partial product is itself a binomial coefficient, so the
        // division is exact.
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), 4);
        for p in [2u64, 3, 5, 7, 11, 13, 9973] {
            assert_eq!(euler_phi(p).unwrap(), p - 1);
        }
        assert_eq!(euler_phi(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn phi_matches_coprime_scan() {
        for n in 1..=300u64 {
            let scan = (1..=n).filter(|&i| gcd(i, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), scan, "n = {n}");
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(8, 2), big(28));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), big(1));
        }
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(4, -1), big(0));
    }

    #[test]
    fn binomial_is_exact_at_large_arguments() {
        // C(1000, 500) has 300 decimal digits; check the symmetry and the
        // central-row identity sum_k C(n, k) = 2^n.
        let n = 1000i64;
        let total: BigCount = (0..=n).map(|k| binomial(n, k)).sum();
        assert_eq!(total, BigCount::one() << 1000u32);
        assert_eq!(binomial(n, 499), binomial(n, 501));
        assert_eq!(binomial(n, 500).to_string().len(), 300);
    }

    #[test]
    fn totient_and_mobius_divisor_sums() {
        for n in 1..=10_000u64 {
            let ds = divisors(n).unwrap();
            let phi_sum: u64 = ds.iter().map(|&d| euler_phi(d).unwrap()).sum();
            assert_eq!(phi_sum, n);
            let mu_sum: i64 = ds.iter().map(|&d| mobius(d).unwrap() as i64).sum();
            assert_eq!(mu_sum, i64::from(n == 1));
        }
    }

    #[test]
    fn pascal_rule_with_zero_convention() {
        for a in -200i64..=200 {
            for b in -200i64..=200 {
                if (a, b) == (0, 0) {
                    // The only cell where the zero convention and Pascal's
                    // rule disagree: C(0,0) = 1 but both parents are zero.
                    assert_eq!(binomial(0, 0), big(1));
                    assert_eq!(binomial(-1, 0) + binomial(-1, -1), big(0));
                    continue;
                }
                assert_eq!(
                    binomial(a, b),
                    binomial(a - 1, b) + binomial(a - 1, b - 1),
                    "C({a},{b})"
                );
            }
        }
    }

    #[test]
    fn multiplicativity_on_coprime_pairs() {
        for a in 1..=1000u64 {
            for b in 1..=1000u64 {
                if gcd(a, b) != 1 {
                    continue;
                }
                assert_eq!(euler_phi(a * b).unwrap(), euler_phi(a).unwrap() * euler_phi(b).unwrap());
                assert_eq!(mobius(a * b).unwrap(), mobius(a).unwrap() * mobius(b).unwrap());
            }
        }
    }
}
