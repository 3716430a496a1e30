//! The `m`-step Fibonacci families.
//!
//! Both families obey `x[n] = x[n-1] + x[n-m-1]` and differ only in their
//! initial block `x[0..=m]`:
//!
//! * type 1, `F^(m)`: the block is all ones;
//! * type 2, `f^(m)`: ones up to index `(m-1)/2`, twos after it.
//!
//! For `m = 1` these are the Fibonacci numbers with `F[0] = F[1] = 1` and the
//! same sequence shifted by one, respectively.
//!
//! The recurrence is the primary evaluator. The binomial-sum forms at the
//! bottom of the module are independent evaluators used by the identity
//! checker.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numtheory::{binomial, BigCount};

fn check_m(m: u64) -> Result<()> {
    if m == 0 {
        Err(Error::domain("m", "the m-step recurrences need m >= 1"))
    } else {
        Ok(())
    }
}

fn check_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::NegativeIndex(n))
}

/// The first `len` terms of the `m`-step recurrence whose initial block is
/// 1 for indices `0..=ones_through` and 2 for `ones_through < i <= m`.
///
/// `ones_through >= m` gives the type-1 family.
pub fn recurrence_terms(m: u64, ones_through: u64, len: usize) -> Result<Vec<BigCount>> {
    check_m(m)?;
    let m = m as usize;
    let mut terms: Vec<BigCount> = Vec::with_capacity(len.max(m + 1));
    for i in 0..=m {
        let v = if i as u64 <= ones_through { 1u32 } else { 2 };
        terms.push(BigUint::from(v));
    }
    while terms.len() < len {
        let i = terms.len();
        let next = &terms[i - 1] + &terms[i - m - 1];
        terms.push(next);
    }
    terms.truncate(len);
    Ok(terms)
}

/// Single term of [`recurrence_terms`]; negative indices are rejected.
pub fn recurrence(m: u64, ones_through: u64, n: i64) -> Result<BigCount> {
    let idx = check_index(n)?;
    let mut terms = recurrence_terms(m, ones_through, idx + 1)?;
    Ok(terms.swap_remove(idx))
}

/// Type-1 `m`-Fibonacci number `F^(m)_n`.
pub fn fib_type1(m: u64, n: i64) -> Result<BigCount> {
    recurrence(m, m, n)
}

/// Where the type-2 initial block switches from ones to twos.
pub fn type2_ones_through(m: u64) -> u64 {
    m.saturating_sub(1) / 2
}

/// Type-2 `m`-Fibonacci number `f^(m)_n`.
pub fn fib_type2(m: u64, n: i64) -> Result<BigCount> {
    check_m(m)?;
    recurrence(m, type2_ones_through(m), n)
}

/// `sum_{k>=0} C(n - m k, k)`, the composition count that equals `F^(m)_n`.
pub fn type1_binomial_sum(m: u64, n: i64) -> Result<BigCount> {
    check_m(m)?;
    check_index(n)?;
    let m = m as i64;
    let mut acc = BigCount::default();
    let mut k = 0i64;
    while n - m * k >= k {
        acc += binomial(n - m * k, k);
        k += 1;
    }
    Ok(acc)
}

/// Binomial sum for `f^(m)_n` split on the parity of `k`:
///
/// `sum_{k>=0} C(floor((2n + g - m k - (k mod 2)) / 2), floor(k / 2))`
///
/// with `g = (m - 1) mod 2`. Each term counts diameter-symmetric placements
/// with `k` marked points and gaps of at least `m` on `2n + g` points.
pub fn type2_parity_split_sum(m: u64, n: i64) -> Result<BigCount> {
    check_m(m)?;
    check_index(n)?;
    let points = 2 * n + ((m as i64 - 1) % 2);
    Ok(BigCount::one() + reflective_gap_binomial_sum(points, m as i64))
}

/// `sum_{k>=1} C(floor((points - m k - (k mod 2)) / 2), floor(k / 2))`.
pub(crate) fn reflective_gap_binomial_sum(points: i64, m: i64) -> BigCount {
    let mut acc = BigCount::default();
    let mut k = 1i64;
    while points - m * k - (k % 2) >= 0 {
        let top = (points - m * k - (k % 2)).div_euclid(2);
        acc += binomial(top, k / 2);
        k += 1;
    }
    acc
}

/// Binomial sum split on the parity of `m`:
///
/// * odd `m`: `sum_k C(n + (m+1)/2 - m k, k)`, i.e. `F^(m)_{n + (m+1)/2}`;
/// * even `m`: `sum_k C(n + m/2 - (m-1) k, k)`.
///
/// This agrees with [`fib_type2`] only for `m = 1`. It is kept so the
/// identity checker can exhibit the mismatch.
pub fn type2_binomial_by_m_parity(m: u64, n: i64) -> Result<BigCount> {
    check_m(m)?;
    check_index(n)?;
    let mi = m as i64;
    let (base, step) = if m % 2 == 1 {
        (n + (mi + 1) / 2, mi)
    } else {
        (n + mi / 2, mi - 1)
    };
    let mut acc = BigCount::default();
    let mut k = 0i64;
    while base - step * k >= k {
        acc += binomial(base - step * k, k);
        k += 1;
    }
    Ok(acc)
}
