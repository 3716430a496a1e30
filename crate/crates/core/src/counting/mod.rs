//! Closed-form counts of dihedral classes of binary (and, with caveats,
//! ternary) cyclic words.
//!
//! Conventions shared by every function here:
//!
//! * the all-zero word is never counted;
//! * "rotation-symmetric" means fixed by some rotation other than the
//!   identity; for `n = 1` no such rotation exists and those counts are 0;
//! * "reflective" means fixed by at least one reflection in a diameter.
//!
//! The rotation-symmetric counts come from Möbius inversion: if `t(L)` is the
//! number of classes on `L` points, the classes on `n` points whose minimal
//! period is a proper divisor of `n` number `-sum_{d | n, d >= 2} mu(d) t(n/d)`.
//! Intermediate totals that are only half-integers are carried as
//! [`DyadicRational`]s and every final count is checked to be a nonnegative
//! integer.

mod dyadic;
mod gap;
mod identities;
mod ternary;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

pub use dyadic::DyadicRational;
pub use gap::{
    alpha_gap, count_gap_k, count_gap_refl_k, count_gap_total, count_rotsym_gap,
    count_rotsym_gap_k, count_rotsym_refl_gap, count_rotsym_refl_gap_k, gamma_parity,
    gap_refl_total, max_ones_with_gap, reflective_gap_seed,
};
pub use identities::{check_identity, Identity, IdentitySides, Scope};
pub use ternary::{ternary_rotsym_formula, ternary_rotsym_refl_formula};

use crate::error::{Error, Result};
use crate::numtheory::{binomial, divisors, euler_phi, gcd, mobius, BigCount};

/// Parity of `k` as 0 or 1.
pub fn parity(k: u64) -> u64 {
    k % 2
}

pub(crate) fn check_ones(n: u64, k: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if k == 0 || k > n {
        return Err(Error::domain("k", format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

pub(crate) fn exact_div(value: BigUint, by: u64, context: &str) -> Result<BigUint> {
    let (q, r) = value.div_rem(&BigUint::from(by));
    if !r.is_zero() {
        return Err(Error::Integrality {
            context: context.to_string(),
            value: format!("{value} / {by}"),
        });
    }
    Ok(q)
}

pub(crate) fn to_count(value: BigInt, context: &str) -> Result<BigCount> {
    value.to_biguint().ok_or_else(|| Error::Integrality {
        context: context.to_string(),
        value: value.to_string(),
    })
}

/// `-sum_{d | n, d >= 2} mu(d) * term(d)`.
pub(crate) fn mobius_tail<T, F>(n: u64, mut term: F) -> Result<T>
where
    T: Zero + std::ops::Sub<Output = T> + std::ops::Add<Output = T>,
    F: FnMut(u64) -> Result<T>,
{
    let mut acc = T::zero();
    for d in divisors(n)?.into_iter().skip(1) {
        match mobius(d)? {
            1 => acc = acc - term(d)?,
            -1 => acc = acc + term(d)?,
            _ => {}
        }
    }
    Ok(acc)
}

/// `sum_{d | gcd(n, k)} phi(d) C(n/d - 1, k/d - 1)`, which is `k` times the
/// number of rotation classes (necklaces) with `k` ones on `n` points.
fn necklace_times_k(n: u64, k: u64) -> Result<BigUint> {
    let mut acc = BigUint::zero();
    for d in divisors(gcd(n, k))? {
        acc += binomial((n / d) as i64 - 1, (k / d) as i64 - 1) * euler_phi(d)?;
    }
    Ok(acc)
}

/// Number of dihedral classes of binary words of length `n` with exactly `k`
/// ones, i.e. incongruent `k`-gons on `n` equally spaced points.
///
/// Averages the reflective count and the necklace count; both the division by
/// `k` and the final halving are checked to be exact.
pub fn gupta_r(n: u64, k: u64) -> Result<BigCount> {
    check_ones(n, k)?;
    let necklaces = exact_div(necklace_times_k(n, k)?, k, "necklace count")?;
    exact_div(reflective_r1(n, k)? + necklaces, 2, "dihedral half-sum")
}

/// Number of those classes with `k` ones that have a diameter of symmetry:
/// `C(floor((n - h) / 2), floor(k / 2))` with `h` the parity of `k`.
pub fn reflective_r1(n: u64, k: u64) -> Result<BigCount> {
    check_ones(n, k)?;
    Ok(binomial(((n - parity(k)) / 2) as i64, (k / 2) as i64))
}

/// All classes of nonzero binary words of length `n`.
pub fn lambda_total(n: u64) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    (1..=n).map(|k| gupta_r(n, k)).sum()
}

/// `(5 + (-1)^n) * 2^floor((n - shift) / 2)` as an exact dyadic value.
fn parity_power(n: u64, shift: i64) -> DyadicRational {
    let coeff = if n.is_multiple_of(2) { 6 } else { 4 };
    DyadicRational::new(coeff, (n as i64 - shift).div_euclid(2))
}

/// Number of classes of binary words of length `n` including the all-zero
/// word:
/// `(1/n) sum_{d | n} phi(d) 2^(n/d - 1) + (5 + (-1)^n) 2^floor((n - 5)/2)`.
///
/// Each summand is fractional for `n <= 4`; the sum is always an integer.
pub fn alpha_total(n: u64) -> Result<DyadicRational> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut necklaces = BigUint::zero();
    for d in divisors(n)? {
        necklaces += (BigUint::one() << (n / d)) * euler_phi(d)?;
    }
    let necklaces = exact_div(necklaces, n, "necklace total")?;
    Ok(&DyadicRational::from(necklaces).shl(-1) + &parity_power(n, 5))
}

/// Number of reflective classes of length `n`, including the all-zero word:
/// `(5 + (-1)^n) 2^floor((n - 3)/2)`.
pub fn beta_refl(n: u64) -> Result<DyadicRational> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(parity_power(n, 3))
}

fn finish(total: DyadicRational, context: &str) -> Result<BigCount> {
    total.to_count(context)
}

/// Rotation-symmetric classes of nonzero binary words of length `n`.
pub fn count_rotsym(n: u64) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n == 1 {
        return Ok(BigCount::zero());
    }
    let tail = mobius_tail(n, |d| alpha_total(n / d))?;
    finish(&tail - &DyadicRational::from(1), "rotation-symmetric total")
}

/// Rotation-symmetric classes that also have a diameter of symmetry.
pub fn count_rotsym_refl(n: u64) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n == 1 {
        return Ok(BigCount::zero());
    }
    let tail = mobius_tail(n, |d| beta_refl(n / d))?;
    finish(&tail - &DyadicRational::from(1), "reflective rotation-symmetric total")
}

pub(crate) fn signed(v: BigUint) -> BigInt {
    BigInt::from(v)
}

/// Rotation-symmetric classes with exactly `k` ones; zero when
/// `gcd(n, k) = 1`.
pub fn count_rotsym_k(n: u64, k: u64) -> Result<BigCount> {
    check_ones(n, k)?;
    let tail = mobius_tail(gcd(n, k), |d| gupta_r(n / d, k / d).map(signed))?;
    to_count(tail, "rotation-symmetric count with k ones")
}

/// Rotation-symmetric, reflective classes with exactly `k` ones.
pub fn count_rotsym_refl_k(n: u64, k: u64) -> Result<BigCount> {
    check_ones(n, k)?;
    let tail = mobius_tail(gcd(n, k), |d| reflective_r1(n / d, k / d).map(signed))?;
    to_count(tail, "reflective rotation-symmetric count with k ones")
}
