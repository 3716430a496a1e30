//! Named identities between sums of binomials, Fibonacci-type numbers and
//! class totals, each evaluated on both sides in exact rational arithmetic.
//!
//! The two sides are computed by separate code: a left side is a literal
//! summation, a right side a closed form or recurrence. Several identities are
//! included precisely because they do not hold everywhere (the `*-by-m-parity`,
//! `*-odd-shift`, `*-same-index`, `signed-necklace-sum`, `reflective-gap-total`
//! and `zero-gap-extension` forms); [`Identity::scope`] says where each one is
//! known to hold.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{alpha_total, lambda_total};
use crate::error::{Error, Result};
use crate::fib;
use crate::numtheory::{binomial, divisors, euler_phi, gcd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `sum_k C(floor((n - h_k)/2), floor(k/2)) = (5 + (-1)^n) 2^floor((n-3)/2) - 1`.
    ReflectiveTotal,
    /// `sum_k (1/k) sum_{d | (n,k)} phi(d) C(n/d - 1, k/d - 1) = -1 + (1/n) sum_{d | n} phi(d) 2^(n/d)`.
    NecklaceTotal,
    /// `sum_k sum_{d | (n,k)} phi(d) C(n/d, k/d) = sum_{d | n} phi(d) (2^(n/d) - 1)`.
    BinomialNecklaceSum,
    /// The same with each term signed by `(-1)^(k + k/d)`. Holds for odd `n`
    /// only.
    SignedNecklaceSum,
    /// The signed sum against `sum_{d odd} phi(d) (2^(n/d) - 1) - sum_{d even} phi(d)`,
    /// which holds for every `n`.
    SignedNecklaceSumCorrected,
    /// For odd `k` the signed and unsigned terms agree.
    SignedNecklaceOddTerms,
    /// `lambda_n = alpha_n - 1`.
    TotalClasses,
    /// `F^(m)_n = sum_k C(n - m k, k)`.
    Fib1Binomial,
    /// `f^(m)_n = 1 + sum_{k >= 1} C(floor((2n + g - m k - h_k)/2), floor(k/2))`, `g = (m-1) mod 2`.
    Fib2Binomial,
    /// `f^(m)_n` against the binomial sum split on the parity of `m`. Holds for
    /// `m = 1` only.
    Fib2BinomialByMParity,
    /// `f^(m)_n = F^(m)_{n + (m+1)/2}` for odd `m`. Holds for `m = 1` only.
    Fib2OddShift,
    /// `sum_{k >= 1} C(floor((n - m k - h_k)/2), floor(k/2)) = f^(m)_{floor((n - g)/2)} - 1`.
    /// Fails when `m` and `n` are both even.
    ReflectiveGapTotal,
    /// The same left side against term `floor(n/2)` of the `m`-step recurrence
    /// whose ones block ends at `floor((m - (n mod 2))/2)`, minus one.
    ReflectiveGapTotalParity,
    /// `sum_{k <= n/(m+1)} (1/k) sum_{d | (n,k)} phi(d) C((n - m k)/d - 1, k/d - 1)
    ///  = (1/n) sum_{d | n, d <= n/(m+1)} phi(d) ((m+1) F_{n/d} - m F_{n/d - 1} - 1)`.
    GapNecklaceTotal,
    /// The same with `m F_{n/d}` in place of `m F_{n/d - 1}`. Fails in general.
    GapNecklaceTotalSameIndex,
    /// Two lengths `n1, n2` with the same `floor((n - 1)/2)` would need equal
    /// even-`k` sums `sum_{k even} C(floor(n/2), k/2)` for an `m = 0` type-2
    /// sequence to exist. At `(3, 4)` the sums are 1 and 3.
    ZeroGapExtension,
}

/// Where an identity is known to hold, as a predicate on its parameters.
/// Outside its scope an identity may still hold at isolated points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Everywhere,
    OddN,
    MEquals1,
    NotBothEven,
    Nowhere,
}

impl Scope {
    /// Whether the identity is guaranteed to hold at `params`.
    pub fn expects(self, params: &[u64]) -> bool {
        match self {
            Scope::Everywhere => true,
            Scope::OddN => params[0] % 2 == 1,
            Scope::MEquals1 => params[0] == 1,
            Scope::NotBothEven => !(params[0].is_multiple_of(2) && params[1].is_multiple_of(2)),
            Scope::Nowhere => false,
        }
    }
}

/// Exact values of the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySides {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl Identity {
    pub const ALL: [Identity; 16] = [
        Identity::ReflectiveTotal,
        Identity::NecklaceTotal,
        Identity::BinomialNecklaceSum,
        Identity::SignedNecklaceSum,
        Identity::SignedNecklaceSumCorrected,
        Identity::SignedNecklaceOddTerms,
        Identity::TotalClasses,
        Identity::Fib1Binomial,
        Identity::Fib2Binomial,
        Identity::Fib2BinomialByMParity,
        Identity::Fib2OddShift,
        Identity::ReflectiveGapTotal,
        Identity::ReflectiveGapTotalParity,
        Identity::GapNecklaceTotal,
        Identity::GapNecklaceTotalSameIndex,
        Identity::ZeroGapExtension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::ReflectiveTotal => "reflective-total",
            Identity::NecklaceTotal => "necklace-total",
            Identity::BinomialNecklaceSum => "binomial-necklace-sum",
            Identity::SignedNecklaceSum => "signed-necklace-sum",
            Identity::SignedNecklaceSumCorrected => "signed-necklace-sum-corrected",
            Identity::SignedNecklaceOddTerms => "signed-necklace-odd-terms",
            Identity::TotalClasses => "total-classes",
            Identity::Fib1Binomial => "fib1-binomial",
            Identity::Fib2Binomial => "fib2-binomial",
            Identity::Fib2BinomialByMParity => "fib2-binomial-by-m-parity",
            Identity::Fib2OddShift => "fib2-odd-shift",
            Identity::ReflectiveGapTotal => "reflective-gap-total",
            Identity::ReflectiveGapTotalParity => "reflective-gap-total-parity",
            Identity::GapNecklaceTotal => "gap-necklace-total",
            Identity::GapNecklaceTotalSameIndex => "gap-necklace-total-same-index",
            Identity::ZeroGapExtension => "zero-gap-extension",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
    }

    /// Parameter names, in the order [`Identity::sides`] expects them.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Identity::ReflectiveTotal
            | Identity::NecklaceTotal
            | Identity::BinomialNecklaceSum
            | Identity::SignedNecklaceSum
            | Identity::SignedNecklaceSumCorrected
            | Identity::SignedNecklaceOddTerms
            | Identity::TotalClasses => &["n"],
            Identity::Fib1Binomial
            | Identity::Fib2Binomial
            | Identity::Fib2BinomialByMParity
            | Identity::Fib2OddShift => &["m", "index"],
            Identity::ReflectiveGapTotal
            | Identity::ReflectiveGapTotalParity
            | Identity::GapNecklaceTotal
            | Identity::GapNecklaceTotalSameIndex => &["n", "m"],
            Identity::ZeroGapExtension => &["n1", "n2"],
        }
    }

    pub fn scope(self) -> Scope {
        match self {
            Identity::SignedNecklaceSum => Scope::OddN,
            Identity::Fib2BinomialByMParity | Identity::Fib2OddShift => Scope::MEquals1,
            // parameters are (n, m)
            Identity::ReflectiveGapTotal => Scope::NotBothEven,
            Identity::GapNecklaceTotalSameIndex | Identity::ZeroGapExtension => Scope::Nowhere,
            _ => Scope::Everywhere,
        }
    }

    /// Evaluates both sides at `params`.
    pub fn sides(self, params: &[u64]) -> Result<IdentitySides> {
        let names = self.params();
        if params.len() != names.len() {
            return Err(Error::domain(
                "params",
                format!("{} takes ({}), got {} values", self.name(), names.join(", "), params.len()),
            ));
        }
        for (&v, &name) in params.iter().zip(names) {
            if v == 0 && name.starts_with('n') {
                return Err(Error::ZeroArgument);
            }
        }
        let p = params;
        let (lhs, rhs) = match self {
            Identity::ReflectiveTotal => (reflective_sum(p[0]), reflective_closed(p[0])),
            Identity::NecklaceTotal => (necklace_sum(p[0])?, necklace_closed(p[0])?),
            Identity::BinomialNecklaceSum => (
                int(necklace_binomial_sum(p[0], |_, _| 1)?),
                int(phi_power_sum(p[0], |_| true)?),
            ),
            Identity::SignedNecklaceSum => (
                int(necklace_binomial_sum(p[0], koganov_sign)?),
                int(phi_power_sum(p[0], |_| true)?),
            ),
            Identity::SignedNecklaceSumCorrected => {
                let n = p[0];
                let mut even_phi = BigInt::zero();
                for d in divisors(n)?.into_iter().filter(|d| d % 2 == 0) {
                    even_phi += euler_phi(d)?;
                }
                (
                    int(necklace_binomial_sum(n, koganov_sign)?),
                    int(phi_power_sum(n, |d| d % 2 == 1)? - even_phi),
                )
            }
            Identity::SignedNecklaceOddTerms => (
                int(necklace_binomial_sum(p[0], |k, d| if k % 2 == 1 { koganov_sign(k, d) } else { 0 })?),
                int(necklace_binomial_sum(p[0], |k, _| i64::from(k % 2 == 1))?),
            ),
            Identity::TotalClasses => (
                uint(lambda_total(p[0])?),
                alpha_total(p[0])?.to_rational() - BigRational::one(),
            ),
            Identity::Fib1Binomial => {
                let (m, n) = (p[0], p[1] as i64);
                (uint(fib::fib_type1(m, n)?), uint(fib::type1_binomial_sum(m, n)?))
            }
            Identity::Fib2Binomial => {
                let (m, n) = (p[0], p[1] as i64);
                (uint(fib::fib_type2(m, n)?), uint(fib::type2_parity_split_sum(m, n)?))
            }
            Identity::Fib2BinomialByMParity => {
                let (m, n) = (p[0], p[1] as i64);
                (uint(fib::fib_type2(m, n)?), uint(fib::type2_binomial_by_m_parity(m, n)?))
            }
            Identity::Fib2OddShift => {
                let (m, n) = (p[0], p[1] as i64);
                if m % 2 == 0 {
                    return Err(Error::domain("m", format!("{} needs odd m, got {m}", self.name())));
                }
                (uint(fib::fib_type2(m, n)?), uint(fib::fib_type1(m, n + (m as i64 + 1) / 2)?))
            }
            Identity::ReflectiveGapTotal => {
                let (n, m) = (p[0], p[1]);
                check_m(m)?;
                let g = (m + 1) % 2;
                let idx = (n as i64 - g as i64).div_euclid(2);
                (
                    uint(fib::reflective_gap_binomial_sum(n as i64, m as i64)),
                    uint(fib::fib_type2(m, idx)?) - BigRational::one(),
                )
            }
            Identity::ReflectiveGapTotalParity => {
                let (n, m) = (p[0], p[1]);
                check_m(m)?;
                (
                    uint(fib::reflective_gap_binomial_sum(n as i64, m as i64)),
                    uint(fib::recurrence(m, (m - n % 2) / 2, (n / 2) as i64)?) - BigRational::one(),
                )
            }
            Identity::GapNecklaceTotal => {
                let (n, m) = (p[0], p[1]);
                (gap_necklace_sum(n, m)?, gap_necklace_closed(n, m, 1)?)
            }
            Identity::GapNecklaceTotalSameIndex => {
                let (n, m) = (p[0], p[1]);
                (gap_necklace_sum(n, m)?, gap_necklace_closed(n, m, 0)?)
            }
            Identity::ZeroGapExtension => {
                let (n1, n2) = (p[0], p[1]);
                if (n1 - 1) / 2 != (n2 - 1) / 2 {
                    return Err(Error::domain(
                        "params",
                        format!("{n1} and {n2} do not share floor((n - 1)/2)"),
                    ));
                }
                (int(even_k_sum(n1)), int(even_k_sum(n2)))
            }
        };
        Ok(IdentitySides { lhs, rhs })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// True iff both sides of the named identity agree at `params`.
pub fn check_identity(name: &str, params: &[u64]) -> Result<bool> {
    Ok(Identity::parse(name)?.sides(params)?.holds())
}

fn check_m(m: u64) -> Result<()> {
    if m == 0 {
        Err(Error::domain("m", "this identity needs m >= 1"))
    } else {
        Ok(())
    }
}

fn int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn uint(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn koganov_sign(k: u64, d: u64) -> i64 {
    if (k + k / d).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn reflective_sum(n: u64) -> BigRational {
    let mut acc = BigUint::zero();
    for k in 1..=n {
        acc += binomial(((n - k % 2) / 2) as i64, (k / 2) as i64);
    }
    uint(acc)
}

fn reflective_closed(n: u64) -> BigRational {
    let coeff = if n.is_multiple_of(2) { 6 } else { 4 };
    let e = (n as i64 - 3).div_euclid(2);
    let power = if e >= 0 {
        int(pow2(e as u64))
    } else {
        BigRational::new(BigInt::one(), pow2(e.unsigned_abs()))
    };
    power * int(BigInt::from(coeff)) - BigRational::one()
}

fn necklace_sum(n: u64) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for k in 1..=n {
        let mut inner = BigInt::zero();
        for d in divisors(gcd(n, k))? {
            inner += BigInt::from(binomial((n / d) as i64 - 1, (k / d) as i64 - 1)) * euler_phi(d)?;
        }
        acc += BigRational::new(inner, BigInt::from(k));
    }
    Ok(acc)
}

fn necklace_closed(n: u64) -> Result<BigRational> {
    let mut acc = BigInt::zero();
    for d in divisors(n)? {
        acc += pow2(n / d) * euler_phi(d)?;
    }
    Ok(BigRational::new(acc, BigInt::from(n)) - BigRational::one())
}

/// `sum_k sum_{d | (n,k)} sign(k, d) phi(d) C(n/d, k/d)`.
fn necklace_binomial_sum(n: u64, sign: impl Fn(u64, u64) -> i64) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for k in 1..=n {
        for d in divisors(gcd(n, k))? {
            let s = sign(k, d);
            if s != 0 {
                acc += BigInt::from(binomial((n / d) as i64, (k / d) as i64)) * euler_phi(d)? * s;
            }
        }
    }
    Ok(acc)
}

/// `sum_{d | n, keep(d)} phi(d) (2^(n/d) - 1)`.
fn phi_power_sum(n: u64, keep: impl Fn(u64) -> bool) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for d in divisors(n)?.into_iter().filter(|&d| keep(d)) {
        acc += (pow2(n / d) - 1) * euler_phi(d)?;
    }
    Ok(acc)
}

fn gap_necklace_sum(n: u64, m: u64) -> Result<BigRational> {
    check_m(m)?;
    let mut acc = BigRational::zero();
    for k in 1..=n / (m + 1) {
        let mut inner = BigInt::zero();
        for d in divisors(gcd(n, k))? {
            let top = ((n - m * k) / d) as i64 - 1;
            inner += BigInt::from(binomial(top, (k / d) as i64 - 1)) * euler_phi(d)?;
        }
        acc += BigRational::new(inner, BigInt::from(k));
    }
    Ok(acc)
}

/// Closed side of the gap necklace identity; `back` is how far the index of
/// the second Fibonacci term is shifted down (1 for the corrected form).
fn gap_necklace_closed(n: u64, m: u64, back: u64) -> Result<BigRational> {
    check_m(m)?;
    let mut acc = BigInt::zero();
    for d in divisors(n)?.into_iter().filter(|&d| d <= n / (m + 1)) {
        let h = (n / d) as i64;
        let term = BigInt::from(fib::fib_type1(m, h)?) * (m + 1)
            - BigInt::from(fib::fib_type1(m, h - back as i64)?) * m
            - 1;
        acc += term * euler_phi(d)?;
    }
    Ok(BigRational::new(acc, BigInt::from(n)))
}

fn even_k_sum(n: u64) -> BigInt {
    let mut acc = BigUint::zero();
    let mut k = 2;
    while k <= n {
        acc += binomial((n / 2) as i64, (k / 2) as i64);
        k += 2;
    }
    BigInt::from(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sides(id: Identity, params: &[u64]) -> IdentitySides {
        id.sides(params).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(Identity::parse(id.name()).unwrap(), id);
        }
        assert_eq!(
            check_identity("no-such-identity", &[3]),
            Err(Error::UnknownIdentity("no-such-identity".into()))
        );
        assert!(check_identity("reflective-total", &[3, 4]).is_err());
        assert!(check_identity("reflective-gap-total", &[6, 0]).is_err());
    }

    #[test]
    fn small_examples() {
        let s = sides(Identity::ReflectiveTotal, &[4]);
        assert!(s.holds());
        assert_eq!(s.lhs, int(5.into()));
        let s = sides(Identity::NecklaceTotal, &[6]);
        assert!(s.holds());
        // (64 + 8 + 2*4 + 2*2) / 6 - 1
        assert_eq!(s.rhs, int(13.into()));
    }

    #[test]
    fn signed_sum_fails_at_even_n() {
        let s = sides(Identity::SignedNecklaceSum, &[2]);
        assert_eq!((s.lhs.clone(), s.rhs.clone()), (int(2.into()), int(4.into())));
        for n in 1..=80 {
            assert_eq!(check_identity("signed-necklace-sum", &[n]).unwrap(), n % 2 == 1, "n = {n}");
            assert!(check_identity("signed-necklace-sum-corrected", &[n]).unwrap());
            assert!(check_identity("signed-necklace-odd-terms", &[n]).unwrap());
        }
    }

    #[test]
    fn reflective_gap_total_counterexample() {
        // Left side 1 + 3 + 1; the type-2 value f^(2)_4 - 1 is 4.
        let s = sides(Identity::ReflectiveGapTotal, &[10, 2]);
        assert_eq!((s.lhs, s.rhs), (int(5.into()), int(4.into())));
        assert!(!check_identity("reflective-gap-total", &[6, 2]).unwrap());
        assert!(check_identity("reflective-gap-total-parity", &[10, 2]).unwrap());
    }

    #[test]
    fn scopes_are_exact_on_small_ranges() {
        for id in Identity::ALL {
            let ranges: Vec<Vec<u64>> = match id.params() {
                ["n"] => (1..=40).map(|n| vec![n]).collect(),
                ["m", "index"] => (1..=6)
                    .filter(|m| id != Identity::Fib2OddShift || m % 2 == 1)
                    .flat_map(|m| (0..=40).map(move |n| vec![m, n]))
                    .collect(),
                ["n", "m"] => (1..=40).flat_map(|n| (1..=6).map(move |m| vec![n, m])).collect(),
                _ => continue,
            };
            let mut failed_outside = false;
            for p in ranges {
                let ok = id.sides(&p).unwrap_or_else(|e| panic!("{id} at {p:?}: {e}")).holds();
                if id.scope().expects(&p) {
                    assert!(ok, "{id} at {p:?}");
                } else {
                    failed_outside |= !ok;
                }
            }
            assert!(failed_outside || id.scope() == Scope::Everywhere, "{id}");
        }
    }

    #[test]
    fn zero_gap_extension_is_contradictory() {
        let s = sides(Identity::ZeroGapExtension, &[3, 4]);
        assert_eq!((s.lhs, s.rhs), (int(1.into()), int(3.into())));
        assert!(Identity::ZeroGapExtension.sides(&[3, 6]).is_err());
    }
}
