//! Composition formulas for rotation-symmetric words over `{0, 1, 2}` with
//! isolated nonzero symbols.
//!
//! Both functions evaluate the formula exactly as written: the binary count
//! plus, for each `4 <= k <= n/2` sharing a factor with `n`, the number of
//! rotation-symmetric binary supports with `k` ones times a rotation-symmetric
//! count on `k` points. They do NOT equal the true number of classes (at
//! `n = 12` they give 13 where exhaustive search finds 15 and 14); use the
//! oracle for ground truth.

use super::{count_rotsym, count_rotsym_refl, count_rotsym_gap, count_rotsym_gap_k};
use super::{count_rotsym_refl_gap, count_rotsym_refl_gap_k};
use crate::error::{Error, Result};
use crate::numtheory::{gcd, BigCount};

fn composite_ks(n: u64) -> impl Iterator<Item = u64> {
    (4..=n / 2).filter(move |&k| gcd(k, n) > 1)
}

fn check(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::domain("n", format!("ternary formulas need n >= 2, got {n}")));
    }
    Ok(())
}

/// `N_{n,1} + sum_k N^(k)_{n,1} N_k`, evaluated literally.
pub fn ternary_rotsym_formula(n: u64) -> Result<BigCount> {
    check(n)?;
    let mut acc = count_rotsym_gap(n, 1)?;
    for k in composite_ks(n) {
        acc += count_rotsym_gap_k(n, 1, k)? * count_rotsym(k)?;
    }
    Ok(acc)
}

/// `S_{n,1} + sum_k S^(k)_{n,1} S_k`, evaluated literally.
pub fn ternary_rotsym_refl_formula(n: u64) -> Result<BigCount> {
    check(n)?;
    let mut acc = count_rotsym_refl_gap(n, 1)?;
    for k in composite_ks(n) {
        acc += count_rotsym_refl_gap_k(n, 1, k)? * count_rotsym_refl(k)?;
    }
    Ok(acc)
}
