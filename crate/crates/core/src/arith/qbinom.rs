use alloc::format;
use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::{Error, Result};

/// The Gaussian binomial coefficient `[k choose j]_p`, i.e. the number of
/// `j`-dimensional subspaces of `F_p^k` when `p` is prime.
///
/// Evaluated as the telescoping product
/// `[k, i]_p = [k, i-1]_p * (p^(k-i+1) - 1) / (p^i - 1)`, where each
/// intermediate value is itself a Gaussian binomial, so every division is
/// exact.
pub fn gaussian_binomial(k: u32, j: u32, p: u64) -> Result<BigUint> {
    if p < 2 {
        return Err(Error::param(format!("gaussian_binomial needs p >= 2, got {p}")));
    }
    if j > k {
        return Err(Error::param(format!(
            "gaussian_binomial needs j <= k, got j = {j}, k = {k}"
        )));
    }
    let base = BigUint::from(p);
    let one = BigUint::one();
    let mut acc = BigUint::one();
    for i in 1..=j {
        let num = Pow::pow(&base, k - i + 1) - &one;
        let den = Pow::pow(&base, i) - &one;
        acc *= num;
        debug_assert!((&acc % &den) == BigUint::ZERO);
        acc /= den;
    }
    Ok(acc)
}

/// `sum_j [k choose j]_p`, the number of subspaces of `F_p^k`.
pub fn subspace_count(k: u32, p: u64) -> Result<BigUint> {
    (0..=k).try_fold(BigUint::ZERO, |acc, j| Ok(acc + gaussian_binomial(k, j, p)?))
}
