//! Hamiltonian groups `Q_8 x Z_2^n x A` with `A` abelian of odd order.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Pow;

use super::abelian::{c_pgroup, l_pgroup, PGroupPartition};
use crate::arith::{gaussian_binomial, ratio, subspace_count, ExactRatio};
use crate::{Error, Result};

/// `|C(Q_8 x Z_2^n)| = 5 * 2^n`.
pub fn c_hamiltonian_core(n: u32) -> BigUint {
    Pow::pow(BigUint::from(2u32), n) * 5u32
}

fn a(n: u32) -> BigUint {
    subspace_count(n, 2).expect("p = 2 is valid")
}

/// `|L(Q_8 x Z_2^n)| = 6 a_n + 7 (2^n - 1) a_{n-1} + 6 [n choose 2]_2 a_{n-2}`,
/// `a_j = |L(Z_2^j)|`, terms with negative index omitted.
///
/// By Goursat's lemma a subgroup of `Q_8 x V` corresponds to sections
/// `Q_8 >= A >= A0`, `V >= B >= B0` and an isomorphism `A/A0 -> B/B0`.
/// The quotients of subgroups of `Q_8` that embed in an elementary abelian
/// 2-group are: 6 trivial, 7 of order 2 and 1 of type `Z_2^2` (`Q_8 / Z`).
/// Counting sections of `V` with quotient of rank `j` gives the three terms;
/// `|GL_2(2)| = 6` accounts for the isomorphisms in the last one.
pub fn l_hamiltonian_core(n: u32) -> BigUint {
    let mut total = a(n) * 6u32;
    if n >= 1 {
        total += (Pow::pow(BigUint::from(2u32), n) - 1u32) * a(n - 1) * 7u32;
    }
    if n >= 2 {
        total += gaussian_binomial(n, 2, 2).expect("valid") * a(n - 2) * 6u32;
    }
    total
}

/// The lattice size of `Q_8 x Z_2^n` as the expression
/// `2^(n+2) + 1 + 8 sum_{j=0}^{n-2} (2^(n-j) - 2^(2j+1) + 2^j) a_j + 2^(n+2) a_{n-1} + a_n`,
/// defined for `n >= 1`.
///
/// It matches [`l_hamiltonian_core`] for `n <= 2` only: it gives 233 instead
/// of 425 at `n = 3` and is negative from `n = 5` on. Kept for comparison.
pub fn b_n2_sum_form(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::param("the b_{n,2} expression needs n >= 1"));
    }
    let two = BigInt::from(2);
    let a = |j: u32| BigInt::from(a(j));
    let mut total = Pow::pow(&two, n + 2) + 1;
    for j in 0..n.saturating_sub(1) {
        let coef = Pow::pow(&two, n - j) - Pow::pow(&two, 2 * j + 1) + Pow::pow(&two, j);
        total += coef * a(j) * 8;
    }
    total += Pow::pow(&two, n + 2) * a(n - 1) + a(n);
    Ok(total)
}

fn check_odd_parts(odd_abelian: &[PGroupPartition]) -> Result<()> {
    let mut primes: Vec<u64> = odd_abelian.iter().map(PGroupPartition::p).collect();
    if let Some(&p) = primes.iter().find(|&&p| p == 2) {
        return Err(Error::param(format!("the odd abelian part cannot have a {p}-component")));
    }
    primes.sort_unstable();
    if primes.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::param("the odd abelian part needs one partition per prime"));
    }
    Ok(())
}

/// `(|C|, |L|)` of `Q_8 x Z_2^n x A`, with `A` given by its Sylow partitions.
pub fn hamiltonian_counts(n: u32, odd_abelian: &[PGroupPartition]) -> Result<(BigUint, BigUint)> {
    check_odd_parts(odd_abelian)?;
    let mut c = c_hamiltonian_core(n);
    let mut l = l_hamiltonian_core(n);
    for part in odd_abelian {
        c *= c_pgroup(part);
        l *= l_pgroup(part)?;
    }
    Ok((c, l))
}

/// `cdeg(Q_8 x Z_2^n x A) = (5 * 2^n / |L(Q_8 x Z_2^n)|) cdeg(A)`.
pub fn cdeg_hamiltonian(n: u32, odd_abelian: &[PGroupPartition]) -> Result<ExactRatio> {
    check_odd_parts(odd_abelian)?;
    let mut value = ratio(BigInt::from(c_hamiltonian_core(n)), BigInt::from(l_hamiltonian_core(n)));
    for part in odd_abelian {
        value *= ratio(BigInt::from(c_pgroup(part)), BigInt::from(l_pgroup(part)?));
    }
    Ok(value)
}
