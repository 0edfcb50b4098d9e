//! ZM-groups `<a, b | a^m = b^n = 1, b^-1 a b = a^r>` and dihedral groups.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::arith::{divisors, ratio, sigma, tau, ExactRatio};
use crate::oracle::check_zm;
use crate::Result;

/// `(r^n - 1) / (r^n1 - 1)` as the geometric sum `sum_{j < n/n1} r^(j n1)`.
fn geometric_quotient(r: u64, n: u64, n1: u64) -> BigUint {
    let step: BigUint = Pow::pow(BigUint::from(r), n1);
    let mut term = BigUint::from(1u32);
    let mut total = BigUint::zero();
    for _ in 0..n / n1 {
        total += &term;
        term *= &step;
    }
    total
}

/// Sums `gcd(m1, (r^n - 1)/(r^n1 - 1))` over `m1 | m`, `n1 | n`, keeping
/// the pairs with `keep(m1, n1)`.
fn zm_sum(m: u64, n: u64, r: u64, keep: impl Fn(u64, u64) -> bool) -> BigUint {
    let dm = divisors(m);
    let mut total = BigUint::zero();
    for n1 in divisors(n) {
        let q = geometric_quotient(r, n, n1);
        for &m1 in &dm {
            if keep(m1, n1) {
                total += (&q % m1).gcd(&BigUint::from(m1));
            }
        }
    }
    total
}

/// `|L(ZM(m, n, r))| = sum_{m1 | m, n1 | n} gcd(m1, (r^n - 1)/(r^n1 - 1))`.
pub fn l_zm(m: u64, n: u64, r: u64) -> Result<BigUint> {
    check_zm(m, n, r)?;
    Ok(zm_sum(m, n, r, |_, _| true))
}

/// `|C(ZM(m, n, r))|`: the same sum restricted to `m/m1 | r^n1 - 1`.
pub fn c_zm(m: u64, n: u64, r: u64) -> Result<BigUint> {
    check_zm(m, n, r)?;
    Ok(zm_sum(m, n, r, |m1, n1| {
        let k = m / m1;
        // r^n1 - 1 = 0 (mod k), with the convention that everything divides 0.
        crate::arith::pow_mod(r, n1, k) == 1 % k
    }))
}

pub fn cdeg_zm(m: u64, n: u64, r: u64) -> Result<ExactRatio> {
    Ok(ratio(BigInt::from(c_zm(m, n, r)?), BigInt::from(l_zm(m, n, r)?)))
}

/// `|C(D_{2m})| = m + tau(m)`.
pub fn c_dihedral(m: u64) -> BigUint {
    assert!(m >= 1, "D_2m needs m >= 1");
    BigUint::from(m) + tau(m)
}

/// `|L(D_{2m})| = tau(m) + sigma(m)`.
pub fn l_dihedral(m: u64) -> BigUint {
    assert!(m >= 1, "D_2m needs m >= 1");
    BigUint::from(sigma(m)) + tau(m)
}

pub fn cdeg_dihedral(m: u64) -> ExactRatio {
    ratio(BigInt::from(c_dihedral(m)), BigInt::from(l_dihedral(m)))
}
