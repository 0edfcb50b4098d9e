//! Number-theoretic primitives and exact rational helpers.

mod factor;
mod qbinom;
mod ratio;
mod sieve;

pub use factor::{factorize, is_prime, Factorization};
pub use qbinom::{gaussian_binomial, subspace_count};
pub use ratio::{ratio, to_decimal, ExactRatio, Rounding};
pub use sieve::{SpfSieve, DEFAULT_SIEVE_CAP};

use alloc::vec::Vec;
use num_integer::Integer;

/// All positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    factorize(n).divisors()
}

pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .pairs()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Number of divisors.
pub fn tau(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .pairs()
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product()
}

/// Sum of divisors. Returned as `u128` since `sigma(n)` may exceed `u64` for
/// large `n`.
pub fn sigma(n: u64) -> u128 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .pairs()
        .iter()
        .map(|&(p, e)| {
            let p = u128::from(p);
            // 1 + p + ... + p^e
            (0..=e).fold(0u128, |acc, _| acc * p + 1)
        })
        .product()
}

pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined on positive integers");
    let f = factorize(n);
    if f.pairs().iter().any(|&(_, e)| e > 1) {
        0
    } else if f.pairs().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// `base^exp mod modulus`, with `x mod 1 = 0`.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = u128::from(modulus);
    let mut b = u128::from(base) % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists. Every residue is invertible mod 1.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let ext = (i128::from(a % m)).extended_gcd(&i128::from(m));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(i128::from(m)) as u64)
}

/// Multiplicative order of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    // The order divides phi(m); take the smallest such divisor.
    divisors(euler_phi(m))
        .into_iter()
        .find(|&d| pow_mod(a, d, m) == 1)
}
