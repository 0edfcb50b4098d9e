//! p-groups with a cyclic maximal subgroup: `M(p^n)`, `D_{2^n}`, `Q_{2^n}`
//! and `S_{2^n}`.

use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_traits::Pow;

use crate::arith::{is_prime, ratio, ExactRatio};
use crate::{Error, Result};

fn check_modm(p: u64, n: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::param(format!("M(p, n) needs p prime, got p = {p}")));
    }
    if p == 2 && n < 4 {
        return Err(Error::param(format!("M(2, n) needs n >= 4, got n = {n}")));
    }
    if p > 2 && n < 3 {
        return Err(Error::param(format!("M(p, n) with p odd needs n >= 3, got n = {n}")));
    }
    Ok(())
}

fn check_min(family: &str, n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::param(format!("{family} needs n >= {min}, got n = {n}")));
    }
    Ok(())
}

fn two_pow(e: u32) -> BigUint {
    Pow::pow(BigUint::from(2u32), e)
}

fn div(c: BigUint, l: BigUint) -> ExactRatio {
    ratio(BigInt::from(c), BigInt::from(l))
}

/// `|C(M(p^n))| = (n-1)p + 2`.
pub fn c_modm(p: u64, n: u32) -> Result<BigUint> {
    check_modm(p, n)?;
    Ok(BigUint::from(u64::from(n - 1)) * p + 2u32)
}

/// `|L(M(p^n))| = (1+p)n + 1 - p`.
pub fn l_modm(p: u64, n: u32) -> Result<BigUint> {
    check_modm(p, n)?;
    Ok(BigUint::from(p + 1) * u64::from(n) + 1u32 - p)
}

pub fn cdeg_modm(p: u64, n: u32) -> Result<ExactRatio> {
    Ok(div(c_modm(p, n)?, l_modm(p, n)?))
}

/// `|C(D_{2^n})| = 2^(n-1) + n`.
pub fn c_dih2n(n: u32) -> Result<BigUint> {
    check_min("D_{2^n}", n, 3)?;
    Ok(two_pow(n - 1) + n)
}

/// `|L(D_{2^n})| = 2^n + n - 1`.
pub fn l_dih2n(n: u32) -> Result<BigUint> {
    check_min("D_{2^n}", n, 3)?;
    Ok(two_pow(n) + n - 1u32)
}

pub fn cdeg_dih2n(n: u32) -> Result<ExactRatio> {
    Ok(div(c_dih2n(n)?, l_dih2n(n)?))
}

/// `|C(Q_{2^n})| = 2^(n-2) + n`.
pub fn c_quat2n(n: u32) -> Result<BigUint> {
    check_min("Q_{2^n}", n, 3)?;
    Ok(two_pow(n - 2) + n)
}

/// `|L(Q_{2^n})| = 2^(n-1) + n - 1`.
pub fn l_quat2n(n: u32) -> Result<BigUint> {
    check_min("Q_{2^n}", n, 3)?;
    Ok(two_pow(n - 1) + n - 1u32)
}

pub fn cdeg_quat2n(n: u32) -> Result<ExactRatio> {
    Ok(div(c_quat2n(n)?, l_quat2n(n)?))
}

/// `|C(S_{2^n})| = 3 * 2^(n-3) + n`.
pub fn c_sd2n(n: u32) -> Result<BigUint> {
    check_min("S_{2^n}", n, 4)?;
    Ok(two_pow(n - 3) * 3u32 + n)
}

/// `|L(S_{2^n})| = 3 * 2^(n-2) + n - 1`.
pub fn l_sd2n(n: u32) -> Result<BigUint> {
    check_min("S_{2^n}", n, 4)?;
    Ok(two_pow(n - 2) * 3u32 + n - 1u32)
}

pub fn cdeg_sd2n(n: u32) -> Result<ExactRatio> {
    Ok(div(c_sd2n(n)?, l_sd2n(n)?))
}
