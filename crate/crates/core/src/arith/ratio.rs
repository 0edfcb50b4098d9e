use alloc::string::String;
use core::fmt::Write;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator. Every degree value in this crate has this type.
pub type ExactRatio = BigRational;

/// `num / den` as a reduced [`ExactRatio`]. Panics if `den` is zero.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRatio {
    BigRational::new(num.into(), den.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Round to nearest, ties to the even last digit.
    HalfEven,
    /// Round toward negative infinity (truncation for positive values).
    Floor,
}

/// Renders `value` with exactly `digits` fractional digits.
pub fn to_decimal(value: &ExactRatio, digits: u32, rounding: Rounding) -> String {
    let scale = Pow::pow(BigInt::from(10u32), digits);
    let scaled = value * BigRational::from_integer(scale.clone());
    let (mut q, r) = scaled.numer().div_mod_floor(scaled.denom());
    if rounding == Rounding::HalfEven && !r.is_zero() {
        let twice = &r * 2u32;
        let den = scaled.denom();
        if twice > *den || (twice == *den && q.is_odd()) {
            q += 1u32;
        }
    }
    let negative = q.sign() == Sign::Minus;
    let (int_part, frac_part) = q.abs().div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    write!(out, "{int_part}").unwrap();
    if digits > 0 {
        let frac = alloc::format!("{frac_part}");
        out.push('.');
        for _ in frac.len()..digits as usize {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}
