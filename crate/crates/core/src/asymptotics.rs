//! The multiplicative function `f(n) = cdeg(Z_n x Z_n)`: values, its Möbius
//! transform `g = mu * f`, partial sums and the mean value
//! `M = prod_p (1 - 1/p) sum_a f(p^a)/p^a`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::arith::{factorize, is_prime, ratio, to_decimal, ExactRatio, Rounding, SpfSieve};
use crate::{Error, Result};

/// Default upper limit for partial sums.
pub const DEFAULT_PARTIAL_SUM_CAP: u64 = 10_000_000;

/// Numerator and denominator of
/// `f(p^a) = (p^(a+2) - p^a - 2p + 2) / (p^(a+2) + p^(a+1) - (2a+3)p + (2a+1))`.
fn f_pp_parts(p: &BigInt, a: u32) -> (BigInt, BigInt) {
    let pa = Pow::pow(p, a);
    let pa2 = &pa * p * p;
    let num = &pa2 - &pa - p * 2 + 2;
    let den = &pa2 + &pa * p - p * (2 * i64::from(a) + 3) + (2 * i64::from(a) + 1);
    (num, den)
}

/// `f(p^a)`. `f(p^0) = 1`.
pub fn f_prime_power(p: u64, a: u32) -> ExactRatio {
    assert!(is_prime(p), "f_prime_power needs a prime, got {p}");
    if a == 0 {
        return ExactRatio::one();
    }
    let (num, den) = f_pp_parts(&BigInt::from(p), a);
    ratio(num, den)
}

/// `f(n) = cdeg(Z_n x Z_n)`, as a product over the prime powers of `n`.
pub fn f_at(n: u64) -> ExactRatio {
    assert!(n >= 1, "f is defined on n >= 1");
    factorize(n).pairs().iter().map(|&(p, a)| f_prime_power(p, a)).product()
}

/// `g(p^a) = f(p^a) - f(p^(a-1))`.
pub fn g_at_prime_power(p: u64, a: u32) -> ExactRatio {
    assert!(a >= 1, "g_at_prime_power needs a >= 1");
    f_prime_power(p, a) - f_prime_power(p, a - 1)
}

/// `g(n) = sum_{d | n} mu(n/d) f(d)`, multiplicative.
pub fn g_at(n: u64) -> ExactRatio {
    assert!(n >= 1, "g is defined on n >= 1");
    factorize(n).pairs().iter().map(|&(p, a)| g_at_prime_power(p, a)).product()
}

/// `sum_{n <= x} f(n)` as an exact fraction. Only practical for modest `x`;
/// the denominators grow quickly.
pub fn partial_sum_exact(x: u64) -> ExactRatio {
    let mut total = ExactRatio::zero();
    // Accumulate unreduced and normalize every 1024 terms.
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for n in 1..=x {
        let v = f_at(n);
        num = num * v.denom() + v.numer() * &den;
        den *= v.denom();
        if n % 1024 == 0 {
            let g = num.gcd(&den);
            num /= &g;
            den /= &g;
        }
    }
    total += BigRational::new(num, den);
    total
}

/// Fractional bits of the fixed-point partial sums.
pub const FIXED_POINT_BITS: u32 = 64;

/// `floor(num * 2^64 / den)` for `num <= den < 2^96`.
fn fixed_point_quotient(num: u128, den: u128) -> u128 {
    let mut q = num / den;
    let mut r = num % den;
    for _ in 0..2 {
        r <<= 32;
        q = (q << 32) | (r / den);
        r %= den;
    }
    q
}

/// `floor(f(n) * 2^64)`, given the factorization of `n`.
fn f_fixed(factors: &[(u64, u32)]) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for &(p, a) in factors {
        let p = u128::from(p);
        let pa = p.pow(a);
        let pa2 = pa * p * p;
        let a = u128::from(a);
        num *= pa2 - pa - 2 * p + 2;
        den *= pa2 + pa * p + 2 * a + 1 - (2 * a + 3) * p;
    }
    fixed_point_quotient(num, den)
}

/// Sum of `floor(f(n) * 2^64)` over `lo <= n <= hi`, using `sieve` for the
/// factorizations.
///
/// Each term is truncated by less than `2^-64`, so the range total
/// underestimates the true sum by less than `(hi - lo + 1) * 2^-64`. Totals of
/// disjoint ranges add exactly, so any partition of `[1, x]` gives the same
/// result.
pub fn partial_sum_fixed_range(sieve: &SpfSieve, lo: u64, hi: u64) -> u128 {
    assert!(lo >= 1 && hi <= sieve.limit(), "range outside the sieve");
    let mut factors = Vec::new();
    let mut total = 0u128;
    for n in lo..=hi {
        sieve.prime_powers(n, &mut factors);
        total += f_fixed(&factors);
    }
    total
}

/// `sum_{n <= x} f(n)` in fixed point with 64 fractional bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSum {
    pub x: u64,
    /// The sum times `2^64`, rounded down term by term.
    pub fixed: u128,
}

impl PartialSum {
    pub fn from_fixed(x: u64, fixed: u128) -> Self {
        PartialSum { x, fixed }
    }

    /// The fixed-point value as a fraction. The true sum lies in
    /// `[value, value + x / 2^64)`.
    pub fn value(&self) -> ExactRatio {
        ratio(BigInt::from(self.fixed), BigInt::from(1u128 << FIXED_POINT_BITS))
    }

    pub fn error_bound(&self) -> ExactRatio {
        ratio(BigInt::from(self.x), BigInt::from(1u128 << FIXED_POINT_BITS))
    }
}

/// `sum_{n <= x} f(n)`, refusing `x` above `cap`.
pub fn partial_sum_f(x: u64, cap: u64) -> Result<PartialSum> {
    if x > cap {
        return Err(Error::Resource { what: "partial sum bound", requested: x.into(), cap: cap.into() });
    }
    if x == 0 {
        return Ok(PartialSum::from_fixed(0, 0));
    }
    let sieve = SpfSieve::with_cap(x, cap)?;
    Ok(PartialSum::from_fixed(x, partial_sum_fixed_range(&sieve, 1, x)))
}

/// A decimal number `units / 10^scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub units: BigInt,
    pub scale: u32,
}

impl Decimal {
    /// `value` rounded down to `scale` digits.
    pub fn floor(value: &ExactRatio, scale: u32) -> Self {
        let scaled = value * BigRational::from_integer(Pow::pow(BigInt::from(10u32), scale));
        Decimal { units: scaled.floor().to_integer(), scale }
    }

    pub fn to_ratio(&self) -> ExactRatio {
        ratio(self.units.clone(), Pow::pow(BigInt::from(10u32), self.scale))
    }

    /// Rendering with `digits` fractional digits.
    pub fn render(&self, digits: u32, rounding: Rounding) -> alloc::string::String {
        to_decimal(&self.to_ratio(), digits, rounding)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.to_ratio();
        let scale = 1u64 << 53;
        let scaled = (r * BigRational::from_integer(BigInt::from(scale))).round().to_integer();
        scaled.to_f64().unwrap_or(f64::NAN) / scale as f64
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.scale, Rounding::Floor))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanValueResult {
    /// Truncated Euler product, with `precision + 10` digits.
    pub m: Decimal,
    pub prime_bound: u64,
    /// Largest number of series terms used for a local factor (at `p = 2`).
    pub series_depth: u32,
    /// Upper bound on `|M - m|`: primes beyond the bound, truncated local
    /// series and rounding.
    pub tail_bound: Decimal,
}

impl MeanValueResult {
    /// `M` with `digits` fractional digits, truncated.
    pub fn render(&self, digits: u32) -> alloc::string::String {
        self.m.render(digits, Rounding::Floor)
    }
}

/// The mean value `M` of `f` from the Euler product over primes `<= prime_bound`.
///
/// The local factor `E_p = (1 - 1/p) sum_a f(p^a)/p^a` is summed until
/// `p^(a+1)` exceeds `10^(precision + 10)`; the neglected part of the series
/// is below `p^-(a+1)`. For the primes left out, `E_p = 1 + sum_a g(p^a)/p^a`
/// with `|g(p^a)| < (2a-1)/p^a`, so `|E_p - 1| < 1.01/p^2` for `p > 100` and
/// the tail of the product is within `2/prime_bound` of 1.
pub fn mean_value_m(prime_bound: u64, precision: u32) -> Result<MeanValueResult> {
    if prime_bound < 100 {
        return Err(Error::param("mean_value_m needs prime_bound >= 100"));
    }
    let work = precision + 10;
    let one = Pow::pow(BigInt::from(10u32), work);
    let sieve = SpfSieve::new(prime_bound)?;
    let mut product = one.clone();
    let mut series_depth = 0;
    let mut terms: u64 = 0;
    for &p in sieve.primes() {
        let p = u64::from(p);
        let pb = BigInt::from(p);
        // Depth d: terms a = 0..=d with p^(d+1) > 10^work.
        let mut d = 0u32;
        let mut pw = pb.clone();
        while pw <= one {
            pw *= &pb;
            d += 1;
        }
        series_depth = series_depth.max(d);
        // Local factor in fixed point: (p - 1)/p * sum_{a <= d} f(p^a)/p^a.
        let mut sum = BigRational::zero();
        let mut p_pow = BigInt::one();
        for a in 0..=d {
            let (num, den) = if a == 0 { (BigInt::one(), BigInt::one()) } else { f_pp_parts(&pb, a) };
            sum += BigRational::new(num, den * &p_pow);
            p_pow *= &pb;
        }
        let local = sum * ratio(p - 1, p);
        let local_fixed = (local * BigRational::from_integer(one.clone())).floor().to_integer();
        product = product * local_fixed / &one;
        terms += 1;
    }
    // Per prime: the series truncation (below 10^-work), the floor of the
    // local factor and the floor of the product each cost at most one unit.
    let rounding = ratio(BigInt::from(3 * terms), one.clone());
    let tail = ratio(2, prime_bound) + rounding;
    Ok(MeanValueResult {
        m: Decimal { units: product, scale: work },
        prime_bound,
        series_depth,
        tail_bound: ceil_decimal(&tail, work),
    })
}

fn ceil_decimal(value: &ExactRatio, scale: u32) -> Decimal {
    let scaled = value * BigRational::from_integer(Pow::pow(BigInt::from(10u32), scale));
    Decimal { units: scaled.ceil().to_integer(), scale }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorProfileRow {
    pub x: u64,
    pub partial_sum: PartialSum,
    /// `partial_sum - M x`.
    pub residual: ExactRatio,
    /// `residual / (ln x)^3`, undefined at `x = 1`.
    pub residual_over_log3: Option<f64>,
}

/// Residuals `S(x) - M x` for each requested `x`, with `M` from `mean`.
pub fn error_profile(xs: &[u64], mean: &MeanValueResult, cap: u64) -> Result<Vec<ErrorProfileRow>> {
    let max = xs.iter().copied().max().unwrap_or(0);
    if max > cap {
        return Err(Error::Resource { what: "partial sum bound", requested: max.into(), cap: cap.into() });
    }
    if xs.contains(&0) {
        return Err(Error::param("error profile points must be >= 1"));
    }
    let sieve = SpfSieve::with_cap(max.max(1), cap)?;
    let mut order: Vec<u64> = xs.to_vec();
    order.sort_unstable();
    order.dedup();
    // One pass over [1, max], reading off each requested point.
    let mut sums = Vec::with_capacity(order.len());
    let mut acc = 0u128;
    let mut done = 0u64;
    for &x in &order {
        acc += partial_sum_fixed_range(&sieve, done + 1, x);
        done = x;
        sums.push((x, acc));
    }
    let m = mean.m.to_ratio();
    Ok(xs
        .iter()
        .map(|&x| {
            let fixed = sums.iter().find(|&&(y, _)| y == x).expect("computed").1;
            let partial_sum = PartialSum::from_fixed(x, fixed);
            let residual = partial_sum.value() - &m * BigRational::from_integer(BigInt::from(x));
            let log = libm::log(x as f64);
            let residual_over_log3 = (x > 1).then(|| ratio_to_f64(&residual) / (log * log * log));
            ErrorProfileRow { x, partial_sum, residual, residual_over_log3 }
        })
        .collect())
}

fn ratio_to_f64(r: &ExactRatio) -> f64 {
    Decimal::floor(r, 18).to_f64()
}

/// Exact value of `sum_{d | n} g(d)`, for identity checks.
pub fn moebius_round_trip(n: u64) -> ExactRatio {
    crate::arith::divisors(n).into_iter().map(g_at).sum()
}
