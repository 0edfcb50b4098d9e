use alloc::vec;
use alloc::vec::Vec;

use super::Factorization;
use crate::{Error, Result};

/// Default upper limit for [`SpfSieve`].
pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Smallest-prime-factor table for `2..=limit`, built by a linear sieve.
/// Immutable once built.
#[derive(Debug, Clone)]
pub struct SpfSieve {
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_cap(limit, DEFAULT_SIEVE_CAP)
    }

    pub fn with_cap(limit: u64, cap: u64) -> Result<Self> {
        if limit > cap || limit >= u64::from(u32::MAX) {
            return Err(Error::Resource {
                what: "sieve limit",
                requested: limit.into(),
                cap: cap.min(u64::from(u32::MAX) - 1).into(),
            });
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > si || m > n {
                    break;
                }
                spf[m] = p;
            }
        }
        Ok(SpfSieve { spf, primes })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of `n` for `2 <= n <= limit`.
    pub fn smallest_factor(&self, n: u64) -> u64 {
        assert!(n >= 2 && n <= self.limit(), "{n} outside sieve range");
        u64::from(self.spf[n as usize])
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Prime-power decomposition of `n`, `1 <= n <= limit`, as
    /// `(p, e)` pairs in increasing `p`.
    pub fn prime_powers(&self, mut n: u64, out: &mut Vec<(u64, u32)>) {
        out.clear();
        while n > 1 {
            let p = self.smallest_factor(n);
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }

    pub fn factorize(&self, n: u64) -> Factorization {
        let mut pairs = Vec::new();
        self.prime_powers(n, &mut pairs);
        Factorization::from_pairs(pairs)
    }
}
