//! Abelian groups: elementary abelian, rank two, general `|C|`, and abelian
//! p-groups by partition.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::arith::{divisors, euler_phi, gcd, is_prime, ratio, subspace_count, ExactRatio};
use crate::{Error, Result};

fn require_prime(p: u64, what: &str) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::param(format!("{what} needs p prime, got p = {p}")))
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn pow(p: u64, e: u32) -> BigUint {
    Pow::pow(big(p), e)
}

/// `|C(Z_p^k)| = 1 + (p^k - 1)/(p - 1)`, i.e. `2 + p + ... + p^(k-1)`.
pub fn c_elem_abelian(p: u64, k: u32) -> Result<BigUint> {
    require_prime(p, "c_elem_abelian")?;
    if k == 0 {
        return Err(Error::param("c_elem_abelian needs k >= 1"));
    }
    Ok(BigUint::one() + (pow(p, k) - 1u32) / big(p - 1))
}

/// `|L(Z_p^k)| = sum_j [k choose j]_p`.
pub fn l_elem_abelian(p: u64, k: u32) -> Result<BigUint> {
    require_prime(p, "l_elem_abelian")?;
    if k == 0 {
        return Err(Error::param("l_elem_abelian needs k >= 1"));
    }
    subspace_count(k, p)
}

/// The same lattice size written as
/// `2 + sum_{a=1}^{k-1} sum_{1 <= i_1 < ... < i_a <= k} p^(i_1 + ... + i_a - a(a+1)/2)`.
///
/// The inner sums are elementary symmetric polynomials in `p, p^2, ..., p^k`,
/// accumulated by the usual one-variable-at-a-time recurrence.
pub fn l_elem_abelian_alternate(p: u64, k: u32) -> Result<BigUint> {
    require_prime(p, "l_elem_abelian_alternate")?;
    if k == 0 {
        return Err(Error::param("l_elem_abelian_alternate needs k >= 1"));
    }
    let k = k as usize;
    // e[a] = e_a(p^1, ..., p^i) after processing i variables.
    let mut e: Vec<BigUint> = alloc::vec![BigUint::zero(); k + 1];
    e[0] = BigUint::one();
    for i in 1..=k {
        let x = pow(p, i as u32);
        for a in (1..=i).rev() {
            let add = &e[a - 1] * &x;
            e[a] += add;
        }
    }
    let mut total = big(2);
    for (a, e_a) in e.iter().enumerate().take(k).skip(1) {
        let shift = pow(p, (a * (a + 1) / 2) as u32);
        debug_assert!((e_a % &shift).is_zero());
        total += e_a / shift;
    }
    Ok(total)
}

/// `cdeg(Z_p^k)`. Both lattice-size forms are evaluated and must agree.
pub fn cdeg_elem_abelian(p: u64, k: u32) -> Result<ExactRatio> {
    let c = c_elem_abelian(p, k)?;
    let l = l_elem_abelian(p, k)?;
    let alt = l_elem_abelian_alternate(p, k)?;
    assert_eq!(l, alt, "lattice size forms disagree for Z_{p}^{k}");
    Ok(ratio(BigInt::from(c), BigInt::from(l)))
}

/// `cs(m, n) = |C(Z_m x Z_n)| = sum_{a | m, b | n} phi(gcd(a, b))`.
pub fn cs_rank2(m: u64, n: u64) -> BigUint {
    rank2_sum(m, n, euler_phi)
}

/// `s(m, n) = |L(Z_m x Z_n)| = sum_{a | m, b | n} gcd(a, b)`.
pub fn s_rank2(m: u64, n: u64) -> BigUint {
    rank2_sum(m, n, |g| g)
}

fn rank2_sum(m: u64, n: u64, f: impl Fn(u64) -> u64) -> BigUint {
    assert!(m >= 1 && n >= 1, "rank-two sums need m, n >= 1");
    let dn = divisors(n);
    divisors(m)
        .into_iter()
        .flat_map(|a| dn.iter().map(move |&b| gcd(a, b)))
        .map(|g| u128::from(f(g)))
        .sum::<u128>()
        .into()
}

pub fn cdeg_rank2(m: u64, n: u64) -> ExactRatio {
    ratio(BigInt::from(cs_rank2(m, n)), BigInt::from(s_rank2(m, n)))
}

/// `|C(Z_{n_1} x ... x Z_{n_k})| = sum phi(a_1)...phi(a_k) / phi(lcm(a_1, ..., a_k))`
/// over `a_i | n_i`.
///
/// Individual summands need not be integers, so the sum is accumulated as
/// an exact rational; a non-integral total is an internal error.
pub fn c_abelian(ns: &[u64]) -> Result<BigUint> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(Error::param("c_abelian needs at least one factor, each >= 1"));
    }
    let divs: Vec<Vec<u64>> = ns.iter().map(|&n| divisors(n)).collect();
    let mut idx = alloc::vec![0usize; ns.len()];
    let mut total = BigRational::zero();
    loop {
        let mut phis = BigUint::one();
        let mut l = 1u64;
        for (i, &j) in idx.iter().enumerate() {
            let a = divs[i][j];
            phis *= euler_phi(a);
            l = (l / gcd(l, a))
                .checked_mul(a)
                .ok_or_else(|| Error::param("c_abelian: lcm of divisors exceeds 64 bits"))?;
        }
        total += ratio(BigInt::from(phis), BigInt::from(euler_phi(l)));
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                assert!(total.is_integer(), "c_abelian produced a non-integer total {total}");
                return Ok(total.to_integer().to_biguint().expect("positive"));
            }
            idx[pos] += 1;
            if idx[pos] < divs[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn check_rank2_exponents(p: u64, a1: u32, a2: u32, what: &str) -> Result<()> {
    require_prime(p, what)?;
    if a1 == 0 || a1 > a2 {
        return Err(Error::param(format!(
            "{what} needs 1 <= alpha1 <= alpha2, got alpha1 = {a1}, alpha2 = {a2}"
        )));
    }
    Ok(())
}

/// `|C(Z_{p^a1} x Z_{p^a2})| = 2 + 2p + ... + 2p^(a1-1) + (a2 - a1 + 1) p^a1`.
pub fn c_pgroup_rank2(p: u64, a1: u32, a2: u32) -> Result<BigUint> {
    check_rank2_exponents(p, a1, a2, "c_pgroup_rank2")?;
    let geometric = (pow(p, a1) - 1u32) / big(p - 1);
    Ok(geometric * 2u32 + big(u64::from(a2 - a1 + 1)) * pow(p, a1))
}

/// The common denominator of the rank-two closed forms:
/// `(a2-a1+1) p^(a1+2) - (a2-a1-1) p^(a1+1) - (a1+a2+3) p + (a1+a2+1)`.
fn rank2_denominator(p: u64, a1: u32, a2: u32) -> BigInt {
    let p_big = BigInt::from(p);
    let d = i64::from(a2) - i64::from(a1);
    let s = i64::from(a1) + i64::from(a2);
    BigInt::from(d + 1) * Pow::pow(&p_big, a1 + 2) - BigInt::from(d - 1) * Pow::pow(&p_big, a1 + 1)
        - BigInt::from(s + 3) * &p_big
        + BigInt::from(s + 1)
}

/// `|L(Z_{p^a1} x Z_{p^a2})|`: the rank-two denominator divided by `(p-1)^2`.
pub fn l_pgroup_rank2(p: u64, a1: u32, a2: u32) -> Result<BigUint> {
    check_rank2_exponents(p, a1, a2, "l_pgroup_rank2")?;
    let den = rank2_denominator(p, a1, a2);
    let sq = BigInt::from(p - 1) * BigInt::from(p - 1);
    assert!((&den % &sq).is_zero());
    Ok((den / sq).to_biguint().expect("positive"))
}

/// `cdeg(Z_{p^a1} x Z_{p^a2})` as the single closed-form fraction
/// `[(d+1)p^(a1+2) - 2d p^(a1+1) + (d-1)p^a1 - 2p + 2] / denominator`,
/// `d = a2 - a1`.
pub fn cdeg_pgroup_rank2(p: u64, a1: u32, a2: u32) -> Result<ExactRatio> {
    check_rank2_exponents(p, a1, a2, "cdeg_pgroup_rank2")?;
    let p_big = BigInt::from(p);
    let d = i64::from(a2) - i64::from(a1);
    let num = BigInt::from(d + 1) * Pow::pow(&p_big, a1 + 2)
        - BigInt::from(2 * d) * Pow::pow(&p_big, a1 + 1)
        + BigInt::from(d - 1) * Pow::pow(&p_big, a1)
        - BigInt::from(2) * &p_big
        + BigInt::from(2);
    Ok(ratio(num, rank2_denominator(p, a1, a2)))
}

/// Type `(a_1 <= ... <= a_k)` of the abelian p-group
/// `Z_{p^a_1} x ... x Z_{p^a_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PGroupPartition {
    p: u64,
    alphas: Vec<u32>,
}

impl PGroupPartition {
    pub fn new(p: u64, alphas: Vec<u32>) -> Result<Self> {
        require_prime(p, "PGroupPartition")?;
        if alphas.is_empty() || alphas.contains(&0) {
            return Err(Error::param("PGroupPartition needs k >= 1 positive exponents"));
        }
        if alphas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::param("PGroupPartition exponents must be nondecreasing"));
        }
        Ok(PGroupPartition { p, alphas })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn rank(&self) -> usize {
        self.alphas.len()
    }

    /// Cyclic factor orders `p^a_i`.
    pub fn invariants(&self) -> Option<Vec<u64>> {
        self.alphas.iter().map(|&a| self.p.checked_pow(a)).collect()
    }

    /// Sylow decomposition of `Z_{n_1} x ... x Z_{n_k}`, by increasing prime.
    pub fn sylow_parts(ns: &[u64]) -> Vec<PGroupPartition> {
        let mut by_prime: alloc::collections::BTreeMap<u64, Vec<u32>> = Default::default();
        for &n in ns {
            for &(p, e) in crate::arith::factorize(n).pairs() {
                by_prime.entry(p).or_default().push(e);
            }
        }
        by_prime
            .into_iter()
            .map(|(p, mut alphas)| {
                alphas.sort_unstable();
                PGroupPartition { p, alphas }
            })
            .collect()
    }

    /// `h^{k-1}_p(a)`: `p^((k-i) a + a_1 + ... + a_{i-1})` on `a_{i-1} <= a <= a_i`
    /// (with `a_0 = 0`), and `p^(a_1 + ... + a_{k-1})` beyond `a_{k-1}`.
    fn h(&self, a: u32) -> BigUint {
        let k = self.alphas.len() as u32;
        let mut prefix = 0u32;
        for (i, &ai) in self.alphas.iter().enumerate() {
            if a <= ai {
                return pow(self.p, (k - 1 - i as u32) * a + prefix);
            }
            prefix += ai;
        }
        unreachable!("h is only evaluated up to a_k")
    }
}

/// `|C|` of an abelian p-group as `1 + sum_{a=1}^{a_k} (p^a h(a) - p^(a-1) h(a-1)) / (p^a - p^(a-1))`,
/// the sum counting the nontrivial cyclic subgroups.
pub fn c_pgroup(part: &PGroupPartition) -> BigUint {
    let p = part.p;
    let top = *part.alphas.last().expect("nonempty");
    let mut total = BigRational::one();
    for a in 1..=top {
        let num = BigInt::from(pow(p, a) * part.h(a)) - BigInt::from(pow(p, a - 1) * part.h(a - 1));
        let den = BigInt::from(pow(p, a) - pow(p, a - 1));
        total += ratio(num, den);
    }
    assert!(total.is_integer());
    total.to_integer().to_biguint().expect("positive")
}

/// Expanded closed form of [`c_pgroup`]:
/// `1 + (a_k - a_{k-1}) p^(a_1+...+a_{k-1})
///    + 1/(p-1) sum_{i=1}^{k-1} p^(a_1+...+a_{i-1}) (p^(k-i+1) - 1)/(p^(k-i) - 1) (p^((k-i) a_i) - p^((k-i) a_{i-1}))`.
///
/// Summing the h-form over each interval `(a_{i-1}, a_i]` is geometric with
/// ratio `p^(k-i)`, which is where the factor `(p^(k-i+1) - 1)/(p^(k-i) - 1)`
/// comes from; writing it as `p^(k-i+1)/p^(k-i) = p` does not reproduce the
/// h-sum (see the tests).
pub fn c_pgroup_expanded(part: &PGroupPartition) -> BigUint {
    let p = part.p;
    let al = &part.alphas;
    let k = al.len() as u32;
    let prefix = |i: usize| al[..i].iter().sum::<u32>();
    let a_prev = |i: usize| if i == 0 { 0 } else { al[i - 1] };
    let mut total = BigRational::from_integer(BigInt::from(
        BigUint::one() + big(u64::from(al[k as usize - 1] - a_prev(k as usize - 1))) * pow(p, prefix(k as usize - 1)),
    ));
    for i in 1..k {
        let idx = (i - 1) as usize; // a_i is al[idx]
        let e = k - i;
        let factor = ratio(BigInt::from(pow(p, e + 1) - 1u32), BigInt::from(pow(p, e) - 1u32));
        let diff = BigInt::from(pow(p, e * al[idx])) - BigInt::from(pow(p, e * a_prev(idx)));
        total += factor * BigRational::from_integer(BigInt::from(pow(p, prefix(idx))) * diff)
            / BigRational::from_integer(BigInt::from(p - 1));
    }
    assert!(total.is_integer());
    total.to_integer().to_biguint().expect("positive")
}

/// `|L|` of an abelian p-group where a closed form is available: rank one,
/// rank two, or elementary abelian.
pub fn l_pgroup(part: &PGroupPartition) -> Result<BigUint> {
    let al = &part.alphas;
    match al.as_slice() {
        [a] => Ok(big(u64::from(*a) + 1)),
        [a1, a2] => l_pgroup_rank2(part.p, *a1, *a2),
        _ if al.iter().all(|&a| a == 1) => l_elem_abelian(part.p, al.len() as u32),
        _ => Err(Error::Unsupported(format!(
            "no closed form for |L| of the abelian {}-group of type {:?}",
            part.p, al
        ))),
    }
}

/// `(|C|, |L|)` of `Z_{n_1} x ... x Z_{n_k}`. `|C|` always has a closed form;
/// `|L|` is the product over Sylow subgroups and needs each of them to be of
/// rank at most two or elementary abelian. Two-factor inputs use `s(m, n)`.
pub fn abelian_counts(ns: &[u64]) -> Result<(BigUint, BigUint)> {
    let c = c_abelian(ns)?;
    let l = match ns {
        [n] => big(crate::arith::tau(*n)),
        [m, n] => s_rank2(*m, *n),
        _ => PGroupPartition::sylow_parts(ns)
            .iter()
            .try_fold(BigUint::one(), |acc, part| Ok::<_, Error>(acc * l_pgroup(part)?))?,
    };
    Ok((c, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn elementary_abelian_examples() {
        for p in [2u64, 3, 5, 7, 11] {
            assert_eq!(cdeg_elem_abelian(p, 3).unwrap(), ratio(1, 2));
            assert_eq!(cdeg_elem_abelian(p, 2).unwrap(), ratio(p + 2, p + 3));
            assert_eq!(cdeg_elem_abelian(p, 1).unwrap(), ratio(1, 1));
            assert_eq!(c_elem_abelian(p, 1).unwrap(), u(2));
            let p4 = ratio(
                p.pow(3) + p.pow(2) + p + 2,
                p.pow(4) + 3 * p.pow(3) + 4 * p.pow(2) + 3 * p + 5,
            );
            assert_eq!(cdeg_elem_abelian(p, 4).unwrap(), p4);
        }
        assert_eq!(cdeg_elem_abelian(2, 4).unwrap(), ratio(16, 67));
        assert!(c_elem_abelian(4, 2).is_err());
    }

    #[test]
    fn alternate_lattice_form_matches_gaussian_sum() {
        for p in [2u64, 3, 5] {
            for k in 1..=6 {
                assert_eq!(l_elem_abelian_alternate(p, k).unwrap(), l_elem_abelian(p, k).unwrap());
            }
        }
    }

    #[test]
    fn rank2_examples() {
        assert_eq!(cdeg_rank2(1, 17), ratio(1, 1));
        assert_eq!((cs_rank2(2, 2), s_rank2(2, 2)), (u(4), u(5)));
        assert_eq!((cs_rank2(2, 4), s_rank2(2, 4)), (u(6), u(8)));
        assert_eq!(cdeg_rank2(2, 4), ratio(3, 4));
    }

    #[test]
    fn general_abelian_examples() {
        for n in [1u64, 7, 12, 360] {
            assert_eq!(c_abelian(&[n]).unwrap(), u(crate::arith::tau(n)));
        }
        assert_eq!(c_abelian(&[2, 2]).unwrap(), u(4));
        assert_eq!(c_abelian(&[2, 2, 2]).unwrap(), u(8));
        for m in 1..40 {
            for n in 1..40 {
                assert_eq!(c_abelian(&[m, n]).unwrap(), cs_rank2(m, n));
            }
        }
    }

    #[test]
    fn rank2_pgroup_closed_forms() {
        assert_eq!(cdeg_pgroup_rank2(2, 1, 1).unwrap(), ratio(4, 5));
        assert_eq!(c_pgroup_rank2(2, 1, 2).unwrap(), u(6));
        assert_eq!(l_pgroup_rank2(2, 1, 2).unwrap(), u(8));
        assert_eq!(cdeg_pgroup_rank2(2, 1, 2).unwrap(), ratio(3, 4));
        assert_eq!(cdeg_pgroup_rank2(3, 2, 2).unwrap(), cdeg_rank2(9, 9));
        assert!(c_pgroup_rank2(2, 3, 2).is_err());
        for p in [2u64, 3, 5, 7] {
            for a1 in 1..=5u32 {
                for a2 in a1..=7u32 {
                    let (m, n) = (p.pow(a1), p.pow(a2));
                    if m.checked_mul(n).is_none() {
                        continue;
                    }
                    let c = c_pgroup_rank2(p, a1, a2).unwrap();
                    let l = l_pgroup_rank2(p, a1, a2).unwrap();
                    assert_eq!(c, cs_rank2(m, n));
                    assert_eq!(l, s_rank2(m, n));
                    assert_eq!(
                        cdeg_pgroup_rank2(p, a1, a2).unwrap(),
                        ratio(BigInt::from(c), BigInt::from(l))
                    );
                }
            }
        }
    }

    #[test]
    fn pgroup_h_sum_examples() {
        let part = |p, a: Vec<u32>| PGroupPartition::new(p, a).unwrap();
        assert_eq!(c_pgroup(&part(2, vec![1])), u(2));
        assert_eq!(c_pgroup(&part(2, vec![1, 1, 1])), u(8));
        assert_eq!(c_pgroup(&part(3, vec![1, 2])), u(8));
        assert_eq!(c_abelian(&[3, 9]).unwrap(), u(8));
        assert!(PGroupPartition::new(2, vec![2, 1]).is_err());
        assert!(PGroupPartition::new(6, vec![1]).is_err());
    }

    fn partitions(max_total: u32, max_len: usize) -> Vec<Vec<u32>> {
        fn rec(min: u32, left: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if len == 0 {
                return;
            }
            for a in min..=left {
                cur.push(a);
                rec(a, left - a, len - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, max_total, max_len, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn h_sum_expanded_form_and_orbit_count_agree() {
        for p in [2u64, 3, 5] {
            for alphas in partitions(7, 4) {
                let part = PGroupPartition::new(p, alphas.clone()).unwrap();
                let h = c_pgroup(&part);
                assert_eq!(c_pgroup_expanded(&part), h, "p = {p}, {alphas:?}");
                if let Some(ns) = part.invariants() {
                    if ns.iter().product::<u64>() <= 1 << 20 {
                        assert_eq!(c_abelian(&ns).unwrap(), h, "p = {p}, {alphas:?}");
                    }
                }
            }
        }
    }

    /// The expanded form with the factor read literally as
    /// `p^(k-i+1) / p^(k-i) = p` disagrees with the h-sum already on
    /// `Z_3 x Z_9`, and on every partition with a nontrivial middle term.
    #[test]
    fn literal_factor_reading_disagrees() {
        let literal = |part: &PGroupPartition| {
            let p = part.p;
            let al = &part.alphas;
            let k = al.len();
            let prefix = |i: usize| al[..i].iter().sum::<u32>();
            let a_prev = |i: usize| if i == 0 { 0 } else { al[i - 1] };
            let mut total = BigInt::from(1u32)
                + BigInt::from(al[k - 1] - a_prev(k - 1)) * BigInt::from(pow(p, prefix(k - 1)));
            let mut inner = BigInt::zero();
            for i in 1..k as u32 {
                let idx = (i - 1) as usize;
                let e = k as u32 - i;
                inner += BigInt::from(pow(p, prefix(idx)))
                    * BigInt::from(p)
                    * (BigInt::from(pow(p, e * al[idx])) - BigInt::from(pow(p, e * a_prev(idx))));
            }
            total += inner / BigInt::from(p - 1);
            total
        };
        let z3z9 = PGroupPartition::new(3, vec![1, 2]).unwrap();
        assert_eq!(literal(&z3z9), BigInt::from(7));
        assert_eq!(c_pgroup(&z3z9), u(8));
    }

    #[test]
    fn lattice_sizes_by_partition() {
        assert_eq!(l_pgroup(&PGroupPartition::new(2, vec![3]).unwrap()).unwrap(), u(4));
        assert_eq!(l_pgroup(&PGroupPartition::new(2, vec![1, 1, 1]).unwrap()).unwrap(), u(16));
        assert!(matches!(
            l_pgroup(&PGroupPartition::new(2, vec![1, 1, 2]).unwrap()),
            Err(Error::Unsupported(_))
        ));
        assert_eq!(abelian_counts(&[2, 2, 2]).unwrap(), (u(8), u(16)));
        assert_eq!(abelian_counts(&[6, 6]).unwrap(), (cs_rank2(6, 6), s_rank2(6, 6)));
        // Z_2 x Z_2 x Z_9: Sylow parts (2;1,1) and (3;2).
        assert_eq!(abelian_counts(&[2, 2, 9]).unwrap(), (u(12), u(15)));
    }
}
