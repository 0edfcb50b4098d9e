//! Extremal rank-two abelian p-groups of a fixed order, and an exploratory
//! search for groups whose cyclicity degree is close to a target.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Signed};

use crate::arith::{is_prime, ratio, ExactRatio};
use crate::formulas::{c_pgroup_rank2, cdeg_pgroup_rank2, formula_counts, l_pgroup_rank2};
use crate::oracle::{check_zm, GroupSpec};
use crate::{Error, Result};

/// `Z_{p^alpha1} x Z_{p^alpha2}` with `alpha1 + alpha2 = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalRow {
    pub alpha1: u32,
    pub alpha2: u32,
    pub num_cyclic: BigUint,
    pub num_subgroups: BigUint,
    pub cdeg: ExactRatio,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub p: u64,
    pub n: u32,
    /// One row per `alpha1 = 1..=n/2`.
    pub rows: Vec<ExtremalRow>,
    pub argmin_c: u32,
    pub argmax_c: u32,
    pub argmin_cdeg: u32,
    pub argmax_cdeg: u32,
    /// Set when two rows tie on `|C|` or on `cdeg`.
    pub tie: bool,
}

/// `|C|`, `|L|` and `cdeg` of every rank-two abelian group of order `p^n`.
/// Extremes are found by exact comparison; ties go to the smallest `alpha1`
/// and raise the `tie` flag.
pub fn scan_rank2(p: u64, n: u32) -> Result<ExtremalReport> {
    if !is_prime(p) {
        return Err(Error::param(alloc::format!("scan_rank2 needs p prime, got p = {p}")));
    }
    if n < 2 {
        return Err(Error::param(alloc::format!("scan_rank2 needs n >= 2, got n = {n}")));
    }
    let rows = (1..=n / 2)
        .map(|a1| {
            let a2 = n - a1;
            Ok(ExtremalRow {
                alpha1: a1,
                alpha2: a2,
                num_cyclic: c_pgroup_rank2(p, a1, a2)?,
                num_subgroups: l_pgroup_rank2(p, a1, a2)?,
                cdeg: cdeg_pgroup_rank2(p, a1, a2)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut tie = false;
    let mut pick = |better: &dyn Fn(&ExtremalRow, &ExtremalRow) -> Ordering| {
        let mut best = &rows[0];
        for row in &rows[1..] {
            match better(row, best) {
                Ordering::Greater => best = row,
                Ordering::Equal => tie = true,
                Ordering::Less => {}
            }
        }
        best.alpha1
    };
    let argmin_c = pick(&|a, b| b.num_cyclic.cmp(&a.num_cyclic));
    let argmax_c = pick(&|a, b| a.num_cyclic.cmp(&b.num_cyclic));
    let argmin_cdeg = pick(&|a, b| b.cdeg.cmp(&a.cdeg));
    let argmax_cdeg = pick(&|a, b| a.cdeg.cmp(&b.cdeg));
    Ok(ExtremalReport { p, n, rows, argmin_c, argmax_c, argmin_cdeg, argmax_cdeg, tie })
}

/// Whether `|C|` is minimal at `alpha1 = 1` and maximal at `alpha1 = n/2`,
/// `cdeg` the other way round, with `|C|` strictly increasing and `cdeg`
/// strictly decreasing along the rows.
pub fn verify_extremal_theorem(p: u64, n: u32) -> Result<bool> {
    let r = scan_rank2(p, n)?;
    let half = n / 2;
    let monotone = r.rows.windows(2).all(|w| w[0].num_cyclic < w[1].num_cyclic && w[0].cdeg > w[1].cdeg);
    Ok(!r.tie
        && monotone
        && r.argmin_c == 1
        && r.argmax_c == half
        && r.argmin_cdeg == half
        && r.argmax_cdeg == 1)
}

/// `cdeg(Z_{p^alpha1} x Z_{p^(n-alpha1)})` written as
/// `1 - (1/p) [1 - (n+1)(p-1)^2 / D]`, where
/// `D = (n-2 alpha1+1) p^(alpha1+2) - (n-2 alpha1-1) p^(alpha1+1) - (n+3)p + (n+1)`
/// is `(p-1)^2 |L|`. The value decreases as `D` grows.
pub fn cdeg_rank2_by_total(p: u64, n: u32, alpha1: u32) -> ExactRatio {
    assert!(alpha1 >= 1 && 2 * alpha1 <= n);
    let pb = BigInt::from(p);
    let n_big = BigInt::from(n);
    let d = BigInt::from(n) - BigInt::from(2 * alpha1);
    let den = (&d + 1) * Pow::pow(&pb, alpha1 + 2) - (&d - 1) * Pow::pow(&pb, alpha1 + 1)
        - (&n_big + 3) * &pb
        + (&n_big + 1);
    let inner = (&n_big + 1) * (&pb - 1) * (&pb - 1);
    ratio(1, 1) - ratio(1, p) * (ratio(1, 1) - ExactRatio::new(inner, den))
}

/// Limits for [`density_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityBudget {
    /// Largest group order considered.
    pub max_order: u64,
    /// Number of matches returned.
    pub k: usize,
}

impl Default for DensityBudget {
    fn default() -> Self {
        DensityBudget { max_order: 512, k: 5 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityMatch {
    pub spec: GroupSpec,
    pub cdeg: ExactRatio,
    pub distance: ExactRatio,
}

fn candidates(max_order: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(GroupSpec::Cyclic(n));
    }
    for p in (2..=max_order).filter(|&p| is_prime(p)) {
        let mut k = 2;
        while p.checked_pow(k).is_some_and(|q| q <= max_order) {
            out.push(GroupSpec::ElementaryAbelian { p, k });
            k += 1;
        }
    }
    // Z_m x Z_n with 1 < m | n, not elementary abelian.
    for m in 2..=max_order {
        for n in (m..=max_order / m).step_by(m as usize) {
            if n % m == 0 && !(m == n && is_prime(m)) {
                out.push(GroupSpec::AbelianProduct(alloc::vec![m, n]));
            }
        }
    }
    for m in 1..=max_order / 2 {
        out.push(GroupSpec::Dihedral(m));
    }
    let mut n = 3;
    while 1u64.checked_shl(n).is_some_and(|o| o <= max_order) {
        out.push(GroupSpec::GeneralizedQuaternion(n));
        if n >= 4 {
            out.push(GroupSpec::Semidihedral(n));
        }
        n += 1;
    }
    for p in (2..=max_order).filter(|&p| is_prime(p)) {
        let mut n = if p == 2 { 4 } else { 3 };
        while p.checked_pow(n).is_some_and(|q| q <= max_order) {
            out.push(GroupSpec::ModularM { p, n });
            n += 1;
        }
    }
    for m in 3..=max_order / 2 {
        for n in 2..=max_order / m {
            for r in 2..m {
                if check_zm(m, n, r).is_ok() {
                    out.push(GroupSpec::Zm { m, n, r });
                }
            }
        }
    }
    let mut n = 0;
    while 8u64.checked_shl(n).is_some_and(|o| o <= max_order) {
        let mut parts = alloc::vec![GroupSpec::GeneralizedQuaternion(3)];
        parts.extend((0..n).map(|_| GroupSpec::Cyclic(2)));
        out.push(GroupSpec::product(parts));
        n += 1;
    }
    out
}

/// Exploratory only: the `k` closed-form values nearest to `target` among the
/// supported families up to `max_order`. Ordered by distance, then group
/// order, then family name, then the spec's text.
pub fn density_scan(target: &ExactRatio, budget: DensityBudget) -> Result<Vec<DensityMatch>> {
    if !target.is_positive() || *target > ratio(1, 1) {
        return Err(Error::param("density target must lie in (0, 1]"));
    }
    let mut found: Vec<(DensityMatch, u128, &'static str, String)> = candidates(budget.max_order)
        .into_iter()
        .map(|spec| {
            let cdeg = formula_counts(&spec)?.cdeg();
            let distance = (&cdeg - target).abs();
            let order = spec.order().expect("small");
            let family = spec.family_name();
            let text = spec.to_string();
            Ok((DensityMatch { spec, cdeg, distance }, order, family, text))
        })
        .collect::<Result<_>>()?;
    found.sort_by(|a, b| {
        (&a.0.distance, a.1, a.2, &a.3).cmp(&(&b.0.distance, b.1, b.2, &b.3))
    });
    Ok(found.into_iter().take(budget.k).map(|t| t.0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_examples() {
        let r = scan_rank2(2, 4).unwrap();
        let cs: Vec<u32> = r.rows.iter().map(|row| u32::try_from(&row.num_cyclic).unwrap()).collect();
        assert_eq!(cs, [8, 10]);
        assert_eq!((r.argmin_c, r.argmax_c), (1, 2));
        for p in [2u64, 3, 7] {
            let r = scan_rank2(p, 2).unwrap();
            assert_eq!(r.rows.len(), 1);
            assert_eq!([r.argmin_c, r.argmax_c, r.argmin_cdeg, r.argmax_cdeg], [1; 4]);
        }
        let r = scan_rank2(3, 5).unwrap();
        assert_eq!((r.argmax_cdeg, r.argmin_cdeg), (1, 2));
        assert!(scan_rank2(4, 4).is_err());
        assert!(scan_rank2(2, 1).is_err());
    }

    #[test]
    fn theorem_holds_on_grid() {
        for p in [2u64, 3, 5, 7] {
            for n in 2..=12 {
                assert!(verify_extremal_theorem(p, n).unwrap(), "p = {p}, n = {n}");
            }
        }
        assert!(verify_extremal_theorem(5, 9).unwrap());
    }

    #[test]
    fn rewritten_form_matches_closed_form() {
        for p in (2..=7u64).filter(|&p| is_prime(p)) {
            for n in 2..=12 {
                for a1 in 1..=n / 2 {
                    assert_eq!(cdeg_rank2_by_total(p, n, a1), cdeg_pgroup_rank2(p, a1, n - a1).unwrap());
                }
            }
        }
    }

    /// With `2(n+2)p` in place of `2(n+1)p` in the inner numerator the
    /// expression gives 2/5 for `Z_2 x Z_2` instead of 4/5.
    #[test]
    fn inner_numerator_needs_n_plus_one() {
        let (p, n) = (BigInt::from(2), BigInt::from(2));
        let inner = (&n + 1) * &p * &p - BigInt::from(2) * (&n + 2) * &p + (&n + 1);
        let den = BigInt::from(5);
        let literal = ratio(1, 1) - ratio(1, 2) * (ratio(1, 1) - ExactRatio::new(inner, den));
        assert_eq!(literal, ratio(2, 5));
        assert_eq!(cdeg_rank2_by_total(2, 2, 1), ratio(4, 5));
    }

    #[test]
    fn degree_is_decreasing_function_of_lattice_size() {
        for p in [2u64, 3, 5, 7] {
            for n in 2..=12 {
                let rows = scan_rank2(p, n).unwrap().rows;
                for a in &rows {
                    for b in &rows {
                        assert_eq!(a.num_subgroups < b.num_subgroups, a.cdeg > b.cdeg);
                        assert_eq!(a.num_subgroups == b.num_subgroups, a.cdeg == b.cdeg);
                    }
                }
            }
        }
    }

    #[test]
    fn density_examples() {
        let budget = DensityBudget { max_order: 64, k: 3 };
        let hit = density_scan(&ratio(1, 1), budget).unwrap();
        assert_eq!(hit[0].spec, GroupSpec::Cyclic(1));
        assert_eq!(hit[0].distance, ratio(0, 1));
        let hit = density_scan(&ratio(5, 6), budget).unwrap();
        assert_eq!(hit[0].spec, GroupSpec::Dihedral(3));
        assert_eq!(hit[0].distance, ratio(0, 1));
        let hit = density_scan(&ratio(1, 2), budget).unwrap();
        assert_eq!(hit[0].spec, GroupSpec::ElementaryAbelian { p: 2, k: 3 });
        assert!(density_scan(&ratio(0, 1), budget).is_err());
        assert!(density_scan(&ratio(3, 2), budget).is_err());
    }
}
