use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use super::lattice::{cyclic_subgroups, lattice_counts_with, Strategy};
use super::{build_group_with_cap, enumerate_subgroups_with, Bits, CayleyGroup, GroupSpec, LatticeCounts, DEFAULT_ORDER_CAP};
use crate::arith::{divisors, euler_phi, ratio, ExactRatio};
use crate::Result;

/// `c(d)`, the number of cyclic subgroups of order `d`, for every divisor
/// `d` of the group order (zero entries included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    group_order: u64,
    counts: BTreeMap<u64, u64>,
}

impl OrderSpectrum {
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn get(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    /// `sum_d c(d) phi(d)`, which must equal the group order.
    pub fn weighted_by_phi(&self) -> u64 {
        self.iter().map(|(d, c)| c * euler_phi(d)).sum()
    }

    /// `sum_d c(d) = |C(G)|`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Cyclic subgroup counts by order, from the closures of single elements.
pub fn element_orders(group: &CayleyGroup) -> OrderSpectrum {
    let n = group.order() as u64;
    let mut counts: BTreeMap<u64, u64> = divisors(n).into_iter().map(|d| (d, 0)).collect();
    for words in cyclic_subgroups(group).keys() {
        let order = Bits::from_words(words.to_vec()).count() as u64;
        *counts.get_mut(&order).expect("Lagrange") += 1;
    }
    OrderSpectrum {
        group_order: n,
        counts,
    }
}

/// `|C(G)| / |L(G)|` by enumeration.
pub fn cdeg_oracle(group: &CayleyGroup) -> Result<ExactRatio> {
    let c = lattice_counts_with(group, DEFAULT_ORDER_CAP, Strategy::Auto)?;
    Ok(ratio(c.cyclic, c.subgroups))
}

/// `|N(G)| / |L(G)|` by enumeration.
pub fn ndeg_oracle(group: &CayleyGroup) -> Result<ExactRatio> {
    let c = lattice_counts_with(group, DEFAULT_ORDER_CAP, Strategy::Auto)?;
    Ok(ratio(c.normal, c.subgroups))
}

/// Proportion of ordered pairs `(H, K)` of subgroups with `HK = KH`, the
/// products compared as element sets. Quadratic in `|L(G)|`.
pub fn sd_oracle(group: &CayleyGroup) -> Result<ExactRatio> {
    let lattice = enumerate_subgroups_with(group, DEFAULT_ORDER_CAP, Strategy::Auto)?;
    let subs = lattice.subgroups();
    let elems: alloc::vec::Vec<alloc::vec::Vec<usize>> = subs.iter().map(|s| s.elements()).collect();
    let n = group.order();
    let product = |a: &[usize], b: &[usize]| {
        let mut set = Bits::empty(n);
        for &x in a {
            for &y in b {
                set.insert(group.mul(x, y));
            }
        }
        set
    };
    let mut commuting: u64 = subs.len() as u64;
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if product(&elems[i], &elems[j]) == product(&elems[j], &elems[i]) {
                commuting += 2;
            }
        }
    }
    let total = BigInt::from(subs.len()) * BigInt::from(subs.len());
    Ok(ratio(commuting, total))
}

/// Whether every proper subgroup is cyclic.
pub fn all_proper_cyclic(group: &CayleyGroup) -> Result<bool> {
    let c = lattice_counts_with(group, DEFAULT_ORDER_CAP, Strategy::Auto)?;
    Ok(c.subgroups - c.cyclic <= 1)
}

/// Builds `spec` under `cap` and counts its lattice.
pub fn oracle_counts(spec: &GroupSpec, cap: usize) -> Result<LatticeCounts> {
    let group = build_group_with_cap(spec, cap)?;
    lattice_counts_with(&group, cap, Strategy::Auto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::build_group;
    use alloc::vec;
    use alloc::vec::Vec;

    fn g(spec: GroupSpec) -> CayleyGroup {
        build_group(&spec).unwrap()
    }

    fn spectrum(spec: GroupSpec) -> Vec<(u64, u64)> {
        element_orders(&g(spec)).iter().filter(|&(_, c)| c > 0).collect()
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(spectrum(GroupSpec::Cyclic(6)), vec![(1, 1), (2, 1), (3, 1), (6, 1)]);
        assert_eq!(spectrum(GroupSpec::ElementaryAbelian { p: 2, k: 2 }), vec![(1, 1), (2, 3)]);
        assert_eq!(spectrum(GroupSpec::GeneralizedQuaternion(3)), vec![(1, 1), (2, 1), (4, 3)]);
    }

    #[test]
    fn degree_examples() {
        for n in [1, 2, 12] {
            assert_eq!(cdeg_oracle(&g(GroupSpec::Cyclic(n))).unwrap(), ratio(1, 1));
        }
        assert_eq!(cdeg_oracle(&g(GroupSpec::Dihedral(3))).unwrap(), ratio(5, 6));
        let s3c2 = GroupSpec::product([GroupSpec::Dihedral(3), GroupSpec::Cyclic(2)]);
        assert_eq!(cdeg_oracle(&g(s3c2)).unwrap(), ratio(5, 8));
        assert_eq!(cdeg_oracle(&g(GroupSpec::GeneralizedQuaternion(3))).unwrap(), ratio(5, 6));
        // D8: 1, Z(D8), <r>, two Klein four-subgroups and D8 are normal; the four
        // non-central reflections generate non-normal subgroups.
        assert_eq!(ndeg_oracle(&g(GroupSpec::Dihedral(4))).unwrap(), ratio(6, 10));
        // Q8 is hamiltonian: every subgroup normal, and all pairs permute.
        assert_eq!(ndeg_oracle(&g(GroupSpec::GeneralizedQuaternion(3))).unwrap(), ratio(1, 1));
        assert_eq!(sd_oracle(&g(GroupSpec::GeneralizedQuaternion(3))).unwrap(), ratio(1, 1));
        assert_eq!(sd_oracle(&g(GroupSpec::Cyclic(12))).unwrap(), ratio(1, 1));
        // S3: the three order-2 subgroups pairwise fail to permute (6 ordered pairs).
        assert_eq!(sd_oracle(&g(GroupSpec::Dihedral(3))).unwrap(), ratio(30, 36));
    }

    #[test]
    fn all_proper_cyclic_examples() {
        assert!(all_proper_cyclic(&g(GroupSpec::ElementaryAbelian { p: 3, k: 2 })).unwrap());
        assert!(all_proper_cyclic(&g(GroupSpec::GeneralizedQuaternion(3))).unwrap());
        assert!(!all_proper_cyclic(&g(GroupSpec::GeneralizedQuaternion(4))).unwrap());
        assert!(all_proper_cyclic(&g(GroupSpec::Cyclic(9))).unwrap());
    }

    #[test]
    fn order_identities_hold() {
        for spec in [
            GroupSpec::Dihedral(10),
            GroupSpec::Zm { m: 13, n: 4, r: 5 },
            GroupSpec::Semidihedral(5),
            GroupSpec::AbelianProduct(vec![4, 6, 2]),
            GroupSpec::product([GroupSpec::GeneralizedQuaternion(3), GroupSpec::Cyclic(3)]),
        ] {
            let grp = g(spec.clone());
            let s = element_orders(&grp);
            assert_eq!(s.weighted_by_phi(), grp.order() as u64, "{spec}");
            let l = enumerate_subgroups_with(&grp, 2000, Strategy::Auto).unwrap();
            assert_eq!(s.total(), l.num_cyclic() as u64, "{spec}");
        }
    }
}
