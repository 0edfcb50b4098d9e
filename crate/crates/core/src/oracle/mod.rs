//! Brute-force ground truth: explicit groups and their full subgroup
//! lattices.

mod bits;
mod build;
mod cayley;
mod degrees;
mod lattice;
mod spec;

pub use bits::{generate, Bits};
pub use build::{build_group, build_group_with_cap};
pub use cayley::{CayleyGroup, EXHAUSTIVE_ASSOCIATIVITY_LIMIT};
pub use degrees::{
    all_proper_cyclic, cdeg_oracle, element_orders, ndeg_oracle, oracle_counts, sd_oracle,
    OrderSpectrum,
};
pub use lattice::{
    enumerate_subgroups, enumerate_subgroups_with, is_solvable, lattice_counts,
    lattice_counts_with, LatticeCounts, Strategy, Subgroup, SubgroupLattice,
};
pub use spec::{check_zm, GroupSpec};

/// Default bound on the order of groups the oracle will build.
pub const DEFAULT_ORDER_CAP: usize = 2000;
