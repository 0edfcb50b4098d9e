//! Cyclicity degrees of finite groups.
//!
//! The cyclicity degree of a finite group `G` is `cdeg(G) = |C(G)| / |L(G)|`,
//! the proportion of subgroups of `G` that are cyclic. This crate provides
//!
//! * [`arith`]: the number-theoretic primitives (factorization, divisor
//!   functions, Gaussian binomials, a smallest-prime-factor sieve) and exact
//!   rational helpers,
//! * [`oracle`]: explicit Cayley tables for every supported family together
//!   with a brute-force subgroup lattice enumerator, used as ground truth,
//! * [`formulas`]: closed forms for `|C|`, `|L|` and `cdeg` per family,
//! * [`asymptotics`]: the multiplicative function `f(n) = cdeg(Z_n x Z_n)`,
//!   its partial sums and the Euler product for its mean value,
//! * [`extremal`]: extremality of rank-two abelian p-groups of fixed order and
//!   an exploratory scan over achievable values.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod asymptotics;
mod error;
pub mod extremal;
pub mod formulas;
pub mod oracle;

pub use arith::ExactRatio;
pub use error::{Error, Result};

pub use formulas::{CdegReport, Counts, Provenance};
pub use oracle::{GroupSpec, DEFAULT_ORDER_CAP};
