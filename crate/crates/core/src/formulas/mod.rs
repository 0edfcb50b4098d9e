//! Closed forms for `|C(G)|`, `|L(G)|` and `cdeg(G)` per family.

mod abelian;
mod hamiltonian;
mod maxcyclic;
mod zm;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{gcd, ratio, tau, ExactRatio};
use crate::oracle::GroupSpec;
use crate::{Error, Result};

pub use abelian::{
    abelian_counts, c_abelian, c_elem_abelian, c_pgroup, c_pgroup_expanded, c_pgroup_rank2,
    cdeg_elem_abelian, cdeg_pgroup_rank2, cdeg_rank2, cs_rank2, l_elem_abelian,
    l_elem_abelian_alternate, l_pgroup, l_pgroup_rank2, s_rank2, PGroupPartition,
};
pub use hamiltonian::{
    b_n2_sum_form, c_hamiltonian_core, cdeg_hamiltonian, hamiltonian_counts, l_hamiltonian_core,
};
pub use maxcyclic::{
    c_dih2n, c_modm, c_quat2n, c_sd2n, cdeg_dih2n, cdeg_modm, cdeg_quat2n, cdeg_sd2n, l_dih2n,
    l_modm, l_quat2n, l_sd2n,
};
pub use zm::{c_dihedral, c_zm, cdeg_dihedral, cdeg_zm, l_dihedral, l_zm};

/// `|C(G)|` and `|L(G)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    pub num_cyclic: BigUint,
    pub num_subgroups: BigUint,
}

impl Counts {
    pub fn new(num_cyclic: impl Into<BigUint>, num_subgroups: impl Into<BigUint>) -> Self {
        Counts { num_cyclic: num_cyclic.into(), num_subgroups: num_subgroups.into() }
    }

    pub fn cdeg(&self) -> ExactRatio {
        ratio(BigInt::from(self.num_cyclic.clone()), BigInt::from(self.num_subgroups.clone()))
    }

    /// Counts of a direct product of groups of coprime orders.
    pub fn coprime_product(&self, other: &Counts) -> Counts {
        Counts {
            num_cyclic: &self.num_cyclic * &other.num_cyclic,
            num_subgroups: &self.num_subgroups * &other.num_subgroups,
        }
    }
}

impl From<(BigUint, BigUint)> for Counts {
    fn from((c, l): (BigUint, BigUint)) -> Self {
        Counts { num_cyclic: c, num_subgroups: l }
    }
}

/// Where a reported value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Formula,
    Oracle,
    BothAgree,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Formula => "formula",
            Provenance::Oracle => "oracle",
            Provenance::BothAgree => "both-agree",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Group(GroupSpec),
    PGroup(PGroupPartition),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Group(g) => write!(f, "{g}"),
            Subject::PGroup(part) => {
                let p = part.p();
                let parts: Vec<String> = part
                    .alphas()
                    .iter()
                    .map(|&a| match p.checked_pow(a) {
                        Some(q) => format!("C{q}"),
                        None => format!("C({p}^{a})"),
                    })
                    .collect();
                f.write_str(&parts.join("x"))
            }
        }
    }
}

/// A cyclicity degree together with the counts behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdegReport {
    pub subject: Subject,
    pub num_cyclic: BigUint,
    pub num_subgroups: BigUint,
    pub cdeg: ExactRatio,
    pub provenance: Provenance,
}

impl CdegReport {
    pub fn new(subject: Subject, counts: Counts, provenance: Provenance) -> Self {
        assert!(!counts.num_cyclic.is_zero() && counts.num_cyclic <= counts.num_subgroups);
        let cdeg = counts.cdeg();
        CdegReport {
            subject,
            num_cyclic: counts.num_cyclic,
            num_subgroups: counts.num_subgroups,
            cdeg,
            provenance,
        }
    }
}

/// Closed-form counts for `spec`.
///
/// Products are handled when all factors are abelian, when they form a
/// Hamiltonian group `Q_8 x Z_2^n x A` with `|A|` odd, or when the factors
/// have pairwise coprime orders. Anything else is [`Error::Unsupported`].
pub fn formula_counts(spec: &GroupSpec) -> Result<Counts> {
    spec.validate()?;
    let counts = match spec {
        GroupSpec::Cyclic(n) => Counts::new(tau(*n), tau(*n)),
        GroupSpec::ElementaryAbelian { p, k } => {
            Counts::new(c_elem_abelian(*p, *k)?, l_elem_abelian(*p, *k)?)
        }
        GroupSpec::AbelianProduct(ns) => abelian_counts(ns)?.into(),
        GroupSpec::Dihedral(m) => Counts::new(c_dihedral(*m), l_dihedral(*m)),
        GroupSpec::GeneralizedQuaternion(n) => Counts::new(c_quat2n(*n)?, l_quat2n(*n)?),
        GroupSpec::Semidihedral(n) => Counts::new(c_sd2n(*n)?, l_sd2n(*n)?),
        GroupSpec::ModularM { p, n } => Counts::new(c_modm(*p, *n)?, l_modm(*p, *n)?),
        GroupSpec::Zm { m, n, r } => Counts::new(c_zm(*m, *n, *r)?, l_zm(*m, *n, *r)?),
        GroupSpec::DirectProduct(_) => product_counts(spec)?,
    };
    Ok(counts)
}

fn product_counts(spec: &GroupSpec) -> Result<Counts> {
    if let Some(ns) = spec.abelian_invariants() {
        return Ok(abelian_counts(&ns)?.into());
    }
    let factors = spec.factors();
    if let Some(counts) = hamiltonian_pattern(&factors)? {
        return Ok(counts);
    }
    // Group the factors into clusters of pairwise coprime order: abelian
    // factors merge into one abelian group, each non-abelian factor must be
    // coprime to everything else.
    let orders: Vec<u128> = factors.iter().map(|f| f.order().expect("validated")).collect();
    let mut abelian: Vec<u64> = Vec::new();
    let mut abelian_order = 1u128;
    let mut others: Vec<(&GroupSpec, u128)> = Vec::new();
    for (f, &o) in factors.iter().zip(&orders) {
        match f.abelian_invariants() {
            Some(ns) => {
                abelian.extend(ns);
                abelian_order = abelian_order.saturating_mul(o);
            }
            None => others.push((f, o)),
        }
    }
    let mut parts: Vec<u128> = others.iter().map(|&(_, o)| o).collect();
    if !abelian.is_empty() {
        parts.push(abelian_order);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if gcd128(parts[i], parts[j]) != 1 {
                return Err(Error::Unsupported(format!(
                    "no closed form for {spec}: factors of non-coprime order"
                )));
            }
        }
    }
    let mut total = Counts::new(BigUint::one(), BigUint::one());
    for (f, _) in others {
        total = total.coprime_product(&formula_counts(f)?);
    }
    if !abelian.is_empty() {
        total = total.coprime_product(&abelian_counts(&abelian)?.into());
    }
    Ok(total)
}

fn gcd128(a: u128, b: u128) -> u128 {
    match (u64::try_from(a), u64::try_from(b)) {
        (Ok(a), Ok(b)) => u128::from(gcd(a, b)),
        _ => num_integer::Integer::gcd(&a, &b),
    }
}

/// `Q_8 x (abelian)` where the abelian part has an elementary abelian
/// 2-component.
fn hamiltonian_pattern(factors: &[&GroupSpec]) -> Result<Option<Counts>> {
    let q8 = factors.iter().filter(|f| matches!(f, GroupSpec::GeneralizedQuaternion(3))).count();
    if q8 != 1 {
        return Ok(None);
    }
    let mut ns = Vec::new();
    for f in factors {
        match f {
            GroupSpec::GeneralizedQuaternion(3) => {}
            other => match other.abelian_invariants() {
                Some(inv) => ns.extend(inv),
                None => return Ok(None),
            },
        }
    }
    let sylows = PGroupPartition::sylow_parts(&ns);
    let (two, odd): (Vec<_>, Vec<_>) = sylows.into_iter().partition(|part| part.p() == 2);
    let n = match two.as_slice() {
        [] => 0,
        [part] if part.alphas().iter().all(|&a| a == 1) => part.rank() as u32,
        _ => return Ok(None),
    };
    Ok(Some(hamiltonian_counts(n, &odd)?.into()))
}

/// `cdeg` of a nilpotent group from its Sylow subgroups, as the product of
/// their cyclicity degrees. The components must have pairwise coprime orders.
pub fn cdeg_nilpotent(sylows: &[GroupSpec]) -> Result<ExactRatio> {
    let mut orders = Vec::new();
    for s in sylows {
        s.validate()?;
        let o = s.order().ok_or_else(|| Error::param(format!("order of {s} exceeds 128 bits")))?;
        if let Some(&prev) = orders.iter().find(|&&prev| gcd128(prev, o) != 1) {
            return Err(Error::param(format!(
                "components of orders {prev} and {o} are not coprime"
            )));
        }
        orders.push(o);
    }
    let mut value = ExactRatio::one();
    for s in sylows {
        value *= formula_counts(s)?.cdeg();
    }
    Ok(value)
}
