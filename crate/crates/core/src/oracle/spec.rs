use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, is_prime, pow_mod};
use crate::{Error, Result};

/// Symbolic description of a finite group: a family tag plus integer
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `Z_n`.
    Cyclic(u64),
    /// `Z_p^k`.
    ElementaryAbelian { p: u64, k: u32 },
    /// `Z_{n_1} x ... x Z_{n_k}`.
    AbelianProduct(Vec<u64>),
    /// `D_{2m}`, of order `2m`.
    Dihedral(u64),
    /// `Q_{2^n}`, `n >= 3`.
    GeneralizedQuaternion(u32),
    /// `S_{2^n}`, `n >= 4`.
    Semidihedral(u32),
    /// `M(p^n) = <x, y | x^(p^(n-1)) = y^p = 1, y^-1 x y = x^(p^(n-2)+1)>`.
    ModularM { p: u64, n: u32 },
    /// `ZM(m, n, r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>`.
    Zm { m: u64, n: u64, r: u64 },
    DirectProduct(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Checks the parameter domain of the family, naming the violated rule.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    return Err(Error::param("Cyclic(n) needs n >= 1"));
                }
            }
            GroupSpec::ElementaryAbelian { p, k } => {
                if !is_prime(*p) {
                    return Err(Error::param(format!("ElementaryAbelian(p, k) needs p prime, got p = {p}")));
                }
                if *k == 0 {
                    return Err(Error::param("ElementaryAbelian(p, k) needs k >= 1"));
                }
            }
            GroupSpec::AbelianProduct(ns) => {
                if ns.is_empty() || ns.contains(&0) {
                    return Err(Error::param("AbelianProduct needs at least one factor, each >= 1"));
                }
            }
            GroupSpec::Dihedral(m) => {
                if *m == 0 {
                    return Err(Error::param("Dihedral(m) needs m >= 1"));
                }
            }
            GroupSpec::GeneralizedQuaternion(n) => {
                if *n < 3 {
                    return Err(Error::param(format!("GeneralizedQuaternion(n) needs n >= 3, got n = {n}")));
                }
            }
            GroupSpec::Semidihedral(n) => {
                if *n < 4 {
                    return Err(Error::param(format!("Semidihedral(n) needs n >= 4, got n = {n}")));
                }
            }
            GroupSpec::ModularM { p, n } => check_modular_m(*p, *n)?,
            GroupSpec::Zm { m, n, r } => check_zm(*m, *n, *r)?,
            GroupSpec::DirectProduct(parts) => {
                if parts.is_empty() {
                    return Err(Error::param("DirectProduct needs at least one factor"));
                }
                for part in parts {
                    part.validate()?;
                }
            }
        }
        Ok(())
    }

    /// Group order, or `None` if it does not fit in `u128`.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupSpec::Cyclic(n) => Some(u128::from(*n)),
            GroupSpec::ElementaryAbelian { p, k } => u128::from(*p).checked_pow(*k),
            GroupSpec::AbelianProduct(ns) => ns
                .iter()
                .try_fold(1u128, |acc, &n| acc.checked_mul(u128::from(n))),
            GroupSpec::Dihedral(m) => u128::from(*m).checked_mul(2),
            GroupSpec::GeneralizedQuaternion(n) | GroupSpec::Semidihedral(n) => {
                2u128.checked_pow(*n)
            }
            GroupSpec::ModularM { p, n } => u128::from(*p).checked_pow(*n),
            GroupSpec::Zm { m, n, .. } => u128::from(*m).checked_mul(u128::from(*n)),
            GroupSpec::DirectProduct(parts) => parts
                .iter()
                .try_fold(1u128, |acc, part| acc.checked_mul(part.order()?)),
        }
    }

    /// Short family tag, as used by the command line front end.
    pub fn family_name(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::ElementaryAbelian { .. } => "elem-abelian",
            GroupSpec::AbelianProduct(_) => "abelian",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::GeneralizedQuaternion(_) => "quaternion2n",
            GroupSpec::Semidihedral(_) => "semidihedral2n",
            GroupSpec::ModularM { .. } => "modM",
            GroupSpec::Zm { .. } => "zm",
            GroupSpec::DirectProduct(_) => "product",
        }
    }

    /// Integer parameters of a non-product family, in declaration order.
    /// Empty for [`GroupSpec::DirectProduct`].
    pub fn params(&self) -> Vec<u64> {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) => alloc::vec![*n],
            GroupSpec::ElementaryAbelian { p, k } => alloc::vec![*p, u64::from(*k)],
            GroupSpec::AbelianProduct(ns) => ns.clone(),
            GroupSpec::GeneralizedQuaternion(n) | GroupSpec::Semidihedral(n) => {
                alloc::vec![u64::from(*n)]
            }
            GroupSpec::ModularM { p, n } => alloc::vec![*p, u64::from(*n)],
            GroupSpec::Zm { m, n, r } => alloc::vec![*m, *n, *r],
            GroupSpec::DirectProduct(_) => Vec::new(),
        }
    }

    /// Direct factors, with nested products flattened. A non-product spec is
    /// its own single factor.
    pub fn factors(&self) -> Vec<&GroupSpec> {
        match self {
            GroupSpec::DirectProduct(parts) => parts.iter().flat_map(|p| p.factors()).collect(),
            other => alloc::vec![other],
        }
    }

    /// Whether the group is abelian by construction of its family.
    pub fn is_abelian_family(&self) -> bool {
        match self {
            GroupSpec::Cyclic(_)
            | GroupSpec::ElementaryAbelian { .. }
            | GroupSpec::AbelianProduct(_) => true,
            GroupSpec::Dihedral(m) => *m <= 2,
            GroupSpec::Zm { m, .. } => *m == 1,
            GroupSpec::DirectProduct(parts) => parts.iter().all(|p| p.is_abelian_family()),
            _ => false,
        }
    }

    /// Cyclic factor orders if this spec is abelian by construction.
    pub fn abelian_invariants(&self) -> Option<Vec<u64>> {
        let mut out = Vec::new();
        for f in self.factors() {
            match f {
                GroupSpec::Cyclic(n) => out.push(*n),
                GroupSpec::ElementaryAbelian { p, k } => out.extend((0..*k).map(|_| *p)),
                GroupSpec::AbelianProduct(ns) => out.extend_from_slice(ns),
                GroupSpec::Dihedral(1) => out.push(2),
                GroupSpec::Dihedral(2) => out.extend([2, 2]),
                GroupSpec::Zm { m: 1, n, .. } => out.push(*n),
                _ => return None,
            }
        }
        Some(out)
    }

    pub fn product(parts: impl IntoIterator<Item = GroupSpec>) -> GroupSpec {
        GroupSpec::DirectProduct(parts.into_iter().collect())
    }

}

fn check_modular_m(p: u64, n: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::param(format!("ModularM(p, n) needs p prime, got p = {p}")));
    }
    if p == 2 && n < 4 {
        return Err(Error::param(format!("ModularM(2, n) needs n >= 4, got n = {n}")));
    }
    if p > 2 && n < 3 {
        return Err(Error::param(format!("ModularM(p, n) with p odd needs n >= 3, got n = {n}")));
    }
    Ok(())
}

pub fn check_zm(m: u64, n: u64, r: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::param("ZM(m, n, r) needs m, n >= 1"));
    }
    if gcd(m, n) != 1 {
        return Err(Error::param(format!("ZM(m, n, r) needs gcd(m, n) = 1, got gcd({m}, {n}) = {}", gcd(m, n))));
    }
    let r_minus_one = if r == 0 { 1 } else { r - 1 };
    if gcd(m, r_minus_one) != 1 {
        return Err(Error::param(format!(
            "ZM(m, n, r) needs gcd(m, r - 1) = 1, got gcd({m}, {}) = {}",
            i128::from(r) - 1,
            gcd(m, r_minus_one)
        )));
    }
    if pow_mod(r, n, m) != 1 % m {
        return Err(Error::param(format!("ZM(m, n, r) needs r^n = 1 (mod m), got {r}^{n} mod {m} = {}", pow_mod(r, n, m))));
    }
    Ok(())
}

/// Renders the spec in the mini-language accepted by the command line:
/// `C6`, `C2^3`, `C2xC4`, `D8`, `Q16`, `SD16`, `M(3,3)`, `ZM(7,3,2)`, and
/// `x`-separated direct products.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "C{p}^{k}"),
            GroupSpec::AbelianProduct(ns) => {
                for (i, n) in ns.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "C{n}")?;
                }
                Ok(())
            }
            GroupSpec::Dihedral(m) => write!(f, "D{}", u128::from(*m) * 2),
            GroupSpec::GeneralizedQuaternion(n) => write!(f, "Q{}", 1u128 << n.min(&127)),
            GroupSpec::Semidihedral(n) => write!(f, "SD{}", 1u128 << n.min(&127)),
            GroupSpec::ModularM { p, n } => write!(f, "M({p},{n})"),
            GroupSpec::Zm { m, n, r } => write!(f, "ZM({m},{n},{r})"),
            GroupSpec::DirectProduct(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}
