//! The named formula families of the `cdeg` and `verify` commands.

use anyhow::Result;
use cyclicity_core::formulas::{self, Counts, PGroupPartition};
use cyclicity_core::GroupSpec;

use crate::usage;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    ElemAbelian,
    Abelian,
    Rank2,
    Hamiltonian,
    ModM,
    Dihedral2n,
    Quaternion2n,
    Semidihedral2n,
    Zm,
    Dihedral,
    Nilpotent,
}

pub const ALL: [Family; 12] = [
    Family::Cyclic,
    Family::ElemAbelian,
    Family::Abelian,
    Family::Rank2,
    Family::Hamiltonian,
    Family::ModM,
    Family::Dihedral2n,
    Family::Quaternion2n,
    Family::Semidihedral2n,
    Family::Zm,
    Family::Dihedral,
    Family::Nilpotent,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::ElemAbelian => "elem-abelian",
            Family::Abelian => "abelian",
            Family::Rank2 => "rank2",
            Family::Hamiltonian => "hamiltonian",
            Family::ModM => "modM",
            Family::Dihedral2n => "dihedral2n",
            Family::Quaternion2n => "quaternion2n",
            Family::Semidihedral2n => "semidihedral2n",
            Family::Zm => "zm",
            Family::Dihedral => "dihedral",
            Family::Nilpotent => "nilpotent",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<_> = ALL.iter().map(|f| f.name()).collect();
            usage(format!("unknown family {s:?}; expected one of {}", names.join(", ")))
        })
    }

    /// Parameter names, in command-line order. `abelian` takes any number of
    /// cyclic orders, `hamiltonian` takes `n` followed by optional odd cyclic
    /// orders and `nilpotent` takes group specs.
    pub fn vars(self) -> &'static [&'static str] {
        match self {
            Family::Cyclic => &["n"],
            Family::ElemAbelian => &["p", "k"],
            Family::Abelian => &["n1"],
            Family::Rank2 => &["m", "n"],
            Family::Hamiltonian => &["n"],
            Family::ModM => &["p", "n"],
            Family::Dihedral2n | Family::Quaternion2n | Family::Semidihedral2n => &["n"],
            Family::Zm => &["m", "n", "r"],
            Family::Dihedral => &["m"],
            Family::Nilpotent => &[],
        }
    }

    fn variadic(self) -> bool {
        matches!(self, Family::Abelian | Family::Hamiltonian)
    }
}

fn small(x: u64, what: &str) -> Result<u32> {
    u32::try_from(x).map_err(|_| usage(format!("{what} = {x} is too large")))
}

/// Numeric parameters for the family, checked for arity.
pub fn check_arity(family: Family, params: &[u64]) -> Result<()> {
    let want = family.vars().len();
    let ok = if family.variadic() { params.len() >= want } else { params.len() == want };
    if !ok {
        return Err(usage(format!(
            "{} takes {}{} parameter(s) ({}), got {}",
            family.name(),
            if family.variadic() { "at least " } else { "" },
            want,
            family.vars().join(", "),
            params.len()
        )));
    }
    Ok(())
}

/// The group a parameter tuple describes, for the oracle.
pub fn group_spec(family: Family, params: &[u64]) -> Result<GroupSpec> {
    check_arity(family, params)?;
    let spec = match family {
        Family::Cyclic => GroupSpec::Cyclic(params[0]),
        Family::ElemAbelian => GroupSpec::ElementaryAbelian { p: params[0], k: small(params[1], "k")? },
        Family::Abelian => GroupSpec::AbelianProduct(params.to_vec()),
        Family::Rank2 => GroupSpec::AbelianProduct(params.to_vec()),
        Family::Hamiltonian => {
            let mut parts = vec![GroupSpec::GeneralizedQuaternion(3)];
            parts.extend((0..params[0]).map(|_| GroupSpec::Cyclic(2)));
            parts.extend(params[1..].iter().map(|&m| GroupSpec::Cyclic(m)));
            GroupSpec::DirectProduct(parts)
        }
        Family::ModM => GroupSpec::ModularM { p: params[0], n: small(params[1], "n")? },
        Family::Dihedral2n => match params[0] {
            n @ 1..=63 => GroupSpec::Dihedral(1 << (n - 1)),
            n => return Err(usage(format!("dihedral2n: n = {n} out of range"))),
        },
        Family::Quaternion2n => GroupSpec::GeneralizedQuaternion(small(params[0], "n")?),
        Family::Semidihedral2n => GroupSpec::Semidihedral(small(params[0], "n")?),
        Family::Zm => GroupSpec::Zm { m: params[0], n: params[1], r: params[2] },
        Family::Dihedral => GroupSpec::Dihedral(params[0]),
        Family::Nilpotent => return Err(usage("nilpotent takes group specs")),
    };
    Ok(spec)
}

/// Closed-form counts for a numeric parameter tuple.
pub fn formula_counts(family: Family, params: &[u64]) -> Result<Counts> {
    check_arity(family, params)?;
    let counts = match family {
        Family::Cyclic => {
            if params[0] == 0 {
                return Err(usage("cyclic needs n >= 1"));
            }
            let t = cyclicity_core::arith::tau(params[0]);
            Counts::new(t, t)
        }
        Family::ElemAbelian => {
            let (p, k) = (params[0], small(params[1], "k")?);
            Counts::new(formulas::c_elem_abelian(p, k)?, formulas::l_elem_abelian(p, k)?)
        }
        Family::Abelian => formulas::abelian_counts(params)?.into(),
        Family::Rank2 => {
            let (m, n) = (params[0], params[1]);
            if m == 0 || n == 0 {
                return Err(usage("rank2 needs m, n >= 1"));
            }
            Counts::new(formulas::cs_rank2(m, n), formulas::s_rank2(m, n))
        }
        Family::Hamiltonian => {
            let n = small(params[0], "n")?;
            let odd = &params[1..];
            if let Some(&m) = odd.iter().find(|&&m| m % 2 == 0) {
                return Err(usage(format!("hamiltonian: the abelian part must have odd order, got {m}")));
            }
            formulas::hamiltonian_counts(n, &PGroupPartition::sylow_parts(odd))?.into()
        }
        Family::ModM => {
            let (p, n) = (params[0], small(params[1], "n")?);
            Counts::new(formulas::c_modm(p, n)?, formulas::l_modm(p, n)?)
        }
        Family::Dihedral2n => {
            let n = small(params[0], "n")?;
            Counts::new(formulas::c_dih2n(n)?, formulas::l_dih2n(n)?)
        }
        Family::Quaternion2n => {
            let n = small(params[0], "n")?;
            Counts::new(formulas::c_quat2n(n)?, formulas::l_quat2n(n)?)
        }
        Family::Semidihedral2n => {
            let n = small(params[0], "n")?;
            Counts::new(formulas::c_sd2n(n)?, formulas::l_sd2n(n)?)
        }
        Family::Zm => {
            let (m, n, r) = (params[0], params[1], params[2]);
            Counts::new(formulas::c_zm(m, n, r)?, formulas::l_zm(m, n, r)?)
        }
        Family::Dihedral => {
            if params[0] == 0 {
                return Err(usage("dihedral needs m >= 1"));
            }
            Counts::new(formulas::c_dihedral(params[0]), formulas::l_dihedral(params[0]))
        }
        Family::Nilpotent => return Err(usage("nilpotent takes group specs")),
    };
    Ok(counts)
}

/// Counts of a nilpotent group from Sylow components of coprime order.
pub fn nilpotent_counts(parts: &[GroupSpec]) -> Result<Counts> {
    if parts.is_empty() {
        return Err(usage("nilpotent needs at least one component"));
    }
    formulas::cdeg_nilpotent(parts)?;
    let mut total = Counts::new(1u32, 1u32);
    for part in parts {
        total = total.coprime_product(&formulas::formula_counts(part)?);
    }
    Ok(total)
}
