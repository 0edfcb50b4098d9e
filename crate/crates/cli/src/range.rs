//! Parameter ranges for `verify`: comma-separated clauses such as
//! `m=1..40`, `m<=40,n<=12`, `m,n<=30`, `p=2..7,n=3` or `order<=200`.
//!
//! A bare name before a clause shares that clause's bound, so `m,n<=30`
//! bounds both `m` and `n`. The pseudo-variable `order` bounds the group
//! order. Lower bounds default to 1; `r` in `zm` defaults to `0..m-1`.

use std::collections::BTreeMap;

use anyhow::Result;
use cyclicity_core::GroupSpec;

use crate::family::{group_spec, Family};
use crate::{parse_count, usage};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Bounds {
    lo: Option<u64>,
    hi: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamRange {
    bounds: BTreeMap<String, Bounds>,
}

fn apply(bounds: &mut Bounds, lo: Option<u64>, hi: Option<u64>) {
    if let Some(lo) = lo {
        bounds.lo = Some(bounds.lo.map_or(lo, |b| b.max(lo)));
    }
    if let Some(hi) = hi {
        bounds.hi = Some(bounds.hi.map_or(hi, |b| b.min(hi)));
    }
}

fn num(s: &str) -> Result<u64> {
    parse_count(s).map_err(usage)
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') && !s.starts_with(|c: char| c.is_ascii_digit())
}

impl ParamRange {
    pub fn parse(text: &str) -> Result<Self> {
        let mut range = ParamRange::default();
        let mut pending: Vec<String> = Vec::new();
        for raw in text.split(',') {
            let tok = raw.trim();
            if is_name(tok) {
                pending.push(tok.to_string());
                continue;
            }
            let (name, lo, hi) = if let Some((name, v)) = tok.split_once("<=") {
                (name, None, Some(num(v)?))
            } else if let Some((name, v)) = tok.split_once(">=") {
                (name, Some(num(v)?), None)
            } else if let Some((name, v)) = tok.split_once('<') {
                let v = num(v)?;
                if v == 0 {
                    return Err(usage(format!("empty range in {tok:?}")));
                }
                (name, None, Some(v - 1))
            } else if let Some((name, v)) = tok.split_once('=') {
                match v.split_once("..") {
                    Some((a, b)) => (name, Some(num(a)?), Some(num(b)?)),
                    None => {
                        let v = num(v)?;
                        (name, Some(v), Some(v))
                    }
                }
            } else {
                return Err(usage(format!("cannot parse range clause {tok:?}")));
            };
            let name = name.trim();
            if !is_name(name) {
                return Err(usage(format!("bad variable name {name:?} in {tok:?}")));
            }
            pending.push(name.to_string());
            for var in pending.drain(..) {
                let b = range.bounds.entry(var).or_insert(Bounds { lo: None, hi: None });
                apply(b, lo, hi);
            }
        }
        if !pending.is_empty() {
            return Err(usage(format!("no bound given for {}", pending.join(", "))));
        }
        Ok(range)
    }

    fn get(&self, var: &str) -> Option<Bounds> {
        self.bounds.get(var).copied()
    }

    /// Every parameter tuple in range that passes the family's domain
    /// checks, in lexicographic order.
    pub fn tuples(&self, family: Family) -> Result<Vec<Vec<u64>>> {
        if matches!(family, Family::Abelian | Family::Nilpotent) {
            return Err(usage(format!("verify does not enumerate the {} family", family.name())));
        }
        let vars = family.vars();
        for name in self.bounds.keys() {
            if name != "order" && !vars.contains(&name.as_str()) {
                return Err(usage(format!(
                    "{} has no parameter {name:?}; parameters are {}",
                    family.name(),
                    vars.join(", ")
                )));
            }
        }
        let order = self.get("order").unwrap_or(Bounds { lo: None, hi: None });
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.walk(family, vars, &mut cur, &order, &mut out)?;
        Ok(out)
    }

    fn walk(
        &self,
        family: Family,
        vars: &[&str],
        cur: &mut Vec<u64>,
        order: &Bounds,
        out: &mut Vec<Vec<u64>>,
    ) -> Result<()> {
        let Some((&var, rest)) = vars.split_first() else {
            if let Some(spec) = valid_spec(family, cur) {
                let o = spec.order().unwrap_or(u128::MAX);
                if order.hi.is_none_or(|h| o <= u128::from(h)) && order.lo.is_none_or(|l| o >= u128::from(l)) {
                    out.push(cur.clone());
                }
            }
            return Ok(());
        };
        let (lo, hi) = match (self.get(var), family, var) {
            (None, Family::Zm, "r") => (0, cur[0].saturating_sub(1)),
            (Some(Bounds { lo, hi: Some(hi) }), _, _) => (lo.unwrap_or(default_lo(family, var)), hi),
            _ => return Err(usage(format!("no upper bound given for {var}"))),
        };
        for v in lo..=hi {
            cur.push(v);
            self.walk(family, rest, cur, order, out)?;
            cur.pop();
        }
        Ok(())
    }
}

fn default_lo(family: Family, var: &str) -> u64 {
    match (family, var) {
        (Family::Hamiltonian, "n") | (Family::Zm, "r") => 0,
        _ => 1,
    }
}

fn valid_spec(family: Family, params: &[u64]) -> Option<GroupSpec> {
    let spec = group_spec(family, params).ok()?;
    spec.validate().ok()?;
    // Families whose closed forms need more than the group's own domain.
    let extra = match family {
        Family::Dihedral2n | Family::Quaternion2n => params[0] >= 3,
        Family::Semidihedral2n => params[0] >= 4,
        _ => true,
    };
    extra.then_some(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_forms() {
        let r = ParamRange::parse("m=1..40").unwrap();
        assert_eq!(r.tuples(Family::Dihedral).unwrap().len(), 40);
        let r = ParamRange::parse("m,n<=30").unwrap();
        assert_eq!(r.tuples(Family::Rank2).unwrap().len(), 900);
        let r = ParamRange::parse("p=2..7,n=3").unwrap();
        let t = r.tuples(Family::ModM).unwrap();
        assert_eq!(t, vec![vec![3, 3], vec![5, 3], vec![7, 3]]);
        let r = ParamRange::parse("n<8").unwrap();
        assert_eq!(r.tuples(Family::Quaternion2n).unwrap().len(), 5);
    }

    #[test]
    fn zm_enumerates_valid_triples() {
        let r = ParamRange::parse("m<=7,n<=3").unwrap();
        let t = r.tuples(Family::Zm).unwrap();
        assert!(t.contains(&vec![7, 3, 2]));
        assert!(t.contains(&vec![3, 2, 2]));
        assert!(t.contains(&vec![1, 3, 0]));
        assert!(!t.contains(&vec![6, 2, 5]));
        for tuple in &t {
            assert!(cyclicity_core::oracle::check_zm(tuple[0], tuple[1], tuple[2]).is_ok());
        }
        let bounded = ParamRange::parse("m<=7,n<=3,order<=10").unwrap().tuples(Family::Zm).unwrap();
        assert!(bounded.iter().all(|t| t[0] * t[1] <= 10));
    }

    #[test]
    fn errors() {
        assert!(ParamRange::parse("m").is_err());
        assert!(ParamRange::parse("m~3").is_err());
        assert!(ParamRange::parse("m>=3").unwrap().tuples(Family::Dihedral).is_err());
        assert!(ParamRange::parse("q<=3").unwrap().tuples(Family::Dihedral).is_err());
    }
}
