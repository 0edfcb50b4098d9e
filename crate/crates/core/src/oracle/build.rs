use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{CayleyGroup, GroupSpec, DEFAULT_ORDER_CAP};
use crate::arith::{inverse_mod, pow_mod};
use crate::{Error, Result};

/// Builds the Cayley table of `spec` under the default order cap.
pub fn build_group(spec: &GroupSpec) -> Result<CayleyGroup> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<CayleyGroup> {
    spec.validate()?;
    let order = spec.order().unwrap_or(u128::MAX);
    let hard_cap = cap.min(usize::from(u16::MAX));
    if order > hard_cap as u128 {
        return Err(Error::Resource {
            what: "group order",
            requested: order,
            cap: hard_cap as u128,
        });
    }
    let raw = raw_table(spec);
    CayleyGroup::from_table(raw.order, raw.table).map(|g| g.with_names(raw.names))
}

struct RawTable {
    order: usize,
    table: Vec<u16>,
    names: Vec<String>,
}

fn raw_table(spec: &GroupSpec) -> RawTable {
    match spec {
        GroupSpec::Cyclic(n) => abelian(&[*n]),
        GroupSpec::ElementaryAbelian { p, k } => {
            abelian(&(0..*k).map(|_| *p).collect::<Vec<_>>())
        }
        GroupSpec::AbelianProduct(ns) => abelian(ns),
        GroupSpec::Dihedral(m) => metacyclic(*m, 2, m.saturating_sub(1)),
        GroupSpec::GeneralizedQuaternion(n) => quaternion(1u64 << (n - 1)),
        GroupSpec::Semidihedral(n) => metacyclic(1 << (n - 1), 2, (1 << (n - 2)) - 1),
        GroupSpec::ModularM { p, n } => metacyclic(p.pow(n - 1), *p, p.pow(n - 2) + 1),
        GroupSpec::Zm { m, n, r } => metacyclic(*m, *n, *r),
        GroupSpec::DirectProduct(parts) => {
            let mut acc = abelian(&[1]);
            for part in parts {
                acc = direct_product(&acc, &raw_table(part));
            }
            acc
        }
    }
}

/// `Z_{n_1} x ... x Z_{n_k}` in mixed radix, first coordinate fastest.
fn abelian(ns: &[u64]) -> RawTable {
    let ns: Vec<usize> = ns.iter().map(|&n| n as usize).collect();
    let order: usize = ns.iter().product();
    let digits = |mut x: usize| {
        ns.iter()
            .map(|&n| {
                let d = x % n;
                x /= n;
                d
            })
            .collect::<Vec<_>>()
    };
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let da = digits(a);
        for b in 0..order {
            let db = digits(b);
            let mut idx = 0;
            let mut stride = 1;
            for (i, &n) in ns.iter().enumerate() {
                idx += (da[i] + db[i]) % n * stride;
                stride *= n;
            }
            table.push(idx as u16);
        }
    }
    let names = (0..order)
        .map(|x| {
            let d = digits(x);
            if d.len() == 1 {
                format!("{}", d[0])
            } else {
                format!("{d:?}")
            }
        })
        .collect();
    RawTable { order, table, names }
}

/// `<a, b | a^m = b^n = 1, b^-1 a b = a^r>` with elements `a^i b^j` stored
/// at index `j * m + i`.
///
/// From `b^-1 a b = a^r` we get `b a b^-1 = a^t` with `t = r^-1 (mod m)`, so
/// `b^j a^i' = a^(i' t^j) b^j` and
/// `(a^i b^j)(a^i' b^j') = a^(i + i' t^j) b^(j + j')`.
fn metacyclic(m: u64, n: u64, r: u64) -> RawTable {
    let t = inverse_mod(r % m.max(1), m).expect("r is a unit mod m for valid presentations");
    let (mu, nu) = (m as usize, n as usize);
    let order = mu * nu;
    let tpow: Vec<u64> = (0..n).map(|j| pow_mod(t, j, m)).collect();
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, j) = (x % mu, x / mu);
        for y in 0..order {
            let (i2, j2) = (y % mu, y / mu);
            let ni = ((i as u64 + i2 as u64 * tpow[j]) % m) as usize;
            let nj = (j + j2) % nu;
            table.push((nj * mu + ni) as u16);
        }
    }
    let names = (0..order)
        .map(|x| format!("a^{} b^{}", x % mu, x / mu))
        .collect();
    RawTable { order, table, names }
}

/// `Q_{2^n}` with `m = 2^(n-1)`: `x^m = 1`, `y^2 = x^(m/2)`, `y x y^-1 = x^-1`.
/// Element `x^i y^j` at index `j * m + i`.
fn quaternion(m: u64) -> RawTable {
    let mu = m as usize;
    let order = 2 * mu;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i, j) = (a % mu, a / mu);
        for b in 0..order {
            let (i2, j2) = (b % mu, b / mu);
            let moved = if j == 1 { (mu - i2) % mu } else { i2 };
            let extra = if j == 1 && j2 == 1 { mu / 2 } else { 0 };
            let ni = (i + moved + extra) % mu;
            let nj = (j + j2) % 2;
            table.push((nj * mu + ni) as u16);
        }
    }
    let names = (0..order)
        .map(|a| format!("x^{} y^{}", a % mu, a / mu))
        .collect();
    RawTable { order, table, names }
}

/// Componentwise product; index `a + |A| * b`.
fn direct_product(a: &RawTable, b: &RawTable) -> RawTable {
    let (na, nb) = (a.order, b.order);
    if na == 1 {
        return RawTable {
            order: nb,
            table: b.table.clone(),
            names: b.names.clone(),
        };
    }
    let order = na * nb;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xa, xb) = (x % na, x / na);
        for y in 0..order {
            let (ya, yb) = (y % na, y / na);
            let za = usize::from(a.table[xa * na + ya]);
            let zb = usize::from(b.table[xb * nb + yb]);
            table.push((za + na * zb) as u16);
        }
    }
    let names = (0..order)
        .map(|x| format!("({}, {})", a.names[x % na], b.names[x / na]))
        .collect();
    RawTable { order, table, names }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn find_order(g: &CayleyGroup, k: usize) -> usize {
        (0..g.order()).find(|&x| g.element_order(x) == k).unwrap()
    }

    #[test]
    fn cyclic_six() {
        let g = build_group(&GroupSpec::Cyclic(6)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_order(1), 6);
    }

    #[test]
    fn dihedral_eight_relations() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        // r = a (index 1), s = b (index 4)
        let (r, s) = (1, 4);
        assert_eq!(g.pow(r, 4), g.identity());
        assert_eq!(g.pow(s, 2), g.identity());
        assert_eq!(g.mul(g.mul(s, r), s), g.inverse(r));
    }

    #[test]
    fn zm_relation_on_table() {
        for (m, n, r) in [(7u64, 3u64, 2u64), (3, 2, 2), (5, 4, 2), (13, 6, 4), (1, 5, 1), (9, 2, 8)] {
            let g = build_group(&GroupSpec::Zm { m, n, r }).unwrap();
            assert_eq!(g.order() as u64, m * n);
            let (a, b) = (1 % m as usize, m as usize % g.order());
            let b = if n == 1 { g.identity() } else { b };
            assert_eq!(g.element_order(a) as u64, m);
            assert_eq!(g.element_order(b) as u64, n);
            // b^-1 a b = a^r
            assert_eq!(g.mul(g.mul(g.inverse(b), a), b), g.pow(a, r));
        }
        assert!(!build_group(&GroupSpec::Zm { m: 7, n: 3, r: 2 }).unwrap().is_abelian());
    }

    #[test]
    fn quaternion_relations() {
        for n in 3..=6u32 {
            let g = build_group(&GroupSpec::GeneralizedQuaternion(n)).unwrap();
            let m = 1usize << (n - 1);
            let (x, y) = (1, m);
            assert_eq!(g.element_order(x), m);
            assert_eq!(g.element_order(y), 4);
            assert_eq!(g.pow(y, 2), g.pow(x, (m / 2) as u64));
            assert_eq!(g.conjugate(x, y), g.inverse(x));
            // unique involution
            let involutions = (0..g.order()).filter(|&z| g.element_order(z) == 2).count();
            assert_eq!(involutions, 1);
        }
    }

    #[test]
    fn semidihedral_and_modular_relations() {
        for n in 4..=6u32 {
            let g = build_group(&GroupSpec::Semidihedral(n)).unwrap();
            let m = 1usize << (n - 1);
            let (x, y) = (1, m);
            assert_eq!(g.element_order(y), 2);
            assert_eq!(g.mul(g.mul(g.inverse(y), x), y), g.pow(x, (m / 2 - 1) as u64));
        }
        for (p, n) in [(3u64, 3u32), (5, 3), (2, 4), (2, 5), (3, 4)] {
            let g = build_group(&GroupSpec::ModularM { p, n }).unwrap();
            let m = p.pow(n - 1) as usize;
            let (x, y) = (1, m);
            assert_eq!(g.element_order(x), m);
            assert_eq!(g.element_order(y) as u64, p);
            assert_eq!(g.mul(g.mul(g.inverse(y), x), y), g.pow(x, p.pow(n - 2) + 1));
            assert!(!g.is_abelian());
        }
    }

    #[test]
    fn products_and_caps() {
        let spec = GroupSpec::product([GroupSpec::Dihedral(3), GroupSpec::Cyclic(2)]);
        let g = build_group(&spec).unwrap();
        assert_eq!(g.order(), 12);
        assert!(find_order(&g, 6) < 12);
        let big = GroupSpec::Cyclic(5000);
        assert!(matches!(build_group(&big), Err(Error::Resource { .. })));
        assert!(build_group_with_cap(&big, 6000).is_ok());
        assert!(matches!(
            build_group(&GroupSpec::Semidihedral(3)),
            Err(Error::Parameter(_))
        ));
        let e = build_group(&GroupSpec::AbelianProduct(vec![2, 3])).unwrap();
        assert_eq!(e.element_order(find_order(&e, 6)), 6);
    }
}
