use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::{Error, Result};

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 200;
const SAMPLED_TRIPLES: usize = 100_000;
const SAMPLE_SEED: u64 = 0x6379_636c_6963;

/// An explicit finite group: elements are `0..order`, multiplication is a
/// row-major table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    order: usize,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<u16>,
    element_names: Option<Vec<String>>,
}

impl CayleyGroup {
    /// Validates `table` (Latin square, identity, inverses, associativity)
    /// and wraps it.
    pub fn from_table(order: usize, table: Vec<u16>) -> Result<Self> {
        if order == 0 || order > usize::from(u16::MAX) {
            return Err(Error::param(format!("group order must be in 1..=65535, got {order}")));
        }
        if table.len() != order * order {
            return Err(Error::param(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        let mut seen = vec![0usize; order];
        for row in 0..order {
            for col in 0..order {
                let v = usize::from(table[row * order + col]);
                if v >= order {
                    return Err(Error::param(format!("table entry {v} out of range")));
                }
                if seen[v] == row * 2 + 1 {
                    return Err(Error::param(format!("row {row} repeats element {v}")));
                }
                seen[v] = row * 2 + 1;
            }
        }
        for col in 0..order {
            for row in 0..order {
                let v = usize::from(table[row * order + col]);
                if seen[v] == col * 2 + 2 {
                    return Err(Error::param(format!("column {col} repeats element {v}")));
                }
                seen[v] = col * 2 + 2;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| usize::from(table[e * order + x]) == x && usize::from(table[x * order + e]) == x))
            .ok_or_else(|| Error::param("table has no two-sided identity"))?;
        let mut inverses = vec![0u16; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| usize::from(table[x * order + y]) == identity)
                .expect("Latin square row contains the identity");
            if usize::from(table[inv * order + x]) != identity {
                return Err(Error::param(format!("element {x} has no two-sided inverse")));
            }
            inverses[x] = inv as u16;
        }
        let group = CayleyGroup {
            order,
            table,
            identity,
            inverses,
            element_names: None,
        };
        group.check_associativity()?;
        Ok(group)
    }

    pub(crate) fn with_names(mut self, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), self.order);
        self.element_names = Some(names);
        self
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let fail = |a: usize, b: usize, c: usize| {
            Err(Error::param(format!("table is not associative at ({a}, {b}, {c})")))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            for _ in 0..SAMPLED_TRIPLES {
                let a = (rng.next_u64() % n as u64) as usize;
                let b = (rng.next_u64() % n as u64) as usize;
                let c = (rng.next_u64() % n as u64) as usize;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        usize::from(self.table[a * self.order + b])
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        usize::from(self.inverses[a])
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let mut acc = self.identity;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Powers `e, x, x^2, ...` of `x` up to (excluding) the identity's return.
    pub fn powers(&self, x: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut y = x;
        while y != self.identity {
            out.push(y);
            y = self.mul(y, x);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A small generating set, chosen greedily from element `0` upward.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = super::Bits::singleton(self.order, self.identity);
        for x in 0..self.order {
            if !span.contains(x) {
                gens.push(x);
                span = super::generate(self, &gens);
                if span.count() == self.order {
                    break;
                }
            }
        }
        gens
    }
}
