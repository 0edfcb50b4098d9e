use alloc::vec;
use alloc::vec::Vec;

use super::CayleyGroup;

/// Fixed-width bitset over the elements of a group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut b = Self::empty(n);
        b.insert(x);
        b
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0[x >> 6] >> (x & 63) & 1 == 1
    }

    /// Inserts `x`, returning whether it was absent.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let word = &mut self.0[x >> 6];
        let mask = 1u64 << (x & 63);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    /// Set elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.0
    }

    pub(crate) fn from_words(words: Vec<u64>) -> Self {
        Bits(words)
    }

    pub fn clear(&mut self) {
        self.0.iter_mut().for_each(|w| *w = 0);
    }
}

/// The subgroup generated by `gens`.
pub fn generate(group: &CayleyGroup, gens: &[usize]) -> Bits {
    let mut set = Bits::singleton(group.order(), group.identity());
    let mut elems = vec![group.identity()];
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &g in gens {
            let y = group.mul(x, g);
            if set.insert(y) {
                elems.push(y);
            }
        }
        i += 1;
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = Bits::empty(130);
        assert!(a.insert(3));
        assert!(!a.insert(3));
        a.insert(129);
        a.insert(64);
        assert_eq!(a.to_vec(), alloc::vec![3, 64, 129]);
        assert_eq!(a.count(), 3);
        let b = Bits::singleton(130, 64);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b), b);
    }
}
