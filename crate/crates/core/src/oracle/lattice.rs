use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{generate, Bits, CayleyGroup, DEFAULT_ORDER_CAP};
use crate::arith::is_prime;
use crate::{Error, Result};

/// How [`enumerate_subgroups_with`] explores the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Cyclic extension for solvable groups, join saturation otherwise.
    #[default]
    Auto,
    /// Grow every subgroup `H` by elements `x` normalizing `H` whose image
    /// in `N(H)/H` has prime order. Reaches every solvable subgroup, since
    /// each one has a normal subgroup of prime index.
    CyclicExtension,
    /// Start from the cyclic subgroups and join with cyclic subgroups until
    /// nothing new appears. Complete for every group.
    JoinSaturation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    bits: Bits,
    order: usize,
    generators: Vec<u16>,
    is_cyclic: bool,
    is_normal: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_cyclic
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    /// Element indices, ascending.
    pub fn elements(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators.iter().map(|&g| usize::from(g))
    }
}

/// Every subgroup of a group, sorted by order and then by element list.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    index: HashMap<Box<[u64]>, usize>,
}

impl SubgroupLattice {
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn num_cyclic(&self) -> usize {
        self.subgroups.iter().filter(|s| s.is_cyclic).count()
    }

    pub fn num_normal(&self) -> usize {
        self.subgroups.iter().filter(|s| s.is_normal).count()
    }

    /// Position of the subgroup with exactly this element set.
    pub fn position(&self, bits: &Bits) -> Option<usize> {
        self.index.get(bits.words()).copied()
    }

    pub fn counts(&self) -> LatticeCounts {
        LatticeCounts {
            subgroups: self.len() as u64,
            cyclic: self.num_cyclic() as u64,
            normal: self.num_normal() as u64,
        }
    }
}

/// `|L(G)|`, `|C(G)|` and `|N(G)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeCounts {
    pub subgroups: u64,
    pub cyclic: u64,
    pub normal: u64,
}

pub fn enumerate_subgroups(group: &CayleyGroup) -> Result<SubgroupLattice> {
    enumerate_subgroups_with(group, DEFAULT_ORDER_CAP, Strategy::Auto)
}

pub fn enumerate_subgroups_with(
    group: &CayleyGroup,
    cap: usize,
    strategy: Strategy,
) -> Result<SubgroupLattice> {
    check_cap(group, cap)?;
    let ctx = Context::new(group);
    let mut subgroups = Vec::new();
    ctx.run(strategy, |bits, gens| {
        let order = bits.count();
        let is_cyclic = ctx.cyclic.contains_key(bits.words());
        let is_normal = ctx.is_normal(&bits, &gens);
        subgroups.push(Subgroup {
            bits,
            order,
            generators: gens,
            is_cyclic,
            is_normal,
        });
    });
    let mut keyed: Vec<(Vec<usize>, Subgroup)> =
        subgroups.into_iter().map(|s| (s.elements(), s)).collect();
    keyed.sort_by(|a, b| (a.1.order, &a.0).cmp(&(b.1.order, &b.0)));
    let subgroups: Vec<Subgroup> = keyed.into_iter().map(|(_, s)| s).collect();
    let index = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.bits.words().into(), i))
        .collect();
    Ok(SubgroupLattice {
        group_order: group.order(),
        subgroups,
        index,
    })
}

/// Counts without materializing the lattice. Memory is bounded by two
/// adjacent layers (subgroups of one order) rather than the whole lattice.
pub fn lattice_counts(group: &CayleyGroup) -> Result<LatticeCounts> {
    lattice_counts_with(group, DEFAULT_ORDER_CAP, Strategy::Auto)
}

pub fn lattice_counts_with(
    group: &CayleyGroup,
    cap: usize,
    strategy: Strategy,
) -> Result<LatticeCounts> {
    check_cap(group, cap)?;
    let ctx = Context::new(group);
    let mut counts = LatticeCounts {
        subgroups: 0,
        cyclic: 0,
        normal: 0,
    };
    ctx.run(strategy, |bits, gens| {
        counts.subgroups += 1;
        if ctx.cyclic.contains_key(bits.words()) {
            counts.cyclic += 1;
        }
        if ctx.is_normal(&bits, &gens) {
            counts.normal += 1;
        }
    });
    Ok(counts)
}

fn check_cap(group: &CayleyGroup, cap: usize) -> Result<()> {
    if group.order() > cap {
        return Err(Error::Resource {
            what: "group order",
            requested: group.order() as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

/// Whether the derived series of `group` reaches the trivial group.
pub fn is_solvable(group: &CayleyGroup) -> bool {
    let n = group.order();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        if current.len() == 1 {
            return true;
        }
        let mut comms = Bits::empty(n);
        let mut gens = Vec::new();
        for &a in &current {
            for &b in &current {
                let c = group.mul(
                    group.mul(group.inverse(a), group.inverse(b)),
                    group.mul(a, b),
                );
                if comms.insert(c) {
                    gens.push(c);
                }
            }
        }
        let derived = generate(group, &gens);
        if derived.count() == current.len() {
            return false;
        }
        current = derived.to_vec();
    }
}

/// Cyclic subgroups keyed by their element set, with one generator each.
pub(crate) fn cyclic_subgroups(group: &CayleyGroup) -> HashMap<Box<[u64]>, usize> {
    let mut map: HashMap<Box<[u64]>, usize> = HashMap::new();
    for x in 0..group.order() {
        let mut bits = Bits::empty(group.order());
        for y in group.powers(x) {
            bits.insert(y);
        }
        map.entry(bits.words().into()).or_insert(x);
    }
    map
}

struct Context<'g> {
    group: &'g CayleyGroup,
    cyclic: HashMap<Box<[u64]>, usize>,
    group_generators: Vec<usize>,
}

impl<'g> Context<'g> {
    fn new(group: &'g CayleyGroup) -> Self {
        Context {
            group,
            cyclic: cyclic_subgroups(group),
            group_generators: group.generators(),
        }
    }

    fn is_normal(&self, bits: &Bits, gens: &[u16]) -> bool {
        self.group_generators.iter().all(|&g| {
            gens.iter()
                .all(|&h| bits.contains(self.group.conjugate(usize::from(h), g)))
        })
    }

    fn run(&self, strategy: Strategy, visit: impl FnMut(Bits, Vec<u16>)) {
        let strategy = match strategy {
            Strategy::Auto if is_solvable(self.group) => Strategy::CyclicExtension,
            Strategy::Auto => Strategy::JoinSaturation,
            s => s,
        };
        match strategy {
            Strategy::CyclicExtension => self.cyclic_extension(visit),
            _ => self.join_saturation(visit),
        }
    }

    fn cyclic_extension(&self, mut visit: impl FnMut(Bits, Vec<u16>)) {
        let g = self.group;
        let n = g.order();
        let mut layers: BTreeMap<usize, HashMap<Box<[u64]>, Vec<u16>>> = BTreeMap::new();
        let trivial = Bits::singleton(n, g.identity());
        layers
            .entry(1)
            .or_default()
            .insert(trivial.words().into(), Vec::new());
        let mut members = Vec::with_capacity(n);
        let mut scratch = Bits::empty(n);
        while let Some((order, layer)) = layers.pop_first() {
            for (words, gens) in layer {
                let h = Bits::from_words(words.into_vec());
                members.clear();
                members.extend(h.iter());
                let mut done = h.clone();
                for x in 0..n {
                    if done.contains(x) {
                        continue;
                    }
                    let normalizes = gens
                        .iter()
                        .all(|&y| h.contains(g.conjugate(usize::from(y), x)));
                    let mut k = 1usize;
                    if normalizes {
                        let mut y = x;
                        while !h.contains(y) {
                            y = g.mul(y, x);
                            k += 1;
                        }
                    }
                    if !normalizes || !is_prime(k as u64) {
                        for &m in &members {
                            done.insert(g.mul(x, m));
                        }
                        continue;
                    }
                    scratch.clear();
                    let mut xi = g.identity();
                    for _ in 0..k {
                        for &m in &members {
                            scratch.insert(g.mul(m, xi));
                        }
                        xi = g.mul(xi, x);
                    }
                    done.union_with(&scratch);
                    let next = layers.entry(order * k).or_default();
                    if !next.contains_key(scratch.words()) {
                        let mut next_gens = gens.clone();
                        next_gens.push(x as u16);
                        next.insert(scratch.words().into(), next_gens);
                    }
                }
                visit(h, gens);
            }
        }
    }

    fn join_saturation(&self, mut visit: impl FnMut(Bits, Vec<u16>)) {
        let g = self.group;
        let seeds: Vec<(Bits, usize)> = self
            .cyclic
            .iter()
            .map(|(w, &x)| (Bits::from_words(w.to_vec()), x))
            .collect();
        let mut found: HashMap<Box<[u64]>, Vec<u16>> = HashMap::new();
        let mut queue: Vec<Bits> = Vec::new();
        for (bits, x) in &seeds {
            let gens = if *x == g.identity() {
                Vec::new()
            } else {
                alloc::vec![*x as u16]
            };
            found.insert(bits.words().into(), gens);
            queue.push(bits.clone());
        }
        while let Some(h) = queue.pop() {
            let h_gens = found[h.words()].clone();
            for (c, x) in &seeds {
                if c.is_subset(&h) {
                    continue;
                }
                let mut gens: Vec<usize> = h_gens.iter().map(|&y| usize::from(y)).collect();
                gens.push(*x);
                let k = generate(g, &gens);
                if !found.contains_key(k.words()) {
                    found.insert(
                        k.words().into(),
                        gens.iter().map(|&y| y as u16).collect(),
                    );
                    queue.push(k);
                }
            }
        }
        for (words, gens) in found {
            visit(Bits::from_words(words.into_vec()), gens);
        }
    }
}
