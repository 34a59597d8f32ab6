//! Explicit set families over a small ground set and the set-system axioms
//!
//! * (M1) ∅ ∈ I
//! * (M2) J′ ⊂ J ∈ I implies J′ ∈ I
//! * (M3) for every A ⊆ S, all maximal subsets of A in I have equal size
//!
//! A family satisfying (M1) and (M3) is reported as a "paper-greedoid"; this
//! is weaker than the usual accessible-exchange greedoid definition. All
//! three together make a matroid.
//!
//! For a family I of connected forcing sets the object of interest is the
//! complement family {V ∖ J : J ∈ I}. Under complementation (M1) becomes
//! V ∈ I, (M2) becomes upward closure of I, and (M3) becomes: for every A,
//! all minimal supersets of A in I have equal size. The plain set difference
//! P(V) ∖ I already fails (M3) on K_{1,3}, where both {1, 2, 3} and {0, 1}
//! are maximal non-forcing sets.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::enumerate_connected_forcing_sets;
use crate::graph::Graph;

/// Largest ground set a [`SetFamily`] can index.
pub const MAX_GROUND: usize = 64;

/// A family of subsets of `0..ground`. With `complement` set it stands for
/// {S ∖ J : J ∈ members}; the complements are never materialized.
#[derive(Debug, Clone, Serialize)]
pub struct SetFamily {
    ground: usize,
    members: Vec<Vec<usize>>,
    complement: bool,
    #[serde(skip)]
    index: HashSet<u64>,
}

fn to_mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |m, &v| m | 1 << v)
}

fn from_mask(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

impl SetFamily {
    pub fn new(ground: usize, members: Vec<Vec<usize>>, complement: bool) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::CapExceeded {
                size: ground,
                cap: MAX_GROUND,
            });
        }
        let mut seen = HashSet::new();
        let mut kept = Vec::with_capacity(members.len());
        for mut s in members {
            s.sort_unstable();
            s.dedup();
            if let Some(&v) = s.iter().find(|&&v| v >= ground) {
                return Err(Error::VertexOutOfRange { vertex: v, n: ground });
            }
            if seen.insert(to_mask(&s)) {
                kept.push(s);
            }
        }
        kept.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(SetFamily {
            ground,
            members: kept,
            complement,
            index: seen,
        })
    }

    /// {V ∖ J : J ∈ I} where I holds every connected forcing set of `g`.
    pub fn connected_forcing_complement(g: &Graph) -> Result<Self> {
        let fam = enumerate_connected_forcing_sets(g, false, None)?;
        Ok(fam.complemented())
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// The stored sets: I itself, even when the family denotes the complements.
    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn is_complement(&self) -> bool {
        self.complement
    }

    pub fn complemented(mut self) -> Self {
        self.complement = !self.complement;
        self
    }

    fn full_mask(&self) -> u64 {
        if self.ground == 64 {
            u64::MAX
        } else {
            (1u64 << self.ground) - 1
        }
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        if self.complement {
            self.index.contains(&(self.full_mask() ^ mask))
        } else {
            self.index.contains(&mask)
        }
    }

    /// Masks of the sets the family denotes, in stored order.
    fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        let flip = if self.complement { self.full_mask() } else { 0 };
        self.members.iter().map(move |s| to_mask(s) ^ flip)
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.contains_mask(to_mask(set))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomOptions {
    /// Largest ground set accepted at all.
    pub cap: usize,
    /// Ground sets up to this size get every A ⊆ S checked for (M3).
    pub exhaustive_limit: usize,
    /// Number of random A checked above the exhaustive limit.
    pub samples: usize,
    pub seed: u64,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            cap: 20,
            exhaustive_limit: 12,
            samples: 4096,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum M3Mode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M2Witness {
    pub subset: Vec<usize>,
    pub superset: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct M3Witness {
    pub a: Vec<usize>,
    pub larger: Vec<usize>,
    pub smaller: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub m1: bool,
    pub m2: bool,
    pub m3: bool,
    pub m2_witness: Option<M2Witness>,
    pub m3_witness: Option<M3Witness>,
    pub m3_mode: M3Mode,
}

impl AxiomReport {
    /// (M1) and (M3).
    pub fn paper_greedoid(&self) -> bool {
        self.m1 && self.m3
    }

    pub fn matroid(&self) -> bool {
        self.m1 && self.m2 && self.m3
    }
}

pub fn check_axioms(fam: &SetFamily, opts: AxiomOptions) -> Result<AxiomReport> {
    let n = fam.ground();
    if n > opts.cap {
        return Err(Error::CapExceeded { size: n, cap: opts.cap });
    }
    let m1 = fam.contains_mask(0);
    let m2_witness = check_m2(fam);
    let (m3_witness, m3_mode) = if n <= opts.exhaustive_limit {
        let full = fam.full_mask();
        // A = S first, then downward
        let found = (0..=full).rev().find_map(|a| m3_violation(fam, a));
        (found, M3Mode::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let full = fam.full_mask();
        let found = std::iter::once(full)
            .chain((0..opts.samples).map(|_| rng.gen::<u64>() & full))
            .find_map(|a| m3_violation(fam, a));
        (
            found,
            M3Mode::Sampled {
                samples: opts.samples,
                seed: opts.seed,
            },
        )
    };
    Ok(AxiomReport {
        m1,
        m2: m2_witness.is_none(),
        m3: m3_witness.is_none(),
        m2_witness,
        m3_witness,
        m3_mode,
    })
}

/// Downward closure fails iff some member loses one element and leaves the
/// family; the first such pair in stored order is the witness.
fn check_m2(fam: &SetFamily) -> Option<M2Witness> {
    let n = fam.ground();
    let violation = |j: u64| -> Option<M2Witness> {
        if !fam.contains_mask(j) {
            return None;
        }
        (0..n)
            .filter(|&x| j >> x & 1 == 1)
            .map(|x| j & !(1 << x))
            .find(|&sub| !fam.contains_mask(sub))
            .map(|sub| M2Witness {
                subset: from_mask(sub),
                superset: from_mask(j),
            })
    };
    fam.masks().find_map(violation)
}

/// Maximal subsets of `a` inside the family; returns a witness when two of
/// them differ in size.
fn m3_violation(fam: &SetFamily, a: u64) -> Option<M3Witness> {
    let elems: Vec<usize> = from_mask(a);
    let k = elems.len();
    let size = 1usize << k;
    let mut global = vec![0u64; size];
    for local in 1..size {
        let low = local.trailing_zeros() as usize;
        global[local] = global[local & (local - 1)] | 1 << elems[low];
    }
    let in_fam: Vec<bool> = global.iter().map(|&g| fam.contains_mask(g)).collect();
    // has_super[l]: some proper superset of l inside a is in the family
    let mut has_super = vec![false; size];
    for local in (0..size).rev() {
        let mut found = false;
        for b in 0..k {
            let up = local | 1 << b;
            if up != local && (in_fam[up] || has_super[up]) {
                found = true;
                break;
            }
        }
        has_super[local] = found;
    }
    let mut largest: Option<usize> = None;
    let mut smallest: Option<usize> = None;
    for local in 0..size {
        if !in_fam[local] || has_super[local] {
            continue;
        }
        let c = local.count_ones();
        if largest.is_none_or(|l| c > l.count_ones()) {
            largest = Some(local);
        }
        if smallest.is_none_or(|s| c < s.count_ones()) {
            smallest = Some(local);
        }
    }
    match (largest, smallest) {
        (Some(l), Some(s)) if l.count_ones() != s.count_ones() => Some(M3Witness {
            a: elems,
            larger: from_mask(global[l]),
            smaller: from_mask(global[s]),
        }),
        _ => None,
    }
}
