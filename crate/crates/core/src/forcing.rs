//! The color change rule: derived sets, chronological force lists and
//! forcing chains.
//!
//! A colored vertex with exactly one uncolored neighbor forces that
//! neighbor. The derived set does not depend on the order in which forces
//! are applied; [`ForceOrder`] only changes the recorded trace.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::{Bits, WideBits};
use crate::error::Result;
use crate::graph::{normalize_set, Graph};

/// Which eligible forcer acts at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ForceOrder {
    /// Smallest-labelled eligible forcer first.
    #[default]
    Deterministic,
    /// Uniformly random eligible forcer, reproducible from the seed.
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringTrace {
    pub initial_set: Vec<usize>,
    /// Sorted.
    pub derived_set: Vec<usize>,
    /// `(forcer, forced)` in the order applied.
    pub forces: Vec<(usize, usize)>,
    /// One chain per initial vertex, in initial-set order. Singletons included.
    pub chains: Vec<Vec<usize>>,
}

impl ColoringTrace {
    pub fn is_complete(&self, g: &Graph) -> bool {
        self.derived_set.len() == g.n()
    }
}

/// Runs the color change rule from `set` to its fixpoint.
pub fn derive(g: &Graph, set: &[usize], order: ForceOrder) -> Result<ColoringTrace> {
    let initial = normalize_set(g, set)?;
    let n = g.n();
    let mut colored = vec![false; n];
    for &v in &initial {
        colored[v] = true;
    }
    let mut uncolored_nbrs: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !colored[w]).count())
        .collect();
    let eligible_at_start = initial.iter().copied().filter(|&v| uncolored_nbrs[v] == 1);

    let mut forces = Vec::new();
    let mut apply = |forcer: usize,
                     colored: &mut Vec<bool>,
                     uncolored_nbrs: &mut Vec<usize>,
                     newly_eligible: &mut dyn FnMut(usize)|
     -> usize {
        let target = *g
            .neighbors(forcer)
            .iter()
            .find(|&&w| !colored[w])
            .expect("eligible forcer has an uncolored neighbor");
        colored[target] = true;
        forces.push((forcer, target));
        for &x in g.neighbors(target) {
            uncolored_nbrs[x] -= 1;
            if colored[x] && uncolored_nbrs[x] == 1 {
                newly_eligible(x);
            }
        }
        if uncolored_nbrs[target] == 1 {
            newly_eligible(target);
        }
        target
    };

    match order {
        ForceOrder::Deterministic => {
            let mut eligible: BTreeSet<usize> = eligible_at_start.collect();
            while let Some(v) = eligible.pop_first() {
                if uncolored_nbrs[v] != 1 {
                    continue;
                }
                let mut fresh = Vec::new();
                apply(v, &mut colored, &mut uncolored_nbrs, &mut |x| fresh.push(x));
                eligible.extend(fresh);
            }
        }
        ForceOrder::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut eligible: Vec<usize> = eligible_at_start.collect();
            while !eligible.is_empty() {
                let i = rng.gen_range(0..eligible.len());
                let v = eligible.swap_remove(i);
                if uncolored_nbrs[v] != 1 {
                    continue;
                }
                let mut fresh = Vec::new();
                apply(v, &mut colored, &mut uncolored_nbrs, &mut |x| fresh.push(x));
                eligible.extend(fresh);
            }
        }
    }

    let derived_set: Vec<usize> = (0..n).filter(|&v| colored[v]).collect();
    let chains = chains_from_forces(n, &initial, &forces);
    Ok(ColoringTrace {
        initial_set: initial,
        derived_set,
        forces,
        chains,
    })
}

/// Rebuilds forcing chains by following `forcer -> forced` links from each
/// initial vertex.
pub fn chains_from_forces(n: usize, initial: &[usize], forces: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut next = vec![usize::MAX; n];
    for &(a, b) in forces {
        next[a] = b;
    }
    initial
        .iter()
        .map(|&s| {
            let mut chain = vec![s];
            let mut cur = s;
            while next[cur] != usize::MAX {
                cur = next[cur];
                chain.push(cur);
            }
            chain
        })
        .collect()
}

/// True iff the derived set of `set` is all of `V`.
pub fn is_forcing_set(g: &Graph, set: &[usize]) -> Result<bool> {
    let s = normalize_set(g, set)?;
    Ok(forces_all_worklist(g, &s))
}

/// True iff `G[set]` is connected.
pub fn is_connected_set(g: &Graph, set: &[usize]) -> Result<bool> {
    let s = normalize_set(g, set)?;
    Ok(g.induces_connected(&s))
}

/// O(n + m) worklist propagation with per-vertex uncolored-neighbor counters.
pub(crate) fn forces_all_worklist(g: &Graph, set: &[usize]) -> bool {
    let n = g.n();
    let mut colored = vec![false; n];
    let mut count = 0;
    for &v in set {
        if !colored[v] {
            colored[v] = true;
            count += 1;
        }
    }
    let mut unc: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !colored[w]).count())
        .collect();
    let mut work: Vec<usize> = set.iter().copied().filter(|&v| unc[v] == 1).collect();
    while let Some(v) = work.pop() {
        if unc[v] != 1 {
            continue;
        }
        let t = *g.neighbors(v).iter().find(|&&w| !colored[w]).unwrap();
        colored[t] = true;
        count += 1;
        for &x in g.neighbors(t) {
            unc[x] -= 1;
            if colored[x] && unc[x] == 1 {
                work.push(x);
            }
        }
        if unc[t] == 1 {
            work.push(t);
        }
    }
    count == n
}

/// Neighborhood bitsets for the solver inner loops.
#[derive(Debug, Clone)]
pub(crate) struct MaskGraph<B: Bits> {
    pub n: usize,
    pub nbr: Vec<B>,
    pub full: B,
}

impl<B: Bits> MaskGraph<B> {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let nbr = (0..n).map(|v| B::from_slice(n, g.neighbors(v))).collect();
        MaskGraph {
            n,
            nbr,
            full: B::full(n),
        }
    }

    /// Derived set of `start`.
    pub fn closure(&self, start: &B) -> B {
        let mut colored = start.clone();
        let mut active = start.clone();
        loop {
            let mut changed = false;
            let snapshot = active.clone();
            snapshot.for_each(|v| {
                let mut unc = self.nbr[v].clone();
                unc.difference_with(&colored);
                if unc.is_empty() {
                    active.remove(v);
                } else if let Some(single) = unc.single_outside(&B::empty(self.n)) {
                    colored.union_with(&single);
                    active.union_with(&single);
                    active.remove(v);
                    changed = true;
                }
            });
            if !changed {
                return colored;
            }
        }
    }

    pub fn forces_all(&self, start: &B) -> bool {
        self.closure(start) == self.full
    }

    /// Whether the induced subgraph on `set` is connected.
    pub fn is_connected(&self, set: &B) -> bool {
        let Some(first) = set.first() else {
            return false;
        };
        let mut seen = B::empty(self.n);
        seen.insert(first);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = B::empty(self.n);
            frontier.for_each(|v| next.union_with(&self.nbr[v]));
            next.intersect_with(set);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen == *set
    }
}

/// A forcing check that picks the fixed-width or wide bitset path by graph order.
pub(crate) enum ForcingOracle {
    Narrow(MaskGraph<u128>),
    Wide(MaskGraph<WideBits>),
}

impl ForcingOracle {
    pub fn new(g: &Graph) -> Self {
        if g.n() <= 128 {
            ForcingOracle::Narrow(MaskGraph::new(g))
        } else {
            ForcingOracle::Wide(MaskGraph::new(g))
        }
    }

    #[cfg(test)]
    pub fn is_forcing(&self, set: &[usize]) -> bool {
        match self {
            ForcingOracle::Narrow(m) => m.forces_all(&u128::from_slice(m.n, set)),
            ForcingOracle::Wide(m) => m.forces_all(&WideBits::from_slice(m.n, set)),
        }
    }

    pub fn is_connected_forcing(&self, set: &[usize]) -> bool {
        match self {
            ForcingOracle::Narrow(m) => {
                let b = u128::from_slice(m.n, set);
                m.is_connected(&b) && m.forces_all(&b)
            }
            ForcingOracle::Wide(m) => {
                let b = WideBits::from_slice(m.n, set);
                m.is_connected(&b) && m.forces_all(&b)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generate::{cycle, path, star};
    use proptest::prelude::*;

    #[test]
    fn path_from_end() {
        let t = derive(&path(4), &[0], ForceOrder::Deterministic).unwrap();
        assert_eq!(t.derived_set, vec![0, 1, 2, 3]);
        assert_eq!(t.forces, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(t.chains, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn stalls_on_two_uncolored_neighbors() {
        let t = derive(&cycle(4), &[0], ForceOrder::Deterministic).unwrap();
        assert_eq!(t.derived_set, vec![0]);
        assert!(t.forces.is_empty());
        assert_eq!(t.chains, vec![vec![0]]);

        let t = derive(&star(3), &[0, 1], ForceOrder::Deterministic).unwrap();
        assert_eq!(t.derived_set, vec![0, 1]);
        assert_eq!(t.chains, vec![vec![0], vec![1]]);
    }

    #[test]
    fn forcing_predicates() {
        assert!(is_forcing_set(&path(5), &[0]).unwrap());
        assert!(!is_forcing_set(&cycle(5), &[0]).unwrap());
        assert!(is_forcing_set(&cycle(5), &[0, 1]).unwrap());
        assert!(is_connected_set(&cycle(5), &[0, 1]).unwrap());
        assert!(!is_connected_set(&cycle(5), &[0, 2]).unwrap());
        assert!(is_connected_set(&cycle(5), &[3]).unwrap());
        assert_eq!(is_forcing_set(&path(3), &[]), Err(Error::EmptySet));
        assert_eq!(is_connected_set(&path(3), &[]), Err(Error::EmptySet));
        assert_eq!(
            derive(&path(3), &[], ForceOrder::Deterministic),
            Err(Error::EmptySet)
        );
    }

    /// Replays a trace step by step and checks the color change rule held.
    fn replay_is_valid(g: &Graph, t: &ColoringTrace) -> bool {
        let mut colored = vec![false; g.n()];
        for &v in &t.initial_set {
            colored[v] = true;
        }
        for &(a, b) in &t.forces {
            let unc: Vec<usize> = g.neighbors(a).iter().copied().filter(|&w| !colored[w]).collect();
            if !colored[a] || unc != vec![b] {
                return false;
            }
            colored[b] = true;
        }
        let derived: Vec<usize> = (0..g.n()).filter(|&v| colored[v]).collect();
        derived == t.derived_set
    }

    proptest! {
        #[test]
        fn order_does_not_change_derived_set(
            seed in 0u64..2000, n in 2usize..14, extra in 0usize..4, k in 1usize..4, order_seed: u64
        ) {
            let g = crate::generate::random_connected(n, extra, seed);
            let set: Vec<usize> = (0..k.min(n)).map(|i| (i * 7 + seed as usize) % n).collect();
            let a = derive(&g, &set, ForceOrder::Deterministic).unwrap();
            let b = derive(&g, &set, ForceOrder::Seeded(order_seed)).unwrap();
            prop_assert_eq!(&a.derived_set, &b.derived_set);
            prop_assert!(replay_is_valid(&g, &a));
            prop_assert!(replay_is_valid(&g, &b));
            prop_assert_eq!(a.chains.len(), a.initial_set.len());
            prop_assert_eq!(forces_all_worklist(&g, &a.initial_set), a.is_complete(&g));
            let oracle = ForcingOracle::new(&g);
            prop_assert_eq!(oracle.is_forcing(&a.initial_set), a.is_complete(&g));
            let wide = MaskGraph::<WideBits>::new(&g);
            prop_assert_eq!(
                wide.closure(&WideBits::from_slice(n, &a.initial_set)).to_vec(),
                a.derived_set.clone()
            );
        }
    }
}
