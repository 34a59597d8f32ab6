//! Structural vertex sets that every connected forcing set must respect,
//! the two lower bounds built from them, and oriented cycle segments.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{classify_family, pendant_paths, BlockDecomposition, Family, Graph, PendantPath};

/// R₁, R₂, R₃, L and M for a connected non-path graph.
///
/// * R₁: κ(G − v) = 2 and exactly one pendant path at `v`
/// * R₂: κ(G − v) = 2 and no pendant path at `v`
/// * R₃: κ(G − v) ≥ 3
/// * L: for each `v` with pendant paths, all bases but one
/// * M = R₂ ∪ R₃ ∪ L
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralSets {
    pub r1: Vec<usize>,
    pub r2: Vec<usize>,
    pub r3: Vec<usize>,
    pub l_set: Vec<usize>,
    pub m_set: Vec<usize>,
    /// p(v).
    pub p: Vec<usize>,
    /// κ(G − v).
    pub kappa: Vec<usize>,
    /// For every `v` with p(v) > 0, the base left out of L.
    pub excluded_base: BTreeMap<usize, usize>,
    /// Pendant paths keyed by attach vertex.
    pub pendant: BTreeMap<usize, Vec<PendantPath>>,
}

impl StructuralSets {
    pub fn in_r1(&self, v: usize) -> bool {
        self.r1.binary_search(&v).is_ok()
    }

    pub fn in_m(&self, v: usize) -> bool {
        self.m_set.binary_search(&v).is_ok()
    }

    /// Vertices lying on some pendant path.
    pub fn pendant_vertices(&self, n: usize) -> Vec<bool> {
        let mut on = vec![false; n];
        for paths in self.pendant.values() {
            for p in paths {
                for &v in &p.vertices {
                    on[v] = true;
                }
            }
        }
        on
    }
}

pub fn structural_sets(g: &Graph) -> Result<StructuralSets> {
    let class = classify_family(g)?;
    if class.family == Family::Path {
        return Err(Error::PathGraph);
    }
    let n = g.n();
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    let mut r3 = Vec::new();
    let mut l_set = Vec::new();
    let mut p = vec![0; n];
    let mut kappa = vec![1; n];
    let mut excluded_base = BTreeMap::new();
    let mut pendant = BTreeMap::new();

    for v in 0..n {
        kappa[v] = g.components_after_removing(v);
        let paths = pendant_paths(g, v)?;
        p[v] = paths.len();
        match (kappa[v], p[v]) {
            (2, 1) => r1.push(v),
            (2, 0) => r2.push(v),
            (k, _) if k >= 3 => r3.push(v),
            _ => {}
        }
        if !paths.is_empty() {
            // omit the base of the longest path; ties go to the smallest base
            let omit = paths
                .iter()
                .max_by(|a, b| a.len().cmp(&b.len()).then(b.base.cmp(&a.base)))
                .map(|q| q.base)
                .unwrap();
            excluded_base.insert(v, omit);
            l_set.extend(paths.iter().map(|q| q.base).filter(|&b| b != omit));
            pendant.insert(v, paths);
        }
    }
    l_set.sort_unstable();
    l_set.dedup();
    let mut m_set: Vec<usize> = r2.iter().chain(&r3).chain(&l_set).copied().collect();
    m_set.sort_unstable();
    m_set.dedup();
    Ok(StructuralSets {
        r1,
        r2,
        r3,
        l_set,
        m_set,
        p,
        kappa,
        excluded_base,
        pendant,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBounds {
    /// |M|.
    pub bound_m: i64,
    /// Σ δ(G[B]) over blocks that are not pendant-path edges, minus
    /// Σ (μ(p) − 1) over p ∈ R₂ ∪ R₃.
    pub bound_blocks: i64,
}

impl LowerBounds {
    pub fn best(&self) -> i64 {
        self.bound_m.max(self.bound_blocks)
    }
}

/// Blocks that count toward the block bound: everything except edges with an
/// endpoint on a pendant path.
pub fn counted_blocks(g: &Graph, d: &BlockDecomposition, ss: &StructuralSets) -> Vec<usize> {
    let on_pendant = ss.pendant_vertices(g.n());
    (0..d.blocks.len())
        .filter(|&i| {
            let b = &d.blocks[i];
            !(b.len() == 2 && b.vertices.iter().any(|&v| on_pendant[v]))
        })
        .collect()
}

pub fn lower_bounds(g: &Graph, d: &BlockDecomposition, ss: &StructuralSets) -> Result<LowerBounds> {
    if classify_family(g)?.family == Family::Path {
        return Err(Error::PathGraph);
    }
    let delta_sum: i64 = counted_blocks(g, d, ss)
        .into_iter()
        .map(|i| d.blocks[i].min_degree(g) as i64)
        .sum();
    let overlap: i64 = ss
        .r2
        .iter()
        .chain(&ss.r3)
        .map(|&v| d.membership[v] as i64 - 1)
        .sum();
    Ok(LowerBounds {
        bound_m: ss.m_set.len() as i64,
        bound_blocks: delta_sum - overlap,
    })
}

/// A cycle with a fixed traversal direction ("counterclockwise"): start at
/// the smallest label and step to its smaller cycle neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleContext {
    /// Cycle vertices in traversal order.
    pub cycle: Vec<usize>,
    /// Articulation points of the cycle in traversal order, A(C).
    pub articulation: Vec<usize>,
    #[serde(skip)]
    position: BTreeMap<usize, usize>,
}

impl CycleContext {
    /// Context for the unique cycle of a unicyclic graph.
    pub fn unicyclic(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        if g.m() != g.n() {
            return Err(Error::WrongFamily {
                expected: "unicyclic graph",
            });
        }
        let d = BlockDecomposition::new(g)?;
        let block = d
            .blocks
            .iter()
            .find(|b| b.is_cycle())
            .expect("unicyclic graph has a cycle block");
        Self::from_block(g, &block.vertices, |v| d.is_articulation(v))
    }

    /// Context for a cycle block given by its vertex set.
    pub fn from_block(g: &Graph, vertices: &[usize], is_articulation: impl Fn(usize) -> bool) -> Result<Self> {
        let mut members: Vec<usize> = vertices.to_vec();
        members.sort_unstable();
        let inside = |v: usize| members.binary_search(&v).is_ok();
        let cycle_nbrs = |v: usize| -> Vec<usize> {
            g.neighbors(v).iter().copied().filter(|&w| inside(w)).collect()
        };
        if members.len() < 3 || members.iter().any(|&v| cycle_nbrs(v).len() != 2) {
            return Err(Error::InvalidParameter("vertex set is not an induced cycle".into()));
        }
        let start = members[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = cycle_nbrs(start)[0];
        while cur != start {
            order.push(cur);
            let nb = cycle_nbrs(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        if order.len() != members.len() {
            return Err(Error::InvalidParameter("vertex set is not a single cycle".into()));
        }
        let position = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let articulation = order.iter().copied().filter(|&v| is_articulation(v)).collect();
        Ok(CycleContext {
            cycle: order,
            articulation,
            position,
        })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.position.get(&v).copied()
    }

    pub fn at(&self, pos: usize) -> usize {
        self.cycle[pos % self.cycle.len()]
    }

    /// (u↪): the next vertex counterclockwise.
    pub fn next(&self, u: usize) -> usize {
        self.at(self.position[&u] + 1)
    }

    /// (↩u): the next vertex clockwise.
    pub fn prev(&self, u: usize) -> usize {
        self.at(self.position[&u] + self.len() - 1)
    }

    /// (u↪v) as a position interval.
    pub fn open_segment(&self, u: usize, v: usize) -> Segment {
        let (pu, pv) = (self.position[&u], self.position[&v]);
        let l = self.len();
        let gap = (pv + l - pu) % l;
        let len = if gap == 0 { l - 1 } else { gap - 1 };
        Segment {
            start: (pu + 1) % l,
            len,
        }
    }

    pub fn segment_vertices(&self, s: Segment) -> Vec<usize> {
        (0..s.len).map(|i| self.at(s.start + i)).collect()
    }
}

/// A run of consecutive cycle positions, `start .. start + len` mod |C|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub start: usize,
    pub len: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, spider, star};
    use proptest::prelude::*;

    fn paw() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn star_sets() {
        let ss = structural_sets(&star(4)).unwrap();
        assert_eq!(ss.r3, vec![0]);
        assert_eq!(ss.l_set.len(), 3);
        assert_eq!(ss.m_set.len(), 4);
        assert_eq!(ss.p[0], 4);
    }

    #[test]
    fn spider_sets() {
        let g = spider(3, 2);
        let ss = structural_sets(&g).unwrap();
        assert_eq!(ss.r3, vec![0]);
        assert_eq!(ss.r1.len(), 3);
        assert!(ss.r1.iter().all(|&v| g.has_edge(0, v)));
        assert_eq!(ss.l_set.len(), 2);
        assert_eq!(ss.m_set.len(), 3);
    }

    #[test]
    fn paw_sets() {
        let ss = structural_sets(&paw()).unwrap();
        assert_eq!(ss.r1, vec![0]);
        assert!(ss.r2.is_empty() && ss.r3.is_empty() && ss.l_set.is_empty() && ss.m_set.is_empty());
    }

    #[test]
    fn rejects_paths_and_disconnected() {
        assert_eq!(structural_sets(&crate::generate::path(5)), Err(Error::PathGraph));
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(structural_sets(&g), Err(Error::Disconnected));
    }

    fn bounds(g: &Graph) -> LowerBounds {
        let d = BlockDecomposition::new(g).unwrap();
        let ss = structural_sets(g).unwrap();
        lower_bounds(g, &d, &ss).unwrap()
    }

    #[test]
    fn bounds_on_fixtures() {
        assert_eq!(bounds(&cycle(6)), LowerBounds { bound_m: 0, bound_blocks: 2 });
        assert_eq!(bounds(&complete(5)).bound_blocks, 4);
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bounds(&bowtie).bound_blocks, 3);
        assert_eq!(bounds(&paw()).bound_blocks, 2);
    }

    #[test]
    fn cycle_contexts() {
        let c = CycleContext::unicyclic(&cycle(7)).unwrap();
        assert_eq!(c.len(), 7);
        assert!(c.articulation.is_empty());
        assert_eq!(c.cycle[..2], [0, 1]);

        let c = CycleContext::unicyclic(&paw()).unwrap();
        assert_eq!(c.cycle, vec![0, 1, 2]);
        assert_eq!(c.articulation, vec![0]);

        // triangle 0-1-2 with leaves on 1 and 2
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]).unwrap();
        let c = CycleContext::unicyclic(&g).unwrap();
        assert_eq!(c.articulation, vec![1, 2]);

        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(CycleContext::unicyclic(&bowtie).is_err());
        assert!(CycleContext::unicyclic(&crate::generate::path(4)).is_err());
    }

    #[test]
    fn segments() {
        let c = CycleContext::unicyclic(&cycle(6)).unwrap();
        assert_eq!(c.segment_vertices(c.open_segment(0, 3)), vec![1, 2]);
        assert_eq!(c.segment_vertices(c.open_segment(3, 0)), vec![4, 5]);
        assert_eq!(c.segment_vertices(c.open_segment(2, 2)), vec![3, 4, 5, 0, 1]);
        assert!(c.segment_vertices(c.open_segment(0, 1)).is_empty());
        assert_eq!((c.next(5), c.prev(0)), (0, 5));
    }

    proptest! {
        #[test]
        fn segment_lengths_add_up(len in 3usize..20, a in 0usize..20, b in 0usize..20) {
            let c = CycleContext::unicyclic(&cycle(len)).unwrap();
            let (u, v) = (a % len, b % len);
            prop_assume!(u != v);
            let s1 = c.open_segment(u, v);
            let s2 = c.open_segment(v, u);
            prop_assert_eq!(s1.len + s2.len + 2, len);
        }
    }
}
