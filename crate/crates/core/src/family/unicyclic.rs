//! Minimum connected forcing sets of unicyclic graphs.
//!
//! With A(C) = p₁..p_k the articulation points on the cycle C in traversal
//! order, the candidate excluded segments are
//!
//! * D⁰_i = (p_i ↪ p_{i+1}) ∖ f₀(p_i, p_{i+1}) for every i,
//! * D¹_i = (p_i ↪ p_{i+2}) ∖ f₁(p_i, p_{i+1}, p_{i+2}) when p_{i+1} ∈ R₁ (k ≥ 2),
//! * D²_i = (p_i ↪ p_{i+3}) ∖ f₂(p_i, p_{i+3}) when p_{i+1}, p_{i+2} ∈ R₁ are
//!   adjacent (k ≥ 3),
//!
//! with indices taken mod k. Each f only removes end vertices of its segment,
//! so every candidate is again a segment and is handled as a position
//! interval in O(1). The answer is M ∪ (C ∖ D) for a largest candidate D.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::SolveResult;
use crate::graph::Graph;
use crate::structure::{structural_sets, CycleContext, Segment, StructuralSets};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibleSegment {
    /// Segment ends `u`, `v`: the candidate lies inside (u ↪ v).
    pub from: usize,
    pub to: usize,
    /// Vertices in traversal order.
    pub vertices: Vec<usize>,
    /// Articulation points inside the segment.
    pub articulation_count: usize,
    /// 0-based index i of p_i.
    pub index: usize,
    /// Class j: how many articulation points the construction spans.
    pub class: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicSolution {
    #[serde(flatten)]
    pub result: SolveResult,
    pub context: CycleContext,
    /// `None` when the graph is a cycle.
    pub chosen: Option<FeasibleSegment>,
}

struct Evaluator<'a> {
    g: &'a Graph,
    ctx: &'a CycleContext,
    ss: &'a StructuralSets,
}

impl Evaluator<'_> {
    fn p(&self, v: usize) -> usize {
        self.ss.p[v]
    }

    fn adj(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v)
    }

    fn f0(&self, u: usize, v: usize) -> Vec<usize> {
        if (self.p(u) >= 1 && self.p(v) >= 1) || u == v {
            vec![self.ctx.next(u)]
        } else {
            vec![]
        }
    }

    /// The second case reads "(p(u) > 0 and p(v) = 0) or (p(u) = 0 and v = u)".
    fn f2(&self, u: usize, v: usize) -> Vec<usize> {
        let (pu, pv) = (self.p(u), self.p(v));
        if pu > 0 && pv > 0 {
            vec![self.ctx.next(u), self.ctx.prev(v)]
        } else if (pu > 0 && pv == 0) || (pu == 0 && v == u) {
            vec![self.ctx.next(u)]
        } else if pu == 0 && pv > 0 {
            vec![self.ctx.prev(v)]
        } else {
            vec![]
        }
    }

    fn f1(&self, u: usize, v: usize, w: usize) -> Vec<usize> {
        let (uv, vw) = (self.adj(u, v), self.adj(v, w));
        if !uv && !vw {
            self.f2(u, w)
        } else if uv && !vw && self.p(w) > 0 {
            vec![self.ctx.prev(w)]
        } else if !uv && vw && self.p(u) > 0 {
            vec![self.ctx.next(u)]
        } else if uv && vw && u != w && self.p(u) > 0 && self.p(w) > 0 {
            vec![v]
        } else if u == w && uv {
            [self.ctx.next(u), self.ctx.prev(u)]
                .into_iter()
                .filter(|&x| x != v)
                .collect()
        } else {
            vec![]
        }
    }

    /// (u ↪ v) minus `removed`, where `removed` only touches the ends.
    fn cut(&self, u: usize, v: usize, removed: &[usize]) -> Segment {
        let mut s = self.ctx.open_segment(u, v);
        let mut pending: Vec<usize> = removed.to_vec();
        pending.dedup();
        let take = |pending: &mut Vec<usize>, x: usize| -> bool {
            match pending.iter().position(|&r| r == x) {
                Some(i) => {
                    pending.swap_remove(i);
                    true
                }
                None => false,
            }
        };
        while s.len > 0 && take(&mut pending, self.ctx.at(s.start)) {
            s.start = (s.start + 1) % self.ctx.len();
            s.len -= 1;
        }
        while s.len > 0 && take(&mut pending, self.ctx.at(s.start + s.len - 1)) {
            s.len -= 1;
        }
        debug_assert!(
            pending
                .iter()
                .all(|r| !self.ctx.segment_vertices(s).contains(r)),
            "f removed an interior vertex"
        );
        s
    }

    fn candidate(&self, index: usize, class: usize, from: usize, to: usize, seg: Segment) -> FeasibleSegment {
        let vertices = self.ctx.segment_vertices(seg);
        let articulation_count = vertices
            .iter()
            .filter(|v| self.ctx.articulation.contains(v))
            .count();
        FeasibleSegment {
            from,
            to,
            vertices,
            articulation_count,
            index,
            class,
        }
    }

    fn candidates(&self) -> Vec<FeasibleSegment> {
        let a = &self.ctx.articulation;
        let k = a.len();
        let at = |i: usize| a[i % k];
        let mut out = Vec::new();
        for i in 0..k {
            let (u, v) = (at(i), at(i + 1));
            out.push(self.candidate(i, 0, u, v, self.cut(u, v, &self.f0(u, v))));
        }
        if k >= 2 {
            for i in 0..k {
                let (u, v, w) = (at(i), at(i + 1), at(i + 2));
                if self.ss.in_r1(v) {
                    out.push(self.candidate(i, 1, u, w, self.cut(u, w, &self.f1(u, v, w))));
                }
            }
        }
        if k >= 3 {
            for i in 0..k {
                let (u, x, y, v) = (at(i), at(i + 1), at(i + 2), at(i + 3));
                if self.ss.in_r1(x) && self.ss.in_r1(y) && self.adj(x, y) {
                    out.push(self.candidate(i, 2, u, v, self.cut(u, v, &self.f2(u, v))));
                }
            }
        }
        out
    }
}

fn require_unicyclic(g: &Graph) -> Result<()> {
    g.require_connected()?;
    if g.m() != g.n() {
        return Err(Error::WrongFamily {
            expected: "unicyclic graph",
        });
    }
    Ok(())
}

/// Every candidate D^j_i in class-then-index order. Empty for a cycle.
pub fn unicyclic_segments(g: &Graph) -> Result<Vec<FeasibleSegment>> {
    require_unicyclic(g)?;
    let ctx = CycleContext::unicyclic(g)?;
    if ctx.articulation.is_empty() {
        return Ok(Vec::new());
    }
    let ss = structural_sets(g)?;
    Ok(Evaluator { g, ctx: &ctx, ss: &ss }.candidates())
}

/// Z_c of a unicyclic graph with a minimum connected forcing set.
pub fn unicyclic_zc(g: &Graph) -> Result<UnicyclicSolution> {
    let start = Instant::now();
    require_unicyclic(g)?;
    let ctx = CycleContext::unicyclic(g)?;
    if ctx.articulation.is_empty() {
        let mut witness = vec![ctx.cycle[0], ctx.cycle[1]];
        witness.sort_unstable();
        return Ok(UnicyclicSolution {
            result: SolveResult {
                value: 2,
                witness,
                sets_examined: 0,
                elapsed: start.elapsed(),
            },
            context: ctx,
            chosen: None,
        });
    }
    let ss = structural_sets(g)?;
    let candidates = Evaluator { g, ctx: &ctx, ss: &ss }.candidates();
    let mut best = &candidates[0];
    for c in &candidates[1..] {
        if c.vertices.len() > best.vertices.len() {
            best = c;
        }
    }
    let mut in_r = vec![false; g.n()];
    for &v in ss.m_set.iter().chain(&ctx.cycle) {
        in_r[v] = true;
    }
    for &v in &best.vertices {
        in_r[v] = false;
    }
    let witness: Vec<usize> = (0..g.n()).filter(|&v| in_r[v]).collect();
    Ok(UnicyclicSolution {
        result: SolveResult {
            value: witness.len(),
            witness,
            sets_examined: candidates.len() as u64,
            elapsed: start.elapsed(),
        },
        chosen: Some(best.clone()),
        context: ctx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::{is_connected_set, is_forcing_set};
    use crate::generate::cycle;

    #[test]
    fn cycle_needs_two() {
        let s = unicyclic_zc(&cycle(9)).unwrap();
        assert_eq!(s.result.value, 2);
        assert!(s.chosen.is_none());
        assert!(is_forcing_set(&cycle(9), &s.result.witness).unwrap());
    }

    #[test]
    fn paw_wraps_around_single_articulation_point() {
        let paw = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let s = unicyclic_zc(&paw).unwrap();
        assert_eq!(s.result.value, 2);
        assert_eq!(s.result.witness, vec![0, 1]);
        let chosen = s.chosen.unwrap();
        assert_eq!((chosen.class, chosen.from, chosen.to), (0, 0, 0));
    }

    #[test]
    fn triangle_with_two_leaves() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        let s = unicyclic_zc(&g).unwrap();
        assert_eq!(s.result.value, 2);
        assert!(is_connected_set(&g, &s.result.witness).unwrap());
        assert!(is_forcing_set(&g, &s.result.witness).unwrap());
    }

    #[test]
    fn rejects_other_families() {
        let err = Error::WrongFamily { expected: "unicyclic graph" };
        assert_eq!(unicyclic_zc(&crate::generate::path(4)).unwrap_err(), err);
        assert_eq!(unicyclic_zc(&crate::generate::complete(4)).unwrap_err(), err);
    }

    #[test]
    fn candidates_stay_within_two_r1_articulation_points() {
        for seed in 0..300 {
            let g = crate::generate::random_unicyclic(4 + (seed as usize % 9), seed);
            let ss = structural_sets(&g).unwrap();
            for c in unicyclic_segments(&g).unwrap() {
                let aps: Vec<_> = c.vertices.iter().filter(|&&v| g.degree(v) > 2).collect();
                assert!(aps.len() <= 2, "seed {seed}: {c:?}");
                assert!(aps.iter().all(|&&v| ss.in_r1(v)), "seed {seed}: {c:?}");
            }
        }
    }
}
