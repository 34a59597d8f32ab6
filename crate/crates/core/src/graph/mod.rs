//! Simple undirected graphs on dense vertex labels `0..n`.

mod blocks;
mod classify;
pub mod io;
mod pendant;

pub use blocks::{Block, BlockDecomposition, BlockKind};
pub use classify::{classify_family, Classification, Family};
pub use pendant::{pendant_paths, PendantPath};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How [`Graph::build`] treats an edge listed twice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    /// Reject the input.
    #[default]
    Strict,
    /// Keep one copy and count the rest in [`BuildReport::duplicates_dropped`].
    Dedup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BuildReport {
    pub duplicates_dropped: usize,
}

/// A simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    /// Normalized `(u, v)` with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting duplicate edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, DuplicatePolicy::Strict).map(|(g, _)| g)
    }

    pub fn build(
        n: usize,
        edges: &[(usize, usize)],
        policy: DuplicatePolicy,
    ) -> Result<(Self, BuildReport)> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        let mut report = BuildReport::default();
        let mut deduped: Vec<(usize, usize)> = Vec::with_capacity(norm.len());
        for e in norm {
            if deduped.last() == Some(&e) {
                match policy {
                    DuplicatePolicy::Strict => return Err(Error::DuplicateEdge(e.0, e.1)),
                    DuplicatePolicy::Dedup => report.duplicates_dropped += 1,
                }
            } else {
                deduped.push(e);
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &deduped {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok((
            Graph {
                n,
                edges: deduped,
                adj,
            },
            report,
        ))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Component index per vertex, with vertices in `removed` labelled `usize::MAX`.
    pub fn components_without(&self, removed: &[bool]) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if removed.get(s).copied().unwrap_or(false) || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX && !removed.get(w).copied().unwrap_or(false) {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Number of connected components, κ(G).
    pub fn component_count(&self) -> usize {
        self.components_without(&[]).1
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// κ(G − v).
    pub fn components_after_removing(&self, v: usize) -> usize {
        let mut removed = vec![false; self.n];
        removed[v] = true;
        self.components_without(&removed).1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n == 0 {
            Err(Error::EmptyGraph)
        } else if !self.is_connected() {
            Err(Error::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Whether `G[set]` is connected. The empty set is not.
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![set[0]];
        seen[set[0]] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        reached == distinct
    }

    /// The graph with edge `{u, v}` deleted; labels are unchanged.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let e = (u.min(v), u.max(v));
        if !self.edges.contains(&e) {
            return Err(Error::MissingEdge(u, v));
        }
        let rest: Vec<_> = self.edges.iter().copied().filter(|&x| x != e).collect();
        Graph::new(self.n, &rest)
    }

    /// The graph with vertex `v` deleted. Labels above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let rest: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph::new(self.n - 1, &rest)
    }

    /// Whether `{u, v}` is a bridge.
    pub fn is_bridge(&self, u: usize, v: usize) -> Result<bool> {
        let before = self.component_count();
        Ok(self.without_edge(u, v)?.component_count() > before)
    }

    pub fn is_articulation_point(&self, v: usize) -> bool {
        self.components_after_removing(v) > self.component_count()
    }
}

/// Validates a caller-supplied vertex set and returns it sorted and deduplicated.
pub(crate) fn normalize_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    for &v in set {
        g.check_vertex(v)?;
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}
