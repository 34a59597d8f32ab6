//! Brute-force oracles for Z(G) and Z_c(G), connected forcing set
//! enumeration, and the connected forcing spread of a vertex or edge.
//!
//! Candidates are searched one cardinality layer at a time. Connected
//! candidates are grown from an anchor vertex using only larger labels,
//! extending by exclusive neighbors, so each connected vertex set is visited
//! exactly once and disconnected sets are never built.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bits::{Bits, WideBits};
use crate::error::{Error, Result};
use crate::forcing::MaskGraph;
use crate::graph::{BlockDecomposition, Graph};
use crate::setsystem::SetFamily;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    /// Sorted; lexicographically smallest among minimum sets for the exact solvers.
    pub witness: Vec<usize>,
    pub sets_examined: u64,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Worker threads for a cardinality layer; 1 runs inline.
    pub jobs: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { jobs: 1 }
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Z(G): minimum zero forcing set, searched by increasing size in
/// lexicographic order.
pub fn zero_forcing_number(g: &Graph) -> Result<SolveResult> {
    zero_forcing_number_with(g, ExactOptions::default())
}

pub fn zero_forcing_number_with(g: &Graph, opts: ExactOptions) -> Result<SolveResult> {
    g.require_connected()?;
    let start = Instant::now();
    let (witness, examined) = if g.n() <= 128 {
        min_forcing_combination(&MaskGraph::<u128>::new(g), opts.jobs)
    } else {
        min_forcing_combination(&MaskGraph::<WideBits>::new(g), opts.jobs)
    };
    Ok(SolveResult {
        value: witness.len(),
        witness,
        sets_examined: examined,
        elapsed: start.elapsed(),
    })
}

fn min_forcing_combination<B: Bits>(mg: &MaskGraph<B>, jobs: usize) -> (Vec<usize>, u64) {
    let n = mg.n;
    let mut examined = 0;
    for k in 1..=n {
        let per_first: Vec<(Option<Vec<usize>>, u64)> = with_pool(jobs, || {
            let run = |f: usize| first_forcing_with_prefix(mg, k, f);
            if jobs <= 1 {
                let mut out = Vec::new();
                for f in 0..=n - k {
                    let r = run(f);
                    let hit = r.0.is_some();
                    out.push(r);
                    if hit {
                        break;
                    }
                }
                out
            } else {
                (0..=n - k).into_par_iter().map(run).collect()
            }
        });
        for (hit, count) in per_first {
            examined += count;
            if let Some(w) = hit {
                return (w, examined);
            }
        }
    }
    unreachable!("V is always forcing")
}

/// First forcing `k`-combination (lexicographic) whose smallest element is `first`.
fn first_forcing_with_prefix<B: Bits>(mg: &MaskGraph<B>, k: usize, first: usize) -> (Option<Vec<usize>>, u64) {
    let n = mg.n;
    let mut idx: Vec<usize> = (0..k).map(|i| first + i).collect();
    if idx[k - 1] >= n {
        return (None, 0);
    }
    let mut examined = 0;
    loop {
        examined += 1;
        if mg.forces_all(&B::from_slice(n, &idx)) {
            return (Some(idx), examined);
        }
        // advance positions 1..k, keeping idx[0] fixed
        let mut i = k;
        loop {
            if i <= 1 {
                return (None, examined);
            }
            i -= 1;
            if idx[i] < n - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every zero forcing set of size Z(G), in lexicographic order.
pub fn minimum_zero_forcing_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let z = zero_forcing_number(g)?.value;
    fn run<B: Bits>(g: &Graph, k: usize) -> Vec<Vec<usize>> {
        let mg = MaskGraph::<B>::new(g);
        let n = g.n();
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if mg.forces_all(&B::from_slice(n, &idx)) {
                out.push(idx.clone());
            }
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - (k - i)) else {
                return out;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(if g.n() <= 128 {
        run::<u128>(g, z)
    } else {
        run::<WideBits>(g, z)
    })
}

/// Z_c(G): minimum connected forcing set.
pub fn connected_forcing_number_exact(g: &Graph) -> Result<SolveResult> {
    connected_forcing_number_exact_with(g, ExactOptions::default())
}

pub fn connected_forcing_number_exact_with(g: &Graph, opts: ExactOptions) -> Result<SolveResult> {
    g.require_connected()?;
    let start = Instant::now();
    let (witness, examined) = if g.n() <= 128 {
        min_connected_forcing(&MaskGraph::<u128>::new(g), opts.jobs)
    } else {
        min_connected_forcing(&MaskGraph::<WideBits>::new(g), opts.jobs)
    };
    Ok(SolveResult {
        value: witness.len(),
        witness,
        sets_examined: examined,
        elapsed: start.elapsed(),
    })
}

fn above_masks<B: Bits>(n: usize) -> Vec<B> {
    (0..n)
        .map(|v| {
            let mut b = B::empty(n);
            for w in v + 1..n {
                b.insert(w);
            }
            b
        })
        .collect()
}

/// Visits every connected vertex set whose smallest label is `anchor` and
/// whose size is at most `cap`, each exactly once.
fn grow_connected<B: Bits>(
    mg: &MaskGraph<B>,
    above: &[B],
    anchor: usize,
    cap: usize,
    visit: &mut dyn FnMut(&B, usize),
) {
    let mut sub = B::empty(mg.n);
    sub.insert(anchor);
    let mut ext = mg.nbr[anchor].clone();
    ext.intersect_with(&above[anchor]);
    let mut closed = mg.nbr[anchor].clone();
    closed.insert(anchor);
    extend(mg, &above[anchor], &mut sub, 1, ext, &closed, cap, visit);
}

#[allow(clippy::too_many_arguments)]
fn extend<B: Bits>(
    mg: &MaskGraph<B>,
    above_anchor: &B,
    sub: &mut B,
    size: usize,
    mut ext: B,
    closed: &B,
    cap: usize,
    visit: &mut dyn FnMut(&B, usize),
) {
    visit(sub, size);
    if size == cap {
        return;
    }
    while let Some(w) = ext.first() {
        ext.remove(w);
        let mut exclusive = mg.nbr[w].clone();
        exclusive.difference_with(closed);
        exclusive.intersect_with(above_anchor);
        let mut next_ext = ext.clone();
        next_ext.union_with(&exclusive);
        let mut next_closed = closed.clone();
        next_closed.union_with(&mg.nbr[w]);
        sub.insert(w);
        extend(mg, above_anchor, sub, size + 1, next_ext, &next_closed, cap, visit);
        sub.remove(w);
    }
}

fn lex_smaller(a: &[usize], b: &[usize]) -> bool {
    a < b
}

fn min_connected_forcing<B: Bits>(mg: &MaskGraph<B>, jobs: usize) -> (Vec<usize>, u64) {
    let n = mg.n;
    let above = above_masks::<B>(n);
    let mut examined = 0;
    for k in 1..=n {
        let layer = |anchor: usize| -> (Option<Vec<usize>>, u64) {
            let mut best: Option<Vec<usize>> = None;
            let mut count = 0;
            grow_connected(mg, &above, anchor, k, &mut |set, size| {
                if size != k {
                    return;
                }
                count += 1;
                if mg.forces_all(set) {
                    let v = set.to_vec();
                    if best.as_ref().is_none_or(|b| lex_smaller(&v, b)) {
                        best = Some(v);
                    }
                }
            });
            (best, count)
        };
        let per_anchor: Vec<(Option<Vec<usize>>, u64)> = with_pool(jobs, || {
            if jobs <= 1 {
                let mut out = Vec::new();
                for a in 0..n {
                    let r = layer(a);
                    let hit = r.0.is_some();
                    out.push(r);
                    if hit {
                        break;
                    }
                }
                out
            } else {
                (0..n).into_par_iter().map(layer).collect()
            }
        });
        for (hit, count) in per_anchor {
            examined += count;
            if let Some(w) = hit {
                return (w, examined);
            }
        }
    }
    unreachable!("V is a connected forcing set of a connected graph")
}

/// All connected vertex sets of size at most `cap`, each exactly once, sorted
/// by size then lexicographically.
pub fn connected_subsets(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
    fn run<B: Bits>(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
        let mg = MaskGraph::<B>::new(g);
        let above = above_masks::<B>(g.n());
        let mut out = Vec::new();
        for a in 0..g.n() {
            grow_connected(&mg, &above, a, cap, &mut |s, _| out.push(s.to_vec()));
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
    if g.n() <= 128 {
        run::<u128>(g, cap)
    } else {
        run::<WideBits>(g, cap)
    }
}

/// Every connected forcing set with at most `size_cap` vertices (all of them
/// when `None`), optionally reduced to the minimal ones: sets where no single
/// vertex can be dropped while staying connected and forcing.
pub fn enumerate_connected_forcing_sets(
    g: &Graph,
    minimal_only: bool,
    size_cap: Option<usize>,
) -> Result<SetFamily> {
    g.require_connected()?;
    let n = g.n();
    let cap = size_cap.unwrap_or(n);
    if cap > n {
        return Err(Error::InvalidParameter(format!("size cap {cap} exceeds n = {n}")));
    }
    let mut members: Vec<Vec<usize>> = if n <= 128 {
        forcing_connected_sets::<u128>(g, cap)
    } else {
        forcing_connected_sets::<WideBits>(g, cap)
    };
    if minimal_only {
        let all: std::collections::HashSet<Vec<usize>> = members.iter().cloned().collect();
        members.retain(|s| {
            (0..s.len()).all(|i| {
                let mut smaller = s.clone();
                smaller.remove(i);
                !all.contains(&smaller)
            })
        });
    }
    SetFamily::new(n, members, false)
}

fn forcing_connected_sets<B: Bits>(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
    let mg = MaskGraph::<B>::new(g);
    let above = above_masks::<B>(g.n());
    let mut out = Vec::new();
    for a in 0..g.n() {
        grow_connected(&mg, &above, a, cap, &mut |s, _| {
            if mg.forces_all(s) {
                out.push(s.to_vec());
            }
        });
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpreadTarget {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpreadReport {
    pub target: SpreadTarget,
    pub zc_before: usize,
    pub zc_after: usize,
    /// Z_c(G) − Z_c(G − target).
    pub spread: i64,
}

/// Connected forcing spread z_c(G; v) or z_c(G; e). Vertex targets must not
/// be articulation points and edge targets must not be bridges.
pub fn spread_zc(g: &Graph, target: SpreadTarget) -> Result<SpreadReport> {
    g.require_connected()?;
    let reduced = match target {
        SpreadTarget::Vertex(v) => {
            g.check_vertex(v)?;
            if g.n() < 2 {
                return Err(Error::InvalidParameter("cannot delete the only vertex".into()));
            }
            if BlockDecomposition::new(g)?.is_articulation(v) {
                return Err(Error::ArticulationTarget(v));
            }
            g.without_vertex(v)?
        }
        SpreadTarget::Edge(u, v) => {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            if g.is_bridge(u, v)? {
                return Err(Error::BridgeTarget(u, v));
            }
            g.without_edge(u, v)?
        }
    };
    let before = crate::family::solve_auto(g)?.result.value;
    let after = crate::family::solve_auto(&reduced)?.result.value;
    Ok(SpreadReport {
        target,
        zc_before: before,
        zc_after: after,
        spread: before as i64 - after as i64,
    })
}
