use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::SolveResult;
use crate::graph::{classify_family, BlockDecomposition, Family, Graph};
use crate::structure::CycleContext;

fn finish(mut witness: Vec<usize>, start: Instant) -> SolveResult {
    witness.sort_unstable();
    witness.dedup();
    SolveResult {
        value: witness.len(),
        witness,
        sets_examined: 0,
        elapsed: start.elapsed(),
    }
}

/// Z_c = n − b for a block graph without pendant paths, where b counts the
/// blocks holding at least one non-articulation vertex. The witness drops
/// the smallest such vertex from each of those blocks.
pub fn block_graph_zc(g: &Graph) -> Result<SolveResult> {
    let start = Instant::now();
    let class = classify_family(g)?;
    if class.family == Family::Path {
        return Err(Error::PathGraph);
    }
    if !class.is_block_graph {
        return Err(Error::WrongFamily { expected: "block graph" });
    }
    if !class.pendant_free {
        return Err(Error::HasPendantPaths);
    }
    let d = BlockDecomposition::new(g)?;
    let mut dropped = vec![false; g.n()];
    for b in &d.blocks {
        if let Some(v) = b.non_articulation().next() {
            dropped[v] = true;
        }
    }
    let witness = (0..g.n()).filter(|&v| !dropped[v]).collect();
    Ok(finish(witness, start))
}

/// Z_c for a cactus without pendant paths: 2 for a cycle, otherwise
/// n − Σ|D_C| + b, where D_C is the longest run of non-articulation vertices
/// on cycle C and b the number of outer blocks. The witness removes every
/// D_C and adds back one neighbor of the articulation point of each outer
/// block.
pub fn cactus_zc(g: &Graph) -> Result<SolveResult> {
    let start = Instant::now();
    let class = classify_family(g)?;
    if class.family == Family::Path {
        return Err(Error::PathGraph);
    }
    if !class.is_cactus {
        return Err(Error::WrongFamily { expected: "cactus" });
    }
    if !class.pendant_free {
        return Err(Error::HasPendantPaths);
    }
    if class.family == Family::Cycle {
        let c = CycleContext::unicyclic(g)?;
        return Ok(finish(vec![c.cycle[0], c.cycle[1]], start));
    }
    let d = BlockDecomposition::new(g)?;
    let mut in_r = vec![true; g.n()];
    for b in d.blocks.iter().filter(|b| b.is_cycle()) {
        let ctx = CycleContext::from_block(g, &b.vertices, |v| d.is_articulation(v))?;
        for v in longest_free_run(&ctx) {
            in_r[v] = false;
        }
    }
    for b in d.blocks.iter().filter(|b| b.outer) {
        let ap = b.articulation_points[0];
        let q = b
            .vertices
            .iter()
            .copied()
            .find(|&v| v != ap && g.has_edge(v, ap))
            .expect("outer block has a neighbor of its articulation point");
        in_r[q] = true;
    }
    let witness = (0..g.n()).filter(|&v| in_r[v]).collect();
    Ok(finish(witness, start))
}

/// Longest segment of the cycle free of articulation points; first in
/// traversal order on ties.
pub(crate) fn longest_free_run(ctx: &CycleContext) -> Vec<usize> {
    let l = ctx.len();
    let aps = &ctx.articulation;
    match aps.len() {
        0 => ctx.cycle.clone(),
        1 => ctx.segment_vertices(ctx.open_segment(aps[0], aps[0])),
        k => {
            let mut best = ctx.open_segment(aps[0], aps[1 % k]);
            for i in 1..k {
                let s = ctx.open_segment(aps[i], aps[(i + 1) % k]);
                if s.len > best.len {
                    best = s;
                }
            }
            debug_assert!(best.len < l);
            ctx.segment_vertices(best)
        }
    }
}
