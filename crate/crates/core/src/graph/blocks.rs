use serde::Serialize;

use super::Graph;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// A single edge (a bridge).
    Edge,
    /// An induced cycle on three or more vertices. Triangles land here.
    Cycle,
    /// A complete graph other than an edge or triangle (also a lone vertex).
    Clique,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted vertex labels.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    pub kind: BlockKind,
    /// All pairs adjacent; true for edges and triangles as well.
    pub complete: bool,
    /// Articulation points of `G` lying in this block, sorted.
    pub articulation_points: Vec<usize>,
    /// At most one articulation point.
    pub outer: bool,
    pub depth: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == BlockKind::Cycle
    }

    /// Minimum degree of the induced block subgraph.
    pub fn min_degree(&self, g: &Graph) -> usize {
        self.vertices
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|w| self.contains(**w)).count())
            .min()
            .unwrap_or(0)
    }

    /// Vertices of the block that are not articulation points of `G`.
    pub fn non_articulation(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .copied()
            .filter(|v| self.articulation_points.binary_search(v).is_err())
    }
}

/// Blocks, articulation points, outer flags, depths and block membership counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub articulation_points: Vec<usize>,
    /// μ(v): number of blocks containing `v`.
    pub membership: Vec<usize>,
}

impl BlockDecomposition {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let mut raw = biconnected_vertex_sets(g);
        for b in &mut raw {
            b.sort_unstable();
            b.dedup();
        }
        raw.sort();

        let n = g.n();
        let mut membership = vec![0; n];
        for b in &raw {
            for &v in b {
                membership[v] += 1;
            }
        }
        let articulation_points: Vec<usize> = (0..n).filter(|&v| membership[v] >= 2).collect();

        let mut blocks: Vec<Block> = raw
            .into_iter()
            .map(|vertices| {
                let mut in_block = vec![false; n];
                for &v in &vertices {
                    in_block[v] = true;
                }
                let degrees: Vec<usize> = vertices
                    .iter()
                    .map(|&v| g.neighbors(v).iter().filter(|&&w| in_block[w]).count())
                    .collect();
                let edge_count = degrees.iter().sum::<usize>() / 2;
                let k = vertices.len();
                let complete = vertices
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| vertices[i + 1..].iter().all(|&w| g.has_edge(u, w)));
                let kind = if k == 2 {
                    BlockKind::Edge
                } else if k >= 3 && edge_count == k && degrees.iter().all(|&d| d == 2) {
                    BlockKind::Cycle
                } else if complete {
                    BlockKind::Clique
                } else {
                    BlockKind::Other
                };
                let aps: Vec<usize> = vertices
                    .iter()
                    .copied()
                    .filter(|&v| membership[v] >= 2)
                    .collect();
                Block {
                    outer: aps.len() <= 1,
                    articulation_points: aps,
                    vertices,
                    edge_count,
                    kind,
                    complete,
                    depth: 0,
                }
            })
            .collect();

        assign_depths(&mut blocks, n);
        Ok(BlockDecomposition {
            blocks,
            articulation_points,
            membership,
        })
    }

    pub fn is_articulation(&self, v: usize) -> bool {
        self.membership[v] >= 2
    }

    /// Indices of blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].contains(v))
            .collect()
    }

    /// Index of the block holding edge `{u, v}`.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.contains(u) && b.contains(v))
    }

    pub fn max_depth(&self) -> usize {
        self.blocks.iter().map(|b| b.depth).max().unwrap_or(0)
    }
}

/// Peels outer blocks round by round; a block gets depth `i` when it is
/// outer in the graph left after `i` rounds.
fn assign_depths(blocks: &mut [Block], n: usize) {
    let mut alive = vec![true; blocks.len()];
    let mut alive_membership = vec![0usize; n];
    for b in blocks.iter() {
        for &v in &b.vertices {
            alive_membership[v] += 1;
        }
    }
    let mut remaining = blocks.len();
    let mut round = 0;
    while remaining > 0 {
        let outer_now: Vec<usize> = (0..blocks.len())
            .filter(|&i| alive[i])
            .filter(|&i| {
                blocks[i]
                    .vertices
                    .iter()
                    .filter(|&&v| alive_membership[v] >= 2)
                    .count()
                    <= 1
            })
            .collect();
        debug_assert!(!outer_now.is_empty());
        for &i in &outer_now {
            blocks[i].depth = round;
            alive[i] = false;
            remaining -= 1;
        }
        for &i in &outer_now {
            for &v in &blocks[i].vertices {
                alive_membership[v] -= 1;
            }
        }
        round += 1;
    }
}

/// Vertex sets of the biconnected components (iterative Hopcroft–Tarjan).
fn biconnected_vertex_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 1 {
        return vec![vec![0]];
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *idx < nbrs.len() {
                let w = nbrs[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            comp.push(a);
                            comp.push(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}
