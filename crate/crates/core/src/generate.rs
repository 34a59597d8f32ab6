//! Graph generators: named fixtures, the two spread families, and seeded
//! random families.
//!
//! Every random generator draws from a `ChaCha8Rng` seeded with the given
//! seed, so a spec always reproduces the same edge list.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generator edges are simple and in range")
}

/// P_n on `0..n`. Panics if `n == 0`.
pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "path needs at least one vertex");
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// C_n in cyclic order `0, 1, …, n−1`. Panics if `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// K_{1,leaves} with center 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &edges)
}

/// K_n. Panics if `n == 0`.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs at least one vertex");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// Center 0 with `legs` paths of `len` vertices each; leg `i` occupies
/// `1 + i·len ..= (i+1)·len`, listed outward.
pub fn spider(legs: usize, len: usize) -> Graph {
    assert!(len >= 1, "spider legs need at least one vertex");
    let mut edges = Vec::new();
    for leg in 0..legs {
        let first = 1 + leg * len;
        edges.push((0, first));
        for j in 1..len {
            edges.push((first + j - 1, first + j));
        }
    }
    build(1 + legs * len, &edges)
}

fn tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Uniform labeled tree on `n` vertices, decoded from a random Prüfer code.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "tree needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build(n, &tree_edges(n, &mut rng))
}

fn add_random_edges(n: usize, edges: &mut Vec<(usize, usize)>, extra: usize, rng: &mut ChaCha8Rng) {
    let mut present: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let max_edges = n * n.saturating_sub(1) / 2;
    for _ in 0..extra {
        if present.len() >= max_edges {
            return;
        }
        loop {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let key = (u.min(v), u.max(v));
            if u != v && present.insert(key) {
                edges.push(key);
                break;
            }
        }
    }
}

/// Random tree plus one extra edge: exactly one cycle. Panics if `n < 3`.
pub fn random_unicyclic(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "unicyclic graph needs at least three vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = tree_edges(n, &mut rng);
    add_random_edges(n, &mut edges, 1, &mut rng);
    build(n, &edges)
}

/// Random tree plus up to `extra` further random edges; always connected.
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    assert!(n >= 1, "graph needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = tree_edges(n, &mut rng);
    add_random_edges(n, &mut edges, extra, &mut rng);
    build(n, &edges)
}

/// Appends a block with `size` new vertices through `anchor`: a cycle or a
/// clique on `anchor` plus the new vertices.
fn attach_block(edges: &mut Vec<(usize, usize)>, next: &mut usize, anchor: usize, size: usize, clique: bool) {
    let members: Vec<usize> = std::iter::once(anchor).chain(*next..*next + size).collect();
    *next += size;
    if clique {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u, v));
            }
        }
    } else {
        for i in 0..members.len() {
            edges.push((members[i], members[(i + 1) % members.len()]));
        }
    }
}

/// Grows a pendant-free graph out of cycle or clique blocks. Each step hangs
/// a new block on an existing vertex, either directly or through a bridge,
/// so every block tree leaf is a cycle or clique with at least three vertices.
fn random_block_tree(n: usize, seed: u64, clique: bool) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_block = if clique { 5 } else { 6 };
    let first: Vec<usize> = (3..=max_block.min(n)).filter(|&s| n - s != 1).collect();
    let first = *first.choose(&mut rng).expect("n ≥ 3 always admits a first block");
    let mut edges = Vec::new();
    let mut next = 1;
    attach_block(&mut edges, &mut next, 0, first - 1, clique);
    while next < n {
        let remaining = n - next;
        let anchor = rng.gen_range(0..next);
        // options are (new vertices in block, via bridge)
        let mut options = Vec::new();
        for s in 2..=max_block - 1 {
            if s <= remaining && remaining - s != 1 {
                options.push((s, false));
            }
            if s < remaining && remaining - s - 1 != 1 {
                options.push((s, true));
            }
        }
        let &(size, bridged) = options.choose(&mut rng).expect("remaining ≥ 2 always admits a block");
        let anchor = if bridged {
            edges.push((anchor, next));
            next += 1;
            next - 1
        } else {
            anchor
        };
        attach_block(&mut edges, &mut next, anchor, size, clique);
    }
    build(n, &edges)
}

/// Pendant-free cactus on exactly `n ≥ 3` vertices.
pub fn random_cactus(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "pendant-free cactus needs at least three vertices");
    random_block_tree(n, seed, false)
}

/// Pendant-free block graph on exactly `n ≥ 3` vertices.
pub fn random_block(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "pendant-free block graph needs at least three vertices");
    random_block_tree(n, seed, true)
}

/// Cactus on `n ≥ 3` vertices whose cycles each meet the rest of the graph in
/// a single vertex: a random tree with cycles hung on its vertices.
pub fn random_outer_cactus(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "cactus needs at least three vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = rng.gen_range(1..=n - 2);
    let mut edges = tree_edges(t, &mut rng);
    let mut next = t;
    while next < n {
        let remaining = n - next;
        let size = match remaining {
            2..=4 => remaining,
            5 => rng.gen_range(2..=3),
            _ => rng.gen_range(2..=4),
        };
        let anchor = rng.gen_range(0..t);
        attach_block(&mut edges, &mut next, anchor, size, false);
    }
    build(n, &edges)
}

/// A spread fixture together with the edge whose deletion is studied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpreadFixture {
    pub graph: Graph,
    pub deleted_edge: (usize, usize),
    pub k: usize,
}

/// C_{2k} on `0..2k` with leaves `2k..2k+3` on `0, 1, k, k+1`: pendants at
/// both ends of two opposite edges. The deleted edge is `(2, 3)`, whose
/// endpoints carry no pendant. Requires `k ≥ 4`.
pub fn g1_spread(k: usize) -> Result<SpreadFixture> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("g1_spread needs k >= 4, got {k}")));
    }
    let c = 2 * k;
    let mut edges: Vec<_> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for (i, &v) in [0, 1, k, k + 1].iter().enumerate() {
        edges.push((v, c + i));
    }
    Ok(SpreadFixture {
        graph: build(c + 4, &edges),
        deleted_edge: (2, 3),
        k,
    })
}

/// P_k on `0..k` with a triangle sharing each end vertex: `{0, k, k+1}` and
/// `{k−1, k+2, k+3}`. For `k = 1` both triangles share vertex 0 (a bowtie).
/// The deleted edge is `(0, k)`. Requires `k ≥ 1`.
pub fn g2_spread(k: usize) -> Result<SpreadFixture> {
    if k < 1 {
        return Err(Error::InvalidParameter("g2_spread needs k >= 1".into()));
    }
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.extend([(0, k), (0, k + 1), (k, k + 1)]);
    edges.extend([(k - 1, k + 2), (k - 1, k + 3), (k + 2, k + 3)]);
    Ok(SpreadFixture {
        graph: build(k + 4, &edges),
        deleted_edge: (0, k),
        k,
    })
}

/// A reproducible generator call. Random cactus and block families are
/// always pendant-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    Complete { n: usize },
    Spider { legs: usize, len: usize },
    RandomTree { n: usize, seed: u64 },
    RandomUnicyclic { n: usize, seed: u64 },
    RandomCactus { n: usize, seed: u64 },
    RandomBlock { n: usize, seed: u64 },
    RandomOuterCactus { n: usize, seed: u64 },
    RandomConnected { n: usize, extra: usize, seed: u64 },
    G1Spread { k: usize },
    G2Spread { k: usize },
}

impl GeneratorSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GeneratorSpec::Path { .. } => "path",
            GeneratorSpec::Cycle { .. } => "cycle",
            GeneratorSpec::Star { .. } => "star",
            GeneratorSpec::Complete { .. } => "complete",
            GeneratorSpec::Spider { .. } => "spider",
            GeneratorSpec::RandomTree { .. } => "random_tree",
            GeneratorSpec::RandomUnicyclic { .. } => "random_unicyclic",
            GeneratorSpec::RandomCactus { .. } => "random_cactus",
            GeneratorSpec::RandomBlock { .. } => "random_block",
            GeneratorSpec::RandomOuterCactus { .. } => "random_outer_cactus",
            GeneratorSpec::RandomConnected { .. } => "random_connected",
            GeneratorSpec::G1Spread { .. } => "g1_spread",
            GeneratorSpec::G2Spread { .. } => "g2_spread",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            GeneratorSpec::RandomTree { seed, .. }
            | GeneratorSpec::RandomUnicyclic { seed, .. }
            | GeneratorSpec::RandomCactus { seed, .. }
            | GeneratorSpec::RandomBlock { seed, .. }
            | GeneratorSpec::RandomOuterCactus { seed, .. }
            | GeneratorSpec::RandomConnected { seed, .. } => Some(seed),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family_name();
        match *self {
            GeneratorSpec::Path { n } | GeneratorSpec::Cycle { n } | GeneratorSpec::Complete { n } => {
                write!(f, "{name}(n={n})")
            }
            GeneratorSpec::Star { leaves } => write!(f, "{name}(leaves={leaves})"),
            GeneratorSpec::Spider { legs, len } => write!(f, "{name}(legs={legs},len={len})"),
            GeneratorSpec::RandomTree { n, seed }
            | GeneratorSpec::RandomUnicyclic { n, seed }
            | GeneratorSpec::RandomCactus { n, seed }
            | GeneratorSpec::RandomBlock { n, seed }
            | GeneratorSpec::RandomOuterCactus { n, seed } => write!(f, "{name}(n={n},seed={seed})"),
            GeneratorSpec::RandomConnected { n, extra, seed } => {
                write!(f, "{name}(n={n},extra={extra},seed={seed})")
            }
            GeneratorSpec::G1Spread { k } | GeneratorSpec::G2Spread { k } => write!(f, "{name}(k={k})"),
        }
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter(format!("{what} must be at least {min}, got {value}")));
    }
    Ok(())
}

/// Checks parameter ranges, then builds the graph.
pub fn generate(spec: GeneratorSpec) -> Result<Graph> {
    use GeneratorSpec::*;
    Ok(match spec {
        Path { n } => {
            at_least("n", n, 1)?;
            path(n)
        }
        Cycle { n } => {
            at_least("n", n, 3)?;
            cycle(n)
        }
        Star { leaves } => {
            at_least("leaves", leaves, 1)?;
            star(leaves)
        }
        Complete { n } => {
            at_least("n", n, 1)?;
            complete(n)
        }
        Spider { legs, len } => {
            at_least("legs", legs, 1)?;
            at_least("len", len, 1)?;
            spider(legs, len)
        }
        RandomTree { n, seed } => {
            at_least("n", n, 1)?;
            random_tree(n, seed)
        }
        RandomUnicyclic { n, seed } => {
            at_least("n", n, 3)?;
            random_unicyclic(n, seed)
        }
        RandomCactus { n, seed } => {
            at_least("n", n, 3)?;
            random_cactus(n, seed)
        }
        RandomBlock { n, seed } => {
            at_least("n", n, 3)?;
            random_block(n, seed)
        }
        RandomOuterCactus { n, seed } => {
            at_least("n", n, 3)?;
            random_outer_cactus(n, seed)
        }
        RandomConnected { n, extra, seed } => {
            at_least("n", n, 1)?;
            random_connected(n, extra, seed)
        }
        G1Spread { k } => g1_spread(k)?.graph,
        G2Spread { k } => g2_spread(k)?.graph,
    })
}
