//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use zforcing::exact::{connected_forcing_number_exact, zero_forcing_number};
use zforcing::family::{block_graph_zc, cactus_zc, greedy_zc, tree_zc, unicyclic_zc};
use zforcing::forcing::{derive, is_connected_set, is_forcing_set, ForceOrder};
use zforcing::generate::{
    complete, cycle, g1_spread, g2_spread, random_block, random_cactus, random_connected, random_outer_cactus,
    random_tree, random_unicyclic, spider, star,
};
use zforcing::graph::{classify_family, pendant_paths, BlockDecomposition, Family};
use zforcing::reduction::verify_reduction;
use zforcing::setsystem::{check_axioms, AxiomOptions, SetFamily};
use zforcing::structure::{lower_bounds, structural_sets};
use zforcing::Graph;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if let Some(limit) = limit {
        if took > limit {
            o.pass = false;
            o.detail = format!("{}; took {:.1}s, limit {:.0}s", o.detail, took.as_secs_f64(), limit.as_secs_f64());
        }
    }
    (o, took)
}

fn exact(g: &Graph) -> usize {
    connected_forcing_number_exact(g).unwrap().value
}

fn valid_witness(g: &Graph, w: &[usize]) -> bool {
    is_forcing_set(g, w).unwrap() && is_connected_set(g, w).unwrap()
}

/// Runs `check` over seeds in parallel and reports the first mismatch.
fn oracle_match(count: u64, check: impl Fn(u64) -> Option<String> + Sync) -> Outcome {
    let failures: Vec<String> = (0..count).into_par_iter().filter_map(&check).collect();
    match failures.first() {
        None => outcome(true, format!("{count} instances agree")),
        Some(f) => outcome(false, format!("{} of {count} mismatched; first: {f}", failures.len())),
    }
}

fn criterion_1() -> Outcome {
    oracle_match(500, |seed| {
        let n = 4 + (seed as usize % 9);
        let g = random_tree(n, seed);
        let r = tree_zc(&g).unwrap();
        let e = exact(&g);
        (r.value != e || !valid_witness(&g, &r.witness))
            .then(|| format!("tree n={n} seed={seed}: formula {} exact {e}", r.value))
    })
}

fn criterion_2() -> Outcome {
    oracle_match(500, |seed| {
        let n = 4 + (seed as usize % 9);
        let g = random_unicyclic(n, seed);
        let r = unicyclic_zc(&g).unwrap().result;
        let e = exact(&g);
        (r.value != e || !valid_witness(&g, &r.witness))
            .then(|| format!("unicyclic n={n} seed={seed}: formula {} exact {e}", r.value))
    })
}

fn criterion_3() -> Outcome {
    let block = oracle_match(200, |seed| {
        let n = 4 + (seed as usize % 10);
        let g = random_block(n, seed);
        let r = block_graph_zc(&g).unwrap();
        let e = exact(&g);
        (r.value != e || !valid_witness(&g, &r.witness))
            .then(|| format!("block n={n} seed={seed}: formula {} exact {e}", r.value))
    });
    let cactus = oracle_match(200, |seed| {
        let n = 4 + (seed as usize % 10);
        let g = random_cactus(n, seed);
        let r = cactus_zc(&g).unwrap();
        let e = exact(&g);
        (r.value != e || !valid_witness(&g, &r.witness))
            .then(|| format!("cactus n={n} seed={seed}: formula {} exact {e}", r.value))
    });
    outcome(
        block.pass && cactus.pass,
        format!("block graphs: {}; cactus graphs: {}", block.detail, cactus.detail),
    )
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for k in 4..=6 {
        let f = g1_spread(k).unwrap();
        let (u, v) = f.deleted_edge;
        let before = exact(&f.graph);
        let after = exact(&f.graph.without_edge(u, v).unwrap());
        if (before, after) != (4, k + 4) {
            bad.push(format!("G1 k={k}: {before}, {after}"));
        }
    }
    for k in 1..=4 {
        let f = g2_spread(k).unwrap();
        let (u, v) = f.deleted_edge;
        let before = exact(&f.graph);
        let after = exact(&f.graph.without_edge(u, v).unwrap());
        if (before, after) != (k + 2, 2) {
            bad.push(format!("G2 k={k}: {before}, {after}"));
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "G1: 4 and k+4 for k=4..6; G2: k+2 and 2 for k=1..4".to_string()
        } else {
            bad.join("; ")
        },
    )
}

/// Canonical form of an edge mask on `n` vertices: the smallest mask over all
/// vertex relabelings.
fn canonical(n: usize, pairs: &[(usize, usize)], mask: u32, perms: &[Vec<usize>]) -> u32 {
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).map(|v| if u == v { 0 } else { index(u, v) }).collect())
        .collect();
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .fold(0u32, |m, (_, &(u, v))| m | 1 << table[p[u]][p[v]])
        })
        .min()
        .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let classes: HashSet<u32> = (0..1u32 << pairs.len())
        .into_par_iter()
        .filter(|&mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).unwrap().is_connected()
        })
        .map(|mask| canonical(n, &pairs, mask, &perms))
        .collect();
    let mut reps: Vec<u32> = classes.into_iter().collect();
    reps.sort_unstable();
    reps.into_iter()
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

fn criterion_5() -> Outcome {
    // connected graphs up to isomorphism on 1..=6 vertices
    const CLASSES: [usize; 6] = [1, 1, 2, 6, 21, 112];
    let mut graphs = Vec::new();
    for n in 1..=6 {
        let reps = connected_graphs(n);
        if reps.len() != CLASSES[n - 1] {
            return outcome(false, format!("found {} classes on {n} vertices, expected {}", reps.len(), CLASSES[n - 1]));
        }
        graphs.extend(reps);
    }
    let exhaustive = graphs.len();
    graphs.extend((0..200).map(|seed| random_connected(7, (seed % 8) as usize, seed)));
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let r = verify_reduction(g).unwrap();
            (!r.holds).then(|| format!("{:?}: Z={} Z_c(G')={}", g.edges(), r.z.value, r.zc_transformed.value))
        })
        .collect();
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("Z_c(G') = Z(G) + 2 on all {exhaustive} connected graphs with n <= 6 and 200 samples with n = 7")
        } else {
            format!("{} failures; first {}", bad.len(), bad[0])
        },
    )
}

/// Trees whose internal vertices all have degree at least 3, so every
/// pendant path is a single leaf.
fn short_leg_tree(seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let s = rng.gen_range(1..=3);
    let skeleton = random_tree(s, seed);
    let mut edges = skeleton.edges().to_vec();
    let mut next = s;
    for v in 0..s {
        let need = 3usize.saturating_sub(skeleton.degree(v));
        for _ in 0..need {
            edges.push((v, next));
            next += 1;
        }
    }
    while next < 9 && rng.gen_bool(0.5) {
        edges.push((rng.gen_range(0..s), next));
        next += 1;
    }
    Graph::new(next, &edges).unwrap()
}

fn criterion_6() -> Outcome {
    let opts = AxiomOptions::default();
    let report = |g: &Graph| check_axioms(&SetFamily::connected_forcing_complement(g).unwrap(), opts).unwrap();
    let mut notes = Vec::new();
    let mut pass = true;

    let trees: Vec<Graph> = (0..)
        .map(|seed: u64| random_tree(4 + (seed as usize % 6), seed))
        .filter(|g| classify_family(g).unwrap().family == Family::Tree)
        .take(50)
        .collect();
    let greedoid = trees.par_iter().filter(|g| report(g).paper_greedoid()).count();
    pass &= greedoid == trees.len();
    notes.push(format!("{greedoid}/{} non-path trees satisfy M1+M3", trees.len()));

    let short: Vec<Graph> = (0..50).map(short_leg_tree).collect();
    let all_short = short
        .iter()
        .all(|g| g.vertices().all(|v| pendant_paths(g, v).unwrap().iter().all(|p| p.len() == 1)));
    let matroid = short.par_iter().filter(|g| report(g).matroid()).count();
    pass &= all_short && matroid == short.len();
    notes.push(format!("{matroid}/{} trees with unit pendant paths are matroids", short.len()));

    let blocks: Vec<Graph> = (0..50).map(|seed| random_block(3 + (seed as usize % 7), seed)).collect();
    let matroid = blocks.par_iter().filter(|g| report(g).matroid()).count();
    pass &= matroid == blocks.len();
    notes.push(format!("{matroid}/{} pendant-free block graphs are matroids", blocks.len()));

    // triangle 0-1-2 with a pendant on 0 and on 1
    let triangle = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
    let r = report(&triangle);
    let witness_ok = r.m3_witness.as_ref().is_some_and(|w| {
        let dropped = |s: &[usize]| -> Vec<usize> { (0..5).filter(|v| !s.contains(v)).collect() };
        let three = dropped(&w.smaller);
        let two = dropped(&w.larger);
        three.len() == 3
            && three.contains(&0)
            && three.contains(&1)
            && (three.contains(&3) || three.contains(&4))
            && two.len() == 2
    });
    pass &= !r.m3 && witness_ok;
    if let Some(w) = &r.m3_witness {
        notes.push(format!(
            "triangle fails M3: minimal connected forcing sets {:?} and {:?}",
            (0..5).filter(|v| !w.smaller.contains(v)).collect::<Vec<_>>(),
            (0..5).filter(|v| !w.larger.contains(v)).collect::<Vec<_>>()
        ));
    }

    let r = report(&spider(3, 2));
    pass &= r.m1 && r.m3 && !r.m2;
    notes.push(format!("spider(3, 2): M2 {}", if r.m2 { "holds" } else { "fails" }));
    outcome(pass, notes.join("; "))
}

fn criterion_7() -> Outcome {
    let mut corpus: Vec<Graph> = Vec::new();
    for seed in 0..100u64 {
        let n = 4 + (seed as usize % 9);
        corpus.push(random_tree(n, seed));
        corpus.push(random_unicyclic(n, seed));
        corpus.push(random_cactus(n, seed));
        corpus.push(random_block(n, seed));
        corpus.push(random_connected(n, 3, seed));
    }
    let bounds = |g: &Graph| {
        let ss = structural_sets(g).ok()?;
        let d = BlockDecomposition::new(g).unwrap();
        Some(lower_bounds(g, &d, &ss).unwrap())
    };
    let bad: Vec<String> = corpus
        .par_iter()
        .filter_map(|g| {
            let b = bounds(g)?;
            let e = exact(g) as i64;
            (b.bound_m > e || b.bound_blocks > e).then(|| format!("{:?}: bounds {b:?} exact {e}", g.edges()))
        })
        .collect();
    let mut tight = true;
    for n in 3..=10 {
        for g in [cycle(n), complete(n)] {
            tight &= bounds(&g).map(|b| b.best()) == Some(exact(&g) as i64);
        }
    }
    outcome(
        bad.is_empty() && tight,
        format!(
            "{} of {} instances violate a bound; tight on C_n and K_n for n=3..10: {tight}",
            bad.len(),
            corpus.len()
        ),
    )
}

fn chains_partition(g: &Graph, chains: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.n()];
    for chain in chains {
        for &v in chain {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        if chain.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return false;
        }
    }
    seen.into_iter().all(|s| s)
}

fn criterion_8() -> Outcome {
    let mut fixtures: Vec<Graph> = vec![
        cycle(7),
        complete(6),
        star(5),
        spider(3, 3),
        g1_spread(4).unwrap().graph,
        g2_spread(3).unwrap().graph,
    ];
    fixtures.extend((0..14).map(|seed| random_connected(8 + seed as usize % 6, 4, seed)));
    let bad: Vec<String> = fixtures
        .par_iter()
        .enumerate()
        .flat_map(|(i, g)| {
            let minimum = zero_forcing_number(g).unwrap().witness;
            let partial: Vec<usize> = (0..g.n()).step_by(3).collect();
            let mut bad = Vec::new();
            for set in [minimum, partial] {
                let reference = derive(g, &set, ForceOrder::Deterministic).unwrap();
                for seed in 0..1000 {
                    let t = derive(g, &set, ForceOrder::Seeded(seed * 31 + i as u64)).unwrap();
                    if t.derived_set != reference.derived_set {
                        bad.push(format!("fixture {i} seed {seed}: derived sets differ"));
                    }
                    if t.is_complete(g) && !chains_partition(g, &t.chains) {
                        bad.push(format!("fixture {i} seed {seed}: chains do not partition V into paths"));
                    }
                }
            }
            bad
        })
        .collect();
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} fixtures x 2 sets x 1000 orders agree", fixtures.len())
        } else {
            format!("{} failures; first {}", bad.len(), bad[0])
        },
    )
}

fn criterion_9() -> Outcome {
    let outer = oracle_match(100, |seed| {
        let n = 4 + (seed as usize % 10);
        let g = random_outer_cactus(n, seed);
        let r = greedy_zc(&g).unwrap();
        let e = exact(&g);
        (r.value != e || !valid_witness(&g, &r.witness))
            .then(|| format!("outer cactus n={n} seed={seed}: greedy {} exact {e}", r.value))
    });
    let above = std::sync::atomic::AtomicUsize::new(0);
    let general = oracle_match(100, |seed| {
        let g = random_connected(5 + (seed as usize % 8), 1 + (seed as usize % 5), seed);
        let w = greedy_zc(&g).unwrap().witness;
        let minimal = valid_witness(&g, &w)
            && (0..w.len()).all(|i| {
                let mut smaller = w.clone();
                smaller.remove(i);
                smaller.is_empty() || !valid_witness(&g, &smaller)
            });
        let e = exact(&g);
        if w.len() > e {
            above.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        (!minimal || w.len() < e).then(|| format!("general seed={seed}: greedy set {w:?} not minimal"))
    });
    outcome(
        outer.pass && general.pass,
        format!(
            "outer cactus: {}; general graphs: {} ({} above the minimum)",
            outer.detail,
            general.detail,
            above.into_inner()
        ),
    )
}

type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("tree formula = exact", Some(120), criterion_1),
        ("unicyclic formula = exact", Some(300), criterion_2),
        ("block and cactus formulas = exact", Some(300), criterion_3),
        ("spread family values", None, criterion_4),
        ("reduction Z_c(G') = Z(G) + 2", Some(600), criterion_5),
        ("set-system axioms", None, criterion_6),
        ("lower bounds", None, criterion_7),
        ("derived-set uniqueness and chains", None, criterion_8),
        ("greedy optimality on outer cactus graphs", None, criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let (o, took) = timed(limit.map(Duration::from_secs), run);
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} [{}] {name} ({:.2}s): {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
