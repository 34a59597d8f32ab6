//! Closed-form Z_c on trees, unicyclic graphs and pendant-free cactus and
//! block graphs, each checked against the exact search.

use zforcing::exact::connected_forcing_number_exact;
use zforcing::family::{block_graph_zc, cactus_zc, greedy_zc, solve_auto, tree_zc, unicyclic_segments, unicyclic_zc};
use zforcing::generate::{random_block, random_cactus, random_outer_cactus, random_tree, random_unicyclic};

fn main() -> zforcing::Result<()> {
    let t = random_tree(12, 1);
    println!("tree: {} (exact {})", tree_zc(&t)?.value, connected_forcing_number_exact(&t)?.value);

    let u = random_unicyclic(12, 2);
    let sol = unicyclic_zc(&u)?;
    println!(
        "unicyclic: {} (exact {}), cycle {:?}",
        sol.result.value,
        connected_forcing_number_exact(&u)?.value,
        sol.context.cycle
    );
    for seg in unicyclic_segments(&u)? {
        println!("  candidate segment {:?} class {}", seg.vertices, seg.class);
    }
    if let Some(best) = &sol.chosen {
        println!("  excluded: {:?}", best.vertices);
    }

    let c = random_cactus(13, 3);
    println!("cactus: {} (exact {})", cactus_zc(&c)?.value, connected_forcing_number_exact(&c)?.value);

    let b = random_block(13, 4);
    println!("block graph: {} (exact {})", block_graph_zc(&b)?.value, connected_forcing_number_exact(&b)?.value);

    let o = random_outer_cactus(13, 5);
    let auto = solve_auto(&o)?;
    println!(
        "outer cactus: greedy {}, {:?} {}",
        greedy_zc(&o)?.value,
        auto.method,
        auto.result.value
    );
    Ok(())
}
