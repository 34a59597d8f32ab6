//! The reduction from zero forcing to connected zero forcing: add a vertex
//! adjacent to everything plus two leaves on it, and Z_c(G') = Z(G) + 2.

use zforcing::generate::{cycle, random_connected};
use zforcing::graph::io::write_edge_list;
use zforcing::reduction::{czf_reduction, verify_reduction};

fn main() -> zforcing::Result<()> {
    let inst = czf_reduction(&cycle(5));
    println!("G' for C5 (hub {}, leaves {} and {}):", inst.v_star, inst.l1, inst.l2);
    print!("{}", write_edge_list(&inst.transformed));

    for seed in 0..5 {
        let g = random_connected(7, 3, seed);
        let r = verify_reduction(&g)?;
        println!(
            "seed {seed}: Z(G) = {}, Z_c(G') = {}, holds: {}",
            r.z.value, r.zc_transformed.value, r.holds
        );
    }
    Ok(())
}
