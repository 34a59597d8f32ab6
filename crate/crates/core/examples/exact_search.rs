//! Exact zero forcing and connected zero forcing numbers by exhaustive search,
//! and the full family of minimal connected forcing sets.

use zforcing::exact::{
    connected_forcing_number_exact, connected_forcing_number_exact_with, enumerate_connected_forcing_sets,
    zero_forcing_number, ExactOptions,
};
use zforcing::generate::{complete, random_connected, star};

fn main() -> zforcing::Result<()> {
    for (name, g) in [("K5", complete(5)), ("K1,4", star(4))] {
        let z = zero_forcing_number(&g)?;
        let zc = connected_forcing_number_exact(&g)?;
        println!("{name}: Z = {} {:?}, Z_c = {} {:?}", z.value, z.witness, zc.value, zc.witness);
    }

    let g = random_connected(16, 6, 7);
    let r = connected_forcing_number_exact_with(&g, ExactOptions { jobs: 4 })?;
    println!(
        "random graph on 16 vertices: Z_c = {} after {} candidate sets in {:.3}s",
        r.value,
        r.sets_examined,
        r.elapsed.as_secs_f64()
    );

    let fam = enumerate_connected_forcing_sets(&star(3), true, None)?;
    println!("minimal connected forcing sets of K1,3:");
    for s in fam.members() {
        println!("  {s:?}");
    }
    Ok(())
}
