//! Vertex classes R1, R2, R3, L and M, pendant paths, block depths, and the
//! two lower bounds on Z_c, compared with the exact value.

use zforcing::exact::connected_forcing_number_exact;
use zforcing::generate::random_unicyclic;
use zforcing::graph::BlockDecomposition;
use zforcing::structure::{lower_bounds, structural_sets};

fn main() -> zforcing::Result<()> {
    let g = random_unicyclic(11, 5);
    let ss = structural_sets(&g)?;
    println!("edges: {:?}", g.edges());
    println!("R1 {:?}  R2 {:?}  R3 {:?}", ss.r1, ss.r2, ss.r3);
    println!("L {:?}  M {:?}", ss.l_set, ss.m_set);
    for (v, paths) in &ss.pendant {
        for p in paths {
            println!("pendant path at {v}: {:?}", p.vertices);
        }
    }

    let d = BlockDecomposition::new(&g)?;
    for b in &d.blocks {
        println!("block {:?} kind {:?} depth {}", b.vertices, b.kind, b.depth);
    }

    let bounds = lower_bounds(&g, &d, &ss)?;
    let exact = connected_forcing_number_exact(&g)?.value;
    println!("|M| = {}, block bound = {}, Z_c = {exact}", bounds.bound_m, bounds.bound_blocks);
    assert!(bounds.best() <= exact as i64);
    Ok(())
}
