//! Connected forcing spread on the two fixture families: deleting one edge
//! can raise Z_c by an unbounded amount (G1) or lower it by an unbounded
//! amount (G2).

use zforcing::exact::{spread_zc, SpreadTarget};
use zforcing::generate::{g1_spread, g2_spread};

fn main() -> zforcing::Result<()> {
    for k in 4..=6 {
        let f = g1_spread(k)?;
        let (u, v) = f.deleted_edge;
        let r = spread_zc(&f.graph, SpreadTarget::Edge(u, v))?;
        println!("G1 k={k}: Z_c = {}, after deleting {u}-{v}: {}", r.zc_before, r.zc_after);
    }
    for k in 1..=4 {
        let f = g2_spread(k)?;
        let (u, v) = f.deleted_edge;
        let r = spread_zc(&f.graph, SpreadTarget::Edge(u, v))?;
        println!("G2 k={k}: Z_c = {}, after deleting {u}-{v}: {}", r.zc_before, r.zc_after);
    }
    Ok(())
}
