//! Run the color change rule, print the forces and chains, and show that the
//! derived set does not depend on the order in which forces are applied.

use zforcing::forcing::{derive, is_forcing_set, ForceOrder};
use zforcing::generate::{cycle, spider};
use zforcing::graph::io::to_dot;

fn main() -> zforcing::Result<()> {
    let g = spider(3, 2);
    let set = [0, 1, 2, 3];
    let trace = derive(&g, &set, ForceOrder::Deterministic)?;
    println!("spider(3, 2) from {set:?}");
    for (u, v) in &trace.forces {
        println!("  {u} -> {v}");
    }
    for chain in &trace.chains {
        println!("  chain {chain:?}");
    }
    println!("  forcing: {}", trace.is_complete(&g));

    for seed in 0..5 {
        let t = derive(&g, &set, ForceOrder::Seeded(seed))?;
        assert_eq!(t.derived_set, trace.derived_set);
    }

    let c = cycle(6);
    println!("C6 from {{0, 1}} forcing: {}", is_forcing_set(&c, &[0, 1])?);
    println!("C6 from {{0, 3}} forcing: {}", is_forcing_set(&c, &[0, 3])?);

    let t = derive(&c, &[0, 3], ForceOrder::Deterministic)?;
    let fill: Vec<Option<&str>> = (0..c.n())
        .map(|v| if t.initial_set.contains(&v) { Some("steelblue") } else { None })
        .collect();
    print!("{}", to_dot(&c, Some(&fill)));
    Ok(())
}
