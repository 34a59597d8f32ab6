//! Reading and writing graphs: edge lists, DIMACS and DOT, plus family
//! classification.

use zforcing::graph::classify_family;
use zforcing::graph::io::{parse_auto, to_dot, write_dimacs, write_edge_list};
use zforcing::DuplicatePolicy;

fn main() -> zforcing::Result<()> {
    let text = "# paw\n4 4\n0 1\n1 2\n0 2\n0 3\n";
    let g = parse_auto(text, DuplicatePolicy::Strict)?;
    let c = classify_family(&g)?;
    println!("family {}, pendant-free {}", c.family, c.pendant_free);

    let dimacs = write_dimacs(&g);
    print!("{dimacs}");
    let back = parse_auto(&dimacs, DuplicatePolicy::Strict)?;
    assert_eq!(back, g);
    print!("{}", write_edge_list(&back));
    print!("{}", to_dot(&g, None));

    let err = parse_auto("3 2\n0 1\n0 1\n", DuplicatePolicy::Strict).unwrap_err();
    println!("strict parse: {err}");
    let g = parse_auto("3 2\n0 1\n0 1\n", DuplicatePolicy::Dedup)?;
    println!("dedup parse: {} edges", g.m());
    Ok(())
}
