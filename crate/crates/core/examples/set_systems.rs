//! Set-system axioms on the complements of all connected forcing sets:
//! matroid for a star, greedoid but not matroid for a spider with long legs,
//! neither for a triangle with two pendants.

use zforcing::generate::{spider, star};
use zforcing::setsystem::{check_axioms, AxiomOptions, SetFamily};
use zforcing::Graph;

fn main() -> zforcing::Result<()> {
    let triangle = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])?;
    for (name, g) in [("K1,3", star(3)), ("spider(3, 2)", spider(3, 2)), ("triangle + 2 pendants", triangle)] {
        let fam = SetFamily::connected_forcing_complement(&g)?;
        let r = check_axioms(&fam, AxiomOptions::default())?;
        println!(
            "{name}: M1 {} M2 {} M3 {} -> greedoid {} matroid {}",
            r.m1,
            r.m2,
            r.m3,
            r.paper_greedoid(),
            r.matroid()
        );
        if let Some(w) = r.m2_witness {
            println!("  M2 witness: {:?} in the family, {:?} not", w.superset, w.subset);
        }
        if let Some(w) = r.m3_witness {
            println!("  M3 witness: A = {:?}, maximal {:?} vs {:?}", w.a, w.larger, w.smaller);
        }
    }
    Ok(())
}
