//! The zero forcing → connected zero forcing reduction.
//!
//! `G′` adds a universal vertex `v*` over `V` plus two leaves `ℓ₁`, `ℓ₂`
//! hanging from `v*`. Then `G` has a zero forcing set of size ≤ k iff `G′`
//! has a connected forcing set of size ≤ k + 2, i.e. Z_c(G′) = Z(G) + 2.

use serde::Serialize;

use crate::error::Result;
use crate::exact::{
    connected_forcing_number_exact, minimum_zero_forcing_sets, zero_forcing_number, SolveResult,
};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionInstance {
    pub original: Graph,
    pub transformed: Graph,
    pub v_star: usize,
    pub l1: usize,
    pub l2: usize,
}

impl ReductionInstance {
    /// Bound in the transformed instance for a source bound `k`.
    pub fn k_prime(&self, k: usize) -> usize {
        k + 2
    }
}

/// Builds `G′`. The input may be disconnected.
pub fn czf_reduction(g: &Graph) -> ReductionInstance {
    let n = g.n();
    let (v_star, l1, l2) = (n, n + 1, n + 2);
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, v_star)));
    edges.push((v_star, l1));
    edges.push((v_star, l2));
    let transformed = Graph::new(n + 3, &edges).expect("gadget edges are simple");
    ReductionInstance {
        original: g.clone(),
        transformed,
        v_star,
        l1,
        l2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub z: SolveResult,
    pub zc_transformed: SolveResult,
    /// Z_c(G′) = Z(G) + 2.
    pub holds: bool,
}

/// Solves both sides exactly (concurrently) and compares.
pub fn verify_reduction(g: &Graph) -> Result<ReductionReport> {
    let inst = czf_reduction(g);
    let (z, zc) = rayon::join(
        || zero_forcing_number(g),
        || connected_forcing_number_exact(&inst.transformed),
    );
    let (z, zc) = (z?, zc?);
    Ok(ReductionReport {
        holds: zc.value == z.value + 2,
        z,
        zc_transformed: zc,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub z: usize,
    pub zc: usize,
    /// Some minimum zero forcing set is connected, i.e. Z(G) = Z_c(G).
    pub equal: bool,
    pub minimum_sets: usize,
    /// First connected minimum zero forcing set, if any.
    pub connected_witness: Option<Vec<usize>>,
}

/// Decides Z(G) = Z_c(G) by enumerating the minimum zero forcing sets and
/// testing each for connectivity.
pub fn equality_report(g: &Graph) -> Result<EqualityReport> {
    let sets = minimum_zero_forcing_sets(g)?;
    let z = sets[0].len();
    let connected_witness = sets.iter().find(|s| g.induces_connected(s)).cloned();
    let zc = match &connected_witness {
        Some(_) => z,
        None => connected_forcing_number_exact(g)?.value,
    };
    Ok(EqualityReport {
        z,
        zc,
        equal: connected_witness.is_some(),
        minimum_sets: sets.len(),
        connected_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::enumerate_connected_forcing_sets;
    use crate::generate::{complete, cycle, path};

    #[test]
    fn gadget_shape() {
        let r = czf_reduction(&complete(3));
        assert_eq!((r.transformed.n(), r.transformed.m()), (6, 8));
        assert_eq!((r.v_star, r.l1, r.l2), (3, 4, 5));
        assert_eq!(r.k_prime(2), 4);

        let empty = Graph::new(2, &[]).unwrap();
        let r = czf_reduction(&empty);
        assert_eq!(r.transformed.degree(r.v_star), 4);
        assert!((0..5).filter(|&v| v != r.v_star).all(|v| r.transformed.degree(v) == 1));

        let r = czf_reduction(&path(3));
        assert_eq!((r.transformed.n(), r.transformed.m()), (6, 7));
        assert!((0..3).all(|v| r.transformed.has_edge(v, r.v_star)));
        for &(u, v) in path(3).edges() {
            assert!(r.transformed.has_edge(u, v));
        }
    }

    #[test]
    fn verified_on_small_graphs() {
        let r = verify_reduction(&complete(3)).unwrap();
        assert_eq!((r.z.value, r.zc_transformed.value, r.holds), (2, 4, true));
        let r = verify_reduction(&path(4)).unwrap();
        assert_eq!((r.z.value, r.zc_transformed.value, r.holds), (1, 3, true));
        let r = verify_reduction(&cycle(5)).unwrap();
        assert_eq!((r.z.value, r.zc_transformed.value, r.holds), (2, 4, true));
    }

    #[test]
    fn equality_examples() {
        let r = equality_report(&cycle(6)).unwrap();
        assert_eq!((r.z, r.zc, r.equal), (2, 2, true));
        let r = equality_report(&crate::generate::star(4)).unwrap();
        assert_eq!((r.z, r.zc, r.equal), (3, 4, false));
        assert_eq!(r.minimum_sets, 4);
        let paw = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let r = equality_report(&paw).unwrap();
        assert_eq!((r.z, r.zc, r.equal), (2, 2, true));
        assert!(paw.induces_connected(r.connected_witness.as_deref().unwrap()));
    }

    #[test]
    fn every_minimal_connected_forcing_set_uses_hub_and_a_leaf() {
        for g in [complete(3), path(4), cycle(5), crate::generate::star(3)] {
            let r = czf_reduction(&g);
            let fam = enumerate_connected_forcing_sets(&r.transformed, true, None).unwrap();
            for s in fam.members() {
                assert!(s.contains(&r.v_star));
                assert!(s.contains(&r.l1) || s.contains(&r.l2));
            }
        }
    }
}
