//! Closed-form and linear-time solvers for Z_c on structured graph families,
//! plus the greedy minimal-set algorithm.

mod cactus;
mod greedy;
mod tree;
mod unicyclic;

pub use cactus::{block_graph_zc, cactus_zc};
pub use greedy::greedy_zc;
pub use tree::tree_zc;
pub use unicyclic::{unicyclic_segments, unicyclic_zc, FeasibleSegment, UnicyclicSolution};

use serde::Serialize;

use crate::error::Result;
use crate::exact::{connected_forcing_number_exact, SolveResult};
use crate::graph::{classify_family, Family, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Tree,
    Unicyclic,
    Cycle,
    BlockGraph,
    Cactus,
    Greedy,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodResult {
    pub method: Method,
    #[serde(flatten)]
    pub result: SolveResult,
}

/// The family solver that applies to `g`, if any.
pub fn applicable_method(g: &Graph) -> Result<Option<Method>> {
    let c = classify_family(g)?;
    Ok(match c.family {
        Family::Path | Family::Tree => Some(Method::Tree),
        Family::Cycle => Some(Method::Cycle),
        Family::Unicyclic => Some(Method::Unicyclic),
        _ if c.pendant_free && c.is_block_graph => Some(Method::BlockGraph),
        _ if c.pendant_free && c.is_cactus => Some(Method::Cactus),
        _ => None,
    })
}

/// Z_c by the matching family solver, falling back to the exact search.
pub fn solve_auto(g: &Graph) -> Result<MethodResult> {
    let method = applicable_method(g)?;
    let result = match method {
        Some(Method::Tree) => tree_zc(g)?,
        Some(Method::Cycle) | Some(Method::Unicyclic) => unicyclic_zc(g)?.result,
        Some(Method::BlockGraph) => block_graph_zc(g)?,
        Some(Method::Cactus) => cactus_zc(g)?,
        _ => connected_forcing_number_exact(g)?,
    };
    Ok(MethodResult {
        method: method.unwrap_or(Method::Exact),
        result,
    })
}
