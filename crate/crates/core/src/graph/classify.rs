use serde::Serialize;

use super::pendant::pendant_paths_unchecked;
use super::{BlockDecomposition, BlockKind, Graph};
use crate::error::Result;

/// Most specific family tag; checked in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Tree,
    Unicyclic,
    BlockGraph,
    Cactus,
    General,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Tree => "tree",
            Family::Unicyclic => "unicyclic",
            Family::BlockGraph => "block_graph",
            Family::Cactus => "cactus",
            Family::General => "general",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub family: Family,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    /// Every block is a cycle or a bridge.
    pub is_cactus: bool,
    /// Every block is a clique.
    pub is_block_graph: bool,
    /// No vertex has a pendant path attached.
    pub pendant_free: bool,
}

pub fn classify_family(g: &Graph) -> Result<Classification> {
    let d = BlockDecomposition::new(g)?;
    Ok(classify_with(g, &d))
}

pub(crate) fn classify_with(g: &Graph, d: &BlockDecomposition) -> Classification {
    let (n, m) = (g.n(), g.m());
    let is_tree = m + 1 == n;
    let is_unicyclic = m == n;
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let is_cactus = d
        .blocks
        .iter()
        .all(|b| matches!(b.kind, BlockKind::Edge | BlockKind::Cycle) || b.len() == 1);
    let is_block_graph = d.blocks.iter().all(|b| b.complete);
    let pendant_free = (0..n).all(|v| pendant_paths_unchecked(g, v).is_empty());
    let family = if is_tree && max_deg <= 2 {
        Family::Path
    } else if is_unicyclic && max_deg == 2 {
        Family::Cycle
    } else if is_tree {
        Family::Tree
    } else if is_unicyclic {
        Family::Unicyclic
    } else if is_block_graph {
        Family::BlockGraph
    } else if is_cactus {
        Family::Cactus
    } else {
        Family::General
    };
    Classification {
        family,
        is_tree,
        is_unicyclic,
        is_cactus,
        is_block_graph,
        pendant_free,
    }
}
