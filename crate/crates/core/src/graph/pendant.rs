use serde::Serialize;

use super::Graph;
use crate::error::Result;

/// A pendant path hanging off `attach`: a path component of `G − attach`
/// whose only contact with `attach` is its end vertex `base`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PendantPath {
    pub attach: usize,
    pub base: usize,
    /// Ordered from `base` to the leaf.
    pub vertices: Vec<usize>,
}

impl PendantPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn leaf(&self) -> usize {
        *self.vertices.last().expect("pendant path is nonempty")
    }
}

/// All pendant paths attached at `v`, ordered by base label.
pub fn pendant_paths(g: &Graph, v: usize) -> Result<Vec<PendantPath>> {
    g.require_connected()?;
    g.check_vertex(v)?;
    Ok(pendant_paths_unchecked(g, v))
}

pub(crate) fn pendant_paths_unchecked(g: &Graph, v: usize) -> Vec<PendantPath> {
    g.neighbors(v)
        .iter()
        .filter_map(|&base| walk_from_base(g, v, base))
        .collect()
}

/// Follows degree-2 vertices away from `attach` until a leaf. Fails on a
/// branch vertex or on returning to `attach`.
fn walk_from_base(g: &Graph, attach: usize, base: usize) -> Option<PendantPath> {
    let mut vertices = vec![base];
    let (mut prev, mut cur) = (attach, base);
    loop {
        match g.degree(cur) {
            1 => {
                return Some(PendantPath {
                    attach,
                    base,
                    vertices,
                })
            }
            2 => {
                let nbrs = g.neighbors(cur);
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                if next == attach {
                    return None;
                }
                vertices.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}
