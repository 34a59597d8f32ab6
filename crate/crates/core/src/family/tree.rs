use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::SolveResult;
use crate::graph::{classify_family, Family, Graph};
use crate::structure::structural_sets;

/// Z_c of a tree: 1 for a path (a leaf forces everything), otherwise |M|
/// with M itself as the witness.
pub fn tree_zc(g: &Graph) -> Result<SolveResult> {
    let start = Instant::now();
    let class = classify_family(g)?;
    if !class.is_tree {
        return Err(Error::WrongFamily { expected: "tree" });
    }
    let witness = if class.family == Family::Path {
        let leaf = (0..g.n()).find(|&v| g.degree(v) <= 1).unwrap_or(0);
        vec![leaf]
    } else {
        structural_sets(g)?.m_set
    };
    Ok(SolveResult {
        value: witness.len(),
        witness,
        sets_examined: 0,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path, spider, star};

    #[test]
    fn examples() {
        assert_eq!(tree_zc(&path(7)).unwrap().value, 1);
        assert_eq!(tree_zc(&path(1)).unwrap().witness, vec![0]);
        assert_eq!(tree_zc(&star(4)).unwrap().value, 4);
        assert_eq!(tree_zc(&spider(3, 2)).unwrap().value, 3);
        assert_eq!(tree_zc(&cycle(4)), Err(Error::WrongFamily { expected: "tree" }));
    }
}
