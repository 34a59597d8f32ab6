use std::time::Instant;

use crate::error::Result;
use crate::exact::SolveResult;
use crate::forcing::ForcingOracle;
use crate::graph::Graph;

/// Starts from `V` and repeatedly drops the smallest-labelled vertex whose
/// removal leaves a connected forcing set. The result is minimal, not
/// necessarily minimum.
pub fn greedy_zc(g: &Graph) -> Result<SolveResult> {
    g.require_connected()?;
    let start = Instant::now();
    let oracle = ForcingOracle::new(g);
    let mut current: Vec<usize> = g.vertices().collect();
    let mut checks = 0;
    'outer: loop {
        if current.len() == 1 {
            break;
        }
        for i in 0..current.len() {
            let mut trial = current.clone();
            trial.remove(i);
            checks += 1;
            if oracle.is_connected_forcing(&trial) {
                current = trial;
                continue 'outer;
            }
        }
        break;
    }
    Ok(SolveResult {
        value: current.len(),
        witness: current,
        sets_examined: checks,
        elapsed: start.elapsed(),
    })
}
