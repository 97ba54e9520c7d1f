//! Fixed-point oracle: computes each (k,h)-core directly from its
//! definition, independently of the bucketed peeling machinery. Intended for
//! cross-checking on graphs up to a couple hundred vertices.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CoreResult, DecomposeStats};
use crate::error::{Error, Result};
use crate::graph::{AliveMask, Graph, VertexId};
use crate::traversal::BfsScratch;

/// Which violating vertex the oracle deletes next. The surviving set is the
/// same for every choice (cores are unique); exposing the knob lets tests
/// check exactly that.
#[derive(Debug, Clone, Copy)]
pub enum OraclePick {
    Lowest,
    Highest,
    Seeded(u64),
}

pub fn naive_oracle(g: &Graph, h: u32) -> Result<CoreResult> {
    naive_oracle_with(g, h, OraclePick::Lowest)
}

pub fn naive_oracle_with(g: &Graph, h: u32, pick: OraclePick) -> Result<CoreResult> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let n = g.vertex_count();
    let mut core = vec![0u32; n];
    let mut scratch = BfsScratch::new(n);
    let mut rng = match pick {
        OraclePick::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };

    for k in 1.. {
        // each level restarts from the full vertex set; every deletion
        // re-derives all alive h-degrees from scratch
        let mut mask = AliveMask::all(n);
        loop {
            let violators: Vec<VertexId> = mask
                .iter_alive()
                .filter(|&v| (scratch.degree(g, &mask, v, h) as u32) < k)
                .collect();
            if violators.is_empty() {
                break;
            }
            let victim = match pick {
                OraclePick::Lowest => violators[0],
                OraclePick::Highest => *violators.last().unwrap(),
                OraclePick::Seeded(_) => *violators.choose(rng.as_mut().unwrap()).unwrap(),
            };
            mask.kill(victim);
        }
        if mask.alive_count() == 0 {
            break;
        }
        for v in mask.iter_alive() {
            core[v as usize] = k;
        }
    }

    Ok(CoreResult {
        h,
        core,
        peel_order: Vec::new(),
        diagnostics: None,
        stats: DecomposeStats::default(),
    })
}
