//! Worker pool for the data-parallel blocks of the decomposition: bulk
//! h-degree passes and the per-removal refresh of affected neighbors.
//!
//! Work items are pure per-source BFS computations collected in input order;
//! every bucket mutation happens afterwards in a serial commit phase, so the
//! result is identical for any worker count (including the sequential build
//! without the `parallel` feature).

use crate::graph::{AliveMask, Graph, VertexId};
use crate::traversal::BfsScratch;

/// Below this many items a parallel dispatch costs more than it saves.
const PARALLEL_CUTOFF: usize = 64;

pub struct Workers {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
    threads: usize,
}

impl Workers {
    /// A pool of `threads` workers. `threads == 1` always runs inline; with
    /// the `parallel` feature disabled any requested width degrades to 1.
    pub fn new(threads: usize) -> Workers {
        let threads = threads.max(1);
        #[cfg(feature = "parallel")]
        {
            let pool = if threads > 1 {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .ok()
            } else {
                None
            };
            let threads = if pool.is_some() { threads } else { 1 };
            Workers { pool, threads }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = threads;
            Workers { threads: 1 }
        }
    }

    pub fn sequential() -> Workers {
        Workers::new(1)
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    /// Masked h-degree of every vertex in `sources`, in input order, plus the
    /// total number of point-to-point distances computed.
    pub fn degrees(
        &self,
        g: &Graph,
        mask: &AliveMask,
        h: u32,
        sources: &[VertexId],
        seq_scratch: &mut BfsScratch,
    ) -> (Vec<u32>, u64) {
        #[cfg(feature = "parallel")]
        if sources.len() >= PARALLEL_CUTOFF {
            if let Some(pool) = &self.pool {
                let n = g.vertex_count();
                let pairs: Vec<u32> = pool.install(|| {
                    use rayon::prelude::*;
                    sources
                        .par_iter()
                        .map_init(
                            || BfsScratch::new(n),
                            |scratch, &v| scratch.degree(g, mask, v, h) as u32,
                        )
                        .collect()
                });
                let visited: u64 = pairs.iter().map(|&d| d as u64).sum();
                return (pairs, visited);
            }
        }
        let mut out = Vec::with_capacity(sources.len());
        let mut visited = 0u64;
        for &v in sources {
            let d = seq_scratch.degree(g, mask, v, h) as u32;
            visited += d as u64;
            out.push(d);
        }
        (out, visited)
    }

    /// Applies `f` to every source's masked h-neighborhood, in input order.
    /// Returns the per-source values and the total traversal size.
    pub fn map_neighborhoods<T, F>(
        &self,
        g: &Graph,
        mask: &AliveMask,
        h: u32,
        sources: &[VertexId],
        seq_scratch: &mut BfsScratch,
        f: F,
    ) -> (Vec<T>, u64)
    where
        T: Send,
        F: Fn(VertexId, &[(VertexId, u32)]) -> T + Sync,
    {
        #[cfg(feature = "parallel")]
        if sources.len() >= PARALLEL_CUTOFF {
            if let Some(pool) = &self.pool {
                let n = g.vertex_count();
                let results: Vec<(T, u64)> = pool.install(|| {
                    use rayon::prelude::*;
                    sources
                        .par_iter()
                        .map_init(
                            || (BfsScratch::new(n), Vec::new()),
                            |(scratch, buf), &v| {
                                buf.clear();
                                let cnt = scratch.neighborhood_into(g, mask, v, h, buf);
                                (f(v, buf), cnt as u64)
                            },
                        )
                        .collect()
                });
                let mut out = Vec::with_capacity(results.len());
                let mut visited = 0u64;
                for (t, c) in results {
                    out.push(t);
                    visited += c;
                }
                return (out, visited);
            }
        }
        let mut out = Vec::with_capacity(sources.len());
        let mut visited = 0u64;
        let mut buf = Vec::new();
        for &v in sources {
            buf.clear();
            visited += seq_scratch.neighborhood_into(g, mask, v, h, &mut buf) as u64;
            out.push(f(v, &buf));
        }
        (out, visited)
    }
}
