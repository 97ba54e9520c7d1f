//! Exact (k,h)-core decomposition.
//!
//! Three algorithms compute identical per-vertex core indices:
//!
//! * [`decompose_hbz`] — bucketed peeling that refreshes the h-degree of
//!   every neighbor of a removed vertex,
//! * [`decompose_hlb`] — seeds buckets with a lower bound so a vertex's
//!   h-degree is not maintained before the peeling level reaches that bound,
//! * [`decompose_hlbub`] — additionally computes an upper bound and splits
//!   the work into independent top-down intervals, cleaning each interval's
//!   candidate set before peeling it.
//!
//! [`naive_oracle`] is a deliberately slow fixed-point implementation of the
//! definition, kept free of the incremental machinery so the fast algorithms
//! can be checked against it.

mod bounds;
mod oracle;
mod peel;

pub use bounds::{compute_lb1, compute_lb2, compute_ub, improve_lb};
pub use oracle::{naive_oracle, naive_oracle_with, OraclePick};
pub use peel::{core_decomp_interval, decompose_hbz, decompose_hlb, decompose_hlbub, PeelState};

use std::str::FromStr;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::exec::Workers;
use crate::graph::{Graph, VertexId};
use crate::traversal::BfsScratch;

/// Shared mutable state threaded through one decomposition run.
pub(crate) struct WorkCtx<'w> {
    pub workers: &'w Workers,
    pub scratch: BfsScratch,
    pub distance_computations: u64,
}

impl<'w> WorkCtx<'w> {
    pub fn new(workers: &'w Workers, n: usize) -> WorkCtx<'w> {
        WorkCtx {
            workers,
            scratch: BfsScratch::new(n),
            distance_computations: 0,
        }
    }

    #[inline]
    pub fn count(&mut self, visited: u64) {
        self.distance_computations += visited;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Baseline bucketed peeling.
    Bz,
    /// Lower-bound seeded peeling.
    Lb,
    /// Lower + upper bound, top-down interval partitioning.
    LbUb,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        match s {
            "bz" => Ok(Algorithm::Bz),
            "lb" => Ok(Algorithm::Lb),
            "lbub" => Ok(Algorithm::LbUb),
            other => Err(Error::InvalidParameter(format!(
                "unknown algorithm {other:?} (expected bz, lb or lbub)"
            ))),
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algorithm::Bz => "bz",
            Algorithm::Lb => "lb",
            Algorithm::LbUb => "lbub",
        })
    }
}

#[derive(Debug, Clone)]
pub struct DecomposeOptions {
    /// Worker count for the parallel h-degree blocks. The peeling order
    /// itself is sequential and results are identical for any value.
    pub threads: usize,
    /// Interval width (distinct upper-bound values per interval) for
    /// [`Algorithm::LbUb`].
    pub partition_size: usize,
    /// Record per-vertex bound diagnostics alongside the core indices.
    pub diagnostics: bool,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            threads: 1,
            partition_size: 1,
            diagnostics: false,
        }
    }
}

/// Work and timing counters for one decomposition run.
#[derive(Debug, Clone, Default)]
pub struct DecomposeStats {
    /// Total point-to-point distances computed, i.e. the summed sizes of all
    /// bounded traversals executed.
    pub distance_computations: u64,
    pub wall: Duration,
}

/// Per-vertex bound diagnostics, recorded when
/// [`DecomposeOptions::diagnostics`] is set. Arrays are present only when the
/// chosen algorithm computes them.
#[derive(Debug, Clone, Default)]
pub struct Diagnostics {
    pub h_degree: Option<Vec<u32>>,
    pub lb1: Option<Vec<u32>>,
    pub lb2: Option<Vec<u32>>,
    pub lb3: Option<Vec<u32>>,
    pub ub: Option<Vec<u32>>,
}

/// Result of a (k,h)-core decomposition.
#[derive(Debug, Clone)]
pub struct CoreResult {
    pub h: u32,
    /// Core index per internal vertex id; 0 for vertices in no (1,h)-core.
    pub core: Vec<u32>,
    /// Removal sequence of the peeling, when the algorithm produces a valid
    /// one (empty for the top-down algorithm and the oracle).
    pub peel_order: Vec<VertexId>,
    pub diagnostics: Option<Diagnostics>,
    pub stats: DecomposeStats,
}

impl CoreResult {
    pub fn max_core(&self) -> u32 {
        self.core.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct per-vertex core-index values.
    pub fn distinct_cores(&self) -> usize {
        let mut values: Vec<u32> = self.core.clone();
        values.sort_unstable();
        values.dedup();
        values.len()
    }

    /// Vertices of the (k,h)-core, ascending by id.
    pub fn core_set(&self, k: u32) -> Vec<VertexId> {
        self.core
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= k)
            .map(|(v, _)| v as VertexId)
            .collect()
    }

    /// Distinct core-index values in descending order.
    pub fn distinct_core_values(&self) -> Vec<u32> {
        let mut values: Vec<u32> = self.core.clone();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        values
    }
}

/// Runs the selected algorithm.
pub fn decompose(g: &Graph, h: u32, algorithm: Algorithm, opts: &DecomposeOptions) -> Result<CoreResult> {
    match algorithm {
        Algorithm::Bz => decompose_hbz(g, h, opts),
        Algorithm::Lb => decompose_hlb(g, h, opts),
        Algorithm::LbUb => decompose_hlbub(g, h, opts.partition_size, opts),
    }
}

/// Descending intervals of core-index values, each spanning at most `s`
/// distinct upper-bound values, floored at the minimum lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPlan {
    /// `(k_min, k_max)` pairs in descending order.
    pub intervals: Vec<(u32, u32)>,
    pub s: usize,
    pub lb0: u32,
}

impl PartitionPlan {
    pub fn new(upper_bounds: &[u32], lb0: u32, s: usize) -> Result<PartitionPlan> {
        if s < 1 {
            return Err(Error::InvalidParameter("partition size must be >= 1".into()));
        }
        let mut values: Vec<i64> = upper_bounds.iter().map(|&u| u as i64).collect();
        values.push(lb0 as i64 - 1);
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();

        let mut intervals = Vec::new();
        let last = values.len() - 1;
        let mut i = 0;
        while i < last {
            let k_max = values[i];
            let k_min = (values[(i + s).min(last)] + 1).max(1);
            if k_min <= k_max {
                intervals.push((k_min as u32, k_max as u32));
            }
            i += s;
        }
        Ok(PartitionPlan { intervals, s, lb0 })
    }
}
