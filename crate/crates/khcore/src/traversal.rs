//! Depth-bounded breadth-first search over masked induced subgraphs.
//!
//! All peeling algorithms funnel through [`BfsScratch`]: a reusable visited
//! stamp + frontier queue so repeated traversals avoid O(n) clearing.
//! Correctness never depends on what a previous traversal left behind.

use crate::error::{Error, Result};
use crate::graph::{AliveMask, Graph, VertexId};

/// Distance value; `u32::MAX` marks unreachable where full arrays are stored.
pub const INFINITE_DISTANCE: u32 = u32::MAX;

/// The vertices within distance `[1, h]` of a source, with exact distances
/// measured inside the masked induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HNeighborhood {
    pub members: Vec<(VertexId, u32)>,
    pub h: u32,
}

impl HNeighborhood {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.iter().any(|&(u, _)| u == v)
    }

    pub fn distance_to(&self, v: VertexId) -> Option<u32> {
        self.members.iter().find(|&&(u, _)| u == v).map(|&(_, d)| d)
    }
}

/// Reusable traversal state: epoch-stamped visited marks and a flat queue.
pub struct BfsScratch {
    stamp: Vec<u64>,
    epoch: u64,
    queue: Vec<VertexId>,
}

impl BfsScratch {
    pub fn new(n: usize) -> BfsScratch {
        BfsScratch {
            stamp: vec![0; n],
            epoch: 0,
            queue: Vec::with_capacity(n.min(1024)),
        }
    }

    /// Runs an h-bounded BFS from `source` over alive vertices, appending
    /// each reached vertex with its exact distance to `out`. Returns the
    /// number of vertices reached (the h-degree of `source`).
    ///
    /// The source itself is excluded. The caller must ensure `source` is
    /// alive; neighbors are scanned in ascending id so traversal order is
    /// deterministic.
    pub fn neighborhood_into(
        &mut self,
        g: &Graph,
        mask: &AliveMask,
        source: VertexId,
        h: u32,
        out: &mut Vec<(VertexId, u32)>,
    ) -> usize {
        debug_assert!(mask.is_alive(source));
        self.epoch += 1;
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push(source);
        self.stamp[source as usize] = epoch;

        let before = out.len();
        let mut lo = 0;
        let mut hi = 1;
        for dist in 1..=h {
            for qi in lo..hi {
                let u = self.queue[qi];
                for &w in g.neighbors(u) {
                    if self.stamp[w as usize] != epoch && mask.is_alive(w) {
                        self.stamp[w as usize] = epoch;
                        self.queue.push(w);
                        out.push((w, dist));
                    }
                }
            }
            lo = hi;
            hi = self.queue.len();
            if lo == hi {
                break;
            }
        }
        out.len() - before
    }

    /// h-degree of `source` without materializing members or distances.
    pub fn degree(&mut self, g: &Graph, mask: &AliveMask, source: VertexId, h: u32) -> usize {
        debug_assert!(mask.is_alive(source));
        self.epoch += 1;
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push(source);
        self.stamp[source as usize] = epoch;

        let mut lo = 0;
        let mut hi = 1;
        for _ in 1..=h {
            for qi in lo..hi {
                let u = self.queue[qi];
                for &w in g.neighbors(u) {
                    if self.stamp[w as usize] != epoch && mask.is_alive(w) {
                        self.stamp[w as usize] = epoch;
                        self.queue.push(w);
                    }
                }
            }
            lo = hi;
            hi = self.queue.len();
            if lo == hi {
                break;
            }
        }
        self.queue.len() - 1
    }

    /// Unbounded single-source distances over the full graph, written into
    /// `dist` (`INFINITE_DISTANCE` for unreachable vertices).
    pub fn full_distances(&mut self, g: &Graph, source: VertexId, dist: &mut [u32]) {
        dist.fill(INFINITE_DISTANCE);
        dist[source as usize] = 0;
        self.queue.clear();
        self.queue.push(source);
        let mut qi = 0;
        while qi < self.queue.len() {
            let u = self.queue[qi];
            qi += 1;
            let du = dist[u as usize];
            for &w in g.neighbors(u) {
                if dist[w as usize] == INFINITE_DISTANCE {
                    dist[w as usize] = du + 1;
                    self.queue.push(w);
                }
            }
        }
    }
}

fn check_source(g: &Graph, mask: &AliveMask, source: VertexId, h: u32) -> Result<()> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    if source as usize >= g.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "vertex {source} out of range"
        )));
    }
    if !mask.is_alive(source) {
        return Err(Error::Contract(format!(
            "h-bounded BFS started from dead vertex {source}"
        )));
    }
    Ok(())
}

/// Every alive vertex within distance `[1, h]` of `source`, with its exact
/// shortest-path distance inside the masked induced subgraph.
pub fn h_bfs(g: &Graph, mask: &AliveMask, source: VertexId, h: u32) -> Result<HNeighborhood> {
    check_source(g, mask, source, h)?;
    let mut scratch = BfsScratch::new(g.vertex_count());
    let mut members = Vec::new();
    scratch.neighborhood_into(g, mask, source, h, &mut members);
    Ok(HNeighborhood { members, h })
}

/// `|h_bfs(..)|` without materializing distances.
pub fn h_degree(g: &Graph, mask: &AliveMask, source: VertexId, h: u32) -> Result<usize> {
    check_source(g, mask, source, h)?;
    let mut scratch = BfsScratch::new(g.vertex_count());
    Ok(scratch.degree(g, mask, source, h))
}

/// True iff every pair of `subset` is within distance `h` inside the
/// subgraph induced by `subset`, i.e. `subset` is an h-club.
pub fn induced_diameter_leq(g: &Graph, subset: &[VertexId], h: u32) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::InvalidParameter(
            "diameter of an empty vertex set".into(),
        ));
    }
    let mask = AliveMask::from_subset(g.vertex_count(), subset.iter().copied());
    let want = mask.alive_count() - 1;
    let mut scratch = BfsScratch::new(g.vertex_count());
    for &v in subset {
        if scratch.degree(g, &mask, v, h) < want {
            return Ok(false);
        }
    }
    Ok(true)
}
