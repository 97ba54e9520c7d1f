//! Bucketed peeling: the baseline algorithm, the lower-bound variant, and
//! the top-down interval variant built on upper bounds.

use std::time::Instant;

use super::bounds::{improve_lb_counted, lb1_counted, lb2_counted, ub_counted};
use super::{CoreResult, DecomposeOptions, DecomposeStats, Diagnostics, PartitionPlan, WorkCtx};
use crate::bucket::BucketQueue;
use crate::error::{Error, Result};
use crate::exec::Workers;
use crate::graph::{AliveMask, Graph, VertexId};

/// Mutable peeling state shared by the algorithms. Exposed so an interval of
/// the decomposition can be driven directly from pre-seeded buckets.
pub struct PeelState {
    pub mask: AliveMask,
    pub buckets: BucketQueue,
    /// True while only a lower bound (not the exact masked h-degree) of a
    /// vertex is known; also marks finalized vertices so later intervals skip
    /// their updates.
    pub set_lb: Vec<bool>,
    /// Exact masked h-degree, valid where `set_lb` is false.
    pub deg: Vec<u32>,
    pub core: Vec<u32>,
    pub assigned: Vec<bool>,
    pub peel_order: Vec<VertexId>,
    pub record_order: bool,
}

impl PeelState {
    /// All vertices alive, each parked in the bucket of its lower bound with
    /// the bound flag set.
    pub fn seeded_with_bounds(g: &Graph, bounds: &[u32]) -> PeelState {
        let n = g.vertex_count();
        let mut buckets = BucketQueue::new(n, n + 1);
        for v in 0..n as VertexId {
            buckets.push_back(v, bounds[v as usize]);
        }
        PeelState {
            mask: AliveMask::all(n),
            buckets,
            set_lb: vec![true; n],
            deg: vec![0; n],
            core: vec![0; n],
            assigned: vec![false; n],
            peel_order: Vec::new(),
            record_order: false,
        }
    }

    /// All vertices alive with exact h-degrees already known.
    pub fn seeded_with_degrees(g: &Graph, degrees: &[u32]) -> PeelState {
        let n = g.vertex_count();
        let mut buckets = BucketQueue::new(n, n + 1);
        for v in 0..n as VertexId {
            buckets.push_back(v, degrees[v as usize]);
        }
        PeelState {
            mask: AliveMask::all(n),
            buckets,
            set_lb: vec![false; n],
            deg: degrees.to_vec(),
            core: vec![0; n],
            assigned: vec![false; n],
            peel_order: Vec::new(),
            record_order: false,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Refresh {
    /// Re-derive the h-degree of every affected neighbor (baseline rule).
    All,
    /// Re-derive only neighbors seen strictly inside the radius; a neighbor
    /// at distance exactly h can lose nothing but the removed vertex itself,
    /// so its degree just drops by one.
    SplitAtH,
}

/// One peeling sweep over bucket levels `k_min - 1 ..= k_max`.
///
/// Vertices popped below `k_min` are peeled away without receiving a core
/// index (a later interval owns them); vertices popped in range receive the
/// current level as their core index and are marked finalized.
pub fn core_decomp_interval(
    g: &Graph,
    h: u32,
    k_min: u32,
    k_max: u32,
    state: &mut PeelState,
    workers: &Workers,
) -> Result<u64> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let mut ctx = WorkCtx::new(workers, g.vertex_count());
    peel_interval(g, h, k_min, k_max, state, &mut ctx, Refresh::SplitAtH);
    Ok(ctx.distance_computations)
}

fn peel_interval(
    g: &Graph,
    h: u32,
    k_min: u32,
    k_max: u32,
    state: &mut PeelState,
    ctx: &mut WorkCtx,
    refresh: Refresh,
) {
    let mut nbhd: Vec<(VertexId, u32)> = Vec::new();
    let mut affected: Vec<VertexId> = Vec::new();

    // no vertex can sit above bucket n + 1, whatever interval was requested
    let k_max = k_max.min(g.vertex_count() as u32 + 1);
    for k in k_min.saturating_sub(1)..=k_max {
        while let Some(v) = state.buckets.pop_front(k) {
            let vi = v as usize;
            if state.set_lb[vi] {
                let d = ctx.scratch.degree(g, &state.mask, v, h) as u32;
                ctx.count(d as u64);
                state.deg[vi] = d;
                state.set_lb[vi] = false;
                // clamping to the current level lets vertices that fell below
                // the interval floor cascade out at the parking level instead
                // of stranding alive in an unvisited bucket
                state.buckets.push_back(v, d.max(k));
                continue;
            }

            if k >= k_min {
                state.core[vi] = k;
                state.assigned[vi] = true;
                state.set_lb[vi] = true;
            }
            if state.record_order {
                state.peel_order.push(v);
            }

            nbhd.clear();
            let cnt = ctx.scratch.neighborhood_into(g, &state.mask, v, h, &mut nbhd);
            ctx.count(cnt as u64);
            state.mask.kill(v);

            affected.clear();
            for &(u, d) in &nbhd {
                if state.set_lb[u as usize] {
                    continue;
                }
                if refresh == Refresh::All || d < h {
                    affected.push(u);
                }
            }
            let (fresh, visited) = ctx.workers.degrees(g, &state.mask, h, &affected, &mut ctx.scratch);
            ctx.count(visited);

            let mut fi = 0;
            for &(u, d) in &nbhd {
                let ui = u as usize;
                if state.set_lb[ui] {
                    continue;
                }
                if refresh == Refresh::All || d < h {
                    state.deg[ui] = fresh[fi];
                    fi += 1;
                } else {
                    state.deg[ui] -= 1;
                }
                state.buckets.move_to(u, state.deg[ui].max(k));
            }
        }
    }
}

fn finish(
    h: u32,
    core: Vec<u32>,
    peel_order: Vec<VertexId>,
    diagnostics: Option<Diagnostics>,
    ctx: WorkCtx,
    started: Instant,
) -> CoreResult {
    CoreResult {
        h,
        core,
        peel_order,
        diagnostics,
        stats: DecomposeStats {
            distance_computations: ctx.distance_computations,
            wall: started.elapsed(),
        },
    }
}

fn all_vertices(g: &Graph) -> Vec<VertexId> {
    (0..g.vertex_count() as VertexId).collect()
}

/// Baseline peeling: buckets seeded with exact h-degrees; every removal
/// refreshes the h-degree of each alive h-neighbor.
pub fn decompose_hbz(g: &Graph, h: u32, opts: &DecomposeOptions) -> Result<CoreResult> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let started = Instant::now();
    let workers = Workers::new(opts.threads);
    let mut ctx = WorkCtx::new(&workers, g.vertex_count());

    let mask = AliveMask::all(g.vertex_count());
    let (deg, visited) = ctx.workers.degrees(g, &mask, h, &all_vertices(g), &mut ctx.scratch);
    ctx.count(visited);

    let mut state = PeelState::seeded_with_degrees(g, &deg);
    state.record_order = true;
    peel_interval(g, h, 1, g.vertex_count() as u32, &mut state, &mut ctx, Refresh::All);

    let diagnostics = opts.diagnostics.then(|| Diagnostics {
        h_degree: Some(deg),
        ..Diagnostics::default()
    });
    Ok(finish(h, state.core, state.peel_order, diagnostics, ctx, started))
}

/// Lower-bound peeling: buckets seeded with LB2, exact degrees derived
/// lazily once the peeling level reaches a vertex's bound.
pub fn decompose_hlb(g: &Graph, h: u32, opts: &DecomposeOptions) -> Result<CoreResult> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let started = Instant::now();
    let workers = Workers::new(opts.threads);
    let mut ctx = WorkCtx::new(&workers, g.vertex_count());

    let lb1 = lb1_counted(g, h, &mut ctx);
    let lb2 = lb2_counted(g, h, &lb1, &mut ctx);

    let mut state = PeelState::seeded_with_bounds(g, &lb2);
    state.record_order = true;
    peel_interval(g, h, 1, g.vertex_count() as u32, &mut state, &mut ctx, Refresh::SplitAtH);

    let diagnostics = opts.diagnostics.then(|| Diagnostics {
        lb1: Some(lb1),
        lb2: Some(lb2),
        ..Diagnostics::default()
    });
    Ok(finish(h, state.core, state.peel_order, diagnostics, ctx, started))
}

/// Top-down decomposition over upper-bound intervals of width `s`.
///
/// Peel order is not recorded: interval processing removes high cores first,
/// which is not a valid peeling sequence.
pub fn decompose_hlbub(g: &Graph, h: u32, s: usize, opts: &DecomposeOptions) -> Result<CoreResult> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    if s < 1 {
        return Err(Error::InvalidParameter("partition size must be >= 1".into()));
    }
    let started = Instant::now();
    let workers = Workers::new(opts.threads);
    let n = g.vertex_count();
    let mut ctx = WorkCtx::new(&workers, n);

    let mask = AliveMask::all(n);
    let (deg, visited) = ctx.workers.degrees(g, &mask, h, &all_vertices(g), &mut ctx.scratch);
    ctx.count(visited);
    let lb1 = lb1_counted(g, h, &mut ctx);
    let lb2 = lb2_counted(g, h, &lb1, &mut ctx);
    let ub = ub_counted(g, h, &deg, &mut ctx);

    let lb0 = lb2.iter().copied().min().unwrap_or(0);
    let plan = PartitionPlan::new(&ub, lb0, s)?;

    let mut lb3 = vec![0u32; n];
    let mut core = vec![0u32; n];
    let mut assigned = vec![false; n];

    for &(k_min, k_max) in &plan.intervals {
        let members: Vec<VertexId> =
            (0..n as VertexId).filter(|&v| ub[v as usize] >= k_min).collect();
        if members.is_empty() {
            continue;
        }
        let cleaned = improve_lb_counted(g, &members, h, k_min, &lb2, &mut lb3, &mut ctx);
        if cleaned.is_empty() {
            continue;
        }

        let mut buckets = BucketQueue::new(n, n + 1);
        for &v in &cleaned {
            let vi = v as usize;
            let seed = core[vi].max(lb3[vi]).max(k_min - 1);
            buckets.push_back(v, seed);
        }
        let mut state = PeelState {
            mask: AliveMask::from_subset(n, cleaned.iter().copied()),
            buckets,
            set_lb: vec![true; n],
            deg: vec![0; n],
            core: std::mem::take(&mut core),
            assigned: std::mem::take(&mut assigned),
            peel_order: Vec::new(),
            record_order: false,
        };
        peel_interval(g, h, k_min, k_max, &mut state, &mut ctx, Refresh::SplitAtH);
        core = state.core;
        assigned = state.assigned;
    }

    let diagnostics = if opts.diagnostics {
        Some(Diagnostics {
            h_degree: Some(deg),
            lb1: Some(lb1),
            lb2: Some(lb2),
            lb3: Some(lb3),
            ub: Some(ub),
        })
    } else {
        None
    };
    Ok(finish(h, core, Vec::new(), diagnostics, ctx, started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{decompose, Algorithm};

    fn opts() -> DecomposeOptions {
        DecomposeOptions::default()
    }

    fn triangle_pendant() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])
    }

    fn cycle6() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    }

    #[test]
    fn hbz_matches_hand_worked_examples() {
        let g = triangle_pendant();
        assert_eq!(decompose_hbz(&g, 1, &opts()).unwrap().core, vec![2, 2, 2, 1]);
        assert_eq!(decompose_hbz(&g, 2, &opts()).unwrap().core, vec![3, 3, 3, 3]);
        let g = cycle6();
        assert_eq!(decompose_hbz(&g, 2, &opts()).unwrap().core, vec![4; 6]);
    }

    #[test]
    fn hlb_matches_hbz_on_the_path() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let bz = decompose_hbz(&g, 2, &opts()).unwrap();
        let lb = decompose_hlb(&g, 2, &opts()).unwrap();
        assert_eq!(bz.core, vec![2; 5]);
        assert_eq!(lb.core, bz.core);
    }

    #[test]
    fn hlb_saves_distance_computations_when_bounds_bite() {
        // bounds only pay off once neighbor refreshes dominate the setup
        // passes; on the double-hub graph the bound parks eleven vertices in
        // one bucket and skips their refreshes while the tail peels away
        let g = double_hub();
        let bz = decompose_hbz(&g, 2, &opts()).unwrap();
        let lb = decompose_hlb(&g, 2, &opts()).unwrap();
        assert_eq!(lb.core, bz.core);
        assert!(
            lb.stats.distance_computations <= bz.stats.distance_computations,
            "lb {} vs bz {}",
            lb.stats.distance_computations,
            bz.stats.distance_computations
        );
    }

    #[test]
    fn interval_full_range_from_lower_bounds() {
        let g = triangle_pendant();
        let lb1 = super::super::compute_lb1(&g, 2).unwrap();
        let lb2 = super::super::compute_lb2(&g, 2, &lb1).unwrap();
        let mut state = PeelState::seeded_with_bounds(&g, &lb2);
        core_decomp_interval(&g, 2, 1, 4, &mut state, &Workers::sequential()).unwrap();
        assert_eq!(state.core, vec![3, 3, 3, 3]);
    }

    #[test]
    fn interval_exact_band_assigns_only_in_range() {
        let g = cycle6();
        let degrees = vec![4u32; 6];
        let mut state = PeelState::seeded_with_degrees(&g, &degrees);
        core_decomp_interval(&g, 2, 4, 4, &mut state, &Workers::sequential()).unwrap();
        assert_eq!(state.core, vec![4; 6]);
        assert!(state.assigned.iter().all(|&a| a));
    }

    #[test]
    fn interval_above_degeneracy_is_a_no_op() {
        let g = cycle6();
        let degrees = vec![4u32; 6];
        let mut state = PeelState::seeded_with_degrees(&g, &degrees);
        core_decomp_interval(&g, 2, 10, 12, &mut state, &Workers::sequential()).unwrap();
        assert_eq!(state.core, vec![0; 6]);
        assert_eq!(state.mask.alive_count(), 6);
    }

    #[test]
    fn lbub_agrees_across_partition_sizes() {
        let g = double_hub();
        let want = vec![4, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6];
        for s in [1, 2, 4] {
            let res = decompose_hlbub(&g, 2, s, &opts()).unwrap();
            assert_eq!(res.core, want, "s = {s}");
        }
        assert_eq!(decompose_hbz(&g, 2, &opts()).unwrap().core, want);
        assert_eq!(decompose_hlb(&g, 2, &opts()).unwrap().core, want);
    }

    #[test]
    fn dispatch_covers_all_algorithms() {
        let g = triangle_pendant();
        for alg in [Algorithm::Bz, Algorithm::Lb, Algorithm::LbUb] {
            let res = decompose(&g, 2, alg, &opts()).unwrap();
            assert_eq!(res.core, vec![3, 3, 3, 3]);
        }
    }

    #[test]
    fn isolated_vertices_keep_core_zero() {
        let g = Graph::from_edges(4, &[(0, 1)]);
        for alg in [Algorithm::Bz, Algorithm::Lb, Algorithm::LbUb] {
            let res = decompose(&g, 3, alg, &opts()).unwrap();
            assert_eq!(res.core, vec![1, 1, 0, 0]);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let g = triangle_pendant();
        assert!(decompose_hbz(&g, 0, &opts()).is_err());
        assert!(decompose_hlbub(&g, 2, 0, &opts()).is_err());
    }

    #[test]
    fn single_vertex_graph_decomposes_to_zero() {
        let g = Graph::from_edges(1, &[]);
        for alg in [Algorithm::Bz, Algorithm::Lb, Algorithm::LbUb] {
            assert_eq!(decompose(&g, 3, alg, &opts()).unwrap().core, vec![0]);
        }
    }

    fn double_hub() -> Graph {
        Graph::from_edges(
            13,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 4),
                (3, 5),
                (3, 6),
                (3, 7),
                (3, 8),
                (4, 9),
                (4, 10),
                (4, 11),
                (4, 12),
                (5, 9),
                (6, 10),
                (7, 11),
                (8, 12),
            ],
        )
    }
}
