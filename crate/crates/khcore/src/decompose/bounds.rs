//! Lower and upper bounds on the (k,h)-core index of a vertex.

use std::collections::VecDeque;

use super::WorkCtx;
use crate::bucket::BucketQueue;
use crate::error::{Error, Result};
use crate::exec::Workers;
use crate::graph::{AliveMask, Graph, VertexId};

fn check_h(h: u32) -> Result<()> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    Ok(())
}

/// `LB1(v)`: the floor(h/2)-degree of `v` in the full graph. Zero for every
/// vertex when `h == 1`.
pub fn compute_lb1(g: &Graph, h: u32) -> Result<Vec<u32>> {
    check_h(h)?;
    let workers = Workers::sequential();
    let mut ctx = WorkCtx::new(&workers, g.vertex_count());
    Ok(lb1_counted(g, h, &mut ctx))
}

pub(crate) fn lb1_counted(g: &Graph, h: u32, ctx: &mut WorkCtx) -> Vec<u32> {
    let n = g.vertex_count();
    let half = h / 2;
    if half == 0 {
        return vec![0; n];
    }
    let mask = AliveMask::all(n);
    let sources: Vec<VertexId> = (0..n as VertexId).collect();
    let (degs, visited) = ctx.workers.degrees(g, &mask, half, &sources, &mut ctx.scratch);
    ctx.count(visited);
    degs
}

/// `LB2(v)`: the maximum `LB1` over `v` itself and every vertex within
/// distance ceil(h/2) of `v` in the full graph.
pub fn compute_lb2(g: &Graph, h: u32, lb1: &[u32]) -> Result<Vec<u32>> {
    check_h(h)?;
    if lb1.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("lb1 length mismatch".into()));
    }
    let workers = Workers::sequential();
    let mut ctx = WorkCtx::new(&workers, g.vertex_count());
    Ok(lb2_counted(g, h, lb1, &mut ctx))
}

pub(crate) fn lb2_counted(g: &Graph, h: u32, lb1: &[u32], ctx: &mut WorkCtx) -> Vec<u32> {
    let n = g.vertex_count();
    let reach = h.div_ceil(2);
    let mask = AliveMask::all(n);
    let sources: Vec<VertexId> = (0..n as VertexId).collect();
    let (values, visited) = ctx.workers.map_neighborhoods(
        g,
        &mask,
        reach,
        &sources,
        &mut ctx.scratch,
        |v, members| {
            let mut best = lb1[v as usize];
            for &(u, _) in members {
                best = best.max(lb1[u as usize]);
            }
            best
        },
    );
    ctx.count(visited);
    values
}

/// Classic core indices of the implicit power graph `G^h`, an upper bound on
/// the (k,h)-core index. The power graph is never materialized: each removal
/// re-derives the removed vertex's h-neighborhood and decrements the
/// surviving members' bounded degrees by exactly 1.
pub fn compute_ub(g: &Graph, h: u32) -> Result<Vec<u32>> {
    check_h(h)?;
    let workers = Workers::sequential();
    let mut ctx = WorkCtx::new(&workers, g.vertex_count());
    let n = g.vertex_count();
    let mask = AliveMask::all(n);
    let sources: Vec<VertexId> = (0..n as VertexId).collect();
    let (deg, visited) = ctx.workers.degrees(g, &mask, h, &sources, &mut ctx.scratch);
    ctx.count(visited);
    Ok(ub_counted(g, h, &deg, &mut ctx))
}

pub(crate) fn ub_counted(g: &Graph, h: u32, h_degree: &[u32], ctx: &mut WorkCtx) -> Vec<u32> {
    let n = g.vertex_count();
    let mut ubdeg = h_degree.to_vec();
    let mut ub = vec![0u32; n];
    let mut popped = vec![false; n];
    let mut buckets = BucketQueue::new(n, n + 1);
    for v in 0..n as VertexId {
        buckets.push_back(v, ubdeg[v as usize]);
    }
    let full = AliveMask::all(n);
    let mut nbhd: Vec<(VertexId, u32)> = Vec::new();

    for k in 1..=n as u32 {
        while let Some(v) = buckets.pop_front(k) {
            ub[v as usize] = k;
            popped[v as usize] = true;
            nbhd.clear();
            // distances in the power graph are fixed by the full graph, so
            // removed vertices still relay paths here
            let cnt = ctx.scratch.neighborhood_into(g, &full, v, h, &mut nbhd);
            ctx.count(cnt as u64);
            for &(u, _) in &nbhd {
                if !popped[u as usize] {
                    ubdeg[u as usize] -= 1;
                    buckets.move_to(u, ubdeg[u as usize].max(k));
                }
            }
        }
    }
    ub
}

/// Cleans a candidate set `subset = {v : UB(v) >= k}` and tightens lower
/// bounds: `LB3(v) = max(LB2(v), min h-degree induced by the subset)`, then
/// iteratively drops vertices whose decremented induced-degree upper bound
/// falls below `k`.
///
/// Returns the surviving subset and a full-length LB3 array (zero outside
/// `subset`).
pub fn improve_lb(
    g: &Graph,
    subset: &[VertexId],
    h: u32,
    k: u32,
    lb2: &[u32],
) -> Result<(Vec<VertexId>, Vec<u32>)> {
    check_h(h)?;
    if lb2.len() != g.vertex_count() {
        return Err(Error::InvalidParameter("lb2 length mismatch".into()));
    }
    let workers = Workers::sequential();
    let mut ctx = WorkCtx::new(&workers, g.vertex_count());
    let mut lb3 = vec![0u32; g.vertex_count()];
    let cleaned = improve_lb_counted(g, subset, h, k, lb2, &mut lb3, &mut ctx);
    Ok((cleaned, lb3))
}

/// Raises `lb3` in place (running max) for every member of `subset`.
pub(crate) fn improve_lb_counted(
    g: &Graph,
    subset: &[VertexId],
    h: u32,
    k: u32,
    lb2: &[u32],
    lb3: &mut [u32],
    ctx: &mut WorkCtx,
) -> Vec<VertexId> {
    if subset.is_empty() {
        return Vec::new();
    }
    let n = g.vertex_count();
    let mut mask = AliveMask::from_subset(n, subset.iter().copied());
    let (degs, visited) = ctx.workers.degrees(g, &mask, h, subset, &mut ctx.scratch);
    ctx.count(visited);

    // the minimum is taken before any deletion, per the bound's statement
    let min_deg = degs.iter().copied().min().unwrap_or(0);
    for &v in subset {
        lb3[v as usize] = lb3[v as usize].max(lb2[v as usize]).max(min_deg);
    }

    let mut est = vec![0u32; n];
    let mut queue: VecDeque<VertexId> = VecDeque::new();
    let mut queued = vec![false; n];
    for (i, &v) in subset.iter().enumerate() {
        est[v as usize] = degs[i];
        if degs[i] < k {
            queue.push_back(v);
            queued[v as usize] = true;
        }
    }

    let mut nbhd: Vec<(VertexId, u32)> = Vec::new();
    while let Some(v) = queue.pop_front() {
        nbhd.clear();
        let cnt = ctx.scratch.neighborhood_into(g, &mask, v, h, &mut nbhd);
        ctx.count(cnt as u64);
        mask.kill(v);
        for &(u, _) in &nbhd {
            est[u as usize] -= 1;
            if est[u as usize] < k && !queued[u as usize] {
                queue.push_back(u);
                queued[u as usize] = true;
            }
        }
    }
    subset.iter().copied().filter(|&v| mask.is_alive(v)).collect()
}
