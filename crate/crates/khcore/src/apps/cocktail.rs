//! Cocktail-party community search: the connected piece of the deepest core
//! that still contains every query vertex.

use crate::decompose::{decompose_hlb, DecomposeOptions};
use crate::error::{Error, Result};
use crate::graph::{AliveMask, Graph, VertexId};
use crate::traversal::BfsScratch;

/// Finds the connected vertex set containing all of `query` that maximizes
/// the minimum h-degree of its induced subgraph. Returns the set and the
/// achieved minimum h-degree.
pub fn cocktail_party(g: &Graph, query: &[VertexId], h: u32) -> Result<(Vec<VertexId>, u32)> {
    cocktail_party_with(g, query, h, &DecomposeOptions::default())
}

pub fn cocktail_party_with(
    g: &Graph,
    query: &[VertexId],
    h: u32,
    opts: &DecomposeOptions,
) -> Result<(Vec<VertexId>, u32)> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    if query.is_empty() {
        return Err(Error::InvalidParameter("empty query".into()));
    }
    let n = g.vertex_count();
    for &q in query {
        if q as usize >= n {
            return Err(Error::InvalidParameter(format!("vertex {q} out of range")));
        }
    }

    let decomp = decompose_hlb(g, h, opts)?;
    let mut ks = decomp.distinct_core_values();
    if ks.last() != Some(&0) {
        ks.push(0);
    }
    for k in ks {
        if query.iter().any(|&q| decomp.core[q as usize] < k) {
            continue;
        }
        let members = decomp.core_set(k);
        if let Some(component) = component_containing(g, &members, query) {
            let mask = AliveMask::from_subset(n, component.iter().copied());
            let mut scratch = BfsScratch::new(n);
            let min_deg = component
                .iter()
                .map(|&v| scratch.degree(g, &mask, v, h) as u32)
                .min()
                .unwrap_or(0);
            return Ok((component, min_deg));
        }
    }
    Err(Error::DisconnectedQuery)
}

/// Connected component of `G[members]` containing every query vertex, if
/// they share one.
fn component_containing(g: &Graph, members: &[VertexId], query: &[VertexId]) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mask = AliveMask::from_subset(n, members.iter().copied());
    let mut seen = vec![false; n];
    let mut queue = vec![query[0]];
    seen[query[0] as usize] = true;
    let mut qi = 0;
    while qi < queue.len() {
        let u = queue[qi];
        qi += 1;
        for &w in g.neighbors(u) {
            if mask.is_alive(w) && !seen[w as usize] {
                seen[w as usize] = true;
                queue.push(w);
            }
        }
    }
    if query.iter().all(|&q| seen[q as usize]) {
        queue.sort_unstable();
        Some(queue)
    } else {
        None
    }
}
