//! Greedy distance-h coloring along the reverse peeling order, which needs
//! at most `1 + max core index` colors.

use crate::decompose::CoreResult;
use crate::error::{Error, Result};
use crate::graph::{AliveMask, Graph};
use crate::traversal::BfsScratch;

#[derive(Debug, Clone)]
pub struct Coloring {
    /// Color id per vertex; any two vertices sharing a color are more than h
    /// hops apart in the full graph.
    pub color: Vec<u32>,
    pub num_colors: u32,
}

/// Colors vertices in reverse peeling order, giving each the smallest color
/// absent from its h-neighborhood (distances in the full graph).
///
/// `result` must carry the peeling order it was produced with; the baseline
/// and lower-bound algorithms record one, the top-down algorithm does not.
pub fn greedy_distance_h_coloring(g: &Graph, h: u32, result: &CoreResult) -> Result<Coloring> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let n = g.vertex_count();
    if result.peel_order.len() != n {
        return Err(Error::Contract(
            "decomposition does not carry a full peeling order".into(),
        ));
    }

    let full = AliveMask::all(n);
    let mut scratch = BfsScratch::new(n);
    let mut nbhd = Vec::new();
    let mut color = vec![u32::MAX; n];
    let mut used = vec![false; n + 1];
    let mut num_colors = 0u32;

    for &v in result.peel_order.iter().rev() {
        nbhd.clear();
        scratch.neighborhood_into(g, &full, v, h, &mut nbhd);
        for &(u, _) in &nbhd {
            if color[u as usize] != u32::MAX {
                used[color[u as usize] as usize] = true;
            }
        }
        let mut c = 0u32;
        while used[c as usize] {
            c += 1;
        }
        color[v as usize] = c;
        num_colors = num_colors.max(c + 1);
        for &(u, _) in &nbhd {
            if color[u as usize] != u32::MAX {
                used[color[u as usize] as usize] = false;
            }
        }
    }

    Ok(Coloring { color, num_colors })
}
