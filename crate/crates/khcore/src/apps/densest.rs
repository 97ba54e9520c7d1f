//! Distance-h densest subgraph approximation: among the cores of the
//! decomposition, pick the one maximizing the average induced h-degree.

use crate::decompose::{decompose_hlb, DecomposeOptions};
use crate::error::{Error, Result};
use crate::graph::{AliveMask, Graph, VertexId};
use crate::traversal::BfsScratch;

#[derive(Debug, Clone)]
pub struct DensestResult {
    pub members: Vec<VertexId>,
    /// Average h-degree of the induced subgraph.
    pub density: f64,
    /// The k whose core was selected (ties broken toward larger k).
    pub core_index: u32,
}

pub fn densest_h_core(g: &Graph, h: u32) -> Result<DensestResult> {
    densest_h_core_with(g, h, &DecomposeOptions::default())
}

pub fn densest_h_core_with(g: &Graph, h: u32, opts: &DecomposeOptions) -> Result<DensestResult> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let decomp = decompose_hlb(g, h, opts)?;
    let mut scratch = BfsScratch::new(g.vertex_count());

    let mut best: Option<DensestResult> = None;
    let mut prev_len = usize::MAX;
    let mut values = decomp.distinct_core_values();
    if values.last() != Some(&0) {
        values.push(0); // the (0,h)-core is the whole vertex set
    }
    for k in values {
        let members = decomp.core_set(k);
        if members.is_empty() || members.len() == prev_len {
            continue;
        }
        prev_len = members.len();
        let mask = AliveMask::from_subset(g.vertex_count(), members.iter().copied());
        let total: u64 = members
            .iter()
            .map(|&v| scratch.degree(g, &mask, v, h) as u64)
            .sum();
        let density = total as f64 / members.len() as f64;
        let better = match &best {
            None => true,
            Some(b) => density > b.density,
        };
        if better {
            best = Some(DensestResult {
                members,
                density,
                core_index: k,
            });
        }
    }
    best.ok_or(Error::EmptyGraph)
}
