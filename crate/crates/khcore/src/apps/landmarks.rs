//! Landmark selection for shortest-path distance estimation. Landmarks drawn
//! from the deepest (k,h)-core sit inside a dense region close to much of
//! the network, which tightens the triangle-inequality bounds.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decompose::{decompose_hlb, DecomposeOptions};
use crate::error::{Error, Result};
use crate::graph::{AliveMask, Graph, VertexId};
use crate::traversal::{BfsScratch, INFINITE_DISTANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LandmarkStrategy {
    /// Uniform sample from the maximum-index core, spilling into the next
    /// distinct core when it is too small.
    MaxCore,
    /// The top vertices by h-degree in the full graph.
    TopHDegree,
    /// Uniform sample over all vertices.
    UniformRandom,
}

/// Selected landmarks plus one full single-source distance array each.
#[derive(Debug, Clone)]
pub struct LandmarkIndex {
    pub landmarks: Vec<VertexId>,
    pub distances: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceEstimate {
    pub lower: u32,
    /// `None` when no landmark reaches both endpoints.
    pub upper: Option<u32>,
    /// Midpoint of the two bounds, when finite.
    pub estimate: Option<f64>,
}

pub fn select_landmarks(g: &Graph, h: u32, ell: usize, seed: u64) -> Result<LandmarkIndex> {
    select_landmarks_with(
        g,
        h,
        ell,
        seed,
        LandmarkStrategy::MaxCore,
        &DecomposeOptions::default(),
    )
}

pub fn select_landmarks_with(
    g: &Graph,
    h: u32,
    ell: usize,
    seed: u64,
    strategy: LandmarkStrategy,
    opts: &DecomposeOptions,
) -> Result<LandmarkIndex> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    if ell < 1 {
        return Err(Error::InvalidParameter("need at least one landmark".into()));
    }
    let n = g.vertex_count();
    if ell > n {
        return Err(Error::InvalidParameter(format!(
            "requested {ell} landmarks from {n} vertices"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let landmarks: Vec<VertexId> = match strategy {
        LandmarkStrategy::MaxCore => {
            let decomp = decompose_hlb(g, h, opts)?;
            let mut pool: Vec<VertexId> = Vec::new();
            for k in decomp.distinct_core_values() {
                pool = decomp.core_set(k);
                if pool.len() >= ell {
                    break;
                }
            }
            if pool.len() < ell {
                pool = (0..n as VertexId).collect();
            }
            let mut sample: Vec<VertexId> =
                pool.choose_multiple(&mut rng, ell).copied().collect();
            sample.sort_unstable();
            sample
        }
        LandmarkStrategy::TopHDegree => {
            let mask = AliveMask::all(n);
            let mut scratch = BfsScratch::new(n);
            let mut by_degree: Vec<(usize, VertexId)> = (0..n as VertexId)
                .map(|v| (scratch.degree(g, &mask, v, h), v))
                .collect();
            by_degree.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut top: Vec<VertexId> = by_degree[..ell].iter().map(|&(_, v)| v).collect();
            top.sort_unstable();
            top
        }
        LandmarkStrategy::UniformRandom => {
            let pool: Vec<VertexId> = (0..n as VertexId).collect();
            let mut sample: Vec<VertexId> =
                pool.choose_multiple(&mut rng, ell).copied().collect();
            sample.sort_unstable();
            sample
        }
    };

    let mut scratch = BfsScratch::new(n);
    let mut distances = Vec::with_capacity(landmarks.len());
    for &u in &landmarks {
        let mut dist = vec![0u32; n];
        scratch.full_distances(g, u, &mut dist);
        distances.push(dist);
    }
    Ok(LandmarkIndex {
        landmarks,
        distances,
    })
}

/// Triangle-inequality bounds on `d(s, t)` from the stored landmark
/// distances, and the midpoint estimate.
pub fn estimate_distance(index: &LandmarkIndex, s: VertexId, t: VertexId) -> Result<DistanceEstimate> {
    let n = index.distances.first().map_or(0, |d| d.len());
    if s as usize >= n || t as usize >= n {
        return Err(Error::InvalidParameter(format!(
            "vertex pair ({s}, {t}) out of range"
        )));
    }
    let mut lower = 0u32;
    let mut upper = INFINITE_DISTANCE;
    for dist in &index.distances {
        let ds = dist[s as usize];
        let dt = dist[t as usize];
        if ds == INFINITE_DISTANCE || dt == INFINITE_DISTANCE {
            continue;
        }
        lower = lower.max(ds.abs_diff(dt));
        upper = upper.min(ds + dt);
    }
    if upper == INFINITE_DISTANCE {
        return Ok(DistanceEstimate {
            lower: 0,
            upper: None,
            estimate: None,
        });
    }
    Ok(DistanceEstimate {
        lower,
        upper: Some(upper),
        estimate: Some((lower + upper) as f64 / 2.0),
    })
}
