//! Helpers shared by the integration suites: seeded graph generation and
//! independent reference implementations (no code shared with the paths
//! under test beyond the public graph type).

#![allow(dead_code)]

use khcore::{Graph, VertexId};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const INF: u32 = u32::MAX;

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in (u + 1)..n as VertexId {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// All-pairs shortest paths over the subgraph induced by `alive`, by
/// Floyd-Warshall.
pub fn floyd_warshall(g: &Graph, alive: &[bool]) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut dist = vec![vec![INF; n]; n];
    for v in 0..n {
        if alive[v] {
            dist[v][v] = 0;
            for &w in g.neighbors(v as VertexId) {
                if alive[w as usize] {
                    dist[v][w as usize] = 1;
                }
            }
        }
    }
    for k in 0..n {
        if !alive[k] {
            continue;
        }
        for i in 0..n {
            if dist[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if dist[k][j] != INF {
                    let through = dist[i][k] + dist[k][j];
                    if through < dist[i][j] {
                        dist[i][j] = through;
                    }
                }
            }
        }
    }
    dist
}

/// Textbook k-core: repeatedly remove a minimum-degree vertex; the core
/// index is the running maximum of removal degrees.
pub fn classic_kcore(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v as VertexId)).collect();
    let mut removed = vec![false; n];
    let mut core = vec![0u32; n];
    let mut level = 0u32;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        level = level.max(deg[v] as u32);
        core[v] = level;
        removed[v] = true;
        for &w in g.neighbors(v as VertexId) {
            if !removed[w as usize] {
                deg[w as usize] -= 1;
            }
        }
    }
    core
}

/// Bitmask adjacency for graphs of at most 32 vertices.
pub fn bit_adjacency(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 32);
    (0..n as VertexId)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

/// Vertices within distance h of `v` inside the induced subgraph `mask`,
/// including `v` itself.
pub fn reach_within(adj: &[u32], mask: u32, v: u32, h: u32) -> u32 {
    let mut reach = 1u32 << v;
    for _ in 0..h {
        let mut next = reach;
        let mut frontier = reach;
        while frontier != 0 {
            let u = frontier.trailing_zeros();
            frontier &= frontier - 1;
            next |= adj[u as usize];
        }
        next &= mask;
        if next == reach {
            break;
        }
        reach = next;
    }
    reach
}

pub fn is_club_mask(adj: &[u32], mask: u32, h: u32) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        if reach_within(adj, mask, v, h) != mask {
            return false;
        }
    }
    true
}

/// Exhaustive maximum h-club size: enumerates subsets by descending size
/// (Gosper's hack) and stops at the first h-club.
pub fn max_club_exhaustive(g: &Graph, h: u32) -> usize {
    let n = g.vertex_count();
    assert!(n <= 25, "exhaustive club search capped at 25 vertices");
    let adj = bit_adjacency(g);
    for size in (2..=n).rev() {
        let mut mask: u64 = (1u64 << size) - 1;
        let limit: u64 = 1u64 << n;
        while mask < limit {
            if is_club_mask(&adj, mask as u32, h) {
                return size;
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    usize::from(n > 0)
}

/// Exhaustive maximum clique size by include/exclude branch and bound.
pub fn max_clique_exhaustive(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 32);
    let adj = bit_adjacency(g);
    let mut best = 0usize;
    fn expand(adj: &[u32], cand: u32, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = cand.trailing_zeros();
        expand(adj, cand & adj[v as usize], size + 1, best);
        expand(adj, cand & !(1 << v), size, best);
    }
    if n > 0 {
        expand(&adj, if n == 32 { u32::MAX } else { (1u32 << n) - 1 }, 0, &mut best);
    }
    best
}

/// Average h-degree of the induced subgraph `mask`.
pub fn density_of_mask(adj: &[u32], mask: u32, h: u32) -> f64 {
    let size = mask.count_ones();
    if size == 0 {
        return 0.0;
    }
    let mut total = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        total += reach_within(adj, mask, v, h).count_ones() - 1;
    }
    total as f64 / size as f64
}

/// Exhaustive distance-h densest subgraph value.
pub fn densest_exhaustive(g: &Graph, h: u32) -> f64 {
    let n = g.vertex_count();
    assert!(n <= 16, "exhaustive densest search capped at 16 vertices");
    let adj = bit_adjacency(g);
    let mut best = 0.0f64;
    for mask in 1u32..(1u32 << n) {
        let d = density_of_mask(&adj, mask, h);
        if d > best {
            best = d;
        }
    }
    best
}

/// Exhaustive cocktail-party optimum: the best minimum h-degree over all
/// connected vertex sets containing `query`. `None` when no connected
/// superset exists.
pub fn cocktail_exhaustive(g: &Graph, query: &[VertexId], h: u32) -> Option<u32> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let adj = bit_adjacency(g);
    let qmask: u32 = query.iter().fold(0, |m, &q| m | (1 << q));
    let mut best: Option<u32> = None;
    for mask in 1u32..(1u32 << n) {
        if mask & qmask != qmask {
            continue;
        }
        let start = mask.trailing_zeros();
        if reach_within(&adj, mask, start, n as u32) != mask {
            continue; // not connected
        }
        let mut min_deg = u32::MAX;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            min_deg = min_deg.min(reach_within(&adj, mask, v, h).count_ones() - 1);
        }
        best = Some(best.map_or(min_deg, |b| b.max(min_deg)));
    }
    best
}
