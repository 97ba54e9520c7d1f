//! Support for the acceptance suite: dataset discovery, seeded graph
//! generation, and independent reference implementations.

#![allow(dead_code)]

use std::path::PathBuf;

use khcore::{Graph, VertexId};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Directory holding the benchmark edge lists; see scripts/fetch_datasets.sh.
pub fn data_dir() -> PathBuf {
    match std::env::var_os("KHCORE_DATA_DIR") {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

/// Loads a named dataset, or reports why the criterion is being skipped.
pub fn load_dataset(criterion: &str, name: &str) -> Option<Graph> {
    let path = data_dir().join(name);
    if !path.is_file() {
        println!(
            "[{criterion}] SKIP: dataset {} not present (run scripts/fetch_datasets.sh)",
            path.display()
        );
        return None;
    }
    Some(Graph::load_edge_list(&path).expect("dataset parses"))
}

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

/// Textbook k-core by repeated minimum-degree removal.
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

pub fn bit_adjacency(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 32);
    (0..n as VertexId)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

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

/// Exhaustive maximum h-club size by descending-size subset enumeration.
pub fn max_club_exhaustive(g: &Graph, h: u32) -> usize {
    let n = g.vertex_count();
    assert!(n <= 25);
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

/// Exhaustive distance-h densest subgraph value.
pub fn densest_exhaustive(g: &Graph, h: u32) -> f64 {
    let n = g.vertex_count();
    assert!(n <= 16);
    let adj = bit_adjacency(g);
    let mut best = 0.0f64;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones();
        let mut total = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            total += reach_within(&adj, mask, v, h).count_ones() - 1;
        }
        let d = total as f64 / size as f64;
        if d > best {
            best = d;
        }
    }
    best
}
