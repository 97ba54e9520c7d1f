//! Traversal-level invariants checked against an independent all-pairs
//! shortest-path implementation on seeded random graphs.

mod common;

use common::{floyd_warshall, gnp, INF};
use khcore::{h_bfs, h_degree, AliveMask, Graph, VertexId};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_mask(n: usize, keep: f64, rng: &mut ChaCha8Rng) -> (AliveMask, Vec<bool>) {
    let alive: Vec<bool> = (0..n).map(|_| rng.gen_bool(keep)).collect();
    let mask = AliveMask::from_subset(
        n,
        alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(v, _)| v as VertexId),
    );
    (mask, alive)
}

#[test]
fn h_bfs_matches_floyd_warshall_on_masked_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..40 {
        let n = 5 + (trial * 7) % 56;
        let g = gnp(n, [0.05, 0.1, 0.3][trial % 3], 1000 + trial as u64);
        let (mask, alive) = random_mask(n, 0.8, &mut rng);
        let dist = floyd_warshall(&g, &alive);
        for h in [1u32, 2, 3, n as u32] {
            for v in 0..n as VertexId {
                if !mask.is_alive(v) {
                    continue;
                }
                let nb = h_bfs(&g, &mask, v, h).unwrap();
                for &(u, d) in &nb.members {
                    assert_eq!(dist[v as usize][u as usize], d, "n={n} h={h} {v}->{u}");
                }
                let expected = (0..n)
                    .filter(|&u| u != v as usize && dist[v as usize][u] != INF && dist[v as usize][u] <= h)
                    .count();
                assert_eq!(nb.len(), expected);
                assert_eq!(h_degree(&g, &mask, v, h).unwrap(), expected);
            }
        }
    }
}

#[test]
fn h_bfs_is_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for trial in 0..20 {
        let n = 10 + trial * 2;
        let g = gnp(n, 0.15, 500 + trial as u64);
        let (mask, _) = random_mask(n, 0.7, &mut rng);
        for h in [1u32, 2, 3] {
            let hoods: Vec<_> = (0..n as VertexId)
                .map(|v| mask.is_alive(v).then(|| h_bfs(&g, &mask, v, h).unwrap()))
                .collect();
            for v in 0..n as VertexId {
                let Some(nv) = &hoods[v as usize] else { continue };
                for &(u, d) in &nv.members {
                    let back = hoods[u as usize].as_ref().unwrap();
                    assert_eq!(back.distance_to(v), Some(d), "asymmetric pair {v},{u}");
                }
            }
        }
    }
}

#[test]
fn shrinking_the_mask_never_increases_h_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for trial in 0..20 {
        let n = 12 + trial * 2;
        let g = gnp(n, 0.2, 900 + trial as u64);
        let mut mask = AliveMask::all(n);
        for h in [1u32, 2, 3] {
            let before: Vec<usize> = (0..n as VertexId)
                .map(|v| h_degree(&g, &mask, v, h).unwrap())
                .collect();
            let mut shrunk = mask.clone();
            let victim = rng.gen_range(0..n) as VertexId;
            shrunk.kill(victim);
            for v in 0..n as VertexId {
                if !shrunk.is_alive(v) {
                    continue;
                }
                let after = h_degree(&g, &shrunk, v, h).unwrap();
                assert!(after <= before[v as usize]);
            }
        }
        // also chain a few kills and recheck against the full-mask baseline
        for _ in 0..4 {
            let victim = rng.gen_range(0..n) as VertexId;
            mask.kill(victim);
        }
        for h in [1u32, 2] {
            for v in 0..n as VertexId {
                if !mask.is_alive(v) {
                    continue;
                }
                let masked = h_degree(&g, &mask, v, h).unwrap();
                let full = h_degree(&g, &AliveMask::all(n), v, h).unwrap();
                assert!(masked <= full);
            }
        }
    }
}

#[test]
fn h_degree_is_monotone_in_h() {
    for trial in 0..10 {
        let n = 15 + trial * 3;
        let g = gnp(n, 0.12, 300 + trial as u64);
        let mask = AliveMask::all(n);
        for v in 0..n as VertexId {
            let mut prev = 0;
            for h in 1..=6u32 {
                let d = h_degree(&g, &mask, v, h).unwrap();
                assert!(d >= prev, "h-degree dropped from {prev} to {d} at h={h}");
                prev = d;
            }
        }
    }
}

#[test]
fn loader_matches_generator_on_round_trip() {
    let g = gnp(30, 0.2, 77);
    let mut text = String::new();
    for v in 0..30u32 {
        for &w in g.neighbors(v) {
            if v < w {
                text.push_str(&format!("{v} {w}\n"));
            }
        }
    }
    let reparsed = Graph::read_edge_list(text.as_bytes()).unwrap();
    assert_eq!(reparsed.edge_count(), g.edge_count());
    // labels may map to different internal ids; compare via labels
    for v in 0..30u32 {
        let rv = reparsed.vertex_by_label(&v.to_string());
        if g.degree(v) > 0 {
            let rv = rv.unwrap();
            assert_eq!(reparsed.degree(rv), g.degree(v));
        }
    }
}
