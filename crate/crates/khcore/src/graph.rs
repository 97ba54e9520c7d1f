//! Compressed adjacency over dense internal ids, plus the alive-vertex mask
//! used to peel induced subgraphs without rebuilding them.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};

/// Internal vertex id, dense in `[0, n)`.
pub type VertexId = u32;

/// An immutable, simple, undirected graph in CSR form.
///
/// External labels (arbitrary whitespace-free strings) are remapped to dense
/// internal ids in first-seen order. Self-loops are dropped and duplicate
/// edges collapsed at construction time.
#[derive(Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl Graph {
    /// Loads an edge list from a file: one edge per line, two
    /// whitespace-separated labels, `#`/`%` comment lines and blank lines
    /// ignored.
    pub fn load_edge_list<P: AsRef<Path>>(path: P) -> Result<Graph> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::read_edge_list(BufReader::new(file))
    }

    /// Parses an edge list from any buffered reader. See [`Graph::load_edge_list`].
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, VertexId> = HashMap::new();
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();

        let intern = |tok: &str, labels: &mut Vec<String>, index: &mut HashMap<String, VertexId>| {
            if let Some(&id) = index.get(tok) {
                id
            } else {
                let id = labels.len() as VertexId;
                labels.push(tok.to_string());
                index.insert(tok.to_string(), id);
                id
            }
        };

        for (lineno, line) in reader.lines().enumerate() {
            let line = line.map_err(|source| Error::Io {
                path: "<edge list>".into(),
                source,
            })?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected two vertex labels, got {:?}", trimmed),
                    })
                }
            };
            let u = intern(a, &mut labels, &mut index);
            let v = intern(b, &mut labels, &mut index);
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }

        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(Self::build(labels, index, edges))
    }

    /// Builds a graph on vertices `0..n` (labelled by their decimal ids) from
    /// an edge slice. Self-loops and duplicates are tolerated and simplified.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as VertexId))
            .collect();
        let mut simple = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            assert!((u as usize) < n && (v as usize) < n, "edge ({u},{v}) out of range for n={n}");
            if u != v {
                simple.push((u.min(v), u.max(v)));
            }
        }
        Self::build(labels, index, simple)
    }

    fn build(
        labels: Vec<String>,
        index: HashMap<String, VertexId>,
        mut edges: Vec<(VertexId, VertexId)>,
    ) -> Graph {
        let n = labels.len();
        edges.sort_unstable();
        edges.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut neighbors = vec![0 as VertexId; edges.len() * 2];
        let mut cursor = offsets.clone();
        for &(u, v) in &edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        // adjacency rows come out sorted because edges were sorted by (u, v)
        // and the reverse direction is filled in increasing u as well
        for v in 0..n {
            debug_assert!(neighbors[offsets[v]..offsets[v + 1]].windows(2).all(|w| w[0] < w[1]));
        }
        Graph {
            offsets,
            neighbors,
            labels,
            index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of undirected edges after simplification.
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        0..self.vertex_count() as VertexId
    }
}

/// Boolean view over the vertex set defining the currently induced subgraph.
///
/// Single writer: traversals may share a mask immutably, mutation requires
/// exclusive access.
#[derive(Clone)]
pub struct AliveMask {
    alive: Vec<bool>,
    alive_count: usize,
}

impl AliveMask {
    /// All vertices alive.
    pub fn all(n: usize) -> AliveMask {
        AliveMask {
            alive: vec![true; n],
            alive_count: n,
        }
    }

    /// Only the listed vertices alive.
    pub fn from_subset(n: usize, subset: impl IntoIterator<Item = VertexId>) -> AliveMask {
        let mut mask = AliveMask {
            alive: vec![false; n],
            alive_count: 0,
        };
        for v in subset {
            if !mask.alive[v as usize] {
                mask.alive[v as usize] = true;
                mask.alive_count += 1;
            }
        }
        mask
    }

    #[inline]
    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive[v as usize]
    }

    pub fn kill(&mut self, v: VertexId) {
        if self.alive[v as usize] {
            self.alive[v as usize] = false;
            self.alive_count -= 1;
        }
    }

    pub fn revive(&mut self, v: VertexId) {
        if !self.alive[v as usize] {
            self.alive[v as usize] = true;
            self.alive_count += 1;
        }
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn iter_alive(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| i as VertexId)
    }
}
