//! Bucketed vertex queue: a vector of FIFO lists indexed by (bounded)
//! degree, with O(1) move of a vertex between buckets.
//!
//! Implemented as intrusive doubly-linked lists so a vertex can be unlinked
//! from the middle of its bucket without disturbing the order of the rest.
//! A flat array would need a linear number of swaps per move, because one
//! deletion can change an h-degree by much more than 1.

use crate::graph::VertexId;

const NIL: u32 = u32::MAX;

pub struct BucketQueue {
    head: Vec<u32>,
    tail: Vec<u32>,
    next: Vec<u32>,
    prev: Vec<u32>,
    bucket_of: Vec<u32>,
    len: usize,
}

impl BucketQueue {
    /// Queue for vertices `0..n` with bucket indices `0..=max_bucket`.
    pub fn new(n: usize, max_bucket: usize) -> BucketQueue {
        BucketQueue {
            head: vec![NIL; max_bucket + 1],
            tail: vec![NIL; max_bucket + 1],
            next: vec![NIL; n],
            prev: vec![NIL; n],
            bucket_of: vec![NIL; n],
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.bucket_of[v as usize] != NIL
    }

    pub fn bucket_of(&self, v: VertexId) -> Option<u32> {
        match self.bucket_of[v as usize] {
            NIL => None,
            b => Some(b),
        }
    }

    /// Appends `v` to the back of bucket `b`. `v` must not be queued.
    pub fn push_back(&mut self, v: VertexId, b: u32) {
        debug_assert!(!self.contains(v), "vertex {v} already queued");
        let vi = v as usize;
        let bi = b as usize;
        self.bucket_of[vi] = b;
        self.next[vi] = NIL;
        self.prev[vi] = self.tail[bi];
        if self.tail[bi] == NIL {
            self.head[bi] = v;
        } else {
            self.next[self.tail[bi] as usize] = v;
        }
        self.tail[bi] = v;
        self.len += 1;
    }

    /// Unlinks `v` from whatever bucket holds it.
    pub fn remove(&mut self, v: VertexId) {
        let vi = v as usize;
        let b = self.bucket_of[vi];
        debug_assert!(b != NIL, "vertex {v} not queued");
        let (p, n) = (self.prev[vi], self.next[vi]);
        if p == NIL {
            self.head[b as usize] = n;
        } else {
            self.next[p as usize] = n;
        }
        if n == NIL {
            self.tail[b as usize] = p;
        } else {
            self.prev[n as usize] = p;
        }
        self.bucket_of[vi] = NIL;
        self.len -= 1;
    }

    /// Moves `v` to the back of bucket `b` (no-op unlink + relink).
    pub fn move_to(&mut self, v: VertexId, b: u32) {
        self.remove(v);
        self.push_back(v, b);
    }

    /// Pops the oldest vertex of bucket `b`, if any.
    pub fn pop_front(&mut self, b: u32) -> Option<VertexId> {
        let h = self.head[b as usize];
        if h == NIL {
            return None;
        }
        self.remove(h);
        Some(h)
    }
}
