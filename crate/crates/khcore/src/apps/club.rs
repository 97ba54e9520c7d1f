//! Maximum h-club: a vertex set whose induced subgraph has diameter at most
//! h. Clubs are not closed under subsets, so partial sets can never be
//! discarded for failing the diameter test; every pruning rule here is a
//! sound size or distance bound, and every accepted set is re-verified.

use crate::decompose::{decompose_hlb, DecomposeOptions};
use crate::error::{Error, Result};
use crate::graph::{AliveMask, Graph, VertexId};
use crate::traversal::{induced_diameter_leq, BfsScratch};

/// A vertex set together with the h it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClubCertificate {
    pub members: Vec<VertexId>,
    pub h: u32,
    /// True once the induced diameter has been confirmed `<= h`.
    pub verified: bool,
}

/// Membership test: delegates to the induced-diameter check.
pub fn is_h_club(g: &Graph, subset: &[VertexId], h: u32) -> Result<bool> {
    induced_diameter_leq(g, subset, h)
}

/// Exact maximum h-club by branch and bound over the whole graph.
///
/// `lower` is a size hint: branches that cannot exceed it are pruned, so if
/// the true maximum is at most `lower` the returned club may be smaller than
/// the maximum. Pass 0 when nothing is known. Worst-case exponential;
/// intended for graphs that have already been shrunk (e.g. to a core).
pub fn exact_h_club(g: &Graph, h: u32, lower: usize) -> Result<ClubCertificate> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let all: Vec<VertexId> = (0..g.vertex_count() as VertexId).collect();
    let mut best = Vec::new();
    search_subset(g, &all, h, lower, &mut best);
    if best.is_empty() && !all.is_empty() {
        best = vec![all[0]];
    }
    certify(g, best, h)
}

/// Maximum h-club via the core decomposition: solve inside the deepest core
/// first and walk down until a found club outgrows the current core index,
/// which certifies global maximality.
pub fn max_h_club(g: &Graph, h: u32) -> Result<ClubCertificate> {
    max_h_club_with(g, h, &DecomposeOptions::default())
}

pub fn max_h_club_with(g: &Graph, h: u32, opts: &DecomposeOptions) -> Result<ClubCertificate> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be >= 1".into()));
    }
    let decomp = decompose_hlb(g, h, opts)?;
    let mut k_cur = decomp.max_core();
    if k_cur == 0 {
        // no edges anywhere; any single vertex is a club
        return certify(g, vec![0], h);
    }

    let mut best: Vec<VertexId> = Vec::new();
    let mut prev_len = usize::MAX;
    while k_cur >= 1 {
        let core = decomp.core_set(k_cur);
        if core.len() == prev_len {
            // identical vertex set, identical answer
            k_cur -= 1;
            continue;
        }
        prev_len = core.len();
        search_subset(g, &core, h, 0, &mut best);
        if best.len() > k_cur as usize {
            break;
        }
        k_cur = if best.is_empty() {
            k_cur - 1
        } else {
            (k_cur - 1).min(best.len() as u32)
        };
    }
    certify(g, best, h)
}

fn certify(g: &Graph, mut members: Vec<VertexId>, h: u32) -> Result<ClubCertificate> {
    members.sort_unstable();
    let verified = !members.is_empty() && is_h_club(g, &members, h)?;
    Ok(ClubCertificate {
        members,
        h,
        verified,
    })
}

/// Grows `best` to the largest h-club inside `G[subset]` that beats
/// `max(lower, |best|)`, if one exists.
fn search_subset(g: &Graph, subset: &[VertexId], h: u32, lower: usize, best: &mut Vec<VertexId>) {
    let n = g.vertex_count();
    let mut alive = AliveMask::from_subset(n, subset.iter().copied());
    let mut scratch = BfsScratch::new(n);

    // anchors in descending h-degree within the subset
    let mut anchors: Vec<(u32, VertexId)> = subset
        .iter()
        .map(|&v| (scratch.degree(g, &alive, v, h) as u32, v))
        .collect();
    anchors.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    for &(_, anchor) in &anchors {
        let floor = best.len().max(lower);
        if alive.alive_count() <= floor {
            break;
        }
        // every club containing the anchor lies inside its h-neighborhood
        // of the remaining universe
        let mut nbhd = Vec::new();
        scratch.neighborhood_into(g, &alive, anchor, h, &mut nbhd);
        if nbhd.len() + 1 > floor {
            let mut universe: Vec<VertexId> = Vec::with_capacity(nbhd.len() + 1);
            universe.push(anchor);
            universe.extend(nbhd.iter().map(|&(u, _)| u));
            if induced_diameter_leq(g, &universe, h).unwrap_or(false) {
                *best = universe;
            } else {
                branch_on(g, h, anchor, &universe, lower, best, &mut scratch);
            }
        }
        // clubs without the anchor never route paths through it
        alive.kill(anchor);
    }
}

fn branch_on(
    g: &Graph,
    h: u32,
    anchor: VertexId,
    universe: &[VertexId],
    lower: usize,
    best: &mut Vec<VertexId>,
    scratch: &mut BfsScratch,
) {
    let n = g.vertex_count();
    // pairwise distance <= h within G[universe]: a sound compatibility
    // filter, since distances only grow when the set shrinks further
    let mut upos = vec![usize::MAX; n];
    for (i, &v) in universe.iter().enumerate() {
        upos[v as usize] = i;
    }
    let umask = AliveMask::from_subset(n, universe.iter().copied());
    let mut compat = vec![vec![false; universe.len()]; universe.len()];
    let mut buf = Vec::new();
    for (i, &v) in universe.iter().enumerate() {
        buf.clear();
        scratch.neighborhood_into(g, &umask, v, h, &mut buf);
        for &(u, _) in &buf {
            compat[i][upos[u as usize]] = true;
        }
    }

    // candidates in descending h-degree within the universe, anchor first
    let mut cands: Vec<VertexId> = universe[1..].to_vec();
    cands.sort_unstable_by(|&a, &b| {
        let da = compat[upos[a as usize]].iter().filter(|&&c| c).count();
        let db = compat[upos[b as usize]].iter().filter(|&&c| c).count();
        db.cmp(&da).then(a.cmp(&b))
    });

    let mut search = Search {
        g,
        h,
        lower,
        upos: &upos,
        compat: &compat,
        chosen: vec![anchor],
        best,
    };
    search.dfs(&cands);
}

struct Search<'a> {
    g: &'a Graph,
    h: u32,
    lower: usize,
    upos: &'a [usize],
    compat: &'a [Vec<bool>],
    chosen: Vec<VertexId>,
    best: &'a mut Vec<VertexId>,
}

impl Search<'_> {
    fn dfs(&mut self, cands: &[VertexId]) {
        let floor = self.best.len().max(self.lower);
        if self.chosen.len() + cands.len() <= floor {
            return;
        }
        let full: Vec<VertexId> = self.chosen.iter().chain(cands.iter()).copied().collect();
        if induced_diameter_leq(self.g, &full, self.h).unwrap_or(false) {
            *self.best = full;
            return;
        }
        let Some((&u, rest)) = cands.split_first() else {
            return;
        };
        // include u: drop candidates already too far from u in the universe
        self.chosen.push(u);
        let ui = self.upos[u as usize];
        let filtered: Vec<VertexId> = rest
            .iter()
            .copied()
            .filter(|&w| self.compat[ui][self.upos[w as usize]])
            .collect();
        self.dfs(&filtered);
        self.chosen.pop();
        // exclude u
        self.dfs(rest);
    }
}
