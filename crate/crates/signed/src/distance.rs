use wiener_core::{Error, Result};

use crate::signed::SignedGraph;

/// Largest order for exhaustive simple-path search on non-trees.
pub const SIGNED_PATH_LIMIT: usize = 14;

const UNSEEN: u32 = u32::MAX;

fn guard(s: &SignedGraph) -> Result<()> {
    let g = s.base();
    if !g.is_tree() && g.order() > SIGNED_PATH_LIMIT {
        return Err(Error::SizeGuard { op: "signed distance", limit: SIGNED_PATH_LIMIT, n: g.order() });
    }
    Ok(())
}

/// Unique tree path sums from `src` by BFS.
fn tree_row(s: &SignedGraph, src: usize, out: &mut [u32]) {
    let n = s.order();
    let mut sum = vec![0i64; n];
    out.iter_mut().for_each(|x| *x = UNSEEN);
    out[src] = 0;
    let mut queue = vec![src];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for v in s.neighbors(u) {
            if out[v] == UNSEEN {
                sum[v] = sum[u] + if s.negative_row(u) >> v & 1 == 1 { -1 } else { 1 };
                out[v] = sum[v].unsigned_abs() as u32;
                queue.push(v);
            }
        }
    }
}

struct PathSearch<'a> {
    s: &'a SignedGraph,
    best: &'a mut [u32],
    /// Targets not yet at 0; the search ends early once this is empty.
    open: u64,
    max_len: usize,
}

impl PathSearch<'_> {
    fn go(&mut self, u: usize, visited: u64, sum: i64, len: usize) {
        if len == self.max_len {
            return;
        }
        let neg = self.s.negative_row(u);
        for v in self.s.neighbors(u) {
            if visited >> v & 1 == 1 {
                continue;
            }
            let t = sum + if neg >> v & 1 == 1 { -1 } else { 1 };
            let a = t.unsigned_abs() as u32;
            if a < self.best[v] {
                self.best[v] = a;
                if a == 0 {
                    self.open &= !(1 << v);
                }
            }
            if self.open == 0 {
                return;
            }
            self.go(v, visited | 1 << v, t, len + 1);
            if self.open == 0 {
                return;
            }
        }
    }
}

/// min |σ(P)| over simple paths from `src`, only following paths of at
/// most `max_len` edges. `targets` limits which vertices need resolving
/// before the search may stop early.
fn search_row(s: &SignedGraph, src: usize, targets: u64, max_len: usize, out: &mut [u32]) {
    out.iter_mut().for_each(|x| *x = UNSEEN);
    out[src] = 0;
    let mut p = PathSearch { s, best: out, open: targets & !(1 << src), max_len };
    if p.open != 0 {
        p.go(src, 1 << src, 0, 0);
    }
}

/// d_σ(u, v) = min over simple uv-paths P of |σ(P)|.
pub fn signed_distance(s: &SignedGraph, u: usize, v: usize) -> Result<u32> {
    let n = s.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    guard(s)?;
    let mut row = vec![0; n];
    if s.base().is_tree() {
        tree_row(s, u, &mut row);
    } else {
        search_row(s, u, 1 << v, n, &mut row);
    }
    match row[v] {
        UNSEEN => Err(Error::Disconnected),
        d => Ok(d),
    }
}

/// Full signed distance matrix of a connected signed graph.
pub fn signed_distances(s: &SignedGraph) -> Result<Vec<Vec<u32>>> {
    guard(s)?;
    if !s.base().is_connected() {
        return Err(Error::Disconnected);
    }
    let n = s.order();
    let tree = s.base().is_tree();
    let all = wiener_core::full_mask(n);
    let mut rows = vec![vec![0; n]; n];
    for (u, row) in rows.iter_mut().enumerate() {
        if tree {
            tree_row(s, u, row);
        } else {
            search_row(s, u, all, n, row);
        }
    }
    Ok(rows)
}

/// W_σ(G) = Σ over unordered pairs of d_σ.
pub fn signed_wiener(s: &SignedGraph) -> Result<u64> {
    guard(s)?;
    if !s.base().is_connected() {
        return Err(Error::Disconnected);
    }
    let n = s.order();
    let tree = s.base().is_tree();
    let mut row = vec![0; n];
    let mut total = 0u64;
    for u in 0..n {
        let later = wiener_core::full_mask(n) & !wiener_core::full_mask(u + 1);
        if tree {
            tree_row(s, u, &mut row);
        } else {
            search_row(s, u, later, n, &mut row);
        }
        total += row[u + 1..].iter().map(|&d| d as u64).sum::<u64>();
    }
    Ok(total)
}

/// Whether W_σ(G) = 0, looking only at paths of at most `max_len` edges.
/// A `true` answer is exact; `false` only means no short witness exists.
pub(crate) fn cancels_within(s: &SignedGraph, max_len: usize) -> bool {
    let n = s.order();
    let mut row = vec![0; n];
    for u in 0..n {
        let later = wiener_core::full_mask(n) & !wiener_core::full_mask(u + 1);
        search_row(s, u, later, max_len, &mut row);
        if row[u + 1..].iter().any(|&d| d != 0) {
            return false;
        }
    }
    true
}

/// Whether W_σ(G) = 0, exactly.
pub fn is_canceling(s: &SignedGraph) -> Result<bool> {
    guard(s)?;
    if !s.base().is_connected() {
        return Err(Error::Disconnected);
    }
    if s.base().is_tree() {
        return Ok(s.order() <= 1);
    }
    Ok(cancels_within(s, 4) || cancels_within(s, s.order()))
}
