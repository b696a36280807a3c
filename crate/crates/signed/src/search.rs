use wiener_core::{bits, full_mask, Error, Graph, Result, Shard};

use crate::distance::{cancels_within, is_canceling, signed_wiener};
use crate::signed::SignedGraph;

/// Edge budget for searches over all signatures.
pub const SIGNATURE_EDGE_LIMIT: usize = 22;

/// Path length used by the cheap first pass of canceling searches.
const SHORT_PATHS: usize = 4;

fn budget(g: &Graph, op: &'static str) -> Result<usize> {
    let m = g.edge_count();
    if m > SIGNATURE_EDGE_LIMIT {
        return Err(Error::EdgeBudget { op, limit: SIGNATURE_EDGE_LIMIT, m });
    }
    Ok(m)
}

/// Signatures with the first edge positive; σ and −σ give the same W_σ.
fn half_space(m: usize) -> u64 {
    if m == 0 {
        1
    } else {
        1u64 << (m - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMinimum {
    pub value: u64,
    /// Minimising signatures with the first edge positive.
    pub argmin: Vec<u64>,
    pub visited: u64,
}

impl SignedMinimum {
    pub fn merge(&mut self, other: &SignedMinimum) {
        if other.visited == 0 {
            return;
        }
        if self.visited == 0 || other.value < self.value {
            let visited = self.visited;
            *self = other.clone();
            self.visited += visited;
            return;
        }
        if other.value == self.value {
            self.argmin.extend_from_slice(&other.argmin);
            self.argmin.sort_unstable();
        }
        self.visited += other.visited;
    }
}

/// W_*(G): minimum of W_σ over all signatures (the shard's part of them).
pub fn min_signed_wiener(g: &Graph, shard: Shard) -> Result<SignedMinimum> {
    let m = budget(g, "minimum signed wiener")?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut s = SignedGraph::new(g, 0)?;
    let mut best = SignedMinimum { value: 0, argmin: vec![], visited: 0 };
    for x in (0..half_space(m)).filter(|&x| shard.owns(x)) {
        let sig = x << 1;
        s.set_signature(sig);
        let w = signed_wiener(&s)?;
        if best.visited == 0 || w < best.value {
            best.value = w;
            best.argmin.clear();
        }
        if w == best.value {
            best.argmin.push(sig);
        }
        best.visited += 1;
    }
    Ok(best)
}

/// Outcome of checking one signature for k-canceling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CancelVerdict {
    Holds,
    /// W_σ(G − S) ≠ 0 for this S.
    Fails(u64),
    /// G − S is disconnected, so W_σ(G − S) is undefined; no S failed.
    Undefined(u64),
}

/// Vertex sets of size < k, smallest first.
fn small_sets(n: usize, k: usize) -> Vec<u64> {
    let mut sets: Vec<u64> = vec![0];
    let mut layer = vec![0u64];
    for _ in 1..k {
        let mut next = vec![];
        for &s in &layer {
            let top = if s == 0 { 0 } else { 64 - s.leading_zeros() as usize };
            for v in top..n {
                next.push(s | 1 << v);
            }
        }
        sets.extend_from_slice(&next);
        layer = next;
    }
    sets
}

fn verdict(s: &SignedGraph, k: usize, short: bool) -> Result<CancelVerdict> {
    let n = s.order();
    let mut undefined = None;
    for set in small_sets(n, k) {
        if set.count_ones() as usize >= n {
            continue;
        }
        let keep = full_mask(n) & !set;
        if !s.base().induced(keep).is_connected() {
            undefined.get_or_insert(set);
            continue;
        }
        let rest = s.delete_vertices(set)?;
        let zero = if short { cancels_within(&rest, SHORT_PATHS) } else { is_canceling(&rest)? };
        if !zero {
            return Ok(CancelVerdict::Fails(set));
        }
    }
    Ok(undefined.map_or(CancelVerdict::Holds, CancelVerdict::Undefined))
}

/// Checks that W_σ(G − S) = 0 for every S with |S| < k.
pub fn is_k_canceling(s: &SignedGraph, k: usize) -> Result<CancelVerdict> {
    verdict(s, k, false)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancelSearch {
    /// A k-canceling signature, first edge positive.
    pub signature: Option<u64>,
    /// Some removal set disconnected the graph for a signature that
    /// otherwise passed; reported so it is never silently accepted.
    pub undefined: Option<(u64, u64)>,
    pub visited: u64,
}

/// Searches for a k-canceling signature. A first pass only looks for
/// zero-sum paths of at most four edges, which proves canceling when it
/// succeeds; the exact check runs only if that pass finds nothing.
pub fn exists_k_canceling(g: &Graph, k: usize, shard: Shard) -> Result<CancelSearch> {
    let m = budget(g, "k-canceling search")?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut s = SignedGraph::new(g, 0)?;
    let mut out = CancelSearch { signature: None, undefined: None, visited: 0 };
    for short in [true, false] {
        for x in (0..half_space(m)).filter(|&x| shard.owns(x)) {
            let sig = x << 1;
            s.set_signature(sig);
            if short {
                out.visited += 1;
            }
            match verdict(&s, k, short)? {
                CancelVerdict::Holds => {
                    out.signature = Some(sig);
                    return Ok(out);
                }
                CancelVerdict::Undefined(set) => {
                    out.undefined.get_or_insert((sig, set));
                }
                CancelVerdict::Fails(_) => {}
            }
        }
    }
    Ok(out)
}

/// Vertices of `s` in a set, for reporting.
pub fn set_members(set: u64) -> Vec<usize> {
    bits(set).collect()
}
