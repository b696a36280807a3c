//! Longest cycle by exhaustive simple-path search.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const CIRCUMFERENCE_LIMIT: usize = 12;

/// Length of a longest cycle, or `None` for a forest.
pub fn circumference(g: &Graph) -> Result<Option<usize>> {
    let n = g.order();
    if n > CIRCUMFERENCE_LIMIT {
        return Err(Error::SizeGuard { op: "circumference", limit: CIRCUMFERENCE_LIMIT, n });
    }
    Ok(circumference_unguarded(g))
}

pub(crate) fn circumference_unguarded(g: &Graph) -> Option<usize> {
    let n = g.order();
    if g.edge_count() + g.components().len() <= n {
        return None;
    }
    let mut best = 0;
    // Each cycle is found from its smallest vertex.
    for s in 0..n {
        let allowed = !((1u64 << s) - 1) & !(1u64 << s) & g.vertex_mask();
        if (allowed.count_ones() as usize) + 1 <= best {
            break;
        }
        extend(g, s, s, 1 << s, 1, allowed, &mut best);
        if best == n {
            break;
        }
    }
    (best >= 3).then_some(best)
}

fn extend(g: &Graph, s: usize, v: usize, used: u64, len: usize, allowed: u64, best: &mut usize) {
    if len >= 3 && g.has_edge(v, s) && len > *best {
        *best = len;
    }
    let reach = g.reach_within(v, (allowed & !used) | 1 << v);
    if len + reach.count_ones() as usize - 1 <= *best {
        return;
    }
    for w in bits(g.neighbors(v) & allowed & !used) {
        extend(g, s, w, used | 1 << w, len + 1, allowed, best);
    }
}
