//! Exact vertex coloring for small graphs.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const COLORING_LIMIT: usize = 20;

fn guard(g: &Graph) -> Result<()> {
    if g.order() > COLORING_LIMIT {
        return Err(Error::SizeGuard { op: "coloring", limit: COLORING_LIMIT, n: g.order() });
    }
    Ok(())
}

/// Vertex order for backtracking: repeatedly take the vertex with most
/// already-ordered neighbours (ties by degree).
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbors(v) & placed).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed |= 1 << v;
        order.push(v);
    }
    order
}

/// Exact chromatic number by backtracking with colour-symmetry breaking.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    guard(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if g.is_bipartite() {
        return Ok(2);
    }
    let order = search_order(g);
    Ok((3..n).find(|&k| colorable(g, &order, k)).unwrap_or(n))
}

fn colorable(g: &Graph, order: &[usize], k: usize) -> bool {
    let mut classes = vec![0u64; k];
    fn go(g: &Graph, order: &[usize], i: usize, used: usize, classes: &mut [u64]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let limit = (used + 1).min(classes.len());
        for c in 0..limit {
            if classes[c] & g.neighbors(v) == 0 {
                classes[c] |= 1 << v;
                if go(g, order, i + 1, used.max(c + 1), classes) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        false
    }
    go(g, order, 0, 0, &mut classes)
}

/// Visits every proper colouring `c: V -> {0..k-1}` (raw, no symmetry
/// reduction). Returns the number visited.
pub fn for_each_proper_coloring(
    g: &Graph,
    k: usize,
    mut visit: impl FnMut(&[usize]),
) -> Result<u64> {
    guard(g)?;
    let n = g.order();
    let mut colour = vec![usize::MAX; n];
    let mut count = 0;
    fn go(
        g: &Graph,
        v: usize,
        k: usize,
        colour: &mut Vec<usize>,
        count: &mut u64,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if v == g.order() {
            *count += 1;
            visit(colour);
            return;
        }
        'next: for c in 0..k {
            for w in bits(g.neighbors(v) & ((1u64 << v) - 1)) {
                if colour[w] == c {
                    continue 'next;
                }
            }
            colour[v] = c;
            go(g, v + 1, k, colour, count, visit);
        }
        colour[v] = usize::MAX;
    }
    go(g, 0, k, &mut colour, &mut count, &mut visit);
    Ok(count)
}
