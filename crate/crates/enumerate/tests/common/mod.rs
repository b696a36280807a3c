//! Slow reference enumerator: extends every graph on n-1 vertices by one
//! vertex in all possible ways and deduplicates with a backtracking
//! isomorphism test. Shares nothing with the generator under test.

#![allow(dead_code)]

use std::collections::HashMap;

use wiener_core::Graph;

type Bucket = (usize, Vec<usize>, Vec<(usize, Vec<usize>)>);

fn invariant(g: &Graph) -> Bucket {
    let n = g.order();
    let degs = g.degrees();
    let mut ds = degs.clone();
    ds.sort_unstable();
    let mut local: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = (0..n).filter(|&w| g.has_edge(v, w)).map(|w| degs[w]).collect();
            nd.sort_unstable();
            (degs[v], nd)
        })
        .collect();
    local.sort();
    (g.edge_count(), ds, local)
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let n = g.order();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map[v] = w;
                used[w] = true;
                if go(g, h, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    go(g, h, 0, &mut map, &mut used)
}

#[derive(Default)]
pub struct IsoSet {
    buckets: HashMap<Bucket, Vec<Graph>>,
    pub len: usize,
}

impl IsoSet {
    /// Inserts unless an isomorphic copy is present; returns whether new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let b = self.buckets.entry(invariant(&g)).or_default();
        if b.iter().any(|h| isomorphic(h, &g)) {
            return false;
        }
        b.push(g);
        self.len += 1;
        true
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.buckets.values().flatten()
    }
}

/// All graphs (connected or not) on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(1)];
    for k in 1..n {
        let mut next = IsoSet::default();
        for h in &level {
            for s in 0..(1u64 << k) {
                let mut g = h.clone();
                g.push_vertex(s);
                next.insert(g);
            }
        }
        level = next.graphs().cloned().collect();
    }
    if n == 0 {
        return Vec::new();
    }
    level
}

/// All graphs on `n <= 6` vertices straight from adjacency matrices.
pub fn all_graphs_from_matrices(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut set = IsoSet::default();
    for mask in 0u64..(1 << pairs.len()) {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        set.insert(g);
    }
    set.graphs().cloned().collect()
}
